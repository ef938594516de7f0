#include "cycmds/report.hpp"

#include <sstream>

#include "cycmds/error.hpp"

namespace cycmds {

namespace {

json big_array(std::span<const BigInt> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<BigInt> big_vector(const json& a) {
  std::vector<BigInt> v;
  for (const auto& x : a) v.emplace_back(x.get<std::string>());
  return v;
}

json u64_array(const std::vector<std::uint64_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

std::vector<std::uint64_t> u64_vector(const json& a) {
  std::vector<std::uint64_t> v;
  for (const auto& x : a) v.push_back(std::stoull(x.get<std::string>()));
  return v;
}

Classification classification_from(const std::string& s) {
  if (s == "RS") return Classification::RS;
  if (s == "NonRS") return Classification::NonRS;
  if (s == "Indeterminate") return Classification::Indeterminate;
  throw Error(ErrorCode::PreconditionViolated, "unknown classification " + s);
}

ClassificationSide side_from(const std::string& s) {
  if (s == "code") return ClassificationSide::Code;
  if (s == "dual") return ClassificationSide::Dual;
  if (s == "none") return ClassificationSide::None;
  throw Error(ErrorCode::PreconditionViolated, "unknown classification side " + s);
}

}  // namespace

std::string join_bigints(const std::vector<BigInt>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "}";
}

json to_json(const CodeSpec& spec) { return json{{"n", spec.n}, {"J", spec.J}, {"k", spec.k()}}; }

CodeSpec code_spec_from_json(const json& j) {
  return CodeSpec::make(j.at("n").get<int>(), j.at("J").get<std::vector<int>>());
}

json to_json(const FactoredInt& f) {
  json factors = json::array();
  for (const auto& pp : f.factors) factors.push_back({{"prime", pp.prime.get_str()}, {"exponent", pp.exponent}});
  return json{{"value", f.value.get_str()}, {"factors", factors}};
}

FactoredInt factored_int_from_json(const json& j) {
  FactoredInt f{BigInt(j.at("value").get<std::string>()), {}};
  for (const auto& pp : j.at("factors")) {
    f.factors.push_back({BigInt(pp.at("prime").get<std::string>()), pp.at("exponent").get<unsigned>()});
  }
  return f;
}

json to_json(const MinorCertificate& c) {
  json j{{"subset", c.subset}, {"det", big_array(c.det.coeffs())}, {"abs_norm", c.abs_norm.get_str()}};
  j["factors"] = c.factors ? to_json(*c.factors) : json(nullptr);
  return j;
}

MinorCertificate minor_certificate_from_json(const json& j, int n) {
  const auto det = big_vector(j.at("det"));
  MinorCertificate c{j.at("subset").get<std::vector<int>>(), CycInt(n, IntPoly(det)),
                     BigInt(j.at("abs_norm").get<std::string>()), std::nullopt};
  if (!j.at("factors").is_null()) c.factors = factored_int_from_json(j.at("factors"));
  return c;
}

json to_json(const BadPrimeReport& r, bool full, std::size_t elide_above) {
  const auto& c = r.census;
  json j;
  j["spec"] = to_json(r.spec);
  j["verdicts"] = {{"has_zero_minor", c.has_zero_minor},
                   {"zero_minor_subsets", c.zero_minor_subsets},
                   {"bad_primes", big_array(c.bad_primes)},
                   {"minor_count", c.certificates.size()}};
  if (full || c.certificates.size() <= elide_above) {
    json certs = json::array();
    for (const auto& cert : c.certificates) certs.push_back(to_json(cert));
    j["certificates"] = certs;
  } else {
    j["certificates"] = nullptr;
    j["certificates_elided"] = c.certificates.size();
  }
  return j;
}

BadPrimeReport bad_prime_report_from_json(const json& j) {
  BadPrimeReport r;
  r.spec = code_spec_from_json(j.at("spec"));
  const auto& v = j.at("verdicts");
  r.census.has_zero_minor = v.at("has_zero_minor").get<bool>();
  r.census.zero_minor_subsets = v.at("zero_minor_subsets").get<std::vector<std::vector<int>>>();
  r.census.bad_primes = big_vector(v.at("bad_primes"));
  if (j.at("certificates").is_null()) {
    throw Error(ErrorCode::PreconditionViolated, "report was serialized without certificates");
  }
  for (const auto& c : j.at("certificates")) {
    r.census.certificates.push_back(minor_certificate_from_json(c, r.spec.n));
  }
  return r;
}

json to_json(const FieldSummary& f) {
  return json{{"p", std::to_string(f.p)}, {"f", f.f},
              {"q", std::to_string(f.q)}, {"n", f.n},
              {"modulus", u64_array(f.modulus)}, {"zeta", u64_array(f.zeta)},
              {"root_exponent", f.root_exponent}};
}

FieldSummary field_summary_from_json(const json& j) {
  return FieldSummary{std::stoull(j.at("p").get<std::string>()),
                      j.at("f").get<unsigned>(),
                      std::stoull(j.at("q").get<std::string>()),
                      j.at("n").get<int>(),
                      u64_vector(j.at("modulus")),
                      u64_vector(j.at("zeta")),
                      j.at("root_exponent").get<int>()};
}

json to_json(const CodeReport& r) {
  json verdicts{{"is_mds", r.is_mds},
                {"is_cyclic", r.is_cyclic},
                {"min_distance", r.min_distance ? json(*r.min_distance) : json(nullptr)},
                {"min_distance_method", r.min_distance_method},
                {"schur_dim", r.schur_dim},
                {"classification", to_string(r.classification)},
                {"classification_side", to_string(r.classification_side)},
                {"tested_schur_dim", r.tested_schur_dim},
                {"ap_flag", r.ap_flag},
                {"sumset_mod_size", r.sumset_mod_size}};
  return json{{"spec", to_json(r.spec)},
              {"field", to_json(r.field)},
              {"verdicts", verdicts},
              {"provenance", {{"bad_primes", big_array(r.bad_primes)}, {"certificate_count", r.certificate_count}}},
              {"notices", r.notices}};
}

CodeReport code_report_from_json(const json& j) {
  CodeReport r;
  r.spec = code_spec_from_json(j.at("spec"));
  r.field = field_summary_from_json(j.at("field"));
  const auto& v = j.at("verdicts");
  r.is_mds = v.at("is_mds").get<bool>();
  r.is_cyclic = v.at("is_cyclic").get<bool>();
  if (!v.at("min_distance").is_null()) r.min_distance = v.at("min_distance").get<int>();
  r.min_distance_method = v.at("min_distance_method").get<std::string>();
  r.schur_dim = v.at("schur_dim").get<std::size_t>();
  r.classification = classification_from(v.at("classification").get<std::string>());
  r.classification_side = side_from(v.at("classification_side").get<std::string>());
  r.tested_schur_dim = v.at("tested_schur_dim").get<std::size_t>();
  r.ap_flag = v.at("ap_flag").get<bool>();
  r.sumset_mod_size = v.at("sumset_mod_size").get<std::size_t>();
  r.bad_primes = big_vector(j.at("provenance").at("bad_primes"));
  r.certificate_count = j.at("provenance").at("certificate_count").get<std::uint64_t>();
  r.notices = j.at("notices").get<std::vector<std::string>>();
  return r;
}

std::string to_human(const BadPrimeReport& r, bool full) {
  std::ostringstream os;
  const auto& c = r.census;
  os << "spec            " << r.spec.to_string() << "\n";
  os << "minors          " << c.certificates.size() << "\n";
  os << "zero minors     " << c.zero_minor_subsets.size();
  if (!c.zero_minor_subsets.empty()) {
    os << "  first {";
    const auto& s = c.zero_minor_subsets.front();
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
  }
  os << "\nP_bad           " << join_bigints(c.bad_primes) << "\n";
  if (full) {
    for (const auto& cert : c.certificates) {
      os << "  {";
      for (std::size_t i = 0; i < cert.subset.size(); ++i) os << (i ? "," : "") << cert.subset[i];
      os << "} |N| = " << cert.abs_norm.get_str();
      if (cert.factors) {
        os << " =";
        for (const auto& pp : cert.factors->factors) {
          os << " " << pp.prime.get_str();
          if (pp.exponent > 1) os << "^" << pp.exponent;
        }
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string to_human(const CodeReport& r) {
  std::ostringstream os;
  const int n = r.spec.n, k = r.spec.k();
  os << "spec            " << r.spec.to_string() << "\n";
  os << "field           F_" << r.field.q << " (p=" << r.field.p << ", f=" << r.field.f << ", modulus [";
  for (std::size_t i = 0; i < r.field.modulus.size(); ++i) os << (i ? "," : "") << r.field.modulus[i];
  os << "], zeta' [";
  for (std::size_t i = 0; i < r.field.zeta.size(); ++i) os << (i ? "," : "") << r.field.zeta[i];
  os << "])\n";
  os << "code            [" << n << ", " << k << ", "
     << (r.min_distance ? std::to_string(*r.min_distance) : std::string("?")) << "]";
  if (!r.min_distance_method.empty()) os << " (distance by " << r.min_distance_method << ")";
  os << "\nMDS             " << (r.is_mds ? "yes" : "no") << "\n";
  os << "cyclic          " << (r.is_cyclic ? "yes" : "no") << "\n";
  os << "dim C^2         " << r.schur_dim << "  (|J+J mod n| = " << r.sumset_mod_size << ")\n";
  os << "classification  " << to_string(r.classification) << " (tested on " << to_string(r.classification_side);
  if (r.classification_side != ClassificationSide::None) os << ", Schur dim " << r.tested_schur_dim;
  os << ")\n";
  os << "J is an AP      " << (r.ap_flag ? "yes" : "no") << "\n";
  os << "P_bad           " << join_bigints(r.bad_primes) << "\n";
  for (const auto& note : r.notices) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace cycmds
