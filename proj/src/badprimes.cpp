#include "cycmds/badprimes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cycmds/error.hpp"
#include "cycmds/parallel.hpp"

namespace cycmds {

bool BadPrimeReport::is_bad(std::uint64_t p) const {
  const BigInt bp = static_cast<unsigned long>(p);
  return std::binary_search(census.bad_primes.begin(), census.bad_primes.end(), bp);
}

namespace {

template <class ForEachIndex, class ForEachMinor>
MinorCensus census_impl(const CycMatrix& g, const BadPrimeOptions& opts, ForEachIndex for_index,
                        ForEachMinor for_minor) {
  MinorCensus census;
  for_minor(
      g,
      [&](const std::vector<int>& cols, const CycInt& det) {
        MinorCertificate cert{{}, det, 0, std::nullopt};
        for (int c : cols) cert.subset.push_back(c + 1);
        census.certificates.push_back(std::move(cert));
      },
      opts.minors);

  auto& certs = census.certificates;
  for_index(certs.size(), [&](std::size_t i) { certs[i].abs_norm = abs(norm(certs[i].det)); });

  // Norms repeat heavily across shifted column sets; factor each value once.
  std::map<BigInt, FactoredInt> distinct;
  for (const auto& c : certs) {
    if (c.abs_norm != 0) distinct.try_emplace(c.abs_norm);
  }
  std::vector<std::map<BigInt, FactoredInt>::iterator> slots;
  for (auto it = distinct.begin(); it != distinct.end(); ++it) slots.push_back(it);
  for_index(slots.size(), [&](std::size_t i) { slots[i]->second = factorize(slots[i]->first, opts.factor); });

  std::set<BigInt> bad;
  for (auto& c : certs) {
    if (c.abs_norm == 0) {
      census.has_zero_minor = true;
      census.zero_minor_subsets.push_back(c.subset);
      continue;
    }
    c.factors = distinct.at(c.abs_norm);
    for (const auto& pp : c.factors->factors) bad.insert(pp.prime);
  }
  census.bad_primes.assign(bad.begin(), bad.end());
  return census;
}

}  // namespace

MinorCensus certify_minors(const CycMatrix& g, const BadPrimeOptions& opts) {
  if (opts.parallel) {
    return census_impl(
        g, opts, [](std::size_t n, auto&& body) { parallel_for_index(n, body); },
        [](const CycMatrix& m, const MinorVisitor& v, const MinorOptions& o) { for_each_minor(m, v, o); });
  }
  return census_impl(
      g, opts, [](std::size_t n, auto&& body) { serial_for_index(n, body); },
      [](const CycMatrix& m, const MinorVisitor& v, const MinorOptions& o) { for_each_minor_serial(m, v, o); });
}

BadPrimeReport compute_bad_primes(const CodeSpec& spec, const BadPrimeOptions& opts) {
  return BadPrimeReport{spec, certify_minors(build_generator_matrix(spec), opts)};
}

std::vector<std::uint64_t> good_primes(const BadPrimeReport& report, std::uint64_t limit, bool split_only) {
  if (report.has_zero_minor()) {
    throw Error(ErrorCode::ZeroMinorPresent,
                report.spec.to_string() + " has a vanishing minor; no reduction is MDS");
  }
  const auto n = static_cast<std::uint64_t>(report.spec.n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (n % p == 0 || report.is_bad(p)) continue;
    if (split_only && (p - 1) % n != 0) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace cycmds
