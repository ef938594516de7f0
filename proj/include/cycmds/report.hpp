#pragma once

// Canonical JSON and human-readable forms of certificates and reports.
// Big integers are decimal strings; field elements and polynomials are
// coefficient arrays, low degree first.

#include <string>

#include <json.hpp>

#include "cycmds/codecheck.hpp"

namespace cycmds {

using json = nlohmann::json;

json to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const json& j);

json to_json(const FactoredInt& f);
FactoredInt factored_int_from_json(const json& j);

json to_json(const MinorCertificate& c);
MinorCertificate minor_certificate_from_json(const json& j, int n);

/// Certificates beyond `elide_above` are replaced by a count unless `full`.
json to_json(const BadPrimeReport& r, bool full = true, std::size_t elide_above = 200);
/// Requires a report serialized with full certificates.
BadPrimeReport bad_prime_report_from_json(const json& j);

json to_json(const FieldSummary& f);
FieldSummary field_summary_from_json(const json& j);

json to_json(const CodeReport& r);
CodeReport code_report_from_json(const json& j);

std::string to_human(const BadPrimeReport& r, bool full = false);
std::string to_human(const CodeReport& r);

std::string join_bigints(const std::vector<BigInt>& v);

}  // namespace cycmds
