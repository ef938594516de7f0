#pragma once

// Recomputes the published example tables T1..T6 and compares each row
// with the values printed alongside the construction.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cycmds/report.hpp"

namespace cycmds {

enum class TableId { T1 = 1, T2, T3, T4, T5, T6 };

std::optional<TableId> parse_table_id(const std::string& s);
std::string to_string(TableId id);

/// Memoizes census results per spec, optionally persisted as JSON files in
/// a directory so repeated runs skip the characteristic-zero work.
class CensusCache {
 public:
  explicit CensusCache(std::optional<std::filesystem::path> dir = std::nullopt);

  const BadPrimeReport& get(const CodeSpec& spec, const BadPrimeOptions& opts = {});

 private:
  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<std::pair<int, std::vector<int>>, BadPrimeReport> reports_;
};

struct TableRow {
  std::string label;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct TableResult {
  TableId id = TableId::T1;
  std::string title;
  std::vector<TableRow> rows;

  bool all_match() const;
  json to_json() const;
  std::string to_human() const;
};

struct ReproduceOptions {
  BadPrimeOptions bad;
  AnalyzeOptions analyze;
  /// T3 confirms every listed prime by codeword enumeration, which needs
  /// 71^4 ~ 2.5e7 codewords for the k = 4 rows.
  std::uint64_t enumeration_budget = 100'000'000;
  /// Search bound for the smallest good prime.
  std::uint64_t prime_search_limit = 10'000;
};

TableResult reproduce_table(TableId id, CensusCache& cache, const ReproduceOptions& opts = {});

/// Smallest prime p <= limit with p outside P_bad and p not dividing n.
std::uint64_t smallest_good_prime(const BadPrimeReport& report, std::uint64_t limit = 10'000);

}  // namespace cycmds
