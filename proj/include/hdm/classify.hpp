#ifndef HDM_CLASSIFY_HPP
#define HDM_CLASSIFY_HPP

#include "hdm/dmap.hpp"

#include <string>
#include <vector>

namespace hdm {

inline constexpr int kMinClassifyRank = 2;
inline constexpr int kMaxClassifyRank = 8;

/// Verified surjective map for one labeling and one extremal source node.
struct Witness {
  Labeling labeling;
  int extremal_node = 0;
  DiagramMap map;
};

enum class Status { Found, Empty };

/// Outcome of the labeling search for one ordered pair of systems.
struct ClassificationEntry {
  SystemType source;
  SystemType target;
  bool identity_pair = false;
  Status status = Status::Empty;
  std::vector<Labeling> labelings;
  /// Labelings grouped under precomposition with the standard involution.
  std::vector<std::vector<Labeling>> classes;
  std::vector<Witness> witnesses;
  /// Pruned branches; together they cover every rejected labeling.
  std::vector<Rejection> certificate;
  std::size_t branches_visited = 0;
};

struct ClassifyOptions {
  bool extremal_constraint = true;
  /// Worker threads for classify_all; 0 means hardware concurrency.
  unsigned threads = 0;
};

ClassificationEntry classify_pair(SystemType src, SystemType tgt, DiagramCache& cache,
                                  const ClassifyOptions& opts = {});

/// Every ordered admissible pair with rank(target) <= rank(source) <= max_rank,
/// identity pairs included and flagged. Sorted by (source, target).
/// Throws Error unless 2 <= max_rank <= 8.
std::vector<ClassificationEntry> classify_all(int max_rank, const ClassifyOptions& opts = {});
std::vector<ClassificationEntry> classify_all(int max_rank, DiagramCache& cache, const ClassifyOptions& opts = {});

/// One expected (source, target) instance of a table row.
struct ExpectedPair {
  SystemType source;
  SystemType target;
  /// Fiber sizes (indexed by target node) of every expected labeling, sorted.
  std::vector<std::vector<int>> fibers;
  /// Number of labeling classes.
  int classes = 1;
  std::string row;

  friend bool operator==(const ExpectedPair& a, const ExpectedPair& b) {
    return a.source == b.source && a.target == b.target && a.fibers == b.fibers && a.classes == b.classes;
  }
};

/// A row of the table of non-identity surjective labelings.
struct ExpectedRow {
  std::string source_pattern;
  std::string target_pattern;
  std::string fibers;
  std::vector<ExpectedPair> instances;
};

using ExpectedTable = std::vector<ExpectedRow>;

/// The built-in table, instantiated for all sources of rank <= 8.
///
/// The A(2n-1) row targets C(n), the quotient by the flip. Low-rank instances
/// use the canonical family list: A(2n) -> B(1) does not exist, A3 -> C2 is
/// the pair A3 -> B2, and the D3 -> B2 case of the D row coincides with it.
const ExpectedTable& expected_table();

/// Expected pairs with source rank <= max_rank.
std::vector<ExpectedPair> expected_pairs(const ExpectedTable& table, int max_rank);

/// The comparison key of a found entry.
ExpectedPair observed_pair(const ClassificationEntry& e);

struct VerificationReport {
  std::vector<ExpectedPair> missing;    ///< expected but not found
  std::vector<ExpectedPair> unexpected; ///< found but not expected
  std::vector<ExpectedPair> matched;
  /// Identity pairs whose search did not return the identity labeling.
  std::vector<std::string> identity_failures;

  bool ok() const { return missing.empty() && unexpected.empty() && identity_failures.empty(); }
};

/// Three-way diff of the found non-identity entries against the expected
/// pairs (sources of rank <= max_rank), plus the identity sanity check.
VerificationReport verify_against_expected(const std::vector<ClassificationEntry>& entries,
                                           const std::vector<ExpectedPair>& expected);

std::string format_report(const VerificationReport& r);

} // namespace hdm

#endif // HDM_CLASSIFY_HPP
