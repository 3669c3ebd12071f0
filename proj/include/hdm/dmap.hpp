#ifndef HDM_DMAP_HPP
#define HDM_DMAP_HPP

#include "hdm/hasse.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hdm {

/// A set-wise function from the simple roots of `source` to those of
/// `target`. image[j] is the 0-based target node of source node j.
struct Labeling {
  SystemType source;
  SystemType target;
  std::vector<int> image;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;

  /// Throws Error if image has the wrong length or points outside the target.
  void validate() const;
  /// 0/1 matrix F with F(f(j), j) = 1, so that F * k is the image depth.
  IntMatrix matrix() const;
  bool onto() const;
  /// Fiber sizes indexed by target node.
  std::vector<int> fiber_sizes() const;
  /// f composed with a source-node permutation: (f o perm)(j) = f(perm[j]).
  Labeling precompose(const std::vector<int>& perm) const;
  /// 1-based rendering: "[1,2,2,1]".
  std::string str() const;

  static Labeling identity(SystemType t);
};

/// Image depth of a source depth vector: k'[t] = sum of k[j] over f(j) = t.
IntVector image_depth(const Labeling& f, const IntVector& depth);

/// A verified vertex map between two Hasse diagrams with labeling f: every
/// j-labeled source edge goes to an f(j)-labeled target edge, the top goes
/// to the top, levels are preserved.
struct DiagramMap {
  Labeling labeling;
  std::shared_ptr<const HasseDiagram> source;
  std::shared_ptr<const HasseDiagram> target;
  std::vector<std::size_t> vertex_map;
  bool surjective = false;
};

/// The unique diagram map with labeling f anchored top-to-top, if it exists.
///
/// The image of the source weight with depth k is forced to be the target
/// weight with depth image_depth(f, k), because every weight is reached from
/// the top by simple-root steps and each step must follow its label. The map
/// exists iff all those images are target vertices.
std::optional<DiagramMap> induce_map(const Labeling& f, std::shared_ptr<const HasseDiagram> src,
                                     std::shared_ptr<const HasseDiagram> tgt);

/// Re-checks every DiagramMap invariant from scratch (edge rule, anchor,
/// levels, surjectivity flag). Returns a description of the first violation.
std::optional<std::string> check_diagram_map(const DiagramMap& m);

/// Memo of Hasse diagrams keyed by (system, highest weight). Each entry is
/// built exactly once even under concurrent access.
class DiagramCache {
public:
  std::shared_ptr<const HasseDiagram> get(SystemType t, const IntVector& highest);
  std::shared_ptr<const HasseDiagram> fundamental(SystemType t, int node);
  std::shared_ptr<const RootSystem> system(SystemType t);
  /// Level count of the fundamental-weight diagram, without building it.
  int fundamental_level_count(SystemType t, int node);

private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const HasseDiagram> diagram;
  };
  std::mutex m_mutex;
  std::map<std::pair<SystemType, std::vector<int>>, std::shared_ptr<Slot>> m_diagrams;
  std::map<SystemType, std::shared_ptr<const RootSystem>> m_systems;
  std::map<std::pair<SystemType, int>, int> m_levels;
};

enum class Reason {
  RankTooLarge,      ///< target rank exceeds source rank
  ExtremalViolation, ///< an extremal source node is sent to a non-extremal node
  LevelMismatch,     ///< corresponding extremal diagrams have different level counts
  NotOnto,           ///< too few source nodes left to cover every target node
  MissingImage,      ///< an induced image depth is not a target vertex
  NotSurjective      ///< the induced map exists but misses target vertices
};

std::string reason_name(Reason r);

/// A pruned branch of the labeling search: every labeling extending `prefix`
/// (entries -1 are unassigned) is rejected for `reason`.
struct Rejection {
  std::vector<int> prefix;
  Reason reason = Reason::MissingImage;
  int node = -1; ///< extremal source node concerned, or -1
  std::string detail;
};

struct SearchResult {
  std::vector<Labeling> labelings;
  std::vector<Rejection> rejections;
  std::size_t branches_visited = 0;
};

/// All labelings f from src to tgt such that, for every extremal source node
/// a, the induced map from the diagram of the fundamental weight of a onto
/// the diagram of the fundamental weight of f(a) exists and is surjective.
/// With the extremal constraint, extremal nodes must go to extremal nodes.
///
/// Backtracking over source nodes in breadth-first Dynkin order. A branch is
/// cut as soon as an extremal image is inadmissible, level counts differ, f
/// can no longer be onto, or an image vertex whose depth support is fully
/// assigned is missing. Results are sorted lexicographically.
SearchResult find_surjective_labelings(SystemType src, SystemType tgt, bool extremal_constraint,
                                       DiagramCache& cache);

/// One labeling whose induced map between two fixed diagrams exists.
struct MapCandidate {
  Labeling labeling;
  bool surjective = false;
};

/// Every labeling between the node sets of two diagrams whose induced map
/// exists, sorted lexicographically.
std::vector<MapCandidate> find_maps(std::shared_ptr<const HasseDiagram> src, std::shared_ptr<const HasseDiagram> tgt);

/// Node partition into the orbits of the standard involution used to group
/// labelings into classes: the flip of A_n, the fork swap of D_n, the flip of
/// E6; the identity elsewhere.
std::vector<int> standard_involution(SystemType t);

/// Groups labelings into classes under precomposition with the standard
/// involution of the source system.
std::vector<std::vector<Labeling>> labeling_classes(const std::vector<Labeling>& labelings);

/// Labeling onto the quotient of a simply laced diagram by the orbits of a
/// diagram automorphism group: A(2n-1) -> C(n), D(n) -> B(n-1), D4 triality
/// -> G2, E6 -> F4. `orbits` lists 0-based source nodes.
///
/// Throws Error if the partition is not the orbit partition of a group of
/// diagram automorphisms, if an orbit contains adjacent nodes, or if the
/// quotient is not an admissible canonical type (e.g. A3 -> C2).
Labeling folding_labeling(SystemType src, const std::vector<std::vector<int>>& orbits);

} // namespace hdm

#endif // HDM_DMAP_HPP
