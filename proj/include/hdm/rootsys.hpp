#ifndef HDM_ROOTSYS_HPP
#define HDM_ROOTSYS_HPP

#include <Eigen/Dense>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hdm {

/// Integer column vector over the simple roots (root coordinates) or the
/// fundamental weights (Dynkin labels), depending on context.
using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// Raised for every invalid argument passed to the library: inadmissible
/// system types, out-of-range nodes, non-dominant weights, mismatched systems.
class Error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Cartan type of an irreducible reduced root system.
///
/// Only the canonical list is admissible: A(n>=1), B(n>=2), C(n>=3),
/// D(n>=4), E(6,7,8), F4, G2. Low-rank coincidences (B2=C2, A3=D3, ...)
/// are represented by the first family in that list only.
struct SystemType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const SystemType&, const SystemType&) = default;

  bool admissible() const;
  /// "G2", "E8", ...
  std::string name() const;
  /// Inverse of name(); throws Error on malformed or inadmissible input.
  static SystemType parse(std::string_view token);
};

/// Every admissible type with rank <= max_rank, sorted by (family, rank).
std::vector<SystemType> admissible_types(int max_rank);

/// A root system with exact integer Cartan data.
///
/// Nodes use Bourbaki numbering shifted to 0-based indices (Bourbaki node i is
/// index i-1). The Cartan matrix is stored as cartan(i, j) = <alpha_j, alpha_i>,
/// so column j holds the Dynkin labels of alpha_j and subtracting alpha_j from a
/// weight subtracts column j from its label vector.
///
/// Positive roots are listed in simple-root coordinates sorted by
/// (height, lexicographic coordinates).
class RootSystem {
public:
  explicit RootSystem(SystemType t);

  const SystemType& type() const { return m_type; }
  int rank() const { return m_type.rank; }
  const IntMatrix& cartan() const { return m_cartan; }
  const std::vector<IntVector>& positive_roots() const { return m_positive; }
  const IntVector& highest_root() const { return m_positive.back(); }
  const std::vector<int>& neighbors(int node) const;
  bool adjacent(int i, int j) const;
  int degree(int node) const { return static_cast<int>(neighbors(node).size()); }

  /// Nodes of Dynkin degree exactly one; {0} for rank one.
  const std::vector<int>& extremal_nodes() const { return m_extremal; }
  bool is_extremal(int node) const;

  /// Throws Error unless 0 <= node < rank.
  void check_node(int node) const;

  bool operator==(const RootSystem& other) const { return m_type == other.m_type; }

private:
  SystemType m_type;
  IntMatrix m_cartan;
  std::vector<IntVector> m_positive;
  std::vector<std::vector<int>> m_adjacency;
  std::vector<int> m_extremal;
};

/// Cartan matrix for an admissible type in the convention documented on RootSystem.
IntMatrix cartan_matrix(SystemType t);

/// Sum of simple-root coordinates.
inline int height(const IntVector& root_coords) { return root_coords.sum(); }

/// Dynkin labels of a vector given in simple-root coordinates.
inline IntVector labels_of(const RootSystem& rs, const IntVector& root_coords) {
  return rs.cartan() * root_coords;
}

/// <chi, alpha_j> for chi given by its Dynkin labels. The pairing of a weight
/// with a simple coroot is exactly the j-th label.
int pairing(const RootSystem& rs, const IntVector& chi_labels, int j);

/// r_j(chi) = chi - <chi, alpha_j> alpha_j, in Dynkin labels.
IntVector simple_reflection(const RootSystem& rs, int j, const IntVector& chi_labels);

/// Dynkin-diagram automorphisms as node permutations (perm[i] = image of i),
/// identity first, sorted lexicographically.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

/// The number of positive roots listed in classification tables.
int classical_positive_root_count(SystemType t);

} // namespace hdm

#endif // HDM_ROOTSYS_HPP
