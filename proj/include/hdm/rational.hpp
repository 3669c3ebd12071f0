#ifndef HDM_RATIONAL_HPP
#define HDM_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include <cstdint>

namespace hdm {

using Rational = boost::rational<std::int64_t>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact solve of a x = b by Gauss-Jordan elimination over a field-like
/// scalar. The matrix must be square and invertible; the caller guarantees it
/// (Cartan matrices always are).
template <typename Scalar>
Vector<Scalar> solve_exact(Matrix<Scalar> a, Vector<Scalar> b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix in solve_exact");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    a.row(col) *= inv;
    b(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(col);
      b(r) -= factor * b(col);
    }
  }
  return b;
}

} // namespace hdm

namespace Eigen {
template <>
struct NumTraits<hdm::Rational> : GenericNumTraits<hdm::Rational> {
  using Real = hdm::Rational;
  using NonInteger = hdm::Rational;
  using Nested = hdm::Rational;
  using Literal = hdm::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
} // namespace Eigen

#endif // HDM_RATIONAL_HPP
