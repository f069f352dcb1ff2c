#pragma once

// Bounded complexes of finite-dimensional Q-vector spaces, chain maps,
// cohomology with explicit representatives, mapping cones and degree-wise
// pairings between complexes.

#include "wittcob/matrix.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wittcob {

/// degree -> matrix. Missing degrees are zero maps.
using DegreeMaps = std::map<int, QMatrix>;

class Complex {
 public:
  Complex() = default;
  /// d^i : F^i -> F^{i+1} has shape dim(i+1) x dim(i); throws on a shape
  /// mismatch. Zero spaces and zero differentials are dropped.
  Complex(std::map<int, std::size_t> dims, DegreeMaps differentials);

  /// Empty if d^{i+1} d^i = 0 for all i, else the first failing composite.
  std::string differential_defect() const;

  std::size_t dim(int i) const;
  QMatrix d(int i) const;
  const std::map<int, std::size_t>& dims() const { return dims_; }
  const DegreeMaps& differentials() const { return diffs_; }
  /// Degrees carrying a nonzero space, ascending.
  std::vector<int> support() const;
  bool is_zero() const { return support().empty(); }

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  std::map<int, std::size_t> dims_;
  DegreeMaps diffs_;
};

Complex degree_zero_complex(std::size_t dim);
Complex direct_sum(const Complex& a, const Complex& b);
/// Shape (rows, cols) of a family member in a given degree.
using ShapeFn = std::function<std::pair<std::size_t, std::size_t>(int)>;

/// Block-diagonal sum over the given degrees; missing entries are zero blocks.
DegreeMaps direct_sum_maps(const DegreeMaps& a, const ShapeFn& shape_a, const DegreeMaps& b, const ShapeFn& shape_b,
                           const std::vector<int>& degrees);

/// Entry of a DegreeMaps family, or the zero matrix of the given shape.
QMatrix map_at(const DegreeMaps& maps, int i, std::size_t rows, std::size_t cols);

/// H^i with explicit data: `reps` are cocycles whose classes form a basis,
/// `boundaries` a basis of B^i.
struct CohomologyData {
  int degree = 0;
  QMatrix cycles;
  QMatrix boundaries;
  QMatrix reps;

  std::size_t dim() const { return reps.cols(); }
  /// Coordinates (dim x k) of the classes of the given cocycles.
  QMatrix coordinates(const QMatrix& cocycles) const;
};

CohomologyData cohomology(const Complex& c, int i);

/// Degrees in which either complex is nonzero, ascending, padded by one on each side.
std::vector<int> degree_span(const Complex& a, const Complex& b);

/// Returns an empty string if f: a -> b is a chain map, else a description of
/// the first failing degree.
std::string chain_map_defect(const Complex& a, const Complex& b, const DegreeMaps& f);

/// Matrix of H^i(f): H^i(a) -> H^i(b).
QMatrix induced_map(const Complex& a, const Complex& b, const DegreeMaps& f, int i);

bool is_quasi_isomorphism(const Complex& a, const Complex& b, const DegreeMaps& f);

/// C(f)^n = a^{n+1} (+) b^n with d = [[-d_a, 0], [f, d_b]].
Complex mapping_cone(const Complex& a, const Complex& b, const DegreeMaps& f);

/// Cohomology model: H(c) with zero differential.
Complex cohomology_complex(const Complex& c);
/// H(f) as a map between cohomology models.
DegreeMaps cohomology_maps(const Complex& a, const Complex& b, const DegreeMaps& f);

/// Degrees i with a^i or b^{-i} nonzero, padded by one on each side.
std::vector<int> pairing_span(const Complex& a, const Complex& b);

/// Pairing blocks S_i : a^i x b^{-i} -> Q, S(u, v) = u^T S_i v.
/// Chain condition: (d_a^i)^T S_{i+1} + (-1)^i S_i d_b^{-i-1} = 0.
std::string pairing_chain_defect(const Complex& a, const Complex& b, const DegreeMaps& s);

/// Matrix of the induced pairing H^i(a) x H^{-i}(b) -> Q.
QMatrix induced_pairing(const Complex& a, const Complex& b, const DegreeMaps& s, int i);

/// Empty string if every induced pairing is square and invertible.
std::string pairing_perfectness_defect(const Complex& a, const Complex& b, const DegreeMaps& s);

}  // namespace wittcob
