#include "wittcob/complex.hpp"

#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

std::string degree_tag(int i) { return "degree " + std::to_string(i); }

}  // namespace

Complex::Complex(std::map<int, std::size_t> dims, DegreeMaps differentials)
    : dims_(std::move(dims)), diffs_(std::move(differentials)) {
  for (auto it = dims_.begin(); it != dims_.end();) it = it->second == 0 ? dims_.erase(it) : std::next(it);
  for (auto it = diffs_.begin(); it != diffs_.end();) {
    const int i = it->first;
    const QMatrix& m = it->second;
    if (m.rows() != dim(i + 1) || m.cols() != dim(i))
      throw std::invalid_argument("differential d^" + std::to_string(i) + " has shape " + m.shape() + ", expected " +
                                  std::to_string(dim(i + 1)) + "x" + std::to_string(dim(i)));
    it = m.is_zero_matrix() ? diffs_.erase(it) : std::next(it);
  }
}

std::string Complex::differential_defect() const {
  for (const auto& [i, m] : diffs_) {
    const QMatrix dd = d(i + 1) * m;
    if (!dd.is_zero_matrix())
      return "d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " = " + to_string(dd) + " != 0";
  }
  return {};
}

std::size_t Complex::dim(int i) const {
  auto it = dims_.find(i);
  return it == dims_.end() ? 0 : it->second;
}

QMatrix Complex::d(int i) const { return map_at(diffs_, i, dim(i + 1), dim(i)); }

std::vector<int> Complex::support() const {
  std::vector<int> out;
  for (const auto& [i, n] : dims_)
    if (n) out.push_back(i);
  return out;
}

bool operator==(const Complex& a, const Complex& b) { return a.dims_ == b.dims_ && a.diffs_ == b.diffs_; }

Complex degree_zero_complex(std::size_t dim) { return Complex({{0, dim}}, {}); }

QMatrix map_at(const DegreeMaps& maps, int i, std::size_t rows, std::size_t cols) {
  auto it = maps.find(i);
  if (it == maps.end()) return QMatrix(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols)
    throw std::invalid_argument("map in " + degree_tag(i) + " has shape " + it->second.shape() + ", expected " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  return it->second;
}

Complex direct_sum(const Complex& a, const Complex& b) {
  std::map<int, std::size_t> dims = a.dims();
  for (const auto& [i, n] : b.dims()) dims[i] += n;
  DegreeMaps diffs;
  std::set<int> degrees;
  for (const auto& [i, n] : dims) {
    degrees.insert(i);
    degrees.insert(i - 1);
  }
  for (int i : degrees) diffs[i] = direct_sum(a.d(i), b.d(i));
  return Complex(std::move(dims), std::move(diffs));
}

DegreeMaps direct_sum_maps(const DegreeMaps& a, const ShapeFn& shape_a, const DegreeMaps& b, const ShapeFn& shape_b,
                           const std::vector<int>& degrees) {
  DegreeMaps out;
  for (int i : degrees) {
    const auto [ra, ca] = shape_a(i);
    const auto [rb, cb] = shape_b(i);
    QMatrix m = direct_sum(map_at(a, i, ra, ca), map_at(b, i, rb, cb));
    if (!m.is_zero_matrix()) out[i] = std::move(m);
  }
  return out;
}

QMatrix CohomologyData::coordinates(const QMatrix& cocycles) const {
  const QMatrix basis = hstack(reps, boundaries);
  if (basis.cols() == 0) {
    if (!cocycles.is_zero_matrix()) throw std::invalid_argument("vector is not a cocycle");
    return QMatrix(0, cocycles.cols());
  }
  auto x = solve(basis, cocycles);
  if (!x) throw std::invalid_argument("vector is not a cocycle in " + degree_tag(degree));
  return x->rows_range(0, reps.cols());
}

CohomologyData cohomology(const Complex& c, int i) {
  CohomologyData h;
  h.degree = i;
  const std::size_t n = c.dim(i);
  h.cycles = kernel(c.d(i));
  h.boundaries = image_basis(c.d(i - 1));
  if (h.boundaries.rows() != n) h.boundaries = QMatrix(n, 0);
  h.reps = complement_basis(h.boundaries, h.cycles);
  if (h.reps.rows() != n) h.reps = QMatrix(n, 0);
  return h;
}

std::vector<int> degree_span(const Complex& a, const Complex& b) {
  std::set<int> degrees;
  for (int i : a.support()) degrees.insert({i - 1, i, i + 1});
  for (int i : b.support()) degrees.insert({i - 1, i, i + 1});
  return {degrees.begin(), degrees.end()};
}

std::string chain_map_defect(const Complex& a, const Complex& b, const DegreeMaps& f) {
  for (int i : degree_span(a, b)) {
    const QMatrix fi = map_at(f, i, b.dim(i), a.dim(i));
    const QMatrix fi1 = map_at(f, i + 1, b.dim(i + 1), a.dim(i + 1));
    if (!(b.d(i) * fi == fi1 * a.d(i)))
      return "d f != f d in " + degree_tag(i) + ": d_b f^i = " + to_string(b.d(i) * fi) +
             ", f^{i+1} d_a = " + to_string(fi1 * a.d(i));
  }
  return {};
}

QMatrix induced_map(const Complex& a, const Complex& b, const DegreeMaps& f, int i) {
  const CohomologyData ha = cohomology(a, i);
  const CohomologyData hb = cohomology(b, i);
  const QMatrix fi = map_at(f, i, b.dim(i), a.dim(i));
  if (ha.dim() == 0) return QMatrix(hb.dim(), 0);
  return hb.coordinates(fi * ha.reps);
}

bool is_quasi_isomorphism(const Complex& a, const Complex& b, const DegreeMaps& f) {
  for (int i : degree_span(a, b)) {
    const QMatrix m = induced_map(a, b, f, i);
    if (!m.is_square()) return false;
    if (m.rows() && rank(m) != m.rows()) return false;
  }
  return true;
}

Complex mapping_cone(const Complex& a, const Complex& b, const DegreeMaps& f) {
  std::map<int, std::size_t> dims;
  DegreeMaps diffs;
  const auto span = degree_span(a, b);
  if (span.empty()) return {};
  for (int n = span.front() - 1; n <= span.back(); ++n) dims[n] = a.dim(n + 1) + b.dim(n);
  for (int n = span.front() - 1; n <= span.back(); ++n) {
    QMatrix d(a.dim(n + 2) + b.dim(n + 1), a.dim(n + 1) + b.dim(n));
    d.set_block(0, 0, -a.d(n + 1));
    d.set_block(a.dim(n + 2), 0, map_at(f, n + 1, b.dim(n + 1), a.dim(n + 1)));
    d.set_block(a.dim(n + 2), a.dim(n + 1), b.d(n));
    diffs[n] = d;
  }
  return Complex(std::move(dims), std::move(diffs));
}

Complex cohomology_complex(const Complex& c) {
  std::map<int, std::size_t> dims;
  for (int i : c.support()) dims[i] = cohomology(c, i).dim();
  return Complex(std::move(dims), {});
}

DegreeMaps cohomology_maps(const Complex& a, const Complex& b, const DegreeMaps& f) {
  DegreeMaps out;
  for (int i : degree_span(a, b)) {
    const QMatrix m = induced_map(a, b, f, i);
    if (!m.empty()) out[i] = m;
  }
  return out;
}

std::vector<int> pairing_span(const Complex& a, const Complex& b) {
  std::set<int> degrees;
  for (int i : a.support()) degrees.insert({i - 1, i, i + 1});
  for (int i : b.support()) degrees.insert({-i - 1, -i, -i + 1});
  return {degrees.begin(), degrees.end()};
}

std::string pairing_chain_defect(const Complex& a, const Complex& b, const DegreeMaps& s) {
  for (int i : pairing_span(a, b)) {
    const QMatrix si = map_at(s, i, a.dim(i), b.dim(-i));
    const QMatrix si1 = map_at(s, i + 1, a.dim(i + 1), b.dim(-i - 1));
    const QMatrix lhs = a.d(i).transpose() * si1;
    const QMatrix rhs = si * b.d(-i - 1);
    const QMatrix total = (i % 2 == 0) ? lhs + rhs : lhs - rhs;
    if (!total.is_zero_matrix())
      return "pairing is not a chain map in " + degree_tag(i) + ": S(du, v) + (-1)^i S(u, dv) = " +
             to_string(total);
  }
  return {};
}

QMatrix induced_pairing(const Complex& a, const Complex& b, const DegreeMaps& s, int i) {
  const CohomologyData ha = cohomology(a, i);
  const CohomologyData hb = cohomology(b, -i);
  const QMatrix si = map_at(s, i, a.dim(i), b.dim(-i));
  return ha.reps.transpose() * si * hb.reps;
}

std::string pairing_perfectness_defect(const Complex& a, const Complex& b, const DegreeMaps& s) {
  for (int i : pairing_span(a, b)) {
    const QMatrix r = induced_pairing(a, b, s, i);
    if (!r.is_square() || (r.rows() && rank(r) != r.rows()))
      return "induced pairing H^" + std::to_string(i) + " x H^" + std::to_string(-i) + " is not perfect: " +
             to_string(r);
  }
  return {};
}

}  // namespace wittcob
