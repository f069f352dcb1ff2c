#include "wittcob/forms.hpp"

#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

using FpMatrix = Matrix<ModP>;

FpMatrix to_fp(const QMatrix& m, std::int64_t p) {
  FpMatrix out(m.rows(), m.cols());
  const Integer pz = static_cast<long>(p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      Integer num = x.get_num() % pz;
      Integer den = x.get_den() % pz;
      if (den == 0) throw std::domain_error("entry " + to_string(x) + " has no residue mod " + std::to_string(p));
      out(r, c) = ModP(num.get_si(), p) / ModP(den.get_si(), p);
    }
  return out;
}

QMatrix from_fp(const FpMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(static_cast<long>(m(r, c).value()));
  return out;
}

template <class T>
void add_column_multiple(Matrix<T>& m, std::size_t target, std::size_t source, const T& alpha) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) = m(r, target) + alpha * m(r, source);
}

// Congruence g <- E^T g E for E = I + alpha e_source e_target^T.
template <class T>
void congruence_step(Matrix<T>& g, std::size_t target, std::size_t source, const T& alpha) {
  add_column_multiple(g, target, source, alpha);
  for (std::size_t c = 0; c < g.cols(); ++c) g(target, c) = g(target, c) + alpha * g(source, c);
}

template <class T>
void swap_both(Matrix<T>& g, std::size_t a, std::size_t b) {
  if (a == b) return;
  g.swap_columns(a, b);
  for (std::size_t c = 0; c < g.cols(); ++c) std::swap(g(a, c), g(b, c));
}

template <class T>
struct RawDiagonalization {
  std::vector<T> entries;
  Matrix<T> p;
};

template <class T>
RawDiagonalization<T> diagonalize_raw(Matrix<T> g) {
  const std::size_t n = g.rows();
  Matrix<T> p = Matrix<T>::identity(n);
  std::vector<T> entries;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!is_zero(g(i, i))) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // Zero diagonal: e_i += e_j for the first (i, j) with g_ij != 0 gives g_ii = 2 g_ij.
      for (std::size_t i = k; i < n && pivot == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!is_zero(g(i, j))) {
            congruence_step(g, i, j, T(1));
            add_column_multiple(p, i, j, T(1));
            pivot = i;
            break;
          }
      if (pivot == n) break;
    }
    swap_both(g, k, pivot);
    p.swap_columns(k, pivot);
    const T inv = T(1) / g(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (is_zero(g(k, j))) continue;
      const T c = -(g(k, j) * inv);
      congruence_step(g, j, k, c);
      add_column_multiple(p, j, k, c);
    }
    entries.push_back(g(k, k));
  }
  return {std::move(entries), std::move(p)};
}

template <class T>
Matrix<T> symplectic_raw(const Matrix<T>& g) {
  const std::size_t n = g.rows();
  std::vector<Matrix<T>> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(Matrix<T>::identity(n).column(i));
  auto omega = [&](const Matrix<T>& u, const Matrix<T>& v) { return (u.transpose() * g * v)(0, 0); };
  Matrix<T> out(n, 0);
  while (!pool.empty()) {
    Matrix<T> e = pool.front();
    std::size_t partner = pool.size();
    for (std::size_t j = 1; j < pool.size(); ++j)
      if (!is_zero(omega(e, pool[j]))) {
        partner = j;
        break;
      }
    if (partner == pool.size()) throw std::domain_error("skew form is degenerate");
    Matrix<T> f = (T(1) / omega(e, pool[partner])) * pool[partner];
    pool.erase(pool.begin() + static_cast<long>(partner));
    pool.erase(pool.begin());
    for (auto& v : pool) {
      const T vf = omega(v, f);
      const T ve = omega(v, e);
      v = v - vf * e + ve * f;
    }
    out = hstack(out, hstack(e, f));
  }
  return out;
}

QMatrix standard_symplectic(std::size_t pairs) {
  QMatrix j(2 * pairs, 2 * pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    j(2 * k, 2 * k + 1) = 1;
    j(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

QMatrix field_kernel(const QMatrix& m, std::int64_t p) {
  return p ? from_fp(kernel(to_fp(m, p))) : kernel(m);
}

std::size_t field_rank(const QMatrix& m, std::int64_t p) { return p ? rank(to_fp(m, p)) : rank(m); }

}  // namespace

std::string to_string(Symmetry s) { return s == Symmetry::symmetric ? "symmetric" : "skew"; }

BilinearForm::BilinearForm(QMatrix gram, Symmetry symmetry, std::int64_t prime)
    : gram_(std::move(gram)), symmetry_(symmetry), prime_(prime) {
  if (!gram_.is_square()) throw std::invalid_argument("gram matrix must be square, got " + gram_.shape());
  if (prime_ != 0) {
    if (prime_ == 2) throw std::invalid_argument("forms over F_2 are not materialized; use rank parity");
    if (prime_ < 0 || prime_ >= (std::int64_t{1} << 31) || !is_prime(Integer(static_cast<long>(prime_))))
      throw std::invalid_argument("field modulus " + std::to_string(prime_) + " is not an odd prime below 2^31");
    gram_ = from_fp(to_fp(gram_, prime_));
  }
  const int eps = epsilon();
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational diff = gram_(j, i) - eps * gram_(i, j);
      if (prime_ != 0) diff = Rational(Integer(diff.get_num() % Integer(static_cast<long>(prime_))));
      if (sgn(diff) != 0)
        throw std::invalid_argument("gram is not " + to_string(symmetry) + " at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
    }
}

BilinearForm BilinearForm::diagonal(const std::vector<Rational>& entries, std::int64_t prime) {
  return BilinearForm(QMatrix::diagonal(entries), Symmetry::symmetric, prime);
}

Rational BilinearForm::operator()(const QMatrix& u, const QMatrix& v) const {
  Rational value = (u.transpose() * gram_ * v)(0, 0);
  if (prime_ == 0) return value;
  return from_fp(to_fp(QMatrix{{value}}, prime_))(0, 0);
}

BilinearForm BilinearForm::pullback(const QMatrix& p) const {
  return BilinearForm(p.transpose() * gram_ * p, symmetry_, prime_);
}

BilinearForm BilinearForm::negated() const { return BilinearForm(-gram_, symmetry_, prime_); }

BilinearForm BilinearForm::scaled(const Rational& c) const { return BilinearForm(c * gram_, symmetry_, prime_); }

bool BilinearForm::is_nondegenerate() const { return field_rank(gram_, prime_) == dim(); }

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b) {
  if (a.symmetry() != b.symmetry() || a.prime() != b.prime())
    throw std::invalid_argument("direct sum of forms with different symmetry or field");
  return BilinearForm(direct_sum(a.gram(), b.gram()), a.symmetry(), a.prime());
}

BilinearForm hyperbolic_plane(Symmetry symmetry) {
  return BilinearForm(QMatrix{{0, 1}, {epsilon_of(symmetry), 0}}, symmetry);
}

Diagonalization diagonalize(const BilinearForm& f) {
  if (f.symmetry() != Symmetry::symmetric) throw std::invalid_argument("diagonalization requires symmetric form");
  Diagonalization out;
  if (f.prime() != 0) {
    auto raw = diagonalize_raw(to_fp(f.gram(), f.prime()));
    for (const auto& e : raw.entries) out.entries.emplace_back(static_cast<long>(e.value()));
    out.congruence = from_fp(raw.p);
  } else {
    auto raw = diagonalize_raw(f.gram());
    out.congruence = std::move(raw.p);
    for (std::size_t k = 0; k < raw.entries.size(); ++k) {
      const Rational& e = raw.entries[k];
      const Integer den = e.get_den();
      out.entries.emplace_back(e.get_num() * den);
      if (den != 1)
        for (std::size_t r = 0; r < f.dim(); ++r) out.congruence(r, k) *= den;
    }
  }
  out.radical_dim = f.dim() - out.entries.size();
  return out;
}

int hasse_invariant(const std::vector<Rational>& a, const Place& place) {
  int h = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) h *= hilbert_symbol(a[i], a[j], place);
  return h;
}

std::vector<Place> relevant_places(const std::vector<Rational>& a) {
  std::set<Place> places{Place::real(), Place::prime(Integer(2))};
  for (const auto& x : a)
    for (const auto& p : prime_support(Rational(square_class(x).rep()))) places.insert(Place::prime(p));
  return {places.begin(), places.end()};
}

std::vector<Integer> local_primes(const BilinearForm& f) {
  if (!f.over_rationals()) throw std::invalid_argument("local primes are defined for forms over Q");
  Integer den = 1;
  for (std::size_t r = 0; r < f.dim(); ++r)
    for (std::size_t c = 0; c < f.dim(); ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f.gram()(r, c).get_den_mpz_t());
  const Rational det = determinant(f.gram());
  if (sgn(det) == 0) throw std::domain_error("split off radical first");
  std::set<Integer> primes{Integer(2)};
  for (const auto& p : prime_support(Rational(Integer(den * det.get_num())))) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<Place> local_places(const BilinearForm& f) {
  std::vector<Place> out{Place::real()};
  for (const auto& p : local_primes(f)) out.push_back(Place::prime(p));
  return out;
}

FormInvariants invariants(const BilinearForm& f) {
  if (!f.over_rationals()) throw std::invalid_argument("invariants are defined for forms over Q");
  const auto diag = diagonalize(f);
  if (diag.radical_dim != 0) throw std::domain_error("split off radical first");
  FormInvariants out;
  out.rank = diag.entries.size();
  for (const auto& e : diag.entries) (sgn(e) > 0 ? out.positive : out.negative) += 1;
  // det changes by a square under congruence; the diagonal entries can be huge.
  out.discriminant = square_class(determinant(f.gram()));
  for (const auto& place : local_places(f)) out.hasse[place] = hasse_invariant(diag.entries, place);
  return out;
}

RadicalSplit radical_split(const BilinearForm& f) {
  const QMatrix k = field_kernel(f.gram(), f.prime());
  const QMatrix ambient = QMatrix::identity(f.dim());
  const QMatrix complement = complement_basis(k, ambient);
  RadicalSplit out;
  out.radical_dim = k.cols();
  out.basis_change = hstack(complement.cols() ? complement : QMatrix(f.dim(), 0), k);
  out.nondegenerate = f.pullback(complement.cols() ? complement : QMatrix(f.dim(), 0));
  return out;
}

SymplecticReduction symplectic_reduce(const BilinearForm& f) {
  if (f.symmetry() != Symmetry::skew) throw std::invalid_argument("symplectic reduction requires a skew form");
  if (f.dim() % 2 != 0) throw std::domain_error("skew form has odd rank " + std::to_string(f.dim()));
  SymplecticReduction out;
  out.congruence = f.prime() ? from_fp(symplectic_raw(to_fp(f.gram(), f.prime()))) : symplectic_raw(f.gram());
  out.hyperbolic_count = f.dim() / 2;
  if (!(f.pullback(out.congruence).gram() == standard_symplectic(out.hyperbolic_count)))
    throw std::logic_error("symplectic reduction produced a non-standard Gram matrix");
  return out;
}

QMatrix replay(const std::vector<ElementaryCongruence>& steps, std::size_t n) {
  QMatrix p = QMatrix::identity(n);
  for (const auto& s : steps) {
    if (s.source >= n || s.target >= n || s.source == s.target)
      throw std::invalid_argument("elementary congruence index out of range");
    add_column_multiple(p, s.target, s.source, s.alpha);
  }
  return p;
}

void BlockMetabolicForm::check() const {
  const std::size_t k = A.rows(), m = S.dim();
  if (!S.over_rationals() || S.symmetry() != Symmetry::symmetric)
    throw std::invalid_argument("block core S must be a symmetric form over Q");
  if (!A.is_square()) throw std::invalid_argument("block A must be square, got " + A.shape());
  if (B.rows() != m || B.cols() != k)
    throw std::invalid_argument("block B must be " + std::to_string(m) + "x" + std::to_string(k) + ", got " +
                                B.shape());
  if (!(A == A.transpose())) throw std::invalid_argument("block A must be symmetric");
  if (!S.is_nondegenerate()) throw std::domain_error("block core S is degenerate");
}

BilinearForm BlockMetabolicForm::assemble() const {
  check();
  const std::size_t k = A.rows(), m = S.dim();
  QMatrix g(2 * k + m, 2 * k + m);
  g.set_block(0, k + m, QMatrix::identity(k));
  g.set_block(k + m, 0, QMatrix::identity(k));
  g.set_block(k, k, S.gram());
  g.set_block(k, k + m, B);
  g.set_block(k + m, k, B.transpose());
  g.set_block(k + m, k + m, A);
  return BilinearForm(g, Symmetry::symmetric);
}

MetabolicReduction metabolic_reduce(const BlockMetabolicForm& block) {
  const BilinearForm whole = block.assemble();
  const std::size_t k = block.A.rows(), m = block.S.dim();
  const QMatrix s_inv = *inverse(block.S.gram());
  MetabolicReduction out;
  // z_q += sum_p alpha_pq y_p with alpha = -S^{-1} B kills Y.Z.
  const QMatrix alpha = -(s_inv * block.B);
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t p = 0; p < m; ++p)
      if (sgn(alpha(p, q)) != 0) out.steps.push_back({k + p, k + m + q, alpha(p, q)});
  // Then Z.Z = A - B^T S^{-1} B, killed by z_q += -A'_pq / 2 x_p.
  const QMatrix a_prime = block.A - block.B.transpose() * s_inv * block.B;
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t p = 0; p < k; ++p)
      if (sgn(a_prime(p, q)) != 0) out.steps.push_back({p, k + m + q, Rational(-a_prime(p, q) / 2)});
  out.congruence = replay(out.steps, 2 * k + m);
  const BlockMetabolicForm cleared{block.S, QMatrix(k, k), QMatrix(m, k)};
  if (!(whole.pullback(out.congruence) == cleared.assemble()))
    throw std::logic_error("metabolic reduction did not clear the A and B blocks");
  out.core = block.S;
  out.hyperbolic_count = k;
  return out;
}

}  // namespace wittcob
