#include "wittcob/hodge.hpp"

#include "wittcob/cobordism.hpp"
#include "wittcob/genus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wittcob {

namespace {

GMatrix conj(const GMatrix& m) {
  GMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
  return out;
}

GMatrix all_pieces(const HodgeStructure& h) {
  GMatrix v(h.dim(), 0);
  for (const auto& piece : h.pieces) v = v.cols() ? hstack(v, piece.basis) : piece.basis;
  return v;
}

std::string type_tag(const HodgePiece& piece) {
  return "(" + std::to_string(piece.p) + "," + std::to_string(piece.q) + ")";
}

bool same_span(const GMatrix& a, const GMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return a.cols() == b.cols();
  return rank(a) == rank(b) && in_span(a, b);
}

bool positive_definite(const QMatrix& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (sgn(determinant(m.block(0, 0, k, k))) <= 0) return false;
  return true;
}

}  // namespace

std::size_t HodgeStructure::dim() const { return pieces.empty() ? 0 : pieces.front().basis.rows(); }

std::vector<std::string> HodgeStructure::violations() const {
  std::vector<std::string> out;
  const std::size_t n = dim();
  std::size_t total = 0;
  for (const auto& piece : pieces) {
    if (piece.basis.rows() != n) out.push_back("piece " + type_tag(piece) + " lives in a different ambient dimension");
    if (piece.p + piece.q != weight)
      out.push_back("piece " + type_tag(piece) + " has p + q != weight " + std::to_string(weight));
    total += piece.basis.cols();
  }
  if (!out.empty()) return out;
  std::map<std::pair<int, int>, const HodgePiece*> by_type;
  for (const auto& piece : pieces)
    if (!by_type.emplace(std::make_pair(piece.p, piece.q), &piece).second)
      out.push_back("type " + type_tag(piece) + " appears twice");
  for (const auto& piece : pieces) {
    auto it = by_type.find({piece.q, piece.p});
    const GMatrix mirrored = it == by_type.end() ? GMatrix(n, 0) : it->second->basis;
    if (!same_span(conj(piece.basis), mirrored))
      out.push_back("conjugate of " + type_tag(piece) + " does not span the (q,p) piece");
  }
  if (total != n || (n && rank(all_pieces(*this)) != n))
    out.push_back("pieces do not form a basis of the complexification");
  return out;
}

GMatrix to_gaussian(const QMatrix& m) {
  GMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Gaussian(m(r, c));
  return out;
}

QMatrix real_part_exact(const GMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_real()) throw std::domain_error("matrix entry " + to_string(m(r, c)) + " is not real");
      out(r, c) = m(r, c).re;
    }
  return out;
}

QMatrix weil_operator(const HodgeStructure& h) {
  const auto bad = h.violations();
  if (!bad.empty()) throw std::invalid_argument("invalid Hodge structure: " + bad.front());
  const std::size_t n = h.dim();
  if (n == 0) return QMatrix(0, 0);
  const GMatrix v = all_pieces(h);
  std::vector<Gaussian> scalars;
  for (const auto& piece : h.pieces)
    for (std::size_t c = 0; c < piece.basis.cols(); ++c) scalars.push_back(i_power(piece.p - piece.q));
  return real_part_exact(v * GMatrix::diagonal(scalars) * *inverse(v));
}

PolarizationReport is_polarization(const HodgeStructure& h, const BilinearForm& S) {
  PolarizationReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.failures.push_back(std::move(message));
  };
  const auto bad = h.violations();
  if (!bad.empty()) {
    for (const auto& b : bad) fail("Hodge structure: " + b);
    return report;
  }
  if (!S.over_rationals()) fail("pairing must be defined over Q");
  if (S.dim() != h.dim()) {
    fail("pairing has dimension " + std::to_string(S.dim()) + ", structure has " + std::to_string(h.dim()));
    return report;
  }
  const int eps = (h.weight % 2 == 0) ? 1 : -1;
  if (S.epsilon() != eps) fail("pairing must be (-1)^w-symmetric for weight " + std::to_string(h.weight));
  const GMatrix sg = to_gaussian(S.gram());
  for (const auto& a : h.pieces)
    for (const auto& b : h.pieces) {
      if (b.p == h.weight - a.p) continue;
      if (!(a.basis.transpose() * sg * b.basis).is_zero_matrix())
        fail("S(H" + type_tag(a) + ", H" + type_tag(b) + ") != 0");
    }
  if (!S.is_nondegenerate()) fail("pairing is degenerate");
  report.C = weil_operator(h);
  report.S_C = S.gram() * report.C;
  if (!(report.S_C == report.S_C.transpose())) fail("S(u, Cv) is not symmetric");
  else if (!positive_definite(report.S_C)) fail("S(u, Cv) is not positive definite");
  return report;
}

long real_signature(const BilinearForm& f) {
  if (f.symmetry() == Symmetry::skew) return 0;
  long s = 0;
  for (const auto& e : diagonalize(f).entries) s += sgn(e);
  return s;
}

PolarizationComparison compare_polarizations(const HodgeStructure& h, const BilinearForm& S,
                                             const BilinearForm& S_prime) {
  for (const auto* form : {&S, &S_prime}) {
    const PolarizationReport r = is_polarization(h, *form);
    if (!r.ok)
      throw std::invalid_argument(std::string(form == &S ? "S" : "S'") + " is not a polarization: " + r.failures.front());
  }
  PolarizationComparison out;
  const QMatrix& s = S.gram();
  const QMatrix& sp = S_prime.gram();
  const QMatrix c = weil_operator(h);
  const std::size_t n = h.dim();
  // S' = phi^T S.
  out.phi = (*inverse(s)).transpose() * sp.transpose();

  const QMatrix m1 = out.phi.transpose() * s * c;
  const QMatrix m2 = sp * c;
  const QMatrix m3 = m2.transpose();
  const QMatrix m4 = m1.transpose();
  const QMatrix m5 = s * c * out.phi;
  out.identity_chain = (out.phi.transpose() * s == sp) && m1 == m2 && m2 == m3 && m3 == m4 && m4 == m5;

  const GMatrix phi_g = to_gaussian(out.phi);
  out.preserves_bigrading = true;
  for (const auto& piece : h.pieces)
    if (piece.basis.cols() && !in_span(piece.basis, phi_g * piece.basis)) out.preserves_bigrading = false;

  out.characteristic = characteristic_polynomial(out.phi);
  out.minimal = squarefree_part(out.characteristic);
  out.characteristic_squarefree = out.minimal.degree() == out.characteristic.degree();
  out.minimal_annihilates = out.minimal(out.phi).is_zero_matrix();
  out.sturm = sturm_positive_real_roots(out.characteristic);
  out.spectrum_positive_real = out.sturm.all_real && out.sturm.positive_roots == out.minimal.degree();

  std::vector<Eigenspace> spaces;
  std::size_t covered = 0;
  for (const auto& alpha : rational_roots(out.characteristic)) {
    QMatrix k = kernel(out.phi - alpha * QMatrix::identity(n));
    if (k.rows() != n || k.cols() == 0) continue;
    covered += k.cols();
    spaces.push_back({alpha, std::move(k)});
  }
  if (covered == n) {
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t j = i + 1; j < spaces.size(); ++j)
        if (!(spaces[i].basis.transpose() * s * spaces[j].basis).is_zero_matrix()) out.eigenspaces_orthogonal = false;
    out.eigenspaces = std::move(spaces);
  }
  out.signature_S = real_signature(S);
  out.signature_S_prime = real_signature(S_prime);
  return out;
}

SignedWittClass pol_class(const HodgeStructure& h, const BilinearForm& S) {
  const PolarizationReport r = is_polarization(h, S);
  if (!r.ok) throw std::invalid_argument("not a polarization: " + r.failures.front());
  SignedWittClass out;
  out.sign = epsilon(h.weight);
  if (S.symmetry() == Symmetry::skew) {
    out.skew = true;
    out.symplectic_certificate = symplectic_reduce(S).congruence;
    return out;
  }
  out.witt = witt_class_of(S.scaled(Rational(out.sign)));
  return out;
}

namespace {

// Real 2x2 block of C on span(e1, e2) with e1 + i e2 of type (p,q), k = p - q.
QMatrix weil_block(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return QMatrix::identity(2);
    case 1:
      return QMatrix{{0, 1}, {-1, 0}};
    case 2:
      return Rational(-1) * QMatrix::identity(2);
    default:
      return QMatrix{{0, -1}, {1, 0}};
  }
}

struct TypeGroup {
  int p = 0;
  int q = 0;
  std::size_t count = 0;   // complex dimension of H^{p,q} (real dimension for p = q)
  std::size_t offset = 0;  // first real coordinate
};

// Real matrix of a Hodge endomorphism acting by (A + iB) on each H^{p,q}, p > q,
// and by A on H^{p,p}.
QMatrix random_hodge_endomorphism(std::mt19937_64& rng, const std::vector<TypeGroup>& groups, std::size_t n,
                                  long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  QMatrix g(n, n);
  for (const auto& t : groups) {
    if (t.p == t.q) {
      for (std::size_t r = 0; r < t.count; ++r)
        for (std::size_t c = 0; c < t.count; ++c) g(t.offset + r, t.offset + c) = dist(rng);
      continue;
    }
    for (std::size_t l = 0; l < t.count; ++l)
      for (std::size_t j = 0; j < t.count; ++j) {
        const Rational a = dist(rng), b = dist(rng);
        const std::size_t r = t.offset + 2 * l, c = t.offset + 2 * j;
        g(r, c) = a;
        g(r + 1, c) = -b;
        g(r, c + 1) = b;
        g(r + 1, c + 1) = a;
      }
  }
  return g;
}

}  // namespace

HodgeFixture random_hodge_fixture(std::mt19937_64& rng, int weight, std::size_t max_dim) {
  if (weight < 0) throw std::invalid_argument("fixture weight must be nonnegative");
  if (max_dim == 0) throw std::invalid_argument("fixture dimension bound must be positive");
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  std::vector<TypeGroup> groups;
  std::size_t n = 0;
  while (n == 0) {
    groups.clear();
    for (int p = weight; 2 * p >= weight; --p) {
      const int q = weight - p;
      const std::size_t unit = p == q ? 1 : 2;
      const std::size_t room = (max_dim - n) / unit;
      const std::size_t count = room ? static_cast<std::size_t>(pick(0, static_cast<long>(std::min<std::size_t>(room, 2)))) : 0;
      if (count) groups.push_back({p, q, count, n});
      n += unit * count;
    }
  }

  // Adapted real basis: C and S0 = C^{-1} block diagonal, so S0 C = I.
  QMatrix c0(n, n), s0(n, n);
  for (const auto& t : groups)
    for (std::size_t j = 0; j < t.count; ++j) {
      if (t.p == t.q) {
        c0(t.offset + j, t.offset + j) = 1;
        s0(t.offset + j, t.offset + j) = 1;
      } else {
        const QMatrix block = weil_block(t.p - t.q);
        c0.set_block(t.offset + 2 * j, t.offset + 2 * j, block);
        s0.set_block(t.offset + 2 * j, t.offset + 2 * j, block.transpose());
      }
    }

  QMatrix g;
  do g = random_hodge_endomorphism(rng, groups, n, 2);
  while (sgn(determinant(g)) == 0);
  const QMatrix s = g.transpose() * s0 * g;
  const QMatrix s_c = s * c0;
  const QMatrix a = random_hodge_endomorphism(rng, groups, n, 2);
  const QMatrix a_adj = *inverse(s_c) * a.transpose() * s_c;
  const QMatrix psi = a_adj * a + Rational(pick(1, 3)) * QMatrix::identity(n);
  const QMatrix s_prime = psi.transpose() * s;

  const QMatrix t = random_invertible(rng, n, 1);
  const GMatrix t_inv = to_gaussian(*inverse(t));
  HodgeFixture out;
  out.h.weight = weight;
  for (const auto& grp : groups) {
    GMatrix hol(n, grp.count), anti(n, grp.count);
    for (std::size_t j = 0; j < grp.count; ++j) {
      if (grp.p == grp.q) {
        hol(grp.offset + j, j) = 1;
      } else {
        hol(grp.offset + 2 * j, j) = 1;
        hol(grp.offset + 2 * j + 1, j) = Gaussian(Rational(0), Rational(1));
        anti(grp.offset + 2 * j, j) = 1;
        anti(grp.offset + 2 * j + 1, j) = Gaussian(Rational(0), Rational(-1));
      }
    }
    out.h.pieces.push_back({grp.p, grp.q, t_inv * hol});
    if (grp.p != grp.q) out.h.pieces.push_back({grp.q, grp.p, t_inv * anti});
  }
  const Symmetry sym = weight % 2 == 0 ? Symmetry::symmetric : Symmetry::skew;
  out.S = BilinearForm(t.transpose() * s * t, sym);
  out.S_prime = BilinearForm(t.transpose() * s_prime * t, sym);
  out.psi = *inverse(t) * psi * t;
  return out;
}

}  // namespace wittcob
