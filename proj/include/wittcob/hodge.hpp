#pragma once

// Pure polarizable Hodge structures at a point with exact Q(i) bigradings,
// polarization checks and the comparison of two polarizations.

#include "wittcob/forms.hpp"
#include "wittcob/polynomial.hpp"
#include "wittcob/witt.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wittcob {

struct HodgePiece {
  int p = 0;
  int q = 0;
  GMatrix basis;  // n x h^{p,q}, columns span H^{p,q} inside Q(i)^n
};

struct HodgeStructure {
  int weight = 0;
  std::vector<HodgePiece> pieces;

  std::size_t dim() const;
  /// Empty if the bigrading is valid: p + q = w, conjugation swaps (p,q) and
  /// (q,p), and the pieces form a basis of Q(i)^n.
  std::vector<std::string> violations() const;
};

GMatrix to_gaussian(const QMatrix& m);
/// Throws std::domain_error if some entry is not real.
QMatrix real_part_exact(const GMatrix& m);

/// C acting as i^{p-q} on H^{p,q}; rational, C^2 = (-1)^w.
QMatrix weil_operator(const HodgeStructure& h);

struct PolarizationReport {
  bool ok = true;
  std::vector<std::string> failures;
  QMatrix C;
  QMatrix S_C;  // S(u, Cv)
};

PolarizationReport is_polarization(const HodgeStructure& h, const BilinearForm& S);

struct Eigenspace {
  Rational eigenvalue;
  QMatrix basis;
};

struct PolarizationComparison {
  QMatrix phi;  // S'(u, v) = S(phi u, v)
  Polynomial characteristic;
  Polynomial minimal;  // squarefree part of the characteristic polynomial
  SturmCounts sturm;
  bool characteristic_squarefree = false;
  bool minimal_annihilates = false;  // phi semisimple
  bool spectrum_positive_real = false;
  bool identity_chain = false;
  bool preserves_bigrading = false;
  std::optional<std::vector<Eigenspace>> eigenspaces;  // present iff the characteristic polynomial splits over Q
  bool eigenspaces_orthogonal = true;
  long signature_S = 0;
  long signature_S_prime = 0;

  bool signatures_equal() const { return signature_S == signature_S_prime; }
  /// Everything needed for [S_R] = [S'_R] is certified.
  bool holds() const {
    return minimal_annihilates && spectrum_positive_real && identity_chain && preserves_bigrading &&
           eigenspaces_orthogonal && signatures_equal();
  }
};

/// Throws std::invalid_argument if either form is not a polarization of h.
PolarizationComparison compare_polarizations(const HodgeStructure& h, const BilinearForm& S,
                                             const BilinearForm& S_prime);

/// Signature of a symmetric form; 0 for skew forms.
long real_signature(const BilinearForm& f);

struct SignedWittClass {
  int sign = 1;  // eps_w
  bool skew = false;
  WittClassQ witt;
  std::optional<QMatrix> symplectic_certificate;
};

/// Class of (H, eps_w S) with eps_w = (-1)^{w(w+1)/2}; zero with a
/// symplectic certificate for odd w.
SignedWittClass pol_class(const HodgeStructure& h, const BilinearForm& S);

struct HodgeFixture {
  HodgeStructure h;
  BilinearForm S;
  BilinearForm S_prime;
  QMatrix psi;  // S'(u, v) = S(psi u, v)
};

/// Random structure of the given weight (0..3) and dimension <= max_dim,
/// a polarization S and a second polarization S' = S(psi ., .) for a
/// positive S_C-self-adjoint Hodge endomorphism psi, all in a random basis.
HodgeFixture random_hodge_fixture(std::mt19937_64& rng, int weight, std::size_t max_dim = 6);

}  // namespace wittcob
