#pragma once

// Witt classes over F_p and Q in canonical form, residue homomorphisms and
// the equality decision.

#include "wittcob/forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace wittcob {

/// Element of W(F_p), stored by the structure of the group:
///   p = 2:          Z/2, value = rank parity
///   p = 3 mod 4:    Z/4, value = #residues - #nonresidues (mod 4)
///   p = 1 mod 4:    Z/2 x Z/2, value = rank parity, nonresidue_disc = discriminant is a nonresidue
class WittClassFp {
 public:
  enum class Kind { two, three_mod_four, one_mod_four };

  WittClassFp() = default;
  explicit WittClassFp(Integer p);  // the zero class
  WittClassFp(Integer p, int value, bool nonresidue_disc = false);

  static Kind kind_of(const Integer& p);

  const Integer& prime() const { return p_; }
  Kind kind() const { return kind_; }
  int value() const { return value_; }
  bool nonresidue_disc() const { return nonresidue_; }

  bool is_zero() const { return value_ == 0 && !nonresidue_; }
  /// Order in the group: 1, 2 or 4.
  int order() const;

  friend WittClassFp operator+(const WittClassFp& a, const WittClassFp& b);
  friend WittClassFp operator-(const WittClassFp& a);
  friend bool operator==(const WittClassFp& a, const WittClassFp& b) {
    return a.p_ == b.p_ && a.value_ == b.value_ && a.nonresidue_ == b.nonresidue_;
  }

  std::string to_string() const;

 private:
  Integer p_ = 2;
  Kind kind_ = Kind::two;
  int value_ = 0;
  bool nonresidue_ = false;
};

/// [<1>] in W(F_p).
WittClassFp unit_class(const Integer& p);

/// Class of the diagonal form with the given nonzero residues, p odd.
WittClassFp fp_class_of(const std::vector<Integer>& entries, const Integer& p);

/// Class of a symmetric form over F_p (radical discarded).
WittClassFp fp_class_of(const BilinearForm& f);

/// Canonical element of W(Q): the signature and the nonzero second residues
/// at every prime (2 included). This pair is a complete invariant.
struct WittClassQ {
  long signature = 0;
  std::map<Integer, WittClassFp> residues;  // nonzero entries only, sorted by prime

  bool is_zero() const { return signature == 0 && residues.empty(); }

  friend WittClassQ operator+(const WittClassQ& a, const WittClassQ& b);
  friend WittClassQ operator-(const WittClassQ& a);
  friend WittClassQ operator-(const WittClassQ& a, const WittClassQ& b) { return a + (-b); }
  friend bool operator==(const WittClassQ& a, const WittClassQ& b) {
    return a.signature == b.signature && a.residues == b.residues;
  }
};

/// psi^k at p of a diagonal form over Q: keep entries with valuation = k mod 2
/// and send their unit residues to W(F_p) (rank parity at p = 2).
WittClassFp psi(const std::vector<Rational>& diagonal_entries, const Integer& p, int k);

/// Same, diagonalizing first; the radical is discarded.
WittClassFp psi(const BilinearForm& f, const Integer& p, int k);

/// Skew forms give the zero class; the radical is discarded.
WittClassQ witt_class_of(const BilinearForm& f);

WittClassQ witt_class_of_diagonal(const std::vector<Rational>& entries);

/// Decides [f] = [g] from rank, discriminant, Hasse invariants and signature
/// of f (+) -g against a sum of hyperbolic planes.
bool witt_equal_by_hasse(const BilinearForm& f, const BilinearForm& g);

/// Canonical-form equality, cross-checked against the Hasse route; throws
/// std::logic_error if the two decisions disagree.
bool equivalent(const BilinearForm& f, const BilinearForm& g);

}  // namespace wittcob
