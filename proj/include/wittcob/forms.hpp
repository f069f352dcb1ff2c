#pragma once

// Exact epsilon-symmetric bilinear forms over Q and over F_p (p odd):
// diagonalization, local/global invariants, radical splitting, symplectic
// reduction and the reduction of block-metabolic forms.

#include "wittcob/matrix.hpp"
#include "wittcob/numtheory.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wittcob {

enum class Symmetry { symmetric = 1, skew = -1 };

inline int epsilon_of(Symmetry s) { return static_cast<int>(s); }
std::string to_string(Symmetry s);

class BilinearForm {
 public:
  BilinearForm() = default;
  /// prime == 0 means the form is over Q. Over F_p the Gram entries are reduced
  /// to representatives in [0, p); p must be an odd prime below 2^31.
  BilinearForm(QMatrix gram, Symmetry symmetry, std::int64_t prime = 0);

  static BilinearForm diagonal(const std::vector<Rational>& entries, std::int64_t prime = 0);

  const QMatrix& gram() const { return gram_; }
  Symmetry symmetry() const { return symmetry_; }
  int epsilon() const { return epsilon_of(symmetry_); }
  std::int64_t prime() const { return prime_; }
  bool over_rationals() const { return prime_ == 0; }
  std::size_t dim() const { return gram_.rows(); }

  Rational operator()(const QMatrix& u, const QMatrix& v) const;

  /// P^T gram P (P need not be square).
  BilinearForm pullback(const QMatrix& p) const;
  BilinearForm negated() const;
  BilinearForm scaled(const Rational& c) const;
  bool is_nondegenerate() const;

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.symmetry_ == b.symmetry_ && a.prime_ == b.prime_ && a.gram_ == b.gram_;
  }

 private:
  QMatrix gram_;
  Symmetry symmetry_ = Symmetry::symmetric;
  std::int64_t prime_ = 0;
};

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

/// The hyperbolic plane [[0,1],[1,0]] (or the standard symplectic plane).
BilinearForm hyperbolic_plane(Symmetry symmetry = Symmetry::symmetric);

/// P^T gram P = diag(entries..., 0 x radical_dim). Over Q the entries are
/// integers: each rational pivot a/b is rescaled to a*b.
struct Diagonalization {
  std::vector<Rational> entries;
  std::size_t radical_dim = 0;
  QMatrix congruence;
};

Diagonalization diagonalize(const BilinearForm& f);

struct FormInvariants {
  std::size_t rank = 0;
  long positive = 0;
  long negative = 0;
  SquareClass discriminant;        // square class of the product of the diagonal entries
  std::map<Place, int> hasse;      // over local_places(f); absent places have Hasse invariant +1
};

FormInvariants invariants(const BilinearForm& f);

/// prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const std::vector<Rational>& diagonal_entries, const Place& place);

/// Places where the Hasse invariant of a diagonal form can differ from +1.
std::vector<Place> relevant_places(const std::vector<Rational>& diagonal_entries);

/// 2 and the primes at which an integral rescaling of the nondegenerate form f
/// is not unimodular. Every other prime sees unit diagonal entries only, so
/// local invariants there are trivial. Only det and denominators are factored.
std::vector<Integer> local_primes(const BilinearForm& f);

/// The real place followed by local_primes(f).
std::vector<Place> local_places(const BilinearForm& f);

struct RadicalSplit {
  BilinearForm nondegenerate;
  std::size_t radical_dim = 0;
  QMatrix basis_change;  // [complement | kernel]; pulls gram back to nondegenerate (+) 0
};

RadicalSplit radical_split(const BilinearForm& f);

struct SymplecticReduction {
  std::size_t hyperbolic_count = 0;
  QMatrix congruence;  // P^T gram P = diag([[0,1],[-1,0]], ...)
};

SymplecticReduction symplectic_reduce(const BilinearForm& f);

/// Target column `target` += alpha * column `source`, i.e. the congruence by
/// E = I + alpha * e_source e_target^T.
struct ElementaryCongruence {
  std::size_t source = 0;
  std::size_t target = 0;
  Rational alpha;
};

QMatrix replay(const std::vector<ElementaryCongruence>& steps, std::size_t n);

/// Gram [[0,0,I],[0,S,B],[I,B^T,A]] in the basis (X, Y, Z) with |X| = |Z|.
struct BlockMetabolicForm {
  BilinearForm S;
  QMatrix A;
  QMatrix B;

  std::size_t hyperbolic_size() const { return A.rows(); }
  void check() const;
  BilinearForm assemble() const;
};

struct MetabolicReduction {
  BilinearForm core;
  std::size_t hyperbolic_count = 0;
  std::vector<ElementaryCongruence> steps;  // clears B first, then A
  QMatrix congruence;                       // replay(steps) on the assembled form
};

MetabolicReduction metabolic_reduce(const BlockMetabolicForm& m);

}  // namespace wittcob
