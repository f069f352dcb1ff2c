#pragma once

// Square classes, p-adic valuation/unit splitting, places of Q and Hilbert
// symbols. Everything is exact.

#include "wittcob/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wittcob {

/// Trial division is capped by a process-wide bound. A cofactor that is
/// composite and has no prime factor below the bound is rejected with an error.
void set_trial_division_bound(std::uint64_t bound);
std::uint64_t trial_division_bound();

/// Prime factorization of |n| for n != 0, primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

bool is_prime(const Integer& n);

/// A nonzero rational modulo nonzero squares, stored as its signed squarefree
/// integer representative.
class SquareClass {
 public:
  SquareClass() : rep_(1) {}
  explicit SquareClass(Integer squarefree_rep);

  const Integer& rep() const { return rep_; }
  int sign() const { return sgn(rep_); }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.rep_ < b.rep_; }

 private:
  Integer rep_;
};

/// Throws std::domain_error("zero has no square class") on zero.
SquareClass square_class(const Rational& a);

/// a = unit * p^valuation with unit a p-adic unit (a rational prime to p);
/// unit_residue is the image of the unit in F_p^*, in [1, p-1].
struct LocalUnitData {
  Integer prime;
  long valuation = 0;
  Rational unit;
  Integer unit_residue;
};

long valuation(const Rational& a, const Integer& p);

/// Throws on a == 0 or composite p.
LocalUnitData p_adic_split(const Rational& a, const Integer& p);

/// Legendre symbol (a | p) for an odd prime p; 0 if p divides a.
int legendre(const Integer& a, const Integer& p);

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(Integer(0)); }
  static Place prime(const Integer& p);

  bool is_real() const { return sgn(p_) == 0; }
  const Integer& prime_number() const { return p_; }
  std::string name() const { return is_real() ? std::string("real") : p_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;  // 0 encodes the real place
};

/// (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// The primes dividing numerator or denominator of a (a != 0).
std::vector<Integer> prime_support(const Rational& a);

}  // namespace wittcob
