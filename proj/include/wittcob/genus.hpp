#pragma once

// chi_y arithmetic on Hodge diamonds, the eps_m sign calculus, the
// Lefschetz cancellation identity and the two singular-space examples.

#include "wittcob/witt.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittcob {

struct HodgeDiamond {
  int n = 0;                        // complex dimension
  std::vector<std::vector<long>> h;  // h[p][q], 0 <= p, q <= n

  /// Empty if h is (n+1)x(n+1), nonnegative, h^{pq} = h^{qp} = h^{n-p,n-q}, h^{00} >= 1.
  std::vector<std::string> violations() const;
};

HodgeDiamond point_diamond();
HodgeDiamond projective_plane_diamond();
HodgeDiamond k3_diamond();

/// Integer polynomial in y, coefficients low to high, trimmed.
struct YPolynomial {
  std::vector<long> c;

  long operator()(long y) const;
  std::string to_string() const;
  friend bool operator==(const YPolynomial& a, const YPolynomial& b) { return a.c == b.c; }
};

/// Coefficient of y^p is sum_q (-1)^q h^{pq}. Throws on an invalid diamond.
YPolynomial chi_y(const HodgeDiamond& d);

struct Specialization {
  long euler = 0;             // y = -1
  long arithmetic_genus = 0;  // y = 0
  long signature = 0;         // y = 1; the middle signature only when even_dimension
  bool even_dimension = false;
};

Specialization specialize(const YPolynomial& chi, int dimension);

/// (-1)^{m(m+1)/2}.
int epsilon(long m);
/// eps_m = (-1)^i for m = 2i or m = 2i - 1.
bool epsilon_pair_rule(long m);

struct PrimitivePiece {
  int j = 0;           // P^{-j}, j >= 0
  long signature = 0;  // real Witt class of (P^{-j}, S_p)
};

struct LefschetzCheck {
  // Coefficients on the generators [P^{-j}] in the free abelian group.
  std::map<int, long> lhs;        // sum_j sum_{k=0}^j (-1)^j eps_{w-j+2k}
  std::map<int, long> rhs;        // eps_w (-1)^{j/2} for even j, 0 for odd j
  std::map<int, long> converted;  // (-1)^{j(j-1)/2} on even j: classes against f_*S
  long lhs_value = 0;             // evaluated on the supplied signatures
  long rhs_value = 0;
  bool equal = false;              // lhs == rhs coefficientwise and converted == eps_w rhs
  bool odd_pieces_vanish = false;
};

/// Throws std::invalid_argument on a duplicate or negative j.
LefschetzCheck lefschetz_cancellation_check(const std::vector<PrimitivePiece>& pieces, int w);

struct SignDictionaryCheck {
  long lhs = 0;  // (d-d')(d-d'+1)/2 + (d-d')d'
  long rhs = 0;  // d(d-1)/2 - d'(d'-1)/2 + (d-d')
  bool identity = false;
  bool shift_identity = false;  // d(d-1)/2 + d = d(d+1)/2
  bool holds() const { return identity && shift_identity; }
};

SignDictionaryCheck sign_dictionary_check(long d, long d_prime);

/// Hodge numbers of a smooth surface of degree m in P^3 (fixture data).
struct SurfaceHodgeData {
  int degree = 0;
  long h11 = 0;
  long h20 = 0;
};

struct IsolatedPointReport {
  SurfaceHodgeData surface;
  long signature_H2 = 0;         // 2 + 2 h20 - h11 by the Hodge index theorem
  long primitive_dimension = 0;  // h11 - 1 + 2 h20
  long primitive_signature = 0;  // signature_H2 - 1: the hyperplane class spans <m>
  long residual = 0;             // class of [Q_P] - [H^2(Z)] over R with [Q_P, S] = <1>
  bool obstruction = false;      // residual != 0: the expression is not the IC term alone
};

/// Real classes of [IC] + [Q_P] - [H^2(Z)] for an ordinary m-fold point whose
/// exceptional divisor has the given Hodge numbers.
IsolatedPointReport isolated_point_example(const SurfaceHodgeData& surface);

struct DoublePointReport {
  WittClassQ canonical;  // <1>
  WittClassQ induced;    // <-2>
  WittClassQ sum;
  WittClassFp psi1_at_2;
  WittClassFp psi0_at_3;
  int psi0_at_3_order = 0;
  bool nonzero_by_psi1_at_2 = false;
  bool nonzero_by_psi0_at_3 = false;
  bool nonzero_by_hasse = false;
  bool verdict() const { return nonzero_by_psi1_at_2 && nonzero_by_psi0_at_3 && nonzero_by_hasse && !sum.is_zero(); }
};

/// <1> + <-2> in W(Q) for the A_1 surface singularity.
DoublePointReport double_point_example();

}  // namespace wittcob
