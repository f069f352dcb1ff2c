#pragma once

// Self-dual complexes at a point, cobordism witnesses and the reductions that
// identify the symmetric cobordism group of a point with W(Q).

#include "wittcob/complex.hpp"
#include "wittcob/forms.hpp"
#include "wittcob/witt.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wittcob {

/// A complex with pairing blocks S_i : F^i x F^{-i} -> Q satisfying, when
/// valid, S_{-i} = (-1)^i eps S_i^T, the chain condition and perfectness on
/// cohomology. Missing partner blocks are filled in from the symmetry.
class SelfDualComplex {
 public:
  SelfDualComplex() = default;
  SelfDualComplex(Complex complex, DegreeMaps pairing, Symmetry symmetry);

  static SelfDualComplex from_form(const BilinearForm& f);

  const Complex& complex() const { return complex_; }
  const DegreeMaps& pairing() const { return pairing_; }
  Symmetry symmetry() const { return symmetry_; }
  int epsilon() const { return epsilon_of(symmetry_); }
  QMatrix S(int i) const;

  SelfDualComplex negated() const;

  friend bool operator==(const SelfDualComplex& a, const SelfDualComplex& b) {
    return a.symmetry_ == b.symmetry_ && a.complex_ == b.complex_ && a.pairing_ == b.pairing_;
  }

 private:
  Complex complex_;
  DegreeMaps pairing_;
  Symmetry symmetry_ = Symmetry::symmetric;
};

SelfDualComplex direct_sum(const SelfDualComplex& a, const SelfDualComplex& b);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::map<int, std::size_t> cohomology_dims;
  std::map<int, QMatrix> induced_pairings;  // H^i x H^{-i}
};

ValidationReport validate(const SelfDualComplex& c);

/// Form induced on H^0; empty if H^0 = 0. Throws on an invalid complex.
BilinearForm h0_form(const SelfDualComplex& c);

enum class WitnessKind { direct, direct_subquotient };

std::string to_string(WitnessKind kind);

/// The square G -> F, G -> F', F -> G', F' -> G' with S'' : G x G' -> Q.
/// `homotopy`, if present, gives h^i : G^i -> G'^{i-1} with
/// pi' rho' - rho pi = d h + h d.
struct CobordismWitness {
  WitnessKind kind = WitnessKind::direct;
  SelfDualComplex F;
  SelfDualComplex F_prime;
  Complex G;
  Complex G_prime;
  DegreeMaps pi;         // G -> F
  DegreeMaps rho;        // F -> G'
  DegreeMaps rho_prime;  // G -> F'
  DegreeMaps pi_prime;   // F' -> G'
  DegreeMaps S_pp;       // S''_i : G^i x G'^{-i}
  std::optional<DegreeMaps> homotopy;
};

struct WitnessReport {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::string failure;  // first failing identity
  int cone_sign = 0;    // sign of the homotopy term in the cone morphism that worked
};

WitnessReport verify_witness(const CobordismWitness& w);

/// tau_{<=0} F -> F, F -> tau_{>=0} F against H^0(F).
CobordismWitness truncation_witness(const SelfDualComplex& c);

/// The same square read with F and F' exchanged.
CobordismWitness reversed(const CobordismWitness& w);

/// Witness between (F', S') (+) (F, -S) and 0.
CobordismWitness null_witness(const CobordismWitness& w);

/// Degree-0 witness between f and q^T f q for invertible q.
CobordismWitness isometry_witness(const BilinearForm& f, const QMatrix& q);

struct OrthogonalSplit {
  bool split = false;  // true: f = f|G (+) f|G-perp; false: G isotropic
  QMatrix sub;
  QMatrix complement;  // basis of G-perp (split) or of a complement of G in G-perp (isotropic)
  BilinearForm restricted;
  BilinearForm orthogonal;  // f on `complement`; the subquotient form in the isotropic case
  std::optional<CobordismWitness> witness;  // isotropic case: F = subquotient, F' = f
};

OrthogonalSplit orthogonal_split(const BilinearForm& f, const QMatrix& sub);

struct Prop11dResult {
  BilinearForm core;  // on Im(delta), delta = rho^0 pi^0 : H^0 G -> H^0 G'
  OrthogonalSplit to_F;
  OrthogonalSplit to_F_prime;
  bool core_matches_S_pp = false;  // R_F(pi a, pi b) = S''(a, delta b)
  bool classes_agree = false;
};

Prop11dResult prop11d_construct(const CobordismWitness& w);

struct CobordismClass {
  WittClassQ witt;
  bool skew = false;
  std::optional<QMatrix> symplectic_certificate;  // skew: congruence of H^0 to the standard form
};

CobordismClass cobordism_class(const SelfDualComplex& c);

/// Self-dual acyclic complex a^k -> a^{k+1} and its dual in degrees -k-1, -k.
SelfDualComplex acyclic_pair(const QMatrix& d, int k, int s2, Symmetry symmetry);

struct WitnessChain {
  BilinearForm core;
  std::vector<BlockMetabolicForm> blocks;
  std::vector<SelfDualComplex> objects;   // objects[i] = links[i].F, objects[i+1] = links[i].F_prime
  std::vector<CobordismWitness> links;
};

struct ChainOptions {
  std::size_t max_core_rank = 5;
  std::size_t max_blocks = 2;
  std::size_t max_congruences = 2;
  std::size_t max_acyclic = 1;
  long entry_bound = 6;
};

WitnessChain random_witness_chain(std::mt19937_64& rng, const ChainOptions& options = {});

/// Random invertible matrix with small entries.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound);

/// Random nondegenerate symmetric form over Q of the given rank.
BilinearForm random_nondegenerate_form(std::mt19937_64& rng, std::size_t rank, long bound);

}  // namespace wittcob
