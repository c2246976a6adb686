#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsc/rootsys.hpp"

namespace qsc {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

/// Sublattice of Z^n given by a Z-basis, stored in row Hermite normal form
/// so equal lattices compare equal.
class IntLattice {
public:
  IntLattice() : ambient_(0) {}
  explicit IntLattice(int ambient_rank) : ambient_(ambient_rank) {}
  // rows generate the lattice; they are reduced to an HNF basis
  IntLattice(int ambient_rank, const ZMat& generators);

  int ambient_rank() const { return ambient_; }
  int rank() const { return (int)basis_.size(); }
  const ZMat& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool operator==(const IntLattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const IntLattice& o) const { return !(*this == o); }

  bool contains(const ZVec& v) const;
  bool contains(const IntLattice& o) const;

  IntLattice scaled(const mpz_class& c) const;         // c * L
  static IntLattice sum(const IntLattice& a, const IntLattice& b);
  static IntLattice intersect(const IntLattice& a, const IntLattice& b);

  // index [this : sub] for a finite-index sublattice; throws otherwise
  mpz_class index_of(const IntLattice& sub) const;
  // elementary divisors of sub inside this (invariant factors of the quotient)
  std::vector<mpz_class> quotient_divisors(const IntLattice& sub) const;

  std::string str() const;

private:
  int ambient_;
  ZMat basis_;
};

// row Hermite normal form: pivots positive, entries above pivots reduced into
// [0, pivot); zero rows dropped
ZMat hnf(const ZMat& rows);
// Smith normal form elementary divisors (positive, each dividing the next)
std::vector<mpz_class> snf_divisors(const ZMat& m);
// {v in Z^n : M v^T = 0} for an integer matrix M with n columns
IntLattice kernel_lattice(const ZMat& M, int n_cols);

ZMat to_zmat(const IMat& m);

// --- lattices attached to Weyl group elements (fundamental-weight coords) ---

// full weight lattice P and coordinate sublattices P_I
IntLattice full_lattice(int r);
IntLattice coordinate_lattice(int r, const std::set<int>& indices_1based);

struct WeylPair {
  WeylElement plus;
  WeylElement minus;
};

std::set<int> support_S(const CartanDatum& cd, const WeylPair& w);  // S(w+) u S(w-)
std::set<int> support_I(const CartanDatum& cd, const WeylPair& w);  // I(w+) n I(w-)

// ker(w+ - w-) ^ P and ker(w+ - w-) ^ P_{S(w)}
IntLattice ltilde(const CartanDatum& cd, const WeylPair& w);
IntLattice ltilde_red(const CartanDatum& cd, const WeylPair& w);
// L(w) = 2 Ltilde_red(w) + P_{I(w)}
IntLattice big_L(const CartanDatum& cd, const WeylPair& w);

// K(w) = { mu in P_{S(w)} : (w+1) mu in P_{I(w)} } and m(w) = dim ker(w+1)
IntLattice kappa_lattice(const CartanDatum& cd, const WeylElement& w);
int m_of_w(const CartanDatum& cd, const WeylElement& w);

// rational rank of an integer matrix
int rank_q(const ZMat& m);

// lambda = lambda_+ - lambda_- with disjoint supports, both dominant
void split_pm(const IVec& lambda, IVec& plus, IVec& minus);

// projection of lambda onto P_{S(w)} and P_{I(w)} (errors if lambda is not in
// their direct sum, which cannot happen: P = P_S + P_I)
void split_S_I(const CartanDatum& cd, const WeylPair& w, const IVec& lambda,
               IVec& bar, IVec& dbar);

// components of a dominant lambda in P_{S(w)} along
// P_{S(w+)^S(w-)}, P_{S(w+)\S(w-)}, P_{S(w-)\S(w+)}
void split_triple(const CartanDatum& cd, const WeylPair& w, const IVec& lambda,
                  IVec& comp0, IVec& compp, IVec& compm);

} // namespace qsc
