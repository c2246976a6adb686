#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsc/lattices.hpp"
#include "qsc/ncengine.hpp"

namespace qsc {

/// One family of homogeneous normal elements: a fixed Q-degree, a fixed
/// commutation-exponent vector (u X_{beta_j} = q^{c_j} X_{beta_j} u), and a
/// basis of the solutions.
struct NormalFinding {
  IVec degree;
  std::vector<long> exponents;
  std::vector<PBWVector> basis;
  std::optional<IVec> predicted_eta;  // matching eta in P_{S(w)}, fund coords
};

// dominant weights lambda in P^+_{S(w)} with sign*(1-w)lambda equal to the
// given degree (candidates predicting a normal element in that degree)
std::vector<IVec> predicting_weights(const CartanDatum& cd, const WeylElement& w,
                                     int sign, const IVec& degree);

// commutation exponent vector predicted by eta: c_j = -sign <(w+1)eta, beta_j>
std::vector<long> predicted_exponents(const PBWContext& ctx, const IVec& eta);

// default sweep bound: margin + max_j |<(w+1)eta, beta_j>| over predicting etas
long default_exponent_bound(const PBWContext& ctx, const IVec& degree, long margin);

// q-power-commuting normal elements of the given degree, swept over all
// integer exponent vectors with |c_j| <= bound
std::vector<NormalFinding> find_normal(const PBWContext& ctx, const IVec& degree,
                                       long bound);

// predicted degrees of homogeneous normal elements with multiplicities,
// heights <= cap: { sign*(1-w)lambda : lambda in P^+_{S(w)} }
std::map<IVec, std::vector<IVec>> predicted_normal_degrees(const PBWContext& ctx,
                                                           long height_cap);

/// The prime generators: for i in S(w) the one-dimensional normal space in
/// degree sign*(1-w)omega_i, scalar-normalized so the lowest PBW coordinate
/// is 1.
struct NormalGenerators {
  std::vector<int> indices;        // elements of S(w), ascending (1-based)
  std::vector<PBWVector> gens;
  std::vector<IVec> degrees;
  std::vector<std::vector<long>> exponents;
};
NormalGenerators normal_generators(const PBWContext& ctx);

struct DegreeClassification {
  IVec degree;
  std::size_t found_dim = 0;
  std::size_t predicted_multiplicity = 0;
  std::vector<NormalFinding> findings;
  bool dims_match = false;
  bool exponents_match = false;
  bool products_match = false;
  bool multiplicity_flag = false;  // more than one predicting lambda
};

struct ClassifyReport {
  bool pass = true;
  std::vector<DegreeClassification> degrees;
  std::vector<std::string> failures;
  // the completeness assumption the search relies on
  static const char* assumption();
};

// full normal-element classification check against the predictions, degree by
// degree up to the height cap; exponent sweep widened by the margin
ClassifyReport classify_normals(const PBWContext& ctx, long height_cap, long margin);

struct CentralDegree {
  IVec degree;
  std::size_t found_dim = 0;
  std::size_t predicted = 0;
};
struct CentralReport {
  bool pass = true;
  std::vector<CentralDegree> degrees;
  std::vector<std::string> failures;
  std::vector<IVec> predicted_mu;  // K(w) ^ P^+_{S(w)} within the cap
};
CentralReport find_central(const PBWContext& ctx, long height_cap);

/// Combinatorics of Sigma(w) and Delta(w) for a reduced word.
struct DeltaSet {
  std::vector<int> word;
  std::vector<int> indices;                 // S(w), ascending (1-based)
  std::vector<std::vector<int>> e_vectors;  // e(w)_j per index

  bool in_delta(const std::vector<int>& n) const;
  // unique decomposition n = sigma + delta (Lemma complement)
  void decompose(const std::vector<int>& n, std::vector<int>& sigma,
                 std::vector<int>& delta, std::vector<int>& sigma_coeffs) const;
};
DeltaSet make_delta_set(const std::vector<int>& word);

struct SeparationDegree {
  IVec degree;
  std::size_t dim = 0;
  std::size_t pair_count = 0;
  std::size_t rank = 0;
};
struct SeparationReport {
  bool pass = true;
  bool lead_law_ok = true;  // leading-degree law for the d-products
  std::vector<SeparationDegree> degrees;
  std::vector<std::string> failures;
};
// separation of variables: products {d-generator products} x {PBW monomials
// indexed by Delta(w)} form a basis of every graded piece up to the cap
SeparationReport separation_check(const PBWContext& ctx, long height_cap);

struct J1Generator {
  IVec mu;       // K(w) basis vector (fund coords)
  IVec mu_plus;  // dominant part
  IVec mu_minus;
  long n_plus = 0;   // n^+_{mu_-, mu_+}
  long n_minus = 0;  // n^-_{mu_-, mu_+}
  std::string formula_plus;
  std::string formula_minus;
};
struct J1Report {
  IntLattice K;
  int m = 0;
  bool cor_gen_applies = false;  // basis dominant with pairwise disjoint support
  std::vector<J1Generator> generators;
  std::string simplified;        // simplified generating set, when it applies
  std::string inhomogeneous;     // recipe for the inhomogeneous prime elements
  std::string stratum;           // how the zero-stratum primes arise
};
J1Report j1_generators(const CartanDatum& cd, const WeylElement& w);

// the exponent n^{sign}_{lambda,lambda'} of the product law
// d_{lambda} e_{lambda'-lambda} = q^n d_{lambda'} for lambda'-lambda in K(w),
// written against the fixed K(w) basis; exact rational, integral in all
// intended uses
mpq_class lo_exponent(const CartanDatum& cd, const std::vector<IVec>& kappa_basis,
                      const std::vector<long>& coeffs, const IVec& lambda, int sign);

} // namespace qsc
