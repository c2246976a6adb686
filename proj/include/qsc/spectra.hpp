#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/lattices.hpp"

namespace qsc {

/// Finitely many generators with x_a x_b = q^{M_ab} x_b x_a, M antisymmetric.
struct QuantumTorusPresentation {
  std::vector<std::string> labels;
  std::vector<IVec> exponents;  // antisymmetric integer matrix

  std::size_t size() const { return labels.size(); }
};

// exponent vectors of central monomials (kernel of M; valid since q is not a
// root of unity)
IntLattice torus_center(const QuantumTorusPresentation& t);

// Joseph's localization torus L_w: c+[w+,omega_i] (i in S(w)) and
// c-[w-,omega_j] (all j)
QuantumTorusPresentation build_Lw(const CartanDatum& cd, const WeylPair& w);
// raw displayed mixed exponents -<w+ omega_i, w- omega_j> kept for audit
std::vector<std::vector<mpq_class>> lw_raw_mixed_exponents(const CartanDatum& cd,
                                                           const WeylPair& w);

// normal subalgebra N^{sign}_w on generators d[w,omega_i], i in S(w)
QuantumTorusPresentation build_N(const CartanDatum& cd, const WeylElement& w, int sign);
// N'_w on generators y[omega_i], i in S(w)
QuantumTorusPresentation build_Nprime(const CartanDatum& cd, const WeylPair& w);

struct CenterGenerator {
  std::string label;
  std::string kind;          // "fundamental" (c+[w+,omega_i], i in I(w)) or "ratio" (a_j)
  IVec lambda;               // lambda^{(j)} for ratio generators (fund coords)
  IVec weight_label;         // mu-grading label: omega_i, resp. 2 lambda^{(j)}
  IVec exponent_vector;      // coordinates in the L_w torus generators
};

struct CenterGenerators {
  QuantumTorusPresentation torus;
  std::vector<CenterGenerator> generators;
  int dimension = 0;        // |I(w)| + k
  int expected_dimension = 0;  // dim ker(w+ - w-)
  bool dimension_ok = false;
  bool centrality_ok = false;    // every generator lies in torus_center(L_w)
  bool label_lattice_ok = false; // weight labels generate L(w)
  IntLattice label_lattice;
  IntLattice L;
};
CenterGenerators center_generators(const CartanDatum& cd, const WeylPair& w);

struct StabilizerResult {
  IntLattice L;
  std::vector<long> divisors;  // SNF elementary divisors of L in the omega basis
  int torus_rank = 0;          // rank of the free part of the stabilizer
  std::string description;     // e.g. "mu_2 x mu_2"
};
StabilizerResult stabilizer(const CartanDatum& cd, const WeylPair& w);

struct LeafReport {
  int k = 0;
  std::vector<int> I;  // I(w), ascending
  std::vector<IVec> lambda_basis;  // lambda^{(j)}
  std::vector<IVec> lambda_plus, lambda_minus;
  std::vector<std::string> b_formulas;   // b_j(zeta_j) expressions
  std::vector<std::string> equations;    // leaf equations
  std::string ideal_formula;             // J_{w,zeta,theta}
  IntLattice Tw_lattice;                 // defining lattice of T^w
};
LeafReport leaf_and_ideal_report(const CartanDatum& cd, const WeylPair& w);

struct MaxSpectrumReport {
  std::string datum;
  int rank = 0;
  std::vector<std::string> parameters;
  std::vector<std::string> statements;
  std::string max_ideal_formula;
};
MaxSpectrumReport max_spectrum_report(const CartanDatum& cd);

struct StratRow {
  std::string wp, wm;
  int lp = 0, lm = 0;
  std::vector<int> S, I;
  int dim_ker = 0;
  int k = 0;
  int i_count = 0;
};
struct StratSummary {
  std::string datum;
  std::vector<StratRow> rows;
  int stratum_count = 0;
  std::map<int, int> dimension_histogram;
};
StratSummary stratification_summary(const CartanDatum& cd);

// --- JSON / text emission (canonical key order, deterministic) ---

nlohmann::json lattice_json(const IntLattice& L, const std::string& ambient_label);
nlohmann::json torus_json(const QuantumTorusPresentation& t);
nlohmann::json pair_report_json(const CartanDatum& cd, const WeylPair& w);
nlohmann::json all_pairs_report_json(const CartanDatum& cd);
std::string all_pairs_report_text(const CartanDatum& cd);
nlohmann::json max_report_json(const CartanDatum& cd);
nlohmann::json strat_summary_json(const CartanDatum& cd);
std::string strat_summary_text(const CartanDatum& cd);

} // namespace qsc
