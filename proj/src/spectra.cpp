#include "qsc/spectra.hpp"

#include "qsc/normalia.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qsc {

namespace {

std::string weight_str(const IVec& n) {
  std::ostringstream os;
  bool first = true;
  if (std::all_of(n.begin(), n.end(), [](long x) { return x == 0; })) return "0";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    if (!first) os << (n[i] > 0 ? "+" : "");
    first = false;
    if (n[i] == -1) os << "-";
    else if (n[i] != 1) os << n[i];
    os << "w" << (i + 1);
  }
  return os.str();
}

// <w1 lambda, w2 mu> as an exact rational (lambda, mu in fund coords)
mpq_class pair_wl(const CartanDatum& cd, const WeylElement& w1, const IVec& l1,
                  const WeylElement& w2, const IVec& l2) {
  return cd.pairing_fund(mat_apply(w1.matrix, l1), mat_apply(w2.matrix, l2));
}

long to_long_exact(const mpq_class& q) {
  if (q.get_den() != 1) throw rootsys_error("expected integer commutation exponent");
  return q.get_num().get_si();
}

IVec omega(int r, int i) {
  IVec v(r, 0);
  v[i - 1] = 1;
  return v;
}

} // namespace

IntLattice torus_center(const QuantumTorusPresentation& t) {
  ZMat m(t.size(), ZVec(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) m[i][j] = t.exponents[i][j];
  return kernel_lattice(m, (int)t.size());
}

QuantumTorusPresentation build_Lw(const CartanDatum& cd, const WeylPair& w) {
  QuantumTorusPresentation t;
  auto S = support_S(cd, w);
  std::vector<int> plus_idx(S.begin(), S.end());
  const int r = cd.rank();
  for (int i : plus_idx)
    t.labels.push_back("c+[" + word_str(w.plus.canonical_word) + ",w" + std::to_string(i) + "]");
  for (int j = 1; j <= r; ++j)
    t.labels.push_back("c-[" + word_str(w.minus.canonical_word) + ",w" + std::to_string(j) + "]");
  const std::size_t n = t.labels.size();
  t.exponents.assign(n, IVec(n, 0));
  // c+ block and c- block commute internally; the mixed exponent follows from
  // the R-matrix commutation law:
  // c+_i c-_j = q^{<w_i,w_j> - <w+ w_i, w- w_j>} c-_j c+_i
  for (std::size_t a = 0; a < plus_idx.size(); ++a)
    for (int j = 1; j <= r; ++j) {
      mpq_class e = cd.pairing_fund(omega(r, plus_idx[a]), omega(r, j)) -
                    pair_wl(cd, w.plus, omega(r, plus_idx[a]), w.minus, omega(r, j));
      long v = to_long_exact(e);
      t.exponents[a][plus_idx.size() + j - 1] = v;
      t.exponents[plus_idx.size() + j - 1][a] = -v;
    }
  return t;
}

std::vector<std::vector<mpq_class>> lw_raw_mixed_exponents(const CartanDatum& cd,
                                                           const WeylPair& w) {
  auto S = support_S(cd, w);
  std::vector<int> plus_idx(S.begin(), S.end());
  const int r = cd.rank();
  std::vector<std::vector<mpq_class>> raw(plus_idx.size(), std::vector<mpq_class>(r));
  for (std::size_t a = 0; a < plus_idx.size(); ++a)
    for (int j = 1; j <= r; ++j)
      raw[a][j - 1] = -pair_wl(cd, w.plus, omega(r, plus_idx[a]), w.minus, omega(r, j));
  return raw;
}

QuantumTorusPresentation build_N(const CartanDatum& cd, const WeylElement& w, int sign) {
  QuantumTorusPresentation t;
  auto S = support_sets(cd, w).S;
  std::vector<int> idx(S.begin(), S.end());
  const int r = cd.rank();
  std::string ds = sign > 0 ? "d+" : "d-";
  for (int i : idx)
    t.labels.push_back(ds + "[" + word_str(w.canonical_word) + ",w" + std::to_string(i) + "]");
  t.exponents.assign(idx.size(), IVec(idx.size(), 0));
  WeylElement id = identity_element(cd);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (a == b) continue;
      mpq_class e = pair_wl(cd, w, omega(r, idx[a]), id, omega(r, idx[b])) -
                    pair_wl(cd, id, omega(r, idx[a]), w, omega(r, idx[b]));
      t.exponents[a][b] = sign * to_long_exact(e);
    }
  return t;
}

QuantumTorusPresentation build_Nprime(const CartanDatum& cd, const WeylPair& w) {
  QuantumTorusPresentation t;
  auto S = support_S(cd, w);
  std::vector<int> idx(S.begin(), S.end());
  const int r = cd.rank();
  for (int i : idx) t.labels.push_back("y[w" + std::to_string(i) + "]");
  t.exponents.assign(idx.size(), IVec(idx.size(), 0));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (a == b) continue;
      mpq_class e = pair_wl(cd, w.minus, omega(r, idx[a]), w.plus, omega(r, idx[b])) -
                    pair_wl(cd, w.plus, omega(r, idx[a]), w.minus, omega(r, idx[b]));
      t.exponents[a][b] = to_long_exact(e);
    }
  return t;
}

CenterGenerators center_generators(const CartanDatum& cd, const WeylPair& w) {
  CenterGenerators res;
  const int r = cd.rank();
  res.torus = build_Lw(cd, w);
  auto S = support_S(cd, w);
  auto I = support_I(cd, w);
  std::vector<int> plus_idx(S.begin(), S.end());
  const std::size_t n = res.torus.size();

  IntLattice ker = torus_center(res.torus);
  IntLattice lred = ltilde_red(cd, w);
  res.L = big_L(cd, w);

  // c+[w+,omega_i] for i in I(w): equals a scalar times (c-[w-,omega_i])^{-1}
  for (int i : I) {
    CenterGenerator g;
    g.kind = "fundamental";
    g.label = "c+[" + word_str(w.plus.canonical_word) + ",w" + std::to_string(i) + "]";
    g.weight_label = omega(r, i);
    g.exponent_vector.assign(n, 0);
    g.exponent_vector[plus_idx.size() + i - 1] = -1;
    res.generators.push_back(std::move(g));
  }
  // a_j = c+[w+,lambda^{(j)}] c-[w-,lambda^{(j)}]^{-1}
  int k = 0;
  for (const auto& row : lred.basis()) {
    ++k;
    CenterGenerator g;
    g.kind = "ratio";
    g.lambda.assign(r, 0);
    for (int t = 0; t < r; ++t) g.lambda[t] = row[t].get_si();
    g.label = "a_" + std::to_string(k) + " = c+[" + word_str(w.plus.canonical_word) + "," +
              weight_str(g.lambda) + "] * c-[" + word_str(w.minus.canonical_word) + "," +
              weight_str(g.lambda) + "]^-1";
    g.weight_label.assign(r, 0);
    for (int t = 0; t < r; ++t) g.weight_label[t] = 2 * g.lambda[t];
    g.exponent_vector.assign(n, 0);
    for (std::size_t a = 0; a < plus_idx.size(); ++a)
      g.exponent_vector[a] = g.lambda[plus_idx[a] - 1];
    for (int j = 1; j <= r; ++j)
      g.exponent_vector[plus_idx.size() + j - 1] = -g.lambda[j - 1];
    res.generators.push_back(std::move(g));
  }

  res.dimension = (int)res.generators.size();
  res.expected_dimension = ltilde(cd, w).rank();
  res.dimension_ok = res.dimension == res.expected_dimension;

  res.centrality_ok = true;
  for (const auto& g : res.generators) {
    ZVec v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = g.exponent_vector[t];
    if (!ker.contains(v)) res.centrality_ok = false;
  }

  ZMat labels;
  for (const auto& g : res.generators) {
    ZVec v(r);
    for (int t = 0; t < r; ++t) v[t] = g.weight_label[t];
    labels.push_back(std::move(v));
  }
  res.label_lattice = IntLattice(r, labels);
  res.label_lattice_ok = res.label_lattice == res.L;
  return res;
}

StabilizerResult stabilizer(const CartanDatum& cd, const WeylPair& w) {
  StabilizerResult res;
  res.L = big_L(cd, w);
  ZMat rows = res.L.basis();
  auto div = snf_divisors(rows);
  res.torus_rank = cd.rank() - res.L.rank();
  std::vector<std::string> parts;
  for (const auto& d : div) {
    res.divisors.push_back(d.get_si());
    if (d > 1) parts.push_back("mu_" + d.get_str());
  }
  for (int i = 0; i < res.torus_rank; ++i) parts.push_back("K*");
  std::ostringstream os;
  if (parts.empty()) os << "trivial";
  else
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " x " : "") << parts[i];
  res.description = os.str();
  return res;
}

LeafReport leaf_and_ideal_report(const CartanDatum& cd, const WeylPair& w) {
  LeafReport rep;
  auto I = support_I(cd, w);
  rep.I.assign(I.begin(), I.end());
  IntLattice lred = ltilde_red(cd, w);
  rep.k = lred.rank();
  rep.Tw_lattice = ltilde(cd, w);
  const std::string wp = word_str(w.plus.canonical_word);
  const std::string wm = word_str(w.minus.canonical_word);
  int j = 0;
  for (const auto& row : lred.basis()) {
    ++j;
    IVec lambda(cd.rank());
    for (int t = 0; t < cd.rank(); ++t) lambda[t] = row[t].get_si();
    IVec lp, lm;
    split_pm(lambda, lp, lm);
    rep.lambda_basis.push_back(lambda);
    rep.lambda_plus.push_back(lp);
    rep.lambda_minus.push_back(lm);
    std::ostringstream b;
    b << "b_" << j << "(zeta_" << j << ") = c+[" << wp << "," << weight_str(lp) << "]*c-[" << wm
      << "," << weight_str(lm) << "] - zeta_" << j << "*c+[" << wp << "," << weight_str(lm)
      << "]*c-[" << wm << "," << weight_str(lp) << "]";
    rep.b_formulas.push_back(b.str());
    rep.equations.push_back("a~_" + std::to_string(j) + " = zeta_" + std::to_string(j));
  }
  for (int i : rep.I)
    rep.equations.push_back("c~+[" + wp + ",w" + std::to_string(i) + "] = theta_" +
                            std::to_string(i));
  std::ostringstream id;
  id << "J_{w,zeta,theta} = iota_w( ";
  bool first = true;
  for (int t = 1; t <= rep.k; ++t) {
    if (!first) id << " + ";
    first = false;
    id << "R_w*(a_" << t << " - zeta_" << t << ")";
  }
  for (int i : rep.I) {
    if (!first) id << " + ";
    first = false;
    id << "R_w*(c+[" << wp << ",w" << i << "] - theta_" << i << ")";
  }
  if (first) id << "0";
  id << " )";
  rep.ideal_formula = id.str();
  return rep;
}

MaxSpectrumReport max_spectrum_report(const CartanDatum& cd) {
  MaxSpectrumReport rep;
  rep.datum = cd.label();
  rep.rank = cd.rank();
  for (int i = 1; i <= cd.rank(); ++i) rep.parameters.push_back("p_" + std::to_string(i));
  rep.statements = {
      "Max R_q[G] = Prim_{(e,e)} R_q[G]: every maximal ideal lies over the (e,e) stratum.",
      "Max R_q[G] is homeomorphic to Max K[x_1^{+-1},...,x_" + std::to_string(cd.rank()) +
          "^{+-1}] via x_i -> c+[e,w_i].",
      "All maximal ideals of R_q[G] have finite codimension (codimension one over an"
      " algebraically closed field).",
  };
  std::ostringstream os;
  os << "I_{(e,e)}";
  for (int i = 1; i <= cd.rank(); ++i)
    os << " + (c+[e,w" << i << "] - p_" << i << ")*R_q[G]";
  rep.max_ideal_formula = os.str();
  return rep;
}

StratSummary stratification_summary(const CartanDatum& cd) {
  StratSummary sum;
  sum.datum = cd.label();
  const auto& W = weyl_group(cd);
  for (const auto& wp : W)
    for (const auto& wm : W) {
      WeylPair pair{wp, wm};
      StratRow row;
      row.wp = word_str(wp.canonical_word);
      row.wm = word_str(wm.canonical_word);
      row.lp = wp.length();
      row.lm = wm.length();
      auto S = support_S(cd, pair);
      auto I = support_I(cd, pair);
      row.S.assign(S.begin(), S.end());
      row.I.assign(I.begin(), I.end());
      row.dim_ker = ltilde(cd, pair).rank();
      row.i_count = (int)I.size();
      row.k = row.dim_ker - row.i_count;
      sum.dimension_histogram[row.dim_ker]++;
      sum.rows.push_back(std::move(row));
    }
  sum.stratum_count = (int)sum.rows.size();
  return sum;
}

// ---------------------------------------------------------------------------
// emission
// ---------------------------------------------------------------------------

nlohmann::json lattice_json(const IntLattice& L, const std::string& ambient_label) {
  nlohmann::json j;
  j["ambient"] = ambient_label;
  j["ambient_rank"] = L.ambient_rank();
  j["rank"] = L.rank();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : L.basis()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.get_si());
    rows.push_back(r);
  }
  j["basis"] = rows;
  return j;
}

nlohmann::json torus_json(const QuantumTorusPresentation& t) {
  nlohmann::json j;
  j["labels"] = t.labels;
  j["exponent_matrix"] = t.exponents;
  return j;
}

nlohmann::json pair_report_json(const CartanDatum& cd, const WeylPair& w) {
  nlohmann::json j;
  j["datum"] = cd.label();
  j["w_plus"] = {{"word", word_str(w.plus.canonical_word)}, {"length", w.plus.length()}};
  j["w_minus"] = {{"word", word_str(w.minus.canonical_word)}, {"length", w.minus.length()}};
  auto S = support_S(cd, w);
  auto I = support_I(cd, w);
  j["S"] = std::vector<int>(S.begin(), S.end());
  j["I"] = std::vector<int>(I.begin(), I.end());

  IntLattice lt = ltilde(cd, w);
  IntLattice lred = ltilde_red(cd, w);
  IntLattice L = big_L(cd, w);
  j["lattices"]["Ltilde"] = lattice_json(lt, "fundamental_weights");
  j["lattices"]["Ltilde_red"] = lattice_json(lred, "fundamental_weights");
  j["lattices"]["L"] = lattice_json(L, "fundamental_weights");
  j["lattices"]["K_w_plus"] = lattice_json(kappa_lattice(cd, w.plus), "fundamental_weights");
  j["lattices"]["K_w_minus"] = lattice_json(kappa_lattice(cd, w.minus), "fundamental_weights");

  CenterGenerators t1 = center_generators(cd, w);
  j["torus_Lw"] = torus_json(t1.torus);
  {
    auto raw = lw_raw_mixed_exponents(cd, w);
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& row : raw) {
      nlohmann::json rr = nlohmann::json::array();
      for (const auto& x : row) rr.push_back(x.get_str());
      rj.push_back(rr);
    }
    j["torus_Lw"]["raw_mixed_exponents"] = rj;
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : t1.generators) {
    nlohmann::json gj;
    gj["label"] = g.label;
    gj["kind"] = g.kind;
    gj["weight_label"] = g.weight_label;
    if (g.kind == "ratio") gj["lambda"] = g.lambda;
    gj["exponent_vector"] = g.exponent_vector;
    gens.push_back(gj);
  }
  j["center_generators"] = gens;
  j["center_dimension"] = t1.dimension;

  StabilizerResult st = stabilizer(cd, w);
  j["stabilizer"]["divisors"] = st.divisors;
  j["stabilizer"]["torus_rank"] = st.torus_rank;
  j["stabilizer"]["description"] = st.description;

  LeafReport leaf = leaf_and_ideal_report(cd, w);
  j["leaf"]["k"] = leaf.k;
  j["leaf"]["I_count"] = (int)leaf.I.size();
  nlohmann::json lsplits = nlohmann::json::array();
  for (std::size_t t = 0; t < leaf.lambda_basis.size(); ++t)
    lsplits.push_back({{"lambda", leaf.lambda_basis[t]},
                       {"lambda_plus", leaf.lambda_plus[t]},
                       {"lambda_minus", leaf.lambda_minus[t]}});
  j["leaf"]["lambda_splits"] = lsplits;
  j["leaf"]["b_formulas"] = leaf.b_formulas;
  j["leaf"]["equations"] = leaf.equations;
  j["leaf"]["ideal"] = leaf.ideal_formula;
  j["leaf"]["Tw_lattice"] = lattice_json(leaf.Tw_lattice, "fundamental_weights");

  for (int side = 0; side < 2; ++side) {
    const WeylElement& ww = side == 0 ? w.plus : w.minus;
    J1Report j1 = j1_generators(cd, ww);
    nlohmann::json jj;
    jj["m"] = j1.m;
    jj["K"] = lattice_json(j1.K, "fundamental_weights");
    nlohmann::json gens2 = nlohmann::json::array();
    for (const auto& g : j1.generators)
      gens2.push_back({{"mu", g.mu},
                       {"mu_plus", g.mu_plus},
                       {"mu_minus", g.mu_minus},
                       {"n_plus", g.n_plus},
                       {"n_minus", g.n_minus},
                       {"generator_plus", g.formula_plus},
                       {"generator_minus", g.formula_minus}});
    jj["generators"] = gens2;
    if (j1.cor_gen_applies) jj["simplified"] = j1.simplified;
    jj["inhomogeneous_primes"] = j1.inhomogeneous;
    jj["zero_stratum"] = j1.stratum;
    j["J1"][side == 0 ? "w_plus" : "w_minus"] = jj;
  }

  // internal consistency checks, emitted for the audit trail
  bool index_ok = true;
  {
    IntLattice two_lt = lt.scaled(2);
    auto div = L.quotient_divisors(two_lt);
    mpz_class idx = 1;
    for (const auto& d : div) idx *= d;
    mpz_class expect = 1;
    for (std::size_t t = 0; t < I.size(); ++t) expect *= 2;
    index_ok = idx == expect;
    for (const auto& d : div)
      if (d != 1 && d != 2) index_ok = false;
  }
  j["checks"]["center_generators_central"] = t1.centrality_ok ? "pass" : "fail";
  j["checks"]["center_dimension_matches"] = t1.dimension_ok ? "pass" : "fail";
  j["checks"]["label_lattice_equals_L"] = t1.label_lattice_ok ? "pass" : "fail";
  j["checks"]["index_L_over_2Ltilde"] = index_ok ? "pass" : "fail";
  return j;
}

nlohmann::json all_pairs_report_json(const CartanDatum& cd) {
  nlohmann::json j;
  j["datum"] = cd.label();
  const auto& W = weyl_group(cd);
  j["weyl_order"] = (int)W.size();
  j["pair_count"] = (int)(W.size() * W.size());
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& wp : W)
    for (const auto& wm : W) pairs.push_back(pair_report_json(cd, WeylPair{wp, wm}));
  j["pairs"] = pairs;
  j["max_spectrum"] = max_report_json(cd);
  j["stratification"] = strat_summary_json(cd);
  return j;
}

std::string all_pairs_report_text(const CartanDatum& cd) {
  std::ostringstream os;
  os << strat_summary_text(cd);
  return os.str();
}

nlohmann::json max_report_json(const CartanDatum& cd) {
  MaxSpectrumReport rep = max_spectrum_report(cd);
  nlohmann::json j;
  j["datum"] = rep.datum;
  j["rank"] = rep.rank;
  j["parameters"] = rep.parameters;
  j["statements"] = rep.statements;
  j["max_ideal_formula"] = rep.max_ideal_formula;
  return j;
}

nlohmann::json strat_summary_json(const CartanDatum& cd) {
  StratSummary sum = stratification_summary(cd);
  nlohmann::json j;
  j["datum"] = sum.datum;
  j["stratum_count"] = sum.stratum_count;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : sum.rows) {
    rows.push_back({{"w_plus", r.wp},
                    {"w_minus", r.wm},
                    {"l_plus", r.lp},
                    {"l_minus", r.lm},
                    {"S", r.S},
                    {"I", r.I},
                    {"dim", r.dim_ker},
                    {"k", r.k},
                    {"I_count", r.i_count}});
  }
  j["rows"] = rows;
  nlohmann::json hist;
  for (const auto& [d, c] : sum.dimension_histogram) hist[std::to_string(d)] = c;
  j["dimension_histogram"] = hist;
  return j;
}

std::string strat_summary_text(const CartanDatum& cd) {
  StratSummary sum = stratification_summary(cd);
  std::ostringstream os;
  os << "stratification of Spec R_q[G], type " << sum.datum << " (" << sum.stratum_count
     << " strata)\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %-12s %3s %3s %-8s %-8s %4s %3s %3s\n", "w+", "w-",
                "l+", "l-", "S", "I", "dim", "k", "|I|");
  os << buf;
  auto set_str = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  for (const auto& r : sum.rows) {
    std::snprintf(buf, sizeof buf, "%-12s %-12s %3d %3d %-8s %-8s %4d %3d %3d\n",
                  r.wp.c_str(), r.wm.c_str(), r.lp, r.lm, set_str(r.S).c_str(),
                  set_str(r.I).c_str(), r.dim_ker, r.k, r.i_count);
    os << buf;
  }
  os << "totals: strata by dim ker(w+ - w-):";
  for (const auto& [d, c] : sum.dimension_histogram) os << " dim" << d << ":" << c;
  os << "\n";
  return os.str();
}

} // namespace qsc
