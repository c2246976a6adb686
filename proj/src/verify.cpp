#include "qsc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qsc/parallel.hpp"

namespace qsc {

nlohmann::json pbw_vector_json(const PBWVector& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [n, c] : v.coords) {
    std::string key;
    for (std::size_t k = 0; k < n.size(); ++k) key += (k ? "," : "") + std::to_string(n[k]);
    j[key] = c.str();
  }
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double seconds() const {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0)
        .count();
  }
};

nlohmann::json finding_json(const NormalFinding& f) {
  nlohmann::json j;
  j["degree"] = f.degree;
  j["exponents"] = f.exponents;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : f.basis) basis.push_back(pbw_vector_json(b));
  j["basis"] = basis;
  if (f.predicted_eta) j["predicted_eta"] = *f.predicted_eta;
  return j;
}

// merge per-task results deterministically
void merge(CheckResult& into, std::vector<CheckResult>& parts) {
  for (auto& p : parts) {
    into.instances += p.instances;
    if (!p.passed) into.passed = false;
    for (auto& f : p.failures) into.failures.push_back(std::move(f));
    for (auto& c : p.counterexamples) into.counterexamples.push_back(std::move(c));
  }
}

std::vector<WeylElement> context_elements(const CartanDatum& cd, const VerifyConfig& cfg,
                                          int max_length) {
  std::vector<WeylElement> out;
  if (cfg.word) {
    WordResult wr = word_to_element(cd, *cfg.word);
    if (!wr.is_reduced) throw rootsys_error("word is not reduced");
    out.push_back(wr.element);
    return out;
  }
  for (const auto& w : weyl_group(cd))
    if (max_length < 0 || w.length() <= max_length) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------

CheckResult check_root_lattice(const VerifyConfig& cfg) {
  CheckResult res{"root-lattice", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  const auto& W = weyl_group(cd);
  for (const auto& w : W) {
    res.instances++;
    auto sup = support_sets(cd, w);
    auto words = all_reduced_words(cd, w);
    std::set<IVec> inv_set;
    for (const IVec& b : inversion_roots(cd, w.canonical_word)) inv_set.insert(b);
    for (const auto& word : words) {
      std::set<int> letters(word.begin(), word.end());
      if (letters != sup.S) {
        res.passed = false;
        res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                               ": letters of a reduced word differ from S(w)");
      }
      std::set<IVec> s2;
      for (const IVec& b : inversion_roots(cd, word)) s2.insert(b);
      if (s2 != inv_set) {
        res.passed = false;
        res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                               ": inversion set depends on the reduced word");
      }
    }
    // Z-span of the inversion roots equals Q_{S(w)} (alpha-coordinate ambient)
    ZMat rows;
    for (const IVec& b : inv_set) {
      ZVec z(cd.rank());
      for (int t = 0; t < cd.rank(); ++t) z[t] = b[t];
      rows.push_back(z);
    }
    IntLattice span(cd.rank(), rows);
    if (span != coordinate_lattice(cd.rank(), sup.S)) {
      res.passed = false;
      res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                             ": Z-span of inversion roots differs from Q_S");
    }
    // coroot version: the Z-span of the beta^vee equals Q^vee_S; the coroot of
    // beta = sum a_i alpha_i has coordinates 2 d_i a_i / <beta,beta> in the
    // alpha^vee basis
    ZMat corows;
    for (const IVec& b : inv_set) {
      long norm = 0;
      for (int s = 0; s < cd.rank(); ++s)
        for (int t = 0; t < cd.rank(); ++t) norm += b[s] * cd.root_pairing(s, t) * b[t];
      ZVec z(cd.rank());
      for (int t = 0; t < cd.rank(); ++t) {
        long num = 2 * cd.d(t) * b[t];
        if (num % norm != 0) {
          res.passed = false;
          res.failures.push_back(cfg.type + ": non-integral coroot coordinates");
        }
        z[t] = num / norm;
      }
      corows.push_back(z);
    }
    if (IntLattice(cd.rank(), corows) != coordinate_lattice(cd.rank(), sup.S)) {
      res.passed = false;
      res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                             ": Z-span of inversion coroots differs from Q^vee_S");
    }
    // (inversions)^perp ^ P = P_{I(w)}
    ZMat prows;
    for (const IVec& b : inv_set) {
      ZVec z(cd.rank());
      for (int t = 0; t < cd.rank(); ++t) z[t] = cd.d(t) * b[t];
      prows.push_back(z);
    }
    IntLattice perp = kernel_lattice(prows, cd.rank());
    if (inv_set.empty()) perp = full_lattice(cd.rank());
    if (perp != coordinate_lattice(cd.rank(), sup.I)) {
      res.passed = false;
      res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                             ": inversion-root perp differs from P_I");
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_kappa(const VerifyConfig& cfg) {
  CheckResult res{"kappa", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  for (const auto& w : weyl_group(cd)) {
    res.instances++;
    IntLattice K = kappa_lattice(cd, w);
    int m = m_of_w(cd, w);
    if (K.rank() != m) {
      res.passed = false;
      res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) + ": rank K(w)=" +
                             std::to_string(K.rank()) + " != m(w)=" + std::to_string(m));
    }
    auto sup = support_sets(cd, w);
    IntLattice PS = coordinate_lattice(cd.rank(), sup.S);
    if (!PS.contains(K)) {
      res.passed = false;
      res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                             ": K(w) not inside P_S");
    }
    for (const auto& row : K.basis()) {
      IVec mu(cd.rank());
      for (int t = 0; t < cd.rank(); ++t) mu[t] = row[t].get_si();
      IVec img = mat_apply(w.matrix, mu);
      for (int t = 0; t < cd.rank(); ++t) img[t] += mu[t];
      for (int i : sup.S)
        if (img[i - 1] != 0) {
          res.passed = false;
          res.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                                 ": (w+1)mu is not in P_I for a basis vector");
        }
    }
  }
  if (cfg.type == "A2") {
    // known value for sl3: K(s_1) = Z omega_1 and m(s_1) = 1
    res.instances++;
    WeylElement s1 = simple_reflection(cd, 1);
    IntLattice K = kappa_lattice(cd, s1);
    ZMat expected = {{1, 0}};
    if (!(K == IntLattice(2, expected)) || m_of_w(cd, s1) != 1) {
      res.passed = false;
      res.failures.push_back("A2: K(s_1) != Z omega_1 or m(s_1) != 1");
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_pbw_rank(const VerifyConfig& cfg) {
  CheckResult res{"pbw-rank", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  auto elems = context_elements(cd, cfg, -1);
  // contexts are built up front; the parallel grain is one graded piece
  std::vector<PBWContext> ctxs;
  struct Task {
    std::size_t ctx;
    IVec degree;
  };
  std::vector<Task> tasks;
  for (const auto& w : elems) {
    if (w.length() == 0) {
      res.instances++;
      continue;
    }
    ctxs.push_back(build_context(engine, w.canonical_word, +1));
    for (const IVec& deg : graded_degrees(ctxs.back(), cfg.height))
      tasks.push_back({ctxs.size() - 1, deg});
  }
  std::vector<CheckResult> parts(tasks.size());
  parallel_for(tasks.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const PBWContext& ctx = ctxs[tasks[t].ctx];
    part.instances++;
    const GradedPiece& piece = graded_piece(ctx, tasks[t].degree);
    if (piece.monomial_rank() != piece.dim()) {
      part.passed = false;
      part.failures.push_back(cfg.type + " w=" + word_str(ctx.word) +
                              ": PBW monomials dependent in a graded piece (dim " +
                              std::to_string(piece.dim()) + ")");
    }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_braid(const VerifyConfig& cfg) {
  CheckResult res{"braid", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  for (int i = 1; i <= cd.rank(); ++i)
    for (int j = i + 1; j <= cd.rank(); ++j) {
      long prod = cd.c(i - 1, j - 1) * cd.c(j - 1, i - 1);
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      std::vector<int> lhs, rhs;
      for (int t = 0; t < m; ++t) {
        lhs.push_back(t % 2 ? j : i);
        rhs.push_back(t % 2 ? i : j);
      }
      std::vector<NCPoly> gens;
      for (int g = 1; g <= cd.rank(); ++g) {
        gens.push_back(engine->gen_E(g));
        gens.push_back(engine->gen_F(g));
        gens.push_back(engine->gen_K(g));
      }
      for (const NCPoly& g : gens) {
        res.instances++;
        if (engine->braid_word(lhs, g) != engine->braid_word(rhs, g)) {
          res.passed = false;
          res.failures.push_back(cfg.type + ": braid relation fails for pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_ls_support(const VerifyConfig& cfg) {
  CheckResult res{"ls-support", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  std::vector<std::vector<int>> words =
      cfg.word ? std::vector<std::vector<int>>{*cfg.word} : ls_context_words(cd);
  std::vector<CheckResult> parts(words.size());
  parallel_for(words.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    PBWContext ctx = build_context(engine, words[t], +1);
    for (int i = 1; i <= ctx.length(); ++i)
      for (int j = i + 1; j <= ctx.length(); ++j) {
        part.instances++;
        PBWVector rel = ls_relation(ctx, i, j);
        for (const auto& [n, c] : rel.coords) {
          bool ok = true;
          for (int k = 1; k <= ctx.length(); ++k)
            if ((k <= i || k >= j) && n[k - 1] != 0) ok = false;
          if (!ok) {
            part.passed = false;
            part.failures.push_back(cfg.type + " word " + word_str(words[t]) + " pair (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    "): straightening leaves the open interval");
            part.counterexamples.push_back(
                {{"check", "ls-support"},
                 {"word", word_str(words[t])},
                 {"pair", {i, j}},
                 {"relation", pbw_vector_json(rel)}});
          }
        }
      }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_ls_highest(const VerifyConfig& cfg) {
  CheckResult res{"ls-highest", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  std::vector<std::vector<int>> words =
      cfg.word ? std::vector<std::vector<int>>{*cfg.word}
               : std::vector<std::vector<int>>{longest_element(cd).canonical_word};
  for (const auto& word : words) {
    PBWContext ctx = build_context(engine, word, +1);
    std::mt19937 rng(12345);
    const long budget = std::max<long>(2, (cfg.degree_cap - 2) / 2);
    auto random_multideg = [&]() {
      std::vector<int> n(ctx.length(), 0);
      long h = 0;
      for (int k = 0; k < ctx.length(); ++k) {
        long hk = cd.height(ctx.betas[k]);
        long maxn = (budget - h) / hk;
        if (maxn <= 0) continue;
        std::uniform_int_distribution<long> dist(0, std::min<long>(2, maxn));
        n[k] = (int)dist(rng);
        h += n[k] * hk;
      }
      return n;
    };
    for (int trial = 0; trial < 50; ++trial) {
      res.instances++;
      std::vector<int> n = random_multideg(), m = random_multideg();
      PBWVector u, v;
      u.ctx = v.ctx = &ctx;
      u.coords.emplace(n, RatFunc(1));
      v.coords.emplace(m, RatFunc(1));
      PBWVector prod = pbw_multiply(ctx, u, v);
      auto [top, coeff] = highest_term(prod);
      std::vector<int> expect(n.size());
      for (std::size_t k = 0; k < n.size(); ++k) expect[k] = n[k] + m[k];
      long e;
      if (top != expect || !coeff.is_q_power(e)) {
        res.passed = false;
        res.failures.push_back(cfg.type + " word " + word_str(word) +
                               ": highest-term law fails");
        res.counterexamples.push_back({{"check", "ls-highest"},
                                       {"word", word_str(word)},
                                       {"n", n},
                                       {"m", m},
                                       {"product", pbw_vector_json(prod)}});
      }
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_normal_classify(const VerifyConfig& cfg) {
  CheckResult res{"normal-classify", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  int max_len = cfg.type == "B2" ? 3 : -1;
  long height = cfg.type == "B2" ? std::min<long>(cfg.height, 5) : cfg.height;
  auto elems = context_elements(cd, cfg, max_len);
  std::vector<CheckResult> parts(elems.size());
  parallel_for(elems.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const WeylElement& w = elems[t];
    PBWContext ctx = build_context(engine, w.canonical_word, +1);
    ClassifyReport rep = classify_normals(ctx, height, cfg.margin);
    part.instances += rep.degrees.size();
    if (!rep.pass) {
      part.passed = false;
      for (const auto& f : rep.failures) part.failures.push_back(f);
      for (const auto& dc : rep.degrees) {
        if (dc.dims_match && dc.exponents_match && dc.products_match) continue;
        nlohmann::json cj;
        cj["check"] = "normal-classify";
        cj["word"] = word_str(w.canonical_word);
        cj["degree"] = dc.degree;
        cj["predicted_multiplicity"] = dc.predicted_multiplicity;
        cj["found_dim"] = dc.found_dim;
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : dc.findings) fs.push_back(finding_json(f));
        cj["findings"] = fs;
        part.counterexamples.push_back(cj);
      }
    }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_dij(const VerifyConfig& cfg) {
  CheckResult res{"dij-exponents", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  int max_len = cfg.type == "B2" ? 3 : -1;
  auto elems = context_elements(cd, cfg, max_len);
  std::vector<CheckResult> parts(elems.size());
  parallel_for(elems.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const WeylElement& w = elems[t];
    if (w.length() == 0) return;
    PBWContext ctx = build_context(engine, w.canonical_word, +1);
    NormalGenerators gens = normal_generators(ctx);
    QuantumTorusPresentation N = build_N(cd, w, +1);
    for (std::size_t a = 0; a < gens.gens.size(); ++a)
      for (std::size_t b = 0; b < gens.gens.size(); ++b) {
        if (a == b) continue;
        part.instances++;
        PBWVector ab = pbw_multiply(ctx, gens.gens[a], gens.gens[b]);
        PBWVector ba = pbw_multiply(ctx, gens.gens[b], gens.gens[a]);
        // ab = q^{M_ab} ba
        for (auto& [n, c] : ba.coords) c *= RatFunc::q_power(N.exponents[a][b]);
        if (!(ab == ba)) {
          part.passed = false;
          part.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                                  ": d-generator commutation exponent mismatch");
        }
      }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_separation(const VerifyConfig& cfg) {
  CheckResult res{"separation", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  int max_len = cfg.type == "B2" ? 3 : -1;
  long height = cfg.type == "B2" ? std::min<long>(cfg.height, 5) : cfg.height;
  auto elems = context_elements(cd, cfg, max_len);
  std::vector<CheckResult> parts(elems.size());
  parallel_for(elems.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const WeylElement& w = elems[t];
    // Lemma complement: exhaustive uniqueness over {0..4}^l
    if (w.length() > 0) {
      DeltaSet ds = make_delta_set(w.canonical_word);
      const int l = w.length();
      std::vector<int> n(l, 0);
      std::function<void(int)> rec = [&](int k) {
        if (k == l) {
          part.instances++;
          std::vector<int> sigma, delta, coeffs;
          ds.decompose(n, sigma, delta, coeffs);
          bool ok = ds.in_delta(delta);
          for (int x : delta) ok = ok && x >= 0;
          // uniqueness: any other sigma' in Sigma with n - sigma' in Delta
          // must equal sigma
          std::vector<int> m(ds.indices.size(), 0);
          std::function<void(std::size_t, std::vector<int>)> sweep =
              [&](std::size_t j, std::vector<int> acc) {
                if (!ok) return;
                if (j == ds.indices.size()) {
                  std::vector<int> delta2(l);
                  for (int x = 0; x < l; ++x) {
                    delta2[x] = n[x] - acc[x];
                    if (delta2[x] < 0) return;
                  }
                  if (ds.in_delta(delta2) && acc != sigma) ok = false;
                  return;
                }
                for (int c = 0;; ++c) {
                  std::vector<int> acc2 = acc;
                  bool fits = true;
                  for (int x = 0; x < l; ++x) {
                    acc2[x] = acc[x] + c * ds.e_vectors[j][x];
                    if (acc2[x] > n[x] && ds.e_vectors[j][x]) fits = false;
                  }
                  if (c > 0 && !fits) break;
                  if (fits) sweep(j + 1, acc2);
                  if (!fits) break;
                }
              };
          sweep(0, std::vector<int>(l, 0));
          if (!ok) {
            part.passed = false;
            part.failures.push_back(cfg.type + " w=" + word_str(w.canonical_word) +
                                    ": Lemma-complement decomposition not unique");
          }
          return;
        }
        for (int v = 0; v <= 4; ++v) {
          n[k] = v;
          rec(k + 1);
        }
        n[k] = 0;
      };
      rec(0);
    }
    PBWContext ctx = build_context(engine, w.canonical_word, +1);
    SeparationReport rep = separation_check(ctx, height);
    part.instances += rep.degrees.size();
    if (!rep.pass) {
      part.passed = false;
      for (const auto& f : rep.failures) part.failures.push_back(f);
    }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_center(const VerifyConfig& cfg) {
  CheckResult res{"center", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  auto engine = make_engine(cd, cfg.degree_cap);
  int max_len = cfg.type == "B2" ? 3 : -1;
  long height = cfg.type == "B2" ? std::min<long>(cfg.height, 5) : cfg.height;
  auto elems = context_elements(cd, cfg, max_len);
  std::vector<CheckResult> parts(elems.size());
  parallel_for(elems.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const WeylElement& w = elems[t];
    PBWContext ctx = build_context(engine, w.canonical_word, +1);
    CentralReport rep = find_central(ctx, height);
    part.instances += rep.degrees.size();
    if (!rep.pass) {
      part.passed = false;
      for (const auto& f : rep.failures) part.failures.push_back(f);
    }
  });
  merge(res, parts);
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_center_torus(const VerifyConfig& cfg) {
  CheckResult res{"center-torus", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  const auto& W = weyl_group(cd);
  std::vector<WeylPair> pairs;
  for (const auto& wp : W)
    for (const auto& wm : W) pairs.push_back(WeylPair{wp, wm});
  std::vector<CheckResult> parts(pairs.size());
  parallel_for(pairs.size(), cfg.threads, [&](std::size_t t) {
    CheckResult& part = parts[t];
    const WeylPair& w = pairs[t];
    part.instances++;
    std::string tag = cfg.type + " (" + word_str(w.plus.canonical_word) + " | " +
                      word_str(w.minus.canonical_word) + ")";
    CenterGenerators t1 = center_generators(cd, w);
    if (!t1.centrality_ok) {
      part.passed = false;
      part.failures.push_back(tag + ": center generator not central in L_w");
      nlohmann::json cj;
      cj["check"] = "center-torus";
      cj["pair"] = {word_str(w.plus.canonical_word), word_str(w.minus.canonical_word)};
      cj["torus"] = torus_json(t1.torus);
      part.counterexamples.push_back(cj);
    }
    if (!t1.dimension_ok) {
      part.passed = false;
      part.failures.push_back(tag + ": center dimension mismatch");
    }
    if (!t1.label_lattice_ok) {
      part.passed = false;
      part.failures.push_back(tag + ": weight labels do not generate L(w)");
    }
    // |L(w)/2Ltilde(w)| = 2^{|I(w)|} with elementary divisors 1 or 2
    IntLattice lt = ltilde(cd, w);
    auto div = t1.L.quotient_divisors(lt.scaled(2));
    std::size_t twos = 0;
    bool ok = true;
    for (const auto& d : div) {
      if (d == 2) ++twos;
      else if (d != 1) ok = false;
    }
    if (!ok || twos != support_I(cd, w).size()) {
      part.passed = false;
      part.failures.push_back(tag + ": L(w)/2Ltilde(w) is not Z_2^{|I|}");
    }
    // N exponent matrices: antisymmetric, and the defining pairing vanishes on
    // I(w) rows/columns
    for (int sign : {+1, -1}) {
      QuantumTorusPresentation N = build_N(cd, sign > 0 ? w.plus : w.minus, sign);
      for (std::size_t a = 0; a < N.size(); ++a)
        for (std::size_t b = 0; b < N.size(); ++b)
          if (N.exponents[a][b] != -N.exponents[b][a]) {
            part.passed = false;
            part.failures.push_back(tag + ": N exponent matrix not antisymmetric");
          }
      const WeylElement& ww = sign > 0 ? w.plus : w.minus;
      auto I = support_sets(cd, ww).I;
      for (int i : I)
        for (int j = 1; j <= cd.rank(); ++j) {
          IVec oi(cd.rank(), 0), oj(cd.rank(), 0);
          oi[i - 1] = 1;
          oj[j - 1] = 1;
          mpq_class e = cd.pairing_fund(mat_apply(ww.matrix, oi), oj) -
                        cd.pairing_fund(oi, mat_apply(ww.matrix, oj));
          if (e != 0) {
            part.passed = false;
            part.failures.push_back(tag + ": d-exponent pairing does not vanish on I(w)");
          }
        }
    }
    // N' antisymmetric
    QuantumTorusPresentation Np = build_Nprime(cd, w);
    for (std::size_t a = 0; a < Np.size(); ++a)
      for (std::size_t b = 0; b < Np.size(); ++b)
        if (Np.exponents[a][b] != -Np.exponents[b][a]) {
          part.passed = false;
          part.failures.push_back(tag + ": N' exponent matrix not antisymmetric");
        }
    // the stabilizer is a function of L(w) alone
    StabilizerResult st = stabilizer(cd, w);
    auto div2 = snf_divisors(t1.L.basis());
    std::vector<long> redone;
    for (const auto& d : div2) redone.push_back(d.get_si());
    if (redone != st.divisors) {
      part.passed = false;
      part.failures.push_back(tag + ": stabilizer not determined by L(w)");
    }
  });
  merge(res, parts);
  // the stabilizer is a function of the lattice L(w) alone: pairs sharing
  // L(w) must share elementary divisors
  std::map<ZMat, std::vector<long>> by_lattice;
  for (const auto& w : pairs) {
    StabilizerResult st = stabilizer(cd, w);
    auto [it, inserted] = by_lattice.try_emplace(st.L.basis(), st.divisors);
    if (!inserted && it->second != st.divisors) {
      res.passed = false;
      res.failures.push_back(cfg.type + ": equal L(w) with different stabilizers");
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CheckResult check_report_determinism(const VerifyConfig& cfg) {
  CheckResult res{"report-determinism", cfg.type};
  Timer timer;
  CartanDatum cd = CartanDatum::parse(cfg.type);
  res.instances = 1;
  std::string a = all_pairs_report_json(cd).dump(1);
  std::string b = all_pairs_report_json(cd).dump(1);
  if (a != b) {
    res.passed = false;
    res.failures.push_back(cfg.type + ": repeated report generation differs");
  }
  res.seconds = timer.seconds();
  return res;
}

} // namespace

std::vector<std::vector<int>> ls_context_words(const CartanDatum& cd) {
  std::vector<std::vector<int>> out;
  if (cd.label() == "A3") {
    for (const auto& w : weyl_group(cd))
      if (w.length() >= 2 && w.length() <= 4) out.push_back(w.canonical_word);
  } else {
    out.push_back(longest_element(cd).canonical_word);
  }
  return out;
}

std::vector<std::string> check_names() {
  return {"root-lattice", "kappa",          "pbw-rank",   "braid",
          "ls-support",   "ls-highest",     "normal-classify", "dij-exponents",
          "separation",   "center",         "center-torus",  "report-determinism"};
}

CheckResult run_check(const std::string& name, const VerifyConfig& cfg) {
  // populate shared caches before any parallel phase
  CartanDatum cd = CartanDatum::parse(cfg.type);
  weyl_group(cd);
  if (name == "root-lattice") return check_root_lattice(cfg);
  if (name == "kappa") return check_kappa(cfg);
  if (name == "pbw-rank") return check_pbw_rank(cfg);
  if (name == "braid") return check_braid(cfg);
  if (name == "ls-support") return check_ls_support(cfg);
  if (name == "ls-highest") return check_ls_highest(cfg);
  if (name == "normal-classify") return check_normal_classify(cfg);
  if (name == "dij-exponents") return check_dij(cfg);
  if (name == "separation") return check_separation(cfg);
  if (name == "center") return check_center(cfg);
  if (name == "center-torus") return check_center_torus(cfg);
  if (name == "report-determinism") return check_report_determinism(cfg);
  throw rootsys_error("unknown check: " + name);
}

std::vector<CheckResult> run_all_checks(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto& name : check_names()) out.push_back(run_check(name, cfg));
  return out;
}

nlohmann::json ledger_json(const std::vector<CheckResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json e;
    e["check"] = r.name;
    e["scope"] = r.scope;
    e["instances"] = r.instances;
    e["passed"] = r.passed;
    e["seconds"] = r.seconds;
    if (!r.failures.empty()) e["failures"] = r.failures;
    if (!r.counterexamples.empty()) e["counterexamples"] = r.counterexamples;
    j.push_back(e);
  }
  return j;
}

std::string ledger_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s] %-20s %-4s %6zu instances  %8.2fs\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.scope.c_str(), r.instances,
                  r.seconds);
    os << buf;
    for (const auto& f : r.failures) os << "    " << f << "\n";
  }
  return os.str();
}

} // namespace qsc
