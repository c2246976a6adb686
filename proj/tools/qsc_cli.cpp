// Command-line front end: reports, theorem verification, and targeted
// computations for quantum Schubert cell algebras at small rank.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/normalia.hpp"
#include "qsc/parallel.hpp"
#include "qsc/spectra.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

namespace {

int write_out(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  os << payload;
  return 0;
}

// degree strings: "a1+2a2" or plain alpha coordinates "1,2"
IVec parse_degree(const std::string& s, int rank) {
  IVec deg(rank, 0);
  if (s.find('a') == std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    std::vector<long> parts;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        parts.push_back(std::stol(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw rootsys_error("bad degree: " + s);
      }
    }
    if ((int)parts.size() != rank)
      throw rootsys_error("degree needs " + std::to_string(rank) + " coordinates");
    for (int i = 0; i < rank; ++i) deg[i] = parts[i];
    return deg;
  }
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto pos = cur.find('a');
    if (pos == std::string::npos) throw rootsys_error("bad degree: " + s);
    std::string coef = cur.substr(0, pos), idx = cur.substr(pos + 1);
    long c = 1;
    if (coef == "-") c = -1;
    else if (!coef.empty()) c = std::stol(coef);
    int i = std::stoi(idx);
    if (i < 1 || i > rank) throw rootsys_error("bad degree index: " + s);
    deg[i - 1] += c;
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '+') {
      flush();
    } else if (ch == '-') {
      flush();
      cur = "-";
    } else if (!isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  flush();
  return deg;
}

WeylPair parse_pair(const CartanDatum& cd, const std::string& wplus,
                    const std::string& wminus) {
  auto wp = word_to_element(cd, parse_word(wplus, cd.rank()));
  auto wm = word_to_element(cd, parse_word(wminus, cd.rank()));
  return WeylPair{wp.element, wm.element};
}

std::string pbw_vector_str(const PBWVector& v) { return v.str(); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Schubert cell workbench"};
  app.require_subcommand(1);

  std::string type = "A2", wplus, wminus, word, format = "json", out, degree, pair, check;
  long height = 6;
  int degree_cap = 12;
  long margin = 2;
  bool all_pairs = false;
  int threads = 1;
  long bound = -1;
  int sign = +1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Cartan type label (A1..A3, B2, B3, C3, G2)");
    sub->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out, "output path (default stdout)");
  };

  CLI::App* rep = app.add_subcommand("report", "stratum/center/stabilizer/leaf/max reports");
  add_common(rep);
  rep->add_option("--wplus", wplus, "reduced word for w_+, e.g. 1,2,1 (empty = identity)");
  rep->add_option("--wminus", wminus, "reduced word for w_-");
  rep->add_flag("--all-pairs", all_pairs, "emit the full (w_+, w_-) table");

  CLI::App* ver = app.add_subcommand("verify", "run the theorem-check suites");
  add_common(ver);
  ver->add_option("--height", height, "graded-piece height cap (default 6)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--degree-cap", degree_cap, "rewriting degree cap (default 12)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--margin", margin, "exponent sweep margin (default 2)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--word", word, "restrict context checks to this reduced word");
  ver->add_option("--check", check, "run a single named check");
  ver->add_option("--threads", threads, "worker threads (default 1 = serial)");

  CLI::App* nor = app.add_subcommand("normal", "normal elements of one degree");
  add_common(nor);
  nor->add_option("--word", word, "reduced word of w")->required();
  nor->add_option("--degree", degree,
                  "Q-degree, e.g. a1+a2 or 1,1 (omit to classify all degrees)");
  nor->add_option("--height", height, "height cap for classification (default 6)")
      ->check(CLI::PositiveNumber);
  nor->add_option("--sign", sign, "+1 for U^w_+, -1 for U^w_-");
  nor->add_option("--bound", bound, "exponent sweep bound (default from the predictions)");
  nor->add_option("--degree-cap", degree_cap, "rewriting degree cap");
  nor->add_option("--margin", margin, "exponent sweep margin");

  CLI::App* lsc = app.add_subcommand("ls", "Levendorskii-Soibelman straightening of one pair");
  add_common(lsc);
  lsc->add_option("--word", word, "reduced word of w")->required();
  lsc->add_option("--pair", pair, "pair i,j with i < j")->required();
  lsc->add_option("--degree-cap", degree_cap, "rewriting degree cap");

  CLI::App* cen = app.add_subcommand("center", "central elements up to a height cap");
  add_common(cen);
  cen->add_option("--word", word, "reduced word of w")->required();
  cen->add_option("--height", height, "height cap (default 6)")
      ->check(CLI::PositiveNumber);
  cen->add_option("--degree-cap", degree_cap, "rewriting degree cap");
  cen->add_option("--sign", sign, "+1 for U^w_+, -1 for U^w_-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    CartanDatum cd = CartanDatum::parse(type);

    if (rep->parsed()) {
      if (all_pairs) {
        std::string payload = format == "json" ? all_pairs_report_json(cd).dump(1) + "\n"
                                               : all_pairs_report_text(cd);
        return write_out(payload, out);
      }
      WeylPair pr = parse_pair(cd, wplus, wminus);
      nlohmann::json j = pair_report_json(cd, pr);
      std::string payload;
      if (format == "json") {
        payload = j.dump(1) + "\n";
      } else {
        std::ostringstream os;
        os << "pair (" << word_str(pr.plus.canonical_word) << " | "
           << word_str(pr.minus.canonical_word) << ") in " << cd.label() << "\n"
           << "  S = " << j["S"].dump() << "  I = " << j["I"].dump() << "\n"
           << "  dim ker(w+ - w-) = " << j["lattices"]["Ltilde"]["rank"] << ", k = "
           << j["leaf"]["k"] << "\n"
           << "  center generators:\n";
        for (const auto& g : j["center_generators"])
          os << "    " << g["label"].get<std::string>() << "\n";
        os << "  stabilizer: " << j["stabilizer"]["description"].get<std::string>() << "\n";
        for (const auto& eq : j["leaf"]["equations"])
          os << "  leaf equation: " << eq.get<std::string>() << "\n";
        payload = os.str();
      }
      return write_out(payload, out);
    }

    if (ver->parsed()) {
      VerifyConfig cfg;
      cfg.type = type;
      cfg.height = height;
      cfg.degree_cap = degree_cap;
      cfg.margin = margin;
      cfg.threads = threads;
      if (!word.empty()) {
        cfg.word = parse_word(word, cd.rank());
        // reject non-reduced words up front (usage error, not a check failure)
        if (!word_to_element(cd, *cfg.word).is_reduced) {
          std::cerr << "error: word " << word << " is not reduced\n";
          return 2;
        }
      }
      std::vector<CheckResult> results;
      if (!check.empty()) results.push_back(run_check(check, cfg));
      else results = run_all_checks(cfg);
      bool all_pass = true;
      for (const auto& r : results) all_pass = all_pass && r.passed;
      std::string payload =
          format == "json" ? ledger_json(results).dump(1) + "\n" : ledger_text(results);
      int rc = write_out(payload, out);
      if (rc != 0) return rc;
      return all_pass ? 0 : 1;
    }

    auto make_ctx = [&]() {
      auto w = parse_word(word, cd.rank());
      if (!word_to_element(cd, w).is_reduced)
        throw rootsys_error("word " + word + " is not reduced");
      auto engine = make_engine(cd, degree_cap);
      return build_context(engine, w, sign);
    };

    if (nor->parsed() && degree.empty()) {
      // no degree given: classify every degree up to the height cap
      PBWContext ctx = make_ctx();
      ClassifyReport rep = classify_normals(ctx, height, margin);
      nlohmann::json j;
      j["datum"] = cd.label();
      j["word"] = word_str(ctx.word);
      j["sign"] = ctx.sign;
      j["height"] = height;
      j["pass"] = rep.pass;
      j["assumption"] = ClassifyReport::assumption();
      nlohmann::json degs = nlohmann::json::array();
      for (const auto& dc : rep.degrees) {
        nlohmann::json dj;
        dj["degree"] = dc.degree;
        dj["found_dim"] = dc.found_dim;
        dj["predicted_multiplicity"] = dc.predicted_multiplicity;
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : dc.findings) {
          nlohmann::json fj;
          fj["exponents"] = f.exponents;
          if (f.predicted_eta) fj["eta"] = *f.predicted_eta;
          nlohmann::json basis = nlohmann::json::array();
          for (const auto& bvec : f.basis) basis.push_back(pbw_vector_json(bvec));
          fj["basis"] = basis;
          fs.push_back(fj);
        }
        dj["findings"] = fs;
        dj["checks"] = {{"dimension", dc.dims_match ? "pass" : "fail"},
                        {"exponent_law", dc.exponents_match ? "pass" : "fail"},
                        {"prime_products", dc.products_match ? "pass" : "fail"}};
        degs.push_back(dj);
      }
      j["degrees"] = degs;
      if (!rep.failures.empty()) j["failures"] = rep.failures;
      std::string payload;
      if (format == "json") {
        payload = j.dump(1) + "\n";
      } else {
        std::ostringstream os;
        os << "normal-element classification, " << cd.label() << " word "
           << word_str(ctx.word) << ", heights <= " << height << ": "
           << (rep.pass ? "all degrees match the predictions" : "MISMATCH") << "\n";
        for (const auto& f : rep.failures) os << "  " << f << "\n";
        payload = os.str();
      }
      int rc = write_out(payload, out);
      if (rc != 0) return rc;
      return rep.pass ? 0 : 1;
    }

    if (nor->parsed()) {
      PBWContext ctx = make_ctx();
      IVec deg = parse_degree(degree, cd.rank());
      for (auto& x : deg) x *= 1;  // degree given for the chosen sign convention
      long b = bound >= 0 ? bound : default_exponent_bound(ctx, deg, margin);
      auto findings = find_normal(ctx, deg, b);
      nlohmann::json j;
      j["datum"] = cd.label();
      j["word"] = word_str(ctx.word);
      j["sign"] = ctx.sign;
      j["degree"] = deg;
      j["bound"] = b;
      nlohmann::json fs = nlohmann::json::array();
      for (const auto& f : findings) {
        nlohmann::json fj;
        fj["exponents"] = f.exponents;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& bvec : f.basis) basis.push_back(pbw_vector_json(bvec));
        fj["basis"] = basis;
        fs.push_back(fj);
      }
      j["findings"] = fs;
      std::string payload;
      if (format == "json") {
        payload = j.dump(1) + "\n";
      } else {
        std::ostringstream os;
        os << "normal elements, " << cd.label() << " word " << word_str(ctx.word)
           << " degree " << degree << " (sweep bound " << b << ")\n";
        if (findings.empty()) os << "  none\n";
        for (const auto& f : findings) {
          os << "  exponents (";
          for (std::size_t k = 0; k < f.exponents.size(); ++k)
            os << (k ? "," : "") << f.exponents[k];
          os << "):\n";
          for (const auto& bvec : f.basis) os << "    " << pbw_vector_str(bvec) << "\n";
        }
        payload = os.str();
      }
      return write_out(payload, out);
    }

    if (lsc->parsed()) {
      PBWContext ctx = make_ctx();
      auto pr = parse_word(pair, ctx.length());
      if (pr.size() != 2 || pr[0] >= pr[1])
        throw rootsys_error("--pair needs i,j with i < j");
      PBWVector rel = ls_relation(ctx, pr[0], pr[1]);
      nlohmann::json j;
      j["datum"] = cd.label();
      j["word"] = word_str(ctx.word);
      j["pair"] = {pr[0], pr[1]};
      j["q_exponent"] = ctx.beta_pairing(pr[0], pr[1]);
      j["relation"] = pbw_vector_json(rel);
      j["relation_text"] = pbw_vector_str(rel);
      std::string payload;
      if (format == "json") {
        payload = j.dump(1) + "\n";
      } else {
        std::ostringstream os;
        os << "X_b" << pr[0] << "*X_b" << pr[1] << " - q^" << ctx.beta_pairing(pr[0], pr[1])
           << "*X_b" << pr[1] << "*X_b" << pr[0] << " = " << pbw_vector_str(rel) << "\n";
        payload = os.str();
      }
      return write_out(payload, out);
    }

    if (cen->parsed()) {
      PBWContext ctx = make_ctx();
      CentralReport rep2 = find_central(ctx, height);
      nlohmann::json j;
      j["datum"] = cd.label();
      j["word"] = word_str(ctx.word);
      j["height"] = height;
      j["pass"] = rep2.pass;
      nlohmann::json degs = nlohmann::json::array();
      bool any = false;
      for (const auto& d : rep2.degrees) {
        bool zero_degree = std::all_of(d.degree.begin(), d.degree.end(),
                                       [](long x) { return x == 0; });
        if (d.found_dim == 0 || zero_degree) continue;  // scalars are not reported
        any = true;
        degs.push_back({{"degree", d.degree}, {"dim", d.found_dim}});
      }
      j["central_degrees"] = degs;
      j["trivial_up_to_height"] = !any;
      std::string payload;
      if (format == "json") {
        payload = j.dump(1) + "\n";
      } else {
        std::ostringstream os;
        if (!any) {
          os << "center of U^w (" << cd.label() << ", word " << word_str(ctx.word)
             << "): trivial up to height " << height << "\n";
        } else {
          os << "central degrees up to height " << height << ":\n";
          for (const auto& d : degs) os << "  " << d.dump() << "\n";
        }
        payload = os.str();
      }
      return write_out(payload, out);
    }
  } catch (const cap_overflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rootsys_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const arithmetic_error& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
