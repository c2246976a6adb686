#include "qsc/ncengine.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace qsc {

NCPoly NCPoly::scalar(int /*r*/, const RatFunc& c) {
  NCPoly p;
  p.add(Mono{{}, {}}, c);
  return p;
}

std::size_t NCPoly::max_word_length() const {
  std::size_t m = 0;
  for (const auto& [mono, c] : t_) m = std::max(m, mono.word.size());
  return m;
}

void NCPoly::add(const Mono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  Mono key = m;
  if (key.kexp.empty() || std::all_of(key.kexp.begin(), key.kexp.end(),
                                      [](long x) { return x == 0; }))
    key.kexp.clear();
  auto [it, inserted] = t_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r(*this);
  for (const auto& [m, c] : o.t_) r.add(m, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r(*this);
  for (const auto& [m, c] : o.t_) r.add(m, -c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
  NCPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : t_) r.t_.emplace(m, x * c);
  return r;
}

const std::pair<const Mono, RatFunc>& NCPoly::lead() const {
  assert(!t_.empty());
  return *t_.rbegin();
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

Engine::Engine(const CartanDatum& cd, int degree_cap) : cd_(cd), cap_(degree_cap) {
  const int r = cd_.rank();
  rules_by_letter_.assign(2 * r, {});

  // E_i F_j - F_j E_i - delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}) = 0
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      NCPoly rel;
      rel.add(Mono{{letter_E(i, r), letter_F(j, r)}, {}}, RatFunc(1));
      rel.add(Mono{{letter_F(j, r), letter_E(i, r)}, {}}, RatFunc(-1));
      if (i == j) {
        LaurentPoly den = LaurentPoly::q_power(cd_.d(i)) - LaurentPoly::q_power(-cd_.d(i));
        RatFunc c(LaurentPoly(1), den);
        IVec kp(r, 0), km(r, 0);
        kp[i] = 1;
        km[i] = -1;
        rel.add(Mono{{}, kp}, -c);
        rel.add(Mono{{}, km}, c);
      }
      add_rule(rel);
    }

  // quantum Serre relations for both signs
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      long m = 1 - cd_.c(i, j);
      for (int sign = 0; sign < 2; ++sign) {
        NCPoly rel;
        for (long k = 0; k <= m; ++k) {
          RatFunc c{qbinom(m, k, cd_.d(i))};
          if (k % 2) c = -c;
          Word w;
          std::uint8_t xi = sign ? letter_F(i, r) : letter_E(i, r);
          std::uint8_t xj = sign ? letter_F(j, r) : letter_E(j, r);
          for (long t = 0; t < k; ++t) w.push_back(xi);
          w.push_back(xj);
          for (long t = 0; t < m - k; ++t) w.push_back(xi);
          rel.add(Mono{w, {}}, c);
        }
        add_rule(rel);
      }
    }

  complete();
}

long Engine::k_shuffle_exp(const IVec& kexp, const IVec& qdeg) const {
  if (kexp.empty()) return 0;
  long e = 0;
  for (int i = 0; i < cd_.rank(); ++i) {
    if (kexp[i] == 0) continue;
    for (int j = 0; j < cd_.rank(); ++j) e += kexp[i] * cd_.root_pairing(i, j) * qdeg[j];
  }
  return e;
}

IVec Engine::q_degree(const Mono& m) const {
  IVec d(cd_.rank(), 0);
  for (std::uint8_t l : m.word) {
    int idx = letter_index(l, cd_.rank());
    d[idx] += is_E(l, cd_.rank()) ? 1 : -1;
  }
  return d;
}

std::optional<IVec> Engine::q_degree(const NCPoly& x) const {
  std::optional<IVec> deg;
  for (const auto& [m, c] : x.terms()) {
    IVec d = q_degree(m);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  if (!deg) deg = IVec(cd_.rank(), 0);
  return deg;
}

NCPoly Engine::gen_E(int i) const {
  NCPoly p;
  p.add(Mono{{letter_E(i - 1, cd_.rank())}, {}}, RatFunc(1));
  return p;
}

NCPoly Engine::gen_F(int i) const {
  NCPoly p;
  p.add(Mono{{letter_F(i - 1, cd_.rank())}, {}}, RatFunc(1));
  return p;
}

NCPoly Engine::gen_K(int i, int exp) const {
  NCPoly p;
  IVec k(cd_.rank(), 0);
  k[i - 1] = exp;
  p.add(Mono{{}, k}, RatFunc(1));
  return p;
}

NCPoly Engine::mono_mul(const Mono& a, const RatFunc& ca, const Mono& b,
                        const RatFunc& cb) const {
  Mono m;
  m.word = a.word;
  m.word.insert(m.word.end(), b.word.begin(), b.word.end());
  long e = k_shuffle_exp(a.kexp, q_degree(b));
  if (!a.kexp.empty() || !b.kexp.empty()) {
    m.kexp.assign(cd_.rank(), 0);
    for (int i = 0; i < cd_.rank(); ++i) {
      if (!a.kexp.empty()) m.kexp[i] += a.kexp[i];
      if (!b.kexp.empty()) m.kexp[i] += b.kexp[i];
    }
  }
  RatFunc c = ca * cb;
  if (e != 0) c *= RatFunc::q_power(e);
  NCPoly out;
  out.add(m, c);
  return out;
}

NCPoly Engine::mul(const NCPoly& a, const NCPoly& b) const {
  NCPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out = out + mono_mul(ma, ca, mb, cb);
  return out;
}

NCPoly Engine::mul_chain(const std::vector<NCPoly>& factors) const {
  NCPoly acc = NCPoly::scalar(cd_.rank(), RatFunc(1));
  for (const NCPoly& f : factors) acc = mul(acc, f);
  return acc;
}

NCPoly Engine::reduce(const NCPoly& x) const {
  NCPoly::Terms work(x.terms().begin(), x.terms().end());
  auto absorb = [&](const Mono& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = work.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  NCPoly out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Mono mono = top->first;
    const RatFunc coeff = top->second;
    work.erase(top);
    // leftmost match of any rule
    int pos = -1, rule_id = -1;
    const Word& w = mono.word;
    for (std::size_t p = 0; p < w.size() && pos < 0; ++p) {
      for (int id : rules_by_letter_[w[p]]) {
        const Word& lhs = rules_[id].lhs;
        if (p + lhs.size() > w.size()) continue;
        if (std::equal(lhs.begin(), lhs.end(), w.begin() + p)) {
          pos = (int)p;
          rule_id = id;
          break;
        }
      }
    }
    if (pos < 0) {
      out.add(mono, coeff);
      continue;
    }
    const Rule& rule = rules_[rule_id];
    Mono prefix{Word(w.begin(), w.begin() + pos), {}};
    Mono suffix{Word(w.begin() + pos + rule.lhs.size(), w.end()), mono.kexp};
    NCPoly repl = mono_mul(prefix, coeff, Mono{{}, {}}, RatFunc(1));
    repl = mul(repl, rule.rhs);
    NCPoly suf;
    suf.add(suffix, RatFunc(1));
    repl = mul(repl, suf);
    for (const auto& [m, c] : repl.terms()) absorb(m, c);
  }
  return out;
}

void Engine::add_rule(const NCPoly& relation) {
  NCPoly rel = reduce(relation);
  if (rel.is_zero()) return;
  const auto& [lead_mono, lead_coeff] = rel.lead();
  // move the K part of the leading monomial to the right of the relation
  if (!lead_mono.kexp.empty()) {
    NCPoly shifted;
    for (const auto& [m, c] : rel.terms()) {
      Mono mm = m;
      if (mm.kexp.empty()) mm.kexp.assign(cd_.rank(), 0);
      for (int i = 0; i < cd_.rank(); ++i) mm.kexp[i] -= lead_mono.kexp[i];
      shifted.add(mm, c);
    }
    rel = shifted;
  }
  const auto& [lm, lc] = rel.lead();
  assert(lm.kexp.empty());
  Rule rule;
  rule.lhs = lm.word;
  NCPoly rest = rel.scaled(lc.inv());
  NCPoly lead_only;
  lead_only.add(lm, RatFunc(1));
  rule.rhs = lead_only - rest;
  for (const auto& [m, c] : rule.rhs.terms())
    if (m.word == rule.lhs)
      throw arithmetic_error("non-orientable relation in rewriting system");
  rules_by_letter_[rule.lhs.front()].push_back((int)rules_.size());
  rules_.push_back(std::move(rule));
}

void Engine::complete() {
  // Knuth--Bendix on critical pairs with overlap words of length <= cap
  std::deque<std::pair<int, int>> queue;
  auto enqueue_with_all = [&](int id) {
    for (int j = 0; j <= id; ++j) queue.emplace_back(j, id);
  };
  for (int id = 0; id < (int)rules_.size(); ++id) enqueue_with_all(id);

  auto spolys_of_pair = [&](int a, int b, std::vector<NCPoly>& out) {
    // proper overlaps: suffix of one lhs = prefix of the other
    auto overlaps = [&](int i1, int i2) {
      const Word& l1 = rules_[i1].lhs;
      const Word& l2 = rules_[i2].lhs;
      for (std::size_t t = 1; t < std::min(l1.size(), l2.size()); ++t) {
        if (!std::equal(l2.begin(), l2.begin() + t, l1.end() - t)) continue;
        std::size_t overlap_len = l1.size() + l2.size() - t;
        if ((int)overlap_len > cap_) {
          globally_confluent_ = false;
          continue;
        }
        Mono head{Word(l1.begin(), l1.end() - t), {}};
        Mono tail{Word(l2.begin() + t, l2.end()), {}};
        NCPoly tail_p, head_p;
        tail_p.add(tail, RatFunc(1));
        head_p.add(head, RatFunc(1));
        out.push_back(mul(rules_[i1].rhs, tail_p) - mul(head_p, rules_[i2].rhs));
      }
    };
    overlaps(a, b);
    if (a != b) overlaps(b, a);
    // containments: lhs of one inside lhs of the other
    auto contains = [&](int big, int small) {
      const Word& lb2 = rules_[big].lhs;
      const Word& ls = rules_[small].lhs;
      if (ls.size() >= lb2.size()) return;
      for (std::size_t p = 0; p + ls.size() <= lb2.size(); ++p) {
        if (!std::equal(ls.begin(), ls.end(), lb2.begin() + p)) continue;
        Mono prefix{Word(lb2.begin(), lb2.begin() + p), {}};
        Mono suffix{Word(lb2.begin() + p + ls.size(), lb2.end()), {}};
        NCPoly pre, suf;
        pre.add(prefix, RatFunc(1));
        suf.add(suffix, RatFunc(1));
        out.push_back(rules_[big].rhs - mul(mul(pre, rules_[small].rhs), suf));
      }
    };
    contains(a, b);
    contains(b, a);
  };

  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    std::vector<NCPoly> spolys;
    spolys_of_pair(a, b, spolys);
    for (const NCPoly& s : spolys) {
      NCPoly nf = reduce(s);
      if (nf.is_zero()) continue;
      int new_id = (int)rules_.size();
      add_rule(nf);
      if ((int)rules_.size() > new_id) {
        if (rules_.size() > 20000)
          throw arithmetic_error("rewriting system completion exceeded rule budget");
        enqueue_with_all(new_id);
      }
    }
  }

  // final confluence audit against the finished rule set
  for (int a = 0; a < (int)rules_.size(); ++a)
    for (int b = a; b < (int)rules_.size(); ++b) {
      std::vector<NCPoly> spolys;
      spolys_of_pair(a, b, spolys);
      for (const NCPoly& s : spolys)
        if (!reduce(s).is_zero())
          throw arithmetic_error("rewriting system not confluent after completion");
    }
}

NCPoly Engine::normal_form(const NCPoly& x) const {
  if ((int)x.max_word_length() > cap_)
    throw cap_overflow("normal_form: degree cap " + std::to_string(cap_) +
                       " exceeded (term of degree " +
                       std::to_string(x.max_word_length()) + "); raise the cap");
  return reduce(x);
}

NCPoly Engine::letter_image_T(int i0, std::uint8_t letter) const {
  const int r = cd_.rank();
  int j0 = letter_index(letter, r);
  NCPoly out;
  if (is_E(letter, r)) {
    if (j0 == i0) {
      IVec k(r, 0);
      k[i0] = 1;
      out.add(Mono{{letter_F(i0, r)}, k}, RatFunc(-1));
      return out;
    }
    long m = -cd_.c(i0, j0);
    for (long k = 0; k <= m; ++k) {
      RatFunc c(LaurentPoly(1), qfact(m - k, cd_.d(i0)) * qfact(k, cd_.d(i0)));
      c *= RatFunc(LaurentPoly::q_power(-k * cd_.d(i0), Rat(k % 2 ? -1 : 1)));
      Word w;
      for (long t = 0; t < m - k; ++t) w.push_back(letter_E(i0, r));
      w.push_back(letter_E(j0, r));
      for (long t = 0; t < k; ++t) w.push_back(letter_E(i0, r));
      out.add(Mono{w, {}}, c);
    }
    return out;
  }
  if (j0 == i0) {
    IVec k(r, 0);
    k[i0] = -1;
    out.add(Mono{{letter_E(i0, r)}, k},
            RatFunc(LaurentPoly::q_power(-2 * cd_.d(i0), Rat(-1))));
    return out;
  }
  long m = -cd_.c(i0, j0);
  for (long k = 0; k <= m; ++k) {
    RatFunc c(LaurentPoly(1), qfact(k, cd_.d(i0)) * qfact(m - k, cd_.d(i0)));
    c *= RatFunc(LaurentPoly::q_power(k * cd_.d(i0), Rat(k % 2 ? -1 : 1)));
    Word w;
    for (long t = 0; t < k; ++t) w.push_back(letter_F(i0, r));
    w.push_back(letter_F(j0, r));
    for (long t = 0; t < m - k; ++t) w.push_back(letter_F(i0, r));
    out.add(Mono{w, {}}, c);
  }
  return out;
}

NCPoly Engine::braid_T(int i, const NCPoly& x) const {
  const int r = cd_.rank();
  int i0 = i - 1;
  if (i0 < 0 || i0 >= r) throw rootsys_error("braid index out of range");
  NCPoly total;
  for (const auto& [mono, coeff] : x.terms()) {
    NCPoly acc = NCPoly::scalar(r, coeff);
    for (std::uint8_t l : mono.word) {
      acc = mul(acc, letter_image_T(i0, l));
      if ((int)acc.max_word_length() > cap_ - 4) acc = reduce(acc);
    }
    if (!mono.kexp.empty()) {
      IVec k = mono.kexp;
      long s = 0;
      for (int j = 0; j < r; ++j) s += cd_.c(i0, j) * mono.kexp[j];
      k[i0] -= s;
      NCPoly kimg;
      kimg.add(Mono{{}, k}, RatFunc(1));
      acc = mul(acc, kimg);
    }
    total = total + acc;
  }
  return normal_form(total);
}

NCPoly Engine::braid_word(const std::vector<int>& word, const NCPoly& x) const {
  NCPoly acc = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = braid_T(*it, acc);
  return acc;
}

std::string Engine::render(const NCPoly& x) const {
  if (x.is_zero()) return "0";
  const int r = cd_.rank();
  std::ostringstream os;
  bool first = true;
  // print largest terms first
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const Mono& m = it->first;
    RatFunc c = it->second;
    // if the word is an F block followed by an E block, display the K part in
    // the middle, adjusting the coefficient by the exact q-power shuffle
    std::size_t split = m.word.size();
    bool split_ok = true;
    bool seen_e = false;
    for (std::size_t p = 0; p < m.word.size(); ++p) {
      if (is_E(m.word[p], r)) {
        if (!seen_e) split = p;
        seen_e = true;
      } else if (seen_e) {
        split_ok = false;
        break;
      }
    }
    std::vector<std::string> parts;
    auto letter_str = [&](std::uint8_t l) {
      return std::string(is_E(l, r) ? "E" : "F") + std::to_string(letter_index(l, r) + 1);
    };
    auto k_str = [&](const IVec& k) {
      for (int i = 0; i < r; ++i) {
        if (k.empty() || k[i] == 0) continue;
        std::string s = "K" + std::to_string(i + 1);
        if (k[i] != 1) s += "^" + std::to_string(k[i]);
        parts.push_back(s);
      }
    };
    if (split_ok && !m.kexp.empty()) {
      IVec edeg(r, 0);
      for (std::size_t p = split; p < m.word.size(); ++p) edeg[letter_index(m.word[p], r)]++;
      c *= RatFunc::q_power(-k_shuffle_exp(m.kexp, edeg));
      for (std::size_t p = 0; p < split; ++p) parts.push_back(letter_str(m.word[p]));
      k_str(m.kexp);
      for (std::size_t p = split; p < m.word.size(); ++p) parts.push_back(letter_str(m.word[p]));
    } else {
      for (std::uint8_t l : m.word) parts.push_back(letter_str(l));
      k_str(m.kexp);
    }
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) body += "*";
      body += parts[i];
    }
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (body.empty()) {
      os << cs;
    } else if (c.is_one()) {
      os << body;
    } else {
      bool simple = c.is_polynomial() && c.num().is_monomial();
      if (simple) os << cs << "*" << body;
      else os << "(" << cs << ")*" << body;
    }
  }
  return os.str();
}

std::shared_ptr<const Engine> make_engine(const CartanDatum& cd, int degree_cap) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const Engine>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(cd.label(), degree_cap);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<const Engine>(cd, degree_cap);
  cache.emplace(key, e);
  return e;
}

// ---------------------------------------------------------------------------
// PBW contexts
// ---------------------------------------------------------------------------

IVec PBWContext::degree_of(const std::vector<int>& n) const {
  IVec d(datum().rank(), 0);
  for (int k = 0; k < length(); ++k)
    for (int t = 0; t < datum().rank(); ++t) d[t] += sign * n[k] * betas[k][t];
  return d;
}

long PBWContext::height_of(const std::vector<int>& n) const {
  long h = 0;
  for (int k = 0; k < length(); ++k) h += n[k] * datum().height(betas[k]);
  return h;
}

long PBWContext::beta_pairing(int i, int j) const {
  const CartanDatum& cd = datum();
  long s = 0;
  for (int a = 0; a < cd.rank(); ++a)
    for (int b = 0; b < cd.rank(); ++b)
      s += betas[i - 1][a] * cd.root_pairing(a, b) * betas[j - 1][b];
  return s;
}

struct PieceCache {
  std::mutex mu;
  std::map<IVec, std::unique_ptr<const GradedPiece>> map;
};

const GradedPiece& graded_piece(const PBWContext& ctx, const IVec& gamma) {
  PieceCache& cache = *ctx.pieces;
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(gamma);
    if (it != cache.map.end()) return *it->second;
  }
  auto built = std::make_unique<const GradedPiece>(ctx, gamma);
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.map.try_emplace(gamma, std::move(built));
  return *it->second;
}

PBWContext build_context(std::shared_ptr<const Engine> engine,
                         const std::vector<int>& reduced_word, int sign) {
  PBWContext ctx;
  ctx.pieces = std::make_shared<PieceCache>();
  ctx.engine = std::move(engine);
  ctx.word = reduced_word;
  ctx.sign = sign;
  const CartanDatum& cd = ctx.engine->datum();
  WordResult wr = word_to_element(cd, reduced_word);
  if (!wr.is_reduced) throw rootsys_error("build_context: word is not reduced");
  ctx.w = wr.element;
  ctx.betas = inversion_roots(cd, reduced_word);
  for (std::size_t k = 0; k < reduced_word.size(); ++k) {
    int i = reduced_word[k];
    NCPoly gen = sign > 0 ? ctx.engine->gen_E(i) : ctx.engine->gen_F(i);
    std::vector<int> prefix(reduced_word.begin(), reduced_word.begin() + k);
    NCPoly rv = ctx.engine->braid_word(prefix, gen);
    // each root vector is homogeneous of degree sign*beta_k and lies in U_sign
    auto deg = ctx.engine->q_degree(rv);
    IVec expected(cd.rank());
    for (int t = 0; t < cd.rank(); ++t) expected[t] = sign * ctx.betas[k][t];
    if (!deg || *deg != expected)
      throw arithmetic_error("root vector has wrong degree");
    for (const auto& [m, c] : rv.terms()) {
      if (!m.kexp.empty()) throw arithmetic_error("root vector leaves U_+/U_-");
      for (std::uint8_t l : m.word)
        if (is_E(l, cd.rank()) != (sign > 0))
          throw arithmetic_error("root vector leaves U_+/U_-");
    }
    ctx.root_vectors.push_back(std::move(rv));
  }
  return ctx;
}

bool multideg_less(const std::vector<int>& a, const std::vector<int>& b) {
  assert(a.size() == b.size());
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

std::pair<std::vector<int>, RatFunc> highest_term(const PBWVector& v) {
  assert(!v.is_zero());
  auto best = v.coords.begin();
  for (auto it = std::next(v.coords.begin()); it != v.coords.end(); ++it)
    if (multideg_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::vector<std::vector<int>> multidegrees_of(const PBWContext& ctx, const IVec& gamma) {
  const int l = ctx.length();
  const int r = ctx.datum().rank();
  assert((int)gamma.size() == r);
  IVec target(r);
  for (int t = 0; t < r; ++t) {
    target[t] = ctx.sign * gamma[t];
    if (target[t] < 0) return {};
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(l, 0);
  std::function<void(int, IVec)> rec2 = [&](int k, IVec rem) {
    if (k == l) {
      if (std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; }))
        out.push_back(cur);
      return;
    }
    long mx = -1;
    for (int t = 0; t < r; ++t) {
      if (ctx.betas[k][t] == 0) continue;
      long m = rem[t] / ctx.betas[k][t];
      mx = mx < 0 ? m : std::min(mx, m);
    }
    if (mx < 0) mx = 0;
    for (long n = 0; n <= mx; ++n) {
      cur[k] = (int)n;
      IVec rem2 = rem;
      bool ok = true;
      for (int t = 0; t < r; ++t) {
        rem2[t] -= n * ctx.betas[k][t];
        if (rem2[t] < 0) ok = false;
      }
      if (ok) rec2(k + 1, rem2);
    }
    cur[k] = 0;
  };
  rec2(0, target);
  return out;
}

std::vector<IVec> graded_degrees(const PBWContext& ctx, long height_cap) {
  std::set<IVec> degs;
  const int l = ctx.length();
  std::vector<int> cur(l, 0);
  std::function<void(int, long)> rec = [&](int k, long h) {
    if (k == l) {
      std::vector<int> n = cur;
      degs.insert(ctx.degree_of(n));
      return;
    }
    long hk = ctx.datum().height(ctx.betas[k]);
    for (long n = 0; h + n * hk <= height_cap; ++n) {
      cur[k] = (int)n;
      rec(k + 1, h + n * hk);
    }
    cur[k] = 0;
  };
  rec(0, 0);
  return std::vector<IVec>(degs.begin(), degs.end());
}

NCPoly pbw_monomial(const PBWContext& ctx, const std::vector<int>& n) {
  assert((int)n.size() == ctx.length());
  assert(std::all_of(n.begin(), n.end(), [](int x) { return x >= 0; }));
  const Engine& e = *ctx.engine;
  NCPoly acc = NCPoly::scalar(ctx.datum().rank(), RatFunc(1));
  for (int k = ctx.length() - 1; k >= 0; --k)
    for (int t = 0; t < n[k]; ++t) {
      acc = e.mul(acc, ctx.root_vectors[k]);
      if ((int)acc.max_word_length() > e.cap() - 4) acc = e.normal_form(acc);
    }
  return e.normal_form(acc);
}

GradedPiece::GradedPiece(const PBWContext& ctx, const IVec& gamma)
    : ctx_(&ctx), gamma_(gamma) {
  multidegs_ = multidegrees_of(ctx, gamma);
  nfs_.reserve(multidegs_.size());
  for (const auto& n : multidegs_) nfs_.push_back(pbw_monomial(ctx, n));
  for (const NCPoly& p : nfs_)
    for (const auto& [m, c] : p.terms()) mono_index_.try_emplace(m, mono_index_.size());
  mat_ = QMatrix(mono_index_.size(), multidegs_.size());
  for (std::size_t col = 0; col < nfs_.size(); ++col)
    for (const auto& [m, c] : nfs_[col].terms()) mat_.at(mono_index_.at(m), col) = c;
}

std::size_t GradedPiece::monomial_rank() const { return rank_of(mat_); }

PBWVector GradedPiece::express(const NCPoly& x) const {
  PBWVector out;
  out.ctx = ctx_;
  if (x.is_zero()) return out;
  std::vector<RatFunc> rhs(mono_index_.size());
  for (const auto& [m, c] : x.terms()) {
    auto it = mono_index_.find(m);
    if (it == mono_index_.end()) throw not_in_uw("element not in U^w");
    rhs[it->second] = c;
  }
  LinearSolveResult sol = solve_linear(mat_, rhs);
  if (!sol.consistent) throw not_in_uw("element not in U^w");
  for (std::size_t i = 0; i < multidegs_.size(); ++i)
    if (!sol.solution[i].is_zero()) out.coords.emplace(multidegs_[i], sol.solution[i]);
  return out;
}

PBWVector express_in_pbw(const PBWContext& ctx, const NCPoly& x) {
  const Engine& e = *ctx.engine;
  NCPoly nf = e.normal_form(x);
  PBWVector out;
  out.ctx = &ctx;
  // group terms by Q-degree and solve per graded component
  std::map<IVec, NCPoly> by_degree;
  for (const auto& [m, c] : nf.terms()) by_degree[e.q_degree(m)].add(m, c);
  for (const auto& [deg, part] : by_degree) {
    const GradedPiece& piece = graded_piece(ctx, deg);
    PBWVector v = piece.express(part);
    for (const auto& [n, c] : v.coords) out.coords.emplace(n, c);
  }
  return out;
}

NCPoly realize(const PBWContext& ctx, const PBWVector& v) {
  NCPoly acc;
  for (const auto& [n, c] : v.coords) acc = acc + pbw_monomial(ctx, n).scaled(c);
  return acc;
}

PBWVector pbw_multiply(const PBWContext& ctx, const PBWVector& u, const PBWVector& v) {
  const Engine& e = *ctx.engine;
  NCPoly prod = e.mul(realize(ctx, u), realize(ctx, v));
  return express_in_pbw(ctx, prod);
}

PBWVector ls_relation(const PBWContext& ctx, int i, int j) {
  if (!(1 <= i && i < j && j <= ctx.length()))
    throw rootsys_error("ls_relation: need 1 <= i < j <= l");
  const Engine& e = *ctx.engine;
  const NCPoly& xi = ctx.root_vectors[i - 1];
  const NCPoly& xj = ctx.root_vectors[j - 1];
  long pair_exp = ctx.beta_pairing(i, j);
  NCPoly lhs = e.mul(xi, xj) - e.mul(xj, xi).scaled(RatFunc::q_power(pair_exp));
  return express_in_pbw(ctx, lhs);
}

std::string PBWVector::str() const {
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : coords) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*X^(";
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (k) os << ",";
      os << n[k];
    }
    os << ")";
  }
  return os.str();
}

} // namespace qsc
