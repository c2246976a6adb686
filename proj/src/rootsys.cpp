#include "qsc/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qsc {

CartanDatum::CartanDatum(Series s, int rank) : series_(s), rank_(rank) {
  if (rank < 1) throw rootsys_error("rank must be positive");
  auto chain = [&](long v) {
    cartan_.assign(rank, IVec(rank, 0));
    for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
    for (int i = 0; i + 1 < rank; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = v;
  };
  char letter = '?';
  switch (s) {
    case Series::A:
      letter = 'A';
      chain(-1);
      d_.assign(rank, 1);
      break;
    case Series::B:
      letter = 'B';
      if (rank < 2) throw rootsys_error("B requires rank >= 2");
      chain(-1);
      cartan_[rank - 1][rank - 2] = -2;  // alpha_r short
      d_.assign(rank, 2);
      d_[rank - 1] = 1;
      break;
    case Series::C:
      letter = 'C';
      if (rank < 2) throw rootsys_error("C requires rank >= 2");
      chain(-1);
      cartan_[rank - 2][rank - 1] = -2;  // alpha_r long
      d_.assign(rank, 1);
      d_[rank - 1] = 2;
      break;
    case Series::D:
      letter = 'D';
      if (rank < 3) throw rootsys_error("D requires rank >= 3");
      cartan_.assign(rank, IVec(rank, 0));
      for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
      for (int i = 0; i + 1 < rank - 1; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
      cartan_[rank - 3][rank - 1] = cartan_[rank - 1][rank - 3] = -1;
      d_.assign(rank, 1);
      break;
    case Series::G:
      letter = 'G';
      if (rank != 2) throw rootsys_error("G requires rank 2");
      cartan_ = {{2, -3}, {-1, 2}};  // alpha_1 short, alpha_2 long
      d_ = {1, 3};
      break;
  }
  label_ = std::string(1, letter) + std::to_string(rank);
  // sanity: d_i c_ij symmetric, gcd(d) = 1
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
        throw rootsys_error("Cartan datum not symmetrizable");
  long g = 0;
  for (long di : d_) g = std::gcd(g, di);
  if (g != 1) throw rootsys_error("symmetrizers not relatively prime");
  build_positive_roots();
}

CartanDatum CartanDatum::parse(const std::string& label) {
  if (label.size() < 2) throw rootsys_error("bad type label: " + label);
  Series s;
  switch (label[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'G': s = Series::G; break;
    default: throw rootsys_error("bad type label: " + label);
  }
  int r = 0;
  try {
    std::size_t pos = 0;
    r = std::stoi(label.substr(1), &pos);
    if (pos + 1 != label.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw rootsys_error("bad type label: " + label);
  }
  return CartanDatum(s, r);
}

IVec CartanDatum::alpha_to_fund(const IVec& a) const {
  assert((int)a.size() == rank_);
  IVec n(rank_, 0);
  // alpha_j = sum_i c_ij omega_i
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) n[i] += cartan_[i][j] * a[j];
  return n;
}

std::vector<mpq_class> CartanDatum::fund_to_alpha_rat(const IVec& n) const {
  // solve C a = n exactly
  int r = rank_;
  std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = cartan_[i][j];
    m[i][r] = n[i];
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int i = col; i < r; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    assert(piv >= 0);  // Cartan matrices of finite type are invertible
    std::swap(m[col], m[piv]);
    mpq_class inv = 1 / m[col][col];
    for (int j = col; j <= r; ++j) m[col][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == col || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (int j = col; j <= r; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<mpq_class> a(r);
  for (int i = 0; i < r; ++i) a[i] = m[i][r];
  return a;
}

IVec CartanDatum::fund_to_alpha(const IVec& n) const {
  auto a = fund_to_alpha_rat(n);
  IVec out(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (a[i].get_den() != 1) throw rootsys_error("weight is not in the root lattice");
    out[i] = a[i].get_num().get_si();
  }
  return out;
}

mpq_class CartanDatum::pairing_fund(const IVec& n1, const IVec& n2) const {
  // <lambda, mu> = sum_i d_i n1_i a_i where mu = sum a_i alpha_i
  auto a = fund_to_alpha_rat(n2);
  mpq_class s = 0;
  for (int i = 0; i < rank_; ++i) s += mpq_class(d_[i] * n1[i]) * a[i];
  return s;
}

long CartanDatum::pairing_fund_alpha(const IVec& n, const IVec& a) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += d_[i] * n[i] * a[i];
  return s;
}

long CartanDatum::height(const IVec& a) const {
  long h = 0;
  for (long x : a) h += x;
  return h;
}

void CartanDatum::build_positive_roots() {
  // closure of the simple roots under the simple reflections
  std::set<IVec> pos;
  std::vector<IVec> todo;
  for (int i = 0; i < rank_; ++i) {
    IVec a(rank_, 0);
    a[i] = 1;
    pos.insert(a);
    todo.push_back(a);
  }
  auto reflect = [&](const IVec& a, int i) {
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i,
    // <beta, alpha_i^vee> = sum_j a_j c_ij
    long p = 0;
    for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * a[j];
    IVec b = a;
    b[i] -= p;
    return b;
  };
  while (!todo.empty()) {
    IVec a = todo.back();
    todo.pop_back();
    for (int i = 0; i < rank_; ++i) {
      IVec b = reflect(a, i);
      bool positive = std::all_of(b.begin(), b.end(), [](long x) { return x >= 0; });
      if (positive && pos.insert(b).second) todo.push_back(b);
    }
  }
  pos_roots_.assign(pos.begin(), pos.end());
  std::sort(pos_roots_.begin(), pos_roots_.end(), [&](const IVec& x, const IVec& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
}

bool CartanDatum::is_positive_root(const IVec& a) const {
  return std::binary_search(pos_roots_.begin(), pos_roots_.end(), a,
                            [&](const IVec& x, const IVec& y) {
                              long hx = height(x), hy = height(y);
                              if (hx != hy) return hx < hy;
                              return x < y;
                            });
}

IVec mat_apply(const IMat& m, const IVec& v) {
  IVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  IMat c(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

static IMat identity_mat(int r) {
  IMat m(r, IVec(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

static IMat reflection_matrix(const CartanDatum& cd, int i0) {
  int r = cd.rank();
  IMat m = identity_mat(r);
  // s_i(lambda): n -> n - n_i * (fund coords of alpha_i)
  for (int k = 0; k < r; ++k) m[k][i0] -= cd.c(k, i0);
  return m;
}

WeylElement identity_element(const CartanDatum& cd) {
  return WeylElement{identity_mat(cd.rank()), {}};
}

WeylElement simple_reflection(const CartanDatum& cd, int i) {
  if (i < 1 || i > cd.rank()) throw rootsys_error("reflection index out of range");
  return WeylElement{reflection_matrix(cd, i - 1), {i}};
}

IVec apply_to_root(const CartanDatum& cd, const WeylElement& w, const IVec& a) {
  return cd.fund_to_alpha(mat_apply(w.matrix, cd.alpha_to_fund(a)));
}

int inversion_count(const CartanDatum& cd, const WeylElement& w) {
  // #{beta in Delta+ : w^{-1}(beta) in Delta-} = #{beta > 0 : w(beta) < 0}
  // (both equal l(w); we use the latter)
  int cnt = 0;
  for (const IVec& a : cd.positive_roots()) {
    IVec b = apply_to_root(cd, w, a);
    bool neg = std::all_of(b.begin(), b.end(), [](long x) { return x <= 0; });
    if (neg) ++cnt;
  }
  return cnt;
}

static bool sends_root_negative(const CartanDatum& cd, const IMat& m, int i0) {
  IVec alpha(cd.rank(), 0);
  alpha[i0] = 1;
  IVec a = cd.fund_to_alpha(mat_apply(m, cd.alpha_to_fund(alpha)));
  return std::all_of(a.begin(), a.end(), [](long x) { return x <= 0; });
}

// exact inverse of an integer matrix with det +-1
static IMat int_mat_inverse(const IMat& m) {
  int r = (int)m.size();
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(2 * r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = m[i][j];
    a[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int i = col; i < r; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) throw rootsys_error("singular matrix");
    std::swap(a[col], a[piv]);
    mpq_class inv = 1 / a[col][col];
    for (int j = 0; j < 2 * r; ++j) a[col][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IMat out(r, IVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (a[i][r + j].get_den() != 1) throw rootsys_error("matrix inverse not integral");
      out[i][j] = a[i][r + j].get_num().get_si();
    }
  return out;
}

// Lexicographically smallest reduced word: repeatedly peel off the smallest i
// with l(s_i v) < l(v), i.e. v^{-1}(alpha_i) < 0.
static std::vector<int> canonical_word_of(const CartanDatum& cd, const IMat& m) {
  IMat v = m;
  IMat vinv = int_mat_inverse(m);
  std::vector<int> word;
  while (true) {
    int pick = 0;
    for (int i = 1; i <= cd.rank(); ++i)
      if (sends_root_negative(cd, vinv, i - 1)) { pick = i; break; }
    if (pick == 0) break;
    word.push_back(pick);
    v = mat_mul(reflection_matrix(cd, pick - 1), v);
    vinv = mat_mul(vinv, reflection_matrix(cd, pick - 1));
  }
  return word;
}

WordResult word_to_element(const CartanDatum& cd, const std::vector<int>& word) {
  IMat m = identity_mat(cd.rank());
  for (int i : word) {
    if (i < 1 || i > cd.rank()) throw rootsys_error("word index out of range");
    m = mat_mul(m, reflection_matrix(cd, i - 1));
  }
  WeylElement w{m, canonical_word_of(cd, m)};
  bool reduced = (inversion_count(cd, w) == (int)word.size());
  return WordResult{w, reduced};
}

std::vector<IVec> inversion_roots(const CartanDatum& cd, const std::vector<int>& word) {
  WordResult wr = word_to_element(cd, word);
  if (!wr.is_reduced) throw rootsys_error("inversion_roots: word is not reduced");
  std::vector<IVec> betas;
  WeylElement prefix = identity_element(cd);
  for (std::size_t k = 0; k < word.size(); ++k) {
    IVec alpha(cd.rank(), 0);
    alpha[word[k] - 1] = 1;
    betas.push_back(apply_to_root(cd, prefix, alpha));
    prefix.matrix = mat_mul(prefix.matrix, reflection_matrix(cd, word[k] - 1));
  }
  return betas;
}

SupportSets support_sets(const CartanDatum& cd, const WeylElement& w) {
  SupportSets out;
  int r = cd.rank();
  for (int i = 0; i < r; ++i) {
    bool fixed = true;
    for (int k = 0; k < r; ++k)
      if (w.matrix[k][i] != (k == i ? 1 : 0)) { fixed = false; break; }
    if (fixed) out.I.insert(i + 1);
    else out.S.insert(i + 1);
  }
  return out;
}

const std::vector<WeylElement>& weyl_group(const CartanDatum& cd) {
  static std::mutex mu;
  static std::map<std::string, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cd.label());
  if (it != cache.end()) return it->second;

  constexpr std::size_t kMaxOrder = 384;
  std::vector<WeylElement> elems;
  std::set<IMat> seen;
  elems.push_back(identity_element(cd));
  seen.insert(elems[0].matrix);
  std::size_t level_begin = 0;
  while (level_begin < elems.size()) {
    std::size_t level_end = elems.size();
    std::set<IMat> next;
    for (std::size_t e = level_begin; e < level_end; ++e)
      for (int i = 1; i <= cd.rank(); ++i) {
        IMat m = mat_mul(elems[e].matrix, reflection_matrix(cd, i - 1));
        if (!seen.count(m)) next.insert(std::move(m));
      }
    for (const IMat& m : next) {
      if (elems.size() >= kMaxOrder) throw rootsys_error("Weyl group too large to enumerate");
      seen.insert(m);
      elems.push_back(WeylElement{m, canonical_word_of(cd, m)});
    }
    level_begin = level_end;
  }
  auto [pos, _] = cache.emplace(cd.label(), std::move(elems));
  return pos->second;
}

std::vector<std::vector<int>> all_reduced_words(const CartanDatum& cd, const WeylElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // descend: i is a valid last letter of a reduced word of v iff l(v s_i) < l(v)
  std::function<void(const IMat&, int)> rec = [&](const IMat& m, int len) {
    if (len == 0) {
      std::vector<int> word(cur.rbegin(), cur.rend());
      out.push_back(word);
      return;
    }
    for (int i = 1; i <= cd.rank(); ++i) {
      // l(v s_i) < l(v) iff v(alpha_i) < 0
      IVec alpha(cd.rank(), 0);
      alpha[i - 1] = 1;
      IVec img = mat_apply(m, cd.alpha_to_fund(alpha));
      IVec a = cd.fund_to_alpha(img);
      bool neg = std::all_of(a.begin(), a.end(), [](long x) { return x <= 0; });
      if (!neg) continue;
      cur.push_back(i);
      rec(mat_mul(m, reflection_matrix(cd, i - 1)), len - 1);
      cur.pop_back();
    }
  };
  rec(w.matrix, w.length());
  return out;
}

WeylElement longest_element(const CartanDatum& cd) {
  const auto& g = weyl_group(cd);
  const WeylElement* best = &g[0];
  for (const auto& w : g)
    if (w.length() > best->length()) best = &w;
  return *best;
}

WeylElement inverse(const CartanDatum& cd, const WeylElement& w) {
  std::vector<int> rev(w.canonical_word.rbegin(), w.canonical_word.rend());
  return word_to_element(cd, rev).element;
}

std::vector<int> parse_word(const std::string& s, int rank) {
  std::vector<int> out;
  if (s.empty() || s == "e") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw rootsys_error("bad word: " + s);
    int v;
    try {
      std::size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw rootsys_error("bad word: " + s);
    }
    if (v < 1 || v > rank) throw rootsys_error("word index out of range: " + tok);
    out.push_back(v);
  }
  return out;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word[i]);
  }
  return s;
}

} // namespace qsc
