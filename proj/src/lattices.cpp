#include "qsc/lattices.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace qsc {

namespace {

// reduce rows in place to row echelon over Z via the Euclidean algorithm on
// each pivot column; returns pivot columns
std::vector<int> z_row_echelon(ZMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int m = (int)a.size(), n = (int)a[0].size();
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // make all entries below `row` in `col` zero, gathering the gcd at `row`
    while (true) {
      int nz = -1;
      for (int i = row; i < m; ++i)
        if (a[i][col] != 0) { nz = i; break; }
      if (nz < 0) break;
      // move the smallest nonzero |entry| to `row`
      int best = nz;
      for (int i = row; i < m; ++i)
        if (a[i][col] != 0 && (a[best][col] == 0 || cmp(abs(a[i][col]), abs(a[best][col])) < 0))
          best = i;
      std::swap(a[row], a[best]);
      bool done = true;
      for (int i = row + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q = a[i][col] / a[row][col];  // truncated division is fine here
        if (q != 0)
          for (int j = 0; j < n; ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (int j = 0; j < n; ++j) a[row][j] = -a[row][j];
    pivots.push_back(col);
    ++row;
  }
  a.resize(pivots.size(), ZVec(n, 0));
  return pivots;
}

} // namespace

ZMat hnf(const ZMat& rows) {
  ZMat a = rows;
  std::vector<int> pivots = z_row_echelon(a);
  // reduce entries above each pivot into [0, pivot)
  for (int k = (int)pivots.size() - 1; k >= 0; --k) {
    int col = pivots[k];
    for (int i = 0; i < k; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[k][col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[k][j];
    }
  }
  return a;
}

std::vector<mpz_class> snf_divisors(const ZMat& m_in) {
  ZMat a = m_in;
  if (a.empty() || a[0].empty()) return {};
  int m = (int)a.size(), n = (int)a[0].size();
  int t = 0;
  std::vector<mpz_class> div;
  while (t < m && t < n) {
    // find a nonzero pivot in the lower-right block
    int pi = -1, pj = -1;
    for (int i = t; i < m && pi < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
    while (true) {
      // clear column t
      bool col_clear = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        if (mpz_divisible_p(a[i][t].get_mpz_t(), a[t][t].get_mpz_t())) {
          mpz_class q = a[i][t] / a[t][t];
          for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        } else {
          // pull the gcd up via a Euclidean step
          mpz_class q = a[i][t] / a[t][t];
          for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          std::swap(a[t], a[i]);
          col_clear = false;
          break;
        }
      }
      if (!col_clear) continue;
      bool row_clear = true;
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        if (mpz_divisible_p(a[t][j].get_mpz_t(), a[t][t].get_mpz_t())) {
          mpz_class q = a[t][j] / a[t][t];
          for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        } else {
          mpz_class q = a[t][j] / a[t][t];
          for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          for (int i = t; i < m; ++i) std::swap(a[i][t], a[i][j]);
          row_clear = false;
          break;
        }
      }
      if (row_clear && [&] {
            for (int i = t + 1; i < m; ++i)
              if (a[i][t] != 0) return false;
            return true;
          }())
        break;
    }
    div.push_back(abs(a[t][t]));
    ++t;
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i + 1 < div.size(); ++i)
    for (std::size_t j = i + 1; j < div.size(); ++j) {
      if (div[i] == 0) continue;
      if (!mpz_divisible_p(div[j].get_mpz_t(), div[i].get_mpz_t())) {
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), div[i].get_mpz_t(), div[j].get_mpz_t());
        l = div[i] / g * div[j];
        div[i] = g;
        div[j] = l;
      }
    }
  std::sort(div.begin(), div.end());
  return div;
}

IntLattice::IntLattice(int ambient_rank, const ZMat& generators) : ambient_(ambient_rank) {
  for (const auto& row : generators) {
    assert((int)row.size() == ambient_rank);
    (void)row;
  }
  basis_ = hnf(generators);
}

bool IntLattice::contains(const ZVec& v) const {
  assert((int)v.size() == ambient_);
  ZVec x = v;
  for (const ZVec& row : basis_) {
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (row[j] != 0) { piv = j; break; }
    if (piv < 0) continue;
    if (x[piv] == 0) continue;
    if (!mpz_divisible_p(x[piv].get_mpz_t(), row[piv].get_mpz_t())) return false;
    mpz_class q = x[piv] / row[piv];
    for (int j = 0; j < ambient_; ++j) x[j] -= q * row[j];
  }
  return std::all_of(x.begin(), x.end(), [](const mpz_class& c) { return c == 0; });
}

bool IntLattice::contains(const IntLattice& o) const {
  for (const auto& row : o.basis_)
    if (!contains(row)) return false;
  return true;
}

IntLattice IntLattice::scaled(const mpz_class& c) const {
  ZMat rows = basis_;
  for (auto& row : rows)
    for (auto& x : row) x *= c;
  return IntLattice(ambient_, rows);
}

IntLattice IntLattice::sum(const IntLattice& a, const IntLattice& b) {
  assert(a.ambient_ == b.ambient_);
  ZMat rows = a.basis_;
  rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
  return IntLattice(a.ambient_, rows);
}

IntLattice IntLattice::intersect(const IntLattice& a, const IntLattice& b) {
  assert(a.ambient_ == b.ambient_);
  // x = u B_a = v B_b; solve (u, v) with u B_a - v B_b = 0
  int ka = a.rank(), kb = b.rank(), n = a.ambient_;
  if (ka == 0 || kb == 0) return IntLattice(n);
  ZMat M(n, ZVec(ka + kb, 0));  // columns are the unknowns
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < n; ++j) M[j][i] = a.basis_[i][j];
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < n; ++j) M[j][ka + i] = -b.basis_[i][j];
  IntLattice ker = kernel_lattice(M, ka + kb);
  ZMat rows;
  for (const auto& uv : ker.basis()) {
    ZVec x(n, 0);
    for (int i = 0; i < ka; ++i)
      for (int j = 0; j < n; ++j) x[j] += uv[i] * a.basis_[i][j];
    rows.push_back(std::move(x));
  }
  return IntLattice(n, rows);
}

mpz_class IntLattice::index_of(const IntLattice& sub) const {
  if (sub.rank() != rank()) throw rootsys_error("index_of: infinite index");
  if (!contains(sub)) throw rootsys_error("index_of: not a sublattice");
  auto div = quotient_divisors(sub);
  mpz_class idx = 1;
  for (const auto& d : div) idx *= d;
  return idx;
}

std::vector<mpz_class> IntLattice::quotient_divisors(const IntLattice& sub) const {
  if (!contains(sub)) throw rootsys_error("quotient_divisors: not a sublattice");
  // write each basis vector of sub in coordinates w.r.t. our basis
  int k = rank(), ks = sub.rank();
  ZMat coords(ks, ZVec(k, 0));
  for (int s = 0; s < ks; ++s) {
    ZVec x = sub.basis_[s];
    for (int i = 0; i < k; ++i) {
      int piv = -1;
      for (int j = 0; j < ambient_; ++j)
        if (basis_[i][j] != 0) { piv = j; break; }
      mpz_class q = 0;
      if (x[piv] != 0) {
        assert(mpz_divisible_p(x[piv].get_mpz_t(), basis_[i][piv].get_mpz_t()));
        q = x[piv] / basis_[i][piv];
        for (int j = 0; j < ambient_; ++j) x[j] -= q * basis_[i][j];
      }
      coords[s][i] = q;
    }
    assert(std::all_of(x.begin(), x.end(), [](const mpz_class& c) { return c == 0; }));
  }
  auto div = snf_divisors(coords);
  return div;
}

std::string IntLattice::str() const {
  std::ostringstream os;
  os << "rank " << rank() << " in Z^" << ambient_ << " [";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < ambient_; ++j) {
      if (j) os << ",";
      os << basis_[i][j];
    }
  }
  os << "]";
  return os.str();
}

IntLattice kernel_lattice(const ZMat& M, int n_cols) {
  // rows of U with U M^T in echelon: zero rows of the echelon give the kernel
  int m = (int)M.size();
  ZMat a(n_cols, ZVec(m + n_cols, 0));
  for (int i = 0; i < n_cols; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = M[j][i];  // (M^T)
    a[i][m + i] = 1;
  }
  // echelonize only the first m columns, carrying the unimodular tail along
  int row = 0;
  for (int col = 0; col < m && row < n_cols; ++col) {
    while (true) {
      int best = -1;
      for (int i = row; i < n_cols; ++i)
        if (a[i][col] != 0 && (best < 0 || cmp(abs(a[i][col]), abs(a[best][col])) < 0)) best = i;
      if (best < 0) break;
      std::swap(a[row], a[best]);
      bool done = true;
      for (int i = row + 1; i < n_cols; ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q = a[i][col] / a[row][col];
        if (q != 0)
          for (int j = 0; j < m + n_cols; ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[row][col] != 0) ++row;
  }
  ZMat ker;
  for (int i = row; i < n_cols; ++i) {
    bool zero = true;
    for (int j = 0; j < m; ++j)
      if (a[i][j] != 0) { zero = false; break; }
    assert(zero);
    (void)zero;
    ker.emplace_back(a[i].begin() + m, a[i].end());
  }
  return IntLattice(n_cols, ker);
}

ZMat to_zmat(const IMat& m) {
  ZMat z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) z[i].assign(m[i].begin(), m[i].end());
  return z;
}

IntLattice full_lattice(int r) {
  ZMat rows(r, ZVec(r, 0));
  for (int i = 0; i < r; ++i) rows[i][i] = 1;
  return IntLattice(r, rows);
}

IntLattice coordinate_lattice(int r, const std::set<int>& idx) {
  ZMat rows;
  for (int i : idx) {
    ZVec v(r, 0);
    v[i - 1] = 1;
    rows.push_back(v);
  }
  return IntLattice(r, rows);
}

std::set<int> support_S(const CartanDatum& cd, const WeylPair& w) {
  auto sp = support_sets(cd, w.plus).S;
  auto sm = support_sets(cd, w.minus).S;
  sp.insert(sm.begin(), sm.end());
  return sp;
}

std::set<int> support_I(const CartanDatum& cd, const WeylPair& w) {
  std::set<int> out;
  auto s = support_S(cd, w);
  for (int i = 1; i <= cd.rank(); ++i)
    if (!s.count(i)) out.insert(i);
  return out;
}

static ZMat difference_matrix(const WeylPair& w) {
  int r = (int)w.plus.matrix.size();
  ZMat d(r, ZVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) d[i][j] = w.plus.matrix[i][j] - w.minus.matrix[i][j];
  return d;
}

IntLattice ltilde(const CartanDatum& cd, const WeylPair& w) {
  return kernel_lattice(difference_matrix(w), cd.rank());
}

// kernel of M restricted to vectors supported on the 1-based index set S
static IntLattice restricted_kernel(const ZMat& M, int r, const std::set<int>& S) {
  if (S.empty()) return IntLattice(r);
  std::vector<int> cols(S.begin(), S.end());
  ZMat Msub(M.size(), ZVec(cols.size(), 0));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) Msub[i][j] = M[i][cols[j] - 1];
  IntLattice ker = kernel_lattice(Msub, (int)cols.size());
  ZMat rows;
  for (const auto& u : ker.basis()) {
    ZVec v(r, 0);
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j] - 1] = u[j];
    rows.push_back(std::move(v));
  }
  return IntLattice(r, rows);
}

IntLattice ltilde_red(const CartanDatum& cd, const WeylPair& w) {
  return restricted_kernel(difference_matrix(w), cd.rank(), support_S(cd, w));
}

IntLattice big_L(const CartanDatum& cd, const WeylPair& w) {
  IntLattice two_red = ltilde_red(cd, w).scaled(2);
  IntLattice pi = coordinate_lattice(cd.rank(), support_I(cd, w));
  return IntLattice::sum(two_red, pi);
}

IntLattice kappa_lattice(const CartanDatum& cd, const WeylElement& w) {
  // mu in P_{S(w)} with rows of (w+1)mu indexed by S(w) vanishing
  int r = cd.rank();
  auto S = support_sets(cd, w).S;
  ZMat wp1(r, ZVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) wp1[i][j] = w.matrix[i][j] + (i == j ? 1 : 0);
  // keep only the rows indexed by S (the others land in P_I automatically)
  ZMat rows;
  for (int i : S) rows.push_back(wp1[i - 1]);
  return restricted_kernel(rows, r, S);
}

int rank_q(const ZMat& m) {
  ZMat a = m;
  return (int)z_row_echelon(a).size();
}

int m_of_w(const CartanDatum& cd, const WeylElement& w) {
  int r = cd.rank();
  ZMat wp1(r, ZVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) wp1[i][j] = w.matrix[i][j] + (i == j ? 1 : 0);
  return r - rank_q(wp1);
}

void split_pm(const IVec& lambda, IVec& plus, IVec& minus) {
  plus.assign(lambda.size(), 0);
  minus.assign(lambda.size(), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > 0) plus[i] = lambda[i];
    else minus[i] = -lambda[i];
  }
}

void split_S_I(const CartanDatum& cd, const WeylPair& w, const IVec& lambda,
               IVec& bar, IVec& dbar) {
  auto S = support_S(cd, w);
  bar.assign(cd.rank(), 0);
  dbar.assign(cd.rank(), 0);
  for (int i = 1; i <= cd.rank(); ++i) {
    if (S.count(i)) bar[i - 1] = lambda[i - 1];
    else dbar[i - 1] = lambda[i - 1];
  }
}

void split_triple(const CartanDatum& cd, const WeylPair& w, const IVec& lambda,
                  IVec& comp0, IVec& compp, IVec& compm) {
  auto Sp = support_sets(cd, w.plus).S;
  auto Sm = support_sets(cd, w.minus).S;
  auto S = support_S(cd, w);
  for (int i = 1; i <= cd.rank(); ++i) {
    if (lambda[i - 1] < 0) throw rootsys_error("split_triple: weight not dominant");
    if (lambda[i - 1] != 0 && !S.count(i))
      throw rootsys_error("split_triple: weight not supported on S(w)");
  }
  comp0.assign(cd.rank(), 0);
  compp.assign(cd.rank(), 0);
  compm.assign(cd.rank(), 0);
  for (int i = 1; i <= cd.rank(); ++i) {
    long v = lambda[i - 1];
    if (v == 0) continue;
    bool p = Sp.count(i), m = Sm.count(i);
    if (p && m) comp0[i - 1] = v;
    else if (p) compp[i - 1] = v;
    else compm[i - 1] = v;
  }
}

} // namespace qsc
