#include "qsc/qarith.hpp"

#include <algorithm>
#include <sstream>

namespace qsc {

LaurentPoly LaurentPoly::q_power(long e, const Rat& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_q_power(long& e) const {
  if (terms_.size() != 1 || terms_[0].second != 1) return false;
  e = terms_[0].first;
  return true;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw arithmetic_error("min_exp of zero polynomial");
  return terms_.front().first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw arithmetic_error("max_exp of zero polynomial");
  return terms_.back().first;
}

Rat LaurentPoly::coeff(long e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, long x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rat(0);
}

void LaurentPoly::add_term(long e, const Rat& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, long x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e, c});
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      Rat c = a->second + b->second;
      if (c != 0) r.terms_.emplace_back(a->first, c);
      ++a; ++b;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  if (o.terms_.size() == 1) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
  if (terms_.size() == 1) return o.shifted(terms_[0].first).scaled(terms_[0].second);
  std::map<long, Rat> acc;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

int LaurentPoly::cmp(const LaurentPoly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    int c = ::cmp(a->second, b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.first += e;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly r(1), base(*this);
  while (n) {
    if (n & 1) r *= base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.assign(terms_.rbegin(), terms_.rend());
  for (auto& t : r.terms_) t.first = -t.first;
  return r;
}

bool LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
  if (b.is_zero()) return false;
  if (a.is_zero()) { quot = LaurentPoly(); return true; }
  // reduce to ordinary polynomial division, tracking the q-power offset
  long shift = a.min_exp() - b.min_exp();
  LaurentPoly rem = a.shifted(-a.min_exp());
  LaurentPoly d = b.shifted(-b.min_exp());
  LaurentPoly q;
  long dd = d.max_exp();
  const Rat& lead = d.terms_.back().second;
  while (!rem.is_zero() && rem.max_exp() >= dd) {
    long e = rem.max_exp() - dd;
    Rat c = rem.terms_.back().second / lead;
    q.add_term(e, c);
    rem -= d.shifted(e).scaled(c);
  }
  if (!rem.is_zero()) return false;
  quot = q.shifted(shift);
  return true;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  LaurentPoly q;
  if (!try_divide(*this, d, q))
    throw arithmetic_error("inexact Laurent polynomial division");
  return q;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if ((a.is_monomial() && !b.is_zero()) || (b.is_monomial() && !a.is_zero()))
    return LaurentPoly(1);  // units divide everything
  LaurentPoly x = a.is_zero() ? a : a.shifted(-a.min_exp());
  LaurentPoly y = b.is_zero() ? b : b.shifted(-b.min_exp());
  while (!y.is_zero()) {
    // remainder of x by y
    LaurentPoly rem = x;
    long dd = y.max_exp();
    const Rat& lead = y.terms_.back().second;
    while (!rem.is_zero() && rem.max_exp() >= dd) {
      long e = rem.max_exp() - dd;
      Rat c = rem.terms_.back().second / lead;
      rem -= y.shifted(e).scaled(c);
    }
    x = y;
    y = rem.is_zero() ? rem : rem.shifted(-rem.min_exp());
  }
  if (x.is_zero()) return x;
  return x.scaled(Rat(1) / x.terms_.back().second);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    long e = it->first;
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::vector<std::array<std::string, 3>> LaurentPoly::json_triples() const {
  std::vector<std::array<std::string, 3>> v;
  v.reserve(terms_.size());
  for (const auto& [e, c] : terms_)
    v.push_back({std::to_string(e), c.get_num().get_str(), c.get_den().get_str()});
  return v;
}

LaurentPoly qnum(long n, long d) {
  if (n < 0) throw arithmetic_error("qnum: negative argument");
  // [n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}
  LaurentPoly p;
  for (long k = 0; k < n; ++k) p.add_term(d * (n - 1 - 2 * k), Rat(1));
  return p;
}

LaurentPoly qfact(long n, long d) {
  if (n < 0) throw arithmetic_error("qfact: negative argument");
  LaurentPoly p(1);
  for (long k = 2; k <= n; ++k) p *= qnum(k, d);
  return p;
}

LaurentPoly qbinom(long n, long m, long d) {
  if (m < 0 || m > n) throw arithmetic_error("qbinom: need 0 <= m <= n");
  return qfact(n, d).div_exact(qfact(m, d) * qfact(n - m, d));
}

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw arithmetic_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    // a unit: fold it into the numerator
    const auto& [e, c] = den_.terms()[0];
    num_ = num_.shifted(-e).scaled(Rat(1) / c);
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    if (den_.is_monomial()) {
      const auto& [e, c] = den_.terms()[0];
      num_ = num_.shifted(-e).scaled(Rat(1) / c);
      den_ = LaurentPoly(1);
      return;
    }
  }
  long s = den_.min_exp();
  if (s != 0) { num_ = num_.shifted(-s); den_ = den_.shifted(-s); }
  Rat lead = den_.terms().back().second;
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ + o.num_;
    return r;
  }
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ * o.num_;
    return r;
  }
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw arithmetic_error("RatFunc: division by zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

bool RatFunc::operator<(const RatFunc& o) const {
  int c = num_.cmp(o.num_);
  if (c != 0) return c < 0;
  return den_.cmp(o.den_) < 0;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

} // namespace qsc
