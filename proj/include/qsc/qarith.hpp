#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsc {

using Rat = mpq_class;

struct arithmetic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in q with exact rational coefficients.
/// Terms are kept sorted by exponent with no zero coefficients, so
/// equality is structural.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_.emplace_back(0, Rat(c)); }
  explicit LaurentPoly(const Rat& c) { if (c != 0) terms_.emplace_back(0, c); }

  // c * q^e
  static LaurentPoly q_power(long e, const Rat& c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // true iff the polynomial is c*q^e for some nonzero c
  bool is_monomial() const { return terms_.size() == 1; }
  // true iff the polynomial is exactly q^e; reports e
  bool is_q_power(long& e) const;

  long min_exp() const;
  long max_exp() const;
  Rat coeff(long e) const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<long, Rat>>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return cmp(o) < 0; }
  int cmp(const LaurentPoly& o) const;

  LaurentPoly scaled(const Rat& c) const;
  // multiply by q^e
  LaurentPoly shifted(long e) const;
  LaurentPoly pow(unsigned long n) const;
  // substitution q -> q^{-1}
  LaurentPoly bar() const;

  // Exact division; throws arithmetic_error if the remainder is nonzero.
  LaurentPoly div_exact(const LaurentPoly& d) const;
  static bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot);

  // Monic gcd with min_exp 0 (gcd of the underlying ordinary polynomials,
  // q-power factors dropped). gcd(0,0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;                                 // "q^2 + 1 + q^-2"
  // [[exp, num, den], ...]
  std::vector<std::array<std::string, 3>> json_triples() const;

  void add_term(long e, const Rat& c);

private:
  std::vector<std::pair<long, Rat>> terms_;
};

// q-integer [n]_{q^d}, q-factorial and q-binomial (all symmetric in q <-> q^{-1}).
LaurentPoly qnum(long n, long d = 1);
LaurentPoly qfact(long n, long d = 1);
LaurentPoly qbinom(long n, long m, long d = 1);

/// Element of Q(q) kept reduced: gcd(num, den) = 1, den has min_exp 0 and
/// leading coefficient 1, so equality is structural.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(const LaurentPoly& n) : num_(n), den_(1) {}
  RatFunc(const LaurentPoly& n, const LaurentPoly& d);

  static RatFunc q_power(long e) { return RatFunc(LaurentPoly::q_power(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_q_power(long& e) const { return den_.is_one() && num_.is_q_power(e); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;

  // number of stored terms, used for pivot selection
  std::size_t size() const { return num_.term_count() + den_.term_count(); }

  std::string str() const;

private:
  void normalize();
  LaurentPoly num_, den_;
};

} // namespace qsc
