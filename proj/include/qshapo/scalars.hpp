#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qshapo {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in q with integer coefficients, stored densely from q^0 upward.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit ZPoly(std::vector<BigInt> coeffs);

  static ZPoly monomial(const BigInt& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
  int order() const;
  const BigInt& lead() const { return c_.back(); }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_monomial() const;
  bool is_one() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly times_q(int k) const;    // multiply by q^k, k >= 0
  ZPoly divide_q(int k) const;   // divide by q^k, requires k <= order()
  ZPoly scaled(const BigInt& c) const;
  ZPoly divexact(const BigInt& c) const;
  BigInt content() const;
  ZPoly primitive() const;

  // Exact division; throws std::domain_error if b does not divide a.
  static ZPoly divexact(const ZPoly& a, const ZPoly& b);
  // Monic-up-to-sign gcd: positive leading coefficient, zero only if both are zero.
  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  std::string to_string() const;
  std::string to_latex() const;
  std::size_t hash() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Element of Q(q) in canonical form (reduced, denominator with positive lead).
class RatQ {
 public:
  RatQ() : den_(1) {}
  RatQ(long long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatQ(ZPoly num, ZPoly den);
  explicit RatQ(ZPoly num) : num_(std::move(num)), den_(1) {}

  static RatQ q_pow(int k);
  static RatQ v_pow(int k) { return q_pow(2 * k); }
  static RatQ parse(const std::string& text);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatQ operator-() const;
  RatQ inverse() const;
  RatQ pow(int e) const;
  RatQ& operator+=(const RatQ& o);
  RatQ& operator-=(const RatQ& o);
  RatQ& operator*=(const RatQ& o);
  RatQ& operator/=(const RatQ& o);
  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }
  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

  std::string to_string() const;
  std::string to_latex() const;
  std::size_t hash() const;

 private:
  void canonicalize();
  ZPoly num_;
  ZPoly den_;
};

// Laurent polynomial in y_1..y_n with RatQ coefficients. Exponent vectors always
// have length n.
class WeightScalar {
 public:
  using Exponent = std::vector<int>;

  WeightScalar() = default;
  explicit WeightScalar(int nvars) : n_(nvars) {}
  WeightScalar(int nvars, const RatQ& c);

  static WeightScalar var(int nvars, int i);  // y_i, 1-based
  static WeightScalar monomial(const Exponent& e, const RatQ& c);

  int nvars() const { return n_; }
  const std::map<Exponent, RatQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  RatQ constant_term() const;

  WeightScalar operator-() const;
  WeightScalar& operator+=(const WeightScalar& o);
  WeightScalar& operator-=(const WeightScalar& o);
  friend WeightScalar operator+(WeightScalar a, const WeightScalar& b) { return a += b; }
  friend WeightScalar operator-(WeightScalar a, const WeightScalar& b) { return a -= b; }
  friend WeightScalar operator*(const WeightScalar& a, const WeightScalar& b);
  friend WeightScalar operator*(const WeightScalar& a, const RatQ& c);
  friend WeightScalar operator*(const RatQ& c, const WeightScalar& a) { return a * c; }
  WeightScalar& operator*=(const WeightScalar& o) { return *this = *this * o; }
  WeightScalar& operator*=(const RatQ& c) { return *this = *this * c; }
  friend bool operator==(const WeightScalar& a, const WeightScalar& b);
  friend bool operator!=(const WeightScalar& a, const WeightScalar& b) { return !(a == b); }

  WeightScalar pow(int e) const;  // e >= 0, or e < 0 for a single monomial

  // y_i -> q^{a_i}
  RatQ eval(const std::vector<int>& a) const;
  // y_i -> q^{s_i} y_i
  WeightScalar rescale(const std::vector<int>& s) const;
  // y_var -> q^{q_exp} * prod_j y_j^{mono_j}; mono_var must be 0.
  WeightScalar substitute(int var, int q_exp, const Exponent& mono) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Exponent& e, const RatQ& c);
  int n_ = 0;
  std::map<Exponent, RatQ> terms_;
};

RatQ ws_eval(const WeightScalar& s, const std::vector<int>& a);

// [r]_v with v = q^2, for any integer r.
RatQ qint(int r);
// Gaussian binomial prod_{j=1..i} [n-j+1]_v / [j]_v.
RatQ qbinom(int n, int i);
// Gaussian binomial with formal top entry, as a Laurent polynomial in the single
// symbol t = v^r (variable y_1 of a one-variable WeightScalar).
WeightScalar qbinom_formal(int i);
// Specialize a formal (one-variable) scalar at t = v^r.
RatQ eval_formal(const WeightScalar& s, int r);

}  // namespace qshapo
