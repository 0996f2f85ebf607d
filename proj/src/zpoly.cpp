#include "qshapo/scalars.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshapo {

ZPoly::ZPoly(long long c) {
  if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const BigInt& c, int degree) {
  ZPoly p;
  if (c == 0) return p;
  if (degree < 0) throw std::domain_error("ZPoly::monomial: negative degree");
  p.c_.assign(degree + 1, BigInt(0));
  p.c_[degree] = c;
  return p;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int ZPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

BigInt ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

bool ZPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool ZPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::times_q(int k) const {
  if (k < 0) throw std::domain_error("ZPoly::times_q: negative shift");
  if (is_zero() || k == 0) return *this;
  ZPoly r;
  r.c_.assign(k, BigInt(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

ZPoly ZPoly::divide_q(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (k < 0 || k > order()) throw std::domain_error("ZPoly::divide_q: not divisible");
  ZPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

ZPoly ZPoly::scaled(const BigInt& c) const {
  if (c == 0) return ZPoly();
  ZPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

ZPoly ZPoly::divexact(const BigInt& c) const {
  ZPoly r = *this;
  for (auto& x : r.c_) {
    if (x % c != 0) throw std::domain_error("ZPoly::divexact: inexact scalar division");
    x /= c;
  }
  return r;
}

BigInt ZPoly::content() const {
  BigInt g = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (lead() < 0) g = -g;
  return (g == 1) ? *this : divexact(g);
}

ZPoly ZPoly::divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("ZPoly::divexact: division by zero");
  if (a.is_zero()) return a;
  if (b.c_.size() == 1) return a.divexact(b.c_[0]);
  if (a.degree() < b.degree()) throw std::domain_error("ZPoly::divexact: inexact division");
  std::vector<BigInt> rem = a.c_;
  int db = b.degree();
  std::vector<BigInt> quo(a.degree() - db + 1);
  const BigInt& lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (top % lb != 0) throw std::domain_error("ZPoly::divexact: inexact division");
    BigInt t = top / lb;
    quo[k] = t;
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.c_[j];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("ZPoly::divexact: inexact division");
  return ZPoly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 1).
ZPoly prem(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> r = a.coeffs();
  int db = b.degree();
  const BigInt& lb = b.lead();
  const auto& bc = b.coeffs();
  int dr = a.degree();
  while (dr >= db) {
    BigInt t = r[dr];
    if (t != 0) {
      for (int i = 0; i <= dr; ++i) r[i] *= lb;
      for (int j = 0; j <= db; ++j) r[dr - db + j] -= t * bc[j];
    }
    r.pop_back();
    --dr;
    while (dr >= 0 && r[dr] == 0) {
      r.pop_back();
      --dr;
    }
  }
  return ZPoly(std::move(r));
}

}  // namespace

ZPoly ZPoly::gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return b0.primitive().scaled(b0.content());
  if (b0.is_zero()) return a0.primitive().scaled(a0.content());
  int k = std::min(a0.order(), b0.order());
  ZPoly a = a0.divide_q(a0.order());
  ZPoly b = b0.divide_q(b0.order());
  BigInt c = boost::multiprecision::gcd(a.content(), b.content());
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::monomial(c, k);
  a = a.primitive();
  b = b.primitive();
  if (a == b) return a.scaled(c).times_q(k);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return ZPoly::monomial(c, k);
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive().scaled(c).times_q(k);
}

namespace {

std::string term_text(const BigInt& c, int e, bool first, bool latex) {
  std::string s;
  BigInt m = abs(c);
  if (c < 0)
    s += "-";
  else if (!first)
    s += "+";
  if (e == 0) return s + m.str();
  if (m != 1) s += m.str();
  s += "q";
  if (e != 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    if (c_[e] == 0) continue;
    s += term_text(c_[e], e, first, false);
    first = false;
  }
  return s;
}

std::string ZPoly::to_latex() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    if (c_[e] == 0) continue;
    s += term_text(c_[e], e, first, true);
    first = false;
  }
  return s;
}

std::size_t ZPoly::hash() const {
  std::size_t h = c_.size();
  for (const auto& x : c_) {
    auto v = static_cast<std::size_t>(static_cast<long long>(x % 1000000007));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qshapo
