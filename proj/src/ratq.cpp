#include <cctype>
#include <stdexcept>

#include "qshapo/scalars.hpp"

namespace qshapo {

RatQ::RatQ(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
  canonicalize();
}

void RatQ::canonicalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  if (!den_.is_one()) {
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = ZPoly::divexact(num_, g);
      den_ = ZPoly::divexact(den_, g);
    }
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQ RatQ::q_pow(int k) {
  RatQ r;
  if (k >= 0) {
    r.num_ = ZPoly::monomial(1, k);
  } else {
    r.num_ = ZPoly(1);
    r.den_ = ZPoly::monomial(1, -k);
  }
  return r;
}

RatQ RatQ::operator-() const {
  RatQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ: inverse of zero");
  RatQ r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQ RatQ::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatQ result(1);
  RatQ base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatQ& RatQ::operator+=(const RatQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  ZPoly g = ZPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = ZPoly(1);
    return *this;
  }
  ZPoly b1 = ZPoly::divexact(den_, g);
  ZPoly d1 = ZPoly::divexact(o.den_, g);
  ZPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatQ();
  ZPoly g2 = ZPoly::gcd(t, g);
  num_ = ZPoly::divexact(t, g2);
  den_ = b1 * ZPoly::divexact(o.den_, g2);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) { return *this += -o; }

RatQ& RatQ::operator*=(const RatQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  ZPoly g1 = ZPoly::gcd(num_, o.den_);
  ZPoly g2 = ZPoly::gcd(o.num_, den_);
  ZPoly a = g1.is_one() ? num_ : ZPoly::divexact(num_, g1);
  ZPoly d = g1.is_one() ? o.den_ : ZPoly::divexact(o.den_, g1);
  ZPoly c = g2.is_one() ? o.num_ : ZPoly::divexact(o.num_, g2);
  ZPoly b = g2.is_one() ? den_ : ZPoly::divexact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) { return *this *= o.inverse(); }

namespace {

bool needs_parens(const ZPoly& p) {
  int terms = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++terms;
  return terms > 1;
}

bool den_needs_parens(const ZPoly& p) {
  if (needs_parens(p)) return true;
  return p.lead() != 1 && p.degree() > 0;
}

}  // namespace

std::string RatQ::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (needs_parens(num_)) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::string RatQ::to_latex() const {
  if (den_.is_one()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

std::size_t RatQ::hash() const { return num_.hash() * 31 + den_.hash(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  RatQ parse_ratq() {
    skip();
    ZPoly num = parse_group();
    skip();
    ZPoly den(1);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      den = parse_group();
      skip();
    }
    if (pos_ != s_.size()) fail("trailing characters");
    if (den.is_zero()) fail("zero denominator");
    return RatQ(num, den);
  }

 private:
  ZPoly parse_group() {
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      ZPoly p = parse_poly();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    return parse_poly();
  }

  ZPoly parse_poly() {
    ZPoly p;
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (any) {
        break;
      }
      if (pos_ >= s_.size()) fail("dangling sign");
      BigInt coeff = 1;
      bool have_digits = false;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ > start) {
        coeff = BigInt(s_.substr(start, pos_ - start));
        have_digits = true;
      }
      int e = 0;
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 'q') {
        ++pos_;
        e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (pos_ == es) fail("missing exponent");
          e = std::stoi(s_.substr(es, pos_ - es));
        }
      } else if (!have_digits) {
        fail("expected a term");
      }
      p += ZPoly::monomial(coeff * sign, e);
      any = true;
    }
    if (!any) fail("empty polynomial");
    return p;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("RatQ::parse: " + why + " in '" + s_ + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatQ RatQ::parse(const std::string& text) { return PolyParser(text).parse_ratq(); }

}  // namespace qshapo
