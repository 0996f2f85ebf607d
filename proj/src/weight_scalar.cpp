#include <stdexcept>

#include "qshapo/scalars.hpp"

namespace qshapo {

WeightScalar::WeightScalar(int nvars, const RatQ& c) : n_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponent(nvars, 0), c);
}

WeightScalar WeightScalar::var(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("WeightScalar::var: index out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e, RatQ(1));
}

WeightScalar WeightScalar::monomial(const Exponent& e, const RatQ& c) {
  WeightScalar s(static_cast<int>(e.size()));
  if (!c.is_zero()) s.terms_.emplace(e, c);
  return s;
}

bool WeightScalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int d : terms_.begin()->first)
    if (d != 0) return false;
  return true;
}

RatQ WeightScalar::constant_term() const {
  auto it = terms_.find(Exponent(n_, 0));
  return it == terms_.end() ? RatQ() : it->second;
}

void WeightScalar::add_term(const Exponent& e, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeightScalar WeightScalar::operator-() const {
  WeightScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

void check_vars(int a, int b) {
  if (a != b) throw std::invalid_argument("WeightScalar: variable count mismatch");
}

}  // namespace

WeightScalar& WeightScalar::operator+=(const WeightScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    n_ = o.n_;
    terms_ = o.terms_;
    return *this;
  }
  check_vars(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeightScalar& WeightScalar::operator-=(const WeightScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    n_ = o.n_;
    *this = -o;
    return *this;
  }
  check_vars(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeightScalar operator*(const WeightScalar& a, const WeightScalar& b) {
  WeightScalar r(a.n_ ? a.n_ : b.n_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  check_vars(a.n_, b.n_);
  WeightScalar::Exponent e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

WeightScalar operator*(const WeightScalar& a, const RatQ& c) {
  WeightScalar r(a.n_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  if (c.is_one()) return r;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

bool operator==(const WeightScalar& a, const WeightScalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

WeightScalar WeightScalar::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("WeightScalar::pow: negative power of a non-monomial");
    Exponent ex = terms_.begin()->first;
    for (auto& d : ex) d *= e;
    return monomial(ex, terms_.begin()->second.pow(e));
  }
  WeightScalar result(n_, RatQ(1));
  WeightScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatQ WeightScalar::eval(const std::vector<int>& a) const {
  if (terms_.empty()) return RatQ();
  if (static_cast<int>(a.size()) != n_)
    throw std::invalid_argument("ws_eval: evaluation vector has wrong length");
  RatQ r;
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (int i = 0; i < n_; ++i) k += e[i] * a[i];
    r += c * RatQ::q_pow(k);
  }
  return r;
}

WeightScalar WeightScalar::rescale(const std::vector<int>& s) const {
  WeightScalar r(n_);
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (int i = 0; i < n_; ++i) k += e[i] * s[i];
    r.add_term(e, c * RatQ::q_pow(k));
  }
  return r;
}

WeightScalar WeightScalar::substitute(int var, int q_exp, const Exponent& mono) const {
  WeightScalar r(n_);
  int v = var - 1;
  for (const auto& [e, c] : terms_) {
    int d = e[v];
    if (d == 0) {
      r.add_term(e, c);
      continue;
    }
    Exponent ne = e;
    ne[v] = 0;
    for (int i = 0; i < n_; ++i) ne[i] += d * mono[i];
    r.add_term(ne, c * RatQ::q_pow(d * q_exp));
  }
  return r;
}

namespace {

std::string mono_text(const WeightScalar::Exponent& e, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (latex) {
      s += "y_{" + std::to_string(i + 1) + "}";
      if (e[i] != 1) s += "^{" + std::to_string(e[i]) + "}";
    } else {
      if (!s.empty()) s += "*";
      s += "y" + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

}  // namespace

std::string WeightScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string m = mono_text(it->first, false);
    std::string c = it->second.to_string();
    if (m.empty()) {
      s += c;
    } else if (it->second.is_one()) {
      s += m;
    } else {
      s += "(" + c + ")*" + m;
    }
  }
  return s;
}

std::string WeightScalar::to_latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string m = mono_text(it->first, true);
    if (m.empty()) {
      s += it->second.to_latex();
    } else if (it->second.is_one()) {
      s += m;
    } else {
      s += "\\left(" + it->second.to_latex() + "\\right)" + m;
    }
  }
  return s;
}

RatQ ws_eval(const WeightScalar& s, const std::vector<int>& a) { return s.eval(a); }

RatQ qint(int r) {
  if (r == 0) return RatQ();
  int n = r < 0 ? -r : r;
  // [n]_v = sum_{j=0}^{n-1} v^{n-1-2j}; multiply through by v^{n-1} = q^{2n-2}.
  std::vector<BigInt> c(4 * (n - 1) + 1, BigInt(0));
  for (int j = 0; j < n; ++j) c[4 * (n - 1 - j)] = 1;
  RatQ x(ZPoly(std::move(c)), ZPoly::monomial(1, 2 * (n - 1)));
  return r < 0 ? -x : x;
}

RatQ qbinom(int n, int i) {
  if (i < 0) throw std::invalid_argument("qbinom: negative lower index");
  RatQ r(1);
  for (int j = 1; j <= i; ++j) {
    RatQ top = qint(n - j + 1);
    if (top.is_zero()) return RatQ();
    r *= top;
    r /= qint(j);
  }
  return r;
}

WeightScalar qbinom_formal(int i) {
  if (i < 0) throw std::invalid_argument("qbinom_formal: negative lower index");
  WeightScalar r(1, RatQ(1));
  for (int j = 1; j <= i; ++j) {
    WeightScalar f = WeightScalar::monomial({1}, RatQ::v_pow(1 - j)) -
                     WeightScalar::monomial({-1}, RatQ::v_pow(j - 1));
    r *= f;
    r *= (RatQ::v_pow(j) - RatQ::v_pow(-j)).inverse();
  }
  return r;
}

RatQ eval_formal(const WeightScalar& s, int r) { return s.eval({2 * r}); }

}  // namespace qshapo
