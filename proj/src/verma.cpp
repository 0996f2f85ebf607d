#include "qshapo/verma.hpp"

#include <stdexcept>

namespace qshapo {

HighestWeight HighestWeight::symbolic(int n) {
  if (n < 1) throw std::invalid_argument("HighestWeight: rank must be >= 1");
  return HighestWeight(n);
}

HighestWeight HighestWeight::symbolic_on_hyperplane(int n, int m) {
  HighestWeight h = symbolic(n);
  h.m_ = m;
  return h;
}

HighestWeight HighestWeight::numeric(const Weight& w) {
  if (w.rank() < 1) throw std::invalid_argument("HighestWeight: empty weight");
  HighestWeight h(w.rank());
  h.value_ = w;
  return h;
}

WeightScalar HighestWeight::canonical(const WeightScalar& s) const {
  if (!m_) return s;
  // prod y_i = q^{m-N}
  std::vector<int> mono(n_, -1);
  mono[n_ - 1] = 0;
  return s.substitute(n_, *m_ - n_, mono);
}

WeightScalar HighestWeight::y_power(const RootVec& gamma) const {
  if (gamma.rank() != n_) throw std::invalid_argument("y_power: rank mismatch");
  if (value_) {
    int e = 0;
    for (int i = 0; i < n_; ++i) e += gamma[i] * (*value_)[i];
    return WeightScalar(n_, RatQ::q_pow(e));
  }
  return canonical(WeightScalar::monomial(gamma.coords, RatQ(1)));
}

WeightScalar HighestWeight::v_power(const RootVec& gamma, int a) const {
  return y_power(2 * gamma) * RatQ::v_pow(a);
}

WeightScalar HighestWeight::qint_shift(const RootVec& gamma, int a) const {
  RatQ d = (RatQ::v_pow(1) - RatQ::v_pow(-1)).inverse();
  return (v_power(gamma, a) - v_power(-1 * gamma, -a)) * d;
}

int HighestWeight::lambda_rho(const RootVec& gamma) const {
  if (!value_) throw std::logic_error("lambda_rho: weight is symbolic");
  int s = 0;
  for (int i = 0; i < n_; ++i) s += gamma[i] * ((*value_)[i] + 1);
  return s;
}

std::string HighestWeight::to_string() const {
  if (value_) return value_->to_string();
  std::string s = "symbolic(N=" + std::to_string(n_);
  if (m_) s += ", m=" + std::to_string(*m_);
  return s + ")";
}

std::string VermaVector::to_string() const { return terms.to_string() + " v"; }

VermaModule::VermaModule(HighestWeight lambda, std::shared_ptr<const RewriteSystem> rs)
    : lambda_(std::move(lambda)), rs_(std::move(rs)) {
  if (rs_->rank() != lambda_.rank()) throw std::invalid_argument("VermaModule: rank mismatch");
}

VermaVector VermaModule::highest() const {
  VermaVector w{RootVec::zero(rank()), {}};
  w.terms.add(Word(), lambda_.constant(RatQ(1)));
  return w;
}

namespace {

RootVec homogeneous_degree(const NCPolyW& x, int n) {
  RootVec md = multidegree(x.leading_word(), n);
  for (const auto& [w, c] : x.terms())
    if (multidegree(w, n) != md) throw std::invalid_argument("expected a homogeneous element");
  return md;
}

}  // namespace

VermaVector VermaModule::apply(const NCPolyW& x) const {
  VermaVector w{RootVec::zero(rank()), {}};
  if (x.is_zero()) return w;
  w.offset = homogeneous_degree(x, rank());
  NCPolyW c;
  for (const auto& [word, s] : x.terms()) c.add(word, lambda_.canonical(s));
  w.terms = rs_->normal_form(c);
  return w;
}

VermaVector VermaModule::apply(const NCPolyQ& x) const { return apply(lift(x, rank())); }

VermaVector VermaModule::apply(const std::map<PBWMonomial, WeightScalar>& pbw) const {
  NCPolyW x;
  for (const auto& [m, c] : pbw) {
    NCPolyQ e = rs_->normal_form(expand_pbw(m));
    for (const auto& [w, k] : e.terms()) x.add(w, c * k);
  }
  if (x.is_zero() && !pbw.empty()) {
    VermaVector z{pbw.begin()->first.multidegree(rank()), {}};
    return z;
  }
  return apply(x);
}

VermaVector VermaModule::act_f(int i, const VermaVector& w) const {
  if (i < 1 || i > rank()) throw std::out_of_range("act_f: index out of range");
  VermaVector r{w.offset + RootSystemA(rank()).simple(i), {}};
  r.terms = rs_->normal_form(w.terms.lmul_word(make_word({i})));
  return r;
}

VermaVector VermaModule::act_poly(const NCPolyQ& x, const VermaVector& w) const {
  if (x.is_zero()) return VermaVector{w.offset, {}};
  RootVec md = multidegree(x.leading_word(), rank());
  VermaVector r{w.offset + md, {}};
  r.terms = rs_->normal_form(lift(x, rank()) * w.terms);
  return r;
}

VermaVector VermaModule::act_k(const RootVec& gamma, const VermaVector& w) const {
  RootSystemA R(rank());
  WeightScalar s = lambda_.y_power(gamma) * RatQ::q_pow(-R.pairing(w.offset, gamma));
  return scale(w, s);
}

VermaVector VermaModule::act_cartan(const CartanElement& h, const VermaVector& w) const {
  VermaVector r{w.offset, {}};
  for (const auto& [g, c] : h.terms()) r = add(r, scale(act_k(RootVec(g), w), lambda_.constant(c)));
  return r;
}

VermaVector VermaModule::act_e(int i, const VermaVector& w) const {
  int n = rank();
  if (i < 1 || i > n) throw std::out_of_range("act_e: index out of range");
  RootSystemA R(n);
  RootVec ai = R.simple(i);
  VermaVector r{w.offset - ai, {}};
  RatQ d = (RatQ::q_pow(2) - RatQ::q_pow(-2)).inverse();
  WeightScalar kp = lambda_.y_power(2 * ai), km = lambda_.y_power(-2 * ai);
  NCPolyW acc;
  for (const auto& [word, c] : w.terms.terms()) {
    // (nu_tail, alpha_i) for the letters right of position j
    int tail = 0;
    for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
      int l = static_cast<int>(word[j]);
      if (l == i) {
        WeightScalar s = (kp * RatQ::q_pow(-2 * tail) - km * RatQ::q_pow(2 * tail)) * d;
        Word rest = word.substr(0, j) + word.substr(j + 1);
        acc.add(rest, c * s);
      }
      tail += R.cartan(l, i);
    }
  }
  r.terms = rs_->normal_form(acc);
  return r;
}

VermaVector VermaModule::add(const VermaVector& a, const VermaVector& b) const {
  if (a.is_zero()) return b.is_zero() ? VermaVector{a.offset, {}} : b;
  if (b.is_zero()) return a;
  if (a.offset != b.offset) throw std::invalid_argument("VermaVector: adding vectors of different weights");
  return VermaVector{a.offset, a.terms + b.terms};
}

VermaVector VermaModule::scale(const VermaVector& a, const WeightScalar& c) const {
  VermaVector r{a.offset, {}};
  for (const auto& [w, s] : a.terms.terms()) r.terms.add(w, lambda_.canonical(s * c));
  return r;
}

bool VermaModule::is_hwv(const VermaVector& w) const {
  if (w.is_zero()) return false;
  for (int i = 1; i <= rank(); ++i)
    if (!act_e(i, w).is_zero()) return false;
  return true;
}

WeightScalar VermaModule::h_eval(int i) const {
  int n = rank();
  if (i < 1 || i > n) throw std::out_of_range("h_eval: index out of range");
  // -q^-1 v (1 - v^{-2s}) / (v - v^-1), s = (lambda, sigma_i) + i
  RootVec sig = RootSystemA(n).sigma(i);
  RatQ pre = -RatQ::q_pow(-1) * RatQ::v_pow(1) * (RatQ::v_pow(1) - RatQ::v_pow(-1)).inverse();
  return (lambda_.constant(RatQ(1)) - lambda_.v_power(-2 * sig, -2 * i)) * pre;
}

WeightScalar VermaModule::H_eval(const IndexSet& J) const {
  WeightScalar r = lambda_.constant(RatQ(1));
  for (int i : r_of(J, rank())) r = lambda_.canonical(r * h_eval(i));
  return r;
}

WeightScalar VermaModule::cartan_eval(const CartanElement& h) const {
  WeightScalar r(rank());
  for (const auto& [g, c] : h.terms()) r += lambda_.y_power(RootVec(g)) * c;
  return r;
}

}  // namespace qshapo
