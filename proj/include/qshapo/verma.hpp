#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qshapo/freealg.hpp"
#include "qshapo/roots.hpp"
#include "qshapo/scalars.hpp"
#include "qshapo/uqsl.hpp"

namespace qshapo {

// lambda given either by its pairings or by the symbols y_i = q^{(lambda, alpha_i)}.
// With a hyperplane (lambda+rho, eta) = m, y_N is eliminated eagerly.
class HighestWeight {
 public:
  static HighestWeight symbolic(int n);
  static HighestWeight symbolic_on_hyperplane(int n, int m);
  static HighestWeight numeric(const Weight& w);

  int rank() const { return n_; }
  bool is_numeric() const { return value_.has_value(); }
  const Weight& value() const { return *value_; }
  std::optional<int> hyperplane() const { return m_; }

  // q^{(lambda, gamma)}
  WeightScalar y_power(const RootVec& gamma) const;
  // v^{(lambda, gamma) + a}
  WeightScalar v_power(const RootVec& gamma, int a) const;
  // [(lambda, gamma) + a]_v
  WeightScalar qint_shift(const RootVec& gamma, int a) const;
  // (lambda + rho, gamma) = (lambda, gamma) + height(gamma); numeric mode only
  int lambda_rho(const RootVec& gamma) const;
  WeightScalar constant(const RatQ& c) const { return WeightScalar(n_, c); }
  WeightScalar canonical(const WeightScalar& s) const;

  std::string to_string() const;

 private:
  HighestWeight(int n) : n_(n) {}
  int n_;
  std::optional<Weight> value_;
  std::optional<int> m_;
};

// Element of M(lambda): sum of normal words times scalars, applied to v_lambda.
// All words have multidegree `offset`, so the vector has weight lambda - offset.
struct VermaVector {
  RootVec offset;
  NCPolyW terms;

  bool is_zero() const { return terms.is_zero(); }
  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.terms == b.terms && (a.terms.is_zero() || a.offset == b.offset);
  }
  std::string to_string() const;
};

class VermaModule {
 public:
  VermaModule(HighestWeight lambda, std::shared_ptr<const RewriteSystem> rs);

  const HighestWeight& weight() const { return lambda_; }
  const RewriteSystem& system() const { return *rs_; }
  int rank() const { return lambda_.rank(); }

  VermaVector highest() const;
  // x v_lambda for x in U(n-) with WeightScalar or RatQ coefficients
  VermaVector apply(const NCPolyW& x) const;
  VermaVector apply(const NCPolyQ& x) const;
  VermaVector apply(const std::map<PBWMonomial, WeightScalar>& pbw) const;

  VermaVector act_f(int i, const VermaVector& w) const;
  VermaVector act_poly(const NCPolyQ& x, const VermaVector& w) const;
  VermaVector act_k(const RootVec& gamma, const VermaVector& w) const;
  VermaVector act_cartan(const CartanElement& h, const VermaVector& w) const;
  VermaVector act_e(int i, const VermaVector& w) const;
  VermaVector add(const VermaVector& a, const VermaVector& b) const;
  VermaVector scale(const VermaVector& a, const WeightScalar& c) const;

  bool is_hwv(const VermaVector& w) const;

  // -q^-1 v^{-((lambda+rho, sigma_i)-1)} [(lambda+rho, sigma_i)]_v
  WeightScalar h_eval(int i) const;
  // product of h_eval over r(J)
  WeightScalar H_eval(const IndexSet& J) const;
  WeightScalar cartan_eval(const CartanElement& h) const;

 private:
  HighestWeight lambda_;
  std::shared_ptr<const RewriteSystem> rs_;
};

}  // namespace qshapo
