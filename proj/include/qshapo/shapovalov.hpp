#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qshapo/roots.hpp"
#include "qshapo/scalars.hpp"
#include "qshapo/uqsl.hpp"
#include "qshapo/verma.hpp"

namespace qshapo {

// Element of U(b-) of weight -m*eta in PBW coordinates with Cartan coefficients.
struct ShapoElement {
  int n = 0;
  int m = 1;
  std::string tag;
  BorelElement terms;
  // r(J) for each term when the coefficient is a product of h_i; used for display only
  std::map<PBWMonomial, std::vector<int>> h_labels;

  std::string to_text() const;  // "f[1,2]f[2,3] + f[1,3]·h1"
};

using EvaluatedTheta = std::map<PBWMonomial, WeightScalar>;
using ThetaQ = std::map<PBWMonomial, RatQ>;

// sum over I of f_I H_I
ShapoElement theta_sum(int n);
// The element for the root eps_a - eps_b (1 <= a < b <= n+1) of rank n, relabelled from
// theta_sum(b - a).
ShapoElement theta_sum_window(int n, int a, int b);

EvaluatedTheta evaluate(const ShapoElement& theta, const HighestWeight& lambda);
ThetaQ to_numeric(const EvaluatedTheta& theta);
EvaluatedTheta from_numeric(const ThetaQ& theta, int n);

// Matrix entries: zero, an evaluated scalar, or a root vector f_{i,j}.
struct MatEntry {
  enum class Kind { Zero, Scalar, Root } kind = Kind::Zero;
  WeightScalar scalar;
  std::pair<int, int> root{0, 0};

  static MatEntry zero() { return {}; }
  static MatEntry of_scalar(WeightScalar s) { return {Kind::Scalar, std::move(s), {0, 0}}; }
  static MatEntry of_root(int i, int j) { return {Kind::Root, WeightScalar(), {i, j}}; }
};

class ShapoMatrix {
 public:
  // size k <= rank(lambda); c_i = h_i(lambda)
  ShapoMatrix(int k, const HighestWeight& lambda);
  ShapoMatrix(int nvars, std::vector<std::vector<MatEntry>> entries);

  int size() const { return static_cast<int>(e_.size()); }
  const MatEntry& at(int r, int c) const { return e_[r - 1][c - 1]; }  // 1-based
  ShapoMatrix minor(int row, int col) const;

  // sum_w sign(w) b_{w(1),1} ... b_{w(n),n}, f-entries kept in column order
  EvaluatedTheta ldet() const;

 private:
  int nvars_;
  std::vector<std::vector<MatEntry>> e_;
};

EvaluatedTheta theta_det(int n, const HighestWeight& lambda);
EvaluatedTheta theta_det(int k, int n, const HighestWeight& lambda);  // k x k block of rank n

struct InductiveTrace {
  std::vector<int> r;            // r at the steps beta = alpha_2, ..., alpha_N
  std::vector<RatQ> factors;     // pi^0 coefficient before normalization
};

// Strict construction; every step must have r >= 1. Normalized to pi^0 coefficient 1.
ThetaQ theta_inductive(int n, int m, const Weight& lambda, InductiveTrace* trace = nullptr);
// Same recursion with any integer r (exact division when F powers go negative).
ThetaQ theta_uniform(int n, int m, const Weight& lambda, InductiveTrace* trace = nullptr);
// Theta_1(lambda - (m-1) eta) ... Theta_1(lambda), normalized.
ThetaQ theta_power(int n, int m, const Weight& lambda);
// Unnormalized product of the m = 1 factors, as an element of U(n-).
NCPolyQ theta_power_product(int n, int m, const Weight& lambda);

ThetaQ normalize_pi0(const ThetaQ& theta, int n, int m);
NCPolyQ expand_theta(const ThetaQ& theta, const RewriteSystem& rs);

struct Check {
  std::string name;
  bool ok = false;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string witness = {});
  void append(const Report& other);
  bool ok() const;
  std::size_t failures() const;
};

// Each e_k kills Theta v_lambda. Symbolic: m = 1 only, k < N on fully symbolic lambda and
// k = N on the hyperplane. Sampled: hyperplane weights from the seed (m >= 1).
Report verify_hwv(int n, int m, bool symbolic, int samples = 4, std::uint64_t seed = 1);
// e_k checks at one numeric weight, which need not be on the hyperplane.
Report verify_hwv_at(int n, int m, const Weight& lambda);

// Weights (mu, lambda = s_N . mu) with (mu+rho, sigma_{N-1}) = 1 and (mu+rho, alpha_N) = p.
std::pair<Weight, Weight> doot_weights(int n, int p, std::uint64_t seed = 0);
Report compare_doot(int n, int p, std::uint64_t seed = 0);

// Serializers
std::string theta_text(const ShapoElement& t);
std::string theta_text(const EvaluatedTheta& t);
std::string theta_text(const ThetaQ& t);
std::string theta_json(const ShapoElement& t);
std::string theta_json(const EvaluatedTheta& t, int n, int m, const std::string& tag);
std::string theta_json(const ThetaQ& t, int n, int m, const std::string& tag);
std::string theta_latex(const ShapoElement& t);
std::string theta_latex(const EvaluatedTheta& t);
std::string theta_latex(const ThetaQ& t);
std::string report_json(const Report& r);

}  // namespace qshapo
