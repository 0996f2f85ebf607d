#include "qshapo/shapovalov.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qshapo {

namespace {

std::string cap_witness(std::string s) {
  constexpr std::size_t kMax = 400;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

// c_i = h_i(lambda) = -q^-1 (v - v^{1-2s}) / (v - v^-1) with s = (lambda+rho, sigma_i)
WeightScalar h_value(int i, const HighestWeight& lambda) {
  RootVec sig = RootSystemA(lambda.rank()).sigma(i);
  RatQ d = (RatQ::v_pow(1) - RatQ::v_pow(-1)).inverse();
  WeightScalar top = lambda.constant(RatQ::v_pow(1)) - lambda.v_power(-2 * sig, 1 - 2 * i);
  return lambda.canonical(top * (-RatQ::q_pow(-1) * d));
}

std::string labels_text(const std::vector<int>& r) {
  std::string s;
  for (int i : r) s += "h" + std::to_string(i);
  return s;
}

std::string labels_latex(const std::vector<int>& r) {
  std::string s;
  for (int i : r) s += "h_{" + std::to_string(i) + "}";
  return s;
}

std::string key_text(const CartanElement::Key& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

nlohmann::json pbw_json(const PBWMonomial& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [i, j] : m.factors) a.push_back({i, j});
  return a;
}

template <class Map, class F>
std::string join_terms(const Map& t, F&& coeff_text) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t) {
    if (!s.empty()) s += " + ";
    std::string ct = coeff_text(c);
    s += m.to_string();
    if (!ct.empty()) s += "·(" + ct + ")";
  }
  return s;
}

std::string latex_document(const std::string& body) {
  return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n\\begin{align*}\n"
         "\\theta &= " +
         body + "\n\\end{align*}\n\\end{document}\n";
}

template <class Map, class F>
std::string latex_terms(const Map& t, F&& coeff_latex) {
  if (t.empty()) return "0";
  std::string s;
  std::size_t k = 0;
  for (const auto& [m, c] : t) {
    if (k) s += (k % 3 == 0) ? " \\\\\n&\\quad + " : " + ";
    std::string ct = coeff_latex(c);
    s += m.to_latex();
    if (!ct.empty()) s += "\\left(" + ct + "\\right)";
    ++k;
  }
  return s;
}

}  // namespace

// ---- sum formula ----

ShapoElement theta_sum(int n) {
  if (n < 1) throw std::invalid_argument("theta_sum: rank must be >= 1");
  ShapoElement t;
  t.n = n;
  t.m = 1;
  t.tag = "sum";
  for (const auto& I : enumerate_II(n)) {
    PBWMonomial f = PBWMonomial::from_index_set(I);
    CartanElement H = CartanElement::one(n);
    std::vector<int> labels;
    for (int i : r_of(I, n)) {
      H = H * CartanElement::h(i, n);
      labels.push_back(i);
    }
    t.terms.emplace(f, H);
    t.h_labels.emplace(f, labels);
  }
  return t;
}

ShapoElement theta_sum_window(int n, int a, int b) {
  if (a < 1 || b > n + 1 || a >= b) throw std::invalid_argument("theta_sum_window: need 1 <= a < b <= n+1");
  ShapoElement sub = theta_sum(b - a);
  ShapoElement t;
  t.n = n;
  t.m = 1;
  t.tag = "sum[" + std::to_string(a) + ".." + std::to_string(b) + "]";
  int off = a - 1;
  for (const auto& [m, H] : sub.terms) {
    PBWMonomial f;
    for (const auto& [i, j] : m.factors) f.factors.emplace_back(i + off, j + off);
    CartanElement G(n);
    for (const auto& [k, c] : H.terms()) {
      std::vector<int> g(n, 0);
      for (std::size_t x = 0; x < k.size(); ++x) g[x + off] = k[x];
      G += CartanElement::k(RootVec(g), c);
    }
    std::vector<int> labels;
    for (int i : sub.h_labels.at(m)) labels.push_back(i + off);
    t.terms.emplace(f, G);
    t.h_labels.emplace(f, labels);
  }
  return t;
}

std::string ShapoElement::to_text() const { return theta_text(*this); }

EvaluatedTheta evaluate(const ShapoElement& theta, const HighestWeight& lambda) {
  if (theta.n != lambda.rank()) throw std::invalid_argument("evaluate: rank mismatch");
  EvaluatedTheta out;
  for (const auto& [m, H] : theta.terms) {
    WeightScalar s(lambda.rank());
    for (const auto& [k, c] : H.terms()) s += lambda.y_power(RootVec(k)) * c;
    s = lambda.canonical(s);
    if (!s.is_zero()) out.emplace(m, s);
  }
  return out;
}

ThetaQ to_numeric(const EvaluatedTheta& theta) {
  ThetaQ out;
  for (const auto& [m, s] : theta) {
    if (!s.is_constant()) throw std::invalid_argument("to_numeric: coefficient depends on lambda");
    out.emplace(m, s.constant_term());
  }
  return out;
}

EvaluatedTheta from_numeric(const ThetaQ& theta, int n) {
  EvaluatedTheta out;
  for (const auto& [m, c] : theta) out.emplace(m, WeightScalar(n, c));
  return out;
}

// ---- determinant ----

ShapoMatrix::ShapoMatrix(int k, const HighestWeight& lambda) : nvars_(lambda.rank()) {
  if (k < 1 || k > lambda.rank()) throw std::invalid_argument("ShapoMatrix: size out of range");
  e_.assign(k, std::vector<MatEntry>(k));
  for (int c = 1; c <= k; ++c) {
    for (int r = 1; r <= c; ++r) e_[r - 1][c - 1] = MatEntry::of_root(r, c + 1);
    if (c < k) e_[c][c - 1] = MatEntry::of_scalar(-h_value(c, lambda));
  }
}

ShapoMatrix::ShapoMatrix(int nvars, std::vector<std::vector<MatEntry>> entries)
    : nvars_(nvars), e_(std::move(entries)) {
  for (const auto& row : e_)
    if (row.size() != e_.size()) throw std::invalid_argument("ShapoMatrix: not square");
}

ShapoMatrix ShapoMatrix::minor(int row, int col) const {
  std::vector<std::vector<MatEntry>> m;
  for (int r = 1; r <= size(); ++r) {
    if (r == row) continue;
    std::vector<MatEntry> line;
    for (int c = 1; c <= size(); ++c)
      if (c != col) line.push_back(at(r, c));
    m.push_back(std::move(line));
  }
  return ShapoMatrix(nvars_, std::move(m));
}

EvaluatedTheta ShapoMatrix::ldet() const {
  using Seq = std::vector<std::pair<int, int>>;
  using Partial = std::map<Seq, WeightScalar>;
  int k = size();
  // rows used so far -> partial products over the columns already expanded
  std::map<std::uint32_t, Partial> states;
  states[0][Seq{}] = WeightScalar(nvars_, RatQ(1));
  for (int c = 1; c <= k; ++c) {
    std::map<std::uint32_t, Partial> next;
    for (const auto& [used, partial] : states) {
      for (int r = 1; r <= k; ++r) {
        std::uint32_t bit = 1u << (r - 1);
        if (used & bit) continue;
        const MatEntry& e = at(r, c);
        if (e.kind == MatEntry::Kind::Zero) continue;
        // inversions contributed by placing row r after the rows already used
        int inv = 0;
        for (int s = r + 1; s <= k; ++s)
          if (used & (1u << (s - 1))) ++inv;
        RatQ sign(inv % 2 ? -1 : 1);
        Partial& dst = next[used | bit];
        for (const auto& [seq, coeff] : partial) {
          Seq s2 = seq;
          WeightScalar c2 = coeff * sign;
          if (e.kind == MatEntry::Kind::Scalar)
            c2 = c2 * e.scalar;
          else
            s2.push_back(e.root);
          auto it = dst.find(s2);
          if (it == dst.end())
            dst.emplace(std::move(s2), std::move(c2));
          else
            it->second += c2;
        }
      }
    }
    states = std::move(next);
  }
  EvaluatedTheta out;
  for (const auto& [used, partial] : states)
    for (const auto& [seq, coeff] : partial) {
      if (coeff.is_zero()) continue;
      PBWMonomial m(seq);
      auto it = out.find(m);
      if (it == out.end())
        out.emplace(m, coeff);
      else
        it->second += coeff;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

EvaluatedTheta theta_det(int n, const HighestWeight& lambda) { return theta_det(n, n, lambda); }

EvaluatedTheta theta_det(int k, int n, const HighestWeight& lambda) {
  if (lambda.rank() != n) throw std::invalid_argument("theta_det: rank mismatch");
  return ShapoMatrix(k, lambda).ldet();
}

// ---- inductive construction ----

NCPolyQ expand_theta(const ThetaQ& theta, const RewriteSystem& rs) {
  NCPolyQ r;
  for (const auto& [m, c] : theta) r += expand_pbw(m).scaled(c);
  return rs.normal_form(r);
}

ThetaQ normalize_pi0(const ThetaQ& theta, int n, int m) {
  auto it = theta.find(PBWMonomial::pi0(n, m));
  if (it == theta.end()) throw std::logic_error("normalize_pi0: the all-simple monomial has coefficient 0");
  RatQ inv = it->second.inverse();
  ThetaQ out;
  for (const auto& [mono, c] : theta) out.emplace(mono, c * inv);
  return out;
}

namespace {

NCPolyQ f_power(int beta, int k) { return NCPolyQ(Word(k, static_cast<char>(beta))); }

struct Step {
  NCPolyQ theta;  // normal form, pi^0 coefficient 1
  std::shared_ptr<const RewriteSystem> rs;
};

Step build_level(int n, int k, int m, const Weight& lambda, bool strict, InductiveTrace* trace) {
  if (k == 1) {
    auto rs = shared_serre_system(n, m);
    return {f_power(1, m), rs};
  }
  RootSystemA R(n);
  Weight mu = R.dot_reflect(k, lambda);
  int r = R.lambda_rho_pairing(mu, R.simple(k));
  if (strict && r < 1)
    throw std::invalid_argument("theta_inductive: step beta = alpha_" + std::to_string(k) + " has r = " +
                                std::to_string(r) + " (must be >= 1)");
  Step prev = build_level(n, k - 1, m, mu, strict, trace);
  int base = m * (k - 1);
  int need = r >= 0 ? base + m + r : (m + r >= 0 ? base + m : base - r);
  auto rs = shared_serre_system(n, std::max(need, m * k));
  std::optional<NCPolyQ> x;
  if (r >= 0) {
    NCPolyQ p = rs->normal_form(f_power(k, m + r) * prev.theta);
    x = right_divide(p, k, r, *rs);
  } else if (m + r >= 0) {
    x = rs->normal_form(f_power(k, m + r) * prev.theta * f_power(k, -r));
  } else {
    NCPolyQ p = rs->normal_form(prev.theta * f_power(k, -r));
    x = left_divide(p, k, -(m + r), *rs);
  }
  if (!x)
    throw std::logic_error("inductive step alpha_" + std::to_string(k) + ": negative F-power residue (r = " +
                           std::to_string(r) + ")");
  PbwBasis basis(rs);
  ThetaQ coords = basis.to_pbw(*x);
  auto it = coords.find(PBWMonomial::pi0(k, m));
  if (it == coords.end()) throw std::logic_error("inductive step: all-simple coefficient vanished");
  RatQ factor = it->second;
  if (m == 1 && factor != RatQ::v_pow(r + 1))
    throw std::logic_error("inductive step: normalization factor " + factor.to_string() + " is not v^" +
                           std::to_string(r + 1));
  if (trace) {
    trace->r.push_back(r);
    trace->factors.push_back(factor);
  }
  return {x->scaled(factor.inverse()), rs};
}

ThetaQ run_inductive(int n, int m, const Weight& lambda, bool strict, InductiveTrace* trace) {
  if (n < 1 || m < 1) throw std::invalid_argument("theta_inductive: need n >= 1 and m >= 1");
  if (lambda.rank() != n) throw std::invalid_argument("theta_inductive: weight rank mismatch");
  if (trace) *trace = {};
  Step s = build_level(n, n, m, lambda, strict, trace);
  PbwBasis basis(s.rs);
  return basis.to_pbw(s.theta);
}

}  // namespace

ThetaQ theta_inductive(int n, int m, const Weight& lambda, InductiveTrace* trace) {
  return run_inductive(n, m, lambda, true, trace);
}

ThetaQ theta_uniform(int n, int m, const Weight& lambda, InductiveTrace* trace) {
  return run_inductive(n, m, lambda, false, trace);
}

NCPolyQ theta_power_product(int n, int m, const Weight& lambda) {
  if (m < 1) throw std::invalid_argument("theta_power: m must be >= 1");
  RootSystemA R(n);
  auto rs = shared_serre_system(n, m * n);
  NCPolyQ prod(Word{});
  for (int i = m - 1; i >= 0; --i) {
    Weight li = R.sub(lambda, i * R.eta());
    NCPolyQ factor = expand_theta(theta_uniform(n, 1, li), *rs);
    prod = rs->normal_form(prod * factor);
  }
  return prod;
}

ThetaQ theta_power(int n, int m, const Weight& lambda) {
  NCPolyQ prod = theta_power_product(n, m, lambda);
  PbwBasis basis(shared_serre_system(n, m * n));
  return normalize_pi0(basis.to_pbw(prod), n, m);
}

// ---- reports ----

void Report::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, cap_witness(std::move(witness))});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }));
}

// ---- highest weight checks ----

namespace {

void hwv_checks(Report& rep, const VermaModule& M, const VermaVector& w, int klo, int khi, const std::string& where) {
  for (int k = klo; k <= khi; ++k) {
    VermaVector e = M.act_e(k, w);
    rep.add("e_" + std::to_string(k) + " kills theta v " + where, e.is_zero(), e.is_zero() ? "0" : e.to_string());
  }
}

}  // namespace

Report verify_hwv(int n, int m, bool symbolic, int samples, std::uint64_t seed) {
  Report rep;
  if (symbolic) {
    if (m != 1) throw std::invalid_argument("verify_hwv: symbolic mode covers m = 1 only");
    ShapoElement th = theta_sum(n);
    auto rs = shared_serre_system(n, n + 1);
    std::string tag = "(N=" + std::to_string(n) + ", symbolic)";
    VermaModule full(HighestWeight::symbolic(n), rs);
    VermaVector w = full.apply(evaluate(th, full.weight()));
    rep.add("theta v nonzero " + tag, !w.is_zero());
    rep.add("weight of theta v is lambda - eta " + tag, w.offset == RootSystemA(n).eta(), w.offset.to_string());
    hwv_checks(rep, full, w, 1, n - 1, tag);
    VermaModule hyp(HighestWeight::symbolic_on_hyperplane(n, 1), rs);
    VermaVector wh = hyp.apply(evaluate(th, hyp.weight()));
    hwv_checks(rep, hyp, wh, n, n, "(N=" + std::to_string(n) + ", symbolic on hyperplane)");
    return rep;
  }
  for (const auto& l : hyperplane_sample(n, m, samples, seed)) rep.append(verify_hwv_at(n, m, l));
  return rep;
}

Report verify_hwv_at(int n, int m, const Weight& lambda) {
  Report rep;
  HighestWeight L = HighestWeight::numeric(lambda);
  auto rs = shared_serre_system(n, m * n + 1);
  VermaModule M(L, rs);
  VermaVector w = m == 1 ? M.apply(evaluate(theta_sum(n), L)) : M.apply(theta_power_product(n, m, lambda));
  std::string tag = "(N=" + std::to_string(n) + ", m=" + std::to_string(m) + ", lambda=" + lambda.to_string() + ")";
  rep.add("theta v nonzero " + tag, !w.is_zero());
  hwv_checks(rep, M, w, 1, n, tag);
  return rep;
}

// ---- determinant shift identity ----

std::pair<Weight, Weight> doot_weights(int n, int p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("doot_weights: need N >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 3);
  // a_i = (mu+rho, alpha_i)
  std::vector<int> a(n);
  int s = 0;
  for (int i = 0; i < n - 2; ++i) {
    a[i] = seed == 0 ? 1 : pick(rng);
    s += a[i];
  }
  a[n - 2] = 1 - s;
  a[n - 1] = p;
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = a[i] - 1;
  Weight muw(mu);
  return {muw, RootSystemA(n).dot_reflect(n, muw)};
}

Report compare_doot(int n, int p, std::uint64_t seed) {
  if (n < 2 || p < 1) throw std::invalid_argument("compare_doot: need N >= 2 and p >= 1");
  Report rep;
  RootSystemA R(n);
  auto [mu, lambda] = doot_weights(n, p, seed);
  std::string tag = "(N=" + std::to_string(n) + ", p=" + std::to_string(p) + ", mu=" + mu.to_string() +
                    ", lambda=" + lambda.to_string() + ")";
  int le = R.lambda_rho_pairing(lambda, R.eta()), lb = R.lambda_rho_pairing(lambda, R.simple(n));
  rep.add("hypotheses (lambda+rho,eta)=1, (lambda+rho,beta)=-p " + tag, le == 1 && lb == -p,
          std::to_string(le) + ", " + std::to_string(lb));
  if (le != 1 || lb != -p) return rep;

  HighestWeight L = HighestWeight::numeric(lambda), Mu = HighestWeight::numeric(mu);
  RatQ c_top = -RatQ::q_pow(-1) * RatQ::v_pow(-p) * qint(p + 1);
  WeightScalar cl = h_value(n - 1, L);
  rep.add("c_{N-1}(lambda) = -q^-1 v^-p [p+1] " + tag, cl == L.constant(c_top), cl.to_string());
  bool same = true;
  std::string wit;
  for (int i = 1; i <= n - 2; ++i)
    if (h_value(i, L) != h_value(i, Mu)) {
      same = false;
      wit += "i=" + std::to_string(i) + " ";
    }
  rep.add("c_i(lambda) = h_i(mu) for i <= N-2 " + tag, same, wit);

  ShapoMatrix big(n, L);
  EvaluatedTheta small = theta_det(n - 1, n, Mu);
  // sum over J of H_J(mu) f_J and H_J(mu) f_{J_2}
  EvaluatedTheta sumJ, sumJ2;
  for (const auto& J : enumerate_JJ(n)) {
    WeightScalar H = Mu.constant(RatQ(1));
    for (int i : r_of(J, n - 1)) H = H * h_value(i, Mu);
    sumJ.emplace(PBWMonomial::from_index_set(J), H);
    sumJ2.emplace(PBWMonomial::from_index_set(J2_of(J, n)), H);
  }
  EvaluatedTheta d1 = big.minor(n, n).ldet(), d2 = big.minor(n, n - 1).ldet();
  rep.add("cofactor D_1 = sum H_J(mu) f_J " + tag, d1 == sumJ && small == sumJ, theta_text(d1));
  rep.add("cofactor D_2 = sum H_J(mu) f_{J_2} " + tag, d2 == sumJ2, theta_text(d2));

  auto rs = shared_serre_system(n, n + 2 * p + 1);
  NCPolyQ lhs = rs->normal_form(f_power(n, p + 1) * expand_theta(to_numeric(small), *rs));
  NCPolyQ rhs = rs->normal_form(expand_theta(to_numeric(big.ldet()), *rs).scaled(RatQ::v_pow(p + 1)) * f_power(n, p));
  NCPolyQ diff = lhs - rhs;
  rep.add("F^{p+1} det D^N(mu) = v^{p+1} det D^{N+1}(lambda) F^p " + tag, diff.is_zero(), diff.to_string());
  return rep;
}

// ---- serializers ----

std::string theta_text(const ShapoElement& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, H] : t.terms) {
    if (!s.empty()) s += " + ";
    s += m.to_string();
    auto lab = t.h_labels.find(m);
    if (lab != t.h_labels.end()) {
      if (!lab->second.empty()) s += "·" + labels_text(lab->second);
    } else if (!H.is_one()) {
      s += "·(" + H.to_string() + ")";
    }
  }
  return s;
}

std::string theta_text(const EvaluatedTheta& t) {
  return join_terms(t, [](const WeightScalar& c) {
    return c.is_constant() && c.constant_term().is_one() ? std::string() : c.to_string();
  });
}

std::string theta_text(const ThetaQ& t) {
  return join_terms(t, [](const RatQ& c) { return c.is_one() ? std::string() : c.to_string(); });
}

std::string theta_json(const ShapoElement& t) {
  nlohmann::json j;
  j["N"] = t.n;
  j["m"] = t.m;
  j["method"] = t.tag;
  j["terms"] = nlohmann::json::array();
  for (const auto& [m, H] : t.terms) {
    nlohmann::json term;
    term["pbw"] = pbw_json(m);
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [k, c] : H.terms()) h[key_text(k)] = c.to_string();
    term["h"] = h;
    auto lab = t.h_labels.find(m);
    if (lab != t.h_labels.end()) term["h_product"] = lab->second;
    j["terms"].push_back(term);
  }
  return j.dump(2) + "\n";
}

std::string theta_json(const EvaluatedTheta& t, int n, int m, const std::string& tag) {
  nlohmann::json j;
  j["N"] = n;
  j["m"] = m;
  j["method"] = tag;
  j["terms"] = nlohmann::json::array();
  for (const auto& [mono, c] : t) j["terms"].push_back({{"pbw", pbw_json(mono)}, {"coeff", c.to_string()}});
  return j.dump(2) + "\n";
}

std::string theta_json(const ThetaQ& t, int n, int m, const std::string& tag) {
  nlohmann::json j;
  j["N"] = n;
  j["m"] = m;
  j["method"] = tag;
  j["terms"] = nlohmann::json::array();
  for (const auto& [mono, c] : t) j["terms"].push_back({{"pbw", pbw_json(mono)}, {"coeff", c.to_string()}});
  return j.dump(2) + "\n";
}

std::string theta_latex(const ShapoElement& t) {
  std::string body;
  std::size_t k = 0;
  for (const auto& [m, H] : t.terms) {
    if (k) body += (k % 3 == 0) ? " \\\\\n&\\quad + " : " + ";
    body += m.to_latex();
    auto lab = t.h_labels.find(m);
    if (lab != t.h_labels.end())
      body += labels_latex(lab->second);
    else if (!H.is_one())
      body += "\\left(" + H.as_weight_scalar().to_latex() + "\\right)";
    ++k;
  }
  if (t.terms.empty()) body = "0";
  return latex_document(body);
}

std::string theta_latex(const EvaluatedTheta& t) {
  return latex_document(latex_terms(t, [](const WeightScalar& c) {
    return c.is_constant() && c.constant_term().is_one() ? std::string() : c.to_latex();
  }));
}

std::string theta_latex(const ThetaQ& t) {
  return latex_document(
      latex_terms(t, [](const RatQ& c) { return c.is_one() ? std::string() : c.to_latex(); }));
}

std::string report_json(const Report& r) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : r.checks)
    j.push_back({{"check_name", c.name}, {"status", c.ok ? "pass" : "fail"}, {"witness", c.witness}});
  nlohmann::json out;
  out["checks"] = j;
  out["passed"] = r.checks.size() - r.failures();
  out["failed"] = r.failures();
  return out.dump(2) + "\n";
}

}  // namespace qshapo
