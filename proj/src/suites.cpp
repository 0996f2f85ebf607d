#include "qshapo/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace qshapo {

namespace {

RatQ q(int e) { return RatQ::q_pow(e); }
RatQ v(int e) { return RatQ::v_pow(e); }

NCPolyQ letters(std::initializer_list<int> ls) { return NCPolyQ(make_word(std::vector<int>(ls))); }
NCPolyQ f_power(int beta, int k) { return NCPolyQ(Word(k, static_cast<char>(beta))); }

std::string idx(int a) { return std::to_string(a); }
std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Check that a vector vanishes, recording it as the witness otherwise.
void zero_check(Report& rep, const std::string& name, const VermaVector& w) {
  rep.add(name, w.is_zero(), w.is_zero() ? "0" : w.to_string());
}

void eq_check(Report& rep, const std::string& name, const VermaModule& M, const VermaVector& a,
              const VermaVector& b) {
  VermaVector d = M.add(a, M.scale(b, M.weight().constant(RatQ(-1))));
  zero_check(rep, name, d);
}

// [e_l, x] applied to w
VermaVector commutator(const VermaModule& M, int l, const NCPolyQ& x, const VermaVector& w) {
  VermaVector a = M.act_e(l, M.act_poly(x, w));
  VermaVector b = M.act_poly(x, M.act_e(l, w));
  return M.add(a, M.scale(b, M.weight().constant(RatQ(-1))));
}

std::vector<VermaVector> tails(const VermaModule& M) {
  std::vector<VermaVector> t{M.highest()};
  for (int l = 1; l <= M.rank(); ++l) t.push_back(M.act_f(l, M.highest()));
  return t;
}

NCPolyQ random_poly(std::mt19937_64& rng, int n, int deg, int avoid) {
  std::uniform_int_distribution<int> letter(1, n), co(-3, 3), ex(-2, 2);
  std::vector<int> ls;
  while (static_cast<int>(ls.size()) < deg) {
    int l = letter(rng);
    if (l != avoid || n == 1) ls.push_back(l);
  }
  NCPolyQ p;
  for (int t = 0; t < 3; ++t) {
    std::shuffle(ls.begin(), ls.end(), rng);
    int c = co(rng);
    p += NCPolyQ(make_word(ls)).scaled(RatQ(c == 0 ? 1 : c) * q(ex(rng)));
  }
  return p;
}

}  // namespace

std::string canonical_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"section2", "commutation"}, {"section3", "index-sums"}, {"section44", "shift"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

std::vector<std::string> suite_names() {
  return {"hwv", "commutation", "index-sums", "calculus", "shift", "doot", "inductive", "psi", "powers", "pbw"};
}

// ---- commutation relations ----

Report suite_commutation(int n) {
  Report rep;
  auto rs = shared_serre_system(n, n + 2);
  VermaModule M(HighestWeight::symbolic(n), rs);
  const HighestWeight& L = M.weight();
  RootSystemA R(n);
  std::string tag = " N=" + idx(n);
  auto ts = tails(M);

  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n + 1; ++j) {
      NCPolyQ fij = jimbo(i, j);
      for (int l = 1; l <= n; ++l) {
        std::string nm = "[e_" + idx(l) + ", f" + idx(i, j) + "]";
        if (l != i && l + 1 != j) {
          for (std::size_t t = 0; t < ts.size(); ++t)
            zero_check(rep, nm + " = 0 on tail " + idx(static_cast<int>(t)) + tag, commutator(M, l, fij, ts[t]));
        } else {
          VermaVector c = commutator(M, l, fij, M.highest());
          rep.add(nm + " != 0" + tag, !c.is_zero(), c.to_string());
        }
      }
    }

  // [e_i, f_{i,b}] = q f_{i+1,b} k_i^2 for i <= b-2
  for (int i = 1; i <= n; ++i)
    for (int b = i + 2; b <= n + 1; ++b)
      for (std::size_t t = 0; t < ts.size(); ++t) {
        VermaVector lhs = commutator(M, i, jimbo(i, b), ts[t]);
        VermaVector rhs = M.scale(M.act_poly(jimbo(i + 1, b), M.act_k(2 * R.simple(i), ts[t])), L.constant(q(1)));
        eq_check(rep, "[e_" + idx(i) + ", f" + idx(i, b) + "] = q f" + idx(i + 1, b) + " k^2 on tail " +
                          idx(static_cast<int>(t)) + tag,
                 M, lhs, rhs);
      }

  // [e_i, f_{a,i+1}] = -q^-1 f_{a,i} k_i^-2 for a < i
  for (int i = 2; i <= n; ++i)
    for (int a = 1; a < i; ++a)
      for (std::size_t t = 0; t < ts.size(); ++t) {
        VermaVector lhs = commutator(M, i, jimbo(a, i + 1), ts[t]);
        VermaVector rhs =
            M.scale(M.act_poly(jimbo(a, i), M.act_k(-2 * R.simple(i), ts[t])), L.constant(-q(-1)));
        eq_check(rep, "[e_" + idx(i) + ", f" + idx(a, i + 1) + "] = -q^-1 f" + idx(a, i) + " k^-2 on tail " +
                          idx(static_cast<int>(t)) + tag,
                 M, lhs, rhs);
      }

  // Factor analysis for f_J, J in the index sets
  auto noncommuting = [&](int i, const std::pair<int, int>& f) {
    return !commutator(M, i, jimbo(f.first, f.second), M.highest()).is_zero();
  };
  for (const auto& J : enumerate_II(n)) {
    PBWMonomial fJ = PBWMonomial::from_index_set(J);
    for (int i = 1; i <= n; ++i) {
      std::vector<std::pair<int, int>> bad;
      for (const auto& f : fJ.factors)
        if (noncommuting(i, f)) bad.push_back(f);
      std::string nm = "e_" + idx(i) + " vs factors of f_" + J.to_string();
      std::string wit;
      for (const auto& f : bad) wit += "f" + idx(f.first, f.second) + " ";
      rep.add(nm + ": at most one noncommuting factor" + tag, bad.size() <= 1, wit);

      bool isI = J.contains(i) && J.contains(i + 1);
      bool isMinus = J.contains(i) && !J.contains(i + 1) && i + 1 <= n;
      bool isPlus = J.contains(i + 1) && !J.contains(i) && i >= 2;
      std::optional<std::pair<int, int>> expect;
      if (isI) {
        expect = std::pair{i, i + 1};
      } else if (isMinus) {
        auto it = std::upper_bound(J.elems.begin(), J.elems.end(), i);
        expect = std::pair{i, *it};
      } else if (isPlus) {
        auto it = std::lower_bound(J.elems.begin(), J.elems.end(), i + 1);
        expect = std::pair{*(it - 1), i + 1};
      }
      if (expect) {
        bool has = std::find(fJ.factors.begin(), fJ.factors.end(), *expect) != fJ.factors.end();
        std::string kind = isI ? "I" : (isMinus ? "I-" : "I+");
        rep.add(nm + ": J = " + kind + ", only f" + idx(expect->first, expect->second) + " fails to commute" + tag,
                has && bad.size() == 1 && bad.front() == *expect, wit);
      } else {
        rep.add(nm + ": J is not I, I+ or I-, all factors commute" + tag, bad.empty(), wit);
      }
    }
  }
  return rep;
}

// ---- per-I identities ----

Report suite_index_sums(int n) {
  Report rep;
  auto rs = shared_serre_system(n, n + 1);
  VermaModule M(HighestWeight::symbolic(n), rs);
  VermaModule Mh(HighestWeight::symbolic_on_hyperplane(n, 1), rs);
  const HighestWeight& L = M.weight();
  RootSystemA R(n);
  RatQ d = (q(2) - q(-2)).inverse();
  RatQ dv = (v(1) - v(-1)).inverse();
  std::string tag = " N=" + idx(n);

  // s_j = (lambda+rho, sigma_j); v^{-s_j} and [s_j]
  auto v_neg_s = [&](const HighestWeight& W, int j) { return W.v_power(-1 * R.sigma(j), -j); };
  auto qs = [&](const HighestWeight& W, int j) { return W.qint_shift(R.sigma(j), j); };

  for (int i = 1; i <= n; ++i)
    for (const auto& I : enumerate_II(n)) {
      if (!in_S(I, i)) continue;
      Split sp = split_I(I, i, n);
      std::string nm = " i=" + idx(i) + " I=" + I.to_string() + tag;
      NCPolyQ fI1 = f_of(sp.I1), fI2 = f_of(sp.I2);
      bool single = sp.I2.size() == 1;

      // e_i f_I v = (q^2-q^-2)^-1 f_{I1} (k_i^2 - k_i^-2) f_{I2} v
      VermaVector eI = M.act_e(i, M.apply(f_of(I)));
      VermaVector I2v = M.apply(fI2);
      VermaVector lit = M.act_poly(
          fI1, M.scale(M.add(M.act_k(2 * R.simple(i), I2v),
                             M.scale(M.act_k(-2 * R.simple(i), I2v), L.constant(RatQ(-1)))),
                       L.constant(d)));
      eq_check(rep, "e_i f_I v = f_{I1}(k^2-k^-2)f_{I2} v/(q^2-q^-2)" + nm, M, eI, lit);
      VermaVector branch;
      if (single) {
        VermaVector hv = M.highest();
        VermaVector kk = M.add(M.act_k(2 * R.simple(i), hv), M.scale(M.act_k(-2 * R.simple(i), hv), L.constant(RatQ(-1))));
        branch = M.act_poly(fI1, M.scale(kk, L.constant(d)));
      } else {
        VermaVector w = M.apply(fI1 * fI2);
        VermaVector kk = M.add(M.scale(M.act_k(2 * R.simple(i), M.highest()), L.constant(q(2))),
                               M.scale(M.act_k(-2 * R.simple(i), M.highest()), L.constant(-q(-2))));
        // the k-part acts on v_lambda, so it is a scalar
        WeightScalar s = kk.terms.terms().at(Word()) * d;
        branch = M.scale(w, s);
      }
      eq_check(rep, std::string("e_i f_I v, ") + (single ? "I_2 singleton" : "I_2 not singleton") + " branch" + nm, M,
               eI, branch);

      // Cartan coefficient recursion
      if (sp.plus)
        rep.add("H_{I+} = h_{i-1} H_I" + nm, M.H_eval(*sp.plus) == L.canonical(M.h_eval(i - 1) * M.H_eval(I)));
      if (sp.minus)
        rep.add("H_{I-} = h_i H_I" + nm, M.H_eval(*sp.minus) == L.canonical(M.h_eval(i) * M.H_eval(I)));

      VermaVector fIv = M.apply(f_of(I));
      VermaVector term_I = M.scale(fIv, M.H_eval(I));
      VermaVector base = M.scale(M.apply(fI1 * fI2), M.H_eval(I));  // f_{I1} f_{I2} H_I v
      std::optional<VermaVector> term_plus, term_minus;
      if (sp.plus) term_plus = M.scale(M.apply(f_of(*sp.plus)), M.H_eval(*sp.plus));
      if (sp.minus) term_minus = M.scale(M.apply(f_of(*sp.minus)), M.H_eval(*sp.minus));

      if (i == 1 && term_minus)
        zero_check(rep, "e_1 (f_I H_I + f_{I-} H_{I-}) v = 0" + nm, M.act_e(1, M.add(term_I, *term_minus)));

      if (i > 1) {
        int delta = i == n ? 0 : 1;
        eq_check(rep, "e_i f_I H_I v = [(lambda,alpha_i)+" + idx(delta) + "] f_{I1} f_{I2} H_I v" + nm, M,
                 M.act_e(i, term_I), M.scale(base, L.qint_shift(R.simple(i), delta)));
        RatQ pre = i == n ? q(2) : RatQ(1);
        eq_check(rep, std::string("e_i f_{I+} H_{I+} v = ") + (i == n ? "q^2 " : "") +
                          "v^{-s_i}[s_{i-1}] f_{I1} f_{I2} H_I v" + nm,
                 M, M.act_e(i, *term_plus), M.scale(base, L.canonical(v_neg_s(L, i) * qs(L, i - 1) * pre)));
      }
      if (i > 1 && i < n) {
        eq_check(rep, "e_i f_{I-} H_{I-} v = -v^{-s_{i-1}}[s_i] f_{I1} f_{I2} H_I v" + nm, M, M.act_e(i, *term_minus),
                 M.scale(base, L.canonical(v_neg_s(L, i - 1) * qs(L, i) * RatQ(-1))));
        zero_check(rep, "e_i (f_I H_I + f_{I+} H_{I+} + f_{I-} H_{I-}) v = 0" + nm,
                   M.act_e(i, M.add(M.add(term_I, *term_plus), *term_minus)));
      }
      if (i == n && n >= 2) {
        // e_N (f_I H_I + f_{I+} H_{I+}) v = f_{I1} f_{I2} (v^{(lambda,alpha_N)} - v^{1-(lambda+rho, 2eta-alpha_N)})/(v-v^-1) H_I v
        RootVec g = R.simple(n) - 2 * R.eta();
        WeightScalar coef = (L.v_power(R.simple(n), 0) - L.v_power(g, 2 - 2 * n)) * dv;
        VermaVector lhs = M.act_e(n, M.add(term_I, *term_plus));
        eq_check(rep, "e_N (f_I H_I + f_{I+} H_{I+}) v closed form" + nm, M, lhs, M.scale(base, coef));
        VermaVector th = Mh.add(Mh.scale(Mh.apply(f_of(I)), Mh.H_eval(I)),
                                Mh.scale(Mh.apply(f_of(*sp.plus)), Mh.H_eval(*sp.plus)));
        zero_check(rep, "e_N (f_I H_I + f_{I+} H_{I+}) v = 0 on the hyperplane" + nm, Mh.act_e(n, th));
      }
    }

  // scalar identities
  for (int i = 2; i < n; ++i) {
    WeightScalar s = L.qint_shift(R.simple(i), 1) + v_neg_s(L, i) * qs(L, i - 1) - v_neg_s(L, i - 1) * qs(L, i);
    rep.add("[(lambda+rho,alpha_i)] + v^{-s_i}[s_{i-1}] - v^{-s_{i-1}}[s_i] = 0 i=" + idx(i) + tag, s.is_zero(),
            s.to_string());
  }
  if (n >= 1) {
    RootVec g = R.simple(n) - 2 * R.eta();
    const HighestWeight& H = Mh.weight();
    WeightScalar on = H.v_power(R.simple(n), 0) - H.v_power(g, 2 - 2 * n);
    rep.add("v^{(lambda,alpha_N)} = v^{1-(lambda+rho,2eta-alpha_N)} on the hyperplane" + tag, on.is_zero(),
            on.to_string());
    WeightScalar off = L.v_power(R.simple(n), 0) - L.v_power(g, 2 - 2 * n);
    rep.add("v^{(lambda,alpha_N)} != v^{1-(lambda+rho,2eta-alpha_N)} off the hyperplane" + tag, !off.is_zero(),
            off.to_string());
  }
  return rep;
}

// ---- adjoint calculus ----

Report suite_gauss(int lmax) {
  Report rep;
  for (int l = 2; l <= lmax; ++l)
    for (int i = 1; i <= l - 1; ++i) {
      RatQ lhs = v(-i * (l - 1 - i)) * qbinom(l - 1, i) + v(-(i + 1) * (l - i)) * qbinom(l - 1, i - 1);
      RatQ rhs = v(-i * (l - i)) * qbinom(l, i);
      rep.add("gaussian recursion l=" + idx(l) + " i=" + idx(i), lhs == rhs, (lhs - rhs).to_string());
    }
  return rep;
}

Report suite_calculus(int n, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  std::string tag = " N=" + idx(n);
  RootSystemA R(n);
  int cap = n <= 3 ? 10 : 9;
  auto rs = shared_serre_system(n, cap);
  for (int beta = 1; beta <= n; ++beta) {
    std::string bt = " beta=" + idx(beta) + tag;
    for (int t = 0; t < 4; ++t) {
      NCPolyQ x = random_poly(rng, n, 2, 0), y = random_poly(rng, n, 3, 0);
      NCPolyQ d = ad_F(x * y, beta, n) - (ad_F(x, beta, n) * y + sigma_aut(x, beta, n) * ad_F(y, beta, n));
      rep.add("sigma-derivation trial " + idx(t) + bt, d.is_zero(), d.to_string());
    }
    for (int k = 0; k <= 4; ++k) {
      NCPolyQ a = random_poly(rng, n, 2, 0), b = random_poly(rng, n, cap - 6, 0);
      NCPolyQ c = random_poly(rng, n, cap - n - 4, 0);
      rep.add("Leibniz delta^" + idx(k) + "(ab)" + bt, leibniz_check(a, b, beta, k, *rs));
      rep.add("Leibniz delta^" + idx(k) + "(f" + idx(1, n + 1) + " c)" + bt, leibniz_check(jimbo(1, n + 1), c, beta, k, *rs));
    }
    for (int b = 1; b <= n; ++b) {
      if (b == beta) continue;
      int k = 1 - R.cartan(beta, b);
      NCPolyQ top = ad_F_pow(letters({b}), beta, k, *rs), below = ad_F_pow(letters({b}), beta, k - 1, *rs);
      rep.add("Serre: ad_F^" + idx(k) + "(f_" + idx(b) + ") = 0" + bt, top.is_zero() && !below.is_zero(),
              top.to_string());
    }
    for (int k = 0; k <= 3; ++k) {
      NCPolyQ z = random_poly(rng, n, 3, 0);
      NCPolyQ lhs = sigma_aut(ad_F_pow(z, beta, k, *rs), beta, n);
      NCPolyQ rhs = ad_F_pow(sigma_aut(z, beta, n), beta, k, *rs).scaled(v(-2 * k));
      rep.add("sigma(delta^k z) = v^-2k delta^k sigma(z), k=" + idx(k) + bt, lhs == rhs, (lhs - rhs).to_string());
    }
    std::vector<NCPolyQ> us;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n + 1 && j - i <= 3; ++j) us.push_back(jimbo(i, j));
    us.push_back(random_poly(rng, n, 3, 0));
    for (std::size_t u = 0; u < us.size(); ++u)
      for (int ell = 0; ell <= 5; ++ell) {
        if (us[u].max_degree() + ell > cap) continue;
        NCPolyQ brute = rs->normal_form(f_power(beta, ell) * us[u]);
        NCPolyQ ex = fell_u_expand(ell, us[u], beta, *rs);
        rep.add("F^l u expansion l=" + idx(ell) + " u#" + idx(static_cast<int>(u)) + bt, ex == brute,
                (ex - brute).to_string());
      }
    for (int t = 0; t < 3; ++t) {
      NCPolyQ u = random_poly(rng, n, 1 + t, beta);
      for (int ell = 0; ell <= 5; ++ell) {
        if (u.max_degree() + ell > cap) continue;
        NCPolyQ a = lemx_expand(ell, u, beta, *rs), b = fell_u_expand(ell, u, beta, *rs);
        rep.add("truncated expansion l=" + idx(ell) + " trial " + idx(t) + bt, a == b, (a - b).to_string());
      }
    }
  }
  rep.append(suite_gauss(12));
  return rep;
}

// ---- F^{p+1} f_J and the determinant shift ----

Report suite_shift(int n, int pmax) {
  Report rep;
  if (n < 2) throw std::invalid_argument("suite_shift: need N >= 2");
  std::string tag = " N=" + idx(n);
  auto rs = shared_serre_system(n, n + 2 * pmax + 2);
  PbwBasis basis(rs);
  NCPolyQ F = letters({n});
  for (const auto& J : enumerate_JJ(n)) {
    NCPolyQ fJ = f_of(J);
    std::string nm = " J=" + J.to_string() + tag;
    NCPolyQ a = rs->normal_form(ad_F(fJ, n, n)) - rs->normal_form(f_of(J2_of(J, n)).scaled(-q(1)));
    rep.add("ad_F(f_J) = -q f_{J_2}" + nm, a.is_zero(), a.to_string());
    NCPolyQ b = rs->normal_form(fJ * F) - rs->normal_form(f_of(J1_of(J, n)));
    rep.add("f_J F = f_{J_1}" + nm, b.is_zero(), b.to_string());
    rep.add("ad_F^2(f_J) = 0" + nm, ad_F_pow(fJ, n, 2, *rs).is_zero());
    for (int p = 0; p <= pmax; ++p) {
      RatQ c = -q(-1) * v(-p) * qint(p + 1);
      NCPolyQ lhs = rs->normal_form(f_power(n, p + 1) * fJ);
      NCPolyQ rhs = rs->normal_form(((f_of(J1_of(J, n)) + f_of(J2_of(J, n)).scaled(c)) * f_power(n, p)).scaled(v(p + 1)));
      rep.add("F^{p+1} f_J = v^{p+1}(f_{J_1} + c_{N-1} f_{J_2}) F^p, p=" + idx(p) + nm, lhs == rhs,
              (lhs - rhs).to_string());
    }
  }
  // all-simple J: coefficient of f_[N+1] F^p in F^{p+1} f_[N]
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  IndexSet full(all);
  for (int p = 0; p <= pmax; ++p) {
    auto coords = basis.to_pbw(rs->normal_form(f_power(n, p + 1) * f_of(full)));
    PBWMonomial target = PBWMonomial::from_index_set(J1_of(full, n));
    for (int k = 0; k < p; ++k) target.factors.emplace_back(n, n + 1);
    auto it = coords.find(target);
    bool ok = it != coords.end() && it->second == v(p + 1) && coords.size() == 2;
    rep.add("F^{p+1} f_[N] has coefficient v^{p+1} on f_[N+1] F^p, p=" + idx(p) + tag, ok, theta_text(coords));
  }
  for (int p = 1; p <= pmax; ++p) rep.append(compare_doot(n, p));
  return rep;
}

// ---- inductive construction ----

Report suite_inductive(int n, int samples, std::uint64_t seed) {
  Report rep;
  std::string tag = " N=" + idx(n);
  ShapoElement th = theta_sum(n);
  for (const auto& l : lambda_sample(n, 1, samples, seed)) {
    std::string nm = " lambda=" + l.to_string() + tag;
    HighestWeight L = HighestWeight::numeric(l);
    ThetaQ sum = to_numeric(evaluate(th, L));
    ThetaQ det = to_numeric(theta_det(n, L));
    InductiveTrace trace;
    ThetaQ ind;
    std::string err;
    try {
      ind = theta_inductive(n, 1, l, &trace);
    } catch (const std::exception& e) {
      err = e.what();
    }
    rep.add("inductive construction stays in U (no negative F-powers)" + nm, err.empty(), err);
    if (!err.empty()) continue;
    bool pos = true;
    for (std::size_t k = 0; k < trace.r.size(); ++k)
      if (trace.r[k] < 1 || trace.factors[k] != v(trace.r[k] + 1)) pos = false;
    rep.add("each step has r >= 1 and factor v^{r+1}" + nm, pos);
    rep.add("normalized inductive = sum formula" + nm, ind == sum, theta_text(ind));
    rep.add("determinant = sum formula" + nm, det == sum, theta_text(det));
  }
  return rep;
}

Report suite_psi(int n) {
  Report rep;
  std::string tag = " N=" + idx(n);
  auto rs = shared_serre_system(n, 2 * n + 6);
  for (int beta = 1; beta <= n; ++beta)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        if (i <= beta && beta < j) continue;  // f_{i,j} contains the letter beta
        rep.add("Psi_r(F u F^-1) = Psi_{r+1}(u), u=f" + idx(i, j) + " beta=" + idx(beta) + tag,
                psi_shift_check(jimbo(i, j), beta, *rs));
      }
  return rep;
}

// ---- powers ----

Report suite_powers(int n, int m, const std::vector<Weight>& lambdas) {
  Report rep;
  RootSystemA R(n);
  for (const auto& l : lambdas) {
    std::string nm = " N=" + idx(n) + " m=" + idx(m) + " lambda=" + l.to_string();
    int h = R.lambda_rho_pairing(l, R.eta());
    rep.add("(lambda+rho, eta) = m" + nm, h == m, idx(h));
    if (h != m) continue;
    auto rs = shared_serre_system(n, m * n + 1);
    VermaModule M(HighestWeight::numeric(l), rs);
    NCPolyQ prod = theta_power_product(n, m, l);
    VermaVector w = M.apply(prod);
    rep.add("product of m = 1 factors is nonzero" + nm, !w.is_zero());
    rep.add("weight is lambda - m eta" + nm, w.offset == m * R.eta(), w.offset.to_string());
    for (int k = 1; k <= n; ++k) {
      VermaVector e = M.act_e(k, w);
      rep.add("e_" + idx(k) + " kills the product" + nm, e.is_zero(), e.to_string());
    }
    ThetaQ pw = theta_power(n, m, l);
    VermaVector wp = M.apply(from_numeric(pw, n));
    rep.add("normalized power is a highest weight vector" + nm, M.is_hwv(wp));
    if (m == 1) {
      ThetaQ sum = to_numeric(evaluate(theta_sum(n), HighestWeight::numeric(l)));
      rep.add("m = 1 power = sum formula" + nm, pw == sum, theta_text(pw));
    }
    std::string err;
    ThetaQ uni;
    try {
      uni = theta_uniform(n, m, l);
    } catch (const std::exception& e) {
      err = e.what();
    }
    rep.add("uniform construction at m stays in U" + nm, err.empty(), err);
    if (err.empty()) rep.add("power = normalized uniform construction" + nm, uni == pw, theta_text(uni));
  }
  return rep;
}

// ---- PBW audit ----

Report suite_pbw(int n, int max_height, int cap) {
  Report rep;
  std::string tag = " N=" + idx(n);
  auto rs = shared_serre_system(n, std::max(cap, max_height));
  std::size_t checked = 0;
  std::string bad;
  std::vector<int> mu(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n) {
      RootVec r(mu);
      std::size_t d = dim_weight_space(*rs, r);
      std::uint64_t kc = kostant_count(r);
      ++checked;
      if (d != kc) bad += r.to_string() + ": " + std::to_string(d) + " vs " + std::to_string(kc) + "; ";
      return;
    }
    for (int x = 0; x <= left; ++x) {
      mu[k] = x;
      self(self, k + 1, left - x);
    }
  };
  rec(rec, 0, max_height);
  rep.add("weight-space dimensions = Kostant counts, " + std::to_string(checked) + " weights of height <= " +
              idx(max_height) + tag,
          bad.empty(), bad);
  RewriteSystem small = build_serre_system(n, cap);
  ConfluenceReport cr = audit_confluence(small, cap);
  std::string w;
  for (const auto& f : cr.failures) w += f + "; ";
  rep.add("confluence audit cap " + idx(cap) + " (" + std::to_string(cr.overlaps_checked) + " overlaps)" + tag,
          cr.ok(), w);
  return rep;
}

}  // namespace qshapo
