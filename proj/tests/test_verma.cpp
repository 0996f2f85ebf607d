#include <doctest.h>

#include <algorithm>
#include <random>

#include "qshapo/verma.hpp"

using namespace qshapo;

namespace {

RatQ q(int e) { return RatQ::q_pow(e); }
RatQ v(int e) { return RatQ::v_pow(e); }

WeightScalar y(int n, int i, int e = 1) { return WeightScalar::var(n, i).pow(e); }

// Random vector in M(lambda): a combination of normal words of one multidegree.
VermaVector random_vector(const VermaModule& M, std::mt19937_64& rng, int height) {
  int n = M.rank();
  std::uniform_int_distribution<int> letter(1, n), co(1, 4), ex(-2, 2);
  std::vector<int> ls;
  for (int k = 0; k < height; ++k) ls.push_back(letter(rng));
  NCPolyW x;
  for (int t = 0; t < 3; ++t) {
    std::shuffle(ls.begin(), ls.end(), rng);
    WeightScalar c = WeightScalar::monomial(std::vector<int>(n, 0), RatQ(co(rng)) * q(ex(rng)));
    c += WeightScalar::monomial([&] {
      std::vector<int> e(n, 0);
      e[letter(rng) - 1] = ex(rng);
      return e;
    }(), RatQ(co(rng)));
    x.add(make_word(ls), c);
  }
  return M.apply(x);
}

}  // namespace

TEST_CASE("generator actions on small vectors") {
  int n = 2;
  VermaModule M(HighestWeight::symbolic(n), shared_serre_system(n, 8));
  VermaVector v0 = M.highest();
  VermaVector f1 = M.act_f(1, v0);
  CHECK(f1.terms == NCPolyW(make_word({1}), WeightScalar(n, RatQ(1))));
  CHECK(f1.offset == RootVec({1, 0}));
  VermaVector f21 = M.act_f(2, f1);
  CHECK(f21.terms == NCPolyW(make_word({2, 1}), WeightScalar(n, RatQ(1))));
  // f2 f2 f1 is reduced by a Serre rule
  VermaVector f221 = M.act_f(2, f21);
  CHECK(f221.terms == lift(M.system().normal_form(NCPolyQ(make_word({2, 2, 1}))), n));
  CHECK(f221.terms.terms().count(make_word({2, 2, 1})) == 0);

  CHECK(M.act_k(RootVec({1, 0}), v0).terms.terms().begin()->second == y(n, 1));
  CHECK(M.act_k(RootVec({2, 0}), v0).terms.terms().begin()->second == y(n, 1, 2));
  CHECK(M.act_k(RootVec({1, 0}), f1).terms.terms().begin()->second == y(n, 1) * q(-2));

  RatQ d = (q(2) - q(-2)).inverse();
  VermaVector e1f1 = M.act_e(1, f1);
  CHECK(e1f1.offset == RootVec({0, 0}));
  CHECK(e1f1.terms.terms().at(Word()) == (y(n, 1, 2) - y(n, 1, -2)) * d);
  CHECK(M.act_e(1, M.act_f(2, v0)).is_zero());
  // e f f v = ([a] + [a-2]) f v = [2][a-1] f v
  VermaVector e1f11 = M.act_e(1, M.act_f(1, f1));
  RootVec a1({1, 0});
  const HighestWeight& L = M.weight();
  CHECK(e1f11.terms.terms().at(make_word({1})) == L.qint_shift(a1, 0) + L.qint_shift(a1, -2));
  CHECK(e1f11.terms.terms().at(make_word({1})) == L.qint_shift(a1, -1) * qint(2));
}

TEST_CASE("numeric and hyperplane weights") {
  HighestWeight num = HighestWeight::numeric(Weight({3, -1}));
  CHECK(num.y_power(RootVec({1, 0})).constant_term() == q(3));
  CHECK(num.y_power(RootVec({1, 1})).constant_term() == q(2));
  CHECK(num.lambda_rho(RootVec({1, 1})) == 4);
  HighestWeight hp = HighestWeight::symbolic_on_hyperplane(3, 1);
  // y1 y2 y3 = q^{1-3}
  CHECK(hp.y_power(RootVec({1, 1, 1})) == WeightScalar(3, q(-2)));
  CHECK(hp.y_power(RootVec({0, 0, 1})) == WeightScalar::monomial({-1, -1, 0}, q(-2)));
  HighestWeight hp2 = HighestWeight::symbolic_on_hyperplane(2, 3);
  CHECK(hp2.y_power(RootVec({2, 2})) == WeightScalar(2, q(2)));
}

TEST_CASE("defining relations hold as operators on M(lambda)") {
  std::mt19937_64 rng(8);
  RatQ d = (q(2) - q(-2)).inverse();
  for (int n = 1; n <= 4; ++n) {
    for (int mode = 0; mode < 2; ++mode) {
      HighestWeight L = mode == 0 ? HighestWeight::symbolic(n) : HighestWeight::symbolic_on_hyperplane(n, 2);
      VermaModule M(L, shared_serre_system(n, 8));
      RootSystemA R(n);
      for (int trial = 0; trial < 4; ++trial) {
        VermaVector w = random_vector(M, rng, 1 + trial);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            VermaVector lhs = M.add(M.act_e(i, M.act_f(j, w)), M.scale(M.act_f(j, M.act_e(i, w)), L.constant(RatQ(-1))));
            if (i == j) {
              VermaVector kk = M.add(M.act_k(2 * R.simple(i), w),
                                     M.scale(M.act_k(-2 * R.simple(i), w), L.constant(RatQ(-1))));
              CHECK(lhs == M.scale(kk, L.constant(d)));
            } else {
              CHECK(lhs.is_zero());
            }
            // k_i f_j k_i^-1 = q^{-a_ij} f_j
            RootVec gi = R.simple(i);
            CHECK(M.act_k(gi, M.act_f(j, w)) == M.scale(M.act_f(j, M.act_k(gi, w)), L.constant(q(-R.cartan(i, j)))));
          }
        // weight bookkeeping: k_gamma scales by q^{(lambda - nu, gamma)}
        for (int i = 1; i <= n; ++i) {
          RootVec g = R.sigma(i);
          WeightScalar expect = L.y_power(g) * q(-R.pairing(w.offset, g));
          CHECK(M.act_k(g, w) == M.scale(w, expect));
        }
      }
    }
  }
}

TEST_CASE("h and H evaluation") {
  VermaModule M0(HighestWeight::numeric(Weight({0, 2})), shared_serre_system(2, 4));
  CHECK(M0.h_eval(1).constant_term() == -q(-1));
  // (lambda+rho, sigma_2) = 4
  CHECK(M0.h_eval(2).constant_term() == -q(-1) * v(-3) * qint(4));
  for (int n = 1; n <= 4; ++n) {
    VermaModule M(HighestWeight::symbolic(n), shared_serre_system(n, 4));
    for (int i = 1; i <= n; ++i) CHECK(M.h_eval(i) == M.cartan_eval(CartanElement::h(i, n)));
    std::vector<int> full(n + 1);
    for (int i = 0; i <= n; ++i) full[i] = i + 1;
    CHECK(M.H_eval(IndexSet(full)) == WeightScalar(n, RatQ(1)));
    CHECK(M.cartan_eval(CartanElement::one(n)) == WeightScalar(n, RatQ(1)));
  }
  VermaModule M2(HighestWeight::symbolic(2), shared_serre_system(2, 4));
  CHECK(M2.H_eval(IndexSet({1, 3})) == M2.h_eval(1));
  // symbolic h_1 = -q^-1 (y1^2 - v^-2 y1^-2) / (v - v^-1) after pulling out v^{-(lambda, alpha_1)}
  WeightScalar h1 = (y(2, 1, 2) - y(2, 1, -2) * v(-2)) * (-q(-1) * (v(1) - v(-1)).inverse());
  CHECK(M2.h_eval(1) == h1 * y(2, 1, -2) * v(1));
  VermaModule M3(HighestWeight::symbolic(3), shared_serre_system(3, 4));
  CHECK(M3.H_eval(IndexSet({1, 4})) == M3.h_eval(1) * M3.h_eval(2));
  // numeric evaluation agrees with the symbolic form
  VermaModule Mn(HighestWeight::numeric(Weight({2, -3, 1})), shared_serre_system(3, 4));
  for (int i = 1; i <= 3; ++i) CHECK(Mn.h_eval(i).constant_term() == M3.h_eval(i).eval({2, -3, 1}));
}

TEST_CASE("highest weight vector test") {
  VermaModule M(HighestWeight::symbolic(3), shared_serre_system(3, 6));
  CHECK(M.is_hwv(M.highest()));
  CHECK_FALSE(M.is_hwv(M.act_f(1, M.highest())));
  CHECK_FALSE(M.is_hwv(VermaVector{RootVec::zero(3), {}}));
  // f_1^{a+1} v is highest weight at a numeric dominant weight (lambda, alpha_1) = a
  VermaModule Mn(HighestWeight::numeric(Weight({2, 0, 5})), shared_serre_system(3, 6));
  VermaVector w = Mn.highest();
  for (int k = 0; k < 3; ++k) w = Mn.act_f(1, w);
  CHECK(Mn.is_hwv(w));
  CHECK_FALSE(Mn.is_hwv(Mn.act_f(1, Mn.act_f(1, Mn.highest()))));
}
