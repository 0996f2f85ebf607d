#include <doctest.h>

#include <map>

#include "qshapo/roots.hpp"

using namespace qshapo;

namespace {

// Coefficients of prod over positive roots of 1/(1 - x^beta), truncated to the box <= bound.
std::map<std::vector<int>, std::uint64_t> partition_series(int n, const std::vector<int>& bound) {
  std::map<std::vector<int>, std::uint64_t> series{{std::vector<int>(n, 0), 1}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      // multiply by the geometric series in x^{alpha_i+...+alpha_{j-1}}
      std::map<std::vector<int>, std::uint64_t> next;
      for (const auto& [e, c] : series) {
        std::vector<int> cur = e;
        while (true) {
          next[cur] += c;
          bool ok = true;
          for (int t = i; t < j; ++t)
            if (++cur[t - 1] > bound[t - 1]) ok = false;
          if (!ok) break;
        }
      }
      series = std::move(next);
    }
  return series;
}

}  // namespace

TEST_CASE("pairing examples") {
  RootSystemA r2(2), r3(3);
  CHECK(r2.pairing(r2.simple(1), r2.simple(1)) == 2);
  CHECK(r2.pairing(r2.simple(1), r2.simple(2)) == -1);
  CHECK(r3.pairing(r3.eta(), r3.eta()) == 2);
  CHECK_THROWS(r3.pairing(r2.simple(1), r3.simple(1)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(r3.pairing(r3.simple(i), r3.simple(j)) == r3.cartan(i, j));
}

TEST_CASE("special vectors") {
  RootSystemA r2(2), r3(3);
  CHECK(r2.sigma(1) == RootVec({1, 0}));
  CHECK(r2.eta() == RootVec({1, 1}));
  CHECK(r3.rho_pairing(r3.eta()) == 3);
  CHECK(r2.rho_pairing(r2.sigma(1)) == 1);
  for (int i = 1; i <= 3; ++i) CHECK(r3.rho_pairing(r3.sigma(i)) == i);
}

TEST_CASE("enumerate_II") {
  CHECK(enumerate_II(1) == std::vector<IndexSet>{IndexSet({1, 2})});
  CHECK(enumerate_II(2) == std::vector<IndexSet>{IndexSet({1, 3}), IndexSet({1, 2, 3})});
  CHECK(enumerate_II(3) == std::vector<IndexSet>{IndexSet({1, 4}), IndexSet({1, 2, 4}),
                                                 IndexSet({1, 3, 4}), IndexSet({1, 2, 3, 4})});
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_II(n).size() == (1u << (n - 1)));
    CHECK(kostant_count(RootSystemA(n).eta()) == (1u << (n - 1)));
  }
}

TEST_CASE("r_of") {
  CHECK(r_of(IndexSet({1, 3}), 2) == std::set<int>{1});
  CHECK(r_of(IndexSet({1, 2, 3}), 2).empty());
  CHECK(r_of(IndexSet({1, 2, 4}), 3) == std::set<int>{2});
  CHECK_THROWS(r_of(IndexSet({1, 2}), 2));
}

TEST_CASE("split_I examples") {
  Split s = split_I(IndexSet({1, 2, 3, 4}), 2, 3);
  CHECK(*s.plus == IndexSet({1, 3, 4}));
  CHECK(*s.minus == IndexSet({1, 2, 4}));
  CHECK(s.I1 == IndexSet({1, 2}));
  CHECK(s.I2 == IndexSet({3, 4}));
  CHECK(s.I1p == IndexSet({1}));
  CHECK(s.I2m == IndexSet({4}));

  Split t = split_I(IndexSet({1, 2, 3}), 1, 2);
  CHECK(!t.plus);
  CHECK(*t.minus == IndexSet({1, 3}));
  Split u = split_I(IndexSet({1, 2, 3}), 2, 2);
  CHECK(!u.minus);
  CHECK(*u.plus == IndexSet({1, 3}));
  CHECK_THROWS(split_I(IndexSet({1, 3}), 1, 2));
}

TEST_CASE("split properties, exhaustive for N <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<std::pair<IndexSet, IndexSet>> pairs;
      int members = 0;
      for (const auto& I : enumerate_II(n)) {
        if (!in_S(I, i)) continue;
        ++members;
        Split s = split_I(I, i, n);
        auto r = r_of(I, n);
        if (s.plus) {
          auto rp = r;
          rp.insert(i - 1);
          CHECK(r_of(*s.plus, n) == rp);
        }
        if (s.minus) {
          auto rm = r;
          rm.insert(i);
          CHECK(r_of(*s.minus, n) == rm);
        }
        std::vector<int> joined = s.I1.elems;
        joined.insert(joined.end(), s.I2.elems.begin(), s.I2.elems.end());
        CHECK(IndexSet(joined) == I);
        pairs.insert({s.I1, s.I2});
      }
      CHECK(static_cast<int>(pairs.size()) == members);
    }
  }
}

TEST_CASE("J family") {
  auto js = enumerate_JJ(3);
  CHECK(js == std::vector<IndexSet>{IndexSet({1, 3}), IndexSet({1, 2, 3})});
  CHECK(J1_of(IndexSet({1, 3}), 3) == IndexSet({1, 3, 4}));
  CHECK(J2_of(IndexSet({1, 3}), 3) == IndexSet({1, 4}));
  CHECK(J2_of(IndexSet({1, 2, 3}), 3) == IndexSet({1, 2, 4}));
}

TEST_CASE("dot_reflect") {
  RootSystemA r2(2), r4(4);
  CHECK(r2.dot_reflect(1, Weight({0, 0})) == Weight({-2, 1}));
  CHECK(r4.dot_reflect(3, Weight({-1, -1, -1, -1})) == Weight({-1, -1, -1, -1}));
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int i = 1; i <= 2; ++i) {
        Weight l({a, b});
        CHECK(r2.dot_reflect(i, r2.dot_reflect(i, l)) == l);
      }
  // s.lambda = lambda - (lambda+rho, alpha_i) alpha_i
  Weight l({2, -3, 1, 0});
  for (int i = 1; i <= 4; ++i)
    CHECK(r4.dot_reflect(i, l) == r4.sub(l, r4.lambda_rho_pairing(l, r4.simple(i)) * r4.simple(i)));
}

TEST_CASE("hyperplane samples") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto ws = hyperplane_sample(n, m, 20, 1234 + n);
      std::set<Weight> distinct(ws.begin(), ws.end());
      CHECK(distinct.size() == 20);
      RootSystemA rs(n);
      for (const auto& w : ws) CHECK(rs.lambda_rho_pairing(w, rs.eta()) == m);
      CHECK(hyperplane_sample(n, m, 20, 1234 + n) == ws);
    }
  CHECK_THROWS(hyperplane_sample(2, 1, 0, 1));
}

TEST_CASE("lambda samples give positive reflection data") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m) {
      RootSystemA rs(n);
      auto ws = lambda_sample(n, m, 10, 99);
      CHECK(ws.size() == 10);
      for (const auto& l : ws) {
        CHECK(rs.lambda_rho_pairing(l, rs.eta()) == m);
        Weight cur = l;
        for (int k = n; k >= 2; --k) {
          Weight mu = rs.dot_reflect(k, cur);
          CHECK(rs.lambda_rho_pairing(mu, rs.simple(k)) >= 1);
          cur = mu;
        }
        CHECK(rs.lambda_rho_pairing(cur, rs.simple(1)) == m);
      }
    }
}

TEST_CASE("kostant count against the generating series") {
  CHECK(kostant_count(RootVec({1, 1})) == 2);
  CHECK(kostant_count(RootVec({1, 1, 1})) == 4);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> bound(n, 3);
    auto series = partition_series(n, bound);
    for (const auto& [e, c] : series) CHECK(kostant_count(RootVec(e)) == c);
  }
  CHECK(kostant_count(RootVec({2, 2, 2})) == partition_series(3, {2, 2, 2})[{2, 2, 2}]);
}
