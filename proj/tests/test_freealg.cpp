#include <doctest.h>

#include <functional>
#include <random>

#include "qshapo/freealg.hpp"

using namespace qshapo;

namespace {

RatQ two_v() { return RatQ::v_pow(1) + RatQ::v_pow(-1); }

// All weights in Q+ of the given height.
std::vector<RootVec> weights_of_height(int n, int h) {
  std::vector<RootVec> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      cur[k] = left;
      out.emplace_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[k] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, h);
  return out;
}

NCPolyQ random_poly(std::mt19937_64& rng, int n, int deg) {
  std::uniform_int_distribution<int> letter(1, n), co(-3, 3), terms(1, 4);
  NCPolyQ p;
  int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> ls;
    for (int i = 0; i < deg; ++i) ls.push_back(letter(rng));
    int c = co(rng);
    p.add(make_word(ls), RatQ(c == 0 ? 1 : c) * RatQ::q_pow(co(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("serre relations") {
  CHECK(serre_relations(1).empty());
  CHECK(serre_relations(2).size() == 2);
  auto r3 = serre_relations(3);
  int cubic = 0, quad = 0;
  for (const auto& r : r3) (r.max_degree() == 3 ? cubic : quad)++;
  CHECK(cubic == 4);
  CHECK(quad == 1);
}

TEST_CASE("empty relations leave every word normal") {
  RewriteSystem rs = complete(2, {}, 5);
  CHECK(rs.rules().empty());
  CHECK(dim_weight_space(rs, RootVec({2, 2})) == 6);
}

TEST_CASE("N=2 rewriting examples") {
  RewriteSystem rs = build_serre_system(2, 6);
  CHECK(dim_weight_space(rs, RootVec({1, 1})) == 2);
  NCPolyQ w12(make_word({1, 2}));
  CHECK(rs.normal_form(w12) == w12);
  // f2 f1 f1 is the leading word of its Serre relation
  NCPolyQ expect;
  expect.add(make_word({1, 2, 1}), two_v());
  expect.add(make_word({1, 1, 2}), RatQ(-1));
  CHECK(rs.normal_form(NCPolyQ(make_word({2, 1, 1}))) == expect);
  for (const auto& r : serre_relations(2)) CHECK(rs.normal_form(r).is_zero());
  CHECK_THROWS_AS(rs.normal_form(NCPolyQ(make_word({1, 2, 1, 2, 1, 2, 1}))), CapExceeded);
}

TEST_CASE("N=3 dimension example") {
  RewriteSystem rs = build_serre_system(3, 6);
  CHECK(dim_weight_space(rs, RootVec({1, 1, 1})) == 4);
  CHECK(dim_weight_space(rs, RootVec({2, 2, 2})) == kostant_count(RootVec({2, 2, 2})));
  CHECK(dim_weight_space(rs, RootVec({1, 0, 0})) == 1);
}

TEST_CASE("basis and confluence audit for N <= 4 up to height 8") {
  for (int n = 1; n <= 4; ++n) {
    RewriteSystem rs = build_serre_system(n, 8);
    ConfluenceReport rep = audit_confluence(rs, 8);
    CHECK(rep.ok());
    for (int h = 0; h <= 8; ++h)
      for (const auto& mu : weights_of_height(n, h)) CHECK(dim_weight_space(rs, mu) == kostant_count(mu));
  }
}

TEST_CASE("normal form is linear, idempotent and homogeneous") {
  RewriteSystem rs = build_serre_system(3, 7);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    NCPolyQ a = random_poly(rng, 3, 5), b = random_poly(rng, 3, 5);
    NCPolyQ na = rs.normal_form(a);
    CHECK(rs.normal_form(na) == na);
    CHECK(rs.normal_form(a + b) == na + rs.normal_form(b));
    for (const auto& [w, c] : na.terms()) CHECK(rs.is_normal(w));
    // homogeneity on a single word
    const Word& w = a.terms().begin()->first;
    NCPolyQ nw = rs.normal_form(NCPolyQ(w));
    for (const auto& [x, c] : nw.terms())
      CHECK(multidegree(x, 3) == multidegree(w, 3));
  }
}

TEST_CASE("ideal members reduce to zero") {
  RewriteSystem rs = build_serre_system(3, 7);
  std::mt19937_64 rng(11);
  auto rels = serre_relations(3);
  for (int trial = 0; trial < 30; ++trial) {
    NCPolyQ left = random_poly(rng, 3, trial % 3), right = random_poly(rng, 3, (trial / 3) % 3);
    const NCPolyQ& r = rels[trial % rels.size()];
    CHECK(rs.normal_form(left * r * right).is_zero());
  }
}

TEST_CASE("rewrite system serialization round trip") {
  RewriteSystem rs = build_serre_system(3, 6);
  std::string text = rs.serialize();
  RewriteSystem back = RewriteSystem::deserialize(text);
  CHECK(back.serialize() == text);
  CHECK(back.cap() == 6);
  CHECK(back.rules().size() == rs.rules().size());
  CHECK_THROWS(RewriteSystem::deserialize("qshapo-rewrite-system 99\n"));
  CHECK_THROWS(RewriteSystem::deserialize(text.substr(0, text.size() / 2)));
}

TEST_CASE("completion budget") {
  CompletionLimits lim;
  lim.max_rules = 2;
  CHECK_THROWS_AS(build_serre_system(3, 6, lim), BudgetExceeded);
}
