#include "oracles.hpp"
#include "rtint/error.hpp"
#include "rtint/lie.hpp"

#include <doctest.h>

#include <set>

using namespace rtint;

namespace {

const char* const kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "B6", "B7",
                                 "C3", "C4", "C5", "C6", "C7", "D4", "D5", "D6", "D7", "E6", "E7"};

Weight W(std::initializer_list<int> c) { return Weight(std::vector<int>(c)); }

// Roots are the Weyl orbits of the simple roots.
std::set<Weight> all_roots_oracle(const RootSystem& rs) {
  const auto group = oracle::weyl_group(rs);
  std::set<Weight> out;
  for (int i = 0; i < rs.rank(); ++i)
    for (const auto& w : group) out.insert(oracle::apply(rs, w, rs.simple_root_weight(i)));
  return out;
}

}  // namespace

TEST_CASE("type parsing") {
  CHECK(LieType::parse("A2").name() == "A2");
  CHECK(LieType::parse("e7").rank() == 7);
  CHECK_THROWS_AS(LieType::parse("E8"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse("F4"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse("G2"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse("B1"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse("D3"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse("Q2"), HypothesisError);
  CHECK_THROWS_AS(LieType::parse(""), HypothesisError);
}

TEST_CASE("positive roots against the Weyl orbit of the simple roots") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "A5"}) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name));
    const auto roots = all_roots_oracle(rs);
    CHECK(roots.size() == 2 * rs.positive_roots().size());
    for (const auto& a : rs.positive_roots()) {
      CHECK(roots.count(rs.root_to_weight(a)) == 1);
      for (int c : a.coords) CHECK(c >= 0);
    }
  }
  CHECK(positive_roots(LieType::parse("A1")).size() == 1);
  CHECK(positive_roots(LieType::parse("A2")).size() == 3);
  CHECK(positive_roots(LieType::parse("B2")).size() == 4);
  const auto a2 = positive_roots(LieType::parse("A2"));
  const std::set<Root> expected{Root({1, 0}), Root({0, 1}), Root({1, 1})};
  CHECK(std::set<Root>(a2.begin(), a2.end()) == expected);
}

TEST_CASE("tabulated invariants") {
  for (const char* name : kAllTypes) {
    CAPTURE(name);
    const LieType t = LieType::parse(name);
    const RootSystem rs(t);
    CHECK(rs.coxeter_number() == coxeter_number_table(t));
    CHECK(rs.num_positive_roots() == positive_root_count_table(t));
    CHECK(rs.cartan_det() == cartan_det_table(t));
    CHECK(rs.num_positive_roots() * 2 == rs.rank() * rs.coxeter_number());
    CHECK(rs.sign_w0() == (rs.num_positive_roots() % 2 == 0 ? 1 : -1));
    CHECK(pairing(rs, rs.rho(), rs.alpha0()) == Rational(rs.coxeter_number() - 1));
    for (int c : rs.rho().coords) CHECK(c == 1);
    CHECK(rs.pair(rs.alpha0(), rs.alpha0()) == 2);
  }
  CHECK(m_bound(LieType::parse("A3")) == 4);
  CHECK(m_bound(LieType::parse("B2")) == 4);
  CHECK(m_bound(LieType::parse("C3")) == 8);
  CHECK(m_bound(LieType::parse("D5")) == 9);
  CHECK(coxeter_number(LieType::parse("A2")) == 3);
  CHECK(sign_w0(LieType::parse("A2")) == -1);
  CHECK(sign_w0(LieType::parse("A1")) == -1);
  CHECK(sign_w0(LieType::parse("B2")) == 1);
}

TEST_CASE("pairings") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(pairing(a2, a2.fundamental_weight(0), a2.fundamental_weight(0)) == Rational(2, 3));
  CHECK(pairing(a2, a2.fundamental_weight(0), a2.fundamental_weight(1)) == Rational(1, 3));
  for (const char* name : {"B3", "C3", "A3", "D4"}) {
    const RootSystem rs(LieType::parse(name));
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        std::vector<int> e(static_cast<size_t>(rs.rank()), 0);
        e[static_cast<size_t>(i)] = 1;
        CHECK(pairing(rs, rs.fundamental_weight(j), Root(e)) == Rational(i == j ? rs.d()[size_t(i)] : 0));
      }
  }
  const RootSystem b2(LieType::parse("B2"));
  // the long simple root has length 4, the short one length 2
  CHECK(b2.pair(Root({1, 0}), Root({1, 0})) == 4);
  CHECK(b2.pair(Root({0, 1}), Root({0, 1})) == 2);
}

TEST_CASE("highest short root") {
  CHECK(RootSystem(LieType::parse("A4")).alpha0() == Root({1, 1, 1, 1}));
  CHECK(RootSystem(LieType::parse("B3")).alpha0() == Root({1, 1, 1}));
  CHECK(RootSystem(LieType::parse("E7")).alpha0() == Root({2, 2, 3, 4, 3, 2, 1}));
  CHECK(RootSystem(LieType::parse("E6")).alpha0() == Root({1, 2, 2, 3, 2, 1}));
}

TEST_CASE("admissible primes") {
  const RootSystem b2(LieType::parse("B2"));
  CHECK_THROWS_AS(require_admissible(b2, 3), HypothesisError);
  CHECK_THROWS_AS(require_admissible(b2, 9), HypothesisError);
  CHECK_NOTHROW(require_admissible(b2, 5));
  CHECK_THROWS_AS(require_admissible(RootSystem(LieType::parse("A1")), 4), HypothesisError);
  CHECK_THROWS_AS(require_admissible(RootSystem(LieType::parse("C3")), 7), HypothesisError);
  CHECK(smallest_admissible_prime(LieType::parse("A1")) == 3);
  CHECK(smallest_admissible_prime(LieType::parse("C3")) == 11);
  CHECK(smallest_admissible_prime(LieType::parse("E7")) == 23);
}

TEST_CASE("alcove labels") {
  const RootSystem a1(LieType::parse("A1"));
  CHECK(alcove_labels(a1, 5) == std::vector<Weight>{W({0}), W({2})});
  for (int r : {5, 7, 11, 13}) {
    std::vector<Weight> expected;
    for (int a = 0; a + 1 < r; a += 2) expected.push_back(W({a}));
    CHECK(alcove_labels(a1, r) == expected);
  }
  // A2: a + b + 2 < r with a = b mod 3
  const RootSystem a2(LieType::parse("A2"));
  for (int r : {5, 7, 11}) {
    std::vector<Weight> expected;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        if (a + b + 2 < r && (a - b) % 3 == 0) expected.push_back(W({a, b}));
    CHECK(alcove_labels(a2, r) == expected);
  }
  const auto l7 = alcove_labels(a2, 7);
  CHECK(l7 == std::vector<Weight>{W({0, 0}), W({0, 3}), W({1, 1}), W({2, 2}), W({3, 0})});
  CHECK(alcove_labels(RootSystem(LieType::parse("A3")), 7).size() == 5);
  CHECK(alcove_labels(RootSystem(LieType::parse("B2")), 7).size() == 3);
  CHECK(alcove_labels(RootSystem(LieType::parse("D4")), 11).size() == 20);
}

TEST_CASE("walls") {
  const RootSystem a1(LieType::parse("A1"));
  CHECK(is_on_wall(a1, W({4}), 5));
  CHECK_FALSE(is_on_wall(a1, W({2}), 5));
  CHECK(is_on_wall(a1, W({-1}), 5));
  const RootSystem a2(LieType::parse("A2"));
  CHECK(is_on_wall(a2, W({2, 3}), 7));
  CHECK(is_on_wall(a2, W({4, 1}), 7));
  CHECK_FALSE(is_on_wall(a2, W({1, 1}), 7));
  for (const char* name : {"A1", "A2", "B2", "C3", "D4"})
    for (int r : {11, 13}) CHECK_FALSE(is_on_wall(RootSystem(LieType::parse(name)), Weight::zero(LieType::parse(name).rank()), r));
  // rho itself sits on the wall once r = h - 1
  CHECK(is_on_wall(RootSystem(LieType::parse("D4")), Weight::zero(4), 5));
}

TEST_CASE("weight multiplicities") {
  const RootSystem a2(LieType::parse("A2"));
  CHECK(weight_multiplicities(a2, W({0, 0})) == std::map<Weight, long>{{W({0, 0}), 1}});
  const auto adj = weight_multiplicities(a2, W({1, 1}));
  CHECK(adj.size() == 7);
  CHECK(adj.at(W({0, 0})) == 2);
  for (const auto& w : all_roots_oracle(a2)) CHECK(adj.at(w) == 1);
  const RootSystem a1(LieType::parse("A1"));
  for (int n = 0; n < 8; ++n) {
    const auto m = weight_multiplicities(a1, W({n}));
    CHECK(m.size() == size_t(n + 1));
    for (int k = -n; k <= n; k += 2) CHECK(m.at(W({k})) == 1);
  }
  // dimensions
  for (const char* name : {"A3", "B2", "B3", "C3", "D4", "E6"}) {
    const RootSystem rs(LieType::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      const Weight mu = rs.fundamental_weight(i);
      if (rs.weyl_dimension(mu) > 3000) continue;
      long total = 0;
      for (const auto& [w, k] : weight_multiplicities(rs, mu)) total += k;
      CHECK(Integer(total) == rs.weyl_dimension(mu));
    }
  }
  // B2 adjoint: 8 roots and a 2-dimensional zero weight space
  const RootSystem b2(LieType::parse("B2"));
  const auto b2adj = weight_multiplicities(b2, W({0, 2}));
  CHECK(b2adj.at(Weight::zero(2)) == 2);
  CHECK(b2adj.size() == 9);
  CHECK(weight_multiplicities(RootSystem(LieType::parse("E7")), W({1, 0, 0, 0, 0, 0, 0})).size() == 127);
  CHECK_THROWS_AS(weight_multiplicities(a2, W({40, 40}), 1000), ResourceError);
}

TEST_CASE("generating weights lie in the alcove") {
  for (const char* name : kAllTypes) {
    CAPTURE(name);
    const LieType t = LieType::parse(name);
    const RootSystem rs(t);
    CHECK(verify_generating_weights(rs, smallest_admissible_prime(t)).passed());
  }
  const Report a3 = verify_generating_weights(RootSystem(LieType::parse("A3")), 7);
  CHECK(a3.passed());
  CHECK(verify_generating_weights(RootSystem(LieType::parse("B2")), 7).passed());
  const Report c3 = verify_generating_weights(RootSystem(LieType::parse("C3")), 7);
  CHECK_FALSE(c3.passed());
  int failed = 0;
  for (const auto& c : c3.checks)
    if (!c.passed) {
      ++failed;
      CHECK(c.name.find("3") != std::string::npos);
      CHECK(c.detail.find("8") != std::string::npos);
    }
  CHECK(failed == 1);
}
