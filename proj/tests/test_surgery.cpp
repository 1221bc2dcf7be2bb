#include "oracles.hpp"
#include "rtint/fusion.hpp"
#include "rtint/surgery.hpp"

#include <doctest.h>

#include <map>

using namespace rtint;

namespace {

const ModularData& md_for(const char* type, int r) {
  static std::map<std::pair<std::string, int>, ModularData> cache;
  const auto key = std::make_pair(std::string(type), r);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, ModularData::build(fusion_table(RootSystem(LieType::parse(type)), r))).first;
  return it->second;
}

SurgeryPresentation P(std::vector<Piece> pieces, long w = 0) { return SurgeryPresentation{std::move(pieces), w}; }

// every presentation with up to two pieces from a small pool
std::vector<SurgeryPresentation> sweep() {
  std::vector<Piece> pool;
  for (int f = -3; f <= 3; ++f) pool.push_back(Unknot{f});
  for (auto [a, b] : {std::pair{0, 0}, {1, 2}, {-2, 3}, {2, 2}}) pool.push_back(HopfPair{a, b});
  std::vector<SurgeryPresentation> out{P({})};
  for (size_t i = 0; i < pool.size(); ++i) {
    out.push_back(P({pool[i]}));
    out.push_back(P({pool[i]}, 1));
    for (size_t j = i; j < pool.size(); j += 2) out.push_back(P({pool[i], pool[j]}, long(i % 2)));
  }
  return out;
}

// brute-force sum over all colorings
Cyclotomic brute_kirby(const ModularData& md, const SurgeryPresentation& p) {
  const int m = p.components();
  const size_t n = md.size();
  Cyclotomic total(md.r());
  std::vector<size_t> col(size_t(m), 0);
  for (;;) {
    Cyclotomic term = colored_bracket(md, p, col);
    for (size_t c : col) term *= md.qdims()[c];
    total += term;
    int k = 0;
    while (k < m && ++col[size_t(k)] == n) col[size_t(k++)] = 0;
    if (k == m) break;
  }
  return m == 0 ? Cyclotomic::from_int(md.r(), 1) : total;
}

SurgeryPresentation negated(const SurgeryPresentation& p) {
  SurgeryPresentation out{{}, -p.weight};
  for (const auto& piece : p.pieces) {
    if (const auto* u = std::get_if<Unknot>(&piece))
      out.pieces.push_back(Unknot{-u->framing});
    else {
      const auto& h = std::get<HopfPair>(piece);
      out.pieces.push_back(HopfPair{-h.f1, -h.f2});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("linking data") {
  auto d = linking_data(P({Unknot{0}}));
  CHECK(d.sigma_plus == 0);
  CHECK(d.sigma_minus == 0);
  CHECK(d.beta1 == 1);
  d = linking_data(P({Unknot{3}}));
  CHECK(d.sigma_plus == 1);
  d = linking_data(P({HopfPair{0, 0}}));
  CHECK(d.sigma_plus == 1);
  CHECK(d.sigma_minus == 1);
  CHECK(d.beta1 == 0);
  d = linking_data(P({HopfPair{2, 2}}));
  CHECK(d.sigma_plus == 2);
  for (const auto& p : sweep()) {
    const auto ld = linking_data(p);
    CHECK(ld.sigma_plus + ld.sigma_minus + ld.beta1 == p.components());
    std::vector<std::vector<double>> a(size_t(p.components()), std::vector<double>(size_t(p.components())));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a.size(); ++j) a[i][j] = double(ld.B(i, j));
    int pos = 0, neg = 0;
    for (double e : oracle::symmetric_eigenvalues(a)) {
      if (e > 1e-9) ++pos;
      if (e < -1e-9) ++neg;
    }
    CHECK(pos == ld.sigma_plus);
    CHECK(neg == ld.sigma_minus);
  }
  IntMatrix b(3, 3, 0);
  b(0, 1) = b(1, 0) = 1;
  b(1, 2) = b(2, 1) = 1;
  const auto in = inertia(b);
  CHECK(in.sigma_plus == 1);
  CHECK(in.sigma_minus == 1);
  CHECK(in.beta1 == 1);
}

TEST_CASE("colored brackets") {
  const ModularData& md = md_for("A1", 5);
  CHECK(colored_bracket(md, P({Unknot{0}}), {1}) == md.qdims()[1]);
  CHECK(colored_bracket(md, P({Unknot{1}}), {1}) == Cyclotomic::root_power(5, 4) * quantum_int_at_root(3, 1, 5));
  CHECK(colored_bracket(md, P({HopfPair{0, 0}}), {0, 1}) == md.qdims()[1]);
  CHECK(colored_bracket(md, P({HopfPair{0, 0}}), {1, 1}) == md.s_entry(1, 1));
}

TEST_CASE("Kirby sums") {
  for (auto [type, r] : {std::pair{"A1", 5}, {"A1", 7}, {"A2", 7}}) {
    const ModularData& md = md_for(type, r);
    CHECK(kirby_sum(md, P({})).is_one());
    CHECK(kirby_sum(md, P({Unknot{1}})) == md.F_plus());
    CHECK(kirby_sum(md, P({Unknot{-1}})) == md.F_minus());
    CHECK(kirby_sum(md, P({Unknot{0}})) == md.Dsq());
    for (const auto& p : sweep())
      if (p.components() <= 3) CHECK(kirby_sum(md, p) == brute_kirby(md, p));
  }
}

TEST_CASE("normalizations and stabilization") {
  for (auto [type, r] : {std::pair{"A1", 5}, {"A1", 7}, {"A2", 7}, {"B2", 7}}) {
    CAPTURE(std::string(type));
    CAPTURE(r);
    const ModularData& md = md_for(type, r);
    const auto one = LocalizedCyclotomic::one(md.zeta_order(), r);
    CHECK(invariant(md, P({Unknot{0}})).value == one);
    CHECK(invariant(md, P({})).value == md.D_inverse());
    CHECK(invariant(md, P({}, 1)).value == md.D_inverse() * md.localize(Cyclotomic::from_int(r, 1)) *
                                                LocalizedCyclotomic(md.kappa(), r));
    CHECK(invariant(md, P({Unknot{-1}})).value == md.D_inverse());
    CHECK(invariant(md, P({Unknot{1}})).value == md.D_inverse());
    const auto all = sweep();
    CHECK(all.size() >= 50);
    for (const auto& p : all) {
      const auto base = invariant(md, p).value;
      CHECK(invariant(md, stabilize(p, 1)).value == base);
      CHECK(invariant(md, stabilize(p, -1)).value == base);
      CHECK(invariant(md, stabilize(stabilize(p, 1), -1)).value == base);
      CHECK(invariant(md, stabilize(stabilize(p, 1), 1)).value == base);
      // weight shift
      SurgeryPresentation q = p;
      q.weight += 1;
      CHECK(invariant(md, q).value == base * LocalizedCyclotomic(md.kappa(), r));
      // orientation reversal is complex conjugation
      const auto conj = invariant(md, negated(p)).value;
      CHECK(conj.numerator() == galois(base.numerator(), -1));
      CHECK(conj.rpow() == base.rpow());
    }
  }
}

TEST_CASE("disjoint union") {
  const ModularData& md = md_for("A2", 7);
  const auto a = P({Unknot{2}}), b = P({HopfPair{1, 2}});
  const auto ab = P({Unknot{2}, HopfPair{1, 2}});
  CHECK(kirby_sum(md, ab) == kirby_sum(md, a) * kirby_sum(md, b));
  // [M1 # M2] D^{-1} = [M1][M2]
  CHECK(invariant(md, ab).value * md.D_inverse() == invariant(md, a).value * invariant(md, b).value);
}

TEST_CASE("evenness") {
  CHECK(is_even(P({}, 1)));
  CHECK_FALSE(is_even(P({}, 0)));
  CHECK(is_even(P({Unknot{0}}, 0)));
  CHECK_FALSE(is_even(P({Unknot{0}}, 1)));
  CHECK(is_even(P({Unknot{3}}, 1)));
  CHECK(is_even(P({HopfPair{0, 0}}, -1)));
}

TEST_CASE("integrality") {
  const ModularData& md = md_for("A1", 5);
  const Report s1s2 = check_integrality(md, P({Unknot{0}}));
  CHECK(s1s2.passed());
  for (auto [type, r] : {std::pair{"A1", 5}, {"A1", 7}, {"A2", 7}}) {
    const ModularData& m = md_for(type, r);
    for (int p = 1; p <= 12; ++p)
      for (long w : {0L, 1L}) CHECK(check_integrality(m, lens_space(p, w)).passed());
    for (int f1 = -2; f1 <= 3; ++f1)
      for (int f2 = -2; f2 <= 3; ++f2)
        for (long w : {0L, 1L}) CHECK(check_integrality(m, P({HopfPair{f1, f2}}, w)).passed());
  }
  // odd manifolds leave Z[xi] when the ring is genuinely larger
  const ModularData& a15 = md_for("A1", 5);
  REQUIRE(a15.zeta_order() == 20);
  const auto fm = a15.localize(a15.F_minus());
  const auto odd = (fm * invariant(a15, P({}, 0)).value);
  REQUIRE(odd.is_integral());
  CHECK_FALSE(in_subring_Zxi(odd.numerator()));
  const auto even = (fm * invariant(a15, P({}, 1)).value);
  CHECK(in_subring_Zxi(even.numerator()));
}
