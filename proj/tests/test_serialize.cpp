#include "rtint/error.hpp"
#include "rtint/fusion.hpp"
#include "rtint/serialize.hpp"

#include <doctest.h>

using namespace rtint;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("value round trips") {
  const Cyclotomic a = Cyclotomic::root_power(20, 3) * Cyclotomic::from_int(20, Integer("123456789012345678901234567890"));
  CHECK(cyclotomic_from_json(json::parse(to_json(a).dump())) == a);
  const LaurentPoly p = quantum_binomial(6, 3, 1).shifted(-2);
  CHECK(laurent_from_json(json::parse(to_json(p).dump())) == p);
  const Weight w(std::vector<int>{3, -1, 0});
  CHECK(weight_from_json(to_json(w)) == w);
  CHECK(integer_from_json(integer_to_json(Integer(42))) == 42);
  const Integer big("-98765432109876543210987654321");
  CHECK(integer_from_json(integer_to_json(big)) == big);
}

TEST_CASE("presentation files") {
  const auto f = parse_presentation(R"({"lie_type": "A", "rank": 2, "r": 7, "weight": 1,
      "pieces": [{"unknot": 3}, {"hopf": [1, -2]}]})");
  CHECK(f.type == LieType::parse("A2"));
  CHECK(f.r == 7);
  CHECK(f.presentation.weight == 1);
  REQUIRE(f.presentation.pieces.size() == 2);
  CHECK(std::get<Unknot>(f.presentation.pieces[0]).framing == 3);
  CHECK(std::get<HopfPair>(f.presentation.pieces[1]) == HopfPair{1, -2});
  const auto back = parse_presentation(to_json(f).dump());
  CHECK(back.presentation == f.presentation);
  CHECK(back.type == f.type);
  CHECK(back.r == f.r);
  const auto g = parse_presentation(R"({"lie_type": "B", "rank": 2, "r": 7, "pieces": []})");
  CHECK(g.presentation.weight == 0);
  CHECK(g.presentation.pieces.empty());
}

TEST_CASE("malformed presentation files report a position") {
  const std::string syntax = "{\n  \"lie_type\": \"A\",\n  \"rank\": 1,\n  \"r\": 5 \"pieces\": []\n}";
  const std::string w = where_of(syntax);
  CHECK(w.find("line 4") != std::string::npos);
  CHECK(w.find("column") != std::string::npos);
  CHECK(where_of(R"({"lie_type": "A", "rank": 1, "r": 5, "pieces": [{"unknot": 1}, {"hopf": [1]}]})") ==
        "/pieces/1/hopf");
  CHECK(where_of(R"({"lie_type": "A", "rank": 1, "r": 5, "pieces": [{"knot": 1}]})") == "/pieces/0");
  CHECK(where_of(R"({"lie_type": "A", "rank": 1, "pieces": []})") == "/");
  CHECK(where_of(R"({"lie_type": "A", "rank": "one", "r": 5, "pieces": []})") == "/rank");
  CHECK(where_of(R"({"lie_type": "A", "rank": 1, "r": 5, "pieces": [], "extra": 0})") == "/extra");
  CHECK(where_of(R"([1, 2])") == "/");
  CHECK(where_of("") != "no error");
}

TEST_CASE("cache payload round trip") {
  const RootSystem rs(LieType::parse("A2"));
  const ModularData md = ModularData::build(fusion_table(rs, 7));
  const json payload = json::parse(cache_payload(md).dump());
  const ModularData back = modular_from_cache(rs, 7, payload);
  CHECK(back.S() == md.S());
  CHECK(back.fusion().entries() == md.fusion().entries());
  json bad = payload;
  bad["S"][1][1] = to_json(Cyclotomic::from_int(7, 5));
  CHECK_THROWS_AS(modular_from_cache(rs, 7, bad), ArithmeticError);
}

TEST_CASE("dumps are deterministic") {
  const RootSystem rs(LieType::parse("B2"));
  const auto a = modular_json(ModularData::build(fusion_table(rs, 7))).dump();
  const auto b = modular_json(ModularData::build(fusion_table(rs, 7))).dump();
  CHECK(a == b);
  CHECK(lie_data_json(rs, 7).dump() == lie_data_json(rs, 7).dump());
  CHECK(sl2_json(4).contains("gram_diagonal"));
}
