#pragma once

#include "rtint/error.hpp"
#include "rtint/fusion.hpp"
#include "rtint/modular.hpp"
#include "rtint/sl2.hpp"
#include "rtint/surgery.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace rtint {

using json = nlohmann::ordered_json;

/// Malformed input file. `where` is "line L, column C" or a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Integers that fit in 64 bits are JSON numbers, others decimal strings.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

json to_json(const Cyclotomic& a);              // {"order", "coeffs"}
Cyclotomic cyclotomic_from_json(const json& j);
json to_json(const LaurentPoly& p);             // {"exponent": coefficient}
LaurentPoly laurent_from_json(const json& j);
json to_json(const LocalizedCyclotomic& x);     // {"numerator", "prime", "rpow"}
json to_json(const Weight& w);
Weight weight_from_json(const json& j);
json to_json(const Report& rep);

json lie_data_json(const RootSystem& rs, int r);
json fusion_json(const FusionTable& t);
json modular_json(const ModularData& md);
json sl2_json(int n);

/// Input file for a single invariant evaluation.
struct PresentationFile {
  LieType type{Family::A, 1};
  int r = 0;
  SurgeryPresentation presentation;
};

/// Parses {"lie_type","rank","r","weight","pieces":[{"unknot":f}|{"hopf":[f1,f2]}]}.
/// Throws ParseError with a position on syntax errors and a JSON pointer on
/// schema errors.
PresentationFile parse_presentation(const std::string& text);
json to_json(const PresentationFile& f);
json to_json(const SurgeryPresentation& p);

/// Invariant, linking data and integrality report.
json invariant_json(const ModularData& md, const SurgeryPresentation& p);

/// Cacheable payload: fusion entries and S; `modular_from_cache` rebuilds and
/// throws ArithmeticError if the stored S differs from the recomputed one.
json cache_payload(const ModularData& md);
ModularData modular_from_cache(const RootSystem& rs, int r, const json& payload);

}  // namespace rtint
