#include "rtint/laurent.hpp"

#include "rtint/error.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace rtint {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw ArithmeticError("min_degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw ArithmeticError("max_degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int d) const {
  if (d == 0) return LaurentPoly(evaluate_at_one().get_si());
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * d, c);
  return out;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("Laurent division by zero");
  if (is_zero()) return LaurentPoly();
  // Long division from the top degree; the remainder must vanish and the
  // quotient support is bounded by the degree spans.
  const int dlead = divisor.max_degree();
  const int dlow = divisor.min_degree();
  const Integer& lc = divisor.terms_.rbegin()->second;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int qmin = min_degree() - dlow;
  while (!rem.is_zero()) {
    const int top = rem.max_degree();
    const int qe = top - dlead;
    if (qe < qmin) return std::nullopt;
    const Integer& rc = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer qc = rc / lc;
    quot.add_term(qe, qc);
    for (const auto& [e, c] : divisor.terms_) rem.add_term(e + qe, -qc * c);
  }
  return quot;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly quantum_int(long n, int d) {
  if (n < 0) return -quantum_int(-n, d);
  LaurentPoly out;
  for (long j = 0; j < n; ++j) out += LaurentPoly::monomial(static_cast<int>(d * (n - 1 - 2 * j)));
  return out;
}

LaurentPoly quantum_factorial(long n, int d) {
  LaurentPoly out(1);
  for (long k = 1; k <= n; ++k) out *= quantum_int(k, d);
  return out;
}

LaurentPoly quantum_binomial(long a, long b, int d) {
  if (b < 0) throw HypothesisError("quantum_binomial requires b >= 0");
  LaurentPoly num(1);
  for (long k = 0; k < b; ++k) num *= quantum_int(a - k, d);
  auto q = num.divide_exact(quantum_factorial(b, d));
  if (!q) throw ArithmeticError("quantum_binomial: inexact division");
  return *q;
}

const LaurentPoly& cyclotomic_laurent(int n) {
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw HypothesisError("cyclotomic polynomial index must be positive");
  // x^n - 1 = prod_{d | n} Phi_d(x)
  LaurentPoly p = LaurentPoly::monomial(n) - LaurentPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // Recursive lookups would re-lock; compute missing divisors in order.
    auto it = cache.find(d);
    LaurentPoly phi_d;
    if (it == cache.end()) {
      LaurentPoly q = LaurentPoly::monomial(d) - LaurentPoly(1);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) q = *q.divide_exact(cache.at(e));
      it = cache.emplace(d, std::move(q)).first;
    }
    p = *p.divide_exact(it->second);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace rtint
