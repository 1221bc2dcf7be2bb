#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace rtint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z[v, v^-1], stored sparsely as exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants embed naturally
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(int exponent, const Integer& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(int exponent) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned e) const;
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// The bar involution v -> v^-1.
  LaurentPoly bar() const;
  /// Substitute v -> v^d.
  LaurentPoly substitute_power(int d) const;
  Integer evaluate_at_one() const;

  /// Quotient if `divisor` divides this exactly in Z[v, v^-1], else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
  /// True iff this is +-v^k.
  bool is_unit() const;

  std::string to_string() const;

 private:
  void add_term(int exponent, const Integer& c);
  Terms terms_;
};

/// [n]_d = (v^{dn} - v^{-dn}) / (v^d - v^{-d}); [-n] = -[n], [0] = 0.
LaurentPoly quantum_int(long n, int d = 1);
/// [n]_d! = [1]_d ... [n]_d.
LaurentPoly quantum_factorial(long n, int d = 1);
/// [a choose b]_d = [a][a-1]...[a-b+1] / [b]!, b >= 0. Throws ArithmeticError
/// if the division is inexact.
LaurentPoly quantum_binomial(long a, long b, int d = 1);

/// Cyclotomic polynomial Phi_n(x) as a Laurent polynomial supported on
/// exponents 0..phi(n). Memoized; thread safe.
const LaurentPoly& cyclotomic_laurent(int n);

}  // namespace rtint
