#pragma once

#include "rtint/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtint {

int euler_phi(int n);
bool is_prime(long n);

/// Coefficients (ascending) of the n-th cyclotomic polynomial. Memoized.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Element of Z[zeta_n], zeta_n a primitive n-th root of unity, in the power
/// basis zeta^0 .. zeta^{phi(n)-1}. Always stored fully reduced modulo Phi_n,
/// so equality is coefficient equality.
class Cyclotomic {
 public:
  Cyclotomic() = default;  // the zero element of an order-1 placeholder ring
  explicit Cyclotomic(int order);

  static Cyclotomic from_int(int order, const Integer& c);
  /// zeta^k for any integer k.
  static Cyclotomic root_power(int order, long k);
  /// Reduce an arbitrary polynomial in zeta (ascending coefficients).
  static Cyclotomic from_poly(int order, const std::vector<Integer>& poly);
  /// Exact reduced coefficients; throws if the length is not phi(order).
  static Cyclotomic from_coeffs(int order, std::vector<Integer> coeffs);

  int order() const noexcept { return order_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  /// True iff the element is a rational integer (only the constant term).
  bool is_rational_integer() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Integer& c);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Integer& c) { return a *= c; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  Cyclotomic pow(unsigned long e) const;

  /// True iff every coefficient is divisible by c (i.e. c | a in Z[zeta]).
  bool divisible_by(const Integer& c) const;
  /// Coefficient-wise exact division by an integer. Throws if inexact.
  Cyclotomic divided_by(const Integer& c) const;

  std::string to_string() const;

 private:
  void require_same_ring(const Cyclotomic& o) const;
  int order_ = 1;
  std::vector<Integer> coeffs_{Integer(0)};
};

/// Evaluate a Laurent polynomial at v = zeta_order.
Cyclotomic evaluate(const LaurentPoly& p, int order);

/// [n]_d evaluated at a primitive r-th root of unity.
Cyclotomic quantum_int_at_root(long n, int d, int order);

/// Galois automorphism zeta -> zeta^k; k must be coprime to the order.
Cyclotomic galois(const Cyclotomic& a, long k);

/// Field norm N(a) = product of all Galois conjugates (a rational integer).
Integer norm(const Cyclotomic& a);

/// Product of the non-identity Galois conjugates, so a * adjugate(a) = N(a).
Cyclotomic adjugate(const Cyclotomic& a);

/// a invertible in Z[zeta] iff N(a) = +-1. Throws on zero.
bool is_unit(const Cyclotomic& a);

/// a / b if the quotient lies in Z[zeta], else nullopt. Throws on b = 0.
std::optional<Cyclotomic> divide_exact(const Cyclotomic& a, const Cyclotomic& b);
/// Like divide_exact but throws ArithmeticError when inexact.
Cyclotomic divide_or_throw(const Cyclotomic& a, const Cyclotomic& b, const char* context);

/// Largest t with (1 - xi)^t | a in Z[xi]; `a` must have prime order. Throws on zero.
int valuation_one_minus_root(const Cyclotomic& a);

/// Image of `a` under Z[zeta_m] -> Z[zeta_n], zeta_m -> zeta_n^{n/m}; m | n.
Cyclotomic embed(const Cyclotomic& a, int new_order);

/// Membership of `a` in Z[zeta^{order/sub_order}], the subring generated by a
/// primitive sub_order-th root. sub_order must divide order.
bool in_subring(const Cyclotomic& a, int sub_order);

/// For a of order 4r: membership in Z[xi] with xi = zeta^4.
bool in_subring_Zxi(const Cyclotomic& a);

/// Quadratic Gauss sum sum_{a=1}^{p-1} (a/p) xi^a in Z[xi_p], p an odd prime.
Cyclotomic gauss_sum(int p);

/// Legendre symbol (a/p) for an odd prime p.
int legendre_symbol(long a, long p);

}  // namespace rtint
