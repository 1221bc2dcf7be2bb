#pragma once

#include "rtint/cyclotomic.hpp"

#include <string>

namespace rtint {

/// Element numerator / r^rpow of Z[zeta, 1/r], normalized so that either
/// rpow == 0 or r does not divide the numerator in Z[zeta]. The normal form
/// is unique, so equality is structural.
class LocalizedCyclotomic {
 public:
  LocalizedCyclotomic() = default;
  LocalizedCyclotomic(Cyclotomic numerator, int prime, unsigned rpow = 0);

  static LocalizedCyclotomic one(int order, int prime);

  const Cyclotomic& numerator() const noexcept { return num_; }
  unsigned rpow() const noexcept { return rpow_; }
  int prime() const noexcept { return prime_; }
  int order() const noexcept { return num_.order(); }

  bool is_integral() const noexcept { return rpow_ == 0; }
  bool is_zero() const { return num_.is_zero(); }
  /// The element as a Cyclotomic; throws ArithmeticError if not integral.
  const Cyclotomic& integral_value() const;

  LocalizedCyclotomic& operator+=(const LocalizedCyclotomic& o);
  LocalizedCyclotomic& operator-=(const LocalizedCyclotomic& o);
  LocalizedCyclotomic& operator*=(const LocalizedCyclotomic& o);
  friend LocalizedCyclotomic operator+(LocalizedCyclotomic a, const LocalizedCyclotomic& b) { return a += b; }
  friend LocalizedCyclotomic operator-(LocalizedCyclotomic a, const LocalizedCyclotomic& b) { return a -= b; }
  friend LocalizedCyclotomic operator*(LocalizedCyclotomic a, const LocalizedCyclotomic& b) { return a *= b; }
  friend bool operator==(const LocalizedCyclotomic& a, const LocalizedCyclotomic& b) {
    return a.prime_ == b.prime_ && a.rpow_ == b.rpow_ && a.num_ == b.num_;
  }

  /// Inverse in Z[zeta, 1/r]; exists iff N(numerator) = +-r^j. Throws otherwise.
  LocalizedCyclotomic inverse() const;
  /// Integer power; negative exponents use inverse().
  LocalizedCyclotomic pow(long e) const;

  std::string to_string() const;

 private:
  void normalize();
  void require_same_ring(const LocalizedCyclotomic& o) const;

  Cyclotomic num_{};
  int prime_ = 1;
  unsigned rpow_ = 0;
};

/// Free-function spelling of the normalization (construction already normalizes).
LocalizedCyclotomic localized_normalize(const LocalizedCyclotomic& x);
bool localized_is_integral(const LocalizedCyclotomic& x);

/// Inverse of an integral element in Z[zeta, 1/r].
LocalizedCyclotomic localized_inverse(const Cyclotomic& a, int prime);

/// Multiplicative order of a root of unity, searching n = 1..bound; 0 if none.
long root_of_unity_order(const Cyclotomic& a, long bound);

}  // namespace rtint
