#include "rtint/localized.hpp"

#include "rtint/error.hpp"

#include <sstream>

namespace rtint {

LocalizedCyclotomic::LocalizedCyclotomic(Cyclotomic numerator, int prime, unsigned rpow)
    : num_(std::move(numerator)), prime_(prime), rpow_(rpow) {
  if (prime < 2 || !is_prime(prime)) throw HypothesisError("localization requires a prime");
  normalize();
}

LocalizedCyclotomic LocalizedCyclotomic::one(int order, int prime) {
  return LocalizedCyclotomic(Cyclotomic::from_int(order, 1), prime);
}

void LocalizedCyclotomic::normalize() {
  if (num_.is_zero()) {
    rpow_ = 0;
    return;
  }
  const Integer r = prime_;
  while (rpow_ > 0 && num_.divisible_by(r)) {
    num_ = num_.divided_by(r);
    --rpow_;
  }
}

const Cyclotomic& LocalizedCyclotomic::integral_value() const {
  if (!is_integral()) throw ArithmeticError("element " + to_string() + " is not integral");
  return num_;
}

void LocalizedCyclotomic::require_same_ring(const LocalizedCyclotomic& o) const {
  if (prime_ != o.prime_ || order() != o.order())
    throw HypothesisError("localized operands live in different rings");
}

LocalizedCyclotomic& LocalizedCyclotomic::operator+=(const LocalizedCyclotomic& o) {
  require_same_ring(o);
  Integer r = prime_;
  if (rpow_ >= o.rpow_) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), r.get_mpz_t(), rpow_ - o.rpow_);
    num_ += o.num_ * scale;
  } else {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), r.get_mpz_t(), o.rpow_ - rpow_);
    num_ = num_ * scale + o.num_;
    rpow_ = o.rpow_;
  }
  normalize();
  return *this;
}

LocalizedCyclotomic& LocalizedCyclotomic::operator-=(const LocalizedCyclotomic& o) {
  LocalizedCyclotomic neg = o;
  neg.num_ = -neg.num_;
  return *this += neg;
}

LocalizedCyclotomic& LocalizedCyclotomic::operator*=(const LocalizedCyclotomic& o) {
  require_same_ring(o);
  num_ *= o.num_;
  rpow_ += o.rpow_;
  normalize();
  return *this;
}

LocalizedCyclotomic LocalizedCyclotomic::inverse() const {
  if (num_.is_zero()) throw ArithmeticError("inverse of zero");
  // (a / r^k)^-1 = r^k adj(a) / N(a), and N(a) must be +-r^j.
  const Cyclotomic adj = adjugate(num_);
  Cyclotomic nprod = num_ * adj;
  if (!nprod.is_rational_integer()) throw ArithmeticError("norm is not a rational integer");
  Integer n = nprod.coeffs()[0];
  int sign = n < 0 ? -1 : 1;
  n = abs(n);
  unsigned j = 0;
  const Integer r = prime_;
  while (n != 1) {
    if (!mpz_divisible_p(n.get_mpz_t(), r.get_mpz_t()))
      throw ArithmeticError("element " + to_string() + " is not invertible in Z[zeta, 1/" +
                            std::to_string(prime_) + "]");
    n /= r;
    ++j;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), r.get_mpz_t(), rpow_);
  Cyclotomic out = adj * (scale * sign);
  return LocalizedCyclotomic(std::move(out), prime_, j);
}

LocalizedCyclotomic LocalizedCyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  LocalizedCyclotomic result = one(order(), prime_);
  LocalizedCyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string LocalizedCyclotomic::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string() << ")";
  if (rpow_ > 0) os << " / " << prime_ << "^" << rpow_;
  return os.str();
}

LocalizedCyclotomic localized_normalize(const LocalizedCyclotomic& x) {
  return LocalizedCyclotomic(x.numerator(), x.prime(), x.rpow());
}

bool localized_is_integral(const LocalizedCyclotomic& x) { return x.is_integral(); }

LocalizedCyclotomic localized_inverse(const Cyclotomic& a, int prime) {
  return LocalizedCyclotomic(a, prime).inverse();
}

long root_of_unity_order(const Cyclotomic& a, long bound) {
  Cyclotomic acc = a;
  for (long n = 1; n <= bound; ++n) {
    if (acc.is_one()) return n;
    acc *= a;
  }
  return 0;
}

}  // namespace rtint
