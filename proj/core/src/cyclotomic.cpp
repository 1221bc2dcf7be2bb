#include "rtint/cyclotomic.hpp"

#include "rtint/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rtint {

int euler_phi(int n) {
  if (n < 1) throw HypothesisError("euler_phi of non-positive integer");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const LaurentPoly& lp = cyclotomic_laurent(n);
  std::vector<Integer> coeffs(static_cast<size_t>(euler_phi(n)) + 1);
  for (const auto& [e, c] : lp.terms()) coeffs.at(static_cast<size_t>(e)) = c;
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(coeffs)).first->second;
}

namespace {

// Reduce a polynomial in place modulo the monic Phi_n and trim to phi(n) terms.
void reduce_mod_phi(std::vector<Integer>& a, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const size_t deg = phi.size() - 1;
  for (size_t k = a.size(); k-- > deg;) {
    if (a[k] == 0) continue;
    const Integer c = a[k];
    const size_t base = k - deg;
    for (size_t j = 0; j <= deg; ++j) {
      if (phi[j] == 0) continue;
      if (phi[j] == 1)
        a[base + j] -= c;
      else if (phi[j] == -1)
        a[base + j] += c;
      else
        a[base + j] -= c * phi[j];
    }
  }
  a.resize(deg);
}

void require_order(int order) {
  if (order < 1) throw HypothesisError("cyclotomic order must be positive");
}

}  // namespace

Cyclotomic::Cyclotomic(int order) : order_(order) {
  require_order(order);
  coeffs_.assign(static_cast<size_t>(euler_phi(order)), Integer(0));
}

Cyclotomic Cyclotomic::from_int(int order, const Integer& c) {
  Cyclotomic out(order);
  out.coeffs_[0] = c;
  return out;
}

Cyclotomic Cyclotomic::root_power(int order, long k) {
  require_order(order);
  long e = k % order;
  if (e < 0) e += order;
  std::vector<Integer> poly(static_cast<size_t>(e) + 1);
  poly[static_cast<size_t>(e)] = 1;
  return from_poly(order, poly);
}

Cyclotomic Cyclotomic::from_poly(int order, const std::vector<Integer>& poly) {
  require_order(order);
  // Fold exponents modulo the order first (zeta^order = 1), then reduce.
  std::vector<Integer> folded(static_cast<size_t>(order));
  for (size_t i = 0; i < poly.size(); ++i) folded[i % static_cast<size_t>(order)] += poly[i];
  reduce_mod_phi(folded, order);
  Cyclotomic out;
  out.order_ = order;
  out.coeffs_ = std::move(folded);
  return out;
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Integer> coeffs) {
  require_order(order);
  if (coeffs.size() != static_cast<size_t>(euler_phi(order)))
    throw HypothesisError("Cyclotomic coefficient sequence must have length phi(order)");
  Cyclotomic out;
  out.order_ = order;
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational_integer() && coeffs_[0] == 1; }

bool Cyclotomic::is_rational_integer() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void Cyclotomic::require_same_ring(const Cyclotomic& o) const {
  if (order_ != o.order_)
    throw HypothesisError("cyclotomic operands live in different rings (orders " +
                          std::to_string(order_) + " and " + std::to_string(o.order_) + ")");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same_ring(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_ring(b);
  const size_t n = a.coeffs_.size();
  std::vector<Integer> prod(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  reduce_mod_phi(prod, a.order_);
  Cyclotomic out;
  out.order_ = a.order_;
  out.coeffs_ = std::move(prod);
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
  Cyclotomic result = from_int(order_, 1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1ul) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Cyclotomic::divisible_by(const Integer& c) const {
  if (c == 0) throw ArithmeticError("divisibility test by zero");
  for (const auto& x : coeffs_)
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) return false;
  return true;
}

Cyclotomic Cyclotomic::divided_by(const Integer& c) const {
  if (!divisible_by(c)) throw ArithmeticError("inexact division of cyclotomic integer by " + c.get_str());
  Cyclotomic out = *this;
  for (auto& x : out.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "z";
    if (i != 1) os << "^" << i;
  }
  if (first) os << "0";
  os << "  (z^" << order_ << " = 1)";
  return os.str();
}

Cyclotomic evaluate(const LaurentPoly& p, int order) {
  require_order(order);
  std::vector<Integer> poly(static_cast<size_t>(order));
  for (const auto& [e, c] : p.terms()) {
    long k = e % order;
    if (k < 0) k += order;
    poly[static_cast<size_t>(k)] += c;
  }
  return Cyclotomic::from_poly(order, poly);
}

Cyclotomic quantum_int_at_root(long n, int d, int order) { return evaluate(quantum_int(n, d), order); }

Cyclotomic galois(const Cyclotomic& a, long k) {
  const int n = a.order();
  long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk, static_cast<long>(n)) != 1)
    throw HypothesisError("galois: exponent " + std::to_string(k) + " is not coprime to order " +
                          std::to_string(n));
  std::vector<Integer> poly(static_cast<size_t>(n));
  const auto& c = a.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    poly[static_cast<size_t>((static_cast<long>(j) * kk) % n)] += c[j];
  }
  return Cyclotomic::from_poly(n, poly);
}

Cyclotomic adjugate(const Cyclotomic& a) {
  const int n = a.order();
  Cyclotomic acc = Cyclotomic::from_int(n, 1);
  for (int k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) acc *= galois(a, k);
  return acc;
}

Integer norm(const Cyclotomic& a) {
  Cyclotomic n = a * adjugate(a);
  if (!n.is_rational_integer()) throw ArithmeticError("norm is not a rational integer");
  return n.coeffs()[0];
}

bool is_unit(const Cyclotomic& a) {
  if (a.is_zero()) throw HypothesisError("is_unit: zero input");
  return abs(norm(a)) == 1;
}

std::optional<Cyclotomic> divide_exact(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) throw ArithmeticError("cyclotomic division by zero");
  if (a.order() != b.order()) throw HypothesisError("divide_exact: operands in different rings");
  if (a.is_zero()) return a;
  if (b.is_rational_integer()) {
    if (!a.divisible_by(b.coeffs()[0])) return std::nullopt;
    return a.divided_by(b.coeffs()[0]);
  }
  const Cyclotomic adj = adjugate(b);
  Cyclotomic nb = b * adj;
  if (!nb.is_rational_integer()) throw ArithmeticError("norm is not a rational integer");
  Cyclotomic t = a * adj;
  const Integer& d = nb.coeffs()[0];
  if (!t.divisible_by(d)) return std::nullopt;
  return t.divided_by(d);
}

Cyclotomic divide_or_throw(const Cyclotomic& a, const Cyclotomic& b, const char* context) {
  auto q = divide_exact(a, b);
  if (!q) throw ArithmeticError(std::string(context) + ": inexact division in Z[zeta]");
  return *q;
}

int valuation_one_minus_root(const Cyclotomic& a) {
  if (a.is_zero()) throw HypothesisError("valuation of zero");
  const int n = a.order();
  if (!is_prime(n)) throw HypothesisError("valuation_one_minus_root expects prime order");
  const Cyclotomic pi = Cyclotomic::from_int(n, 1) - Cyclotomic::root_power(n, 1);
  // (1 - xi) has norm n; division by it is a * adj(pi) / n.
  const Cyclotomic adj = adjugate(pi);
  int t = 0;
  Cyclotomic cur = a;
  for (;;) {
    Cyclotomic prod = cur * adj;
    if (!prod.divisible_by(n)) break;
    cur = prod.divided_by(n);
    ++t;
  }
  return t;
}

Cyclotomic embed(const Cyclotomic& a, int new_order) {
  const int m = a.order();
  if (new_order % m != 0) throw HypothesisError("embed: target order must be a multiple");
  const int step = new_order / m;
  std::vector<Integer> poly(static_cast<size_t>(new_order));
  const auto& c = a.coeffs();
  for (size_t j = 0; j < c.size(); ++j) poly[j * static_cast<size_t>(step)] += c[j];
  return Cyclotomic::from_poly(new_order, poly);
}

bool in_subring(const Cyclotomic& a, int sub_order) {
  const int n = a.order();
  if (sub_order < 1 || n % sub_order != 0) throw HypothesisError("in_subring: sub_order must divide the order");
  if (sub_order == n || (sub_order == 1 && n == 2)) return true;
  const int step = n / sub_order;
  const size_t rows = a.coeffs().size();
  const size_t cols = static_cast<size_t>(euler_phi(sub_order));
  // Columns: powers eta^j, eta = zeta^step, j < phi(sub_order). Augmented
  // matrix [M | a] reduced over Q; the system must be consistent and the
  // unique solution integral.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (size_t j = 0; j < cols; ++j) {
    Cyclotomic col = Cyclotomic::root_power(n, static_cast<long>(j) * step);
    for (size_t i = 0; i < rows; ++i) m[i][j] = col.coeffs()[i];
  }
  for (size_t i = 0; i < rows; ++i) m[i][cols] = a.coeffs()[i];

  size_t prow = 0;
  std::vector<size_t> pivot_col_of_row;
  for (size_t c = 0; c < cols && prow < rows; ++c) {
    size_t sel = prow;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    const Rational inv = 1 / m[prow][c];
    for (size_t k = c; k <= cols; ++k) m[prow][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t k = c; k <= cols; ++k) m[i][k] -= f * m[prow][k];
    }
    pivot_col_of_row.push_back(c);
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (m[i][cols] != 0) return false;  // not even in the Q-span
  for (size_t i = 0; i < prow; ++i)
    if (m[i][cols].get_den() != 1) return false;
  return true;
}

bool in_subring_Zxi(const Cyclotomic& a) {
  if (a.order() % 4 != 0) throw HypothesisError("in_subring_Zxi expects an element of order 4r");
  return in_subring(a, a.order() / 4);
}

int legendre_symbol(long a, long p) {
  long x = a % p;
  if (x < 0) x += p;
  if (x == 0) return 0;
  // Euler's criterion with modular exponentiation.
  long result = 1;
  long base = x;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

Cyclotomic gauss_sum(int p) {
  if (p < 3 || !is_prime(p)) throw HypothesisError("gauss_sum requires an odd prime");
  std::vector<Integer> poly(static_cast<size_t>(p));
  for (int a = 1; a < p; ++a) poly[static_cast<size_t>(a)] = legendre_symbol(a, p);
  return Cyclotomic::from_poly(p, poly);
}

}  // namespace rtint
