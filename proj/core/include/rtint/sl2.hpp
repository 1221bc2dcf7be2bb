#pragma once

#include "rtint/laurent.hpp"
#include "rtint/matrix.hpp"
#include "rtint/report.hpp"

#include <map>
#include <vector>

namespace rtint {

using LaurentMatrix = Matrix<LaurentPoly>;

/// V_n over Z[v, v^-1] on the basis e_0..e_n:
/// F e_i = [i+1] e_{i+1}, E e_i = [n-i+1] e_{i-1}, K e_i = v^{n-2i} e_i.
/// Column j of each matrix is the image of e_j.
struct Sl2Module {
  int n = 0;
  LaurentMatrix E, F, K, Kinv;
};

/// Builds V_n and checks the defining relations; throws ArithmeticError if
/// any of them fails.
Sl2Module build_module(int n);

/// EF - FE = (K - K^-1)/(v - v^-1), K E K^-1 = v^2 E, K F K^-1 = v^-2 F, K K^-1 = 1.
Report verify_relations(const Sl2Module& m);

/// Action on the dual basis e_0*..e_n* through the antipode
/// S(E) = -K^-1 E, S(F) = -F K, S(K) = K^-1.
Sl2Module dual_module(const Sl2Module& m);

/// a_k = -v^{n-2k+2}.
LaurentPoly dual_chain_coefficient(int n, int k);

/// Checks F* e_k* = a_k [k] e_{k-1}* and E* e_{k-1}* = a_k^-1 [n-k+1] e_k*.
Report verify_dual_chain(const Sl2Module& dual);

/// Coefficients c_i of the intertwiner V_n -> V_n*, e_i -> c_i e_{n-i}*,
/// normalized by c_0 = 1, checked against all generators.
std::vector<LaurentPoly> dual_intertwiner(const Sl2Module& m, const Sl2Module& dual);

/// E^{(s)} = E^s / [s]! (exact; throws if not).
LaurentMatrix divided_power(const LaurentMatrix& x, int s);

/// Gram matrix of the contravariant form with H(e_0, e_0) = 1 and
/// H(F x, y) = H(x, E y): G_ij = e_0-coefficient of E^{(i)} e_j.
LaurentMatrix shapovalov_gram(const Sl2Module& m);

/// det = sign * v^vpow * prod_k [k]^{exponents[k]}, k >= 2. Exponents may be
/// negative (e.g. det G_4 = [4]^3 [3] / [2]).
struct QintFactorization {
  int sign = 1;
  int vpow = 0;
  std::map<int, int> exponents;
  LaurentPoly product() const;
  std::string to_string() const;
};

/// Factors a Laurent polynomial into quantum integers [k], 2 <= k <= max_k.
/// Throws ArithmeticError if the residual is not a unit.
QintFactorization qint_factorization(const LaurentPoly& p, int max_k);

/// Determinant of a diagonal Gram matrix (throws if not diagonal).
LaurentPoly gram_determinant(const LaurentMatrix& gram);

QintFactorization det_factorization(int n);

/// No factor [k] with r | k in det G_n.
bool unit_at_root(int n, int r);

/// det G_n is not +-v^k.
bool nonunit_over_A(int n);

/// Least m such that det G_n is invertible in Z[v, v^-1, 1/[m]!].
int min_factorial_inverted(int n);

/// tr(K f).
LaurentPoly qtrace(const Sl2Module& m, const LaurentMatrix& f);

/// Relations, dual chain, intertwiner, Gram diagonality and factorization for
/// n = 0..max_n, and absence of [k], r | k, for n <= r - 1.
Report verify_sl2(int max_n, int r);

}  // namespace rtint
