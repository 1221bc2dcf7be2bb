#pragma once

#include "rtint/cyclotomic.hpp"
#include "rtint/fusion.hpp"
#include "rtint/localized.hpp"
#include "rtint/matrix.hpp"
#include "rtint/report.hpp"

#include <vector>

namespace rtint {

using CycMatrix = Matrix<Cyclotomic>;

/// prod_{a>0} [ (lambda+rho|a) ] / [ (rho|a) ] as a Laurent polynomial in v.
LaurentPoly qdim_laurent(const RootSystem& rs, const Weight& lambda);
/// Quantum dimension at xi of order r.
Cyclotomic qdim(const RootSystem& rs, const Weight& lambda, int r);

/// (lambda | lambda + 2 rho); lambda must lie in the root lattice.
long twist_exponent(const RootSystem& rs, const Weight& lambda);
/// xi^{(lambda | lambda + 2 rho)}.
Cyclotomic twist(const RootSystem& rs, const Weight& lambda, int r);

/// delta(K_{2 rho}) = prod_{a>0} (xi^{(rho|a)} - xi^{-(rho|a)}).
Cyclotomic weyl_denominator_at_root(const RootSystem& rs, int r);

/// Order of zeta: r or 4r.
int zeta_order(const RootSystem& rs, int r);

/// An element s of Z[zeta] with s^2 = sign(w_0) r^l, built from the quadratic
/// Gauss sum and, when needed, i = zeta^r.
Cyclotomic sqrt_sign_r_power(const RootSystem& rs, int r);

/// Fraction-free (Bareiss) determinant over Z[zeta].
Cyclotomic determinant(const CycMatrix& m);

/// Modular data of the quotient category for (g, r). Immutable.
class ModularData {
 public:
  /// Computes everything and throws ArithmeticError if D^2 = Dsq,
  /// F_+ F_- = Dsq or kappa D = F_- fails, or kappa has no order <= 16r.
  static ModularData build(const FusionTable& table);

  const FusionTable& fusion() const noexcept { return table_; }
  const RootSystem& root_system() const noexcept { return table_.root_system(); }
  int r() const noexcept { return table_.r(); }
  const std::vector<Weight>& labels() const noexcept { return table_.labels(); }
  size_t size() const noexcept { return table_.size(); }

  const std::vector<Cyclotomic>& qdims() const noexcept { return qdim_; }
  const std::vector<long>& twist_exponents() const noexcept { return twist_exp_; }
  const std::vector<Cyclotomic>& twists() const noexcept { return twist_; }
  const CycMatrix& S() const noexcept { return S_; }
  const Cyclotomic& s_entry(size_t i, size_t j) const { return S_(i, j); }

  const Cyclotomic& Dsq() const noexcept { return dsq_; }
  const Cyclotomic& delta() const noexcept { return delta_; }
  int zeta_order() const noexcept { return zeta_order_; }
  const LocalizedCyclotomic& D() const noexcept { return D_; }
  const LocalizedCyclotomic& D_inverse() const noexcept { return D_inv_; }
  const Cyclotomic& F_plus() const noexcept { return f_plus_; }
  const Cyclotomic& F_minus() const noexcept { return f_minus_; }
  /// kappa = F_- / D, a root of unity in Z[zeta].
  const Cyclotomic& kappa() const noexcept { return kappa_; }
  long kappa_order() const noexcept { return kappa_order_; }

  /// Image of an element of Z[xi] in Z[zeta] (xi = zeta^4 when O(zeta) = 4r).
  Cyclotomic lift(const Cyclotomic& a) const { return embed(a, zeta_order_); }
  LocalizedCyclotomic localize(const Cyclotomic& a) const { return LocalizedCyclotomic(lift(a), r()); }

 private:
  explicit ModularData(FusionTable t) : table_(std::move(t)) {}

  FusionTable table_;
  std::vector<Cyclotomic> qdim_;
  std::vector<long> twist_exp_;
  std::vector<Cyclotomic> twist_;
  CycMatrix S_;
  Cyclotomic dsq_, delta_;
  int zeta_order_ = 0;
  LocalizedCyclotomic D_, D_inv_;
  Cyclotomic f_plus_, f_minus_, kappa_;
  long kappa_order_ = 0;
};

/// sum_lambda qdim(lambda)^2.
Cyclotomic global_dim_sq(const ModularData& md);

/// Dsq delta^2 = sign(w_0) r^l; det(S)^2 = +-Dsq^N with the sign reported;
/// delta ~ (xi - 1)^{|Phi_+|}; r ~ (xi - 1)^{r-1}.
Report verify_lmS(const ModularData& md, bool with_determinant = true);

/// S symmetric with row 0 = qdim, S^2 = Dsq C, S invertible over Z[xi, 1/r],
/// label set contains 0 and is closed under duality.
Report verify_modular(const ModularData& md);

/// D^2 = Dsq, F_+ F_- = Dsq, kappa D = F_-, kappa^n = 1 for some n <= 16r.
Report verify_kirby_scalars(const ModularData& md);

/// qdim(lambda) qdim(mu) = sum_nu N qdim(nu) for every pair of labels.
Report verify_qdim_homomorphism(const ModularData& md);

/// qdim vanishes on every dominant root-lattice weight with (lambda+rho|alpha_0) = r.
Report verify_wall_vanishing(const RootSystem& rs, int r);

}  // namespace rtint
