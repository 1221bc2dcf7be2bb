#include "rtint/modular.hpp"

#include "rtint/error.hpp"

#include <deque>
#include <set>

namespace rtint {

LaurentPoly qdim_laurent(const RootSystem& rs, const Weight& lambda) {
  const Weight lr = lambda + rs.rho();
  const Weight rho = rs.rho();
  LaurentPoly num(1), den(1);
  for (const auto& a : rs.positive_roots()) {
    num *= quantum_int(rs.pair(lr, a), 1);
    den *= quantum_int(rs.pair(rho, a), 1);
  }
  auto q = num.divide_exact(den);
  if (!q) throw ArithmeticError("Weyl quotient for " + lambda.to_string() + " is not a Laurent polynomial");
  return *q;
}

Cyclotomic qdim(const RootSystem& rs, const Weight& lambda, int r) { return evaluate(qdim_laurent(rs, lambda), r); }

long twist_exponent(const RootSystem& rs, const Weight& lambda) {
  if (!rs.in_root_lattice(lambda)) throw HypothesisError("twist needs a root-lattice weight, got " + lambda.to_string());
  const Rational e = rs.pair(lambda, lambda + rs.rho().scaled(2));
  if (e.get_den() != 1) throw ArithmeticError("twist exponent is not an integer");
  return e.get_num().get_si();
}

Cyclotomic twist(const RootSystem& rs, const Weight& lambda, int r) {
  return Cyclotomic::root_power(r, twist_exponent(rs, lambda));
}

Cyclotomic weyl_denominator_at_root(const RootSystem& rs, int r) {
  Cyclotomic out = Cyclotomic::from_int(r, 1);
  const Weight rho = rs.rho();
  for (const auto& a : rs.positive_roots()) {
    const long k = rs.pair(rho, a);
    out *= Cyclotomic::root_power(r, k) - Cyclotomic::root_power(r, -k);
  }
  return out;
}

int zeta_order(const RootSystem& rs, int r) {
  const int sign = rs.sign_w0();
  if (rs.rank() % 2 == 0) return sign == 1 ? r : 4 * r;
  const long sr = static_cast<long>(sign) * r;
  return ((sr % 4) + 4) % 4 == 1 ? r : 4 * r;
}

Cyclotomic sqrt_sign_r_power(const RootSystem& rs, int r) {
  const int n = zeta_order(rs, r);
  const int l = rs.rank();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(l / 2));
  Cyclotomic s = Cyclotomic::from_int(n, scale);
  if (l % 2 == 1) s *= embed(gauss_sum(r), n);  // g^2 = (-1)^{(r-1)/2} r
  const Cyclotomic target = Cyclotomic::from_int(n, r).pow(static_cast<unsigned long>(l)) * Integer(rs.sign_w0());
  if (s * s == target) return s;
  if (n % 4 != 0) throw ArithmeticError("sign(w_0) r^l has no square root in Z[xi]");
  s *= Cyclotomic::root_power(n, n / 4);  // i
  if (s * s != target) throw ArithmeticError("square root of sign(w_0) r^l failed the squaring check");
  return s;
}

Cyclotomic determinant(const CycMatrix& m) {
  const size_t n = m.rows();
  if (n != m.cols()) throw HypothesisError("determinant of a non-square matrix");
  if (n == 0) return Cyclotomic::from_int(1, 1);
  const int order = m(0, 0).order();
  CycMatrix a = m;
  int sign = 1;
  Cyclotomic prev = Cyclotomic::from_int(order, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Cyclotomic(order);
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    // Division by the previous pivot is exact; precompute its adjugate and norm.
    const Cyclotomic adj = adjugate(prev);
    const Integer nrm = (prev * adj).coeffs()[0];
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Cyclotomic t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = (t * adj).divided_by(nrm);
      }
      a(i, k) = Cyclotomic(order);
    }
    prev = a(k, k);
  }
  return a(n - 1, n - 1) * Integer(sign);
}

ModularData ModularData::build(const FusionTable& table) {
  ModularData md(table);
  const RootSystem& rs = table.root_system();
  const int r = table.r();
  const size_t n = table.size();

  for (const auto& l : table.labels()) {
    md.qdim_.push_back(qdim(rs, l, r));
    md.twist_exp_.push_back(twist_exponent(rs, l));
    md.twist_.push_back(Cyclotomic::root_power(r, md.twist_exp_.back()));
  }

  // Balancing: s_{lm} = theta_l^-1 theta_m^-1 sum_n N_{lm}^n theta_n qdim(n).
  md.S_ = CycMatrix(n, n, Cyclotomic(r));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      Cyclotomic acc(r);
      for (size_t k = 0; k < n; ++k) {
        const long mult = table.N(i, j, k);
        if (mult == 0) continue;
        acc += Cyclotomic::root_power(r, md.twist_exp_[k] - md.twist_exp_[i] - md.twist_exp_[j]) * md.qdim_[k] *
               Integer(mult);
      }
      md.S_(i, j) = acc;
      md.S_(j, i) = acc;
    }
  }

  md.dsq_ = Cyclotomic(r);
  md.f_plus_ = Cyclotomic(r);
  md.f_minus_ = Cyclotomic(r);
  for (size_t i = 0; i < n; ++i) {
    const Cyclotomic q2 = md.qdim_[i] * md.qdim_[i];
    md.dsq_ += q2;
    md.f_plus_ += q2 * md.twist_[i];
    md.f_minus_ += q2 * Cyclotomic::root_power(r, -md.twist_exp_[i]);
  }
  md.delta_ = weyl_denominator_at_root(rs, r);
  md.zeta_order_ = rtint::zeta_order(rs, r);

  // D = sqrt(sign r^l) / delta, with 1/delta in Z[xi, 1/r].
  const LocalizedCyclotomic inv_delta = LocalizedCyclotomic(md.lift(md.delta_), r).inverse();
  md.D_ = LocalizedCyclotomic(sqrt_sign_r_power(rs, r), r) * inv_delta;
  md.D_inv_ = md.D_.inverse();
  if (md.D_ * md.D_ != md.localize(md.dsq_)) throw ArithmeticError("D^2 != Dsq");
  if (md.f_plus_ * md.f_minus_ != md.dsq_) throw ArithmeticError("F_+ F_- != Dsq");

  const LocalizedCyclotomic kappa = md.localize(md.f_minus_) * md.D_inv_;
  if (!kappa.is_integral()) throw ArithmeticError("kappa = F_-/D is not integral: " + kappa.to_string());
  md.kappa_ = kappa.integral_value();
  if (LocalizedCyclotomic(md.kappa_, r) * md.D_ != md.localize(md.f_minus_)) throw ArithmeticError("kappa D != F_-");
  md.kappa_order_ = root_of_unity_order(md.kappa_, 16L * r);
  if (md.kappa_order_ == 0) throw ArithmeticError("kappa has no order <= 16r");
  return md;
}

Cyclotomic global_dim_sq(const ModularData& md) {
  Cyclotomic acc(md.r());
  for (const auto& q : md.qdims()) acc += q * q;
  return acc;
}

Report verify_lmS(const ModularData& md, bool with_determinant) {
  const RootSystem& rs = md.root_system();
  const int r = md.r();
  const int l = rs.rank();
  Report rep;
  rep.title = "S-matrix identities (" + rs.type().name() + ", r=" + std::to_string(r) + ")";

  const Cyclotomic dsq = global_dim_sq(md);
  Integer rl;
  mpz_ui_pow_ui(rl.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(l));
  const Cyclotomic lhs = dsq * md.delta() * md.delta();
  const Cyclotomic rhs = Cyclotomic::from_int(r, rl * rs.sign_w0());
  rep.add("Dsq * delta(K_2rho)^2 = sign(w_0) r^l", lhs == rhs,
          "sign(w_0) = " + std::to_string(rs.sign_w0()) + ", lhs = " + lhs.to_string());

  if (with_determinant) {
    const size_t n = md.size();
    const Cyclotomic det = determinant(md.S());
    const Cyclotomic det2 = det * det;
    const Cyclotomic dn = dsq.pow(n);
    int sign = 0;
    if (det2 == dn) sign = 1;
    else if (det2 == -dn) sign = -1;
    // S^2 = Dsq C forces the sign to be det(C).
    std::vector<bool> seen(n, false);
    int det_c = 1;
    for (size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      size_t len = 0;
      for (size_t j = i; !seen[j]; j = md.fusion().dual(j)) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) det_c = -det_c;
    }
    rep.add("det(S)^2 = +-Dsq^N", sign != 0,
            "N = " + std::to_string(n) + ", sign = " + (sign == 0 ? std::string("none") : std::to_string(sign)));
    rep.add("sign of det(S)^2 / Dsq^N equals det(C)", sign == det_c, "det(C) = " + std::to_string(det_c));
  }

  const int v = valuation_one_minus_root(md.delta());
  bool unit = false;
  if (v == rs.num_positive_roots()) {
    const Cyclotomic base = Cyclotomic::from_int(r, 1) - Cyclotomic::root_power(r, 1);
    if (auto q = divide_exact(md.delta(), base.pow(static_cast<unsigned long>(v)))) unit = is_unit(*q);
  }
  rep.add("delta(K_2rho) ~ (xi - 1)^|Phi_+|", unit,
          "valuation " + std::to_string(v) + ", |Phi_+| = " + std::to_string(rs.num_positive_roots()));
  const int vr = valuation_one_minus_root(Cyclotomic::from_int(r, r));
  rep.add("r ~ (xi - 1)^(r-1)", vr == r - 1, "valuation " + std::to_string(vr));
  return rep;
}

Report verify_modular(const ModularData& md) {
  const int r = md.r();
  const size_t n = md.size();
  Report rep;
  rep.title = "modularity (" + md.root_system().type().name() + ", r=" + std::to_string(r) + ")";
  const CycMatrix& S = md.S();
  rep.add("S is symmetric", S == S.transposed());
  const size_t zero = md.fusion().index_of(Weight::zero(md.root_system().rank()));
  bool row0 = true;
  for (size_t j = 0; j < n; ++j) row0 = row0 && S(zero, j) == md.qdims()[j];
  rep.add("row 0 of S is qdim", row0);

  CycMatrix C(n, n, Cyclotomic(r));
  for (size_t i = 0; i < n; ++i) C(i, md.fusion().dual(i)) = md.Dsq();
  rep.add("S^2 = Dsq C", S * S == C);

  bool inv = false;
  std::string detail;
  try {
    (void)LocalizedCyclotomic(md.Dsq(), r).inverse();
    inv = true;
    detail = "N(Dsq) is +-r^j";
  } catch (const ArithmeticError& e) {
    detail = e.what();
  }
  rep.add("S invertible over Z[xi, 1/r] (Dsq invertible, S^-1 = S C / Dsq)", inv, detail);

  bool closed = true;
  for (size_t i = 0; i < n; ++i) closed = closed && md.fusion().dual(md.fusion().dual(i)) == i;
  rep.add("labels contain 0 and are closed under duality", closed);
  bool qd = true;
  for (size_t i = 0; i < n; ++i) qd = qd && md.qdims()[i] == md.qdims()[md.fusion().dual(i)];
  rep.add("qdim(lambda) = qdim(dual lambda)", qd);
  bool tw = md.twists()[zero].is_one();
  for (size_t i = 0; i < n; ++i) tw = tw && md.twists()[i] == md.twists()[md.fusion().dual(i)];
  rep.add("twist(0) = 1 and twist(lambda) = twist(dual lambda)", tw);
  return rep;
}

Report verify_kirby_scalars(const ModularData& md) {
  Report rep;
  rep.title = "Kirby scalars (" + md.root_system().type().name() + ", r=" + std::to_string(md.r()) + ")";
  rep.add("D^2 = Dsq in Z[zeta, 1/r]", md.D() * md.D() == md.localize(md.Dsq()),
          "O(zeta) = " + std::to_string(md.zeta_order()));
  rep.add("F_+ F_- = Dsq", md.F_plus() * md.F_minus() == md.Dsq());
  rep.add("kappa D = F_-", LocalizedCyclotomic(md.kappa(), md.r()) * md.D() == md.localize(md.F_minus()));
  rep.add("kappa is a root of unity of order <= 16r", md.kappa_order() > 0,
          "order " + std::to_string(md.kappa_order()));
  rep.add("galois(F_+, -1) = F_-", galois(md.F_plus(), -1) == md.F_minus());
  rep.add("galois(Dsq, -1) = Dsq", galois(md.Dsq(), -1) == md.Dsq());
  return rep;
}

Report verify_qdim_homomorphism(const ModularData& md) {
  Report rep;
  rep.title = "qdim is a fusion-ring homomorphism (" + md.root_system().type().name() + ", r=" +
              std::to_string(md.r()) + ")";
  const size_t n = md.size();
  size_t bad = 0;
  std::string first;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Cyclotomic rhs(md.r());
      for (size_t k = 0; k < n; ++k)
        if (long m = md.fusion().N(i, j, k)) rhs += md.qdims()[k] * Integer(m);
      if (md.qdims()[i] * md.qdims()[j] != rhs) {
        if (bad++ == 0) first = md.labels()[i].to_string() + " x " + md.labels()[j].to_string();
      }
    }
  rep.add("qdim(l) qdim(m) = sum_n N_lm^n qdim(n) for all pairs", bad == 0,
          std::to_string(n * n) + " pairs" + (bad ? ", first failure " + first : std::string()));
  return rep;
}

Report verify_wall_vanishing(const RootSystem& rs, int r) {
  Report rep;
  rep.title = "qdim vanishes on the affine wall (" + rs.type().name() + ", r=" + std::to_string(r) + ")";
  // Dominant root-lattice weights at level exactly r.
  std::set<Weight> seen{Weight::zero(rs.rank())};
  std::deque<Weight> queue{Weight::zero(rs.rank())};
  size_t count = 0, bad = 0;
  std::string first;
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    if (rs.level(w) == r && rs.in_root_lattice(w)) {
      ++count;
      if (!qdim(rs, w, r).is_zero() && bad++ == 0) first = w.to_string();
    }
    for (int i = 0; i < rs.rank(); ++i) {
      Weight next = w;
      ++next.coords[static_cast<size_t>(i)];
      if (rs.level(next) <= r && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  rep.add("qdim(lambda) = 0 whenever (lambda+rho|alpha_0) = r", bad == 0,
          std::to_string(count) + " wall weights" + (bad ? ", first failure " + first : std::string()));
  return rep;
}

}  // namespace rtint
