#include "rtint/sl2.hpp"

#include "rtint/error.hpp"

#include <sstream>

namespace rtint {

namespace {

LaurentMatrix zero_matrix(int n) {
  return LaurentMatrix(static_cast<size_t>(n + 1), static_cast<size_t>(n + 1), LaurentPoly());
}

LaurentMatrix identity(int n) {
  LaurentMatrix m = zero_matrix(n);
  for (int i = 0; i <= n; ++i) m(static_cast<size_t>(i), static_cast<size_t>(i)) = LaurentPoly(1);
  return m;
}

const LaurentPoly& v_minus_vinv() {
  static const LaurentPoly p = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  return p;
}

}  // namespace

Sl2Module build_module(int n) {
  if (n < 0) throw HypothesisError("V_n needs n >= 0");
  Sl2Module m{n, zero_matrix(n), zero_matrix(n), zero_matrix(n), zero_matrix(n)};
  for (int i = 0; i <= n; ++i) {
    const auto ui = static_cast<size_t>(i);
    m.K(ui, ui) = LaurentPoly::monomial(n - 2 * i);
    m.Kinv(ui, ui) = LaurentPoly::monomial(2 * i - n);
    if (i < n) m.F(ui + 1, ui) = quantum_int(i + 1, 1);
    if (i > 0) m.E(ui - 1, ui) = quantum_int(n - i + 1, 1);
  }
  const Report rep = verify_relations(m);
  if (!rep.passed()) throw ArithmeticError("V_" + std::to_string(n) + " violates the relations:\n" + rep.to_text());
  return m;
}

Report verify_relations(const Sl2Module& m) {
  Report rep;
  rep.title = "U_v(sl2) relations on a module of dimension " + std::to_string(m.n + 1);
  LaurentMatrix rhs = m.K - m.Kinv;
  bool exact = true;
  for (int i = 0; i <= m.n; ++i) {
    const auto ui = static_cast<size_t>(i);
    auto q = rhs(ui, ui).divide_exact(v_minus_vinv());
    if (!q) exact = false;
    else rhs(ui, ui) = *q;
  }
  rep.add("(K - K^-1)/(v - v^-1) is integral", exact);
  rep.add("EF - FE = (K - K^-1)/(v - v^-1)", exact && m.E * m.F - m.F * m.E == rhs);
  rep.add("K K^-1 = 1", m.K * m.Kinv == identity(m.n));
  rep.add("K E K^-1 = v^2 E", m.K * m.E * m.Kinv == m.E.scaled(LaurentPoly::monomial(2)));
  rep.add("K F K^-1 = v^-2 F", m.K * m.F * m.Kinv == m.F.scaled(LaurentPoly::monomial(-2)));
  return rep;
}

Sl2Module dual_module(const Sl2Module& m) {
  // (x.alpha)(u) = alpha(S(x) u), so x acts by the transpose of S(x).
  const LaurentPoly minus_one(-1);
  Sl2Module d{m.n, (m.Kinv * m.E).scaled(minus_one).transposed(), (m.F * m.K).scaled(minus_one).transposed(),
              m.Kinv.transposed(), m.K.transposed()};
  return d;
}

LaurentPoly dual_chain_coefficient(int n, int k) { return LaurentPoly::monomial(n - 2 * k + 2, -1); }

Report verify_dual_chain(const Sl2Module& d) {
  Report rep;
  rep.title = "dual chain coefficients (n=" + std::to_string(d.n) + ")";
  const int n = d.n;
  bool ok_f = true, ok_e = true, support = true;
  for (int k = 1; k <= n; ++k) {
    const auto uk = static_cast<size_t>(k);
    const LaurentPoly a = dual_chain_coefficient(n, k);
    const LaurentPoly a_inv = LaurentPoly::monomial(-(n - 2 * k + 2), -1);
    ok_f = ok_f && d.F(uk - 1, uk) == a * quantum_int(k, 1);
    ok_e = ok_e && d.E(uk, uk - 1) == a_inv * quantum_int(n - k + 1, 1);
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
      if (i != j - 1 && !d.F(ui, uj).is_zero()) support = false;
      if (i != j + 1 && !d.E(ui, uj).is_zero()) support = false;
    }
  rep.add("F* e_k* = a_k [k] e_{k-1}*, a_k = -v^{n-2k+2}", ok_f);
  rep.add("E* e_{k-1}* = a_k^-1 [n-k+1] e_k*", ok_e);
  rep.add("E*, F* are single chains", support);
  rep.add("dual module satisfies the relations", verify_relations(d).passed());
  return rep;
}

std::vector<LaurentPoly> dual_intertwiner(const Sl2Module& m, const Sl2Module& d) {
  const int n = m.n;
  // phi F e_i = F* phi e_i gives c_{i+1} [i+1] = c_i a_{n-i} [n-i].
  std::vector<LaurentPoly> c{LaurentPoly(1)};
  for (int i = 0; i < n; ++i) {
    auto next = (c.back() * dual_chain_coefficient(n, n - i) * quantum_int(n - i, 1)).divide_exact(quantum_int(i + 1, 1));
    if (!next) throw ArithmeticError("intertwiner coefficient is not a Laurent polynomial");
    c.push_back(*next);
  }
  LaurentMatrix phi = zero_matrix(n);
  for (int i = 0; i <= n; ++i) phi(static_cast<size_t>(n - i), static_cast<size_t>(i)) = c[static_cast<size_t>(i)];
  if (!(phi * m.F == d.F * phi && phi * m.E == d.E * phi && phi * m.K == d.K * phi))
    throw ArithmeticError("V_" + std::to_string(n) + " -> V_n* intertwiner check failed");
  return c;
}

LaurentMatrix divided_power(const LaurentMatrix& x, int s) {
  if (s < 0) throw HypothesisError("divided power needs s >= 0");
  LaurentMatrix p(x.rows(), x.cols(), LaurentPoly());
  for (size_t i = 0; i < x.rows(); ++i) p(i, i) = LaurentPoly(1);
  for (int k = 0; k < s; ++k) p = p * x;
  const LaurentPoly fact = quantum_factorial(s, 1);
  for (size_t i = 0; i < p.rows(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) {
      auto q = p(i, j).divide_exact(fact);
      if (!q) throw ArithmeticError("divided power " + std::to_string(s) + " is not integral");
      p(i, j) = *q;
    }
  return p;
}

LaurentMatrix shapovalov_gram(const Sl2Module& m) {
  LaurentMatrix g = zero_matrix(m.n);
  for (int i = 0; i <= m.n; ++i) {
    // e_i = F^{(i)} e_0, so H(e_i, e_j) = H(e_0, E^{(i)} e_j).
    const LaurentMatrix ei = divided_power(m.E, i);
    for (int j = 0; j <= m.n; ++j) g(static_cast<size_t>(i), static_cast<size_t>(j)) = ei(0, static_cast<size_t>(j));
  }
  return g;
}

LaurentPoly gram_determinant(const LaurentMatrix& gram) {
  LaurentPoly det(1);
  for (size_t i = 0; i < gram.rows(); ++i)
    for (size_t j = 0; j < gram.cols(); ++j) {
      if (i == j) det *= gram(i, j);
      else if (!gram(i, j).is_zero()) throw ArithmeticError("Gram matrix is not diagonal");
    }
  return det;
}

LaurentPoly QintFactorization::product() const {
  LaurentPoly num = LaurentPoly::monomial(vpow, sign), den(1);
  for (const auto& [k, e] : exponents) {
    if (e > 0) num *= quantum_int(k, 1).pow(static_cast<unsigned>(e));
    if (e < 0) den *= quantum_int(k, 1).pow(static_cast<unsigned>(-e));
  }
  auto q = num.divide_exact(den);
  if (!q) throw ArithmeticError("quantum-integer factorization is not a Laurent polynomial");
  return *q;
}

std::string QintFactorization::to_string() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "") << "v^" << vpow;
  for (const auto& [k, e] : exponents) os << " [" << k << "]^" << e;
  return os.str();
}

QintFactorization qint_factorization(const LaurentPoly& p, int max_k) {
  if (p.is_zero()) throw ArithmeticError("cannot factor zero");
  // Phi_{2k}(v) divides [j] iff k | j, and [j] ~ prod_{d | 2j, d > 2} Phi_d.
  std::map<int, int> phi_mult;
  for (int k = 2; k <= max_k; ++k) {
    LaurentPoly rest = p;
    int m = 0;
    while (auto q = rest.divide_exact(cyclotomic_laurent(2 * k))) {
      rest = *q;
      ++m;
    }
    if (m) phi_mult[k] = m;
  }
  QintFactorization f;
  for (int k = max_k; k >= 2; --k) {
    int e = phi_mult.count(k) ? phi_mult[k] : 0;
    for (int j = 2 * k; j <= max_k; j += k) e -= f.exponents.count(j) ? f.exponents[j] : 0;
    if (e) f.exponents[k] = e;
  }
  // Residual p / prod must be +-v^m.
  LaurentPoly num = p, den(1);
  for (const auto& [k, e] : f.exponents) {
    if (e > 0) den *= quantum_int(k, 1).pow(static_cast<unsigned>(e));
    if (e < 0) num *= quantum_int(k, 1).pow(static_cast<unsigned>(-e));
  }
  auto residual = num.divide_exact(den);
  if (!residual || !residual->is_unit())
    throw ArithmeticError("not a product of quantum integers: " + p.to_string());
  f.vpow = residual->min_degree();
  f.sign = residual->coeff(f.vpow) < 0 ? -1 : 1;
  if (f.product() != p) throw ArithmeticError("factorization does not re-multiply to " + p.to_string());
  return f;
}

QintFactorization det_factorization(int n) {
  const Sl2Module m = build_module(n);
  return qint_factorization(gram_determinant(shapovalov_gram(m)), 2 * n + 2);
}

bool unit_at_root(int n, int r) {
  for (const auto& [k, e] : det_factorization(n).exponents)
    if (e != 0 && k % r == 0) return false;
  return true;
}

bool nonunit_over_A(int n) { return !gram_determinant(shapovalov_gram(build_module(n))).is_unit(); }

int min_factorial_inverted(int n) {
  // Phi_d (d > 2) becomes a unit once some [j], j <= m, has d | 2j.
  const LaurentPoly det = gram_determinant(shapovalov_gram(build_module(n)));
  int m = 0;
  for (int d = 3; d <= 4 * n + 4; ++d)
    if (det.divide_exact(cyclotomic_laurent(d))) m = std::max(m, d % 2 == 0 ? d / 2 : d);
  return m;
}

LaurentPoly qtrace(const Sl2Module& m, const LaurentMatrix& f) {
  const LaurentMatrix kf = m.K * f;
  LaurentPoly tr;
  for (size_t i = 0; i < kf.rows(); ++i) tr += kf(i, i);
  return tr;
}

Report verify_sl2(int max_n, int r) {
  Report rep;
  rep.title = "rank-1 integral structure (n <= " + std::to_string(max_n) + ", r=" + std::to_string(r) + ")";
  bool rel = true, chain = true, inter = true, gram_diag = true, g00 = true, fact = true, trace = true;
  std::string fact_detail;
  for (int n = 0; n <= max_n; ++n) {
    const Sl2Module m = build_module(n);
    rel = rel && verify_relations(m).passed();
    const Sl2Module d = dual_module(m);
    chain = chain && verify_dual_chain(d).passed();
    try {
      (void)dual_intertwiner(m, d);
    } catch (const ArithmeticError&) {
      inter = false;
    }
    const LaurentMatrix g = shapovalov_gram(m);
    g00 = g00 && g(0, 0) == LaurentPoly(1);
    try {
      const LaurentPoly det = gram_determinant(g);
      const QintFactorization f = qint_factorization(det, 2 * n + 2);
      if (n == max_n) fact_detail = "det G_" + std::to_string(n) + " = " + f.to_string();
    } catch (const ArithmeticError& e) {
      gram_diag = false;
      fact = false;
      fact_detail = e.what();
    }
    trace = trace && qtrace(m, identity(n)) == quantum_int(n + 1, 1);
  }
  rep.add("defining relations hold", rel);
  rep.add("dual chain coefficients a_k = -v^{n-2k+2}", chain);
  rep.add("V_n ~ V_n* by an explicit intertwiner", inter);
  rep.add("H(e_0, e_0) = 1", g00);
  rep.add("Gram matrix is diagonal", gram_diag);
  rep.add("det of the Gram matrix is a product of quantum integers", fact, fact_detail);
  rep.add("tr(K) on V_n = [n+1]", trace);
  bool root_ok = true;
  std::string root_detail;
  for (int n = 0; n <= r - 1; ++n)
    if (!unit_at_root(n, r)) {
      root_ok = false;
      root_detail = "factor [k], r | k, at n = " + std::to_string(n);
      break;
    }
  rep.add("no factor [k] with r | k for n <= r - 1", root_ok, root_detail);
  rep.add("a factor [k] with r | k appears at n = r", !unit_at_root(r, r));
  return rep;
}

}  // namespace rtint
