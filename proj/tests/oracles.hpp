#pragma once

// Independent reference computations used only by the tests. Floating point
// is allowed here and nowhere in the library.

#include "rtint/lie.hpp"
#include "rtint/modular.hpp"

#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using rtint::Cyclotomic;
using rtint::RootSystem;
using rtint::Weight;
using cplx = std::complex<double>;

/// Numeric value of a Cyclotomic at zeta = exp(2 pi i k / n).
inline cplx numeric(const Cyclotomic& a, long k = 1) {
  const int n = a.order();
  cplx s = 0;
  for (size_t j = 0; j < a.coeffs().size(); ++j)
    s += a.coeffs()[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(k) * double(j) / n);
  return s;
}

inline cplx root(int n, long e) { return std::polar(1.0, 2 * std::numbers::pi * double(e) / n); }

inline bool close(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

/// Weyl group as the list of (w(x) for each fundamental weight x, sign(w)),
/// found by BFS on the orbit of the regular weight rho.
struct WeylElement {
  std::vector<Weight> images;  // w(lambda_i)
  int sign;
};

inline Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& x) {
  Weight out = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out = out + w.images[size_t(i)].scaled(x.coords[size_t(i)]);
  return out;
}

inline std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  const int l = rs.rank();
  WeylElement id{{}, 1};
  for (int i = 0; i < l; ++i) id.images.push_back(rs.fundamental_weight(i));
  std::vector<WeylElement> out{id};
  std::set<Weight> seen{rs.rho()};
  for (size_t at = 0; at < out.size(); ++at) {
    for (int i = 0; i < l; ++i) {
      WeylElement next{{}, -out[at].sign};
      for (const auto& img : out[at].images) next.images.push_back(rs.reflect(img, i));
      if (seen.insert(apply(rs, next, rs.rho())).second) out.push_back(next);
    }
  }
  return out;
}

/// Weyl character formula numerically: sum_w sn(w) q^{2(w(x) | y)} with q = exp(2 pi i/r).
inline cplx alternating_sum(const RootSystem& rs, const std::vector<WeylElement>& W, const Weight& x, const Weight& y,
                            int r, int orientation = 1) {
  cplx s = 0;
  for (const auto& w : W) {
    const rtint::Rational p = rs.pair(apply(rs, w, x), y);
    s += double(w.sign) * std::polar(1.0, orientation * 2 * std::numbers::pi * 2 * p.get_d() / r);
  }
  return s;
}

/// Classical tensor product decomposition by peeling off highest weights
/// from the product character. No folding involved.
inline std::map<Weight, long> classical_tensor(const RootSystem& rs, const Weight& a, const Weight& b) {
  std::map<Weight, long> ch;
  for (const auto& [x, m] : rtint::weight_multiplicities(rs, a))
    for (const auto& [y, n] : rtint::weight_multiplicities(rs, b)) ch[x + y] += m * n;
  std::map<Weight, long> out;
  for (;;) {
    // (w | rho) strictly increases along positive roots, so a weight maximizing
    // it is a highest weight of the remainder.
    const Weight* best = nullptr;
    for (const auto& [w, m] : ch)
      if (m != 0 && (!best || rs.pair(w, rs.rho()) > rs.pair(*best, rs.rho()))) best = &w;
    if (!best) break;
    const Weight hw = *best;
    const long m = ch[hw];
    out[hw] += m;
    for (const auto& [x, k] : rtint::weight_multiplicities(rs, hw)) ch[x] -= m * k;
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
  }
  return out;
}

/// Eigenvalue-sign count of a symmetric matrix from its leading principal
/// minors is fragile with zeros; here we use numeric Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev;
  for (size_t i = 0; i < n; ++i) ev.push_back(a[i][i]);
  return ev;
}

}  // namespace oracle
