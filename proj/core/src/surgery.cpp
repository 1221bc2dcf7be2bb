#include "rtint/surgery.hpp"

#include "rtint/error.hpp"

#include <sstream>

namespace rtint {

int SurgeryPresentation::components() const {
  int m = 0;
  for (const auto& piece : pieces) m += std::holds_alternative<Unknot>(piece) ? 1 : 2;
  return m;
}

IntMatrix SurgeryPresentation::linking_matrix() const {
  const auto m = static_cast<size_t>(components());
  IntMatrix b(m, m, 0);
  size_t at = 0;
  for (const auto& piece : pieces) {
    if (const auto* u = std::get_if<Unknot>(&piece)) {
      b(at, at) = u->framing;
      at += 1;
    } else {
      const auto& h = std::get<HopfPair>(piece);
      b(at, at) = h.f1;
      b(at + 1, at + 1) = h.f2;
      b(at, at + 1) = b(at + 1, at) = 1;
      at += 2;
    }
  }
  return b;
}

std::string SurgeryPresentation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) os << ", ";
    if (const auto* u = std::get_if<Unknot>(&pieces[i])) os << "U(" << u->framing << ")";
    else os << "H(" << std::get<HopfPair>(pieces[i]).f1 << "," << std::get<HopfPair>(pieces[i]).f2 << ")";
  }
  os << "] w=" << weight;
  return os.str();
}

LinkingData inertia(const IntMatrix& b) {
  const size_t n = b.rows();
  Matrix<Rational> a(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = b(i, j);
  LinkingData out{b, 0, 0, 0};
  for (size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Bring a nonzero pivot to (k,k): swap in a nonzero diagonal entry, or
      // add row/column j to k when only a(k,j) is nonzero.
      size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        for (size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, p));
      } else {
        size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) {
          ++out.beta1;  // row k is zero
          continue;
        }
        for (size_t j = 0; j < n; ++j) a(k, j) += a(q, j);
        for (size_t i = 0; i < n; ++i) a(i, k) += a(i, q);
      }
    }
    const Rational piv = a(k, k);
    if (piv == 0) {
      ++out.beta1;
      continue;
    }
    (piv > 0 ? out.sigma_plus : out.sigma_minus)++;
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / piv;
      for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return out;
}

LinkingData linking_data(const SurgeryPresentation& p) { return inertia(p.linking_matrix()); }

Cyclotomic colored_bracket(const ModularData& md, const SurgeryPresentation& p, const std::vector<size_t>& coloring) {
  if (coloring.size() != static_cast<size_t>(p.components()))
    throw HypothesisError("coloring has the wrong number of components");
  for (size_t c : coloring)
    if (c >= md.size()) throw HypothesisError("color index " + std::to_string(c) + " is not a label");
  const int r = md.r();
  Cyclotomic out = Cyclotomic::from_int(r, 1);
  size_t at = 0;
  for (const auto& piece : p.pieces) {
    if (const auto* u = std::get_if<Unknot>(&piece)) {
      const size_t c = coloring[at++];
      out *= Cyclotomic::root_power(r, md.twist_exponents()[c] * u->framing) * md.qdims()[c];
    } else {
      const auto& h = std::get<HopfPair>(piece);
      const size_t c1 = coloring[at++], c2 = coloring[at++];
      out *= Cyclotomic::root_power(r, md.twist_exponents()[c1] * h.f1 + md.twist_exponents()[c2] * h.f2) *
             md.s_entry(c1, c2);
    }
  }
  return out;
}

Cyclotomic kirby_sum(const ModularData& md, const SurgeryPresentation& p) {
  const int r = md.r();
  const size_t n = md.size();
  const auto& q = md.qdims();
  const auto& te = md.twist_exponents();
  Cyclotomic out = Cyclotomic::from_int(r, 1);
  for (const auto& piece : p.pieces) {
    Cyclotomic sum(r);
    if (const auto* u = std::get_if<Unknot>(&piece)) {
      for (size_t c = 0; c < n; ++c) sum += Cyclotomic::root_power(r, te[c] * u->framing) * q[c] * q[c];
    } else {
      const auto& h = std::get<HopfPair>(piece);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          sum += Cyclotomic::root_power(r, te[a] * h.f1 + te[b] * h.f2) * q[a] * q[b] * md.s_entry(a, b);
    }
    out *= sum;
  }
  return out;
}

InvariantValue invariant(const ModularData& md, const SurgeryPresentation& p) {
  const LinkingData ld = linking_data(p);
  const long m = p.components();
  LocalizedCyclotomic value = md.localize(kirby_sum(md, p));
  value *= md.D_inverse().pow(m + 1);
  const long ko = md.kappa_order();
  const long e = (((p.weight + ld.signature()) % ko) + ko) % ko;
  value *= LocalizedCyclotomic(md.kappa().pow(static_cast<unsigned long>(e)), md.r());
  return {value};
}

SurgeryPresentation stabilize(const SurgeryPresentation& p, int sign) {
  if (sign != 1 && sign != -1) throw HypothesisError("stabilization sign must be +1 or -1");
  SurgeryPresentation out = p;
  out.pieces.push_back(Unknot{sign});
  return out;
}

bool is_even(const SurgeryPresentation& p) {
  const long b1 = linking_data(p).beta1;
  return (((p.weight - 1 - b1) % 2) + 2) % 2 == 0;
}

Report check_integrality(const ModularData& md, const SurgeryPresentation& p) {
  Report rep;
  rep.title = "integrality of " + p.to_string();
  const LinkingData ld = linking_data(p);
  const Cyclotomic fl = kirby_sum(md, p);
  const Cyclotomic denom = md.F_minus().pow(static_cast<unsigned long>(ld.sigma_minus + ld.beta1)) *
                           md.F_plus().pow(static_cast<unsigned long>(ld.sigma_plus));
  const auto ratio = divide_exact(fl, denom);
  rep.add("F_L / (F_-^(sigma_- + beta_1) F_+^sigma_+) in Z[xi]", ratio.has_value(),
          ratio ? std::string() : "F_L = " + fl.to_string());

  const LocalizedCyclotomic fm = md.localize(md.F_minus()) * invariant(md, p).value;
  rep.add("F_- [M] in Z[zeta]", fm.is_integral(), fm.to_string());
  if (!fm.is_integral()) return rep;

  const bool even = is_even(p);
  const Cyclotomic& x = fm.integral_value();
  if (md.zeta_order() == md.r()) {
    if (even) rep.add("M even: F_- [M] in Z[xi]", true, "Z[zeta] = Z[xi]");
    return rep;
  }
  const bool in_xi = in_subring(x, md.r());
  if (even) rep.add("M even: F_- [M] in Z[xi]", in_xi, x.to_string());
  else if (!x.is_zero()) rep.add("M odd: F_- [M] not in Z[xi]", !in_xi, x.to_string());
  return rep;
}

SurgeryPresentation lens_space(int p, long weight) { return SurgeryPresentation{{Unknot{p}}, weight}; }

}  // namespace rtint
