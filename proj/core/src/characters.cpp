#include "rtint/error.hpp"
#include "rtint/lie.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rtint {

namespace {

// Plain-action dominant representative of x.
Weight dominant_representative(const RootSystem& rs, Weight x) {
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (x.coords[static_cast<size_t>(i)] < 0) {
        x = rs.reflect(x, i);
        moved = true;
      }
    }
    if (!moved) return x;
  }
}

// Dominant weights nu <= mu. Connected under subtraction of positive roots
// through dominant weights, so a search from mu reaches all of them.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& mu) {
  std::vector<Weight> root_weights;
  for (const auto& a : rs.positive_roots()) root_weights.push_back(rs.root_to_weight(a));
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : root_weights) {
      Weight next = w - a;
      if (!next.is_dominant() || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::map<Weight, long> weight_multiplicities(const RootSystem& rs, const Weight& mu, long max_dimension) {
  if (!mu.is_dominant()) throw HypothesisError("weight_multiplicities needs a dominant weight, got " + mu.to_string());
  const Integer dim = rs.weyl_dimension(mu);
  if (dim > max_dimension)
    throw ResourceError("dim V" + mu.to_string() + " = " + dim.get_str() + " exceeds the resource guard " +
                        std::to_string(max_dimension));

  std::vector<Weight> dominant = dominant_weights_below(rs, mu);
  // Process from the top: depth = height of mu - nu in the root basis.
  const auto depth = [&](const Weight& nu) { return rs.weight_to_root(mu - nu).value().height(); };
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    const int da = depth(a), db = depth(b);
    return da != db ? da < db : a < b;
  });

  std::map<Weight, long> dom_mult;
  const Weight rho = rs.rho();
  const long top = rs.scaled_pair(mu + rho, mu + rho);
  for (const Weight& nu : dominant) {
    if (nu == mu) {
      dom_mult[nu] = 1;
      continue;
    }
    // Freudenthal: ((mu+rho|mu+rho) - (nu+rho|nu+rho)) m(nu)
    //                = 2 sum_{a>0} sum_{k>=1} m(nu + k a) (nu + k a | a)
    long sum = 0;
    for (const auto& a : rs.positive_roots()) {
      const Weight aw = rs.root_to_weight(a);
      Weight x = nu + aw;
      for (;;) {
        auto it = dom_mult.find(dominant_representative(rs, x));
        if (it == dom_mult.end()) break;
        sum += it->second * rs.pair(x, a);
        x = x + aw;
      }
    }
    const long denom = top - rs.scaled_pair(nu + rho, nu + rho);  // scaled by det
    const long numer = 2 * sum * rs.cartan_det();
    if (denom <= 0 || numer % denom != 0)
      throw ArithmeticError("Freudenthal recursion produced a non-integer multiplicity at " + nu.to_string());
    const long m = numer / denom;
    if (m > 0) dom_mult[nu] = m;
  }

  std::map<Weight, long> full;
  for (const auto& [nu, m] : dom_mult) {
    std::set<Weight> orbit{nu};
    std::deque<Weight> queue{nu};
    while (!queue.empty()) {
      Weight w = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < rs.rank(); ++i) {
        if (w.coords[static_cast<size_t>(i)] == 0) continue;
        Weight next = rs.reflect(w, i);
        if (orbit.insert(next).second) queue.push_back(std::move(next));
      }
    }
    for (const auto& w : orbit) full[w] = m;
  }

  Integer total = 0;
  for (const auto& [w, m] : full) total += m;
  if (total != dim)
    throw ArithmeticError("character of V" + mu.to_string() + " has total multiplicity " + total.get_str() +
                          " but the Weyl dimension is " + dim.get_str());
  return full;
}

}  // namespace rtint
