#pragma once

#include "rtint/modular.hpp"

#include <variant>
#include <vector>

namespace rtint {

struct Unknot {
  int framing = 0;
  friend bool operator==(const Unknot&, const Unknot&) = default;
};

/// Two framed unknots forming a Hopf link (linking number 1).
struct HopfPair {
  int f1 = 0;
  int f2 = 0;
  friend bool operator==(const HopfPair&, const HopfPair&) = default;
};

using Piece = std::variant<Unknot, HopfPair>;

/// Surgery on a split union of framed unknots and framed Hopf links, with an
/// integer weight w.
struct SurgeryPresentation {
  std::vector<Piece> pieces;
  long weight = 0;

  int components() const;
  /// Block-diagonal: [f] per unknot, [[f1,1],[1,f2]] per Hopf pair.
  IntMatrix linking_matrix() const;
  std::string to_string() const;
  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

struct LinkingData {
  IntMatrix B;
  int sigma_plus = 0;
  int sigma_minus = 0;
  int beta1 = 0;
  int signature() const { return sigma_plus - sigma_minus; }
};

/// Inertia of a symmetric integer matrix by congruence diagonalization over Q.
LinkingData inertia(const IntMatrix& b);
LinkingData linking_data(const SurgeryPresentation& p);

/// J of the link with component i colored by label index coloring[i].
Cyclotomic colored_bracket(const ModularData& md, const SurgeryPresentation& p, const std::vector<size_t>& coloring);

/// F_L = sum over colorings of prod qdim(mu_i) * colored_bracket, evaluated
/// piece by piece (the sum factors over split pieces). Empty link gives 1.
Cyclotomic kirby_sum(const ModularData& md, const SurgeryPresentation& p);

struct InvariantValue {
  LocalizedCyclotomic value;
};

/// [M] = F_L D^{-(m+1)} kappa^{w + sigma} in Z[zeta, 1/r].
InvariantValue invariant(const ModularData& md, const SurgeryPresentation& p);

/// Appends a (+-1)-framed unknot. The weight is kept: the added F_{+-}/D
/// factor is cancelled by the kappa^{+-1} from the signature shift.
SurgeryPresentation stabilize(const SurgeryPresentation& p, int sign);

/// w = 1 + beta_1(M) mod 2.
bool is_even(const SurgeryPresentation& p);

/// (i) F_L / (F_-^{sigma_- + beta_1} F_+^{sigma_+}) in Z[xi];
/// (ii) F_- [M] in Z[zeta]; (iii) F_- [M] in Z[xi] when M is even, and not in
/// Z[xi] when M is odd, O(zeta) = 4r and F_- [M] != 0.
Report check_integrality(const ModularData& md, const SurgeryPresentation& p);

/// L(p,1) presented by Unknot{p} with weight w.
SurgeryPresentation lens_space(int p, long weight);

}  // namespace rtint
