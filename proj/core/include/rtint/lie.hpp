#pragma once

#include "rtint/laurent.hpp"
#include "rtint/matrix.hpp"
#include "rtint/report.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rtint {

enum class Family { A, B, C, D, E };

/// A simple Lie algebra of type A_l (l>=1), B_l (l>=2), C_l (l>=3), D_l (l>=4),
/// E_6 or E_7. E_8, F_4 and G_2 are not representable.
class LieType {
 public:
  LieType(Family family, int rank);
  /// Parses "A2", "b3", "E7", ... Throws HypothesisError on bad input.
  static LieType parse(std::string_view name);
  /// Builds from a family letter; rejects E8/F4/G2 with a named reason.
  static LieType from_letter(char family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  char letter() const noexcept;
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Weight in the fundamental-weight basis: lambda = sum coords[i] * lambda_i.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<size_t>(rank), 0)); }

  bool is_dominant() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(int k) const;
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Root in the simple-root basis: alpha = sum coords[i] * alpha_i.
struct Root {
  std::vector<int> coords;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)) {}
  int height() const;
  std::string to_string() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

using IntMatrix = Matrix<long>;

/// Cartan data, positive roots, rho, alpha_0 and the bilinear form
/// (alpha_i | alpha_j) = d_i a_ij normalized so short roots have length 2.
/// Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<int>& d() const noexcept { return d_; }
  const IntMatrix& form() const noexcept { return form_; }
  long cartan_det() const noexcept { return det_; }

  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  const Root& alpha0() const noexcept { return alpha0_; }
  const Weight& alpha0_weight() const noexcept { return alpha0_weight_; }
  Weight rho() const;
  Weight fundamental_weight(int i) const;
  /// alpha_i in fundamental coordinates (column i of the Cartan matrix).
  const Weight& simple_root_weight(int i) const { return simple_root_weights_.at(static_cast<size_t>(i)); }

  int coxeter_number() const noexcept { return coxeter_; }
  int m_bound() const noexcept;
  int sign_w0() const noexcept;
  int num_positive_roots() const noexcept { return static_cast<int>(positive_roots_.size()); }

  Weight root_to_weight(const Root& a) const;
  /// Root-lattice coordinates of a weight, or nullopt when it is not in Y.
  std::optional<Root> weight_to_root(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const { return weight_to_root(w).has_value(); }

  long pair(const Weight& x, const Root& a) const;
  long pair(const Root& a, const Root& b) const;
  Rational pair(const Weight& x, const Weight& y) const;
  /// det(a) * (x | y); always an integer.
  long scaled_pair(const Weight& x, const Weight& y) const;
  /// (x + rho | alpha_0).
  long level(const Weight& x) const;

  /// Classical Weyl dimension of V_lambda, lambda dominant.
  Integer weyl_dimension(const Weight& lambda) const;

  /// Plain simple reflection s_i(x) = x - <x, alpha_i^vee> alpha_i.
  Weight reflect(const Weight& x, int i) const;
  /// Dot reflection s_i.x = s_i(x + rho) - rho.
  Weight dot_reflect(const Weight& x, int i) const;

 private:
  LieType type_;
  IntMatrix cartan_;
  std::vector<int> d_;
  IntMatrix form_;
  long det_ = 0;
  IntMatrix adj_;  // det * cartan^{-1}
  std::vector<Weight> simple_root_weights_;
  std::vector<Root> positive_roots_;
  Root alpha0_;
  Weight alpha0_weight_;
  int coxeter_ = 0;
};

// Free-function surface mirroring the operations list.
std::vector<Root> positive_roots(const LieType& t);
Weight rho(const RootSystem& rs);
Root alpha0(const RootSystem& rs);
Rational pairing(const RootSystem& rs, const Weight& x, const Weight& y);
Rational pairing(const RootSystem& rs, const Weight& x, const Root& y);
Rational pairing(const RootSystem& rs, const Root& x, const Root& y);
int coxeter_number(const LieType& t);
int m_bound(const LieType& t);
int sign_w0(const LieType& t);

/// Tabulated values used as cross-checks.
int coxeter_number_table(const LieType& t);
int positive_root_count_table(const LieType& t);
long cartan_det_table(const LieType& t);

/// Throws HypothesisError naming the violated hypothesis unless r is an odd
/// prime with r > m(g).
void require_admissible(const RootSystem& rs, long r);
/// Smallest odd prime exceeding m(g).
int smallest_admissible_prime(const LieType& t);

/// Dominant root-lattice weights lambda with (lambda + rho | alpha_0) < r,
/// sorted lexicographically by coordinates.
std::vector<Weight> alcove_labels(const RootSystem& rs, int r);

/// (x + rho | alpha_0) = r, or (x + rho | alpha_i) = 0 for some i.
bool is_on_wall(const RootSystem& rs, const Weight& x, int r);

/// Weight multiplicities of the classical simple module V_mu (Freudenthal on
/// dominant weights, then Weyl-orbit expansion). Throws ResourceError when
/// dim V_mu exceeds `max_dimension`.
std::map<Weight, long> weight_multiplicities(const RootSystem& rs, const Weight& mu,
                                             long max_dimension = 2'000'000);

/// Alcove membership checks for the generating weights used to show every
/// alcove object is a summand of tensor powers of a few small ones.
Report verify_generating_weights(const RootSystem& rs, int r);

}  // namespace rtint
