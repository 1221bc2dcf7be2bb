#include "rtint/fusion.hpp"

#include "rtint/error.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace rtint {

std::optional<FoldResult> finite_fold(const RootSystem& rs, Weight x) {
  int sign = 1;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      const int c = x.coords[static_cast<size_t>(i)];  // <x + rho, alpha_i^vee> - 1
      if (c == -1) return std::nullopt;
      if (c < -1) {
        x = rs.dot_reflect(x, i);
        sign = -sign;
        moved = true;
      }
    }
    if (!moved) return FoldResult{sign, std::move(x)};
  }
}

std::optional<FoldResult> affine_fold(const RootSystem& rs, Weight x, int r, int max_steps) {
  if (!rs.in_root_lattice(x)) throw HypothesisError("affine_fold needs a root-lattice weight, got " + x.to_string());
  int sign = 1;
  for (int step = 0; step < max_steps; ++step) {
    auto f = finite_fold(rs, std::move(x));
    if (!f) return std::nullopt;
    sign *= f->sign;
    x = std::move(f->weight);
    const long lev = rs.level(x);
    if (lev == r) return std::nullopt;
    if (lev < r) return FoldResult{sign, std::move(x)};
    // s_0 . x = x + (r - (x + rho | alpha_0)) alpha_0
    x = x + rs.alpha0_weight().scaled(static_cast<int>(r - lev));
    sign = -sign;
  }
  throw ArithmeticError("affine_fold did not terminate within " + std::to_string(max_steps) + " steps");
}

Weight dual_label(const RootSystem& rs, const Weight& lambda) {
  Weight x = -lambda;
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

namespace {

// Kac-Walton: sum over the weights beta of V_other of sign * [fold(base + beta)].
std::map<Weight, long> fold_character(const RootSystem& rs, int r, const Weight& base, const Weight& other,
                                      const std::map<Weight, long>& character) {
  std::map<Weight, long> out;
  for (const auto& [beta, mult] : character) {
    auto f = affine_fold(rs, base + beta, r);
    if (!f) continue;
    out[f->weight] += f->sign * mult;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0)
      throw ArithmeticError("negative fusion multiplicity " + std::to_string(it->second) + " for " +
                            base.to_string() + " x " + other.to_string() + " -> " + it->first.to_string());
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

std::map<Weight, long> fusion(const RootSystem& rs, int r, const Weight& lambda, const Weight& mu) {
  // Iterate over the character of the factor with smaller classical dimension.
  const bool swap = rs.weyl_dimension(lambda) < rs.weyl_dimension(mu);
  const Weight& base = swap ? mu : lambda;
  const Weight& other = swap ? lambda : mu;
  return fold_character(rs, r, base, other, weight_multiplicities(rs, other));
}

FusionTable::FusionTable(RootSystem rs, int r) : rs_(std::move(rs)), r_(r) {
  require_admissible(rs_, r_);
  labels_ = alcove_labels(rs_, r_);
  const size_t n = labels_.size();
  for (size_t i = 0; i < n; ++i) index_.emplace(labels_[i], i);
  entries_.assign(n * n * n, 0);

  std::vector<Integer> dims;
  std::vector<std::map<Weight, long>> chars(n);
  for (const auto& l : labels_) dims.push_back(rs_.weyl_dimension(l));
  {
    std::vector<std::future<void>> jobs;
    for (size_t i = 0; i < n; ++i)
      jobs.push_back(std::async(std::launch::async, [&, i] { chars[i] = weight_multiplicities(rs_, labels_[i]); }));
    for (auto& j : jobs) j.get();
  }

  // Rows are independent; compute the upper triangle in parallel.
  std::vector<std::future<void>> jobs;
  for (size_t i = 0; i < n; ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      for (size_t j = i; j < n; ++j) {
        const size_t small = dims[i] < dims[j] ? i : j;
        const size_t big = small == i ? j : i;
        for (const auto& [nu, m] : fold_character(rs_, r_, labels_[big], labels_[small], chars[small])) {
          auto k = find(nu);
          if (!k) throw ArithmeticError("fusion produced " + nu.to_string() + " outside the label set");
          entries_[(i * n + j) * n + *k] = m;
          entries_[(j * n + i) * n + *k] = m;
        }
      }
    }));
  }
  for (auto& j : jobs) j.get();
  finish();
}

FusionTable::FusionTable(RootSystem rs, int r, std::vector<Weight> labels, std::vector<long> entries)
    : rs_(std::move(rs)), r_(r), labels_(std::move(labels)), entries_(std::move(entries)) {
  for (size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

FusionTable FusionTable::from_entries(RootSystem rs, int r, std::vector<Weight> labels, std::vector<long> entries) {
  require_admissible(rs, r);
  if (labels != alcove_labels(rs, r)) throw ArithmeticError("stored labels differ from the alcove");
  if (entries.size() != labels.size() * labels.size() * labels.size())
    throw ArithmeticError("stored fusion tensor has the wrong size");
  FusionTable t(std::move(rs), r, std::move(labels), std::move(entries));
  t.finish();
  return t;
}

void FusionTable::finish() {
  duals_.clear();
  for (const auto& l : labels_) duals_.push_back(index_of(dual_label(rs_, l)));
  const Report rep = verify();
  if (!rep.passed()) throw ArithmeticError("fusion table failed verification:\n" + rep.to_text());
}

std::optional<size_t> FusionTable::find(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t FusionTable::index_of(const Weight& w) const {
  auto k = find(w);
  if (!k) throw HypothesisError(w.to_string() + " is not an alcove label");
  return *k;
}

Report FusionTable::verify() const {
  Report rep;
  rep.title = "fusion axioms (" + rs_.type().name() + ", r=" + std::to_string(r_) + ")";
  const size_t n = size();
  const size_t zero = index_of(Weight::zero(rs_.rank()));

  bool ok = true;
  std::string detail;
  for (size_t j = 0; j < n && ok; ++j)
    for (size_t k = 0; k < n && ok; ++k)
      if (N(zero, j, k) != (j == k ? 1 : 0)) {
        ok = false;
        detail = "N_{0," + labels_[j].to_string() + "}^" + labels_[k].to_string() + " = " + std::to_string(N(zero, j, k));
      }
  rep.add("unit", ok, detail);

  ok = true;
  detail.clear();
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j)
      for (size_t k = 0; k < n && ok; ++k)
        if (N(i, j, k) != N(j, i, k) || N(i, j, k) < 0) {
          ok = false;
          detail = labels_[i].to_string() + " x " + labels_[j].to_string();
        }
  rep.add("commutativity and nonnegativity", ok, detail);

  ok = true;
  detail.clear();
  for (size_t a = 0; a < n && ok; ++a)
    for (size_t b = 0; b < n && ok; ++b)
      for (size_t c = 0; c < n && ok; ++c)
        for (size_t s = 0; s < n && ok; ++s) {
          long lhs = 0, rhs = 0;
          for (size_t d = 0; d < n; ++d) {
            lhs += N(a, b, d) * N(d, c, s);
            rhs += N(b, c, d) * N(a, d, s);
          }
          if (lhs != rhs) {
            ok = false;
            detail = "(" + labels_[a].to_string() + " x " + labels_[b].to_string() + ") x " + labels_[c].to_string() +
                     " -> " + labels_[s].to_string();
          }
        }
  rep.add("associativity", ok, detail);

  ok = true;
  detail.clear();
  for (size_t i = 0; i < n && ok; ++i) {
    if (dual(dual(i)) != i) {
      ok = false;
      detail = "dual is not an involution at " + labels_[i].to_string();
    }
    for (size_t j = 0; j < n && ok; ++j)
      if (N(i, j, zero) != (j == dual(i) ? 1 : 0)) {
        ok = false;
        detail = "N_{" + labels_[i].to_string() + "," + labels_[j].to_string() + "}^0 = " + std::to_string(N(i, j, zero));
      }
  }
  rep.add("duality", ok, detail);

  // Every entry is indexed by a label, so closure reduces to the label set
  // being exactly the alcove.
  rep.add("alcove closure", labels_ == alcove_labels(rs_, r_));
  return rep;
}

FusionTable fusion_table(const RootSystem& rs, int r) { return FusionTable(rs, r); }

}  // namespace rtint
