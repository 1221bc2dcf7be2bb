#include "rtint/lie.hpp"

#include "rtint/cyclotomic.hpp"
#include "rtint/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace rtint {

namespace {

std::string join_coords(const std::vector<int>& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- LieType

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  const auto fail = [&](const std::string& why) { throw HypothesisError("unsupported Lie type " + name() + ": " + why); };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("A_l needs l >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("B_l needs l >= 2");
      break;
    case Family::C:
      if (rank < 3) fail("C_l needs l >= 3");
      break;
    case Family::D:
      if (rank < 4) fail("D_l needs l >= 4");
      break;
    case Family::E:
      if (rank == 8) fail("E_8 is excluded");
      if (rank != 6 && rank != 7) fail("only E_6 and E_7 exist among supported E types");
      break;
  }
}

LieType LieType::from_letter(char family, int rank) {
  switch (std::toupper(static_cast<unsigned char>(family))) {
    case 'A': return LieType(Family::A, rank);
    case 'B': return LieType(Family::B, rank);
    case 'C': return LieType(Family::C, rank);
    case 'D': return LieType(Family::D, rank);
    case 'E': return LieType(Family::E, rank);
    case 'F': throw HypothesisError("unsupported Lie type F" + std::to_string(rank) + ": F_4 is excluded");
    case 'G': throw HypothesisError("unsupported Lie type G" + std::to_string(rank) + ": G_2 is excluded");
    default: throw HypothesisError(std::string("unknown Lie type family '") + family + "'");
  }
}

LieType LieType::parse(std::string_view name) {
  if (name.size() < 2) throw HypothesisError("cannot parse Lie type '" + std::string(name) + "'");
  std::string_view digits = name.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw HypothesisError("cannot parse Lie type '" + std::string(name) + "'");
  return from_letter(name.front(), std::stoi(std::string(digits)));
}

char LieType::letter() const noexcept { return "ABCDE"[static_cast<int>(family_)]; }

std::string LieType::name() const { return std::string(1, letter()) + std::to_string(rank_); }

// ---------------------------------------------------------------- Weight / Root

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
  Weight out = *this;
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords.at(i);
  return out;
}

Weight Weight::operator-(const Weight& o) const {
  Weight out = *this;
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] -= o.coords.at(i);
  return out;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(int k) const {
  Weight out = *this;
  for (auto& c : out.coords) c *= k;
  return out;
}

std::string Weight::to_string() const { return join_coords(coords); }

int Root::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

std::string Root::to_string() const { return join_coords(coords); }

// ---------------------------------------------------------------- tables

int coxeter_number_table(const LieType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l;
    case Family::C: return 2 * l;
    case Family::D: return 2 * l - 2;
    case Family::E: return l == 6 ? 12 : 18;
  }
  return 0;
}

int m_bound(const LieType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l;
    case Family::C: return 3 * l - 1;
    case Family::D: return 3 * l - 6;
    case Family::E: return l == 6 ? 14 : 21;
  }
  return 0;
}

int positive_root_count_table(const LieType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : 63;
  }
  return 0;
}

long cartan_det_table(const LieType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank() == 6 ? 3 : 2;
  }
  return 0;
}

// ---------------------------------------------------------------- RootSystem

namespace {

// Bourbaki numbering; a_ij = <alpha_j, alpha_i^vee>.
IntMatrix build_cartan(const LieType& t, std::vector<int>& d) {
  const int l = t.rank();
  const auto n = static_cast<size_t>(l);
  IntMatrix a(n, n, 0);
  d.assign(n, 1);
  for (size_t i = 0; i < n; ++i) a(i, i) = 2;
  const auto link = [&](int i, int j) {  // 1-based simple bond
    a(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = -1;
    a(static_cast<size_t>(j - 1), static_cast<size_t>(i - 1)) = -1;
  };
  switch (t.family()) {
    case Family::A:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      // alpha_l short: a_{l,l-1} = -2
      a(n - 1, n - 2) = -2;
      for (size_t i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      // alpha_l long: a_{l-1,l} = -2
      a(n - 2, n - 1) = -2;
      d[n - 1] = 2;
      break;
    case Family::D:
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (l == 7) link(6, 7);
      link(2, 4);
      break;
  }
  return a;
}

// Exact inverse of a small integer matrix via rational elimination.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
  const size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw ArithmeticError("singular Cartan matrix");
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t k = 0; k < 2 * n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

long integer_det(const IntMatrix& a) {
  const size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det.get_num().get_si();
}

}  // namespace

RootSystem::RootSystem(LieType type) : type_(type) {
  cartan_ = build_cartan(type_, d_);
  const auto n = static_cast<size_t>(rank());
  form_ = IntMatrix(n, n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) form_(i, j) = d_[i] * cartan_(i, j);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (form_(i, j) != form_(j, i)) throw ArithmeticError("symmetrized Cartan form is not symmetric");

  det_ = integer_det(cartan_);
  if (det_ != cartan_det_table(type_))
    throw ArithmeticError("Cartan determinant " + std::to_string(det_) + " disagrees with |X/Y| for " + type_.name());
  const auto inv = rational_inverse(cartan_);
  adj_ = IntMatrix(n, n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational x = inv[i][j] * det_;
      if (x.get_den() != 1) throw ArithmeticError("det * cartan^-1 is not integral");
      adj_(i, j) = x.get_num().get_si();
    }

  for (size_t i = 0; i < n; ++i) {
    std::vector<int> col(n);
    for (size_t k = 0; k < n; ++k) col[k] = static_cast<int>(cartan_(k, i));
    simple_root_weights_.emplace_back(std::move(col));
  }

  // Closure by alpha_i-strings, level by level in height:
  // beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
  std::set<Root> known;
  std::vector<Root> level;
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    level.emplace_back(c);
    known.insert(Root(c));
  }
  while (!level.empty()) {
    std::set<Root> next;
    for (const Root& beta : level) {
      const Weight bw = root_to_weight(beta);
      for (size_t i = 0; i < n; ++i) {
        int p = 0;
        for (;;) {
          Root down = beta;
          down.coords[i] -= p + 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - bw.coords[i];
        if (q > 0) {
          Root up = beta;
          up.coords[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) known.insert(r);
  }
  positive_roots_.assign(known.begin(), known.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
  if (num_positive_roots() != positive_root_count_table(type_))
    throw ArithmeticError("positive root count " + std::to_string(num_positive_roots()) + " wrong for " + type_.name());

  // Highest short root: among roots of squared length 2, the unique element
  // dominating all others.
  std::vector<const Root*> shorts;
  for (const auto& a : positive_roots_)
    if (pair(a, a) == 2) shorts.push_back(&a);
  std::vector<const Root*> maximal;
  for (const Root* a : shorts) {
    bool is_max = true;
    for (const Root* b : shorts) {
      if (a == b) continue;
      bool b_above = true;
      for (size_t i = 0; i < n; ++i)
        if (b->coords[i] < a->coords[i]) b_above = false;
      if (b_above) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(a);
  }
  if (maximal.size() != 1) throw ArithmeticError("highest short root is not unique for " + type_.name());
  alpha0_ = *maximal.front();
  alpha0_weight_ = root_to_weight(alpha0_);

  coxeter_ = static_cast<int>(pair(rho(), alpha0_)) + 1;
  if (coxeter_ != coxeter_number_table(type_))
    throw ArithmeticError("computed Coxeter number " + std::to_string(coxeter_) + " disagrees with the table for " +
                          type_.name());
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(static_cast<size_t>(rank()), 1)); }

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = Weight::zero(rank());
  w.coords.at(static_cast<size_t>(i)) = 1;
  return w;
}

int RootSystem::m_bound() const noexcept { return rtint::m_bound(type_); }

int RootSystem::sign_w0() const noexcept { return num_positive_roots() % 2 == 0 ? 1 : -1; }

Weight RootSystem::root_to_weight(const Root& a) const {
  const auto n = static_cast<size_t>(rank());
  Weight w = Weight::zero(rank());
  for (size_t i = 0; i < n; ++i) {
    long s = 0;
    for (size_t j = 0; j < n; ++j) s += cartan_(i, j) * a.coords[j];
    w.coords[i] = static_cast<int>(s);
  }
  return w;
}

std::optional<Root> RootSystem::weight_to_root(const Weight& w) const {
  const auto n = static_cast<size_t>(rank());
  Root out(std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    long s = 0;
    for (size_t j = 0; j < n; ++j) s += adj_(i, j) * w.coords.at(j);
    if (s % det_ != 0) return std::nullopt;
    out.coords[i] = static_cast<int>(s / det_);
  }
  return out;
}

long RootSystem::pair(const Weight& x, const Root& a) const {
  long s = 0;
  for (size_t j = 0; j < a.coords.size(); ++j) s += static_cast<long>(a.coords[j]) * d_[j] * x.coords.at(j);
  return s;
}

long RootSystem::pair(const Root& a, const Root& b) const {
  const auto n = static_cast<size_t>(rank());
  long s = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s += static_cast<long>(a.coords[i]) * form_(i, j) * b.coords[j];
  return s;
}

long RootSystem::scaled_pair(const Weight& x, const Weight& y) const {
  // det * (x|y) = sum_j (adj x)_j d_j y_j
  const auto n = static_cast<size_t>(rank());
  long s = 0;
  for (size_t j = 0; j < n; ++j) {
    long xj = 0;
    for (size_t k = 0; k < n; ++k) xj += adj_(j, k) * x.coords.at(k);
    s += xj * d_[j] * y.coords.at(j);
  }
  return s;
}

Rational RootSystem::pair(const Weight& x, const Weight& y) const {
  Rational q(scaled_pair(x, y), det_);
  q.canonicalize();
  return q;
}

long RootSystem::level(const Weight& x) const { return pair(x + rho(), alpha0_); }

Integer RootSystem::weyl_dimension(const Weight& lambda) const {
  Rational acc = 1;
  const Weight shifted = lambda + rho();
  const Weight r = rho();
  for (const auto& a : positive_roots_) acc *= Rational(pair(shifted, a), pair(r, a));
  acc.canonicalize();
  if (acc.get_den() != 1) throw ArithmeticError("Weyl dimension is not an integer");
  return acc.get_num();
}

Weight RootSystem::reflect(const Weight& x, int i) const {
  const int c = x.coords.at(static_cast<size_t>(i));
  return x - simple_root_weight(i).scaled(c);
}

Weight RootSystem::dot_reflect(const Weight& x, int i) const {
  const int c = x.coords.at(static_cast<size_t>(i)) + 1;
  return x - simple_root_weight(i).scaled(c);
}

// ---------------------------------------------------------------- free functions

std::vector<Root> positive_roots(const LieType& t) { return RootSystem(t).positive_roots(); }
Weight rho(const RootSystem& rs) { return rs.rho(); }
Root alpha0(const RootSystem& rs) { return rs.alpha0(); }
Rational pairing(const RootSystem& rs, const Weight& x, const Weight& y) { return rs.pair(x, y); }
Rational pairing(const RootSystem& rs, const Weight& x, const Root& y) { return Rational(rs.pair(x, y)); }
Rational pairing(const RootSystem& rs, const Root& x, const Root& y) { return Rational(rs.pair(x, y)); }
int coxeter_number(const LieType& t) { return RootSystem(t).coxeter_number(); }
int sign_w0(const LieType& t) { return positive_root_count_table(t) % 2 == 0 ? 1 : -1; }

void require_admissible(const RootSystem& rs, long r) {
  const std::string who = "r = " + std::to_string(r);
  if (!is_prime(r)) throw HypothesisError(who + " is not prime");
  if (r == 2) throw HypothesisError(who + " is not an odd prime");
  if (r <= rs.m_bound())
    throw HypothesisError(who + " does not exceed m(" + rs.type().name() + ") = " + std::to_string(rs.m_bound()));
}

int smallest_admissible_prime(const LieType& t) {
  int r = m_bound(t) + 1;
  while (r == 2 || !is_prime(r)) ++r;
  return r;
}

std::vector<Weight> alcove_labels(const RootSystem& rs, int r) {
  require_admissible(rs, r);
  // Breadth-first over dominant weights; adding any lambda_i strictly raises
  // (lambda + rho | alpha_0), so the search is finite.
  std::set<Weight> seen;
  std::deque<Weight> queue;
  const Weight zero = Weight::zero(rs.rank());
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      Weight next = w + rs.fundamental_weight(i);
      if (rs.level(next) >= r || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> labels;
  for (const auto& w : seen)
    if (rs.in_root_lattice(w)) labels.push_back(w);
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool is_on_wall(const RootSystem& rs, const Weight& x, int r) {
  if (rs.level(x) == r) return true;
  for (int c : x.coords)
    if (c + 1 == 0) return true;
  return false;
}

Report verify_generating_weights(const RootSystem& rs, int r) {
  Report rep;
  rep.title = "generating weights in the alcove (" + rs.type().name() + ", r=" + std::to_string(r) + ")";
  const int l = rs.rank();
  // A and C generators need only the closure of the alcove; D and E the open alcove.
  const auto check_level = [&](const Weight& w, long expected, bool closure) {
    const long value = rs.level(w);
    std::ostringstream os;
    os << "(" << w.to_string() << " + rho | alpha_0) = " << value << ", expected " << expected << ", r = " << r;
    rep.add("level of " + w.to_string() + " matches formula", value == expected, os.str());
    if (closure)
      rep.add(w.to_string() + " lies in the closed alcove", value <= r, os.str());
    else
      rep.add(w.to_string() + " lies in C_r", value < r, os.str());
  };
  switch (rs.type().family()) {
    case Family::A:
      for (int i = 0; i < l; ++i) check_level(rs.fundamental_weight(i), l + 1, true);
      break;
    case Family::C:
      for (int i = 1; i <= l; ++i) check_level(rs.fundamental_weight(0).scaled(i), i + 2 * l - 1, true);
      break;
    case Family::D:
      for (int idx : {0, l - 2, l - 1})
        for (int nn = 1; nn <= l - 3; ++nn) check_level(rs.fundamental_weight(idx).scaled(nn), nn + 2 * l - 3, false);
      break;
    case Family::E:
      if (l == 6) {
        for (int idx : {0, 5})
          for (int nn = 1; nn <= 3; ++nn) check_level(rs.fundamental_weight(idx).scaled(nn), nn + 11, false);
      } else {
        for (int nn = 1; nn <= 4; ++nn) check_level(rs.fundamental_weight(6).scaled(nn), nn + 17, false);
      }
      break;
    case Family::B: {
      // Basis {lambda_1, ..., lambda_{l-1}, 2 lambda_l} of the root lattice,
      // each pairing to 2 with alpha_0.
      std::vector<Weight> basis;
      for (int i = 0; i + 1 < l; ++i) basis.push_back(rs.fundamental_weight(i));
      basis.push_back(rs.fundamental_weight(l - 1).scaled(2));
      IntMatrix coords(static_cast<size_t>(l), static_cast<size_t>(l), 0);
      for (size_t k = 0; k < basis.size(); ++k) {
        const Weight& mu = basis[k];
        const auto root = rs.weight_to_root(mu);
        rep.add(mu.to_string() + " lies in the root lattice", root.has_value());
        if (root)
          for (size_t j = 0; j < root->coords.size(); ++j) coords(k, j) = root->coords[j];
        const long v = rs.pair(mu, rs.alpha0());
        rep.add("(" + mu.to_string() + " | alpha_0) = 2", v == 2, "value " + std::to_string(v));
      }
      const long det = integer_det(coords);
      rep.add("basis spans the root lattice (|det| = 1)", det == 1 || det == -1, "det = " + std::to_string(det));
      break;
    }
  }
  return rep;
}

}  // namespace rtint
