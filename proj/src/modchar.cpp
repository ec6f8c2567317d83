#include "fermatrank/modchar.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

namespace fermatrank {

namespace {

namespace mp = boost::multiprecision;

Int mod_reduce(Int x, const Int& m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

Int mul_mod(const Int& x, const Int& y, const Int& m) { return (x * y) % m; }

// Trial-division factorization into distinct primes; inputs here are
// bounded by the enumeration budget, so this stays tiny.
std::vector<Int> distinct_prime_factors(Int x) {
  std::vector<Int> factors;
  for (Int d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      factors.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) factors.push_back(x);
  return factors;
}

// Primitive root mod p (odd prime): smallest g whose order is p-1.
Int primitive_root_mod_p(const Int& p) {
  const Int phi = p - 1;
  const std::vector<Int> factors = distinct_prime_factors(phi);
  for (Int g = 2; g < p; ++g) {
    bool ok = true;
    for (const Int& q : factors) {
      if (mp::powm(g, phi / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorCode::invalid_argument, "no primitive root found (p not prime?)");
}

// Primitive root mod p^n for odd p, n >= 1.  A primitive root g mod p
// lifts to every p^n exactly when g^(p-1) != 1 mod p^2; otherwise g + p
// does.
Int primitive_root_mod_pn(const PrimePower& level) {
  Int g = primitive_root_mod_p(level.p());
  if (level.n() == 1) return g;
  const Int p2 = level.p() * level.p();
  if (mp::powm(g, level.p() - 1, p2) == 1) g += level.p();
  return mod_reduce(g, level.value());
}

}  // namespace

bool is_prime(const Int& value) {
  if (value < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (value == small) return true;
    if (value % small == 0) return false;
  }
  // Miller-Rabin with the first twelve primes as bases: deterministic for
  // value < 3.3e24.
  Int d = value - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = mp::powm(Int(base), d, value);
    if (x == 1 || x == value - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, value);
      if (x == value - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimePower::PrimePower(Int p, unsigned n) : p_(std::move(p)), n_(n) {
  if (p_ < 3 || p_ % 2 == 0 || !is_prime(p_))
    fail(ErrorCode::invalid_argument,
         "p must be an odd prime, got " + int_to_string(p_));
  value_ = pow_int(p_, n_);
}

Character::Character(PrimePower lvl, Int a_in, Int b_in)
    : level(std::move(lvl)),
      a(mod_reduce(std::move(a_in), level.value())),
      b(mod_reduce(std::move(b_in), level.value())) {}

bool operator<(const Mat2& x, const Mat2& y) {
  return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
}

struct GaloisAction::Data {
  PrimePower level;
  ActionKind kind;
  std::vector<Int> scalar_gens;
  std::vector<Mat2> matrix_gens;
  std::vector<Int> scalar_elems;   // sorted
  std::vector<Mat2> matrix_elems;  // sorted
  std::uint64_t order = 0;
  bool abelian = true;

  explicit Data(PrimePower lvl, ActionKind k) : level(std::move(lvl)), kind(k) {}
};

namespace {

Mat2 mat_mul(const Mat2& x, const Mat2& y, const Int& m) {
  return Mat2{mod_reduce(x.a * y.a + x.b * y.c, m),
              mod_reduce(x.a * y.b + x.b * y.d, m),
              mod_reduce(x.c * y.a + x.d * y.c, m),
              mod_reduce(x.c * y.b + x.d * y.d, m)};
}

// Closure of the generators under multiplication, starting from the
// identity.  In a finite group this is the generated subgroup; no
// inverses are needed.
template <typename Elem, typename Mul>
std::vector<Elem> generate_group(const Elem& identity, const std::vector<Elem>& gens,
                                 Mul mul, std::uint64_t budget) {
  std::set<Elem> seen{identity};
  std::deque<Elem> work{identity};
  while (!work.empty()) {
    Elem current = work.front();
    work.pop_front();
    for (const Elem& g : gens) {
      Elem next = mul(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          fail(ErrorCode::budget_exceeded,
               "group enumeration exceeds budget of " + std::to_string(budget));
        work.push_back(next);
      }
    }
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

}  // namespace

GaloisAction::GaloisAction(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

GaloisAction GaloisAction::scalar(const PrimePower& level, std::vector<Int> unit_generators,
                                  std::uint64_t budget) {
  auto data = std::make_shared<Data>(level, ActionKind::scalar);
  const Int& m = level.value();
  for (Int& u : unit_generators) {
    u = mod_reduce(std::move(u), m);
    if (m > 1 && mp::gcd(u, level.p()) != 1)
      fail(ErrorCode::invalid_argument,
           "generator " + int_to_string(u) + " is not a unit mod " + int_to_string(m));
  }
  data->scalar_gens = std::move(unit_generators);
  const Int identity = m > 1 ? Int(1) : Int(0);
  data->scalar_elems = generate_group(
      identity, data->scalar_gens,
      [&m](const Int& x, const Int& y) { return mul_mod(x, y, m); }, budget);
  data->order = data->scalar_elems.size();
  data->abelian = true;
  return GaloisAction(std::move(data));
}

GaloisAction GaloisAction::full_units(const PrimePower& level, std::uint64_t budget) {
  if (level.n() == 0) return trivial(level);
  // phi(p^n) known up front; refuse before hunting for a primitive root.
  const Int phi = pow_int(level.p(), level.n() - 1) * (level.p() - 1);
  if (phi > budget)
    fail(ErrorCode::budget_exceeded,
         "unit group of order " + int_to_string(phi) + " exceeds budget of " +
             std::to_string(budget));
  return scalar(level, {primitive_root_mod_pn(level)}, budget);
}

GaloisAction GaloisAction::trivial(const PrimePower& level) {
  return scalar(level, {}, 1);
}

GaloisAction GaloisAction::matrix(const PrimePower& level, std::vector<Mat2> generators,
                                  std::uint64_t budget) {
  auto data = std::make_shared<Data>(level, ActionKind::matrix);
  const Int& m = level.value();
  for (Mat2& g : generators) {
    g = Mat2{mod_reduce(g.a, m), mod_reduce(g.b, m), mod_reduce(g.c, m),
             mod_reduce(g.d, m)};
    const Int det = mod_reduce(g.a * g.d - g.b * g.c, m);
    if (m > 1 && mp::gcd(det, level.p()) != 1)
      fail(ErrorCode::invalid_argument,
           "matrix generator with determinant " + int_to_string(det) +
               " is not invertible mod " + int_to_string(m));
  }
  data->matrix_gens = std::move(generators);
  const Mat2 identity{m > 1 ? Int(1) : Int(0), Int(0), Int(0), m > 1 ? Int(1) : Int(0)};
  data->matrix_elems = generate_group(
      identity, data->matrix_gens,
      [&m](const Mat2& x, const Mat2& y) { return mat_mul(x, y, m); }, budget);
  data->order = data->matrix_elems.size();
  // Pairwise commuting generators generate an abelian group, and
  // conversely.
  data->abelian = true;
  for (std::size_t i = 0; i < data->matrix_gens.size() && data->abelian; ++i)
    for (std::size_t j = i + 1; j < data->matrix_gens.size(); ++j)
      if (mat_mul(data->matrix_gens[i], data->matrix_gens[j], m) !=
          mat_mul(data->matrix_gens[j], data->matrix_gens[i], m)) {
        data->abelian = false;
        break;
      }
  return GaloisAction(std::move(data));
}

const PrimePower& GaloisAction::level() const noexcept { return data_->level; }
ActionKind GaloisAction::kind() const noexcept { return data_->kind; }
std::uint64_t GaloisAction::group_order() const noexcept { return data_->order; }
bool GaloisAction::group_is_abelian() const noexcept { return data_->abelian; }

const std::vector<Int>& GaloisAction::scalar_generators() const {
  if (data_->kind != ActionKind::scalar)
    fail(ErrorCode::invalid_argument, "not a scalar action");
  return data_->scalar_gens;
}

const std::vector<Mat2>& GaloisAction::matrix_generators() const {
  if (data_->kind != ActionKind::matrix)
    fail(ErrorCode::invalid_argument, "not a matrix action");
  return data_->matrix_gens;
}

const std::vector<Int>& GaloisAction::scalar_elements() const {
  if (data_->kind != ActionKind::scalar)
    fail(ErrorCode::invalid_argument, "not a scalar action");
  return data_->scalar_elems;
}

const std::vector<Mat2>& GaloisAction::matrix_elements() const {
  if (data_->kind != ActionKind::matrix)
    fail(ErrorCode::invalid_argument, "not a matrix action");
  return data_->matrix_elems;
}

Character GaloisAction::apply_element(std::size_t element_index, const Character& chi) const {
  const Int& m = data_->level.value();
  if (data_->kind == ActionKind::scalar) {
    const Int& u = data_->scalar_elems.at(element_index);
    return Character(chi.level, mul_mod(u, chi.a, m), mul_mod(u, chi.b, m));
  }
  const Mat2& g = data_->matrix_elems.at(element_index);
  return Character(chi.level, mod_reduce(chi.a * g.a + chi.b * g.c, m),
                   mod_reduce(chi.a * g.b + chi.b * g.d, m));
}

void GaloisAction::apply_generators(const Character& chi, std::vector<Character>& out) const {
  out.clear();
  const Int& m = data_->level.value();
  if (data_->kind == ActionKind::scalar) {
    for (const Int& u : data_->scalar_gens)
      out.emplace_back(chi.level, mul_mod(u, chi.a, m), mul_mod(u, chi.b, m));
  } else {
    for (const Mat2& g : data_->matrix_gens)
      out.emplace_back(chi.level, mod_reduce(chi.a * g.a + chi.b * g.c, m),
                       mod_reduce(chi.a * g.b + chi.b * g.d, m));
  }
}

unsigned p_adic_valuation(const Int& x, const PrimePower& level) {
  if (x < 0 || x >= level.value())
    fail(ErrorCode::invalid_argument, "residue out of range");
  if (x == 0) return level.n();
  unsigned v = 0;
  Int y = x;
  while (v < level.n() && y % level.p() == 0) {
    y /= level.p();
    ++v;
  }
  return v;
}

Int char_exact_order(const Character& chi) {
  const unsigned va = p_adic_valuation(chi.a, chi.level);
  const unsigned vb = p_adic_valuation(chi.b, chi.level);
  return pow_int(chi.level.p(), chi.level.n() - std::min(va, vb));
}

std::uint64_t stabilizer_order(const Character& chi, const GaloisAction& action) {
  if (action.level() != chi.level)
    fail(ErrorCode::invalid_argument, "character level does not match action level");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < action.group_order(); ++i)
    if (action.apply_element(i, chi) == chi) ++count;
  return count;
}

Orbit orbit_of(const Character& chi, const GaloisAction& action) {
  if (action.level() != chi.level)
    fail(ErrorCode::invalid_argument, "character level does not match action level");
  std::set<Character> seen{chi};
  std::deque<Character> work{chi};
  std::vector<Character> images;
  while (!work.empty()) {
    Character current = work.front();
    work.pop_front();
    action.apply_generators(current, images);
    for (Character& next : images)
      if (seen.insert(next).second) work.push_back(std::move(next));
  }
  Orbit orbit{*seen.begin(), seen.size(), 0};
  if (action.group_order() % orbit.size != 0)
    fail(ErrorCode::invalid_argument, "orbit size does not divide group order");
  orbit.stabilizer_order = action.group_order() / orbit.size;
  return orbit;
}

std::vector<Orbit> all_orbits(const GaloisAction& action, std::uint64_t budget) {
  const PrimePower& level = action.level();
  const Int total = level.value() * level.value();
  if (total > budget)
    fail(ErrorCode::budget_exceeded,
         "character space of size " + int_to_string(total) +
             " exceeds budget of " + std::to_string(budget));
  const std::uint64_t m = level.value().convert_to<std::uint64_t>();
  const std::uint64_t count = total.convert_to<std::uint64_t>();

  std::vector<bool> visited(count, false);
  std::vector<Orbit> orbits;
  std::vector<Character> images;
  std::vector<std::uint64_t> stack;
  const auto index_of = [m](const Character& chi) {
    return chi.a.convert_to<std::uint64_t>() * m + chi.b.convert_to<std::uint64_t>();
  };

  // Scanning (a, b) in lexicographic order makes the first unvisited
  // member of each orbit its minimal representative, so the output comes
  // out sorted for free.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (visited[idx]) continue;
    const Character rep(level, Int(idx / m), Int(idx % m));
    visited[idx] = true;
    stack.assign(1, idx);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      ++size;
      const Character chi(level, Int(cur / m), Int(cur % m));
      action.apply_generators(chi, images);
      for (const Character& next : images) {
        const std::uint64_t j = index_of(next);
        if (!visited[j]) {
          visited[j] = true;
          stack.push_back(j);
        }
      }
    }
    orbits.push_back(Orbit{rep, size, action.group_order() / size});
  }
  return orbits;
}

bool is_trivial_on_B(const Character& chi) {
  if (chi.level.n() == 0)
    fail(ErrorCode::level_zero, "B is undefined at level n = 0");
  return char_exact_order(chi) < chi.level.value();
}

Int primitive_character_count(const PrimePower& level) {
  if (level.n() == 0)
    fail(ErrorCode::level_zero, "no primitive characters at level n = 0");
  const Int lower = pow_int(level.p(), 2 * (level.n() - 1));
  return level.value() * level.value() - lower;
}

}  // namespace fermatrank
