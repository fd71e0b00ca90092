#include "cyset/germ.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>

#include "cyset/error.hpp"

namespace cyset {

std::uint64_t generator_class(const CycleSet& s, Index i) {
  if (i >= s.size())
    throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i + 1) + " out of range");
  // (current, acc) -> (T(current), psi(current) o acc) is a bijection on a
  // finite set once T is, so the identity comes back.
  diagonal_map(s);
  Permutation acc = Permutation::identity(s.size());
  Index current = i;
  std::uint64_t k = 0;
  do {
    acc = compose(s.psi(current), acc);
    current = s.star(current, current);
    ++k;
  } while (!acc.is_identity());
  return k;
}

std::uint64_t class_of(const CycleSet& s) {
  std::uint64_t d = 1;
  for (Index i = 0; i < s.size(); ++i) d = lcm_u64(d, generator_class(s, i));
  return d;
}

ClassReport dehornoy_class(const CycleSet& s) {
  ClassReport r;
  for (Index i = 0; i < s.size(); ++i) {
    r.per_generator.push_back(generator_class(s, i));
    r.d = lcm_u64(r.d, r.per_generator.back());
  }
  r.o_t = diagonal_map(s).order;
  r.g_order = group_order(s.size(), s.rows());
  const auto n = static_cast<unsigned>(s.size());
  r.checks.ot_divides_d = r.d % r.o_t == 0;
  r.checks.d_divides_group = r.g_order % r.d == 0;
  r.checks.group_divides_dn = divides_power(r.g_order, r.d, n);
  r.checks.same_primes = prime_divisors(r.d) == prime_divisors(r.g_order);
  r.checks.d_divides_factorial = divides_factorial(r.d, n);
  return r;
}

std::string GermElement::to_string() const {
  std::ostringstream out;
  out << "cp=(";
  for (std::size_t i = 0; i < cp.size(); ++i) out << (i ? "," : "") << cp[i];
  out << ") perm=" << perm.to_cycle_string();
  return out.str();
}

Germ::Germ(CycleSet s, Exponent modulus, bool) : s_(std::move(s)), d_(modulus) {}

Germ::Germ(CycleSet s, std::optional<Exponent> modulus) : s_(std::move(s)) {
  const auto d = static_cast<Exponent>(class_of(s_));
  if (!modulus) {
    d_ = d;
    return;
  }
  if (*modulus < 1 || *modulus % d != 0)
    throw Error(ErrorCode::InvalidModulus, "modulus " + std::to_string(*modulus) +
                                               " is not a positive multiple of the class " +
                                               std::to_string(d));
  d_ = *modulus;
}

Germ Germ::unchecked(CycleSet s, Exponent modulus) {
  if (modulus < 1) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  return Germ(std::move(s), modulus, true);
}

std::uint64_t Germ::order() const {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < size(); ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d_))
      throw Error(ErrorCode::Overflow, "germ order does not fit in 64 bits");
    out *= static_cast<std::uint64_t>(d_);
  }
  return out;
}

GermElement Germ::identity() const {
  return {ExponentVector(size(), 0), Permutation::identity(size())};
}

GermElement Germ::generator(Index i) const { return project(theta(s_, i)); }

GermElement Germ::make_element(ExponentVector cp, Permutation perm) const {
  if (cp.size() != size() || perm.size() != size())
    throw Error(ErrorCode::DimensionMismatch, "germ element of the wrong dimension");
  for (Exponent c : cp)
    if (c < 0 || c >= d_)
      throw Error(ErrorCode::InvalidModulus,
                  "residue " + std::to_string(c) + " outside [0," + std::to_string(d_) + ")");
  return {std::move(cp), std::move(perm)};
}

GermElement Germ::multiply(const GermElement& a, const GermElement& b) const {
  if (a.cp.size() != b.cp.size())
    throw Error(ErrorCode::DimensionMismatch, "germ elements of different dimension");
  GermElement out{ExponentVector(a.cp.size()), compose(b.perm, a.perm)};
  for (std::size_t i = 0; i < a.cp.size(); ++i) out.cp[i] = (a.cp[i] + b.cp[a.perm(i)]) % d_;
  return out;
}

GermElement Germ::inverse(const GermElement& g) const {
  const auto sigma = g.perm.inverse();
  GermElement out{ExponentVector(g.cp.size()), sigma};
  for (std::size_t i = 0; i < g.cp.size(); ++i) out.cp[i] = floor_mod(-g.cp[sigma(i)], d_);
  return out;
}

GermElement Germ::project(const MonomialElement& g) const {
  GermElement out{ExponentVector(g.cp.size()), g.perm};
  for (std::size_t i = 0; i < g.cp.size(); ++i) out.cp[i] = floor_mod(g.cp[i], d_);
  return out;
}

GermElement Germ::from_residues(std::span<const Exponent> residues) const {
  for (Exponent c : residues)
    if (c < 0 || c >= d_)
      throw Error(ErrorCode::InvalidModulus,
                  "residue " + std::to_string(c) + " outside [0," + std::to_string(d_) + ")");
  return project(cp_to_element(s_, residues));
}

GermElement Germ::from_word(const Word& word) const { return project(word_to_element(s_, word)); }

GermElement Germ::pi(const PiTuple& tuple) const { return project(cyset::pi(s_, tuple)); }

namespace {

// Breadth-first closure over residue codes, position 0 most significant.
// perms holds n bytes per code; perms[code * n] == 0xff marks "unseen" once
// the code store is initialised.
struct CodeStore {
  std::size_t n;
  std::uint64_t d;
  std::vector<std::uint64_t> place;  // d^(n-1-i)
  std::vector<std::uint8_t> perms;

  CodeStore(std::size_t n_, std::uint64_t d_, std::uint64_t count)
      : n(n_), d(d_), place(n_), perms(count * n_, 0xff) {
    std::uint64_t p = 1;
    for (std::size_t i = n; i-- > 0;) {
      place[i] = p;
      p *= d;
    }
  }
  bool seen(std::uint64_t code) const { return perms[code * n] != 0xff; }
  Exponent digit(std::uint64_t code, std::size_t i) const {
    return static_cast<Exponent>((code / place[i]) % d);
  }
  GermElement element(std::uint64_t code) const {
    GermElement g{ExponentVector(n), Permutation::identity(n)};
    std::vector<Index> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      g.cp[i] = digit(code, i);
      images[i] = perms[code * n + i];
    }
    g.perm = Permutation::from_images(std::move(images));
    return g;
  }
};

}  // namespace

namespace {

struct Walk {
  GermClosure result;
  std::optional<CodeStore> store;
};

Walk walk_closure(const Germ& germ, std::uint64_t cap) {
  const std::size_t n = germ.size();
  if (n > 255) throw Error(ErrorCode::CapExceeded, "germ closure supports n <= 255");
  std::uint64_t count = 0;
  try {
    count = germ.order();
  } catch (const Error&) {
    throw Error(ErrorCode::CapExceeded, "germ order exceeds the enumeration cap");
  }
  if (count > cap)
    throw Error(ErrorCode::CapExceeded, "germ order " + std::to_string(count) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
  const auto d = static_cast<std::uint64_t>(germ.modulus());
  Walk w;
  auto& store = w.store.emplace(n, d, count);
  auto& result = w.result;
  const auto& s = germ.cycle_set();

  std::vector<std::uint8_t> next(n), inverse(n);
  auto slot = [&](std::uint64_t code) {
    return store.perms.begin() + static_cast<std::ptrdiff_t>(code * n);
  };
  for (std::size_t i = 0; i < n; ++i) store.perms[i] = static_cast<std::uint8_t>(i);
  result.size = 1;

  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    const std::uint64_t code = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) inverse[store.perms[code * n + k]] = static_cast<std::uint8_t>(k);
    for (Index g = 0; g < n; ++g) {
      // right multiplication by s_g adds 1 at position perm^-1(g)
      const std::size_t pos = inverse[g];
      const auto digit = static_cast<std::uint64_t>(store.digit(code, pos));
      const std::uint64_t next_code =
          digit + 1 == d ? code - digit * store.place[pos] : code + store.place[pos];
      const auto& row = s.psi(g);
      for (std::size_t k = 0; k < n; ++k) next[k] = static_cast<std::uint8_t>(row(store.perms[code * n + k]));
      if (store.seen(next_code)) {
        if (!std::equal(next.begin(), next.end(), slot(next_code))) {
          auto existing = store.element(next_code);
          GermElement other{existing.cp, Permutation::from_images({next.begin(), next.end()})};
          result.conflict = std::make_pair(std::move(existing), std::move(other));
          return w;
        }
        continue;
      }
      std::copy(next.begin(), next.end(), slot(next_code));
      ++result.size;
      queue.push_back(next_code);
    }
  }
  return w;
}

}  // namespace

GermClosure Germ::closure(std::uint64_t cap) const { return walk_closure(*this, cap).result; }

void Germ::for_each(const std::function<void(const GermElement&)>& visit, std::uint64_t cap) const {
  auto w = walk_closure(*this, cap);
  if (w.result.conflict)
    throw Error(ErrorCode::NonDegeneracyViolation,
                "germ is not permutation-free: " + w.result.conflict->first.to_string() + " and " +
                    w.result.conflict->second.to_string());
  const std::uint64_t count = order();
  for (std::uint64_t code = 0; code < count; ++code)
    if (w.store->seen(code)) visit(w.store->element(code));
}

std::vector<GermElement> Germ::enumerate(std::uint64_t cap) const {
  std::vector<GermElement> out;
  for_each([&](const GermElement& g) { out.push_back(g); }, cap);
  return out;
}

bool is_permutation_free(const Germ& germ, std::uint64_t cap) {
  return germ.closure(cap).permutation_free();
}

Exponent germ_length(std::span<const Exponent> residues, Exponent d) {
  if (d < 1) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  Exponent total = 0;
  for (Exponent k : residues) {
    if (k < 0 || k >= d)
      throw Error(ErrorCode::InvalidModulus,
                  "residue " + std::to_string(k) + " outside [0," + std::to_string(d) + ")");
    total += 2 * k <= d ? k : d - k;
  }
  return total;
}

ExchangeResult exchange_check(const Germ& germ, const PiTuple& prefix, Index s) {
  const auto n = germ.size();
  if (s >= n) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(s + 1) + " out of range");
  std::vector<Exponent> counts(n, 0);
  for (Index t : prefix) {
    if (t >= n) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(t + 1) + " out of range");
    if (++counts[t] >= germ.modulus())
      throw Error(ErrorCode::NotReduced, "generator " + std::to_string(t + 1) + " occurs " +
                                             std::to_string(counts[t]) + " times");
  }
  ExchangeResult result;
  result.applicable = counts[s] + 1 >= germ.modulus();
  if (!result.applicable) return result;
  const auto g = germ.pi(prefix);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    PiTuple candidate{s};
    for (std::size_t j = 0; j < prefix.size(); ++j)
      if (j != i) candidate.push_back(prefix[j]);
    if (germ.pi(candidate) == g) {
      result.omitted = i;
      break;
    }
  }
  return result;
}

CycleSet retraction(const CycleSet& s, std::uint64_t k) {
  if (k < 1) throw Error(ErrorCode::NegativeExponent, "retraction needs k >= 1");
  std::vector<Permutation> rows;
  rows.reserve(s.size());
  for (Index i = 0; i < s.size(); ++i) rows.push_back(bracket_permutation(s, i, k));
  return CycleSet(std::move(rows));
}

std::uint64_t max_distinct_product_closed_form(unsigned n) {
  if (n < 2) throw Error(ErrorCode::IndexOutOfRange, "a_n needs n >= 2");
  std::uint64_t m = 1;
  while ((m + 1) * (m + 2) / 2 <= n) ++m;
  const std::uint64_t l = n - m * (m + 1) / 2;
  std::uint64_t fact = 1;  // m!
  for (std::uint64_t i = 2; i <= m; ++i) fact = static_cast<std::uint64_t>(checked_mul(static_cast<Exponent>(fact), static_cast<Exponent>(i)));
  if (l + 2 <= m) return static_cast<std::uint64_t>(checked_mul(static_cast<Exponent>(fact), static_cast<Exponent>(m + 1))) / (m - l);
  if (l + 1 == m) return static_cast<std::uint64_t>(checked_mul(static_cast<Exponent>(fact), static_cast<Exponent>(m + 2))) / 2;
  return static_cast<std::uint64_t>(checked_mul(static_cast<Exponent>(fact), static_cast<Exponent>(m + 1)));
}

namespace {

// Visits every partition of n into parts >= min_part (strictly increasing
// when distinct is set).
void partitions(unsigned n, unsigned min_part, bool distinct, std::vector<unsigned>& parts,
                const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (unsigned p = min_part; p <= n; ++p) {
    parts.push_back(p);
    partitions(n - p, distinct ? p + 1 : p, distinct, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

std::uint64_t max_distinct_product_brute_force(unsigned n) {
  std::uint64_t best = 0;
  std::vector<unsigned> parts;
  partitions(n, 1, true, parts, [&](const std::vector<unsigned>& ps) {
    std::uint64_t prod = 1;
    for (unsigned p : ps) prod *= p;
    best = std::max(best, prod);
  });
  return best;
}

std::uint64_t landau(unsigned n) {
  std::uint64_t best = 1;
  std::vector<unsigned> parts;
  partitions(n, 1, false, parts, [&](const std::vector<unsigned>& ps) {
    std::uint64_t l = 1;
    for (unsigned p : ps) l = lcm_u64(l, p);
    best = std::max(best, l);
  });
  return best;
}

ClassBounds class_bounds(unsigned n) {
  ClassBounds b;
  b.a_n = max_distinct_product_closed_form(n);
  b.a_n_brute = max_distinct_product_brute_force(n);
  b.landau_g = landau(n);
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n && f != 0; ++i)
    f = f > std::numeric_limits<std::uint64_t>::max() / i ? 0 : f * i;
  b.factorial_bound = f;
  return b;
}

std::vector<std::string> ConjectureReport::violations() const {
  std::vector<std::string> out;
  if (!checks.ot_divides_d) out.emplace_back("o(T) | d");
  if (!checks.d_divides_group) out.emplace_back("d | #G");
  if (!checks.group_divides_dn) out.emplace_back("#G | d^n");
  if (!same_primes) out.emplace_back("primes(d) = primes(#G)");
  if (!checks.d_divides_factorial) out.emplace_back("d | n!");
  if (!indecomposable_n_divides_group) out.emplace_back("indecomposable => n | #G");
  if (!squarefree_abelian_d_le_a_n) out.emplace_back("square-free and abelian => d <= a_n");
  if (!indecomposable_d_le_n) out.emplace_back("conjecture: indecomposable => d <= n");
  if (!d_le_a_n) out.emplace_back("conjecture: d <= a_n");
  return out;
}

ConjectureReport conjecture_report(const CycleSet& s) {
  ConjectureReport r;
  const auto cls = dehornoy_class(s);
  const auto group = perm_group(s, 0);
  const auto n = s.size();
  r.d = cls.d;
  r.g_order = cls.g_order;
  r.indecomposable = group.transitive;
  r.square_free = diagonal_map(s).square_free;
  r.abelian = group.abelian;
  r.a_n = n >= 2 ? max_distinct_product_closed_form(static_cast<unsigned>(n)) : 1;
  r.checks = cls.checks;
  r.same_primes = cls.checks.same_primes;
  r.indecomposable_d_le_n = !r.indecomposable || r.d <= n;
  r.d_le_a_n = r.d <= r.a_n;
  r.squarefree_abelian_d_le_a_n = !(r.square_free && r.abelian) || r.d <= r.a_n;
  r.indecomposable_n_divides_group = !r.indecomposable || r.g_order % n == 0;
  return r;
}

}  // namespace cyset
