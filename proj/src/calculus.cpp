#include "cyset/calculus.hpp"

#include <algorithm>

#include "cyset/error.hpp"

namespace cyset {

namespace {

void check_indices(const CycleSet& s, const std::vector<Index>& letters) {
  for (Index x : letters)
    if (x >= s.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator " + std::to_string(x + 1) + " not in 1.." + std::to_string(s.size()));
}

}  // namespace

MonomialElement pi(const CycleSet& s, const PiTuple& tuple) {
  check_indices(s, tuple);
  auto g = MonomialElement::identity(s.size());
  for (Index t : tuple) g = multiply(g, theta(s, g.perm(t)));
  return g;
}

Index omega(const CycleSet& s, const PiTuple& tuple) {
  if (tuple.empty()) throw Error(ErrorCode::EmptyTuple, "Omega of an empty tuple");
  check_indices(s, tuple);
  Permutation prefix = Permutation::identity(s.size());
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k)
    prefix = compose(s.psi(prefix(tuple[k])), prefix);
  return prefix(tuple.back());
}

Index omega_recursive(const CycleSet& s, const PiTuple& tuple) {
  if (tuple.empty()) throw Error(ErrorCode::EmptyTuple, "Omega of an empty tuple");
  check_indices(s, tuple);
  const auto n = s.size();
  const auto m = tuple.size() - 1;
  // memo[k][x] = Omega_{k+1}(t_1, ..., t_k, x)
  std::vector<std::vector<Index>> memo(m + 1, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x) memo[0][x] = x;
  for (std::size_t k = 1; k <= m; ++k)
    for (Index x = 0; x < n; ++x)
      memo[k][x] = s.star(memo[k - 1][tuple[k - 1]], memo[k - 1][x]);
  return memo[m][tuple.back()];
}

MonomialElement word_to_element(const CycleSet& s, const Word& word) {
  check_indices(s, word);
  auto g = MonomialElement::identity(s.size());
  for (Index x : word) g = multiply(g, theta(s, x));
  return g;
}

PiTuple pi_expression(const CycleSet& s, const Word& word) {
  check_indices(s, word);
  PiTuple out;
  out.reserve(word.size());
  Permutation prefix = Permutation::identity(s.size());  // psi(Pi_{j-1})
  for (Index letter : word) {
    const Index t = prefix.inverse()(letter);
    out.push_back(t);
    prefix = compose(s.psi(letter), prefix);
  }
  return out;
}

bool words_equal(const CycleSet& s, const Word& w1, const Word& w2) {
  return word_to_element(s, w1).cp == word_to_element(s, w2).cp;
}

bool germ_words_equal(const CycleSet& s, const Word& w1, const Word& w2, Exponent modulus) {
  if (modulus < 1) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  const auto a = word_to_element(s, w1).cp;
  const auto b = word_to_element(s, w2).cp;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (floor_mod(a[i], modulus) != floor_mod(b[i], modulus)) return false;
  return true;
}

Permutation bracket_permutation(const CycleSet& s, Index i, std::uint64_t k) {
  if (i >= s.size())
    throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i + 1) + " out of range");
  Permutation acc = Permutation::identity(s.size());
  Index current = i;
  for (std::uint64_t step = 0; step < k; ++step) {
    acc = compose(s.psi(current), acc);
    current = s.star(current, current);
  }
  return acc;
}

MonomialElement bracket_power(const CycleSet& s, Index i, Exponent k) {
  if (i >= s.size())
    throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i + 1) + " out of range");
  if (k >= 0) {
    auto g = MonomialElement::identity(s.size());
    Index current = i;
    for (Exponent step = 0; step < k; ++step) {
      g = multiply(g, theta(s, current));
      current = s.star(current, current);
    }
    return g;
  }
  const auto t_inverse = diagonal_map(s).t.inverse();
  Index t = i;
  for (Exponent step = 0; step < -k; ++step) t = t_inverse(t);
  return inverse(bracket_power(s, t, -k));
}

CycleSet transposed_cycle_set(const CycleSet& s) {
  const auto t_inverse = diagonal_map(s).t.inverse();
  std::vector<Permutation> psi;
  psi.reserve(s.size());
  for (Index j = 0; j < s.size(); ++j) psi.push_back(s.psi(t_inverse(j)).inverse());
  return CycleSet(std::move(psi));
}

MonomialElement cp_to_element(const CycleSet& s, std::span<const Exponent> c) {
  if (c.size() != s.size())
    throw Error(ErrorCode::DimensionMismatch, "exponent vector has the wrong length");
  PiTuple tuple;
  for (Index i = 0; i < c.size(); ++i) {
    if (c[i] < 0)
      throw Error(ErrorCode::NegativeExponent,
                  "exponent " + std::to_string(c[i]) + " at position " + std::to_string(i + 1));
    tuple.insert(tuple.end(), static_cast<std::size_t>(c[i]), i);
  }
  return pi(s, tuple);
}

MonomialElement column_cp_to_element(const CycleSet& s, std::span<const Exponent> c) {
  return transpose(cp_to_element(transposed_cycle_set(s), c));
}

Fraction left_fraction(const CycleSet& s, const MonomialElement& g) {
  ExponentVector positive(g.cp.size());
  std::transform(g.cp.begin(), g.cp.end(), positive.begin(),
                 [](Exponent c) { return std::max<Exponent>(c, 0); });
  auto f = cp_to_element(s, positive);
  auto h = multiply(inverse(g), f);
  return {std::move(f), std::move(h)};
}

Fraction right_fraction(const CycleSet& s, const MonomialElement& g) {
  // g^t = F H^-1 in the transposed structure, hence g = (H^t)^-1 F^t.
  auto mirrored = left_fraction(transposed_cycle_set(s), transpose(g));
  return {transpose(mirrored.h), transpose(mirrored.f)};
}

}  // namespace cyset
