#include "cyset/monomial.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cyset/error.hpp"

namespace cyset {

MonomialElement MonomialElement::identity(std::size_t n) {
  return {ExponentVector(n, 0), Permutation::identity(n)};
}

Exponent MonomialElement::length() const {
  Exponent out = 0;
  for (Exponent c : cp) out = checked_add(out, c < 0 ? -c : c);
  return out;
}

bool MonomialElement::is_positive() const noexcept {
  for (Exponent c : cp)
    if (c < 0) return false;
  return true;
}

std::string MonomialElement::to_string() const {
  std::string out = "cp=(";
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(cp[i]);
  }
  return out + ") perm=" + perm.to_cycle_string();
}

MonomialElement theta(const CycleSet& s, Index i) {
  if (i >= s.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "generator " + std::to_string(i + 1) + " not in 1.." + std::to_string(s.size()));
  ExponentVector cp(s.size(), 0);
  cp[i] = 1;
  return {std::move(cp), s.psi(i)};
}

ExponentVector conjugate_cp(const Permutation& sigma, std::span<const Exponent> c) {
  if (sigma.size() != c.size())
    throw Error(ErrorCode::DimensionMismatch, "permutation and exponent vector differ in size");
  ExponentVector out(c.size());
  for (Index i = 0; i < c.size(); ++i) out[i] = c[sigma(i)];
  return out;
}

MonomialElement multiply(const MonomialElement& a, const MonomialElement& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "multiplying elements of different dimension");
  ExponentVector cp(a.size());
  for (Index i = 0; i < a.size(); ++i) cp[i] = checked_add(a.cp[i], b.cp[a.perm(i)]);
  return {std::move(cp), compose(b.perm, a.perm)};
}

MonomialElement inverse(const MonomialElement& g) {
  auto inv = g.perm.inverse();
  auto cp = conjugate_cp(inv, g.cp);
  for (auto& c : cp) c = -c;
  return {std::move(cp), std::move(inv)};
}

MonomialElement transpose(const MonomialElement& g) {
  auto inv = g.perm.inverse();
  auto cp = conjugate_cp(inv, g.cp);
  return {std::move(cp), std::move(inv)};
}

MonomialElement power(const MonomialElement& g, std::uint64_t k) {
  auto result = MonomialElement::identity(g.size());
  auto base = g;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

NaiveMatrix naive_matrix(const MonomialElement& g) {
  NaiveMatrix m(g.size(), std::vector<std::optional<Exponent>>(g.size()));
  for (Index i = 0; i < g.size(); ++i) m[i][g.perm(i)] = g.cp[i];
  return m;
}

NaiveMatrix naive_product(const NaiveMatrix& a, const NaiveMatrix& b) {
  const auto n = a.size();
  NaiveMatrix out(n, std::vector<std::optional<Exponent>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[i][j] || !b[j][k]) continue;
        if (out[i][k]) throw std::logic_error("product entry is not a monomial");
        out[i][k] = *a[i][j] + *b[j][k];
      }
  return out;
}

MonomialElement from_naive_matrix(const NaiveMatrix& m) {
  const auto n = m.size();
  ExponentVector cp(n, 0);
  std::vector<Index> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    int found = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j]) {
        ++found;
        cp[i] = *m[i][j];
        images[i] = static_cast<Index>(j);
      }
    if (found != 1)
      throw Error(ErrorCode::NotAPermutation, "row " + std::to_string(i + 1) + " is not monomial");
  }
  return {std::move(cp), Permutation::from_images(std::move(images))};
}

}  // namespace cyset
