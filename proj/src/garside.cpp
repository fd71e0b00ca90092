#include "cyset/garside.hpp"

#include <algorithm>

#include "cyset/error.hpp"

namespace cyset {

namespace {

void require_positive(const MonomialElement& g) {
  if (!g.is_positive())
    throw Error(ErrorCode::NegativeExponent, "element " + g.to_string() + " is not in the monoid");
}

void require_same_size(const MonomialElement& a, const MonomialElement& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "elements of different dimension");
}

bool componentwise_le(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

template <class Op>
ExponentVector combine(const ExponentVector& a, const ExponentVector& b, Op op) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

const auto take_min = [](Exponent x, Exponent y) { return std::min(x, y); };
const auto take_max = [](Exponent x, Exponent y) { return std::max(x, y); };

// Calls visit(c) for every c with 0 <= c <= bound, position 0 fastest.
template <class Visit>
void for_each_in_box(const ExponentVector& bound, Visit visit) {
  ExponentVector c(bound.size(), 0);
  while (true) {
    visit(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound[i]) c[i++] = 0;
    if (i == c.size()) return;
    ++c[i];
  }
}

std::uint64_t box_size(const ExponentVector& bound, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (Exponent b : bound) {
    const auto factor = static_cast<std::uint64_t>(b) + 1;
    if (size > cap / factor) return cap + 1;
    size *= factor;
  }
  return size;
}

}  // namespace

bool left_divides(const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return componentwise_le(a.cp, b.cp);
}

bool right_divides(const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return componentwise_le(transpose(a).cp, transpose(b).cp);
}

MonomialElement gcd_left(const CycleSet& s, const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return cp_to_element(s, combine(a.cp, b.cp, take_min));
}

MonomialElement lcm_left(const CycleSet& s, const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return cp_to_element(s, combine(a.cp, b.cp, take_max));
}

MonomialElement gcd_right(const CycleSet& s, const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return column_cp_to_element(s, combine(transpose(a).cp, transpose(b).cp, take_min));
}

MonomialElement lcm_right(const CycleSet& s, const MonomialElement& a, const MonomialElement& b) {
  require_same_size(a, b);
  require_positive(a);
  require_positive(b);
  return column_cp_to_element(s, combine(transpose(a).cp, transpose(b).cp, take_max));
}

MonomialElement delta(const CycleSet& s, Exponent k) {
  if (k < 1) throw Error(ErrorCode::NegativeExponent, "Delta power must be at least 1");
  return cp_to_element(s, ExponentVector(s.size(), k));
}

std::vector<MonomialElement> divisors_of_delta(const CycleSet& s, std::size_t size_cap) {
  if (s.size() > size_cap)
    throw Error(ErrorCode::CapExceeded, "2^" + std::to_string(s.size()) + " divisors exceed the cap 2^" +
                                            std::to_string(size_cap));
  std::vector<MonomialElement> out;
  out.reserve(std::size_t{1} << s.size());
  for_each_in_box(ExponentVector(s.size(), 1),
                  [&](const ExponentVector& c) { out.push_back(cp_to_element(s, c)); });
  return out;
}

std::vector<MonomialElement> left_divisors(const CycleSet& s, const MonomialElement& g) {
  require_positive(g);
  std::vector<MonomialElement> out;
  for_each_in_box(g.cp, [&](const ExponentVector& c) { out.push_back(cp_to_element(s, c)); });
  return out;
}

std::vector<MonomialElement> right_divisors(const CycleSet& s, const MonomialElement& g) {
  require_positive(g);
  const auto st = transposed_cycle_set(s);
  std::vector<MonomialElement> out;
  for_each_in_box(transpose(g).cp,
                  [&](const ExponentVector& c) { out.push_back(transpose(cp_to_element(st, c))); });
  return out;
}

BalanceReport is_balanced(const CycleSet& s, const MonomialElement& g, std::uint64_t divisor_cap) {
  require_positive(g);
  BalanceReport report{};
  report.rows_match_columns = g.cp == transpose(g).cp;
  if (box_size(g.cp, divisor_cap) > divisor_cap) {
    report.exact = false;
    report.balanced = false;
    return report;
  }
  auto left = left_divisors(s, g);
  auto right = right_divisors(s, g);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  report.exact = true;
  report.balanced = left == right;
  return report;
}

}  // namespace cyset
