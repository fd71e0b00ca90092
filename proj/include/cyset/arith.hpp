#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cyset {

using Exponent = std::int64_t;

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Throws Error(Overflow) if the result does not fit.
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Prime factorisation by trial division, ascending primes.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t value);

/// Sorted list of the distinct primes dividing value.
std::vector<std::uint64_t> prime_divisors(std::uint64_t value);

/// True iff a divides b^e, evaluated prime by prime so b^e is never formed.
bool divides_power(std::uint64_t a, std::uint64_t b, unsigned e);

/// True iff a divides n!, evaluated with Legendre's formula.
bool divides_factorial(std::uint64_t a, unsigned n);

/// x mod m in [0, m).
Exponent floor_mod(Exponent x, Exponent m);

struct Bezout {
  std::int64_t gcd;
  std::int64_t x;
  std::int64_t y;
};

/// Extended Euclid: a*x + b*y = gcd(a, b).
Bezout extended_euclid(std::int64_t a, std::int64_t b);

}  // namespace cyset
