#include "cyset/arith.hpp"

#include <tuple>
#include <utility>

#include "cyset/error.hpp"

namespace cyset {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "exponent addition overflows 64 bits");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "exponent product overflows 64 bits");
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t out;
  if (__builtin_mul_overflow(a / gcd_u64(a, b), b, &out))
    throw Error(ErrorCode::Overflow, "lcm overflows 64 bits");
  return out;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t value) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      ++out[p];
      value /= p;
    }
  }
  if (value > 1) ++out[value];
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(value)) out.push_back(p);
  return out;
}

bool divides_power(std::uint64_t a, std::uint64_t b, unsigned e) {
  if (a == 0) return false;
  const auto fb = factorize(b);
  for (const auto& [p, k] : factorize(a)) {
    auto it = fb.find(p);
    if (it == fb.end() || k > static_cast<std::uint64_t>(it->second) * e) return false;
  }
  return true;
}

bool divides_factorial(std::uint64_t a, unsigned n) {
  if (a == 0) return false;
  for (const auto& [p, k] : factorize(a)) {
    std::uint64_t legendre = 0;
    for (std::uint64_t q = p; q <= n; q *= p) legendre += n / q;
    if (k > legendre) return false;
  }
  return true;
}

Exponent floor_mod(Exponent x, Exponent m) {
  const Exponent r = x % m;
  return r < 0 ? r + m : r;
}

Bezout extended_euclid(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  return {old_r, old_s, old_t};
}

}  // namespace cyset
