#include "cyset/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "cyset/arith.hpp"
#include "cyset/error.hpp"

namespace cyset {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Index> images) {
  std::vector<bool> seen(images.size(), false);
  for (Index x : images) {
    if (x >= images.size() || seen[x])
      throw Error(ErrorCode::NotAPermutation, "images do not form a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::span<const long long> one_based) {
  std::vector<Index> images;
  images.reserve(one_based.size());
  for (long long v : one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > one_based.size())
      throw Error(ErrorCode::NotAPermutation,
                  "entry " + std::to_string(v) + " out of range 1.." +
                      std::to_string(one_based.size()));
    images.push_back(static_cast<Index>(v - 1));
  }
  return from_images(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
  std::vector<Index> images(n);
  std::iota(images.begin(), images.end(), Index{0});
  std::vector<bool> used(n, false);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError,
                "bad cycle notation '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "id" || pos == text.size()) return Permutation(std::move(images));

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parenthesis");
    const auto body = text.substr(pos, close - pos);
    pos = close + 1;

    std::vector<Index> cycle;
    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (separated || n >= 10) {
      std::string cleaned(body);
      for (char& c : cleaned)
        if (c == ',') c = ' ';
      std::istringstream in(cleaned);
      long long v;
      while (in >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > n) fail("point out of range");
        cycle.push_back(static_cast<Index>(v - 1));
      }
      if (!in.eof()) fail("non-numeric point");
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-numeric point");
        const auto v = static_cast<std::size_t>(c - '0');
        if (v < 1 || v > n) fail("point out of range");
        cycle.push_back(static_cast<Index>(v - 1));
      }
    }
    for (Index x : cycle) {
      if (used[x]) fail("cycles are not disjoint");
      used[x] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Index>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t out = 1;
  for (const auto& c : cycles()) out = lcm_u64(out, c.size());
  return out;
}

std::vector<std::vector<Index>> Permutation::cycles() const {
  std::vector<std::vector<Index>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Index> cycle;
    for (Index x = static_cast<Index>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  const bool wide = images_.size() >= 10;
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (wide && k > 0) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw Error(ErrorCode::DimensionMismatch, "composing permutations of different degree");
  std::vector<Index> images(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) images[x] = outer.images_[inner.images_[x]];
  return Permutation(std::move(images));
}

}  // namespace cyset
