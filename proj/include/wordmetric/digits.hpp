#pragma once

// Exact base-a expansions, leading digit strings and maximal a-adic blocks.
//
// Digits are stored little-endian: index i holds the coefficient of a^i. The
// expansion of zero is the empty sequence, so a stored expansion never has a
// trailing (most significant) zero digit.

#include "wordmetric/core.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordmetric {

using Digit = std::uint32_t;

struct AdicExpansion {
  Base base;
  std::vector<Digit> digits;

  [[nodiscard]] bool is_zero() const noexcept { return digits.empty(); }

  /// Highest index carrying a nonzero digit. Undefined for zero.
  [[nodiscard]] std::size_t ord() const {
    detail::require(!digits.empty(), "ord of zero is undefined");
    return digits.size() - 1;
  }

  [[nodiscard]] Digit digit(std::size_t i) const noexcept {
    return i < digits.size() ? digits[i] : 0;
  }

  friend bool operator==(const AdicExpansion&, const AdicExpansion&) = default;
};

namespace detail {

/// Largest w with a^w <= 2^32, used to peel several digits per division.
inline std::uint32_t digits_per_word(Base a) {
  std::uint32_t w = 0;
  std::uint64_t p = 1;
  while (p * a.value() <= (std::uint64_t{1} << 32)) {
    p *= a.value();
    ++w;
  }
  return w;
}

inline std::uint64_t small_pow(std::uint32_t a, std::uint32_t e) {
  std::uint64_t p = 1;
  for (std::uint32_t i = 0; i < e; ++i) p *= a;
  return p;
}

inline void trim(std::vector<Digit>& digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

}  // namespace detail

inline AdicExpansion expand(const BigInt& n, Base a) {
  detail::require(n >= 0, "expand requires a nonnegative integer");
  AdicExpansion out{a, {}};
  if (n == 0) return out;

  const std::uint32_t w = detail::digits_per_word(a);
  const BigInt chunk = detail::small_pow(a.value(), w);
  BigInt rest = n;
  BigInt q;
  BigInt r;
  while (rest != 0) {
    boost::multiprecision::divide_qr(rest, chunk, q, r);
    auto word = r.convert_to<std::uint64_t>();
    for (std::uint32_t i = 0; i < w; ++i) {
      out.digits.push_back(static_cast<Digit>(word % a.value()));
      word /= a.value();
    }
    rest.swap(q);
  }
  detail::trim(out.digits);
  return out;
}

inline BigInt reconstruct(std::span<const Digit> digits, Base a) {
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value *= a.value();
    value += *it;
  }
  return value;
}

inline BigInt reconstruct(const AdicExpansion& e) { return reconstruct(e.digits, e.base); }

inline std::size_t ord(const BigInt& n, Base a) {
  detail::require(n >= 1, "ord requires a positive integer");
  return expand(n, a).ord();
}

/// Leading k-digit string (gamma_0, ..., gamma_{k-1}). gamma_{k-1} is the most
/// significant digit and is nonzero; value_t = sum gamma_i a^i.
struct LeadingString {
  Base base;
  std::vector<Digit> gammas;
  BigInt value_t;

  [[nodiscard]] std::size_t k() const noexcept { return gammas.size(); }

  friend bool operator==(const LeadingString&, const LeadingString&) = default;
};

inline LeadingString make_leading_string(Base a, std::vector<Digit> gammas) {
  detail::require(!gammas.empty(), "leading string needs at least one digit");
  for (Digit g : gammas) detail::require(g < a.value(), "leading string digit out of range");
  detail::require(gammas.back() != 0, "most significant digit of a leading string must be nonzero");
  BigInt t = reconstruct(gammas, a);
  return LeadingString{a, std::move(gammas), std::move(t)};
}

inline LeadingString leading_string(const AdicExpansion& e, std::size_t k) {
  detail::require(k >= 1, "leading string length must be positive");
  detail::require(!e.is_zero(), "leading string of zero is undefined");
  detail::require(k <= e.digits.size(), "leading string longer than ord + 1 digits");
  std::vector<Digit> gammas(e.digits.end() - static_cast<std::ptrdiff_t>(k), e.digits.end());
  return make_leading_string(e.base, std::move(gammas));
}

inline LeadingString leading_string(const BigInt& n, Base a, std::size_t k) {
  detail::require(n >= 1, "leading string requires a positive integer");
  return leading_string(expand(n, a), k);
}

/// Half-open run [u, v) of nonzero digits.
struct Block {
  std::size_t u;
  std::size_t v;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  [[nodiscard]] std::size_t count() const noexcept { return blocks.size(); }
};

inline BlockDecomposition block_decomposition(std::span<const Digit> digits) {
  BlockDecomposition out;
  std::size_t i = 0;
  while (i < digits.size()) {
    if (digits[i] == 0) {
      ++i;
      continue;
    }
    std::size_t u = i;
    while (i < digits.size() && digits[i] != 0) ++i;
    out.blocks.push_back(Block{u, i});
  }
  return out;
}

inline BlockDecomposition block_decomposition(const BigInt& n, Base a) {
  return block_decomposition(expand(n, a).digits);
}

/// M_A for a digit vector, without materialising the blocks.
inline std::size_t block_count(std::span<const Digit> digits) noexcept {
  std::size_t count = 0;
  bool in_run = false;
  for (Digit d : digits) {
    if (d != 0 && !in_run) ++count;
    in_run = d != 0;
  }
  return count;
}

inline std::size_t block_count(const BigInt& n, Base a) { return block_count(expand(n, a).digits); }

// Text form of digit strings: most significant digit first behind a base
// prefix, e.g. "base2:1101". Bases up to 36 use one alphanumeric character per
// digit; larger bases separate decimal digit values with '.'.

inline std::string format_digits_msb(std::span<const Digit> little_endian, Base a) {
  std::string out = "base" + std::to_string(a.value()) + ":";
  if (little_endian.empty()) return out + "0";
  const bool compact = a.value() <= 36;
  for (auto it = little_endian.rbegin(); it != little_endian.rend(); ++it) {
    if (compact) {
      out.push_back(*it < 10 ? static_cast<char>('0' + *it) : static_cast<char>('a' + *it - 10));
    } else {
      if (it != little_endian.rbegin()) out.push_back('.');
      out += std::to_string(*it);
    }
  }
  return out;
}

inline std::string format_digits_msb(const AdicExpansion& e) {
  return format_digits_msb(e.digits, e.base);
}

/// Parses most-significant-first digits (with or without the "baseN:" prefix)
/// into little-endian order. Leading zeros are kept.
inline std::vector<Digit> parse_digits_msb(std::string_view text, Base a) {
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    const std::string prefix = "base" + std::to_string(a.value());
    detail::require(text.substr(0, colon) == prefix, "digit string prefix does not match base");
    text.remove_prefix(colon + 1);
  }
  detail::require(!text.empty(), "empty digit string");
  std::vector<Digit> msb;
  if (a.value() <= 36 && text.find('.') == std::string_view::npos) {
    for (char ch : text) {
      Digit d = 0;
      if (ch >= '0' && ch <= '9') {
        d = static_cast<Digit>(ch - '0');
      } else if (ch >= 'a' && ch <= 'z') {
        d = static_cast<Digit>(ch - 'a' + 10);
      } else if (ch >= 'A' && ch <= 'Z') {
        d = static_cast<Digit>(ch - 'A' + 10);
      } else {
        throw std::invalid_argument("bad digit character in " + std::string(text));
      }
      msb.push_back(d);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto dot = text.find('.', pos);
      if (dot == std::string_view::npos) dot = text.size();
      auto field = text.substr(pos, dot - pos);
      detail::require(!field.empty(), "empty digit field");
      BigInt v = parse_integer(field);
      detail::require(v >= 0 && v < a.value(), "digit out of range");
      msb.push_back(v.convert_to<Digit>());
      pos = dot + 1;
    }
  }
  for (Digit d : msb) detail::require(d < a.value(), "digit out of range for base");
  return {msb.rbegin(), msb.rend()};
}

}  // namespace wordmetric
