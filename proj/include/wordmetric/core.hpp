#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordmetric {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an exhaustive computation would exceed its configured budget.
/// The computation never returns a partial or guessed answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded scan reached its limit without finding what was asked for.
class SearchExhausted : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

/// Raised when an operation is asked to run outside the hypothesis of the
/// result it implements, e.g. a leading-digit search on a pair a, b with
/// a^m = b^n.
class HypothesisViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an equivalence certificate is requested for a pair whose
/// metrics are not bi-Lipschitz equivalent.
class NotEquivalent : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

/// A constructed certificate failed one of its own checks. This contradicts a
/// theorem and is never expected; callers should not try to recover.
class CertificateViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void certify(bool cond, const std::string& what) {
  if (!cond) throw CertificateViolation(what);
}

}  // namespace detail

/// Radix of a geometric generating set {a^i}. Always at least 2.
class Base {
 public:
  explicit Base(std::uint64_t value) : value_(static_cast<std::uint32_t>(value)) {
    detail::require(value >= 2, "base must be at least 2");
    detail::require(value <= 0xFFFFFFFFull, "base must fit in 32 bits");
  }

  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
  [[nodiscard]] BigInt big() const { return BigInt(value_); }

  friend bool operator==(Base, Base) = default;
  friend auto operator<=>(Base, Base) = default;

 private:
  std::uint32_t value_;
};

inline BigInt ipow(const BigInt& x, std::uint64_t e) {
  BigInt result = 1;
  BigInt sq = x;
  while (e != 0) {
    if (e & 1u) result *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return result;
}

inline BigInt ipow(Base a, std::uint64_t e) { return ipow(a.big(), e); }

inline std::string to_decimal(const BigInt& n) { return n.str(); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument on
/// anything else.
inline BigInt parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  detail::require(!body.empty(), "empty integer literal");
  for (char ch : body) {
    detail::require(ch >= '0' && ch <= '9', "not a decimal integer: " + std::string(text));
  }
  BigInt value{std::string(body)};
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace wordmetric
