#pragma once

// Multiplicative dependence of bases and exact scans over the powers b^n
// written in base a: leading digit strings, aligned hits with their density,
// and growth of the maximal-block count.
//
// Every digit condition is decided on the exact base-a digits of b^n. The
// powers are kept directly in base a^w words and advanced by one small
// multiplication per step, so a scan up to N costs O(N^2 / w) word operations.

#include "wordmetric/core.hpp"
#include "wordmetric/digits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace wordmetric {

struct PerfectPower {
  std::uint64_t root;
  std::uint32_t exponent;
};

/// x = root^exponent with the exponent maximal (so the root is minimal).
inline PerfectPower perfect_power(Base x) {
  const std::uint64_t v = x.value();
  std::uint32_t max_degree = 0;
  while ((std::uint64_t{1} << (max_degree + 1)) <= v) ++max_degree;  // floor(log2 v)
  for (std::uint32_t p = max_degree; p >= 2; --p) {
    const auto guess = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(v), 1.0 / p)));
    for (std::uint64_t c = guess > 1 ? guess - 1 : 1; c <= guess + 1; ++c) {
      if (c >= 2 && ipow(BigInt(c), p) == v) return PerfectPower{c, p};
    }
  }
  return PerfectPower{v, 1};
}

struct DependenceResult {
  Base a;
  Base b;
  bool dependent = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;  // least (m, n) with a^m = b^n
  std::optional<PerfectPower> root_a;                              // a = c^p
  std::optional<PerfectPower> root_b;                              // b = c^q

  /// (c, p, q) with a = c^p and b = c^q, when dependent.
  [[nodiscard]] std::optional<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> common_root() const {
    if (!dependent) return std::nullopt;
    return std::make_tuple(root_a->root, root_a->exponent, root_b->exponent);
  }
};

inline DependenceResult multiplicative_dependence(Base a, Base b) {
  const PerfectPower pa = perfect_power(a);
  const PerfectPower pb = perfect_power(b);
  DependenceResult out{a, b, false, std::nullopt, std::nullopt, std::nullopt};
  if (pa.root != pb.root) return out;

  const std::uint32_t g = std::gcd(pa.exponent, pb.exponent);
  const std::uint64_t m = pb.exponent / g;
  const std::uint64_t n = pa.exponent / g;
  detail::certify(ipow(a, m) == ipow(b, n), "dependence witness does not satisfy a^m = b^n");
  out.dependent = true;
  out.witness = std::make_pair(m, n);
  out.root_a = pa;
  out.root_b = pb;
  return out;
}

/// b^n held as base-a digits packed w to a word, advanced in place.
class RadixPower {
 public:
  RadixPower(Base a, Base b, std::uint64_t n = 0)
      : a_(a), b_(b), n_(n), w_(detail::digits_per_word(a)), word_(detail::small_pow(a.value(), w_)) {
    const BigInt start = ipow(b, n);
    if (n == 0) {
      words_.push_back(1);
      return;
    }
    BigInt rest = start;
    BigInt q;
    BigInt r;
    const BigInt word = word_;
    while (rest != 0) {
      boost::multiprecision::divide_qr(rest, word, q, r);
      words_.push_back(r.convert_to<std::uint64_t>());
      rest.swap(q);
    }
  }

  [[nodiscard]] Base base() const noexcept { return a_; }
  [[nodiscard]] Base multiplier() const noexcept { return b_; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return n_; }

  /// b^n -> b^(n+1). Each word stays below a^w and the carry stays below b.
  void advance() {
    std::uint64_t carry = 0;
    for (auto& word : words_) {
      const std::uint64_t x = word * b_.value() + carry;
      word = x % word_;
      carry = x / word_;
    }
    while (carry != 0) {
      words_.push_back(carry % word_);
      carry /= word_;
    }
    ++n_;
  }

  [[nodiscard]] std::size_t digit_count() const noexcept {
    std::size_t top = 0;
    for (std::uint64_t t = words_.back(); t != 0; t /= a_.value()) ++top;
    return (words_.size() - 1) * w_ + top;
  }

  [[nodiscard]] std::size_t ord() const noexcept { return digit_count() - 1; }

  [[nodiscard]] Digit digit(std::size_t i) const noexcept {
    const std::size_t wi = i / w_;
    if (wi >= words_.size()) return 0;
    std::uint64_t x = words_[wi];
    for (std::size_t s = i % w_; s > 0; --s) x /= a_.value();
    return static_cast<Digit>(x % a_.value());
  }

  /// Little-endian digits, trimmed.
  [[nodiscard]] std::vector<Digit> digits() const {
    std::vector<Digit> out;
    out.reserve(words_.size() * w_);
    for (std::uint64_t x : words_) {
      for (std::uint32_t i = 0; i < w_; ++i) {
        out.push_back(static_cast<Digit>(x % a_.value()));
        x /= a_.value();
      }
    }
    detail::trim(out);
    return out;
  }

  [[nodiscard]] AdicExpansion expansion() const { return AdicExpansion{a_, digits()}; }

  /// True when the top gammas.size() digits equal the leading string.
  [[nodiscard]] bool leads_with(const LeadingString& target) const {
    const std::size_t len = digit_count();
    const std::size_t k = target.k();
    if (k > len) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (digit(len - k + i) != target.gammas[i]) return false;
    }
    return true;
  }

  [[nodiscard]] std::size_t block_count() const {
    std::size_t count = 0;
    bool in_run = false;
    const std::size_t len = digit_count();
    std::size_t i = 0;
    for (std::uint64_t x : words_) {
      for (std::uint32_t s = 0; s < w_ && i < len; ++s, ++i) {
        const bool nz = x % a_.value() != 0;
        if (nz && !in_run) ++count;
        in_run = nz;
        x /= a_.value();
      }
    }
    return count;
  }

 private:
  Base a_;
  Base b_;
  std::uint64_t n_;
  std::uint32_t w_;
  std::uint64_t word_;
  std::vector<std::uint64_t> words_;
};

/// Partitioning of a scan over n = 1..N. Results never depend on these
/// settings; chunk = 0 means one chunk per worker.
struct ScanOptions {
  unsigned workers = 1;
  std::uint64_t chunk = 0;
};

namespace detail {

/// Visits n in [1, n_limit] in chunks. visit(RadixPower at b^n) returns true for
/// a hit. Each chunk keeps at most per_chunk_cap hits (0 = unlimited). Hits come
/// back ascending.
template <class Visit>
std::vector<std::uint64_t> scan_powers(Base a, Base b, std::uint64_t n_limit, const ScanOptions& opts,
                                       std::size_t per_chunk_cap, Visit visit) {
  if (n_limit == 0) return {};
  const unsigned workers = std::max(1u, opts.workers);
  const std::uint64_t chunk = opts.chunk != 0 ? opts.chunk : (n_limit + workers - 1) / workers;
  const std::uint64_t chunks = (n_limit + chunk - 1) / chunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t first = c * chunk + 1;
    const std::uint64_t last = std::min(n_limit, first + chunk - 1);
    RadixPower p(a, b, first);
    for (std::uint64_t n = first;; ++n) {
      if (visit(p)) {
        found[c].push_back(n);
        if (per_chunk_cap != 0 && found[c].size() >= per_chunk_cap) break;
      }
      if (n == last) break;
      p.advance();
    }
  };

  if (workers == 1 || chunks == 1) {
    std::size_t total = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      run_chunk(c);
      total += found[c].size();
      if (per_chunk_cap != 0 && total >= per_chunk_cap) break;
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(workers, chunks); ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  std::vector<std::uint64_t> hits;
  for (auto& f : found) hits.insert(hits.end(), f.begin(), f.end());
  if (per_chunk_cap != 0 && hits.size() > per_chunk_cap) hits.resize(per_chunk_cap);
  return hits;
}

inline void require_independent(Base a, Base b) {
  if (multiplicative_dependence(a, b).dependent) {
    throw HypothesisViolated("bases " + std::to_string(a.value()) + " and " + std::to_string(b.value()) +
                             " are multiplicatively dependent (a^m = b^n for some m, n >= 1)");
  }
}

}  // namespace detail

/// Up to `count` exponents 1 <= n <= n_limit, ascending, whose power b^n has the
/// given leading string in base a. A short list means the limit was reached.
inline std::vector<std::uint64_t> find_leading_exponents(Base a, Base b, const LeadingString& target,
                                                         std::size_t count, std::uint64_t n_limit,
                                                         const ScanOptions& opts = {}) {
  detail::require(target.base == a, "leading string base differs from a");
  detail::require(count >= 1, "count must be positive");
  detail::require_independent(a, b);
  auto hits = detail::scan_powers(a, b, n_limit, opts, count,
                                  [&](const RadixPower& p) { return p.leads_with(target); });
  for (auto n : hits) {
    detail::certify(leading_string(ipow(b, n), a, target.k()) == target, "leading-string hit failed recheck");
  }
  return hits;
}

struct DensityReport {
  Base a;
  Base b;
  LeadingString target;
  std::uint64_t scan_limit = 0;
  std::vector<std::uint64_t> aligned_hits;
  std::vector<std::uint64_t> alignment;  // m with t a^(km) <= b^n < (t+1) a^(km), per hit

  [[nodiscard]] std::size_t k() const noexcept { return target.k(); }
  [[nodiscard]] double empirical_density() const {
    return scan_limit == 0 ? 0.0 : static_cast<double>(aligned_hits.size()) / static_cast<double>(scan_limit);
  }
  [[nodiscard]] double theoretical_density() const {
    const double t = target.value_t.convert_to<double>();
    return std::log1p(1.0 / t) / (static_cast<double>(k()) * std::log(static_cast<double>(a.value())));
  }
};

/// m with t a^(km) <= b^n < (t+1) a^(km), or nullopt. Exact.
inline std::optional<std::uint64_t> aligned_exponent(Base a, Base b, const LeadingString& target,
                                                     std::uint64_t n) {
  const BigInt power = ipow(b, n);
  const std::size_t k = target.k();
  const std::size_t len = expand(power, a).digits.size();
  if (len < k || len % k != 0) return std::nullopt;
  const std::uint64_t m = len / k - 1;
  const BigInt scale = ipow(a, k * m);
  if (target.value_t * scale <= power && power < (target.value_t + 1) * scale) return m;
  return std::nullopt;
}

inline DensityReport find_aligned_exponents(Base a, Base b, const LeadingString& target, std::uint64_t n_limit,
                                            const ScanOptions& opts = {}) {
  detail::require(target.base == a, "leading string base differs from a");
  detail::require_independent(a, b);
  const std::size_t k = target.k();
  DensityReport report{a, b, target, n_limit, {}, {}};
  report.aligned_hits = detail::scan_powers(a, b, n_limit, opts, 0, [&](const RadixPower& p) {
    return p.digit_count() % k == 0 && p.leads_with(target);
  });
  for (auto n : report.aligned_hits) {
    auto m = aligned_exponent(a, b, target, n);
    detail::certify(m.has_value(), "aligned hit failed exact recheck");
    report.alignment.push_back(*m);
  }
  return report;
}

struct GrowthHit {
  std::uint64_t n;
  std::size_t blocks;
};

/// Least n <= n_limit with M_A(b^n) >= ell. Throws SearchExhausted otherwise.
inline GrowthHit block_growth_search(Base a, Base b, std::size_t ell, std::uint64_t n_limit,
                                     const ScanOptions& opts = {}) {
  detail::require(ell >= 1, "ell must be positive");
  detail::require_independent(a, b);
  auto hits = detail::scan_powers(a, b, n_limit, opts, 1,
                                  [&](const RadixPower& p) { return p.block_count() >= ell; });
  if (hits.empty()) {
    throw SearchExhausted("no n <= " + std::to_string(n_limit) + " with M_A(b^n) >= " + std::to_string(ell));
  }
  const std::size_t m = block_count(ipow(b, hits.front()), a);
  detail::certify(m >= ell, "growth hit failed recheck");
  return GrowthHit{hits.front(), m};
}

}  // namespace wordmetric
