#pragma once

// Bi-Lipschitz equivalence of the word metrics d_A and d_B on the integers for
// A = {a^i} and B = {b^j}. The metrics are equivalent exactly when a^m = b^n
// for some m, n >= 1; in that case every a^i has ℓ_B(a^i) <= H_A, with
//   H_A = 1 + max{ ℓ_B(a^r) : 0 <= r < m },
// because a^i = (a^m)^q a^r and a^(qm) = b^(qn) is a single generator of B.

#include "wordmetric/blocks.hpp"
#include "wordmetric/core.hpp"
#include "wordmetric/digits.hpp"
#include "wordmetric/powersearch.hpp"
#include "wordmetric/wordlen.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace wordmetric {

inline bool decide_equivalence(Base a, Base b) { return multiplicative_dependence(a, b).dependent; }

struct EquivalenceCertificate {
  Base a;
  Base b;
  std::uint64_t m = 0;  // a^m = b^n
  std::uint64_t n = 0;
  std::uint64_t h_a = 0;  // bound on ℓ_B(a^i)
  std::uint64_t h_b = 0;  // bound on ℓ_A(b^j)
  std::uint64_t check_range = 0;

  [[nodiscard]] std::uint64_t k() const noexcept { return std::max(h_a, h_b); }
};

inline constexpr std::uint64_t kDefaultCheckRange = 60;

/// Builds and verifies the certificate. ℓ_B(a^i) <= H_A and ℓ_A(b^j) <= H_B are
/// checked for every i, j <= check_range; a failure throws CertificateViolation.
inline EquivalenceCertificate equivalence_certificate(Base a, Base b,
                                                      std::uint64_t check_range = kDefaultCheckRange,
                                                      LengthCache* cache = nullptr) {
  const DependenceResult dep = multiplicative_dependence(a, b);
  if (!dep.dependent) {
    throw NotEquivalent("d_" + std::to_string(a.value()) + " and d_" + std::to_string(b.value()) +
                        " are not bi-Lipschitz equivalent: no m, n >= 1 with a^m = b^n");
  }
  EquivalenceCertificate cert{a, b, dep.witness->first, dep.witness->second, 0, 0, check_range};
  detail::certify(ipow(a, cert.m) == ipow(b, cert.n), "a^m != b^n");

  std::uint64_t worst_a = 0;
  for (std::uint64_t r = 0; r < cert.m; ++r) worst_a = std::max(worst_a, word_length(ipow(a, r), b, cache));
  std::uint64_t worst_b = 0;
  for (std::uint64_t s = 0; s < cert.n; ++s) worst_b = std::max(worst_b, word_length(ipow(b, s), a, cache));
  cert.h_a = 1 + worst_a;
  cert.h_b = 1 + worst_b;

  for (std::uint64_t i = 0; i <= check_range; ++i) {
    detail::certify(word_length(ipow(a, i), b, cache) <= cert.h_a,
                    "ℓ_B(a^" + std::to_string(i) + ") exceeds H_A");
    detail::certify(word_length(ipow(b, i), a, cache) <= cert.h_b,
                    "ℓ_A(b^" + std::to_string(i) + ") exceeds H_B");
  }
  detail::certify(cert.k() >= 1, "K < 1");
  return cert;
}

struct DistortionRow {
  std::uint64_t j;
  std::uint64_t length;  // ℓ_A(b^j)
  std::size_t blocks;    // M_A(b^j)
};

struct DistortionTable {
  Base a;
  Base b;
  std::vector<DistortionRow> rows;

  /// Running supremum of ℓ_A(b^j) over the emitted rows.
  [[nodiscard]] std::uint64_t sup_so_far() const noexcept {
    std::uint64_t s = 0;
    for (const auto& r : rows) s = std::max(s, r.length);
    return s;
  }
};

inline constexpr std::size_t kDefaultDigitBudget = std::size_t{1} << 24;

/// Rows j = 1..j_max. Rows are computed in disjoint j-ranges when
/// opts.workers > 1 and always emitted in order of j.
inline DistortionTable distortion_table(Base a, Base b, std::uint64_t j_max, const ScanOptions& opts = {},
                                        std::size_t digit_budget = kDefaultDigitBudget) {
  DistortionTable table{a, b, std::vector<DistortionRow>(j_max)};
  if (j_max == 0) return table;

  // b^j_max has about j_max * log_a(b) digits.
  const double est = static_cast<double>(j_max) * std::log(static_cast<double>(b.value())) /
                     std::log(static_cast<double>(a.value()));
  if (est > static_cast<double>(digit_budget)) {
    throw ResourceLimitError("b^" + std::to_string(j_max) + " would need about " +
                             std::to_string(static_cast<std::uint64_t>(est)) + " base-" +
                             std::to_string(a.value()) + " digits, over the budget of " +
                             std::to_string(digit_budget));
  }

  const unsigned workers = std::max(1u, opts.workers);
  const std::uint64_t chunk = opts.chunk != 0 ? opts.chunk : (j_max + workers - 1) / workers;
  const std::uint64_t chunks = (j_max + chunk - 1) / chunk;

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t first = c * chunk + 1;
    const std::uint64_t last = std::min(j_max, first + chunk - 1);
    RadixPower p(a, b, first);
    for (std::uint64_t j = first;; ++j) {
      const auto digits = p.digits();
      const std::uint64_t len = minimal_representation(digits, a).weight();
      const std::size_t m = block_count(digits);
      detail::certify(m <= len, "M_A(b^j) exceeds ℓ_A(b^j)");
      table.rows[j - 1] = DistortionRow{j, len, m};
      if (j == last) break;
      p.advance();
    }
  };

  if (workers == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(workers, chunks); ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }
  return table;
}

/// First sampled pair violating (1/K) d_A <= d_B <= K d_A, if any.
inline std::optional<std::pair<BigInt, BigInt>> find_bilipschitz_violation(
    Base a, Base b, std::uint64_t k, const std::vector<std::pair<BigInt, BigInt>>& samples,
    LengthCache* cache = nullptr) {
  detail::require(k >= 1, "bi-Lipschitz constant K must be at least 1");
  for (const auto& [x, y] : samples) {
    const BigInt diff = x - y;
    const std::uint64_t da = word_length(diff, a, cache);
    const std::uint64_t db = word_length(diff, b, cache);
    if (db > k * da || da > k * db) return std::make_pair(x, y);
  }
  return std::nullopt;
}

inline bool sampled_bilipschitz_check(Base a, Base b, std::uint64_t k,
                                      const std::vector<std::pair<BigInt, BigInt>>& samples,
                                      LengthCache* cache = nullptr) {
  return !find_bilipschitz_violation(a, b, k, samples, cache).has_value();
}

}  // namespace wordmetric
