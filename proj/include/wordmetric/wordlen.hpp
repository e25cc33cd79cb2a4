#pragma once

// Word length with respect to A = {a^i : i >= 0} on the additive integers.
//
// In additive notation a word over A u A^{-1} is a signed sum of powers of a,
// so after grouping repeated generators it is a sparse map exponent ->
// nonzero coefficient whose weight sum |c_i| is the word length.

#include "wordmetric/core.hpp"
#include "wordmetric/digits.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordmetric {

struct SignedRepresentation {
  Base base;
  std::map<std::size_t, std::int64_t> terms;  // exponent -> nonzero coefficient

  [[nodiscard]] std::uint64_t weight() const noexcept {
    std::uint64_t w = 0;
    for (const auto& [e, c] : terms) w += static_cast<std::uint64_t>(c < 0 ? -c : c);
    return w;
  }

  [[nodiscard]] BigInt value() const {
    BigInt v = 0;
    for (const auto& [e, c] : terms) v += BigInt(c) * ipow(base, e);
    return v;
  }

  [[nodiscard]] SignedRepresentation negated() const {
    SignedRepresentation out{base, {}};
    for (const auto& [e, c] : terms) out.terms.emplace(e, -c);
    return out;
  }

  friend bool operator==(const SignedRepresentation&, const SignedRepresentation&) = default;
};

/// "+8-1" style rendering, highest exponent first, using a^e notation.
inline std::string format_representation(const SignedRepresentation& rep) {
  if (rep.terms.empty()) return "0";
  std::string out;
  for (auto it = rep.terms.rbegin(); it != rep.terms.rend(); ++it) {
    const auto [e, c] = *it;
    out += c < 0 ? "-" : (out.empty() ? "" : "+");
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += std::to_string(rep.base.value()) + "^" + std::to_string(e);
  }
  return out;
}

struct LengthResult {
  BigInt n;
  Base base;
  std::uint64_t length = 0;
  SignedRepresentation witness;
};

/// Minimal-weight signed representation of the nonnegative integer whose base-a
/// digits are given (little-endian).
///
/// Scans digits from the bottom with an incoming carry c in {0, 1}. At digit d
/// the position either keeps x = d + c (carry out 0) or borrows from above and
/// emits x - a (carry out 1). Coefficients of magnitude a are never emitted:
/// they are always beaten by shifting one unit to the next position. A final
/// carry lands at position ord + 1.
inline SignedRepresentation minimal_representation(std::span<const Digit> digits, Base a) {
  constexpr std::uint64_t kInf = ~std::uint64_t{0};
  const std::size_t positions = digits.size() + 1;
  const std::int64_t base = a.value();

  // choice[i][carry_out] = carry_in that reached (i + 1, carry_out) cheapest.
  std::vector<std::array<std::int8_t, 2>> choice(positions, {-1, -1});
  std::array<std::uint64_t, 2> cost{0, kInf};

  for (std::size_t i = 0; i < positions; ++i) {
    const std::int64_t d = i < digits.size() ? digits[i] : 0;
    const bool last = i + 1 == positions;
    std::array<std::uint64_t, 2> next{kInf, kInf};
    for (int carry_in = 0; carry_in < 2; ++carry_in) {
      if (cost[carry_in] == kInf) continue;
      const std::int64_t x = d + carry_in;
      for (int carry_out = 0; carry_out < (last ? 1 : 2); ++carry_out) {
        const std::int64_t coef = carry_out == 0 ? x : x - base;
        if (coef >= base || -coef >= base) continue;
        const std::uint64_t c = cost[carry_in] + static_cast<std::uint64_t>(coef < 0 ? -coef : coef);
        if (c < next[carry_out]) {
          next[carry_out] = c;
          choice[i][carry_out] = static_cast<std::int8_t>(carry_in);
        }
      }
    }
    cost = next;
  }

  SignedRepresentation rep{a, {}};
  int carry_out = 0;
  for (std::size_t i = positions; i-- > 0;) {
    const int carry_in = choice[i][carry_out];
    const std::int64_t d = i < digits.size() ? digits[i] : 0;
    const std::int64_t x = d + carry_in;
    const std::int64_t coef = carry_out == 0 ? x : x - base;
    if (coef != 0) rep.terms.emplace(i, coef);
    carry_out = carry_in;
  }
  return rep;
}

inline LengthResult minimal_length(const BigInt& n, Base a) {
  const BigInt magnitude = n < 0 ? BigInt(-n) : n;
  SignedRepresentation rep = minimal_representation(expand(magnitude, a).digits, a);
  if (n < 0) rep = rep.negated();
  const std::uint64_t w = rep.weight();
  return LengthResult{n, a, w, std::move(rep)};
}

inline std::uint64_t distance(const BigInt& x, const BigInt& y, Base a) {
  return minimal_length(x - y, a).length;
}

inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

/// Exact word length by breadth-first search over words in the generators
/// +-a^i, 0 <= i <= ord(|n|) + slack. Independent of minimal_representation.
///
/// Words are explored with their letters sorted by exponent, which loses
/// nothing because the group is abelian. Once every letter below a^i is placed
/// the partial sum must agree with n modulo a^i, so a state is the pair
/// (i, q) with n - partial_sum = q * a^i. Coefficients per exponent are
/// unbounded; partial sums are confined to |s| <= a^(ord + 1 + slack).
///
/// Throws ResourceLimitError once more than node_budget states are settled.
inline std::uint64_t oracle_length(const BigInt& n, Base a, unsigned slack = 1,
                                   std::size_t node_budget = kDefaultOracleBudget) {
  const BigInt target = n < 0 ? BigInt(-n) : n;
  if (target == 0) return 0;

  const std::size_t top = ord(target, a) + slack;
  const BigInt bound = ipow(a, top + 1);
  std::vector<BigInt> powers;
  powers.reserve(top + 1);
  for (std::size_t i = 0; i <= top; ++i) powers.push_back(ipow(a, i));

  using State = std::pair<std::size_t, BigInt>;
  std::map<State, std::uint64_t> dist;
  std::deque<State> queue;
  std::size_t settled = 0;

  auto relax = [&](State s, std::uint64_t d, bool front) {
    auto [it, inserted] = dist.try_emplace(s, d);
    if (!inserted) {
      if (it->second <= d) return;
      it->second = d;
    }
    if (front) {
      queue.push_front(std::move(s));
    } else {
      queue.push_back(std::move(s));
    }
  };

  relax({0, target}, 0, true);
  std::set<State> done;
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (!done.insert(s).second) continue;
    if (++settled > node_budget) {
      throw ResourceLimitError("oracle search exceeded node budget of " + std::to_string(node_budget) +
                               " states");
    }
    const std::uint64_t d = dist[s];
    const auto& [i, q] = s;
    if (q == 0) return d;

    if (i < top && q % a.value() == 0) relax({i + 1, q / a.value()}, d, true);
    for (int step : {-1, 1}) {
      BigInt next_q = q + step;
      // partial sum = target - next_q * a^i
      BigInt partial = target - next_q * powers[i];
      if (abs(partial) > bound) continue;
      relax({i, std::move(next_q)}, d + 1, false);
    }
  }
  throw ResourceLimitError("oracle search space exhausted without reaching the target");
}

/// Carry-normalises a representation until every |c_i| <= a - 1. Each rewrite
/// c = q*a + r with sign(q) = sign(r) = sign(c) keeps the value and never
/// increases the weight.
inline SignedRepresentation carry_normalize(const SignedRepresentation& rep) {
  const std::int64_t base = rep.base.value();
  std::map<std::size_t, std::int64_t> terms = rep.terms;
  for (auto it = terms.begin(); it != terms.end();) {
    const std::int64_t c = it->second;
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag >= base) {
      const std::int64_t sign = c < 0 ? -1 : 1;
      it->second = sign * (mag % base);
      terms[it->first + 1] += sign * (mag / base);
    }
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  return SignedRepresentation{rep.base, std::move(terms)};
}

/// Thread-safe ℓ_A memo, optionally persisted as an append-only text file with
/// one "base,decimal-n,length" record per line. Keys use |n|.
class LengthCache {
 public:
  LengthCache() = default;

  explicit LengthCache(std::filesystem::path file) : file_(std::move(file)) {
    std::ifstream in(*file_);
    std::string line;
    while (std::getline(in, line)) {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos) continue;
      try {
        const auto len = std::stoull(line.substr(c2 + 1));
        entries_.insert_or_assign(line.substr(0, c2), len);
      } catch (const std::exception&) {
        // Truncated tail from an interrupted append; ignore it.
      }
    }
  }

  [[nodiscard]] std::optional<std::uint64_t> find(const BigInt& n, Base a) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key(n, a));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const BigInt& n, Base a, std::uint64_t length) {
    std::lock_guard lock(mutex_);
    auto k = key(n, a);
    auto [it, inserted] = entries_.try_emplace(k, length);
    if (!inserted || !file_) return;
    std::ofstream out(*file_, std::ios::app);
    out << k << ',' << length << '\n';
  }

  [[nodiscard]] std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  static std::string key(const BigInt& n, Base a) {
    return std::to_string(a.value()) + "," + to_decimal(n < 0 ? BigInt(-n) : n);
  }

  std::optional<std::filesystem::path> file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::uint64_t> entries_;
};

/// ℓ_A(n) through an optional cache. A null cache computes directly.
inline std::uint64_t word_length(const BigInt& n, Base a, LengthCache* cache = nullptr) {
  if (cache != nullptr) {
    if (auto hit = cache->find(n, a)) return *hit;
  }
  const std::uint64_t len = minimal_length(n, a).length;
  if (cache != nullptr) cache->insert(n, a, len);
  return len;
}

}  // namespace wordmetric
