#pragma once

// Constructive bounds on the maximal-block count M_A of signed sums of powers.
//
//  * normalize_dominant: d0*a^j0 - sum d_i*a^j_i expands with top digit d0 - 1
//    at j0, lowest nonzero digit at j_r, and at most r blocks.
//  * perturbation_bound: adding k new powers on zero positions moves M_A by at
//    most k.
//  * block_certificate: any k-term signed sum with distinct exponents and
//    digits below a has M_A <= k, witnessed by the U / V_j / W split.

#include "wordmetric/core.hpp"
#include "wordmetric/digits.hpp"
#include "wordmetric/wordlen.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace wordmetric {

inline AdicExpansion normalize_dominant(std::span<const std::size_t> exponents,
                                        std::span<const Digit> digits, Base a) {
  detail::require(exponents.size() == digits.size(), "exponent and digit lists differ in length");
  detail::require(exponents.size() >= 2, "need a dominant term and at least one subtracted term");
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    detail::require(exponents[i] < exponents[i - 1], "exponents must be strictly decreasing");
  }
  for (Digit d : digits) detail::require(d >= 1 && d < a.value(), "digits must lie in [1, a-1]");

  BigInt n = BigInt(digits[0]) * ipow(a, exponents[0]);
  for (std::size_t i = 1; i < exponents.size(); ++i) n -= BigInt(digits[i]) * ipow(a, exponents[i]);
  detail::certify(n > 0, "dominant difference is not positive");

  AdicExpansion e = expand(n, a);
  const std::size_t j0 = exponents.front();
  const std::size_t jr = exponents.back();
  const std::size_t r = exponents.size() - 1;

  detail::certify(e.digits.size() <= j0 + 1, "digit above the dominant exponent");
  detail::certify(e.digit(j0) == digits[0] - 1, "top digit is not d0 - 1");
  for (std::size_t i = 0; i < jr; ++i) detail::certify(e.digit(i) == 0, "nonzero digit below j_r");
  detail::certify(e.digit(jr) != 0, "digit at j_r is zero");
  detail::certify(block_count(e.digits) <= r, "block count exceeds r");
  return e;
}

struct PowerAddition {
  std::size_t position;
  Digit digit;
};

struct PerturbationResult {
  std::size_t before;
  std::size_t after;
  AdicExpansion perturbed;
};

inline PerturbationResult perturbation_bound(const AdicExpansion& n,
                                             std::span<const PowerAddition> additions) {
  std::set<std::size_t> seen;
  AdicExpansion out = n;
  for (const auto& [pos, d] : additions) {
    detail::require(d >= 1 && d < n.base.value(), "added digit must lie in [1, a-1]");
    detail::require(n.digit(pos) == 0, "position " + std::to_string(pos) + " already carries a nonzero digit");
    detail::require(seen.insert(pos).second, "duplicate addition position");
    if (out.digits.size() <= pos) out.digits.resize(pos + 1, 0);
    out.digits[pos] = d;
  }
  const std::size_t before = block_count(n.digits);
  const std::size_t after = block_count(out.digits);
  const std::size_t delta = before > after ? before - after : after - before;
  detail::certify(delta <= additions.size(), "block count moved by more than the number of additions");
  return PerturbationResult{before, after, std::move(out)};
}

struct SignedTerm {
  std::size_t exponent;
  int sign;  // +1 or -1
  Digit digit;

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// One dominant-minus-smaller group: u_j with the negative exponents V_j that
/// sit strictly between u_{j-1} and u_j.
struct DominantGroup {
  std::size_t u;
  std::vector<std::size_t> v;  // ascending; v.front() is v_j = min V_j
  BigInt value;                // n_{V_j} = d_u a^u - sum_{v in V_j} d_v a^v
};

struct BlockCertificate {
  Base base;
  std::vector<SignedTerm> terms;  // ascending by exponent
  BigInt n;
  std::size_t k = 0;
  std::vector<std::size_t> U;
  std::vector<DominantGroup> groups;
  std::vector<std::size_t> V;
  std::vector<std::size_t> W;
  BigInt n_prime;
  std::size_t blocks = 0;  // M_A(n)

  [[nodiscard]] bool trivial() const noexcept { return U.empty(); }
  [[nodiscard]] std::size_t claimed_bound() const noexcept { return k; }
};

namespace detail {

inline BigInt signed_sum(std::span<const SignedTerm> terms, Base a) {
  BigInt n = 0;
  for (const auto& t : terms) n += BigInt(t.sign) * BigInt(t.digit) * ipow(a, t.exponent);
  return n;
}

}  // namespace detail

/// Re-checks every structural claim of a certificate. Throws
/// CertificateViolation on the first failure.
inline void verify_certificate(const BlockCertificate& c) {
  using detail::certify;
  const Base a = c.base;
  certify(c.k == c.terms.size(), "k differs from the number of terms");
  certify(c.n == detail::signed_sum(c.terms, a), "n is not the signed sum of its terms");
  certify(c.n > 0, "certified value must be positive");
  certify(c.terms.back().sign == 1, "top term is negative");
  certify(c.blocks == block_count(c.n, a), "recorded block count is wrong");
  certify(c.blocks <= c.k, "M_A(n) exceeds k");

  std::set<std::size_t> all;
  for (const auto& t : c.terms) all.insert(t.exponent);
  std::set<std::size_t> parts(c.U.begin(), c.U.end());
  for (auto v : c.V) certify(parts.insert(v).second, "U and V overlap");
  for (auto w : c.W) certify(parts.insert(w).second, "W overlaps U or V");
  certify(parts == all, "U, V and W do not partition the exponents");

  if (c.trivial()) {
    certify(c.groups.empty() && c.V.empty(), "trivial certificate with nonempty V");
    for (const auto& t : c.terms) certify(t.sign == 1, "trivial certificate with a negative term");
    return;
  }

  certify(c.groups.size() == c.U.size(), "one group per element of U");
  // u_0 = -1, so a^(u_0 + 1) = 1 and every exponent exceeds u_0.
  std::optional<std::size_t> prev_u;
  BigInt n_prime = 0;
  std::size_t v_total = 0;
  for (std::size_t j = 0; j < c.groups.size(); ++j) {
    const auto& g = c.groups[j];
    certify(g.u == c.U[j], "group order differs from U");
    certify(!g.v.empty(), "empty V_j");
    const std::size_t vj = g.v.front();
    certify(!prev_u || *prev_u < vj, "u_{j-1} < v_j fails");
    certify(vj < g.u, "v_j < u_j fails");
    const BigInt lower = prev_u ? ipow(a, *prev_u + 1) : BigInt(1);
    certify(lower <= ipow(a, vj), "a^(u_{j-1}+1) <= a^(v_j) fails");
    certify(ipow(a, vj) <= g.value, "a^(v_j) <= n_{V_j} fails");
    certify(g.value < ipow(a, g.u + 1), "n_{V_j} < a^(u_j+1) fails");
    certify(block_count(g.value, a) <= g.v.size(), "M_A(n_{V_j}) exceeds |V_j|");
    const AdicExpansion ge = expand(g.value, a);
    for (std::size_t i = 0; i < vj; ++i) certify(ge.digit(i) == 0, "digit below v_j in n_{V_j}");
    n_prime += g.value;
    v_total += g.v.size();
    prev_u = g.u;
  }
  certify(v_total == c.V.size(), "V is not the union of the V_j");
  certify(n_prime == c.n_prime, "n' is not the sum of the n_{V_j}");
  certify(block_count(n_prime, a) <= c.V.size(), "M_A(n') exceeds |V|");

  const AdicExpansion pe = expand(n_prime, a);
  for (auto w : c.W) certify(pe.digit(w) == 0, "W meets the support of n'");
  BigInt rest = 0;
  for (const auto& t : c.terms) {
    if (std::find(c.W.begin(), c.W.end(), t.exponent) != c.W.end()) {
      certify(t.sign == 1, "negative term in W");
      rest += BigInt(t.digit) * ipow(a, t.exponent);
    }
  }
  certify(n_prime + rest == c.n, "n differs from n' plus the W terms");
  certify(c.blocks <= c.V.size() + c.W.size(), "M_A(n) exceeds |V| + |W|");
  certify(c.blocks + c.U.size() <= c.k, "M_A(n) exceeds k - |U|");
}

inline BlockCertificate block_certificate(std::vector<SignedTerm> terms, Base a) {
  detail::require(!terms.empty(), "at least one term is required");
  std::sort(terms.begin(), terms.end(),
            [](const SignedTerm& x, const SignedTerm& y) { return x.exponent < y.exponent; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    detail::require(terms[i].sign == 1 || terms[i].sign == -1, "sign must be +1 or -1");
    detail::require(terms[i].digit >= 1 && terms[i].digit < a.value(), "digits must lie in [1, a-1]");
    if (i > 0) detail::require(terms[i].exponent != terms[i - 1].exponent, "duplicate exponent");
  }

  BlockCertificate c{a, std::move(terms), 0, 0, {}, {}, {}, {}, 0, 0};
  c.n = detail::signed_sum(c.terms, a);
  detail::require(c.n > 0, "signed sum must be positive");
  c.k = c.terms.size();
  c.blocks = block_count(c.n, a);

  const auto& t = c.terms;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i].sign == 1 && t[i - 1].sign == -1) c.U.push_back(t[i].exponent);
  }

  if (c.U.empty()) {
    for (const auto& term : t) c.W.push_back(term.exponent);
    verify_certificate(c);
    return c;
  }

  std::size_t next = 0;  // index into t, walking upward
  for (std::size_t u : c.U) {
    DominantGroup g{u, {}, 0};
    Digit du = 0;
    for (; next < t.size() && t[next].exponent <= u; ++next) {
      if (t[next].exponent == u) {
        du = t[next].digit;
      } else if (t[next].sign == -1) {
        g.v.push_back(t[next].exponent);
        g.value -= BigInt(t[next].digit) * ipow(a, t[next].exponent);
      }
    }
    g.value += BigInt(du) * ipow(a, u);
    c.V.insert(c.V.end(), g.v.begin(), g.v.end());
    c.n_prime += g.value;
    c.groups.push_back(std::move(g));
  }
  std::set<std::size_t> uv(c.U.begin(), c.U.end());
  uv.insert(c.V.begin(), c.V.end());
  for (const auto& term : t) {
    if (!uv.count(term.exponent)) c.W.push_back(term.exponent);
  }

  verify_certificate(c);
  return c;
}

/// Splits a word into distinct-exponent (t, sign, digit) terms after carry
/// normalisation, so the result has at most weight(rep) terms.
inline std::vector<SignedTerm> terms_from_representation(const SignedRepresentation& rep) {
  const SignedRepresentation norm = carry_normalize(rep);
  std::vector<SignedTerm> out;
  for (const auto& [e, c] : norm.terms) {
    out.push_back(SignedTerm{e, c < 0 ? -1 : 1, static_cast<Digit>(c < 0 ? -c : c)});
  }
  return out;
}

}  // namespace wordmetric
