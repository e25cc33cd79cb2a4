// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and ranges are fixed here.

#include "wordmetric/cli.hpp"
#include "wordmetric/wordmetric.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace wordmetric;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::function<std::string()> body;  // empty string = pass, otherwise the failure detail
};

std::string fail(const std::string& what) { return what.empty() ? "failed" : what; }

// 1. Solver vs exhaustive search.
std::string oracle_equivalence() {
  std::size_t checked = 0;
  for (std::uint32_t av : {2u, 3u, 4u, 5u, 10u}) {
    const Base a(av);
    for (int n = -5000; n <= 5000; ++n) {
      const auto dp = minimal_length(n, a).length;
      const auto bfs = oracle_length(n, a, 1);
      if (dp != bfs) {
        return fail("mismatch a=" + std::to_string(av) + " n=" + std::to_string(n) + ": solver " +
                    std::to_string(dp) + ", oracle " + std::to_string(bfs));
      }
      ++checked;
    }
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> pick(1, 1'000'000'000);
  for (std::uint32_t av : {2u, 3u}) {
    for (int i = 0; i < 1000; ++i) {
      const BigInt n = pick(rng);
      const auto dp = minimal_length(n, Base(av)).length;
      const auto bfs = oracle_length(n, Base(av), 1, 10'000'000);
      if (dp != bfs) {
        return fail("mismatch a=" + std::to_string(av) + " n=" + to_decimal(n) + ": solver " +
                    std::to_string(dp) + ", oracle " + std::to_string(bfs));
      }
      ++checked;
    }
  }
  std::cout << "      " << checked << " values, zero mismatches\n";
  return {};
}

// 2. Metric axioms and subadditivity on random pairs and triples.
std::string metric_axioms() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> pick(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (std::uint32_t av : {2u, 3u, 4u, 5u, 10u}) {
    const Base a(av);
    for (int i = 0; i < 10'000; ++i) {
      const BigInt x = pick(rng);
      const BigInt y = pick(rng);
      const BigInt z = pick(rng);
      const auto dxy = distance(x, y, a);
      const auto dyx = distance(y, x, a);
      const auto dyz = distance(y, z, a);
      const auto dxz = distance(x, z, a);
      const auto tag = " a=" + std::to_string(av) + " x=" + to_decimal(x) + " y=" + to_decimal(y);
      if (distance(x, x, a) != 0) return fail("d(x,x) != 0" + tag);
      if ((dxy == 0) != (x == y)) return fail("identity of indiscernibles" + tag);
      if (dxy != dyx) return fail("symmetry" + tag);
      if (dxz > dxy + dyz) return fail("triangle inequality" + tag);
      if (minimal_length(x, a).length != minimal_length(-x, a).length) return fail("l(x) != l(-x)" + tag);
      if (minimal_length(x + y, a).length > minimal_length(x, a).length + minimal_length(y, a).length) {
        return fail("subadditivity" + tag);
      }
    }
  }
  return {};
}

// 3. M_A(n) <= l_A(n) and random block certificates.
std::string lower_bound() {
  for (std::uint32_t av : {2u, 3u, 10u}) {
    const Base a(av);
    for (int n = 1; n <= 100'000; ++n) {
      const LengthResult r = minimal_length(n, a);
      const std::size_t m = block_count(n, a);
      if (m > r.length) return fail("M > l at a=" + std::to_string(av) + " n=" + std::to_string(n));
    }
  }
  std::mt19937 rng(4242);
  for (int i = 0; i < 10'000; ++i) {
    const Base a(2 + rng() % 15);
    std::set<std::size_t> exps;
    const std::size_t k = 1 + rng() % 10;
    while (exps.size() < k) exps.insert(rng() % 48);
    std::vector<SignedTerm> terms;
    for (auto e : exps) terms.push_back({e, rng() % 2 ? 1 : -1, 1 + static_cast<Digit>(rng() % (a.value() - 1))});
    terms.back().sign = 1;
    try {
      const BlockCertificate c = block_certificate(terms, a);
      verify_certificate(c);
      if (c.blocks > c.k) return fail("certificate with M > k");
    } catch (const CertificateViolation& e) {
      return fail(std::string("certificate violation: ") + e.what());
    }
  }
  return {};
}

// 4. Dominant-term normalisation closed form.
std::string closed_form() {
  std::mt19937 rng(99);
  for (int i = 0; i < 10'000; ++i) {
    const Base a(2 + rng() % 15);
    std::set<std::size_t, std::greater<>> picked;
    const std::size_t want = 2 + rng() % 8;
    while (picked.size() < want) picked.insert(rng() % 64);
    const std::vector<std::size_t> exps(picked.begin(), picked.end());
    std::vector<Digit> digits;
    for (std::size_t j = 0; j < exps.size(); ++j) digits.push_back(1 + rng() % (a.value() - 1));
    try {
      const AdicExpansion e = normalize_dominant(exps, digits, a);
      BigInt exact = BigInt(digits[0]) * ipow(a, exps[0]);
      for (std::size_t j = 1; j < exps.size(); ++j) exact -= BigInt(digits[j]) * ipow(a, exps[j]);
      if (e != expand(exact, a)) return fail("expansion differs from the exact value");
      if (block_count(e.digits) > exps.size() - 1) return fail("M > r");
    } catch (const CertificateViolation& e) {
      return fail(std::string("closed form violated: ") + e.what());
    }
  }
  return {};
}

// 5. Equivalence certificates and sampled bi-Lipschitz check.
std::string sufficiency_certificate() {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<std::int64_t> pick(-200'000, 200'000);
  for (auto [av, bv] : {std::pair{2u, 4u}, {2u, 8u}, {4u, 8u}, {9u, 27u}}) {
    const Base a(av);
    const Base b(bv);
    EquivalenceCertificate c{a, b};
    try {
      c = equivalence_certificate(a, b, 60);
    } catch (const CertificateViolation& e) {
      return fail(std::string("certificate check failed: ") + e.what());
    }
    const std::string tag = "(" + std::to_string(av) + "," + std::to_string(bv) + ")";
    if ((bv == 8) && c.h_a != 5) return fail("H_A = " + std::to_string(c.h_a) + " for " + tag + ", expected 5");
    std::vector<std::pair<BigInt, BigInt>> samples;
    for (int i = 0; i < 1000; ++i) samples.emplace_back(pick(rng), pick(rng));
    for (const auto& [x, y] : samples) {
      if (minimal_length(x - y, a).length != oracle_length(x - y, a) ||
          minimal_length(x - y, b).length != oracle_length(x - y, b)) {
        return fail("solver/oracle disagreement on a sample for " + tag);
      }
    }
    if (!sampled_bilipschitz_check(a, b, c.k(), samples)) return fail("sampled check failed for " + tag);
    std::cout << "      " << tag << ": m=" << c.m << " n=" << c.n << " H_A=" << c.h_a << " H_B=" << c.h_b
              << " K=" << c.k() << '\n';
  }
  return {};
}

// 6. Unbounded block growth for (2, 3).
std::string block_growth() {
  const std::vector<std::uint64_t> least{1, 2, 4, 6, 10, 10, 15, 15};
  for (std::size_t ell = 1; ell <= 8; ++ell) {
    const GrowthHit h = block_growth_search(Base(2), Base(3), ell, 200);
    if (h.n > 200 || h.blocks < ell) return fail("no n <= 200 for ell=" + std::to_string(ell));
    if (h.n != least[ell - 1]) return fail("least n for ell=" + std::to_string(ell) + " is " + std::to_string(h.n));
  }
  const DistortionTable t = distortion_table(Base(2), Base(3), 200);
  if (t.sup_so_far() < 8) return fail("sup l_2(3^j) over j <= 200 is " + std::to_string(t.sup_so_far()));
  std::cout << "      least n for ell=1..8: 1 2 4 6 10 10 15 15; sup l_2(3^j), j<=200: " << t.sup_so_far() << '\n';
  return {};
}

// 7. Leading-digit searches.
std::string leading_search() {
  const auto seven = find_leading_exponents(Base(10), Base(2), make_leading_string(Base(10), {7}), 1, 10'000);
  if (seven != std::vector<std::uint64_t>{46}) return fail("leading 7 search");
  const auto ones = find_leading_exponents(Base(10), Base(2), make_leading_string(Base(10), {1}), 3, 10'000);
  if (ones != std::vector<std::uint64_t>{4, 7, 10}) return fail("leading 1 search");
  return {};
}

// 8. Aligned-hit density against log((t+1)/t) / (k log a).
std::string density() {
  for (Digit t : {7u, 1u}) {
    const DensityReport r = find_aligned_exponents(Base(10), Base(2), make_leading_string(Base(10), {t}), 10'000);
    const double expected = std::log(static_cast<double>(t + 1) / t) / std::log(10.0);
    const double gap = std::abs(r.empirical_density() - expected);
    std::cout << "      t=" << t << ": empirical " << r.empirical_density() << ", theoretical " << expected
              << ", |diff| " << gap << '\n';
    if (std::abs(r.theoretical_density() - expected) > 1e-12) return fail("theoretical density formula");
    if (gap > 0.01) return fail("density gap " + std::to_string(gap) + " for t=" + std::to_string(t));
  }
  return {};
}

// 9. Decision table.
std::string decision_table() {
  for (auto [a, b] : {std::pair{2u, 4u}, {2u, 8u}, {4u, 8u}, {9u, 27u}}) {
    if (!decide_equivalence(Base(a), Base(b)) || !decide_equivalence(Base(b), Base(a))) {
      return fail("expected equivalent: " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  for (std::uint32_t a = 2; a <= 1000; ++a) {
    if (!decide_equivalence(Base(a), Base(a))) return fail("(a,a) not equivalent for a=" + std::to_string(a));
  }
  for (auto [a, b] : {std::pair{2u, 3u}, {6u, 10u}, {10u, 12u}, {2u, 6u}}) {
    if (decide_equivalence(Base(a), Base(b)) || decide_equivalence(Base(b), Base(a))) {
      return fail("expected not equivalent: " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  return {};
}

// 10. CLI determinism across cache state and scan partitioning.
std::string cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "wordmetric_acceptance_cache";
  std::filesystem::remove_all(dir);
  const std::vector<std::vector<std::string>> commands{
      {"expand", "--base", "3", "123456789"},
      {"blocks", "--base", "2", "123456789"},
      {"length", "--base", "2", "123456789", "--witness"},
      {"length", "--base", "3", "-98765"},
      {"length", "--base", "3", "4321", "--oracle"},
      {"distance", "--base", "10", "12345", "-678"},
      {"lemma21", "--base", "10", "--exponents", "3,1", "--digits", "5,3"},
      {"perturb", "--base", "2", "18", "--add", "2:1,3:1"},
      {"certify-blocks", "--base", "2", "--terms", "5:+1,3:-1,0:-1"},
      {"dependence", "4", "8"},
      {"search-leading", "10", "2", "--target", "12", "--count", "20", "--limit", "5000"},
      {"density", "10", "2", "--target", "7", "--limit", "3000"},
      {"grow-blocks", "2", "3", "--ell", "8", "--limit", "200"},
      {"equivalent", "9", "27"},
      {"certify-equivalence", "9", "27"},
      {"distortion", "2", "3", "--jmax", "60"},
      {"check-bilipschitz", "2", "8", "--k", "5", "--random", "300", "--max", "100000"},
  };
  for (const auto& cmd : commands) {
    for (const std::string format : {"table", "csv", "json"}) {
      auto variant = [&](std::vector<std::string> global) {
        std::vector<std::string> args{"wordmetric"};
        args.insert(args.end(), global.begin(), global.end());
        args.insert(args.end(), cmd.begin(), cmd.end());
        args.push_back("--format");
        args.push_back(format);
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
      };
      const auto reference = variant({"--no-cache"});
      const auto again = variant({"--no-cache"});
      const auto cold = variant({"--cache-dir", dir.string(), "--workers", "4", "--chunk", "7"});
      const auto warm = variant({"--cache-dir", dir.string(), "--workers", "3"});
      const auto par = variant({"--no-cache", "--workers", "8", "--chunk", "1"});
      if (reference.first != 0) return fail("'" + cmd.front() + "' exited with " + std::to_string(reference.first));
      for (const auto& other : {again, cold, warm, par}) {
        if (other != reference) return fail("'" + cmd.front() + "' output differs in " + format + " format");
      }
    }
  }
  std::filesystem::remove_all(dir);
  std::cout << "      " << commands.size() << " invocations x 3 formats x 5 settings identical\n";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "solver agrees with exhaustive search", oracle_equivalence},
      {"AC2", "metric axioms and subadditivity", metric_axioms},
      {"AC3", "M_A <= l_A and block certificates", lower_bound},
      {"AC4", "dominant-term closed form", closed_form},
      {"AC5", "equivalence certificates and sampled bi-Lipschitz check", sufficiency_certificate},
      {"AC6", "block growth of powers of 3 in base 2", block_growth},
      {"AC7", "leading-digit searches", leading_search},
      {"AC8", "leading-digit density", density},
      {"AC9", "equivalence decision table", decision_table},
      {"AC10", "CLI determinism", cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (detail.empty() ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << std::fixed
         << std::setprecision(1) << secs << "s)";
    if (!detail.empty()) {
      line << ": " << detail;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
