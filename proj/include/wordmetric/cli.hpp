#pragma once

// Command-line front end. Data goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 invalid arguments, 2 resource limit (including an
// exhausted search), 3 hypothesis violated (e.g. a dependent pair where an
// independent one is required), 4 internal certificate failure.

#include "wordmetric/wordmetric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wordmetric::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCacheEnvVar = "WORDMETRIC_CACHE_DIR";

/// One machine-readable result line. Big integers are decimal strings.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string version = kVersion;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline void to_json(Json& j, const OutputRecord& r) {
  j = Json{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"version", r.version}};
}

inline void from_json(const Json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  j.at("version").get_to(r.version);
}

enum class Format { table, csv, json };

/// What a subcommand produced: json records plus a flat table used for the
/// csv and table renderings.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Json> results;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  return q + "\"";
}

inline void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      for (const auto& result : report.results) {
        out << Json(OutputRecord{report.command, report.inputs, result}).dump() << '\n';
      }
      break;
    case Format::csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(report.columns[i]);
      }
      out << '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
      }
      break;
    }
    case Format::table: {
      if (report.columns.size() == 1 && report.rows.size() == 1) {
        out << report.rows.front().front() << '\n';
        break;
      }
      std::vector<std::size_t> width(report.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string cell = cells[i];
          if (i + 1 < cells.size()) cell.resize(width[i] + 2, ' ');
          s += cell;
        }
        out << s << '\n';
      };
      line(report.columns);
      for (const auto& row : report.rows) line(row);
      break;
    }
  }
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

inline std::pair<std::string, std::string> split_pair(const std::string& text) {
  const auto colon = text.find(':');
  wordmetric::detail::require(colon != std::string::npos, "expected a pair written x:y, got " + text);
  return {text.substr(0, colon), text.substr(colon + 1)};
}

inline std::uint64_t to_u64(const std::string& text) {
  const BigInt v = parse_integer(text);
  wordmetric::detail::require(v >= 0 && v <= std::numeric_limits<std::uint64_t>::max(),
                              "value out of range: " + text);
  return v.convert_to<std::uint64_t>();
}

inline std::string fmt_double(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline Json set_json(const std::vector<std::size_t>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

}  // namespace detail

struct Environment {
  std::optional<std::string> cache_dir;  // value of WORDMETRIC_CACHE_DIR, if set

  static Environment from_process() {
    Environment env;
    if (const char* v = std::getenv(kCacheEnvVar); v != nullptr && *v != '\0') env.cache_dir = v;
    return env;
  }
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const Environment& env = {}) {
  using detail::to_u64;
  CLI::App app{"Word metrics on the integers for geometric generating sets {a^i}"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = 1;
  std::uint64_t chunk = 0;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache-dir", cache_dir, std::string("Directory for the word-length cache (or $") +
                                               kCacheEnvVar + ")");
  app.add_flag("--no-cache", no_cache, "Disable the word-length cache");
  app.add_option("--workers", workers, "Worker threads for scans")->check(CLI::Range(1u, 256u));
  app.add_option("--chunk", chunk, "Exponents per scan chunk (0 = one chunk per worker)");

  // Shared option storage; each subcommand binds what it needs.
  std::uint64_t base = 0;
  std::uint64_t a_val = 0;
  std::uint64_t b_val = 0;
  std::string n_text;
  std::string x_text;
  std::string y_text;
  bool use_oracle = false;
  bool want_witness = false;
  unsigned slack = 1;
  std::size_t budget = kDefaultOracleBudget;
  std::vector<std::size_t> exponents;
  std::vector<std::uint32_t> digit_list;
  std::string additions_text;
  std::string terms_text;
  std::string target_text;
  std::size_t count = 1;
  std::uint64_t limit = 10'000;
  std::size_t ell = 1;
  std::uint64_t range = kDefaultCheckRange;
  std::uint64_t j_max = 20;
  std::uint64_t k_const = 0;
  std::string pairs_text;
  std::size_t random_pairs = 0;
  std::uint64_t random_max = 1000;
  std::uint64_t seed = 1;

  auto add_base = [&](CLI::App* sub) { sub->add_option("--base", base, "Base a >= 2")->required(); };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("a,--a", a_val, "First base")->required();
    sub->add_option("b,--b", b_val, "Second base")->required();
  };

  auto* expand_cmd = app.add_subcommand("expand", "Base-a digits of n");
  add_base(expand_cmd);
  expand_cmd->add_option("n", n_text, "Nonnegative integer")->required();

  auto* blocks_cmd = app.add_subcommand("blocks", "Maximal a-adic blocks of n");
  add_base(blocks_cmd);
  blocks_cmd->add_option("n", n_text, "Nonnegative integer")->required();

  auto* length_cmd = app.add_subcommand("length", "Word length of n for the generators {a^i}");
  add_base(length_cmd);
  length_cmd->add_option("n", n_text, "Integer")->required();
  length_cmd->add_flag("--oracle", use_oracle, "Use exhaustive search instead of the digit solver");
  length_cmd->add_flag("--witness", want_witness, "Print a minimal signed representation");
  length_cmd->add_option("--slack", slack, "Oracle exponent slack above ord(n)");
  length_cmd->add_option("--budget", budget, "Oracle node budget");

  auto* distance_cmd = app.add_subcommand("distance", "Word-metric distance d_A(x, y)");
  add_base(distance_cmd);
  distance_cmd->add_option("x", x_text, "Integer")->required();
  distance_cmd->add_option("y", y_text, "Integer")->required();

  auto* lemma_cmd = app.add_subcommand("lemma21", "Expand d0 a^j0 - sum d_i a^j_i and check its digit structure");
  add_base(lemma_cmd);
  lemma_cmd->add_option("--exponents", exponents, "Strictly decreasing exponents j0,j1,...")
      ->required()
      ->delimiter(',');
  lemma_cmd->add_option("--digits", digit_list, "Digits d0,d1,... in [1, a-1]")->required()->delimiter(',');

  auto* perturb_cmd = app.add_subcommand("perturb", "Block count before and after adding new powers");
  add_base(perturb_cmd);
  perturb_cmd->add_option("n", n_text, "Nonnegative integer")->required();
  perturb_cmd->add_option("--add", additions_text, "Additions position:digit,...");

  auto* certify_blocks_cmd = app.add_subcommand("certify-blocks", "Certificate that a k-term signed sum has M_A <= k");
  add_base(certify_blocks_cmd);
  certify_blocks_cmd->add_option("--terms", terms_text, "Terms exponent:+digit or exponent:-digit, comma separated")
      ->required();

  auto* dependence_cmd = app.add_subcommand("dependence", "Decide whether a^m = b^n for some m, n >= 1");
  add_pair(dependence_cmd);

  auto* search_cmd = app.add_subcommand("search-leading", "Exponents n with b^n leading with a digit string in base a");
  add_pair(search_cmd);
  search_cmd->add_option("--target", target_text, "Leading digits, most significant first")->required();
  search_cmd->add_option("--count", count, "Number of exponents wanted")->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", limit, "Largest exponent scanned");

  auto* density_cmd = app.add_subcommand("density", "Aligned leading-string hits and their density");
  add_pair(density_cmd);
  density_cmd->add_option("--target", target_text, "Leading digits, most significant first")->required();
  density_cmd->add_option("--limit", limit, "Largest exponent scanned");

  auto* grow_cmd = app.add_subcommand("grow-blocks", "Least n with M_A(b^n) >= ell");
  add_pair(grow_cmd);
  grow_cmd->add_option("--ell", ell, "Block threshold")->required()->check(CLI::PositiveNumber);
  grow_cmd->add_option("--limit", limit, "Largest exponent scanned");

  auto* equivalent_cmd = app.add_subcommand("equivalent", "Are d_A and d_B bi-Lipschitz equivalent?");
  add_pair(equivalent_cmd);

  auto* certify_eq_cmd = app.add_subcommand("certify-equivalence", "Constants H_A, H_B, K for an equivalent pair");
  add_pair(certify_eq_cmd);
  certify_eq_cmd->add_option("--range", range, "Largest exponent verified");

  auto* distortion_cmd = app.add_subcommand("distortion", "Rows (j, ℓ_A(b^j), M_A(b^j)) for j = 1..jmax");
  add_pair(distortion_cmd);
  distortion_cmd->add_option("--jmax", j_max, "Largest exponent");

  auto* check_cmd = app.add_subcommand("check-bilipschitz", "Test (1/K) d_A <= d_B <= K d_A on sample pairs");
  add_pair(check_cmd);
  check_cmd->add_option("--k", k_const, "Constant K >= 1")->required();
  check_cmd->add_option("--pairs", pairs_text, "Pairs x:y,...");
  check_cmd->add_option("--random", random_pairs, "Number of random pairs");
  check_cmd->add_option("--max", random_max, "Random pairs are drawn from [-max, max]");
  check_cmd->add_option("--seed", seed, "Seed for random pairs");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("wordmetric");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::table;
  const ScanOptions scan{workers, chunk};

  try {
    std::unique_ptr<LengthCache> cache_holder;
    if (!no_cache) {
      std::optional<std::string> dir = cache_dir.empty() ? env.cache_dir : std::optional<std::string>(cache_dir);
      if (dir) {
        std::filesystem::create_directories(*dir);
        cache_holder = std::make_unique<LengthCache>(std::filesystem::path(*dir) / "lengths.csv");
      }
    }
    LengthCache* cache = cache_holder.get();

    Report rep;
    auto scalar = [&](const std::string& column, const std::string& value) {
      rep.columns = {column};
      rep.rows = {{value}};
    };

    if (expand_cmd->parsed()) {
      const Base a(base);
      const BigInt n = parse_integer(n_text);
      const AdicExpansion e = expand(n, a);
      rep.command = "expand";
      rep.inputs = {{"base", a.value()}, {"n", to_decimal(n)}};
      Json digits = Json::array();
      for (Digit d : e.digits) digits.push_back(d);
      const std::string ord_text = e.is_zero() ? "" : std::to_string(e.ord());
      rep.results.push_back({{"digits", format_digits_msb(e)},
                             {"digits_le", digits},
                             {"ord", e.is_zero() ? Json(nullptr) : Json(e.ord())}});
      rep.columns = {"digits", "ord"};
      rep.rows = {{format_digits_msb(e), ord_text}};
    } else if (blocks_cmd->parsed()) {
      const Base a(base);
      const BigInt n = parse_integer(n_text);
      const BlockDecomposition d = block_decomposition(n, a);
      rep.command = "blocks";
      rep.inputs = {{"base", a.value()}, {"n", to_decimal(n)}};
      Json blocks = Json::array();
      std::string text;
      for (const auto& blk : d.blocks) {
        blocks.push_back({blk.u, blk.v});
        text += (text.empty() ? "" : " ") + ("[" + std::to_string(blk.u) + "," + std::to_string(blk.v) + ")");
      }
      rep.results.push_back({{"count", d.count()}, {"blocks", blocks}});
      rep.columns = {"count", "blocks"};
      rep.rows = {{std::to_string(d.count()), text}};
    } else if (length_cmd->parsed()) {
      const Base a(base);
      const BigInt n = parse_integer(n_text);
      wordmetric::detail::require(!(use_oracle && want_witness), "--witness is not available with --oracle");
      rep.command = "length";
      rep.inputs = {{"base", a.value()}, {"n", to_decimal(n)}, {"method", use_oracle ? "oracle" : "dp"}};
      if (use_oracle) {
        const auto len = oracle_length(n, a, slack, budget);
        rep.inputs["slack"] = slack;
        rep.results.push_back({{"length", len}});
        scalar("length", std::to_string(len));
      } else if (want_witness) {
        const LengthResult r = minimal_length(n, a);
        if (cache) cache->insert(n, a, r.length);
        Json terms = Json::array();
        for (const auto& [e, c] : r.witness.terms) terms.push_back({e, c});
        rep.results.push_back(
            {{"length", r.length}, {"witness", format_representation(r.witness)}, {"terms", terms}});
        rep.columns = {"length", "witness"};
        rep.rows = {{std::to_string(r.length), format_representation(r.witness)}};
      } else {
        const auto len = word_length(n, a, cache);
        rep.results.push_back({{"length", len}});
        scalar("length", std::to_string(len));
      }
    } else if (distance_cmd->parsed()) {
      const Base a(base);
      const BigInt x = parse_integer(x_text);
      const BigInt y = parse_integer(y_text);
      const auto d = word_length(x - y, a, cache);
      rep.command = "distance";
      rep.inputs = {{"base", a.value()}, {"x", to_decimal(x)}, {"y", to_decimal(y)}};
      rep.results.push_back({{"distance", d}});
      scalar("distance", std::to_string(d));
    } else if (lemma_cmd->parsed()) {
      const Base a(base);
      const AdicExpansion e = normalize_dominant(exponents, digit_list, a);
      rep.command = "lemma21";
      rep.inputs = {{"base", a.value()}, {"exponents", exponents}, {"digits", digit_list}};
      const auto m = block_count(e.digits);
      const std::string n = to_decimal(reconstruct(e));
      rep.results.push_back({{"n", n},
                             {"digits", format_digits_msb(e)},
                             {"blocks", m},
                             {"r", exponents.size() - 1},
                             {"top_digit", e.digit(exponents.front())}});
      rep.columns = {"n", "digits", "blocks", "r"};
      rep.rows = {{n, format_digits_msb(e), std::to_string(m), std::to_string(exponents.size() - 1)}};
    } else if (perturb_cmd->parsed()) {
      const Base a(base);
      const BigInt n = parse_integer(n_text);
      std::vector<PowerAddition> adds;
      Json adds_json = Json::array();
      for (const auto& item : detail::split(additions_text, ',')) {
        const auto [p, d] = detail::split_pair(item);
        adds.push_back(PowerAddition{static_cast<std::size_t>(to_u64(p)), static_cast<Digit>(to_u64(d))});
        adds_json.push_back({adds.back().position, adds.back().digit});
      }
      const PerturbationResult r = perturbation_bound(expand(n, a), adds);
      rep.command = "perturb";
      rep.inputs = {{"base", a.value()}, {"n", to_decimal(n)}, {"additions", adds_json}};
      const std::string after = to_decimal(reconstruct(r.perturbed));
      rep.results.push_back({{"before", r.before}, {"after", r.after}, {"n_after", after}});
      rep.columns = {"before", "after", "n_after"};
      rep.rows = {{std::to_string(r.before), std::to_string(r.after), after}};
    } else if (certify_blocks_cmd->parsed()) {
      const Base a(base);
      std::vector<SignedTerm> terms;
      Json terms_json = Json::array();
      for (const auto& item : detail::split(terms_text, ',')) {
        const auto [t, sd] = detail::split_pair(item);
        wordmetric::detail::require(!sd.empty() && (sd[0] == '+' || sd[0] == '-'),
                                    "term coefficient needs an explicit sign: " + item);
        terms.push_back(SignedTerm{static_cast<std::size_t>(to_u64(t)), sd[0] == '-' ? -1 : 1,
                                   static_cast<Digit>(to_u64(sd.substr(1)))});
        terms_json.push_back(item);
      }
      const BlockCertificate c = block_certificate(terms, a);
      rep.command = "certify-blocks";
      rep.inputs = {{"base", a.value()}, {"terms", terms_json}};
      Json groups = Json::array();
      for (const auto& g : c.groups) {
        groups.push_back({{"u", g.u}, {"V", detail::set_json(g.v)}, {"n_V", to_decimal(g.value)}});
      }
      rep.results.push_back({{"n", to_decimal(c.n)},
                             {"k", c.k},
                             {"blocks", c.blocks},
                             {"U", detail::set_json(c.U)},
                             {"groups", groups},
                             {"W", detail::set_json(c.W)},
                             {"n_prime", to_decimal(c.n_prime)},
                             {"verified", true}});
      rep.columns = {"n", "k", "blocks", "U", "V", "W"};
      rep.rows = {{to_decimal(c.n), std::to_string(c.k), std::to_string(c.blocks), detail::join(c.U),
                   detail::join(c.V), detail::join(c.W)}};
    } else if (dependence_cmd->parsed()) {
      const DependenceResult d = multiplicative_dependence(Base(a_val), Base(b_val));
      rep.command = "dependence";
      rep.inputs = {{"a", a_val}, {"b", b_val}};
      Json r = {{"dependent", d.dependent}};
      std::string m_text, n_text_out, root_text;
      if (d.dependent) {
        const auto [c, p, q] = *d.common_root();
        r["m"] = d.witness->first;
        r["n"] = d.witness->second;
        r["root"] = {{"c", c}, {"p", p}, {"q", q}};
        m_text = std::to_string(d.witness->first);
        n_text_out = std::to_string(d.witness->second);
        root_text = std::to_string(c) + "^" + std::to_string(p) + "," + std::to_string(c) + "^" + std::to_string(q);
      }
      rep.results.push_back(r);
      rep.columns = {"dependent", "m", "n", "root"};
      rep.rows = {{d.dependent ? "true" : "false", m_text, n_text_out, root_text}};
    } else if (search_cmd->parsed()) {
      const Base a(a_val);
      const Base b(b_val);
      const LeadingString target = make_leading_string(a, parse_digits_msb(target_text, a));
      const auto hits = find_leading_exponents(a, b, target, count, limit, scan);
      rep.command = "search-leading";
      rep.inputs = {{"a", a.value()},
                    {"b", b.value()},
                    {"target", format_digits_msb(target.gammas, a)},
                    {"count", count},
                    {"limit", limit}};
      rep.columns = {"n"};
      for (auto n : hits) {
        rep.results.push_back({{"n", n}});
        rep.rows.push_back({std::to_string(n)});
      }
      if (hits.size() < count) {
        err << "note: found " << hits.size() << " of " << count << " exponents up to " << limit << '\n';
      }
    } else if (density_cmd->parsed()) {
      const Base a(a_val);
      const Base b(b_val);
      const LeadingString target = make_leading_string(a, parse_digits_msb(target_text, a));
      const DensityReport d = find_aligned_exponents(a, b, target, limit, scan);
      rep.command = "density";
      rep.inputs = {{"a", a.value()}, {"b", b.value()}, {"target", format_digits_msb(target.gammas, a)}, {"limit", limit}};
      rep.results.push_back({{"k", d.k()},
                             {"t", to_decimal(target.value_t)},
                             {"hits", d.aligned_hits.size()},
                             {"empirical_density", d.empirical_density()},
                             {"theoretical_density", d.theoretical_density()},
                             {"aligned_exponents", d.aligned_hits}});
      rep.columns = {"k", "t", "hits", "empirical", "theoretical"};
      rep.rows = {{std::to_string(d.k()), to_decimal(target.value_t), std::to_string(d.aligned_hits.size()),
                   detail::fmt_double(d.empirical_density()), detail::fmt_double(d.theoretical_density())}};
    } else if (grow_cmd->parsed()) {
      const GrowthHit h = block_growth_search(Base(a_val), Base(b_val), ell, limit, scan);
      rep.command = "grow-blocks";
      rep.inputs = {{"a", a_val}, {"b", b_val}, {"ell", ell}, {"limit", limit}};
      rep.results.push_back({{"n", h.n}, {"blocks", h.blocks}});
      rep.columns = {"n", "blocks"};
      rep.rows = {{std::to_string(h.n), std::to_string(h.blocks)}};
    } else if (equivalent_cmd->parsed()) {
      const bool eq = decide_equivalence(Base(a_val), Base(b_val));
      rep.command = "equivalent";
      rep.inputs = {{"a", a_val}, {"b", b_val}};
      rep.results.push_back({{"equivalent", eq}});
      scalar("equivalent", eq ? "true" : "false");
    } else if (certify_eq_cmd->parsed()) {
      const EquivalenceCertificate c = equivalence_certificate(Base(a_val), Base(b_val), range, cache);
      rep.command = "certify-equivalence";
      rep.inputs = {{"a", a_val}, {"b", b_val}, {"range", range}};
      rep.results.push_back(
          {{"m", c.m}, {"n", c.n}, {"H_A", c.h_a}, {"H_B", c.h_b}, {"K", c.k()}, {"verified_range", c.check_range}});
      rep.columns = {"m", "n", "H_A", "H_B", "K"};
      rep.rows = {{std::to_string(c.m), std::to_string(c.n), std::to_string(c.h_a), std::to_string(c.h_b),
                   std::to_string(c.k())}};
    } else if (distortion_cmd->parsed()) {
      const DistortionTable t = distortion_table(Base(a_val), Base(b_val), j_max, scan);
      rep.command = "distortion";
      rep.inputs = {{"a", a_val}, {"b", b_val}, {"jmax", j_max}};
      rep.columns = {"j", "length", "blocks"};
      std::uint64_t sup = 0;
      for (const auto& row : t.rows) {
        sup = std::max(sup, row.length);
        rep.results.push_back({{"j", row.j}, {"length", row.length}, {"blocks", row.blocks}, {"sup_so_far", sup}});
        rep.rows.push_back({std::to_string(row.j), std::to_string(row.length), std::to_string(row.blocks)});
      }
    } else if (check_cmd->parsed()) {
      std::vector<std::pair<BigInt, BigInt>> samples;
      for (const auto& item : detail::split(pairs_text, ',')) {
        const auto [x, y] = detail::split_pair(item);
        samples.emplace_back(parse_integer(x), parse_integer(y));
      }
      if (random_pairs > 0) {
        std::mt19937_64 rng(seed);
        const auto bound = static_cast<std::int64_t>(std::min<std::uint64_t>(random_max, INT64_MAX / 2));
        std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
        for (std::size_t i = 0; i < random_pairs; ++i) {
          const auto x = dist(rng);
          const auto y = dist(rng);
          samples.emplace_back(x, y);
        }
      }
      const auto violation = find_bilipschitz_violation(Base(a_val), Base(b_val), k_const, samples, cache);
      rep.command = "check-bilipschitz";
      rep.inputs = {{"a", a_val}, {"b", b_val}, {"k", k_const}, {"samples", samples.size()}, {"seed", seed}};
      Json r = {{"ok", !violation.has_value()}, {"checked", samples.size()}};
      std::string v_text;
      if (violation) {
        r["violation"] = {to_decimal(violation->first), to_decimal(violation->second)};
        v_text = to_decimal(violation->first) + ":" + to_decimal(violation->second);
      }
      rep.results.push_back(r);
      rep.columns = {"ok", "checked", "violation"};
      rep.rows = {{violation ? "false" : "true", std::to_string(samples.size()), v_text}};
    }

    detail::render(rep, format, out);
    return 0;
  } catch (const CertificateViolation& e) {
    err << "internal error: certificate check failed: " << e.what() << '\n';
    return 4;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wordmetric::cli
