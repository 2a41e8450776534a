#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/montecarlo.hpp"
#include "rainbow/report.hpp"
#include "rainbow/search.hpp"
#include "rainbow/trees.hpp"

namespace rainbow::cli {

namespace {

using nlohmann::json;

// "paper", "full" or "full:<budget>".
OracleMode parse_mode(const std::string& text) {
  if (text == "paper") return OracleMode::paper();
  if (text == "full") return OracleMode::full();
  if (text.rfind("full:", 0) == 0) {
    try {
      return OracleMode::full(std::stoi(text.substr(5)));
    } catch (const std::invalid_argument&) {
    }
  }
  throw DomainError("unknown oracle mode '" + text + "' (expected paper, full or full:<budget>)");
}

// Adds "star" (certificate only) to the oracle modes.
std::optional<OracleMode> parse_trial_mode(const std::string& text) {
  if (text == "star") return std::nullopt;
  return parse_mode(text);
}

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ':')) {
    try {
      parts.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw DomainError("bad range '" + text + "' (expected start:stop[:step])");
    }
  }
  if (parts.size() < 2 || parts.size() > 3) throw DomainError("bad range '" + text + "' (expected start:stop[:step])");
  const int step = parts.size() == 3 ? parts[2] : 1;
  if (step < 1) throw DomainError("range step must be positive");
  if (parts[0] > parts[1]) throw DomainError("range '" + text + "' must be ascending");
  std::vector<int> values;
  for (int v = parts[0]; v <= parts[1]; v += step) values.push_back(v);
  return values;
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> members;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      members.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw DomainError("bad vertex set '" + text + "'");
    }
  }
  return VertexSet(std::move(members));
}

struct Context {
  std::ostream& out;  // primary output (digested)
  std::ostream& err;
  int workers = 1;
};

// ---------------------------------------------------------------------------

int cmd_bounds(Context& ctx, int k, int ell, const std::string& eps) {
  std::optional<Rational> e;
  if (!eps.empty()) e = parse_rational(eps);
  const BoundReport report = combined_N(k, ell, e);
  write_bounds_table(report, ctx.err);
  ctx.out << to_json(report).dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(Context& ctx, const std::string& file, int k, int ell, const std::string& mode_text,
               bool per_set, const std::string& witness_path) {
  const auto coloring = load_coloring(file);
  VerifyOptions options;
  options.mode = parse_mode(mode_text);
  options.workers = ctx.workers;
  options.per_set_counts = per_set;
  const auto result = verify_coloring(coloring, k, ell, options);
  ctx.out << to_json(result, coloring, k, ell, options.mode->name()).dump(2) << '\n';
  if (!witness_path.empty() && result.pass) {
    std::ofstream w(witness_path);
    write_witness_dump(coloring, k, ell, *options.mode, w);
  }
  ctx.err << (result.pass ? "PASS" : "FAIL") << '\n';
  return result.pass ? kSuccess : kFail;
}

int cmd_search(Context& ctx, SearchConfig config, const std::string& mode_text, const std::string& out_path,
               const std::string& witness_path) {
  config.mode = parse_mode(mode_text);
  config.workers = ctx.workers;
  const auto result = search_coloring(config);
  json report = {{"schema", std::string("search-report/") + kSchemaVersion},
                 {"n", config.n},
                 {"k", config.k},
                 {"ell", config.ell},
                 {"t", config.t},
                 {"strategy", to_string(config.strategy)},
                 {"mode", config.mode.name()},
                 {"seed", config.seed},
                 {"budget", config.budget},
                 {"evaluated", result.evaluated},
                 {"found", result.coloring.has_value()},
                 {"no_coloring_exists", result.proven_none}};
  if (result.coloring) {
    report["coloring"] = to_text(*result.coloring);
    if (!out_path.empty()) save_coloring(*result.coloring, out_path);
    if (!witness_path.empty()) {
      std::ofstream w(witness_path);
      write_witness_dump(*result.coloring, config.k, config.ell, config.mode, w);
    }
  }
  ctx.out << report.dump(2) << '\n';
  if (result.coloring) return kSuccess;
  ctx.err << (result.proven_none ? "none found: exhaustive scan shows no coloring exists\n"
                                 : "none found within budget\n");
  return kExhausted;
}

int cmd_oracle(Context& ctx, const std::string& file, const std::string& set_text, const std::string& mode_text) {
  const auto coloring = load_coloring(file);
  const VertexSet s = parse_set(set_text);
  const OracleMode mode = parse_mode(mode_text);
  const auto result = max_disjoint_rainbow_trees(s, coloring, mode);
  ctx.out << to_json(result, mode.name()).dump(2) << '\n';
  write_witness(result.witness, ctx.err);
  return kSuccess;
}

int cmd_mc(Context& ctx, const std::string& what, TrialConfig config, const std::string& mode_text,
           const std::string& range, double target, const std::string& witness_path) {
  config.workers = ctx.workers;
  if (config.samples < 1) throw DomainError("samples must be at least 1");
  if (what == "bs") {
    ctx.out << to_json(estimate_BS(config)).dump(2) << '\n';
    return kSuccess;
  }
  if (what == "as") {
    config.mode = parse_trial_mode(mode_text);
    const auto summary = estimate_AS_all(config);
    if (summary.witness && !witness_path.empty()) save_coloring(*summary.witness, witness_path);
    ctx.out << to_json(summary).dump(2) << '\n';
    return kSuccess;
  }
  const auto values = parse_range(range);
  const auto result =
      empirical_threshold(config.k, config.ell, config.t, config.samples, target, values, config.seed, config.workers);
  write_sweep_csv(result.table, ctx.out);
  if (result.n)
    ctx.err << "empirical threshold: n=" << *result.n << '\n';
  else
    ctx.err << "empirical threshold: not found in range\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------
// Reproduction targets

bool repro_theta(std::ostream& out) {
  bool ok = true;
  for (const auto& [eps, expected] : {std::pair{"1/2", 712.415}, std::pair{"2/3", 360.699}}) {
    const double theta = static_cast<double>(chernoff_theta(parse_rational(eps), 3));
    const bool pass = std::abs(theta - expected) <= 1e-2;
    ok &= pass;
    out << (pass ? "PASS" : "FAIL") << " theta(eps=" << eps << ", k=3) = " << to_string(Real(theta), 10)
        << " (expected " << expected << " +- 0.01)\n";
  }
  return ok;
}

bool repro_thresholds(std::ostream& out) {
  bool ok = true;
  {
    const Rational eps = parse_rational("1/2");
    const BigInt minimum = ell_min(eps, 3);
    bool match = minimum == 80;
    for (int ell = 80; ell <= 120; ++ell) match &= n_threshold(eps, 3, ell) == 9 * ell - 6;
    ok &= match;
    out << (match ? "PASS" : "FAIL") << " eps=1/2: ell_min=" << minimum << ", n_threshold(ell)=9ell-6 for ell in 80..120\n";
  }
  {
    const Rational eps = parse_rational("2/3");
    const BigInt minimum = ell_min(eps, 3);
    bool match = minimum == 28;
    for (int ell = 28; ell <= 60; ++ell)
      match &= n_threshold(eps, 3, ell) == ceil_rational(Rational(3, 2) * (9 * ell - 7));
    ok &= match;
    out << (match ? "PASS" : "FAIL") << " eps=2/3: ell_min=" << minimum
        << ", n_threshold(ell)=ceil(3/2 (9ell-7)) for ell in 28..60\n";
  }
  return ok;
}

bool repro_lemma34(std::ostream& out, int n, std::uint64_t samples, std::uint64_t seed, int workers) {
  std::uint64_t identity = 0;
  std::uint64_t amgm = 0;
  std::uint64_t averaging = 0;
  int worst_paper = 0;
  int worst_full = 0;
  const Rational bound = averaging_bound(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto coloring = random_coloring(n, 3, SeededStream{seed, i});
    const auto x = expected_X_upper(coloring);
    identity += x.upper - 3 == x.star_average;
    amgm += x.upper <= bound;
    VerifyOptions options;
    options.per_set_counts = true;
    options.workers = workers;
    options.mode = OracleMode::paper();
    const auto paper = verify_coloring(coloring, 3, 0, options);
    int min_paper = std::numeric_limits<int>::max();
    for (const auto& [s, c] : paper.per_set) min_paper = std::min(min_paper, c);
    averaging += Rational(min_paper) <= bound;
    worst_paper = std::max(worst_paper, min_paper);
    options.mode = OracleMode::full();
    const auto full = verify_coloring(coloring, 3, 0, options);
    int min_full = std::numeric_limits<int>::max();
    for (const auto& [s, c] : full.per_set) min_full = std::min(min_full, c);
    worst_full = std::max(worst_full, min_full);
  }
  const bool ok = identity == samples && amgm == samples && averaging == samples;
  out << (identity == samples ? "PASS" : "FAIL") << " double counting sum_S stars = sum_v d1 d2 d3 on "
      << identity << "/" << samples << " colorings of K_" << n << '\n';
  out << (amgm == samples ? "PASS" : "FAIL") << " 3 + (1/C(n,3)) sum_v d1 d2 d3 <= " << to_string(bound) << " on "
      << amgm << "/" << samples << '\n';
  out << (averaging == samples ? "PASS" : "FAIL") << " min_S paper-mode count <= " << to_string(bound) << " ~ "
      << to_string(to_real(bound), 6) << " on " << averaging << "/" << samples << " (largest min " << worst_paper
      << "; full-mode largest min " << worst_full << ")\n";
  return ok;
}

bool repro_k6(std::ostream& out, std::uint64_t seed, int workers) {
  bool ok = true;
  for (int ell : {1, 2}) {
    SearchConfig config;
    config.n = 6;
    config.k = 3;
    config.ell = ell;
    config.t = 3;
    config.seed = seed;
    config.workers = workers;
    config.mode = OracleMode::full();
    config.strategy = ell == 1 ? SearchStrategy::Random : SearchStrategy::Local;
    config.budget = ell == 1 ? 10'000 : 2'000'000;
    auto found = search_coloring(config);
    if (!found.coloring) {
      config.strategy = SearchStrategy::Exhaustive;
      config.budget = std::numeric_limits<std::uint64_t>::max();
      found = search_coloring(config);
    }
    bool pass = false;
    if (found.coloring) {
      VerifyOptions options;
      options.mode = OracleMode::full();
      options.workers = workers;
      pass = verify_coloring(*found.coloring, 3, ell, options).pass;
    }
    ok &= pass;
    out << (pass ? "PASS" : "FAIL") << " K_6, k=3, ell=" << ell << ": " << to_string(config.strategy)
        << " search, full-mode verification\n";
    if (found.coloring) {
      std::istringstream text(to_text(*found.coloring));
      for (std::string line; std::getline(text, line);) out << "  " << line << '\n';
    }
  }
  return ok;
}

int cmd_repro(Context& ctx, const std::string& target, int n, std::uint64_t samples, std::uint64_t seed) {
  bool ok = true;
  bool known = false;
  if (target == "theta" || target == "all") known = true, ok &= repro_theta(ctx.out);
  if (target == "thresholds" || target == "all") known = true, ok &= repro_thresholds(ctx.out);
  if (target == "lemma34" || target == "all") known = true, ok &= repro_lemma34(ctx.out, n, samples, seed, ctx.workers);
  if (target == "k6" || target == "all") known = true, ok &= repro_k6(ctx.out, seed, ctx.workers);
  if (!known) throw DomainError("unknown repro target '" + target + "' (theta, thresholds, lemma34, k6, all)");
  return ok ? kSuccess : kFail;
}

// ---------------------------------------------------------------------------

int run_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open manifest " + path);
  const json manifest = json::parse(in);
  const auto args = manifest.at("args").get<std::vector<std::string>>();
  std::ostringstream primary;
  std::ostringstream discard;
  std::vector<std::string> replay_args;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest") {
      ++i;
      continue;
    }
    replay_args.push_back(args[i]);
  }
  replay_args.insert(replay_args.begin(), {"--manifest", "-"});
  const int code = run(replay_args, primary, discard);
  out << primary.str();
  const std::string digest = fnv1a_hex(primary.str());
  if (digest != manifest.at("output_digest").get<std::string>()) {
    err << "replay: output digest " << digest << " differs from manifest " << manifest.at("output_digest") << '\n';
    return kFail;
  }
  err << "replay: output digest matches (" << digest << ")\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow index toolkit for edge-colored complete graphs", "rainbowx"};
  app.require_subcommand(1);
  app.fallthrough();
  int workers = 1;
  std::string manifest_path;
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--manifest", manifest_path, "Write the run manifest here ('-' suppresses it)");

  std::function<int(Context&)> action;
  std::optional<std::uint64_t> seed_used;

  // bounds
  int b_k = 3, b_ell = 1;
  std::string b_eps;
  auto* bounds = app.add_subcommand("bounds", "Thresholds N1, N2, N, theta, ell_min, n_threshold");
  bounds->add_option("-k", b_k, "Terminal set size")->required();
  bounds->add_option("-l,--ell", b_ell, "Number of trees")->required();
  bounds->add_option("--eps", b_eps, "Chernoff slack as an exact rational, e.g. 1/2");
  bounds->callback([&] { action = [&](Context& c) { return cmd_bounds(c, b_k, b_ell, b_eps); }; });

  // verify
  std::string v_file, v_mode = "full", v_witness;
  int v_k = 3, v_ell = 1;
  bool v_per_set = false;
  auto* verify = app.add_subcommand("verify", "Check that every k-set has ell disjoint rainbow trees");
  verify->add_option("file", v_file, "Coloring file")->required();
  verify->add_option("-k", v_k, "Terminal set size")->required();
  verify->add_option("-l,--ell", v_ell, "Required number of trees")->required();
  verify->add_option("--mode", v_mode, "paper | full | full:<budget>");
  verify->add_flag("--per-set", v_per_set, "Report the exact count for every k-set");
  verify->add_option("--witness", v_witness, "Write witness trees for every k-set on PASS");
  verify->callback([&] {
    action = [&](Context& c) { return cmd_verify(c, v_file, v_k, v_ell, v_mode, v_per_set, v_witness); };
  });

  // search
  SearchConfig s_config;
  std::string s_strategy = "random", s_mode = "full", s_out, s_witness;
  auto* search = app.add_subcommand("search", "Search for a coloring that passes verification");
  search->add_option("-n", s_config.n, "Vertices")->required();
  search->add_option("-k", s_config.k, "Terminal set size")->required();
  search->add_option("-l,--ell", s_config.ell, "Required number of trees")->required();
  search->add_option("-t", s_config.t, "Palette size")->required();
  search->add_option("--strategy", s_strategy, "random | exhaustive | local");
  search->add_option("--budget", s_config.budget, "Work budget");
  search->add_option("--seed", s_config.seed, "Master seed");
  search->add_option("--mode", s_mode, "Verification mode");
  search->add_option("-o,--out", s_out, "Write the coloring here");
  search->add_option("--witness", s_witness, "Write witness trees here");
  search->callback([&] {
    seed_used = s_config.seed;
    action = [&](Context& c) {
      s_config.strategy = parse_strategy(s_strategy);
      return cmd_search(c, s_config, s_mode, s_out, s_witness);
    };
  });

  // oracle
  std::string o_file, o_set = "1,2,3", o_mode = "full";
  auto* oracle = app.add_subcommand("oracle", "Exact maximum family of disjoint rainbow S-trees");
  oracle->add_option("file", o_file, "Coloring file")->required();
  oracle->add_option("-S,--set", o_set, "Terminal set, comma separated");
  oracle->add_option("--mode", o_mode, "paper | full | full:<budget>");
  oracle->callback([&] { action = [&](Context& c) { return cmd_oracle(c, o_file, o_set, o_mode); }; });

  // mc
  TrialConfig m_config;
  std::string m_what = "bs", m_mode = "star", m_range, m_witness;
  double m_target = 0.99;
  m_config.samples = 1000;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates (bs | as | sweep)");
  mc->add_option("what", m_what, "bs | as | sweep")->required()->check(CLI::IsMember({"bs", "as", "sweep"}));
  mc->add_option("-n,--n", m_range, "Vertices; for sweep a range start:stop[:step]");
  mc->add_option("-k", m_config.k, "Terminal set size");
  mc->add_option("-l,--ell", m_config.ell, "Number of trees");
  mc->add_option("-t", m_config.t, "Palette size (defaults to k)");
  mc->add_option("--samples", m_config.samples, "Samples per estimate");
  mc->add_option("--seed", m_config.seed, "Master seed");
  mc->add_option("--mode", m_mode, "star | paper | full | full:<budget>");
  mc->add_option("--target", m_target, "Sweep success target");
  mc->add_option("--save-witness", m_witness, "Save the first successful coloring (mc as)");
  bool m_t_given = false;
  mc->callback([&] {
    seed_used = m_config.seed;
    m_t_given = mc->count("-t") > 0;
    action = [&](Context& c) {
      if (!m_t_given) m_config.t = m_config.k;
      if (m_range.empty()) throw DomainError("mc " + m_what + " needs -n");
      if (m_what != "sweep") {
        try {
          std::size_t used = 0;
          m_config.n = std::stoi(m_range, &used);
          if (used != m_range.size()) throw std::invalid_argument(m_range);
        } catch (const std::exception&) {
          throw DomainError("-n must be an integer for mc " + m_what);
        }
      }
      return cmd_mc(c, m_what, m_config, m_mode, m_range, m_target, m_witness);
    };
  });

  // repro
  std::string r_target;
  int r_n = 9;
  std::uint64_t r_samples = 1000, r_seed = 1;
  auto* repro = app.add_subcommand("repro", "Reproduce headline numbers (theta | thresholds | lemma34 | k6 | all)");
  repro->add_option("target", r_target, "Target")->required();
  repro->add_option("-n", r_n, "Vertices for lemma34");
  repro->add_option("--samples", r_samples, "Samples for lemma34");
  repro->add_option("--seed", r_seed, "Master seed");
  repro->callback([&] {
    seed_used = r_seed;
    action = [&](Context& c) { return cmd_repro(c, r_target, r_n, r_samples, r_seed); };
  });

  // replay
  std::string p_manifest;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare the output digest");
  replay->add_option("manifest", p_manifest, "Manifest file")->required();

  std::vector<const char*> argv{"rainbowx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (replay->parsed()) {
    try {
      return run_replay(p_manifest, out, err);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream primary;
  Context ctx{primary, err, workers};
  int code = kUsage;
  try {
    code = action(ctx);
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    code = kUsage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    code = kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  }
  out << primary.str();
  out.flush();

  if (manifest_path != "-") {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json manifest = {{"schema", std::string("run-manifest/") + kSchemaVersion},
                     {"subcommand", app.get_subcommands().front()->get_name()},
                     {"args", args},
                     {"seed", seed_used ? json(*seed_used) : json(nullptr)},
                     {"tool_version", kToolVersion},
                     {"generator", StreamGenerator::kName},
                     {"exit_code", code},
                     {"wall_time_s", wall},
                     {"output_digest", fnv1a_hex(primary.str())}};
    if (manifest_path.empty()) {
      err << "manifest: " << manifest.dump() << '\n';
    } else {
      std::ofstream m(manifest_path);
      m << manifest.dump(2) << '\n';
    }
  }
  return code;
}

}  // namespace rainbow::cli
