#include "rainbow/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rainbow {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", static_cast<double>(to_real(r))}}; }

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string csv_number(const std::optional<double>& x) {
  if (!x) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", *x);
  return buf;
}

}  // namespace

json to_json(const BoundReport& r) {
  json j;
  j["schema"] = std::string("bound-report/") + kSchemaVersion;
  j["k"] = r.k;
  j["ell"] = r.ell;
  j["p"] = rational_json(r.p);
  j["f_k"] = rational_json(r.f_k);
  j["N1"] = r.n1.str();
  j["N2_kind"] = to_string(r.n2_kind);
  j["N2"] = r.n2.str();
  j["combined_N"] = r.combined_n.str();
  j["log_interpretation"] = "ln(1-p) in N1 is taken as ln(1/(1-p)); the square makes the sign irrelevant";
  if (r.n2_kind == N2Kind::RamseyUpper)
    j["N2_note"] = "multinomial upper bound on R_{k-1}(k), not the Ramsey number itself";
  j["eps"] = r.eps ? rational_json(*r.eps) : json(nullptr);
  j["theta"] = r.theta ? json(static_cast<double>(*r.theta)) : json(nullptr);
  j["theta_digits"] = r.theta ? json(to_string(*r.theta, 30)) : json(nullptr);
  j["ell_min"] = r.ell_min ? json(r.ell_min->str()) : json(nullptr);
  j["n_threshold"] = r.n_threshold ? json(r.n_threshold->str()) : json(nullptr);
  return j;
}

void write_bounds_table(const BoundReport& r, std::ostream& out) {
  auto row = [&](const std::string& name, const std::string& value) {
    out << "  " << std::left << std::setw(14) << name << value << '\n';
  };
  out << "bounds for k=" << r.k << ", ell=" << r.ell << '\n';
  row("p", to_string(r.p) + " ~ " + to_string(to_real(r.p), 8));
  row("1/(1-p)", to_string(r.f_k) + " ~ " + to_string(to_real(r.f_k), 8));
  row("N1", r.n1.str());
  row("N2", r.n2.str() + " (" + to_string(r.n2_kind) + ")");
  if (r.eps) {
    row("eps", to_string(*r.eps));
    row("theta", to_string(*r.theta, 10));
    row("ell_min", r.ell_min->str());
    row("n_threshold", r.n_threshold->str());
  }
  row("N", r.combined_n.str());
}

json to_json(const VerifyResult& result, const CompleteGraphColoring& coloring, int k, int ell,
             const std::string& mode) {
  json j;
  j["schema"] = std::string("verify-report/") + kSchemaVersion;
  j["n"] = coloring.n();
  j["t"] = coloring.t();
  j["k"] = k;
  j["ell"] = ell;
  j["mode"] = mode;
  j["pass"] = result.pass;
  j["witness_S"] = result.witness ? json(result.witness->members()) : json(nullptr);
  j["witness_count"] = result.witness ? json(result.witness_count) : json(nullptr);
  if (!result.per_set.empty()) {
    json counts = json::array();
    for (const auto& [s, c] : result.per_set) counts.push_back({{"S", s.members()}, {"count", c}});
    j["per_S_counts"] = counts;
  }
  return j;
}

json to_json(const OracleResult& result, const std::string& mode) {
  json trees = json::array();
  for (const auto& tree : result.witness.trees) {
    json edges = json::array();
    for (const auto& [u, v] : tree.edges()) edges.push_back({u, v});
    trees.push_back(edges);
  }
  return {{"schema", std::string("oracle-report/") + kSchemaVersion},
          {"S", result.witness.terminals.members()},
          {"mode", mode},
          {"max", result.value},
          {"candidates", result.candidates},
          {"witness", trees}};
}

json to_json(const TrialSummary& s) {
  json j;
  j["schema"] = std::string("trial-summary/") + kSchemaVersion;
  j["successes"] = s.successes;
  j["samples"] = s.samples;
  j["estimate"] = s.point_estimate;
  j["wilson_lo"] = s.wilson.lo;
  j["wilson_hi"] = s.wilson.hi;
  j["exact_tail"] = optional_number(s.exact_tail);
  j["chernoff"] = optional_number(s.chernoff);
  j["union_bound"] = optional_number(s.union_bound);
  j["witness_sample"] = s.witness_sample ? json(*s.witness_sample) : json(nullptr);
  return j;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "n,samples,successes,estimate,wilson_lo,wilson_hi,exact_tail,chernoff,union_bound\n";
  for (const auto& [n, s] : rows) {
    out << n << ',' << s.samples << ',' << s.successes << ',' << csv_number(s.point_estimate) << ','
        << csv_number(s.wilson.lo) << ',' << csv_number(s.wilson.hi) << ',' << csv_number(s.exact_tail)
        << ',' << csv_number(s.chernoff) << ',' << csv_number(s.union_bound) << '\n';
  }
}

void write_witness(const DisjointFamily& family, std::ostream& out) {
  for (const auto& tree : family.trees) out << format_tree(tree) << '\n';
}

void write_witness_dump(const CompleteGraphColoring& coloring, int k, int ell, const OracleMode& mode,
                        std::ostream& out) {
  std::vector<Vertex> members(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = i + 1;
  do {
    const VertexSet s(members);
    const auto result = max_disjoint_rainbow_trees(s, coloring, mode, ell);
    out << "# S=" << s.to_string() << '\n';
    write_witness(result.witness, out);
  } while (next_subset(members, coloring.n()));
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace rainbow
