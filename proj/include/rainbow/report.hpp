#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/bounds.hpp"
#include "rainbow/montecarlo.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {

inline constexpr const char* kSchemaVersion = "1";

// Exact values are strings ("2/9", "572"); *_decimal fields carry approximations.
nlohmann::json to_json(const BoundReport& report);
void write_bounds_table(const BoundReport& report, std::ostream& out);

nlohmann::json to_json(const VerifyResult& result, const CompleteGraphColoring& coloring, int k, int ell,
                       const std::string& mode);

nlohmann::json to_json(const OracleResult& result, const std::string& mode);

nlohmann::json to_json(const TrialSummary& summary);

// Columns: n,samples,successes,estimate,wilson_lo,wilson_hi,exact_tail,chernoff,union_bound.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

// One tree per line as "T: (u,v) (u,v) ...".
void write_witness(const DisjointFamily& family, std::ostream& out);

// Per k-set witness families for a coloring, each preceded by "# S={...}".
void write_witness_dump(const CompleteGraphColoring& coloring, int k, int ell, const OracleMode& mode,
                        std::ostream& out);

// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace rainbow
