#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "rainbow/coloring.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run rx(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rainbow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rainbowx-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("bounds") {
  const auto r = rx({"bounds", "-k", "3", "-l", "1", "--manifest", "-"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["N1"] == "572");
  CHECK(j["N2"] == "6");
  CHECK(j["combined_N"] == "572");
  CHECK(r.err.find("572") != std::string::npos);  // human table

  const auto e = json::parse(rx({"bounds", "-k", "3", "-l", "100", "--eps", "1/2", "--manifest", "-"}).out);
  CHECK(e["n_threshold"] == "894");
  CHECK(e["ell_min"] == "80");

  const auto bad = rx({"bounds", "-k", "2", "-l", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(rx({"bounds", "-k", "3", "-l", "10", "--eps", "1/2"}).code == 2);
  CHECK(rx({"bounds", "-k", "3", "-l", "10", "--eps", "3/2"}).code == 2);
  CHECK(rx({"bounds", "-k", "3"}).code == 2);
  CHECK(rx({"nonsense"}).code == 2);
}

TEST_CASE("verify") {
  const auto mono = write_file("mono6.txt", rainbow::to_text(rainbow::CompleteGraphColoring::monochromatic(6, 3)));
  const auto r = rx({"verify", mono, "-k", "3", "-l", "1", "--manifest", "-"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["pass"] == false);
  CHECK(j["witness_S"] == json::array({1, 2, 3}));
  CHECK(j["witness_count"] == 0);

  CHECK(rx({"verify", mono, "-k", "3", "-l", "0", "--manifest", "-"}).code == 0);

  const auto truncated = write_file("truncated.txt", "6 3\n1 1 1 1 1\n1 1\n");
  CHECK(rx({"verify", truncated, "-k", "3", "-l", "1"}).code == 2);
  const auto palette = write_file("palette.txt", "3 2\n1 4\n1\n");
  const auto p = rx({"verify", palette, "-k", "3", "-l", "1"});
  CHECK(p.code == 2);
  CHECK(p.err.find("line 2") != std::string::npos);
  CHECK(rx({"verify", scratch("missing.txt").string(), "-k", "3", "-l", "1"}).code == 2);
  CHECK(rx({"verify", mono, "-k", "3", "-l", "1", "--mode", "bogus"}).code == 2);
}

TEST_CASE("search then verify round trip") {
  const auto out = scratch("k6_l2.txt").string();
  const auto witness = scratch("k6_l2.trees").string();
  const auto s = rx({"search", "-n", "6", "-k", "3", "-l", "2", "-t", "3", "--strategy", "local", "-o", out, "--witness",
                     witness, "--manifest", "-"});
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["found"] == true);
  const auto v = rx({"verify", out, "-k", "3", "-l", "2", "--mode", "full", "--manifest", "-"});
  CHECK(v.code == 0);
  const auto dump = read_file(witness);
  CHECK(dump.find("# S={1,2,3}") != std::string::npos);
  CHECK(dump.find("T: (") != std::string::npos);

  // Two colors on K_6 cannot work; exhaustive search says so.
  const auto none = rx({"search", "-n", "6", "-k", "3", "-l", "1", "-t", "2", "--strategy", "exhaustive", "--manifest", "-"});
  CHECK(none.code == 3);
  CHECK(json::parse(none.out)["no_coloring_exists"] == true);
  const auto k5 = rx({"search", "-n", "5", "-k", "3", "-l", "1", "-t", "2", "--strategy", "exhaustive", "--manifest", "-"});
  CHECK(k5.code == 0);
  CHECK(rx({"search", "-n", "6", "-k", "3", "-l", "1", "-t", "3", "--strategy", "magic"}).code == 2);
}

TEST_CASE("oracle") {
  const auto k4 = write_file("k4.txt", "4 3\n1 2 1\n3 2\n3\n");
  const auto r = rx({"oracle", k4, "-S", "1,2,3", "--mode", "full:1", "--manifest", "-"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["max"] == 2);
  CHECK(r.err.find("T: (1,2) (1,3)") != std::string::npos);
  CHECK(rx({"oracle", k4, "-S", "1,1,3"}).code == 2);
  CHECK(rx({"oracle", k4, "-S", "1,2,9"}).code == 2);
}

TEST_CASE("mc") {
  const auto bs = rx({"mc", "bs", "-n", "7", "-k", "3", "-l", "1", "--samples", "20000", "--manifest", "-"});
  CHECK(bs.code == 0);
  const auto j = json::parse(bs.out);
  CHECK(std::abs(j["estimate"].get<double>() - 0.36602) < 0.02);
  CHECK(rx({"mc", "bs", "--samples", "0"}).code == 2);
  CHECK(rx({"mc", "bs", "-n", "7", "-k", "3", "-l", "1", "--samples", "0"}).code == 2);
  CHECK(rx({"mc", "bs", "-n", "7", "-k", "3", "-t", "4", "--samples", "10"}).code == 2);

  const auto saved = scratch("as_witness.txt");
  const auto as = rx({"mc", "as", "-n", "6", "-k", "3", "-l", "1", "--samples", "500", "--save-witness", saved.string(),
                      "--manifest", "-"});
  CHECK(as.code == 0);
  REQUIRE(fs::exists(saved));
  CHECK(rx({"verify", saved.string(), "-k", "3", "-l", "1", "--mode", "full", "--manifest", "-"}).code == 0);

  const auto sweep = rx({"mc", "sweep", "-k", "3", "-l", "1", "--n", "10:40:10", "--samples", "50", "--manifest", "-"});
  CHECK(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,samples,successes,estimate,wilson_lo,wilson_hi,exact_tail,chernoff,union_bound");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) rows += !line.empty();
  CHECK(rows == 4);
  CHECK(rx({"mc", "sweep", "-k", "3", "--n", "40:10"}).code == 2);
}

TEST_CASE("repro") {
  const auto theta = rx({"repro", "theta", "--manifest", "-"});
  CHECK(theta.code == 0);
  CHECK(theta.out.find("712.415") != std::string::npos);
  CHECK(theta.out.find("FAIL") == std::string::npos);
  CHECK(rx({"repro", "thresholds", "--manifest", "-"}).code == 0);
  CHECK(rx({"repro", "lemma34", "-n", "8", "--samples", "50", "--manifest", "-"}).code == 0);
  CHECK(rx({"repro", "everything"}).code == 2);
}

TEST_CASE("manifest and replay") {
  const auto manifest = scratch("manifest.json");
  const auto first = rx({"--manifest", manifest.string(), "mc", "as", "-n", "7", "-k", "3", "-l", "1", "--samples", "300",
                         "--seed", "12"});
  REQUIRE(first.code == 0);
  const auto m = json::parse(read_file(manifest));
  CHECK(m["schema"] == "run-manifest/1");
  CHECK(m["subcommand"] == "mc");
  CHECK(m["seed"] == 12);
  CHECK(m["generator"] == "philox4x32-10/v1");
  CHECK(m["exit_code"] == 0);

  const auto again = rx({"replay", manifest.string()});
  CHECK(again.code == 0);
  CHECK(again.out == first.out);
  CHECK(again.err.find("matches") != std::string::npos);

  // Default: one manifest line on the error stream.
  const auto inline_manifest = rx({"bounds", "-k", "3", "-l", "1"});
  CHECK(inline_manifest.err.find("manifest: {") != std::string::npos);

  // Tampered digest is reported.
  auto tampered = m;
  tampered["output_digest"] = "0000000000000000";
  std::ofstream(scratch("tampered.json")) << tampered.dump();
  CHECK(rx({"replay", scratch("tampered.json").string()}).code == 1);
}

TEST_CASE("worker count does not change primary output") {
  const auto k6 = scratch("k6_any.txt").string();
  REQUIRE(rx({"search", "-n", "6", "-k", "3", "-l", "1", "-t", "3", "-o", k6, "--manifest", "-"}).code == 0);
  const auto base = rx({"verify", k6, "-k", "3", "-l", "2", "--per-set", "--manifest", "-"});
  const auto many = rx({"--workers", "4", "verify", k6, "-k", "3", "-l", "2", "--per-set", "--manifest", "-"});
  CHECK(base.out == many.out);
  CHECK(base.code == many.code);
  const auto mc1 = rx({"mc", "bs", "-n", "9", "-k", "3", "-l", "2", "--samples", "2000", "--manifest", "-"});
  const auto mc4 = rx({"--workers", "4", "mc", "bs", "-n", "9", "-k", "3", "-l", "2", "--samples", "2000", "--manifest", "-"});
  CHECK(mc1.out == mc4.out);
}
