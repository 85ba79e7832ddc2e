#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cli_common.hpp"
#include "sdw/corpus.hpp"
#include "sdw/io.hpp"

using namespace sdw;
using namespace sdw::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("sdw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

Report run(const std::vector<std::string>& args) {
  Context ctx;
  return run_command(ctx, args);
}

}  // namespace

TEST_CASE("exit codes: verified, refuted with witness, inconclusive, input error") {
  TempDir tmp;
  save_algebra(*corpus::cyclic_group(4), tmp.file("z4.json"));
  save_algebra(*corpus::cyclic_group(2), tmp.file("z2.json"));
  save_map({0, 1, 0, 1}, tmp.file("mod2.json"));
  Report fiber = run({"sdp", "fiber", "--left", tmp.file("z4.json"), "--right",
                      tmp.file("z4.json"), "--onto", tmp.file("z2.json"), "--g",
                      tmp.file("mod2.json"), "--h", tmp.file("mod2.json"), "--out",
                      tmp.file("fiber.json")});
  CHECK(fiber.exit_code == 0);
  Report fl = run({"sdp", "fleischer", tmp.file("fiber.json")});
  CHECK(fl.exit_code == 0);
  CHECK(fl.outcome == "verified");

  Report refuted = run({"free", "lattice-leq", "x \\/ (y /\\ z)", "x"});
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.outcome == "refuted");
  CHECK(refuted.data.contains("refutation"));

  std::ofstream(tmp.file("sigma.txt")) << "x y^i x = x y x : i >= 1\nx^2 y^2 = x^2 y\n"
                                       << "y^2 x^2 = y x^2\n";
  Report inconclusive =
      run({"free", "monoid-relate", tmp.file("sigma.txt"), "x", "y", "--max-len", "12"});
  CHECK(inconclusive.exit_code == 2);
  CHECK(inconclusive.outcome == "inconclusive");
  CHECK(inconclusive.data.contains("bound_hit"));

  Report bad = run({"alg", "check", tmp.file("missing.json")});
  CHECK(bad.exit_code == 3);
  CHECK(bad.outcome == "error");
}

TEST_CASE("reports are byte-identical across runs") {
  TempDir tmp;
  save_algebra(*corpus::symmetric3(), tmp.file("s3.json"));
  Context ctx;
  ctx.json = true;
  Report a = run_command(ctx, {"con", "lattice", tmp.file("s3.json")});
  Report b = run_command(ctx, {"con", "lattice", tmp.file("s3.json")});
  CHECK(format_report(ctx, a) == format_report(ctx, b));
  // Timing is excluded from reports unless explicitly requested.
  CHECK(format_report(ctx, a).find("timing") == std::string::npos);
}

TEST_CASE("malformed algebra files yield a diagnostic naming the file") {
  TempDir tmp;
  std::ofstream(tmp.file("broken.json")) << "{\"name\": \"x\",\n  \"size\": }";
  Report r = run({"alg", "check", tmp.file("broken.json")});
  CHECK(r.exit_code == 3);
  std::string msg = r.data["message"].get<std::string>();
  CHECK(msg.find("broken.json") != std::string::npos);
  CHECK(msg.find("2") != std::string::npos);  // the offending line
}

TEST_CASE("corpus: empty passes, wrong expectation fails naming the entry") {
  TempDir tmp;
  fs::create_directories(tmp.path / "corpus");
  Report empty = run({"corpus", (tmp.path / "corpus").string()});
  CHECK(empty.exit_code == 0);
  CHECK(empty.data["entries"] == 0);

  std::ofstream(tmp.file("corpus/ok.json"))
      << R"({"name": "comparison holds", "command": ["free","lattice-leq","x /\\ y","x"],)"
      << R"( "expect": {"exit": 0}})";
  std::ofstream(tmp.file("corpus/bad.json"))
      << R"({"name": "deliberately wrong", "command": ["free","lattice-leq","x","y"],)"
      << R"( "expect": {"exit": 0}})";
  Report mixed = run({"corpus", (tmp.path / "corpus").string(), "--workers", "2"});
  CHECK(mixed.exit_code != 0);
  CHECK(mixed.data["failed"] == 1);
  bool named = false;
  for (const auto& row : mixed.data["matrix"])
    if (row["name"] == "deliberately wrong" && row["result"] == "fail") named = true;
  CHECK(named);
}

TEST_CASE("corpus: {dir} placeholder resolves input paths") {
  TempDir tmp;
  fs::create_directories(tmp.path / "c");
  save_algebra(*corpus::cyclic_group(4), tmp.file("z4.json"));
  std::ofstream(tmp.file("c/entry.json"))
      << R"({"name": "algebra loads", "command": ["alg","check","{dir}/../z4.json"],)"
      << R"( "expect": {"exit": 0, "data": {"size": 4}}})";
  Report r = run({"corpus", (tmp.path / "c").string()});
  CHECK(r.exit_code == 0);
}

TEST_CASE("bound overrides flow through the context") {
  TempDir tmp;
  save_algebra(*corpus::cyclic_group(4), tmp.file("z4.json"));
  save_algebra(*corpus::cyclic_group(8), tmp.file("z8.json"));
  Context ctx;
  ctx.caps.max_carrier = 16;
  Report ok = run_command(ctx, {"alg", "product", tmp.file("z4.json"), tmp.file("z4.json")});
  CHECK(ok.exit_code == 0);
  Report capped =
      run_command(ctx, {"alg", "product", tmp.file("z8.json"), tmp.file("z8.json")});
  CHECK(capped.exit_code == 2);
  CHECK(capped.outcome == "inconclusive");
  CHECK(capped.data["bound_hit"] == "max_carrier");
}

TEST_CASE("eval and closure verbs round-trip the worked examples") {
  TempDir tmp;
  save_algebra(*corpus::cyclic_group(4), tmp.file("z4.json"));
  Report ev = run({"alg", "eval", tmp.file("z4.json"), "--term", "mul(x0, x1)", "--args", "3,2"});
  CHECK(ev.exit_code == 0);
  CHECK(ev.data["value"] == 1);

  Report cl = run({"alg", "closure", tmp.file("z4.json"), "--gens", "2"});
  CHECK(cl.data["size"] == 2);

  Report cg_r = run({"con", "cg", tmp.file("z4.json"), "--pairs", "0,2"});
  CHECK(cg_r.data["congruence"] == Json::parse("[[0,2],[1,3]]"));
}
