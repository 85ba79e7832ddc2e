#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include "cli_common.hpp"
#include "sdw/error.hpp"
#include "sdw/io.hpp"

namespace sdw::cli {

namespace fs = std::filesystem;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

std::vector<std::vector<int>> parse_tuple_list(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      if (!cur.empty()) out.push_back(parse_int_list(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_int_list(cur));
  return out;
}

std::string usage_text() {
  return R"(usage: sdw [--json] [--timings] [--max-carrier N] <command> ...

commands:
  alg     check | product | quotient | closure | eval | hom
  con     lattice | cg | join | meet | permute
  sdp     check | fiber | kernels | fleischer | pairs | project |
          union-classes | lift | thm41 | certify | gens
  comm    compute | class | properties | oracle | sdcom
  malcev  <algebra.json> [--budget N] [--hint TERM]
  free    lattice-leq | xyz-claims | monoid-relate | join-claim |
          ideal-member | intersect-check | vector-monoid
  corpus  <dir> [--workers N]

Exit codes: 0 verified/true, 1 refuted/false (witness in the report),
2 inconclusive (a bound was hit; the report names it), 3 input error.
Run `sdw <command>` without arguments for the command's options.
The SDW_MAX_CARRIER environment variable overrides the product-carrier cap.
)";
}

std::string format_report(const Context& ctx, const Report& report) {
  if (ctx.json) {
    Json j;
    j["command"] = report.command;
    j["outcome"] = report.outcome;
    j["data"] = report.data;
    j["bounds"] = report.bounds;
    if (ctx.timings) j["timing_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
  }
  std::string out = "command:  " + report.command + "\noutcome:  " + report.outcome + "\n";
  for (auto it = report.data.begin(); it != report.data.end(); ++it)
    out += "  " + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>()
                                                            : it.value().dump()) +
           "\n";
  if (!report.bounds.empty()) out += "bounds:   " + report.bounds.dump() + "\n";
  if (ctx.timings) out += "time_ms:  " + std::to_string(report.elapsed_ms) + "\n";
  return out;
}

Report run_command(const Context& ctx, const std::vector<std::string>& args) {
  Report report;
  for (const std::string& a : args) {
    if (!report.command.empty()) report.command += " ";
    report.command += a;
  }
  auto start = std::chrono::steady_clock::now();
  try {
    if (args.empty()) {
      report.outcome = "error";
      report.data["message"] = usage_text();
      report.exit_code = kInputError;
    } else {
      std::vector<std::string> rest(args.begin() + 1, args.end());
      const std::string& noun = args[0];
      if (noun == "alg")
        report = cmd_alg(ctx, rest);
      else if (noun == "con")
        report = cmd_con(ctx, rest);
      else if (noun == "sdp")
        report = cmd_sdp(ctx, rest);
      else if (noun == "comm")
        report = cmd_comm(ctx, rest);
      else if (noun == "malcev")
        report = cmd_malcev(ctx, rest);
      else if (noun == "free")
        report = cmd_free(ctx, rest);
      else if (noun == "corpus")
        report = cmd_corpus(ctx, rest);
      else {
        report.outcome = "error";
        report.data["message"] = "unknown command '" + noun + "'\n" + usage_text();
        report.exit_code = kInputError;
      }
      if (report.command.empty())
        for (const std::string& a : args) {
          if (!report.command.empty()) report.command += " ";
          report.command += a;
        }
    }
  } catch (const BoundError& e) {
    report.outcome = "inconclusive";
    report.data["message"] = e.what();
    report.data["bound_hit"] = e.bound();
    report.exit_code = kInconclusive;
  } catch (const InputError& e) {
    report.outcome = "error";
    report.data["message"] = e.what();
    report.exit_code = kInputError;
  } catch (const Error& e) {
    report.outcome = "error";
    report.data["message"] = e.what();
    report.exit_code = kInputError;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  // Reset the echo: nested dispatch may have overwritten it.
  std::string echo;
  for (const std::string& a : args) {
    if (!echo.empty()) echo += " ";
    echo += a;
  }
  report.command = echo;
  return report;
}

namespace {

std::string replace_dir(const std::string& arg, const std::string& dir) {
  const std::string key = "{dir}";
  std::string out = arg;
  size_t pos;
  while ((pos = out.find(key)) != std::string::npos) out.replace(pos, key.size(), dir);
  return out;
}

/// Subset match: every key in `expect` must appear in `actual` with an
/// equal value (recursively for objects).
bool subset_match(const Json& expect, const Json& actual) {
  if (expect.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expect.begin(); it != expect.end(); ++it) {
      if (!actual.contains(it.key())) return false;
      if (!subset_match(it.value(), actual.at(it.key()))) return false;
    }
    return true;
  }
  return expect == actual;
}

}  // namespace

Report cmd_corpus(const Context& ctx, const std::vector<std::string>& args) {
  Report report;
  report.outcome = "verified";
  if (args.empty()) throw InputError("corpus: usage: corpus <dir> [--workers N]");
  std::string dir = args[0];
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  for (size_t i = 1; i + 1 < args.size() + 1; ++i) {
    if (args[i] == "--workers" && i + 1 < args.size()) workers = std::stoi(args[i + 1]);
  }
  if (workers < 1) workers = 1;

  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw InputError("corpus: '" + dir + "' is not a directory");
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  struct Entry {
    std::string name;
    std::vector<std::string> command;
    Json expect;
    bool ok = false;
    std::string detail;
  };
  std::vector<Entry> entries;
  for (const fs::path& f : files) {
    Json spec = Json::parse(read_text_file(f.string()));
    Entry e;
    e.name = spec.contains("name") ? spec["name"].get<std::string>() : f.filename().string();
    if (!spec.contains("command") || !spec["command"].is_array())
      throw InputError(f.string() + ": missing command array");
    for (const auto& a : spec["command"])
      e.command.push_back(replace_dir(a.get<std::string>(), dir));
    e.expect = spec.contains("expect") ? spec["expect"] : Json::object();
    entries.push_back(std::move(e));
  }

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= entries.size()) break;
      Entry& e = entries[i];
      Context sub = ctx;
      Report r = run_command(sub, e.command);
      bool ok = true;
      std::string detail;
      if (e.expect.contains("exit") && r.exit_code != e.expect["exit"].get<int>()) {
        ok = false;
        detail = "exit " + std::to_string(r.exit_code) + " != expected " +
                 e.expect["exit"].dump();
      }
      if (ok && e.expect.contains("data") && !subset_match(e.expect["data"], r.data)) {
        ok = false;
        detail = "report mismatch: got " + r.data.dump();
      }
      if (!ok && detail.empty()) detail = "mismatch";
      if (r.exit_code == kInputError && !(e.expect.contains("exit") &&
                                          e.expect["exit"].get<int>() == kInputError)) {
        ok = false;
        detail = r.data.contains("message") ? r.data["message"].get<std::string>() : "error";
      }
      e.ok = ok;
      e.detail = ok ? "" : detail;
    }
  };
  std::vector<std::thread> pool;
  int nworkers = std::min<int>(workers, static_cast<int>(entries.size()));
  for (int w = 0; w < std::max(1, nworkers); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Json matrix = Json::array();
  int failed = 0;
  for (const Entry& e : entries) {
    Json row;
    row["name"] = e.name;
    row["result"] = e.ok ? "pass" : "fail";
    if (!e.ok) {
      row["detail"] = e.detail;
      ++failed;
    }
    matrix.push_back(row);
  }
  report.data["entries"] = static_cast<int>(entries.size());
  report.data["failed"] = failed;
  report.data["matrix"] = matrix;
  report.bounds["workers"] = nworkers;
  if (failed > 0) {
    report.outcome = "refuted";
    report.exit_code = kRefuted;
  } else if (entries.empty()) {
    report.data["note"] = "empty corpus";
  }
  return report;
}

}  // namespace sdw::cli

