#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sdw/caps.hpp"
#include "sdw/subproduct.hpp"

namespace sdw::cli {

using Json = nlohmann::ordered_json;

/// Exit codes: 0 verified/true, 1 refuted/false with witness,
/// 2 inconclusive (a bound was hit), 3 input error.
enum ExitCode { kVerified = 0, kRefuted = 1, kInconclusive = 2, kInputError = 3 };

struct Context {
  bool json = false;
  bool timings = false;
  Caps caps;
};

struct Report {
  std::string command;  ///< echoed command line
  std::string outcome;  ///< verified | refuted | inconclusive | error
  Json data = Json::object();
  Json bounds = Json::object();
  int exit_code = kVerified;
  double elapsed_ms = 0.0;
};

/// Parses and executes one command line (without the program name).
/// Never throws: errors become reports with outcome "error".
Report run_command(const Context& ctx, const std::vector<std::string>& args);

/// Renders a report as text or JSON (timing only with ctx.timings).
std::string format_report(const Context& ctx, const Report& report);

/// Individual nouns; each returns a filled report.
Report cmd_alg(const Context& ctx, const std::vector<std::string>& args);
Report cmd_con(const Context& ctx, const std::vector<std::string>& args);
Report cmd_sdp(const Context& ctx, const std::vector<std::string>& args);
Report cmd_comm(const Context& ctx, const std::vector<std::string>& args);
Report cmd_malcev(const Context& ctx, const std::vector<std::string>& args);
Report cmd_free(const Context& ctx, const std::vector<std::string>& args);
Report cmd_corpus(const Context& ctx, const std::vector<std::string>& args);

/// Small argument helpers shared by the commands.
std::vector<int> parse_int_list(const std::string& text);
std::vector<std::vector<int>> parse_tuple_list(const std::string& text);
std::string usage_text();

/// Subproduct file format:
///   {"factors": [paths...], "generators": [[coords], ...]}  or
///   {"factors": [paths...], "elements": [[coords], ...]}
/// Factor paths are resolved relative to the file's directory.
SubproductAlgebra load_subproduct_file(const std::string& path, const Caps& caps);

}  // namespace sdw::cli
