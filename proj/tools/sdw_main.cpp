#include <cstdlib>
#include <iostream>

#include "cli_common.hpp"

int main(int argc, char** argv) {
  using namespace sdw::cli;
  Context ctx;
  if (const char* env = std::getenv("SDW_MAX_CARRIER")) ctx.caps.max_carrier = std::atoll(env);

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--json")
      ctx.json = true;
    else if (a == "--timings")
      ctx.timings = true;
    else if (a == "--max-carrier" && i + 1 < argc)
      ctx.caps.max_carrier = std::atoll(argv[++i]);
    else if (a == "--help" || a == "-h") {
      std::cout << usage_text();
      return 0;
    } else
      args.push_back(std::move(a));
  }
  if (args.empty()) {
    std::cout << usage_text();
    return kInputError;
  }
  Report report = run_command(ctx, args);
  std::cout << format_report(ctx, report);
  return report.exit_code;
}
