#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qpbl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc));
  std::string out_path;
  bool text_format = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--out" && i + 1 < argc) {
      out_path = argv[++i];
    } else if (a == "--format" && i + 1 < argc) {
      const std::string fmt = argv[++i];
      if (fmt == "text")
        text_format = true;
      else if (fmt != "json") {
        std::cerr << "unknown --format '" << fmt << "' (json|text)\n";
        return 2;
      }
    } else {
      args.push_back(a);
    }
  }

  const qpbl::cli::RunResult result = qpbl::cli::run(args);
  const std::string rendered =
      text_format ? qpbl::cli::render_text(result.report) : result.report.dump(2) + "\n";

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << rendered;
  }
  return result.exit_code;
}
