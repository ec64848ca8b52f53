#include "shlie3/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace shlie3::cli;
  CLI::App app{"Check, convert and explore 3-term L-infinity algebras and Lie 3-algebras"};
  std::string command, file, out_path;
  Flags flags;
  int n = 0;
  app.add_option("command", command, "check | convert | coherence | nerve | ez-demo | obstruction-demo | report")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("file", file, "spec file (JSON)")->required();
  auto* n_opt = app.add_option("--n", n, "check a single L-infinity condition");
  app.add_option("--format", flags.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trunc", flags.trunc, "simplicial truncation level")->check(CLI::Range(1, 8));
  app.add_option("--out", out_path, "write the emitted spec (convert, nerve) or the report here");
  app.add_option("--to", flags.to, "conversion target")->check(CLI::IsMember({"lie3", "linfinity"}));
  app.add_option("--max-violations", flags.max_violations, "violations listed per check");
  app.add_flag("--timing", flags.timing, "report wall-clock time per check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*n_opt) flags.n = n;

  RunReport report;
  try {
    const AlgebraSpecFile spec = parse_spec(read_file(file));
    report = run(command, spec, flags);
  } catch (const SpecError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // constructors reject structurally invalid data (shapes, d d != 0, ...)
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  }

  const std::string rendered = flags.format == "json" ? render_json(report, flags) : render_text(report, flags);
  try {
    const bool emits = report.emitted.has_value();
    if (emits && !out_path.empty()) {
      write_file(out_path, *report.emitted);
      std::cout << rendered;
    } else if (emits && command == "convert") {
      std::cout << *report.emitted;
    } else if (!out_path.empty() && !emits) {
      write_file(out_path, rendered);
    } else {
      std::cout << rendered;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return report.passed() ? kPass : kFail;
}
