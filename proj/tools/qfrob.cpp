#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "qfrob/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qfrob: quantum Frobenius verification campaigns"};
  std::string config, format = "json", out;
  bool deterministic = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--config", config, "campaign file (YAML)")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--deterministic", deterministic, "zero the timing fields");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  qfrob::Campaign c;
  try {
    c = qfrob::load_campaign(config);
  } catch (const qfrob::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  qfrob::VerdictReport rep = qfrob::run_campaign(c, {jobs, deterministic});
  const std::string text = qfrob::emit(rep, format == "text" ? qfrob::Format::TEXT : qfrob::Format::JSON);

  if (out.empty()) {
    std::cout << text;
  } else {
    std::filesystem::path p(out);
    if (const char* dir = std::getenv("QFROB_OUTPUT_DIR"); dir && *dir && p.is_relative()) p = std::filesystem::path(dir) / p;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p);
    if (!f) {
      std::cerr << "cannot write " << p << "\n";
      return 2;
    }
    f << text;
  }
  return rep.passed() ? 0 : 1;
}
