#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ews/driver.hpp"
#include "ews/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_text_report(const ews::io::ordered_json& result) {
  const auto& stats = result.at("stats");
  std::cout << "sense: " << stats.at("sense").get<std::string>()
            << (stats.at("sense_overridden").get<bool>() ? " (overridden)" : "")
            << "\nstates: " << stats.at("states")
            << "\nmodels: " << stats.at("models")
            << "\nreported: " << stats.at("reported") << "\n";
  for (const auto& m : result.at("models")) {
    std::cout << "  {";
    bool sep = false;
    for (const auto& a : m.at("atoms")) {
      std::cout << (sep ? ", " : "") << a.get<std::string>();
      sep = true;
    }
    std::cout << "}";
    if (!m.at("evaluation").empty()) {
      std::cout << " with";
      for (const auto& [v, val] : m.at("evaluation").items())
        std::cout << " " << v << "=" << val;
    }
    std::cout << " costs";
    for (const auto& [l, c] : m.at("costs").items())
      std::cout << " " << l << ":" << c.get<std::string>();
    std::cout << "\n";
  }
}

int run_solve(const std::string& path, const ews::driver::SolveRequest& req,
              bool json_output) {
  std::vector<std::string> warnings;
  ews::EwSystem sys = ews::driver::lower_input(req.format, read_file(path),
                                               &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  ews::io::ordered_json result = ews::driver::solve_to_json(sys, req);
  if (json_output) std::cout << result.dump(2) << "\n";
  else print_text_report(result);
  return kExitOk;
}

int run_transform(const std::string& path, const std::string& format,
                  const std::string& apply, const std::string& out_path) {
  ews::EwSystem sys = ews::driver::lower_input(format, read_file(path));
  ews::TransformReport report;
  std::vector<std::string> warnings;
  ews::EwSystem rewritten =
      ews::driver::apply_transform(sys, apply, &report, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  ews::CoherenceReport coherence = ews::check_coherence(rewritten);
  if (!coherence.ok()) {
    std::cerr << "error: transform produced an incoherent system:\n"
              << coherence.str();
    return kExitParse;
  }
  std::string doc = ews::io::save_system(rewritten);
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << doc;
  }
  std::cerr << report.transform << ": " << report.rewrites.size()
            << " condition(s) rewritten\n";
  for (const auto& r : report.rewrites) std::cerr << "  " << r << "\n";
  return kExitOk;
}

int run_verify_command(const ews::verify::RandomSystemParams& params) {
  ews::verify::VerifyReport report = ews::verify::run_verify(params);
  std::cout << report.str();
  return report.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimization systems over weighted modular theories"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "enumerate and rank models");
  std::string solve_path;
  ews::driver::SolveRequest req;
  bool json_output = false;
  solve->add_option("file", solve_path, "input file, '-' for stdin")->required();
  solve->add_option("--format", req.format,
                    "ews, wcnf, op, gpw, omt, ilp, cc21, cc22, cc3");
  solve->add_flag("--extended", req.extended, "rank extended models");
  solve->add_option("--sense", req.sense, "auto, max or min");
  solve->add_flag("--all", req.all, "list every model, not only the optima");
  solve->add_flag("--json", json_output, "machine-readable output");
  solve->add_option("--cap", req.cap, "state-space cap");
  solve->add_flag("--nonstrict", req.nonstrict,
                  "false constraint atoms impose nothing");
  solve->add_option("--threads", req.threads, "worker count");

  // transform
  auto* transform = app.add_subcommand("transform", "rewrite a system");
  std::string t_path, t_format = "ews", t_apply, t_out;
  transform->add_option("file", t_path, "input file, '-' for stdin")->required();
  transform->add_option("--format", t_format, "input format (as for solve)");
  transform
      ->add_option("--apply", t_apply,
                   "normalize-levels, star, star-star, elim-neg, elim-pos, "
                   "elim-neg-ext, elim-pos-ext, drop-zero, drop-inert, "
                   "zero-coeffs")
      ->required();
  transform->add_option("-o,--output", t_out, "output path, default stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized property checks");
  ews::verify::RandomSystemParams params;
  verify->add_option("--trials", params.trials, "number of random systems");
  verify->add_option("--seed", params.seed, "base seed");
  verify->add_option("--atoms", params.max_atoms, "max atoms per system");
  verify->add_option("--vars", params.max_vars, "max variables per system");
  verify->add_option("--domain", params.max_domain, "max domain size");
  verify->add_option("--soft", params.max_soft, "max soft conditions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_path, req, json_output);
    if (transform->parsed())
      return run_transform(t_path, t_format, t_apply, t_out);
    return run_verify_command(params);
  } catch (const ews::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
