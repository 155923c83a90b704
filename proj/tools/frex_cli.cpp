// Command-line front end; talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frex.h"

namespace {

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool write_file(const std::string& path, const char* data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return out.good();
}

struct SolverHandle {
  frex_solver* s = nullptr;
  ~SolverHandle() { frex_solver_free(s); }
};

struct SolutionHandle {
  frex_solution* s = nullptr;
  ~SolutionHandle() { frex_solution_free(s); }
};

int run_solver(const std::string& pres, const std::string& mode, const std::string& algebra,
               const std::string& goal, const std::string& emit, const std::string& print_fmt,
               const std::string& lemma_name) {
  SolverHandle solver;
  solver.s = frex_solver_new(pres.c_str(), mode.c_str(),
                             algebra.empty() ? nullptr : algebra.c_str());
  if (solver.s == nullptr) return fail_usage(frex_last_error());

  SolutionHandle solution;
  int rc = frex_solver_solve(solver.s, goal.c_str(), &solution.s);
  if (rc == FREX_NOT_PROVABLE) {
    std::cerr << frex_last_error() << "\n";
    return 1;
  }
  if (rc == FREX_PARSE_ERROR) return fail_usage(frex_last_error());
  if (rc != FREX_OK) {
    std::cerr << "error: " << frex_last_error() << "\n";
    return 2;
  }

  char* proof = frex_solution_proof(solution.s, print_fmt.c_str());
  if (proof == nullptr) {
    std::cerr << "error: " << frex_last_error() << "\n";
    return 2;
  }
  std::cout << proof;
  frex_buffer_free(proof);

  if (!emit.empty()) {
    char* cert = frex_solution_certificate(solution.s,
                                           lemma_name.empty() ? nullptr : lemma_name.c_str());
    if (cert == nullptr) {
      std::cerr << "error: " << frex_last_error() << "\n";
      return 2;
    }
    bool ok = write_file(emit, cert);
    frex_buffer_free(cert);
    if (!ok) return fail_usage("cannot write " + emit);
    std::cerr << "certificate written to " << emit << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frex: proof-producing algebraic simplification for monoid varieties"};
  app.require_subcommand(1);

  std::string pres = "monoid", mode = "fral", algebra, goal, emit, print_fmt = "unicode",
              name, cert_path;

  CLI::App* solve = app.add_subcommand("solve", "decide an equation and print its proof");
  solve->add_option("--pres", pres, "presentation: monoid|cmonoid|invmonoid");
  solve->add_option("--mode", mode, "fral (all models) or frex (one algebra, constants fold)");
  solve->add_option("--algebra", algebra, "base algebra for frex mode (e.g. nat-add)");
  solve->add_option("--emit", emit, "write a certificate to this file");
  solve->add_option("--print", print_fmt, "proof format: unicode|latex");
  solve->add_option("goal", goal, "the equation, e.g. \"0 + (x + 0) + 0 = x\"")->required();

  CLI::App* check = app.add_subcommand("check", "verify a certificate file");
  check->add_option("cert", cert_path, "certificate file")->required();

  CLI::App* lemma = app.add_subcommand("lemma", "establish a named constant-free lemma");
  lemma->add_option("--pres", pres, "presentation: monoid|cmonoid|invmonoid");
  lemma->add_option("--name", name, "lemma name")->required();
  lemma->add_option("--emit", emit, "write a certificate to this file");
  lemma->add_option("--print", print_fmt, "proof format: unicode|latex");
  lemma->add_option("goal", goal, "the equation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream out;
    int rc = app.exit(e, out, out);
    std::cerr << out.str();
    return rc == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    if (mode != "fral" && mode != "frex") return fail_usage("--mode must be fral or frex");
    return run_solver(pres, mode, algebra, goal, emit, print_fmt, "");
  }
  if (lemma->parsed()) return run_solver(pres, "fral", "", goal, emit, print_fmt, name);

  // check
  std::ifstream in(cert_path, std::ios::binary);
  if (!in) return fail_usage("cannot read " + cert_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  int rc = frex_check_certificate(bytes.c_str(), bytes.size());
  if (rc == FREX_OK) {
    std::cout << "certificate OK\n";
    return 0;
  }
  std::cerr << "certificate rejected: " << frex_last_error() << "\n";
  return 1;
}
