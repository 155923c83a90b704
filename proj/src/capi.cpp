#include "frex.h"

#include <cstring>
#include <string>

#include "cert/certificate.hpp"
#include "solve/frexlet.hpp"
#include "surface/surface.hpp"

using namespace frex;

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

int code_of(Errc c) {
  switch (c) {
    case Errc::Ok: return FREX_OK;
    case Errc::NotProvable: return FREX_NOT_PROVABLE;
    case Errc::ParseError: return FREX_PARSE_ERROR;
    case Errc::UnknownAlgebra: return FREX_UNKNOWN_ALGEBRA;
    case Errc::CheckFailed:
    case Errc::EndpointMismatch:
    case Errc::Misaligned: return FREX_CHECK_FAILED;
    default: return FREX_INVALID_ARGUMENT;
  }
}

char* copy_out(const std::string& s) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

}  // namespace

struct frex_solver {
  const Presentation* pres;
  const Algebra* algebra;  // null in fral mode
  bool frex_mode;
};

struct frex_solution {
  const Presentation* pres;
  const Algebra* algebra;
  Goal goal;
  LinearDerivation proof;  // loop-free linear form
};

extern "C" {

const char* frex_version(void) { return kToolVersion; }

const char* frex_last_error(void) { return g_last_error.c_str(); }

frex_solver* frex_solver_new(const char* presentation, const char* mode, const char* algebra) {
  if (presentation == nullptr || mode == nullptr) {
    set_error("presentation and mode are required");
    return nullptr;
  }
  const Presentation* pres = find_presentation(presentation);
  if (pres == nullptr) {
    set_error("unknown presentation " + std::string(presentation) +
              " (expected monoid, cmonoid or invmonoid)");
    return nullptr;
  }
  std::string_view m(mode);
  if (m != "fral" && m != "frex") {
    set_error("mode must be fral or frex");
    return nullptr;
  }
  const Algebra* alg = nullptr;
  if (m == "frex") {
    if (algebra == nullptr) {
      set_error("frex mode needs an algebra");
      return nullptr;
    }
    alg = find_algebra(algebra);
    if (alg == nullptr) {
      set_error("unknown algebra " + std::string(algebra));
      return nullptr;
    }
    if (alg->sig != pres->signature()) {
      set_error("algebra " + std::string(algebra) + " does not model " + pres->name());
      return nullptr;
    }
  } else if (algebra != nullptr) {
    set_error("fral mode takes no algebra");
    return nullptr;
  }
  return new frex_solver{pres, alg, m == "frex"};
}

void frex_solver_free(frex_solver* solver) { delete solver; }

int frex_solver_solve(frex_solver* solver, const char* goal_text, frex_solution** out) {
  if (solver == nullptr || goal_text == nullptr || out == nullptr) {
    set_error("null argument");
    return FREX_INVALID_ARGUMENT;
  }
  *out = nullptr;
  auto goal = parse_goal(goal_text, *solver->pres, solver->algebra);
  if (!goal.ok()) {
    set_error(goal.status().message);
    return code_of(goal.status().code);
  }
  const Goal g = goal.take();
  try {
    std::optional<Derivation> d;
    if (solver->frex_mode) {
      auto fx = make_frex(*solver->pres, *solver->algebra, g.support);
      if (!fx.ok()) {
        set_error(fx.status().message);
        return code_of(fx.status().code);
      }
      d = solve_frex(*fx.value(), g);
    } else {
      auto fr = make_fral(*solver->pres, g.support);
      if (!fr.ok()) {
        set_error(fr.status().message);
        return code_of(fr.status().code);
      }
      d = solve_fral(*fr.value(), g);
    }
    if (!d) {
      set_error("not provable in theory " + solver->pres->name());
      return FREX_NOT_PROVABLE;
    }
    CheckContext ctx{*solver->pres, g.support, solver->algebra};
    auto linear = linearize(ctx, *d);
    if (!linear.ok()) {
      set_error(linear.status().message);
      return FREX_INTERNAL_ERROR;
    }
    auto pruned = remove_loops(ctx, linear.value());
    if (!pruned.ok()) {
      set_error(pruned.status().message);
      return FREX_INTERNAL_ERROR;
    }
    *out = new frex_solution{solver->pres, solver->algebra, g, pruned.take()};
    return FREX_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FREX_INTERNAL_ERROR;
  }
}

void frex_solution_free(frex_solution* solution) { delete solution; }

char* frex_solution_proof(const frex_solution* solution, const char* format) {
  if (solution == nullptr) {
    set_error("null solution");
    return nullptr;
  }
  ProofFormat f = ProofFormat::Unicode;
  if (format != nullptr && std::string_view(format) == "latex") f = ProofFormat::Latex;
  CheckContext ctx{*solution->pres, solution->goal.support, solution->algebra};
  auto text = print_steps(ctx, solution->proof, f);
  if (!text.ok()) {
    set_error(text.status().message);
    return nullptr;
  }
  return copy_out(text.value());
}

int frex_solution_step_count(const frex_solution* solution) {
  if (solution == nullptr) return 0;
  return static_cast<int>(solution->proof.steps.size());
}

char* frex_solution_certificate(const frex_solution* solution, const char* note) {
  if (solution == nullptr) {
    set_error("null solution");
    return nullptr;
  }
  std::string bytes =
      emit_certificate(solution->goal, solution->proof, *solution->pres,
                       solution->algebra ? solution->algebra->name : "",
                       note ? note : "");
  return copy_out(bytes);
}

int frex_check_certificate(const char* data, size_t len) {
  if (data == nullptr) {
    set_error("null certificate");
    return FREX_INVALID_ARGUMENT;
  }
  Status s = check_certificate(std::string_view(data, len));
  if (!s.ok()) {
    set_error(s.message);
    return code_of(s.code);
  }
  return FREX_OK;
}

void frex_buffer_free(char* buffer) { delete[] buffer; }

}  // extern "C"
