#pragma once

#include "derive/linear.hpp"

namespace frex {

// Self-contained proof certificate: the full presentation, an optional
// constants-algebra registry key, the goal, and the linear proof. Checkable
// with nothing but this module, the derivations checker, and the named
// algebra's evaluator.
struct Certificate {
  Presentation pres;
  std::string algebra;  // registry key, empty for constant-free proofs
  Goal goal;
  LinearDerivation proof;
  std::string note;
};

// Deterministic serialization: top-level keys presentation, algebra
// (optional), goal, steps, meta, in that order.
std::string emit_certificate(const Goal& goal, const LinearDerivation& proof,
                             const Presentation& pres, std::string_view algebra_id,
                             std::string_view note = {});

Result<Certificate> parse_certificate(std::string_view bytes);

// Parses, replays the linear proof to a derivation tree, and runs the
// derivations-module checker. No frexlet code is involved anywhere on this
// path.
Status check_certificate(std::string_view bytes);

nlohmann::ordered_json step_to_json(const LinStep& step);
Result<LinStep> step_from_json(const nlohmann::json& j);

inline const char* kToolName = "frex-cpp";
inline const char* kToolVersion = "0.1.0";

}  // namespace frex
