#pragma once

#include <optional>

#include "derive/derivation.hpp"
#include "surface/surface.hpp"

namespace frex {

// One directed, context-focused atomic rewrite: an axiom instance or an
// evaluation step, applied forward or backward, under an optional
// one-hole congruence context (absent = rewrite at the root).
struct LinStep {
  struct AxiomInstance {
    std::string name;
    std::vector<Term> subst;
  };
  struct EvalInstance {
    std::string op;
    std::vector<Value> args;
  };

  std::optional<Term> context;  // term with exactly one hole
  bool forward = true;
  std::optional<AxiomInstance> axiom;  // exactly one of axiom/eval is set
  std::optional<EvalInstance> eval;
};

// Flattened proof: a start term and a type-aligned run of steps. Each
// step's source (its atom's lhs plugged into its context) must equal the
// previous step's target.
struct LinearDerivation {
  Term start;
  std::vector<LinStep> steps;
};

// Decomposes a derivation tree into the flat form: reflexivity vanishes,
// transitivity concatenates, symmetry reverses and flips directions, and
// n-ary congruences split into per-child one-hole contexts (left siblings
// already rewritten, right siblings still original).
Result<LinearDerivation> linearize(const CheckContext& ctx, const Derivation& d);

// The run of terms the steps visit, starting with `start`. Fails when the
// steps are not aligned.
Result<std::vector<Term>> trace(const CheckContext& ctx, const LinearDerivation& l);

// Splices out every loop (a segment that returns to an earlier term) until
// all intermediate terms are pairwise distinct. Idempotent.
Result<LinearDerivation> remove_loops(const CheckContext& ctx, const LinearDerivation& l);

// Converts back to a checkable tree; an empty run becomes Refl(start).
Result<Derivation> replay(const CheckContext& ctx, const LinearDerivation& l);

enum class ProofFormat { Unicode, Latex };

// Equational-reasoning chain, one term per line, each step annotated with
// its justification, direction, and congruence context.
Result<std::string> print_steps(const CheckContext& ctx, const LinearDerivation& l,
                                ProofFormat format);

}  // namespace frex
