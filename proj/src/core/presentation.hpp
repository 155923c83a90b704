#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/term.hpp"

namespace frex {

// An equation in a finite context; `support` counts the free variables.
struct Equation {
  int support = 0;
  Term lhs;
  Term rhs;
};

// A goal to discharge: as Equation, but the sides may embed constants.
struct Goal {
  int support = 0;
  Term lhs;
  Term rhs;
};

// Signature plus named axioms, in a fixed order for stable serialization.
class Presentation {
public:
  Presentation() = default;
  Presentation(std::string name, Signature sig,
               std::vector<std::pair<std::string, Equation>> axioms);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  const std::vector<std::pair<std::string, Equation>>& axioms() const { return axioms_; }
  const Equation* axiom(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
  static Result<Presentation> from_json(const nlohmann::json& j);

private:
  std::string name_;  // display only; not serialized
  Signature sig_;
  std::vector<std::pair<std::string, Equation>> axioms_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

enum class SchemeKind {
  LeftNeutrality,
  RightNeutrality,
  Associativity,
  Commutativity,
  Involutivity,
  Antidistributivity,
};

// Binds scheme roles to concrete operation symbols of a signature.
struct AxiomScheme {
  SchemeKind kind;
  std::string binary_op;   // all kinds
  std::string unit_op;     // neutrality kinds
  std::string involution;  // involutive kinds
};

// Expands a scheme into the equation it denotes, checking arities.
Result<Equation> instantiate_scheme(const Signature& sig, const AxiomScheme& scheme);

// The three monoid-family presentations over ops "*" (binary), "1"
// (nullary) and, for the involutive one, "inv" (unary).
const Presentation& monoid_presentation();
const Presentation& commutative_monoid_presentation();
const Presentation& involutive_monoid_presentation();
const Presentation* find_presentation(std::string_view name);  // monoid|cmonoid|invmonoid

inline const char* kMul = "*";
inline const char* kUnit = "1";
inline const char* kInv = "inv";

Term unit_term();
Term mul(Term a, Term b);
Term inv(Term a);

Status validate_goal(const Signature& sig, const Goal& g);

}  // namespace frex
