#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/signature.hpp"
#include "core/status.hpp"
#include "core/value.hpp"
#include "json.hpp"

namespace frex {

// Terms over a signature with de Bruijn-indexed variables. Var nodes stand
// for free (dynamic) variables; Sta nodes embed carrier constants of some
// algebra, so a term without Sta nodes is a plain term and one with them is
// an extended term. Hole is only used inside rewriting contexts.
class Term {
public:
  enum class Kind : unsigned char { Var, Sta, App, Hole };

  Term();  // Var 0; so equations and goals can be aggregate-built

  static Term var(int index);
  static Term sta(Value v);
  static Term app(std::string op, std::vector<Term> args = {});
  static Term hole();

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_sta() const { return kind() == Kind::Sta; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_hole() const { return kind() == Kind::Hole; }

  int index() const { return node_->index; }
  const Value& constant() const { return node_->constant; }
  const std::string& op() const { return node_->op; }
  const std::vector<Term>& args() const { return node_->args; }

  bool is_app_of(std::string_view op_name) const {
    return is_app() && node_->op == op_name;
  }

  // Structural equality; Sta constants compare with structural Value
  // equality. See term_equal for the algebra-aware variant.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  int leaf_count() const;
  bool static_free() const;  // no Sta node anywhere
  bool has_hole() const;

  // Compact s-expression form, for diagnostics and hashing keys.
  std::string show() const;

  nlohmann::ordered_json to_json() const;
  static Result<Term> from_json(const nlohmann::json& j);

private:
  struct Node {
    Kind kind;
    int index = 0;
    Value constant;
    std::string op;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Well-formedness over a signature and a context of `support` variables.
Status validate_term(const Signature& sig, int support, const Term& t);

// As validate_term but allowing Sta leaves (extended terms).
Status validate_ext_term(const Signature& sig, int support, const Term& t);

// Simultaneous substitution: Var i becomes sub[i]. Terms form a monad with
// Var as return; this is its bind on the variable positions.
Term substitute(const Term& t, const std::vector<Term>& sub);

// Replaces the unique Hole of `context` with `filler`.
Term plug(const Term& context, const Term& filler);

// Number of Hole nodes (a rewriting context has exactly one).
int hole_count(const Term& t);

}  // namespace frex
