#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace frex {

// Deeply-embedded equational proof trees. A derivation witnesses an
// equation between two (possibly extended) terms; the checker below
// recomputes the equation bottom-up instead of trusting the producer.
class Derivation {
public:
  enum class Kind : unsigned char { Refl, Sym, Trans, Cong, ByAxiom, Eval };

  static Derivation refl(Term t);
  static Derivation sym(Derivation d);
  static Derivation trans(Derivation a, Derivation b);
  static Derivation cong(std::string op, std::vector<Derivation> children);
  static Derivation by_axiom(std::string axiom, std::vector<Term> subst);
  static Derivation eval(std::string op, std::vector<Value> consts);

  Kind kind() const { return node_->kind; }
  const Term& term() const { return node_->term; }                    // Refl
  const Derivation& inner() const { return node_->children[0]; }      // Sym
  const Derivation& first() const { return node_->children[0]; }      // Trans
  const Derivation& second() const { return node_->children[1]; }     // Trans
  const std::vector<Derivation>& children() const { return node_->children; }  // Cong
  const std::string& op() const { return node_->op; }                 // Cong, Eval
  const std::string& axiom() const { return node_->op; }              // ByAxiom
  const std::vector<Term>& subst() const { return node_->subst; }     // ByAxiom
  const std::vector<Value>& consts() const { return node_->consts; }  // Eval

  // Number of ByAxiom/Eval leaves.
  int step_count() const;

private:
  struct Node {
    Kind kind;
    Term term = Term::var(0);
    std::string op;
    std::vector<Derivation> children;
    std::vector<Term> subst;
    std::vector<Value> consts;
  };
  explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Everything a check needs: the theory, the goal context size, and, when
// constants or evaluation steps occur, the algebra that evaluates them.
struct CheckContext {
  const Presentation& pres;
  int support = 0;
  const Algebra* algebra = nullptr;
};

// Structural equality where Sta constants compare with the algebra's
// equality predicate (structural when alg is null).
bool term_equal(const Term& a, const Term& b, const Algebra* alg);

// The equation `d` proves, computed bottom-up. Fails when the tree is
// ill-formed (unknown axiom, arity mismatch, transitivity endpoints that
// do not meet, evaluation without an algebra, ...).
Result<std::pair<Term, Term>> endpoints(const CheckContext& ctx, const Derivation& d);

// Accepts iff `d` is a valid proof of lhs = rhs under ctx.
Status check(const CheckContext& ctx, const Term& lhs, const Term& rhs, const Derivation& d);

// A derivation bundled with the endpoints it was built for. The solver-side
// proof builders chain these; the checker stays the arbiter.
struct Proved {
  Term lhs;
  Term rhs;
  Derivation d;
};

Proved proved_refl(Term t);
Proved proved_sym(Proved p);
// Collapses Refl legs so already-normal inputs yield plain Refl proofs.
Proved proved_trans(Proved a, Proved b, const Algebra* alg = nullptr);
Proved proved_cong(const std::string& op, std::vector<Proved> children);
// Rewrites child `index` of App(op, frame), keeping the other children.
Proved proved_cong1(const std::string& op, const std::vector<Term>& frame, std::size_t index,
                    Proved inner);
Proved proved_axiom(const Presentation& pres, const std::string& name, std::vector<Term> subst);
Proved proved_eval(const Algebra& alg, const std::string& op, std::vector<Value> consts);

}  // namespace frex
