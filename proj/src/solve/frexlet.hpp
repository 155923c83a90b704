#pragma once

#include <any>
#include <functional>
#include <memory>
#include <optional>

#include "derive/derivation.hpp"

namespace frex {

// A free-algebra simplifier over a fixed number of variables: a normal-form
// domain with decidable equality, normalization, reification back to terms,
// and a proof that every term equals its reified normal form. The
// universal property becomes this contract; soundness is checked against
// the derivations module and completeness is property-tested against the
// oracles.
class Fral {
public:
  using NF = std::any;

  virtual ~Fral() = default;

  virtual const Presentation& pres() const = 0;
  virtual int support() const = 0;
  // Context the emitted derivations check under (an algebra appears only
  // for combinator-built frals whose proofs fold constants away).
  virtual CheckContext ctx() const { return CheckContext{pres(), support(), nullptr}; }

  virtual NF norm(const Term& t) const = 0;
  virtual bool nf_equal(const NF& a, const NF& b) const = 0;
  virtual Term reify(const NF& nf) const = 0;
  virtual Derivation prove_norm(const Term& t) const = 0;
};

// A free-extension simplifier: as Fral but over extended terms whose Sta
// leaves come from the base algebra, together with the extension structure
// (variables, embedding) and the universal eliminator.
class Frex {
public:
  using NF = std::any;
  // Interprets base-algebra constants in the target algebra.
  using Hom = std::function<Value(const Value&)>;

  virtual ~Frex() = default;

  virtual const Presentation& pres() const = 0;
  virtual const Algebra& base() const = 0;
  virtual int support() const = 0;
  CheckContext ctx() const { return CheckContext{pres(), support(), &base()}; }

  virtual NF norm(const Term& t) const = 0;
  virtual bool nf_equal(const NF& a, const NF& b) const = 0;
  virtual Term reify(const NF& nf) const = 0;
  virtual Derivation prove_norm(const Term& t) const = 0;

  virtual NF var(int index) const = 0;
  virtual NF embed(const Value& c) const = 0;
  // The eliminator [h;e] into `target`, evaluating a normal form directly.
  virtual Value eval_nf(const Algebra& target, const Hom& h, const Env& e,
                        const NF& nf) const = 0;
};

// Decision procedures: a derivation when the normal forms coincide,
// nothing when the equation is not provable in the theory.
std::optional<Derivation> solve_fral(const Fral& f, const Goal& g);
std::optional<Derivation> solve_frex(const Frex& f, const Goal& g);

// Fral from a frex over the initial algebra (one-point carrier): terms
// embed unchanged, and any constants the frex's reifier produces collapse
// to the unit term.
std::shared_ptr<const Fral> by_frex(std::shared_ptr<const Frex> f);

// The per-presentation glue needed to build a frex as the coproduct of the
// base algebra with the fral.
struct CoproductConstruction {
  // Coproduct of two models: carrier pairs, componentwise structure.
  std::function<Algebra(const Algebra& a, const Algebra& b)> make;
  // The fral's normal forms as an algebra carrier.
  std::function<Value(const Fral&, const std::any&)> encode_nf;
  std::function<std::any(const Fral&, const Value&)> decode_nf;
  // Reification and normalization proofs for the paired normal form.
  std::function<Term(const Algebra& base, int support, const Value& pair)> reify;
  std::function<Proved(const Algebra& base, int support, const Term& t)> prove;
  std::function<Value(const Algebra& target, const Frex::Hom& h, const Env& e,
                      const Algebra& base, const Value& pair)>
      eval;
};

// Looks up the registered construction for a presentation (provided for
// commutative monoids).
const CoproductConstruction* find_coproduct(const Presentation& pres);

Result<std::shared_ptr<const Frex>> frex_by_coproduct(std::shared_ptr<const Fral> fral,
                                                      const CoproductConstruction& cons,
                                                      const Algebra& base);

// Constructors for the bundled frexlets.
std::shared_ptr<const Fral> monoid_fral(int support);
std::shared_ptr<const Frex> monoid_frex(const Algebra& base, int support);
std::shared_ptr<const Fral> commutative_fral(int support);
std::shared_ptr<const Frex> commutative_frex(const Algebra& base, int support);
std::shared_ptr<const Fral> involutive_fral(int support);
std::shared_ptr<const Frex> involutive_frex(const Algebra& base, int support);

// Frexlet lookup used by the CLI: presentation name + mode (+ algebra).
Result<std::shared_ptr<const Fral>> make_fral(const Presentation& pres, int support);
Result<std::shared_ptr<const Frex>> make_frex(const Presentation& pres, const Algebra& base,
                                              int support);

}  // namespace frex
