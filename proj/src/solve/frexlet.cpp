#include "solve/frexlet.hpp"

#include <stdexcept>

#include "solve/commutative.hpp"

namespace frex {

namespace {

Proved proved_norm(const Fral& f, const Term& t) {
  Fral::NF nf = f.norm(t);
  return Proved{t, f.reify(nf), f.prove_norm(t)};
}

Proved proved_norm(const Frex& f, const Term& t) {
  Frex::NF nf = f.norm(t);
  return Proved{t, f.reify(nf), f.prove_norm(t)};
}

}  // namespace

std::optional<Derivation> solve_fral(const Fral& f, const Goal& g) {
  if (g.support != f.support())
    throw std::invalid_argument("goal support does not match the fral's context");
  if (!g.lhs.static_free() || !g.rhs.static_free())
    throw std::invalid_argument("fral goals must be constant-free");
  Status wf = validate_goal(f.pres().signature(), g);
  if (!wf.ok()) throw std::invalid_argument(wf.message);
  if (!f.nf_equal(f.norm(g.lhs), f.norm(g.rhs))) return std::nullopt;
  if (g.lhs == g.rhs) return Derivation::refl(g.lhs);
  const Algebra* alg = f.ctx().algebra;
  return proved_trans(proved_norm(f, g.lhs), proved_sym(proved_norm(f, g.rhs)), alg).d;
}

std::optional<Derivation> solve_frex(const Frex& f, const Goal& g) {
  if (g.support != f.support())
    throw std::invalid_argument("goal support does not match the frex's context");
  Status wf = validate_goal(f.pres().signature(), g);
  if (!wf.ok()) throw std::invalid_argument(wf.message);
  if (!f.nf_equal(f.norm(g.lhs), f.norm(g.rhs))) return std::nullopt;
  if (g.lhs == g.rhs) return Derivation::refl(g.lhs);
  return proved_trans(proved_norm(f, g.lhs), proved_sym(proved_norm(f, g.rhs)), &f.base()).d;
}

namespace {

Term strip_sta_term(const Term& t) {
  if (t.is_sta()) return unit_term();
  if (t.is_app() && !t.args().empty()) {
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(strip_sta_term(a));
    return Term::app(t.op(), std::move(args));
  }
  return t;
}

// Over a one-point base every constant is the unit, so Sta leaves rewrite
// to the unit term via the unit's evaluation step.
Proved strip_sta_proof(const Term& t, const Algebra& base) {
  if (t.is_sta()) return proved_sym(proved_eval(base, kUnit, {}));
  if (t.is_app() && !t.args().empty()) {
    std::vector<Proved> children;
    for (const auto& a : t.args()) children.push_back(strip_sta_proof(a, base));
    return proved_cong(t.op(), std::move(children));
  }
  return proved_refl(t);
}

class ByFrexFral final : public Fral {
public:
  explicit ByFrexFral(std::shared_ptr<const Frex> fx) : fx_(std::move(fx)) {}

  const Presentation& pres() const override { return fx_->pres(); }
  int support() const override { return fx_->support(); }
  CheckContext ctx() const override {
    return CheckContext{pres(), support(), &fx_->base()};
  }

  NF norm(const Term& t) const override { return fx_->norm(t); }
  bool nf_equal(const NF& a, const NF& b) const override { return fx_->nf_equal(a, b); }
  Term reify(const NF& nf) const override { return strip_sta_term(fx_->reify(nf)); }
  Derivation prove_norm(const Term& t) const override {
    Proved base = Proved{t, fx_->reify(fx_->norm(t)), fx_->prove_norm(t)};
    Proved strip = strip_sta_proof(base.rhs, fx_->base());
    return proved_trans(std::move(base), std::move(strip), &fx_->base()).d;
  }

private:
  std::shared_ptr<const Frex> fx_;
};

}  // namespace

std::shared_ptr<const Fral> by_frex(std::shared_ptr<const Frex> f) {
  if (!f->base().singleton)
    throw std::invalid_argument("by_frex needs a frex over the initial (one-point) algebra");
  return std::make_shared<ByFrexFral>(std::move(f));
}

const CoproductConstruction* find_coproduct(const Presentation& pres) {
  if (&pres == &commutative_monoid_presentation() || pres.name() == "cmonoid")
    return &commutative_coproduct();
  return nullptr;
}

namespace {

// The fral's normal forms as an algebra: operations go through
// reify/norm round trips, equality through the fral's own decision.
Algebra nf_algebra(std::shared_ptr<const Fral> fral, const CoproductConstruction& cons) {
  Algebra a;
  a.name = "";
  a.sig = fral->pres().signature();
  a.presentation = &fral->pres();
  a.interp = [fral, &cons](std::string_view op, std::span<const Value> args) {
    std::vector<Term> arg_terms;
    for (const auto& v : args)
      arg_terms.push_back(fral->reify(cons.decode_nf(*fral, v)));
    Term combined = Term::app(std::string(op), std::move(arg_terms));
    return cons.encode_nf(*fral, fral->norm(combined));
  };
  a.equal = [fral, &cons](const Value& x, const Value& y) {
    return fral->nf_equal(cons.decode_nf(*fral, x), cons.decode_nf(*fral, y));
  };
  a.sample = [fral, &cons](Rng& rng) {
    Term t = unit_term();
    for (int i = 0; i < 3; ++i)
      if (fral->support() > 0 && rng() % 2)
        t = mul(std::move(t), Term::var(static_cast<int>(rng()) % fral->support()));
    return cons.encode_nf(*fral, fral->norm(t));
  };
  return a;
}

class CoproductFrex final : public Frex {
public:
  CoproductFrex(std::shared_ptr<const Fral> fral, const CoproductConstruction& cons,
                const Algebra& base)
      : fral_(std::move(fral)),
        cons_(cons),
        base_(base),
        nf_alg_(nf_algebra(fral_, cons)),
        pair_alg_(cons.make(base, nf_alg_)) {}

  const Presentation& pres() const override { return fral_->pres(); }
  const Algebra& base() const override { return base_; }
  int support() const override { return fral_->support(); }

  NF norm(const Term& t) const override { return fold(t); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return pair_alg_.values_equal(std::any_cast<const Value&>(a), std::any_cast<const Value&>(b));
  }
  Term reify(const NF& nf) const override {
    return cons_.reify(base_, support(), std::any_cast<const Value&>(nf));
  }
  Derivation prove_norm(const Term& t) const override {
    return cons_.prove(base_, support(), t).d;
  }

  NF var(int index) const override {
    return Value::list({base_.unit_value(), cons_.encode_nf(*fral_, fral_->norm(Term::var(index)))});
  }
  NF embed(const Value& c) const override {
    return Value::list({c, cons_.encode_nf(*fral_, fral_->norm(unit_term()))});
  }
  Value eval_nf(const Algebra& target, const Hom& h, const Env& e, const NF& nf) const override {
    return cons_.eval(target, h, e, base_, std::any_cast<const Value&>(nf));
  }

private:
  Value fold(const Term& t) const {
    if (t.is_var()) return std::any_cast<Value>(var(t.index()));
    if (t.is_sta()) return std::any_cast<Value>(embed(t.constant()));
    std::vector<Value> args;
    for (const auto& a : t.args()) args.push_back(fold(a));
    return pair_alg_.apply(t.op(), args);
  }

  std::shared_ptr<const Fral> fral_;
  const CoproductConstruction& cons_;
  const Algebra& base_;
  Algebra nf_alg_;
  Algebra pair_alg_;
};

}  // namespace

Result<std::shared_ptr<const Frex>> frex_by_coproduct(std::shared_ptr<const Fral> fral,
                                                      const CoproductConstruction& cons,
                                                      const Algebra& base) {
  if (base.sig != fral->pres().signature())
    return Status::fail(Errc::SignatureMismatch,
                        "base algebra signature does not match the presentation");
  return std::static_pointer_cast<const Frex>(
      std::make_shared<CoproductFrex>(std::move(fral), cons, base));
}

Result<std::shared_ptr<const Fral>> make_fral(const Presentation& pres, int support) {
  if (pres.name() == "monoid") return monoid_fral(support);
  if (pres.name() == "cmonoid") return commutative_fral(support);
  if (pres.name() == "invmonoid") return involutive_fral(support);
  return Status::fail(Errc::BadValue, "no fral for presentation " + pres.name());
}

Result<std::shared_ptr<const Frex>> make_frex(const Presentation& pres, const Algebra& base,
                                              int support) {
  if (base.sig != pres.signature())
    return Status::fail(Errc::SignatureMismatch,
                        "algebra " + base.name + " does not fit the presentation signature");
  if (pres.name() == "monoid") return monoid_frex(base, support);
  if (pres.name() == "cmonoid") {
    if (base.presentation == nullptr || base.presentation->axiom("commutativity") == nullptr)
      return Status::fail(Errc::BadValue,
                          "algebra " + base.name + " is not declared commutative");
    return commutative_frex(base, support);
  }
  if (pres.name() == "invmonoid") return involutive_frex(base, support);
  return Status::fail(Errc::BadValue, "no frex for presentation " + pres.name());
}

}  // namespace frex
