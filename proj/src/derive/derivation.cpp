#include "derive/derivation.hpp"

#include <stdexcept>

namespace frex {

Derivation Derivation::refl(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Refl;
  n->term = std::move(t);
  return Derivation(std::move(n));
}

Derivation Derivation::sym(Derivation d) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sym;
  n->children.push_back(std::move(d));
  return Derivation(std::move(n));
}

Derivation Derivation::trans(Derivation a, Derivation b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Trans;
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return Derivation(std::move(n));
}

Derivation Derivation::cong(std::string op, std::vector<Derivation> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Cong;
  n->op = std::move(op);
  n->children = std::move(children);
  return Derivation(std::move(n));
}

Derivation Derivation::by_axiom(std::string axiom, std::vector<Term> subst) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ByAxiom;
  n->op = std::move(axiom);
  n->subst = std::move(subst);
  return Derivation(std::move(n));
}

Derivation Derivation::eval(std::string op, std::vector<Value> consts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eval;
  n->op = std::move(op);
  n->consts = std::move(consts);
  return Derivation(std::move(n));
}

int Derivation::step_count() const {
  switch (kind()) {
    case Kind::Refl: return 0;
    case Kind::ByAxiom:
    case Kind::Eval: return 1;
    default: {
      int n = 0;
      for (const auto& c : children()) n += c.step_count();
      return n;
    }
  }
}

bool term_equal(const Term& a, const Term& b, const Algebra* alg) {
  if (alg == nullptr) return a == b;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.index() == b.index();
    case Term::Kind::Sta: return alg->values_equal(a.constant(), b.constant());
    case Term::Kind::Hole: return true;
    case Term::Kind::App: {
      if (a.op() != b.op() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!term_equal(a.args()[i], b.args()[i], alg)) return false;
      return true;
    }
  }
  return false;
}

namespace {

using Endpoints = std::pair<Term, Term>;

Result<Endpoints> compute(const CheckContext& ctx, const Derivation& d) {
  switch (d.kind()) {
    case Derivation::Kind::Refl: {
      Status s = validate_ext_term(ctx.pres.signature(), ctx.support, d.term());
      if (!s.ok()) return s;
      if (!d.term().static_free() && ctx.algebra == nullptr)
        return Status::fail(Errc::MissingAlgebra, "constant in proof but no algebra in context");
      return Endpoints{d.term(), d.term()};
    }
    case Derivation::Kind::Sym: {
      auto r = compute(ctx, d.inner());
      if (!r.ok()) return r;
      return Endpoints{r.value().second, r.value().first};
    }
    case Derivation::Kind::Trans: {
      auto a = compute(ctx, d.first());
      if (!a.ok()) return a;
      auto b = compute(ctx, d.second());
      if (!b.ok()) return b;
      if (!term_equal(a.value().second, b.value().first, ctx.algebra))
        return Status::fail(Errc::EndpointMismatch,
                            "transitivity endpoints do not meet: " + a.value().second.show() +
                                " vs " + b.value().first.show());
      return Endpoints{a.value().first, b.value().second};
    }
    case Derivation::Kind::Cong: {
      auto arity = ctx.pres.signature().arity(d.op());
      if (!arity) return Status::fail(Errc::UnknownOp, "congruence over unknown op " + d.op());
      if (static_cast<int>(d.children().size()) != *arity)
        return Status::fail(Errc::ArityMismatch,
                            "congruence over " + d.op() + " needs " + std::to_string(*arity) +
                                " children, got " + std::to_string(d.children().size()));
      std::vector<Term> ls, rs;
      for (const auto& c : d.children()) {
        auto r = compute(ctx, c);
        if (!r.ok()) return r;
        ls.push_back(r.value().first);
        rs.push_back(r.value().second);
      }
      return Endpoints{Term::app(d.op(), std::move(ls)), Term::app(d.op(), std::move(rs))};
    }
    case Derivation::Kind::ByAxiom: {
      const Equation* ax = ctx.pres.axiom(d.axiom());
      if (ax == nullptr)
        return Status::fail(Errc::UnknownAxiom, "unknown axiom " + d.axiom());
      if (static_cast<int>(d.subst().size()) != ax->support)
        return Status::fail(Errc::ArityMismatch,
                            "axiom " + d.axiom() + " has support " + std::to_string(ax->support) +
                                ", substitution has " + std::to_string(d.subst().size()));
      for (const auto& s : d.subst()) {
        Status v = validate_ext_term(ctx.pres.signature(), ctx.support, s);
        if (!v.ok()) return v;
        if (!s.static_free() && ctx.algebra == nullptr)
          return Status::fail(Errc::MissingAlgebra, "constant in proof but no algebra in context");
      }
      return Endpoints{substitute(ax->lhs, d.subst()), substitute(ax->rhs, d.subst())};
    }
    case Derivation::Kind::Eval: {
      if (ctx.algebra == nullptr)
        return Status::fail(Errc::MissingAlgebra, "evaluation step but no algebra in context");
      auto arity = ctx.pres.signature().arity(d.op());
      if (!arity) return Status::fail(Errc::UnknownOp, "evaluation of unknown op " + d.op());
      if (static_cast<int>(d.consts().size()) != *arity)
        return Status::fail(Errc::ArityMismatch,
                            "evaluation of " + d.op() + " needs " + std::to_string(*arity) +
                                " constants, got " + std::to_string(d.consts().size()));
      std::vector<Term> args;
      for (const auto& c : d.consts()) args.push_back(Term::sta(c));
      Value folded = ctx.algebra->apply(d.op(), d.consts());
      return Endpoints{Term::app(d.op(), std::move(args)), Term::sta(std::move(folded))};
    }
  }
  return Status::fail(Errc::BadValue, "corrupt derivation");
}

}  // namespace

Result<std::pair<Term, Term>> endpoints(const CheckContext& ctx, const Derivation& d) {
  return compute(ctx, d);
}

Status check(const CheckContext& ctx, const Term& lhs, const Term& rhs, const Derivation& d) {
  Status l = validate_ext_term(ctx.pres.signature(), ctx.support, lhs);
  if (!l.ok()) return l;
  Status r = validate_ext_term(ctx.pres.signature(), ctx.support, rhs);
  if (!r.ok()) return r;
  if ((!lhs.static_free() || !rhs.static_free()) && ctx.algebra == nullptr)
    return Status::fail(Errc::MissingAlgebra, "constant in goal but no algebra in context");
  auto e = endpoints(ctx, d);
  if (!e.ok()) return e.status();
  if (!term_equal(e.value().first, lhs, ctx.algebra))
    return Status::fail(Errc::EndpointMismatch,
                        "proof starts at " + e.value().first.show() + ", goal lhs is " + lhs.show());
  if (!term_equal(e.value().second, rhs, ctx.algebra))
    return Status::fail(Errc::EndpointMismatch,
                        "proof ends at " + e.value().second.show() + ", goal rhs is " + rhs.show());
  return Status::success();
}

Proved proved_refl(Term t) {
  Derivation d = Derivation::refl(t);
  return Proved{t, std::move(t), std::move(d)};
}

Proved proved_sym(Proved p) {
  if (p.d.kind() == Derivation::Kind::Refl) return p;
  return Proved{std::move(p.rhs), std::move(p.lhs), Derivation::sym(std::move(p.d))};
}

Proved proved_trans(Proved a, Proved b, const Algebra* alg) {
  if (!term_equal(a.rhs, b.lhs, alg))
    throw std::logic_error("proof chaining mismatch: " + a.rhs.show() + " vs " + b.lhs.show());
  if (a.d.kind() == Derivation::Kind::Refl) return Proved{std::move(a.lhs), std::move(b.rhs), std::move(b.d)};
  if (b.d.kind() == Derivation::Kind::Refl) return Proved{std::move(a.lhs), std::move(a.rhs), std::move(a.d)};
  return Proved{std::move(a.lhs), std::move(b.rhs),
                Derivation::trans(std::move(a.d), std::move(b.d))};
}

Proved proved_cong(const std::string& op, std::vector<Proved> children) {
  bool all_refl = true;
  std::vector<Term> ls, rs;
  std::vector<Derivation> ds;
  for (auto& c : children) {
    all_refl = all_refl && c.d.kind() == Derivation::Kind::Refl;
    ls.push_back(std::move(c.lhs));
    rs.push_back(std::move(c.rhs));
    ds.push_back(std::move(c.d));
  }
  Term lhs = Term::app(op, std::move(ls));
  Term rhs = Term::app(op, std::move(rs));
  if (all_refl) return proved_refl(std::move(lhs));
  return Proved{std::move(lhs), std::move(rhs), Derivation::cong(op, std::move(ds))};
}

Proved proved_cong1(const std::string& op, const std::vector<Term>& frame, std::size_t index,
                    Proved inner) {
  std::vector<Proved> children;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i == index)
      children.push_back(std::move(inner));
    else
      children.push_back(proved_refl(frame[i]));
  }
  return proved_cong(op, std::move(children));
}

Proved proved_axiom(const Presentation& pres, const std::string& name, std::vector<Term> subst) {
  const Equation* ax = pres.axiom(name);
  if (ax == nullptr) throw std::invalid_argument("no axiom named " + name);
  Term lhs = substitute(ax->lhs, subst);
  Term rhs = substitute(ax->rhs, subst);
  return Proved{std::move(lhs), std::move(rhs), Derivation::by_axiom(name, std::move(subst))};
}

Proved proved_eval(const Algebra& alg, const std::string& op, std::vector<Value> consts) {
  std::vector<Term> args;
  for (const auto& c : consts) args.push_back(Term::sta(c));
  Value folded = alg.apply(op, consts);
  return Proved{Term::app(op, std::move(args)), Term::sta(std::move(folded)),
                Derivation::eval(op, std::move(consts))};
}

}  // namespace frex
