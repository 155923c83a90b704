#include "core/presentation.hpp"

#include <stdexcept>

namespace frex {

Presentation::Presentation(std::string name, Signature sig,
                           std::vector<std::pair<std::string, Equation>> axioms)
    : name_(std::move(name)), sig_(std::move(sig)), axioms_(std::move(axioms)) {
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    const auto& [ax_name, eq] = axioms_[i];
    if (!by_name_.emplace(ax_name, i).second)
      throw std::invalid_argument("duplicate axiom name " + ax_name);
    Status l = validate_term(sig_, eq.support, eq.lhs);
    Status r = validate_term(sig_, eq.support, eq.rhs);
    if (!l.ok() || !r.ok())
      throw std::invalid_argument("ill-formed axiom " + ax_name + ": " +
                                  (l.ok() ? r.message : l.message));
  }
}

const Equation* Presentation::axiom(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return nullptr;
  return &axioms_[it->second].second;
}

nlohmann::ordered_json Presentation::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const auto& op : sig_.ops())
    ops.push_back({{"name", op.name}, {"arity", op.arity}});
  j["ops"] = std::move(ops);
  nlohmann::ordered_json axs = nlohmann::ordered_json::array();
  for (const auto& [name, eq] : axioms_) {
    nlohmann::ordered_json a;
    a["name"] = name;
    a["support"] = eq.support;
    a["lhs"] = eq.lhs.to_json();
    a["rhs"] = eq.rhs.to_json();
    axs.push_back(std::move(a));
  }
  j["axioms"] = std::move(axs);
  return j;
}

Result<Presentation> Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ops") || !j.contains("axioms"))
    return Status::fail(Errc::ParseError, "presentation needs ops and axioms");
  std::vector<Signature::Op> ops;
  for (const auto& o : j["ops"]) {
    if (!o.is_object() || !o.contains("name") || !o.contains("arity"))
      return Status::fail(Errc::ParseError, "malformed op entry");
    ops.push_back({o["name"].get<std::string>(), o["arity"].get<int>()});
  }
  std::vector<std::pair<std::string, Equation>> axioms;
  for (const auto& a : j["axioms"]) {
    if (!a.is_object() || !a.contains("name") || !a.contains("support") ||
        !a.contains("lhs") || !a.contains("rhs"))
      return Status::fail(Errc::ParseError, "malformed axiom entry");
    auto lhs = Term::from_json(a["lhs"]);
    if (!lhs.ok()) return lhs.status();
    auto rhs = Term::from_json(a["rhs"]);
    if (!rhs.ok()) return rhs.status();
    axioms.emplace_back(a["name"].get<std::string>(),
                        Equation{a["support"].get<int>(), lhs.take(), rhs.take()});
  }
  try {
    return Presentation("", Signature(std::move(ops)), std::move(axioms));
  } catch (const std::exception& e) {
    return Status::fail(Errc::ParseError, e.what());
  }
}

Result<Equation> instantiate_scheme(const Signature& sig, const AxiomScheme& scheme) {
  auto need = [&sig](const std::string& op, int arity) -> Status {
    auto a = sig.arity(op);
    if (!a) return Status::fail(Errc::UnknownOp, "unknown operation " + op);
    if (*a != arity)
      return Status::fail(Errc::ArityMismatch, op + " must have arity " + std::to_string(arity) +
                                                   ", has " + std::to_string(*a));
    return Status::success();
  };

  const Term x = Term::var(0), y = Term::var(1), z = Term::var(2);
  auto bin = [&scheme](Term a, Term b) {
    return Term::app(scheme.binary_op, {std::move(a), std::move(b)});
  };

  Status s = need(scheme.binary_op, 2);
  if (scheme.kind == SchemeKind::Involutivity) s = Status::success();  // no binary role
  if (!s.ok()) return s;

  switch (scheme.kind) {
    case SchemeKind::LeftNeutrality: {
      Status u = need(scheme.unit_op, 0);
      if (!u.ok()) return u;
      return Equation{1, bin(Term::app(scheme.unit_op), x), x};
    }
    case SchemeKind::RightNeutrality: {
      Status u = need(scheme.unit_op, 0);
      if (!u.ok()) return u;
      return Equation{1, bin(x, Term::app(scheme.unit_op)), x};
    }
    case SchemeKind::Associativity:
      return Equation{3, bin(bin(x, y), z), bin(x, bin(y, z))};
    case SchemeKind::Commutativity:
      return Equation{2, bin(x, y), bin(y, x)};
    case SchemeKind::Involutivity: {
      Status u = need(scheme.involution, 1);
      if (!u.ok()) return u;
      auto iv = [&scheme](Term t) { return Term::app(scheme.involution, {std::move(t)}); };
      return Equation{1, iv(iv(x)), x};
    }
    case SchemeKind::Antidistributivity: {
      Status u = need(scheme.involution, 1);
      if (!u.ok()) return u;
      auto iv = [&scheme](Term t) { return Term::app(scheme.involution, {std::move(t)}); };
      return Equation{2, iv(bin(x, y)), bin(iv(y), iv(x))};
    }
  }
  return Status::fail(Errc::BadValue, "unknown scheme kind");
}

Term unit_term() { return Term::app(kUnit); }
Term mul(Term a, Term b) { return Term::app(kMul, {std::move(a), std::move(b)}); }
Term inv(Term a) { return Term::app(kInv, {std::move(a)}); }

namespace {

Signature monoid_signature() {
  return Signature({{kMul, 2}, {kUnit, 0}});
}

Signature involutive_signature() {
  return Signature({{kMul, 2}, {kUnit, 0}, {kInv, 1}});
}

Equation scheme(const Signature& sig, SchemeKind kind) {
  AxiomScheme sch{kind, kMul, kUnit, kInv};
  auto r = instantiate_scheme(sig, sch);
  if (!r.ok()) throw std::logic_error("preset scheme failed: " + r.status().message);
  return r.take();
}

}  // namespace

const Presentation& monoid_presentation() {
  static const Presentation p = [] {
    Signature sig = monoid_signature();
    return Presentation("monoid", sig,
                        {{"lftNeutrality", scheme(sig, SchemeKind::LeftNeutrality)},
                         {"rgtNeutrality", scheme(sig, SchemeKind::RightNeutrality)},
                         {"associativity", scheme(sig, SchemeKind::Associativity)}});
  }();
  return p;
}

const Presentation& commutative_monoid_presentation() {
  static const Presentation p = [] {
    Signature sig = monoid_signature();
    return Presentation("cmonoid", sig,
                        {{"lftNeutrality", scheme(sig, SchemeKind::LeftNeutrality)},
                         {"rgtNeutrality", scheme(sig, SchemeKind::RightNeutrality)},
                         {"associativity", scheme(sig, SchemeKind::Associativity)},
                         {"commutativity", scheme(sig, SchemeKind::Commutativity)}});
  }();
  return p;
}

const Presentation& involutive_monoid_presentation() {
  static const Presentation p = [] {
    Signature sig = involutive_signature();
    return Presentation("invmonoid", sig,
                        {{"lftNeutrality", scheme(sig, SchemeKind::LeftNeutrality)},
                         {"rgtNeutrality", scheme(sig, SchemeKind::RightNeutrality)},
                         {"associativity", scheme(sig, SchemeKind::Associativity)},
                         {"involutivity", scheme(sig, SchemeKind::Involutivity)},
                         {"antidistributivity", scheme(sig, SchemeKind::Antidistributivity)}});
  }();
  return p;
}

const Presentation* find_presentation(std::string_view name) {
  if (name == "monoid") return &monoid_presentation();
  if (name == "cmonoid") return &commutative_monoid_presentation();
  if (name == "invmonoid") return &involutive_monoid_presentation();
  return nullptr;
}

Status validate_goal(const Signature& sig, const Goal& g) {
  Status l = validate_ext_term(sig, g.support, g.lhs);
  if (!l.ok()) return l;
  return validate_ext_term(sig, g.support, g.rhs);
}

}  // namespace frex
