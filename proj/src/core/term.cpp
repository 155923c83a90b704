#include "core/term.hpp"

#include <stdexcept>

namespace frex {

Term::Term() {
  static const std::shared_ptr<const Node> zero = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->index = 0;
    return n;
  }();
  node_ = zero;
}

Term Term::var(int index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  return Term(std::move(n));
}

Term Term::sta(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sta;
  n->constant = std::move(v);
  return Term(std::move(n));
}

Term Term::app(std::string op, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->op = std::move(op);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::hole() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Hole;
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.index() == b.index();
    case Term::Kind::Sta: return a.constant() == b.constant();
    case Term::Kind::Hole: return true;
    case Term::Kind::App:
      return a.op() == b.op() && a.args() == b.args();
  }
  return false;
}

int Term::leaf_count() const {
  if (!is_app() || args().empty()) return 1;
  int n = 0;
  for (const auto& s : args()) n += s.leaf_count();
  return n;
}

bool Term::static_free() const {
  if (is_sta()) return false;
  if (is_app())
    for (const auto& s : args())
      if (!s.static_free()) return false;
  return true;
}

bool Term::has_hole() const { return hole_count(*this) > 0; }

std::string Term::show() const {
  switch (kind()) {
    case Kind::Var: return "x" + std::to_string(index());
    case Kind::Sta: return constant().show();
    case Kind::Hole: return "_";
    case Kind::App: {
      if (args().empty()) return op();
      std::string out = "(" + op();
      for (const auto& a : args()) out += " " + a.show();
      out += ')';
      return out;
    }
  }
  return "?";
}

nlohmann::ordered_json Term::to_json() const {
  nlohmann::ordered_json j;
  switch (kind()) {
    case Kind::Var:
      j["var"] = index();
      break;
    case Kind::Sta:
      j["sta"] = constant().to_json();
      break;
    case Kind::Hole:
      j["hole"] = true;
      break;
    case Kind::App: {
      j["app"] = op();
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& a : args()) arr.push_back(a.to_json());
      j["args"] = std::move(arr);
      break;
    }
  }
  return j;
}

Result<Term> Term::from_json(const nlohmann::json& j) {
  if (!j.is_object())
    return Status::fail(Errc::ParseError, "term must be an object: " + j.dump());
  if (j.contains("var")) {
    if (!j["var"].is_number_integer() && !j["var"].is_number_unsigned())
      return Status::fail(Errc::ParseError, "var index must be a number");
    long long idx = j["var"].get<long long>();
    if (idx < 0) return Status::fail(Errc::ParseError, "negative var index");
    return Term::var(static_cast<int>(idx));
  }
  if (j.contains("sta")) {
    try {
      return Term::sta(Value::from_json(j["sta"]));
    } catch (const std::exception& e) {
      return Status::fail(Errc::ParseError, e.what());
    }
  }
  if (j.contains("hole")) return Term::hole();
  if (j.contains("app")) {
    if (!j["app"].is_string())
      return Status::fail(Errc::ParseError, "op name must be a string");
    std::vector<Term> args;
    if (j.contains("args")) {
      if (!j["args"].is_array())
        return Status::fail(Errc::ParseError, "args must be an array");
      for (const auto& a : j["args"]) {
        auto r = Term::from_json(a);
        if (!r.ok()) return r.status();
        args.push_back(r.take());
      }
    }
    return Term::app(j["app"].get<std::string>(), std::move(args));
  }
  return Status::fail(Errc::ParseError, "unrecognized term: " + j.dump());
}

namespace {

Status validate(const Signature& sig, int support, const Term& t, bool allow_sta) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.index() < 0 || t.index() >= support)
        return Status::fail(Errc::VarOutOfScope,
                            "variable index " + std::to_string(t.index()) +
                                " out of scope (support " + std::to_string(support) + ")");
      return Status::success();
    case Term::Kind::Sta:
      if (!allow_sta)
        return Status::fail(Errc::BadValue, "constant not allowed in a plain term");
      return Status::success();
    case Term::Kind::Hole:
      return Status::fail(Errc::BadValue, "hole outside a rewriting context");
    case Term::Kind::App: {
      auto ar = sig.arity(t.op());
      if (!ar)
        return Status::fail(Errc::UnknownOp, "unknown operation " + t.op());
      if (static_cast<int>(t.args().size()) != *ar)
        return Status::fail(Errc::ArityMismatch,
                            t.op() + " expects " + std::to_string(*ar) + " arguments, got " +
                                std::to_string(t.args().size()));
      for (const auto& a : t.args()) {
        Status s = validate(sig, support, a, allow_sta);
        if (!s.ok()) return s;
      }
      return Status::success();
    }
  }
  return Status::fail(Errc::BadValue, "corrupt term");
}

}  // namespace

Status validate_term(const Signature& sig, int support, const Term& t) {
  return validate(sig, support, t, /*allow_sta=*/false);
}

Status validate_ext_term(const Signature& sig, int support, const Term& t) {
  return validate(sig, support, t, /*allow_sta=*/true);
}

Term substitute(const Term& t, const std::vector<Term>& sub) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (t.index() < 0 || static_cast<std::size_t>(t.index()) >= sub.size())
        throw std::out_of_range("substitute: variable " + std::to_string(t.index()) +
                               " not covered by substitution of length " +
                               std::to_string(sub.size()));
      return sub[static_cast<std::size_t>(t.index())];
    }
    case Term::Kind::Sta:
    case Term::Kind::Hole:
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, sub));
      return Term::app(t.op(), std::move(args));
    }
  }
  throw std::logic_error("substitute: corrupt term");
}

Term plug(const Term& context, const Term& filler) {
  switch (context.kind()) {
    case Term::Kind::Hole:
      return filler;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(context.args().size());
      for (const auto& a : context.args()) args.push_back(plug(a, filler));
      return Term::app(context.op(), std::move(args));
    }
    default:
      return context;
  }
}

int hole_count(const Term& t) {
  if (t.is_hole()) return 1;
  if (!t.is_app()) return 0;
  int n = 0;
  for (const auto& a : t.args()) n += hole_count(a);
  return n;
}

}  // namespace frex
