#include "core/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace frex {

Value bind(const Algebra& alg, const Env& env, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return env.at(static_cast<std::size_t>(t.index()));
    case Term::Kind::Sta:
      return t.constant();
    case Term::Kind::App: {
      std::vector<Value> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(bind(alg, env, a));
      return alg.apply(t.op(), args);
    }
    case Term::Kind::Hole:
      break;
  }
  throw std::invalid_argument("bind: hole in term");
}

bool validates(const Algebra& alg, const Equation& eq, std::span<const Env> sample) {
  for (const auto& env : sample) {
    if (static_cast<int>(env.size()) != eq.support)
      throw std::invalid_argument("validates: environment length mismatch");
    if (!alg.values_equal(bind(alg, env, eq.lhs), bind(alg, env, eq.rhs))) return false;
  }
  return true;
}

bool validates_random(const Algebra& alg, const Equation& eq, int count, Rng& rng) {
  std::vector<Env> envs;
  envs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Env env;
    for (int v = 0; v < eq.support; ++v) env.push_back(alg.sample(rng));
    envs.push_back(std::move(env));
  }
  return validates(alg, eq, envs);
}

Algebra power(const Algebra& alg, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Algebra p;
  p.name = "";
  p.sig = alg.sig;
  p.presentation = alg.presentation;
  p.multiplicative_display = alg.multiplicative_display;
  p.singleton = (n == 0) || alg.singleton;
  Algebra base = alg;  // capture by value; algebras are immutable bundles
  p.interp = [base, n](std::string_view op, std::span<const Value> args) {
    std::vector<Value> comps;
    comps.reserve(static_cast<std::size_t>(n));
    std::vector<Value> slice(args.size(), Value::nat(0));
    for (int i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < args.size(); ++k)
        slice[k] = args[k].as_list().at(static_cast<std::size_t>(i));
      comps.push_back(base.interp(op, slice));
    }
    return Value::list(std::move(comps));
  };
  p.equal = [base, n](const Value& a, const Value& b) {
    for (int i = 0; i < n; ++i)
      if (!base.values_equal(a.as_list().at(static_cast<std::size_t>(i)),
                             b.as_list().at(static_cast<std::size_t>(i))))
        return false;
    return true;
  };
  p.sample = [base, n](Rng& rng) {
    std::vector<Value> comps;
    for (int i = 0; i < n; ++i) comps.push_back(base.sample(rng));
    return Value::list(std::move(comps));
  };
  return p;
}

Algebra trivial_algebra(const Presentation& pres) {
  Algebra a;
  a.name = pres.signature().has_op(kInv) ? "trivial-invmonoid" : "trivial-monoid";
  a.sig = pres.signature();
  a.presentation = &pres;
  a.singleton = true;
  a.interp = [](std::string_view, std::span<const Value>) { return Value::nat(0); };
  a.equal = [](const Value&, const Value&) { return true; };
  a.sample = [](Rng&) { return Value::nat(0); };
  return a;
}

namespace {

Result<Value> parse_nat_literal(std::string_view text) {
  if (text.empty()) return Status::fail(Errc::ParseError, "empty literal");
  std::uint64_t n = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      return Status::fail(Errc::ParseError, "expected a natural number literal");
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return Value::nat(n);
}

Algebra nat_monoid(std::string name, bool mul) {
  Algebra a;
  a.name = std::move(name);
  a.sig = monoid_presentation().signature();
  a.presentation = &commutative_monoid_presentation();
  a.multiplicative_display = mul;
  a.interp = [mul](std::string_view op, std::span<const Value> args) {
    if (op == kUnit) return Value::nat(mul ? 1 : 0);
    return mul ? Value::nat(args[0].as_nat() * args[1].as_nat())
               : Value::nat(args[0].as_nat() + args[1].as_nat());
  };
  a.sample = [](Rng& rng) { return Value::nat(rng() % 16); };
  a.parse_literal = parse_nat_literal;
  return a;
}

Value reverse_value(const Value& v) {
  if (v.is_str()) {
    std::string s = v.as_str();
    std::reverse(s.begin(), s.end());
    return Value::str(std::move(s));
  }
  std::vector<Value> xs = v.as_list();
  std::reverse(xs.begin(), xs.end());
  return Value::list(std::move(xs));
}

Result<Value> parse_quoted(std::string_view text) {
  if (text.size() < 2 || text.front() != '"' || text.back() != '"')
    return Status::fail(Errc::ParseError, "expected a quoted string literal");
  std::string out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == '\\' && i + 2 < text.size()) ++i;
    out += text[i];
  }
  return Value::str(std::move(out));
}

Value sample_string(Rng& rng) {
  std::size_t len = rng() % 4;
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('a' + rng() % 4);
  return Value::str(std::move(s));
}

Value sample_list(Rng& rng) {
  std::size_t len = rng() % 4;
  std::vector<Value> xs;
  for (std::size_t i = 0; i < len; ++i) xs.push_back(Value::nat(rng() % 10));
  return Value::list(std::move(xs));
}

Result<Value> parse_bracketed(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) return Status::fail(Errc::ParseError, "expected a list literal");
    return Value::from_json(j);
  } catch (const std::exception&) {
    return Status::fail(Errc::ParseError, "malformed list literal");
  }
}

Algebra string_monoid(std::string name, bool with_reverse) {
  Algebra a;
  a.name = std::move(name);
  a.sig = with_reverse ? involutive_monoid_presentation().signature()
                       : monoid_presentation().signature();
  a.presentation = with_reverse ? &involutive_monoid_presentation() : &monoid_presentation();
  a.multiplicative_display = true;
  a.interp = [](std::string_view op, std::span<const Value> args) {
    if (op == kUnit) return Value::str("");
    if (op == kInv) return reverse_value(args[0]);
    return Value::str(args[0].as_str() + args[1].as_str());
  };
  a.sample = sample_string;
  a.parse_literal = parse_quoted;
  return a;
}

Algebra list_monoid(std::string name, bool with_reverse) {
  Algebra a;
  a.name = std::move(name);
  a.sig = with_reverse ? involutive_monoid_presentation().signature()
                       : monoid_presentation().signature();
  a.presentation = with_reverse ? &involutive_monoid_presentation() : &monoid_presentation();
  a.multiplicative_display = true;
  a.interp = [](std::string_view op, std::span<const Value> args) {
    if (op == kUnit) return Value::list({});
    if (op == kInv) return reverse_value(args[0]);
    std::vector<Value> xs = args[0].as_list();
    const auto& ys = args[1].as_list();
    xs.insert(xs.end(), ys.begin(), ys.end());
    return Value::list(std::move(xs));
  };
  a.sample = sample_list;
  a.parse_literal = parse_bracketed;
  return a;
}

Algebra mat2_monoid() {
  Algebra a;
  a.name = "mat2-mul";
  a.sig = monoid_presentation().signature();
  a.presentation = &monoid_presentation();
  a.multiplicative_display = true;
  auto mat = [](std::uint64_t a11, std::uint64_t a12, std::uint64_t a21, std::uint64_t a22) {
    return Value::list({Value::list({Value::nat(a11), Value::nat(a12)}),
                        Value::list({Value::nat(a21), Value::nat(a22)})});
  };
  auto entry = [](const Value& m, int i, int j) {
    return m.as_list().at(static_cast<std::size_t>(i)).as_list().at(static_cast<std::size_t>(j)).as_nat();
  };
  a.interp = [mat, entry](std::string_view op, std::span<const Value> args) {
    if (op == kUnit) return mat(1, 0, 0, 1);
    const Value &x = args[0], &y = args[1];
    return mat(entry(x, 0, 0) * entry(y, 0, 0) + entry(x, 0, 1) * entry(y, 1, 0),
               entry(x, 0, 0) * entry(y, 0, 1) + entry(x, 0, 1) * entry(y, 1, 1),
               entry(x, 1, 0) * entry(y, 0, 0) + entry(x, 1, 1) * entry(y, 1, 0),
               entry(x, 1, 0) * entry(y, 0, 1) + entry(x, 1, 1) * entry(y, 1, 1));
  };
  a.sample = [mat](Rng& rng) {
    return mat(rng() % 5, rng() % 5, rng() % 5, rng() % 5);
  };
  a.parse_literal = parse_bracketed;
  return a;
}

struct Registry {
  std::vector<Algebra> storage;
  std::vector<const Algebra*> ptrs;

  Registry() {
    storage.push_back(nat_monoid("nat-add", false));
    storage.push_back(nat_monoid("nat-mul", true));
    storage.push_back(list_monoid("list-concat", false));
    storage.push_back(string_monoid("str-concat", false));
    storage.push_back(mat2_monoid());
    storage.push_back(string_monoid("string-rev", true));
    storage.push_back(list_monoid("list-rev", true));
    storage.push_back(trivial_algebra(monoid_presentation()));
    storage.push_back(trivial_algebra(involutive_monoid_presentation()));
    for (const auto& a : storage) ptrs.push_back(&a);
  }
};

const Registry& registry() {
  static const Registry r;
  return r;
}

}  // namespace

const Algebra* find_algebra(std::string_view name) {
  for (const Algebra* a : registry().ptrs)
    if (a->name == name) return a;
  return nullptr;
}

const std::vector<const Algebra*>& bundled_algebras() { return registry().ptrs; }

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Ok: return "ok";
    case Errc::UnknownOp: return "unknown-op";
    case Errc::ArityMismatch: return "arity-mismatch";
    case Errc::VarOutOfScope: return "var-out-of-scope";
    case Errc::EndpointMismatch: return "endpoint-mismatch";
    case Errc::UnknownAxiom: return "unknown-axiom";
    case Errc::MissingAlgebra: return "missing-algebra";
    case Errc::SignatureMismatch: return "signature-mismatch";
    case Errc::NoCoproductRegistered: return "no-coproduct-registered";
    case Errc::NotProvable: return "not-provable";
    case Errc::Misaligned: return "misaligned";
    case Errc::ParseError: return "parse-error";
    case Errc::UnknownAlgebra: return "unknown-algebra";
    case Errc::CheckFailed: return "check-failed";
    case Errc::BadValue: return "bad-value";
    case Errc::IoError: return "io-error";
  }
  return "unknown";
}

}  // namespace frex
