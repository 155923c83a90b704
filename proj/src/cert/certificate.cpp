#include "cert/certificate.hpp"

namespace frex {

nlohmann::ordered_json step_to_json(const LinStep& step) {
  nlohmann::ordered_json j;
  j["context"] = step.context ? step.context->to_json() : nlohmann::ordered_json(nullptr);
  j["dir"] = step.forward ? "fwd" : "bwd";
  nlohmann::ordered_json by;
  if (step.axiom) {
    by["axiom"] = step.axiom->name;
    nlohmann::ordered_json subst = nlohmann::ordered_json::array();
    for (const auto& t : step.axiom->subst) subst.push_back(t.to_json());
    by["subst"] = std::move(subst);
  } else {
    nlohmann::ordered_json ev;
    ev["op"] = step.eval->op;
    nlohmann::ordered_json args = nlohmann::ordered_json::array();
    for (const auto& v : step.eval->args) args.push_back(v.to_json());
    ev["args"] = std::move(args);
    by["eval"] = std::move(ev);
  }
  j["by"] = std::move(by);
  return j;
}

Result<LinStep> step_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dir") || !j.contains("by"))
    return Status::fail(Errc::ParseError, "malformed step");
  LinStep step;
  if (j.contains("context") && !j["context"].is_null()) {
    auto c = Term::from_json(j["context"]);
    if (!c.ok()) return c.status();
    Term ctx = c.take();
    if (!ctx.is_hole()) step.context = std::move(ctx);
  }
  std::string dir = j["dir"].get<std::string>();
  if (dir != "fwd" && dir != "bwd")
    return Status::fail(Errc::ParseError, "step dir must be fwd or bwd");
  step.forward = dir == "fwd";
  const auto& by = j["by"];
  if (by.contains("axiom")) {
    LinStep::AxiomInstance ax;
    ax.name = by["axiom"].get<std::string>();
    if (by.contains("subst")) {
      for (const auto& s : by["subst"]) {
        auto t = Term::from_json(s);
        if (!t.ok()) return t.status();
        ax.subst.push_back(t.take());
      }
    }
    step.axiom = std::move(ax);
  } else if (by.contains("eval")) {
    LinStep::EvalInstance ev;
    const auto& e = by["eval"];
    if (!e.is_object() || !e.contains("op") || !e.contains("args"))
      return Status::fail(Errc::ParseError, "malformed eval step");
    ev.op = e["op"].get<std::string>();
    for (const auto& a : e["args"]) {
      try {
        ev.args.push_back(Value::from_json(a));
      } catch (const std::exception& ex) {
        return Status::fail(Errc::ParseError, ex.what());
      }
    }
    step.eval = std::move(ev);
  } else {
    return Status::fail(Errc::ParseError, "step justification must be axiom or eval");
  }
  return step;
}

std::string emit_certificate(const Goal& goal, const LinearDerivation& proof,
                             const Presentation& pres, std::string_view algebra_id,
                             std::string_view note) {
  nlohmann::ordered_json j;
  j["presentation"] = pres.to_json();
  if (!algebra_id.empty()) j["algebra"] = std::string(algebra_id);
  nlohmann::ordered_json g;
  g["support"] = goal.support;
  g["lhs"] = goal.lhs.to_json();
  g["rhs"] = goal.rhs.to_json();
  j["goal"] = std::move(g);
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : proof.steps) steps.push_back(step_to_json(s));
  j["steps"] = std::move(steps);
  nlohmann::ordered_json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  if (!note.empty()) meta["note"] = std::string(note);
  j["meta"] = std::move(meta);
  return j.dump(2) + "\n";
}

Result<Certificate> parse_certificate(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const std::exception& e) {
    return Status::fail(Errc::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("presentation") || !j.contains("goal") ||
      !j.contains("steps"))
    return Status::fail(Errc::ParseError, "certificate needs presentation, goal and steps");
  Certificate cert;
  auto p = Presentation::from_json(j["presentation"]);
  if (!p.ok()) return p.status();
  cert.pres = p.take();
  if (j.contains("algebra")) {
    if (!j["algebra"].is_string())
      return Status::fail(Errc::ParseError, "algebra must be a registry name");
    cert.algebra = j["algebra"].get<std::string>();
  }
  const auto& g = j["goal"];
  if (!g.is_object() || !g.contains("support") || !g.contains("lhs") || !g.contains("rhs"))
    return Status::fail(Errc::ParseError, "malformed goal");
  auto lhs = Term::from_json(g["lhs"]);
  if (!lhs.ok()) return lhs.status();
  auto rhs = Term::from_json(g["rhs"]);
  if (!rhs.ok()) return rhs.status();
  cert.goal = Goal{g["support"].get<int>(), lhs.take(), rhs.take()};
  for (const auto& s : j["steps"]) {
    auto st = step_from_json(s);
    if (!st.ok()) return st.status();
    cert.proof.steps.push_back(st.take());
  }
  cert.proof.start = cert.goal.lhs;
  if (j.contains("meta") && j["meta"].contains("note"))
    cert.note = j["meta"]["note"].get<std::string>();
  return cert;
}

Status check_certificate(std::string_view bytes) {
  auto parsed = parse_certificate(bytes);
  if (!parsed.ok()) return parsed.status();
  const Certificate& cert = parsed.value();

  const Algebra* alg = nullptr;
  if (!cert.algebra.empty()) {
    alg = find_algebra(cert.algebra);
    if (alg == nullptr)
      return Status::fail(Errc::UnknownAlgebra, "no algebra named " + cert.algebra);
    if (alg->sig != cert.pres.signature())
      return Status::fail(Errc::SignatureMismatch,
                          "algebra " + cert.algebra + " does not match the presentation signature");
  }
  CheckContext ctx{cert.pres, cert.goal.support, alg};
  Status wf = validate_goal(cert.pres.signature(), cert.goal);
  if (!wf.ok()) return wf;
  if ((!cert.goal.lhs.static_free() || !cert.goal.rhs.static_free()) && alg == nullptr)
    return Status::fail(Errc::MissingAlgebra, "goal has constants but no algebra is named");

  auto d = replay(ctx, cert.proof);
  if (!d.ok())
    return Status::fail(Errc::CheckFailed,
                        std::string(errc_name(d.status().code)) + ": " + d.status().message);
  Status ok = check(ctx, cert.goal.lhs, cert.goal.rhs, d.value());
  if (!ok.ok())
    return Status::fail(Errc::CheckFailed, std::string(errc_name(ok.code)) + ": " + ok.message);
  return Status::success();
}

}  // namespace frex
