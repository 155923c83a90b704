#include "derive/linear.hpp"

#include <cstdlib>
#include <map>

namespace frex {

namespace {

// Endpoints of a step's atomic rewrite, before plugging into its context.
Result<std::pair<Term, Term>> atom_endpoints(const CheckContext& ctx, const LinStep& step,
                                             std::size_t index) {
  auto at = [index](const std::string& msg) {
    return Status::fail(Errc::CheckFailed, "step " + std::to_string(index) + ": " + msg);
  };
  if (step.axiom.has_value() == step.eval.has_value())
    return at("needs exactly one of axiom/eval");
  Term lhs = Term::var(0), rhs = Term::var(0);
  if (step.axiom) {
    const Equation* ax = ctx.pres.axiom(step.axiom->name);
    if (ax == nullptr) return at("unknown axiom " + step.axiom->name);
    if (static_cast<int>(step.axiom->subst.size()) != ax->support)
      return at("axiom " + step.axiom->name + " expects " + std::to_string(ax->support) +
                " substitution entries, got " + std::to_string(step.axiom->subst.size()));
    for (const auto& s : step.axiom->subst) {
      Status v = validate_ext_term(ctx.pres.signature(), ctx.support, s);
      if (!v.ok()) return at(v.message);
      if (!s.static_free() && ctx.algebra == nullptr) return at("constant but no algebra");
    }
    lhs = substitute(ax->lhs, step.axiom->subst);
    rhs = substitute(ax->rhs, step.axiom->subst);
  } else {
    if (ctx.algebra == nullptr) return at("evaluation step but no algebra");
    auto arity = ctx.pres.signature().arity(step.eval->op);
    if (!arity) return at("unknown op " + step.eval->op);
    if (static_cast<int>(step.eval->args.size()) != *arity)
      return at("evaluation of " + step.eval->op + " expects " + std::to_string(*arity) +
                " constants");
    std::vector<Term> args;
    for (const auto& c : step.eval->args) args.push_back(Term::sta(c));
    lhs = Term::app(step.eval->op, std::move(args));
    rhs = Term::sta(ctx.algebra->apply(step.eval->op, step.eval->args));
  }
  if (!step.forward) std::swap(lhs, rhs);
  if (step.context) {
    if (hole_count(*step.context) != 1) return at("context must have exactly one hole");
    lhs = plug(*step.context, lhs);
    rhs = plug(*step.context, rhs);
  }
  return std::pair<Term, Term>{std::move(lhs), std::move(rhs)};
}

Result<std::vector<LinStep>> lin(const CheckContext& ctx, const Derivation& d) {
  switch (d.kind()) {
    case Derivation::Kind::Refl:
      return std::vector<LinStep>{};
    case Derivation::Kind::Sym: {
      auto inner = lin(ctx, d.inner());
      if (!inner.ok()) return inner;
      std::vector<LinStep> steps = inner.take();
      std::reverse(steps.begin(), steps.end());
      for (auto& s : steps) s.forward = !s.forward;
      return steps;
    }
    case Derivation::Kind::Trans: {
      auto a = lin(ctx, d.first());
      if (!a.ok()) return a;
      auto b = lin(ctx, d.second());
      if (!b.ok()) return b;
      std::vector<LinStep> steps = a.take();
      auto more = b.take();
      steps.insert(steps.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
      return steps;
    }
    case Derivation::Kind::ByAxiom: {
      LinStep s;
      s.axiom = LinStep::AxiomInstance{d.axiom(), d.subst()};
      return std::vector<LinStep>{std::move(s)};
    }
    case Derivation::Kind::Eval: {
      LinStep s;
      s.eval = LinStep::EvalInstance{d.op(), d.consts()};
      return std::vector<LinStep>{std::move(s)};
    }
    case Derivation::Kind::Cong: {
      std::vector<std::pair<Term, Term>> ends;
      for (const auto& c : d.children()) {
        auto e = endpoints(ctx, c);
        if (!e.ok()) return e.status();
        ends.push_back(e.take());
      }
      std::vector<LinStep> steps;
      for (std::size_t i = 0; i < d.children().size(); ++i) {
        auto child = lin(ctx, d.children()[i]);
        if (!child.ok()) return child;
        // Siblings to the left already rewritten, to the right still original.
        std::vector<Term> frame;
        for (std::size_t k = 0; k < d.children().size(); ++k) {
          if (k < i)
            frame.push_back(ends[k].second);
          else if (k > i)
            frame.push_back(ends[k].first);
          else
            frame.push_back(Term::hole());
        }
        Term slot = Term::app(d.op(), std::move(frame));
        for (auto& s : child.take()) {
          s.context = plug(slot, s.context.value_or(Term::hole()));
          if (s.context->is_hole()) s.context.reset();
          steps.push_back(std::move(s));
        }
      }
      return steps;
    }
  }
  return Status::fail(Errc::BadValue, "corrupt derivation");
}

}  // namespace

Result<LinearDerivation> linearize(const CheckContext& ctx, const Derivation& d) {
  auto e = endpoints(ctx, d);
  if (!e.ok()) return e.status();
  auto steps = lin(ctx, d);
  if (!steps.ok()) return steps.status();
  return LinearDerivation{e.value().first, steps.take()};
}

Result<std::vector<Term>> trace(const CheckContext& ctx, const LinearDerivation& l) {
  std::vector<Term> run{l.start};
  for (std::size_t i = 0; i < l.steps.size(); ++i) {
    auto ends = atom_endpoints(ctx, l.steps[i], i);
    if (!ends.ok()) return ends.status();
    if (!term_equal(run.back(), ends.value().first, ctx.algebra))
      return Status::fail(Errc::Misaligned,
                          "step " + std::to_string(i) + ": expected source " +
                              ends.value().first.show() + ", run is at " + run.back().show());
    run.push_back(ends.value().second);
  }
  return run;
}

Result<LinearDerivation> remove_loops(const CheckContext& ctx, const LinearDerivation& l) {
  auto r = trace(ctx, l);
  if (!r.ok()) return r.status();
  std::vector<Term> run = r.take();
  LinearDerivation out = l;
  for (;;) {
    std::map<std::string, std::size_t> first_seen;
    std::size_t loop_start = run.size(), loop_end = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
      std::string key = run[i].show();
      auto [it, inserted] = first_seen.emplace(key, i);
      if (!inserted && it->second < loop_start) {
        loop_start = it->second;
      }
    }
    if (loop_start == run.size()) break;
    std::string key = run[loop_start].show();
    for (std::size_t i = loop_start; i < run.size(); ++i)
      if (run[i].show() == key) loop_end = i;
    out.steps.erase(out.steps.begin() + static_cast<std::ptrdiff_t>(loop_start),
                    out.steps.begin() + static_cast<std::ptrdiff_t>(loop_end));
    run.erase(run.begin() + static_cast<std::ptrdiff_t>(loop_start),
              run.begin() + static_cast<std::ptrdiff_t>(loop_end));
  }
  return out;
}

namespace {

// Rebuilds the congruence tree around `inner` along the hole path of ctx_term.
Proved wrap_context(const Term& ctx_term, Proved inner) {
  if (ctx_term.is_hole()) return inner;
  std::size_t hole_at = 0;
  for (std::size_t i = 0; i < ctx_term.args().size(); ++i)
    if (hole_count(ctx_term.args()[i]) == 1) hole_at = i;
  std::vector<Proved> children;
  for (std::size_t i = 0; i < ctx_term.args().size(); ++i) {
    if (i == hole_at)
      children.push_back(wrap_context(ctx_term.args()[i], std::move(inner)));
    else
      children.push_back(proved_refl(ctx_term.args()[i]));
  }
  return proved_cong(ctx_term.op(), std::move(children));
}

}  // namespace

Result<Derivation> replay(const CheckContext& ctx, const LinearDerivation& l) {
  auto aligned = trace(ctx, l);
  if (!aligned.ok()) return aligned.status();
  if (l.steps.empty()) return Derivation::refl(l.start);
  std::optional<Proved> acc;
  for (const auto& step : l.steps) {
    Proved atom =
        step.axiom ? proved_axiom(ctx.pres, step.axiom->name, step.axiom->subst)
                   : proved_eval(*ctx.algebra, step.eval->op, step.eval->args);
    if (!step.forward) atom = proved_sym(std::move(atom));
    if (step.context) atom = wrap_context(*step.context, std::move(atom));
    acc = acc ? proved_trans(std::move(*acc), std::move(atom), ctx.algebra) : std::move(atom);
  }
  return acc->d;
}

namespace {

std::string describe_step(const LinStep& step, DisplayStyle style, bool latex) {
  std::string by;
  if (step.axiom) {
    by = step.axiom->name;
    if (latex) by = "\\text{" + by + "}";
    by += latex ? "(" : "(";
    for (std::size_t i = 0; i < step.axiom->subst.size(); ++i) {
      if (i) by += ", ";
      by += print_term(step.axiom->subst[i], style, latex);
    }
    by += ")";
  } else {
    by = latex ? "\\text{eval}" : "eval";
    by += "(";
    by += step.eval->op == kMul ? (style.multiplicative ? "*" : "+") : step.eval->op;
    by += "; ";
    for (std::size_t i = 0; i < step.eval->args.size(); ++i) {
      if (i) by += ", ";
      by += step.eval->args[i].show();
    }
    by += ")";
  }
  std::string ctx_part;
  if (step.context) {
    ctx_part = (latex ? "[\\, " : "[ ") + print_term(*step.context, style, latex) +
               (latex ? " \\,]\\ " : " ] ");
  }
  return ctx_part + by;
}

bool ansi_enabled() {
  const char* v = std::getenv("FREX_COLOR");
  return v != nullptr && std::string_view(v) == "1";
}

}  // namespace

Result<std::string> print_steps(const CheckContext& ctx, const LinearDerivation& l,
                                ProofFormat format) {
  auto r = trace(ctx, l);
  if (!r.ok()) return r.status();
  const std::vector<Term>& run = r.value();
  DisplayStyle style = display_for(ctx.pres, ctx.algebra);
  std::string out;
  if (format == ProofFormat::Latex) {
    out += "\\begin{align*}\n";
    out += "  & " + print_term(run[0], style, true) + " \\\\\n";
    for (std::size_t i = 0; i < l.steps.size(); ++i) {
      const char* close = l.steps[i].forward ? "\\rangle" : "\\langle";
      out += "  &\\quad \\equiv\\langle " + describe_step(l.steps[i], style, true) + " " +
             close + " \\\\\n";
      out += "  & " + print_term(run[i + 1], style, true) + " \\\\\n";
    }
    out += "\\end{align*}\n";
    return out;
  }
  const bool color = ansi_enabled();
  out += print_term(run[0], style);
  for (std::size_t i = 0; i < l.steps.size(); ++i) {
    std::string ann = describe_step(l.steps[i], style, false);
    if (color) ann = "\033[36m" + ann + "\033[0m";
    out += "\n  \u2261\u27e8 " + ann + (l.steps[i].forward ? " \u27e9" : " \u27e8");
    out += "\n" + print_term(run[i + 1], style);
  }
  out += "\n";
  return out;
}

}  // namespace frex
