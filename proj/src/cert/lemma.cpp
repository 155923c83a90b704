#include "cert/lemma.hpp"

namespace frex {

Result<Lemma> mk_lemma(const Fral& f, std::string name, const Goal& g) {
  if (!g.lhs.static_free() || !g.rhs.static_free())
    return Status::fail(Errc::BadValue, "lemmas must be constant-free");
  auto d = solve_fral(f, g);
  if (!d)
    return Status::fail(Errc::NotProvable,
                        "the equation is not provable in theory " + f.pres().name());
  return Lemma{std::move(name), Equation{g.support, g.lhs, g.rhs}, std::move(*d)};
}

Result<std::string> lemma_certificate(const Fral& f, const Lemma& lemma) {
  CheckContext ctx = f.ctx();
  auto linear = linearize(ctx, lemma.proof);
  if (!linear.ok()) return linear.status();
  auto pruned = remove_loops(ctx, linear.value());
  if (!pruned.ok()) return pruned.status();
  Goal g{lemma.eq.support, lemma.eq.lhs, lemma.eq.rhs};
  std::string algebra_id = ctx.algebra ? ctx.algebra->name : "";
  return emit_certificate(g, pruned.value(), f.pres(), algebra_id, lemma.name);
}

}  // namespace frex
