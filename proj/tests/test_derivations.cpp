#include "doctest.h"
#include "util.hpp"

using namespace frex;
using namespace frex::testing;

TEST_SUITE_BEGIN("derivations");

namespace {

CheckContext fral_ctx(const Presentation& p, int support) {
  return CheckContext{p, support, nullptr};
}

}  // namespace

TEST_CASE("axiom instances check against their equations") {
  CheckContext ctx = fral_ctx(monoid_presentation(), 1);
  Derivation d = Derivation::by_axiom("lftNeutrality", {V(0)});
  CHECK(check(ctx, M(U(), V(0)), V(0), d).ok());
  CHECK(check(ctx, V(0), M(U(), V(0)), d).code == Errc::EndpointMismatch);
}

TEST_CASE("reflexivity needs syntactically equal endpoints") {
  CheckContext ctx = fral_ctx(monoid_presentation(), 2);
  Term t = M(V(0), V(1));
  CHECK(check(ctx, t, t, Derivation::refl(t)).ok());
  Status s = check(ctx, t, M(V(1), V(0)), Derivation::refl(t));
  CHECK(s.code == Errc::EndpointMismatch);
}

TEST_CASE("evaluation steps fold constants with the registered algebra") {
  CheckContext ctx{monoid_presentation(), 0, &nat_add()};
  Derivation d = Derivation::eval(kMul, {Value::nat(3), Value::nat(2)});
  CHECK(check(ctx, M(N(3), N(2)), N(5), d).ok());
  CHECK_FALSE(check(ctx, M(N(3), N(2)), N(6), d).ok());
  // Without an algebra the step is meaningless.
  CheckContext bare = fral_ctx(monoid_presentation(), 0);
  auto e = endpoints(bare, d);
  CHECK_FALSE(e.ok());
  CHECK(e.status().code == Errc::MissingAlgebra);
}

TEST_CASE("endpoints computes the proven equation bottom-up") {
  CheckContext ctx = fral_ctx(monoid_presentation(), 3);
  Term t = M(V(0), V(1));
  auto r = endpoints(ctx, Derivation::refl(t));
  REQUIRE(r.ok());
  CHECK(r.value().first == t);
  CHECK(r.value().second == t);

  auto s = endpoints(ctx, Derivation::sym(Derivation::by_axiom("lftNeutrality", {V(0)})));
  REQUIRE(s.ok());
  CHECK(s.value().first == V(0));
  CHECK(s.value().second == M(U(), V(0)));

  Term x = V(0), y = V(1), z = V(2);
  Derivation chain = Derivation::trans(Derivation::by_axiom("associativity", {x, y, z}),
                                       Derivation::refl(M(x, M(y, z))));
  auto c = endpoints(ctx, chain);
  REQUIRE(c.ok());
  CHECK(c.value().first == M(M(x, y), z));
  CHECK(c.value().second == M(x, M(y, z)));
}

TEST_CASE("transitivity endpoints must meet") {
  CheckContext ctx = fral_ctx(monoid_presentation(), 2);
  Derivation bad = Derivation::trans(Derivation::refl(V(0)), Derivation::refl(V(1)));
  auto e = endpoints(ctx, bad);
  CHECK_FALSE(e.ok());
  CHECK(e.status().code == Errc::EndpointMismatch);
}

TEST_CASE("ill-formed trees are diagnosed") {
  CheckContext ctx = fral_ctx(monoid_presentation(), 1);
  CHECK(endpoints(ctx, Derivation::by_axiom("commutativity", {V(0), V(0)})).status().code ==
        Errc::UnknownAxiom);
  CHECK(endpoints(ctx, Derivation::by_axiom("associativity", {V(0)})).status().code ==
        Errc::ArityMismatch);
  CHECK(endpoints(ctx, Derivation::cong(kMul, {Derivation::refl(V(0))})).status().code ==
        Errc::ArityMismatch);
  CHECK(endpoints(ctx, Derivation::cong("nope", {})).status().code == Errc::UnknownOp);
  CHECK(endpoints(ctx, Derivation::refl(V(5))).status().code == Errc::VarOutOfScope);
}

TEST_CASE("symmetry swaps exactly") {
  Rng rng(31);
  GenConfig cfg{&monoid_presentation(), nullptr, 3, 8, {}};
  auto fral = monoid_fral(3);
  CheckContext ctx = fral->ctx();
  int produced = 0;
  while (produced < 50) {
    Goal g = random_provable_goal(rng, cfg, 3);
    auto d = solve_fral(*fral, g);
    REQUIRE(d.has_value());
    ++produced;
    CHECK(check(ctx, g.lhs, g.rhs, *d).ok());
    CHECK(check(ctx, g.rhs, g.lhs, Derivation::sym(*d)).ok());
    CHECK(check(ctx, g.rhs, g.lhs, *d).ok() == (g.lhs == g.rhs));
  }
}

namespace {

// One random structural mutation of a derivation tree.
Derivation mutate(Rng& rng, const Derivation& d, bool& changed) {
  if (changed) return d;
  switch (d.kind()) {
    case Derivation::Kind::ByAxiom:
      if (rng() % 3 == 0) {
        changed = true;
        std::string other = d.axiom() == "lftNeutrality" ? "rgtNeutrality" : "lftNeutrality";
        if (d.axiom() == "associativity") {
          // Permute the substitution instead.
          std::vector<Term> subst = d.subst();
          std::swap(subst[0], subst[2]);
          return Derivation::by_axiom(d.axiom(), std::move(subst));
        }
        std::vector<Term> subst = d.subst();
        subst.resize(1, V(0));
        return Derivation::by_axiom(other, std::move(subst));
      }
      return d;
    case Derivation::Kind::Trans:
      if (rng() % 4 == 0) {
        changed = true;
        return rng() % 2 ? d.first() : d.second();  // drop a leg
      }
      return Derivation::trans(mutate(rng, d.first(), changed),
                               mutate(rng, d.second(), changed));
    case Derivation::Kind::Cong: {
      if (d.children().size() == 2 && rng() % 4 == 0) {
        changed = true;
        return Derivation::cong(d.op(), {d.children()[1], d.children()[0]});
      }
      std::vector<Derivation> kids;
      for (const auto& c : d.children()) kids.push_back(mutate(rng, c, changed));
      return Derivation::cong(d.op(), std::move(kids));
    }
    case Derivation::Kind::Sym:
      return Derivation::sym(mutate(rng, d.inner(), changed));
    default:
      return d;
  }
}

}  // namespace

TEST_CASE("structural fuzz: mutations are rejected unless semantically neutral") {
  Rng rng(37);
  GenConfig cfg{&monoid_presentation(), nullptr, 3, 8, {}};
  auto fral = monoid_fral(3);
  CheckContext ctx = fral->ctx();
  int mutated = 0;
  for (int i = 0; i < 400 && mutated < 120; ++i) {
    Goal g = random_provable_goal(rng, cfg, 3);
    auto d = solve_fral(*fral, g);
    REQUIRE(d.has_value());
    bool changed = false;
    Derivation m = mutate(rng, *d, changed);
    if (!changed) continue;
    ++mutated;
    Status s = check(ctx, g.lhs, g.rhs, m);
    if (s.ok()) {
      // Accepted mutations must still prove exactly the same equation.
      auto e = endpoints(ctx, m);
      REQUIRE(e.ok());
      CHECK(e.value().first == g.lhs);
      CHECK(e.value().second == g.rhs);
    }
  }
  CHECK(mutated >= 100);
}

TEST_SUITE_END();
