#include "doctest.h"
#include "util.hpp"

#include "solve/involutive.hpp"

using namespace frex;
using namespace frex::testing;

TEST_SUITE_BEGIN("involutive");

TEST_CASE("tagged words push the involution onto variables") {
  // y * x' * x * x * y' * x with y = var 0, x = var 1.
  Term y = V(0), x = V(1);
  Term t = M(y, M(I(x), M(x, M(x, M(I(y), x)))));
  InvWord w = inorm_fral(t);
  std::vector<TaggedVar> expect{{0, false}, {1, true}, {1, false},
                                {1, false}, {0, true}, {1, false}};
  CHECK(w.vars == expect);

  CHECK(inorm_fral(I(I(x))).vars == std::vector<TaggedVar>{{1, false}});
  CHECK(inorm_fral(I(M(x, y))).vars == std::vector<TaggedVar>{{0, true}, {1, true}});
  CHECK(inorm_fral(I(U())).vars.empty());
}

TEST_CASE("tagged alternating lists involute constants through the base") {
  // x * "hello" * y * "olleh" * x'
  Term t = M(V(0), M(S("hello"), M(V(1), M(S("olleh"), I(V(0))))));
  InvAltList a = inorm_frex(string_rev(), t);
  REQUIRE(a.items.size() == 5);
  CHECK(a.items[0].var == TaggedVar{0, false});
  CHECK(*a.items[1].constant == Value::str("hello"));
  CHECK(a.items[2].var == TaggedVar{1, false});
  CHECK(*a.items[3].constant == Value::str("olleh"));
  CHECK(a.items[4].var == TaggedVar{0, true});

  // Involuting the whole element reverses, flips and mirrors strings.
  InvAltList ia = inorm_frex(string_rev(), I(t));
  REQUIRE(ia.items.size() == 5);
  CHECK(ia.items[0].var == TaggedVar{0, false});
  CHECK(*ia.items[1].constant == Value::str("hello"));
  CHECK(ia.items[2].var == TaggedVar{1, true});
  CHECK(*ia.items[3].constant == Value::str("olleh"));
  CHECK(ia.items[4].var == TaggedVar{0, true});
  CHECK(inv_alt_equal(string_rev(), ia, inv_nf(string_rev(), a)));

  InvAltList ab = inorm_frex(string_rev(), I(S("ab")));
  REQUIRE(ab.items.size() == 1);
  CHECK(*ab.items[0].constant == Value::str("ba"));
}

TEST_CASE("inv_nf reverses, flips and is self-inverse") {
  CHECK(inv_nf(InvWord{}).vars.empty());
  InvWord w{{{0, false}, {1, true}}};
  CHECK(inv_nf(w).vars == std::vector<TaggedVar>{{1, false}, {0, true}});

  Rng rng(83);
  GenConfig cfg{&involutive_monoid_presentation(), &string_rev(), 2, 8, string_pool()};
  for (int i = 0; i < 300; ++i) {
    InvAltList a = inorm_frex(string_rev(), random_term(rng, cfg));
    CHECK(inv_alt_equal(string_rev(), inv_nf(string_rev(), inv_nf(string_rev(), a)), a));
  }
}

TEST_CASE("inv_nf is an anti-homomorphism of concatenation") {
  Rng rng(89);
  GenConfig cfg{&involutive_monoid_presentation(), nullptr, 2, 6, {}};
  for (int i = 0; i < 200; ++i) {
    Term a = random_term(rng, cfg), b = random_term(rng, cfg);
    InvWord wa = inorm_fral(a), wb = inorm_fral(b);
    InvWord cat = inorm_fral(M(a, b));
    InvWord lhs = inv_nf(cat);
    InvWord rhs = inv_nf(wb);
    for (const auto& v : inv_nf(wa).vars) rhs.vars.push_back(v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("involutive axioms discharge with single axiom instances") {
  auto fral = involutive_fral(2);
  CheckContext ctx = fral->ctx();

  auto d1 = solve_fral(*fral, Goal{2, I(I(V(0))), V(0)});
  REQUIRE(d1.has_value());
  CHECK(check(ctx, I(I(V(0))), V(0), *d1).ok());
  auto lin1 = linearize(ctx, *d1);
  REQUIRE(lin1.ok());
  CHECK(lin1.value().steps.size() == 1);
  CHECK(lin1.value().steps[0].axiom->name == "involutivity");

  auto d2 = solve_fral(*fral, Goal{2, I(M(V(0), V(1))), M(I(V(1)), I(V(0)))});
  REQUIRE(d2.has_value());
  auto lin2 = linearize(ctx, *d2);
  REQUIRE(lin2.ok());
  CHECK(lin2.value().steps.size() == 1);
  CHECK(lin2.value().steps[0].axiom->name == "antidistributivity");
}

TEST_CASE("the unit's involution is derivable") {
  auto fral = involutive_fral(1);
  auto d = solve_fral(*fral, Goal{1, I(U()), U()});
  REQUIRE(d.has_value());
  CHECK(check(fral->ctx(), I(U()), U(), *d).ok());
}

TEST_CASE("reverse-of-concatenation goals over lists discharge and check") {
  auto fx = involutive_frex(list_rev(), 2);
  CheckContext ctx = fx->ctx();
  Term ab = Term::sta(Value::list({Value::nat(1), Value::nat(2)}));
  Term ba = Term::sta(Value::list({Value::nat(2), Value::nat(1)}));
  Goal g{2, I(M(V(0), M(ab, V(1)))), M(I(V(1)), M(ba, I(V(0))))};
  auto d = solve_frex(*fx, g);
  REQUIRE(d.has_value());
  CHECK(check(ctx, g.lhs, g.rhs, *d).ok());
}

TEST_CASE("random normalization proofs pass the checker") {
  Rng rng(97);
  auto fral = involutive_fral(2);
  GenConfig cfg{&involutive_monoid_presentation(), nullptr, 2, 8, {}};
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(rng, cfg);
    CHECK(check(fral->ctx(), t, fral->reify(fral->norm(t)), fral->prove_norm(t)).ok());
  }
  auto fx = involutive_frex(string_rev(), 2);
  GenConfig fcfg{&involutive_monoid_presentation(), &string_rev(), 2, 8, string_pool()};
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(rng, fcfg);
    CHECK(check(fx->ctx(), t, fx->reify(fx->norm(t)), fx->prove_norm(t)).ok());
  }
}

TEST_CASE("normal-form equality matches the oracles on small instances") {
  Rng rng(101);
  GenConfig cfg{&involutive_monoid_presentation(), nullptr, 2, 7, {}};
  OracleConfig oc{&involutive_monoid_presentation(), nullptr, 4, 9, {}, 2500};
  int conclusive = 0;
  for (int i = 0; i < 150; ++i) {
    Goal g = (i % 3 == 0) ? random_goal(rng, cfg) : random_provable_goal(rng, cfg, 1 + i % 3);
    bool nf_eq = inorm_fral(g.lhs) == inorm_fral(g.rhs);
    CHECK(nf_eq == direct_oracle(involutive_monoid_presentation(), nullptr, g.lhs, g.rhs));
    OracleOutcome o = oracle_equal(oc, g.lhs, g.rhs);
    if (o.reached) {
      ++conclusive;
      CHECK(nf_eq);
    } else if (o.exhaustive) {
      ++conclusive;
      CHECK_FALSE(nf_eq);
    }
  }
  CHECK(conclusive > 40);
}

TEST_CASE("the list-with-reverse algebra validates all five axioms") {
  Rng rng(103);
  for (const auto& [name, eq] : involutive_monoid_presentation().axioms()) {
    INFO(name);
    CHECK(validates_random(list_rev(), eq, 1000, rng));
  }
}

TEST_SUITE_END();
