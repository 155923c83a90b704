#include <set>

#include "doctest.h"
#include "util.hpp"

#include "cert/lemma.hpp"

using namespace frex;
using namespace frex::testing;

TEST_SUITE_BEGIN("certificate");

namespace {

struct GoldenCert {
  std::string name;
  std::string bytes;
};

std::string solve_to_cert(const Presentation& pres, const Algebra* alg, const Goal& g,
                          const char* note) {
  CheckContext ctx{pres, g.support, alg};
  std::optional<Derivation> d;
  if (alg != nullptr) {
    auto fx = make_frex(pres, *alg, g.support);
    REQUIRE(fx.ok());
    d = solve_frex(*fx.value(), g);
  } else {
    auto fr = make_fral(pres, g.support);
    REQUIRE(fr.ok());
    d = solve_fral(*fr.value(), g);
  }
  REQUIRE(d.has_value());
  auto lin = linearize(ctx, *d);
  REQUIRE(lin.ok());
  auto pruned = remove_loops(ctx, lin.value());
  REQUIRE(pruned.ok());
  return emit_certificate(g, pruned.value(), pres, alg ? alg->name : "", note);
}

std::vector<GoldenCert> golden_certificates() {
  std::vector<GoldenCert> out;
  out.push_back({"unitSandwich",
                 solve_to_cert(monoid_presentation(), nullptr,
                               Goal{1, M(M(U(), M(V(0), U())), U()), V(0)}, "unitSandwich")});
  out.push_back({"foldRight", solve_to_cert(monoid_presentation(), &nat_add(),
                                            Goal{1, M(M(V(0), N(3)), N(2)), M(V(0), N(5))}, "")});
  out.push_back({"foldCommute", solve_to_cert(commutative_monoid_presentation(), &nat_add(),
                                              Goal{1, M(M(V(0), N(3)), N(2)), M(N(5), V(0))}, "")});
  out.push_back({"agdaEx",
                 solve_to_cert(commutative_monoid_presentation(), &nat_add(),
                               Goal{2, M(M(N(2), V(0)), M(V(1), N(3))), M(V(0), M(V(1), N(5)))},
                               "")});
  out.push_back({"invInv", solve_to_cert(involutive_monoid_presentation(), nullptr,
                                         Goal{1, I(I(V(0))), V(0)}, "")});
  out.push_back({"antidist",
                 solve_to_cert(involutive_monoid_presentation(), nullptr,
                               Goal{2, I(M(V(0), V(1))), M(I(V(1)), I(V(0)))}, "")});
  out.push_back({"strRev",
                 solve_to_cert(involutive_monoid_presentation(), &string_rev(),
                               Goal{2, I(M(V(0), M(S("ab"), V(1)))),
                                    M(I(V(1)), M(S("ba"), I(V(0))))},
                               "")});
  return out;
}

}  // namespace

TEST_CASE("emitting is deterministic and round trips byte-for-byte") {
  for (const auto& cert : golden_certificates()) {
    auto parsed = parse_certificate(cert.bytes);
    REQUIRE_MESSAGE(parsed.ok(), cert.name);
    std::string again =
        emit_certificate(parsed.value().goal, parsed.value().proof, parsed.value().pres,
                         parsed.value().algebra, parsed.value().note);
    CHECK_MESSAGE(again == cert.bytes, cert.name);
  }
}

TEST_CASE("every golden certificate verifies") {
  for (const auto& cert : golden_certificates()) {
    Status s = check_certificate(cert.bytes);
    CHECK_MESSAGE(s.ok(), cert.name << ": " << s.message);
  }
}

TEST_CASE("frex certificates name their algebra and keep evaluation steps") {
  std::string bytes = solve_to_cert(monoid_presentation(), &nat_add(),
                                    Goal{1, M(M(V(0), N(3)), N(2)), M(V(0), N(5))}, "");
  auto j = nlohmann::json::parse(bytes);
  CHECK(j["algebra"] == "nat-add");
  int evals = 0;
  for (const auto& s : j["steps"])
    if (s["by"].contains("eval")) ++evals;
  CHECK(evals >= 1);

  // Constant-free proofs omit the algebra field.
  std::string fral_bytes = solve_to_cert(monoid_presentation(), nullptr,
                                         Goal{1, M(M(U(), M(V(0), U())), U()), V(0)}, "lemma");
  auto jf = nlohmann::json::parse(fral_bytes);
  CHECK_FALSE(jf.contains("algebra"));
  CHECK(jf["meta"]["note"] == "lemma");
}

namespace {

int count_rejections(const std::string& bytes) {
  auto base = nlohmann::json::parse(bytes);
  int mutations = 0, rejected = 0;
  auto try_mutated = [&](nlohmann::json mutated) {
    ++mutations;
    if (!check_certificate(mutated.dump()).ok()) ++rejected;
  };

  // Goal side swap, proof left alone.
  {
    nlohmann::json m = base;
    std::swap(m["goal"]["lhs"], m["goal"]["rhs"]);
    Status s = check_certificate(m.dump());
    ++mutations;
    if (!s.ok()) ++rejected;
  }
  std::vector<std::string> axiom_names;
  for (const auto& ax : base["presentation"]["axioms"])
    axiom_names.push_back(ax["name"].get<std::string>());
  for (std::size_t i = 0; i < base["steps"].size(); ++i) {
    const auto& step = base["steps"][i];
    // Direction flip.
    {
      nlohmann::json m = base;
      m["steps"][i]["dir"] = step["dir"] == "fwd" ? "bwd" : "fwd";
      try_mutated(std::move(m));
    }
    if (step["by"].contains("axiom")) {
      // Swap to a different axiom of the same presentation.
      std::string cur = step["by"]["axiom"].get<std::string>();
      for (const auto& other : axiom_names) {
        if (other == cur) continue;
        nlohmann::json m = base;
        m["steps"][i]["by"]["axiom"] = other;
        try_mutated(std::move(m));
        break;
      }
      // Tweak one substitution entry.
      if (!step["by"]["subst"].empty()) {
        nlohmann::json m = base;
        auto entry = m["steps"][i]["by"]["subst"][0];
        m["steps"][i]["by"]["subst"][0] = {
            {"app", "*"},
            {"args", nlohmann::json::array({entry, nlohmann::json{{"app", "1"}, {"args", nlohmann::json::array()}}})}};
        try_mutated(std::move(m));
      }
    }
  }
  CHECK(mutations > 1);
  return mutations - rejected;  // number of accepted mutations
}

}  // namespace

TEST_CASE("single-field tampering is rejected across the golden suite") {
  for (const auto& cert : golden_certificates()) {
    INFO(cert.name);
    CHECK(count_rejections(cert.bytes) == 0);
  }
}

TEST_CASE("goal side swap reports an endpoint mismatch") {
  std::string bytes = solve_to_cert(monoid_presentation(), nullptr,
                                    Goal{1, M(M(U(), M(V(0), U())), U()), V(0)}, "");
  auto m = nlohmann::json::parse(bytes);
  std::swap(m["goal"]["lhs"], m["goal"]["rhs"]);
  Status s = check_certificate(m.dump());
  CHECK(s.code == Errc::CheckFailed);
  bool mentions = s.message.find("endpoint-mismatch") != std::string::npos ||
                  s.message.find("step") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("parse failures and unknown algebras are reported") {
  CHECK(check_certificate("not json").code == Errc::ParseError);
  CHECK(check_certificate("{}").code == Errc::ParseError);
  std::string bytes = solve_to_cert(monoid_presentation(), &nat_add(),
                                    Goal{1, M(M(V(0), N(3)), N(2)), M(V(0), N(5))}, "");
  auto m = nlohmann::json::parse(bytes);
  m["algebra"] = "no-such-algebra";
  CHECK(check_certificate(m.dump()).code == Errc::UnknownAlgebra);
}

TEST_CASE("mk_lemma packages solver results") {
  auto fral = monoid_fral(1);
  auto lemma = mk_lemma(*fral, "unitSandwich", Goal{1, M(M(U(), M(V(0), U())), U()), V(0)});
  REQUIRE(lemma.ok());
  CHECK(lemma.value().name == "unitSandwich");
  CHECK(check(fral->ctx(), lemma.value().eq.lhs, lemma.value().eq.rhs, lemma.value().proof).ok());

  auto cert = lemma_certificate(*fral, lemma.value());
  REQUIRE(cert.ok());
  CHECK(check_certificate(cert.value()).ok());
  auto j = nlohmann::json::parse(cert.value());
  CHECK(j["meta"]["note"] == "unitSandwich");

  auto fral2 = monoid_fral(2);
  auto nope = mk_lemma(*fral2, "comm", Goal{2, M(V(0), V(1)), M(V(1), V(0))});
  CHECK_FALSE(nope.ok());
  CHECK(nope.status().code == Errc::NotProvable);

  Term t = M(V(0), V(1));
  auto triv = mk_lemma(*fral2, "same", Goal{2, t, t});
  REQUIRE(triv.ok());
  CHECK(check(fral2->ctx(), t, t, triv.value().proof).ok());
}

TEST_SUITE_END();
