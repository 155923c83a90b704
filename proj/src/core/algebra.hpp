#pragma once

#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/presentation.hpp"

namespace frex {

using Env = std::vector<Value>;
using Rng = std::mt19937;

// A concrete model: a carrier (some subset of Value) with a total
// interpretation for every signature op, decidable equality, and a sampler
// used by the validity testing aids.
struct Algebra {
  std::string name;  // registry key; empty for ad-hoc constructions
  Signature sig;
  const Presentation* presentation = nullptr;  // declared theory
  std::function<Value(std::string_view op, std::span<const Value> args)> interp;
  std::function<bool(const Value&, const Value&)> equal;  // structural if unset
  std::function<Value(Rng&)> sample;
  std::function<Result<Value>(std::string_view)> parse_literal;
  bool multiplicative_display = false;
  bool singleton = false;  // one-point carrier (initial algebra)

  Value apply(std::string_view op, std::span<const Value> args) const {
    return interp(op, args);
  }
  Value unit_value() const { return interp(kUnit, {}); }
  bool values_equal(const Value& a, const Value& b) const {
    return equal ? equal(a, b) : a == b;
  }
};

// Homomorphic extension: folds a term in the algebra under an environment.
// Sta leaves evaluate to their own constant. The term must be well-formed.
Value bind(const Algebra& alg, const Env& env, const Term& t);

// Samples whether `eq` holds in `alg` on each of the given environments.
// A testing aid only; never part of proof checking.
bool validates(const Algebra& alg, const Equation& eq, std::span<const Env> sample);

// Convenience: `count` sampled environments drawn with alg.sample.
bool validates_random(const Algebra& alg, const Equation& eq, int count, Rng& rng);

// n-tuples of alg's carrier with pointwise operations.
Algebra power(const Algebra& alg, int n);

// One-point model of the given presentation (the initial algebra for the
// monoid varieties).
Algebra trivial_algebra(const Presentation& pres);

// Bundled algebras, by registry name: nat-add, nat-mul, list-concat,
// str-concat, mat2-mul (monoid/cmonoid models); string-rev, list-rev
// (involutive models); trivial-monoid, trivial-invmonoid.
const Algebra* find_algebra(std::string_view name);
const std::vector<const Algebra*>& bundled_algebras();

}  // namespace frex
