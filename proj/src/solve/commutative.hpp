#pragma once

#include "solve/frexlet.hpp"

namespace frex {

// Fral normal form for commutative monoids: one occurrence count per
// variable of the context.
using CoeffVec = std::vector<std::uint64_t>;

// Frex normal form: a degree-one polynomial over the base algebra.
struct LinPoly {
  Value constant;
  CoeffVec coeffs;
};

CoeffVec cnorm_fral(const Term& t, int support);
LinPoly cnorm_frex(const Algebra& base, const Term& t, int support);

// Canonical reification: constant first (omitted when it is the unit and
// some coefficient is nonzero), then variables in ascending index order,
// each repeated coefficient-many times, right-nested. A zero vector reifies
// to the unit term (fral) or to the bare constant (frex).
Term creify(const CoeffVec& v);
Term creify(const Algebra& base, const LinPoly& p);

bool lin_equal(const Algebra& base, const LinPoly& a, const LinPoly& b);

// Proves t = creify(norm(t)); pass base = nullptr for the fral.
Proved prove_linear(const Term& t, const Presentation& pres, const Algebra* base, int support);

// Coproduct of two commutative-monoid models: carrier pairs with
// componentwise operations.
Result<Algebra> coproduct_cm(const Algebra& a, const Algebra& b);
Value cm_inject_left(const Algebra& a, const Algebra& b, const Value& v);
Value cm_inject_right(const Algebra& a, const Algebra& b, const Value& v);

// The registered coproduct construction for commutative monoids.
const CoproductConstruction& commutative_coproduct();

}  // namespace frex
