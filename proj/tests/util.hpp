#pragma once

#include "gen.hpp"

// Terse builders shared by the test files.
namespace frex::testing {

inline Term V(int i) { return Term::var(i); }
inline Term N(std::uint64_t n) { return Term::sta(Value::nat(n)); }
inline Term S(const char* s) { return Term::sta(Value::str(s)); }
inline Term U() { return unit_term(); }
inline Term M(Term a, Term b) { return mul(std::move(a), std::move(b)); }
inline Term I(Term a) { return inv(std::move(a)); }

inline const Algebra& nat_add() { return *find_algebra("nat-add"); }
inline const Algebra& nat_mul() { return *find_algebra("nat-mul"); }
inline const Algebra& list_concat() { return *find_algebra("list-concat"); }
inline const Algebra& string_rev() { return *find_algebra("string-rev"); }
inline const Algebra& list_rev() { return *find_algebra("list-rev"); }
inline const Algebra& mat2_mul() { return *find_algebra("mat2-mul"); }

}  // namespace frex::testing
