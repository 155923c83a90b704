#pragma once

#include "solve/monoid.hpp"

namespace frex {

// A variable occurrence that may sit under the involution; the involutive
// frexlets are the monoid frexlets over these tagged variables.
struct TaggedVar {
  int index = 0;
  bool involuted = false;
  friend bool operator==(const TaggedVar&, const TaggedVar&) = default;
};

struct InvWord {
  std::vector<TaggedVar> vars;
  friend bool operator==(const InvWord&, const InvWord&) = default;
};

struct InvItem {
  std::optional<Value> constant;
  TaggedVar var;

  bool is_const() const { return constant.has_value(); }
  static InvItem c(Value v) { return InvItem{std::move(v), {}}; }
  static InvItem v(TaggedVar tv) { return InvItem{std::nullopt, tv}; }
};
struct InvAltList {
  std::vector<InvItem> items;
};

// Rewrites a term so the involution sits only on variables: inv
// antidistributes over products, cancels with itself, fixes the unit, and
// evaluates on constants.
Term push_involutions(const Term& t, const Algebra* base);
Proved prove_push(const Term& t, const Presentation& pres, const Algebra* base);

InvWord inorm_fral(const Term& t);
InvAltList inorm_frex(const Algebra& base, const Term& t);
Term ireify(const InvWord& w);
Term ireify(const InvAltList& a);
bool inv_alt_equal(const Algebra& base, const InvAltList& a, const InvAltList& b);

// The involution on normal forms: reverse, flip every tag, involute every
// constant. Self-inverse.
InvWord inv_nf(const InvWord& w);
InvAltList inv_nf(const Algebra& base, const InvAltList& a);

Proved prove_involutive(const Term& t, const Presentation& pres, const Algebra* base);

}  // namespace frex
