#pragma once

#include "solve/frexlet.hpp"

namespace frex {

// Fral normal form for monoids: the word of variable occurrences.
struct Word {
  std::vector<int> vars;
  friend bool operator==(const Word&, const Word&) = default;
};

// Frex normal form: an alternating list of base constants and variables.
// Canonical: no constant equals the base unit, no two adjacent constants.
struct AltItem {
  std::optional<Value> constant;  // set = constant item
  int var = -1;

  bool is_const() const { return constant.has_value(); }
  static AltItem c(Value v) { return AltItem{std::move(v), -1}; }
  static AltItem v(int index) { return AltItem{std::nullopt, index}; }
};
struct AltList {
  std::vector<AltItem> items;
};

Word mnorm_fral(const Term& t);
AltList mnorm_frex(const Algebra& base, const Term& t);
Term mreify(const Word& w);
Term mreify(const AltList& a);
bool alt_equal(const Algebra& base, const AltList& a, const AltList& b);

// --- Chain engine -----------------------------------------------------
//
// The flattening machinery, shared with the involutive frexlets: a chain is
// the canonical flattening of a term over {*, 1} into constants and atomic
// leaves, where a leaf is any other subterm (a variable, or an involuted
// variable after the involutive pre-pass). Proof emission happens during
// the same folds.

struct ChainItem {
  std::optional<Value> constant;
  std::optional<Term> leaf;

  bool is_const() const { return constant.has_value(); }
  static ChainItem c(Value v) { return ChainItem{std::move(v), std::nullopt}; }
  static ChainItem l(Term t) { return ChainItem{std::nullopt, std::move(t)}; }
};
using Chain = std::vector<ChainItem>;

Chain chain_of(const Term& t, const Algebra* base);
Chain chain_concat(const Chain& a, const Chain& b, const Algebra* base);
Term reify_chain(const Chain& c);
bool chain_equal(const Chain& a, const Chain& b, const Algebra* base);

// Proves t = reify_chain(chain_of(t)) with neutrality/associativity steps
// and, in the frex case, evaluation folds.
Proved prove_chain(const Term& t, const Presentation& pres, const Algebra* base);

}  // namespace frex
