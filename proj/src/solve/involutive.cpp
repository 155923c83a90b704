#include "solve/involutive.hpp"

#include <stdexcept>

namespace frex {

namespace {

Term push(const Term& t, bool inverted, const Algebra* base) {
  if (t.is_var()) return inverted ? inv(t) : t;
  if (t.is_sta()) {
    if (!inverted) return t;
    if (base == nullptr) throw std::invalid_argument("constant in a plain term");
    return Term::sta(base->apply(kInv, std::vector<Value>{t.constant()}));
  }
  if (t.is_app_of(kUnit)) return t;
  if (t.is_app_of(kInv)) return push(t.args()[0], !inverted, base);
  if (t.is_app_of(kMul)) {
    Term l = push(t.args()[0], inverted, base);
    Term r = push(t.args()[1], inverted, base);
    return inverted ? mul(std::move(r), std::move(l)) : mul(std::move(l), std::move(r));
  }
  throw std::invalid_argument("not an involutive-monoid term: " + t.show());
}

// inv(1) = 1 from the five axioms.
Proved inv_unit_proof(const Presentation& pres, const Algebra* alg) {
  const Term one = unit_term();
  const Term invOne = inv(one);
  Proved acc = proved_sym(proved_axiom(pres, "lftNeutrality", {invOne}));
  acc = proved_trans(std::move(acc),
                     proved_cong1(kMul, {one, invOne}, 0,
                                  proved_sym(proved_axiom(pres, "involutivity", {one}))),
                     alg);
  acc = proved_trans(std::move(acc),
                     proved_sym(proved_axiom(pres, "antidistributivity", {one, invOne})), alg);
  acc = proved_trans(std::move(acc),
                     proved_cong(kInv, {proved_axiom(pres, "lftNeutrality", {invOne})}), alg);
  return proved_trans(std::move(acc), proved_axiom(pres, "involutivity", {one}), alg);
}

}  // namespace

Term push_involutions(const Term& t, const Algebra* base) { return push(t, false, base); }

Proved prove_push(const Term& t, const Presentation& pres, const Algebra* base) {
  if (t.is_app_of(kMul))
    return proved_cong(kMul, {prove_push(t.args()[0], pres, base),
                              prove_push(t.args()[1], pres, base)});
  if (t.is_app_of(kInv)) {
    const Term& s = t.args()[0];
    if (s.is_var()) return proved_refl(t);
    if (s.is_sta()) {
      if (base == nullptr) throw std::invalid_argument("constant in a plain term");
      return proved_eval(*base, kInv, {s.constant()});
    }
    if (s.is_app_of(kUnit)) return inv_unit_proof(pres, base);
    if (s.is_app_of(kInv)) {
      Proved cancel = proved_axiom(pres, "involutivity", {s.args()[0]});
      return proved_trans(std::move(cancel), prove_push(s.args()[0], pres, base), base);
    }
    if (s.is_app_of(kMul)) {
      const Term &a = s.args()[0], &b = s.args()[1];
      Proved flip = proved_axiom(pres, "antidistributivity", {a, b});
      Proved rec = proved_cong(kMul, {prove_push(inv(b), pres, base),
                                      prove_push(inv(a), pres, base)});
      return proved_trans(std::move(flip), std::move(rec), base);
    }
    throw std::invalid_argument("not an involutive-monoid term: " + t.show());
  }
  return proved_refl(t);
}

namespace {

TaggedVar leaf_tag(const Term& leaf) {
  if (leaf.is_var()) return TaggedVar{leaf.index(), false};
  if (leaf.is_app_of(kInv) && leaf.args()[0].is_var())
    return TaggedVar{leaf.args()[0].index(), true};
  throw std::logic_error("involution not fully pushed: " + leaf.show());
}

Term tag_term(const TaggedVar& tv) {
  Term v = Term::var(tv.index);
  return tv.involuted ? inv(std::move(v)) : v;
}

Chain inv_chain(const InvAltList& a) {
  Chain c;
  for (const auto& it : a.items) {
    if (it.is_const())
      c.push_back(ChainItem::c(*it.constant));
    else
      c.push_back(ChainItem::l(tag_term(it.var)));
  }
  return c;
}

}  // namespace

InvWord inorm_fral(const Term& t) {
  InvWord w;
  for (const auto& it : chain_of(push_involutions(t, nullptr), nullptr))
    w.vars.push_back(leaf_tag(*it.leaf));
  return w;
}

InvAltList inorm_frex(const Algebra& base, const Term& t) {
  InvAltList a;
  for (const auto& it : chain_of(push_involutions(t, &base), &base)) {
    if (it.is_const())
      a.items.push_back(InvItem::c(*it.constant));
    else
      a.items.push_back(InvItem::v(leaf_tag(*it.leaf)));
  }
  return a;
}

Term ireify(const InvWord& w) {
  Chain c;
  for (const auto& tv : w.vars) c.push_back(ChainItem::l(tag_term(tv)));
  return reify_chain(c);
}

Term ireify(const InvAltList& a) { return reify_chain(inv_chain(a)); }

bool inv_alt_equal(const Algebra& base, const InvAltList& a, const InvAltList& b) {
  return chain_equal(inv_chain(a), inv_chain(b), &base);
}

InvWord inv_nf(const InvWord& w) {
  InvWord out;
  for (std::size_t i = w.vars.size(); i-- > 0;)
    out.vars.push_back(TaggedVar{w.vars[i].index, !w.vars[i].involuted});
  return out;
}

InvAltList inv_nf(const Algebra& base, const InvAltList& a) {
  InvAltList out;
  for (std::size_t i = a.items.size(); i-- > 0;) {
    const InvItem& it = a.items[i];
    if (it.is_const())
      out.items.push_back(InvItem::c(base.apply(kInv, std::vector<Value>{*it.constant})));
    else
      out.items.push_back(InvItem::v(TaggedVar{it.var.index, !it.var.involuted}));
  }
  return out;
}

Proved prove_involutive(const Term& t, const Presentation& pres, const Algebra* base) {
  Proved pushed = prove_push(t, pres, base);
  Proved flat = prove_chain(pushed.rhs, pres, base);
  return proved_trans(std::move(pushed), std::move(flat), base);
}

namespace {

class InvolutiveFral final : public Fral {
public:
  explicit InvolutiveFral(int support) : support_(support) {}

  const Presentation& pres() const override { return involutive_monoid_presentation(); }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return inorm_fral(t); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return std::any_cast<const InvWord&>(a) == std::any_cast<const InvWord&>(b);
  }
  Term reify(const NF& nf) const override { return ireify(std::any_cast<const InvWord&>(nf)); }
  Derivation prove_norm(const Term& t) const override {
    return prove_involutive(t, pres(), nullptr).d;
  }

private:
  int support_;
};

class InvolutiveFrex final : public Frex {
public:
  InvolutiveFrex(const Algebra& base, int support) : base_(base), support_(support) {}

  const Presentation& pres() const override { return involutive_monoid_presentation(); }
  const Algebra& base() const override { return base_; }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return inorm_frex(base_, t); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return inv_alt_equal(base_, std::any_cast<const InvAltList&>(a),
                         std::any_cast<const InvAltList&>(b));
  }
  Term reify(const NF& nf) const override { return ireify(std::any_cast<const InvAltList&>(nf)); }
  Derivation prove_norm(const Term& t) const override {
    return prove_involutive(t, pres(), &base_).d;
  }

  NF var(int index) const override {
    return InvAltList{{InvItem::v(TaggedVar{index, false})}};
  }
  NF embed(const Value& c) const override {
    if (base_.values_equal(c, base_.unit_value())) return InvAltList{};
    return InvAltList{{InvItem::c(c)}};
  }
  Value eval_nf(const Algebra& target, const Hom& h, const Env& e, const NF& nf) const override {
    const auto& a = std::any_cast<const InvAltList&>(nf);
    if (a.items.empty()) return target.unit_value();
    auto item_value = [&](const InvItem& it) {
      if (it.is_const()) return h(*it.constant);
      Value v = e.at(static_cast<std::size_t>(it.var.index));
      return it.var.involuted ? target.apply(kInv, std::vector<Value>{v}) : v;
    };
    Value acc = item_value(a.items.back());
    for (std::size_t i = a.items.size() - 1; i-- > 0;)
      acc = target.apply(kMul, std::vector<Value>{item_value(a.items[i]), acc});
    return acc;
  }

private:
  const Algebra& base_;
  int support_;
};

}  // namespace

std::shared_ptr<const Fral> involutive_fral(int support) {
  return std::make_shared<InvolutiveFral>(support);
}

std::shared_ptr<const Frex> involutive_frex(const Algebra& base, int support) {
  return std::make_shared<InvolutiveFrex>(base, support);
}

}  // namespace frex
