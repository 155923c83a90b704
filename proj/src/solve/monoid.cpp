#include "solve/monoid.hpp"

#include <stdexcept>

namespace frex {

namespace {

Term item_term(const ChainItem& it) {
  return it.is_const() ? Term::sta(*it.constant) : *it.leaf;
}

bool is_unit_const(const Algebra& base, const Value& v) {
  return base.values_equal(v, base.unit_value());
}

}  // namespace

Chain chain_of(const Term& t, const Algebra* base) {
  if (t.is_app_of(kMul)) {
    Chain l = chain_of(t.args()[0], base);
    Chain r = chain_of(t.args()[1], base);
    return chain_concat(l, r, base);
  }
  if (t.is_app_of(kUnit)) return {};
  if (t.is_sta()) {
    if (base == nullptr) throw std::invalid_argument("constant in a plain term");
    if (is_unit_const(*base, t.constant())) return {};
    return {ChainItem::c(t.constant())};
  }
  return {ChainItem::l(t)};
}

Chain chain_concat(const Chain& a, const Chain& b, const Algebra* base) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Chain out(a.begin(), a.end() - 1);
  if (a.back().is_const() && b.front().is_const()) {
    Value m = base->apply(kMul, std::vector<Value>{*a.back().constant, *b.front().constant});
    if (!is_unit_const(*base, m)) out.push_back(ChainItem::c(std::move(m)));
    out.insert(out.end(), b.begin() + 1, b.end());
    return out;
  }
  out.push_back(a.back());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Term reify_chain(const Chain& c) {
  if (c.empty()) return unit_term();
  Term out = item_term(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) out = mul(item_term(c[i]), std::move(out));
  return out;
}

bool chain_equal(const Chain& a, const Chain& b, const Algebra* base) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_const() != b[i].is_const()) return false;
    if (a[i].is_const()) {
      if (base ? !base->values_equal(*a[i].constant, *b[i].constant)
               : !(*a[i].constant == *b[i].constant))
        return false;
    } else if (*a[i].leaf != *b[i].leaf) {
      return false;
    }
  }
  return true;
}

namespace {

// reify(a) * reify(b) = reify(chain_concat(a, b)), by recursion on a.
Proved append_proof(const Chain& a, const Chain& b, const Presentation& pres,
                    const Algebra* base) {
  const Term A = reify_chain(a);
  const Term B = reify_chain(b);
  if (a.empty()) return proved_axiom(pres, "lftNeutrality", {B});
  if (b.empty()) return proved_axiom(pres, "rgtNeutrality", {A});
  if (a.size() == 1) {
    const ChainItem& x = a.front();
    if (!x.is_const() || !b.front().is_const()) return proved_refl(mul(A, B));
    // Constant meets constant: fold at the seam.
    const Value c1 = *x.constant;
    const Value c2 = *b.front().constant;
    Proved fold = proved_eval(*base, kMul, {c1, c2});
    const Value m = fold.rhs.constant();
    if (b.size() == 1) {
      if (!is_unit_const(*base, m)) return fold;
      return proved_trans(std::move(fold), proved_sym(proved_eval(*base, kUnit, {})), base);
    }
    Chain rest(b.begin() + 1, b.end());
    const Term R = reify_chain(rest);
    Proved acc = proved_sym(proved_axiom(pres, "associativity", {Term::sta(c1), Term::sta(c2), R}));
    acc = proved_trans(std::move(acc),
                       proved_cong1(kMul, {mul(Term::sta(c1), Term::sta(c2)), R}, 0, std::move(fold)),
                       base);
    if (is_unit_const(*base, m)) {
      acc = proved_trans(
          std::move(acc),
          proved_cong1(kMul, {Term::sta(m), R}, 0, proved_sym(proved_eval(*base, kUnit, {}))),
          base);
      acc = proved_trans(std::move(acc), proved_axiom(pres, "lftNeutrality", {R}), base);
    }
    return acc;
  }
  // a = x : rest with rest nonempty; reassociate and recurse.
  const Term x = item_term(a.front());
  Chain rest(a.begin() + 1, a.end());
  const Term REST = reify_chain(rest);
  Proved acc = proved_axiom(pres, "associativity", {x, REST, B});
  Proved inner = append_proof(rest, b, pres, base);
  acc = proved_trans(std::move(acc), proved_cong1(kMul, {x, mul(REST, B)}, 1, std::move(inner)),
                     base);
  if (chain_concat(rest, b, base).empty())
    acc = proved_trans(std::move(acc), proved_axiom(pres, "rgtNeutrality", {x}), base);
  return acc;
}

}  // namespace

Proved prove_chain(const Term& t, const Presentation& pres, const Algebra* base) {
  if (t.is_app_of(kMul)) {
    Proved pl = prove_chain(t.args()[0], pres, base);
    Proved pr = prove_chain(t.args()[1], pres, base);
    Chain cl = chain_of(t.args()[0], base);
    Chain cr = chain_of(t.args()[1], base);
    Proved top = proved_cong(kMul, {std::move(pl), std::move(pr)});
    return proved_trans(std::move(top), append_proof(cl, cr, pres, base), base);
  }
  if (t.is_sta()) {
    if (base == nullptr) throw std::invalid_argument("constant in a plain term");
    if (is_unit_const(*base, t.constant()))
      return proved_sym(proved_eval(*base, kUnit, {}));
    return proved_refl(t);
  }
  return proved_refl(t);
}

Word mnorm_fral(const Term& t) {
  Word w;
  for (const auto& it : chain_of(t, nullptr)) w.vars.push_back(it.leaf->index());
  return w;
}

AltList mnorm_frex(const Algebra& base, const Term& t) {
  AltList a;
  for (const auto& it : chain_of(t, &base)) {
    if (it.is_const())
      a.items.push_back(AltItem::c(*it.constant));
    else
      a.items.push_back(AltItem::v(it.leaf->index()));
  }
  return a;
}

namespace {

Chain word_chain(const Word& w) {
  Chain c;
  for (int i : w.vars) c.push_back(ChainItem::l(Term::var(i)));
  return c;
}

Chain alt_chain(const AltList& a) {
  Chain c;
  for (const auto& it : a.items) {
    if (it.is_const())
      c.push_back(ChainItem::c(*it.constant));
    else
      c.push_back(ChainItem::l(Term::var(it.var)));
  }
  return c;
}

}  // namespace

Term mreify(const Word& w) { return reify_chain(word_chain(w)); }
Term mreify(const AltList& a) { return reify_chain(alt_chain(a)); }

bool alt_equal(const Algebra& base, const AltList& a, const AltList& b) {
  return chain_equal(alt_chain(a), alt_chain(b), &base);
}

namespace {

class MonoidFral final : public Fral {
public:
  explicit MonoidFral(int support) : support_(support) {}

  const Presentation& pres() const override { return monoid_presentation(); }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return mnorm_fral(t); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return std::any_cast<const Word&>(a) == std::any_cast<const Word&>(b);
  }
  Term reify(const NF& nf) const override { return mreify(std::any_cast<const Word&>(nf)); }
  Derivation prove_norm(const Term& t) const override {
    return prove_chain(t, pres(), nullptr).d;
  }

private:
  int support_;
};

class MonoidFrex final : public Frex {
public:
  MonoidFrex(const Algebra& base, int support) : base_(base), support_(support) {}

  const Presentation& pres() const override { return monoid_presentation(); }
  const Algebra& base() const override { return base_; }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return mnorm_frex(base_, t); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return alt_equal(base_, std::any_cast<const AltList&>(a), std::any_cast<const AltList&>(b));
  }
  Term reify(const NF& nf) const override { return mreify(std::any_cast<const AltList&>(nf)); }
  Derivation prove_norm(const Term& t) const override {
    return prove_chain(t, pres(), &base_).d;
  }

  NF var(int index) const override { return AltList{{AltItem::v(index)}}; }
  NF embed(const Value& c) const override {
    if (base_.values_equal(c, base_.unit_value())) return AltList{};
    return AltList{{AltItem::c(c)}};
  }
  Value eval_nf(const Algebra& target, const Hom& h, const Env& e, const NF& nf) const override {
    const auto& a = std::any_cast<const AltList&>(nf);
    if (a.items.empty()) return target.unit_value();
    auto item_value = [&](const AltItem& it) {
      return it.is_const() ? h(*it.constant) : e.at(static_cast<std::size_t>(it.var));
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

std::shared_ptr<const Fral> monoid_fral(int support) {
  return std::make_shared<MonoidFral>(support);
}

std::shared_ptr<const Frex> monoid_frex(const Algebra& base, int support) {
  return std::make_shared<MonoidFrex>(base, support);
}

}  // namespace frex
