#include "solve/commutative.hpp"

#include <stdexcept>

namespace frex {

namespace {

bool all_zero(const CoeffVec& v) {
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

bool is_unit_const(const Algebra& base, const Value& v) {
  return base.values_equal(v, base.unit_value());
}

// The leaves of the canonical form, in reification order.
std::vector<Term> poly_leaves(const Algebra* base, const Value& constant, const CoeffVec& v) {
  std::vector<Term> leaves;
  if (all_zero(v)) {
    leaves.push_back(base ? Term::sta(constant) : unit_term());
    return leaves;
  }
  if (base != nullptr && !is_unit_const(*base, constant)) leaves.push_back(Term::sta(constant));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::uint64_t k = 0; k < v[i]; ++k) leaves.push_back(Term::var(static_cast<int>(i)));
  return leaves;
}

Term right_nested(const std::vector<Term>& leaves) {
  Term out = leaves.back();
  for (std::size_t i = leaves.size() - 1; i-- > 0;) out = mul(leaves[i], out);
  return out;
}

}  // namespace

CoeffVec cnorm_fral(const Term& t, int support) {
  CoeffVec v(static_cast<std::size_t>(support), 0);
  auto walk = [&v](auto&& self, const Term& s) -> void {
    if (s.is_var()) {
      v.at(static_cast<std::size_t>(s.index())) += 1;
    } else if (s.is_app_of(kMul)) {
      self(self, s.args()[0]);
      self(self, s.args()[1]);
    } else if (!s.is_app_of(kUnit)) {
      throw std::invalid_argument("not a plain commutative-monoid term: " + s.show());
    }
  };
  walk(walk, t);
  return v;
}

LinPoly cnorm_frex(const Algebra& base, const Term& t, int support) {
  if (t.is_var()) {
    CoeffVec v(static_cast<std::size_t>(support), 0);
    v.at(static_cast<std::size_t>(t.index())) = 1;
    return LinPoly{base.unit_value(), std::move(v)};
  }
  if (t.is_sta()) return LinPoly{t.constant(), CoeffVec(static_cast<std::size_t>(support), 0)};
  if (t.is_app_of(kUnit))
    return LinPoly{base.unit_value(), CoeffVec(static_cast<std::size_t>(support), 0)};
  if (t.is_app_of(kMul)) {
    LinPoly l = cnorm_frex(base, t.args()[0], support);
    LinPoly r = cnorm_frex(base, t.args()[1], support);
    CoeffVec v(static_cast<std::size_t>(support), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = l.coeffs[i] + r.coeffs[i];
    return LinPoly{base.apply(kMul, std::vector<Value>{l.constant, r.constant}), std::move(v)};
  }
  throw std::invalid_argument("not a commutative-monoid term: " + t.show());
}

Term creify(const CoeffVec& v) {
  if (all_zero(v)) return unit_term();
  return right_nested(poly_leaves(nullptr, Value::nat(0), v));
}

Term creify(const Algebra& base, const LinPoly& p) {
  return right_nested(poly_leaves(&base, p.constant, p.coeffs));
}

bool lin_equal(const Algebra& base, const LinPoly& a, const LinPoly& b) {
  return base.values_equal(a.constant, b.constant) && a.coeffs == b.coeffs;
}

namespace {

// a·(b·R) = b·(a·R): reassociate, commute the pair, reassociate back.
Proved swap_heads(const Presentation& pres, const Algebra* alg, const Term& a, const Term& b,
                  const Term& rest) {
  Proved acc = proved_sym(proved_axiom(pres, "associativity", {a, b, rest}));
  acc = proved_trans(std::move(acc),
                     proved_cong1(kMul, {mul(a, b), rest}, 0,
                                  proved_axiom(pres, "commutativity", {a, b})),
                     alg);
  return proved_trans(std::move(acc), proved_axiom(pres, "associativity", {b, a, rest}), alg);
}

// Var i into an ascending variable spine: Var i · spine = sorted spine.
Proved insert_var_spine(const Presentation& pres, const Algebra* alg, int i,
                        const std::vector<Term>& spine) {
  const Term vi = Term::var(i);
  const Term V = right_nested(spine);
  int j = spine.front().index();
  if (i <= j) return proved_refl(mul(vi, V));
  if (spine.size() == 1) return proved_axiom(pres, "commutativity", {vi, spine.front()});
  std::vector<Term> rest(spine.begin() + 1, spine.end());
  Proved acc = swap_heads(pres, alg, vi, spine.front(), right_nested(rest));
  Proved inner = insert_var_spine(pres, alg, i, rest);
  return proved_trans(
      std::move(acc),
      proved_cong1(kMul, {spine.front(), mul(vi, right_nested(rest))}, 1, std::move(inner)), alg);
}

struct PolyAcc {
  Value constant;  // meaningful only in the frex
  CoeffVec coeffs;
};

PolyAcc acc_of_leaf(const Algebra* base, const Term& leaf, int support) {
  PolyAcc p{base ? base->unit_value() : Value::nat(0),
            CoeffVec(static_cast<std::size_t>(support), 0)};
  if (leaf.is_var())
    p.coeffs.at(static_cast<std::size_t>(leaf.index())) = 1;
  else if (leaf.is_sta())
    p.constant = leaf.constant();
  return p;
}

PolyAcc acc_insert(const Algebra* base, PolyAcc acc, const Term& leaf) {
  if (leaf.is_var()) {
    acc.coeffs.at(static_cast<std::size_t>(leaf.index())) += 1;
  } else if (leaf.is_sta()) {
    acc.constant = base->apply(kMul, std::vector<Value>{leaf.constant(), acc.constant});
  }
  return acc;
}

Term acc_reify(const Algebra* base, const PolyAcc& p) {
  return base ? creify(*base, LinPoly{p.constant, p.coeffs}) : creify(p.coeffs);
}

// leaf · creify(r) = creify(r with the leaf absorbed).
Proved insert_leaf(const Presentation& pres, const Algebra* base, const Term& leaf,
                   const PolyAcc& r, int /*support*/) {
  const Term R = acc_reify(base, r);
  if (leaf.is_app_of(kUnit)) return proved_axiom(pres, "lftNeutrality", {R});

  const bool zero = all_zero(r.coeffs);
  std::vector<Term> spine;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    for (std::uint64_t k = 0; k < r.coeffs[i]; ++k) spine.push_back(Term::var(static_cast<int>(i)));

  if (leaf.is_sta()) {
    const Value c = leaf.constant();
    if (zero) return proved_eval(*base, kMul, {c, r.constant});
    if (is_unit_const(*base, r.constant)) {
      const Term V = right_nested(spine);
      if (!is_unit_const(*base, c)) return proved_refl(mul(leaf, V));
      Proved acc = proved_cong1(kMul, {leaf, V}, 0, proved_sym(proved_eval(*base, kUnit, {})));
      return proved_trans(std::move(acc), proved_axiom(pres, "lftNeutrality", {V}), base);
    }
    // R = constant · spine: fold the two constants, dropping a unit result.
    const Term V = right_nested(spine);
    const Term cr = Term::sta(r.constant);
    Proved acc = proved_sym(proved_axiom(pres, "associativity", {leaf, cr, V}));
    Proved fold = proved_eval(*base, kMul, {c, r.constant});
    const Value m = fold.rhs.constant();
    acc = proved_trans(std::move(acc),
                       proved_cong1(kMul, {mul(leaf, cr), V}, 0, std::move(fold)), base);
    if (is_unit_const(*base, m)) {
      acc = proved_trans(
          std::move(acc),
          proved_cong1(kMul, {Term::sta(m), V}, 0, proved_sym(proved_eval(*base, kUnit, {}))),
          base);
      acc = proved_trans(std::move(acc), proved_axiom(pres, "lftNeutrality", {V}), base);
    }
    return acc;
  }

  // leaf is a variable.
  const int i = leaf.index();
  if (base == nullptr) {
    if (zero) return proved_axiom(pres, "rgtNeutrality", {leaf});
    return insert_var_spine(pres, nullptr, i, spine);
  }
  if (zero) {
    if (is_unit_const(*base, r.constant)) {
      Proved acc = proved_cong1(kMul, {leaf, Term::sta(r.constant)}, 1,
                                proved_sym(proved_eval(*base, kUnit, {})));
      return proved_trans(std::move(acc), proved_axiom(pres, "rgtNeutrality", {leaf}), base);
    }
    return proved_axiom(pres, "commutativity", {leaf, Term::sta(r.constant)});
  }
  if (is_unit_const(*base, r.constant)) return insert_var_spine(pres, base, i, spine);
  // Constant-headed: move the variable past the constant, then into the spine.
  const Term cr = Term::sta(r.constant);
  const Term V = right_nested(spine);
  Proved acc = swap_heads(pres, base, leaf, cr, V);
  Proved inner = insert_var_spine(pres, base, i, spine);
  return proved_trans(std::move(acc), proved_cong1(kMul, {cr, mul(leaf, V)}, 1, std::move(inner)),
                      base);
}

// reify(chain) · creify(q) = creify(q ⊕ chain), inserting right to left.
Proved merge_chain(const Presentation& pres, const Algebra* base,
                   const std::vector<Term>& chain, const PolyAcc& q, int support) {
  if (chain.size() == 1) return insert_leaf(pres, base, chain.front(), q, support);
  std::vector<Term> rest(chain.begin() + 1, chain.end());
  const Term x = chain.front();
  const Term REST = right_nested(rest);
  const Term Q = acc_reify(base, q);
  Proved acc = proved_axiom(pres, "associativity", {x, REST, Q});
  Proved inner = merge_chain(pres, base, rest, q, support);
  acc = proved_trans(std::move(acc), proved_cong1(kMul, {x, mul(REST, Q)}, 1, std::move(inner)),
                     base);
  PolyAcc merged = q;
  for (std::size_t i = rest.size(); i-- > 0;) merged = acc_insert(base, std::move(merged), rest[i]);
  return proved_trans(std::move(acc), insert_leaf(pres, base, x, merged, support), base);
}

PolyAcc poly_of(const Algebra* base, const Term& t, int support) {
  if (base) {
    LinPoly p = cnorm_frex(*base, t, support);
    return PolyAcc{p.constant, p.coeffs};
  }
  return PolyAcc{Value::nat(0), cnorm_fral(t, support)};
}

}  // namespace

Proved prove_linear(const Term& t, const Presentation& pres, const Algebra* base, int support) {
  if (t.is_var()) return proved_refl(t);
  if (t.is_sta()) {
    if (base == nullptr) throw std::invalid_argument("constant in a plain term");
    return proved_refl(t);
  }
  if (t.is_app_of(kUnit)) {
    if (base == nullptr) return proved_refl(t);
    return proved_eval(*base, kUnit, {});
  }
  if (!t.is_app_of(kMul)) throw std::invalid_argument("not a commutative-monoid term: " + t.show());

  Proved pl = prove_linear(t.args()[0], pres, base, support);
  Proved pr = prove_linear(t.args()[1], pres, base, support);
  PolyAcc nl = poly_of(base, t.args()[0], support);
  PolyAcc nr = poly_of(base, t.args()[1], support);
  std::vector<Term> left_leaves = poly_leaves(base, nl.constant, nl.coeffs);
  Proved acc = proved_cong(kMul, {std::move(pl), std::move(pr)});
  return proved_trans(std::move(acc), merge_chain(pres, base, left_leaves, nr, support), base);
}

Result<Algebra> coproduct_cm(const Algebra& a, const Algebra& b) {
  if (a.sig != b.sig)
    return Status::fail(Errc::SignatureMismatch, "coproduct of algebras over different signatures");
  Algebra c;
  c.name = "";
  c.sig = a.sig;
  c.presentation = a.presentation;
  c.multiplicative_display = a.multiplicative_display;
  Algebra lhs = a, rhs = b;
  c.interp = [lhs, rhs](std::string_view op, std::span<const Value> args) {
    std::vector<Value> l, r;
    for (const auto& v : args) {
      l.push_back(v.as_list().at(0));
      r.push_back(v.as_list().at(1));
    }
    return Value::list({lhs.interp(op, l), rhs.interp(op, r)});
  };
  c.equal = [lhs, rhs](const Value& x, const Value& y) {
    return lhs.values_equal(x.as_list().at(0), y.as_list().at(0)) &&
           rhs.values_equal(x.as_list().at(1), y.as_list().at(1));
  };
  c.sample = [lhs, rhs](Rng& rng) {
    return Value::list({lhs.sample(rng), rhs.sample(rng)});
  };
  return c;
}

Value cm_inject_left(const Algebra&, const Algebra& b, const Value& v) {
  return Value::list({v, b.unit_value()});
}

Value cm_inject_right(const Algebra& a, const Algebra&, const Value& v) {
  return Value::list({a.unit_value(), v});
}

namespace {

Value encode_coeffs(const CoeffVec& v) {
  std::vector<Value> xs;
  xs.reserve(v.size());
  for (auto c : v) xs.push_back(Value::nat(c));
  return Value::list(std::move(xs));
}

CoeffVec decode_coeffs(const Value& v) {
  CoeffVec out;
  for (const auto& x : v.as_list()) out.push_back(x.as_nat());
  return out;
}

}  // namespace

const CoproductConstruction& commutative_coproduct() {
  static const CoproductConstruction cons = [] {
    CoproductConstruction c;
    c.make = [](const Algebra& a, const Algebra& b) {
      auto r = coproduct_cm(a, b);
      if (!r.ok()) throw std::invalid_argument(r.status().message);
      return r.take();
    };
    c.encode_nf = [](const Fral&, const std::any& nf) {
      return encode_coeffs(std::any_cast<const CoeffVec&>(nf));
    };
    c.decode_nf = [](const Fral&, const Value& v) { return std::any(decode_coeffs(v)); };
    c.reify = [](const Algebra& base, int, const Value& pair) {
      return creify(base, LinPoly{pair.as_list().at(0), decode_coeffs(pair.as_list().at(1))});
    };
    c.prove = [](const Algebra& base, int support, const Term& t) {
      return prove_linear(t, commutative_monoid_presentation(), &base, support);
    };
    c.eval = [](const Algebra& target, const Frex::Hom& h, const Env& e, const Algebra&,
                const Value& pair) {
      Value acc = h(pair.as_list().at(0));
      CoeffVec v = decode_coeffs(pair.as_list().at(1));
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::uint64_t k = 0; k < v[i]; ++k)
          acc = target.apply(kMul, std::vector<Value>{acc, e.at(i)});
      return acc;
    };
    return c;
  }();
  return cons;
}

namespace {

class CommutativeFral final : public Fral {
public:
  explicit CommutativeFral(int support) : support_(support) {}

  const Presentation& pres() const override { return commutative_monoid_presentation(); }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return cnorm_fral(t, support_); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return std::any_cast<const CoeffVec&>(a) == std::any_cast<const CoeffVec&>(b);
  }
  Term reify(const NF& nf) const override { return creify(std::any_cast<const CoeffVec&>(nf)); }
  Derivation prove_norm(const Term& t) const override {
    return prove_linear(t, pres(), nullptr, support_).d;
  }

private:
  int support_;
};

class CommutativeFrex final : public Frex {
public:
  CommutativeFrex(const Algebra& base, int support) : base_(base), support_(support) {}

  const Presentation& pres() const override { return commutative_monoid_presentation(); }
  const Algebra& base() const override { return base_; }
  int support() const override { return support_; }

  NF norm(const Term& t) const override { return cnorm_frex(base_, t, support_); }
  bool nf_equal(const NF& a, const NF& b) const override {
    return lin_equal(base_, std::any_cast<const LinPoly&>(a), std::any_cast<const LinPoly&>(b));
  }
  Term reify(const NF& nf) const override {
    return creify(base_, std::any_cast<const LinPoly&>(nf));
  }
  Derivation prove_norm(const Term& t) const override {
    return prove_linear(t, pres(), &base_, support_).d;
  }

  NF var(int index) const override {
    CoeffVec v(static_cast<std::size_t>(support_), 0);
    v.at(static_cast<std::size_t>(index)) = 1;
    return LinPoly{base_.unit_value(), std::move(v)};
  }
  NF embed(const Value& c) const override {
    return LinPoly{c, CoeffVec(static_cast<std::size_t>(support_), 0)};
  }
  Value eval_nf(const Algebra& target, const Hom& h, const Env& e, const NF& nf) const override {
    const auto& p = std::any_cast<const LinPoly&>(nf);
    Value acc = h(p.constant);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      for (std::uint64_t k = 0; k < p.coeffs[i]; ++k)
        acc = target.apply(kMul, std::vector<Value>{acc, e.at(i)});
    return acc;
  }

private:
  const Algebra& base_;
  int support_;
};

}  // namespace

std::shared_ptr<const Fral> commutative_fral(int support) {
  return std::make_shared<CommutativeFral>(support);
}

std::shared_ptr<const Frex> commutative_frex(const Algebra& base, int support) {
  return std::make_shared<CommutativeFrex>(base, support);
}

}  // namespace frex
