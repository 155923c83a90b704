#include "oracle.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace frex::testing {

namespace {

using Path = std::vector<int>;

void collect_paths(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  if (t.is_app()) {
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      cur.push_back(static_cast<int>(i));
      collect_paths(t.args()[i], cur, out);
      cur.pop_back();
    }
  }
}

const Term& subterm_at(const Term& t, const Path& p, std::size_t from = 0) {
  if (from == p.size()) return t;
  return subterm_at(t.args()[static_cast<std::size_t>(p[from])], p, from + 1);
}

Term replace_at(const Term& t, const Path& p, const Term& sub, std::size_t from = 0) {
  if (from == p.size()) return sub;
  std::vector<Term> args = t.args();
  auto i = static_cast<std::size_t>(p[from]);
  args[i] = replace_at(args[i], p, sub, from + 1);
  return Term::app(t.op(), std::move(args));
}

bool match(const Term& pat, const Term& t, std::vector<std::optional<Term>>& binding) {
  switch (pat.kind()) {
    case Term::Kind::Var: {
      auto& slot = binding[static_cast<std::size_t>(pat.index())];
      if (!slot) {
        slot = t;
        return true;
      }
      return *slot == t;
    }
    case Term::Kind::App: {
      if (!t.is_app() || t.op() != pat.op() || t.args().size() != pat.args().size()) return false;
      for (std::size_t i = 0; i < pat.args().size(); ++i)
        if (!match(pat.args()[i], t.args()[i], binding)) return false;
      return true;
    }
    default:
      return pat == t;
  }
}

struct Move {
  Term result;
  Path path;
  bool axiom = false;
  std::string name;          // axiom name or op
  std::vector<Term> subst;   // axiom instantiation
  std::vector<Value> args;   // eval constants
  bool forward = true;
};

std::vector<Move> moves_of(const OracleConfig& cfg, const Term& t, bool* pruned) {
  std::vector<Move> out;
  std::vector<Path> paths;
  Path cur;
  collect_paths(t, cur, paths);
  auto push = [&](Move m) {
    if (m.result.leaf_count() <= cfg.max_size)
      out.push_back(std::move(m));
    else if (pruned != nullptr)
      *pruned = true;
  };
  for (const Path& p : paths) {
    const Term& s = subterm_at(t, p);
    for (const auto& [name, eq] : cfg.pres->axioms()) {
      for (bool fwd : {true, false}) {
        const Term& from = fwd ? eq.lhs : eq.rhs;
        const Term& to = fwd ? eq.rhs : eq.lhs;
        std::vector<std::optional<Term>> binding(static_cast<std::size_t>(eq.support));
        if (!match(from, s, binding)) continue;
        std::vector<Term> subst;
        bool complete = true;
        for (auto& b : binding) {
          if (!b) complete = false;
          else subst.push_back(*b);
        }
        if (!complete) continue;  // cannot happen for the monoid families
        Move m;
        m.path = p;
        m.axiom = true;
        m.name = name;
        m.subst = std::move(subst);
        m.forward = fwd;
        m.result = replace_at(t, p, substitute(to, m.subst));
        push(std::move(m));
      }
    }
    if (cfg.alg == nullptr) continue;
    // Evaluation folds: an operation over constants collapses.
    if (s.is_app()) {
      bool all_sta = true;
      for (const auto& a : s.args()) all_sta = all_sta && a.is_sta();
      if (all_sta) {
        std::vector<Value> args;
        for (const auto& a : s.args()) args.push_back(a.constant());
        Move m;
        m.path = p;
        m.name = s.op();
        m.args = args;
        m.forward = true;
        m.result = replace_at(t, p, Term::sta(cfg.alg->apply(s.op(), args)));
        push(std::move(m));
      }
    }
    // Evaluation unfolds: a constant expands into an operation over pool
    // constants that evaluates back to it.
    if (s.is_sta()) {
      for (const auto& op : cfg.pres->signature().ops()) {
        std::vector<std::vector<Value>> combos;
        if (op.arity == 0) {
          combos.push_back({});
        } else if (op.arity == 1) {
          for (const auto& v : cfg.pool) combos.push_back({v});
        } else if (op.arity == 2) {
          for (const auto& v : cfg.pool)
            for (const auto& w : cfg.pool) combos.push_back({v, w});
        }
        for (auto& combo : combos) {
          if (!cfg.alg->values_equal(cfg.alg->apply(op.name, combo), s.constant())) continue;
          std::vector<Term> args;
          for (const auto& v : combo) args.push_back(Term::sta(v));
          Move m;
          m.path = p;
          m.name = op.name;
          m.args = combo;
          m.forward = false;
          m.result = replace_at(t, p, Term::app(op.name, std::move(args)));
          push(std::move(m));
        }
      }
    }
  }
  return out;
}

Proved wrap_at(const Term& whole, const Path& p, Proved atom, std::size_t from = 0) {
  if (from == p.size()) return atom;
  auto i = static_cast<std::size_t>(p[from]);
  Proved inner = wrap_at(whole.args()[i], p, std::move(atom), from + 1);
  return proved_cong1(whole.op(), whole.args(), i, std::move(inner));
}

Proved move_proof(const OracleConfig& cfg, const Term& source, const Move& m) {
  Proved atom = m.axiom ? proved_axiom(*cfg.pres, m.name, m.subst)
                        : proved_eval(*cfg.alg, m.name, m.args);
  if (!m.forward) atom = proved_sym(std::move(atom));
  return wrap_at(source, m.path, std::move(atom));
}

}  // namespace

std::vector<Term> neighbors(const OracleConfig& cfg, const Term& t, bool* pruned) {
  std::vector<Term> out;
  for (auto& m : moves_of(cfg, t, pruned)) out.push_back(std::move(m.result));
  return out;
}

OracleOutcome oracle_equal(const OracleConfig& cfg, const Term& lhs, const Term& rhs) {
  OracleOutcome outcome;
  if (term_equal(lhs, rhs, cfg.alg)) {
    outcome.reached = true;
    outcome.exhaustive = true;
    outcome.witness = Derivation::refl(lhs);
    return outcome;
  }
  struct NodeInfo {
    Term term;
    int parent;
    Move via;
  };
  std::vector<NodeInfo> nodes;
  std::map<std::string, int> seen;
  std::deque<std::pair<int, int>> frontier;  // node index, depth
  nodes.push_back(NodeInfo{lhs, -1, {}});
  seen.emplace(lhs.show(), 0);
  frontier.emplace_back(0, 0);
  bool pruned = false;
  int found = -1;

  while (!frontier.empty() && found < 0) {
    auto [idx, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= cfg.depth) {
      pruned = true;
      continue;
    }
    Term here = nodes[static_cast<std::size_t>(idx)].term;
    for (auto& m : moves_of(cfg, here, &pruned)) {
      std::string key = m.result.show();
      if (seen.count(key)) continue;
      if (nodes.size() >= cfg.state_cap) {
        pruned = true;
        break;
      }
      int id = static_cast<int>(nodes.size());
      seen.emplace(std::move(key), id);
      nodes.push_back(NodeInfo{m.result, idx, std::move(m)});
      if (term_equal(nodes.back().term, rhs, cfg.alg)) {
        found = id;
        break;
      }
      frontier.emplace_back(id, depth + 1);
    }
  }

  if (found >= 0) {
    outcome.reached = true;
    // Reassemble the rewrite chain as a checkable derivation.
    std::vector<int> path_ids;
    for (int i = found; i > 0; i = nodes[static_cast<std::size_t>(i)].parent)
      path_ids.push_back(i);
    std::optional<Proved> acc;
    for (auto it = path_ids.rbegin(); it != path_ids.rend(); ++it) {
      const NodeInfo& n = nodes[static_cast<std::size_t>(*it)];
      Proved step = move_proof(cfg, nodes[static_cast<std::size_t>(n.parent)].term, n.via);
      acc = acc ? proved_trans(std::move(*acc), std::move(step), cfg.alg) : std::move(step);
    }
    outcome.witness = acc->d;
    return outcome;
  }
  outcome.exhaustive = !pruned;
  return outcome;
}

namespace {

struct FlatItem {
  bool is_const = false;
  Value c;
  int var = -1;
  bool tagged = false;
};

void flat_monoid(const Term& t, std::vector<FlatItem>& out) {
  if (t.is_app_of(kMul)) {
    flat_monoid(t.args()[0], out);
    flat_monoid(t.args()[1], out);
  } else if (t.is_app_of(kUnit)) {
  } else if (t.is_sta()) {
    out.push_back(FlatItem{true, t.constant(), -1, false});
  } else {
    out.push_back(FlatItem{false, Value(), t.index(), false});
  }
}

void flat_involutive(const Term& t, bool flip, const Algebra* alg, std::vector<FlatItem>& out) {
  if (t.is_app_of(kMul)) {
    if (flip) {
      flat_involutive(t.args()[1], flip, alg, out);
      flat_involutive(t.args()[0], flip, alg, out);
    } else {
      flat_involutive(t.args()[0], flip, alg, out);
      flat_involutive(t.args()[1], flip, alg, out);
    }
  } else if (t.is_app_of(kUnit)) {
  } else if (t.is_app_of(kInv)) {
    flat_involutive(t.args()[0], !flip, alg, out);
  } else if (t.is_sta()) {
    Value v = t.constant();
    if (flip) v = alg->apply(kInv, std::vector<Value>{v});
    out.push_back(FlatItem{true, std::move(v), -1, false});
  } else {
    out.push_back(FlatItem{false, Value(), t.index(), flip});
  }
}

// Folds adjacent constants and drops units.
std::vector<FlatItem> squash(std::vector<FlatItem> items, const Algebra* alg) {
  std::vector<FlatItem> out;
  for (auto& it : items) {
    if (it.is_const) {
      if (!out.empty() && out.back().is_const) {
        out.back().c = alg->apply(kMul, std::vector<Value>{out.back().c, it.c});
      } else {
        out.push_back(std::move(it));
      }
      if (out.back().is_const && alg->values_equal(out.back().c, alg->unit_value()))
        out.pop_back();
    } else {
      out.push_back(std::move(it));
    }
  }
  return out;
}

bool flats_equal(const std::vector<FlatItem>& a, const std::vector<FlatItem>& b,
                 const Algebra* alg) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_const != b[i].is_const) return false;
    if (a[i].is_const) {
      if (!alg->values_equal(a[i].c, b[i].c)) return false;
    } else if (a[i].var != b[i].var || a[i].tagged != b[i].tagged) {
      return false;
    }
  }
  return true;
}

void count_vars(const Term& t, std::map<int, int>& counts, std::vector<Value>& consts) {
  if (t.is_app_of(kMul)) {
    count_vars(t.args()[0], counts, consts);
    count_vars(t.args()[1], counts, consts);
  } else if (t.is_app_of(kUnit)) {
  } else if (t.is_sta()) {
    consts.push_back(t.constant());
  } else {
    counts[t.index()] += 1;
  }
}

}  // namespace

bool direct_oracle(const Presentation& pres, const Algebra* alg, const Term& lhs,
                   const Term& rhs) {
  if (pres.name() == "cmonoid") {
    std::map<int, int> cl, cr;
    std::vector<Value> kl, kr;
    count_vars(lhs, cl, kl);
    count_vars(rhs, cr, kr);
    if (cl != cr) return false;
    if (alg == nullptr) return kl.empty() && kr.empty();
    Value fl = alg->unit_value(), fr = alg->unit_value();
    for (const auto& v : kl) fl = alg->apply(kMul, std::vector<Value>{fl, v});
    for (const auto& v : kr) fr = alg->apply(kMul, std::vector<Value>{fr, v});
    return alg->values_equal(fl, fr);
  }
  std::vector<FlatItem> fl, fr;
  if (pres.name() == "invmonoid") {
    flat_involutive(lhs, false, alg, fl);
    flat_involutive(rhs, false, alg, fr);
  } else {
    flat_monoid(lhs, fl);
    flat_monoid(rhs, fr);
  }
  if (alg != nullptr) {
    fl = squash(std::move(fl), alg);
    fr = squash(std::move(fr), alg);
  }
  if (alg == nullptr) {
    // Constant-free terms: plain structural comparison of the sequences.
    if (fl.size() != fr.size()) return false;
    for (std::size_t i = 0; i < fl.size(); ++i)
      if (fl[i].is_const || fr[i].is_const || fl[i].var != fr[i].var ||
          fl[i].tagged != fr[i].tagged)
        return false;
    return true;
  }
  return flats_equal(fl, fr, alg);
}

}  // namespace frex::testing
