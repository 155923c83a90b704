#include "surface/surface.hpp"

#include <cctype>
#include <map>

namespace frex {

DisplayStyle display_for(const Presentation& pres, const Algebra* alg) {
  if (alg != nullptr) return DisplayStyle{alg->multiplicative_display};
  return DisplayStyle{pres.name() == "invmonoid"};
}

std::string var_name(int index) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (index >= 0 && index < 4) return names[index];
  return "v" + std::to_string(index);
}

namespace {

// Precedence levels: 0 = top (binary op), 1 = postfix operand.
std::string render(const Term& t, const DisplayStyle& style, bool latex, int prec) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return var_name(t.index());
    case Term::Kind::Sta:
      return t.constant().show();
    case Term::Kind::Hole:
      return latex ? "\\square" : "□";
    case Term::Kind::App: {
      if (t.op() == kUnit) return style.multiplicative ? "1" : "0";
      if (t.op() == kInv) {
        std::string inner = render(t.args()[0], style, latex, 1);
        return inner + "'";
      }
      const char* sym = style.multiplicative ? " * " : " + ";
      std::string out = render(t.args()[0], style, latex, 1) + sym +
                        render(t.args()[1], style, latex, 1);
      if (prec > 0) out = "(" + out + ")";
      return out;
    }
  }
  return "?";
}

}  // namespace

std::string print_term(const Term& t, DisplayStyle style, bool latex) {
  return render(t, style, latex, 0);
}

std::string print_goal(const Goal& g, DisplayStyle style) {
  return print_term(g.lhs, style) + " = " + print_term(g.rhs, style);
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Presentation& pres;
  const Algebra* alg;
  std::vector<std::string> vars;  // first-occurrence interning

  Parser(std::string_view t, const Presentation& p, const Algebra* a)
      : text(t), pres(p), alg(a) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  Status error(const std::string& expectation) {
    return Status::fail(Errc::ParseError, "at position " + std::to_string(pos) + ": " + expectation);
  }

  bool at_prime() {
    skip_ws();
    if (pos < text.size() && text[pos] == '\'') return true;
    // U+2032 PRIME, UTF-8 e2 80 b2
    return pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xe2 &&
           static_cast<unsigned char>(text[pos + 1]) == 0x80 &&
           static_cast<unsigned char>(text[pos + 2]) == 0xb2;
  }

  void eat_prime() {
    if (text[pos] == '\'')
      ++pos;
    else
      pos += 3;
  }

  Result<Term> literal_token() {
    skip_ws();
    std::size_t start = pos;
    if (text[pos] == '"') {
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\') ++pos;
        ++pos;
      }
      if (pos >= text.size()) return error("unterminated string literal");
      ++pos;
    } else if (text[pos] == '[') {
      int depth = 0;
      while (pos < text.size()) {
        if (text[pos] == '[') ++depth;
        if (text[pos] == ']' && --depth == 0) {
          ++pos;
          break;
        }
        ++pos;
      }
      if (depth != 0) return error("unterminated list literal");
    } else {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    std::string_view tok = text.substr(start, pos - start);
    if (alg == nullptr) {
      if (tok == "0" || tok == "1") return unit_term();
      return Status::fail(Errc::ParseError,
                          "at position " + std::to_string(start) + ": literal '" +
                              std::string(tok) + "' needs an algebra (only the unit, 0 or 1, "
                              "is meaningful here)");
    }
    if (!alg->parse_literal)
      return Status::fail(Errc::ParseError, "algebra " + alg->name + " has no literal syntax");
    auto v = alg->parse_literal(tok);
    if (!v.ok())
      return Status::fail(Errc::ParseError,
                          "at position " + std::to_string(start) + ": " + v.status().message);
    return Term::sta(v.take());
  }

  Result<Term> atom() {
    skip_ws();
    if (pos >= text.size()) return error("expected an expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      auto inner = expr();
      if (!inner.ok()) return inner;
      if (!eat(')')) return error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '"' || c == '[')
      return literal_token();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Term::var(static_cast<int>(i));
      vars.push_back(name);
      return Term::var(static_cast<int>(vars.size() - 1));
    }
    return error(std::string("unexpected character '") + c + "'");
  }

  Result<Term> postfix() {
    auto t = atom();
    if (!t.ok()) return t;
    Term out = t.take();
    while (at_prime()) {
      if (!pres.signature().has_op(kInv))
        return error("involution is not part of this presentation");
      eat_prime();
      out = inv(std::move(out));
    }
    return out;
  }

  Result<Term> product() {
    auto t = postfix();
    if (!t.ok()) return t;
    Term out = t.take();
    while (eat('*')) {
      auto rhs = postfix();
      if (!rhs.ok()) return rhs;
      out = mul(std::move(out), rhs.take());
    }
    return out;
  }

  Result<Term> expr() {
    auto t = product();
    if (!t.ok()) return t;
    Term out = t.take();
    while (eat('+')) {
      auto rhs = product();
      if (!rhs.ok()) return rhs;
      out = mul(std::move(out), rhs.take());
    }
    return out;
  }
};

}  // namespace

Result<Goal> parse_goal(std::string_view text, const Presentation& pres, const Algebra* alg) {
  Parser p(text, pres, alg);
  auto lhs = p.expr();
  if (!lhs.ok()) return lhs.status();
  if (!p.eat('='))
    return Status::fail(Errc::ParseError,
                        "at position " + std::to_string(p.pos) + ": expected '=' between goal sides");
  auto rhs = p.expr();
  if (!rhs.ok()) return rhs.status();
  if (!p.at_end())
    return Status::fail(Errc::ParseError,
                        "at position " + std::to_string(p.pos) + ": trailing input after goal");
  Goal g{static_cast<int>(p.vars.size()), lhs.take(), rhs.take()};
  Status s = validate_goal(pres.signature(), g);
  if (!s.ok()) return s;
  return g;
}

}  // namespace frex
