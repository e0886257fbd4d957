#include "picardlab/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace picardlab::expr {

using zlin::Int;

ExprPtr zero() {
  static const ExprPtr z = std::make_shared<Expr>(Expr{ExprKind::Zero, 0, nullptr, nullptr});
  return z;
}

ExprPtr var(int j) {
  if (j < 1) throw std::invalid_argument("variable index must be >= 1");
  return std::make_shared<Expr>(Expr{ExprKind::Var, j, nullptr, nullptr});
}

ExprPtr neg(ExprPtr e) {
  return std::make_shared<Expr>(Expr{ExprKind::Neg, 0, std::move(e), nullptr});
}

ExprPtr add(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr{ExprKind::Add, 0, std::move(a), std::move(b)});
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Zero: return true;
    case ExprKind::Var: return a->var == b->var;
    case ExprKind::Neg: return expr_equal(a->a, b->a);
    case ExprKind::Add: return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
  }
  return false;
}

int max_var(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Zero: return 0;
    case ExprKind::Var: return e->var;
    case ExprKind::Neg: return max_var(e->a);
    case ExprKind::Add: return std::max(max_var(e->a), max_var(e->b));
  }
  return 0;
}

int expr_size(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Zero:
    case ExprKind::Var: return 1;
    case ExprKind::Neg: return 1 + expr_size(e->a);
    case ExprKind::Add: return 1 + expr_size(e->a) + expr_size(e->b);
  }
  return 0;
}

namespace {

void accumulate(const ExprPtr& e, int sign, IntVec& c) {
  switch (e->kind) {
    case ExprKind::Zero: return;
    case ExprKind::Var:
      if (e->var > static_cast<int>(c.size()))
        throw std::out_of_range("variable index exceeds arity");
      c[e->var - 1] += sign;
      return;
    case ExprKind::Neg: accumulate(e->a, -sign, c); return;
    case ExprKind::Add:
      accumulate(e->a, sign, c);
      accumulate(e->b, sign, c);
      return;
  }
}

}  // namespace

IntVec coeffs(const ExprPtr& e, int arity) {
  IntVec c(arity);
  accumulate(e, 1, c);
  return c;
}

ExprPtr canonical_form(const IntVec& c) {
  std::vector<ExprPtr> terms;
  for (int j = 0; j < static_cast<int>(c.size()); ++j) {
    const Int& p = c[j];
    if (p > 0) {
      for (Int i = 0; i < p; ++i) terms.push_back(var(j + 1));
    } else if (p < 0) {
      ExprPtr block = var(j + 1);
      for (Int i = 1; i < -p; ++i) block = add(block, var(j + 1));
      terms.push_back(neg(block));
    }
  }
  if (terms.empty()) return zero();
  ExprPtr out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out = add(out, terms[i]);
  return out;
}

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Zero: return "0";
    case ExprKind::Var: return "x" + std::to_string(e->var);
    case ExprKind::Neg: return "-(" + to_string(e->a) + ")";
    case ExprKind::Add: return "(" + to_string(e->a) + " + " + to_string(e->b) + ")";
  }
  return "";
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  ExprPtr parse() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    if (c == '0') {
      ++pos;
      return zero();
    }
    if (c == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("expected a variable index after 'x'");
      const int j = std::stoi(s.substr(start, pos - start));
      if (j < 1) fail("variable index must be >= 1");
      return var(j);
    }
    if (c == '-') {
      ++pos;
      expect('(');
      auto inner = parse();
      expect(')');
      return neg(std::move(inner));
    }
    if (c == '(') {
      ++pos;
      auto lhs = parse();
      expect('+');
      auto rhs = parse();
      expect(')');
      return add(std::move(lhs), std::move(rhs));
    }
    fail("expected '0', 'x<n>', '-(', or '('");
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& s) {
  Parser p{s};
  auto e = p.parse();
  p.skip_ws();
  if (p.pos != s.size()) p.fail("trailing input");
  return e;
}

picard::PObject eval_expr(const ExprPtr& e, const std::vector<picard::PObject>& env,
                          const picard::Model& p) {
  switch (e->kind) {
    case ExprKind::Zero: return p->neutral();
    case ExprKind::Var:
      if (e->var > static_cast<int>(env.size()))
        throw std::out_of_range("variable index exceeds environment length");
      return env[e->var - 1];
    case ExprKind::Neg: return p->negate(eval_expr(e->a, env, p));
    case ExprKind::Add:
      return p->add(eval_expr(e->a, env, p), eval_expr(e->b, env, p));
  }
  throw std::logic_error("unreachable expression kind");
}

picard::PArrow eval_expr_arrows(const ExprPtr& e, const std::vector<picard::PArrow>& env,
                                const picard::Model& p) {
  switch (e->kind) {
    case ExprKind::Zero: return p->identity(p->neutral());
    case ExprKind::Var:
      if (e->var > static_cast<int>(env.size()))
        throw std::out_of_range("variable index exceeds environment length");
      return env[e->var - 1];
    case ExprKind::Neg: return p->negate_arrow(eval_expr_arrows(e->a, env, p));
    case ExprKind::Add:
      return p->add(eval_expr_arrows(e->a, env, p), eval_expr_arrows(e->b, env, p));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace picardlab::expr
