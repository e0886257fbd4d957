#pragma once

#include <memory>
#include <string>
#include <vector>

#include "picardlab/picard.hpp"
#include "picardlab/zlin.hpp"

namespace picardlab::expr {

using zlin::IntVec;

enum class ExprKind { Zero, Var, Neg, Add };

// Formal-sum expression over variables x1..xn: Zero | Var(j) | Neg(e) |
// Add(e1, e2). Immutable, shared subtrees.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  int var = 0;    // Var only, 1-based
  ExprPtr a, b;   // Neg uses a; Add uses a, b
};

ExprPtr zero();
ExprPtr var(int j);
ExprPtr neg(ExprPtr e);
ExprPtr add(ExprPtr a, ExprPtr b);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
int max_var(const ExprPtr& e);
int expr_size(const ExprPtr& e);

// Coefficient vector in Z^arity; throws on out-of-range variable index.
IntVec coeffs(const ExprPtr& e, int arity);

// Deterministic normal form: left-nested Add over ascending variable index;
// coefficient p > 0 contributes p copies of Var(j); p < 0 contributes one
// Neg over the left-nested chain of |p| copies; empty sum = Zero.
ExprPtr canonical_form(const IntVec& c);

// CLI literal syntax: `0`, `x1`, `-(E)`, `(E + E)`.
std::string to_string(const ExprPtr& e);
ExprPtr parse_expr(const std::string& s);

// Structural evaluation in a model: Zero -> e, Var(j) -> env[j-1],
// Neg -> object negation, Add -> group law.
picard::PObject eval_expr(const ExprPtr& e, const std::vector<picard::PObject>& env,
                          const picard::Model& p);
// The same expression shape applied to arrows (Neg = arrow negation).
picard::PArrow eval_expr_arrows(const ExprPtr& e, const std::vector<picard::PArrow>& env,
                                const picard::Model& p);

}  // namespace picardlab::expr
