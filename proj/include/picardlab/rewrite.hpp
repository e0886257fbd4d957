#pragma once

#include <string>
#include <vector>

#include "picardlab/expr.hpp"
#include "picardlab/picard.hpp"

namespace picardlab::rewrite {

// Fixed rule alphabet. Each rule rewrites the subterm at a position:
//   assoc          Add(Add(a,b),c) -> Add(a,Add(b,c))      witnessed by a
//   comm           Add(a,b)        -> Add(b,a)             witnessed by c
//   unitL          Add(0,a)        -> a                    witnessed by l
//   unitR          Add(a,0)        -> a                    witnessed by r
//   inv-cancel     Add(a,Neg(a))   -> 0                    witnessed by iota
//   neg-zero       Neg(0)          -> 0                    derived witness
//   neg-distrib    Neg(Add(a,b))   -> Add(Neg(a),Neg(b))   derived witness
// plus the inverses of all invertible ones. There is no neg-neg rule;
// Neg(Neg(a)) -> a is emitted as a five-step macro inside the alphabet.
enum class Rule {
  Assoc,
  AssocInv,
  Comm,
  UnitL,
  UnitLInv,
  UnitR,
  UnitRInv,
  InvCancel,
  InvCancelInv,
  NegZero,
  NegDistrib,
  NegDistribInv,
};

const char* rule_name(Rule r);

// One primitive step: rule applied at a position path (0 = left/only child,
// 1 = right child). inv-cancel^-1 rewrites 0 -> Add(a, Neg(a)) and must say
// which `a` it introduces; all other rules leave `introduced` null.
struct RewriteStep {
  Rule rule;
  std::vector<int> path;
  expr::ExprPtr introduced;
};

// Proof term: an ordered trail of primitive steps chaining source to target.
struct RewriteWitness {
  std::vector<RewriteStep> steps;
};

expr::ExprPtr subterm(const expr::ExprPtr& e, const std::vector<int>& path);
// Applies one step, validating the redex shape; throws on mismatch.
expr::ExprPtr apply_step(const expr::ExprPtr& e, const RewriteStep& step);

// The step's model arrow, whiskered into position with the + bifunctor (and
// arrow negation under Neg nodes): eval(e) -> eval(apply_step(e, step)).
picard::PArrow step_arrow(const picard::Model& p, const std::vector<picard::PObject>& env,
                          const expr::ExprPtr& e, const RewriteStep& step);

// Two independent redex-selection strategies; both must reach the same
// canonical form with the same composite witness arrow (tested property).
enum class Strategy { Innermost, Outermost };

struct NormalizationResult {
  expr::ExprPtr canonical;
  RewriteWitness witness;
  picard::PArrow arrow;  // eval(input) -> eval(canonical)
};

NormalizationResult normalize_with_witness(const expr::ExprPtr& e, const picard::Model& p,
                                           const std::vector<picard::PObject>& env,
                                           Strategy strategy = Strategy::Innermost);

// Pure expression-level normalization (no model), for callers that only need
// the proof term.
std::pair<expr::ExprPtr, RewriteWitness> normalize_steps(const expr::ExprPtr& e,
                                                         Strategy strategy);

// witness(e2)^-1 . witness(e1): eval(e1) -> eval(e2); requires equal
// coefficient vectors, independent of rewrite strategy.
picard::PArrow coherence_iso(const expr::ExprPtr& e1, const expr::ExprPtr& e2,
                             const picard::Model& p,
                             const std::vector<picard::PObject>& env);

}  // namespace picardlab::rewrite
