#include "picardlab/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace picardlab::rewrite {

using expr::Expr;
using expr::ExprKind;
using expr::ExprPtr;
using picard::Model;
using picard::PArrow;
using picard::PObject;

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Assoc: return "assoc";
    case Rule::AssocInv: return "assoc-inv";
    case Rule::Comm: return "comm";
    case Rule::UnitL: return "unitL";
    case Rule::UnitLInv: return "unitL-inv";
    case Rule::UnitR: return "unitR";
    case Rule::UnitRInv: return "unitR-inv";
    case Rule::InvCancel: return "inv-cancel";
    case Rule::InvCancelInv: return "inv-cancel-inv";
    case Rule::NegZero: return "neg-zero";
    case Rule::NegDistrib: return "neg-distrib";
    case Rule::NegDistribInv: return "neg-distrib-inv";
  }
  return "?";
}

ExprPtr subterm(const ExprPtr& e, const std::vector<int>& path) {
  ExprPtr cur = e;
  for (int step : path) {
    if (step == 0 && (cur->kind == ExprKind::Neg || cur->kind == ExprKind::Add))
      cur = cur->a;
    else if (step == 1 && cur->kind == ExprKind::Add)
      cur = cur->b;
    else
      throw std::invalid_argument("path leaves the expression");
  }
  return cur;
}

namespace {

ExprPtr replace(const ExprPtr& e, const std::vector<int>& path, std::size_t idx,
                const ExprPtr& sub) {
  if (idx == path.size()) return sub;
  if (path[idx] == 0 && e->kind == ExprKind::Neg)
    return expr::neg(replace(e->a, path, idx + 1, sub));
  if (path[idx] == 0 && e->kind == ExprKind::Add)
    return expr::add(replace(e->a, path, idx + 1, sub), e->b);
  if (path[idx] == 1 && e->kind == ExprKind::Add)
    return expr::add(e->a, replace(e->b, path, idx + 1, sub));
  throw std::invalid_argument("path leaves the expression");
}

[[noreturn]] void bad_redex(Rule r) {
  throw std::invalid_argument(std::string("rule ") + rule_name(r) +
                              " does not match the subterm");
}

// Local rewrite of the redex; validates its shape.
ExprPtr rewrite_redex(const ExprPtr& t, const RewriteStep& s) {
  const Rule r = s.rule;
  switch (r) {
    case Rule::Assoc:
      if (t->kind != ExprKind::Add || t->a->kind != ExprKind::Add) bad_redex(r);
      return expr::add(t->a->a, expr::add(t->a->b, t->b));
    case Rule::AssocInv:
      if (t->kind != ExprKind::Add || t->b->kind != ExprKind::Add) bad_redex(r);
      return expr::add(expr::add(t->a, t->b->a), t->b->b);
    case Rule::Comm:
      if (t->kind != ExprKind::Add) bad_redex(r);
      return expr::add(t->b, t->a);
    case Rule::UnitL:
      if (t->kind != ExprKind::Add || t->a->kind != ExprKind::Zero) bad_redex(r);
      return t->b;
    case Rule::UnitLInv: return expr::add(expr::zero(), t);
    case Rule::UnitR:
      if (t->kind != ExprKind::Add || t->b->kind != ExprKind::Zero) bad_redex(r);
      return t->a;
    case Rule::UnitRInv: return expr::add(t, expr::zero());
    case Rule::InvCancel:
      if (t->kind != ExprKind::Add || t->b->kind != ExprKind::Neg ||
          !expr::expr_equal(t->a, t->b->a))
        bad_redex(r);
      return expr::zero();
    case Rule::InvCancelInv:
      if (t->kind != ExprKind::Zero || !s.introduced) bad_redex(r);
      return expr::add(s.introduced, expr::neg(s.introduced));
    case Rule::NegZero:
      if (t->kind != ExprKind::Neg || t->a->kind != ExprKind::Zero) bad_redex(r);
      return expr::zero();
    case Rule::NegDistrib:
      if (t->kind != ExprKind::Neg || t->a->kind != ExprKind::Add) bad_redex(r);
      return expr::add(expr::neg(t->a->a), expr::neg(t->a->b));
    case Rule::NegDistribInv:
      if (t->kind != ExprKind::Add || t->a->kind != ExprKind::Neg ||
          t->b->kind != ExprKind::Neg)
        bad_redex(r);
      return expr::neg(expr::add(t->a->a, t->b->a));
  }
  bad_redex(r);
}

}  // namespace

ExprPtr apply_step(const ExprPtr& e, const RewriteStep& step) {
  return replace(e, step.path, 0, rewrite_redex(subterm(e, step.path), step));
}

namespace {

// Evaluation memoized on shared subtrees: rewrite steps rebuild only the
// spine along the path, so off-path subtrees hit the cache. Callers must keep
// every evaluated root alive for the cache's lifetime (pointer keys).
struct EvalCache {
  const Model& p;
  const std::vector<PObject>& env;
  std::unordered_map<const Expr*, PObject> memo;

  PObject eval(const ExprPtr& e) {
    const auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    PObject out = [&] {
      switch (e->kind) {
        case ExprKind::Zero: return p->neutral();
        case ExprKind::Var: return env.at(static_cast<std::size_t>(e->var - 1));
        case ExprKind::Neg: return p->negate(eval(e->a));
        default: return p->add(eval(e->a), eval(e->b));
      }
    }();
    memo.emplace(e.get(), out);
    return out;
  }
};

PArrow local_arrow(const Model& p, EvalCache& cache, const ExprPtr& t,
                   const RewriteStep& s) {
  auto ev = [&](const ExprPtr& x) { return cache.eval(x); };
  switch (s.rule) {
    case Rule::Assoc: return p->assoc(ev(t->a->a), ev(t->a->b), ev(t->b));
    case Rule::AssocInv: return p->inverse(p->assoc(ev(t->a), ev(t->b->a), ev(t->b->b)));
    case Rule::Comm: return p->comm(ev(t->a), ev(t->b));
    case Rule::UnitL: return p->unit_left(ev(t->b));
    case Rule::UnitLInv: return p->inverse(p->unit_left(ev(t)));
    case Rule::UnitR: return p->unit_right(ev(t->a));
    case Rule::UnitRInv: return p->inverse(p->unit_right(ev(t)));
    case Rule::InvCancel: return p->inv_witness(ev(t->a));
    case Rule::InvCancelInv: return p->inverse(p->inv_witness(ev(s.introduced)));
    case Rule::NegZero: return picard::neg_zero_witness(p);
    case Rule::NegDistrib: return picard::neg_distrib_witness(p, ev(t->a->a), ev(t->a->b));
    case Rule::NegDistribInv:
      return p->inverse(picard::neg_distrib_witness(p, ev(t->a->a), ev(t->b->a)));
  }
  throw std::logic_error("unreachable rule");
}

PArrow whisker(const Model& p, EvalCache& cache, const ExprPtr& node,
               const RewriteStep& s, std::size_t idx) {
  if (idx == s.path.size()) return local_arrow(p, cache, node, s);
  if (node->kind == ExprKind::Neg && s.path[idx] == 0)
    return p->negate_arrow(whisker(p, cache, node->a, s, idx + 1));
  if (node->kind == ExprKind::Add && s.path[idx] == 0)
    return p->add(whisker(p, cache, node->a, s, idx + 1),
                  p->identity(cache.eval(node->b)));
  if (node->kind == ExprKind::Add && s.path[idx] == 1)
    return p->add(p->identity(cache.eval(node->a)),
                  whisker(p, cache, node->b, s, idx + 1));
  throw std::invalid_argument("path leaves the expression");
}

}  // namespace

PArrow step_arrow(const Model& p, const std::vector<PObject>& env, const ExprPtr& e,
                  const RewriteStep& step) {
  EvalCache cache{p, env, {}};
  return whisker(p, cache, e, step, 0);
}

namespace {

using Path = std::vector<int>;

// ---- normalization engine ------------------------------------------------

class Normalizer {
 public:
  Normalizer(ExprPtr e, Strategy strategy) : cur_(std::move(e)), strategy_(strategy) {}

  std::pair<ExprPtr, RewriteWitness> run() {
    phase_nnf();
    phase_drop_zeros();
    phase_left_nest();
    if (cur_->kind == ExprKind::Add || is_literal(cur_)) {
      phase_sort();
      phase_cancel();
      if (cur_->kind == ExprKind::Add || is_literal(cur_)) phase_merge_neg();
    }
    return {cur_, RewriteWitness{std::move(steps_)}};
  }

 private:
  ExprPtr cur_;
  Strategy strategy_;
  std::vector<RewriteStep> steps_;

  void emit(Rule r, Path path, ExprPtr introduced = nullptr) {
    RewriteStep s{r, std::move(path), std::move(introduced)};
    cur_ = apply_step(cur_, s);
    steps_.push_back(std::move(s));
  }

  static bool is_literal(const ExprPtr& e) {
    return e->kind == ExprKind::Var ||
           (e->kind == ExprKind::Neg && e->a->kind == ExprKind::Var);
  }

  // Collects positions matching pred, then picks per strategy: innermost =
  // deepest (lexicographically first among those), outermost = shallowest.
  template <typename Pred>
  std::optional<Path> find_redex(Pred pred) const {
    std::optional<Path> best;
    Path path;
    auto visit = [&](auto&& self, const ExprPtr& e) -> void {
      if (pred(e)) {
        if (!best) {
          best = path;
        } else {
          const bool deeper = path.size() > best->size();
          const bool shallower = path.size() < best->size();
          if (strategy_ == Strategy::Innermost ? deeper : shallower) best = path;
          // Equal depth: lexicographic order of the traversal already visits
          // smaller paths first, so keep the existing one.
        }
      }
      if (e->kind == ExprKind::Neg) {
        path.push_back(0);
        self(self, e->a);
        path.pop_back();
      } else if (e->kind == ExprKind::Add) {
        path.push_back(0);
        self(self, e->a);
        path.pop_back();
        path.push_back(1);
        self(self, e->b);
        path.pop_back();
      }
    };
    visit(visit, cur_);
    return best;
  }

  // Neg(Neg(a)) -> a within the alphabet: insert 0, expand it to a + (-a),
  // reassociate, cancel -(a) against -(-(a)), drop the unit.
  void double_neg_macro(const Path& p) {
    const ExprPtr a = subterm(cur_, p)->a->a;
    emit(Rule::UnitLInv, p);
    Path p0 = p;
    p0.push_back(0);
    emit(Rule::InvCancelInv, p0, a);
    emit(Rule::Assoc, p);
    Path p1 = p;
    p1.push_back(1);
    emit(Rule::InvCancel, p1);
    emit(Rule::UnitR, p);
  }

  void phase_nnf() {
    const auto pred = [](const ExprPtr& e) {
      return e->kind == ExprKind::Neg && e->a->kind != ExprKind::Var;
    };
    while (auto p = find_redex(pred)) {
      const auto t = subterm(cur_, *p);
      switch (t->a->kind) {
        case ExprKind::Add: emit(Rule::NegDistrib, *p); break;
        case ExprKind::Zero: emit(Rule::NegZero, *p); break;
        case ExprKind::Neg: double_neg_macro(*p); break;
        default: throw std::logic_error("unexpected redex");
      }
    }
  }

  void phase_drop_zeros() {
    const auto pred = [](const ExprPtr& e) {
      return e->kind == ExprKind::Add &&
             (e->a->kind == ExprKind::Zero || e->b->kind == ExprKind::Zero);
    };
    while (auto p = find_redex(pred)) {
      const auto t = subterm(cur_, *p);
      emit(t->a->kind == ExprKind::Zero ? Rule::UnitL : Rule::UnitR, *p);
    }
  }

  void phase_left_nest() {
    const auto pred = [](const ExprPtr& e) {
      return e->kind == ExprKind::Add && e->b->kind == ExprKind::Add;
    };
    while (auto p = find_redex(pred)) emit(Rule::AssocInv, *p);
  }

  // The left spine of a left-nested sum, leftmost literal first.
  std::vector<ExprPtr> literals() const {
    std::vector<ExprPtr> out;
    ExprPtr e = cur_;
    while (e->kind == ExprKind::Add) {
      out.push_back(e->b);
      e = e->a;
    }
    out.push_back(e);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Sort key: ascending variable, positives before the Neg block.
  static std::pair<int, int> key(const ExprPtr& lit) {
    if (lit->kind == ExprKind::Var) return {lit->var, 0};
    ExprPtr leaf = lit->a;  // Neg over a left-nested chain of one variable
    while (leaf->kind == ExprKind::Add) leaf = leaf->a;
    return {leaf->var, 1};
  }

  // Path to the Add node whose right child is literal i+1 (1-based i).
  static Path pair_node(int k, int i) { return Path(static_cast<std::size_t>(k - 1 - i), 0); }

  void swap_adjacent(int k, int i) {
    const Path q = pair_node(k, i);
    if (i == 1) {
      emit(Rule::Comm, q);
      return;
    }
    emit(Rule::Assoc, q);
    Path q1 = q;
    q1.push_back(1);
    emit(Rule::Comm, q1);
    emit(Rule::AssocInv, q);
  }

  void phase_sort() {
    auto lits = literals();
    const int k = static_cast<int>(lits.size());
    if (k < 2) return;
    // Bubble sort; the two strategies run their passes in opposite directions
    // and so emit different (but equivalent) witness trails. The literal list
    // is maintained in place: a swap gadget exchanges exactly one adjacent pair.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      if (strategy_ == Strategy::Innermost) {
        for (int i = 1; i < k; ++i)
          if (key(lits[i - 1]) > key(lits[i])) {
            swap_adjacent(k, i);
            std::swap(lits[static_cast<std::size_t>(i - 1)], lits[static_cast<std::size_t>(i)]);
            dirty = true;
          }
      } else {
        for (int i = k - 1; i >= 1; --i)
          if (key(lits[i - 1]) > key(lits[i])) {
            swap_adjacent(k, i);
            std::swap(lits[static_cast<std::size_t>(i - 1)], lits[static_cast<std::size_t>(i)]);
            dirty = true;
          }
      }
    }
  }

  void phase_cancel() {
    auto lits = literals();
    while (true) {
      const int k = static_cast<int>(lits.size());
      int found = 0;
      for (int i = 1; i < k; ++i)
        if (lits[i - 1]->kind == ExprKind::Var && lits[i]->kind == ExprKind::Neg &&
            expr::expr_equal(lits[i - 1], lits[i]->a)) {
          found = i;
          break;
        }
      if (found == 0) return;
      const int i = found;
      const Path q = pair_node(k, i);
      lits.erase(lits.begin() + (i - 1), lits.begin() + (i + 1));
      if (k == 2) {
        emit(Rule::InvCancel, {});
        return;  // everything cancelled
      }
      if (i == 1) {
        emit(Rule::InvCancel, q);
        Path parent = q;
        parent.pop_back();
        emit(Rule::UnitL, parent);
      } else {
        emit(Rule::Assoc, q);
        Path q1 = q;
        q1.push_back(1);
        emit(Rule::InvCancel, q1);
        emit(Rule::UnitR, q);
      }
    }
  }

  void phase_merge_neg() {
    auto lits = literals();
    while (true) {
      const int k = static_cast<int>(lits.size());
      int found = 0;
      for (int i = 1; i < k; ++i)
        if (lits[i - 1]->kind == ExprKind::Neg && lits[i]->kind == ExprKind::Neg &&
            key(lits[i - 1]).first == key(lits[i]).first) {
          found = i;
          break;
        }
      if (found == 0) return;
      const int i = found;
      const Path q = pair_node(k, i);
      lits[static_cast<std::size_t>(i - 1)] =
          expr::neg(expr::add(lits[static_cast<std::size_t>(i - 1)]->a,
                              lits[static_cast<std::size_t>(i)]->a));
      lits.erase(lits.begin() + i);
      if (i == 1) {
        emit(Rule::NegDistribInv, q);
      } else {
        emit(Rule::Assoc, q);
        Path q1 = q;
        q1.push_back(1);
        emit(Rule::NegDistribInv, q1);
      }
    }
  }
};

}  // namespace

std::pair<ExprPtr, RewriteWitness> normalize_steps(const ExprPtr& e, Strategy strategy) {
  auto [canon, witness] = Normalizer(e, strategy).run();
  // Safety net: the trail must land exactly on the coefficient normal form.
  const auto expected = expr::canonical_form(expr::coeffs(e, expr::max_var(e)));
  if (!expr::expr_equal(canon, expected))
    throw std::logic_error("normalization did not reach the canonical form");
  return {std::move(canon), std::move(witness)};
}

NormalizationResult normalize_with_witness(const ExprPtr& e, const Model& p,
                                           const std::vector<PObject>& env,
                                           Strategy strategy) {
  auto [canon, witness] = normalize_steps(e, strategy);
  ExprPtr running = e;
  EvalCache cache{p, env, {}};
  // Every intermediate root stays alive so the cache's pointer keys do.
  std::vector<ExprPtr> roots{running};
  PArrow arrow = p->identity(cache.eval(e));
  for (const auto& s : witness.steps) {
    arrow = p->compose(whisker(p, cache, running, s, 0), arrow);
    running = apply_step(running, s);
    roots.push_back(running);
  }
  return NormalizationResult{std::move(canon), std::move(witness), std::move(arrow)};
}

PArrow coherence_iso(const ExprPtr& e1, const ExprPtr& e2, const Model& p,
                     const std::vector<PObject>& env) {
  const int arity = static_cast<int>(env.size());
  if (expr::coeffs(e1, arity) != expr::coeffs(e2, arity))
    throw std::invalid_argument("coherence_iso: coefficient vectors differ");
  const auto n1 = normalize_with_witness(e1, p, env, Strategy::Innermost);
  const auto n2 = normalize_with_witness(e2, p, env, Strategy::Innermost);
  return p->compose(p->inverse(n2.arrow), n1.arrow);
}

}  // namespace picardlab::rewrite
