#include "doctest.h"
#include "picardlab/algebra.hpp"
#include "picardlab/rewrite.hpp"

using namespace picardlab;
using namespace picardlab::expr;
using namespace picardlab::rewrite;
using namespace picardlab::picard;
using namespace picardlab::complexes;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

namespace {

Model mod4_skeletal() {
  const auto c = make_complex(zlin::FgAbelianGroup::free(2), zlin::FgAbelianGroup::free(1),
                              IntMatrix::from({{4, 0}}));
  SkeletalConfig cfg;
  cfg.cochain = {{{{Int(1)}, {Int(2)}}, {Int(1)}}, {{{Int(3)}, {Int(3)}}, {Int(-2)}}};
  return PicardGroupoid::skeletal_model(c, cfg);
}

Model discrete_z() {
  return PicardGroupoid::strict_model(make_complex(
      zlin::FgAbelianGroup::trivial(), zlin::FgAbelianGroup::free(1),
      IntMatrix::zero(1, 0)));
}

}  // namespace

TEST_CASE("apply_step implements the rule semantics") {
  const auto e = add(add(var(1), var(2)), var(3));
  CHECK(expr_equal(apply_step(e, {Rule::Assoc, {}, nullptr}),
                   add(var(1), add(var(2), var(3)))));
  CHECK(expr_equal(apply_step(e, {Rule::Comm, {0}, nullptr}),
                   add(add(var(2), var(1)), var(3))));
  CHECK(expr_equal(apply_step(add(zero(), var(1)), {Rule::UnitL, {}, nullptr}), var(1)));
  CHECK(expr_equal(apply_step(add(var(1), neg(var(1))), {Rule::InvCancel, {}, nullptr}),
                   zero()));
  CHECK(expr_equal(apply_step(zero(), {Rule::InvCancelInv, {}, var(2)}),
                   add(var(2), neg(var(2)))));
  CHECK(expr_equal(apply_step(neg(add(var(1), var(2))), {Rule::NegDistrib, {}, nullptr}),
                   add(neg(var(1)), neg(var(2)))));
  CHECK_THROWS_AS(apply_step(e, {Rule::UnitL, {}, nullptr}), std::invalid_argument);
  CHECK_THROWS_AS(apply_step(add(var(1), neg(var(2))), {Rule::InvCancel, {}, nullptr}),
                  std::invalid_argument);
}

TEST_CASE("normalization reaches the canonical form (strict model, witness trivial)") {
  const auto p = discrete_z();
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const int arity = 1 + static_cast<int>(rng.below(4));
    // Reuse the corpus generator through the public confluence checker later;
    // here exercise a few handcrafted shapes.
    const auto cases = std::vector<ExprPtr>{
        add(var(1), zero()),
        neg(neg(var(1))),
        neg(add(var(1), neg(var(1)))),
        add(add(neg(var(1)), var(1)), var(1)),
        add(neg(zero()), add(var(1), var(1))),
    };
    std::vector<PObject> env;
    for (int i = 0; i < arity; ++i) env.push_back(p->sample_object(rng));
    for (const auto& e : cases) {
      const auto n = normalize_with_witness(e, p, env);
      CHECK(expr_equal(n.canonical, canonical_form(coeffs(e, expr::max_var(e)))));
      CHECK(n.arrow.src == eval_expr(e, env, p));
      CHECK(n.arrow.dst == eval_expr(n.canonical, env, p));
      // Strict-model degeneracy: every witness composite has identity payload.
      CHECK(n.arrow.payload == zlin::zero_element(p->arrow_group()));
    }
  }
}

TEST_CASE("normalize_with_witness: skeletal comm example") {
  const auto p = mod4_skeletal();
  const auto env = std::vector<PObject>{p->object_from_coords({Int(1)}),
                                        p->object_from_coords({Int(2)})};
  // e = x2 + x1 normalizes to x1 + x2 by one comm step with payload c(1,2).
  const auto n = normalize_with_witness(add(var(2), var(1)), p, env);
  REQUIRE(n.witness.steps.size() == 1);
  CHECK(n.witness.steps[0].rule == Rule::Comm);
  CHECK(n.arrow == p->comm(env[1], env[0]));
  // Already canonical: empty witness, identity arrow.
  const auto m = normalize_with_witness(add(var(1), var(2)), p, env);
  CHECK(m.witness.steps.empty());
  CHECK(m.arrow == p->identity(p->add(env[0], env[1])));
}

TEST_CASE("coherence_iso equals the model witnesses") {
  const auto p = mod4_skeletal();
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const std::vector<PObject> env{p->sample_object(rng), p->sample_object(rng),
                                   p->sample_object(rng)};
    const auto a = coherence_iso(add(add(var(1), var(2)), var(3)),
                                 add(var(1), add(var(2), var(3))), p, env);
    CHECK(a == p->assoc(env[0], env[1], env[2]));
    const auto c = coherence_iso(add(var(1), var(2)), add(var(2), var(1)), p,
                                 {env[0], env[1]});
    CHECK(c == p->comm(env[0], env[1]));
    const auto e = add(var(1), var(2));
    CHECK(coherence_iso(e, e, p, {env[0], env[1]}) ==
          p->identity(p->add(env[0], env[1])));
  }
  CHECK_THROWS_AS(
      coherence_iso(var(1), add(var(1), var(1)), p,
                    std::vector<PObject>{p->object_from_coords({Int(1)})}),
      std::invalid_argument);
}

TEST_CASE("confluence on both models") {
  for (const auto& p : {discrete_z(), mod4_skeletal()}) {
    for (const auto& r : algebra::check_confluence(p, 120, 2026)) {
      INFO(r.name, ": ", r.counterexample);
      CHECK(r.status == CheckStatus::Pass);
    }
  }
}
