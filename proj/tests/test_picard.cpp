#include "doctest.h"
#include "picardlab/picard.hpp"

using namespace picardlab;
using namespace picardlab::zlin;
using namespace picardlab::complexes;
using namespace picardlab::picard;

namespace {

const FgAbelianGroup kZ = FgAbelianGroup::free(1);

// d: Z^2 -> Z, (a, k) |-> 4a. pi0 = Z/4 (mod-4 classes), pi1 = Z (the k axis).
TwoTermComplex mod4_complex() {
  return make_complex(FgAbelianGroup::free(2), kZ, IntMatrix::from({{4, 0}}));
}

// Explicit section s(i) = i for i in {0..3}; pins the carry cochain.
SkeletalConfig mod4_config(std::vector<std::pair<std::pair<IntVec, IntVec>, IntVec>> g) {
  SkeletalConfig cfg;
  cfg.section = std::vector<std::pair<IntVec, IntVec>>{
      {{Int(0)}, {Int(0)}}, {{Int(1)}, {Int(1)}}, {{Int(2)}, {Int(2)}},
      {{Int(3)}, {Int(3)}}};
  cfg.cochain = std::move(g);
  return cfg;
}

void expect_all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    INFO(r.name, ": ", r.counterexample);
    CHECK(r.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("strict model: frozen examples") {
  // [Z -x2-> Z]: Hom(0,2) = {1}, Hom(0,1) = empty.
  const auto p = PicardGroupoid::strict_model(make_complex(kZ, kZ, IntMatrix::from({{2}})));
  const auto x0 = p->object_from_coords({Int(0)});
  const auto x1 = p->object_from_coords({Int(1)});
  const auto x2 = p->object_from_coords({Int(2)});
  REQUIRE(p->has_arrow(x0, x2));
  CHECK(p->some_arrow(x0, x2)->payload.coords == IntVec{Int(1)});
  CHECK_FALSE(p->has_arrow(x0, x1));
  // pi1 is trivial, so the arrow 0 -> 2 is unique: make_arrow accepts only 1.
  CHECK_THROWS_AS(p->make_arrow(x0, x2, canonicalize(kZ, {Int(2)})),
                  std::invalid_argument);

  // Discrete case [trivial -> Z]: only identity arrows, + is integer addition.
  const auto disc = PicardGroupoid::strict_model(
      make_complex(FgAbelianGroup::trivial(), kZ, IntMatrix::zero(1, 0)));
  const auto a3 = disc->object_from_coords({Int(3)});
  const auto a5 = disc->object_from_coords({Int(5)});
  CHECK(disc->add(a3, a5).payload.coords == IntVec{Int(8)});
  CHECK(disc->has_arrow(a3, a3));
  CHECK_FALSE(disc->has_arrow(a3, a5));

  // [Z -id-> Z]: every Hom(x,y) is a singleton (the paper's trivial stack 1).
  const auto one = PicardGroupoid::strict_model(make_complex(kZ, kZ, IntMatrix::identity(1)));
  const auto y = one->object_from_coords({Int(-7)});
  const auto z = one->object_from_coords({Int(11)});
  REQUIRE(one->has_arrow(y, z));
  CHECK(one->some_arrow(y, z)->payload.coords == IntVec{Int(18)});
}

TEST_CASE("strict model: witnesses are identities and axioms hold") {
  const auto p = PicardGroupoid::strict_model(mod4_complex());
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng),
               z = p->sample_object(rng);
    CHECK(p->assoc(x, y, z) == p->identity(p->add(p->add(x, y), z)));
    CHECK(p->comm(x, y) == p->identity(p->add(x, y)));
    CHECK(p->unit_left(x) == p->identity(x));
    CHECK(p->inv_witness(x) == p->identity(p->neutral()));
  }
  expect_all_pass(check_picard_axioms(p, 20, 42));
}

TEST_CASE("skeletal model with zero cochain: all witnesses identity") {
  const auto p = PicardGroupoid::skeletal_model(mod4_complex(), mod4_config({}));
  CHECK(p->object_group() == FgAbelianGroup({Int(4)}));
  CHECK(p->arrow_group() == FgAbelianGroup({Int(0)}));
  // The carry cochain h is a cocycle, so transported assoc and comm vanish.
  for (long long i = 0; i < 4; ++i)
    for (long long j = 0; j < 4; ++j) {
      const auto x = p->object_from_coords({Int(i)});
      const auto y = p->object_from_coords({Int(j)});
      CHECK(p->comm(x, y) == p->identity(p->add(x, y)));
      for (long long k = 0; k < 4; ++k) {
        const auto z = p->object_from_coords({Int(k)});
        CHECK(p->assoc(x, y, z) == p->identity(p->add(p->add(x, y), z)));
      }
    }
  expect_all_pass(check_picard_axioms(p, 20, 42));
}

TEST_CASE("skeletal model with g(1,2)=1: frozen transport values") {
  const auto p = PicardGroupoid::skeletal_model(
      mod4_complex(), mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}}}));
  const auto x1 = p->object_from_coords({Int(1)});
  const auto x2 = p->object_from_coords({Int(2)});
  // c(1,2) = g(1,2) - g(2,1) = 1; c(2,1) = -1.
  CHECK(p->comm(x1, x2).payload.coords == IntVec{Int(1)});
  CHECK(p->comm(x2, x1).payload.coords == IntVec{Int(-1)});
  // a(1,1,2) = (delta g)(1,1,2) = g(1,2) - g(2,2) + g(1,3) - g(1,1) = 1 != 0.
  CHECK_FALSE(p->assoc(x1, x1, x2) == p->identity(p->add(p->add(x1, x1), x2)));
  // Strictness holds regardless of g.
  CHECK(p->comm(x1, x1) == p->identity(p->add(x1, x1)));
  // The transported structure still satisfies every axiom.
  expect_all_pass(check_picard_axioms(p, 20, 42));
}

TEST_CASE("skeletal model with auto section and torsion pi1") {
  // d: Z -> Z/4 + Z/8, a |-> (2a, 4a): pi1 = ker = 4Z/8Z-ish; compute and fuzz.
  const auto c = make_complex(kZ, FgAbelianGroup({Int(4), Int(8)}),
                              IntMatrix::from({{2}, {4}}));
  const auto p = PicardGroupoid::skeletal_model(c, {});
  expect_all_pass(check_picard_axioms(p, 20, 7));
  // Non-normalized cochain (g(0,x) != 0 allowed): axioms must still hold.
  const auto h = homology(c);
  REQUIRE_FALSE(h.pi1.is_trivial());
  auto key = [&](long long v) {
    IntVec k(h.pi0.size());
    if (!k.empty()) k[0] = v;
    return canonicalize(h.pi0, k).coords;
  };
  SkeletalConfig cfg;
  cfg.cochain = {{{key(0), key(1)}, IntVec(h.pi1.size(), Int(1))},
                 {{key(2), key(3)}, IntVec(h.pi1.size(), Int(1))}};
  const auto q = PicardGroupoid::skeletal_model(c, cfg);
  expect_all_pass(check_picard_axioms(q, 20, 7));
}

TEST_CASE("explicit section validation") {
  SkeletalConfig bad;
  bad.section = std::vector<std::pair<IntVec, IntVec>>{
      {{Int(0)}, {Int(0)}}, {{Int(1)}, {Int(1)}}, {{Int(2)}, {Int(2)}}};
  CHECK_THROWS_AS(PicardGroupoid::skeletal_model(mod4_complex(), bad),
                  std::invalid_argument);  // misses 3
  SkeletalConfig not_split;
  not_split.section = std::vector<std::pair<IntVec, IntVec>>{
      {{Int(0)}, {Int(0)}}, {{Int(1)}, {Int(2)}}, {{Int(2)}, {Int(2)}},
      {{Int(3)}, {Int(3)}}};
  CHECK_THROWS_AS(PicardGroupoid::skeletal_model(mod4_complex(), not_split),
                  std::invalid_argument);  // s(1) = 2 is not a lift of 1
}

TEST_CASE("derive_left_unitor and unit identities") {
  const auto p = PicardGroupoid::skeletal_model(
      mod4_complex(), mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}},
                                   {{{Int(3)}, {Int(3)}}, {Int(-2)}}}));
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto x = p->sample_object(rng);
    CHECK(derive_left_unitor(p, x) == p->unit_left(x));
    CHECK(p->compose(p->unit_left(x), p->comm(x, p->neutral())) == p->unit_right(x));
  }
  CHECK(derive_left_unitor(p, p->neutral()) == p->phi());
  CHECK(p->phi() == p->unit_left(p->neutral()));
  CHECK(p->phi() == p->unit_right(p->neutral()));
}

TEST_CASE("derived witnesses have the right endpoints and compose coherently") {
  const auto p = PicardGroupoid::skeletal_model(
      mod4_complex(), mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}}}));
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const auto nn = neg_neg_witness(p, x);
    CHECK(nn.src == p->negate(p->negate(x)));
    CHECK(nn.dst == x);
    const auto nd = neg_distrib_witness(p, x, y);
    CHECK(nd.src == p->negate(p->add(x, y)));
    CHECK(nd.dst == p->add(p->negate(x), p->negate(y)));
    const auto m4 = middle_four(p, x, y, p->negate(x), p->negate(y));
    CHECK(m4.src == p->add(p->add(x, y), p->add(p->negate(x), p->negate(y))));
  }
  const auto nz = neg_zero_witness(p);
  CHECK(nz.src == p->negate(p->neutral()));
  CHECK(nz.dst == p->neutral());
}

TEST_CASE("functor from a complex morphism: strict to strict") {
  const auto c = make_complex(kZ, kZ, IntMatrix::from({{2}}));
  const auto p = PicardGroupoid::strict_model(c);
  const auto t3 = make_hom(kZ, kZ, IntMatrix::from({{3}}));
  const auto m = make_complex_morphism(c, c, t3, t3);
  const auto f = functor_from_complex_morphism(m, p, p);
  CHECK(f.obj(p->object_from_coords({Int(4)})).payload.coords == IntVec{Int(12)});
  expect_all_pass(check_additive_functor(f, 20, 5));
  expect_all_pass(check_additive_functor(identity_functor(p), 10, 5));
}

TEST_CASE("functor from a complex morphism: mixed model kinds") {
  const auto c = mod4_complex();
  const auto strict = PicardGroupoid::strict_model(c);
  const auto skel = PicardGroupoid::skeletal_model(
      c, mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}}}));
  const auto id_m = identity_morphism(c);

  // Skeletalization functor strict -> skeletal, and the section the other way.
  const auto proj = functor_from_complex_morphism(id_m, strict, skel);
  expect_all_pass(check_additive_functor(proj, 15, 5));
  const auto sect = functor_from_complex_morphism(id_m, skel, strict);
  expect_all_pass(check_additive_functor(sect, 15, 5));
  // Their composite skeletal -> skeletal is the identity on objects.
  const auto round = compose_functors(proj, sect);
  expect_all_pass(check_additive_functor(round, 15, 5));
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto x = skel->sample_object(rng);
    CHECK(round.obj(x) == x);
    const auto a = skel->sample_arrow_from(rng, x);
    CHECK(round.arr(a) == a);
  }
  // Skeletal <-> strict models of one complex are connected by a quasi-iso.
  CHECK(is_quasi_iso(id_m).is_quasi_iso);
}

TEST_CASE("additive transformations") {
  const auto c = mod4_complex();
  const auto skel = PicardGroupoid::skeletal_model(
      c, mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}}}));
  const auto f = identity_functor(skel);
  expect_all_pass(check_additive_transformation(identity_transformation(f), 10, 5));
  // pi0 = Z/4, pi1 = Z: the only hom is zero, which still exercises the path.
  const auto k = zero_hom(skel->homology().pi0, skel->homology().pi1);
  expect_all_pass(check_additive_transformation(transformation_from_hom(f, k), 10, 5));

  // A complex with torsion pi1 admits nonzero components: d = 0: Z/2 -> Z/2?
  // Use [Z/2 -0-> Z/2]: pi0 = Z/2, pi1 = Z/2, hom k(1) = 1.
  const FgAbelianGroup z2({Int(2)});
  const auto c2 = make_complex(z2, z2, IntMatrix::zero(1, 1));
  const auto q = PicardGroupoid::skeletal_model(c2, {});
  const auto g = identity_functor(q);
  const auto k2 = make_hom(q->homology().pi0, q->homology().pi1, IntMatrix::from({{1}}));
  const auto u = transformation_from_hom(g, k2);
  CHECK(u.component(q->object_from_coords({Int(1)})).payload.coords == IntVec{Int(1)});
  expect_all_pass(check_additive_transformation(u, 10, 5));
}

TEST_CASE("corrupted commutativity is caught by the axiom suite") {
  // Flipping the sign of one cochain entry only (asymmetric corruption) makes
  // the transported c fail symmetry/hexagon; emulate by comparing two models
  // that differ in g and checking cross-model arrow inequality triggers.
  const auto good = PicardGroupoid::skeletal_model(
      mod4_complex(), mod4_config({{{{Int(1)}, {Int(2)}}, {Int(1)}}}));
  // Hand-build a "corrupted" comm and verify the symmetry equation fails:
  // replace c(1,2) by its negation and compose with c(2,1).
  const auto x1 = good->object_from_coords({Int(1)});
  const auto x2 = good->object_from_coords({Int(2)});
  const auto bad_c12 = good->inverse(good->comm(x1, x2));  // wrong direction payload
  const auto composite = good->compose(good->comm(x2, x1), bad_c12);
  CHECK_FALSE(composite == good->identity(good->add(x1, x2)));
}
