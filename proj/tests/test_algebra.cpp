#include "doctest.h"
#include "picardlab/algebra.hpp"

using namespace picardlab;
using namespace picardlab::picard;
using namespace picardlab::complexes;
using namespace picardlab::algebra;
using theory::make_cell;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

namespace {

Model discrete_z() {
  return PicardGroupoid::strict_model(make_complex(
      zlin::FgAbelianGroup::trivial(), zlin::FgAbelianGroup::free(1),
      IntMatrix::zero(1, 0)));
}

Model mod4_skeletal() {
  const auto c = make_complex(zlin::FgAbelianGroup::free(2), zlin::FgAbelianGroup::free(1),
                              IntMatrix::from({{4, 0}}));
  SkeletalConfig cfg;
  cfg.cochain = {{{{Int(1)}, {Int(2)}}, {Int(1)}}, {{{Int(2)}, {Int(3)}}, {Int(3)}}};
  return PicardGroupoid::skeletal_model(c, cfg);
}

void expect_all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    INFO(r.name, ": ", r.counterexample);
    CHECK(r.status == CheckStatus::Pass);
  }
}

}  // namespace

TEST_CASE("apply_matrix_objects: frozen examples") {
  const auto p = discrete_z();
  const ObjTuple xy{p->object_from_coords({Int(3)}), p->object_from_coords({Int(5)})};
  // (1,1) on (3,5) = 8.
  const auto sum = apply_matrix_objects(make_cell(IntMatrix::from({{1, 1}})), xy, p);
  REQUIRE(sum.size() == 1);
  CHECK(sum[0].payload.coords == IntVec{Int(8)});
  // Identity echoes the tuple.
  CHECK(apply_matrix_objects(theory::identity_cell(2), xy, p) == xy);
  // (2,-1) on (3,5) = 1.
  const auto comb = apply_matrix_objects(make_cell(IntMatrix::from({{2, -1}})), xy, p);
  CHECK(comb[0].payload.coords == IntVec{Int(1)});
  CHECK_THROWS_AS(apply_matrix_objects(make_cell(IntMatrix::from({{1, 1, 1}})), xy, p),
                  zlin::DimensionError);
}

TEST_CASE("apply_matrix_arrows preserves identities and composition") {
  const auto p = mod4_skeletal();
  const auto cell = make_cell(IntMatrix::from({{2, -1}, {0, 3}}));
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const auto x = sample_tuple(p, 2, rng);
    ArrTuple ids{p->identity(x[0]), p->identity(x[1])};
    const auto img = apply_matrix_arrows(cell, ids, p);
    const auto objs = apply_matrix_objects(cell, x, p);
    CHECK((img == ArrTuple{p->identity(objs[0]), p->identity(objs[1])}));
    const auto f = sample_arrow_tuple(p, x, rng);
    const auto g = sample_arrow_tuple(p, {f[0].dst, f[1].dst}, rng);
    const auto lhs = apply_matrix_arrows(
        cell, {p->compose(g[0], f[0]), p->compose(g[1], f[1])}, p);
    const auto fa = apply_matrix_arrows(cell, f, p);
    const auto ga = apply_matrix_arrows(cell, g, p);
    CHECK((lhs == ArrTuple{p->compose(ga[0], fa[0]), p->compose(ga[1], fa[1])}));
  }
}

TEST_CASE("hat: compositors and product preservation") {
  expect_all_pass(check_hat_structure(discrete_z(), 30, 11));
  expect_all_pass(check_hat_structure(mod4_skeletal(), 30, 11));
}

TEST_CASE("hat: strict model compositors are identities") {
  const auto p = discrete_z();
  const auto a = hat(p);
  Rng rng(2);
  const auto q = make_cell(IntMatrix::from({{1, 1}}));
  const auto cell = make_cell(IntMatrix::from({{1, 0}, {1, 1}}));
  for (int t = 0; t < 10; ++t) {
    const auto x = sample_tuple(p, 2, rng);
    for (const auto& g : a.compositor(q, cell, x))
      CHECK(g.payload == zlin::zero_element(p->arrow_group()));
  }
}

TEST_CASE("hat: skeletal compositor verified against direct transport") {
  const auto p = mod4_skeletal();
  const auto a = hat(p);
  // Q = (1,1), P = [[1,0],[1,1]] at (1,1): the compositor component is the
  // coherence arrow (X1) + (X1 + X2) -> ((X1 + X1) + X2), i.e. assoc^{-1}
  // conjugated by nothing else after canonicalization; compare against the
  // witness accessor route computed by hand.
  const auto x1 = p->object_from_coords({Int(1)});
  const ObjTuple x{x1, x1};
  const auto q = make_cell(IntMatrix::from({{1, 1}}));
  const auto cell = make_cell(IntMatrix::from({{1, 0}, {1, 1}}));
  const auto got = a.compositor(q, cell, x);
  REQUIRE(got.size() == 1);
  const auto direct = p->inverse(p->assoc(x1, x1, x1));
  CHECK(got[0] == direct);
}

TEST_CASE("reconstruct: round trip on both models") {
  expect_all_pass(check_reconstruction(discrete_z(), 25, 3));
  expect_all_pass(check_reconstruction(mod4_skeletal(), 25, 3));
  // The reconstructed group law on the strict model of [trivial -> Z] is
  // integer addition.
  const auto p = discrete_z();
  const auto r = reconstruct(hat(p));
  CHECK(r.plus(p->object_from_coords({Int(3)}), p->object_from_coords({Int(5)}))
            .payload.coords == IntVec{Int(8)});
  CHECK(r.neutral == p->neutral());
}

TEST_CASE("hat_functor and round_trip_hom") {
  const auto c = make_complex(zlin::FgAbelianGroup::free(1), zlin::FgAbelianGroup::free(1),
                              IntMatrix::from({{2}}));
  const auto p = PicardGroupoid::strict_model(c);
  const auto t3 = zlin::make_hom(c.a, c.a, IntMatrix::from({{3}}));
  const auto f = functor_from_complex_morphism(make_complex_morphism(c, c, t3, t3), p, p);
  expect_all_pass(check_hat_functor(f, 20, 9));
  CHECK(round_trip_hom(f));
  CHECK(round_trip_hom(identity_functor(p)));

  // F-hat at arity 2 on the discrete model: x3 componentwise.
  const auto d = discrete_z();
  const auto td = zlin::make_hom(d->complex().b, d->complex().b, IntMatrix::from({{3}}));
  const auto fd = functor_from_complex_morphism(
      make_complex_morphism(d->complex(), d->complex(),
                            zlin::identity_hom(d->complex().a), td),
      d, d);
  const auto m = hat_functor(fd);
  const auto img = m.component_obj({d->object_from_coords({Int(3)}),
                                    d->object_from_coords({Int(5)})});
  CHECK(img[0].payload.coords == IntVec{Int(9)});
  CHECK(img[1].payload.coords == IntVec{Int(15)});

  // Mutated fixture: replacing the arity-1 component is rejected.
  auto mutated = hat_functor(fd);
  mutated.component_obj = [d, fd](const ObjTuple& x) {
    ObjTuple out;
    for (const auto& o : x) out.push_back(d->add(fd.obj(o), d->object_from_coords({Int(1)})));
    return out;
  };
  CHECK_FALSE(functors_agree(extract_arity1(mutated, d, d), fd, 10, 4));
}

TEST_CASE("hat_functor on a skeletal model") {
  const auto p = mod4_skeletal();
  const auto f = identity_functor(p);
  expect_all_pass(check_hat_functor(f, 15, 21));
  CHECK(round_trip_hom(f));
  // Mixed-kind functor: skeletal -> strict section functor.
  const auto strict = PicardGroupoid::strict_model(p->complex());
  const auto sect = functor_from_complex_morphism(identity_morphism(p->complex()), p,
                                                  strict);
  expect_all_pass(check_hat_functor(sect, 15, 21));
  CHECK(round_trip_hom(sect));
}

TEST_CASE("hat_modification") {
  const FgAbelianGroup z2({Int(2)});
  const auto c2 = make_complex(z2, z2, IntMatrix::zero(1, 1));
  const auto q = PicardGroupoid::skeletal_model(c2, {});
  const auto g = identity_functor(q);
  const auto k = zlin::make_hom(q->homology().pi0, q->homology().pi1,
                                IntMatrix::from({{1}}));
  const auto u = transformation_from_hom(g, k);
  const auto mod = hat_modification(u);
  // u^2 at (X, Y) = (u_X, u_Y).
  const auto x = q->object_from_coords({Int(1)});
  const auto y = q->object_from_coords({Int(0)});
  const auto comp = mod.component({x, y});
  REQUIRE(comp.size() == 2);
  CHECK(comp[0] == u.component(x));
  CHECK(comp[1] == u.component(y));

  // Modification compatibility square for a sample cell.
  const auto m = hat_functor(g);
  const auto a = hat(q);
  const auto cell = make_cell(IntMatrix::from({{1, 1}, {0, -1}}));
  const ObjTuple t{x, y};
  const auto fill = m.filling(cell, t);
  const auto left = mod.component(a.on_objects(cell, t));
  const auto right = a.on_arrows(cell, mod.component(t));
  for (std::size_t i = 0; i < fill.size(); ++i)
    CHECK(q->compose(fill[i], left[i]) == q->compose(right[i], fill[i]));
}

TEST_CASE("trivial stack at every arity <= 4") {
  expect_all_pass(check_trivial_stack(4));
}
