#include "doctest.h"
#include "picardlab/complexes.hpp"

using namespace picardlab;
using namespace picardlab::zlin;
using namespace picardlab::complexes;

namespace {

const FgAbelianGroup kZ = FgAbelianGroup::free(1);

TwoTermComplex z_id_z() { return make_complex(kZ, kZ, IntMatrix::identity(1)); }
TwoTermComplex z_times2_z() { return make_complex(kZ, kZ, IntMatrix::from({{2}})); }
TwoTermComplex discrete_z() {
  return make_complex(FgAbelianGroup::trivial(), kZ, IntMatrix::zero(1, 0));
}

}  // namespace

TEST_CASE("make_complex: frozen examples") {
  CHECK(z_id_z().d.apply(canonicalize(kZ, {Int(5)})).coords == IntVec{Int(5)});
  CHECK(discrete_z().a.is_trivial());
  // d(1) = 2 into Z/4 is well defined (no source torsion).
  const auto c = make_complex(kZ, FgAbelianGroup({Int(4)}), IntMatrix::from({{2}}));
  CHECK(c.d.apply(canonicalize(kZ, {Int(3)})).coords == IntVec{Int(2)});
  // Ill-defined d: Z/2 -> Z/4 by 1 violates divisibility.
  CHECK_THROWS_AS(
      make_complex(FgAbelianGroup({Int(2)}), FgAbelianGroup({Int(4)}),
                   IntMatrix::from({{1}})),
      std::invalid_argument);
}

TEST_CASE("trivial complex") {
  const auto t = trivial_complex();
  CHECK(t.a.is_trivial());
  CHECK(t.b.is_trivial());
  CHECK(pi0(t).is_trivial());
  CHECK(pi1(t).is_trivial());
}

TEST_CASE("pi0/pi1: frozen examples") {
  CHECK(pi0(z_times2_z()) == FgAbelianGroup({Int(2)}));
  CHECK(pi1(z_times2_z()).is_trivial());

  CHECK(pi0(z_id_z()).is_trivial());
  CHECK(pi1(z_id_z()).is_trivial());

  const auto c = make_complex(kZ, FgAbelianGroup::trivial(), IntMatrix::zero(0, 1));
  CHECK(pi0(c).is_trivial());
  CHECK(pi1(c) == kZ);
}

TEST_CASE("homology maps compose to zero") {
  // d: Z^2 -> Z/4 + Z, (a, k) |-> (2a, 0).
  const auto c = make_complex(FgAbelianGroup::free(2), FgAbelianGroup({Int(4), Int(0)}),
                              IntMatrix::from({{2, 0}, {0, 0}}));
  const auto h = homology(c);
  CHECK(h.pi0 == FgAbelianGroup({Int(2), Int(0)}));
  // ker d = {(a, k) : a even} = 2Z + Z, free of rank 2.
  CHECK(h.pi1 == FgAbelianGroup({Int(0), Int(0)}));
  for (int j = 0; j < h.pi1.size(); ++j) {
    IntVec e(h.pi1.size());
    e[j] = 1;
    const auto a = h.pi1_inclusion.apply(canonicalize(h.pi1, e));
    CHECK(c.d.apply(a) == zero_element(c.b));
  }
  for (int j = 0; j < c.a.size(); ++j) {
    IntVec e(c.a.size());
    e[j] = 1;
    const auto b = c.d.apply(canonicalize(c.a, e));
    CHECK(h.pi0_projection.apply(b) == zero_element(h.pi0));
  }
}

TEST_CASE("pi1 of a map with torsion kernel") {
  // d: Z^2 -> Z, (a, k) |-> 4a: pi0 = Z/4, pi1 = Z (the k axis).
  const auto c = make_complex(FgAbelianGroup::free(2), kZ, IntMatrix::from({{4, 0}}));
  const auto h = homology(c);
  CHECK(h.pi0 == FgAbelianGroup({Int(4)}));
  CHECK(h.pi1 == FgAbelianGroup({Int(0)}));
  CHECK(c.d.apply(h.pi1_inclusion.apply(canonicalize(h.pi1, {Int(1)}))) ==
        zero_element(kZ));
}

TEST_CASE("make_complex_morphism: frozen examples") {
  const auto c = z_times2_z();
  CHECK_NOTHROW(identity_morphism(c));
  // fA = fB = x3 commutes with x2.
  const auto t3 = make_hom(kZ, kZ, IntMatrix::from({{3}}));
  CHECK_NOTHROW(make_complex_morphism(c, c, t3, t3));
  // fA = x1, fB = x2 fails: 2*1 != 2*2 on the generator.
  const auto t1 = identity_hom(kZ);
  const auto t2 = make_hom(kZ, kZ, IntMatrix::from({{2}}));
  CHECK_THROWS_WITH_AS(make_complex_morphism(c, c, t1, t2),
                       doctest::Contains("(2) != (4)"), std::invalid_argument);
}

TEST_CASE("is_quasi_iso: frozen examples") {
  const auto c = z_times2_z();
  CHECK(is_quasi_iso(identity_morphism(c)).is_quasi_iso);

  // [Z -id-> Z] -> [trivial -> trivial] by zero maps: both acyclic.
  const auto t = trivial_complex();
  const auto m = make_complex_morphism(
      z_id_z(), t, make_hom(kZ, t.a, IntMatrix::zero(0, 1)),
      make_hom(kZ, t.b, IntMatrix::zero(0, 1)));
  CHECK(is_quasi_iso(m).is_quasi_iso);

  // x2 on [trivial -> Z] is not surjective on pi0.
  const auto d = discrete_z();
  const auto m2 = make_complex_morphism(d, d, identity_hom(d.a),
                                        make_hom(kZ, kZ, IntMatrix::from({{2}})));
  const auto cert = is_quasi_iso(m2);
  CHECK_FALSE(cert.is_quasi_iso);
  CHECK(cert.failure == "induced map on pi0 is not an isomorphism");
}

TEST_CASE("induced maps are functorial") {
  const auto c = z_times2_z();
  const auto t3 = make_hom(kZ, kZ, IntMatrix::from({{3}}));
  const auto t5 = make_hom(kZ, kZ, IntMatrix::from({{5}}));
  const auto m = make_complex_morphism(c, c, t3, t3);
  const auto n = make_complex_morphism(c, c, t5, t5);
  const auto nm = compose(n, m);
  const auto lhs = induced_pi0(nm);
  const auto rhs = zlin::compose(induced_pi0(n), induced_pi0(m));
  const auto h = homology(c);
  for (long long v = 0; v < 2; ++v) {
    const auto x = canonicalize(h.pi0, {Int(v)});
    CHECK(lhs.apply(x) == rhs.apply(x));
  }
  CHECK(induced_pi1(nm).matrix == (induced_pi1(n).matrix * induced_pi1(m).matrix));
}

TEST_CASE("hom_inverse") {
  // x: Z/5 -> Z/5 by 2 is invertible with inverse 3.
  const FgAbelianGroup z5({Int(5)});
  const auto f = make_hom(z5, z5, IntMatrix::from({{2}}));
  const auto inv = hom_inverse(f);
  REQUIRE(inv.has_value());
  const auto x = canonicalize(z5, {Int(4)});
  CHECK(inv->apply(f.apply(x)) == x);
  CHECK_FALSE(hom_inverse(make_hom(kZ, kZ, IntMatrix::from({{2}}))).has_value());
}
