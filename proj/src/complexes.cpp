#include "picardlab/complexes.hpp"

#include <sstream>

namespace picardlab::complexes {

using zlin::IntVec;

TwoTermComplex make_complex(FgAbelianGroup a, FgAbelianGroup b, IntMatrix d) {
  GroupHom hom = zlin::make_hom(a, b, std::move(d));
  return TwoTermComplex{std::move(a), std::move(b), std::move(hom)};
}

TwoTermComplex trivial_complex() {
  const FgAbelianGroup t = FgAbelianGroup::trivial();
  return make_complex(t, t, IntMatrix::zero(0, 0));
}

Homology homology(const TwoTermComplex& c) {
  const auto kc = zlin::hom_kernel_cokernel(c.d);
  return Homology{kc.cokernel, kc.cokernel_projection, kc.cokernel_section, kc.kernel,
                  kc.kernel_inclusion};
}

FgAbelianGroup pi0(const TwoTermComplex& c) { return homology(c).pi0; }
FgAbelianGroup pi1(const TwoTermComplex& c) { return homology(c).pi1; }

ComplexMorphism make_complex_morphism(const TwoTermComplex& c, const TwoTermComplex& cp,
                                      GroupHom fa, GroupHom fb) {
  if (fa.source != c.a || fa.target != cp.a || fb.source != c.b || fb.target != cp.b)
    throw zlin::GroupMismatchError("component homs do not match the complexes");
  std::string why;
  if (!zlin::hom_well_defined(fa, &why) || !zlin::hom_well_defined(fb, &why))
    throw std::invalid_argument("ill-defined component hom: " + why);
  for (int i = 0; i < c.a.size(); ++i) {
    IntVec e(c.a.size());
    e[i] = 1;
    const auto gen = zlin::canonicalize(c.a, e);
    const auto lhs = cp.d.apply(fa.apply(gen));
    const auto rhs = fb.apply(c.d.apply(gen));
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "square does not commute on generator " << i << ": " << lhs.str()
         << " != " << rhs.str();
      throw std::invalid_argument(os.str());
    }
  }
  return ComplexMorphism{c, cp, std::move(fa), std::move(fb)};
}

ComplexMorphism identity_morphism(const TwoTermComplex& c) {
  return ComplexMorphism{c, c, zlin::identity_hom(c.a), zlin::identity_hom(c.b)};
}

ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f) {
  if (!(f.target == g.source)) throw zlin::GroupMismatchError("morphisms not composable");
  return ComplexMorphism{f.source, g.target, zlin::compose(g.fa, f.fa),
                         zlin::compose(g.fb, f.fb)};
}

GroupHom induced_pi0(const ComplexMorphism& m) {
  const auto hs = homology(m.source);
  const auto ht = homology(m.target);
  return GroupHom{hs.pi0, ht.pi0,
                  ht.pi0_projection.matrix * m.fb.matrix * hs.pi0_section};
}

GroupHom induced_pi1(const ComplexMorphism& m) {
  const auto hs = homology(m.source);
  const auto ht = homology(m.target);
  IntMatrix mat(ht.pi1.size(), hs.pi1.size());
  for (int j = 0; j < hs.pi1.size(); ++j) {
    IntVec e(hs.pi1.size());
    e[j] = 1;
    const auto img = m.fa.apply(hs.pi1_inclusion.apply(zlin::canonicalize(hs.pi1, e)));
    const auto in_ker = zlin::coords_in_subgroup(ht.pi1_inclusion, img);
    if (!in_ker)
      throw std::logic_error("morphism does not preserve the kernel of d");
    for (int i = 0; i < ht.pi1.size(); ++i) mat.at(i, j) = in_ker->coords[i];
  }
  return GroupHom{hs.pi1, ht.pi1, std::move(mat)};
}

std::optional<GroupHom> hom_inverse(const GroupHom& f) {
  const auto kc = zlin::hom_kernel_cokernel(f);
  if (!kc.kernel.is_trivial() || !kc.cokernel.is_trivial()) return std::nullopt;
  IntMatrix inv(f.source.size(), f.target.size());
  for (int j = 0; j < f.target.size(); ++j) {
    IntVec e(f.target.size());
    e[j] = 1;
    const auto pre = zlin::preimage(f, zlin::canonicalize(f.target, e));
    if (!pre) return std::nullopt;
    for (int i = 0; i < f.source.size(); ++i) inv.at(i, j) = (*pre)[i];
  }
  return GroupHom{f.target, f.source, std::move(inv)};
}

QuasiIsoCertificate is_quasi_iso(const ComplexMorphism& m) {
  QuasiIsoCertificate cert;
  cert.pi0_map = induced_pi0(m);
  cert.pi1_map = induced_pi1(m);
  cert.pi0_inverse = hom_inverse(cert.pi0_map);
  cert.pi1_inverse = hom_inverse(cert.pi1_map);
  if (!cert.pi0_inverse)
    cert.failure = "induced map on pi0 is not an isomorphism";
  else if (!cert.pi1_inverse)
    cert.failure = "induced map on pi1 is not an isomorphism";
  cert.is_quasi_iso = cert.pi0_inverse && cert.pi1_inverse;
  return cert;
}

}  // namespace picardlab::complexes
