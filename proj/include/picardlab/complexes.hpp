#pragma once

#include <optional>
#include <string>

#include "picardlab/zlin.hpp"

namespace picardlab::complexes {

using zlin::FgAbelianGroup;
using zlin::GroupElement;
using zlin::GroupHom;
using zlin::IntMatrix;

// Two-term complex [A -d-> B] of finitely generated abelian groups, A in
// degree -1 and B in degree 0.
struct TwoTermComplex {
  FgAbelianGroup a, b;
  GroupHom d;  // A -> B

  bool operator==(const TwoTermComplex& rhs) const = default;
};

TwoTermComplex make_complex(FgAbelianGroup a, FgAbelianGroup b, IntMatrix d);

// Canonical presentation of the trivial groupoid: both groups trivial.
TwoTermComplex trivial_complex();

// Homology of the complex, with the explicit maps to and from the ambient
// groups. pi0 = coker(d), pi1 = ker(d).
struct Homology {
  FgAbelianGroup pi0;
  GroupHom pi0_projection;  // B -> pi0
  IntMatrix pi0_section;    // pi0 canonical coords -> B coords, deterministic lift
  FgAbelianGroup pi1;
  GroupHom pi1_inclusion;   // pi1 -> A
};

Homology homology(const TwoTermComplex& c);
FgAbelianGroup pi0(const TwoTermComplex& c);
FgAbelianGroup pi1(const TwoTermComplex& c);

struct ComplexMorphism {
  TwoTermComplex source, target;
  GroupHom fa;  // A  -> A'
  GroupHom fb;  // B  -> B'
};

// Validates that fb . d = d' . fa on canonical generators.
ComplexMorphism make_complex_morphism(const TwoTermComplex& c, const TwoTermComplex& cp,
                                      GroupHom fa, GroupHom fb);
ComplexMorphism identity_morphism(const TwoTermComplex& c);
ComplexMorphism compose(const ComplexMorphism& g, const ComplexMorphism& f);

struct QuasiIsoCertificate {
  bool is_quasi_iso = false;
  GroupHom pi0_map, pi1_map;
  // Present only when the corresponding induced map is an isomorphism.
  std::optional<GroupHom> pi0_inverse, pi1_inverse;
  std::string failure;  // which side failed, empty on success
};

QuasiIsoCertificate is_quasi_iso(const ComplexMorphism& m);

// Induced maps on homology.
GroupHom induced_pi0(const ComplexMorphism& m);
GroupHom induced_pi1(const ComplexMorphism& m);

// Inverse of an isomorphism of f.g. abelian groups, if one exists.
std::optional<GroupHom> hom_inverse(const GroupHom& f);

}  // namespace picardlab::complexes
