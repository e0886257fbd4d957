#pragma once

#include <vector>

#include "picardlab/complexes.hpp"
#include "picardlab/picard.hpp"
#include "picardlab/rng.hpp"

namespace picardlab::corpus {

using complexes::ComplexMorphism;
using complexes::TwoTermComplex;
using picard::SkeletalConfig;
using zlin::FgAbelianGroup;
using zlin::GroupHom;

// Random f.g. abelian group: rank <= 3, torsion factors drawn from
// {2,3,4,6,8} (coerced into ascending divisibility).
FgAbelianGroup random_group(Rng& rng);

// Random well-defined hom with entries in [-5,5] on free columns; torsion
// columns are adjusted to land in the correct torsion subgroup.
GroupHom random_hom(const FgAbelianGroup& source, const FgAbelianGroup& target, Rng& rng);

// Random two-term complex [A -> B] over random_group / random_hom.
TwoTermComplex random_complex(Rng& rng);

// Random sparse cochain over pi0(c) with values in pi1(c); `normalized`
// guarantees g(0,-) = g(-,0) = 0, otherwise an entry at x = 0 is forced in
// when pi0 and pi1 allow one.
SkeletalConfig random_cochain(const TwoTermComplex& c, Rng& rng, bool normalized);

// At least three distinct skeletal configurations for c, the last one
// non-normalized whenever the homology permits a nonzero g(0,y).
std::vector<SkeletalConfig> cochain_family(const TwoTermComplex& c, Rng& rng);

// Random endomorphism of c of the homotopy form (n*id + k.d, n*id + d.k) for
// a random hom k: B -> A; always satisfies the commuting square.
ComplexMorphism random_endomorphism(const TwoTermComplex& c, Rng& rng);

}  // namespace picardlab::corpus
