#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "picardlab/complexes.hpp"
#include "picardlab/report.hpp"
#include "picardlab/rng.hpp"
#include "picardlab/zlin.hpp"

namespace picardlab::picard {

using complexes::Homology;
using complexes::TwoTermComplex;
using zlin::FgAbelianGroup;
using zlin::GroupElement;
using zlin::IntVec;

enum class ModelKind { Strict, Skeletal };

// Object of a model: an element of B (strict) or of pi0 (skeletal).
struct PObject {
  ModelKind kind;
  GroupElement payload;

  bool operator==(const PObject& rhs) const = default;
};

// Arrow of a model. Strict: payload a in A with d(a) = dst - src. Skeletal:
// payload in pi1, src = dst. Two parallel arrows are equal iff their payloads
// are (Hom(x, y) is a torsor under ker d).
struct PArrow {
  PObject src, dst;
  GroupElement payload;

  bool operator==(const PArrow& rhs) const = default;
};

// Skeletal model configuration. The section is either the deterministic lift
// from the Smith normal form data ("auto") or an explicit table (finite pi0
// only). The cochain g is a sparse pi1-valued table on pi0 x pi0.
struct SkeletalConfig {
  // pi0 canonical coords -> B canonical coords; empty optional = auto.
  std::optional<std::vector<std::pair<IntVec, IntVec>>> section;
  std::vector<std::pair<std::pair<IntVec, IntVec>, IntVec>> cochain;
};

class PicardGroupoid : public std::enable_shared_from_this<PicardGroupoid> {
 public:
  static std::shared_ptr<const PicardGroupoid> strict_model(TwoTermComplex c);
  static std::shared_ptr<const PicardGroupoid> skeletal_model(TwoTermComplex c,
                                                              SkeletalConfig cfg = {});

  ModelKind kind() const { return kind_; }
  const TwoTermComplex& complex() const { return complex_; }
  const Homology& homology() const { return homology_; }
  // Group housing object payloads: B (strict) or pi0 (skeletal).
  const FgAbelianGroup& object_group() const;
  // Group housing endo payloads: A (strict) or pi1 (skeletal).
  const FgAbelianGroup& arrow_group() const;

  PObject make_object(GroupElement payload) const;
  PObject object_from_coords(IntVec coords) const;
  PObject neutral() const;
  PObject add(const PObject& x, const PObject& y) const;
  PObject negate(const PObject& x) const;

  PArrow make_arrow(PObject src, PObject dst, GroupElement payload) const;
  PArrow identity(const PObject& x) const;
  PArrow compose(const PArrow& g, const PArrow& f) const;
  PArrow add(const PArrow& f, const PArrow& g) const;
  PArrow inverse(const PArrow& f) const;
  PArrow negate_arrow(const PArrow& f) const;
  bool has_arrow(const PObject& x, const PObject& y) const;
  std::optional<PArrow> some_arrow(const PObject& x, const PObject& y) const;

  // Constraint witnesses. In the strict model all of these carry the zero
  // payload; in the skeletal model they are computed by literal transport of
  // the strict witnesses through the comparison arrows of the section.
  PArrow phi() const;                                               // e+e -> e
  PArrow assoc(const PObject&, const PObject&, const PObject&) const;  // (X+Y)+Z -> X+(Y+Z)
  PArrow comm(const PObject&, const PObject&) const;                   // X+Y -> Y+X
  PArrow unit_left(const PObject&) const;                              // e+X -> X
  PArrow unit_right(const PObject&) const;                             // X+e -> X
  PArrow inv_witness(const PObject&) const;                            // X+(-X) -> e

  PObject sample_object(Rng& rng) const;
  PArrow sample_arrow_from(Rng& rng, const PObject& x) const;
  GroupElement sample_group_element(Rng& rng, const FgAbelianGroup& g) const;

  // Skeletal internals (also used by functor transport). All throw on the
  // strict model.
  GroupElement section_of(const GroupElement& pi0_elem) const;     // element of B
  GroupElement class_of(const GroupElement& b_elem) const;         // element of pi0
  GroupElement cochain(const GroupElement& x, const GroupElement& y) const;  // pi1
  // G(x,y) = incl(g(x,y)) + h(x,y) in A, d(G) = s(x)+s(y)-s(x+y).
  GroupElement transport_payload(const GroupElement& x, const GroupElement& y) const;
  GroupElement pi1_coords(const GroupElement& a_elem) const;
  GroupElement pi1_include(const GroupElement& pi1_elem) const;
  const std::shared_ptr<const PicardGroupoid>& strict_companion() const;

 private:
  PicardGroupoid(ModelKind kind, TwoTermComplex c);
  void validate_explicit_section() const;
  GroupElement deterministic_preimage(const GroupElement& b_elem) const;  // in A

  ModelKind kind_;
  TwoTermComplex complex_;
  Homology homology_;
  SkeletalConfig config_;
  std::shared_ptr<const PicardGroupoid> strict_;  // skeletal models transport through this
  std::map<IntVec, IntVec> section_table_;
  std::map<std::pair<IntVec, IntVec>, IntVec> cochain_table_;
  // Memoized integer solves: the same transports recur constantly during
  // coherence normalization, and each cold call runs a Smith decomposition.
  mutable std::map<IntVec, IntVec> preimage_cache_;
  mutable std::map<std::pair<IntVec, IntVec>, IntVec> transport_cache_;
  mutable std::map<IntVec, IntVec> pi1_coords_cache_;
};

using Model = std::shared_ptr<const PicardGroupoid>;

// Solves the unit square (id_e + l_X) . a(e,e,X) = phi + id_X for l_X; in a
// groupoid the square determines l_X uniquely.
PArrow derive_left_unitor(const Model& p, const PObject& x);

// Additive functor between two models, with explicit distributor
// Sigma_{X,Y}: F(X+Y) -> F(X)+F(Y).
struct AdditiveFunctor {
  Model source, target;
  std::function<PObject(const PObject&)> obj;
  std::function<PArrow(const PArrow&)> arr;
  std::function<PArrow(const PObject&, const PObject&)> sigma;
};

AdditiveFunctor identity_functor(const Model& p);
AdditiveFunctor compose_functors(const AdditiveFunctor& g, const AdditiveFunctor& f);
AdditiveFunctor functor_from_complex_morphism(const complexes::ComplexMorphism& m,
                                              const Model& source, const Model& target);

// Morphism of additive functors.
struct AdditiveTransformation {
  AdditiveFunctor source, target;
  std::function<PArrow(const PObject&)> component;  // u_X: F(X) -> F'(X)
};

AdditiveTransformation identity_transformation(const AdditiveFunctor& f);
// u_X := incl(k(class of X)) for a hom k: pi0(source) -> pi1(target); these
// are exactly the additive self-transformations of F.
AdditiveTransformation transformation_from_hom(const AdditiveFunctor& f,
                                               const zlin::GroupHom& k);

// Canonical derived witnesses, built by composing actual structure arrows.
PArrow neg_zero_witness(const Model& p);                         // -e -> e
PArrow neg_neg_witness(const Model& p, const PObject& x);        // -(-X) -> X
PArrow neg_distrib_witness(const Model& p, const PObject& x,
                           const PObject& y);                    // -(X+Y) -> (-X)+(-Y)
// Middle-four interchange (a+b)+(c+d) -> (a+c)+(b+d) from assoc and comm.
PArrow middle_four(const Model& p, const PObject& a, const PObject& b, const PObject& c,
                   const PObject& d);
// Unit comparison F(e) -> e' of an additive functor.
PArrow functor_unit(const AdditiveFunctor& f);
// Negation comparison F(-X) -> -F(X).
PArrow functor_neg(const AdditiveFunctor& f, const PObject& x);

// Axiom suite: pentagon, hexagon, symmetry, strictness, unit diagrams, the
// inverse witness coherence, and naturality, on `budget` sampled tuples.
std::vector<CheckRecord> check_picard_axioms(const Model& p, int budget, std::uint64_t seed);

// Functoriality, Sigma naturality and Sigma compatibility with assoc/comm.
std::vector<CheckRecord> check_additive_functor(const AdditiveFunctor& f, int budget,
                                                std::uint64_t seed);
// Naturality and Sigma-compatibility of a transformation.
std::vector<CheckRecord> check_additive_transformation(const AdditiveTransformation& u,
                                                       int budget, std::uint64_t seed);

}  // namespace picardlab::picard
