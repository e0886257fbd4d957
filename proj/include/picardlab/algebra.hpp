#pragma once

#include <functional>
#include <vector>

#include "picardlab/expr.hpp"
#include "picardlab/picard.hpp"
#include "picardlab/report.hpp"
#include "picardlab/rewrite.hpp"
#include "picardlab/theory.hpp"

namespace picardlab::algebra {

using picard::AdditiveFunctor;
using picard::AdditiveTransformation;
using picard::Model;
using picard::PArrow;
using picard::PObject;
using theory::OneCell;

// The power groupoid P^n: objects are length-n columns, arrows length-n rows,
// everything componentwise. P^n x P^m = P^(n+m) holds strictly (concatenation).
using ObjTuple = std::vector<PObject>;
using ArrTuple = std::vector<PArrow>;

ObjTuple sample_tuple(const Model& p, int arity, Rng& rng);
ArrTuple sample_arrow_tuple(const Model& p, const ObjTuple& from, Rng& rng);
ObjTuple tuple_concat(const ObjTuple& x, const ObjTuple& y);

// Row i of the result is the canonical expression of matrix row i evaluated
// on the inputs; the arrow version applies the same expression shape.
ObjTuple apply_matrix_objects(const OneCell& cell, const ObjTuple& objs, const Model& p);
ArrTuple apply_matrix_arrows(const OneCell& cell, const ArrTuple& arrows, const Model& p);

// A 2-algebra: arities to powers of a carrier, 1-cells to functors, with
// explicit compositor data gamma_{Q,P}: A(Q) o A(P) => A(Q*P).
struct TwoAlgebra {
  Model base;
  std::function<ObjTuple(const OneCell&, const ObjTuple&)> on_objects;
  std::function<ArrTuple(const OneCell&, const ArrTuple&)> on_arrows;
  // Component at tuple X, one arrow per output coordinate:
  // A(Q)(A(P)(X))_i -> A(Q*P)(X)_i.
  std::function<ArrTuple(const OneCell&, const OneCell&, const ObjTuple&)> compositor;
};

// The hat construction: compositors computed by coherence_iso between the
// substituted expression and the canonical expression of the product matrix.
TwoAlgebra hat(const Model& p);

// Morphism of 2-algebras built from an additive functor: components F^n and
// square-filling isos derived from the distributor.
struct TwoAlgebraMorphism {
  AdditiveFunctor arity1;  // the arity-1 component; hom round trips read this
  std::function<ObjTuple(const ObjTuple&)> component_obj;  // F^n, any arity
  std::function<ArrTuple(const ArrTuple&)> component_arr;
  // Filling iso for a cell P at source tuple X, one arrow per coordinate:
  // F^k(hat_src(P)(X))_i -> hat_tgt(P)(F^n(X))_i.
  std::function<ArrTuple(const OneCell&, const ObjTuple&)> filling;
};

TwoAlgebraMorphism hat_functor(const AdditiveFunctor& f);

// Modification u^n between hat morphisms.
struct Modification {
  AdditiveTransformation arity1;
  std::function<ArrTuple(const ObjTuple&)> component;  // u^n at a tuple
};

Modification hat_modification(const AdditiveTransformation& u);

// Reconstruction of Picard structure from 2-algebra data: + from the matrix
// (1,1), assoc/comm/phi from compositor composites.
struct ReconstructedStructure {
  Model carrier;
  std::function<PObject(const PObject&, const PObject&)> plus;
  std::function<PArrow(const PObject&, const PObject&, const PObject&)> assoc;
  std::function<PArrow(const PObject&, const PObject&)> comm;
  PObject neutral;
  PArrow phi;
};

ReconstructedStructure reconstruct(const TwoAlgebra& a);

// Extracts the arity-1 additive functor carried by a 2-algebra morphism: the
// object/arrow maps at arity 1 and the distributor read off the (1,1) filling.
AdditiveFunctor extract_arity1(const TwoAlgebraMorphism& m, const Model& source,
                               const Model& target);

// True iff F and G agree on sampled objects, arrows and distributor values.
bool functors_agree(const AdditiveFunctor& f, const AdditiveFunctor& g, int budget,
                    std::uint64_t seed);

// F-hat at arity 1 equals F on the nose (sampled exact comparison).
bool round_trip_hom(const AdditiveFunctor& f, int budget = 25, std::uint64_t seed = 1);

// Check suites -------------------------------------------------------------

// Compositor naturality + cocycle + product preservation of hat on random
// matrices (dims <= 4, entries in [-5,5]) and sampled tuples/arrows.
std::vector<CheckRecord> check_hat_structure(const Model& p, int budget,
                                             std::uint64_t seed);

// reconstruct(hat(P)) reproduces P's (+, assoc, comm, e, phi) exactly.
std::vector<CheckRecord> check_reconstruction(const Model& p, int budget,
                                              std::uint64_t seed);

// Confluence: both strategies agree on canonical form and witness arrow for
// random expressions; plus evaluation consistency of the step trail.
std::vector<CheckRecord> check_confluence(const Model& p, int budget, std::uint64_t seed);

// hat(1-model) has exactly one object and one arrow at every arity <= max_arity.
std::vector<CheckRecord> check_trivial_stack(int max_arity);

// Square-filling and modification compatibility checks for hat images.
std::vector<CheckRecord> check_hat_functor(const AdditiveFunctor& f, int budget,
                                           std::uint64_t seed);

}  // namespace picardlab::algebra
