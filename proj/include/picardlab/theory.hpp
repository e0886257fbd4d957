#pragma once

#include <optional>
#include <vector>

#include "picardlab/zlin.hpp"

namespace picardlab::theory {

using zlin::IntMatrix;

// Object 1^n of the matrix theory: a bare arity. Arity 0 is the terminal
// object (empty product); the theory needs it to have all finite products.
struct TheoryObject {
  int arity = 0;

  bool operator==(const TheoryObject& rhs) const = default;
};

// 1-cell 1^n -> 1^k: a k x n integer matrix.
struct OneCell {
  int source_arity = 0, target_arity = 0;
  IntMatrix matrix;

  bool operator==(const OneCell& rhs) const = default;
};

OneCell make_cell(IntMatrix m);
OneCell identity_cell(int arity);

// Composition is the matrix product Q * P; strictly associative and unital.
OneCell compose_cells(const OneCell& q, const OneCell& p);

// 2-cell between parallel 1-cells. Only identity 2-cells exist here: the
// codiscrete 2-cells between distinct matrices cannot act on a generic Picard
// groupoid (no natural map X => 2X exists already over pi0 = Z).
struct TwoCell {
  OneCell source, target;  // equal matrices by construction

  bool operator==(const TwoCell& rhs) const = default;
};

// The identity 2-cell when p = q as matrices; nullopt otherwise.
std::optional<TwoCell> two_cell(const OneCell& p, const OneCell& q);
TwoCell identity_two_cell(const OneCell& p);

// Product structure of 1^n x 1^m = 1^(n+m): block projections and pairing by
// row stacking, satisfying the universal property strictly.
struct ProductStructure {
  OneCell proj_left;   // (I_n | 0): 1^(n+m) -> 1^n
  OneCell proj_right;  // (0 | I_m): 1^(n+m) -> 1^m
};

ProductStructure product_structure(int n, int m);

// Row-stacks f: 1^s -> 1^n and g: 1^s -> 1^m into 1^s -> 1^(n+m).
OneCell pair_cells(const OneCell& f, const OneCell& g);

// The unique cell into the terminal object 1^0.
OneCell terminal_cell(int source_arity);

}  // namespace picardlab::theory
