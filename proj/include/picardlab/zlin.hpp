#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace picardlab::zlin {

// Arbitrary-precision integer: Smith normal form intermediates can grow far
// beyond any fixed width.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GroupMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }
  IntMatrix(int rows, int cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    if (e_.size() != static_cast<std::size_t>(rows) * cols)
      throw DimensionError("entry count does not match dimensions");
  }
  // Row-major initializer, e.g. IntMatrix::from({{2,4},{6,8}}).
  static IntMatrix from(const std::vector<std::vector<long long>>& rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[a] += q * row[b], col version likewise.
  void add_row(int a, int b, const Int& q);
  void add_col(int a, int b, const Int& q);
  void negate_row(int a);
  void negate_col(int a);

  IntMatrix rows_slice(const std::vector<int>& idx) const;
  IntMatrix cols_slice(const std::vector<int>& idx) const;
  // Horizontal concatenation [this | rhs].
  IntMatrix hcat(const IntMatrix& rhs) const;
  // Vertical concatenation.
  IntMatrix vcat(const IntMatrix& rhs) const;

  Int det() const;  // Bareiss fraction-free elimination; square only.

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// U * M * V = D with U, V unimodular and D diagonal, nonzero diagonal entries
// first, each dividing the next, all non-negative.
struct SmithDecomposition {
  IntMatrix u, d, v;
  // Number of nonzero diagonal entries.
  int rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Inverse of a unimodular matrix (exact, integer).
IntMatrix inverse_unimodular(const IntMatrix& u);

struct LinearSolution {
  IntVec particular;            // deterministic: free parameters set to 0
  std::vector<IntVec> kernel;   // basis of the integer kernel of M
};

// Solve M x = b over the integers. nullopt when no solution exists.
std::optional<LinearSolution> solve_linear(const IntMatrix& m, const IntVec& b);
std::optional<LinearSolution> solve_with(const SmithDecomposition& dec, const IntVec& b);

// Finitely generated abelian group in invariant-factor form. A factor of 0 is
// a free Z summand; a factor d >= 2 is Z/d. Torsion factors come first in
// ascending divisibility order, and no factor equals 1.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(IntVec factors);
  static FgAbelianGroup trivial() { return FgAbelianGroup(); }
  static FgAbelianGroup free(int rank);

  const IntVec& factors() const { return factors_; }
  int size() const { return static_cast<int>(factors_.size()); }
  int torsion_count() const;
  int free_rank() const { return size() - torsion_count(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  // Number of elements; only valid when finite.
  Int order() const;

  bool operator==(const FgAbelianGroup& rhs) const = default;
  std::string str() const;

 private:
  IntVec factors_;
};

// Element of an FgAbelianGroup in canonical coordinates: 0 <= c < d on each
// torsion factor.
struct GroupElement {
  FgAbelianGroup group;
  IntVec coords;

  bool operator==(const GroupElement& rhs) const = default;
  std::string str() const;
};

GroupElement canonicalize(const FgAbelianGroup& g, IntVec coords);
GroupElement zero_element(const FgAbelianGroup& g);
GroupElement elem_add(const GroupElement& x, const GroupElement& y);
GroupElement elem_neg(const GroupElement& x);
GroupElement elem_sub(const GroupElement& x, const GroupElement& y);
GroupElement elem_scale(const Int& n, const GroupElement& x);

// Homomorphism between groups in invariant-factor coordinates. matrix has
// target.size() rows and source.size() columns.
struct GroupHom {
  FgAbelianGroup source, target;
  IntMatrix matrix;

  GroupElement apply(const GroupElement& x) const;
  bool operator==(const GroupHom& rhs) const = default;
};

GroupHom make_hom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);
bool hom_well_defined(const GroupHom& f, std::string* why = nullptr);
GroupHom identity_hom(const FgAbelianGroup& g);
GroupHom zero_hom(const FgAbelianGroup& source, const FgAbelianGroup& target);
GroupHom compose(const GroupHom& g, const GroupHom& f);

// Cokernel presentation Z^generators / row lattice of `relations`, together
// with the coordinate change between generator and canonical coordinates.
struct QuotientPresentation {
  FgAbelianGroup group;
  // group-coords x generators: sends generator coordinates to (not yet
  // canonicalized) quotient coordinates.
  IntMatrix proj;
  // generators x group-coords: a deterministic set-level lift, proj * lift = I.
  IntMatrix lift;

  GroupElement project(const IntVec& generator_coords) const;
  IntVec lift_element(const GroupElement& x) const;
};

QuotientPresentation group_from_presentation(int generators, const IntMatrix& relations);

// Kernel and cokernel of a well-defined hom, with explicit maps.
struct KernelCokernel {
  FgAbelianGroup kernel;
  GroupHom kernel_inclusion;    // kernel -> source of f
  FgAbelianGroup cokernel;
  GroupHom cokernel_projection; // target of f -> cokernel
  // Deterministic set-level section of the projection (cokernel -> target),
  // linear on canonical coordinates; section(0) = 0.
  IntMatrix cokernel_section;
};

KernelCokernel hom_kernel_cokernel(const GroupHom& f);

// Relation lattice generators of g (one column per torsion factor: d_i e_i).
IntMatrix relation_matrix(const FgAbelianGroup& g);

// Coordinates of a source element x with f(x) = y, if any; accounts for the
// target's torsion. Deterministic.
std::optional<IntVec> preimage(const GroupHom& f, const GroupElement& y);

// Express an element of `amb` lying in the image of `incl` in the coordinates
// of incl's source. nullopt when it is not in the image.
std::optional<GroupElement> coords_in_subgroup(const GroupHom& incl, const GroupElement& x);

}  // namespace picardlab::zlin
