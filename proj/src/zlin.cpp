#include "picardlab/zlin.hpp"

#include <algorithm>
#include <sstream>

namespace picardlab::zlin {

IntMatrix IntMatrix::from(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionError("ragged row in matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("matrix-vector dimension mismatch");
  IntVec out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix diff shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(int a, int b, const Int& q) {
  for (int j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
}

void IntMatrix::add_col(int a, int b, const Int& q) {
  for (int i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
}

void IntMatrix::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(int a) {
  for (int i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

IntMatrix IntMatrix::rows_slice(const std::vector<int>& idx) const {
  IntMatrix out(static_cast<int>(idx.size()), cols_);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
  return out;
}

IntMatrix IntMatrix::cols_slice(const std::vector<int>& idx) const {
  IntMatrix out(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = at(i, idx[j]);
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw DimensionError("hcat row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vcat(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw DimensionError("vcat column mismatch");
  IntMatrix out(rows_ + rhs.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < rhs.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = rhs.at(i, j);
  return out;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

int SmithDecomposition::rank() const {
  int r = 0;
  const int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

namespace {

// Smallest nonzero absolute value in the trailing submatrix, lowest row then
// column index on ties. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int s, int& pi, int& pj) {
  bool found = false;
  Int best = 0;
  for (int i = s; i < d.rows(); ++i)
    for (int j = s; j < d.cols(); ++j) {
      const Int v = abs(d.at(i, j));
      if (v != 0 && (!found || v < best)) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Truncated quotient, matching C++ integer division.
Int tdiv(const Int& a, const Int& b) { return a / b; }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition dec{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = dec.d;
  const int n = std::min(m.rows(), m.cols());
  for (int s = 0; s < n; ++s) {
    for (;;) {
      int pi, pj;
      if (!find_pivot(d, s, pi, pj)) {
        // Remaining block is zero: diagonal stays zero from here on.
        return dec;
      }
      d.swap_rows(s, pi);
      dec.u.swap_rows(s, pi);
      d.swap_cols(s, pj);
      dec.v.swap_cols(s, pj);

      bool clean = true;
      for (int i = s + 1; i < d.rows(); ++i) {
        if (d.at(i, s) == 0) continue;
        const Int q = tdiv(d.at(i, s), d.at(s, s));
        d.add_row(i, s, -q);
        dec.u.add_row(i, s, -q);
        if (d.at(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < d.cols(); ++j) {
        if (d.at(s, j) == 0) continue;
        const Int q = tdiv(d.at(s, j), d.at(s, s));
        d.add_col(j, s, -q);
        dec.v.add_col(j, s, -q);
        if (d.at(s, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder became the next pivot

      // Divisibility fix: fold a non-divisible row into the pivot row.
      bool divisible = true;
      for (int i = s + 1; i < d.rows() && divisible; ++i)
        for (int j = s + 1; j < d.cols(); ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            d.add_row(s, i, 1);
            dec.u.add_row(s, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d.at(s, s) < 0) {
      d.negate_row(s);
      dec.u.negate_row(s);
    }
  }
  return dec;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("inverse of non-square matrix");
  const auto dec = smith_normal_form(u);
  for (int i = 0; i < u.rows(); ++i)
    if (dec.d.at(i, i) != 1) throw std::invalid_argument("matrix is not unimodular");
  // From U1 * u * V1 = I: u^{-1} = V1 * U1.
  return dec.v * dec.u;
}

std::optional<LinearSolution> solve_with(const SmithDecomposition& dec, const IntVec& b) {
  const int r = dec.d.rows(), c = dec.d.cols();
  if (static_cast<int>(b.size()) != r) throw DimensionError("rhs length does not match rows");
  const IntVec y = dec.u * b;
  IntVec z(c);
  const int n = std::min(r, c);
  for (int i = 0; i < r; ++i) {
    const Int di = i < n ? dec.d.at(i, i) : Int(0);
    if (di == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % di != 0) return std::nullopt;
      z[i] = y[i] / di;
    }
  }
  LinearSolution sol;
  sol.particular = dec.v * z;
  for (int j = 0; j < c; ++j) {
    const bool free = j >= n || dec.d.at(j, j) == 0;
    if (!free) continue;
    IntVec k(c);
    k[j] = 1;
    sol.kernel.push_back(dec.v * k);
  }
  return sol;
}

std::optional<LinearSolution> solve_linear(const IntMatrix& m, const IntVec& b) {
  return solve_with(smith_normal_form(m), b);
}

FgAbelianGroup::FgAbelianGroup(IntVec factors) : factors_(std::move(factors)) {
  bool seen_free = false;
  Int prev = 0;
  for (const Int& f : factors_) {
    if (f < 0 || f == 1) throw std::invalid_argument("invalid invariant factor");
    if (f == 0) {
      seen_free = true;
      continue;
    }
    if (seen_free) throw std::invalid_argument("torsion factor after free factor");
    if (prev != 0 && f % prev != 0)
      throw std::invalid_argument("torsion factors must ascend by divisibility");
    prev = f;
  }
}

FgAbelianGroup FgAbelianGroup::free(int rank) { return FgAbelianGroup(IntVec(rank, 0)); }

int FgAbelianGroup::torsion_count() const {
  int t = 0;
  for (const Int& f : factors_)
    if (f != 0) ++t;
  return t;
}

Int FgAbelianGroup::order() const {
  if (!is_finite()) throw std::invalid_argument("order of an infinite group");
  Int o = 1;
  for (const Int& f : factors_) o *= f;
  return o;
}

std::string FgAbelianGroup::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ",";
    os << factors_[i];
  }
  os << "]";
  return os.str();
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

GroupElement canonicalize(const FgAbelianGroup& g, IntVec coords) {
  if (static_cast<int>(coords.size()) != g.size())
    throw DimensionError("coordinate count does not match group rank");
  for (int i = 0; i < g.size(); ++i) {
    const Int& d = g.factors()[i];
    if (d == 0) continue;
    coords[i] %= d;
    if (coords[i] < 0) coords[i] += d;
  }
  return GroupElement{g, std::move(coords)};
}

GroupElement zero_element(const FgAbelianGroup& g) {
  return GroupElement{g, IntVec(g.size())};
}

GroupElement elem_add(const GroupElement& x, const GroupElement& y) {
  if (x.group != y.group) throw GroupMismatchError("elements of different groups");
  IntVec c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
  return canonicalize(x.group, std::move(c));
}

GroupElement elem_neg(const GroupElement& x) {
  IntVec c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
  return canonicalize(x.group, std::move(c));
}

GroupElement elem_sub(const GroupElement& x, const GroupElement& y) {
  return elem_add(x, elem_neg(y));
}

GroupElement elem_scale(const Int& n, const GroupElement& x) {
  IntVec c(x.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * x.coords[i];
  return canonicalize(x.group, std::move(c));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.group != source) throw GroupMismatchError("element not in hom source");
  return canonicalize(target, matrix * x.coords);
}

GroupHom make_hom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix) {
  GroupHom f{std::move(source), std::move(target), std::move(matrix)};
  if (f.matrix.rows() != f.target.size() || f.matrix.cols() != f.source.size())
    throw DimensionError("hom matrix shape does not match groups");
  std::string why;
  if (!hom_well_defined(f, &why)) throw std::invalid_argument("ill-defined hom: " + why);
  return f;
}

bool hom_well_defined(const GroupHom& f, std::string* why) {
  for (int i = 0; i < f.source.size(); ++i) {
    const Int& di = f.source.factors()[i];
    if (di == 0) continue;
    for (int j = 0; j < f.target.size(); ++j) {
      const Int& dj = f.target.factors()[j];
      const Int v = di * f.matrix.at(j, i);
      const bool ok = dj == 0 ? v == 0 : v % dj == 0;
      if (!ok) {
        if (why) {
          std::ostringstream os;
          os << "source factor " << di << " maps to entry " << f.matrix.at(j, i)
             << " at target factor " << dj;
          *why = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

GroupHom identity_hom(const FgAbelianGroup& g) {
  return GroupHom{g, g, IntMatrix::identity(g.size())};
}

GroupHom zero_hom(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupHom{source, target, IntMatrix::zero(target.size(), source.size())};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target != g.source) throw GroupMismatchError("homs not composable");
  return GroupHom{f.source, g.target, g.matrix * f.matrix};
}

GroupElement QuotientPresentation::project(const IntVec& generator_coords) const {
  return canonicalize(group, proj * generator_coords);
}

IntVec QuotientPresentation::lift_element(const GroupElement& x) const {
  if (x.group != group) throw GroupMismatchError("element not in quotient group");
  return lift * x.coords;
}

QuotientPresentation group_from_presentation(int generators, const IntMatrix& relations) {
  if (relations.cols() != generators)
    throw DimensionError("relation matrix must have one column per generator");
  // Columns of relations^T generate the lattice to quotient by.
  const IntMatrix m = relations.transpose();
  const auto dec = smith_normal_form(m);
  const IntMatrix uinv = inverse_unimodular(dec.u);
  const int n = std::min(m.rows(), m.cols());
  std::vector<int> kept_torsion, kept_free;
  IntVec factors;
  for (int i = 0; i < generators; ++i) {
    const Int d = i < n ? dec.d.at(i, i) : Int(0);
    if (d == 1) continue;
    (d == 0 ? kept_free : kept_torsion).push_back(i);
  }
  std::vector<int> kept = kept_torsion;
  kept.insert(kept.end(), kept_free.begin(), kept_free.end());
  for (int i : kept) factors.push_back(i < n ? dec.d.at(i, i) : Int(0));
  QuotientPresentation qp;
  qp.group = FgAbelianGroup(std::move(factors));
  qp.proj = dec.u.rows_slice(kept);
  qp.lift = uinv.cols_slice(kept);
  return qp;
}

IntMatrix relation_matrix(const FgAbelianGroup& g) {
  const int t = g.torsion_count();
  IntMatrix r(g.size(), t);
  for (int k = 0; k < t; ++k) r.at(k, k) = g.factors()[k];
  return r;
}

KernelCokernel hom_kernel_cokernel(const GroupHom& f) {
  const int a = f.source.size(), b = f.target.size();
  const IntMatrix ra = relation_matrix(f.source);
  const IntMatrix rb = relation_matrix(f.target);

  KernelCokernel out;

  // Cokernel: Z^b modulo the lattice spanned by im(f) and target relations.
  const IntMatrix coker_rel = f.matrix.transpose().vcat(rb.transpose());
  const auto qc = group_from_presentation(b, coker_rel);
  out.cokernel = qc.group;
  out.cokernel_projection = GroupHom{f.target, qc.group, qc.proj};
  out.cokernel_section = qc.lift;

  // Kernel: preimage lattice L = { x : f(x) in im(rb) }, modulo source relations.
  const IntMatrix aug = f.matrix.hcat(rb);
  const auto ker_aug = solve_with(smith_normal_form(aug), IntVec(b));
  IntMatrix gen(a, static_cast<int>(ker_aug->kernel.size()));
  for (int j = 0; j < gen.cols(); ++j)
    for (int i = 0; i < a; ++i) gen.at(i, j) = ker_aug->kernel[j][i];
  // Relations among the generators: combinations landing in the source lattice.
  const IntMatrix aug2 = gen.hcat(ra);
  const auto ker_aug2 = solve_with(smith_normal_form(aug2), IntVec(a));
  IntMatrix rel(static_cast<int>(ker_aug2->kernel.size()), gen.cols());
  for (int i = 0; i < rel.rows(); ++i)
    for (int j = 0; j < rel.cols(); ++j) rel.at(i, j) = ker_aug2->kernel[i][j];
  const auto qk = group_from_presentation(gen.cols(), rel);
  out.kernel = qk.group;
  out.kernel_inclusion = GroupHom{qk.group, f.source, gen * qk.lift};
  return out;
}

std::optional<IntVec> preimage(const GroupHom& f, const GroupElement& y) {
  if (y.group != f.target) throw GroupMismatchError("element not in hom target");
  const IntMatrix aug = f.matrix.hcat(relation_matrix(f.target));
  const auto sol = solve_linear(aug, y.coords);
  if (!sol) return std::nullopt;
  return IntVec(sol->particular.begin(), sol->particular.begin() + f.source.size());
}

std::optional<GroupElement> coords_in_subgroup(const GroupHom& incl, const GroupElement& x) {
  const auto pre = preimage(incl, x);
  if (!pre) return std::nullopt;
  return canonicalize(incl.source, *pre);
}

}  // namespace picardlab::zlin
