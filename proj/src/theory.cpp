#include "picardlab/theory.hpp"

namespace picardlab::theory {

OneCell make_cell(IntMatrix m) {
  OneCell c{m.cols(), m.rows(), std::move(m)};
  return c;
}

OneCell identity_cell(int arity) { return make_cell(IntMatrix::identity(arity)); }

OneCell compose_cells(const OneCell& q, const OneCell& p) {
  if (p.target_arity != q.source_arity)
    throw zlin::DimensionError("cells not composable: arity mismatch");
  return OneCell{p.source_arity, q.target_arity, q.matrix * p.matrix};
}

std::optional<TwoCell> two_cell(const OneCell& p, const OneCell& q) {
  if (p.source_arity != q.source_arity || p.target_arity != q.target_arity)
    throw zlin::DimensionError("2-cell endpoints are not parallel");
  if (!(p.matrix == q.matrix)) return std::nullopt;
  return TwoCell{p, q};
}

TwoCell identity_two_cell(const OneCell& p) { return TwoCell{p, p}; }

ProductStructure product_structure(int n, int m) {
  IntMatrix left(n, n + m), right(m, n + m);
  for (int i = 0; i < n; ++i) left.at(i, i) = 1;
  for (int i = 0; i < m; ++i) right.at(i, n + i) = 1;
  return ProductStructure{make_cell(std::move(left)), make_cell(std::move(right))};
}

OneCell pair_cells(const OneCell& f, const OneCell& g) {
  if (f.source_arity != g.source_arity)
    throw zlin::DimensionError("paired cells must share a source arity");
  return OneCell{f.source_arity, f.target_arity + g.target_arity,
                 f.matrix.vcat(g.matrix)};
}

OneCell terminal_cell(int source_arity) {
  return OneCell{source_arity, 0, IntMatrix::zero(0, source_arity)};
}

}  // namespace picardlab::theory
