#include "picardlab/algebra.hpp"

#include <stdexcept>

#include "picardlab/complexes.hpp"
#include "picardlab/detail/checker.hpp"

namespace picardlab::algebra {

using detail::Checker;
using expr::ExprPtr;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

ObjTuple sample_tuple(const Model& p, int arity, Rng& rng) {
  ObjTuple out;
  out.reserve(arity);
  for (int i = 0; i < arity; ++i) out.push_back(p->sample_object(rng));
  return out;
}

ArrTuple sample_arrow_tuple(const Model& p, const ObjTuple& from, Rng& rng) {
  ArrTuple out;
  out.reserve(from.size());
  for (const auto& x : from) out.push_back(p->sample_arrow_from(rng, x));
  return out;
}

ObjTuple tuple_concat(const ObjTuple& x, const ObjTuple& y) {
  ObjTuple out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

namespace {

IntVec matrix_row(const IntMatrix& m, int i) {
  IntVec row(m.cols());
  for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
  return row;
}

ExprPtr row_expr(const OneCell& cell, int i) {
  return expr::canonical_form(matrix_row(cell.matrix, i));
}

// Substitutes args[j-1] for Var(j).
ExprPtr subst(const ExprPtr& e, const std::vector<ExprPtr>& args) {
  switch (e->kind) {
    case expr::ExprKind::Zero: return e;
    case expr::ExprKind::Var:
      if (e->var > static_cast<int>(args.size()))
        throw std::out_of_range("substitution index out of range");
      return args[e->var - 1];
    case expr::ExprKind::Neg: return expr::neg(subst(e->a, args));
    case expr::ExprKind::Add:
      return expr::add(subst(e->a, args), subst(e->b, args));
  }
  throw std::logic_error("unreachable expression kind");
}

ObjTuple sources(const ArrTuple& a) {
  ObjTuple out;
  out.reserve(a.size());
  for (const auto& f : a) out.push_back(f.src);
  return out;
}

ObjTuple targets(const ArrTuple& a) {
  ObjTuple out;
  out.reserve(a.size());
  for (const auto& f : a) out.push_back(f.dst);
  return out;
}

std::string tuple_str(const ObjTuple& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += x[i].payload.str();
  }
  return s + ")";
}

}  // namespace

ObjTuple apply_matrix_objects(const OneCell& cell, const ObjTuple& objs, const Model& p) {
  if (static_cast<int>(objs.size()) != cell.source_arity)
    throw zlin::DimensionError("tuple length does not match the cell's source arity");
  ObjTuple out;
  out.reserve(cell.target_arity);
  for (int i = 0; i < cell.target_arity; ++i)
    out.push_back(expr::eval_expr(row_expr(cell, i), objs, p));
  return out;
}

ArrTuple apply_matrix_arrows(const OneCell& cell, const ArrTuple& arrows, const Model& p) {
  if (static_cast<int>(arrows.size()) != cell.source_arity)
    throw zlin::DimensionError("tuple length does not match the cell's source arity");
  ArrTuple out;
  out.reserve(cell.target_arity);
  for (int i = 0; i < cell.target_arity; ++i)
    out.push_back(expr::eval_expr_arrows(row_expr(cell, i), arrows, p));
  return out;
}

TwoAlgebra hat(const Model& p) {
  TwoAlgebra a;
  a.base = p;
  a.on_objects = [p](const OneCell& cell, const ObjTuple& x) {
    return apply_matrix_objects(cell, x, p);
  };
  a.on_arrows = [p](const OneCell& cell, const ArrTuple& f) {
    return apply_matrix_arrows(cell, f, p);
  };
  a.compositor = [p](const OneCell& q, const OneCell& cell_p, const ObjTuple& x) {
    if (cell_p.target_arity != q.source_arity)
      throw zlin::DimensionError("compositor of non-composable cells");
    if (static_cast<int>(x.size()) != cell_p.source_arity)
      throw zlin::DimensionError("compositor tuple length mismatch");
    std::vector<ExprPtr> inner;
    inner.reserve(cell_p.target_arity);
    for (int j = 0; j < cell_p.target_arity; ++j) inner.push_back(row_expr(cell_p, j));
    const OneCell qp = theory::compose_cells(q, cell_p);
    ArrTuple out;
    out.reserve(q.target_arity);
    for (int i = 0; i < q.target_arity; ++i)
      out.push_back(
          rewrite::coherence_iso(subst(row_expr(q, i), inner), row_expr(qp, i), p, x));
    return out;
  };
  return a;
}

namespace {

// Filling arrow chi(e): F(eval_src(e, X)) -> eval_tgt(e, F(X)), built from the
// distributor, the unit comparison and the negation comparison.
PArrow filling_arrow(const AdditiveFunctor& f, const ExprPtr& e, const ObjTuple& x) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  switch (e->kind) {
    case expr::ExprKind::Zero: return picard::functor_unit(f);
    case expr::ExprKind::Var:
      if (e->var > static_cast<int>(x.size()))
        throw std::out_of_range("filling index out of range");
      return tgt->identity(f.obj(x[e->var - 1]));
    case expr::ExprKind::Add: {
      const auto ea = expr::eval_expr(e->a, x, src);
      const auto eb = expr::eval_expr(e->b, x, src);
      return tgt->compose(tgt->add(filling_arrow(f, e->a, x), filling_arrow(f, e->b, x)),
                          f.sigma(ea, eb));
    }
    case expr::ExprKind::Neg: {
      const auto ea = expr::eval_expr(e->a, x, src);
      return tgt->compose(tgt->negate_arrow(filling_arrow(f, e->a, x)),
                          picard::functor_neg(f, ea));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace

TwoAlgebraMorphism hat_functor(const AdditiveFunctor& f) {
  TwoAlgebraMorphism m;
  m.arity1 = f;
  m.component_obj = [f](const ObjTuple& x) {
    ObjTuple out;
    out.reserve(x.size());
    for (const auto& o : x) out.push_back(f.obj(o));
    return out;
  };
  m.component_arr = [f](const ArrTuple& a) {
    ArrTuple out;
    out.reserve(a.size());
    for (const auto& g : a) out.push_back(f.arr(g));
    return out;
  };
  m.filling = [f](const OneCell& cell, const ObjTuple& x) {
    if (static_cast<int>(x.size()) != cell.source_arity)
      throw zlin::DimensionError("filling tuple length mismatch");
    ArrTuple out;
    out.reserve(cell.target_arity);
    for (int i = 0; i < cell.target_arity; ++i)
      out.push_back(filling_arrow(f, row_expr(cell, i), x));
    return out;
  };
  return m;
}

Modification hat_modification(const AdditiveTransformation& u) {
  Modification m;
  m.arity1 = u;
  m.component = [u](const ObjTuple& x) {
    ArrTuple out;
    out.reserve(x.size());
    for (const auto& o : x) out.push_back(u.component(o));
    return out;
  };
  return m;
}

ReconstructedStructure reconstruct(const TwoAlgebra& a) {
  const Model p = a.base;
  const OneCell plus_cell = theory::make_cell(IntMatrix::from({{1, 1}}));
  ReconstructedStructure r;
  r.carrier = p;
  r.plus = [a, plus_cell](const PObject& x, const PObject& y) {
    return a.on_objects(plus_cell, {x, y})[0];
  };
  // e := the value of the unique cell 1^0 -> 1 on the empty tuple.
  r.neutral = a.on_objects(OneCell{0, 1, IntMatrix::zero(1, 0)}, {})[0];
  // phi := gamma_{(1,1), 0} at the empty tuple: e + e -> e.
  r.phi = a.compositor(plus_cell, OneCell{0, 2, IntMatrix::zero(2, 0)}, {})[0];
  // assoc := gamma_1^{-1} . gamma_2 where gamma_1 covers the route through
  // X+(Y+Z) and gamma_2 the route through (X+Y)+Z.
  r.assoc = [a, p, plus_cell](const PObject& x, const PObject& y, const PObject& z) {
    const auto g1 = a.compositor(plus_cell,
                                 theory::make_cell(IntMatrix::from({{1, 0, 0}, {0, 1, 1}})),
                                 {x, y, z})[0];
    const auto g2 = a.compositor(plus_cell,
                                 theory::make_cell(IntMatrix::from({{1, 1, 0}, {0, 0, 1}})),
                                 {x, y, z})[0];
    return p->compose(p->inverse(g1), g2);
  };
  // comm(X,Y) := gamma_{(1,1), swap} at (Y,X): X+Y -> Y+X.
  r.comm = [a, plus_cell](const PObject& x, const PObject& y) {
    return a.compositor(plus_cell, theory::make_cell(IntMatrix::from({{0, 1}, {1, 0}})),
                        {y, x})[0];
  };
  return r;
}

AdditiveFunctor extract_arity1(const TwoAlgebraMorphism& m, const Model& source,
                               const Model& target) {
  AdditiveFunctor f;
  f.source = source;
  f.target = target;
  f.obj = [m](const PObject& x) { return m.component_obj({x})[0]; };
  f.arr = [m](const PArrow& a) { return m.component_arr({a})[0]; };
  const OneCell plus_cell = theory::make_cell(IntMatrix::from({{1, 1}}));
  f.sigma = [m, plus_cell](const PObject& x, const PObject& y) {
    return m.filling(plus_cell, {x, y})[0];
  };
  return f;
}

bool functors_agree(const AdditiveFunctor& f, const AdditiveFunctor& g, int budget,
                    std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < budget; ++t) {
    const auto x = f.source->sample_object(rng);
    const auto y = f.source->sample_object(rng);
    if (!(f.obj(x) == g.obj(x))) return false;
    const auto a = f.source->sample_arrow_from(rng, x);
    if (!(f.arr(a) == g.arr(a))) return false;
    if (!(f.sigma(x, y) == g.sigma(x, y))) return false;
  }
  return true;
}

bool round_trip_hom(const AdditiveFunctor& f, int budget, std::uint64_t seed) {
  return functors_agree(extract_arity1(hat_functor(f), f.source, f.target), f, budget,
                        seed);
}

// --- check suites ----------------------------------------------------------

namespace {

OneCell random_cell(Rng& rng, int source_arity, int target_arity, int bound) {
  IntMatrix m(target_arity, source_arity);
  for (int i = 0; i < target_arity; ++i)
    for (int j = 0; j < source_arity; ++j) m.at(i, j) = Int(rng.range(-bound, bound));
  return theory::make_cell(std::move(m));
}

int random_arity(Rng& rng) { return 1 + static_cast<int>(rng.below(3)); }

bool tuples_equal(const ObjTuple& a, const ObjTuple& b) {
  return a == b;
}

bool arrows_equal(const ArrTuple& a, const ArrTuple& b) {
  return a == b;
}

ArrTuple compose_tuples(const Model& p, const ArrTuple& g, const ArrTuple& f) {
  ArrTuple out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(p->compose(g[i], f[i]));
  return out;
}

ArrTuple identity_tuple(const Model& p, const ObjTuple& x) {
  ArrTuple out;
  out.reserve(x.size());
  for (const auto& o : x) out.push_back(p->identity(o));
  return out;
}

}  // namespace

std::vector<CheckRecord> check_hat_structure(const Model& p, int budget,
                                             std::uint64_t seed) {
  Checker ck;
  const auto a = hat(p);

  ck.run("hat-product-preservation", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), m = random_arity(rng);
    const auto pr = theory::product_structure(n, m);
    const auto x = sample_tuple(p, n, rng);
    const auto y = sample_tuple(p, m, rng);
    const auto xy = tuple_concat(x, y);
    if (!tuples_equal(a.on_objects(pr.proj_left, xy), x) ||
        !tuples_equal(a.on_objects(pr.proj_right, xy), y)) {
      ce = tuple_str(xy);
      return false;
    }
    // Pairing of cells evaluates componentwise (strict universal property).
    const int s = random_arity(rng);
    const auto f = random_cell(rng, s, n, 3);
    const auto g = random_cell(rng, s, m, 3);
    const auto z = sample_tuple(p, s, rng);
    const auto paired = a.on_objects(theory::pair_cells(f, g), z);
    if (!tuples_equal(paired, tuple_concat(a.on_objects(f, z), a.on_objects(g, z)))) {
      ce = tuple_str(z);
      return false;
    }
    return true;
  });

  ck.run("hat-functor-laws", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), k = random_arity(rng);
    const auto cell = random_cell(rng, n, k, 5);
    const auto x = sample_tuple(p, n, rng);
    if (!tuples_equal(a.on_objects(theory::identity_cell(n), x), x)) {
      ce = tuple_str(x);
      return false;
    }
    // Identities map to identities.
    if (!arrows_equal(a.on_arrows(cell, identity_tuple(p, x)),
                      identity_tuple(p, a.on_objects(cell, x)))) {
      ce = tuple_str(x);
      return false;
    }
    // Composition of arrow tuples is preserved.
    const auto f = sample_arrow_tuple(p, x, rng);
    const auto g = sample_arrow_tuple(p, targets(f), rng);
    const auto lhs = a.on_arrows(cell, compose_tuples(p, g, f));
    const auto rhs = compose_tuples(p, a.on_arrows(cell, g), a.on_arrows(cell, f));
    if (!arrows_equal(lhs, rhs)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  ck.run("compositor-identity", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), k = random_arity(rng);
    const auto cell = random_cell(rng, n, k, 5);
    const auto x = sample_tuple(p, n, rng);
    const auto left = a.compositor(theory::identity_cell(k), cell, x);
    const auto right = a.compositor(cell, theory::identity_cell(n), x);
    const auto ids = identity_tuple(p, a.on_objects(cell, x));
    if (!arrows_equal(left, ids) || !arrows_equal(right, ids)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  ck.run("compositor-naturality", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), k = random_arity(rng), l = random_arity(rng);
    const auto cp = random_cell(rng, n, k, 4);
    const auto cq = random_cell(rng, k, l, 4);
    const auto x = sample_tuple(p, n, rng);
    const auto f = sample_arrow_tuple(p, x, rng);
    const auto qp = theory::compose_cells(cq, cp);
    const auto lhs = compose_tuples(p, a.compositor(cq, cp, targets(f)),
                                    a.on_arrows(cq, a.on_arrows(cp, f)));
    const auto rhs = compose_tuples(p, a.on_arrows(qp, f), a.compositor(cq, cp, x));
    if (!arrows_equal(lhs, rhs)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  ck.run("compositor-cocycle", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), k = random_arity(rng), l = random_arity(rng),
              o = random_arity(rng);
    const auto cp = random_cell(rng, n, k, 3);
    const auto cq = random_cell(rng, k, l, 3);
    const auto cr = random_cell(rng, l, o, 3);
    const auto x = sample_tuple(p, n, rng);
    const auto route1 = compose_tuples(
        p, a.compositor(cr, theory::compose_cells(cq, cp), x),
        a.on_arrows(cr, a.compositor(cq, cp, x)));
    const auto route2 =
        compose_tuples(p, a.compositor(theory::compose_cells(cr, cq), cp, x),
                       a.compositor(cr, cq, a.on_objects(cp, x)));
    if (!arrows_equal(route1, route2)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  return ck.report.records;
}

std::vector<CheckRecord> check_reconstruction(const Model& p, int budget,
                                              std::uint64_t seed) {
  Checker ck;
  const auto r = reconstruct(hat(p));

  ck.run("reconstruct-plus", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const bool ok = r.plus(x, y) == p->add(x, y);
    if (!ok) ce = x.payload.str() + "," + y.payload.str();
    return ok;
  });

  ck.run("reconstruct-neutral-phi", 1, seed, [&](Rng&, std::string& ce) {
    const bool ok = r.neutral == p->neutral() && r.phi == p->phi();
    if (!ok) ce = "phi=" + r.phi.payload.str();
    return ok;
  });

  ck.run("reconstruct-assoc", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng),
               z = p->sample_object(rng);
    const bool ok = r.assoc(x, y, z) == p->assoc(x, y, z);
    if (!ok)
      ce = x.payload.str() + "," + y.payload.str() + "," + z.payload.str() +
           " got " + r.assoc(x, y, z).payload.str();
    return ok;
  });

  ck.run("reconstruct-comm", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const bool ok = r.comm(x, y) == p->comm(x, y);
    if (!ok)
      ce = x.payload.str() + "," + y.payload.str() + " got " +
           r.comm(x, y).payload.str();
    return ok;
  });

  return ck.report.records;
}

namespace {

ExprPtr random_expr(Rng& rng, int arity, int depth) {
  if (depth == 0 || rng.chance(1, 5)) {
    if (rng.chance(1, 5)) return expr::zero();
    return expr::var(1 + static_cast<int>(rng.below(arity)));
  }
  switch (rng.below(3)) {
    case 0: return expr::neg(random_expr(rng, arity, depth - 1));
    default:
      return expr::add(random_expr(rng, arity, depth - 1),
                       random_expr(rng, arity, depth - 1));
  }
}

}  // namespace

std::vector<CheckRecord> check_confluence(const Model& p, int budget, std::uint64_t seed) {
  Checker ck;

  ck.run("confluence", budget, seed, [&](Rng& rng, std::string& ce) {
    const int arity = 1 + static_cast<int>(rng.below(4));
    const auto e = random_expr(rng, arity, 5);
    const auto env = sample_tuple(p, arity, rng);
    const auto inner = rewrite::normalize_with_witness(e, p, env,
                                                       rewrite::Strategy::Innermost);
    const auto outer = rewrite::normalize_with_witness(e, p, env,
                                                       rewrite::Strategy::Outermost);
    const bool ok = expr::expr_equal(inner.canonical, outer.canonical) &&
                    inner.arrow == outer.arrow;
    if (!ok) ce = expr::to_string(e);
    return ok;
  });

  ck.run("evaluation-consistency", budget, seed, [&](Rng& rng, std::string& ce) {
    const int arity = 1 + static_cast<int>(rng.below(4));
    const auto e = random_expr(rng, arity, 5);
    const auto env = sample_tuple(p, arity, rng);
    const auto n = rewrite::normalize_with_witness(e, p, env);
    const bool ok = n.arrow.src == expr::eval_expr(e, env, p) &&
                    n.arrow.dst == expr::eval_expr(n.canonical, env, p) &&
                    expr::expr_equal(n.canonical,
                                     expr::canonical_form(expr::coeffs(e, arity)));
    if (!ok) ce = expr::to_string(e);
    return ok;
  });

  ck.run("coherence-matches-witnesses", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto env = sample_tuple(p, 3, rng);
    const auto x1 = expr::var(1), x2 = expr::var(2), x3 = expr::var(3);
    const auto lhs = rewrite::coherence_iso(expr::add(expr::add(x1, x2), x3),
                                            expr::add(x1, expr::add(x2, x3)), p, env);
    if (!(lhs == p->assoc(env[0], env[1], env[2]))) {
      ce = "assoc at " + tuple_str(env);
      return false;
    }
    const auto c = rewrite::coherence_iso(expr::add(x1, x2), expr::add(x2, x1), p,
                                          {env[0], env[1]});
    if (!(c == p->comm(env[0], env[1]))) {
      ce = "comm at " + tuple_str(env);
      return false;
    }
    return true;
  });

  return ck.report.records;
}

std::vector<CheckRecord> check_trivial_stack(int max_arity) {
  Checker ck;
  const auto one = picard::PicardGroupoid::strict_model(complexes::trivial_complex());
  const auto a = hat(one);
  for (int n = 0; n <= max_arity; ++n) {
    ck.run("trivial-stack-arity-" + std::to_string(n), 1, 0,
           [&](Rng&, std::string& ce) {
             // The unique object tuple at arity n and its unique endo-arrow.
             ObjTuple x(n, one->neutral());
             ArrTuple id(n, one->identity(one->neutral()));
             const bool unique_obj = one->object_group().is_trivial();
             const bool unique_arr = one->arrow_group().is_trivial();
             const bool stable = tuples_equal(a.on_objects(theory::identity_cell(n), x), x);
             if (!(unique_obj && unique_arr && stable)) {
               ce = "arity " + std::to_string(n);
               return false;
             }
             return true;
           });
  }
  return ck.report.records;
}

std::vector<CheckRecord> check_hat_functor(const AdditiveFunctor& f, int budget,
                                           std::uint64_t seed) {
  Checker ck;
  const auto m = hat_functor(f);
  const auto a_src = hat(f.source);
  const auto a_tgt = hat(f.target);

  ck.run("hat-functor-square", budget, seed, [&](Rng& rng, std::string& ce) {
    const int n = random_arity(rng), k = random_arity(rng);
    const auto cell = random_cell(rng, n, k, 3);
    const auto x = sample_tuple(f.source, n, rng);
    const auto arr = sample_arrow_tuple(f.source, x, rng);
    // Naturality of the filling isos in the tuple.
    const auto lhs = compose_tuples(f.target, m.filling(cell, targets(arr)),
                                    m.component_arr(a_src.on_arrows(cell, arr)));
    const auto rhs = compose_tuples(f.target, a_tgt.on_arrows(cell, m.component_arr(arr)),
                                    m.filling(cell, x));
    if (!arrows_equal(lhs, rhs)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  ck.run("hat-functor-compositor-compat", budget, seed, [&](Rng& rng, std::string& ce) {
    // The filling of a composite factors through the compositors on both
    // sides: chi_{QP} = gamma^tgt_{Q,P}(F X) . Q(chi_P) . chi_Q(P X) route.
    const int n = random_arity(rng), k = random_arity(rng), l = random_arity(rng);
    const auto cp = random_cell(rng, n, k, 3);
    const auto cq = random_cell(rng, k, l, 3);
    const auto x = sample_tuple(f.source, n, rng);
    const auto qp = theory::compose_cells(cq, cp);
    const auto route1 = compose_tuples(
        f.target, m.filling(qp, x),
        m.component_arr(a_src.compositor(cq, cp, x)));
    const auto route2 = compose_tuples(
        f.target, a_tgt.compositor(cq, cp, m.component_obj(x)),
        compose_tuples(f.target, a_tgt.on_arrows(cq, m.filling(cp, x)),
                       m.filling(cq, a_src.on_objects(cp, x))));
    if (!arrows_equal(route1, route2)) {
      ce = tuple_str(x);
      return false;
    }
    return true;
  });

  ck.run("hat-functor-arity1", 1, seed, [&](Rng&, std::string& ce) {
    const bool ok = functors_agree(extract_arity1(m, f.source, f.target), f, budget,
                                   seed);
    if (!ok) ce = "arity-1 extraction differs";
    return ok;
  });

  return ck.report.records;
}

}  // namespace picardlab::algebra
