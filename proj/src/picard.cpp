#include "picardlab/picard.hpp"

#include "picardlab/detail/checker.hpp"

#include <sstream>

namespace picardlab::picard {

using zlin::canonicalize;
using zlin::elem_add;
using zlin::elem_neg;
using zlin::elem_sub;
using zlin::zero_element;

namespace {

std::string pair_str(const PObject& x, const PObject& y) {
  return x.payload.str() + "," + y.payload.str();
}

}  // namespace

PicardGroupoid::PicardGroupoid(ModelKind kind, TwoTermComplex c)
    : kind_(kind), complex_(std::move(c)), homology_(complexes::homology(complex_)) {}

std::shared_ptr<const PicardGroupoid> PicardGroupoid::strict_model(TwoTermComplex c) {
  return std::shared_ptr<const PicardGroupoid>(
      new PicardGroupoid(ModelKind::Strict, std::move(c)));
}

std::shared_ptr<const PicardGroupoid> PicardGroupoid::skeletal_model(TwoTermComplex c,
                                                                     SkeletalConfig cfg) {
  auto p = std::shared_ptr<PicardGroupoid>(new PicardGroupoid(ModelKind::Skeletal, c));
  p->strict_ = strict_model(std::move(c));
  p->config_ = std::move(cfg);
  if (p->config_.section) {
    for (const auto& [k, v] : *p->config_.section) {
      const auto key = canonicalize(p->homology_.pi0, k);
      p->section_table_[key.coords] = canonicalize(p->complex_.b, v).coords;
    }
    p->validate_explicit_section();
  }
  for (const auto& [k, v] : p->config_.cochain) {
    const auto x = canonicalize(p->homology_.pi0, k.first);
    const auto y = canonicalize(p->homology_.pi0, k.second);
    const auto val = canonicalize(p->homology_.pi1, v);
    p->cochain_table_[{x.coords, y.coords}] = val.coords;
  }
  return p;
}

namespace {

// All elements of a finite group, lexicographic in canonical coordinates.
std::vector<IntVec> enumerate_elements(const FgAbelianGroup& g) {
  if (!g.is_finite()) throw std::invalid_argument("cannot enumerate an infinite group");
  std::vector<IntVec> out{IntVec(g.size())};
  for (int i = g.size() - 1; i >= 0; --i) {
    std::vector<IntVec> next;
    for (zlin::Int v = 0; v < g.factors()[i]; ++v)
      for (auto base : out) {
        base[i] = v;
        next.push_back(base);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

void PicardGroupoid::validate_explicit_section() const {
  const auto& pi0 = homology_.pi0;
  if (!pi0.is_finite())
    throw std::invalid_argument("explicit section requires a finite pi0");
  for (const auto& coords : enumerate_elements(pi0)) {
    const auto it = section_table_.find(coords);
    if (it == section_table_.end())
      throw std::invalid_argument("section misses the pi0 element " +
                                  GroupElement{pi0, coords}.str());
    const auto lift = GroupElement{complex_.b, it->second};
    const auto back = homology_.pi0_projection.apply(lift);
    if (!(back.coords == coords))
      throw std::invalid_argument("section is not a splitting at " +
                                  GroupElement{pi0, coords}.str());
  }
  const auto zero_it = section_table_.find(IntVec(pi0.size()));
  if (zero_it->second != IntVec(complex_.b.size()))
    throw std::invalid_argument("section must send 0 to 0");
}

const FgAbelianGroup& PicardGroupoid::object_group() const {
  return kind_ == ModelKind::Strict ? complex_.b : homology_.pi0;
}

const FgAbelianGroup& PicardGroupoid::arrow_group() const {
  return kind_ == ModelKind::Strict ? complex_.a : homology_.pi1;
}

PObject PicardGroupoid::make_object(GroupElement payload) const {
  if (payload.group != object_group())
    throw zlin::GroupMismatchError("object payload in the wrong group");
  return PObject{kind_, canonicalize(object_group(), std::move(payload.coords))};
}

PObject PicardGroupoid::object_from_coords(IntVec coords) const {
  return PObject{kind_, canonicalize(object_group(), std::move(coords))};
}

PObject PicardGroupoid::neutral() const { return PObject{kind_, zero_element(object_group())}; }

PObject PicardGroupoid::add(const PObject& x, const PObject& y) const {
  return PObject{kind_, elem_add(x.payload, y.payload)};
}

PObject PicardGroupoid::negate(const PObject& x) const {
  return PObject{kind_, elem_neg(x.payload)};
}

PArrow PicardGroupoid::make_arrow(PObject src, PObject dst, GroupElement payload) const {
  if (payload.group != arrow_group())
    throw zlin::GroupMismatchError("arrow payload in the wrong group");
  payload = canonicalize(arrow_group(), std::move(payload.coords));
  if (kind_ == ModelKind::Strict) {
    const auto img = complex_.d.apply(payload);
    if (!(img == elem_sub(dst.payload, src.payload)))
      throw std::invalid_argument("payload does not connect " + src.payload.str() + " to " +
                                  dst.payload.str());
  } else {
    if (!(src == dst))
      throw std::invalid_argument("skeletal arrows only exist between equal objects");
  }
  return PArrow{std::move(src), std::move(dst), std::move(payload)};
}

PArrow PicardGroupoid::identity(const PObject& x) const {
  return PArrow{x, x, zero_element(arrow_group())};
}

PArrow PicardGroupoid::compose(const PArrow& g, const PArrow& f) const {
  if (!(f.dst == g.src)) throw std::invalid_argument("arrows not composable");
  return PArrow{f.src, g.dst, elem_add(g.payload, f.payload)};
}

PArrow PicardGroupoid::add(const PArrow& f, const PArrow& g) const {
  return PArrow{add(f.src, g.src), add(f.dst, g.dst), elem_add(f.payload, g.payload)};
}

PArrow PicardGroupoid::inverse(const PArrow& f) const {
  return PArrow{f.dst, f.src, elem_neg(f.payload)};
}

PArrow PicardGroupoid::negate_arrow(const PArrow& f) const {
  return PArrow{negate(f.src), negate(f.dst), elem_neg(f.payload)};
}

bool PicardGroupoid::has_arrow(const PObject& x, const PObject& y) const {
  if (kind_ == ModelKind::Skeletal) return x == y;
  return zlin::preimage(complex_.d, elem_sub(y.payload, x.payload)).has_value();
}

std::optional<PArrow> PicardGroupoid::some_arrow(const PObject& x, const PObject& y) const {
  if (kind_ == ModelKind::Skeletal) {
    if (!(x == y)) return std::nullopt;
    return identity(x);
  }
  const auto pre = zlin::preimage(complex_.d, elem_sub(y.payload, x.payload));
  if (!pre) return std::nullopt;
  return PArrow{x, y, canonicalize(complex_.a, *pre)};
}

GroupElement PicardGroupoid::section_of(const GroupElement& pi0_elem) const {
  if (kind_ != ModelKind::Skeletal) throw std::logic_error("section on a strict model");
  if (config_.section) {
    const auto it = section_table_.find(pi0_elem.coords);
    if (it == section_table_.end()) throw std::logic_error("section table lookup failed");
    return GroupElement{complex_.b, it->second};
  }
  return canonicalize(complex_.b, homology_.pi0_section * pi0_elem.coords);
}

GroupElement PicardGroupoid::class_of(const GroupElement& b_elem) const {
  return homology_.pi0_projection.apply(b_elem);
}

GroupElement PicardGroupoid::cochain(const GroupElement& x, const GroupElement& y) const {
  const auto it = cochain_table_.find({x.coords, y.coords});
  if (it == cochain_table_.end()) return zero_element(homology_.pi1);
  return GroupElement{homology_.pi1, it->second};
}

GroupElement PicardGroupoid::deterministic_preimage(const GroupElement& b_elem) const {
  const auto it = preimage_cache_.find(b_elem.coords);
  if (it != preimage_cache_.end()) return GroupElement{complex_.a, it->second};
  const auto pre = zlin::preimage(complex_.d, b_elem);
  if (!pre) throw std::logic_error("element has no preimage under d");
  auto out = canonicalize(complex_.a, *pre);
  preimage_cache_.emplace(b_elem.coords, out.coords);
  return out;
}

GroupElement PicardGroupoid::transport_payload(const GroupElement& x,
                                               const GroupElement& y) const {
  const auto it = transport_cache_.find({x.coords, y.coords});
  if (it != transport_cache_.end()) return GroupElement{complex_.a, it->second};
  const auto sx = section_of(x), sy = section_of(y);
  const auto sxy = section_of(elem_add(x, y));
  const auto h = deterministic_preimage(elem_sub(elem_add(sx, sy), sxy));
  auto out = elem_add(pi1_include(cochain(x, y)), h);
  transport_cache_.emplace(std::make_pair(x.coords, y.coords), out.coords);
  return out;
}

GroupElement PicardGroupoid::pi1_coords(const GroupElement& a_elem) const {
  const auto it = pi1_coords_cache_.find(a_elem.coords);
  if (it != pi1_coords_cache_.end()) return GroupElement{homology_.pi1, it->second};
  const auto c = zlin::coords_in_subgroup(homology_.pi1_inclusion, a_elem);
  if (!c) throw std::logic_error("arrow payload is not in ker d");
  pi1_coords_cache_.emplace(a_elem.coords, c->coords);
  return *c;
}

GroupElement PicardGroupoid::pi1_include(const GroupElement& pi1_elem) const {
  return homology_.pi1_inclusion.apply(pi1_elem);
}

const std::shared_ptr<const PicardGroupoid>& PicardGroupoid::strict_companion() const {
  if (kind_ != ModelKind::Skeletal) throw std::logic_error("strict model has no companion");
  return strict_;
}

namespace {

// Comparison arrow of the skeletal transport: s(x)+s(y) -> s(x+y) in the
// strict companion, payload -G(x,y).
PArrow comparison(const PicardGroupoid& skel, const PicardGroupoid& strict,
                  const GroupElement& x, const GroupElement& y) {
  const auto src = strict.make_object(elem_add(skel.section_of(x), skel.section_of(y)));
  const auto dst = strict.make_object(skel.section_of(elem_add(x, y)));
  return strict.make_arrow(src, dst, elem_neg(skel.transport_payload(x, y)));
}

}  // namespace

PArrow PicardGroupoid::phi() const {
  const auto e = neutral();
  if (kind_ == ModelKind::Strict) return identity(e);
  const auto& st = *strict_;
  const auto t = comparison(*this, st, e.payload, e.payload);
  const auto route = st.compose(st.identity(t.dst), st.inverse(t));
  return PArrow{add(e, e), e, pi1_coords(route.payload)};
}

PArrow PicardGroupoid::assoc(const PObject& x, const PObject& y, const PObject& z) const {
  const auto src = add(add(x, y), z), dst = add(x, add(y, z));
  if (kind_ == ModelKind::Strict) return PArrow{src, dst, zero_element(arrow_group())};
  const auto& st = *strict_;
  const auto xy = elem_add(x.payload, y.payload);
  const auto yz = elem_add(y.payload, z.payload);
  auto route = st.inverse(comparison(*this, st, xy, z.payload));
  route = st.compose(st.add(st.inverse(comparison(*this, st, x.payload, y.payload)),
                            st.identity(st.make_object(section_of(z.payload)))),
                     route);
  route = st.compose(st.add(st.identity(st.make_object(section_of(x.payload))),
                            comparison(*this, st, y.payload, z.payload)),
                     route);
  route = st.compose(comparison(*this, st, x.payload, yz), route);
  return PArrow{src, dst, pi1_coords(route.payload)};
}

PArrow PicardGroupoid::comm(const PObject& x, const PObject& y) const {
  const auto src = add(x, y), dst = add(y, x);
  if (kind_ == ModelKind::Strict) return PArrow{src, dst, zero_element(arrow_group())};
  const auto& st = *strict_;
  auto route = st.inverse(comparison(*this, st, x.payload, y.payload));
  route = st.compose(st.comm(st.make_object(section_of(x.payload)),
                             st.make_object(section_of(y.payload))),
                     route);
  route = st.compose(comparison(*this, st, y.payload, x.payload), route);
  return PArrow{src, dst, pi1_coords(route.payload)};
}

PArrow PicardGroupoid::unit_left(const PObject& x) const {
  const auto e = neutral();
  if (kind_ == ModelKind::Strict) return PArrow{add(e, x), x, zero_element(arrow_group())};
  const auto& st = *strict_;
  auto route = st.inverse(comparison(*this, st, e.payload, x.payload));
  route = st.compose(st.unit_left(st.make_object(section_of(x.payload))), route);
  return PArrow{add(e, x), x, pi1_coords(route.payload)};
}

PArrow PicardGroupoid::unit_right(const PObject& x) const {
  const auto e = neutral();
  if (kind_ == ModelKind::Strict) return PArrow{add(x, e), x, zero_element(arrow_group())};
  const auto& st = *strict_;
  auto route = st.inverse(comparison(*this, st, x.payload, e.payload));
  route = st.compose(st.unit_right(st.make_object(section_of(x.payload))), route);
  return PArrow{add(x, e), x, pi1_coords(route.payload)};
}

PArrow PicardGroupoid::inv_witness(const PObject& x) const {
  const auto e = neutral();
  const auto src = add(x, negate(x));
  if (kind_ == ModelKind::Strict) return PArrow{src, e, zero_element(arrow_group())};
  const auto& st = *strict_;
  const auto neg = negate(x);
  const auto sx = st.make_object(section_of(x.payload));
  const auto sneg = st.make_object(section_of(neg.payload));
  // Corrects s(-x) to -s(x) before the strict witness applies.
  const auto w = st.make_arrow(
      sneg, st.negate(sx),
      deterministic_preimage(elem_sub(elem_neg(sx.payload), sneg.payload)));
  auto route = st.inverse(comparison(*this, st, x.payload, neg.payload));
  route = st.compose(st.add(st.identity(sx), w), route);
  route = st.compose(st.inv_witness(sx), route);
  return PArrow{src, e, pi1_coords(route.payload)};
}

GroupElement PicardGroupoid::sample_group_element(Rng& rng, const FgAbelianGroup& g) const {
  IntVec coords(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const auto& d = g.factors()[i];
    coords[i] = d == 0 ? zlin::Int(rng.range(-4, 4))
                       : zlin::Int(rng.below(d.convert_to<std::uint64_t>()));
  }
  return canonicalize(g, std::move(coords));
}

PObject PicardGroupoid::sample_object(Rng& rng) const {
  return PObject{kind_, sample_group_element(rng, object_group())};
}

PArrow PicardGroupoid::sample_arrow_from(Rng& rng, const PObject& x) const {
  if (kind_ == ModelKind::Skeletal)
    return PArrow{x, x, sample_group_element(rng, homology_.pi1)};
  const auto a = sample_group_element(rng, complex_.a);
  const auto dst = make_object(elem_add(x.payload, complex_.d.apply(a)));
  return PArrow{x, dst, a};
}

PArrow derive_left_unitor(const Model& p, const PObject& x) {
  const auto e = p->neutral();
  const auto a =
      p->compose(p->add(p->phi(), p->identity(x)), p->inverse(p->assoc(e, e, x)));
  return p->make_arrow(p->add(e, x), x, a.payload);
}

AdditiveFunctor identity_functor(const Model& p) {
  AdditiveFunctor f;
  f.source = f.target = p;
  f.obj = [](const PObject& x) { return x; };
  f.arr = [](const PArrow& a) { return a; };
  f.sigma = [p](const PObject& x, const PObject& y) { return p->identity(p->add(x, y)); };
  return f;
}

AdditiveFunctor compose_functors(const AdditiveFunctor& g, const AdditiveFunctor& f) {
  AdditiveFunctor h;
  h.source = f.source;
  h.target = g.target;
  h.obj = [g, f](const PObject& x) { return g.obj(f.obj(x)); };
  h.arr = [g, f](const PArrow& a) { return g.arr(f.arr(a)); };
  h.sigma = [g, f](const PObject& x, const PObject& y) {
    return g.target->compose(g.sigma(f.obj(x), f.obj(y)), g.arr(f.sigma(x, y)));
  };
  return h;
}

namespace {

AdditiveFunctor strict_core(const complexes::ComplexMorphism& m, const Model& src,
                            const Model& tgt) {
  AdditiveFunctor f;
  f.source = src;
  f.target = tgt;
  const auto fa = m.fa, fb = m.fb;
  f.obj = [tgt, fb](const PObject& x) { return tgt->make_object(fb.apply(x.payload)); };
  f.arr = [tgt, fa, fb](const PArrow& a) {
    return tgt->make_arrow(tgt->make_object(fb.apply(a.src.payload)),
                           tgt->make_object(fb.apply(a.dst.payload)), fa.apply(a.payload));
  };
  f.sigma = [tgt, fb](const PObject& x, const PObject& y) {
    return tgt->identity(tgt->make_object(fb.apply(elem_add(x.payload, y.payload))));
  };
  return f;
}

AdditiveFunctor section_functor(const Model& skel) {
  AdditiveFunctor f;
  f.source = skel;
  f.target = skel->strict_companion();
  const auto st = f.target;
  f.obj = [skel, st](const PObject& x) {
    return st->make_object(skel->section_of(x.payload));
  };
  f.arr = [skel, st, f_obj = f.obj](const PArrow& a) {
    const auto o = f_obj(a.src);
    return st->make_arrow(o, o, skel->pi1_include(a.payload));
  };
  f.sigma = [skel, st](const PObject& x, const PObject& y) {
    const auto g = skel->transport_payload(x.payload, y.payload);
    const auto src = st->make_object(skel->section_of(elem_add(x.payload, y.payload)));
    const auto dst = st->make_object(
        elem_add(skel->section_of(x.payload), skel->section_of(y.payload)));
    return st->make_arrow(src, dst, g);
  };
  return f;
}

AdditiveFunctor projection_functor(const Model& skel) {
  AdditiveFunctor f;
  f.source = skel->strict_companion();
  f.target = skel;
  const auto st = f.source;
  // k(b): deterministic strict arrow s(p(b)) -> b.
  auto correction = [skel, st](const PObject& b) {
    const auto s = skel->section_of(skel->class_of(b.payload));
    const auto pre = zlin::preimage(st->complex().d, elem_sub(b.payload, s));
    return canonicalize(st->complex().a, *pre);
  };
  f.obj = [skel](const PObject& b) {
    return skel->make_object(skel->class_of(b.payload));
  };
  f.arr = [skel, correction, f_obj = f.obj](const PArrow& a) {
    const auto x = f_obj(a.src);
    auto payload = elem_add(correction(a.src), a.payload);
    payload = elem_sub(payload, correction(a.dst));
    return PArrow{x, x, skel->pi1_coords(payload)};
  };
  f.sigma = [skel, correction, f_obj = f.obj](const PObject& b, const PObject& c) {
    const auto pb = skel->class_of(b.payload), pc = skel->class_of(c.payload);
    const auto bc = PObject{b.kind, elem_add(b.payload, c.payload)};
    auto payload = elem_sub(correction(bc), elem_add(correction(b), correction(c)));
    payload = elem_sub(payload, skel->transport_payload(pb, pc));
    const auto x = f_obj(bc);
    return PArrow{x, x, skel->pi1_coords(payload)};
  };
  return f;
}

}  // namespace

AdditiveFunctor functor_from_complex_morphism(const complexes::ComplexMorphism& m,
                                              const Model& source, const Model& target) {
  if (!(source->complex() == m.source) || !(target->complex() == m.target))
    throw std::invalid_argument("models are not built over the morphism's complexes");
  const Model src_strict = source->kind() == ModelKind::Strict ? source
                                                               : source->strict_companion();
  const Model tgt_strict = target->kind() == ModelKind::Strict ? target
                                                               : target->strict_companion();
  AdditiveFunctor f = strict_core(m, src_strict, tgt_strict);
  if (source->kind() == ModelKind::Skeletal)
    f = compose_functors(f, section_functor(source));
  if (target->kind() == ModelKind::Skeletal)
    f = compose_functors(projection_functor(target), f);
  return f;
}

AdditiveTransformation identity_transformation(const AdditiveFunctor& f) {
  AdditiveTransformation u;
  u.source = u.target = f;
  u.component = [f](const PObject& x) { return f.target->identity(f.obj(x)); };
  return u;
}

AdditiveTransformation transformation_from_hom(const AdditiveFunctor& f,
                                               const zlin::GroupHom& k) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  if (k.source != src->homology().pi0 || k.target != tgt->homology().pi1)
    throw zlin::GroupMismatchError("component hom must map pi0(source) to pi1(target)");
  AdditiveTransformation u;
  u.source = u.target = f;
  u.component = [f, k, src, tgt](const PObject& x) {
    const auto cls = src->kind() == ModelKind::Skeletal ? x.payload
                                                        : src->class_of(x.payload);
    const auto v = k.apply(cls);
    const auto fx = f.obj(x);
    if (tgt->kind() == ModelKind::Skeletal) return PArrow{fx, fx, v};
    return tgt->make_arrow(fx, fx, tgt->pi1_include(v));
  };
  return u;
}

PArrow neg_zero_witness(const Model& p) {
  const auto e = p->neutral();
  return p->compose(p->inv_witness(e), p->inverse(p->unit_left(p->negate(e))));
}

PArrow neg_neg_witness(const Model& p, const PObject& x) {
  const auto neg = p->negate(x);
  const auto q = p->compose(p->inv_witness(x), p->comm(neg, x));
  const auto lifted = p->compose(p->inverse(q), p->inv_witness(neg));
  return p->make_arrow(p->negate(neg), x, lifted.payload);
}

PArrow middle_four(const Model& p, const PObject& a, const PObject& b, const PObject& c,
                   const PObject& d) {
  auto route = p->assoc(a, b, p->add(c, d));
  route = p->compose(p->add(p->identity(a), p->inverse(p->assoc(b, c, d))), route);
  route = p->compose(p->add(p->identity(a), p->add(p->comm(b, c), p->identity(d))), route);
  route = p->compose(p->add(p->identity(a), p->assoc(c, b, d)), route);
  route = p->compose(p->inverse(p->assoc(a, c, p->add(b, d))), route);
  return route;
}

PArrow neg_distrib_witness(const Model& p, const PObject& x, const PObject& y) {
  const auto nx = p->negate(x), ny = p->negate(y);
  const auto xy = p->add(x, y);
  auto r = middle_four(p, x, y, nx, ny);
  r = p->compose(p->add(p->inv_witness(x), p->inv_witness(y)), r);
  r = p->compose(p->phi(), r);
  const auto lifted = p->compose(p->inverse(r), p->inv_witness(xy));
  return p->make_arrow(p->negate(xy), p->add(nx, ny), lifted.payload);
}

PArrow functor_unit(const AdditiveFunctor& f) {
  const auto e1 = f.source->neutral();
  const auto e2 = f.target->neutral();
  const auto c = f.target->compose(f.arr(f.source->phi()), f.target->inverse(f.sigma(e1, e1)));
  const auto r = f.target->unit_right(f.obj(e1));
  return f.target->make_arrow(f.obj(e1), e2,
                              elem_sub(c.payload, r.payload));
}

PArrow functor_neg(const AdditiveFunctor& f, const PObject& x) {
  const auto tgt = f.target;
  const auto fx = f.obj(x);
  const auto nx = f.source->negate(x);
  auto route = tgt->inverse(f.sigma(x, nx));
  route = tgt->compose(f.arr(f.source->inv_witness(x)), route);
  route = tgt->compose(functor_unit(f), route);
  route = tgt->compose(tgt->inverse(tgt->inv_witness(fx)), route);
  // route = id_{F(x)} + mu as an arrow F(x)+F(-x) -> F(x)+(-F(x)).
  return tgt->make_arrow(f.obj(nx), tgt->negate(fx), route.payload);
}

namespace {

using Checker = detail::Checker;

}  // namespace

std::vector<CheckRecord> check_picard_axioms(const Model& p, int budget, std::uint64_t seed) {
  Checker ck;
  const auto e = p->neutral();

  ck.run("strictness-cxx", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const bool ok = p->comm(x, x) == p->identity(p->add(x, x));
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("symmetry", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const bool ok =
        p->compose(p->comm(y, x), p->comm(x, y)) == p->identity(p->add(x, y));
    if (!ok) ce = pair_str(x, y);
    return ok;
  });

  ck.run("pentagon", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto w = p->sample_object(rng), x = p->sample_object(rng);
    const auto y = p->sample_object(rng), z = p->sample_object(rng);
    const auto lhs = p->compose(p->assoc(w, x, p->add(y, z)), p->assoc(p->add(w, x), y, z));
    auto rhs = p->compose(p->assoc(w, p->add(x, y), z),
                          p->add(p->assoc(w, x, y), p->identity(z)));
    rhs = p->compose(p->add(p->identity(w), p->assoc(x, y, z)), rhs);
    const bool ok = lhs == rhs;
    if (!ok) ce = w.payload.str() + "," + x.payload.str() + "," + pair_str(y, z);
    return ok;
  });

  ck.run("hexagon", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng), z = p->sample_object(rng);
    auto lhs = p->compose(p->comm(x, p->add(y, z)), p->assoc(x, y, z));
    lhs = p->compose(p->assoc(y, z, x), lhs);
    auto rhs = p->compose(p->assoc(y, x, z), p->add(p->comm(x, y), p->identity(z)));
    rhs = p->compose(p->add(p->identity(y), p->comm(x, z)), rhs);
    const bool ok = lhs == rhs;
    if (!ok) ce = x.payload.str() + "," + pair_str(y, z);
    return ok;
  });

  ck.run("unit-square", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const auto lhs =
        p->compose(p->add(p->identity(e), p->unit_left(x)), p->assoc(e, e, x));
    const auto rhs = p->add(p->phi(), p->identity(x));
    const bool ok = lhs == rhs;
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("unit-triangle", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const auto lhs = p->compose(p->add(p->identity(x), p->unit_left(y)), p->assoc(x, e, y));
    const auto rhs = p->add(p->unit_right(x), p->identity(y));
    const bool ok = lhs == rhs;
    if (!ok) ce = pair_str(x, y);
    return ok;
  });

  ck.run("unit-phi", 1, seed, [&](Rng&, std::string& ce) {
    const bool ok = p->phi() == p->unit_left(e) && p->phi() == p->unit_right(e);
    if (!ok) ce = "phi=" + p->phi().payload.str();
    return ok;
  });

  ck.run("comm-exchanges-units", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const bool ok = p->compose(p->unit_left(x), p->comm(x, e)) == p->unit_right(x);
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("unitor-derivation", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const bool ok = derive_left_unitor(p, x) == p->unit_left(x);
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("inverse-snake", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const auto nx = p->negate(x);
    const auto q = p->compose(p->inv_witness(x), p->comm(nx, x));
    auto route = p->inverse(p->unit_left(x));
    route = p->compose(p->add(p->inverse(p->inv_witness(x)), p->identity(x)), route);
    route = p->compose(p->assoc(x, nx, x), route);
    route = p->compose(p->add(p->identity(x), q), route);
    route = p->compose(p->unit_right(x), route);
    const bool ok = route == p->identity(x);
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("iota-naturality", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng);
    const auto f = p->sample_arrow_from(rng, x);
    const auto lhs = p->compose(p->inv_witness(f.dst), p->add(f, p->negate_arrow(f)));
    const bool ok = lhs == p->inv_witness(x);
    if (!ok) ce = x.payload.str() + ";" + f.payload.str();
    return ok;
  });

  ck.run("naturality-assoc", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto f = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto g = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto h = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto lhs = p->compose(p->assoc(f.dst, g.dst, h.dst), p->add(p->add(f, g), h));
    const auto rhs = p->compose(p->add(f, p->add(g, h)), p->assoc(f.src, g.src, h.src));
    const bool ok = lhs == rhs;
    if (!ok) ce = f.payload.str() + "," + g.payload.str() + "," + h.payload.str();
    return ok;
  });

  ck.run("naturality-comm", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto f = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto g = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto lhs = p->compose(p->comm(f.dst, g.dst), p->add(f, g));
    const auto rhs = p->compose(p->add(g, f), p->comm(f.src, g.src));
    const bool ok = lhs == rhs;
    if (!ok) ce = f.payload.str() + "," + g.payload.str();
    return ok;
  });

  ck.run("naturality-unitors", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto f = p->sample_arrow_from(rng, p->sample_object(rng));
    const bool left =
        p->compose(p->unit_left(f.dst), p->add(p->identity(e), f)) ==
        p->compose(f, p->unit_left(f.src));
    const bool right =
        p->compose(p->unit_right(f.dst), p->add(f, p->identity(e))) ==
        p->compose(f, p->unit_right(f.src));
    if (!left || !right) ce = f.payload.str();
    return left && right;
  });

  ck.run("bifunctor-identity", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng);
    const bool ok = p->add(p->identity(x), p->identity(y)) == p->identity(p->add(x, y));
    if (!ok) ce = pair_str(x, y);
    return ok;
  });

  ck.run("bifunctor-interchange", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto f = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto fp = p->sample_arrow_from(rng, f.dst);
    const auto g = p->sample_arrow_from(rng, p->sample_object(rng));
    const auto gp = p->sample_arrow_from(rng, g.dst);
    const bool ok = p->add(p->compose(fp, f), p->compose(gp, g)) ==
                    p->compose(p->add(fp, gp), p->add(f, g));
    if (!ok) ce = f.payload.str() + "," + g.payload.str();
    return ok;
  });

  return ck.report.records;
}

std::vector<CheckRecord> check_additive_functor(const AdditiveFunctor& f, int budget,
                                                std::uint64_t seed) {
  Checker ck;
  const auto& src = f.source;
  const auto& tgt = f.target;

  ck.run("functor-identity", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = src->sample_object(rng);
    const bool ok = f.arr(src->identity(x)) == tgt->identity(f.obj(x));
    if (!ok) ce = x.payload.str();
    return ok;
  });

  ck.run("functor-compose", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto a = src->sample_arrow_from(rng, src->sample_object(rng));
    const auto b = src->sample_arrow_from(rng, a.dst);
    const bool ok = f.arr(src->compose(b, a)) == tgt->compose(f.arr(b), f.arr(a));
    if (!ok) ce = a.payload.str() + "," + b.payload.str();
    return ok;
  });

  ck.run("sigma-naturality", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto a = src->sample_arrow_from(rng, src->sample_object(rng));
    const auto b = src->sample_arrow_from(rng, src->sample_object(rng));
    const auto lhs = tgt->compose(f.sigma(a.dst, b.dst), f.arr(src->add(a, b)));
    const auto rhs = tgt->compose(tgt->add(f.arr(a), f.arr(b)), f.sigma(a.src, b.src));
    const bool ok = lhs == rhs;
    if (!ok) ce = a.payload.str() + "," + b.payload.str();
    return ok;
  });

  ck.run("sigma-assoc-compat", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = src->sample_object(rng), y = src->sample_object(rng),
               z = src->sample_object(rng);
    auto lhs = tgt->compose(tgt->add(f.sigma(x, y), tgt->identity(f.obj(z))),
                            f.sigma(src->add(x, y), z));
    lhs = tgt->compose(tgt->assoc(f.obj(x), f.obj(y), f.obj(z)), lhs);
    auto rhs = tgt->compose(f.sigma(x, src->add(y, z)), f.arr(src->assoc(x, y, z)));
    rhs = tgt->compose(tgt->add(tgt->identity(f.obj(x)), f.sigma(y, z)), rhs);
    const bool ok = lhs == rhs;
    if (!ok) ce = x.payload.str() + "," + pair_str(y, z);
    return ok;
  });

  ck.run("sigma-comm-compat", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = src->sample_object(rng), y = src->sample_object(rng);
    const auto lhs = tgt->compose(f.sigma(y, x), f.arr(src->comm(x, y)));
    const auto rhs = tgt->compose(tgt->comm(f.obj(x), f.obj(y)), f.sigma(x, y));
    const bool ok = lhs == rhs;
    if (!ok) ce = pair_str(x, y);
    return ok;
  });

  return ck.report.records;
}

std::vector<CheckRecord> check_additive_transformation(const AdditiveTransformation& u,
                                                       int budget, std::uint64_t seed) {
  Checker ck;
  const auto& src = u.source.source;
  const auto& tgt = u.source.target;

  ck.run("transformation-naturality", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto a = src->sample_arrow_from(rng, src->sample_object(rng));
    const auto lhs = tgt->compose(u.component(a.dst), u.source.arr(a));
    const auto rhs = tgt->compose(u.target.arr(a), u.component(a.src));
    const bool ok = lhs == rhs;
    if (!ok) ce = a.payload.str();
    return ok;
  });

  ck.run("transformation-sigma-compat", budget, seed, [&](Rng& rng, std::string& ce) {
    const auto x = src->sample_object(rng), y = src->sample_object(rng);
    const auto lhs = tgt->compose(u.target.sigma(x, y), u.component(src->add(x, y)));
    const auto rhs =
        tgt->compose(tgt->add(u.component(x), u.component(y)), u.source.sigma(x, y));
    const bool ok = lhs == rhs;
    if (!ok) ce = pair_str(x, y);
    return ok;
  });

  return ck.report.records;
}

}  // namespace picardlab::picard
