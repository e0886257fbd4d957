#include "picardlab/corpus.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>

namespace picardlab::corpus {

using zlin::canonicalize;
using zlin::GroupElement;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

namespace {

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

GroupElement random_element(const FgAbelianGroup& g, Rng& rng) {
  IntVec coords;
  for (const auto& f : g.factors()) {
    if (f == 0)
      coords.emplace_back(rng.range(-4, 4));
    else
      coords.emplace_back(rng.range(0, static_cast<long long>(f) - 1));
  }
  return canonicalize(g, std::move(coords));
}

}  // namespace

FgAbelianGroup random_group(Rng& rng) {
  static const long long pool[] = {2, 3, 4, 6, 8};
  const int rank = static_cast<int>(rng.below(4));  // 0..3 factors
  IntVec torsion;
  int free_rank = 0;
  for (int i = 0; i < rank; ++i) {
    if (rng.chance(2, 5)) {
      ++free_rank;
      continue;
    }
    // Each torsion factor must divide the next, so draw from the pool
    // elements the previous factor divides.
    std::vector<long long> allowed;
    for (long long p : pool)
      if (torsion.empty() || Int(p) % torsion.back() == 0) allowed.push_back(p);
    if (allowed.empty()) {
      ++free_rank;
      continue;
    }
    torsion.emplace_back(allowed[rng.below(allowed.size())]);
  }
  IntVec factors = std::move(torsion);
  for (int i = 0; i < free_rank; ++i) factors.emplace_back(0);
  return FgAbelianGroup(std::move(factors));
}

GroupHom random_hom(const FgAbelianGroup& source, const FgAbelianGroup& target, Rng& rng) {
  IntMatrix m(target.size(), source.size());
  for (int j = 0; j < source.size(); ++j) {
    const Int& mj = source.factors()[static_cast<std::size_t>(j)];
    for (int i = 0; i < target.size(); ++i) {
      const Int& ni = target.factors()[static_cast<std::size_t>(i)];
      if (mj == 0) {
        m.at(i, j) = Int(rng.range(-5, 5));
      } else if (ni == 0) {
        // mj * x = 0 in Z forces x = 0.
        m.at(i, j) = 0;
      } else {
        // Need mj * x = 0 mod ni, i.e. x a multiple of ni / gcd(ni, mj).
        const Int g = gcd(ni, mj);
        const Int step = ni / g;
        m.at(i, j) = step * Int(rng.range(0, static_cast<long long>(g) - 1));
      }
    }
  }
  return zlin::make_hom(source, target, std::move(m));
}

TwoTermComplex random_complex(Rng& rng) {
  const auto a = random_group(rng);
  const auto b = random_group(rng);
  return complexes::make_complex(a, b, random_hom(a, b, rng).matrix);
}

SkeletalConfig random_cochain(const TwoTermComplex& c, Rng& rng, bool normalized) {
  const auto h = complexes::homology(c);
  SkeletalConfig cfg;
  if (h.pi1.is_trivial()) return cfg;  // only the zero cochain exists
  const int entries = 1 + static_cast<int>(rng.below(4));
  auto push = [&cfg](const GroupElement& x, const GroupElement& y, const GroupElement& v) {
    for (auto& e : cfg.cochain)
      if (e.first.first == x.coords && e.first.second == y.coords) {
        e.second = v.coords;
        return;
      }
    cfg.cochain.push_back({{x.coords, y.coords}, v.coords});
  };
  for (int i = 0; i < entries; ++i) {
    auto x = random_element(h.pi0, rng);
    auto y = random_element(h.pi0, rng);
    if (normalized && (x == zlin::zero_element(h.pi0) || y == zlin::zero_element(h.pi0)))
      continue;
    push(x, y, random_element(h.pi1, rng));
  }
  if (!normalized && !h.pi0.is_trivial()) {
    // Force a non-normalized entry g(0, y) when one can be nonzero.
    auto v = random_element(h.pi1, rng);
    if (v == zlin::zero_element(h.pi1))
      v = canonicalize(h.pi1, [&] {
        IntVec one(static_cast<std::size_t>(h.pi1.size()), Int(0));
        one[0] = 1;
        return one;
      }());
    push(zlin::zero_element(h.pi0), random_element(h.pi0, rng), v);
  }
  return cfg;
}

std::vector<SkeletalConfig> cochain_family(const TwoTermComplex& c, Rng& rng) {
  std::vector<SkeletalConfig> out;
  out.push_back({});  // the zero cochain
  out.push_back(random_cochain(c, rng, true));
  out.push_back(random_cochain(c, rng, false));
  return out;
}

ComplexMorphism random_endomorphism(const TwoTermComplex& c, Rng& rng) {
  const long long n = rng.range(-3, 3);
  const auto k = random_hom(c.b, c.a, rng);
  auto scaled = [n](const FgAbelianGroup& g) {
    IntMatrix m = IntMatrix::identity(g.size());
    for (int i = 0; i < g.size(); ++i) m.at(i, i) = n;
    return m;
  };
  // fa = n*id + k.d and fb = n*id + d.k satisfy fb.d = n*d + d.k.d = d.fa.
  const auto fa = zlin::make_hom(c.a, c.a, scaled(c.a) + k.matrix * c.d.matrix);
  const auto fb = zlin::make_hom(c.b, c.b, scaled(c.b) + c.d.matrix * k.matrix);
  return complexes::make_complex_morphism(c, c, fa, fb);
}

}  // namespace picardlab::corpus
