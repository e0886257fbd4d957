#include "picardlab/suite.hpp"

#include <algorithm>
#include <sstream>

#include "picardlab/algebra.hpp"
#include "picardlab/corpus.hpp"
#include "picardlab/detail/checker.hpp"
#include "picardlab/picard.hpp"

namespace picardlab::suite {

using detail::stable_hash;
using picard::Model;
using picard::PicardGroupoid;
using zlin::elem_add;
using zlin::Int;
using zlin::IntVec;

namespace {

void extend_prefixed(Report& report, const std::string& prefix,
                     const std::vector<CheckRecord>& records) {
  for (auto r : records) {
    r.name = prefix + r.name;
    report.add(std::move(r));
  }
}

// Per-model slice of cmd_check: axioms, hat structure, reconstruction,
// confluence, then round trips for a few corpus endomorphisms.
void model_suite(Report& report, const std::string& prefix, const Model& p, int cases,
                 std::uint64_t seed) {
  const auto sd = [&](const char* tag) { return seed ^ stable_hash(prefix + tag); };
  extend_prefixed(report, prefix, picard::check_picard_axioms(p, cases, sd("axioms")));
  extend_prefixed(report, prefix, algebra::check_hat_structure(p, cases, sd("hat")));
  extend_prefixed(report, prefix, algebra::check_reconstruction(p, cases, sd("rec")));
  extend_prefixed(report, prefix, algebra::check_confluence(p, cases, sd("confl")));
  Rng rng(sd("functors"));
  const int functor_count = cases == 0 ? 0 : 2;
  for (int i = 0; i < functor_count; ++i) {
    const std::string fp = prefix + "functor-" + std::to_string(i) + "/";
    const auto m = corpus::random_endomorphism(p->complex(), rng);
    const auto f = picard::functor_from_complex_morphism(m, p, p);
    extend_prefixed(report, fp, picard::check_additive_functor(f, cases, sd("fun")));
    extend_prefixed(report, fp, algebra::check_hat_functor(f, cases, sd("hatfun")));
    report.add({fp + "round-trip-hom",
                algebra::round_trip_hom(f, cases, sd("rt")) ? CheckStatus::Pass
                                                            : CheckStatus::Fail,
                ""});
  }
}

// Hexagon with a deliberately corrupted commutativity constraint (a fixed
// nonzero pi1 offset on every comm arrow between distinct objects). Used only
// behind the test-build flag; a correct implementation must fail here.
CheckRecord corrupted_hexagon(const Model& p, int cases, std::uint64_t seed) {
  detail::Checker ck;
  const auto& pi1 = p->arrow_group();
  auto offset = zlin::zero_element(pi1);
  if (!pi1.is_trivial()) offset.coords[0] = 1;
  auto bad_comm = [&](const picard::PObject& x, const picard::PObject& y) {
    auto c = p->comm(x, y);
    if (!(x == y)) c.payload = elem_add(c.payload, offset);
    return c;
  };
  ck.run("hexagon", std::max(cases, 16), seed, [&](Rng& rng, std::string& ce) {
    const auto x = p->sample_object(rng), y = p->sample_object(rng),
               z = p->sample_object(rng);
    auto lhs = p->compose(bad_comm(x, p->add(y, z)), p->assoc(x, y, z));
    lhs = p->compose(p->assoc(y, z, x), lhs);
    auto rhs = p->compose(p->assoc(y, x, z), p->add(bad_comm(x, y), p->identity(z)));
    rhs = p->compose(p->add(p->identity(y), bad_comm(x, z)), rhs);
    const bool ok = lhs == rhs;
    if (!ok)
      ce = x.payload.str() + "," + y.payload.str() + "," + z.payload.str();
    return ok;
  });
  return ck.report.records[0];
}

}  // namespace

Report run_model_checks(const model_io::ModelFile& mf, int cases, std::uint64_t seed,
                        bool corrupt_comm) {
  Report report;
  const auto strict = PicardGroupoid::strict_model(mf.complex);
  model_suite(report, "strict/", strict, cases, seed);

  if (mf.skeletal) {
    const auto skel = PicardGroupoid::skeletal_model(mf.complex, *mf.skeletal);
    model_suite(report, "skeletal/", skel, cases, seed);
    // Mixed-kind round trip: the section/projection functors between the
    // skeletal model and its strict companion compose to the identity on pi0.
    const auto sect = picard::functor_from_complex_morphism(
        complexes::identity_morphism(mf.complex), skel, strict);
    const auto proj = picard::functor_from_complex_morphism(
        complexes::identity_morphism(mf.complex), strict, skel);
    extend_prefixed(report, "mixed/section/",
                    picard::check_additive_functor(sect, cases, seed ^ stable_hash("sect")));
    extend_prefixed(report, "mixed/projection/",
                    picard::check_additive_functor(proj, cases, seed ^ stable_hash("proj")));
    if (corrupt_comm) {
      // Replace the genuine skeletal hexagon record by the corrupted run.
      auto rec = corrupted_hexagon(skel, cases, seed ^ stable_hash("corrupt"));
      rec.name = "skeletal/" + rec.name;
      for (auto& r : report.records)
        if (r.name == rec.name) r = rec;
    }
  } else if (corrupt_comm) {
    report.add({"skeletal/hexagon", CheckStatus::Error,
                "--corrupt-comm requires a skeletal block in the model file"});
  }

  if (mf.complex.a.is_trivial() && mf.complex.b.is_trivial())
    report.extend(algebra::check_trivial_stack(4));
  return report;
}

Report run_fuzz(int cases, std::uint64_t seed) {
  Report report;
  for (int i = 0; i < cases; ++i) {
    std::ostringstream idx;
    idx << (i < 1000 ? (i < 100 ? (i < 10 ? "000" : "00") : "0") : "") << i;
    const std::string tag = "#" + idx.str();
    const std::string replay = "; replay: picardlab fuzz --seed " + std::to_string(seed) +
                               " --cases " + std::to_string(i + 1);
    Rng rng(seed ^ stable_hash("fuzz-case-" + idx.str()));
    const auto c = corpus::random_complex(rng);
    // Record the sampled input so reports document which cases a seed drew.
    report.add({"case-input" + tag + " A=" + c.a.str() + " B=" + c.b.str() +
                    " d=" + c.d.matrix.str(),
                CheckStatus::Pass, ""});
    std::vector<CheckRecord> recs;
    const std::uint64_t sub = rng.next();
    switch (i % 4) {
      case 0:
        recs = picard::check_picard_axioms(PicardGroupoid::strict_model(c), 3, sub);
        break;
      case 1:
        recs = picard::check_picard_axioms(
            PicardGroupoid::skeletal_model(c, corpus::random_cochain(c, rng, i % 8 == 1)),
            3, sub);
        break;
      case 2: {
        const auto p = PicardGroupoid::skeletal_model(c, corpus::random_cochain(c, rng, false));
        const auto f = picard::functor_from_complex_morphism(
            corpus::random_endomorphism(c, rng), p, p);
        recs = picard::check_additive_functor(f, 3, sub);
        const auto more = algebra::check_hat_functor(f, 3, sub);
        recs.insert(recs.end(), more.begin(), more.end());
        recs.push_back({"round-trip-hom",
                        algebra::round_trip_hom(f, 5, sub) ? CheckStatus::Pass
                                                           : CheckStatus::Fail,
                        ""});
        break;
      }
      default: {
        const auto p = PicardGroupoid::skeletal_model(c, corpus::random_cochain(c, rng, true));
        recs = algebra::check_confluence(p, 5, sub);
        const auto more = algebra::check_reconstruction(p, 3, sub);
        recs.insert(recs.end(), more.begin(), more.end());
        break;
      }
    }
    for (auto r : recs) {
      r.name += tag;
      if (r.status != CheckStatus::Pass) r.counterexample += replay;
      report.add(std::move(r));
    }
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

}  // namespace picardlab::suite
