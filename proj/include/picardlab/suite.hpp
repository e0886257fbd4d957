#pragma once

#include <cstdint>

#include "picardlab/model_io.hpp"
#include "picardlab/report.hpp"

namespace picardlab::suite {

// Full verification suite for one model file: Picard axioms on the strict
// model (and the skeletal model when configured), hat/compositor suites,
// reconstruction, confluence and functor round trips. `corrupt_comm` is a
// test-build mutation hook: it corrupts the commutativity constraint fed to
// the skeletal hexagon check so the failure path stays exercised.
Report run_model_checks(const model_io::ModelFile& mf, int cases, std::uint64_t seed,
                        bool corrupt_comm = false);

// Seeded fuzzing over random complexes, cochains, morphisms and expressions.
// Records are sorted by check name then case index, so the serialized report
// is byte-identical for fixed (seed, cases).
Report run_fuzz(int cases, std::uint64_t seed);

}  // namespace picardlab::suite
