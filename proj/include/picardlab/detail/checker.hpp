#pragma once

#include <cstdint>
#include <string>

#include "picardlab/report.hpp"
#include "picardlab/rng.hpp"

namespace picardlab::detail {

// FNV-1a, so per-check seeds do not depend on the std::hash implementation.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

// Runs one named property over `budget` samples, capturing the first
// counterexample; exceptions become Error records.
struct Checker {
  Report report;

  template <typename Fn>
  void run(const std::string& name, int budget, std::uint64_t seed, Fn body) {
    CheckRecord rec{name, CheckStatus::Pass, ""};
    try {
      Rng rng(seed ^ stable_hash(name));
      for (int i = 0; i < budget; ++i) {
        std::string ce;
        if (!body(rng, ce)) {
          rec.status = CheckStatus::Fail;
          rec.counterexample = ce;
          break;
        }
      }
    } catch (const std::exception& ex) {
      rec.status = CheckStatus::Error;
      rec.counterexample = ex.what();
    }
    report.add(std::move(rec));
  }
};

}  // namespace picardlab::detail
