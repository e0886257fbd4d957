#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "picardlab/complexes.hpp"
#include "picardlab/picard.hpp"
#include "picardlab/report.hpp"

namespace picardlab::model_io {

// Schema or syntax problem in a model file; the message carries a field path
// (and the parser's line info for syntax errors).
struct ModelParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFile {
  complexes::TwoTermComplex complex;
  std::optional<picard::SkeletalConfig> skeletal;
  std::optional<std::uint64_t> seed;
};

// JSON schema: {"A": [..], "B": [..], "d": [[..],..],
//               "skeletal": {"section": "auto" | [[[pi0],[B]],..],
//                            "g": [[[x],[y],[value]],..]}?, "seed": u64?}
ModelFile parse_model_file(const std::string& text);
ModelFile load_model_file(const std::string& path);

// Matrix literal: rows ';'-separated, entries ','-separated, e.g. "1,0;0,1".
zlin::IntMatrix parse_matrix_literal(const std::string& s);
// Object tuple literal: objects ';'-separated, coordinates ','-separated.
std::vector<zlin::IntVec> parse_objects_literal(const std::string& s);

// One JSON object per record, stable key order {check, status, counterexample?}.
// Timing is intentionally not serialized so reports stay byte-identical.
std::string report_to_jsonl(const Report& report);

}  // namespace picardlab::model_io
