#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "picardlab/algebra.hpp"
#include "picardlab/model_io.hpp"
#include "picardlab/suite.hpp"
#include "picardlab/theory.hpp"

namespace {

using namespace picardlab;

int default_cases() {
  if (const char* env = std::getenv("PICARDLAB_CASES")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      // fall through to the built-in default on a malformed override
    }
  }
  return 12;
}

int cmd_check(const std::string& path, std::uint64_t seed, bool seed_given, int cases,
              bool corrupt_comm) {
  const auto mf = model_io::load_model_file(path);
  if (!seed_given && mf.seed) seed = *mf.seed;
  const auto report = suite::run_model_checks(mf, cases, seed, corrupt_comm);
  std::cout << model_io::report_to_jsonl(report);
  if (report.all_pass()) return 0;
  std::cerr << "replay: picardlab check " << path << " --seed " << seed << " --cases "
            << cases << (corrupt_comm ? " --corrupt-comm" : "") << "\n";
  return 1;
}

int cmd_apply(const std::string& path, const std::string& matrix,
              const std::string& objects) {
  const auto mf = model_io::load_model_file(path);
  const auto p = mf.skeletal ? picard::PicardGroupoid::skeletal_model(mf.complex, *mf.skeletal)
                             : picard::PicardGroupoid::strict_model(mf.complex);
  const auto cell = theory::make_cell(model_io::parse_matrix_literal(matrix));
  algebra::ObjTuple tuple;
  for (auto& coords : model_io::parse_objects_literal(objects))
    tuple.push_back(p->object_from_coords(std::move(coords)));
  const auto out = algebra::apply_matrix_objects(cell, tuple, p);
  std::string text;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) text += ";";
    const auto& coords = out[i].payload.coords;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (k) text += ",";
      text += coords[k].str();
    }
  }
  std::cout << text << "\n";
  return 0;
}

int cmd_fuzz(std::uint64_t seed, int cases) {
  const auto report = suite::run_fuzz(cases, seed);
  std::cout << model_io::report_to_jsonl(report);
  if (report.all_pass()) return 0;
  std::cerr << "replay: picardlab fuzz --seed " << seed << " --cases " << cases << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard groupoid laboratory: check, apply and fuzz two-term complex models"};
  app.require_subcommand(1);

  std::string model_path, matrix, objects;
  std::uint64_t seed = 0;
  int cases = default_cases();
  bool corrupt_comm = false;

  auto* check = app.add_subcommand("check", "run the full verification suite on a model file");
  check->add_option("model", model_path, "JSON model file")->required();
  auto* check_seed = check->add_option("--seed", seed, "RNG seed (overrides the file's seed)");
  check->add_option("--cases", cases, "case budget per check");
  check->add_flag("--corrupt-comm", corrupt_comm,
                  "test build: corrupt the commutativity constraint fed to the hexagon check")
      ->group("");  // hidden

  auto* apply = app.add_subcommand("apply", "apply an integer matrix to a tuple of objects");
  apply->add_option("model", model_path, "JSON model file")->required();
  apply->add_option("--matrix", matrix, "rows ';'-separated, entries ','-separated")
      ->required();
  apply->add_option("--objects", objects, "objects ';'-separated, coordinates ','-separated")
      ->required();

  auto* fuzz = app.add_subcommand("fuzz", "run the seeded random-model suite");
  fuzz->add_option("--seed", seed, "RNG seed");
  fuzz->add_option("--cases", cases, "number of fuzz cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return cmd_check(model_path, seed, check_seed->count() > 0, cases, corrupt_comm);
    if (apply->parsed()) return cmd_apply(model_path, matrix, objects);
    return cmd_fuzz(seed, cases);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
