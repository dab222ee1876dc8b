#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fracspec/metrics.hpp"
#include "fracspec/pipeline.hpp"

namespace fracspec {

/// A PDE read from a JSON problem file (schema in docs/problem-format.md).
/// All functions are already in solver coordinates [0, L].
struct LoadedProblem {
  PdeProblem problem;
  PdeSolveOptions options;
  /// Present when the file carries an "exact" block.
  std::optional<ExactField> exact;
  DomainShift shift;
};

/// Throws ValidationError on schema violations, naming the offending key path.
LoadedProblem parse_problem(const std::string& json_text);
/// Throws IoError when the file cannot be read.
LoadedProblem load_problem(const std::filesystem::path& path);

}  // namespace fracspec
