#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invdiff/coset_setup.hpp"
#include "invdiff/lie_algebra.hpp"

namespace invdiff {

struct NamedVector {
  std::string name;
  Vector vector;  // coordinates in the file's basis
};

/// In-memory form of a setup JSON file. Rationals are strings "p" or "p/q".
///
///   {
///     "name": "...", "description": "...", "reference": "...",
///     "basis": ["H", "E", "F"],
///     "brackets": [{"pair": ["H", "E"], "value": {"E": "2"}}],
///     "subspaces": {"h": [{"name": "E", "vector": {"E": "1"}}], "m": [...]},
///     "chi": {"E": "0"},
///     "component_reps": [{"name": "...", "matrix": [["1", "0", "0"], ...]}]
///   }
///
/// Only "h" is required among the subspaces; "m" is optional and any other
/// block (a, n, k0, ...) is informational.
struct SetupFile {
  std::string name;
  std::string description;
  std::string reference;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::vector<std::pair<std::string, std::vector<NamedVector>>> subspaces;
  std::vector<std::pair<std::string, Rational>> chi;
  std::vector<ComponentRep> component_reps;

  const std::vector<NamedVector>* subspace(std::string_view role) const;
};

/// Throws kSyntax for malformed JSON, kInvalidInput for schema problems.
SetupFile parse_setup_file(std::string_view json_text);

/// Throws kInvalidStructure listing every failing Jacobi triple.
LieAlgebra build_algebra(const SetupFile& file);

/// Runs all validations and returns the setup.
CosetSetup build_setup(const SetupFile& file);

/// Names of the presets compiled into the library, sorted.
std::vector<std::string> preset_names();
/// JSON text of a preset; throws kInvalidInput for unknown names.
std::string_view preset_source(std::string_view name);

/// Reads a file path, or a preset name when no such file exists.
SetupFile read_setup_file(std::string_view path_or_preset);
CosetSetup load_setup(std::string_view path_or_preset);

}  // namespace invdiff
