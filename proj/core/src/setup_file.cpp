#include "invdiff/setup_file.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "invdiff/error.hpp"
#include "presets_data.hpp"

namespace invdiff {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::kInvalidInput, "setup file: " + what); }

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where + " is missing \"" + key + "\"");
  return *it;
}

std::string optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) schema_error(std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

Rational rational_field(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where + ": rationals must be strings like \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    schema_error(where + ": " + e.what());
  }
}

Vector coordinate_map(const json& v, const std::vector<std::string>& basis, const std::string& where) {
  if (!v.is_object()) schema_error(where + " must map basis names to rationals");
  Vector out = zero_vector(basis.size());
  for (const auto& [key, value] : v.items()) {
    auto it = std::find(basis.begin(), basis.end(), key);
    if (it == basis.end()) schema_error(where + ": unknown basis name '" + key + "'");
    out[static_cast<std::size_t>(it - basis.begin())] = rational_field(value, where + "." + key);
  }
  return out;
}

std::size_t basis_index(const json& v, const std::vector<std::string>& basis, const std::string& where) {
  if (!v.is_string()) schema_error(where + " must be a basis name");
  auto it = std::find(basis.begin(), basis.end(), v.get<std::string>());
  if (it == basis.end()) schema_error(where + ": unknown basis name '" + v.get<std::string>() + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

Subspace make_subspace(const LieAlgebra& alg, const std::string& role, const std::vector<NamedVector>& block) {
  std::vector<Vector> vectors;
  for (const auto& nv : block) vectors.push_back(nv.vector);
  Subspace defaults = Subspace::span(alg, vectors, {}, role);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < block.size(); ++k)
    names.push_back(block[k].name.empty() ? defaults.names()[k] : block[k].name);
  return Subspace::span(alg, std::move(vectors), std::move(names));
}

}  // namespace

const std::vector<NamedVector>* SetupFile::subspace(std::string_view role) const {
  for (const auto& [r, block] : subspaces)
    if (r == role) return &block;
  return nullptr;
}

SetupFile parse_setup_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, std::string("setup file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");

  SetupFile file;
  file.name = optional_string(doc, "name");
  file.description = optional_string(doc, "description");
  file.reference = optional_string(doc, "reference");

  const json& basis = require(doc, "basis", "setup");
  if (!basis.is_array() || basis.empty()) schema_error("\"basis\" must be a nonempty array of names");
  for (const auto& b : basis) {
    if (!b.is_string() || !is_identifier(b.get<std::string>())) schema_error("basis names must be identifiers");
    file.basis.push_back(b.get<std::string>());
  }

  if (auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array()) schema_error("\"brackets\" must be an array");
    std::size_t idx = 0;
    for (const auto& entry : *it) {
      std::string where = "brackets[" + std::to_string(idx++) + "]";
      const json& pair = require(entry, "pair", where);
      if (!pair.is_array() || pair.size() != 2) schema_error(where + ".pair must list two basis names");
      std::size_t i = basis_index(pair[0], file.basis, where + ".pair");
      std::size_t j = basis_index(pair[1], file.basis, where + ".pair");
      file.brackets.push_back({i, j, coordinate_map(require(entry, "value", where), file.basis, where + ".value")});
    }
  }

  const json& subspaces = require(doc, "subspaces", "setup");
  if (!subspaces.is_object()) schema_error("\"subspaces\" must be an object");
  for (const auto& [role, block] : subspaces.items()) {
    if (!block.is_array()) schema_error("subspace '" + role + "' must be an array");
    std::vector<NamedVector> vectors;
    std::size_t idx = 0;
    for (const auto& v : block) {
      std::string where = "subspaces." + role + "[" + std::to_string(idx++) + "]";
      NamedVector nv;
      nv.name = optional_string(v, "name");
      nv.vector = coordinate_map(require(v, "vector", where), file.basis, where + ".vector");
      vectors.push_back(std::move(nv));
    }
    file.subspaces.emplace_back(role, std::move(vectors));
  }
  if (!file.subspace("h")) schema_error("\"subspaces\" needs an \"h\" block");

  if (auto it = doc.find("chi"); it != doc.end()) {
    if (!it->is_object()) schema_error("\"chi\" must map h-vector names to rationals");
    for (const auto& [key, value] : it->items()) file.chi.emplace_back(key, rational_field(value, "chi." + key));
  }

  if (auto it = doc.find("component_reps"); it != doc.end()) {
    if (!it->is_array()) schema_error("\"component_reps\" must be an array");
    std::size_t idx = 0;
    for (const auto& rep : *it) {
      std::string where = "component_reps[" + std::to_string(idx++) + "]";
      const json& rows = require(rep, "matrix", where);
      const std::size_t n = file.basis.size();
      if (!rows.is_array() || rows.size() != n) schema_error(where + ".matrix must have " + std::to_string(n) + " rows");
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
          schema_error(where + ".matrix rows must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_field(rows[r][c], where + ".matrix");
      }
      std::string name = optional_string(rep, "name");
      if (name.empty()) name = "rep" + std::to_string(idx);
      file.component_reps.push_back({std::move(name), std::move(m)});
    }
  }
  return file;
}

LieAlgebra build_algebra(const SetupFile& file) {
  LieAlgebra alg = LieAlgebra::create(file.basis, file.brackets);
  StructureReport report = check_structure(alg);
  if (!report.valid()) {
    std::ostringstream msg;
    msg << "Jacobi identity fails";
    for (const auto& v : report.violations)
      msg << "; triple (" << alg.name(v.i) << "," << alg.name(v.j) << "," << alg.name(v.k)
          << ") residual " << format_vector(v.residual, alg.variables());
    throw Error(ErrorCode::kInvalidStructure, msg.str());
  }
  return alg;
}

CosetSetup build_setup(const SetupFile& file) {
  LieAlgebra alg = build_algebra(file);
  Subspace h = make_subspace(alg, "h", *file.subspace("h"));
  std::optional<Subspace> m;
  if (const auto* block = file.subspace("m")) m = make_subspace(alg, "m", *block);
  for (const auto& [role, block] : file.subspaces)
    if (role != "h" && role != "m") make_subspace(alg, role, block);

  Vector chi = zero_vector(h.dim());
  for (const auto& [key, value] : file.chi) {
    auto it = std::find(h.names().begin(), h.names().end(), key);
    if (it == h.names().end()) schema_error("chi names '" + key + "', which is not an h-basis vector");
    chi[static_cast<std::size_t>(it - h.names().begin())] = value;
  }
  return CosetSetup::create(alg, h, std::move(m), std::move(chi), file.component_reps, file.name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : detail::preset_table()) out.emplace_back(p.name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view preset_source(std::string_view name) {
  for (const auto& p : detail::preset_table())
    if (p.name == name) return p.json;
  throw Error(ErrorCode::kInvalidInput, "no such preset '" + std::string(name) + "'");
}

SetupFile read_setup_file(std::string_view path_or_preset) {
  std::filesystem::path path{std::string(path_or_preset)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_setup_file(buf.str());
  }
  for (const auto& p : detail::preset_table())
    if (p.name == path_or_preset) return parse_setup_file(p.json);
  throw Error(ErrorCode::kInvalidInput, "'" + std::string(path_or_preset) + "' is neither a readable file nor a preset");
}

CosetSetup load_setup(std::string_view path_or_preset) { return build_setup(read_setup_file(path_or_preset)); }

}  // namespace invdiff
