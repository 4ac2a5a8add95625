#include "invdiff_cli/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invdiff/coset_ops.hpp"
#include "invdiff/error.hpp"
#include "invdiff/expr.hpp"
#include "invdiff/setup_file.hpp"

namespace invdiff::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kChiHypothesis = "chi is assumed to extend to a character of G (not decidable from h-data)";

void render_text(const json& value, std::ostream& out, int indent);

void render_scalar(const json& v, std::ostream& out) {
  if (v.is_string())
    out << v.get<std::string>();
  else if (v.is_boolean())
    out << (v.get<bool>() ? "yes" : "no");
  else if (v.is_null())
    out << "n/a";
  else
    out << v.dump();
}

void render_text(const json& value, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array()) {
      out << pad << key << ":" << (v.empty() ? " (none)" : "") << "\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render_text(item, out, indent + 4);
        } else {
          out << pad << "  - ";
          render_scalar(item, out);
          out << "\n";
        }
      }
    } else {
      out << pad << key << ": ";
      render_scalar(v, out);
      out << "\n";
    }
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

json subspace_lines(const Subspace& s, const Variables& vars) {
  json lines = json::array();
  for (std::size_t k = 0; k < s.dim(); ++k) lines.push_back(s.names()[k] + " = " + format_vector(s.basis()[k], vars));
  return lines;
}

std::string semantics_line(const CosetSetup& setup) {
  std::string line = "connected-H (h-invariance imposed on a basis of h)";
  if (setup.component_reps().empty()) return line + "; no component representatives";
  std::vector<std::string> names;
  for (const auto& rep : setup.component_reps()) names.push_back(rep.name);
  return line + "; component representatives applied: " + join(names, ", ");
}

json header(const CosetSetup& setup, const std::string& command) {
  json r;
  r["command"] = command;
  r["setup"] = setup.name().empty() ? "(unnamed)" : setup.name();
  r["semantics"] = semantics_line(setup);
  return r;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Options {
  std::string setup;
  bool json = false;
  std::string expr;
  int degree = kDefaultCheckDegree;
  std::vector<std::string> gens;
  std::vector<int> signature;
};

CosetSetup require_setup(const Options& opts) {
  if (opts.setup.empty()) throw Error(ErrorCode::kInvalidInput, "this command needs --setup <file|preset>");
  return load_setup(opts.setup);
}

void require_degree(int d) {
  if (d < 0) throw Error(ErrorCode::kInvalidInput, "--degree must be nonnegative");
}

int cmd_presets(json& r) {
  r["command"] = "presets";
  json names = json::array();
  for (const auto& n : preset_names()) names.push_back(n);
  r["presets"] = names;
  return kExitPass;
}

int cmd_check(const Options& opts, json& r) {
  SetupFile file = read_setup_file(opts.setup);
  CosetSetup setup = build_setup(file);
  r = header(setup, "check");
  const LieAlgebra& g = setup.algebra();
  r["algebra"] = join(g.variables().names(), ", ") + " (n=" + std::to_string(g.dim()) + ")";
  r["structure"] = "valid (Jacobi identity holds on every basis triple)";
  r["h"] = subspace_lines(setup.h(), g.variables());
  r["h_subalgebra"] = true;
  json chi = json::array();
  for (std::size_t k = 0; k < setup.h_dim(); ++k) chi.push_back("chi(" + setup.h().names()[k] + ") = " + to_string(setup.chi()[k]));
  r["chi"] = chi;
  r["character"] = "valid (vanishes on [h,h])";
  r["m"] = subspace_lines(setup.m(), g.variables());
  r["m_selection"] = setup.m_auto_selected() ? "auto-selected by greedy pivoting (no invariance promised)" : "given";
  r["adapted_order"] = join(setup.adapted().variables().names(), ", ");
  r["r"] = setup.r();
  json reps = json::array();
  for (const auto& rep : setup.component_reps()) reps.push_back(rep.name + ": automorphism preserving h and chi");
  r["component_reps"] = reps;
  for (const auto& [role, block] : file.subspaces) {
    if (role == "h" || role == "m") continue;
    std::vector<std::string> names;
    for (const auto& nv : block) names.push_back(nv.name.empty() ? "?" : nv.name);
    r["info_" + role] = "span{" + join(names, ", ") + "}";
  }
  r["result"] = "PASS";
  return kExitPass;
}

int cmd_normalize(const Options& opts, json& r) {
  CosetSetup setup = require_setup(opts);
  r = header(setup, "normalize");
  Expr e = parse_expr(opts.expr, setup);
  r["input"] = render(e);
  r["adapted_order"] = join(setup.adapted().variables().names(), ", ");
  r["normal_form"] = to_string(to_pbw(setup, e));
  return kExitPass;
}

int cmd_symmetrize(const Options& opts, json& r) {
  CosetSetup setup = require_setup(opts);
  r = header(setup, "symmetrize");
  Expr e = parse_expr(opts.expr, setup);
  SymPoly p = to_sym(setup, e);
  r["input"] = render(e);
  r["polynomial"] = to_string(p);
  r["lambda"] = to_string(symmetrize(setup.ring(), p));
  return kExitPass;
}

int cmd_project(const Options& opts, json& r) {
  CosetSetup setup = require_setup(opts);
  r = header(setup, "project");
  Expr e = parse_expr(opts.expr, setup);
  PbwElement u = to_pbw(setup, e);
  PbwElement p = project_mod_ideal(setup, u);
  r["input"] = render(e);
  r["normal_form"] = to_string(u);
  r["projection"] = to_string(p);
  r["in_ideal"] = p.is_zero();
  return kExitPass;
}

int cmd_dmod(const Options& opts, json& r) {
  CosetSetup setup = require_setup(opts);
  r = header(setup, "dmod");
  Expr e = parse_expr(opts.expr, setup);
  PbwElement u = to_pbw(setup, e);
  r["input"] = render(e);
  r["normal_form"] = to_string(u);
  json conditions = json::array();
  bool ok = true;
  const auto& names = setup.adapted().variables().names();
  for (std::size_t k = 0; k < setup.h_dim(); ++k) {
    PbwElement res = project_mod_ideal(setup, ad_u(unit_vector(setup.dim(), setup.r() + k), u));
    ok = ok && res.is_zero();
    conditions.push_back("[" + names[setup.r() + k] + ", u] mod ideal = " + to_string(res));
  }
  for (std::size_t a = 0; a < setup.adapted_reps().size(); ++a) {
    PbwElement res = project_mod_ideal(setup, ad_group_u(setup.adapted_reps()[a], u) - u);
    ok = ok && res.is_zero();
    conditions.push_back(setup.component_reps()[a].name + "(u) - u mod ideal = " + to_string(res));
  }
  r["conditions"] = conditions;
  r["in_dmod"] = ok;
  return ok ? kExitPass : kExitPropertyFailed;
}

int cmd_invariants(const Options& opts, json& r) {
  require_degree(opts.degree);
  CosetSetup setup = require_setup(opts);
  r = header(setup, "invariants");
  ImodBasis basis = imod_basis(setup, opts.degree);
  r["degree"] = opts.degree;
  r["variables"] = join(setup.m_variables().names(), ", ");
  r["dimension"] = basis.polys.size();
  json polys = json::array();
  for (const auto& p : basis.polys) polys.push_back(to_string(p));
  r["basis"] = polys;
  return kExitPass;
}

int cmd_reductive(const Options& opts, json& r) {
  CosetSetup setup = require_setup(opts);
  r = header(setup, "reductive");
  std::vector<Matrix> reps;
  for (const auto& rep : setup.component_reps()) reps.push_back(rep.matrix);
  ComplementResult res = invariant_complement(setup.algebra(), setup.h(), reps);
  r["h"] = subspace_lines(setup.h(), setup.algebra().variables());
  r["reductive"] = res.feasible();
  if (res.feasible()) {
    r["invariant_complement"] = subspace_lines(*res.complement, setup.algebra().variables());
    return kExitPass;
  }
  r["status"] = "infeasible: no ad(h)-invariant complement exists";
  r["certificate"] = res.certificate;
  return kExitPropertyFailed;
}

int cmd_decompose(const Options& opts, json& r) {
  require_degree(opts.degree);
  CosetSetup setup = require_setup(opts);
  r = header(setup, "decompose");
  r["hypothesis"] = kChiHypothesis;
  json rows = json::array();
  bool ok = true;
  for (int m = 0; m <= opts.degree; ++m) {
    DirectSumReport rep = verify_direct_sum(setup, m);
    ok = ok && rep.pass;
    std::ostringstream line;
    line << "m=" << m << ": total " << rep.total_rank << " = ideal " << rep.ideal_rank << " + m-part " << rep.m_rank
         << " (binomials " << rep.expected_total << " and " << rep.expected_m << ", combined rank " << rep.combined_rank
         << "): " << pass_fail(rep.pass);
    rows.push_back(line.str());
  }
  r["degrees"] = rows;
  r["result"] = pass_fail(ok);
  return ok ? kExitPass : kExitPropertyFailed;
}

int cmd_commutativity(const Options& opts, json& r) {
  require_degree(opts.degree);
  CosetSetup setup = require_setup(opts);
  r = header(setup, "commutativity");
  r["hypothesis"] = kChiHypothesis;
  r["max_degree"] = opts.degree;
  bool in_dmod_ok = check_lambda_imod_in_dmod(setup, opts.degree);
  r["lambda_imod_in_dmod"] = in_dmod_ok;
  std::optional<bool> eq = check_lambda_imod_equality(setup, opts.degree);
  if (eq)
    r["lambda_imod_equals_lambda_sm_cap_dmod"] = *eq;
  else
    r["lambda_imod_equals_lambda_sm_cap_dmod"] = nullptr;
  bool comm = in_dmod_ok && check_commutativity(setup, opts.degree);
  r["commutative"] = in_dmod_ok ? json(comm) : json(nullptr);
  bool ok = in_dmod_ok && eq.value_or(false) && comm;
  r["result"] = pass_fail(ok);
  return ok ? kExitPass : kExitPropertyFailed;
}

int cmd_generation(const Options& opts, json& r) {
  require_degree(opts.degree);
  CosetSetup setup = require_setup(opts);
  r = header(setup, "generation");
  r["hypothesis"] = kChiHypothesis;
  std::vector<SymPoly> gens;
  json shown = json::array();
  for (const auto& text : opts.gens) {
    gens.push_back(to_sym_m(setup, parse_expr(text, setup)));
    shown.push_back(to_string(gens.back()));
  }
  r["generators"] = shown;
  r["max_degree"] = opts.degree;
  bool ok = check_generation(setup, gens, opts.degree);
  r["generated"] = ok;
  r["result"] = pass_fail(ok);
  return ok ? kExitPass : kExitPropertyFailed;
}

int cmd_laplace(const Options& opts, json& r) {
  require_degree(opts.degree);
  CosetSetup setup = require_setup(opts);
  r = header(setup, "laplace");
  r["hypothesis"] = std::string(kChiHypothesis) + "; transitivity on hyperboloids is not checked";
  SymPoly q = laplace_polynomial(setup, opts.signature);
  r["generator"] = to_string(q);
  r["max_degree"] = opts.degree;
  bool ok = check_generation(setup, {q}, opts.degree);
  r["generated"] = ok;
  r["result"] = pass_fail(ok);
  return ok ? kExitPass : kExitPropertyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invdiff: invariant differential operators on homogeneous spaces", "invdiff"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--setup", opts.setup, "Setup JSON file or preset name");
  app.add_flag("--json", opts.json, "Emit a JSON report");

  auto* check = app.add_subcommand("check", "Validate structure, subalgebra, character and reps");
  auto* presets = app.add_subcommand("presets", "List built-in presets");
  auto* normalize = app.add_subcommand("normalize", "PBW normal form of an expression");
  auto* symm = app.add_subcommand("symmetrize", "Symmetrization of a commutative expression");
  auto* project = app.add_subcommand("project", "Canonical representative modulo the ideal");
  auto* dmod = app.add_subcommand("dmod", "Membership in Dmod");
  for (auto* sub : {normalize, symm, project, dmod}) sub->add_option("expr", opts.expr, "Expression")->required();
  auto* invariants = app.add_subcommand("invariants", "Basis of I_mod(m) in one degree");
  auto* reductive = app.add_subcommand("reductive", "Search for an invariant complement");
  auto* decompose = app.add_subcommand("decompose", "Direct sum decomposition check up to a degree");
  auto* commut = app.add_subcommand("commutativity", "lambda(I_mod) in Dmod, equality and commutativity checks");
  auto* generation = app.add_subcommand("generation", "Generation of the quotient by given polynomials");
  auto* laplace = app.add_subcommand("laplace", "Generation by a diagonal quadratic form");
  for (auto* sub : {invariants, decompose, commut, generation, laplace})
    sub->add_option("--degree", opts.degree, "Degree")->capture_default_str();
  invariants->get_option("--degree")->required();
  decompose->get_option("--degree")->required();
  generation->add_option("--gen", opts.gens, "Generator polynomial over m")->required();
  laplace->add_option("--signature", opts.signature, "Signs, one per m-basis vector")->delimiter(',')->required();
  for (auto* sub : {check, presets, normalize, symm, project, dmod, invariants, reductive, decompose, commut, generation, laplace})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  json report;
  int code = kExitPass;
  try {
    if (*presets)
      code = cmd_presets(report);
    else if (*check) {
      if (opts.setup.empty()) throw Error(ErrorCode::kInvalidInput, "this command needs --setup <file|preset>");
      code = cmd_check(opts, report);
    } else if (*normalize)
      code = cmd_normalize(opts, report);
    else if (*symm)
      code = cmd_symmetrize(opts, report);
    else if (*project)
      code = cmd_project(opts, report);
    else if (*dmod)
      code = cmd_dmod(opts, report);
    else if (*invariants)
      code = cmd_invariants(opts, report);
    else if (*reductive)
      code = cmd_reductive(opts, report);
    else if (*decompose)
      code = cmd_decompose(opts, report);
    else if (*commut)
      code = cmd_commutativity(opts, report);
    else if (*generation)
      code = cmd_generation(opts, report);
    else if (*laplace)
      code = cmd_laplace(opts, report);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitInputError;
  }

  if (opts.json) {
    report["exit_code"] = code;
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
  }
  return code;
}

}  // namespace invdiff::cli
