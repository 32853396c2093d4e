#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "liederiv/io_json.hpp"
#include "liederiv/parse.hpp"
#include "liederiv/presets.hpp"

namespace {

using namespace liederiv;

// Exit codes: 0 = mathematical success, 1 = computed negative answer,
// 2 = input or usage error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

bool use_color() {
  const char* env = std::getenv("LIEDERIV_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return false; // auto: diagnostics go to a pipe in tests, keep them plain
}

void diagnostic(const std::string& msg) {
  if (use_color())
    std::cerr << "\033[31merror:\033[0m " << msg << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + out_path + "'");
  out << payload;
}

struct CommonInputs {
  std::string preset;
  std::size_t preset_param = 0;
  std::string algebra_path;
  std::string problem_path;
  std::string out_path;
};

std::optional<std::size_t> param_opt(const CommonInputs& in) {
  return in.preset_param == 0 ? std::nullopt : std::optional<std::size_t>(in.preset_param);
}

AlgebraPtr load_algebra(const CommonInputs& in, bool validate = true) {
  if (!in.preset.empty()) return make_preset_algebra(in.preset, param_opt(in));
  if (!in.algebra_path.empty()) return algebra_from_json(read_file(in.algebra_path), validate);
  throw InvalidInput("need --preset or --algebra");
}

EmbeddingProblem load_problem(const CommonInputs& in) {
  if (!in.preset.empty()) return make_preset_problem(in.preset, param_opt(in));
  if (!in.problem_path.empty()) return problem_from_json(read_file(in.problem_path));
  throw InvalidInput("need --preset or --problem");
}

void add_common(CLI::App* cmd, CommonInputs& in, bool with_problem) {
  cmd->add_option("--preset", in.preset, "preset name (see `liederiv preset --list`)");
  cmd->add_option("--preset-param", in.preset_param, "integer parameter for sl_n / abelian_n");
  cmd->add_option("--algebra", in.algebra_path, "algebra JSON file");
  if (with_problem) cmd->add_option("--problem", in.problem_path, "embedding problem JSON file");
  cmd->add_option("--out", in.out_path, "write the payload to a file instead of stdout");
}

int run_validate(const CommonInputs& in) {
  const AlgebraPtr L = load_algebra(in, /*validate=*/false);
  const JacobiReport report = validate_jacobi(*L);
  emit(jacobi_report_to_json(report, *L), in.out_path);
  return report.ok ? kOk : kNegative;
}

int run_embed(const CommonInputs& in, int jet, std::size_t max_steps, bool latex) {
  const EmbeddingProblem p = load_problem(in);
  const JetContext ctx = jet < 0 ? JetContext::exact() : JetContext::jet(jet);
  const std::optional<std::size_t> steps =
      max_steps == 0 ? std::nullopt : std::optional<std::size_t>(max_steps);
  const EmbeddingResult r = build_embedding(p, ctx, steps);
  const ResultStats stats = compute_stats(r);
  emit(latex ? result_to_latex(r) : result_to_json(r, stats), in.out_path);
  return stats.kernel_dim == 0 ? kOk : kNegative;
}

int run_verify(const CommonInputs& in, const std::string& result_path) {
  EmbeddingResult r = result_path.empty()
                          ? [&] {
                              const EmbeddingProblem p = load_problem(in);
                              return build_embedding(p);
                            }()
                          : result_from_json(read_file(result_path));
  const HomomorphismReport hom = verify_homomorphism(r.algebra, r.phi);
  const ResultStats stats = compute_stats(r);
  std::string payload;
  payload += "{\n";
  payload += "  \"homomorphism_ok\": " + std::string(hom.ok ? "true" : "false") + ",\n";
  payload += "  \"violations\": " + std::to_string(hom.violations.size()) + ",\n";
  payload += "  \"rank\": " + std::to_string(stats.rank) + ",\n";
  payload += "  \"kernel_dim\": " + std::to_string(stats.kernel_dim) + ",\n";
  payload += "  \"tilde_codim\": " + std::to_string(stats.tilde_codim) + ",\n";
  payload += "  \"tilde_trivial_intersection\": " +
             std::string(stats.tilde_trivial_intersection ? "true" : "false") + "\n";
  payload += "}\n";
  emit(payload, in.out_path);
  return (hom.ok && stats.kernel_dim == 0) ? kOk : kNegative;
}

int run_tilde(const CommonInputs& in, const std::string& result_path) {
  EmbeddingResult r = result_path.empty()
                          ? [&] {
                              const EmbeddingProblem p = load_problem(in);
                              return build_embedding(p);
                            }()
                          : result_from_json(read_file(result_path));
  const TildeResult t = tilde_subalgebra(r.algebra, r.phi);
  std::string payload = "{\n  \"codim\": " + std::to_string(t.codim) + ",\n  \"basis\": [\n";
  for (std::size_t i = 0; i < t.basis.rows.rows(); ++i) {
    payload += "    [";
    for (std::size_t j = 0; j < t.basis.rows.cols(); ++j)
      payload += "\"" + t.basis.rows.at(i, j).to_string() + "\"" +
                 (j + 1 < t.basis.rows.cols() ? ", " : "");
    payload += std::string("]") + (i + 1 < t.basis.rows.rows() ? "," : "") + "\n";
  }
  payload += "  ],\n  \"trivial_intersection\": " +
             std::string(t.trivial_intersection() ? "true" : "false") + "\n}\n";
  emit(payload, in.out_path);
  return t.trivial_intersection() ? kOk : kNegative;
}

int run_variety(const CommonInputs& in, std::size_t k, const std::string& eqs_out, bool as_json) {
  const AlgebraPtr L = load_algebra(in);
  const VarietySystem sys = closure_equations(L, k);
  const std::string payload = as_json ? variety_to_json(sys) : variety_to_text(sys);
  emit(payload, eqs_out.empty() ? in.out_path : eqs_out);
  return kOk;
}

int run_check_point(const CommonInputs& in, const std::string& point_path) {
  AlgebraPtr override_algebra;
  if (!in.preset.empty() || !in.algebra_path.empty()) override_algebra = load_algebra(in);
  const CandidateMatrix<Rational> A = point_from_json(read_file(point_path), override_algebra);
  const PointCheck c = check_point(A);
  emit(point_check_to_json(c), in.out_path);
  return c.in_Mk ? kOk : kNegative;
}

int run_check_family(const CommonInputs& in, const std::string& family_path, bool embed,
                     std::size_t max_steps) {
  AlgebraPtr override_algebra;
  if (!in.preset.empty() || !in.algebra_path.empty()) override_algebra = load_algebra(in);
  std::vector<std::string> params;
  const CandidateMatrix<RationalFunction> A =
      family_from_json(read_file(family_path), &params, override_algebra);
  const FamilyCheck c = check_family(A);
  if (!embed) {
    emit(family_check_to_json(c), in.out_path);
    return c.theorem1_ii_holds ? kOk : kNegative;
  }
  if (!c.theorem1_ii_holds) {
    emit(family_check_to_json(c), in.out_path);
    return kNegative;
  }
  // Complete the family rows to a basis with unit vectors, then run the
  // function-field construction.
  const std::size_t m = A.algebra->dim();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < A.rows.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back(A.rows.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> complement;
  {
    std::vector<std::vector<RationalFunction>> span_rows;
    for (std::size_t i = 0; i < A.rows.rows(); ++i) span_rows.push_back(A.rows.row(i));
    for (std::size_t j = 0; j < m && complement.size() < A.k; ++j) {
      std::vector<RationalFunction> e(m, A.rows.zero());
      e[j] = make_one_like(A.rows.zero());
      auto trial = span_rows;
      trial.push_back(e);
      if (rank(Matrix<RationalFunction>::from_rows(trial, A.rows.zero())) == span_rows.size() + 1) {
        span_rows.push_back(std::move(e));
        complement.push_back(j);
      }
    }
  }
  const std::optional<std::size_t> steps =
      max_steps == 0 ? std::nullopt : std::optional<std::size_t>(max_steps);
  const EmbeddingResult r =
      build_embedding_general(A.algebra, rows, complement, params, JetContext::exact(), steps);
  const ResultStats stats = compute_stats(r);
  emit(result_to_json(r, stats), in.out_path);
  return stats.kernel_dim == 0 ? kOk : kNegative;
}

int run_preset(bool list, const std::string& name, std::size_t param, bool problem,
               const std::string& out_path) {
  if (list) {
    std::string payload;
    for (const auto& p : list_presets()) {
      payload += p.name + (p.takes_parameter ? " <n>" : "") + (p.has_problem ? " [problem]" : "") +
                 "  - " + p.description + "\n";
    }
    emit(payload, out_path);
    return kOk;
  }
  if (name.empty()) throw InvalidInput("need --list or --name");
  const std::optional<std::size_t> p =
      param == 0 ? std::nullopt : std::optional<std::size_t>(param);
  if (problem) {
    emit(problem_to_json(make_preset_problem(name, p)), out_path);
  } else {
    emit(algebra_to_json(*make_preset_algebra(name, p)), out_path);
  }
  return kOk;
}

int run_render(const std::string& in_path, bool latex, const std::string& out_path) {
  const std::string text = read_file(in_path);
  // Detect the payload type from its keys.
  if (text.find("\"phi\"") != std::string::npos) {
    const EmbeddingResult r = result_from_json(text);
    if (latex) {
      emit(result_to_latex(r), out_path);
    } else {
      std::string payload;
      for (std::size_t i = 0; i < r.phi.size(); ++i)
        payload += "phi(" + r.algebra->basis_name(i) + ") = " + r.phi[i].to_string() + "\n";
      emit(payload, out_path);
    }
    return kOk;
  }
  if (text.find("\"closure\"") != std::string::npos) {
    const VarietySystem sys = variety_from_json(text);
    if (latex) {
      std::string payload;
      for (const auto& p : sys.closure_eqs) payload += p.to_latex() + " = 0\\\\\n";
      for (const auto& p : sys.degeneracy_eqs) payload += p.to_latex() + "\\\\\n";
      emit(payload, out_path);
    } else {
      emit(variety_to_text(sys), out_path);
    }
    return kOk;
  }
  if (text.find("\"L1\"") != std::string::npos) {
    const EmbeddingProblem p = problem_from_json(text);
    emit(problem_to_json(p), out_path);
    return kOk;
  }
  const AlgebraPtr L = algebra_from_json(text);
  if (latex) {
    std::string payload;
    for (const auto& [ij, terms] : L->constants()) {
      std::string rhs;
      bool first = true;
      for (const auto& [s, c] : terms) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        rhs += first ? (neg ? "-" : "") : (neg ? "-" : "+");
        first = false;
        if (mag != 1) rhs += rational_to_latex(mag);
        rhs += L->basis_name(s);
      }
      payload += "[" + L->basis_name(ij.first) + "," + L->basis_name(ij.second) + "] = " + rhs + "\n";
    }
    emit(payload, out_path);
  } else {
    emit(algebra_to_json(*L), out_path);
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact embeddings of finite-dimensional Lie algebras into derivation algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "liederiv 0.1.0");

  CommonInputs in_validate, in_embed, in_verify, in_tilde, in_variety, in_point, in_family;

  auto* validate = app.add_subcommand("validate", "check the Jacobi identity of an algebra");
  add_common(validate, in_validate, false);

  auto* embed = app.add_subcommand("embed", "run the embedding construction");
  add_common(embed, in_embed, true);
  int jet = -1;
  std::size_t max_steps = 0;
  bool latex_embed = false;
  embed->add_option("--jet", jet, "truncate mod J^(N+1) instead of computing exactly");
  embed->add_option("--max-steps", max_steps, "override the nilpotency guard");
  embed->add_flag("--latex", latex_embed, "emit a LaTeX report instead of JSON");

  auto* verify = app.add_subcommand("verify", "verify homomorphism/kernel/rank of a result");
  add_common(verify, in_verify, true);
  std::string verify_result;
  verify->add_option("--result", verify_result, "embedding result JSON file");

  auto* tilde = app.add_subcommand("tilde", "relation module of a result");
  add_common(tilde, in_tilde, true);
  std::string tilde_result;
  tilde->add_option("--result", tilde_result, "embedding result JSON file");

  auto* variety = app.add_subcommand("variety", "emit the subalgebra-variety equations");
  add_common(variety, in_variety, false);
  std::size_t variety_k = 1;
  std::string eqs_out;
  bool variety_json = false;
  variety->add_option("--k", variety_k, "codimension")->required();
  variety->add_option("--eqs-out", eqs_out, "write the equations to a file");
  variety->add_flag("--json", variety_json, "JSON output instead of plain text");

  auto* check_point_cmd = app.add_subcommand("check-point", "membership tests at a rational point");
  add_common(check_point_cmd, in_point, false);
  std::string point_path;
  check_point_cmd->add_option("--point", point_path, "candidate matrix JSON file")->required();

  auto* check_family_cmd = app.add_subcommand("check-family", "generic tests for a family");
  add_common(check_family_cmd, in_family, false);
  std::string family_path;
  bool family_embed = false;
  std::size_t family_max_steps = 0;
  check_family_cmd->add_option("--family", family_path, "family JSON file")->required();
  check_family_cmd->add_flag("--embed", family_embed,
                             "when the family qualifies, build the function-field embedding");
  check_family_cmd->add_option("--max-steps", family_max_steps, "override the nilpotency guard");

  auto* preset = app.add_subcommand("preset", "list or dump canned algebras and problems");
  bool preset_list = false;
  std::string preset_name, preset_out;
  std::size_t preset_param = 0;
  bool preset_problem = false;
  preset->add_flag("--list", preset_list, "list available presets");
  preset->add_option("--name", preset_name, "preset name");
  preset->add_option("--preset-param", preset_param, "integer parameter");
  preset->add_flag("--problem", preset_problem, "dump the embedding problem instead of the algebra");
  preset->add_option("--out", preset_out, "output file");

  auto* render = app.add_subcommand("render", "re-render a payload as text or LaTeX");
  std::string render_in, render_out;
  bool render_latex = false;
  render->add_option("--in", render_in, "payload JSON file")->required();
  render->add_flag("--latex", render_latex, "LaTeX output");
  render->add_option("--out", render_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
    app.exit(e);
    return kError;
  }

  try {
    if (validate->parsed()) return run_validate(in_validate);
    if (embed->parsed()) return run_embed(in_embed, jet, max_steps, latex_embed);
    if (verify->parsed()) return run_verify(in_verify, verify_result);
    if (tilde->parsed()) return run_tilde(in_tilde, tilde_result);
    if (variety->parsed()) return run_variety(in_variety, variety_k, eqs_out, variety_json);
    if (check_point_cmd->parsed()) return run_check_point(in_point, point_path);
    if (check_family_cmd->parsed())
      return run_check_family(in_family, family_path, family_embed, family_max_steps);
    if (preset->parsed())
      return run_preset(preset_list, preset_name, preset_param, preset_problem, preset_out);
    if (render->parsed()) return run_render(render_in, render_latex, render_out);
  } catch (const Error& e) {
    diagnostic(e.what());
    return kError;
  } catch (const std::exception& e) {
    diagnostic(std::string("unexpected: ") + e.what());
    return kError;
  }
  return kError;
}
