#ifndef LIEDERIV_IO_JSON_HPP
#define LIEDERIV_IO_JSON_HPP

#include <string>

#include "liederiv/embedding.hpp"
#include "liederiv/variety.hpp"

namespace liederiv {

/// Everything below emits deterministic, pretty-printed JSON terminated by a
/// newline; loaders parse exactly what the emitters produce (plus hand-written
/// files following the same schemas).

std::string algebra_to_json(const LieAlgebra& L);
/// By default the Jacobi identity is validated eagerly and a violating input
/// is rejected; pass validate = false to load raw constants (the `validate`
/// subcommand reports violations instead of failing).
AlgebraPtr algebra_from_json(const std::string& text, bool validate = true);

std::string problem_to_json(const EmbeddingProblem& p);
EmbeddingProblem problem_from_json(const std::string& text);

/// Derived statistics reported alongside an embedding result.
struct ResultStats {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t tilde_codim = 0;
  bool tilde_trivial_intersection = false;
};

ResultStats compute_stats(const EmbeddingResult& r);

std::string result_to_json(const EmbeddingResult& r, const ResultStats& stats);
EmbeddingResult result_from_json(const std::string& text);

/// Candidate matrices: points (no parameters, rational entries) and families
/// (entries are rational-function strings in the declared parameters).
std::string candidate_to_json(const CandidateMatrix<RationalFunction>& c,
                              const std::vector<std::string>& params);
std::string candidate_to_json(const CandidateMatrix<Rational>& c);
CandidateMatrix<Rational> point_from_json(const std::string& text, AlgebraPtr algebra = nullptr);
CandidateMatrix<RationalFunction> family_from_json(const std::string& text,
                                                   std::vector<std::string>* params_out = nullptr,
                                                   AlgebraPtr algebra = nullptr);

std::string variety_to_json(const VarietySystem& sys);
std::string variety_to_text(const VarietySystem& sys);
VarietySystem variety_from_json(const std::string& text);

std::string jacobi_report_to_json(const JacobiReport& report, const LieAlgebra& L);
std::string point_check_to_json(const PointCheck& c);
std::string family_check_to_json(const FamilyCheck& c);

/// LaTeX report for an embedding result (one line per basis element).
std::string result_to_latex(const EmbeddingResult& r);

} // namespace liederiv

#endif
