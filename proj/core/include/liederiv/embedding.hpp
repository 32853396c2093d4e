#ifndef LIEDERIV_EMBEDDING_HPP
#define LIEDERIV_EMBEDDING_HPP

#include <string>
#include <vector>

#include "liederiv/semidirect.hpp"

namespace liederiv {

/// Input of the direct construction: a bracket-closed subspace L1 of
/// codimension k together with k basis elements spanning a complement whose
/// generated subalgebra acts nilpotently.
struct EmbeddingProblem {
  AlgebraPtr algebra;
  Subspace<Rational> L1;               // (m-k) x m, reduced rows
  std::vector<std::size_t> complement; // k basis indices, ordered

  std::size_t k() const { return complement.size(); }
};

/// Checks L1 closure and the direct-sum condition. Throws NotASubalgebra or
/// NotComplement. Nilpotency is *not* checked here; exp_ad guards it.
void validate_problem(const EmbeddingProblem& p);

/// Nilpotency of the action of the subalgebra generated by the complement
/// (the chain test on its bracket closure).
NilpotencyResult problem_nilpotency(const EmbeddingProblem& p);

/// Output of the construction.
struct EmbeddingResult {
  AlgebraPtr algebra;
  Vars vars;     // x1..xk, then any family parameters
  std::size_t k; // number of derivation directions
  TensorElement w;
  std::vector<SemidirectElement> images; // exp(ad w) of d/dx_i, then of the L1 basis
  Matrix<RationalFunction> B;            // m x m tensor-coordinate matrix of the images
  std::vector<VectorField> phi;          // basis index -> phi(l_i)
};

/// Runs the construction: w = sum x_i (x) l_i over the complement, images
/// exp(ad w) of d/dx_i and of the L1 basis, then the linear system fixing phi
/// by the requirement that phi(l) + 1 (x) l lies in the span of the images.
EmbeddingResult build_embedding(const EmbeddingProblem& p,
                                const JetContext& ctx = JetContext::exact(),
                                std::optional<std::size_t> max_steps = std::nullopt);

/// Same pipeline for a subalgebra of R (x) L given by rows over Q(params)
/// (the function-field case): scalars live in Q(x1..xk, params), the
/// derivations act on the x's only.
EmbeddingResult build_embedding_general(AlgebraPtr algebra,
                                        const std::vector<std::vector<std::string>>& lhat_rows,
                                        const std::vector<std::size_t>& complement,
                                        const std::vector<std::string>& params,
                                        const JetContext& ctx = JetContext::exact(),
                                        std::optional<std::size_t> max_steps = std::nullopt);

struct HomomorphismViolation {
  std::size_t i, j;
  VectorField residual;
};

struct HomomorphismReport {
  bool ok = true;
  std::vector<HomomorphismViolation> violations;
};

/// Exact check of [phi(l_i), phi(l_j)] = sum_s c_ij^s phi(l_s) for all i < j.
HomomorphismReport verify_homomorphism(const AlgebraPtr& algebra,
                                       const std::vector<VectorField>& phi);

/// Q-subspace { sum a_i l_i : sum a_i phi(l_i) = 0 }, via clearing
/// denominators and equating monomial coefficients.
Subspace<Rational> kernel(const AlgebraPtr& algebra, const std::vector<VectorField>& phi);

/// Rank over Q(x) of the coefficient matrix of phi.
std::size_t module_rank(const std::vector<VectorField>& phi);

/// The relation module L~ = R phi'(L) /\ R (x) L, its codimension, and its
/// intersection with 1 (x) L.
struct TildeResult {
  Subspace<RationalFunction> basis;
  std::size_t codim = 0;
  Subspace<Rational> constant_intersection;
  bool trivial_intersection() const { return constant_intersection.dim() == 0; }
};

TildeResult tilde_subalgebra(const AlgebraPtr& algebra, const std::vector<VectorField>& phi);

} // namespace liederiv

#endif
