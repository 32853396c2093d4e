#include "liederiv/embedding.hpp"

#include <map>

#include "liederiv/parse.hpp"
#include "liederiv/variety.hpp"

namespace liederiv {

void validate_problem(const EmbeddingProblem& p) {
  const std::size_t m = p.algebra->dim();
  const std::size_t k = p.complement.size();
  if (k == 0 || k > m) throw ShapeMismatch("complement must list between 1 and dim elements");
  if (*p.L1.algebra != *p.algebra) throw AlgebraMismatch();
  if (p.L1.dim() != m - k)
    throw NotComplement("L1 has dimension " + std::to_string(p.L1.dim()) +
                        ", expected " + std::to_string(m - k));
  for (auto c : p.complement)
    if (c >= m) throw InvalidInput("complement index out of range");

  if (!bracket_closed(p.L1)) throw NotASubalgebra("L1 is not closed under bracket");

  // L1 + span(complement) must be all of L.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < p.L1.rows.rows(); ++i) rows.push_back(p.L1.rows.row(i));
  for (auto c : p.complement) {
    std::vector<Rational> e(m, Rational(0));
    e[c] = 1;
    rows.push_back(std::move(e));
  }
  if (rank(Matrix<Rational>::from_rows(rows, Rational(0))) != m)
    throw NotComplement("L1 plus the complement does not span the algebra");
}

NilpotencyResult problem_nilpotency(const EmbeddingProblem& p) {
  const std::size_t m = p.algebra->dim();
  // Bracket closure of the span of the complement.
  std::vector<std::vector<Rational>> gens;
  for (auto c : p.complement) {
    std::vector<Rational> e(m, Rational(0));
    e[c] = 1;
    gens.push_back(std::move(e));
  }
  Subspace<Rational> W = span(p.algebra, gens, Rational(0));
  while (true) {
    std::vector<std::vector<Rational>> next;
    for (std::size_t i = 0; i < W.rows.rows(); ++i) next.push_back(W.rows.row(i));
    for (std::size_t i = 0; i < W.rows.rows(); ++i)
      for (std::size_t j = i + 1; j < W.rows.rows(); ++j) {
        LieElement<Rational> u{p.algebra, W.rows.row(i)};
        LieElement<Rational> v{p.algebra, W.rows.row(j)};
        next.push_back(bracket(u, v).coeffs);
      }
    Subspace<Rational> W2 = span(p.algebra, next, Rational(0));
    if (W2.dim() == W.dim()) break;
    W = std::move(W2);
  }
  return is_nilpotent_action(p.algebra, W);
}

namespace {

EmbeddingResult run_pipeline(AlgebraPtr algebra, const Vars& vars, std::size_t k,
                             const Matrix<RationalFunction>& lhat_rows,
                             const std::vector<std::size_t>& complement, const JetContext& ctx,
                             std::optional<std::size_t> max_steps) {
  const std::size_t m = algebra->dim();

  // w = sum x_i (x) l_{complement_i}.
  std::vector<RationalFunction> wc(m, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < k; ++i)
    wc[complement[i]] += RationalFunction::variable(vars, i);
  TensorElement w(algebra, vars, std::move(wc));

  // Images of the seed module basis under exp(ad w).
  std::vector<SemidirectElement> images;
  images.reserve(m);
  for (std::size_t i = 0; i < k; ++i)
    images.push_back(exp_ad(w, SemidirectElement(algebra, VectorField::basis(vars, i)), ctx, max_steps));
  for (std::size_t j = 0; j < lhat_rows.rows(); ++j) {
    TensorElement t(algebra, vars, lhat_rows.row(j));
    images.push_back(exp_ad(w, SemidirectElement(std::move(t)), ctx, max_steps));
  }

  // Tensor-coordinate matrix B (row i = coordinates of image i in the basis).
  Matrix<RationalFunction> B(m, m, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) B.at(i, j) = images[i].tensor().coeff(j);

  // Solve B Y = [e_1 .. e_k]: phi(l_j) + 1 (x) l_j must lie in the span of the
  // images, which forces phi(l_j) = sum_i Y(j,i) d/dx_i.
  Matrix<RationalFunction> rhs(m, k, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < k; ++i) rhs.at(i, i) = RationalFunction::one(vars);
  const Matrix<RationalFunction> Y = solve_square(B, rhs);

  std::vector<VectorField> phi;
  phi.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<RationalFunction> cs(vars.size(), RationalFunction::zero(vars));
    for (std::size_t i = 0; i < k; ++i) cs[i] = Y.at(j, i);
    phi.emplace_back(vars, std::move(cs));
  }

  return EmbeddingResult{std::move(algebra), vars, k, std::move(w), std::move(images), std::move(B),
                         std::move(phi)};
}

} // namespace

EmbeddingResult build_embedding(const EmbeddingProblem& p, const JetContext& ctx,
                                std::optional<std::size_t> max_steps) {
  validate_problem(p);
  const std::size_t k = p.complement.size();
  const Vars vars = make_x_vars(k);
  const std::size_t m = p.algebra->dim();
  Matrix<RationalFunction> lhat(m - k, m, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < m - k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      lhat.at(i, j) = RationalFunction::constant(vars, p.L1.rows.at(i, j));
  return run_pipeline(p.algebra, vars, k, lhat, p.complement, ctx, max_steps);
}

EmbeddingResult build_embedding_general(AlgebraPtr algebra,
                                        const std::vector<std::vector<std::string>>& lhat_rows,
                                        const std::vector<std::size_t>& complement,
                                        const std::vector<std::string>& params,
                                        const JetContext& ctx,
                                        std::optional<std::size_t> max_steps) {
  const std::size_t m = algebra->dim();
  const std::size_t k = complement.size();
  if (lhat_rows.size() != m - k)
    throw ShapeMismatch("subalgebra rows plus complement must have dim entries");
  for (auto c : complement)
    if (c >= m) throw InvalidInput("complement index out of range");

  // Scalars live in Q(x1..xk, params); derivations act on the x's only.
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  for (const auto& p : params) {
    if (Vars(names).index_of(p) != Vars::npos)
      throw InvalidInput("parameter name collides with a variable: " + p);
    names.push_back(p);
  }
  const Vars vars{names};
  const Vars param_vars{params};

  Matrix<RationalFunction> lhat(m - k, m, RationalFunction::zero(vars));
  for (std::size_t i = 0; i < m - k; ++i) {
    if (lhat_rows[i].size() != m) throw ShapeMismatch("subalgebra row arity");
    for (std::size_t j = 0; j < m; ++j)
      lhat.at(i, j) = parse_rational_function(lhat_rows[i][j], vars);
  }

  // The rows must form a subalgebra over the parameter field...
  Subspace<RationalFunction> lhat_span =
      span(algebra, [&] {
        std::vector<std::vector<RationalFunction>> rows;
        for (std::size_t i = 0; i < lhat.rows(); ++i) rows.push_back(lhat.row(i));
        return rows;
      }(), RationalFunction::zero(vars));
  if (lhat_span.dim() != m - k) throw NotASubalgebra("subalgebra rows are linearly dependent");
  if (!bracket_closed(lhat_span)) throw NotASubalgebra("rows are not closed under bracket");

  // ...and the complement must complete them to all of R (x) L.
  {
    std::vector<std::vector<RationalFunction>> rows;
    for (std::size_t i = 0; i < lhat.rows(); ++i) rows.push_back(lhat.row(i));
    for (auto c : complement) {
      std::vector<RationalFunction> e(m, RationalFunction::zero(vars));
      e[c] = RationalFunction::one(vars);
      rows.push_back(std::move(e));
    }
    if (rank(Matrix<RationalFunction>::from_rows(rows, RationalFunction::zero(vars))) != m)
      throw NotComplement("rows plus complement do not span over the parameter field");
  }

  return run_pipeline(std::move(algebra), vars, k, lhat, complement, ctx, max_steps);
}

HomomorphismReport verify_homomorphism(const AlgebraPtr& algebra,
                                       const std::vector<VectorField>& phi) {
  const std::size_t m = algebra->dim();
  if (phi.size() != m) throw ShapeMismatch("phi must be defined on all basis indices");
  HomomorphismReport report;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      VectorField residual = bracket(phi[i], phi[j]);
      const std::vector<Rational> c = algebra->bracket_basis(i, j);
      for (std::size_t s = 0; s < m; ++s) {
        if (c[s].is_zero()) continue;
        residual = residual - RationalFunction::constant(phi[i].vars(), c[s]) * phi[s];
      }
      if (!residual.is_zero())
        report.violations.push_back(HomomorphismViolation{i, j, std::move(residual)});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Subspace<Rational> kernel(const AlgebraPtr& algebra, const std::vector<VectorField>& phi) {
  const std::size_t m = algebra->dim();
  if (phi.size() != m) throw ShapeMismatch("phi must be defined on all basis indices");
  const Vars& vars = phi.empty() ? Vars() : phi[0].vars();
  const std::size_t n = vars.size();

  // One block of linear conditions per derivation component: clear the common
  // denominator, then equate coefficients of every monomial.
  std::vector<std::vector<Rational>> eq_rows;
  for (std::size_t c = 0; c < n; ++c) {
    Polynomial common = Polynomial::constant(vars, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
      const Polynomial& d = phi[i].coeff(c).den();
      const Polynomial g = Polynomial::gcd(common, d);
      common = common * Polynomial::div_exact(d, g);
    }
    std::map<Monomial, std::vector<Rational>, GrlexGreater> per_monomial;
    for (std::size_t i = 0; i < m; ++i) {
      const RationalFunction& f = phi[i].coeff(c);
      if (f.is_zero()) continue;
      const Polynomial g = f.num() * Polynomial::div_exact(common, f.den());
      for (const auto& [mono, coef] : g.terms()) {
        auto it = per_monomial.find(mono);
        if (it == per_monomial.end())
          it = per_monomial.emplace(mono, std::vector<Rational>(m, Rational(0))).first;
        it->second[i] = coef;
      }
    }
    for (auto& [mono, row] : per_monomial) eq_rows.push_back(row);
  }

  Matrix<Rational> sys = eq_rows.empty() ? Matrix<Rational>(0, m, Rational(0))
                                         : Matrix<Rational>::from_rows(eq_rows, Rational(0));
  const Matrix<Rational> basis = nullspace(sys);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  return span(algebra, rows, Rational(0));
}

std::size_t module_rank(const std::vector<VectorField>& phi) {
  if (phi.empty()) return 0;
  const Vars& vars = phi[0].vars();
  Matrix<RationalFunction> mat(phi.size(), vars.size(), RationalFunction::zero(vars));
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) mat.at(i, j) = phi[i].coeff(j);
  return rank(mat);
}

TildeResult tilde_subalgebra(const AlgebraPtr& algebra, const std::vector<VectorField>& phi) {
  const std::size_t m = algebra->dim();
  if (phi.size() != m) throw ShapeMismatch("phi must be defined on all basis indices");
  const Vars& vars = phi[0].vars();
  const RationalFunction zero = RationalFunction::zero(vars);

  // L~ is the left null space of the coefficient matrix of phi.
  Matrix<RationalFunction> mat(vars.size(), m, zero);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) mat.at(j, i) = phi[i].coeff(j);
  const Matrix<RationalFunction> null = nullspace(mat);

  std::vector<std::vector<RationalFunction>> rows;
  for (std::size_t i = 0; i < null.rows(); ++i) rows.push_back(null.row(i));
  TildeResult out{span(algebra, rows, zero), 0,
                  Subspace<Rational>{algebra, Matrix<Rational>(0, m, Rational(0))}};
  out.codim = m - out.basis.dim();

  const Matrix<Rational> consts = constant_vectors_in_rowspan(out.basis.rows);
  std::vector<std::vector<Rational>> crows;
  for (std::size_t i = 0; i < consts.rows(); ++i) crows.push_back(consts.row(i));
  out.constant_intersection = span(algebra, crows, Rational(0));
  return out;
}

} // namespace liederiv
