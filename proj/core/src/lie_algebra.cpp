#include "liederiv/lie_algebra.hpp"

#include <algorithm>

namespace liederiv {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       std::map<std::pair<std::size_t, std::size_t>, Terms> constants)
    : names_(std::move(basis_names)), constants_(std::move(constants)) {
  const std::size_t m = names_.size();
  if (m == 0) throw InvalidInput("algebra dimension must be positive");
  {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("basis names must be distinct");
  }
  for (auto& [ij, terms] : constants_) {
    const auto [i, j] = ij;
    if (i >= j || j >= m) throw InvalidInput("bracket indices must satisfy i < j <= dim");
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (terms[t].first >= m) throw InvalidInput("bracket component index out of range");
      if (t > 0 && terms[t].first == terms[t - 1].first)
        throw InvalidInput("duplicate component in bracket terms");
      if (terms[t].second.is_zero())
        throw InvalidInput("zero coefficient stored in bracket terms");
    }
  }
  // Drop empty term lists so equality is structural.
  for (auto it = constants_.begin(); it != constants_.end();)
    it = it->second.empty() ? constants_.erase(it) : std::next(it);
}

std::size_t LieAlgebra::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InvalidInput("unknown basis name '" + name + "'");
}

std::vector<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  std::vector<Rational> out(dim(), Rational(0));
  if (i == j) return out;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find({i, j});
  if (it == constants_.end()) return out;
  for (const auto& [s, c] : it->second) out[s] = flip ? Rational(-c) : c;
  return out;
}

JacobiReport validate_jacobi(const LieAlgebra& L) {
  JacobiReport report;
  const std::size_t m = L.dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t t = j + 1; t < m; ++t) {
        std::vector<Rational> sum(m, Rational(0));
        auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
          // [[l_a, l_b], l_c]
          const std::vector<Rational> inner = L.bracket_basis(a, b);
          for (std::size_t s = 0; s < m; ++s) {
            if (inner[s].is_zero()) continue;
            const std::vector<Rational> outer = L.bracket_basis(s, c);
            for (std::size_t u = 0; u < m; ++u) sum[u] += inner[s] * outer[u];
          }
        };
        add_nested(i, j, t);
        add_nested(j, t, i);
        add_nested(t, i, j);
        for (std::size_t s = 0; s < m; ++s) {
          if (!sum[s].is_zero())
            report.violations.push_back(JacobiViolation{i, j, t, s, sum[s]});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

NilpotencyResult is_nilpotent_action(const AlgebraPtr& L, const Subspace<Rational>& L2) {
  if (*L2.algebra != *L) throw AlgebraMismatch();
  if (!bracket_closed(L2)) throw NotASubalgebra("L2 is not closed under bracket");

  const std::size_t m = L->dim();
  const Rational zero(0);
  // V_0 = L.
  std::vector<std::vector<Rational>> id;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> e(m, zero);
    e[i] = 1;
    id.push_back(std::move(e));
  }
  Subspace<Rational> V = span(L, id, zero);
  for (std::size_t step = 1; step <= m + 1; ++step) {
    std::vector<std::vector<Rational>> next;
    for (std::size_t b = 0; b < L2.rows.rows(); ++b) {
      for (std::size_t v = 0; v < V.rows.rows(); ++v) {
        LieElement<Rational> lb{L, L2.rows.row(b)};
        LieElement<Rational> lv{L, V.rows.row(v)};
        next.push_back(bracket(lb, lv).coeffs);
      }
    }
    const Subspace<Rational> W = span(L, next, zero);
    if (W.dim() == 0) return NilpotencyResult{true, step};
    if (W.dim() >= V.dim()) return NilpotencyResult{false, 0}; // chain stabilized above zero
    V = W;
  }
  return NilpotencyResult{false, 0};
}

} // namespace liederiv
