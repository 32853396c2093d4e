#include "liederiv/presets.hpp"

namespace liederiv {

namespace {

using SquareMat = std::vector<std::vector<Rational>>; // n x n over Q

SquareMat zero_mat(std::size_t n) { return SquareMat(n, std::vector<Rational>(n, Rational(0))); }

SquareMat unit_mat(std::size_t n, std::size_t i, std::size_t j, const Rational& c = Rational(1)) {
  SquareMat m = zero_mat(n);
  m[i][j] = c;
  return m;
}

SquareMat commutator(const SquareMat& a, const SquareMat& b) {
  const std::size_t n = a.size();
  SquareMat c = zero_mat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t t = 0; t < n; ++t) s += a[i][t] * b[t][j] - b[i][t] * a[t][j];
      c[i][j] = s;
    }
  return c;
}

// Coordinates of `target` in a linearly independent list of matrices.
std::vector<Rational> coordinates(const std::vector<SquareMat>& basis, const SquareMat& target) {
  const std::size_t n = basis.front().size();
  const std::size_t m = basis.size();
  Matrix<Rational> aug(n * n, m + 1, Rational(0));
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) aug.at(i * n + j, b) = basis[b][i][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aug.at(i * n + j, m) = target[i][j];
  const std::vector<std::size_t> pivots = rref(aug);
  std::vector<Rational> x(m, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m) throw Error("internal error: element outside the matrix span");
    x[pivots[r]] = aug.at(r, m);
  }
  return x;
}

AlgebraPtr algebra_from_matrices(std::vector<std::string> names,
                                 const std::vector<SquareMat>& mats) {
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms> constants;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      const std::vector<Rational> c = coordinates(mats, commutator(mats[i], mats[j]));
      LieAlgebra::Terms terms;
      for (std::size_t s = 0; s < c.size(); ++s)
        if (!c[s].is_zero()) terms.emplace_back(s, c[s]);
      if (!terms.empty()) constants[{i, j}] = std::move(terms);
    }
  }
  return std::make_shared<LieAlgebra>(std::move(names), std::move(constants));
}

Subspace<Rational> unit_span(const AlgebraPtr& L, const std::vector<std::size_t>& indices) {
  std::vector<std::vector<Rational>> rows;
  for (auto i : indices) {
    std::vector<Rational> e(L->dim(), Rational(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(L, rows, Rational(0));
}

} // namespace

EmbeddingProblem make_sln(std::size_t n) {
  if (n < 2) throw InvalidInput("sl_n requires n >= 2");
  std::vector<std::string> names;
  std::vector<SquareMat> mats;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> l1_indices;

  auto ename = [n](std::size_t i, std::size_t j) {
    const std::string sep = n > 9 ? "_" : "";
    return "E" + std::to_string(i + 1) + sep + std::to_string(j + 1);
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      names.push_back(ename(i, j));
      mats.push_back(unit_mat(n, i, j));
      const std::size_t idx = names.size() - 1;
      // L1: negative root vectors (i > j) and positive ones avoiding the last
      // simple root (j < n-1); complement: E_{i,n}.
      if (i > j || j + 1 < n)
        l1_indices.push_back(idx);
      else
        complement.push_back(idx);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    names.push_back("h" + std::to_string(i + 1));
    SquareMat h = zero_mat(n);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    mats.push_back(h);
    l1_indices.push_back(names.size() - 1);
  }

  AlgebraPtr L = algebra_from_matrices(std::move(names), mats);
  return EmbeddingProblem{L, unit_span(L, l1_indices), std::move(complement)};
}

EmbeddingProblem make_sl3_paper() {
  const std::vector<std::string> names = {"e_a", "e_ab", "h_a", "h_b", "e_b", "e_mb", "e_ma", "e_mab"};
  std::vector<SquareMat> mats;
  mats.push_back(unit_mat(3, 0, 1));               // e_a   = E12
  mats.push_back(unit_mat(3, 0, 2, Rational(-1))); // e_ab  = -E13
  SquareMat ha = zero_mat(3);
  ha[0][0] = 1;
  ha[1][1] = -1;
  mats.push_back(ha); // h_a = E11 - E22
  SquareMat hb = zero_mat(3);
  hb[1][1] = 1;
  hb[2][2] = -1;
  mats.push_back(hb);                              // h_b = E22 - E33
  mats.push_back(unit_mat(3, 1, 2));               // e_b   = E23
  mats.push_back(unit_mat(3, 2, 1));               // e_mb  = E32
  mats.push_back(unit_mat(3, 1, 0));               // e_ma  = E21
  mats.push_back(unit_mat(3, 2, 0, Rational(-1))); // e_mab = -E31

  AlgebraPtr L = algebra_from_matrices(names, mats);
  // L1 = <h_a, h_b, e_ma, e_mb, e_mab, e_b>, complement (e_a, e_ab).
  return EmbeddingProblem{L, unit_span(L, {2, 3, 6, 5, 7, 4}), {0, 1}};
}

AlgebraPtr make_abelian(std::size_t n) {
  if (n == 0) throw InvalidInput("abelian_n requires n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
  return std::make_shared<LieAlgebra>(std::move(names),
                                      std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms>{});
}

AlgebraPtr make_heisenberg() {
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms> constants;
  constants[{0, 1}] = {{2, Rational(1)}}; // [x, y] = z
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"x", "y", "z"}, std::move(constants));
}

AlgebraPtr make_borel2() {
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Terms> constants;
  constants[{0, 1}] = {{1, Rational(1)}}; // [h, e] = e
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"h", "e"}, std::move(constants));
}

EmbeddingProblem make_heisenberg_problem() {
  AlgebraPtr L = make_heisenberg();
  return EmbeddingProblem{L, unit_span(L, {1, 2}), {0}};
}

EmbeddingProblem make_borel2_problem() {
  AlgebraPtr L = make_borel2();
  return EmbeddingProblem{L, unit_span(L, {1}), {0}};
}

const std::vector<PresetInfo>& list_presets() {
  static const std::vector<PresetInfo> presets = {
      {"sl_n", true, true, "special linear algebra sl_n, embedding problem with k = n-1"},
      {"sl3_paper", false, true, "sl_3 fixture in the root basis (e_a .. e_mab), k = 2"},
      {"heisenberg", false, true, "3-dim Heisenberg algebra [x,y] = z, default problem k = 1"},
      {"abelian_n", true, false, "abelian algebra of dimension n"},
      {"borel2", false, true, "2-dim solvable [h,e] = e; its default problem is not nilpotent"},
  };
  return presets;
}

AlgebraPtr make_preset_algebra(const std::string& name, std::optional<std::size_t> param) {
  if (name == "sl_n") return make_sln(param.value_or(3)).algebra;
  if (name == "sl3_paper") return make_sl3_paper().algebra;
  if (name == "heisenberg") return make_heisenberg();
  if (name == "abelian_n" || name == "abelian") return make_abelian(param.value_or(2));
  if (name == "borel2") return make_borel2();
  throw UnknownPreset("unknown preset '" + name + "'");
}

EmbeddingProblem make_preset_problem(const std::string& name, std::optional<std::size_t> param) {
  if (name == "sl_n") return make_sln(param.value_or(3));
  if (name == "sl3_paper") return make_sl3_paper();
  if (name == "heisenberg") return make_heisenberg_problem();
  if (name == "borel2") return make_borel2_problem();
  throw UnknownPreset("preset '" + name + "' has no embedding problem");
}

} // namespace liederiv
