#ifndef LIEDERIV_PRESETS_HPP
#define LIEDERIV_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liederiv/embedding.hpp"

namespace liederiv {

struct PresetInfo {
  std::string name;
  bool takes_parameter = false;
  bool has_problem = false;
  std::string description;
};

/// Registry: sl_n, sl3_paper, heisenberg, abelian_n, borel2.
const std::vector<PresetInfo>& list_presets();

/// sl_n with basis {E_ij (i != j), h_i = E_ii - E_{i+1,i+1}}; L1 spans the
/// Cartan, all negative root vectors and the positive ones not involving the
/// last simple root; complement (E_1n .. E_{n-1,n}), k = n - 1.
EmbeddingProblem make_sln(std::size_t n);

/// sl_3 in the basis (e_a, e_ab, h_a, h_b, e_b, e_mb, e_ma, e_mab) realized by
/// e_a = E12, e_b = E23, e_ab = -E13, e_ma = E21, e_mb = E32, e_mab = -E31,
/// h_a = E11-E22, h_b = E22-E33; L1 = <h_a, h_b, e_ma, e_mb, e_mab, e_b>,
/// complement (e_a, e_ab).
EmbeddingProblem make_sl3_paper();

AlgebraPtr make_abelian(std::size_t n);
AlgebraPtr make_heisenberg();
AlgebraPtr make_borel2();

/// Default problems: heisenberg L1 = <y, z> with complement (x); borel2
/// L1 = <e> with complement (h) (deliberately violates the nilpotency
/// hypothesis, so embedding it reports NotNilpotent).
EmbeddingProblem make_heisenberg_problem();
EmbeddingProblem make_borel2_problem();

/// Lookup by name; parameter used by sl_n / abelian_n. Throws UnknownPreset.
AlgebraPtr make_preset_algebra(const std::string& name, std::optional<std::size_t> param = {});
EmbeddingProblem make_preset_problem(const std::string& name, std::optional<std::size_t> param = {});

} // namespace liederiv

#endif
