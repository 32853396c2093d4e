#ifndef LIEDERIV_TESTS_ORACLE_SPAN_HPP
#define LIEDERIV_TESTS_ORACLE_SPAN_HPP

#include <vector>

#include "liederiv/lie_algebra.hpp"

// Independent closure oracle: expands every pairwise bracket with the
// structure constants directly and tests span membership with its own plain
// Gaussian elimination (first non-zero pivot, no library linear algebra).
namespace liederiv::oracle {

using Row = std::vector<Rational>;

inline bool reduce_against(std::vector<Row>& rows, Row v) {
  for (auto& r : rows) {
    std::size_t lead = r.size();
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r[i].is_zero()) {
        lead = i;
        break;
      }
    if (lead == r.size()) continue;
    if (!v[lead].is_zero()) {
      const Rational f = v[lead] / r[lead];
      for (std::size_t i = 0; i < r.size(); ++i) v[i] -= f * r[i];
    }
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::vector<Row> echelon(std::vector<Row> rows) {
  std::vector<Row> out;
  for (auto& v : rows) {
    for (const auto& r : out) {
      std::size_t lead = r.size();
      for (std::size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) {
          lead = i;
          break;
        }
      if (lead != r.size() && !v[lead].is_zero()) {
        const Rational f = v[lead] / r[lead];
        for (std::size_t i = 0; i < r.size(); ++i) v[i] -= f * r[i];
      }
    }
    bool nz = false;
    for (const auto& x : v) nz = nz || !x.is_zero();
    if (nz) out.push_back(v);
  }
  return out;
}

inline Row bracket_rows(const LieAlgebra& L, const Row& a, const Row& b) {
  Row out(L.dim(), Rational(0));
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (a[i].is_zero() && b[i].is_zero()) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Rational f = a[i] * b[j];
      if (f.is_zero()) continue;
      const std::vector<Rational> c = L.bracket_basis(i, j);
      for (std::size_t s = 0; s < L.dim(); ++s) out[s] += f * c[s];
    }
  }
  return out;
}

inline bool closed(const LieAlgebra& L, const std::vector<Row>& rows) {
  std::vector<Row> ech = echelon(rows);
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (std::size_t q = p + 1; q < rows.size(); ++q) {
      if (!reduce_against(ech, bracket_rows(L, rows[p], rows[q]))) return false;
    }
  return true;
}

} // namespace liederiv::oracle

#endif
