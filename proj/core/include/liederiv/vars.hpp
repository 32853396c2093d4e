#ifndef LIEDERIV_VARS_HPP
#define LIEDERIV_VARS_HPP

#include <memory>
#include <string>
#include <vector>

#include "liederiv/errors.hpp"

namespace liederiv {

/// Shared, immutable ordered list of variable names. The declaration order
/// fixes the graded-lexicographic monomial order used everywhere.
class Vars {
public:
  Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Vars(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  /// Index of a variable name, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == n) return i;
    return npos;
  }

  friend bool operator==(const Vars& a, const Vars& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Vars& a, const Vars& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_vars(const Vars& a, const Vars& b) {
  if (a != b) throw VariableMismatch();
}

/// Convenience: x1..xk.
inline Vars make_x_vars(std::size_t k) {
  std::vector<std::string> n;
  n.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) n.push_back("x" + std::to_string(i));
  return Vars(std::move(n));
}

} // namespace liederiv

#endif
