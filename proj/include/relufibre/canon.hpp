#pragma once

#include <variant>
#include <vector>

#include "relufibre/param.hpp"

namespace relufibre {

/// Canonical representative of a single-output parameter under the
/// equivalences: zero out-weights, merged positively proportional rows, and
/// absorbed rows with zero linear part.
///
/// u has entries in {+1, -1, 0}; u_i == 0 exactly when rows[i] is zero.
/// The +1 block precedes the -1 block precedes the zero block, and each
/// signed block is sorted in non-increasing lexicographic order of (a|b).
struct MinimalForm {
  std::size_t m = 1;
  std::vector<int> u;
  std::vector<AffRow> rows;
  Rat C;

  std::size_t n() const { return u.size(); }
  std::size_t zero_count() const;
  /// (u, A, b, C) as a single-output parameter.
  Parameter to_parameter() const;

  friend bool operator==(const MinimalForm&, const MinimalForm&) = default;
};

MinimalForm minimal_form(const Parameter& theta);

/// Number of zero entries of u in the minimal form.
std::size_t zero_factor_rank(const Parameter& theta);

/// The reduction when every factor is zero: only the constant survives.
struct ZeroReduction {
  Rat C;
  friend bool operator==(const ZeroReduction&, const ZeroReduction&) = default;
};

using Reduction = std::variant<Parameter, ZeroReduction>;

/// The minimal form with its zero rows deleted.
Reduction zero_factor_reduce(const Parameter& theta);

}  // namespace relufibre
