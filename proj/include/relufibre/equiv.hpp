#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "relufibre/canon.hpp"
#include "relufibre/param.hpp"

namespace relufibre {

/// Proof that two single-output parameters realize the same function.
///
/// Zero: the minimal form of theta1 (-) theta2 has u = 0 and C = 0.
/// Mirrored: its nonzero rows come in (r, -r) pairs with u = (+1, -1), the
/// linear parts of the +rows sum to zero, and their biases sum to -C.
struct EquivalenceCertificate {
  enum class Kind { Zero, Mirrored };

  Kind kind = Kind::Zero;
  /// Zero-based (+row, -row) indices into `difference.rows`.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  RatVec sum_a;
  Rat sum_b_plus_C;
  MinimalForm difference;
};

std::optional<EquivalenceCertificate> equivalent_k1(const Parameter& theta1,
                                                    const Parameter& theta2);

struct EquivalenceResult {
  bool equivalent = false;
  /// One entry per output coordinate; empty where that coordinate differs.
  std::vector<std::optional<EquivalenceCertificate>> per_output;
};

/// Equivalent iff every projection pair is equivalent.
EquivalenceResult equivalent(const Parameter& theta1, const Parameter& theta2);

/// Sum over S of M[t][i] * a_i for every output t (a k x m matrix).
Matrix flip_residual(const Parameter& theta, const std::vector<std::size_t>& subset);

/// Negates the rows in S (zero-based indices) and moves sum M[t][i] b_i into
/// c_t. Requires a zero flip_residual; throws Error(Precondition) naming the
/// residual otherwise.
Parameter flip(const Parameter& theta, const std::vector<std::size_t>& subset);

/// Default cap on n for the 2^n subset enumeration.
inline constexpr std::size_t kDefaultFlipWidthCap = 22;

/// Every nonempty S with a zero flip residual, in shortlex order. Throws
/// Error(WidthCapExceeded) when n > width_cap.
std::vector<std::vector<std::size_t>> flip_subsets(
    const Parameter& theta, std::size_t width_cap = kDefaultFlipWidthCap);

/// Requires (a_j, b_j) = mu (a_i, b_i) with mu > 0. Folds out-column j into
/// column i: out_i += mu out_j, out_j = 0.
Parameter collapse_pair(const Parameter& theta, std::size_t i, std::size_t j);

/// Requires a_i = 0. c += out_i relu(b_i); out_i = 0; b_i = 0.
Parameter absorb_zero_row(const Parameter& theta, std::size_t i);

}  // namespace relufibre
