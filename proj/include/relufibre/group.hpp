#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relufibre/param.hpp"

namespace relufibre {

/// An element of H_n: a permutation pi of the hidden units composed with a
/// positive diagonal scaling d. Acting on a parameter, neuron i of the result
/// is (out_{pi^-1(i)} / d_i, d_i a_{pi^-1(i)}, d_i b_{pi^-1(i)}).
class GroupElement {
 public:
  /// `perm[i]` is the zero-based image pi(i). Throws Error(Precondition) if
  /// perm is not a bijection or a scale is not positive.
  GroupElement(std::vector<std::size_t> perm, RatVec scale);

  static GroupElement identity(std::size_t n);

  std::size_t n() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const RatVec& scale() const { return scale_; }
  std::vector<std::size_t> inverse_perm() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::size_t> perm_;
  RatVec scale_;
};

Parameter act(const GroupElement& g, const Parameter& theta);
/// act(compose(g1, g2), theta) == act(g1, act(g2, theta)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// A transposition (i j) with the forced scale: the element it induces has
/// d_i = 1/lambda and d_j = lambda.
struct PairGenerator {
  std::size_t i;
  std::size_t j;
  Rat lambda;

  GroupElement element(std::size_t n) const;
  friend bool operator==(const PairGenerator&, const PairGenerator&) = default;
};

/// Stab = <pairs> x H_{n'} where n' = zero_block.size().
struct StabilizerDescription {
  std::vector<PairGenerator> pairs;
  std::vector<std::size_t> zero_block;

  bool trivial() const { return pairs.empty() && zero_block.empty(); }
};

/// Pairs {i, j} outside the zero block with (a_j, b_j) = lambda (a_i, b_i)
/// and out_i = lambda out_j for one lambda > 0. Each generator is checked to
/// fix theta before it is returned.
StabilizerDescription stabilizer(const Parameter& theta);

/// Stabilizer of (A, b) alone: zero rows form the zero block, positively
/// proportional nonzero rows form pairs with (a_j, b_j) = lambda (a_i, b_i).
StabilizerDescription stabilizer_rows(const Parameter& theta);

/// A g with act(g, theta1) == theta2, or nothing. Deterministic: target
/// neurons are matched in index order to the lowest compatible source.
std::optional<GroupElement> same_orbit(const Parameter& theta1,
                                       const Parameter& theta2);

}  // namespace relufibre
