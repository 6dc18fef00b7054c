#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relufibre/equiv.hpp"
#include "relufibre/group.hpp"
#include "relufibre/param.hpp"

namespace relufibre {

/// Default cap on n for the (3^n - 1)/2 sign-vector sweep.
inline constexpr std::size_t kDefaultSweepWidthCap = 12;

struct WidthCaps {
  std::size_t sweep = kDefaultSweepWidthCap;
  std::size_t flips = kDefaultFlipWidthCap;
};

/// A failed genericity condition.
///   C1: some out-weight v_i is zero (`indices` = {i}).
///   C2: rows i and j are linearly dependent (`indices` = {i, j}).
///   C3: sum beta(i) v_i a_i = 0 for the nonzero sign vector `beta`.
struct Violation {
  enum class Condition { C1, C2, C3 };

  Condition condition = Condition::C1;
  std::size_t projection = 0;
  std::vector<std::size_t> indices;
  std::vector<int> beta;

  std::string describe() const;
};

const char* to_string(Violation::Condition c);

/// Empty when certified.
using GenericityResult = std::optional<Violation>;

/// Checks C1, C2 and the sign-vector sweep C3 on a k = 1 parameter. Sign
/// vectors are enumerated once per +/- pair (first nonzero entry +1) in
/// increasing base-3 order with neuron 1 least significant; the first
/// violation in that order is reported.
GenericityResult genericity_certificate_k1(const Parameter& theta,
                                           std::size_t width_cap = kDefaultSweepWidthCap);

/// Certified iff every projection is certified.
GenericityResult genericity_certificate(const Parameter& theta,
                                        std::size_t width_cap = kDefaultSweepWidthCap);

struct FibreVerdict {
  enum class State { Isomorphic, NotIsomorphic, Unknown };

  State state = State::Unknown;
  /// NotIsomorphic: a parameter realizing the same function outside the
  /// H_n orbit, checked before it is returned.
  std::optional<Parameter> witness;
  /// Which cascade step produced the witness.
  std::string reason;
  /// Unknown: the genericity condition that failed.
  std::optional<Violation> violation;
};

const char* to_string(FibreVerdict::State s);

/// True when w realizes the same function as theta but lies outside its orbit.
bool is_hidden_witness(const Parameter& theta, const Parameter& w);

FibreVerdict verdict(const Parameter& theta, const WidthCaps& caps = {});

/// Deterministic orbit members act(g, theta) with random permutations and
/// scales drawn from a fixed grid between 1/8 and 8.
std::vector<Parameter> orbit_sample(const Parameter& theta, std::size_t count,
                                    std::uint64_t seed);

/// The group elements used by orbit_sample.
std::vector<GroupElement> random_elements(std::size_t n, std::size_t count,
                                          std::uint64_t seed);

}  // namespace relufibre
