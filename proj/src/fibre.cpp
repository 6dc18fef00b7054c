#include "relufibre/fibre.hpp"

#include <functional>

#include "relufibre/error.hpp"
#include "relufibre/random.hpp"

namespace relufibre {

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s;
}

// First candidate that realizes the same function outside the orbit.
std::optional<Parameter> first_witness(const Parameter& theta,
                                       const std::vector<std::function<Parameter()>>& candidates) {
  for (const auto& make : candidates) {
    Parameter w = make();
    if (is_hidden_witness(theta, w)) return w;
  }
  return std::nullopt;
}

FibreVerdict not_isomorphic(Parameter witness, std::string reason) {
  FibreVerdict v;
  v.state = FibreVerdict::State::NotIsomorphic;
  v.witness = std::move(witness);
  v.reason = std::move(reason);
  return v;
}

}  // namespace

const char* to_string(Violation::Condition c) {
  switch (c) {
    case Violation::Condition::C1: return "C1";
    case Violation::Condition::C2: return "C2";
    case Violation::Condition::C3: return "C3";
  }
  return "?";
}

std::string Violation::describe() const {
  std::string s = std::string(to_string(condition)) + " on output " +
                  std::to_string(projection + 1) + ": ";
  switch (condition) {
    case Condition::C1:
      return s + "out-weight of neuron " + index_list(indices) + " is zero";
    case Condition::C2:
      return s + "rows " + index_list(indices) + " are linearly dependent";
    case Condition::C3: {
      std::string b;
      for (std::size_t i = 0; i < beta.size(); ++i)
        b += (i ? "," : "") + std::to_string(beta[i]);
      return s + "signed sum vanishes for beta = (" + b + ")";
    }
  }
  return s;
}

const char* to_string(FibreVerdict::State s) {
  switch (s) {
    case FibreVerdict::State::Isomorphic: return "isomorphic";
    case FibreVerdict::State::NotIsomorphic: return "not_isomorphic";
    case FibreVerdict::State::Unknown: return "unknown";
  }
  return "?";
}

GenericityResult genericity_certificate_k1(const Parameter& theta, std::size_t width_cap) {
  if (theta.k() != 1)
    throw Error(ErrorCode::Precondition, "genericity_certificate_k1 needs k = 1");
  const std::size_t n = theta.n(), m = theta.m();

  for (std::size_t i = 0; i < n; ++i)
    if (theta.M()(0, i).is_zero()) return Violation{Violation::Condition::C1, 0, {i}, {}};

  std::vector<AffRow> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(theta.row(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lin_dep(rows[i], rows[j])) return Violation{Violation::Condition::C2, 0, {i, j}, {}};

  if (n > width_cap)
    throw Error(ErrorCode::WidthCapExceeded,
                "sign-vector sweep refused: n = " + std::to_string(n) + " exceeds width cap " +
                    std::to_string(width_cap));

  std::vector<RatVec> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = scaled(theta.A().row(i), theta.M()(0, i));

  // Base-3 odometer over digits {0, +1, -1}; the running sum tracks
  // sum beta(i) w_i under single-digit updates.
  std::vector<int> digit(n, 0);
  RatVec sum(m);
  auto add_scaled = [&](std::size_t i, long factor) {
    for (std::size_t j = 0; j < m; ++j) sum[j] += w[i][j] * Rat(factor);
  };
  while (true) {
    std::size_t pos = 0;
    while (pos < n && digit[pos] == 2) {
      digit[pos] = 0;
      add_scaled(pos, 1);  // -1 -> 0
      ++pos;
    }
    if (pos == n) break;
    if (digit[pos] == 0) {
      digit[pos] = 1;
      add_scaled(pos, 1);  // 0 -> +1
    } else {
      digit[pos] = 2;
      add_scaled(pos, -2);  // +1 -> -1
    }
    std::size_t lead = 0;
    while (digit[lead] == 0) ++lead;
    if (digit[lead] != 1) continue;
    if (is_zero(sum)) {
      std::vector<int> beta(n);
      for (std::size_t i = 0; i < n; ++i) beta[i] = digit[i] == 2 ? -1 : digit[i];
      return Violation{Violation::Condition::C3, 0, {}, std::move(beta)};
    }
  }
  return std::nullopt;
}

GenericityResult genericity_certificate(const Parameter& theta, std::size_t width_cap) {
  for (std::size_t t = 0; t < theta.k(); ++t) {
    if (auto v = genericity_certificate_k1(project(theta, t), width_cap)) {
      v->projection = t;
      return v;
    }
  }
  return std::nullopt;
}

bool is_hidden_witness(const Parameter& theta, const Parameter& w) {
  if (theta.arch() != w.arch()) return false;
  return equivalent(theta, w).equivalent && !same_orbit(theta, w).has_value();
}

FibreVerdict verdict(const Parameter& theta, const WidthCaps& caps) {
  const std::size_t n = theta.n(), k = theta.k();

  // Nontrivial stabilizer of (A, b).
  auto rows_stab = stabilizer_rows(theta);
  for (auto i : rows_stab.zero_block) {
    Parameter w = theta;
    w.set_out(i, is_zero(theta.out(i)) ? RatVec(k, Rat(1)) : RatVec(k));
    if (is_hidden_witness(theta, w)) return not_isomorphic(std::move(w), "zero_row");
  }
  for (const auto& pair : rows_stab.pairs) {
    const std::size_t i = pair.i, j = pair.j;
    const Rat mu = pair.lambda;
    auto split = [&, i, j, mu] {
      Parameter w = theta;
      const RatVec total = add(theta.out(i), scaled(theta.out(j), mu));
      w.set_out(i, scaled(total, Rat(1, 2)));
      w.set_out(j, scaled(total, (mu * Rat(2)).inverse()));
      return w;
    };
    auto negate_silent = [&, j] {
      Parameter w = theta;
      w.set_row(j, theta.row(j).negated());
      return w;
    };
    std::vector<std::function<Parameter()>> candidates{
        [&, i, j] { return collapse_pair(theta, i, j); },
        [&, i, j] { return collapse_pair(theta, j, i); }, split};
    if (is_zero(theta.out(i)) && is_zero(theta.out(j))) candidates.push_back(negate_silent);
    if (auto w = first_witness(theta, candidates))
      return not_isomorphic(std::move(*w), "proportional_rows");
  }

  // Zero out-columns and rows with zero linear part.
  for (std::size_t i = 0; i < n; ++i) {
    if (theta.row(i).is_zero()) continue;
    if (is_zero(theta.out(i))) {
      Parameter w = theta;
      w.set_row(i, theta.row(i).negated());
      if (is_hidden_witness(theta, w)) return not_isomorphic(std::move(w), "zero_out");
    } else if (is_zero(theta.A().row(i))) {
      Parameter w = absorb_zero_row(theta, i);
      if (is_hidden_witness(theta, w)) return not_isomorphic(std::move(w), "zero_linear");
    }
  }

  auto violation = genericity_certificate(theta, caps.sweep);
  if (!violation) {
    FibreVerdict v;
    v.state = FibreVerdict::State::Isomorphic;
    v.reason = "certified";
    return v;
  }

  for (const auto& subset : flip_subsets(theta, caps.flips)) {
    Parameter w = flip(theta, subset);
    if (is_hidden_witness(theta, w)) return not_isomorphic(std::move(w), "flip");
  }

  FibreVerdict v;
  v.state = FibreVerdict::State::Unknown;
  v.reason = "uncertified";
  v.violation = std::move(violation);
  return v;
}

std::vector<GroupElement> random_elements(std::size_t n, std::size_t count, std::uint64_t seed) {
  static const Rat kGrid[] = {Rat(1, 8), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1),
                              Rat(3, 2), Rat(2),    Rat(3),    Rat(4),    Rat(8)};
  Rng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
    RatVec scale(n);
    for (auto& d : scale) d = kGrid[rng.index(std::size(kGrid))];
    out.emplace_back(std::move(perm), std::move(scale));
  }
  return out;
}

std::vector<Parameter> orbit_sample(const Parameter& theta, std::size_t count,
                                    std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::Precondition, "orbit sample count must be >= 1");
  std::vector<Parameter> out;
  out.reserve(count);
  for (const auto& g : random_elements(theta.n(), count, seed)) out.push_back(act(g, theta));
  return out;
}

}  // namespace relufibre
