#pragma once

// Fixtures, random generators and brute-force oracles shared by the unit and
// acceptance tests. Nothing here calls the routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "relufibre/group.hpp"
#include "relufibre/param.hpp"
#include "relufibre/random.hpp"

namespace support {

using namespace relufibre;

inline RatVec ints(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Parameter F1() {
  return Parameter::single(ints({1, 1, 1}), {ints({1, 1}), ints({-1, 0}), ints({0, -1})},
                           ints({-2, -1, -1}), Rat(-6));
}

inline Parameter F2() {
  return Parameter::single(ints({1, 1, 1}), {ints({-1, -1}), ints({1, 0}), ints({0, 1})},
                           ints({2, 1, 1}), Rat(-10));
}

inline Parameter T1() {
  return Parameter::single(ints({0, 0, 0}), {ints({1, 2, 3}), ints({4, 5, 6}), ints({7, 8, 9})},
                           ints({1, -2, 3}), Rat(5));
}

inline Parameter T2() {
  return Parameter::single(ints({2, 3, -1}), {ints({4, 4, 4}), ints({1, 1, 1}), ints({5, 2, 1})},
                           ints({0, 0, 0}), Rat(0));
}

inline Parameter T3() {
  return Parameter::single(ints({1, 1, -1}), {ints({2, 4, 0}), ints({1, 1, 3}), ints({0, 0, 0})},
                           ints({7, 2, 3}), Rat(7));
}

inline Parameter T4() {
  return Parameter::single(ints({1, 1, -1}),
                           {ints({0, 36, 0}), ints({1, 7, 3}), ints({10, 5, 15})},
                           ints({63, 2, 45}), Rat(8));
}

/// Straight evaluation of M relu(A x + b) + c with raw GMP rationals.
inline std::vector<mpq_class> oracle_eval(const Parameter& p, const std::vector<mpq_class>& x) {
  std::vector<mpq_class> y(p.k());
  for (std::size_t t = 0; t < p.k(); ++t) y[t] = p.c()[t].raw();
  for (std::size_t i = 0; i < p.n(); ++i) {
    mpq_class z = p.b()[i].raw();
    for (std::size_t j = 0; j < p.m(); ++j) z += p.A()(i, j).raw() * x[j];
    if (sgn(z) <= 0) continue;
    for (std::size_t t = 0; t < p.k(); ++t) y[t] += p.M()(t, i).raw() * z;
  }
  return y;
}

inline std::vector<mpq_class> random_point(Rng& rng, std::size_t m) {
  std::vector<mpq_class> x(m);
  for (auto& xi : x) {
    xi = mpq_class(rng.uniform(-500, 500), rng.uniform(1, 7));
    xi.canonicalize();
  }
  return x;
}

inline bool oracle_agree(const Parameter& p, const Parameter& q, Rng& rng, int points) {
  for (int s = 0; s < points; ++s) {
    auto x = random_point(rng, p.m());
    if (oracle_eval(p, x) != oracle_eval(q, x)) return false;
  }
  return true;
}

inline Rat random_entry(Rng& rng, long lo, long hi) { return Rat(rng.uniform(lo, hi)); }

inline Parameter random_parameter(Rng& rng, std::size_t m, std::size_t n, std::size_t k, long lo,
                                  long hi) {
  Matrix M(k, n), A(n, m);
  RatVec b(n), c(k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t i = 0; i < n; ++i) M(t, i) = random_entry(rng, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) A(i, j) = random_entry(rng, lo, hi);
  for (auto& x : b) x = random_entry(rng, lo, hi);
  for (auto& x : c) x = random_entry(rng, lo, hi);
  return Parameter(std::move(M), std::move(A), std::move(b), std::move(c));
}

/// Random parameter with planted degeneracies: duplicated or scaled rows,
/// negated rows, zero out-weights, zero linear parts and all-zero neurons.
inline Parameter structured_parameter(Rng& rng, std::size_t m, std::size_t n, std::size_t k,
                                      long lo, long hi) {
  Parameter p = random_parameter(rng, m, n, k, lo, hi);
  const RatVec zero_k(k), zero_m(m);
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng.uniform(0, 9)) {
      case 0:
        if (i > 0) {
          auto src = p.row(rng.index(i));
          p.set_row(i, src.scaled(Rat(rng.uniform(1, 4), rng.uniform(1, 3))));
        }
        break;
      case 1:
        if (i > 0) p.set_row(i, p.row(rng.index(i)).negated());
        break;
      case 2:
        p.set_out(i, zero_k);
        break;
      case 3:
        p.set_row(i, AffRow{zero_m, random_entry(rng, lo, hi)});
        break;
      case 4:
        p.set_out(i, zero_k);
        p.set_row(i, AffRow{zero_m, Rat(0)});
        break;
      default:
        break;
    }
  }
  return p;
}

/// Random element of H_n with scales p/q, 1 <= p, q <= 6.
inline GroupElement random_group_element(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  RatVec scale;
  for (std::size_t i = 0; i < n; ++i) scale.emplace_back(rng.uniform(1, 6), rng.uniform(1, 6));
  return GroupElement(std::move(perm), std::move(scale));
}

/// Every transposition (i j) admitting scales d_i, d_j > 0 that fix theta.
/// The scale at i must carry row j onto row i, so it is the ratio of the
/// first nonzero coordinate; d_j follows from the out-weights.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_pairs(const Parameter& theta) {
  std::set<std::pair<std::size_t, std::size_t>> found;
  const std::size_t n = theta.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (theta.neuron_is_zero(i) || theta.neuron_is_zero(j)) continue;
      auto ri = theta.row(i).concat(), rj = theta.row(j).concat();
      std::vector<Rat> candidates;
      for (std::size_t c = 0; c < ri.size(); ++c)
        if (!rj[c].is_zero()) {
          candidates.push_back(ri[c] / rj[c]);
          break;
        }
      if (candidates.empty()) {
        // Both rows zero: the scale is pinned by the out-weights instead.
        auto oi = theta.out(i), oj = theta.out(j);
        for (std::size_t t = 0; t < oi.size(); ++t)
          if (!oi[t].is_zero()) {
            candidates.push_back(oj[t] / oi[t]);
            break;
          }
      }
      for (const Rat& di : candidates) {
        if (di.sign() <= 0) continue;
        std::vector<std::size_t> perm(n);
        for (std::size_t x = 0; x < n; ++x) perm[x] = x;
        std::swap(perm[i], perm[j]);
        RatVec scale(n, Rat(1));
        scale[i] = di;
        scale[j] = di.inverse();
        if (act(GroupElement(perm, scale), theta) == theta) found.insert({i, j});
      }
    }
  }
  return found;
}

/// All nonempty subsets S with sum_{i in S} M[t][i] a_i = 0 for every t,
/// by bitmask, sorted shortlex.
inline std::vector<std::vector<std::size_t>> brute_force_flips(const Parameter& theta) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = theta.n();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t t = 0; t < theta.k() && ok; ++t)
      for (std::size_t j = 0; j < theta.m() && ok; ++j) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) s += theta.M()(t, i).raw() * theta.A()(i, j).raw();
        ok = sgn(s) == 0;
      }
    if (!ok) continue;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace support
