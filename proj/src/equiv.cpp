#include "relufibre/equiv.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "relufibre/error.hpp"

namespace relufibre {

namespace {

void check_neuron(const Parameter& theta, std::size_t i) {
  if (i >= theta.n())
    throw Error(ErrorCode::IndexOutOfRange,
                "neuron index " + std::to_string(i + 1) + " outside 1.." +
                    std::to_string(theta.n()));
}

std::string residual_text(const Matrix& r) {
  std::string s;
  for (std::size_t t = 0; t < r.rows(); ++t) {
    if (t) s += "; ";
    s += to_string(r.row(t));
  }
  return s;
}

const Parameter& certified(const Parameter& before, const Parameter& after) {
  if (!equivalent(before, after).equivalent)
    throw std::logic_error("symmetry move changed the realized function");
  return after;
}

}  // namespace

std::optional<EquivalenceCertificate> equivalent_k1(const Parameter& theta1,
                                                    const Parameter& theta2) {
  if (theta1.k() != 1 || theta2.k() != 1)
    throw Error(ErrorCode::Precondition, "equivalent_k1 needs k = 1");
  EquivalenceCertificate cert;
  cert.difference = minimal_form(ominus(theta1, theta2));
  const auto& diff = cert.difference;
  const std::size_t m = theta1.m();

  if (diff.zero_count() == diff.n()) {
    if (!diff.C.is_zero()) return std::nullopt;
    cert.kind = EquivalenceCertificate::Kind::Zero;
    cert.sum_a = RatVec(m);
    cert.sum_b_plus_C = Rat(0);
    return cert;
  }

  // Surviving rows are pairwise semi-independent, so each +row has at most
  // one partner -row equal to its negation.
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < diff.n(); ++i) {
    if (diff.u[i] > 0) plus.push_back(i);
    if (diff.u[i] < 0) minus.push_back(i);
  }
  if (plus.size() != minus.size()) return std::nullopt;
  std::vector<bool> used(diff.n(), false);
  RatVec sum_a(m);
  Rat sum_b = diff.C;
  for (auto p : plus) {
    const AffRow target = diff.rows[p].negated();
    auto it = std::find_if(minus.begin(), minus.end(), [&](std::size_t q) {
      return !used[q] && diff.rows[q] == target;
    });
    if (it == minus.end()) return std::nullopt;
    used[*it] = true;
    cert.pairs.emplace_back(p, *it);
    sum_a = add(sum_a, diff.rows[p].a);
    sum_b += diff.rows[p].b;
  }
  if (!is_zero(sum_a) || !sum_b.is_zero()) return std::nullopt;
  cert.kind = EquivalenceCertificate::Kind::Mirrored;
  cert.sum_a = std::move(sum_a);
  cert.sum_b_plus_C = sum_b;
  return cert;
}

EquivalenceResult equivalent(const Parameter& theta1, const Parameter& theta2) {
  if (theta1.m() != theta2.m() || theta1.k() != theta2.k())
    throw Error(ErrorCode::DimensionMismatch,
                "equivalence needs equal m and k: " + to_string(theta1.arch()) +
                    " vs " + to_string(theta2.arch()));
  EquivalenceResult result;
  result.equivalent = true;
  for (std::size_t t = 0; t < theta1.k(); ++t) {
    auto cert = equivalent_k1(project(theta1, t), project(theta2, t));
    if (!cert) result.equivalent = false;
    result.per_output.push_back(std::move(cert));
  }
  return result;
}

Matrix flip_residual(const Parameter& theta, const std::vector<std::size_t>& subset) {
  Matrix r(theta.k(), theta.m());
  for (auto i : subset) {
    check_neuron(theta, i);
    for (std::size_t t = 0; t < theta.k(); ++t) {
      const Rat& w = theta.M()(t, i);
      if (w.is_zero()) continue;
      for (std::size_t j = 0; j < theta.m(); ++j) r(t, j) += w * theta.A()(i, j);
    }
  }
  return r;
}

Parameter flip(const Parameter& theta, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw Error(ErrorCode::Precondition, "flip needs a nonempty set");
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::Precondition, "flip set has repeated indices");
  Matrix residual = flip_residual(theta, sorted);
  bool zero = true;
  for (std::size_t t = 0; t < residual.rows(); ++t) zero = zero && is_zero(residual.row(t));
  if (!zero)
    throw Error(ErrorCode::Precondition,
                "flip precondition violated, residual " + residual_text(residual));

  Parameter out = theta;
  RatVec c = theta.c();
  for (auto i : sorted) {
    out.set_row(i, theta.row(i).negated());
    for (std::size_t t = 0; t < theta.k(); ++t) c[t] += theta.M()(t, i) * theta.b()[i];
  }
  out.set_c(c);
  return certified(theta, out);
}

std::vector<std::vector<std::size_t>> flip_subsets(const Parameter& theta,
                                                   std::size_t width_cap) {
  const std::size_t n = theta.n(), k = theta.k(), m = theta.m();
  if (n > width_cap)
    throw Error(ErrorCode::WidthCapExceeded,
                "flip subset enumeration refused: n = " + std::to_string(n) +
                    " exceeds width cap " + std::to_string(width_cap));
  if (n >= 63) throw Error(ErrorCode::WidthCapExceeded, "n too large for enumeration");

  // Per-neuron contributions M[t][i] a_i, flattened to k*m entries.
  std::vector<RatVec> contrib(n, RatVec(k * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j)
        contrib[i][t * m + j] = theta.M()(t, i) * theta.A()(i, j);

  // Gray-code walk: one neuron toggles per step.
  std::vector<std::uint64_t> hits;
  RatVec running(k * m);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t prev = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::uint64_t gray = step ^ (step >> 1);
    const std::uint64_t changed = gray ^ prev;
    const auto bit = static_cast<std::size_t>(std::countr_zero(changed));
    const bool entering = (gray & changed) != 0;
    for (std::size_t e = 0; e < k * m; ++e) {
      if (contrib[bit][e].is_zero()) continue;
      if (entering)
        running[e] += contrib[bit][e];
      else
        running[e] -= contrib[bit][e];
    }
    prev = gray;
    if (is_zero(running)) hits.push_back(gray);
  }

  std::vector<std::vector<std::size_t>> out;
  out.reserve(hits.size());
  for (auto mask : hits) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

Parameter collapse_pair(const Parameter& theta, std::size_t i, std::size_t j) {
  check_neuron(theta, i);
  check_neuron(theta, j);
  if (i == j) throw Error(ErrorCode::Precondition, "collapse needs two distinct neurons");
  auto mu = semi_dep_ratio(theta.row(i), theta.row(j));
  if (!mu)
    throw Error(ErrorCode::Precondition,
                "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                    " are not positively proportional");
  Parameter out = theta;
  out.set_out(i, add(theta.out(i), scaled(theta.out(j), *mu)));
  out.set_out(j, RatVec(theta.k()));
  return certified(theta, out);
}

Parameter absorb_zero_row(const Parameter& theta, std::size_t i) {
  check_neuron(theta, i);
  if (!is_zero(theta.A().row(i)))
    throw Error(ErrorCode::Precondition,
                "neuron " + std::to_string(i + 1) + " has a nonzero linear part");
  Parameter out = theta;
  const Rat active = relu(theta.b()[i]);
  out.set_c(add(theta.c(), scaled(theta.out(i), active)));
  out.set_out(i, RatVec(theta.k()));
  out.set_row(i, {RatVec(theta.m()), Rat(0)});
  return certified(theta, out);
}

}  // namespace relufibre
