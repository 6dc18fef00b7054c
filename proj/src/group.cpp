#include "relufibre/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "relufibre/error.hpp"

namespace relufibre {

namespace {

void check_n(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                "group element acts on " + std::to_string(a) +
                    " units, parameter has " + std::to_string(b));
}

// Scale d > 0 carrying neuron (src_out, src_row) onto (dst_out, dst_row):
// d * src_row == dst_row and src_out == d * dst_out.
std::optional<Rat> neuron_scale(const RatVec& src_out, const AffRow& src_row,
                                const RatVec& dst_out, const AffRow& dst_row) {
  if (!src_row.is_zero()) {
    auto d = semi_dep_ratio(src_row, dst_row);
    if (!d || scaled(dst_out, *d) != src_out) return std::nullopt;
    return d;
  }
  if (!dst_row.is_zero()) return std::nullopt;
  return positive_ratio(dst_out, src_out);
}

}  // namespace

GroupElement::GroupElement(std::vector<std::size_t> perm, RatVec scale)
    : perm_(std::move(perm)), scale_(std::move(scale)) {
  if (perm_.size() != scale_.size())
    throw Error(ErrorCode::DimensionMismatch,
                "permutation and scale lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p])
      throw Error(ErrorCode::Precondition, "perm is not a bijection");
    seen[p] = true;
  }
  for (const auto& d : scale_)
    if (d.sign() <= 0)
      throw Error(ErrorCode::Precondition, "scale " + d.str() + " is not positive");
}

GroupElement GroupElement::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return GroupElement(std::move(perm), RatVec(n, Rat(1)));
}

std::vector<std::size_t> GroupElement::inverse_perm() const {
  std::vector<std::size_t> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
  return inv;
}

Parameter act(const GroupElement& g, const Parameter& theta) {
  check_n(g.n(), theta.n());
  Parameter out = theta;
  auto inv = g.inverse_perm();
  for (std::size_t i = 0; i < theta.n(); ++i) {
    const std::size_t src = inv[i];
    const Rat& d = g.scale()[i];
    out.set_out(i, scaled(theta.out(src), d.inverse()));
    out.set_row(i, theta.row(src).scaled(d));
  }
  return out;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  check_n(g1.n(), g2.n());
  const std::size_t n = g1.n();
  auto inv1 = g1.inverse_perm();
  std::vector<std::size_t> perm(n);
  RatVec scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = g1.perm()[g2.perm()[i]];
    scale[i] = g1.scale()[i] * g2.scale()[inv1[i]];
  }
  return GroupElement(std::move(perm), std::move(scale));
}

GroupElement inverse(const GroupElement& g) {
  const std::size_t n = g.n();
  RatVec scale(n);
  for (std::size_t i = 0; i < n; ++i) scale[i] = g.scale()[g.perm()[i]].inverse();
  return GroupElement(g.inverse_perm(), std::move(scale));
}

GroupElement PairGenerator::element(std::size_t n) const {
  auto e = GroupElement::identity(n);
  auto perm = e.perm();
  auto scale = e.scale();
  std::swap(perm[i], perm[j]);
  scale[i] = lambda.inverse();
  scale[j] = lambda;
  return GroupElement(std::move(perm), std::move(scale));
}

StabilizerDescription stabilizer(const Parameter& theta) {
  StabilizerDescription desc;
  const std::size_t n = theta.n();
  std::vector<bool> zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    zero[i] = theta.neuron_is_zero(i);
    if (zero[i]) desc.zero_block.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (zero[i]) continue;
    const auto out_i = theta.out(i);
    const auto row_i = theta.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (zero[j]) continue;
      const auto out_j = theta.out(j);
      const auto row_j = theta.row(j);
      std::optional<Rat> lambda;
      if (!row_i.is_zero()) {
        lambda = semi_dep_ratio(row_i, row_j);
        if (lambda && scaled(out_j, *lambda) != out_i) lambda.reset();
      } else if (row_j.is_zero()) {
        lambda = positive_ratio(out_j, out_i);
      }
      if (!lambda) continue;
      PairGenerator gen{i, j, *lambda};
      if (act(gen.element(n), theta) != theta)
        throw std::logic_error("stabilizer generator does not fix parameter");
      desc.pairs.push_back(std::move(gen));
    }
  }
  return desc;
}

StabilizerDescription stabilizer_rows(const Parameter& theta) {
  StabilizerDescription desc;
  const std::size_t n = theta.n();
  std::vector<AffRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(theta.row(i));
    if (rows.back().is_zero()) desc.zero_block.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto lambda = semi_dep_ratio(rows[i], rows[j]))
        desc.pairs.push_back({i, j, *lambda});
    }
  }
  return desc;
}

std::optional<GroupElement> same_orbit(const Parameter& theta1,
                                       const Parameter& theta2) {
  if (theta1.arch() != theta2.arch())
    throw Error(ErrorCode::DimensionMismatch,
                "architectures differ: " + to_string(theta1.arch()) + " vs " +
                    to_string(theta2.arch()));
  if (theta1.c() != theta2.c()) return std::nullopt;
  const std::size_t n = theta1.n();
  // Single-neuron compatibility is an orbit relation of D_n^+ on neuron
  // triples, so greedy matching succeeds exactly when a matching exists.
  std::vector<RatVec> src_out(n), dst_out(n);
  std::vector<AffRow> src_row(n), dst_row(n);
  for (std::size_t i = 0; i < n; ++i) {
    src_out[i] = theta1.out(i);
    src_row[i] = theta1.row(i);
    dst_out[i] = theta2.out(i);
    dst_row[i] = theta2.row(i);
  }
  std::vector<bool> used(n, false);
  std::vector<std::size_t> perm(n);
  RatVec scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < n && !matched; ++j) {
      if (used[j]) continue;
      if (auto d = neuron_scale(src_out[j], src_row[j], dst_out[i], dst_row[i])) {
        used[j] = true;
        perm[j] = i;
        scale[i] = *d;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  GroupElement g(std::move(perm), std::move(scale));
  if (act(g, theta1) != theta2)
    throw std::logic_error("orbit witness does not verify");
  return g;
}

}  // namespace relufibre
