#include "relufibre/canon.hpp"

#include <algorithm>

#include "relufibre/error.hpp"

namespace relufibre {

namespace {

void require_single_output(const Parameter& theta) {
  if (theta.k() != 1)
    throw Error(ErrorCode::Precondition,
                "minimal form needs k = 1, got k = " + std::to_string(theta.k()));
}

}  // namespace

std::size_t MinimalForm::zero_count() const {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), 0));
}

Parameter MinimalForm::to_parameter() const {
  const std::size_t n = u.size();
  Matrix M(1, n), A(n, m);
  RatVec b(n);
  for (std::size_t i = 0; i < n; ++i) {
    M(0, i) = Rat(u[i]);
    for (std::size_t j = 0; j < m; ++j) A(i, j) = rows[i].a[j];
    b[i] = rows[i].b;
  }
  return Parameter(std::move(M), std::move(A), std::move(b), {C});
}

MinimalForm minimal_form(const Parameter& theta) {
  require_single_output(theta);
  const std::size_t n = theta.n(), m = theta.m();
  MinimalForm mf;
  mf.m = m;
  mf.C = theta.c()[0];

  // Absorb rows with zero linear part, drop rows with zero out-weight.
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < n; ++i) {
    const Rat& v = theta.M()(0, i);
    if (is_zero(theta.A().row(i))) {
      mf.C += v * relu(theta.b()[i]);
      continue;
    }
    if (v.is_zero()) continue;
    alive.push_back(i);
  }

  // Merge semi-dependence classes; the representative is the lowest index.
  // A class with total coefficient s contributes |s| (a_r | b_r) with sign s.
  std::vector<AffRow> pos, neg;
  std::vector<bool> taken(n, false);
  for (std::size_t idx = 0; idx < alive.size(); ++idx) {
    const std::size_t r = alive[idx];
    if (taken[r]) continue;
    const AffRow rep = theta.row(r);
    Rat s = theta.M()(0, r);
    for (std::size_t jdx = idx + 1; jdx < alive.size(); ++jdx) {
      const std::size_t j = alive[jdx];
      if (taken[j]) continue;
      if (auto mu = semi_dep_ratio(rep, theta.row(j))) {
        s += theta.M()(0, j) * *mu;
        taken[j] = true;
      }
    }
    if (s.sign() > 0)
      pos.push_back(rep.scaled(s));
    else if (s.sign() < 0)
      neg.push_back(rep.scaled(-s));
  }

  auto descending = [](const AffRow& x, const AffRow& y) {
    return lex_cmp(x, y) > 0;
  };
  std::sort(pos.begin(), pos.end(), descending);
  std::sort(neg.begin(), neg.end(), descending);

  mf.u.reserve(n);
  mf.rows.reserve(n);
  for (auto& row : pos) {
    mf.u.push_back(1);
    mf.rows.push_back(std::move(row));
  }
  for (auto& row : neg) {
    mf.u.push_back(-1);
    mf.rows.push_back(std::move(row));
  }
  while (mf.u.size() < n) {
    mf.u.push_back(0);
    mf.rows.push_back({RatVec(m), Rat(0)});
  }
  return mf;
}

std::size_t zero_factor_rank(const Parameter& theta) {
  return minimal_form(theta).zero_count();
}

Reduction zero_factor_reduce(const Parameter& theta) {
  auto mf = minimal_form(theta);
  const std::size_t width = mf.n() - mf.zero_count();
  if (width == 0) return ZeroReduction{mf.C};
  MinimalForm reduced;
  reduced.m = mf.m;
  reduced.C = mf.C;
  reduced.u.assign(mf.u.begin(), mf.u.begin() + static_cast<std::ptrdiff_t>(width));
  reduced.rows.assign(mf.rows.begin(),
                      mf.rows.begin() + static_cast<std::ptrdiff_t>(width));
  return reduced.to_parameter();
}

}  // namespace relufibre
