#include <doctest.h>

#include "relufibre/equiv.hpp"
#include "relufibre/error.hpp"
#include "relufibre/group.hpp"
#include "relufibre/realize.hpp"
#include "support/support.hpp"

using namespace relufibre;
using namespace support;

namespace {

Parameter with_c(Parameter p, std::initializer_list<long> c) {
  p.set_c(ints(c));
  return p;
}

}  // namespace

TEST_CASE("F1 and F2 are mirrored") {
  auto cert = equivalent_k1(F1(), F2());
  REQUIRE(cert.has_value());
  CHECK(cert->kind == EquivalenceCertificate::Kind::Mirrored);
  CHECK(cert->pairs.size() == 3);
  CHECK(cert->sum_a == RatVec(2));
  CHECK(cert->sum_b_plus_C.is_zero());
  CHECK(cert->difference.C == Rat(4));
  for (auto [p, q] : cert->pairs) CHECK(cert->difference.rows[q] == cert->difference.rows[p].negated());

  CHECK_FALSE(equivalent_k1(F1(), with_c(F1(), {-5})).has_value());
  auto self = equivalent_k1(F1(), F1());
  REQUIRE(self.has_value());
  CHECK(self->kind == EquivalenceCertificate::Kind::Zero);
}

TEST_CASE("orbit members certify with Zero") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.index(6);
    Parameter theta = structured_parameter(rng, 1 + rng.index(3), n, 1, -9, 9);
    auto cert = equivalent_k1(theta, act(random_group_element(rng, n), theta));
    REQUIRE(cert.has_value());
    CHECK(cert->kind == EquivalenceCertificate::Kind::Zero);
  }
}

TEST_CASE("multi-output equivalence") {
  Parameter ff = stack_outputs({F1(), F1()});
  GroupElement g({2, 0, 1}, ints({1, 1, 1}));
  CHECK(equivalent(ff, act(g, ff)).equivalent);

  // Width 6: F1's rows followed by F2's rows.
  Matrix A = Matrix::from_rows({ints({1, 1}), ints({-1, 0}), ints({0, -1}), ints({-1, -1}),
                                ints({1, 0}), ints({0, 1})}, 2);
  RatVec b = ints({-2, -1, -1, 2, 1, 1});
  Parameter f1f1(Matrix::from_rows({ints({1, 1, 1, 0, 0, 0}), ints({1, 1, 1, 0, 0, 0})}, 6), A, b,
                 ints({-6, -6}));
  Parameter f1f2(Matrix::from_rows({ints({1, 1, 1, 0, 0, 0}), ints({0, 0, 0, 1, 1, 1})}, 6), A, b,
                 ints({-6, -10}));
  auto res = equivalent(f1f1, f1f2);
  CHECK(res.equivalent);
  REQUIRE(res.per_output.size() == 2);
  CHECK(res.per_output[0]->kind == EquivalenceCertificate::Kind::Zero);
  CHECK(res.per_output[1]->kind == EquivalenceCertificate::Kind::Mirrored);
  CHECK(equivalent(ff, flip(ff, {0, 1, 2})).equivalent);

  Parameter off = with_c(ff, {-6, -7});
  auto neg = equivalent(ff, off);
  CHECK_FALSE(neg.equivalent);
  CHECK(neg.per_output[0].has_value());
  CHECK_FALSE(neg.per_output[1].has_value());
  CHECK_THROWS_AS((void)equivalent(ff, F1()), Error);
}

TEST_CASE("flip") {
  CHECK(flip(F1(), {0, 1, 2}) == F2());
  CHECK(flip(flip(F1(), {0, 1, 2}), {0, 1, 2}) == F1());
  try {
    (void)flip(F1(), {0, 1});
    FAIL("flip accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  CHECK(flip_residual(F1(), {0, 1}) == Matrix::from_rows({ints({0, 1})}, 2));
  CHECK_THROWS_AS((void)flip(F1(), {}), Error);
}

TEST_CASE("flip_subsets") {
  CHECK(flip_subsets(F1()) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  Parameter z = Parameter::single(ints({1, 2}), {ints({0, 0}), ints({1, 3})}, ints({4, 1}), Rat(0));
  CHECK(flip_subsets(z) == std::vector<std::vector<std::size_t>>{{0}});
  Rng small(1);
  Parameter wide = random_parameter(small, 1, 5, 1, -3, 3);
  CHECK_THROWS_AS((void)flip_subsets(wide, 4), Error);

  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.index(7);
    Parameter theta = structured_parameter(rng, 1 + rng.index(2), n, 1 + rng.index(2), -2, 2);
    auto subsets = flip_subsets(theta);
    CHECK(subsets == brute_force_flips(theta));
    for (const auto& s : subsets) CHECK(oracle_agree(theta, flip(theta, s), rng, 10));
  }
}

TEST_CASE("collapse_pair") {
  Parameter p = Parameter::single(ints({1, 1}), {ints({1}), ints({2})}, ints({1, 2}), Rat(0));
  Parameter q = collapse_pair(p, 0, 1);
  CHECK(q.M() == Matrix::from_rows({ints({3, 0})}, 2));
  CHECK(exact_equal_1d(p, q));

  Parameter same = Parameter::single(ints({4, -7}), {ints({1, 1}), ints({1, 1})}, ints({0, 0}), Rat(0));
  CHECK(collapse_pair(same, 0, 1).M() == Matrix::from_rows({ints({-3, 0})}, 2));
  CHECK_THROWS_AS((void)collapse_pair(F1(), 0, 1), Error);
}

TEST_CASE("absorb_zero_row") {
  Parameter t3 = absorb_zero_row(T3(), 2);
  CHECK(t3.c() == ints({4}));
  CHECK(t3.out(2) == ints({0}));
  CHECK(t3.b()[2].is_zero());

  Parameter neg = Parameter::single(ints({1, 5}), {ints({1}), ints({0})}, ints({0, -3}), Rat(2));
  Parameter absorbed = absorb_zero_row(neg, 1);
  CHECK(absorbed.c() == ints({2}));
  CHECK(absorbed.out(1) == ints({0}));
  CHECK_THROWS_AS((void)absorb_zero_row(F1(), 0), Error);
}

TEST_CASE("certificates are sound and symmetric") {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng.index(3);
    Parameter p = structured_parameter(rng, m, 1 + rng.index(4), 1, -3, 3);
    Parameter q = rng.coin() ? structured_parameter(rng, m, 1 + rng.index(4), 1, -3, 3)
                             : act(random_group_element(rng, p.n()), p);
    if (rng.coin()) {
      auto subsets = flip_subsets(q);
      if (!subsets.empty()) q = flip(q, subsets[rng.index(subsets.size())]);
    }
    auto pq = equivalent_k1(p, q);
    CHECK(pq.has_value() == equivalent_k1(q, p).has_value());
    if (pq) CHECK(oracle_agree(p, q, rng, 50));
    if (m == 1) CHECK(pq.has_value() == exact_equal_1d(p, q));
  }
}
