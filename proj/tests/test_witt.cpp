#include <doctest.h>

#include "test_support.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;
namespace wt = wittforge::testing;

namespace {

const BaseField kQ = BaseField::rationals();

DiagonalForm form_q(std::vector<long> cs) {
  std::vector<FieldElem> v;
  for (long c : cs) v.push_back(FieldElem::rational(c));
  return DiagonalForm(kQ, std::move(v));
}

DiagonalForm form_p(const BaseField& f, std::vector<long> cs) {
  std::vector<FieldElem> v;
  for (long c : cs) v.push_back(FieldElem::residue(f, Int(c)));
  return DiagonalForm(f, std::move(v));
}

}  // namespace

TEST_CASE("is_hyperbolic over Q") {
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(is_hyperbolic(DiagonalForm::hyperbolic_planes(kQ, k)));
  CHECK_FALSE(is_hyperbolic(form_q({1, 1})));
  CHECK_FALSE(is_hyperbolic(form_q({1})));
  CHECK_FALSE(is_hyperbolic(form_q({1, 1, 1, 1})));
  CHECK_FALSE(is_hyperbolic(form_q({1, -1, 1, 1})));
  // <1,2,-3,-6> = <1,2> (x) <1,-3> is an isotropic 2-fold Pfister form
  // ((1,1,1,0) is a zero), hence hyperbolic
  CHECK(is_hyperbolic(form_q({1, 2, -3, -6})));
  CHECK(is_hyperbolic(form_q({1, 2, -1, -2})));
  CHECK_FALSE(is_hyperbolic(form_q({1, 2, -1, -3})));
}

TEST_CASE("is_hyperbolic over F_p against the zero-count oracle") {
  const BaseField f5 = BaseField::prime_field(5);
  CHECK(is_hyperbolic(form_p(f5, {1, 2, -1, -2})));
  CHECK(wt::hyperbolic_by_zero_count(form_p(f5, {1, 2, -1, -2})));
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const BaseField f = BaseField::prime_field(p);
    auto rng = wt::make_rng(20 + p);
    for (int trial = 0; trial < 40; ++trial) {
      const DiagonalForm q = wt::random_form_fp(rng, f, 1 + trial % 4);
      CHECK(is_hyperbolic(q) == wt::hyperbolic_by_zero_count(q));
    }
  }
}

TEST_CASE("witt_equivalent") {
  auto rng = wt::make_rng(21);
  for (int i = 0; i < 20; ++i) {
    const DiagonalForm q = wt::random_form_q(rng, 1 + i % 5);
    CHECK(witt_equivalent(q, q));
  }
  CHECK(witt_equivalent(form_q({1, -1}), DiagonalForm(kQ)));
  CHECK(witt_equivalent(form_q({1, 3}), form_q({3, 1})));
  CHECK_FALSE(witt_equivalent(form_q({1, 3}), form_q({1, 5})));
  const BaseField f5 = BaseField::prime_field(5);
  CHECK_THROWS_AS(witt_equivalent(form_q({1}), form_p(f5, {1})), std::domain_error);
}

TEST_CASE("witt_equivalent is an equivalence relation") {
  auto rng = wt::make_rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const DiagonalForm a = wt::random_form_q(rng, 2 + trial % 3, 9);
    const DiagonalForm b =
        trial % 2 ? direct_sum(a, DiagonalForm::hyperbolic_planes(kQ, 1)) : wt::random_form_q(rng, 2, 9);
    const DiagonalForm c = wt::random_form_q(rng, 2 + (trial / 2) % 3, 9);
    CHECK(witt_equivalent(a, b) == witt_equivalent(b, a));
    if (witt_equivalent(a, b) && witt_equivalent(b, c)) CHECK(witt_equivalent(a, c));
  }
}

TEST_CASE("anisotropic_kernel_fp") {
  const BaseField f5 = BaseField::prime_field(5);
  const BaseField f3 = BaseField::prime_field(3);
  CHECK(anisotropic_kernel_fp(DiagonalForm::hyperbolic_planes(f5, 1)).dimension() == 0);
  CHECK(anisotropic_kernel_fp(form_p(f5, {1})) == form_p(f5, {1}));
  const DiagonalForm k = anisotropic_kernel_fp(form_p(f3, {1, 1, 1}));
  CHECK(k.dimension() == 1);
  CHECK(witt_equivalent(direct_sum(k, DiagonalForm::hyperbolic_planes(f3, 1)),
                        form_p(f3, {1, 1, 1})));
  CHECK_THROWS_AS(anisotropic_kernel_fp(form_q({1})), std::domain_error);
}

TEST_CASE("anisotropic kernel splits correctly on random forms") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const BaseField f = BaseField::prime_field(p);
    auto rng = wt::make_rng(23 + p);
    for (int trial = 0; trial < 25; ++trial) {
      const DiagonalForm q = wt::random_form_fp(rng, f, 1 + trial % 8);
      const DiagonalForm k = anisotropic_kernel_fp(q);
      CHECK(k.dimension() <= 2);
      REQUIRE((q.dimension() - k.dimension()) % 2 == 0);
      const std::size_t planes = (q.dimension() - k.dimension()) / 2;
      CHECK(witt_equivalent(direct_sum(k, DiagonalForm::hyperbolic_planes(f, planes)), q));
      // kernels of dimension 2 must be anisotropic
      if (k.dimension() == 2) CHECK_FALSE(wt::hyperbolic_by_zero_count(k));
    }
  }
}

TEST_CASE("ideal_membership over Q") {
  CHECK(ideal_membership(DiagonalForm::hyperbolic_planes(kQ, 1), 3));
  CHECK_FALSE(ideal_membership(form_q({1, 1}), 2));
  CHECK(ideal_membership(form_q({1, 1, 1, 1, 1, 1, 1, 1}), 3));
  // <1,1,1,1> is in I^2 but not I^3 (signature 4), even though its raw
  // Hasse symbols are all +1
  CHECK(ideal_membership(form_q({1, 1, 1, 1}), 2));
  CHECK_FALSE(ideal_membership(form_q({1, 1, 1, 1}), 3));
  // 14 <1>'s have d_pm = -1: not even in I^2
  CHECK_FALSE(ideal_membership(form_q(std::vector<long>(14, 1)), 2));
  CHECK(ideal_membership(form_q({1}), 0));
  CHECK_FALSE(ideal_membership(form_q({1}), 1));
  CHECK_THROWS_AS(ideal_membership(form_q({1}), 4), std::domain_error);
  CHECK_THROWS_AS(ideal_membership(form_q({1}), -1), std::domain_error);
}

TEST_CASE("ideal_membership is monotone") {
  auto rng = wt::make_rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const DiagonalForm q = trial % 2 ? wt::random_form_q(rng, 2 * (1 + trial % 4), 9)
                                     : wt::random_form_in_I2(rng, 2 * (1 + trial % 4), 9);
    for (int level = 3; level >= 1; --level)
      if (ideal_membership(q, level)) CHECK(ideal_membership(q, level - 1));
  }
}

TEST_CASE("over F_p the ideal I^2 is hyperbolic (exhaustive dim <= 6)") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const BaseField f = BaseField::prime_field(p);
    for (const DiagonalForm& q : wt::square_class_forms(f, 6)) {
      if (ideal_membership(q, 2)) {
        CHECK(is_hyperbolic(q));
        CHECK(wt::hyperbolic_by_zero_count(q));
      }
      // level 3 coincides with level 2 over F_p
      CHECK(ideal_membership(q, 3) == ideal_membership(q, 2));
    }
  }
}
