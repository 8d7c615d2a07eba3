#include <doctest.h>

#include "test_support.hpp"
#include "wittforge/bounds.hpp"
#include "wittforge/clifford.hpp"

using namespace wittforge;
namespace wt = wittforge::testing;

namespace {

CliffordElement from_indices(int n, std::initializer_list<int> idx, bool neg = false) {
  std::uint32_t mask = 0;
  for (int i : idx) mask |= 1u << (i - 1);
  return CliffordElement(n, mask, neg);
}

std::int64_t eq3(int n) {
  if (n % 2) return std::int64_t(1) << ((n - 1) / 2);
  if (n % 4 == 2) return std::int64_t(1) << ((n - 2) / 2);
  return (std::int64_t(1) << ((n - 2) / 2)) + 1;
}

}  // namespace

TEST_CASE("element validation and rendering") {
  CHECK_THROWS_AS(CliffordElement(4, 0b1), std::domain_error);       // odd cardinality
  CHECK_THROWS_AS(CliffordElement(2, 0b1100), std::domain_error);    // outside {1..n}
  CHECK_THROWS_AS(CliffordElement(31, 0), std::domain_error);        // ambient bound
  CHECK(to_string(from_indices(4, {1, 2})) == "+e{1,2}");
  CHECK(to_string(from_indices(6, {1, 2, 4, 6}, true)) == "-e{1,2,4,6}");
  CHECK(to_string(CliffordElement::minus_one(4)) == "-e{}");
}

TEST_CASE("cliff_mul examples, checked against the word-rewriting oracle") {
  const CliffordElement id = CliffordElement::identity(4);
  const CliffordElement e12 = from_indices(4, {1, 2});
  const CliffordElement e34 = from_indices(4, {3, 4});
  CHECK(cliff_mul(id, e12) == e12);
  CHECK(cliff_mul(e12, id) == e12);
  CHECK(cliff_mul(e12, e12) == CliffordElement::minus_one(4));
  CHECK(cliff_mul(e12, e34) == from_indices(4, {1, 2, 3, 4}));

  auto agree = [](const CliffordElement& x, const CliffordElement& y) {
    const auto w = wt::word_multiply(wt::to_word(x), wt::to_word(y));
    const CliffordElement product = cliff_mul(x, y);
    return w.negative == product.negative && wt::to_word(product).indices == w.indices;
  };
  CHECK(agree(e12, e12));
  CHECK(agree(e12, e34));
  CHECK_THROWS_AS(cliff_mul(e12, from_indices(5, {1, 2})), std::domain_error);

  auto rng = wt::make_rng(40);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 9;
    const auto g = enumerate_clifford_group(n);
    const CliffordElement x =
        cliff_mul(CliffordElement::identity(n), CliffordElement::identity(n));
    (void)x;
    // random pair via packed indices
    const std::uint32_t count = 1u << n;
    const auto unpackish = [n](std::uint32_t low_and_sign) {
      const std::uint32_t low = low_and_sign & ((1u << (n - 1)) - 1);
      const bool neg = (low_and_sign >> (n - 1)) & 1u;
      const std::uint32_t top =
          static_cast<std::uint32_t>(__builtin_popcount(low) & 1) << (n - 1);
      return CliffordElement(n, low | top, neg);
    };
    const CliffordElement a = unpackish(rng() % count), b = unpackish(rng() % count);
    CHECK(agree(a, b));
  }
}

TEST_CASE("group axioms on random triples, n <= 14") {
  auto rng = wt::make_rng(41);
  for (int n : {3, 5, 8, 11, 14}) {
    const std::uint32_t count = 1u << n;
    auto unpackish = [n](std::uint32_t v) {
      const std::uint32_t low = v & ((1u << (n - 1)) - 1);
      const std::uint32_t top =
          static_cast<std::uint32_t>(__builtin_popcount(low) & 1) << (n - 1);
      return CliffordElement(n, low | top, (v >> (n - 1)) & 1u);
    };
    for (int trial = 0; trial < 200; ++trial) {
      const CliffordElement x = unpackish(rng() % count), y = unpackish(rng() % count),
                            z = unpackish(rng() % count);
      CHECK(cliff_mul(cliff_mul(x, y), z) == cliff_mul(x, cliff_mul(y, z)));
      CHECK(cliff_mul(x, cliff_inverse(x)) == CliffordElement::identity(n));
      CHECK(cliff_mul(cliff_inverse(x), x) == CliffordElement::identity(n));
    }
  }
}

TEST_CASE("pair_commutator examples and exhaustive agreement") {
  CHECK(pair_commutator(from_indices(4, {1, 2}), from_indices(4, {3, 4})) == 1);
  CHECK(pair_commutator(from_indices(4, {1, 2}), from_indices(4, {2, 3})) == -1);
  const CliffordElement x = from_indices(6, {1, 4, 5, 6});
  CHECK(pair_commutator(x, x) == 1);

  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    const std::uint32_t count = 1u << n;
    auto unpackish = [n](std::uint32_t v) {
      const std::uint32_t low = v & ((1u << (n - 1)) - 1);
      const std::uint32_t top =
          static_cast<std::uint32_t>(__builtin_popcount(low) & 1) << (n - 1);
      return CliffordElement(n, low | top, (v >> (n - 1)) & 1u);
    };
    for (std::uint32_t i = 0; i < count; ++i)
      for (std::uint32_t j = 0; j < count; ++j) {
        const CliffordElement a = unpackish(i), b = unpackish(j);
        const CliffordElement comm =
            cliff_mul(cliff_mul(a, b), cliff_mul(cliff_inverse(a), cliff_inverse(b)));
        REQUIRE(comm.mask == 0);
        REQUIRE(pair_commutator(a, b) == (comm.negative ? -1 : 1));
      }
  }
}

TEST_CASE("group_summary closed form and brute-force cross-validation") {
  const GroupSummary s3 = group_summary(3);
  CHECK(s3.center_kind == CenterKind::Z2);
  CHECK(s3.center_elements.size() == 2);
  CHECK(s3.order == 8);
  CHECK(s3.commutator_subgroup_order == 2);

  const GroupSummary s6 = group_summary(6);
  CHECK(s6.center_kind == CenterKind::Z4);
  const CliffordElement efull6(6, (1u << 6) - 1);
  CHECK(cliff_mul(efull6, efull6) == CliffordElement::minus_one(6));

  const GroupSummary s4 = group_summary(4);
  CHECK(s4.center_kind == CenterKind::Z2xZ2);
  const CliffordElement efull4(4, (1u << 4) - 1);
  CHECK(cliff_mul(efull4, efull4) == CliffordElement::identity(4));

  // G_2 is cyclic of order 4: trivial commutator subgroup
  CHECK(group_summary(2).commutator_subgroup_order == 1);
  CHECK(group_summary(2).center_kind == CenterKind::Z4);

  // the brute-force path inside group_summary throws on any mismatch
  for (int n = 2; n <= 14; ++n) {
    const GroupSummary s = group_summary(n);
    CHECK(s.order == std::int64_t(1) << n);
    CHECK(s.exponent == 4);
    CHECK(s.ed_value == eq3(n));
  }
  CHECK_THROWS_AS(group_summary(1), std::domain_error);
  CHECK_THROWS_AS(group_summary(31), std::domain_error);
}

TEST_CASE("ed_formula landmark values") {
  CHECK(ed_formula(group_summary(11)) == 32);
  CHECK(ed_formula(group_summary(10)) == 16);
  CHECK(ed_formula(group_summary(12)) == 33);
}

TEST_CASE("ed_formula matches the closed form for 3 <= n <= 20") {
  for (int n = 3; n <= 20; ++n) {
    const GroupSummary s = group_summary(n);
    CHECK(s.ed_value == eq3(n));
    CHECK(ed_formula(s) == eq3(n));
  }
}

TEST_CASE("generic ed_formula path on enumerated groups") {
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 10}) CHECK(ed_formula(enumerate_clifford_group(n)) == eq3(n));

  SUBCASE("rejects groups with non-cyclic commutator subgroup") {
    // Q8 x Q8 has commutator Z/2 x Z/2
    const auto q8 = enumerate_clifford_group(3);
    EnumeratedGroup prod;
    prod.order = q8.order * q8.order;
    prod.mul = [q8](std::size_t a, std::size_t b) {
      const std::size_t n = q8.order;
      return q8.mul(a / n, b / n) * n + q8.mul(a % n, b % n);
    };
    CHECK_THROWS_WITH_AS(static_cast<void>(ed_formula(prod)),
                         "ed_formula: commutator subgroup is not cyclic", std::domain_error);
  }
  SUBCASE("rejects non-2-groups") {
    EnumeratedGroup z3;
    z3.order = 3;
    z3.mul = [](std::size_t a, std::size_t b) { return (a + b) % 3; };
    CHECK_THROWS_AS(static_cast<void>(ed_formula(z3)), std::domain_error);
  }
}

TEST_CASE("ed(G_n) - dim Spin_n reproduces the spin lower bounds, 15 <= n <= 24") {
  for (int n = 15; n <= 24; ++n) {
    const Int lower = Int(ed_formula(group_summary(n))) - Int(n) * (n - 1) / 2;
    CHECK(Rational(lower) == spin_lower(n).value);
  }
}
