// The finite 2-group G_n of signed even products +-e_I inside the Clifford
// algebra with e_i^2 = -1, e_i e_j = -e_j e_i, plus the essential-dimension
// formula sqrt(|G/C|) + rank C - 1 for 2-groups with central cyclic
// commutator.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wittforge/fields.hpp"

namespace wittforge {

/// +-e_I with I an even-cardinality subset of {1,...,n}, n <= 30.
struct CliffordElement {
  std::uint32_t mask = 0;  // bit i-1 <-> index i
  bool negative = false;
  int ambient = 0;

  CliffordElement() = default;
  CliffordElement(int ambient, std::uint32_t mask, bool negative = false);

  static CliffordElement identity(int ambient) { return CliffordElement(ambient, 0, false); }
  static CliffordElement minus_one(int ambient) { return CliffordElement(ambient, 0, true); }

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Rendered as "+e{1,2,4}" / "-e{}".
std::string to_string(const CliffordElement& x);

/// Product in G_n. The subset is the symmetric difference; the sign picks up
/// (-1)^t for the t transpositions that sort the concatenated index word and
/// (-1)^|I cap J| for the squared generators.
CliffordElement cliff_mul(const CliffordElement& x, const CliffordElement& y);

CliffordElement cliff_inverse(const CliffordElement& x);

/// [e_I, e_J] = (-1)^(|I cap J|), as a sign.
int pair_commutator(const CliffordElement& x, const CliffordElement& y);

enum class CenterKind { Z2, Z4, Z2xZ2 };

std::string to_string(CenterKind k);

struct GroupSummary {
  int n = 0;
  std::int64_t order = 0;  // 2^n
  CenterKind center_kind = CenterKind::Z2;
  std::vector<CliffordElement> center_elements;
  int commutator_subgroup_order = 0;  // always 2
  int exponent = 0;                   // 4 for n >= 2
  std::int64_t ed_value = 0;          // closed-form essential dimension
};

/// Structure of G_n, 2 <= n <= 30. The closed-form case analysis on n mod 4
/// is always used; for n <= 14 the center, commutator subgroup, order and
/// exponent are additionally cross-validated by brute-force enumeration of
/// all 2^n elements (throws if they disagree).
GroupSummary group_summary(int n);

/// A finite group given by an element list 0..order-1 and a multiplication
/// oracle; used by the generic essential-dimension path.
struct EnumeratedGroup {
  std::size_t order = 0;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
};

/// ed(G) = sqrt(|G/C(G)|) + rank C(G) - 1 for a 2-group whose commutator
/// subgroup is central and cyclic. All preconditions are checked on the
/// multiplication table; violations are rejected with a diagnostic.
std::int64_t ed_formula(const EnumeratedGroup& g);

/// Same formula evaluated from a GroupSummary's structural data.
std::int64_t ed_formula(const GroupSummary& s);

/// G_n as an EnumeratedGroup (n <= 14; element i is packed sign|mask).
EnumeratedGroup enumerate_clifford_group(int n);

}  // namespace wittforge
