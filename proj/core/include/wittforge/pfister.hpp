// Pfister forms <<a_1,...,a_r>> = tensor of <1, a_i>, the constructive
// I^1/I^2 decompositions, the phi assembly, and the F_p Pfister-number
// search.
#pragma once

#include <vector>

#include "wittforge/witt.hpp"

namespace wittforge {

/// An r-fold Pfister form (r in 1..3) together with the sign it carries as a
/// summand in a Witt-ring expression.
struct PfisterSlots {
  int sign = +1;                 // +1 or -1
  std::vector<FieldElem> slots;  // nonzero, length 1..3

  PfisterSlots() = default;
  PfisterSlots(int sign, std::vector<FieldElem> slots);

  std::size_t fold() const { return slots.size(); }
  const BaseField& field() const { return slots.front().field(); }
};

std::string to_string(const PfisterSlots& p);

/// The 2^r-dimensional form whose coefficients are all subset products of
/// the slots, the empty product first and then subsets ordered by size and
/// lexicographically: <<a,b,c>> = <1,a,b,c,ab,ac,bc,abc>.
DiagonalForm expand_pfister(const PfisterSlots& p);

/// <<a,b,c>>_0: the expansion with the leading <1> removed (3-fold only).
DiagonalForm pure_part(const PfisterSlots& p);

/// Writes an even-dimensional q as a signed sum of at most dim(q) one-fold
/// Pfister classes: <a1,a2> ~ <<a1>> - <<-a2>> pairwise, hyperbolic slots
/// dropped and opposite-sign Witt-equal slots cancelled.
std::vector<PfisterSlots> decompose_I1(const DiagonalForm& q);

/// Writes q in I^2 as a signed sum of at most dim(q)-2 two-fold Pfister
/// classes via the exact Witt-ring identity
///   <a,b,c,abc*t^2> = <<ab,a>> - <<ab,-c>>,
/// reducing three trailing coefficients into the carry -abc per step.
/// Hyperbolic terms are dropped and opposite-sign Witt-equal terms cancel.
std::vector<PfisterSlots> decompose_I2(const DiagonalForm& q);

/// phi = [<1> if r odd] + sum of sign-scaled pure parts <<a,b,c>>_0.
/// dim(phi) = 7r (r even) or 7r+1 (r odd). In W(K):
///   phi = sum_i sign_i*<<a_i,b_i,c_i>> + (r mod 2 - sum_i sign_i)*<1>,
/// so sign patterns with sum_i sign_i = r mod 2 land phi in I^3 over any
/// base field; over fields containing sqrt(-1) the signs are immaterial.
DiagonalForm assemble_phi(const std::vector<PfisterSlots>& triples);

/// Minimal r such that the Witt class of q is a sum of r signed level-fold
/// Pfister classes over F_p, found by breadth-first search over the (finite)
/// Witt ring with slots drawn from the square-class representatives.
int pfister_number_upper_fp(const DiagonalForm& q, int level);

}  // namespace wittforge
