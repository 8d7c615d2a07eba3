// Diagonal quadratic forms and their classical invariants: signed
// discriminant, Hasse invariant, signature.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wittforge/fields.hpp"

namespace wittforge {

/// Nondegenerate diagonal form <a_1,...,a_n>. The empty form is allowed and
/// plays the role of the zero Witt class.
class DiagonalForm {
 public:
  explicit DiagonalForm(BaseField field) : field_(field) {}
  DiagonalForm(BaseField field, std::vector<FieldElem> coeffs);

  static DiagonalForm hyperbolic_planes(const BaseField& f, std::size_t k);

  const BaseField& field() const { return field_; }
  const std::vector<FieldElem>& coefficients() const { return coeffs_; }
  std::size_t dimension() const { return coeffs_.size(); }

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  BaseField field_;
  std::vector<FieldElem> coeffs_;
};

std::string to_string(const DiagonalForm& q);

/// The classifying tuple of a form. Over Q all four slots are filled; over
/// F_p only dimension and the signed discriminant class are meaningful
/// (signature is 0 and the symbol map empty). Places missing from
/// hasse_symbols carry the symbol +1.
struct WittInvariants {
  BaseField field;
  std::size_t dimension = 0;
  FieldElem signed_discriminant;     // a square class
  std::map<Place, int> hasse_symbols;
  int signature = 0;

  int hasse_at(const Place& v) const {
    auto it = hasse_symbols.find(v);
    return it == hasse_symbols.end() ? 1 : it->second;
  }
};

bool same_invariants(const WittInvariants& a, const WittInvariants& b);

/// Orthogonal sum: concatenation of coefficient lists.
DiagonalForm direct_sum(const DiagonalForm& q1, const DiagonalForm& q2);

/// Every coefficient multiplied by a nonzero scalar.
DiagonalForm scale(const DiagonalForm& q, const FieldElem& c);

/// Congruence-diagonalize a symmetric nondegenerate Gram matrix by symmetric
/// Gaussian elimination, with the standard row+column repair step when all
/// remaining diagonal entries vanish (valid since char != 2).
DiagonalForm diagonalize(const std::vector<std::vector<FieldElem>>& gram);

/// d_pm(q) = square class of (-1)^(n(n-1)/2) * prod a_i.
FieldElem signed_discriminant(const DiagonalForm& q);

/// Hasse invariant prod_{i<j} (a_i, a_j)_v. Note: this is an isometry
/// invariant, not a Witt-class invariant; hyperbolicity and I^3 tests in the
/// witt module compare it against the hyperbolic reference value.
int hasse_witt(const DiagonalForm& q, const Place& v);

/// Full invariant tuple. Over Q the symbol map covers the real place and
/// every prime dividing 2 or a coefficient's square class; all other places
/// provably carry +1.
WittInvariants invariants(const DiagonalForm& q);

/// The places recorded by invariants() for this form.
std::vector<Place> relevant_places(const DiagonalForm& q);

}  // namespace wittforge
