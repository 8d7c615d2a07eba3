#include "wittforge/forms.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace wittforge {

DiagonalForm::DiagonalForm(BaseField field, std::vector<FieldElem> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const FieldElem& c : coeffs_) {
    if (c.field() != field_) throw std::domain_error("coefficient field mismatch");
    if (c.is_zero()) throw std::domain_error("degenerate form: zero coefficient");
  }
}

DiagonalForm DiagonalForm::hyperbolic_planes(const BaseField& f, std::size_t k) {
  std::vector<FieldElem> c;
  c.reserve(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    c.push_back(FieldElem::one(f));
    c.push_back(-FieldElem::one(f));
  }
  return DiagonalForm(f, std::move(c));
}

std::string to_string(const DiagonalForm& q) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    if (i) s += ",";
    s += to_string(q.coefficients()[i]);
  }
  return s + ">";
}

DiagonalForm direct_sum(const DiagonalForm& q1, const DiagonalForm& q2) {
  if (q1.field() != q2.field()) throw std::domain_error("direct_sum: field mismatch");
  std::vector<FieldElem> c = q1.coefficients();
  c.insert(c.end(), q2.coefficients().begin(), q2.coefficients().end());
  return DiagonalForm(q1.field(), std::move(c));
}

DiagonalForm scale(const DiagonalForm& q, const FieldElem& c) {
  if (c.field() != q.field()) throw std::domain_error("scale: field mismatch");
  if (c.is_zero()) throw std::domain_error("scale: zero scalar");
  std::vector<FieldElem> out;
  out.reserve(q.dimension());
  for (const FieldElem& a : q.coefficients()) out.push_back(a * c);
  return DiagonalForm(q.field(), std::move(out));
}

DiagonalForm diagonalize(const std::vector<std::vector<FieldElem>>& gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw std::domain_error("diagonalize: empty matrix");
  const BaseField field = gram[0][0].field();
  for (const auto& row : gram)
    if (row.size() != n) throw std::domain_error("diagonalize: matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gram[i][j].field() != field) throw std::domain_error("diagonalize: field mismatch");
      if (!(gram[i][j] == gram[j][i])) throw std::domain_error("diagonalize: matrix not symmetric");
    }

  auto m = gram;
  std::vector<FieldElem> diag;
  diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t j = k;
      while (j < n && m[j][j].is_zero()) ++j;
      if (j < n) {
        std::swap(m[k], m[j]);
        for (auto& row : m) std::swap(row[k], row[j]);
      } else {
        // all remaining diagonal entries vanish; graft an off-diagonal one
        std::size_t r = n, c = n;
        for (std::size_t i = k; i < n && r == n; ++i)
          for (std::size_t l = i + 1; l < n; ++l)
            if (!m[i][l].is_zero()) {
              r = i;
              c = l;
              break;
            }
        if (r == n) throw std::domain_error("diagonalize: singular matrix");
        for (std::size_t l = 0; l < n; ++l) m[r][l] = m[r][l] + m[c][l];
        for (std::size_t i = 0; i < n; ++i) m[i][r] = m[i][r] + m[i][c];
        if (r != k) {
          std::swap(m[k], m[r]);
          for (auto& row : m) std::swap(row[k], row[r]);
        }
      }
    }
    const FieldElem pivot = m[k][k];
    if (pivot.is_zero()) throw std::domain_error("diagonalize: singular matrix");
    const FieldElem inv = pivot.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      const FieldElem f = m[i][k] * inv;
      if (f.is_zero()) continue;
      for (std::size_t l = k; l < n; ++l) m[i][l] = m[i][l] - f * m[k][l];
      for (std::size_t l = k; l < n; ++l) m[l][i] = m[l][i] - f * m[l][k];
    }
    diag.push_back(pivot);
  }
  return DiagonalForm(field, std::move(diag));
}

FieldElem signed_discriminant(const DiagonalForm& q) {
  const std::size_t n = q.dimension();
  FieldElem acc = FieldElem::one(q.field());
  for (const FieldElem& a : q.coefficients()) acc = square_class_mul(acc, square_class(a));
  if ((n * (n - 1) / 2) % 2) acc = square_class_mul(acc, square_class(-FieldElem::one(q.field())));
  return acc;
}

int hasse_witt(const DiagonalForm& q, const Place& v) {
  if (!q.field().is_rationals()) throw std::domain_error("hasse_witt is defined over Q");
  const std::size_t n = q.dimension();
  std::vector<Int> red(n);
  for (std::size_t i = 0; i < n; ++i)
    red[i] = square_class_rational(q.coefficients()[i].value()).signed_squarefree;
  int s = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s *= hilbert_symbol_reduced(red[i], red[j], v);
  return s;
}

std::vector<Place> relevant_places(const DiagonalForm& q) {
  std::set<Int> primes{Int(2)};
  for (const FieldElem& a : q.coefficients())
    for (const Int& p : square_class_rational(a.value()).primes) primes.insert(p);
  std::vector<Place> out{Place::real()};
  for (const Int& p : primes) out.push_back(Place::finite(p));
  return out;
}

WittInvariants invariants(const DiagonalForm& q) {
  WittInvariants inv;
  inv.field = q.field();
  inv.dimension = q.dimension();
  inv.signed_discriminant = q.dimension() ? signed_discriminant(q) : FieldElem::one(q.field());
  if (!q.field().is_rationals()) return inv;
  for (const FieldElem& a : q.coefficients()) inv.signature += a.value() > 0 ? 1 : -1;
  for (const Place& v : relevant_places(q)) inv.hasse_symbols[v] = hasse_witt(q, v);
  return inv;
}

bool same_invariants(const WittInvariants& a, const WittInvariants& b) {
  if (a.field != b.field || a.dimension != b.dimension || a.signature != b.signature) return false;
  if (!(a.signed_discriminant == b.signed_discriminant)) return false;
  std::set<Place> places;
  for (const auto& [v, s] : a.hasse_symbols) places.insert(v);
  for (const auto& [v, s] : b.hasse_symbols) places.insert(v);
  for (const Place& v : places)
    if (a.hasse_at(v) != b.hasse_at(v)) return false;
  return true;
}

}  // namespace wittforge
