#include "wittforge/witt.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wittforge {

namespace {

// Parity of the exponent in s_v(h^m) = (-1,-1)_v^(m(m-1)/2).
bool hyperbolic_reference_odd(std::size_t m) { return (m * (m - 1) / 2) % 2 != 0; }

bool trivial_class(const FieldElem& sq) { return sq.is_one(); }

std::uint64_t residue_of(const FieldElem& a) {
  return static_cast<std::uint64_t>(numerator(a.value()));
}

// Nonzero isotropic vector for the diagonal form over F_p, or nullopt.
// Rank >= 3 diagonal forms over a finite field are always isotropic, so the
// search never needs more than the first three coordinates; for rank <= 2 it
// is a square test.
std::optional<std::vector<std::uint64_t>> isotropic_vector_fp(const DiagonalForm& q) {
  const std::uint64_t p = q.field().p;
  const std::size_t n = q.dimension();
  if (n == 0) return std::nullopt;
  std::vector<std::uint64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = residue_of(q.coefficients()[i]);

  auto vec = [n](std::size_t i, std::uint64_t v, std::size_t j = 0, std::uint64_t w = 0,
                 std::size_t k = 0, std::uint64_t u = 0) {
    std::vector<std::uint64_t> x(n, 0);
    x[i] = v;
    if (w) x[j] = w;
    if (u) x[k] = u;
    return x;
  };

  if (n == 1) return std::nullopt;
  // two-coordinate search: d0 x^2 + d1 y^2 = 0 with y = 1
  for (std::size_t i = 0; i + 1 < std::min<std::size_t>(n, 3); ++i)
    for (std::size_t j = i + 1; j < std::min<std::size_t>(n, 3); ++j)
      for (std::uint64_t x = 1; x < p; ++x)
        if ((d[i] * x % p * x + d[j]) % p == 0) return vec(i, x, j, 1);
  if (n == 2) return std::nullopt;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      for (std::uint64_t z = 1; z < p; ++z)
        if ((d[0] * x % p * x + d[1] * y % p * y + d[2] * z % p * z) % p == 0)
          return vec(0, x, 1, y, 2, z);
    }
  // unreachable for nondegenerate rank >= 3 over F_p
  return std::nullopt;
}

// Split off the hyperbolic plane spanned by the isotropic vector v and a
// non-orthogonal partner, returning the rediagonalized complement.
DiagonalForm split_hyperbolic_plane(const DiagonalForm& q, const std::vector<std::uint64_t>& v) {
  const BaseField f = q.field();
  const std::size_t n = q.dimension();
  if (n == 2) return DiagonalForm(f);
  std::vector<FieldElem> vv(n);
  for (std::size_t i = 0; i < n; ++i) vv[i] = FieldElem::residue(f, Int(v[i]));

  auto bilinear = [&](const std::vector<FieldElem>& x, const std::vector<FieldElem>& y) {
    FieldElem acc(f, 0);
    for (std::size_t i = 0; i < n; ++i) acc = acc + q.coefficients()[i] * x[i] * y[i];
    return acc;
  };

  // partner u = e_i with B(v, e_i) = d_i v_i != 0
  std::size_t pi = n;
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != 0) {
      pi = i;
      break;
    }
  std::vector<FieldElem> u(n, FieldElem(f, 0));
  u[pi] = FieldElem::one(f);

  // basis of {x : B(x,v) = B(x,u) = 0}: project each e_j
  const FieldElem bvu = bilinear(vv, u);
  const FieldElem bvu_inv = bvu.inverse();
  const FieldElem buu = bilinear(u, u);
  std::vector<std::vector<FieldElem>> comp;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<FieldElem> e(n, FieldElem(f, 0));
    e[j] = FieldElem::one(f);
    // x = e - a*v - b*u with B(x,u) = B(x,v) = 0; B(v,v) = 0 simplifies:
    const FieldElem bev = bilinear(e, vv);
    const FieldElem beu = bilinear(e, u);
    const FieldElem b = bev * bvu_inv;                    // coefficient of u... solves B(x,v)=0
    const FieldElem a = (beu - b * buu) * bvu_inv;        // solves B(x,u)=0
    for (std::size_t i = 0; i < n; ++i) e[i] = e[i] - a * vv[i] - b * u[i];
    comp.push_back(std::move(e));
  }
  // the projections span an (n-2)-dimensional space; extract a basis by
  // Gaussian elimination
  std::vector<std::vector<FieldElem>> basis;
  std::vector<std::size_t> pivots;
  for (auto& x : comp) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (x[pivots[b]].is_zero()) continue;
      const FieldElem fac = x[pivots[b]] * basis[b][pivots[b]].inverse();
      for (std::size_t i = 0; i < n; ++i) x[i] = x[i] - fac * basis[b][i];
    }
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < n) {
      basis.push_back(x);
      pivots.push_back(piv);
    }
  }
  if (basis.size() != n - 2) throw std::domain_error("hyperbolic split: complement rank mismatch");

  std::vector<std::vector<FieldElem>> gram(n - 2, std::vector<FieldElem>(n - 2, FieldElem(f, 0)));
  for (std::size_t i = 0; i < n - 2; ++i)
    for (std::size_t j = 0; j < n - 2; ++j) gram[i][j] = bilinear(basis[i], basis[j]);
  return diagonalize(gram);
}

}  // namespace

bool is_hyperbolic(const DiagonalForm& q) {
  const std::size_t n = q.dimension();
  if (n % 2) return false;
  if (n == 0) return true;
  const std::size_t m = n / 2;
  if (!q.field().is_rationals())
    return trivial_class(signed_discriminant(q));
  WittInvariants inv = invariants(q);
  if (inv.signature != 0 || !trivial_class(inv.signed_discriminant)) return false;
  const bool ref_odd = hyperbolic_reference_odd(m);
  for (const auto& [v, s] : inv.hasse_symbols) {
    const int ref = ref_odd ? hilbert_symbol_reduced(Int(-1), Int(-1), v) : 1;
    if (s != ref) return false;
  }
  return true;
}

bool witt_equivalent(const DiagonalForm& q1, const DiagonalForm& q2) {
  if (q1.field() != q2.field()) throw std::domain_error("witt_equivalent: field mismatch");
  return is_hyperbolic(direct_sum(q1, scale(q2, -FieldElem::one(q2.field()))));
}

DiagonalForm anisotropic_kernel_fp(const DiagonalForm& q) {
  if (q.field().is_rationals())
    throw std::domain_error("anisotropic_kernel_fp requires a prime field");
  DiagonalForm cur = q;
  while (cur.dimension() >= 2) {
    auto v = isotropic_vector_fp(cur);
    if (!v) break;
    cur = split_hyperbolic_plane(cur, *v);
  }
  return cur;
}

bool ideal_membership(const DiagonalForm& q, int level) {
  if (level < 0 || level > 3) throw std::domain_error("ideal_membership: level must be 0..3");
  if (level == 0) return true;
  const std::size_t n = q.dimension();
  if (n % 2) return false;
  if (level == 1) return true;
  if (n == 0) return true;
  if (!trivial_class(signed_discriminant(q))) return false;
  if (level == 2) return true;
  if (!q.field().is_rationals()) return true;  // I^2(F_p) carries no symbol data
  const bool ref_odd = hyperbolic_reference_odd(n / 2);
  for (const Place& v : relevant_places(q)) {
    const int ref = ref_odd ? hilbert_symbol_reduced(Int(-1), Int(-1), v) : 1;
    if (hasse_witt(q, v) != ref) return false;
  }
  return true;
}

}  // namespace wittforge
