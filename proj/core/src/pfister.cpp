#include "wittforge/pfister.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace wittforge {

PfisterSlots::PfisterSlots(int sign_, std::vector<FieldElem> slots_)
    : sign(sign_), slots(std::move(slots_)) {
  if (sign != 1 && sign != -1) throw std::domain_error("PfisterSlots: sign must be +1 or -1");
  if (slots.empty() || slots.size() > 3)
    throw std::domain_error("PfisterSlots: fold must be 1, 2 or 3");
  for (const FieldElem& s : slots) {
    if (s.is_zero()) throw std::domain_error("PfisterSlots: zero slot");
    if (s.field() != slots.front().field())
      throw std::domain_error("PfisterSlots: slot field mismatch");
  }
}

std::string to_string(const PfisterSlots& p) {
  std::string s = p.sign > 0 ? "+<<" : "-<<";
  for (std::size_t i = 0; i < p.slots.size(); ++i) {
    if (i) s += ",";
    s += to_string(p.slots[i]);
  }
  return s + ">>";
}

DiagonalForm expand_pfister(const PfisterSlots& p) {
  const std::size_t r = p.fold();
  const BaseField f = p.field();
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << r); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<FieldElem> coeffs;
  coeffs.reserve(1u << r);
  for (unsigned m : masks) {
    FieldElem prod = FieldElem::one(f);
    for (std::size_t i = 0; i < r; ++i)
      if (m & (1u << i)) prod = prod * p.slots[i];
    coeffs.push_back(prod);
  }
  return DiagonalForm(f, std::move(coeffs));
}

DiagonalForm pure_part(const PfisterSlots& p) {
  if (p.fold() != 3) throw std::domain_error("pure_part: 3-fold Pfister form required");
  DiagonalForm full = expand_pfister(p);
  std::vector<FieldElem> c(full.coefficients().begin() + 1, full.coefficients().end());
  return DiagonalForm(p.field(), std::move(c));
}

namespace {

// drop hyperbolic expansions, then cancel +/- pairs with Witt-equal
// expansions
std::vector<PfisterSlots> simplify_terms(std::vector<PfisterSlots> terms) {
  std::vector<PfisterSlots> kept;
  for (auto& t : terms)
    if (!is_hyperbolic(expand_pfister(t))) kept.push_back(std::move(t));
  std::vector<PfisterSlots> out;
  for (auto& t : kept) {
    auto hit = std::find_if(out.begin(), out.end(), [&](const PfisterSlots& o) {
      return o.sign == -t.sign && witt_equivalent(expand_pfister(o), expand_pfister(t));
    });
    if (hit != out.end())
      out.erase(hit);
    else
      out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<PfisterSlots> decompose_I1(const DiagonalForm& q) {
  if (!ideal_membership(q, 1)) throw std::domain_error("decompose_I1: odd dimension");
  std::vector<PfisterSlots> terms;
  const auto& a = q.coefficients();
  for (std::size_t j = 0; j + 1 < a.size(); j += 2) {
    terms.emplace_back(+1, std::vector<FieldElem>{square_class(a[j])});
    terms.emplace_back(-1, std::vector<FieldElem>{square_class(-a[j + 1])});
  }
  return simplify_terms(std::move(terms));
}

std::vector<PfisterSlots> decompose_I2(const DiagonalForm& q) {
  if (!ideal_membership(q, 2))
    throw std::domain_error("decompose_I2: form is not in I^2 (even dim, trivial d_pm)");
  std::vector<FieldElem> coeffs;
  for (const FieldElem& c : q.coefficients()) coeffs.push_back(square_class(c));

  std::vector<PfisterSlots> terms;
  auto emit_quad = [&terms](const FieldElem& a, const FieldElem& b, const FieldElem& c) {
    const FieldElem ab = square_class_mul(a, b);
    terms.emplace_back(+1, std::vector<FieldElem>{ab, a});
    terms.emplace_back(-1, std::vector<FieldElem>{ab, square_class(-c)});
  };
  while (coeffs.size() > 4) {
    const FieldElem a = coeffs[coeffs.size() - 3];
    const FieldElem b = coeffs[coeffs.size() - 2];
    const FieldElem c = coeffs[coeffs.size() - 1];
    emit_quad(a, b, c);
    coeffs.resize(coeffs.size() - 3);
    coeffs.push_back(square_class(-(a * b * c)));
  }
  if (coeffs.size() == 4) emit_quad(coeffs[0], coeffs[1], coeffs[2]);
  // dimension 2 in I^2 is already hyperbolic
  return simplify_terms(std::move(terms));
}

DiagonalForm assemble_phi(const std::vector<PfisterSlots>& triples) {
  if (triples.empty()) throw std::domain_error("assemble_phi: empty list");
  for (const auto& t : triples)
    if (t.fold() != 3) throw std::domain_error("assemble_phi: all slots must be 3-fold");
  const BaseField f = triples.front().field();
  DiagonalForm phi(f);
  if (triples.size() % 2)
    phi = DiagonalForm(f, {FieldElem::one(f)});
  for (const auto& t : triples) {
    DiagonalForm pp = pure_part(t);
    if (t.sign < 0) pp = scale(pp, -FieldElem::one(f));
    phi = direct_sum(phi, pp);
  }
  return phi;
}

namespace {

// Witt classes over F_p are determined by (dim mod 2, signed discriminant
// class); represent each by its anisotropic kernel.
using WittClassKey = std::pair<int, Int>;

WittClassKey class_key(const DiagonalForm& q) {
  return {static_cast<int>(q.dimension() % 2),
          q.dimension() ? numerator(signed_discriminant(q).value()) : Int(1)};
}

}  // namespace

int pfister_number_upper_fp(const DiagonalForm& q, int level) {
  if (q.field().is_rationals())
    throw std::domain_error("pfister_number_upper_fp requires a prime field");
  if (level < 1 || level > 3)
    throw std::domain_error("pfister_number_upper_fp: level must be 1..3");
  if (!ideal_membership(q, level))
    throw std::domain_error("pfister_number_upper_fp: form is outside I^" + std::to_string(level));

  const BaseField f = q.field();
  const FieldElem one = FieldElem::one(f);
  const FieldElem nr = FieldElem(f, Rational(least_nonresidue(Int(f.p))));

  // all level-fold Pfister forms up to isometry: slots from {1, nonresidue}
  std::vector<DiagonalForm> moves;
  for (unsigned m = 0; m < (1u << level); ++m) {
    std::vector<FieldElem> slots;
    for (int i = 0; i < level; ++i) slots.push_back((m & (1u << i)) ? nr : one);
    moves.push_back(expand_pfister(PfisterSlots(+1, std::move(slots))));
  }

  const WittClassKey target = class_key(anisotropic_kernel_fp(q));
  std::map<WittClassKey, int> dist;
  std::deque<DiagonalForm> frontier;
  DiagonalForm zero(f);
  dist[class_key(zero)] = 0;
  frontier.push_back(zero);
  if (dist.count(target)) return 0;

  while (!frontier.empty()) {
    DiagonalForm cur = frontier.front();
    frontier.pop_front();
    const int d = dist[class_key(cur)];
    for (const DiagonalForm& mv : moves)
      for (int sgn : {+1, -1}) {
        DiagonalForm step = sgn > 0 ? mv : scale(mv, -one);
        DiagonalForm next = anisotropic_kernel_fp(direct_sum(cur, step));
        const WittClassKey key = class_key(next);
        if (dist.emplace(key, d + 1).second) {
          if (key == target) return d + 1;
          frontier.push_back(std::move(next));
        }
      }
  }
  throw std::domain_error("pfister_number_upper_fp: search exhausted");  // unreachable
}

}  // namespace wittforge
