#include "wittforge/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace wittforge {

namespace {

constexpr int kMaxAmbient = 30;
constexpr int kMaxBrute = 14;

bool even_popcount(std::uint32_t m) { return (std::popcount(m) & 1) == 0; }

// parity of the transposition count that sorts the concatenation of two
// ascending index words (merge count)
bool sort_parity(std::uint32_t lhs, std::uint32_t rhs) {
  bool odd = false;
  while (rhs) {
    const int b = std::countr_zero(rhs);
    rhs &= rhs - 1;
    odd ^= (std::popcount(lhs >> (b + 1)) & 1) != 0;
  }
  return odd;
}

}  // namespace

CliffordElement::CliffordElement(int ambient_, std::uint32_t mask_, bool negative_)
    : mask(mask_), negative(negative_), ambient(ambient_) {
  if (ambient < 1 || ambient > kMaxAmbient)
    throw std::domain_error("CliffordElement: ambient n must be 1..30");
  if (ambient < 32 && (mask >> ambient) != 0)
    throw std::domain_error("CliffordElement: subset outside {1,...,n}");
  if (!even_popcount(mask))
    throw std::domain_error("CliffordElement: subset must have even cardinality");
}

std::string to_string(const CliffordElement& x) {
  std::string s = x.negative ? "-e{" : "+e{";
  bool first = true;
  for (int i = 0; i < x.ambient; ++i)
    if (x.mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

CliffordElement cliff_mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.ambient != y.ambient) throw std::domain_error("cliff_mul: ambient mismatch");
  bool neg = x.negative != y.negative;
  neg ^= sort_parity(x.mask, y.mask);
  neg ^= (std::popcount(x.mask & y.mask) & 1) != 0;  // each e_i^2 = -1
  return CliffordElement(x.ambient, x.mask ^ y.mask, neg);
}

CliffordElement cliff_inverse(const CliffordElement& x) {
  // e_I^2 = (-1)^(k(k+1)/2) with k = |I|
  const int k = std::popcount(x.mask);
  const bool square_negative = (k * (k + 1) / 2) % 2 != 0;
  return CliffordElement(x.ambient, x.mask, x.negative != square_negative);
}

int pair_commutator(const CliffordElement& x, const CliffordElement& y) {
  if (x.ambient != y.ambient) throw std::domain_error("pair_commutator: ambient mismatch");
  return (std::popcount(x.mask & y.mask) & 1) ? -1 : 1;
}

std::string to_string(CenterKind k) {
  switch (k) {
    case CenterKind::Z2: return "Z2";
    case CenterKind::Z4: return "Z4";
    case CenterKind::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

namespace {

std::int64_t ed_closed_form(int n) {
  if (n % 2) return std::int64_t(1) << ((n - 1) / 2);
  if (n % 4 == 2) return std::int64_t(1) << ((n - 2) / 2);
  return (std::int64_t(1) << ((n - 2) / 2)) + 1;
}

// packed element: bit (n-1) = sign, low n-1 bits determine the even mask
std::uint32_t pack(const CliffordElement& x) {
  const int n = x.ambient;
  return (static_cast<std::uint32_t>(x.negative) << (n - 1)) | (x.mask & ((1u << (n - 1)) - 1));
}

CliffordElement unpack(int n, std::uint32_t idx) {
  const std::uint32_t low = idx & ((1u << (n - 1)) - 1);
  const bool neg = (idx >> (n - 1)) & 1u;
  const std::uint32_t top = static_cast<std::uint32_t>(std::popcount(low) & 1) << (n - 1);
  return CliffordElement(n, low | top, neg);
}

struct BruteResult {
  std::int64_t order;
  std::vector<CliffordElement> center;
  std::set<std::uint32_t> commutator_subgroup;  // packed
  int exponent;
};

BruteResult brute_force_analysis(int n) {
  const std::size_t count = std::size_t(1) << n;
  std::vector<CliffordElement> all;
  all.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) all.push_back(unpack(n, i));

  std::vector<CliffordElement> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(CliffordElement(n, 3u << i));

  BruteResult out;
  out.order = static_cast<std::int64_t>(all.size());

  // center: commuting with the generating set suffices
  for (const CliffordElement& x : all) {
    bool central = true;
    for (const CliffordElement& g : gens)
      if (!(cliff_mul(x, g) == cliff_mul(g, x))) {
        central = false;
        break;
      }
    if (central) out.center.push_back(x);
  }

  // commutator subgroup: the set of all commutators, closed under product.
  // Scalar factors cancel inside a commutator (the algebra product is
  // bilinear), so all element pairs are covered by the even-mask pairs.
  // [e_I, e_J] = (-1)^(t(I,J) xor t(J,I)) e_0, and the merge-count parity
  // t(I,J) equals popcount(sig(I) & J) mod 2 with sig(I) bit b = parity of
  // the I-indices above b.
  const std::uint32_t half = 1u << (n - 1);
  std::vector<std::uint32_t> sig(std::size_t(1) << n, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    for (int b = 0; b + 1 < n; ++b)
      sig[m] |= static_cast<std::uint32_t>(std::popcount(m >> (b + 1)) & 1) << b;
  auto even_mask = [n](std::uint32_t low) {
    return low | (static_cast<std::uint32_t>(std::popcount(low) & 1) << (n - 1));
  };
  std::set<std::uint32_t> comms;
  for (std::uint32_t i = 0; i < half; ++i) {
    const std::uint32_t I = even_mask(i);
    std::uint32_t seen = 0;  // bit 0: +1 observed, bit 1: -1 observed
    for (std::uint32_t j = 0; j < half; ++j) {
      const std::uint32_t J = even_mask(j);
      seen |= 1u << ((std::popcount(sig[I] & J) ^ std::popcount(sig[J] & I)) & 1);
    }
    if (seen & 1u) comms.insert(pack(CliffordElement::identity(n)));
    if (seen & 2u) comms.insert(pack(CliffordElement::minus_one(n)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(comms.begin(), comms.end());
    for (std::uint32_t a : cur)
      for (std::uint32_t b : cur)
        if (comms.insert(pack(cliff_mul(unpack(n, a), unpack(n, b)))).second) grew = true;
  }
  out.commutator_subgroup = std::move(comms);

  int exponent = 1;
  const CliffordElement id = CliffordElement::identity(n);
  for (const CliffordElement& x : all) {
    CliffordElement p = x;
    int ord = 1;
    while (!(p == id)) {
      p = cliff_mul(p, x);
      ++ord;
    }
    exponent = std::max(exponent, ord);
  }
  out.exponent = exponent;
  return out;
}

}  // namespace

GroupSummary group_summary(int n) {
  if (n < 2 || n > kMaxAmbient) throw std::domain_error("group_summary: n must be 2..30");

  GroupSummary s;
  s.n = n;
  s.order = std::int64_t(1) << n;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  s.center_elements = {CliffordElement::identity(n), CliffordElement::minus_one(n)};
  if (n % 2 == 1) {
    s.center_kind = CenterKind::Z2;
  } else {
    s.center_elements.push_back(CliffordElement(n, full, false));
    s.center_elements.push_back(CliffordElement(n, full, true));
    s.center_kind = n % 4 == 2 ? CenterKind::Z4 : CenterKind::Z2xZ2;
  }
  // [G_2, G_2] is trivial (G_2 is cyclic of order 4); {+-1} from n = 3 on
  s.commutator_subgroup_order = n >= 3 ? 2 : 1;
  s.exponent = 4;
  s.ed_value = ed_closed_form(n);

  if (n <= kMaxBrute) {
    const BruteResult brute = brute_force_analysis(n);
    if (brute.order != s.order)
      throw std::domain_error("group_summary: brute-force order disagrees with 2^n");
    auto key = [n](const CliffordElement& x) { return pack(x); };
    std::set<std::uint32_t> closed, bruteset;
    for (const auto& x : s.center_elements) closed.insert(key(x));
    for (const auto& x : brute.center) bruteset.insert(key(x));
    if (closed != bruteset)
      throw std::domain_error("group_summary: brute-force center disagrees with case analysis");
    if (static_cast<int>(brute.commutator_subgroup.size()) != s.commutator_subgroup_order)
      throw std::domain_error("group_summary: brute-force commutator subgroup order mismatch");
    if (brute.exponent != s.exponent)
      throw std::domain_error("group_summary: brute-force exponent mismatch");
  }
  return s;
}

EnumeratedGroup enumerate_clifford_group(int n) {
  if (n < 2 || n > kMaxBrute)
    throw std::domain_error("enumerate_clifford_group: n must be 2..14");
  EnumeratedGroup g;
  g.order = std::size_t(1) << n;
  g.mul = [n](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(
        pack(cliff_mul(unpack(n, static_cast<std::uint32_t>(a)),
                       unpack(n, static_cast<std::uint32_t>(b)))));
  };
  return g;
}

namespace {

bool is_power_of_two(std::size_t v) { return v && (v & (v - 1)) == 0; }

std::int64_t exact_sqrt(std::int64_t v) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return -1;
  return r;
}

}  // namespace

std::int64_t ed_formula(const EnumeratedGroup& g) {
  const std::size_t N = g.order;
  if (!is_power_of_two(N)) throw std::domain_error("ed_formula: group order is not a power of 2");

  // identity = the unique idempotent
  std::size_t id = N;
  for (std::size_t x = 0; x < N; ++x)
    if (g.mul(x, x) == x) {
      id = x;
      break;
    }
  if (id == N) throw std::domain_error("ed_formula: no identity found");

  std::vector<std::size_t> inv(N, N);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y)
      if (g.mul(x, y) == id) {
        inv[x] = y;
        break;
      }
    if (inv[x] == N) throw std::domain_error("ed_formula: missing inverse");
  }

  std::set<std::size_t> comm;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      comm.insert(g.mul(g.mul(x, y), g.mul(inv[x], inv[y])));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(comm.begin(), comm.end());
    for (std::size_t a : cur)
      for (std::size_t b : cur)
        if (comm.insert(g.mul(a, b)).second) grew = true;
  }

  for (std::size_t c : comm)
    for (std::size_t x = 0; x < N; ++x)
      if (g.mul(c, x) != g.mul(x, c))
        throw std::domain_error("ed_formula: commutator subgroup is not central");

  const std::size_t csize = comm.size();
  bool cyclic = false;
  for (std::size_t c : comm) {
    std::size_t ord = 1, p = c;
    while (p != id) {
      p = g.mul(p, c);
      ++ord;
    }
    if (ord == csize) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw std::domain_error("ed_formula: commutator subgroup is not cyclic");

  std::vector<std::size_t> center;
  for (std::size_t x = 0; x < N; ++x) {
    bool central = true;
    for (std::size_t y = 0; y < N && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) center.push_back(x);
  }

  const std::int64_t quotient = static_cast<std::int64_t>(N / center.size());
  const std::int64_t root = exact_sqrt(quotient);
  if (root < 0) throw std::domain_error("ed_formula: |G/C(G)| is not a perfect square");

  std::set<std::size_t> center_squares;
  for (std::size_t c : center) center_squares.insert(g.mul(c, c));
  std::int64_t rank = 0;
  for (std::size_t q = center.size() / center_squares.size(); q > 1; q /= 2) ++rank;

  return root + rank - 1;
}

std::int64_t ed_formula(const GroupSummary& s) {
  if (s.commutator_subgroup_order > 2)
    throw std::domain_error("ed_formula: commutator subgroup not cyclic of order <= 2");
  const std::int64_t quotient = s.order / static_cast<std::int64_t>(s.center_elements.size());
  const std::int64_t root = exact_sqrt(quotient);
  if (root < 0) throw std::domain_error("ed_formula: |G/C(G)| is not a perfect square");
  const std::int64_t rank = s.center_kind == CenterKind::Z2xZ2 ? 2 : 1;
  return root + rank - 1;
}

}  // namespace wittforge
