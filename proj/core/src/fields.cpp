#include "wittforge/fields.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/miller_rabin.hpp>

namespace wittforge {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  return boost::multiprecision::miller_rabin_test(n, 25);
}

Int ipow_mod(Int base, Int exp, const Int& mod) {
  return boost::multiprecision::powm(std::move(base), std::move(exp), mod);
}

}  // namespace

BaseField BaseField::prime_field(std::uint32_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
    throw std::domain_error("prime_field: p must be an odd prime, got " + std::to_string(p));
  return BaseField{p};
}

std::string to_string(const BaseField& f) {
  return f.is_rationals() ? "Q" : "F" + std::to_string(f.p);
}

FieldElem::FieldElem(BaseField field, Rational value) : field_(field), value_(std::move(value)) {
  if (!field_.is_rationals()) {
    if (denominator(value_) != 1)
      throw std::domain_error("residue must be an integer over " + to_string(field_));
    Int r = numerator(value_) % field_.p;
    if (r < 0) r += field_.p;
    value_ = Rational(r);
  }
}

FieldElem FieldElem::residue(const BaseField& f, const Int& v) {
  if (f.is_rationals()) return FieldElem(f, Rational(v));
  return FieldElem(f, Rational(v));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (field_ != o.field_) throw std::domain_error("field mismatch in FieldElem multiplication");
  return FieldElem(field_, value_ * o.value_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (field_ != o.field_) throw std::domain_error("field mismatch in FieldElem addition");
  return FieldElem(field_, value_ + o.value_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (field_ != o.field_) throw std::domain_error("field mismatch in FieldElem subtraction");
  return FieldElem(field_, value_ - o.value_);
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, -value_); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_rationals()) return FieldElem(field_, 1 / value_);
  // Fermat: a^(p-2) mod p
  Int inv = ipow_mod(numerator(value_), Int(field_.p) - 2, Int(field_.p));
  return FieldElem(field_, Rational(inv));
}

std::string to_string(const FieldElem& a) {
  const Rational& v = a.value();
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

std::string to_string(const Place& v) {
  return v.is_real() ? "real" : "p=" + v.prime.str();
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p % 2 == 0 || !is_prime(p))
    throw std::domain_error("legendre_symbol: modulus must be an odd prime");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw std::domain_error("legendre_symbol: p divides a");
  return ipow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Int least_nonresidue(const Int& p) {
  for (Int a = 2;; ++a)
    if (legendre_symbol(a, p) == -1) return a;
}

namespace {

// Trial division below this bound; the leftover cofactor must then be 1,
// a prime, or a perfect square, otherwise the input is rejected.
constexpr std::uint32_t kTrialLimit = 100000;

struct Factored {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;
};

Factored factor_integer(Int n) {
  if (n == 0) throw std::domain_error("square class of zero");
  Factored out;
  if (n < 0) {
    out.sign = -1;
    n = -n;
  }
  auto push = [&out](const Int& p, unsigned e) {
    if (e) out.factors.emplace_back(p, e);
  };
  for (Int d = 2; d <= kTrialLimit && d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    push(d, e);
  }
  if (n > 1) {
    if (is_prime(n)) {
      push(n, 1);
    } else {
      Int r = sqrt(n);
      if (r * r == n && is_prime(r)) {
        push(r, 2);
      } else {
        throw std::domain_error("square_class: cannot factor " + n.str() +
                                " (no prime factor below " + std::to_string(kTrialLimit) + ")");
      }
    }
  }
  return out;
}

}  // namespace

SquareClassQ square_class_rational(const Rational& q) {
  if (q == 0) throw std::domain_error("square class of zero");
  Factored f = factor_integer(numerator(q) * denominator(q));
  SquareClassQ out;
  out.signed_squarefree = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2) {
      out.signed_squarefree *= p;
      out.primes.push_back(p);
    }
  return out;
}

FieldElem square_class(const FieldElem& a) {
  if (a.is_zero()) throw std::domain_error("square class of zero");
  if (a.field().is_rationals())
    return FieldElem(a.field(), Rational(square_class_rational(a.value()).signed_squarefree));
  Int p(a.field().p);
  return legendre_symbol(numerator(a.value()), p) == 1
             ? FieldElem::one(a.field())
             : FieldElem(a.field(), Rational(least_nonresidue(p)));
}

FieldElem square_class_mul(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) throw std::domain_error("field mismatch in square_class_mul");
  if (a.is_zero() || b.is_zero()) throw std::domain_error("square class of zero");
  if (!a.field().is_rationals()) return square_class(a * b);
  // assumes both operands are already squarefree integers
  Int x = numerator(a.value()), y = numerator(b.value());
  Int g = gcd(x, y);
  return FieldElem(a.field(), Rational((x / g) * (y / g)));
}

namespace {

int sign_of(const Int& n) { return n < 0 ? -1 : 1; }

// (a, b)_2 on odd-or-valuation-1 squarefree integers via the classical
// eps/omega mod-8 exponents.
int hilbert_at_two(Int a, Int b) {
  unsigned alpha = 0, beta = 0;
  while (a % 2 == 0) {
    a /= 2;
    ++alpha;
  }
  while (b % 2 == 0) {
    b /= 2;
    ++beta;
  }
  auto eps = [](const Int& u) { return static_cast<unsigned>(((u - 1) / 2) % 2 != 0); };
  auto omega = [](const Int& u) { return static_cast<unsigned>(((u * u - 1) / 8) % 2 != 0); };
  unsigned e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
  return e % 2 ? -1 : 1;
}

int hilbert_at_odd(Int a, Int b, const Int& p) {
  unsigned alpha = 0, beta = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  while (b % p == 0) {
    b /= p;
    ++beta;
  }
  int r = 1;
  if ((alpha & beta & 1u) && legendre_symbol(Int(-1), p) == -1) r = -r;
  if ((beta & 1u) && legendre_symbol(a, p) == -1) r = -r;
  if ((alpha & 1u) && legendre_symbol(b, p) == -1) r = -r;
  return r;
}

}  // namespace

int hilbert_symbol_reduced(const Int& a, const Int& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert symbol of zero");
  if (v.is_real()) return (sign_of(a) < 0 && sign_of(b) < 0) ? -1 : 1;
  if (v.prime == 2) return hilbert_at_two(a, b);
  return hilbert_at_odd(a, b, v.prime);
}

int hilbert_symbol(const FieldElem& a, const FieldElem& b, const Place& v) {
  if (!a.field().is_rationals() || !b.field().is_rationals())
    throw std::domain_error("hilbert_symbol is defined over Q");
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert symbol of zero");
  Int ra = square_class_rational(a.value()).signed_squarefree;
  Int rb = square_class_rational(b.value()).signed_squarefree;
  return hilbert_symbol_reduced(ra, rb, v);
}

}  // namespace wittforge
