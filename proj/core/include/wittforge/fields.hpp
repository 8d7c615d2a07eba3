// Exact arithmetic over Q and odd prime fields F_p: square classes,
// Legendre and Hilbert symbols, places of Q.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wittforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base field of the whole artifact: Q, or F_p for an odd prime p.
/// Characteristic 2 is excluded throughout.
struct BaseField {
  std::uint32_t p = 0;  // 0 encodes Q

  static BaseField rationals() { return BaseField{0}; }
  static BaseField prime_field(std::uint32_t p);  // throws unless p is an odd prime

  bool is_rationals() const { return p == 0; }
  friend bool operator==(const BaseField&, const BaseField&) = default;
};

std::string to_string(const BaseField& f);

/// A nonzero-capable exact field element. Over Q the value is a rational in
/// lowest terms with positive denominator; over F_p it is the residue in
/// [0, p) stored in the numerator.
class FieldElem {
 public:
  FieldElem() : field_(BaseField::rationals()), value_(0) {}
  FieldElem(BaseField field, Rational value);

  static FieldElem rational(Rational v) { return FieldElem(BaseField::rationals(), std::move(v)); }
  static FieldElem rational(long num, long den = 1) { return rational(Rational(num, den)); }
  static FieldElem residue(const BaseField& f, const Int& v);
  static FieldElem one(const BaseField& f) { return FieldElem(f, 1); }

  const BaseField& field() const { return field_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;  // throws on zero

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  BaseField field_;
  Rational value_;
};

std::string to_string(const FieldElem& a);

/// A place of Q: the real embedding, or a finite prime (2 included).
struct Place {
  Int prime;  // 0 encodes the real place

  static Place real() { return Place{0}; }
  static Place finite(Int p) { return Place{std::move(p)}; }

  bool is_real() const { return prime == 0; }
  friend bool operator==(const Place&, const Place&) = default;
  friend bool operator<(const Place& a, const Place& b) { return a.prime < b.prime; }
};

std::string to_string(const Place& v);

/// Canonical square-class representative of a nonzero element: over Q the
/// squarefree integer with the sign of a, over F_p either 1 or the least
/// positive nonresidue mod p.
FieldElem square_class(const FieldElem& a);

/// Square class of a product, computed without refactoring: on squarefree
/// representatives x, y the result is (x/g)(y/g) with g = gcd(x, y).
FieldElem square_class_mul(const FieldElem& a, const FieldElem& b);

/// Legendre symbol (a | p) for an odd prime p not dividing a.
int legendre_symbol(const Int& a, const Int& p);

/// Least positive quadratic nonresidue mod an odd prime.
Int least_nonresidue(const Int& p);

/// Hilbert symbol (a, b)_v over Q: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution in the completion at v. Closed-form case analysis:
/// sign test at the real place, valuations + Legendre symbols at odd p,
/// the eps/omega mod-8 formula at p = 2.
int hilbert_symbol(const FieldElem& a, const FieldElem& b, const Place& v);

/// Signed squarefree integer representing the square class of a nonzero
/// rational, plus the primes appearing in it (odd multiplicity only).
struct SquareClassQ {
  Int signed_squarefree;     // e.g. -30
  std::vector<Int> primes;   // e.g. {2, 3, 5}
};
SquareClassQ square_class_rational(const Rational& q);

/// Hilbert symbol on already-reduced signed squarefree integers.
int hilbert_symbol_reduced(const Int& a, const Int& b, const Place& v);

}  // namespace wittforge
