// Exact evaluators for the essential-dimension bounds: the spin lower/upper
// bounds and their refinements, the Rost table, the half-spin values, the
// T_n interval, the Grassmannian penalty, the 3-fold Pfister lower bound,
// and the quadratic-root analysis behind it.
#pragma once

#include <string>
#include <utility>

#include "wittforge/fields.hpp"

namespace wittforge {

/// Interval with rational endpoints enclosing a real root; both endpoints
/// carry opposite signs of the defining polynomial.
struct RealWitness {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// A named bound value. When exact is false the value lives in `enclosure`
/// (the bound is irrational) and `value` holds the enclosure's lower end.
struct BoundReport {
  std::string name;
  int n = 0;
  Rational value;
  bool exact = true;
  RealWitness enclosure;
  bool vacuous = false;
  std::string validity;
};

/// Lower bound on ed(Spin_n; 2): 2^((n-1)/2) - n(n-1)/2 (n odd),
/// 2^((n-2)/2) - n(n-1)/2 (n = 2 mod 4), +1 more when 4 | n. Vacuous
/// (negative) for n <= 14.
BoundReport spin_lower(int n);

/// Upper bound on ed(Spin_n) for n >= 15 (char 0): the lower-bound value for
/// n odd or n = 2 mod 4, and 2^((n-2)/2) - n(n-1)/2 + n when 4 | n.
/// Set allow_outside_range to evaluate the formula below n = 15.
BoundReport spin_upper(int n, bool allow_outside_range = false);

/// Dimension of the generically free representation behind spin_upper:
/// spin (n odd), half-spin (n = 2 mod 4), half-spin + n (4 | n).
Int spin_rep_dimension(int n);

/// Merkurjev's refinement for 4 | n: 2^((n-2)/2) - n(n-1)/2 + 2^m with 2^m
/// the highest power of 2 dividing n.
BoundReport merkurjev_lower(int n);

/// Chernousov-Serre: floor(n/2) + 1 for n >= 7 with n = 0, +-1 mod 8;
/// floor(n/2) for all other n >= 11.
BoundReport chernousov_serre_lower(int n);

/// Rost's exact values of ed(Spin_n) for 3 <= n <= 14.
int rost_table(int n);

/// ed(HSpin_n) = 2^((n-2)/2) - n(n-1)/2 for 4 | n, n >= 20.
BoundReport hspin_value(int n, bool allow_outside_range = false);

/// [best known lower bound - 1, spin upper] enclosing ed(T_n), n >= 15.
std::pair<BoundReport, BoundReport> tn_interval(int n);

/// s(s + 2n - 1)/2, always a nonnegative integer for s, n >= 0.
Int grassmannian_penalty(const Int& s, const Int& n);

/// The Pfister-number lower bound (2^((n+4)/4) - n - 2)/7 for even n.
/// Exact rational when 4 | n, an enclosure otherwise; least_r is the
/// smallest integer count compatible with it ("fewer than" excludes
/// everything below the bound). Vacuous for even n <= 10.
struct Pfister3Bound {
  BoundReport report;
  Int least_r;
};
Pfister3Bound pfister3_lower_bound(int n);

enum class RootParity { even, odd };

/// Sign test of the exact quadratic in r obtained by substituting
/// s = (7r - n)/2 (even parity) or s = (7r + 1 - n)/2 (odd parity) into the
/// essential-dimension chain: 49r^2 + (14n+10)r + n^2 - 2n + 8 - 2^((n+4)/2)
/// resp. 49r^2 + (14n+24)r + n^2 + 7 - 2^((n+4)/2). True iff >= 0.
bool quadratic_check(int n, const Int& r, RootParity parity);

/// The exact polynomial evaluated by quadratic_check.
Int quadratic_polynomial(int n, const Int& r, RootParity parity);

/// Enclosure of the positive root r_+ = (sqrt(49*2^((n+4)/2) + 168n - 367)
/// - (7n+5))/49 (even parity; odd uses 168n - 199 and 7n + 12), refined by
/// bisection on the exact polynomial to width < 1e-9. The enclosure's lower
/// end is verified to dominate pfister3_lower_bound(n).
RealWitness r_plus(int n, RootParity parity);

/// TSV emitters (columns: n, bound-name, value, vacuous, validity).
std::string emit_rost_table_tsv();
std::string emit_spin_sweep_tsv(int lo = 15, int hi = 40);
std::string emit_pfister3_sweep_tsv(int lo = 2, int hi = 64);

std::string to_string(const Rational& v);

}  // namespace wittforge
