#include "wittforge/bounds.hpp"

#include <sstream>

namespace wittforge {

namespace {

Int pow2(int k) { return Int(1) << k; }

Int triangle(int n) { return Int(n) * (n - 1) / 2; }

BoundReport make_report(std::string name, int n, Rational value, std::string validity) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.value = std::move(value);
  r.vacuous = r.value <= 0;
  r.validity = std::move(validity);
  return r;
}

const char* case_note(int n) {
  if (n % 2) return "n odd";
  return n % 4 == 2 ? "n = 2 (mod 4)" : "n = 0 (mod 4)";
}

}  // namespace

std::string to_string(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

BoundReport spin_lower(int n) {
  if (n < 3) throw std::domain_error("spin_lower: n must be >= 3");
  Int v;
  if (n % 2)
    v = pow2((n - 1) / 2) - triangle(n);
  else if (n % 4 == 2)
    v = pow2((n - 2) / 2) - triangle(n);
  else
    v = pow2((n - 2) / 2) - triangle(n) + 1;
  return make_report("spin_lower", n, Rational(v),
                     std::string(case_note(n)) + "; vacuous for n <= 14");
}

BoundReport spin_upper(int n, bool allow_outside_range) {
  if (n < 15 && !allow_outside_range)
    throw std::domain_error("spin_upper: stated for n >= 15 (pass the override to extrapolate)");
  if (n < 3) throw std::domain_error("spin_upper: n must be >= 3");
  Int v;
  if (n % 2)
    v = pow2((n - 1) / 2) - triangle(n);
  else if (n % 4 == 2)
    v = pow2((n - 2) / 2) - triangle(n);
  else
    v = pow2((n - 2) / 2) - triangle(n) + n;
  return make_report("spin_upper", n, Rational(v),
                     std::string(case_note(n)) + "; char 0, n >= 15");
}

Int spin_rep_dimension(int n) {
  if (n < 3) throw std::domain_error("spin_rep_dimension: n must be >= 3");
  if (n % 2) return pow2((n - 1) / 2);
  if (n % 4 == 2) return pow2((n - 2) / 2);
  return pow2((n - 2) / 2) + n;
}

BoundReport merkurjev_lower(int n) {
  if (n < 4 || n % 4 != 0) throw std::domain_error("merkurjev_lower: n must be divisible by 4");
  int m = 0;
  for (int t = n; t % 2 == 0; t /= 2) ++m;
  Int v = pow2((n - 2) / 2) - triangle(n) + pow2(m);
  return make_report("merkurjev_lower", n, Rational(v), "n = 0 (mod 4); 2^m = 2-part of n");
}

BoundReport chernousov_serre_lower(int n) {
  const int r = ((n % 8) + 8) % 8;
  if (n >= 7 && (r == 0 || r == 1 || r == 7))
    return make_report("chernousov_serre_lower", n, Rational(n / 2 + 1),
                       "n >= 7, n = 0, +-1 (mod 8)");
  if (n >= 11)
    return make_report("chernousov_serre_lower", n, Rational(n / 2), "n >= 11, other residues");
  throw std::domain_error("chernousov_serre_lower: out of the stated range");
}

int rost_table(int n) {
  static constexpr int table[] = {0, 0, 0, 0, 4, 5, 5, 4, 5, 6, 6, 7};
  if (n < 3 || n > 14) throw std::domain_error("rost_table: n must be 3..14");
  return table[n - 3];
}

BoundReport hspin_value(int n, bool allow_outside_range) {
  if (n % 4 != 0) throw std::domain_error("hspin_value: n must be divisible by 4");
  if (n < 20 && !allow_outside_range)
    throw std::domain_error("hspin_value: stated for n >= 20 (pass the override to extrapolate)");
  Int v = pow2((n - 2) / 2) - triangle(n);
  return make_report("hspin", n, Rational(v), "n >= 20, n = 0 (mod 4), char 0");
}

std::pair<BoundReport, BoundReport> tn_interval(int n) {
  if (n < 15) throw std::domain_error("tn_interval: n must be >= 15");
  BoundReport best_lower = n % 4 == 0 ? merkurjev_lower(n) : spin_lower(n);
  BoundReport lo = make_report("tn_lower", n, best_lower.value - 1,
                               "from " + best_lower.name + " - 1");
  BoundReport hi = spin_upper(n);
  hi.name = "tn_upper";
  hi.validity = "from spin_upper";
  return {std::move(lo), std::move(hi)};
}

Int grassmannian_penalty(const Int& s, const Int& n) {
  if (s < 0 || n < 0) throw std::domain_error("grassmannian_penalty: s, n must be >= 0");
  return s * (s + 2 * n - 1) / 2;
}

namespace {

// exact sign of 7x + n + 2 - 2^((n+4)/4) decides x vs the Pfister bound
bool bound_at_most(int n, const Int& x) {
  // (2^((n+4)/4) - n - 2)/7 <= x  <=>  2^((n+4)/2) <= (7x + n + 2)^2 when rhs >= 0
  Int rhs = 7 * x + n + 2;
  if (rhs < 0) return false;
  return pow2((n + 4) / 2) <= rhs * rhs;
}

// fixed-point decimal string, rounded toward minus infinity
std::string decimal_floor(const Rational& v, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int scaled = numerator(v) * scale / denominator(v);
  if (v < 0 && Rational(scaled, scale) != v) scaled -= 1;
  const bool neg = scaled < 0;
  const Int a = abs(scaled);
  std::string frac = Int(a % scale).str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return (neg ? "-" : "") + Int(a / scale).str() + "." + frac;
}

}  // namespace

Pfister3Bound pfister3_lower_bound(int n) {
  if (n < 2 || n % 2) throw std::domain_error("pfister3_lower_bound: n must be even, n >= 2");
  Pfister3Bound out;
  out.report.name = "pfister3_lower";
  out.report.n = n;
  out.report.validity = "even n; vacuous for n <= 10";

  if ((n + 4) % 4 == 0) {
    out.report.value = Rational(pow2((n + 4) / 4) - n - 2, 7);
    out.report.exact = true;
    out.report.vacuous = out.report.value <= 0;
  } else {
    // bound = (2^k sqrt(2) - n - 2)/7; bracket sqrt(2^(2k+1)) by bisection
    const Int radicand = pow2((n + 4) / 2);
    Int s = sqrt(radicand);
    Rational lo(s), hi(s + 1);
    const Rational tol(1, Int(1000000000));
    while (hi - lo >= tol) {
      Rational mid = (lo + hi) / 2;
      (mid * mid <= radicand ? lo : hi) = mid;
    }
    out.report.exact = false;
    out.report.enclosure = {(lo - n - 2) / 7, (hi - n - 2) / 7};
    out.report.value = out.report.enclosure.lo;
    out.report.vacuous = bound_at_most(n, Int(0));  // bound <= 0
  }

  Int r = 0;
  if (!out.report.vacuous)
    while (!bound_at_most(n, r)) ++r;
  out.least_r = r;
  return out;
}

Int quadratic_polynomial(int n, const Int& r, RootParity parity) {
  if (n < 12 || n % 2) throw std::domain_error("quadratic polynomial: n must be even, n >= 12");
  const Int nn(n);
  if (parity == RootParity::even)
    return 49 * r * r + (14 * nn + 10) * r + nn * nn - 2 * nn + 8 - pow2((n + 4) / 2);
  return 49 * r * r + (14 * nn + 24) * r + nn * nn + 7 - pow2((n + 4) / 2);
}

bool quadratic_check(int n, const Int& r, RootParity parity) {
  return quadratic_polynomial(n, r, parity) >= 0;
}

namespace {

Rational eval_poly(int n, const Rational& r, RootParity parity) {
  const Int nn(n);
  const Rational b = parity == RootParity::even ? Rational(14 * nn + 10) : Rational(14 * nn + 24);
  const Rational c = parity == RootParity::even
                         ? Rational(nn * nn - 2 * nn + 8 - pow2((n + 4) / 2))
                         : Rational(nn * nn + 7 - pow2((n + 4) / 2));
  return 49 * r * r + b * r + c;
}

}  // namespace

RealWitness r_plus(int n, RootParity parity) {
  if (n < 12 || n % 2) throw std::domain_error("r_plus: n must be even, n >= 12");
  const Int radicand = parity == RootParity::even ? 49 * pow2((n + 4) / 2) + 168 * Int(n) - 367
                                                  : 49 * pow2((n + 4) / 2) + 168 * Int(n) - 199;
  const Int shift = parity == RootParity::even ? 7 * Int(n) + 5 : 7 * Int(n) + 12;
  const Int s = sqrt(radicand);

  Rational lo = Rational(s - shift) / 49;
  Rational hi = Rational(s + 1 - shift) / 49;
  if (!(eval_poly(n, lo, parity) < 0 && eval_poly(n, hi, parity) > 0))
    throw std::domain_error("r_plus: initial bracket does not straddle the root");

  const Rational tol(1, Int(1000000000));
  while (hi - lo >= tol) {
    Rational mid = (lo + hi) / 2;
    const Rational v = eval_poly(n, mid, parity);
    if (v == 0) {
      lo = hi = mid;
      break;
    }
    (v < 0 ? lo : hi) = mid;
  }

  // r_+ always dominates the Pfister lower bound
  const Pfister3Bound ref = pfister3_lower_bound(n);
  const Rational ref_hi = ref.report.exact ? ref.report.value : ref.report.enclosure.hi;
  if (lo < ref_hi)
    throw std::domain_error("r_plus: enclosure fell below the Pfister lower bound");
  return {lo, hi};
}

namespace {

void tsv_row(std::ostringstream& os, int n, const std::string& name, const std::string& value,
             bool vacuous, const std::string& validity) {
  os << n << '\t' << name << '\t' << value << '\t' << (vacuous ? 1 : 0) << '\t' << validity
     << '\n';
}

std::string render_value(const BoundReport& r) {
  if (r.exact) return to_string(r.value);
  return "~" + decimal_floor(r.enclosure.lo, 12);
}

void report_row(std::ostringstream& os, const BoundReport& r) {
  tsv_row(os, r.n, r.name, render_value(r), r.vacuous, r.validity);
}

std::string tsv_header() { return "n\tbound-name\tvalue\tvacuous\tvalidity\n"; }

}  // namespace

std::string emit_rost_table_tsv() {
  std::ostringstream os;
  os << tsv_header();
  for (int n = 3; n <= 14; ++n)
    tsv_row(os, n, "rost_exact", std::to_string(rost_table(n)), false, "3 <= n <= 14");
  return os.str();
}

std::string emit_spin_sweep_tsv(int lo, int hi) {
  std::ostringstream os;
  os << tsv_header();
  for (int n = lo; n <= hi; ++n) {
    report_row(os, spin_lower(n));
    if (n >= 15) {
      report_row(os, spin_upper(n));
      tsv_row(os, n, "spin_rep_dimension", spin_rep_dimension(n).str(), false,
              "generically free representation");
      if (n % 4 == 0) report_row(os, merkurjev_lower(n));
      if (n % 4 == 0 && n >= 20) report_row(os, hspin_value(n));
      auto [tl, tu] = tn_interval(n);
      report_row(os, tl);
      report_row(os, tu);
    }
  }
  return os.str();
}

std::string emit_pfister3_sweep_tsv(int lo, int hi) {
  std::ostringstream os;
  os << tsv_header();
  for (int n = lo + (lo % 2); n <= hi; n += 2) {
    const Pfister3Bound b = pfister3_lower_bound(n);
    report_row(os, b.report);
    tsv_row(os, n, "pfister3_least_r", b.least_r.str(), b.report.vacuous, b.report.validity);
    if (n >= 12)
      for (RootParity par : {RootParity::even, RootParity::odd}) {
        const RealWitness w = r_plus(n, par);
        tsv_row(os, n, par == RootParity::even ? "r_plus_even" : "r_plus_odd",
                "~" + decimal_floor(w.lo, 12), false, "width < 1e-9");
      }
  }
  return os.str();
}

}  // namespace wittforge
