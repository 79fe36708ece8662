// Rationality-level schedules tau(n) and their pair classification: almost
// identical, almost coprime, eventually distinct. Affine families get exact
// limit verdicts; explicit tables only get finite-horizon reports, since no
// limit statement can be read off finite data.
#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unfolding/rational.hpp"

namespace unfolding {

class Schedule {
 public:
  // tau(n) = slope * n + intercept, evaluated for n >= 1.
  static Schedule affine(long long slope, long long intercept) {
    if (slope < 0) throw std::invalid_argument("schedule slope must be non-negative");
    if (slope + intercept < 1)
      throw std::invalid_argument("schedule must satisfy tau(1) = slope + intercept >= 1");
    Schedule s;
    s.affine_ = true;
    s.slope_ = slope;
    s.intercept_ = intercept;
    return s;
  }

  static Schedule table(std::vector<long long> values) {
    if (values.empty()) throw std::invalid_argument("explicit schedule must be non-empty");
    for (long long v : values)
      if (v < 1) throw std::invalid_argument("explicit schedule entries must be >= 1");
    Schedule s;
    s.affine_ = false;
    s.values_ = std::move(values);
    return s;
  }

  bool is_affine() const { return affine_; }

  long long slope() const {
    require_affine();
    return slope_;
  }

  long long intercept() const {
    require_affine();
    return intercept_;
  }

  const std::vector<long long>& values() const {
    if (affine_) throw std::logic_error("affine schedule has no value table");
    return values_;
  }

  // Largest valid n, or -1 when unbounded.
  long long horizon() const { return affine_ ? -1 : static_cast<long long>(values_.size()); }

  bool has(long long n) const {
    if (n < 1) return false;
    return affine_ || n <= horizon();
  }

  long long at(long long n) const {
    if (n < 1) throw std::invalid_argument("schedule index n must be >= 1");
    if (affine_) {
      const __int128 v = static_cast<__int128>(slope_) * n + intercept_;
      if (v > static_cast<__int128>(1) << 62) throw std::overflow_error("schedule value overflow");
      return static_cast<long long>(v);
    }
    if (n > horizon())
      throw std::invalid_argument("n = " + std::to_string(n) + " beyond explicit schedule horizon");
    return values_[static_cast<std::size_t>(n - 1)];
  }

 private:
  void require_affine() const {
    if (!affine_) throw std::logic_error("not an affine schedule");
  }

  bool affine_ = true;
  long long slope_ = 0;
  long long intercept_ = 1;
  std::vector<long long> values_;
};

inline Rational gcd_ratio(const Schedule& s1, const Schedule& s2, long long n) {
  const long long t1 = s1.at(n);
  const long long t2 = s2.at(n);
  return Rational(std::gcd(t1, t2), std::min(t1, t2));
}

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

struct PairClassification {
  Verdict almost_identical = Verdict::unknown;
  Verdict almost_coprime = Verdict::unknown;
  Verdict eventually_distinct = Verdict::unknown;
  std::string witness;
};

namespace detail {

inline long long cross_determinant(const Schedule& s1, const Schedule& s2) {
  // gcd(t1(n), t2(n)) divides every integer combination of the two values,
  // in particular a2*t1(n) - a1*t2(n) = a2*b1 - a1*b2.
  const __int128 d = static_cast<__int128>(s2.slope()) * s1.intercept() -
                     static_cast<__int128>(s1.slope()) * s2.intercept();
  const __int128 mag = d < 0 ? -d : d;
  if (mag > static_cast<__int128>(1) << 62) throw std::overflow_error("schedule overflow");
  return static_cast<long long>(mag);
}

}  // namespace detail

// Exact limsup of the gcd ratio for a pair of affine schedules.
inline Rational affine_limsup_gcd_ratio(const Schedule& s1, const Schedule& s2) {
  if (!s1.is_affine() || !s2.is_affine())
    throw std::invalid_argument("limsup is only decidable for affine schedules");
  const long long a1 = s1.slope(), b1 = s1.intercept();
  const long long a2 = s2.slope(), b2 = s2.intercept();

  if (a1 == 0 && a2 == 0) return Rational(std::gcd(b1, b2), std::min(b1, b2));

  if (a1 == 0 || a2 == 0) {
    // One side is the constant c; gcd(tau(n), c) depends only on tau(n) mod c,
    // and d | tau(n) is solvable in n exactly when gcd(slope, d) divides the
    // intercept. The largest such divisor of c is attained infinitely often.
    const long long c = a1 == 0 ? b1 : b2;
    const long long slope = a1 == 0 ? a2 : a1;
    const long long intercept = a1 == 0 ? b2 : b1;
    long long best = 1;
    const long long b_mag = intercept < 0 ? -intercept : intercept;
    for (long long d = 1; d * d <= c; ++d) {
      if (c % d != 0) continue;
      for (long long divisor : {d, c / d}) {
        if (b_mag % std::gcd(slope, divisor) == 0) best = std::max(best, divisor);
      }
    }
    return Rational(best, c);
  }

  const long long det = detail::cross_determinant(s1, s2);
  if (det != 0) return Rational(0);
  // Proportional schedules: tau_i(n) = c_i * (alpha*n + beta) with a primitive
  // common direction, so the ratio is the constant gcd(c1,c2)/min(c1,c2).
  const long long c1 = std::gcd(a1, b1);
  const long long c2 = std::gcd(a2, b2);
  return Rational(std::gcd(c1, c2), std::min(c1, c2));
}

inline PairClassification classify(const Schedule& s1, const Schedule& s2) {
  PairClassification out;
  std::ostringstream witness;

  if (s1.is_affine() && s2.is_affine()) {
    const long long a1 = s1.slope(), b1 = s1.intercept();
    const long long a2 = s2.slope(), b2 = s2.intercept();
    const bool identical_form = (a1 == a2 && b1 == b2);

    const bool ai = (a1 == a2 && a1 >= 1) || (a1 == 0 && a2 == 0 && b1 == b2);
    out.almost_identical = ai ? Verdict::yes : Verdict::no;

    const long long det = (a1 >= 1 && a2 >= 1) ? detail::cross_determinant(s1, s2) : -1;
    const bool ac = a1 >= 1 && a2 >= 1 && det != 0;
    out.almost_coprime = ac ? Verdict::yes : Verdict::no;

    out.eventually_distinct = identical_form ? Verdict::no : Verdict::yes;

    if (ac)
      witness << "gcd(t1(n), t2(n)) divides |a2*b1 - a1*b2| = " << det << ", so the gcd ratio vanishes";
    else if (identical_form)
      witness << "identical schedules: gcd ratio is constantly 1";
    else
      witness << "limsup of the gcd ratio is " << to_string(affine_limsup_gcd_ratio(s1, s2));
    witness << "; t1(n) = t2(n) for infinitely many n: " << (identical_form ? "yes" : "no");
  } else {
    long long n_max = 20;
    for (const Schedule* s : {&s1, &s2})
      if (!s->is_affine()) n_max = std::min(n_max, s->horizon());
    Rational lo = gcd_ratio(s1, s2, 1), hi = lo;
    for (long long n = 2; n <= n_max; ++n) {
      const Rational r = gcd_ratio(s1, s2, n);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    witness << "finite horizon n in [1, " << n_max << "]: gcd ratio ranges over ["
            << to_string(lo) << ", " << to_string(hi) << "], last = "
            << to_string(gcd_ratio(s1, s2, n_max)) << "; limits undecidable from a table";
  }

  out.witness = witness.str();
  return out;
}

// Whether limsup gcd(t1(n), t2(n)) / min(t1(n), t2(n)) >= 3*delta; exact for
// affine pairs, finite-horizon otherwise.
inline bool nonapproach_condition(const Schedule& s1, const Schedule& s2, const Rational& delta,
                                  long long horizon) {
  const Rational threshold = 3 * delta;
  if (s1.is_affine() && s2.is_affine()) return affine_limsup_gcd_ratio(s1, s2) >= threshold;
  long long n_max = horizon;
  for (const Schedule* s : {&s1, &s2})
    if (!s->is_affine()) n_max = std::min(n_max, s->horizon());
  if (n_max < 1) throw std::invalid_argument("empty horizon for explicit schedules");
  for (long long n = 1; n <= n_max; ++n)
    if (gcd_ratio(s1, s2, n) >= threshold) return true;
  return false;
}

// Literal forms: "a*n+b" (also "an+b", "n", "n+3", "2n", "5"), or "[t1,t2,...]".
inline Schedule parse_schedule_literal(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (compact.empty()) throw std::invalid_argument("empty schedule literal");

  if (compact.front() == '[') {
    if (compact.back() != ']') throw std::invalid_argument("unterminated schedule table");
    std::vector<long long> values;
    std::string body = compact.substr(1, compact.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      const std::size_t comma = body.find(',', pos);
      const std::string token =
          comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
      try {
        values.push_back(std::stoll(token));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad schedule table entry: '" + token + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Schedule::table(std::move(values));
  }

  const std::size_t n_pos = compact.find('n');
  auto parse_ll = [](const std::string& s, long long fallback) {
    if (s.empty()) return fallback;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad schedule literal: '" + s + "'");
    }
  };
  if (n_pos == std::string::npos) return Schedule::affine(0, parse_ll(compact, 0));

  std::string coef = compact.substr(0, n_pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  const long long a = parse_ll(coef, 1);
  std::string rest = compact.substr(n_pos + 1);
  long long b = 0;
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-')
      throw std::invalid_argument("expected +/- after 'n' in schedule literal");
    b = parse_ll(rest, 0);
  }
  return Schedule::affine(a, b);
}

inline std::string schedule_literal(const Schedule& s) {
  if (!s.is_affine()) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.values().size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s.values()[i]);
    }
    return out + "]";
  }
  const long long a = s.slope(), b = s.intercept();
  if (a == 0) return std::to_string(b);
  std::string head = a == 1 ? "n" : std::to_string(a) + "*n";
  if (b == 0) return head;
  return head + (b > 0 ? "+" : "") + std::to_string(b);
}

}  // namespace unfolding
