#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace balance {

using Integer = mpz_class;

// Bad caller-supplied data: malformed files, CLI misuse, out-of-range parameters.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exact check of a mathematical claim the library upholds has failed.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Integer pow10(int digits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10u, static_cast<unsigned long>(digits));
  return r;
}

// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Exact rational, kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ + y.q_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ - y.q_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ * y.q_)); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.sign() == 0) throw input_error("division by zero");
    return Rational(mpq_class(x.q_ / y.q_));
  }
  Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
  Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
  Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.q_, y.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

inline std::strong_ordering rat_compare(const Rational& x, const Rational& y) { return x <=> y; }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Always renders as "p/q", e.g. "1/3", "0/1", "-7/2".
inline std::string to_string(const Rational& x) {
  return x.num().get_str() + "/" + x.den().get_str();
}

namespace detail {

// Assembles "int.frac" from a floor-rounded scaled magnitude.
inline std::string digits_to_decimal(const Integer& scaled, int digits, bool negative) {
  Integer ip = scaled / pow10(digits);
  Integer fp = scaled % pow10(digits);
  std::string frac = fp.get_str();
  if (static_cast<int>(frac.size()) < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = ip.get_str();
  if (digits > 0) out += "." + frac;
  if (negative && (ip != 0 || fp != 0)) out.insert(0, "-");
  return out;
}

}  // namespace detail

// Decimal rendering, rounded half-up at the requested number of places.
inline std::string decimal_string(const Rational& x, int digits) {
  Integer p = balance::abs(x).num() * pow10(digits);
  Integer q = x.den();
  Integer scaled = (2 * p + q) / (2 * q);
  return detail::digits_to_decimal(scaled, digits, x.sign() < 0);
}

// Exact element of a real quadratic field: value a + b*sqrt(d) with d
// square-free. Pure rationals are carried with b = 0 and radicand 0 so they
// mix freely with any field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long v) : a_(v) {}             // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& a, const Rational& b, unsigned long d) : a_(a), b_(b), d_(d) {
    if (b_.sign() == 0) {
      d_ = 0;
    } else {
      if (d_ < 2) throw input_error("radicand must be at least 2");
      for (unsigned long p = 2; p * p <= d_; ++p) {
        if (d_ % (p * p) == 0) throw input_error("radicand not square-free");
      }
    }
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  unsigned long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: the square comparison decides.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(Integer(d_));
    auto c = rat_compare(lhs, rhs);
    if (c == std::strong_ordering::equal) return 0;
    return c == std::strong_ordering::greater ? sa : sb;
  }

  QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    unsigned long d = merged_radicand(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    unsigned long d = merged_radicand(x, y);
    Rational rad{Integer(d)};
    return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * rad, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    unsigned long d = merged_radicand(x, y);
    Rational rad{Integer(d)};
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * rad;
    if (norm.sign() == 0) throw input_error("division by zero");
    // Multiply by the conjugate of y and divide by its norm.
    QuadraticNumber conj(y.a_, -y.b_, y.d_);
    QuadraticNumber prod = x * conj;
    return QuadraticNumber(prod.a_ / norm, prod.b_ / norm, d);
  }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() == 0;
  }

  QuadraticNumber pow(unsigned exponent) const {
    QuadraticNumber acc(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) acc = acc * *this;
    return acc;
  }

 private:
  static unsigned long merged_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    if (x.d_ != y.d_) throw input_error("incomparable representation: mismatched radicands");
    return x.d_;
  }

  Rational a_, b_;
  unsigned long d_ = 0;
};

inline std::strong_ordering quad_compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline QuadraticNumber conjugate(const QuadraticNumber& x) {
  return QuadraticNumber(x.rational_part(), -x.radical_part(), x.radicand());
}

inline QuadraticNumber abs(const QuadraticNumber& x) { return x.sign() < 0 ? -x : x; }

// Renders as "(a + b*sqrt(d))"; pure rationals render as "p/q".
inline std::string to_string(const QuadraticNumber& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  return "(" + to_string(x.rational_part()) + " + " + to_string(x.radical_part()) + "*sqrt(" +
         std::to_string(x.radicand()) + "))";
}

// floor(p + q*sqrt(d)) for integers p, q. Relies on q*sqrt(d) being
// irrational whenever q != 0 (d is square-free and >= 2), so the value is
// never an integer in that case.
inline Integer quad_floor(const Integer& p, const Integer& q, unsigned long d) {
  if (q == 0) return p;
  Integer s = isqrt(q * q * Integer(d));
  if (q < 0) s = -s - 1;
  return p + s;
}

// floor of the exact value of x.
inline Integer floor_value(const QuadraticNumber& x) {
  Integer la = x.rational_part().den(), lb = x.radical_part().den();
  Integer l;
  mpz_lcm(l.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
  Integer p = x.rational_part().num() * (l / la);
  Integer q = x.radical_part().num() * (l / lb);
  if (q == 0) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), l.get_mpz_t());
    return r;
  }
  // The value lies strictly between consecutive integers p + floor(q*sqrt(d))
  // and its successor, so the quotient floor is determined by the lower end.
  Integer num = quad_floor(p, q, x.radicand());
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), l.get_mpz_t());
  return r;
}

inline std::string decimal_string(const QuadraticNumber& x, int digits) {
  bool neg = x.sign() < 0;
  QuadraticNumber mag = neg ? -x : x;
  QuadraticNumber scaled = mag * QuadraticNumber(Rational(pow10(digits))) + QuadraticNumber(Rational(1, 2));
  return detail::digits_to_decimal(floor_value(scaled), digits, neg);
}

}  // namespace balance
