#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homspec {

using Integer = mpz_class;

/// Thrown when a library invariant fails; callers treat it as a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

#define HOMSPEC_CHECK(cond, msg)                                              \
  do {                                                                        \
    if (!(cond))                                                              \
      throw ::homspec::internal_error(std::string("invariant violated: ") +  \
                                      (msg));                                 \
  } while (0)

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  }
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p" or "p/q". Anything else (including decimals) is rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Integer floor() const;
  Integer ceil() const;

  std::string str() const;
  /// Rounded decimal rendering with the given digit count (approximation).
  std::string decimal(unsigned digits) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// base^exp with exact arithmetic; negative exponents invert.
Rational pow(const Rational& base, long exp);

Integer binomial(unsigned long n, unsigned long k);

inline const Rational& min(const Rational& a, const Rational& b) { return (b < a) ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return (a < b) ? b : a; }

}  // namespace homspec
