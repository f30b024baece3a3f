#include "homspec/rational.hpp"

#include <cctype>

namespace homspec {

namespace {

mpq_class make_canonical(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(Integer(num), Integer(den))) {}

Rational::Rational(const Integer& num, const Integer& den) : v_(make_canonical(num, den)) {}

Rational Rational::parse(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string s(text.substr(begin, end - begin));
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto check_part = [](std::string_view part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };

  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_part(s, true))
      throw std::invalid_argument("bad rational literal '" + s + "' (expected p or p/q)");
    if (s[0] == '+') s.erase(0, 1);  // mpz rejects an explicit plus sign
    return Rational(Integer(s), Integer(1));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_part(num, true) || !check_part(den, false))
    throw std::invalid_argument("bad rational literal '" + s + "' (expected p or p/q)");
  if (num[0] == '+') num.erase(0, 1);
  return Rational(Integer(num), Integer(den));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::decimal(unsigned digits) const {
  Integer num = numerator(), den = denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round half away from zero
  Integer scaled = (num * scale * 2 + den) / (den * 2);
  Integer ipart = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = neg && (ipart != 0 || frac != 0) ? "-" : "";
  out += ipart.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  if (invert && base.is_zero()) throw std::invalid_argument("zero to a negative power");
  Integer pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(pd.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return invert ? Rational(pd, pn) : Rational(pn, pd);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace homspec
