#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace symc {

/*
 * Element of Q(i): re + im*i with GMP rationals.  Elements of Q simply have
 * im == 0; every operation has a fast path for that case.
 */
class Scalar {
 public:
  mpq_class re, im;

  Scalar() = default;
  Scalar(long v) : re(v) {}
  Scalar(int v) : re(v) {}
  Scalar(const mpq_class& r) : re(r) {}
  Scalar(const mpz_class& r) : re(r) {}
  Scalar(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

  static Scalar frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  static Scalar imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return sgn(im) == 0 && re == 1; }

  Scalar operator-() const { return Scalar(-re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re *= o.re;
      return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw ArgumentError("division by zero");
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re /= o.re;
      return *this;
    }
    mpq_class n = o.re * o.re + o.im * o.im;
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const { return Scalar(1) / *this; }

  // "p/q" or "p/q+r/s*i"
  std::string str() const {
    if (sgn(im) == 0) return re.get_str();
    std::string out;
    if (sgn(re) != 0) out = re.get_str();
    if (sgn(im) > 0 && !out.empty()) out += "+";
    out += im.get_str() + "*i";
    return out;
  }

  static Scalar parse(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }
};

namespace detail {

inline mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw ArgumentError("empty rational literal");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  auto check = [&](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw ArgumentError("malformed rational: " + std::string(s));
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ArgumentError("malformed rational: " + std::string(s));
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    check(t);
    return mpq_class(mpz_class(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  check(num);
  check(den);
  if (den[0] == '-') throw ArgumentError("negative denominator: " + std::string(s));
  mpz_class d(den);
  if (d == 0) throw ArgumentError("zero denominator: " + std::string(s));
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace detail

// Accepts "a", "a/b", "c*i", "c/d*i", "i", "-i", "a/b+c/d*i", "a/b-c/d*i".
inline Scalar Scalar::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw ArgumentError("empty scalar literal");
  if (t.back() != 'i') return Scalar(detail::parse_rational(t));
  // split at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  std::string real_part = split == std::string::npos ? "" : t.substr(0, split);
  std::string imag_part = split == std::string::npos ? t : t.substr(split);
  imag_part.pop_back();  // 'i'
  if (!imag_part.empty() && imag_part.back() == '*') imag_part.pop_back();
  mpq_class im;
  if (imag_part.empty() || imag_part == "+")
    im = 1;
  else if (imag_part == "-")
    im = -1;
  else
    im = detail::parse_rational(imag_part);
  mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_rational(real_part);
  return Scalar(re, im);
}

}  // namespace symc
