#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

using Rational = mpq_class;

// a + b i with a, b rational; the involution is complex conjugation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT: implicit like a numeric literal
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ + b.re_), Rational(a.im_ + b.im_)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ - b.re_), Rational(a.im_ - b.im_)};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re_ * b.re_ - a.im_ * b.im_), Rational(a.re_ * b.im_ + a.im_ * b.re_)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n == 0) throw std::domain_error("division by zero");
    return {Rational((a.re_ * b.re_ + a.im_ * b.im_) / n), Rational((a.im_ * b.re_ - a.re_ * b.im_) / n)};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline Rational conj(const Rational& a) { return a; }
inline GaussianRational conj(const GaussianRational& a) { return {a.re(), Rational(-a.im())}; }

// α α*
inline Rational norm(const Rational& a) { return a * a; }
inline Rational norm(const GaussianRational& a) { return a.re() * a.re() + a.im() * a.im(); }

inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_zero(const GaussianRational& a) { return a.re() == 0 && a.im() == 0; }

// Real part, and whether the element is fixed by the involution.
inline Rational real_part(const Rational& a) { return a; }
inline Rational real_part(const GaussianRational& a) { return a.re(); }
inline bool is_real(const Rational&) { return true; }
inline bool is_real(const GaussianRational& a) { return a.im() == 0; }

namespace detail {

inline std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline Rational parse_rational(const std::string& text, const std::string& whole) {
  std::size_t k = 0;
  if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
  const std::size_t digits0 = k;
  while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
  bool ok = k > digits0;
  if (ok && k < text.size() && text[k] == '/') {
    const std::size_t d0 = ++k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    ok = k > d0;
  }
  if (!ok || k != text.size()) throw invalid_input("cannot parse scalar \"" + whole + "\"");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw invalid_input("cannot parse scalar \"" + whole + "\"");
  if (q.get_den() == 0) throw invalid_input("zero denominator in \"" + whole + "\"");
  q.canonicalize();
  return q;
}

inline std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Integers a, b with a² + b² = n, searched directly; n is kept small enough
// that the search is cheap.
inline std::optional<std::pair<mpz_class, mpz_class>> two_squares(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (n > mpz_class("100000000000000")) throw precondition_failed("two-squares search limited to 1e14");
  for (mpz_class a = 0; a * a <= n; ++a)
    if (auto b = exact_sqrt(n - a * a)) return std::make_pair(a, *b);
  return std::nullopt;
}

}  // namespace detail

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr const char* name = "Q";

  static Rational parse(const std::string& s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return detail::parse_rational(t, s);
  }
  static std::string format(const Rational& q) { return detail::rational_text(q); }

  // Some γ with γγ* = r, if one exists in the field.
  static std::optional<Rational> norm_root(const Rational& r) {
    auto p = detail::exact_sqrt(r.get_num());
    auto q = detail::exact_sqrt(r.get_den());
    if (!p || !q) return std::nullopt;
    Rational out(*p, *q);
    out.canonicalize();
    return out;
  }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr const char* name = "Q(i)";

  // Accepts "a/b", "c/d i", "a/b+c/d i", "a/b-c/d i", "i", "-i", "1+i".
  static GaussianRational parse(const std::string& s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw invalid_input("empty scalar");
    if (t.back() != 'i') return {detail::parse_rational(t, s)};
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
      if (t[k] == '+' || t[k] == '-') {
        split = k;
        break;
      }
    const std::string re_text = split == std::string::npos ? "" : t.substr(0, split);
    std::string im_text = split == std::string::npos ? t : t.substr(split);
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return {re_text.empty() ? Rational(0) : detail::parse_rational(re_text, s), detail::parse_rational(im_text, s)};
  }

  static std::string format(const GaussianRational& z) {
    if (z.im() == 0) return detail::rational_text(z.re());
    std::string im;
    if (z.im() == 1) im = "i";
    else if (z.im() == -1) im = "-i";
    else im = detail::rational_text(z.im()) + " i";
    if (z.re() == 0) return im;
    return detail::rational_text(z.re()) + (im[0] == '-' ? "" : "+") + im;
  }

  // γ = x + y i with x² + y² = r: r = p/q is a sum of two rational squares iff
  // pq is a sum of two integer squares.
  static std::optional<GaussianRational> norm_root(const Rational& r) {
    if (r < 0) return std::nullopt;
    const mpz_class n = r.get_num() * r.get_den();
    auto ab = detail::two_squares(n);
    if (!ab) return std::nullopt;
    Rational x(ab->first, r.get_den()), y(ab->second, r.get_den());
    x.canonicalize();
    y.canonicalize();
    return GaussianRational(x, y);
  }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << scalar_traits<GaussianRational>::format(z);
}

}  // namespace orthokit
