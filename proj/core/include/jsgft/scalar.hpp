#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "jsgft/errors.hpp"

namespace jsgft {

using Complex = std::complex<double>;

inline constexpr double kDefaultEpsZero = 1e-10;
inline constexpr double kDefaultEpsCluster = 1e-7;

// Parses "p/q", integers, and decimal/scientific literals ("-1.5e3") into an
// exact rational. Throws Errc::parse_error on malformed input.
mpq_class rational_from_string(const std::string& text);

// Lossless: every finite double is a dyadic rational.
mpq_class rational_from_double(double x);

std::string rational_to_string(const mpq_class& q);

// Exact square root when q is a perfect square in Q, nullopt otherwise.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// Complex number with exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}            // NOLINT(runtime/explicit)
  GaussianRational(long v) : re_(v), im_(0) {}           // NOLINT(runtime/explicit)
  GaussianRational(const mpq_class& re) : re_(re), im_(0) {}  // NOLINT(runtime/explicit)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long num, long den, long inum, long iden)
      : re_(num, den), im_(inum, iden) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational parse(const std::string& re, const std::string& im = "0") {
    return {rational_from_string(re), rational_from_string(im)};
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

  // |z|^2, always rational.
  mpq_class norm2() const { return mpq_class(re_ * re_ + im_ * im_); }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  double abs() const { return std::abs(to_complex()); }

  // |z| when re^2 + im^2 is a perfect rational square.
  std::optional<mpq_class> exact_abs() const { return rational_sqrt(norm2()); }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r(re_ * o.re_ - im_ * o.im_);
    mpq_class i(re_ * o.im_ + im_ * o.re_);
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) raise(Errc::singular_matrix, "division by zero Gaussian rational");
    mpq_class d = o.norm2();
    mpq_class r((re_ * o.re_ + im_ * o.im_) / d);
    mpq_class i((im_ * o.re_ - re_ * o.im_) / d);
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // "3/2" for real values, "3/2+1/4i" otherwise.
  std::string str() const;

 private:
  mpq_class re_, im_;
};

// Uniform scalar access for the two backends. Algorithms are templated on the
// scalar type S and consult ScalarOps<S> for backend-dependent behavior;
// `eps` parameters are absolute magnitude thresholds, ignored when exact.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational conj(const GaussianRational& s) { return s.conj(); }
  static double abs(const GaussianRational& s) { return s.abs(); }
  static bool is_zero(const GaussianRational& s, double /*eps*/) { return s.is_zero(); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static GaussianRational from_real_string(const std::string& t) {
    return GaussianRational(rational_from_string(t));
  }
  static GaussianRational from_strings(const std::string& re, const std::string& im) {
    return {rational_from_string(re), rational_from_string(im)};
  }
  static Complex to_complex(const GaussianRational& s) { return s.to_complex(); }
  static std::string str(const GaussianRational& s) { return s.str(); }
};

template <>
struct ScalarOps<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex conj(const Complex& s) { return std::conj(s); }
  static double abs(const Complex& s) { return std::abs(s); }
  static bool is_zero(const Complex& s, double eps) { return std::abs(s) <= eps; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static Complex from_real_string(const std::string& t) {
    return {rational_from_string(t).get_d(), 0.0};
  }
  static Complex from_strings(const std::string& re, const std::string& im) {
    return {rational_from_string(re).get_d(), rational_from_string(im).get_d()};
  }
  static Complex to_complex(const Complex& s) { return s; }
  static std::string str(const Complex& s);
};

}  // namespace jsgft
