#include "jsgft/scalar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace jsgft {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_spectral_radius: return "ZeroSpectralRadius";
    case Errc::irrational_spectrum: return "IrrationalSpectrum";
    case Errc::bad_supplied_spectrum: return "BadSuppliedSpectrum";
    case Errc::not_an_eigenvalue: return "NotAnEigenvalue";
    case Errc::chain_defect: return "ChainDefect";
    case Errc::unknown_subspace: return "UnknownSubspace";
    case Errc::unknown_eigenvalue: return "UnknownEigenvalue";
    case Errc::parse_error: return "ParseError";
    case Errc::inconsistent_dimensions: return "InconsistentDimensions";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::zero_signal: return "ZeroSignal";
    case Errc::numerical_conformance: return "NumericalConformance";
    case Errc::io_error: return "IoError";
    case Errc::invalid_config: return "InvalidConfig";
  }
  return "Error";
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::inconsistent_dimensions:
    case Errc::unknown_node:
    case Errc::dimension_mismatch:
    case Errc::io_error:
    case Errc::invalid_config:
      return 2;
    case Errc::irrational_spectrum:
    case Errc::bad_supplied_spectrum:
    case Errc::zero_spectral_radius:
    case Errc::not_an_eigenvalue:
    case Errc::unknown_eigenvalue:
      return 4;
    default:
      return 3;
  }
}

mpq_class rational_from_string(const std::string& text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) raise(Errc::parse_error, "empty numeric literal");

  if (t[0] == '+') t.erase(0, 1);
  if (t.empty()) raise(Errc::parse_error, "empty numeric literal");

  // Plain integers and p/q go straight to GMP.
  if (t.find_first_of(".eE") == std::string::npos) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) raise(Errc::parse_error, "bad rational literal '" + text + "'");
    if (q.get_den() == 0) raise(Errc::parse_error, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }

  // Decimal / scientific literal: sign, digits, optional fraction, optional exponent.
  size_t pos = 0;
  bool neg = false;
  if (t[pos] == '+' || t[pos] == '-') {
    neg = t[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; pos < t.size(); ++pos) {
    char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    auto [p, ec] = std::from_chars(t.data() + pos, t.data() + t.size(), exponent);
    if (ec != std::errc() || p != t.data() + t.size())
      raise(Errc::parse_error, "bad exponent in '" + text + "'");
    pos = t.size();
  }
  if (!seen_digit || pos != t.size())
    raise(Errc::parse_error, "bad numeric literal '" + text + "'");

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);  // explicit base: "025" is not octal
  if (neg) mantissa = -mantissa;
  long net = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  mpq_class q = net >= 0 ? mpq_class(mantissa * pow10) : mpq_class(mantissa, pow10);
  q.canonicalize();
  return q;
}

mpq_class rational_from_double(double x) {
  if (!std::isfinite(x)) raise(Errc::parse_error, "non-finite value has no rational form");
  mpq_class q(x);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  std::string out = re_.get_str();
  if (sgn(im_) >= 0) out += "+";
  out += im_.get_str();
  out += "i";
  return out;
}

std::string ScalarOps<Complex>::str(const Complex& s) {
  std::ostringstream os;
  os.precision(17);
  os << s.real();
  if (s.imag() >= 0 || std::isnan(s.imag()))
    os << "+" << s.imag() << "i";
  else
    os << s.imag() << "i";
  return os.str();
}

}  // namespace jsgft
