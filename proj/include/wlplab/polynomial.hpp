#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wlplab {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first.  Trailing zero coefficients are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of t^k, zero beyond the degree.
  mpz_class operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  mpz_class evaluate(const mpz_class& t) const;
  /// Multiplication by t^k.
  IntPolynomial shifted(std::size_t k = 1) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial& other) const = default;

  /// Human form, e.g. "1 + 6t + 10t^2 + 4t^3".
  std::string to_string() const;
  /// JSON array of decimal strings, lowest degree first.
  nlohmann::json to_json() const;
  static IntPolynomial from_json(const nlohmann::json& j);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Unimodality verdict.  `mode` is set exactly when the sequence is unimodal
/// and is the index i with a_{i-1} < a_i >= a_{i+1} >= ... (a_{-1} = 0),
/// i.e. the first index of the maximum.
struct UnimodalReport {
  bool is_unimodal = false;
  std::optional<std::size_t> mode;
};

/// The zero polynomial is reported as not unimodal (it has no mode).
UnimodalReport unimodality_report(const IntPolynomial& p);

mpz_class binomial(long n, long k);

}  // namespace wlplab
