#include "wlplab/polynomial.hpp"

#include <stdexcept>

namespace wlplab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> c(k, mpz_class(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0 || c != 1) term = c.get_str();
    if (k >= 1) term += "t";
    if (k >= 2) term += "^" + std::to_string(k);
    if (out.empty()) {
      out = term;
    } else if (c < 0) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

nlohmann::json IntPolynomial::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<mpz_class> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(e.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad decimal coefficient '" + e.get<std::string>() + "'");
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

UnimodalReport unimodality_report(const IntPolynomial& p) {
  const auto& a = p.coeffs();
  if (a.empty()) return {};
  std::size_t peak = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] > a[peak]) peak = i;
  for (std::size_t i = 0; i < peak; ++i)
    if (a[i] > a[i + 1]) return {};
  for (std::size_t i = peak; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) return {};
  return {true, peak};
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace wlplab
