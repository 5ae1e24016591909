#include "qbk/classical.hpp"

#include <stdexcept>
#include <utility>

namespace qbk::classical {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPoly::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += qbk::to_string(abs(c));
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0) throw std::invalid_argument("BernoulliTable needs max_index >= 0");
  values_.reserve(static_cast<std::size_t>(max_index) + 1);
  values_.emplace_back(1);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -(1/(n+1)) sum_{j<n} C(n+1, j) B_j
  for (int n = 1; n <= max_index; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-acc / Rational(n + 1));
  }
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli requires n >= 0");
  return BernoulliTable(n)[n];
}

Rational sum_powers_brute(int n, int k) {
  Integer acc = 0;
  for (long j = 1; j < k; ++j) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    acc += term;
  }
  return Rational(acc);
}

RationalPoly sum_powers_poly(int n) {
  if (n < 1) throw std::invalid_argument("sum_powers_poly requires n >= 1");
  // S_n(k) = 1/(n+1) sum_{j=0}^{n} C(n+1, j) B_j k^{n+1-j}
  const BernoulliTable b(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 2);
  for (int j = 0; j <= n; ++j) {
    coeffs[static_cast<std::size_t>(n + 1 - j)] = Rational(binomial(n + 1, j)) * b[j] / Rational(n + 1);
  }
  return RationalPoly(std::move(coeffs));
}

RationalPoly bernoulli_monic_poly(int n) { return sum_powers_poly(n).derivative(); }

namespace {

// Power series truncated after t^order.
using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series reciprocal(const Series& a) {
  if (a.empty() || a[0] == 0) throw std::domain_error("series not invertible");
  Series out(a.size(), 0);
  out[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += a[j] * out[n - j];
    out[n] = -acc / a[0];
  }
  return out;
}

// e^t / ((e^t - 1)/t)^2, so that -t e^t/(1 - e^t)^2 = -(1/t) * G(t).
Series barnes_kernel(std::size_t order) {
  Series exp_t(order + 1), shifted_exp(order + 1);
  Rational factorial = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) factorial *= static_cast<long>(i);
    exp_t[i] = Rational(1) / factorial;
    shifted_exp[i] = Rational(1) / (factorial * static_cast<long>(i + 1));
  }
  const Series inv = reciprocal(shifted_exp);
  return multiply(exp_t, multiply(inv, inv));
}

}  // namespace

Rational barnes_limit_coeff(int n) {
  if (n < 0) throw std::invalid_argument("barnes_limit_coeff requires n >= 0");
  const Series g = barnes_kernel(static_cast<std::size_t>(n) + 1);
  Rational factorial = 1;
  for (long i = 2; i <= n; ++i) factorial *= i;
  return -g[static_cast<std::size_t>(n) + 1] * factorial;
}

Rational barnes_limit_pole() { return -barnes_kernel(0)[0]; }

}  // namespace qbk::classical
