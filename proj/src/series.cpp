#include "minsurf/series.hpp"

#include <algorithm>
#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

void check_finite(const std::vector<Complex>& coeffs) {
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InputError("power series coefficient is not finite");
    }
  }
}

}  // namespace

PowerSeries::PowerSeries() : coeffs_{Complex{}} {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(Complex{});
  }
  check_finite(coeffs_);
}

PowerSeries::PowerSeries(std::initializer_list<Complex> coeffs)
    : PowerSeries(std::vector<Complex>(coeffs)) {}

PowerSeries PowerSeries::constant(Complex c) { return PowerSeries({c}); }

PowerSeries PowerSeries::monomial(Complex c, int k) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(std::max(k, 0)) + 1);
  coeffs.back() = c;
  return PowerSeries(std::move(coeffs));
}

Complex PowerSeries::eval(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.size() == 1) {
    return PowerSeries{};
  }
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::antiderivative() const {
  if (is_zero()) {
    return PowerSeries{};
  }
  std::vector<Complex> out(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  }
  return PowerSeries(std::move(out));
}

bool PowerSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

double PowerSeries::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) {
    m = std::max(m, std::abs(c));
  }
  return m;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  return a + Complex{-1.0, 0.0} * b;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  // Extended-precision accumulation: each output coefficient is rounded once.
  using Wide = std::complex<long double>;
  std::vector<Wide> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += Wide(a.coeffs_[i]) * Wide(b.coeffs_[j]);
    }
  }
  std::vector<Complex> out(acc.size());
  std::transform(acc.begin(), acc.end(), out.begin(), [](Wide w) { return Complex(w); });
  return PowerSeries(std::move(out));
}

PowerSeries operator*(Complex c, const PowerSeries& a) {
  std::vector<Complex> out = a.coeffs_;
  for (Complex& x : out) {
    x *= c;
  }
  return PowerSeries(std::move(out));
}

bool operator==(const PowerSeries& a, const PowerSeries& b) noexcept {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[static_cast<int>(k)] != b[static_cast<int>(k)]) {
      return false;
    }
  }
  return true;
}

}  // namespace minsurf
