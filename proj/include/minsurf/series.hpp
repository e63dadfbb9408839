#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace minsurf {

using Complex = std::complex<double>;

/// Truncated Taylor data sum_k c_k z^k of a polynomial.
///
/// Coefficients are never empty; the zero series is [0]. Every coefficient is
/// finite, checked on construction. Trailing zeros are kept as given and
/// ignored by operator==.
class PowerSeries {
 public:
  PowerSeries();
  explicit PowerSeries(std::vector<Complex> coeffs);
  PowerSeries(std::initializer_list<Complex> coeffs);

  static PowerSeries constant(Complex c);
  /// The monomial c z^k.
  static PowerSeries monomial(Complex c, int k);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex operator[](int k) const { return k <= degree() ? coeffs_[k] : Complex{}; }

  /// Horner evaluation.
  Complex eval(Complex z) const noexcept;
  Complex operator()(Complex z) const noexcept { return eval(z); }

  PowerSeries derivative() const;
  /// Termwise primitive vanishing at 0.
  PowerSeries antiderivative() const;

  /// True when every coefficient is exactly zero.
  bool is_zero() const noexcept;
  /// Largest coefficient modulus.
  double max_abs_coeff() const noexcept;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  /// Full Cauchy product; degree is deg(a)+deg(b).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(Complex c, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) noexcept;

 private:
  std::vector<Complex> coeffs_;
};

inline PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) { return a * b; }

}  // namespace minsurf
