#pragma once

#include <vector>

#include "mhodge/scalars.hpp"

namespace mhodge {

// Dense integer-coefficient univariate polynomial, lowest degree first.
// Houses characteristic polynomials and friends; coefficients are exact.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int v) { return IntPolynomial({std::move(v)}); }
  // T^k
  static IntPolynomial monomial(int k, Int coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  // Coefficient of T^k (0 beyond the degree).
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Int(0);
  }

  Int operator()(const Int& x) const;  // evaluation

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // Exact division by (T - root); throws Errc::nonzero_remainder otherwise.
  IntPolynomial divide_by_linear(const Int& root) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace mhodge
