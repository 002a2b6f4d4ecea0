#include "mhodge/polynomial.hpp"

#include <algorithm>

#include "mhodge/error.hpp"

namespace mhodge {

IntPolynomial IntPolynomial::monomial(int k, Int coeff) {
  std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_by_linear(const Int& root) const {
  if (is_zero()) return zero();
  // synthetic division: quotient coefficients from the top down
  std::vector<Int> q(c_.size() - 1, Int(0));
  Int carry = c_.back();
  for (std::size_t i = c_.size() - 1; i > 0; --i) {
    q[i - 1] = carry;
    carry = c_[i - 1] + root * carry;
  }
  if (carry != 0)
    fail(Errc::nonzero_remainder,
         "division by (T - " + carry.get_str() + "...) leaves remainder " + carry.get_str());
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Int& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    if (!s.empty()) s += (a > 0) ? " + " : " - ";
    else if (a < 0) s += "-";
    Int mag = abs(a);
    bool need_coeff = (mag != 1) || k == 0;
    if (need_coeff) s += mag.get_str();
    if (k > 0) {
      if (need_coeff) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace mhodge
