// Copyright 2026 The kmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kmaj {

// Polynomial in q with nonnegative integer coefficients; coeffs()[d] is the
// coefficient of q^d. Trailing zeros are always trimmed, so the zero
// polynomial has no coefficients.
class QPolynomial {
 public:
  using Coefficient = std::uint64_t;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<Coefficient> coeffs);
  QPolynomial(std::initializer_list<Coefficient> coeffs) : QPolynomial(std::vector<Coefficient>(coeffs)) {}

  static QPolynomial monomial(std::size_t degree, Coefficient c = 1);
  // [n]_q = 1 + q + ... + q^{n-1}.
  static QPolynomial q_integer(std::size_t n);
  // [n]_q! = [1]_q [2]_q ... [n]_q.
  static QPolynomial q_factorial(std::size_t n);
  // Gaussian binomial [n choose k]_q by the q-Pascal recurrence.
  static QPolynomial q_binomial(std::size_t n, std::size_t k);

  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the leading term; 0 for the zero polynomial.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  Coefficient coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : 0; }
  // Value at q = 1, i.e. the number of objects counted.
  Coefficient total() const;

  void add_term(std::size_t degree, Coefficient c = 1);

  QPolynomial& operator+=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<Coefficient> coeffs_;
};

// "1 + 2q + 2q^2 + q^3"; the zero polynomial prints as "0".
std::string to_string(const QPolynomial& p);

}  // namespace kmaj
