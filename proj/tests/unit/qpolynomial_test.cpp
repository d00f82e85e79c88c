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

#include <doctest.h>

#include "kmaj/qpolynomial.hpp"
#include "oracles.hpp"

using namespace kmaj;

namespace {

oracle::Poly as_poly(const QPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST_CASE("construction trims trailing zeros") {
  CHECK(QPolynomial({1, 2, 0, 0}).coeffs() == std::vector<QPolynomial::Coefficient>{1, 2});
  CHECK(QPolynomial({0, 0}).is_zero());
  CHECK(QPolynomial().degree() == 0);
  CHECK(QPolynomial({1, 0, 3}).degree() == 2);
  CHECK(QPolynomial({1, 0, 3}).coefficient(7) == 0);
  CHECK(QPolynomial({1, 0, 3}).total() == 4);
}

TEST_CASE("arithmetic") {
  const QPolynomial a{1, 1};
  const QPolynomial b{1, 1, 1};
  CHECK(a * b == QPolynomial{1, 2, 2, 1});
  CHECK(a + b == QPolynomial{2, 2, 1});
  CHECK(a * QPolynomial() == QPolynomial());
  QPolynomial c;
  c.add_term(3, 2);
  c.add_term(0);
  CHECK(c == QPolynomial{1, 0, 0, 2});
  CHECK(QPolynomial::monomial(2, 5) == QPolynomial{0, 0, 5});
}

TEST_CASE("q-integers, q-factorials and Gaussian binomials") {
  CHECK(QPolynomial::q_integer(3) == QPolynomial{1, 1, 1});
  CHECK(QPolynomial::q_integer(0).is_zero());
  CHECK(QPolynomial::q_factorial(0) == QPolynomial{1});
  CHECK(QPolynomial::q_factorial(3) == QPolynomial{1, 2, 2, 1});
  CHECK(QPolynomial::q_binomial(4, 2) == QPolynomial{1, 1, 2, 1, 1});
  CHECK(QPolynomial::q_binomial(3, 5).is_zero());
  for (int n = 0; n <= 10; ++n) {
    CHECK(as_poly(QPolynomial::q_factorial(static_cast<std::size_t>(n))) == oracle::q_fact(n));
    for (int k = 0; k <= n; ++k) {
      CHECK(as_poly(QPolynomial::q_binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(k))) ==
            oracle::q_multinomial({k, n - k}));
    }
  }
}

TEST_CASE("pretty printing") {
  CHECK(to_string(QPolynomial{1, 2, 2, 1}) == "1 + 2q + 2q^2 + q^3");
  CHECK(to_string(QPolynomial{0, 0, 1, 0, 1}) == "q^2 + q^4");
  CHECK(to_string(QPolynomial{}) == "0");
  CHECK(to_string(QPolynomial{3}) == "3");
  CHECK(to_string(QPolynomial{0, 1}) == "q");
}
