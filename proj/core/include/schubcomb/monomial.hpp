#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schubcomb {

// Monomial in x_1, x_2, ... with nonnegative exponents. Variables index grid
// rows throughout this library.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int index, int power = 1);

  int exponent(int index) const;
  int max_var() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  bool is_one() const { return exps_.empty(); }

  Monomial& operator*=(const Monomial& rhs);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    lhs *= rhs;
    return lhs;
  }

  // Substitutes x_k -> x_{n-k+1}; requires every variable index <= n.
  Monomial reversed_rows(int n) const;

  auto operator<=>(const Monomial&) const = default;

  // "1", "x2", "x1*x3^2", variables in increasing index order.
  std::string str() const;

 private:
  // Invariant: no trailing zero exponents, so equality is structural.
  std::vector<std::uint8_t> exps_;  // exps_[k] = exponent of x_{k+1}
};

// Polynomial with positive integer coefficients. Also serves as a weight
// multiset: add() one monomial per object, coefficients count multiplicity.
class WeightPolynomial {
 public:
  WeightPolynomial() = default;

  void add(const Monomial& m, long long count = 1);

  long long coefficient(const Monomial& m) const;
  long long total() const;  // sum of coefficients
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  const std::map<Monomial, long long>& terms() const { return terms_; }

  bool operator==(const WeightPolynomial&) const = default;

  // True when every coefficient of other is <= the matching coefficient here.
  bool dominates(const WeightPolynomial& other) const;

  // Terms in decreasing monomial order, e.g. "x1^2 + 2*x1*x2 + x2^2".
  std::string str() const;

 private:
  std::map<Monomial, long long> terms_;
};

}  // namespace schubcomb
