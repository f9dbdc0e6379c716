#include "schubcomb/monomial.hpp"

#include <stdexcept>

namespace schubcomb {

Monomial Monomial::var(int index, int power) {
  if (index < 1) throw std::invalid_argument("monomial: variable index must be >= 1");
  if (power < 0) throw std::invalid_argument("monomial: exponent must be >= 0");
  Monomial m;
  if (power > 0) {
    m.exps_.assign(static_cast<std::size_t>(index), 0);
    m.exps_[static_cast<std::size_t>(index) - 1] = static_cast<std::uint8_t>(power);
  }
  return m;
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > max_var()) return 0;
  return exps_[static_cast<std::size_t>(index) - 1];
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
  if (rhs.exps_.size() > exps_.size()) exps_.resize(rhs.exps_.size(), 0);
  for (std::size_t k = 0; k < rhs.exps_.size(); ++k)
    exps_[k] = static_cast<std::uint8_t>(exps_[k] + rhs.exps_[k]);
  return *this;
}

Monomial Monomial::reversed_rows(int n) const {
  if (max_var() > n)
    throw std::invalid_argument("monomial: variable index exceeds grid size");
  Monomial out;
  for (int k = 1; k <= max_var(); ++k) out *= Monomial::var(n - k + 1, exponent(k));
  return out;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int k = 1; k <= max_var(); ++k) {
    int e = exponent(k);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

void WeightPolynomial::add(const Monomial& m, long long count) {
  if (count <= 0) throw std::invalid_argument("weight polynomial: count must be positive");
  terms_[m] += count;
}

long long WeightPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

long long WeightPolynomial::total() const {
  long long sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

bool WeightPolynomial::dominates(const WeightPolynomial& other) const {
  for (const auto& [m, c] : other.terms_)
    if (coefficient(m) < c) return false;
  return true;
}

std::string WeightPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [m, c] = *it;
    if (c != 1) {
      out += std::to_string(c);
      if (!m.is_one()) out += "*" + m.str();
    } else {
      out += m.str();
    }
  }
  return out;
}

}  // namespace schubcomb
