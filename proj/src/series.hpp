#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace permav {

using Rational = mpq_class;

// Dense, constant term first, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Coefficients 0..N-1 of a formal power series.
class Series {
 public:
  Series() = default;
  explicit Series(int order);
  explicit Series(std::vector<Rational> coeffs);
  static Series from_polynomial(const Polynomial& p, int order);

  int order() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Series truncated(int order) const;

  bool is_integral() const;
  // First index whose coefficient is not an integer, or -1.
  int first_non_integral() const;
  std::vector<mpz_class> integers() const;

  std::string to_json() const;
  static Series from_json(const std::string& text);

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  std::vector<Rational> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& r);
Series neg(const Series& a);
Series div(const Series& a, const Series& b);
Series sqrt(const Series& a);
Series compose(const Series& a, const Series& b);
Series catalan(int order);
Series rational_expand(const Polynomial& num, const Polynomial& den, int order);

}  // namespace permav
