#pragma once

#include <functional>
#include <memory>
#include <string>

#include "series.hpp"

namespace permav {

// Composition tree over series primitives; polynomial leaves are the registry's coefficients.
class Expr {
 public:
  enum class Op { Poly, Catalan, Add, Sub, Mul, Div, Sqrt, Compose, DivX, Pow, Neg, External };
  using ExternalFn = std::function<Series(int order)>;

  Expr(long constant);
  Expr(Polynomial p);
  static Expr catalan();
  static Expr external(std::string name, ExternalFn fn);

  Series evaluate(int order) const;
  Expr clone() const;
  int poly_leaf_count() const;
  Polynomial poly_leaf(int leaf) const;
  // Adds delta to coefficient `coeff` of the leaf-th polynomial leaf (preorder); mutates shared nodes.
  void mutate(int leaf, int coeff, const Rational& delta);
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr sqrt(const Expr& a);
  friend Expr compose(const Expr& outer, const Expr& inner);
  friend Expr divx(const Expr& a, int k);
  friend Expr pow(const Expr& a, int k);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<Node> n) : n_(std::move(n)) {}
  std::shared_ptr<Node> n_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr sqrt(const Expr& a);
Expr compose(const Expr& outer, const Expr& inner);
Expr divx(const Expr& a, int k);
Expr pow(const Expr& a, int k);

// DSL helpers: p({c0, c1, ...}) is c0 + c1 x + ...; C() is the Catalan series.
Expr p(std::initializer_list<long> coeffs);
Expr C();
Expr xpow(int k);
Expr rat(long num, long den);

}  // namespace permav
