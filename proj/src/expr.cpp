#include "expr.hpp"

#include <optional>
#include <vector>

namespace permav {

struct Expr::Node {
  Op op;
  Polynomial poly;
  int k = 0;
  std::string name;
  ExternalFn fn;
  std::vector<std::shared_ptr<Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<Expr::Node>;

NodeP make(Expr::Op op, std::vector<NodeP> kids, int k = 0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->kids = std::move(kids);
  n->k = k;
  return n;
}

// Either an exact polynomial or a truncated series.
struct Value {
  std::optional<Polynomial> poly;
  Series series;

  Series as_series(int order) const { return poly ? Series::from_polynomial(*poly, order) : series; }
};

Value eval(const Expr::Node& n, int order);

Value poly_value(Polynomial p) { return {std::move(p), {}}; }
Value series_value(Series s) { return {std::nullopt, std::move(s)}; }

Value eval(const Expr::Node& n, int order) {
  using Op = Expr::Op;
  switch (n.op) {
    case Op::Poly: return poly_value(n.poly);
    case Op::Catalan: return series_value(catalan(order));
    case Op::External: return series_value(n.fn(order).truncated(order));
    case Op::Neg: {
      Value a = eval(*n.kids[0], order);
      if (a.poly) return poly_value(Polynomial{} - *a.poly);
      return series_value(neg(a.series));
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul: {
      Value a = eval(*n.kids[0], order), b = eval(*n.kids[1], order);
      if (a.poly && b.poly) {
        if (n.op == Op::Add) return poly_value(*a.poly + *b.poly);
        if (n.op == Op::Sub) return poly_value(*a.poly - *b.poly);
        return poly_value(*a.poly * *b.poly);
      }
      const Series sa = a.as_series(order), sb = b.as_series(order);
      if (n.op == Op::Add) return series_value(add(sa, sb));
      if (n.op == Op::Sub) return series_value(sub(sa, sb));
      return series_value(mul(sa, sb));
    }
    case Op::Div: {
      Value a = eval(*n.kids[0], order), b = eval(*n.kids[1], order);
      if (a.poly && b.poly) return series_value(rational_expand(*a.poly, *b.poly, order));
      return series_value(div(a.as_series(order), b.as_series(order)));
    }
    case Op::Pow: {
      Value a = eval(*n.kids[0], order);
      if (a.poly) {
        Polynomial r{1};
        for (int i = 0; i < n.k; ++i) r = r * *a.poly;
        return poly_value(r);
      }
      Series r = Series::from_polynomial(Polynomial{1}, order);
      for (int i = 0; i < n.k; ++i) r = mul(r, a.series);
      return series_value(r);
    }
    case Op::Sqrt: return series_value(sqrt(eval(*n.kids[0], order).as_series(order)));
    case Op::Compose: {
      const Series inner = eval(*n.kids[1], order).as_series(order);
      return series_value(compose(eval(*n.kids[0], order).as_series(order), inner));
    }
    case Op::DivX: {
      Value a = eval(*n.kids[0], order + n.k);
      const Series s = a.as_series(order + n.k);
      for (int i = 0; i < n.k; ++i)
        if (s[i] != 0)
          throw Error(ErrorCode::Domain, "division by x^" + std::to_string(n.k) + " leaves a nonzero coefficient " +
                                             s[i].get_str() + " at x^" + std::to_string(i - n.k));
      Series r(order);
      for (int i = 0; i < order; ++i) r[i] = s[i + n.k];
      return series_value(r);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression node");
}

NodeP clone_node(const NodeP& n) {
  auto c = std::make_shared<Expr::Node>(*n);
  for (auto& k : c->kids) k = clone_node(k);
  return c;
}

void collect_leaves(const NodeP& n, std::vector<Expr::Node*>& out) {
  if (n->op == Expr::Op::Poly) out.push_back(n.get());
  for (const auto& k : n->kids) collect_leaves(k, out);
}

std::string show(const Expr::Node& n) {
  using Op = Expr::Op;
  auto kid = [&](int i) { return show(*n.kids[i]); };
  switch (n.op) {
    case Op::Poly: return n.poly.degree() <= 0 ? n.poly.to_string() : "(" + n.poly.to_string() + ")";
    case Op::Catalan: return "C";
    case Op::External: return n.name;
    case Op::Neg: return "-" + kid(0);
    case Op::Add: return "(" + kid(0) + " + " + kid(1) + ")";
    case Op::Sub: return "(" + kid(0) + " - " + kid(1) + ")";
    case Op::Mul: return kid(0) + "*" + kid(1);
    case Op::Div: return kid(0) + "/" + kid(1);
    case Op::Pow: return kid(0) + "^" + std::to_string(n.k);
    case Op::Sqrt: return "sqrt" + kid(0);
    case Op::Compose: return kid(0) + "[" + kid(1) + "]";
    case Op::DivX: return "(" + kid(0) + ")/x^" + std::to_string(n.k);
  }
  return "?";
}

}  // namespace

Expr::Expr(long constant) : Expr(Polynomial{constant}) {}

Expr::Expr(Polynomial p) : n_(make(Op::Poly, {})) { n_->poly = std::move(p); }

Expr Expr::catalan() { return Expr(make(Op::Catalan, {})); }

Expr Expr::external(std::string name, ExternalFn fn) {
  auto n = make(Op::External, {});
  n->name = std::move(name);
  n->fn = std::move(fn);
  return Expr(n);
}

Series Expr::evaluate(int order) const {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  return eval(*n_, order).as_series(order);
}

Expr Expr::clone() const { return Expr(clone_node(n_)); }

int Expr::poly_leaf_count() const {
  std::vector<Node*> leaves;
  collect_leaves(n_, leaves);
  return static_cast<int>(leaves.size());
}

Polynomial Expr::poly_leaf(int leaf) const {
  std::vector<Node*> leaves;
  collect_leaves(n_, leaves);
  if (leaf < 0 || leaf >= static_cast<int>(leaves.size()))
    throw Error(ErrorCode::OutOfRange, "expression has " + std::to_string(leaves.size()) + " polynomial leaves");
  return leaves[leaf]->poly;
}

void Expr::mutate(int leaf, int coeff, const Rational& delta) {
  std::vector<Node*> leaves;
  collect_leaves(n_, leaves);
  if (leaf < 0 || leaf >= static_cast<int>(leaves.size()))
    throw Error(ErrorCode::OutOfRange, "expression has " + std::to_string(leaves.size()) + " polynomial leaves");
  if (coeff < 0) throw Error(ErrorCode::OutOfRange, "coefficient index must be >= 0");
  std::vector<Rational> c = leaves[leaf]->poly.coeffs();
  if (static_cast<int>(c.size()) <= coeff) c.resize(coeff + 1);
  c[coeff] += delta;
  leaves[leaf]->poly = Polynomial(std::move(c));
}

std::string Expr::to_string() const { return show(*n_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Add, {a.n_, b.n_})); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Sub, {a.n_, b.n_})); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Mul, {a.n_, b.n_})); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make(Expr::Op::Div, {a.n_, b.n_})); }
Expr operator-(const Expr& a) { return Expr(make(Expr::Op::Neg, {a.n_})); }
Expr sqrt(const Expr& a) { return Expr(make(Expr::Op::Sqrt, {a.n_})); }
Expr compose(const Expr& outer, const Expr& inner) { return Expr(make(Expr::Op::Compose, {outer.n_, inner.n_})); }

Expr divx(const Expr& a, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "divx needs k >= 0");
  return Expr(make(Expr::Op::DivX, {a.n_}, k));
}

Expr pow(const Expr& a, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "pow needs k >= 0");
  return Expr(make(Expr::Op::Pow, {a.n_}, k));
}

Expr p(std::initializer_list<long> coeffs) { return Expr(Polynomial(coeffs)); }
Expr C() { return Expr::catalan(); }

Expr xpow(int k) {
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  return Expr(Polynomial(std::move(c)));
}

Expr rat(long num, long den) { return Expr(Polynomial(std::vector<Rational>{Rational(num, den)})); }

}  // namespace permav
