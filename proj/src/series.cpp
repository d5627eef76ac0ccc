#include "series.hpp"

#include <algorithm>

#include "json.hpp"

namespace permav {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (s.empty()) {
      if (q < 0) s += "-";
    } else {
      s += q < 0 ? "-" : "+";
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Series::Series(int order) : c_(std::max(order, 0)) {}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
}

Series Series::from_polynomial(const Polynomial& p, int order) {
  Series s(order);
  for (int i = 0; i < order && i <= p.degree(); ++i) s.c_[i] = p.coeff(i);
  return s;
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int i = 0; i < std::min(order, this->order()); ++i) s.c_[i] = c_[i];
  return s;
}

int Series::first_non_integral() const {
  for (int i = 0; i < order(); ++i)
    if (c_[i].get_den() != 1) return i;
  return -1;
}

bool Series::is_integral() const { return first_non_integral() < 0; }

std::vector<mpz_class> Series::integers() const {
  if (const int i = first_non_integral(); i >= 0)
    throw Error(ErrorCode::NonIntegral, "coefficient " + std::to_string(i) + " is not an integer: " + c_[i].get_str());
  std::vector<mpz_class> v;
  for (const auto& q : c_) v.push_back(q.get_num());
  return v;
}

std::string Series::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& q : c_) j.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
  return j.dump();
}

Series Series::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "series JSON must be an array of \"p/q\" strings");
  std::vector<Rational> v;
  for (const auto& e : j) {
    Rational r;
    if (!e.is_string() || r.set_str(e.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::InvalidArgument, "malformed series coefficient " + e.dump());
    r.canonicalize();
    v.push_back(r);
  }
  return Series(std::move(v));
}

namespace {

int common_order(const Series& a, const Series& b) { return std::min(a.order(), b.order()); }

}  // namespace

Series add(const Series& a, const Series& b) {
  Series r(common_order(a, b));
  for (int i = 0; i < r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

Series sub(const Series& a, const Series& b) {
  Series r(common_order(a, b));
  for (int i = 0; i < r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

Series mul(const Series& a, const Series& b) {
  const int n = common_order(a, b);
  Series r(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series scale(const Series& a, const Rational& s) {
  Series r(a.order());
  for (int i = 0; i < r.order(); ++i) r[i] = a[i] * s;
  return r;
}

Series neg(const Series& a) { return scale(a, Rational(-1)); }

Series div(const Series& a, const Series& b) {
  const int n = common_order(a, b);
  if (n > 0 && b[0] == 0) throw Error(ErrorCode::Domain, "division by a series with zero constant term");
  Series q(n);
  for (int i = 0; i < n; ++i) {
    Rational acc = a[i];
    for (int k = 1; k <= i; ++k) acc -= b[k] * q[i - k];
    q[i] = acc / b[0];
  }
  return q;
}

Series sqrt(const Series& a) {
  const int n = a.order();
  if (n > 0 && a[0] != 1) throw Error(ErrorCode::Domain, "sqrt needs constant term 1, got " + a[0].get_str());
  Series s(n);
  if (n == 0) return s;
  s[0] = 1;
  for (int i = 1; i < n; ++i) {
    Rational acc = a[i];
    for (int k = 1; k < i; ++k) acc -= s[k] * s[i - k];
    s[i] = acc / 2;
  }
  return s;
}

Series compose(const Series& a, const Series& b) {
  const int n = common_order(a, b);
  if (n > 0 && b[0] != 0) throw Error(ErrorCode::Domain, "compose needs an inner series with zero constant term");
  Series r(n);
  for (int k = n - 1; k >= 0; --k) {
    r = mul(r, b);
    r[0] += a[k];
  }
  return r;
}

Series catalan(int order) {
  Series c(order);
  mpz_class v = 1;
  for (int n = 0; n < order; ++n) {
    c[n] = v;
    v = v * 2 * (2 * n + 1) / (n + 2);
  }
  return c;
}

Series rational_expand(const Polynomial& num, const Polynomial& den, int order) {
  if (den.coeff(0) == 0) throw Error(ErrorCode::Domain, "denominator " + den.to_string() + " has zero constant term");
  const Rational d0 = den.coeff(0);
  const int d = den.degree();
  Series q(order);
  for (int i = 0; i < order; ++i) {
    Rational acc = num.coeff(i);
    for (int k = 1; k <= std::min(i, d); ++k) acc -= den.coeff(k) * q[i - k];
    q[i] = acc / d0;
  }
  return q;
}

}  // namespace permav
