#ifndef OGW_POLY_HPP
#define OGW_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ogw {

// Dense univariate polynomial over a field T (T = Rat or Cyc).
// Coefficient vector is trimmed, so degree() is exact; the zero polynomial
// has an empty vector and degree -1.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

  long degree() const { return (long)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  void set_coeff(size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1, T(0));
    c_[i] = v;
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly scaled(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  T eval(const T& x) const {
    T r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T((long)i);
    return Poly(std::move(c));
  }

  // Exact division; throws if the remainder is nonzero.
  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
  }

  static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q;
    T lead = b.c_.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      size_t shift = (size_t)(a.degree() - b.degree());
      T f = a.c_.back() / lead;
      q.set_coeff(shift, f);
      for (size_t i = 0; i < b.c_.size(); ++i)
        a.c_[shift + i] -= f * b.c_[i];
      a.trim();
    }
    return {q, a};
  }

  // Substitute x -> g(x).
  Poly compose(const Poly& g) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;)
      r = r * g + constant(c_[i]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Truncated power series over T: fixed order, coefficients of x^0..x^order.
template <typename T>
class TSeries {
 public:
  TSeries(size_t order, const T& c0 = T(0)) : c_(order + 1, T(0)) {
    c_[0] = c0;
  }
  explicit TSeries(std::vector<T> c) : c_(std::move(c)) {
    if (c_.empty()) throw std::invalid_argument("TSeries: empty");
  }

  size_t order() const { return c_.size() - 1; }
  const T& coeff(size_t i) const { return c_[i]; }
  T& coeff(size_t i) { return c_[i]; }

  TSeries operator-() const {
    TSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) {
    for (size_t i = 0; i <= a.order(); ++i) a.c_[i] += b.coeff(i);
    return a;
  }
  friend TSeries operator-(TSeries a, const TSeries& b) {
    for (size_t i = 0; i <= a.order(); ++i) a.c_[i] -= b.coeff(i);
    return a;
  }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries r(a.order());
    for (size_t i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (size_t j = 0; i + j <= a.order(); ++j)
        r.c_[i + j] += a.c_[i] * b.coeff(j);
    }
    return r;
  }
  TSeries scaled(const T& s) const {
    TSeries r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  // Multiplicative inverse; requires a unit constant term.
  TSeries inverse() const {
    if (c_[0] == T(0)) throw std::domain_error("TSeries: not invertible");
    TSeries r(order());
    r.c_[0] = T(1) / c_[0];
    for (size_t k = 1; k <= order(); ++k) {
      T s(0);
      for (size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
      r.c_[k] = -s / c_[0];
    }
    return r;
  }

  // Compose with a series that has zero constant term.
  TSeries compose(const TSeries& g) const {
    if (g.coeff(0) != T(0))
      throw std::domain_error("TSeries: compose needs g(0)=0");
    TSeries r(order()), p(order(), T(1));
    for (size_t i = 0; i <= order(); ++i) {
      r = r + p.scaled(c_[i]);
      p = p * g;
    }
    return r;
  }

  TSeries derivative() const {
    TSeries r(order());
    for (size_t i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * T((long)i);
    return r;
  }

  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<T> c_;
};

}  // namespace ogw

#endif  // OGW_POLY_HPP
