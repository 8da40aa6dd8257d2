#ifndef OGW_INTERPOLATE_HPP
#define OGW_INTERPOLATE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/cyclotomic.hpp"
#include "ogw/poly.hpp"

namespace ogw {

struct PolynomialityViolation : std::runtime_error {
  explicit PolynomialityViolation(const std::string& w)
      : std::runtime_error(w) {}
};

// Exact Lagrange interpolation through all given points (T = Rat or Cyc,
// nodes are rational).
template <typename T>
Poly<T> lagrange(const std::vector<Rat>& xs, const std::vector<T>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("lagrange: bad input");
  Poly<T> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly<T> li = Poly<T>::constant(T(Rat(1)));
    Rat denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * Poly<T>(std::vector<T>{T(-xs[j]), T(Rat(1))});
      denom *= xs[i] - xs[j];
    }
    acc = acc + li.scaled(ys[i] * T(denom.inv()));
  }
  return acc;
}

// A Laurent polynomial q(x)/x^pole represented by its numerator and pole
// order.
template <typename T>
struct LaurentPoly {
  Poly<T> numerator;
  long pole = 0;

  T eval(const Rat& x) const {
    return numerator.eval(T(x)) * T(x.pow(-pole));
  }
  // Coefficient of x^k (k may be negative down to -pole).
  T coeff(long k) const {
    long i = k + pole;
    return i < 0 ? T(Rat(0)) : numerator.coeff((size_t)i);
  }
};

// Fit data (x_i, y_i) with the model y = q(x)/x^pole, deg q <= pole + deg_bound,
// using exactly the number of points the model needs, then check that every
// remaining fit point and every holdout point matches exactly.  Throws
// PolynomialityViolation on mismatch or if too few points are supplied.
template <typename T>
LaurentPoly<T> laurent_fit(const std::vector<Rat>& xs, const std::vector<T>& ys,
                           long pole, long deg_bound,
                           const std::vector<Rat>& holdout_xs = {},
                           const std::vector<T>& holdout_ys = {}) {
  size_t need = (size_t)(pole + deg_bound + 1);
  if (xs.size() < need)
    throw PolynomialityViolation("laurent_fit: need " + std::to_string(need) +
                                 " points, got " + std::to_string(xs.size()));
  std::vector<Rat> fx(xs.begin(), xs.begin() + (long)need);
  std::vector<T> fy;
  for (size_t i = 0; i < need; ++i) fy.push_back(ys[i] * T(xs[i].pow(pole)));
  LaurentPoly<T> model{lagrange(fx, fy), pole};
  auto check = [&](const Rat& x, const T& y, const char* kind) {
    if (model.eval(x) != y) {
      std::ostringstream os;
      os << "laurent_fit: " << kind << " point x=" << x.str()
         << " does not match the interpolant";
      throw PolynomialityViolation(os.str());
    }
  };
  for (size_t i = need; i < xs.size(); ++i) check(xs[i], ys[i], "fit");
  for (size_t i = 0; i < holdout_xs.size(); ++i)
    check(holdout_xs[i], holdout_ys[i], "holdout");
  return model;
}

}  // namespace ogw

#endif  // OGW_INTERPOLATE_HPP
