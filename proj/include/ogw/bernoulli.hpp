#ifndef OGW_BERNOULLI_HPP
#define OGW_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "ogw/cyclotomic.hpp"
#include "ogw/poly.hpp"
#include "ogw/rational.hpp"

namespace ogw {

// B_m (B_1 = -1/2), by the recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0, m >= 1.
inline Rat bernoulli_number(long m) {
  static std::vector<Rat> cache{Rat(1)};
  while ((long)cache.size() <= m) {
    long n = (long)cache.size();
    Rat s(0);
    for (long k = 0; k < n; ++k) s += rat_binomial(n + 1, k) * cache[(size_t)k];
    cache.push_back(-s / Rat(n + 1));
  }
  return cache[(size_t)m];
}

// B_m(x) = sum_k C(m,k) B_k x^(m-k).
inline Rat bernoulli_poly(long m, const Rat& x) {
  Rat s(0);
  for (long k = 0; k <= m; ++k)
    s += rat_binomial(m, k) * bernoulli_number(k) * x.pow(m - k);
  return s;
}

// tan(x) as a truncated series with rational coefficients:
// tan x = sum_{k>=1} (-1)^(k-1) 2^(2k) (2^(2k)-1) B_{2k} x^(2k-1) / (2k)!.
inline TSeries<Rat> tan_series(size_t order) {
  TSeries<Rat> t(order);
  for (long k = 1; 2 * k - 1 <= (long)order; ++k) {
    Rat c = Rat(2).pow(2 * k) * (Rat(2).pow(2 * k) - Rat(1)) *
            bernoulli_number(2 * k) / Rat(factorial(2 * k));
    if ((k - 1) % 2 == 1) c = -c;
    t.coeff((size_t)(2 * k - 1)) = c;
  }
  return t;
}

// P_j with P_0 = t and P_{j+1} = P_j'(t) * (-1/2)(1 + t^2), so that
// 2 h^(3+j)(u) = P_j(tan(-u/2)) where h'''(u) = (1/2) tan(-u/2).
inline const Poly<Rat>& tan_derivative_poly(long j) {
  static std::vector<Poly<Rat>> cache{Poly<Rat>::x()};
  while ((long)cache.size() <= j) {
    Poly<Rat> chain(std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(-1, 2)});
    cache.push_back(cache.back().derivative() * chain);
  }
  return cache[(size_t)j];
}

// h^(order)(pi + 2 pi q) for order >= 3, using tan(-(pi + 2 pi q)/2) = cot(pi q).
inline Cyc h_derivative(long order, const Rat& q) {
  if (order < 3) throw std::invalid_argument("h_derivative: order >= 3");
  Cyc t = cot_pi(q);
  const Poly<Rat>& p = tan_derivative_poly(order - 3);
  Cyc r(Rat(0)), tp(Rat(1));
  for (long i = 0; i <= p.degree(); ++i) {
    r = r + tp * p.coeff((size_t)i);
    tp = tp * t;
  }
  return r * Rat(1, 2);
}

}  // namespace ogw

#endif  // OGW_BERNOULLI_HPP
