#ifndef OGW_CYCLOTOMIC_HPP
#define OGW_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/poly.hpp"
#include "ogw/rational.hpp"

namespace ogw {

struct IntegerPole : std::domain_error {
  explicit IntegerPole(const std::string& w) : std::domain_error(w) {}
};
struct IrrationalResult : std::domain_error {
  explicit IrrationalResult(const std::string& w) : std::domain_error(w) {}
};

inline unsigned euler_phi(unsigned m) {
  unsigned r = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

// Phi_M, computed by dividing x^M - 1 by the cyclotomic polynomials of the
// proper divisors of M.  Memoized; coefficients are integers stored as Rat.
inline const Poly<Rat>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, Poly<Rat>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: M >= 1");
  Poly<Rat> num;
  num.set_coeff(m, Rat(1));
  num.set_coeff(0, num.coeff(0) - Rat(1));  // x^M - 1
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = num / cyclotomic_polynomial(d);
  return cache.emplace(m, std::move(num)).first->second;
}

namespace detail {

// Per-modulus data: phi(M) and the reductions of x^k, phi <= k < 2*phi-1,
// modulo Phi_M, plus the reduction of every power x^k for k < M (so that
// root_of_unity is a lookup).
struct CycContext {
  unsigned m;
  unsigned phi;
  std::vector<std::vector<Rat>> high_pow;  // x^(phi+i) mod Phi_M
  std::vector<std::vector<Rat>> zeta_pow;  // x^(k mod M) mod Phi_M

  explicit CycContext(unsigned mod) : m(mod), phi(euler_phi(mod)) {
    const Poly<Rat>& f = cyclotomic_polynomial(mod);
    // x^phi = -(f[0] + f[1] x + ... + f[phi-1] x^(phi-1)); Phi is monic.
    std::vector<Rat> base(phi);
    for (unsigned i = 0; i < phi; ++i) base[i] = -f.coeff(i);
    high_pow.push_back(base);  // x^phi
    for (unsigned k = 1; phi >= 2 && k <= phi - 2; ++k)
      high_pow.push_back(shift_reduce(high_pow.back()));  // x^(phi+k)
    std::vector<Rat> cur(phi, Rat(0));
    cur[0] = Rat(1);
    zeta_pow.push_back(cur);
    for (unsigned k = 1; k < mod; ++k) {
      cur = shift_reduce(cur);
      zeta_pow.push_back(cur);
    }
  }

  // Multiply a reduced vector by x and reduce again.
  std::vector<Rat> shift_reduce(const std::vector<Rat>& v) const {
    std::vector<Rat> r(phi, Rat(0));
    for (unsigned i = 0; i + 1 < phi; ++i) r[i + 1] = v[i];
    const Rat& top = v[phi - 1];
    if (!top.is_zero())
      for (unsigned i = 0; i < phi; ++i) r[i] += top * high_pow[0][i];
    return r;
  }
};

inline const CycContext& cyc_context(unsigned m) {
  static std::map<unsigned, std::unique_ptr<CycContext>> reg;
  auto it = reg.find(m);
  if (it == reg.end())
    it = reg.emplace(m, std::make_unique<CycContext>(m)).first;
  return *it->second;
}

}  // namespace detail

// Element of the cyclotomic field Q(zeta_M), stored fully reduced in the
// power basis 1, zeta, ..., zeta^(phi(M)-1) modulo Phi_M.  Arithmetic between
// different moduli promotes both operands to the lcm.
class Cyc {
 public:
  Cyc() : m_(1), c_(1, Rat(0)) {}
  Cyc(const Rat& r) : m_(1), c_(1, r) {}      // NOLINT: implicit on purpose
  Cyc(long v) : m_(1), c_(1, Rat(v)) {}       // NOLINT
  Cyc(unsigned mod, std::vector<Rat> coords) : m_(mod), c_(std::move(coords)) {
    if (c_.size() != detail::cyc_context(mod).phi)
      throw std::invalid_argument("Cyc: coordinate length != phi(M)");
  }

  unsigned modulus() const { return m_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  // Exact rational value; throws IrrationalResult otherwise.
  Rat to_rat() const {
    if (!is_rational())
      throw IrrationalResult("Cyc: value is not rational: " + str());
    return c_[0];
  }

  // Reinterpret in Q(zeta_M') for M | M' (value preserved).
  Cyc promoted(unsigned m2) const {
    if (m2 == m_) return *this;
    if (m2 % m_ != 0) throw std::invalid_argument("Cyc: bad promotion");
    const auto& ctx = detail::cyc_context(m2);
    unsigned step = m2 / m_;
    std::vector<Rat> r(ctx.phi, Rat(0));
    for (unsigned i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      const auto& pw = ctx.zeta_pow[(i * step) % m2];
      for (unsigned j = 0; j < ctx.phi; ++j) r[j] += c_[i] * pw[j];
    }
    return Cyc(m2, std::move(r));
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = to_common(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = to_common(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = to_common(a, b);
    const auto& ctx = detail::cyc_context(x.m_);
    unsigned phi = ctx.phi;
    std::vector<Rat> conv(2 * phi - 1, Rat(0));
    for (unsigned i = 0; i < phi; ++i) {
      if (x.c_[i].is_zero()) continue;
      for (unsigned j = 0; j < phi; ++j) {
        if (y.c_[j].is_zero()) continue;
        conv[i + j] += x.c_[i] * y.c_[j];
      }
    }
    std::vector<Rat> r(conv.begin(), conv.begin() + phi);
    for (unsigned k = phi; k < conv.size(); ++k) {
      if (conv[k].is_zero()) continue;
      const auto& row = ctx.high_pow[k - phi];
      for (unsigned j = 0; j < phi; ++j) r[j] += conv[k] * row[j];
    }
    return Cyc(x.m_, std::move(r));
  }

  friend Cyc operator*(const Cyc& a, const Rat& s) {
    Cyc r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend Cyc operator*(const Rat& s, const Cyc& a) { return a * s; }

  Cyc inv() const {
    if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
    // Extended Euclid in Q[x] against Phi_M.
    Poly<Rat> a = cyclotomic_polynomial(m_);
    Poly<Rat> b{std::vector<Rat>(c_)};
    Poly<Rat> s0, s1 = Poly<Rat>::constant(Rat(1));  // coeffs of b
    while (true) {
      auto [q, r] = Poly<Rat>::divmod(a, b);
      if (r.is_zero()) break;
      Poly<Rat> s2 = s0 - q * s1;
      a = b;
      b = r;
      s0 = s1;
      s1 = s2;
    }
    if (b.degree() != 0)
      throw std::domain_error("Cyc: non-invertible (zero divisor?)");
    Poly<Rat> invp = s1.scaled(b.coeff(0).inv());
    std::vector<Rat> r(detail::cyc_context(m_).phi, Rat(0));
    for (long i = 0; i <= invp.degree(); ++i) r[(size_t)i] = invp.coeff(i);
    Cyc res(m_, std::move(r));
    return res;
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) {
    auto [x, y] = to_common(a, b);
    return x * y.inv();
  }

  Cyc pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc r(Rat(1)), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Complex conjugate: zeta_M -> zeta_M^(M-1).
  Cyc conj() const {
    if (m_ <= 2) return *this;
    const auto& ctx = detail::cyc_context(m_);
    std::vector<Rat> r(ctx.phi, Rat(0));
    for (unsigned i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      const auto& pw = ctx.zeta_pow[(m_ - i) % m_];
      for (unsigned j = 0; j < ctx.phi; ++j) r[j] += c_[i] * pw[j];
    }
    return Cyc(m_, std::move(r));
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    auto [x, y] = to_common(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // "p/q" for rationals, otherwise "zeta<M>:[c0,c1,...]".
  std::string str() const {
    if (is_rational()) return c_[0].str();
    std::ostringstream os;
    os << "zeta" << m_ << ":[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ",";
      os << c_[i].str();
    }
    os << "]";
    return os.str();
  }

 private:
  static std::pair<Cyc, Cyc> to_common(const Cyc& a, const Cyc& b) {
    if (a.m_ == b.m_) return {a, b};
    unsigned l = (unsigned)std::lcm(a.m_, b.m_);
    return {a.promoted(l), b.promoted(l)};
  }

  unsigned m_;
  std::vector<Rat> c_;
};

// zeta_M^k, reduced modulo Phi_M.
inline Cyc root_of_unity(unsigned m, long k) {
  const auto& ctx = detail::cyc_context(m);
  long r = k % (long)m;
  if (r < 0) r += m;
  return Cyc(m, ctx.zeta_pow[(size_t)r]);
}

// cot(pi q) as an exact cyclotomic number: i (z+1)/(z-1) with z = e^(2 pi i q).
// Pole at integral q.
inline Cyc cot_pi(const Rat& q) {
  if (q.is_integer()) throw IntegerPole("cot_pi: integral argument");
  long d = q.den().get_si();
  long c = mpz_class(q.num() % q.den()).get_si();
  unsigned m = (unsigned)std::lcm<long>(4, d);
  Cyc z = root_of_unity(m, c * (long)(m / d));
  Cyc i = root_of_unity(m, (long)(m / 4));
  Cyc one(Rat(1));
  return i * (z + one) / (z - one);
}

// tan(pi q) = -i (z-1)/(z+1); pole at q = 1/2 mod 1.
inline Cyc tan_pi(const Rat& q) {
  Rat twice = q + q;
  if (twice.is_integer() && !q.is_integer())
    throw IntegerPole("tan_pi: half-integral argument");
  long d = q.den().get_si();
  long c = mpz_class(q.num() % q.den()).get_si();
  if (c < 0) c += d;
  unsigned m = (unsigned)std::lcm<long>(4, d);
  Cyc z = root_of_unity(m, c * (long)(m / d));
  Cyc i = root_of_unity(m, (long)(m / 4));
  Cyc one(Rat(1));
  return Cyc(Rat(0)) - i * (z - one) / (z + one);
}

// 2 sin(pi q) = -i (zeta - 1/zeta), zeta = e^(pi i q).
inline Cyc two_sin_pi(const Rat& q) {
  long d = q.den().get_si();
  long c = mpz_class(q.num()).get_si();
  unsigned m = (unsigned)std::lcm<long>(4, 2 * d);
  Cyc z = root_of_unity(m, c * (long)(m / (2 * d)));
  Cyc i = root_of_unity(m, (long)(m / 4));
  return Cyc(Rat(0)) - i * (z - z.inv());
}

}  // namespace ogw

#endif  // OGW_CYCLOTOMIC_HPP
