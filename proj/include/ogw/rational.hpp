#ifndef OGW_RATIONAL_HPP
#define OGW_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ogw {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator).  Thin value wrapper over GMP's mpq_class so the rest of the
// library never sees GMP expression templates.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}           // NOLINT: implicit on purpose
  Rat(long n, long d) : q_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : q_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p", "-p", "p/q".
  static Rat from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    q.canonicalize();
    return Rat(q);
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / q_));
  }

  Rat pow(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return inv().pow(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), (unsigned long)e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), (unsigned long)e);
    return Rat(r);
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

inline mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), (unsigned long)(n < 0 ? 0 : n));
  return f;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return b;
}

inline Rat rat_factorial(long n) { return Rat(factorial(n)); }
inline Rat rat_binomial(long n, long k) { return Rat(binomial(n, k)); }

// m!/(k_1! ... k_r!) for a multiset of counts.
inline Rat rat_multinomial(long m, const std::vector<long>& ks) {
  mpz_class d = 1;
  for (long k : ks) d *= factorial(k);
  return Rat(factorial(m), d);
}

}  // namespace ogw

#endif  // OGW_RATIONAL_HPP
