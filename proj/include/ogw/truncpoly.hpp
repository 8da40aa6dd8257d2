#ifndef OGW_TRUNCPOLY_HPP
#define OGW_TRUNCPOLY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ogw/cyclotomic.hpp"

namespace ogw {

// Ordered set of named indeterminates shared by the polynomials built on it.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  long index(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return (long)i;
    return -1;
  }
  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using Expo = std::vector<unsigned>;

inline unsigned expo_total(const Expo& e) {
  unsigned t = 0;
  for (unsigned v : e) t += v;
  return t;
}

// Multivariate polynomial over Cyc, truncated at total degree max_degree.
// Terms are kept in a sorted map on the dense exponent vector, so equality is
// structural.
class TruncPoly {
 public:
  TruncPoly(std::shared_ptr<const VarSet> vars, unsigned max_degree)
      : vars_(std::move(vars)), deg_(max_degree) {}

  static TruncPoly constant(std::shared_ptr<const VarSet> vars,
                            unsigned max_degree, const Cyc& v) {
    TruncPoly p(std::move(vars), max_degree);
    if (!v.is_zero()) p.terms_[Expo(p.vars_->size(), 0)] = v;
    return p;
  }
  static TruncPoly variable(std::shared_ptr<const VarSet> vars,
                            unsigned max_degree, size_t i) {
    TruncPoly p(vars, max_degree);
    Expo e(vars->size(), 0);
    e[i] = 1;
    if (max_degree >= 1) p.terms_[e] = Cyc(Rat(1));
    return p;
  }

  const VarSet& vars() const { return *vars_; }
  std::shared_ptr<const VarSet> vars_ptr() const { return vars_; }
  unsigned max_degree() const { return deg_; }
  const std::map<Expo, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Cyc coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyc(Rat(0)) : it->second;
  }

  void add_term(const Expo& e, const Cyc& c) {
    if (c.is_zero() || expo_total(e) > deg_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncPoly operator-() const {
    TruncPoly r(vars_, deg_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r(a.vars_, std::min(a.deg_, b.deg_));
    Expo e(a.vars_->size());
    for (const auto& [ea, ca] : a.terms_) {
      unsigned ta = expo_total(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (ta + expo_total(eb) > r.deg_) continue;
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  TruncPoly scaled(const Cyc& s) const {
    TruncPoly r(vars_, deg_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
      Cyc v = c * s;
      if (!v.is_zero()) r.terms_[e] = v;
    }
    return r;
  }

  TruncPoly derivative(size_t var) const {
    TruncPoly r(vars_, deg_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Expo e2 = e;
      e2[var] -= 1;
      r.add_term(e2, c * Rat((long)e[var]));
    }
    return r;
  }

  TruncPoly truncated(unsigned new_deg) const {
    TruncPoly r(vars_, new_deg);
    for (const auto& [e, c] : terms_)
      if (expo_total(e) <= new_deg) r.terms_[e] = c;
    return r;
  }

  // Keep only terms whose exponents vanish outside `keep`.
  TruncPoly restricted(const std::vector<size_t>& keep) const {
    std::vector<bool> ok(vars_->size(), false);
    for (size_t i : keep) ok[i] = true;
    TruncPoly r(vars_, deg_);
    for (const auto& [e, c] : terms_) {
      bool good = true;
      for (size_t i = 0; i < e.size() && good; ++i)
        if (e[i] > 0 && !ok[i]) good = false;
      if (good) r.terms_[e] = c;
    }
    return r;
  }

  TruncPoly pow(unsigned k) const {
    TruncPoly r = constant(vars_, deg_, Cyc(Rat(1)));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncPoly& a, const TruncPoly& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) os << "*" << vars_->name(i);
    }
    return os.str();
  }

 private:
  std::shared_ptr<const VarSet> vars_;
  unsigned deg_;
  std::map<Expo, Cyc> terms_;
};

}  // namespace ogw

#endif  // OGW_TRUNCPOLY_HPP
