#ifndef OGW_GROUP_HPP
#define OGW_GROUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/cyclotomic.hpp"
#include "ogw/rational.hpp"

namespace ogw {

struct ParamTooSmall : std::invalid_argument {
  explicit ParamTooSmall(const std::string& w) : std::invalid_argument(w) {}
};
struct UnsupportedPair : std::invalid_argument {
  explicit UnsupportedPair(const std::string& w) : std::invalid_argument(w) {}
};

enum class Family { BinaryDihedral, Dihedral, Cyclic };

// Group element a^i b^eps in normal form: i taken modulo the order of a,
// eps in {0,1} (b^2 is a power of a for the binary dihedral family, the
// identity for the dihedral family, absent for cyclic groups).
struct Elem {
  int i = 0;
  int eps = 0;
  friend bool operator==(const Elem& x, const Elem& y) {
    return x.i == y.i && x.eps == y.eps;
  }
  friend bool operator<(const Elem& x, const Elem& y) {
    return std::tie(x.eps, x.i) < std::tie(y.eps, y.i);
  }
};

struct ClassInfo {
  std::string name;
  Elem rep;
  unsigned size = 0;
  unsigned centralizer = 0;
  std::vector<Elem> elements;
};

class GroupModel {
 public:
  GroupModel(Family family, int n) : family_(family), n_(n) {
    switch (family_) {
      case Family::BinaryDihedral:
        if (n < 4) throw ParamTooSmall("BinaryDihedral needs n >= 4");
        a_order_ = 2 * n - 4;
        order_ = 4 * n - 8;
        break;
      case Family::Dihedral:
        if (n < 5) throw ParamTooSmall("Dihedral needs n >= 5");
        a_order_ = n - 2;
        order_ = 2 * n - 4;
        break;
      case Family::Cyclic:
        if (n < 1) throw ParamTooSmall("Cyclic needs m >= 1");
        a_order_ = n;
        order_ = n;
        break;
    }
    build_classes();
  }

  Family family() const { return family_; }
  int n() const { return n_; }
  unsigned order() const { return order_; }
  unsigned a_order() const { return a_order_; }

  Elem identity() const { return Elem{0, 0}; }

  Elem mul(const Elem& x, const Elem& y) const {
    if (family_ == Family::Cyclic) return Elem{mod_a(x.i + y.i), 0};
    if (x.eps == 0) return normalize(x.i + y.i, y.eps, 0);
    // (a^i b)(a^j b^eps) = a^(i-j) b^(1+eps)
    return normalize(x.i - y.i, 1 + y.eps, 0);
  }

  Elem inverse(const Elem& x) const {
    if (family_ == Family::Cyclic || x.eps == 0) return Elem{mod_a(-x.i), 0};
    if (family_ == Family::Dihedral) return x;  // reflections are involutions
    // (a^i b)^-1 = a^(n-2+i) b in the binary dihedral group
    return Elem{mod_a(x.i + n_ - 2), 1};
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> all;
    for (int i = 0; i < (int)a_order_; ++i) all.push_back(Elem{i, 0});
    if (family_ != Family::Cyclic)
      for (int i = 0; i < (int)a_order_; ++i) all.push_back(Elem{i, 1});
    return all;
  }

  int element_order(const Elem& x) const {
    Elem e = x;
    int k = 1;
    while (!(e == identity())) {
      e = mul(e, x);
      ++k;
    }
    return k;
  }

  const std::vector<ClassInfo>& classes() const { return classes_; }
  size_t class_count() const { return classes_.size(); }
  size_t class_of(const Elem& e) const { return class_index_.at(e); }
  size_t dual_class(size_t c) const {
    return class_of(inverse(classes_[c].rep));
  }
  long class_named(const std::string& name) const {
    for (size_t c = 0; c < classes_.size(); ++c)
      if (classes_[c].name == name) return (long)c;
    return -1;
  }

  // Modulus large enough for character values, the roots of unity of the
  // a-cycle split in half, i, and sqrt(2).
  unsigned scalar_modulus() const {
    return (unsigned)std::lcm<long>(8, 2 * (long)a_order_);
  }

 private:
  int mod_a(long i) const {
    long m = (long)a_order_;
    long r = i % m;
    if (r < 0) r += m;
    return (int)r;
  }

  Elem normalize(long i, int eps, int) const {
    // Resolve b^2: identity for dihedral, a^(n-2) for binary dihedral.
    int extra = 0;
    if (eps >= 2) {
      eps -= 2;
      if (family_ == Family::BinaryDihedral) extra = n_ - 2;
    }
    return Elem{mod_a(i + extra), eps};
  }

  void build_classes() {
    auto all = elements();
    std::map<Elem, size_t> seen;
    std::vector<std::vector<Elem>> orbits;
    for (const auto& g : all) {
      if (seen.count(g)) continue;
      std::vector<Elem> orbit;
      for (const auto& h : all) {
        Elem c = mul(mul(h, g), inverse(h));
        if (!seen.count(c)) {
          seen[c] = orbits.size();
          orbit.push_back(c);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    // Canonical order: [1], [a^1], ..., [a^(a_order/2)], then b-type classes.
    std::vector<std::vector<Elem>> ordered;
    std::vector<bool> used(orbits.size(), false);
    auto take = [&](const Elem& rep) {
      size_t idx = seen.at(rep);
      if (!used[idx]) {
        used[idx] = true;
        ordered.push_back(orbits[idx]);
      }
    };
    for (int k = 0; k < (int)a_order_; ++k) take(Elem{k, 0});
    if (family_ != Family::Cyclic) {
      take(Elem{0, 1});
      take(Elem{1, 1});
    }
    for (const auto& orbit : ordered) {
      ClassInfo ci;
      ci.elements = orbit;
      ci.size = (unsigned)orbit.size();
      ci.centralizer = order_ / ci.size;
      ci.rep = pick_rep(orbit);
      ci.name = class_name(ci.rep);
      for (const auto& e : orbit) class_index_[e] = classes_.size();
      classes_.push_back(std::move(ci));
    }
  }

  static Elem pick_rep(const std::vector<Elem>& orbit) {
    Elem best = orbit.front();
    for (const auto& e : orbit)
      if (e < best) best = e;
    return best;
  }

  std::string class_name(const Elem& e) const {
    if (e.eps == 0) {
      if (e.i == 0) return "1";
      return "a^" + std::to_string(e.i);
    }
    if (e.i == 0) return "b";
    if (e.i == 1) return "ab";
    return "a^" + std::to_string(e.i) + "b";
  }

  Family family_;
  int n_;
  unsigned a_order_ = 0;
  unsigned order_ = 0;
  std::vector<ClassInfo> classes_;
  std::map<Elem, size_t> class_index_;
};

// Number of tuples (g_1,...,g_m), g_i in the i-th class, with product 1 --
// divided by |G| when normalized.  Character-sum implementation:
//   N = (prod |C_i| / |G|) * sum_chi prod chi(g_i) / chi(1)^(m-2).
class CharacterTable;  // defined below
Rat frobenius_count(const GroupModel& g, const CharacterTable& t,
                    const std::vector<size_t>& cls, bool normalized = true);

// Brute-force oracle by class-algebra convolution over group elements.
inline Rat frobenius_count_convolution(const GroupModel& g,
                                       const std::vector<size_t>& cls,
                                       bool normalized = true) {
  auto all = g.elements();
  std::map<Elem, size_t> idx;
  for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = i;
  std::vector<mpz_class> dist(all.size(), 0);
  dist[idx.at(g.identity())] = 1;
  for (size_t c : cls) {
    std::vector<mpz_class> next(all.size(), 0);
    for (size_t i = 0; i < all.size(); ++i) {
      if (dist[i] == 0) continue;
      for (const auto& h : g.classes()[c].elements)
        next[idx.at(g.mul(all[i], h))] += dist[i];
    }
    dist.swap(next);
  }
  mpz_class n = dist[idx.at(g.identity())];
  return normalized ? Rat(n, mpz_class(g.order())) : Rat(n);
}

class CharacterTable {
 public:
  explicit CharacterTable(const GroupModel& g) : modulus_(g.scalar_modulus()) {
    switch (g.family()) {
      case Family::BinaryDihedral: build_binary_dihedral(g); break;
      case Family::Dihedral: build_dihedral(g); break;
      case Family::Cyclic: build_cyclic(g); break;
    }
  }

  size_t irrep_count() const { return rows_.size(); }
  const std::string& irrep_name(size_t i) const { return names_[i]; }
  long irrep_named(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return (long)i;
    return -1;
  }
  unsigned dim(size_t i) const { return dims_[i]; }
  const Cyc& value(size_t irrep, size_t cls) const {
    return rows_[irrep][cls];
  }
  unsigned modulus() const { return modulus_; }

  // Multiset of irreducible constituents of rho tensor chi_i, as
  // multiplicities per irrep.
  std::vector<unsigned> tensor_multiplicities(const GroupModel& g, size_t rho,
                                              size_t i) const {
    std::vector<unsigned> mult;
    for (size_t j = 0; j < rows_.size(); ++j) {
      Cyc s(Rat(0));
      for (size_t c = 0; c < g.class_count(); ++c)
        s = s + Rat((long)g.classes()[c].size) * rows_[rho][c] * rows_[i][c] *
                    rows_[j][c].conj();
      Rat m = (s * Rat(1, (long)g.order())).to_rat();
      if (!m.is_integer() || m.sign() < 0)
        throw std::logic_error("tensor_multiplicities: not a character");
      mult.push_back((unsigned)m.num().get_ui());
    }
    return mult;
  }

 private:
  void build_binary_dihedral(const GroupModel& g) {
    int n = g.n();
    unsigned M = modulus_;
    long w = (long)M / (2 * n - 4);  // zeta_M^w = omega = e^(2 pi i/(2n-4))
    bool even = n % 2 == 0;
    Cyc iu = root_of_unity(M, (long)M / 4);
    auto value_at = [&](const std::string& which, const Elem& e) -> Cyc {
      // One-dimensional psi rows, by the generator images.
      Cyc va, vb;
      if (which == "psi1") { va = Cyc(Rat(1)); vb = Cyc(Rat(1)); }
      if (which == "psi2") { va = Cyc(Rat(1)); vb = Cyc(Rat(-1)); }
      if (which == "psi3") {
        va = Cyc(Rat(-1));
        vb = even ? Cyc(Rat(-1)) : iu;
      }
      if (which == "psi4") {
        va = Cyc(Rat(-1));
        vb = even ? Cyc(Rat(1)) : Cyc(Rat(0)) - iu;
      }
      Cyc v = va.pow(e.i);
      if (e.eps) v = v * vb;
      return v;
    };
    const char* psis[] = {"psi1", "psi2", "psi3", "psi4"};
    for (const char* p : psis) {
      std::vector<Cyc> row;
      for (const auto& c : g.classes()) row.push_back(value_at(p, c.rep));
      names_.push_back(p);
      dims_.push_back(1);
      rows_.push_back(std::move(row));
    }
    for (int k = 1; k <= n - 3; ++k) {
      std::vector<Cyc> row;
      for (const auto& c : g.classes()) {
        if (c.rep.eps == 1) {
          row.push_back(Cyc(Rat(0)));
        } else {
          row.push_back(root_of_unity(M, w * k * c.rep.i) +
                        root_of_unity(M, -w * k * c.rep.i));
        }
      }
      names_.push_back("rho" + std::to_string(k));
      dims_.push_back(2);
      rows_.push_back(std::move(row));
    }
  }

  void build_dihedral(const GroupModel& g) {
    int m = (int)g.a_order();
    unsigned M = modulus_;
    long w = (long)M / m;
    auto add_one_dim = [&](const std::string& nm, int sa, int sb) {
      std::vector<Cyc> row;
      for (const auto& c : g.classes()) {
        long val = 1;  // sa^i * sb^eps
        if (sa < 0 && c.rep.i % 2) val = -val;
        if (sb < 0 && c.rep.eps) val = -val;
        row.push_back(Cyc(Rat(val)));
      }
      names_.push_back(nm);
      dims_.push_back(1);
      rows_.push_back(std::move(row));
    };
    add_one_dim("triv", 1, 1);
    add_one_dim("sgn", 1, -1);
    if (m % 2 == 0) {
      add_one_dim("eps1", -1, 1);
      add_one_dim("eps2", -1, -1);
    }
    int two_dim = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
    for (int j = 1; j <= two_dim; ++j) {
      std::vector<Cyc> row;
      for (const auto& c : g.classes()) {
        if (c.rep.eps == 1) {
          row.push_back(Cyc(Rat(0)));
        } else {
          row.push_back(root_of_unity(M, w * j * c.rep.i) +
                        root_of_unity(M, -w * j * c.rep.i));
        }
      }
      names_.push_back("chi" + std::to_string(j));
      dims_.push_back(2);
      rows_.push_back(std::move(row));
    }
  }

  void build_cyclic(const GroupModel& g) {
    int m = g.n();
    unsigned M = modulus_;
    long w = (long)M / m;
    for (int k = 0; k < m; ++k) {
      std::vector<Cyc> row;
      for (const auto& c : g.classes())
        row.push_back(root_of_unity(M, w * k * c.rep.i));
      names_.push_back("sigma" + std::to_string(k));
      dims_.push_back(1);
      rows_.push_back(std::move(row));
    }
  }

  unsigned modulus_;
  std::vector<std::string> names_;
  std::vector<unsigned> dims_;
  std::vector<std::vector<Cyc>> rows_;
};

inline Rat frobenius_count(const GroupModel& g, const CharacterTable& t,
                           const std::vector<size_t>& cls, bool normalized) {
  Cyc total(Rat(0));
  for (size_t chi = 0; chi < t.irrep_count(); ++chi) {
    Cyc prod(Rat(1));
    for (size_t c : cls) prod = prod * t.value(chi, c);
    Rat dpow = Rat((long)t.dim(chi)).pow((long)cls.size() - 2);
    total = total + prod * dpow.inv();
  }
  Rat sizes(1);
  for (size_t c : cls) sizes *= Rat((long)g.classes()[c].size);
  Rat result = (total * (sizes / Rat((long)g.order()))).to_rat();
  return normalized ? result / Rat((long)g.order()) : result;
}

// sqrt(2 - chi_rho1(g)) as the nonnegative real root:
// 2 sin(pi l / a_order) for g = a^l, sqrt(2) for the b-type classes, 0 at 1.
// For cyclic groups rho1 means the defining 2-dimensional representation
// zeta + zeta^(-1) of the SU(2) embedding.
inline Cyc sqrt_two_minus_chi_rho1(const GroupModel& g, size_t cls) {
  const Elem& rep = g.classes()[cls].rep;
  if (rep.eps == 1) {
    unsigned M = g.scalar_modulus();
    return root_of_unity(M, (long)M / 8) + root_of_unity(M, -(long)M / 8);
  }
  if (rep.i == 0) return Cyc(Rat(0));
  return two_sin_pi(Rat(rep.i, (long)g.a_order()));
}

// Age pair of a class acting on rho1 (binary dihedral), from the eigenvalues
// of the representation matrix.
inline std::pair<Rat, Rat> ages_on_rho1(const GroupModel& g, size_t cls) {
  if (g.family() != Family::BinaryDihedral)
    throw std::invalid_argument("ages_on_rho1: binary dihedral only");
  unsigned M = g.scalar_modulus();
  long w = (long)M / (long)g.a_order();
  const Elem& rep = g.classes()[cls].rep;
  // rho1(a^i b^eps): diag(omega^i, omega^-i) times [[0,1],[-1,0]]^eps.
  Cyc m00 = root_of_unity(M, w * rep.i), m01(Rat(0)), m10(Rat(0)),
      m11 = root_of_unity(M, -w * rep.i);
  if (rep.eps == 1) {
    m01 = m00;
    m10 = Cyc(Rat(0)) - m11;
    m00 = Cyc(Rat(0));
    m11 = Cyc(Rat(0));
  }
  int d = g.element_order(rep);
  unsigned L = (unsigned)std::lcm<long>(d, (long)M);
  Cyc tr = (m00 + m11).promoted(L);
  Cyc det = (m00 * m11 - m01 * m10).promoted(L);
  std::vector<long> found;
  for (long c = 0; c < d; ++c) {
    Cyc lam = root_of_unity((unsigned)d, c).promoted(L);
    if ((lam * lam - tr * lam + det).is_zero()) found.push_back(c);
  }
  if (found.size() == 1) return {Rat(found[0], d), Rat(found[0], d)};
  if (found.size() == 2) return {Rat(found[0], d), Rat(found[1], d)};
  throw std::logic_error("ages_on_rho1: eigenvalues not found");
}

// Conjugacy-class map induced by a subgroup inclusion.  Supported pairs:
// cyclic Z_(2n-4) inside the binary dihedral BD(n) (a -> a), and
// BD(n) inside BD(2n-2) (a -> a^2, b -> b).
struct ClassMap {
  std::vector<size_t> image;  // H-class index -> G-class index
};

inline ClassMap restriction_map(const GroupModel& h, const GroupModel& g) {
  auto embed = [&](const Elem& e) -> Elem {
    if (h.family() == Family::Cyclic &&
        g.family() == Family::BinaryDihedral &&
        h.n() == 2 * g.n() - 4) {
      return Elem{e.i, 0};
    }
    if (h.family() == Family::BinaryDihedral &&
        g.family() == Family::BinaryDihedral && g.n() == 2 * h.n() - 2) {
      return Elem{2 * e.i, e.eps};
    }
    throw UnsupportedPair("restriction_map: unsupported (H, G) pair");
  };
  // Verify the embedding is a homomorphism on the fly.
  for (const auto& x : h.elements())
    for (const auto& y : h.elements())
      if (!(g.mul(embed(x), embed(y)) == embed(h.mul(x, y))))
        throw std::logic_error("restriction_map: embedding not a homomorphism");
  ClassMap cm;
  for (const auto& c : h.classes())
    cm.image.push_back(g.class_of(embed(c.rep)));
  return cm;
}

}  // namespace ogw

#endif  // OGW_GROUP_HPP
