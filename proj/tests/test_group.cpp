#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ogw/group.hpp"

using namespace ogw;

TEST_CASE("binary dihedral structure") {
  REQUIRE_THROWS_AS(GroupModel(Family::BinaryDihedral, 3), ParamTooSmall);
  for (int n = 4; n <= 8; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    REQUIRE(g.order() == (unsigned)(4 * n - 8));
    // group axioms, exhaustively
    auto all = g.elements();
    REQUIRE(all.size() == g.order());
    for (const auto& x : all) {
      REQUIRE(g.mul(x, g.inverse(x)) == g.identity());
      for (const auto& y : all) {
        for (const auto& z : all) {
          REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
        }
      }
    }
    // defining relations
    Elem a{1, 0}, b{0, 1};
    Elem an2 = g.identity();
    for (int i = 0; i < n - 2; ++i) an2 = g.mul(an2, a);
    REQUIRE(an2 == g.mul(b, b));
    REQUIRE(g.mul(g.mul(b, b), g.mul(b, b)) == g.identity());
    REQUIRE(g.mul(b, a) == g.mul(g.inverse(a), b));
    // class partition
    unsigned total = 0;
    for (const auto& c : g.classes()) total += c.size;
    REQUIRE(total == g.order());
    REQUIRE(g.class_count() == (size_t)(n + 1));
  }
}

TEST_CASE("binary dihedral class data") {
  GroupModel g4(Family::BinaryDihedral, 4);
  REQUIRE(g4.class_count() == 5);
  std::multiset<unsigned> sizes;
  for (const auto& c : g4.classes()) sizes.insert(c.size);
  REQUIRE(sizes == std::multiset<unsigned>{1, 1, 2, 2, 2});

  for (int n = 4; n <= 8; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    REQUIRE(g.classes()[0].name == "1");
    REQUIRE(g.classes()[0].centralizer == (unsigned)(4 * n - 8));
    for (int k = 1; k <= n - 3; ++k) {
      REQUIRE(g.classes()[(size_t)k].name == "a^" + std::to_string(k));
      REQUIRE(g.classes()[(size_t)k].centralizer == (unsigned)(2 * n - 4));
    }
    REQUIRE(g.classes()[(size_t)n - 2].name == "a^" + std::to_string(n - 2));
    REQUIRE(g.classes()[(size_t)n - 2].centralizer == (unsigned)(4 * n - 8));
    REQUIRE(g.classes()[(size_t)n - 1].name == "b");
    REQUIRE(g.classes()[(size_t)n - 1].centralizer == 4);
    REQUIRE(g.classes()[(size_t)n].name == "ab");
    REQUIRE(g.classes()[(size_t)n].centralizer == 4);
  }
}

TEST_CASE("dihedral class data (SO(3) family)") {
  REQUIRE_THROWS_AS(GroupModel(Family::Dihedral, 4), ParamTooSmall);
  for (int n = 5; n <= 9; n += 2) {
    GroupModel g(Family::Dihedral, n);
    REQUIRE(g.order() == (unsigned)(2 * n - 4));
    REQUIRE(g.class_count() == (size_t)((n - 3) / 2 + 2));
    long bc = g.class_named("b");
    REQUIRE(bc >= 0);
    REQUIRE(g.classes()[(size_t)bc].centralizer == 2);
    REQUIRE(g.classes()[(size_t)bc].size == (unsigned)(n - 2));
    for (int k = 1; k <= (n - 3) / 2; ++k)
      REQUIRE(g.classes()[(size_t)k].centralizer == (unsigned)(n - 2));
  }
}

TEST_CASE("character table orthogonality") {
  for (int n = 4; n <= 8; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    REQUIRE(t.irrep_count() == g.class_count());
    // sum of squared dimensions
    unsigned s = 0;
    for (size_t i = 0; i < t.irrep_count(); ++i) s += t.dim(i) * t.dim(i);
    REQUIRE(s == g.order());
    // row orthogonality
    for (size_t i = 0; i < t.irrep_count(); ++i) {
      for (size_t j = 0; j < t.irrep_count(); ++j) {
        Cyc acc(Rat(0));
        for (size_t c = 0; c < g.class_count(); ++c)
          acc = acc + Rat((long)g.classes()[c].size) * t.value(i, c) *
                          t.value(j, c).conj();
        REQUIRE(acc == Cyc(Rat(i == j ? (long)g.order() : 0)));
      }
    }
    // column norm equals centralizer order
    for (size_t c = 0; c < g.class_count(); ++c) {
      Cyc acc(Rat(0));
      for (size_t i = 0; i < t.irrep_count(); ++i)
        acc = acc + t.value(i, c) * t.value(i, c).conj();
      REQUIRE(acc == Cyc(Rat((long)g.classes()[c].centralizer)));
    }
  }
}

TEST_CASE("psi rows depend on the parity of n") {
  GroupModel g6(Family::BinaryDihedral, 6);
  CharacterTable t6(g6);
  size_t psi3 = (size_t)t6.irrep_named("psi3");
  REQUIRE(t6.value(psi3, (size_t)g6.class_named("a^1")) == Cyc(Rat(-1)));
  REQUIRE(t6.value(psi3, (size_t)g6.class_named("b")) == Cyc(Rat(-1)));

  GroupModel g5(Family::BinaryDihedral, 5);
  CharacterTable t5(g5);
  size_t p3 = (size_t)t5.irrep_named("psi3");
  Cyc i = root_of_unity(t5.modulus(), t5.modulus() / 4);
  REQUIRE(t5.value(p3, (size_t)g5.class_named("b")) == i);
}

TEST_CASE("rho_k columns") {
  for (int n : {5, 6}) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    unsigned M = t.modulus();
    long w = (long)M / (2 * n - 4);
    for (int k = 1; k <= n - 3; ++k) {
      size_t r = (size_t)t.irrep_named("rho" + std::to_string(k));
      for (int l = 1; l <= n - 2; ++l) {
        Cyc expected =
            root_of_unity(M, w * k * l) + root_of_unity(M, -w * k * l);
        REQUIRE(t.value(r, (size_t)g.class_named(
                               l == 1 ? "a^1" : "a^" + std::to_string(l))) ==
                expected);
      }
      REQUIRE(t.value(r, (size_t)g.class_named("b")) == Cyc(Rat(0)));
    }
  }
}

TEST_CASE("orthogonality sum for rho1 at n=5 over elements") {
  GroupModel g(Family::BinaryDihedral, 5);
  CharacterTable t(g);
  size_t r1 = (size_t)t.irrep_named("rho1");
  Cyc acc(Rat(0));
  for (const auto& e : g.elements()) {
    Cyc v = t.value(r1, g.class_of(e));
    acc = acc + v * v.conj();
  }
  REQUIRE(acc == Cyc(Rat(12)));
}

TEST_CASE("tensor decomposition with rho1 reproduces the McKay graph") {
  for (int n = 4; n <= 8; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    size_t rho1 = (size_t)t.irrep_named("rho1");
    size_t cnt = t.irrep_count();
    // rho1 (x) psi1 = rho1, rho1 (x) rho1 = rho2 + psi1 + psi2 (n >= 5)
    auto m1 = t.tensor_multiplicities(g, rho1, (size_t)t.irrep_named("psi1"));
    std::vector<unsigned> expect1(cnt, 0);
    expect1[rho1] = 1;
    REQUIRE(m1 == expect1);
    auto m2 = t.tensor_multiplicities(g, rho1, rho1);
    std::vector<unsigned> expect2(cnt, 0);
    expect2[(size_t)t.irrep_named("psi1")] = 1;
    expect2[(size_t)t.irrep_named("psi2")] = 1;
    if (n >= 5)
      expect2[(size_t)t.irrep_named("rho2")] = 1;
    else {
      expect2[(size_t)t.irrep_named("psi3")] = 1;
      expect2[(size_t)t.irrep_named("psi4")] = 1;
    }
    REQUIRE(m2 == expect2);
    // adjacency graph: node set = irreps, edges from tensor rule; degree
    // sequence of the extended D_n Dynkin diagram: four leaves, two forks
    // (n >= 6); n+1 nodes total.
    std::vector<std::set<size_t>> adj(cnt);
    for (size_t i = 0; i < cnt; ++i) {
      auto m = t.tensor_multiplicities(g, rho1, i);
      for (size_t j = 0; j < cnt; ++j)
        if (m[j] > 0 && j != i) {
          adj[i].insert(j);
          adj[j].insert(i);
        }
    }
    for (size_t i = 0; i < cnt; ++i)
      for (size_t j : adj[i]) REQUIRE(adj[j].count(i) == 1);
    std::multiset<size_t> degs;
    for (auto& s : adj) degs.insert(s.size());
    std::multiset<size_t> expect;
    if (n == 4) {
      expect = {1, 1, 1, 1, 4};
    } else {
      expect = {1, 1, 1, 1, 3, 3};
      for (int k = 0; k < n + 1 - 6; ++k) expect.insert(2);
    }
    REQUIRE(degs == expect);
  }
}

TEST_CASE("frobenius counts: character formula vs convolution") {
  for (int n = 4; n <= 8; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    size_t nc = g.class_count();
    for (size_t c1 = 0; c1 < nc; ++c1)
      for (size_t c2 = c1; c2 < nc; ++c2)
        for (size_t c3 = c2; c3 < nc; ++c3) {
          std::vector<size_t> cls{c1, c2, c3};
          REQUIRE(frobenius_count(g, t, cls) ==
                  frobenius_count_convolution(g, cls));
        }
    size_t b = (size_t)g.class_named("b");
    size_t one = (size_t)g.class_named("1");
    for (int m = 1; m <= 3; ++m) {
      std::vector<size_t> cls(2 * (size_t)m, b);
      cls.push_back(one);
      REQUIRE(frobenius_count(g, t, cls) ==
              frobenius_count_convolution(g, cls));
    }
  }
}

TEST_CASE("frobenius values from the three-point tables") {
  GroupModel g4(Family::BinaryDihedral, 4);
  CharacterTable t4(g4);
  size_t b = (size_t)g4.class_named("b"), one = (size_t)g4.class_named("1");
  REQUIRE(frobenius_count(g4, t4, {b, b, one}) == Rat(1, 4));

  for (int n = 4; n <= 7; ++n) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    size_t u = (size_t)g.class_named("1");
    REQUIRE(frobenius_count(g, t, {u, u, u}) == Rat(1, 4 * n - 8));
  }

  // <e_b^(2m), e_1> = (n-2)^(2m-1)/(4n-8) for even n
  for (int n : {4, 6}) {
    GroupModel g(Family::BinaryDihedral, n);
    CharacterTable t(g);
    size_t bb = (size_t)g.class_named("b"), u = (size_t)g.class_named("1");
    for (long m = 1; m <= 3; ++m) {
      std::vector<size_t> cls(2 * (size_t)m, bb);
      cls.push_back(u);
      REQUIRE(frobenius_count(g, t, cls) ==
              Rat(mpz_class(n - 2)).pow(2 * m - 1) / Rat(4 * n - 8));
    }
  }
}

TEST_CASE("dihedral frobenius three-point values") {
  for (int n : {5, 7}) {
    GroupModel g(Family::Dihedral, n);
    CharacterTable t(g);
    size_t b = (size_t)g.class_named("b"), one = (size_t)g.class_named("1");
    REQUIRE(frobenius_count(g, t, {one, b, b}) == Rat(1, 2));
    REQUIRE(frobenius_count(g, t, {one, one, one}) == Rat(1, 2 * n - 4));
    for (int k = 1; k <= (n - 3) / 2; ++k) {
      size_t ak = (size_t)g.class_named("a^" + std::to_string(k));
      REQUIRE(frobenius_count(g, t, {ak, b, b}) == Rat(1));
      REQUIRE(frobenius_count(g, t, {one, ak, ak}) == Rat(1, n - 2));
    }
  }
}

TEST_CASE("ages on rho1") {
  for (int n : {4, 5, 6}) {
    GroupModel g(Family::BinaryDihedral, n);
    auto [a0, a1] = ages_on_rho1(g, (size_t)g.class_named("1"));
    REQUIRE(a0 == Rat(0));
    REQUIRE(a1 == Rat(0));
    for (int k = 1; k <= n - 3; ++k) {
      auto [x, y] =
          ages_on_rho1(g, (size_t)g.class_named("a^" + std::to_string(k)));
      REQUIRE(x + y == Rat(1));
      REQUIRE(((x == Rat(k, 2 * n - 4)) || (y == Rat(k, 2 * n - 4))));
    }
    auto [c0, c1] =
        ages_on_rho1(g, (size_t)g.class_named("a^" + std::to_string(n - 2)));
    REQUIRE(c0 == Rat(1, 2));
    REQUIRE(c1 == Rat(1, 2));
    for (const char* nm : {"b", "ab"}) {
      auto [x, y] = ages_on_rho1(g, (size_t)g.class_named(nm));
      REQUIRE(((x == Rat(1, 4) && y == Rat(3, 4)) ||
               (x == Rat(3, 4) && y == Rat(1, 4))));
    }
  }
}

TEST_CASE("sqrt(2 - chi_rho1)") {
  for (int n : {4, 6}) {
    GroupModel g(Family::BinaryDihedral, n);
    REQUIRE(sqrt_two_minus_chi_rho1(g, (size_t)g.class_named("1")) ==
            Cyc(Rat(0)));
    REQUIRE(sqrt_two_minus_chi_rho1(
                g, (size_t)g.class_named("a^" + std::to_string(n - 2))) ==
            Cyc(Rat(2)));
    // square equals 2 - chi(a)
    CharacterTable t(g);
    size_t a1 = (size_t)g.class_named("a^1");
    Cyc s = sqrt_two_minus_chi_rho1(g, a1);
    REQUIRE(s * s ==
            Cyc(Rat(2)) - t.value((size_t)t.irrep_named("rho1"), a1));
    Cyc sb = sqrt_two_minus_chi_rho1(g, (size_t)g.class_named("b"));
    REQUIRE(sb * sb == Cyc(Rat(2)));
  }
}

TEST_CASE("restriction maps") {
  // Z_(2n-4) inside BD(n)
  for (int n : {4, 5, 6}) {
    GroupModel h(Family::Cyclic, 2 * n - 4);
    GroupModel g(Family::BinaryDihedral, n);
    ClassMap cm = restriction_map(h, g);
    REQUIRE(cm.image[0] == (size_t)g.class_named("1"));
    for (int l = 1; l <= n - 2; ++l) {
      size_t target = (size_t)g.class_named("a^" + std::to_string(l));
      REQUIRE(cm.image[(size_t)l] == target);
      if (l <= n - 3)
        REQUIRE(cm.image[(size_t)(2 * n - 4 - l)] == target);
    }
  }
  // BD(n) inside BD(2n-2)
  for (int n : {4, 5}) {
    GroupModel h(Family::BinaryDihedral, n);
    GroupModel g(Family::BinaryDihedral, 2 * n - 2);
    ClassMap cm = restriction_map(h, g);
    REQUIRE(cm.image[(size_t)h.class_named("1")] ==
            (size_t)g.class_named("1"));
    // [b]_H lands in a b-type class of G
    size_t img = cm.image[(size_t)h.class_named("b")];
    REQUIRE(g.classes()[img].rep.eps == 1);
  }
  GroupModel h(Family::Cyclic, 5);
  GroupModel g(Family::BinaryDihedral, 4);
  REQUIRE_THROWS_AS(restriction_map(h, g), UnsupportedPair);
}
