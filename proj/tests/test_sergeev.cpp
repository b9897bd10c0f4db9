#include <map>
#include <random>

#include "doctest.h"
#include "qcapelli/error.hpp"
#include "qcapelli/sergeev.hpp"

using namespace qcapelli;

namespace {

using S = SergeevElement;

// Word-rewriting oracle: g1 A1 g2 A2 -> move g2 left through A1 one generator at a
// time (a_i g = g a_{g^{-1}(i)}), then bubble-sort the Clifford word.
std::pair<BasisKey, int> oracle_product(BasisKey x, BasisKey y, int n) {
  Perm g1 = key_perm(x, n), g2 = key_perm(y, n);
  std::vector<int> word;
  Perm g2inv = g2.inverse();
  for (int i : key_mono(x).indices()) word.push_back(g2inv(i));
  for (int i : key_mono(y).indices()) word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (word[p] == word[p + 1]) {
        sign = -sign;
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(p), word.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        changed = true;
        break;
      }
      if (word[p] > word[p + 1]) {
        std::swap(word[p], word[p + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {make_key(g1 * g2, CliffordMono::from_indices(word)), sign};
}

S random_element(std::mt19937& rng, int n, int terms) {
  auto keys = all_basis_keys(n);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> c(-4, 4);
  S x(n);
  for (int t = 0; t < terms; ++t) x += S::basis(n, keys[pick(rng)], FieldElement(c(rng)));
  return x;
}

S a(int i, int n) { return S::clifford_word(n, {i}); }
S t(int i, int j, int n) { return S::transposition(n, i, j); }
FieldElement q(std::int64_t p, std::int64_t d = 1) { return FieldElement(Rational(p, d)); }

}  // namespace

TEST_CASE("basis product agrees with the word-rewriting oracle") {
  for (int n = 1; n <= 3; ++n) {
    auto keys = all_basis_keys(n);
    for (BasisKey x : keys) {
      for (BasisKey y : keys) CHECK(basis_product(x, y, n) == oracle_product(x, y, n));
    }
  }
  std::mt19937 rng(5);
  auto keys = all_basis_keys(5);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    BasisKey x = keys[pick(rng)], y = keys[pick(rng)];
    CHECK(basis_product(x, y, 5) == oracle_product(x, y, 5));
  }
}

TEST_CASE("product examples") {
  CHECK(a(1, 1) * a(1, 1) == S::scalar(1, -1));
  S x = t(1, 2, 2) * a(1, 2), y = t(1, 2, 2) * a(2, 2);
  CHECK(x * y == S::scalar(2, -1));
  S a12 = S::clifford_word(2, {1, 2});
  CHECK(t(1, 2, 2) * (t(1, 2, 2) * a12) == a12);
  CHECK(t(1, 2, 3) * a(1, 3) * t(1, 2, 3) == a(2, 3));
  CHECK_THROWS_AS(a(1, 2) * a(1, 3), UsageError);
}

TEST_CASE("star and alpha") {
  CHECK(star(t(1, 2, 2)) == t(1, 2, 2));
  CHECK(star(a(1, 2)) == -a(1, 2));
  S e = t(1, 2, 2) * S::clifford_word(2, {1, 2});
  CHECK(star(e) == e);
  S m = S::identity(2) + inv(sqrt_int(2)) * t(1, 2, 2);
  CHECK(alpha(m) == S::identity(2));
  CHECK(alpha(S::clifford_word(2, {1, 2})) == S::clifford_word(2, {1, 2}));
  CHECK(alpha(t(1, 2, 2) * a(1, 2)).is_zero());

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    S u = random_element(rng, 3, 5), v = random_element(rng, 3, 5);
    CHECK(star(star(u)) == u);
    CHECK(star(u * v) == star(v) * star(u));
    CHECK(alpha(star(u)) == star(alpha(u)));
  }
  // h^* = h^{-1} on basis elements
  for (BasisKey k : all_basis_keys(3)) {
    S h = S::basis(3, k);
    CHECK(h * star(h) == S::identity(3));
  }
}

TEST_CASE("phi examples") {
  S p = phi(1, 2, q(3), q(1), 2);
  S expect = S::identity(2) - q(1, 2) * t(1, 2, 2) + q(1, 4) * (t(1, 2, 2) * S::clifford_word(2, {1, 2}));
  CHECK(p == expect);
  CHECK(p * phi(2, 1, q(1), q(3), 2) == S::scalar(2, q(11, 16)));
  S p21 = phi(2, 1, q(5), FieldElement(), 2);
  S e21 = S::identity(2) - q(1, 5) * t(1, 2, 2) - q(1, 5) * (t(1, 2, 2) * S::clifford_word(2, {1, 2}));
  CHECK(p21 == e21);
  CHECK_THROWS_AS(phi(1, 2, q(2), q(2), 2), PoleError);
  CHECK_THROWS_AS(phi(1, 2, q(2), q(-2), 2), PoleError);
  CHECK(star(phi(1, 2, sqrt_int(2), q(7), 3)) == phi(1, 2, sqrt_int(2), q(7), 3));
}

TEST_CASE("Yang-Baxter relation on a rational grid") {
  std::vector<FieldElement> us = {q(1), q(2), q(3), q(4), q(5)};
  std::vector<FieldElement> vs = {q(1, 2), q(3, 2), q(5, 2), q(7, 2), q(9, 2)};
  std::vector<FieldElement> ws = {q(1, 3), q(2, 3), q(4, 3), q(5, 3), q(7, 3)};
  for (const auto& u : us) {
    for (const auto& v : vs) {
      for (const auto& w : ws) {
        S lhs = phi(1, 2, u, v, 3) * phi(1, 3, u, w, 3) * phi(2, 3, v, w, 3);
        S rhs = phi(2, 3, v, w, 3) * phi(1, 3, u, w, 3) * phi(1, 2, u, v, 3);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("commutation for disjoint pairs and Clifford conjugation") {
  S p = phi(1, 2, q(3), q(1, 2), 4), r = phi(3, 4, q(5), q(2, 7), 4);
  CHECK(p * r == r * p);
  S p13 = phi(1, 3, q(3), q(1, 2), 4), r24 = phi(4, 2, q(5), sqrt_int(2), 4);
  CHECK(p13 * r24 == r24 * p13);
  FieldElement u = q(3), v = sqrt_int(3);
  S ai = a(1, 3), aj = a(2, 3);
  S ai_inv = -ai, aj_inv = -aj;
  CHECK(ai * phi(1, 2, u, v, 3) * ai_inv == phi(1, 2, -u, v, 3));
  CHECK(aj * phi(1, 2, u, v, 3) * aj_inv == phi(1, 2, u, -v, 3));
}

TEST_CASE("Jucys-Murphy elements") {
  CHECK(jm_element(1, 3).is_zero());
  S x2 = jm_element(2, 2);
  CHECK(x2 == t(1, 2, 2) + t(1, 2, 2) * S::clifford_word(2, {1, 2}));
  CHECK(x2 * x2 == S::scalar(2, 2));

  for (int n = 1; n <= 5; ++n) {
    std::vector<S> x;
    for (int k = 1; k <= n; ++k) x.push_back(jm_element(k, n));
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) CHECK(commutator(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(l)]).is_zero());
    }
    for (int k = 1; k <= n; ++k) {
      CHECK(a(k, n) * x[static_cast<std::size_t>(k - 1)] == -(x[static_cast<std::size_t>(k - 1)] * a(k, n)));
    }
    for (int k = 1; k < n; ++k) {
      S s = t(k, k + 1, n);
      S xk = x[static_cast<std::size_t>(k - 1)], xk1 = x[static_cast<std::size_t>(k)];
      S akk = S::clifford_word(n, {k, k + 1});
      CHECK(s * xk1 - xk * s == S::identity(n) + akk);
      CHECK(xk1 * s - s * xk == S::identity(n) - akk);
      CHECK(commutator(s, xk * xk1).is_zero());
      CHECK(commutator(s, xk * xk + xk1 * xk1).is_zero());
    }
  }
}

TEST_CASE("power sums of Jucys-Murphy elements are central") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 2; ++r) {
      S p(n);
      for (int k = 1; k <= n; ++k) p += power(jm_element(k, n), 2 * r);
      for (BasisKey h : all_basis_keys(n)) CHECK(commutator(p, S::basis(n, h)).is_zero());
    }
  }
}

TEST_CASE("y elements and embedding") {
  CHECK(y_element(1, 1, 1) == t(1, 2, 2) - t(1, 2, 2) * S::clifford_word(2, {1, 2}));
  CHECK(y_element(1, 1, 0).is_zero());
  S y = y_element(2, 2, 2);
  S expect = t(2, 3, 4) + t(2, 4, 4) - t(2, 3, 4) * S::clifford_word(4, {2, 3}) - t(2, 4, 4) * S::clifford_word(4, {2, 4});
  CHECK(y == expect);
  CHECK(embed(t(1, 2, 2), 4, 2) == t(3, 4, 4));
  CHECK(embed(a(1, 1), 3, 1) == a(2, 3));
  CHECK_THROWS_AS(embed(t(1, 2, 2), 3, 2), UsageError);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    S u = random_element(rng, 3, 4), v = random_element(rng, 3, 4);
    CHECK(embed(u * v, 5, 1) == embed(u, 5, 1) * embed(v, 5, 1));
  }
}

TEST_CASE("phi_series valuations and constant term") {
  SergeevSeries f = phi_series(1, 2, u_series(1, 1, 12), u_series(2, 2, 12), 2);
  CHECK(f.valuation() == 0);
  CHECK(f.coefficient(0) == phi(1, 2, sqrt_int(2), sqrt_int(6), 2));
  SergeevSeries g = phi_series(1, 2, u_series(0, 1, 12), u_series(0, 2, 12), 2);
  CHECK(g.valuation() == -1);
  SergeevSeries h = phi_series(1, 2, u_series(1, 1, 12), u_series(1, 2, 12), 2);
  CHECK(h.valuation() == -2);
}
