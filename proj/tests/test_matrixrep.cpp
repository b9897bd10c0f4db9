#include <map>
#include <random>

#include "doctest.h"
#include "qcapelli/error.hpp"
#include "qcapelli/fusion.hpp"
#include "qcapelli/matrixrep.hpp"

using namespace qcapelli;

namespace {

using S = SergeevElement;

StrictPartition sp(std::vector<int> p) { return StrictPartition(std::move(p)); }

std::vector<int> letters_of(int N) {
  std::vector<int> out;
  for (int i = 1; i <= N; ++i) out.push_back(i);
  for (int i = 1; i <= N; ++i) out.push_back(-i);
  return out;
}

int bar(int i) { return i < 0 ? 1 : 0; }

// E_ij (x) E_ab e_k (x) e_c = e_i (x) e_a d_jk d_bc (-1)^{bar j (bar a + bar b)}
SuperMatrix two_site_unit(int i, int j, int a, int b, int N) {
  SuperSpace space(N, 2);
  SuperMatrix m(space);
  std::uint32_t src = space.state({j, b}), dst = space.state({i, a});
  m.add(dst, src, FieldElement((bar(j) * (bar(a) + bar(b))) % 2 ? -1 : 1));
  return m;
}

S random_element(std::mt19937& rng, int n, int terms) {
  auto keys = all_basis_keys(n);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  S x(n);
  for (int t = 0; t < terms; ++t) x += S::basis(n, keys[pick(rng)], FieldElement(c(rng)));
  return x;
}

// chi from the left ideal H_n psi inside the regular representation.
FieldElement regular_chi(const StrictPartition& lambda, BasisKey h) {
  int n = lambda.size();
  auto keys = all_basis_keys(n);
  std::map<BasisKey, std::size_t> index;
  for (std::size_t k = 0; k < keys.size(); ++k) index[keys[k]] = k;
  auto vec = [&](const S& x) {
    std::vector<FieldElement> v(keys.size());
    for (const auto& [k, c] : x.terms()) v[index[k]] = c;
    return v;
  };
  static std::map<std::vector<int>, Subspace> ideals;
  auto it = ideals.find(lambda.parts());
  if (it == ideals.end()) {
    const S& p = psi_cached(lambda);
    Subspace sub(keys.size());
    for (BasisKey g : keys) sub.insert(vec(S::basis(n, g) * p));
    it = ideals.emplace(lambda.parts(), std::move(sub)).first;
  }
  const Subspace& ideal = it->second;
  FieldElement tr;
  S hh = S::basis(n, h);
  for (std::size_t k = 0; k < ideal.rank(); ++k) {
    S b(n);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (!ideal.basis()[k][i].is_zero()) b += S::basis(n, keys[i], ideal.basis()[k][i]);
    }
    tr += (hh * b).coefficient(keys[ideal.pivots()[k]]);
  }
  return tr * inv(FieldElement(static_cast<std::int64_t>(ideal.rank())));
}

}  // namespace

TEST_CASE("state encoding") {
  SuperSpace space(2, 3);
  CHECK(space.dim() == 64);
  std::uint32_t s = space.state({1, -2, 2});
  CHECK(space.letters(s) == std::vector<int>{1, -2, 2});
  CHECK(space.parity(s) == 1);
  CHECK(space.parity_before(s, 2) == 0);
  CHECK(space.parity_before(s, 3) == 1);
  CHECK(space.state({1, 1, 1}) == 0);
  CHECK_THROWS_AS(space.state({1, 3, 1}), UsageError);
  CHECK_THROWS_AS(SuperSpace(0, 2), UsageError);
}

TEST_CASE("site matrix units follow the tensor sign rule") {
  for (int N = 1; N <= 2; ++N) {
    for (int i : letters_of(N)) {
      for (int j : letters_of(N)) {
        for (int a : letters_of(N)) {
          for (int b : letters_of(N)) {
            CHECK(site_matrix_unit(1, i, j, N, 2) * site_matrix_unit(2, a, b, N, 2) == two_site_unit(i, j, a, b, N));
          }
        }
      }
    }
  }
  SuperSpace one(1, 1);
  CHECK(site_matrix_unit(1, 1, 1, 1, 1).apply({FieldElement(1), FieldElement(0)}) ==
        std::vector<FieldElement>{FieldElement(1), FieldElement(0)});
  // odd unit at site 2 picks up a sign from an odd first letter
  SuperMatrix e = site_matrix_unit(2, 1, -1, 1, 2);
  SuperSpace two(1, 2);
  CHECK(e.entry(two.state({1, 1}), two.state({1, -1})) == FieldElement(1));
  CHECK(e.entry(two.state({-1, 1}), two.state({-1, -1})) == FieldElement(-1));
  // odd matrices at different sites anticommute
  SuperMatrix x = site_matrix_unit(1, 1, -1, 1, 2), y = site_matrix_unit(2, -1, 1, 1, 2);
  CHECK(x * y == FieldElement(-1) * (y * x));
  CHECK(x.degree() == 1);
  CHECK((x * y).degree() == 0);
}

TEST_CASE("J and P") {
  for (int N = 1; N <= 2; ++N) {
    for (int n = 1; n <= 3; ++n) {
      SuperMatrix id = SuperMatrix::identity(SuperSpace(N, n));
      for (int k = 1; k <= n; ++k) {
        SuperMatrix jk = j_matrix(k, N, n);
        CHECK(jk * jk == FieldElement(-1) * id);
        CHECK(jk.degree() == 1);
        for (int l = 1; l <= n; ++l) {
          if (k == l) continue;
          SuperMatrix jl = j_matrix(l, N, n), p = p_matrix(k, l, N, n);
          CHECK(jk * jl == FieldElement(-1) * (jl * jk));
          CHECK(p * p == id);
          CHECK(p == p_matrix(l, k, N, n));
          CHECK(p * jk * p == jl);
          // P as the displayed sum of products of site units
          SuperMatrix sum(SuperSpace(N, n));
          for (int i : letters_of(N)) {
            for (int j : letters_of(N)) {
              SuperMatrix t = site_matrix_unit(k, i, j, N, n) * site_matrix_unit(l, j, i, N, n);
              sum = sum + FieldElement(bar(j) ? -1 : 1) * t;
            }
          }
          CHECK(sum == p);
        }
      }
      // J as the displayed sum
      for (int s = 1; s <= n; ++s) {
        SuperMatrix sum(SuperSpace(N, n));
        for (int j : letters_of(N)) sum = sum + FieldElement(bar(j) ? -1 : 1) * site_matrix_unit(s, j, -j, N, n);
        CHECK(sum == j_matrix(s, N, n));
      }
    }
  }
  CHECK(supertrace(p_matrix(1, 2, 1, 2)).is_zero());
}

TEST_CASE("rep is an algebra homomorphism") {
  for (int N = 1; N <= 2; ++N) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(rep(S::identity(n), N) == SuperMatrix::identity(SuperSpace(N, n)));
      for (int k = 1; k <= n; ++k) CHECK(rep(S::clifford_word(n, {k}), N) == j_matrix(k, N, n));
      for (int k = 1; k < n; ++k) CHECK(rep(S::transposition(n, k, k + 1), N) == p_matrix(k, k + 1, N, n));
    }
  }
  CHECK(rep(S::clifford_word(2, {1, 2}), 1) == j_matrix(1, 1, 2) * j_matrix(2, 1, 2));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3, N = 1 + (trial / 3) % 2;
    S x = random_element(rng, n, 3), y = random_element(rng, n, 3);
    CHECK(rep(x * y, N) == rep(x, N) * rep(y, N));
    CHECK(rep(x + y, N) == rep(x, N) + rep(y, N));
    std::vector<FieldElement> v(SuperSpace(N, n).dim());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = FieldElement(static_cast<std::int64_t>(s % 5) - 2);
    CHECK(rep_apply(x, SuperSpace(N, n), v) == rep(x, N).apply(v));
  }
}

TEST_CASE("supertrace") {
  CHECK(supertrace(SuperMatrix::identity(SuperSpace(2, 1))).is_zero());
  CHECK(supertrace(site_matrix_unit(1, 1, 1, 1, 1)) == FieldElement(1));
  CHECK(supertrace(site_matrix_unit(1, -1, -1, 1, 1)) == FieldElement(-1));
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 2;
    S x = random_element(rng, n, 3), y = random_element(rng, n, 3);
    // split into homogeneous parts
    for (const auto& [kx, cx] : x.terms()) {
      for (const auto& [ky, cy] : y.terms()) {
        SuperMatrix a = rep(S::basis(n, kx, cx), 2), b = rep(S::basis(n, ky, cy), 2);
        CHECK(supertrace(supercommutator(a, b)).is_zero());
        if (!key_is_odd(kx)) CHECK(supertrace(a * b) == supertrace(b * a));
      }
    }
  }
}

TEST_CASE("characters") {
  CHECK(char_chi(sp({1}), S::identity(1)) == FieldElement(1));
  CHECK(char_chi(sp({2}), S::identity(2)) == FieldElement(1));
  CHECK(char_chi(sp({2}), S::clifford_word(2, {1})).is_zero());
  CHECK(char_chi(sp({2}), S::transposition(2, 1, 2)).is_zero());
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : enumerate_strict(n, n)) {
      for (BasisKey h : all_basis_keys(n)) {
        FieldElement c = char_chi_basis(lambda, h);
        if (key_is_odd(h)) CHECK(c.is_zero());
        CHECK(c == regular_chi(lambda, h));
      }
    }
  }
  for (BasisKey h : all_basis_keys(4)) {
    if (h % 7 == 0) CHECK(char_chi_basis(sp({3, 1}), h) == regular_chi(sp({3, 1}), h));
  }
}

TEST_CASE("orthogonality of characters") {
  for (int n = 2; n <= 4; ++n) {
    auto parts = enumerate_strict(n, n);
    for (const auto& l : parts) {
      for (const auto& m : parts) {
        FieldElement s;
        for (BasisKey h : all_basis_keys(n)) {
          auto [hinv, sg] = basis_star(h, n);
          FieldElement t = char_chi_basis(l, h) * char_chi_basis(m, hinv);
          s += sg > 0 ? t : -t;
        }
        if (l == m) CHECK_FALSE(s.is_zero());
        else CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("central elements X") {
  CHECK(x_lambda(sp({1})) == S::identity(1));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : enumerate_strict(n, n)) {
      S x = x_lambda(lambda);
      for (BasisKey h : all_basis_keys(n)) CHECK(commutator(x, S::basis(n, h)).is_zero());
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : enumerate_strict(n, n)) CHECK(verify_x_lambda_average(lambda));
  }
}

TEST_CASE("central eigenvalues") {
  CHECK(verify_central_eigenvalue(sp({2}), 1));
  CHECK(verify_central_eigenvalue(sp({3}), 1));
  CHECK(verify_central_eigenvalue(sp({2, 1}), 2));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : enumerate_strict(n, n)) {
      for (int r = 1; r <= 2; ++r) CHECK(verify_central_eigenvalue(lambda, r));
    }
  }
  CHECK_THROWS_AS(verify_central_eigenvalue(sp({2}), 0), UsageError);
}

TEST_CASE("character table") {
  auto t = character_table(sp({2}));
  std::size_t total = 0;
  for (const auto& c : t) total += c.size;
  CHECK(total == 8);
  CHECK(t.front().value == FieldElement(1));
}
