#include <random>

#include "doctest.h"
#include "qcapelli/error.hpp"
#include "qcapelli/superdiff.hpp"

using namespace qcapelli;

namespace {

using Op = NormalOrderedOperator;

StrictPartition sp(std::vector<int> p) { return StrictPartition(std::move(p)); }

Op random_op(std::mt19937& rng, const SuperAlphabet& alpha, int terms) {
  std::uniform_int_distribution<int> len(0, 2), row(1, alpha.N()), col(1, alpha.M()), coin(0, 1), c(-2, 2);
  Op out(alpha);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<int, int>> xs, ds;
    int nx = len(rng), nd = len(rng);
    for (int k = 0; k < nx; ++k) xs.emplace_back(coin(rng) ? row(rng) : -row(rng), coin(rng) ? col(rng) : -col(rng));
    for (int k = 0; k < nd; ++k) ds.emplace_back(coin(rng) ? row(rng) : -row(rng), coin(rng) ? col(rng) : -col(rng));
    out += Op::word(alpha, xs, ds, FieldElement(c(rng)));
  }
  return out;
}

// Two operators agree iff they agree on every monomial up to the highest derivation order.
bool same_action(const Op& a, const Op& b, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(a.alphabet(), d)) {
      SuperPolynomial p(a.alphabet());
      p.add(m, FieldElement(1));
      if (!(apply(a, p) == apply(b, p))) return false;
    }
  }
  return true;
}

std::int64_t dim_u(const StrictPartition& lambda) {
  int n = lambda.size();
  return (std::int64_t{1} << (n - lambda.length() / 2)) * count_standard(lambda);
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("alphabet and word sorting") {
  SuperAlphabet alpha(2, 3);
  CHECK(alpha.count() == 12);
  CHECK(alpha.id(1, 1) == 0);
  CHECK(alpha.id(-1, 1) == 6);
  CHECK(alpha.row(alpha.id(-2, 3)) == -2);
  CHECK(alpha.col(alpha.id(-2, 3)) == 3);
  CHECK_FALSE(alpha.odd(alpha.id(2, 3)));
  CHECK(alpha.odd(alpha.id(-1, 2)));
  CHECK_THROWS_AS(alpha.id(3, 1), UsageError);
  CHECK_THROWS_AS(alpha.id(1, -1), UsageError);

  SuperMonomial w{alpha.id(-1, 2), alpha.id(-1, 1)};
  CHECK(sort_word(w, alpha) == -1);
  CHECK(w == SuperMonomial{alpha.id(-1, 1), alpha.id(-1, 2)});
  SuperMonomial e{alpha.id(-2, 1), alpha.id(1, 1), alpha.id(-1, 2)};
  CHECK(sort_word(e, alpha) == -1);
  SuperMonomial z{alpha.id(-1, 2), alpha.id(1, 1), alpha.id(-1, 2)};
  CHECK(sort_word(z, alpha) == 0);
  SuperMonomial ev{alpha.id(1, 2), alpha.id(1, 2)};
  CHECK(sort_word(ev, alpha) == 1);

  CHECK(monomials_of_degree(SuperAlphabet(1, 1), 2).size() == 2);  // x^2, x y
  CHECK(monomials_of_degree(SuperAlphabet(1, 1), 3).size() == 2);
}

TEST_CASE("basic relations") {
  SuperAlphabet alpha(1, 1);
  Op one = Op::identity(alpha);
  Op x = Op::x(alpha, 1, 1), y = Op::x(alpha, -1, 1);
  Op dx = Op::d(alpha, 1, 1), dy = Op::d(alpha, -1, 1);
  CHECK((y * y).is_zero());
  CHECK((dy * dy).is_zero());
  CHECK(dx * x == x * dx + one);
  CHECK(dy * y == one - y * dy);
  CHECK(supercommutator(dy, y) == one);
  CHECK(supercommutator(dx, x) == one);
  CHECK(supercommutator(dx, y).is_zero());
  CHECK(supercommutator(y, y).is_zero());
  CHECK(x.parity() == 0);
  CHECK(y.parity() == 1);
  CHECK((x + y).parity() == -1);
  CHECK((x * dx).order() == 1);

  // negative second index
  FieldElement im = imaginary_unit();
  CHECK(Op::x(alpha, 1, -1) == im * y);
  CHECK(Op::d(alpha, 1, -1) == -im * dy);
  CHECK(Op::x(alpha, -1, -1) == im * x);
  CHECK(Op::d(alpha, -1, -1) * Op::x(alpha, -1, -1) == (dx * x));

  SuperPolynomial p = SuperPolynomial::word(alpha, {{1, 1}, {-1, 1}, {1, 1}});
  CHECK(apply(dy, p) == FieldElement(1) * SuperPolynomial::word(alpha, {{1, 1}, {1, 1}}));
  CHECK(apply(dx, p) == FieldElement(2) * SuperPolynomial::word(alpha, {{1, 1}, {-1, 1}}));
  CHECK(apply(dy, SuperPolynomial::word(alpha, {{1, 1}})).is_zero());
}

TEST_CASE("odd derivations pick up Koszul signs") {
  SuperAlphabet alpha(2, 1);
  Op da = Op::d(alpha, -1, 1);
  SuperPolynomial p = SuperPolynomial::word(alpha, {{-2, 1}, {-1, 1}});
  CHECK(apply(da, p) == FieldElement(-1) * SuperPolynomial::word(alpha, {{-2, 1}}));
  CHECK(Op::d(alpha, -1, 1) * Op::d(alpha, -2, 1) == FieldElement(-1) * (Op::d(alpha, -2, 1) * Op::d(alpha, -1, 1)));
}

TEST_CASE("multiplication is associative and acts as composition") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    SuperAlphabet alpha(1 + trial % 2, 1 + (trial / 2) % 2);
    Op a = random_op(rng, alpha, 3), b = random_op(rng, alpha, 3), c = random_op(rng, alpha, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (int d = 0; d <= 3; ++d) {
      for (const auto& m : monomials_of_degree(alpha, d)) {
        SuperPolynomial p(alpha);
        p.add(m, FieldElement(1));
        CHECK(apply(a * b, p) == apply(a, apply(b, p)));
      }
    }
  }
}

TEST_CASE("gamma and gamma prime") {
  CHECK(gamma(1, 1, 1, 1) == gamma(-1, -1, 1, 1));
  SuperAlphabet alpha(1, 1);
  Op expected = Op::word(alpha, {{1, 1}}, {{1, 1}}) + Op::word(alpha, {{-1, 1}}, {{-1, 1}});
  CHECK(gamma(1, 1, 1, 1) == expected);
  CHECK(gamma(1, -1, 1, 1).parity() == 1);
  CHECK(verify_gamma_rep(1, 1));
  CHECK(verify_gamma_rep(2, 1));
  CHECK(verify_gamma_rep(1, 2));
  CHECK(verify_gamma_rep(2, 2));
}

TEST_CASE("I_lambda examples") {
  SuperAlphabet alpha(1, 1);
  Op expected = FieldElement(2) * (Op::word(alpha, {{1, 1}}, {{1, 1}}) + Op::word(alpha, {{-1, 1}}, {{-1, 1}}));
  CHECK(i_lambda(sp({1}), 1, 1) == expected);
  CHECK(invariant_capelli_sum(1, 1, 1) == expected);
  // too long for the alphabet
  CHECK(i_lambda(sp({2, 1}), 1, 2).is_zero());
  CHECK(i_lambda(sp({2, 1}), 2, 1).is_zero());
  CHECK_FALSE(i_lambda(sp({2, 1}), 2, 2).is_zero());
  for (const auto& l : {sp({2}), sp({3}), sp({2, 1})}) {
    Op x = i_lambda(l, 2, 2);
    CHECK(x.parity() == 0);
    CHECK(x.order() == l.size());
    for (const auto& [k, c] : x.terms()) {
      CHECK(k.first.size() == k.second.size());
    }
  }
}

TEST_CASE("I_lambda is invariant") {
  int N = 2, M = 2;
  for (const auto& l : {sp({1}), sp({2}), sp({2, 1})}) {
    Op x = i_lambda(l, N, M);
    for (int i : {1, 2, -1, -2}) {
      for (int j : {1, 2, -1, -2}) {
        CHECK(supercommutator(gamma(i, j, N, M), x).is_zero());
        CHECK(supercommutator(gamma_prime(i, j, N, M), x).is_zero());
      }
    }
  }
}

TEST_CASE("I is the sum of its isotypic projections") {
  for (int n = 1; n <= 3; ++n) {
    for (auto [N, M] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
      if (n == 3 && N * M > 2) continue;
      Op sum(SuperAlphabet(N, M));
      for (const auto& l : enumerate_strict(n, n)) {
        // multiplicity of U_lambda in the regular module times dim U_lambda
        std::int64_t mult = l.length() % 2 ? dim_u(l) / 2 : dim_u(l);
        Rational w(mult * dim_u(l), (std::int64_t{1} << n) * factorial(n));
        sum += FieldElement(w) * i_lambda(l, N, M);
      }
      INFO("n=" << n << " N=" << N << " M=" << M);
      CHECK(sum == invariant_capelli_sum(n, N, M));
    }
  }
}

TEST_CASE("equality matches action on polynomials") {
  SuperAlphabet alpha(1, 1);
  Op a = Op::x(alpha, 1, 1) * Op::d(alpha, 1, 1);
  Op b = Op::d(alpha, 1, 1) * Op::x(alpha, 1, 1) - Op::identity(alpha);
  CHECK(a == b);
  CHECK(same_action(a, b, 3));
  CHECK_FALSE(same_action(a, Op::identity(alpha), 2));
}
