#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/field.hpp"
#include "qcapelli/shifted.hpp"

namespace qcapelli {

// Free generators x_{ia} of P: i = +-1..+-N, a = 1..M, parity 1 iff i < 0.
// Id = code(i) * M + (a - 1) with code(i) = i - 1 for i > 0 and N + |i| - 1 for i < 0.
class SuperAlphabet {
 public:
  SuperAlphabet(int N, int M);

  int N() const { return N_; }
  int M() const { return M_; }
  int count() const { return 2 * N_ * M_; }
  std::uint16_t id(int i, int a) const;  // a > 0
  int row(std::uint16_t g) const;        // i
  int col(std::uint16_t g) const;        // a
  bool odd(std::uint16_t g) const { return g >= static_cast<std::uint16_t>(N_ * M_); }

  friend bool operator==(const SuperAlphabet& x, const SuperAlphabet& y) { return x.N_ == y.N_ && x.M_ == y.M_; }

 private:
  int N_;
  int M_;
};

// Sorted generator ids; odd ids occur at most once.
using SuperMonomial = std::vector<std::uint16_t>;

// Sorts a word of generators in place. Returns the Koszul sign, or 0 if an odd generator repeats.
int sort_word(SuperMonomial& w, const SuperAlphabet& alpha);

class SuperPolynomial {
 public:
  explicit SuperPolynomial(SuperAlphabet alpha) : alpha_(alpha) {}
  static SuperPolynomial one(SuperAlphabet alpha);
  // Product of generators in the given order, with i, a of any sign.
  static SuperPolynomial word(SuperAlphabet alpha, const std::vector<std::pair<int, int>>& xs);

  const SuperAlphabet& alphabet() const { return alpha_; }
  const std::map<SuperMonomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(SuperMonomial m, const FieldElement& c);  // m must be canonical

  friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const FieldElement& c, const SuperPolynomial& p);
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) { return a.alpha_ == b.alpha_ && a.terms_ == b.terms_; }

  std::string str() const;

 private:
  SuperAlphabet alpha_;
  std::map<SuperMonomial, FieldElement> terms_;
};

// Sum of c * x^X d^D with every multiplication to the left of every derivation.
class NormalOrderedOperator {
 public:
  using Key = std::pair<SuperMonomial, SuperMonomial>;

  explicit NormalOrderedOperator(SuperAlphabet alpha) : alpha_(alpha) {}
  static NormalOrderedOperator identity(SuperAlphabet alpha);
  static NormalOrderedOperator scalar(SuperAlphabet alpha, const FieldElement& c);
  // x_{ia} and d_{ia} for a of either sign; negative a is rewritten through
  // x_{i,-a} = sqrt(-1) x_{-i,a} and d_{i,-a} = -sqrt(-1) d_{-i,a}.
  static NormalOrderedOperator x(SuperAlphabet alpha, int i, int a);
  static NormalOrderedOperator d(SuperAlphabet alpha, int i, int a);
  // c * x_{xs[0]} x_{xs[1]} ... d_{ds[0]} d_{ds[1]} ..., generators given as (i, a).
  static NormalOrderedOperator word(SuperAlphabet alpha, const std::vector<std::pair<int, int>>& xs,
                                    const std::vector<std::pair<int, int>>& ds, const FieldElement& c = FieldElement(1));

  const SuperAlphabet& alphabet() const { return alpha_; }
  const std::map<Key, FieldElement>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  void add(Key k, const FieldElement& c);  // k must be canonical
  FieldElement coefficient(const Key& k) const;

  // 0 or 1 if homogeneous, -1 otherwise; zero counts as even.
  int parity() const;
  // Highest number of derivations, -1 for zero.
  int order() const;
  // Parts of given parity.
  NormalOrderedOperator homogeneous_part(int parity) const;

  NormalOrderedOperator operator-() const;
  NormalOrderedOperator& operator+=(const NormalOrderedOperator& o);
  NormalOrderedOperator& operator-=(const NormalOrderedOperator& o);
  friend NormalOrderedOperator operator+(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a += b; }
  friend NormalOrderedOperator operator-(NormalOrderedOperator a, const NormalOrderedOperator& b) { return a -= b; }
  friend NormalOrderedOperator operator*(const FieldElement& c, const NormalOrderedOperator& a);
  friend bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NormalOrderedOperator& a, const NormalOrderedOperator& b) { return !(a == b); }

  std::string str() const;

 private:
  SuperAlphabet alpha_;
  std::map<Key, FieldElement> terms_;
};

NormalOrderedOperator op_mul(const NormalOrderedOperator& a, const NormalOrderedOperator& b);
inline NormalOrderedOperator operator*(const NormalOrderedOperator& a, const NormalOrderedOperator& b) { return op_mul(a, b); }
// [A, B] = AB - (-1)^{|A||B|} BA, extended bilinearly over homogeneous parts.
NormalOrderedOperator supercommutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b);

SuperPolynomial apply(const NormalOrderedOperator& a, const SuperPolynomial& p);
// Left derivation d_g of a polynomial.
SuperPolynomial derive(std::uint16_t g, const SuperPolynomial& p);
// All monomials of total degree d.
std::vector<SuperMonomial> monomials_of_degree(const SuperAlphabet& alpha, int d);

// gamma(F_ij) = sum_b x_{ib} d_{jb};  gamma'(F_ab) = sum_j x_{ja} d_{jb} (-1)^{deg j (deg a + deg b)}.
NormalOrderedOperator gamma(int i, int j, int N, int M);
NormalOrderedOperator gamma_prime(int a, int b, int N, int M);

NormalOrderedOperator i_lambda(const StrictPartition& lambda, int N, int M);
NormalOrderedOperator invariant_capelli_sum(int n, int N, int M);

bool verify_gamma_rep(int N, int M);

}  // namespace qcapelli
