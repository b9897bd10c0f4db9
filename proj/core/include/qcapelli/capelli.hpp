#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/field.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/shifted.hpp"
#include "qcapelli/superdiff.hpp"

namespace qcapelli {

// Polynomial in commuting t_1..t_N; keys are exponent vectors of length N.
class SymPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit SymPolynomial(int nvars) : nvars_(nvars) {}
  static SymPolynomial constant(int nvars, const FieldElement& c);
  static SymPolynomial variable(int nvars, int k);  // t_k, 1-based

  int nvars() const { return nvars_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(Exponents e, const FieldElement& c);
  FieldElement coefficient(const Exponents& e) const;

  // Total degree if homogeneous, -1 otherwise or for zero.
  int homogeneous_degree() const;
  bool is_symmetric() const;

  friend SymPolynomial operator+(const SymPolynomial& a, const SymPolynomial& b);
  friend SymPolynomial operator-(const SymPolynomial& a, const SymPolynomial& b);
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  friend SymPolynomial operator*(const FieldElement& c, const SymPolynomial& a);
  friend bool operator==(const SymPolynomial& a, const SymPolynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string str() const;

 private:
  int nvars_;
  std::map<Exponents, FieldElement> terms_;
};

// Element of End((C^{N|N})^{(x) n}) (x) PD stored as (row state, column state) -> operator.
// Product: (E_rc (x) Y)(E_cd (x) Z) = (-1)^{|Y| (p(c) + p(d))} E_rd (x) YZ.
class MatrixOverOperators {
 public:
  using Index = std::pair<std::uint32_t, std::uint32_t>;

  MatrixOverOperators(SuperSpace space, SuperAlphabet alpha) : space_(space), alpha_(alpha) {}
  // A (x) 1
  static MatrixOverOperators from_matrix(const SuperMatrix& a, SuperAlphabet alpha);
  // 1 (x) Y
  static MatrixOverOperators from_operator(SuperSpace space, const NormalOrderedOperator& y);

  const SuperSpace& space() const { return space_; }
  const SuperAlphabet& alphabet() const { return alpha_; }
  const std::map<Index, NormalOrderedOperator>& entries() const { return entries_; }
  NormalOrderedOperator entry(std::uint32_t r, std::uint32_t c) const;
  void add(std::uint32_t r, std::uint32_t c, const NormalOrderedOperator& y);
  bool is_zero() const { return entries_.empty(); }
  // Highest derivation order over all entries.
  int order() const;
  // str (x) id
  NormalOrderedOperator supertrace() const;

  friend MatrixOverOperators operator+(const MatrixOverOperators& a, const MatrixOverOperators& b);
  friend MatrixOverOperators operator-(const MatrixOverOperators& a, const MatrixOverOperators& b);
  friend MatrixOverOperators operator*(const MatrixOverOperators& a, const MatrixOverOperators& b);
  friend MatrixOverOperators operator*(const FieldElement& c, const MatrixOverOperators& a);
  friend bool operator==(const MatrixOverOperators& a, const MatrixOverOperators& b) {
    return a.space_ == b.space_ && a.alpha_ == b.alpha_ && a.entries_ == b.entries_;
  }

  // 0 or 1 if every entry has total degree p(r) + p(c) + parity(entry) equal to it, -1 otherwise.
  int degree() const;

 private:
  SuperSpace space_;
  SuperAlphabet alpha_;
  std::map<Index, NormalOrderedOperator> entries_;
};

// [A, B] = AB - (-1)^{|A||B|} BA for homogeneous A, B.
MatrixOverOperators supercommutator(const MatrixOverOperators& a, const MatrixOverOperators& b);

// F_s = sum_{i,j} iota_s(E_ij) (x) gamma(F_ji) (-1)^{deg j} on n sites.
MatrixOverOperators f_site(int s, int n, int N, int M);
// R_lambda (x) 1 . (F_1 - z_1) ... (F_n - z_n)
MatrixOverOperators f_lambda(const StrictPartition& lambda, int N, int M);
// gamma(C_lambda) = str (x) id (F_lambda), computed column by column.
NormalOrderedOperator c_lambda_gamma(const StrictPartition& lambda, int N, int M);

bool verify_capelli_identity(const StrictPartition& lambda, int N, int M);
// R_lambda (x) 1 . prod_s (sum_r P_{s,n+r}(1 - J_s J_{n+r}) - z_s) . 1 (x) R_mu == 0 on n + m sites.
bool verify_capelli_vanishing(const StrictPartition& lambda, const StrictPartition& mu, int N);

// str(rep(X_lambda) . T^{(x) n}), T = sum_i t_i E_ii (-1)^{deg i}, t_{-i} = t_i.
SymPolynomial t_lambda(const StrictPartition& lambda, int N);
// Q_lambda(t_1..t_N; -1) from the q_r generating function and the Pfaffian rule.
SymPolynomial schur_q(const StrictPartition& lambda, int N);
// Same polynomial as a sum over marked shifted tableaux.
SymPolynomial schur_q_tableaux(const StrictPartition& lambda, int N);
bool verify_capelli_symbol(const StrictPartition& lambda, int N);

// Image of the column-determinant Capelli element equals the Cayley operator, with even variables only.
bool classical_capelli_check(int n, int N, int M);
NormalOrderedOperator cayley_operator(int n, int N, int M);
NormalOrderedOperator classical_capelli_image(int n, int N, int M);

}  // namespace qcapelli
