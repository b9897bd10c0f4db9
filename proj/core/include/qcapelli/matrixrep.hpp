#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/field.hpp"
#include "qcapelli/sergeev.hpp"
#include "qcapelli/shifted.hpp"

namespace qcapelli {

// Basis of (C^{N|N})^{(x) n}. Letters are i = +-1..+-N; a state is packed in base 2N with
// site 1 the most significant digit. Letter code: i - 1 for i > 0, N + |i| - 1 for i < 0.
class SuperSpace {
 public:
  SuperSpace(int N, int n);

  int N() const { return N_; }
  int n() const { return n_; }
  std::uint32_t dim() const { return dim_; }

  int code(int letter) const;
  int letter(int code) const;
  static bool letter_odd(int letter) { return letter < 0; }

  std::uint32_t state(const std::vector<int>& letters) const;
  std::vector<int> letters(std::uint32_t state) const;
  int letter_at(std::uint32_t state, int site) const;  // site is 1-based
  std::uint32_t with_letter(std::uint32_t state, int site, int letter) const;
  // Sum of letter parities over sites 1..site-1.
  int parity_before(std::uint32_t state, int site) const;
  int parity(std::uint32_t state) const { return parity_before(state, n_ + 1); }

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) { return a.N_ == b.N_ && a.n_ == b.n_; }

 private:
  int N_;
  int n_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> place_;  // place_[s-1] = (2N)^(n-s)
};

// Column-sparse matrix on the tensor space; column c holds (row, value) sorted by row.
class SuperMatrix {
 public:
  using Column = std::vector<std::pair<std::uint32_t, FieldElement>>;

  explicit SuperMatrix(SuperSpace space);
  static SuperMatrix identity(SuperSpace space);

  const SuperSpace& space() const { return space_; }
  std::uint32_t dim() const { return space_.dim(); }
  const Column& column(std::uint32_t c) const { return cols_[c]; }
  FieldElement entry(std::uint32_t r, std::uint32_t c) const;
  void set_column(std::uint32_t c, Column col);
  void add(std::uint32_t r, std::uint32_t c, const FieldElement& v);
  bool is_zero() const;
  std::size_t nonzeros() const;
  // 0 or 1 when every entry has that degree, -1 for inhomogeneous; zero counts as even.
  int degree() const;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const FieldElement& c, const SuperMatrix& a);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
  friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

 private:
  SuperSpace space_;
  std::vector<Column> cols_;
};

// Operator sending each basis state to +-1 times one basis state, or to zero.
struct MonomialOp {
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> image;
  std::vector<std::int8_t> sign;

  static MonomialOp identity(std::uint32_t dim);
  std::uint32_t dim() const { return static_cast<std::uint32_t>(image.size()); }
  SuperMatrix to_matrix(const SuperSpace& space) const;
  // (a * b)(s) = a(b(s))
  friend MonomialOp operator*(const MonomialOp& a, const MonomialOp& b);
};

// iota_s(E_ij) with the Koszul sign (-1)^{(deg i + deg j) * (parity of sites < s)}.
MonomialOp site_unit_op(const SuperSpace& sp, int s, int i, int j);
MonomialOp j_op(const SuperSpace& sp, int s);
MonomialOp p_op(const SuperSpace& sp, int k, int l);
// Image of a basis element g a^mask of H_n.
MonomialOp basis_op(const SuperSpace& sp, BasisKey key);

SuperMatrix site_matrix_unit(int s, int i, int j, int N, int n);
SuperMatrix j_matrix(int s, int N, int n);
SuperMatrix p_matrix(int k, int l, int N, int n);
SuperMatrix rep(const SergeevElement& x, int N);
// rep(x) applied to a vector, without building the matrix.
std::vector<FieldElement> rep_apply(const SergeevElement& x, const SuperSpace& sp, const std::vector<FieldElement>& v);

FieldElement supertrace(const SuperMatrix& a);
// [A, B] = AB - (-1)^{deg A deg B} BA for homogeneous A, B.
SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

// Incrementally maintained reduced row echelon basis of a subspace of K^dim.
class Subspace {
 public:
  explicit Subspace(std::size_t dim) : dim_(dim) {}
  // Returns true if v was not already in the span.
  bool insert(std::vector<FieldElement> v);
  bool contains(std::vector<FieldElement> v) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<std::vector<FieldElement>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce(std::vector<FieldElement>& v) const;

  std::size_t dim_;
  std::vector<std::vector<FieldElement>> basis_;
  std::vector<std::size_t> pivots_;
};

// A nonzero H_n-submodule of the image of R_lambda = rep(psi(lambda)) with N = l(lambda).
struct CharacterModule {
  StrictPartition lambda;
  SuperSpace space;
  Subspace basis;
};

const CharacterModule& character_module(const StrictPartition& lambda);

// Normalized trace of h on U_lambda, chi(1) = 1.
FieldElement char_chi(const StrictPartition& lambda, const SergeevElement& h);
FieldElement char_chi_basis(const StrictPartition& lambda, BasisKey h);

// sum over basis elements h of chi(h) h^{-1}
SergeevElement x_lambda(const StrictPartition& lambda);

bool verify_x_lambda_average(const StrictPartition& lambda);
bool verify_central_eigenvalue(const StrictPartition& lambda, int r);

struct CharacterClass {
  BasisKey representative;  // smallest key in the class
  std::size_t size;
  FieldElement value;
};
// Classes of basis elements under conjugation (up to sign), with chi on the representative.
std::vector<CharacterClass> character_table(const StrictPartition& lambda);

}  // namespace qcapelli
