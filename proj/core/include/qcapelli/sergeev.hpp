#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/field.hpp"
#include "qcapelli/laurent.hpp"

namespace qcapelli {

inline constexpr int kMaxSergeevRank = 12;

// One-line notation, 1-based: images[k-1] = g(k).
struct Perm {
  std::vector<int> images;

  static Perm identity(int n);
  static Perm transposition(int n, int i, int j);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int k) const { return images[static_cast<std::size_t>(k - 1)]; }
  Perm inverse() const;
  bool is_identity() const;
  int sign() const;
  friend Perm operator*(const Perm& a, const Perm& b);  // (a*b)(k) = a(b(k))
  friend bool operator==(const Perm& a, const Perm& b) { return a.images == b.images; }
  std::string str() const;
};

// Set of Clifford generator indices (1-based), i.e. a_{l1} a_{l2} ... with l1 < l2 < ...
struct CliffordMono {
  std::uint32_t mask = 0;

  static CliffordMono from_indices(const std::vector<int>& idx);
  std::vector<int> indices() const;
  int degree() const;
  friend bool operator==(const CliffordMono& a, const CliffordMono& b) { return a.mask == b.mask; }
};

// Basis element g * a^mask of H_n packed into one integer. Numeric order on keys is
// lexicographic order by permutation, then by mask.
using BasisKey = std::uint64_t;

BasisKey make_key(const Perm& g, CliffordMono a);
Perm key_perm(BasisKey k, int n);
CliffordMono key_mono(BasisKey k);
// (g1 A1)(g2 A2) = sign * basis element.
std::pair<BasisKey, int> basis_product(BasisKey x, BasisKey y, int n);
// h^* = h^{-1} for a basis element h, up to the returned sign.
std::pair<BasisKey, int> basis_star(BasisKey x, int n);
bool key_is_odd(BasisKey k);
std::vector<BasisKey> all_basis_keys(int n);  // 2^n n! keys, canonical order

// Element of the Sergeev algebra H_n = S_n semidirect Clifford(n), a_i^2 = -1,
// g a_i g^{-1} = a_{g(i)}.
class SergeevElement {
 public:
  using Term = std::pair<BasisKey, FieldElement>;

  SergeevElement() = default;
  explicit SergeevElement(int n);

  static SergeevElement identity(int n);
  static SergeevElement scalar(int n, const FieldElement& c);
  static SergeevElement basis(int n, BasisKey k, const FieldElement& c = FieldElement(1));
  static SergeevElement basis(int n, const Perm& g, CliffordMono a, const FieldElement& c = FieldElement(1));
  static SergeevElement transposition(int n, int i, int j);
  // a_{i1} a_{i2} ... in the given order.
  static SergeevElement clifford_word(int n, const std::vector<int>& indices);
  static SergeevElement from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(BasisKey k) const;

  SergeevElement operator-() const;
  SergeevElement& operator+=(const SergeevElement& o);
  SergeevElement& operator-=(const SergeevElement& o);
  friend SergeevElement operator+(SergeevElement a, const SergeevElement& b) { return a += b; }
  friend SergeevElement operator-(SergeevElement a, const SergeevElement& b) { return a -= b; }
  friend SergeevElement operator*(const SergeevElement& a, const SergeevElement& b);
  friend SergeevElement operator*(const FieldElement& c, const SergeevElement& x);
  friend bool operator==(const SergeevElement& a, const SergeevElement& b);
  friend bool operator!=(const SergeevElement& a, const SergeevElement& b) { return !(a == b); }

  std::string str() const;

 private:
  void absorb_rank(const SergeevElement& o);

  int n_ = 0;
  std::vector<Term> terms_;
};

SergeevElement product(const SergeevElement& x, const SergeevElement& y);
SergeevElement star(const SergeevElement& x);
SergeevElement alpha(const SergeevElement& x);
SergeevElement commutator(const SergeevElement& x, const SergeevElement& y);
SergeevElement power(const SergeevElement& x, int e);

// 1 - (ij)/(u-v) + (ij) a_i a_j/(u+v)
SergeevElement phi(int i, int j, const FieldElement& u, const FieldElement& v, int n);
// x_k = sum_{i<k} (ik) + (ik) a_i a_k
SergeevElement jm_element(int k, int n);
// y_k in H_{n+m}: sum_j (k, j+n) - (k, j+n) a_k a_{j+n}
SergeevElement y_element(int k, int n, int m);
SergeevElement embed(const SergeevElement& x, int n_total, int offset);

template <>
inline SergeevElement ring_zero_like<SergeevElement>(const SergeevElement& x) {
  return SergeevElement(x.n());
}

using SergeevSeries = LaurentSeries<SergeevElement>;

// phi_ij with series arguments: 1 - (ij) invert(us - vs) + (ij) a_i a_j invert(us + vs).
SergeevSeries phi_series(int i, int j, const KSeries& us, const KSeries& vs, int n);

}  // namespace qcapelli
