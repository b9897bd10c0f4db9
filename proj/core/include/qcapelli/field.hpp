#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/rational.hpp"

namespace qcapelli {

// Element of Q(sqrt(m) : m signed squarefree), stored as radicand -> coefficient.
// Radicand 1 is the rational part, -1 is sqrt(-1). Terms are sorted by radicand
// and never carry a zero coefficient, so equality is structural.
class FieldElement {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  FieldElement() = default;
  FieldElement(const Rational& q);  // NOLINT(google-explicit-constructor)
  FieldElement(std::int64_t n) : FieldElement(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  // coeff * sqrt(radicand); radicand need not be squarefree.
  static FieldElement radical(std::int64_t radicand, const Rational& coeff = Rational(1));
  static FieldElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second.is_one(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Rational rational_part() const;
  Rational coefficient(std::int64_t radicand) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  FieldElement scaled(const Rational& q) const;
  // Image under the automorphism negating sqrt(p) (p prime) or sqrt(-1) (p = -1).
  FieldElement conjugate(std::int64_t p) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

FieldElement inv(const FieldElement& a);
FieldElement sqrt_int(std::int64_t m);
FieldElement sqrt_rational(const Rational& q);
FieldElement sqrt_of(const FieldElement& a);  // rational arguments only
FieldElement imaginary_unit();

bool is_squarefree(std::int64_t m);
std::int64_t squarefree_part(std::int64_t m, std::int64_t* square_root_of_rest = nullptr);

// Product of radicals: sqrt(a) * sqrt(b) = coeff * sqrt(radicand).
std::pair<std::int64_t, std::int64_t> radical_product(std::int64_t a, std::int64_t b);

}  // namespace qcapelli
