#include "qcapelli/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qcapelli/error.hpp"

namespace qcapelli {
namespace {

void normalize(std::vector<FieldElement::Term>& t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < t.size();) {
    std::size_t s = r + 1;
    Rational c = t[r].second;
    while (s < t.size() && t[s].first == t[r].first) c += t[s++].second;
    if (!c.is_zero()) t[w++] = {t[r].first, std::move(c)};
    r = s;
  }
  t.resize(w);
}

std::vector<std::int64_t> prime_factors(std::int64_t a) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= a; ++p) {
    if (a % p == 0) {
      ps.push_back(p);
      while (a % p == 0) a /= p;
    }
  }
  if (a > 1) ps.push_back(a);
  return ps;
}

}  // namespace

std::int64_t squarefree_part(std::int64_t m, std::int64_t* root) {
  if (m == 0) {
    if (root) *root = 0;
    return 0;
  }
  std::int64_t sign = m < 0 ? -1 : 1;
  std::int64_t a = std::llabs(m);
  std::int64_t s = 1, rest = 1;
  for (std::int64_t p = 2; p * p <= a; ++p) {
    int e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) rest *= p;
  }
  rest *= a;
  if (root) *root = s;
  return sign * rest;
}

bool is_squarefree(std::int64_t m) { return m != 0 && squarefree_part(m) == m; }

std::pair<std::int64_t, std::int64_t> radical_product(std::int64_t a, std::int64_t b) {
  std::int64_t ua = std::llabs(a), ub = std::llabs(b);
  std::int64_t g = std::gcd(ua, ub);
  std::int64_t r = (ua / g) * (ub / g);
  int negs = (a < 0) + (b < 0);
  if (negs == 2) return {-g, r};  // sqrt(-1)^2 = -1
  if (negs == 1) return {g, -r};
  return {g, r};
}

FieldElement::FieldElement(const Rational& q) {
  if (!q.is_zero()) terms_.emplace_back(1, q);
}

FieldElement FieldElement::radical(std::int64_t radicand, const Rational& coeff) {
  FieldElement e;
  if (radicand == 0 || coeff.is_zero()) return e;
  std::int64_t root = 1;
  std::int64_t sf = squarefree_part(radicand, &root);
  e.terms_.emplace_back(sf, coeff * Rational(root));
  return e;
}

FieldElement FieldElement::from_terms(std::vector<Term> terms) {
  for (auto& [r, c] : terms) {
    if (!is_squarefree(r)) throw UsageError("radicand " + std::to_string(r) + " is not squarefree");
  }
  FieldElement e;
  normalize(terms);
  e.terms_ = std::move(terms);
  return e;
}

Rational FieldElement::rational_part() const { return coefficient(1); }

Rational FieldElement::coefficient(std::int64_t radicand) const {
  for (const auto& [r, c] : terms_) {
    if (r == radicand) return c;
  }
  return Rational(0);
}

FieldElement FieldElement::operator-() const {
  FieldElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement e;
  if (a.terms_.empty() || b.terms_.empty()) return e;
  if (a.terms_.size() == 1 && a.terms_[0].first == 1) return b.scaled(a.terms_[0].second);
  if (b.terms_.size() == 1 && b.terms_[0].first == 1) return a.scaled(b.terms_[0].second);
  e.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      auto [g, r] = radical_product(ra, rb);
      e.terms_.emplace_back(r, ca * cb * Rational(g));
    }
  }
  normalize(e.terms_);
  return e;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this * inv(o); }

bool operator<(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

FieldElement FieldElement::scaled(const Rational& q) const {
  FieldElement e;
  if (q.is_zero()) return e;
  e.terms_ = terms_;
  for (auto& t : e.terms_) t.second *= q;
  return e;
}

FieldElement FieldElement::conjugate(std::int64_t p) const {
  FieldElement e = *this;
  for (auto& [r, c] : e.terms_) {
    bool flip = p == -1 ? r < 0 : (std::llabs(r) % p == 0);
    if (flip) c = -c;
  }
  return e;
}

std::string FieldElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    std::string cs = c.str();
    bool neg = c.sign() < 0;
    if (neg) cs = cs.substr(1);
    if (!first) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    first = false;
    if (r == 1) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += "sqrt(" + std::to_string(r) + ")";
    }
  }
  return s;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  FieldElement num(1);
  FieldElement den = a;
  while (!den.is_rational()) {
    // Pick any generator present in the denominator and rationalize it away.
    std::int64_t gen = 0;
    for (const auto& [r, c] : den.terms()) {
      if (r < 0) {
        gen = -1;
        break;
      }
      if (r != 1 && gen == 0) gen = prime_factors(r).front();
    }
    FieldElement conj = den.conjugate(gen);
    num *= conj;
    den = den * conj;
  }
  return num.scaled(inverse(den.rational_part()));
}

FieldElement sqrt_int(std::int64_t m) { return FieldElement::radical(m); }

FieldElement sqrt_rational(const Rational& q) {
  if (q.is_zero()) return FieldElement();
  if (!q.is_small()) throw SeriesError("square root of a large rational is not supported");
  // sqrt(p/q) = sqrt(p*q)/q
  std::int64_t p = q.small_num(), d = q.small_den();
  __int128 prod = static_cast<__int128>(p) * d;
  if (prod > INT64_MAX || prod < -INT64_MAX) throw SeriesError("square root argument out of range");
  return FieldElement::radical(static_cast<std::int64_t>(prod), Rational(1, d));
}

FieldElement sqrt_of(const FieldElement& a) {
  if (!a.is_rational()) throw SeriesError("square root of an irrational field element: " + a.str());
  return sqrt_rational(a.rational_part());
}

FieldElement imaginary_unit() { return FieldElement::radical(-1); }

}  // namespace qcapelli
