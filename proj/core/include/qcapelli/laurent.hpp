#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcapelli/error.hpp"
#include "qcapelli/field.hpp"

namespace qcapelli {

// Zero element of the coefficient ring with the same shape as a prototype.
template <class R>
R ring_zero_like(const R&) {
  return R();
}

// Sentinel truncation for series that are exact (finitely many terms).
inline constexpr int kExactOrder = 1 << 28;

// Truncated Laurent series sum_k c_k delta^k, known for k < truncation.
template <class R>
class LaurentSeries {
 public:
  LaurentSeries() = default;

  // Identically zero up to `truncation`.
  static LaurentSeries zero(int truncation, R proto = R()) {
    LaurentSeries s;
    s.valuation_ = truncation;
    s.truncation_ = truncation;
    s.proto_ = ring_zero_like(proto);
    return s;
  }

  static LaurentSeries constant(R c, int truncation = kExactOrder) { return monomial(std::move(c), 0, truncation); }

  static LaurentSeries monomial(R c, int power, int truncation = kExactOrder) {
    LaurentSeries s;
    s.proto_ = ring_zero_like(c);
    s.valuation_ = power;
    s.truncation_ = truncation;
    if (power < truncation) s.coeffs_.push_back(std::move(c));
    s.normalize();
    return s;
  }

  // coeffs[k] is the coefficient of delta^(valuation + k).
  static LaurentSeries from_coeffs(int valuation, std::vector<R> coeffs, int truncation, R proto = R()) {
    LaurentSeries s;
    s.proto_ = ring_zero_like(proto);
    s.valuation_ = valuation;
    s.truncation_ = truncation;
    if (valuation + static_cast<int>(coeffs.size()) > truncation) coeffs.resize(std::max(0, truncation - valuation));
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  int valuation() const { return valuation_; }
  int truncation() const { return truncation_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& prototype() const { return proto_; }

  // Coefficient of delta^k; k must lie below the truncation.
  R coefficient(int k) const {
    if (k >= truncation_) throw SeriesError("coefficient of order " + std::to_string(k) + " lies beyond truncation " + std::to_string(truncation_));
    if (k < valuation_ || k >= valuation_ + static_cast<int>(coeffs_.size())) return proto_;
    return coeffs_[static_cast<std::size_t>(k - valuation_)];
  }

  LaurentSeries truncated(int order) const {
    if (order >= truncation_) return *this;
    LaurentSeries s = *this;
    s.truncation_ = order;
    if (order <= s.valuation_) {
      s.coeffs_.clear();
      s.valuation_ = order;
    } else {
      s.coeffs_.resize(std::min(s.coeffs_.size(), static_cast<std::size_t>(order - s.valuation_)));
    }
    s.normalize();
    return s;
  }

  LaurentSeries operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    s.proto_ = a.proto_;
    int ta = a.truncation_, tb = b.truncation_;
    if (a.is_zero() || b.is_zero()) {
      int t = std::min(a.valuation_ + tb, b.valuation_ + ta);
      t = std::min(t, kExactOrder);
      return zero(t, a.proto_);
    }
    s.valuation_ = a.valuation_ + b.valuation_;
    s.truncation_ = std::min({a.valuation_ + tb, b.valuation_ + ta, kExactOrder});
    int len = s.truncation_ - s.valuation_;
    int na = static_cast<int>(a.coeffs_.size()), nb = static_cast<int>(b.coeffs_.size());
    len = std::min(len, na + nb - 1);
    s.coeffs_.assign(static_cast<std::size_t>(std::max(len, 0)), a.proto_);
    for (int i = 0; i < na && i < len; ++i) {
      if (is_ring_zero(a.coeffs_[static_cast<std::size_t>(i)])) continue;
      for (int j = 0; j < nb && i + j < len; ++j) {
        if (is_ring_zero(b.coeffs_[static_cast<std::size_t>(j)])) continue;
        s.coeffs_[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    s.normalize();
    return s;
  }

  // Multiply every coefficient on the left by a ring element.
  LaurentSeries scaled_left(const R& c) const {
    LaurentSeries s = *this;
    for (auto& x : s.coeffs_) x = c * x;
    s.normalize();
    return s;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.valuation_ == b.valuation_ && a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
  }

  // Equality of all coefficients below min(truncations).
  bool agrees_with(const LaurentSeries& o) const {
    int t = std::min(truncation_, o.truncation_);
    int lo = std::min(valuation_, o.valuation_);
    for (int k = lo; k < t; ++k) {
      if (!(coefficient(k) == o.coefficient(k))) return false;
    }
    return true;
  }

 private:
  static bool is_ring_zero(const R& x) { return x.is_zero(); }

  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    LaurentSeries s;
    s.proto_ = a.proto_;
    s.truncation_ = std::min(a.truncation_, b.truncation_);
    s.valuation_ = std::min({a.valuation_, b.valuation_, s.truncation_});
    int hi = s.valuation_;
    hi = std::max(hi, std::min(s.truncation_, a.valuation_ + static_cast<int>(a.coeffs_.size())));
    hi = std::max(hi, std::min(s.truncation_, b.valuation_ + static_cast<int>(b.coeffs_.size())));
    s.coeffs_.assign(static_cast<std::size_t>(hi - s.valuation_), a.proto_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      int k = a.valuation_ + static_cast<int>(i);
      if (k >= hi) break;
      s.coeffs_[static_cast<std::size_t>(k - s.valuation_)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      int k = b.valuation_ + static_cast<int>(i);
      if (k >= hi) break;
      if (subtract) s.coeffs_[static_cast<std::size_t>(k - s.valuation_)] -= b.coeffs_[i];
      else s.coeffs_[static_cast<std::size_t>(k - s.valuation_)] += b.coeffs_[i];
    }
    s.normalize();
    return s;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && is_ring_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = truncation_;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && is_ring_zero(coeffs_.back())) coeffs_.pop_back();
  }

  int valuation_ = kExactOrder;
  int truncation_ = kExactOrder;
  std::vector<R> coeffs_;
  R proto_{};
};

using KSeries = LaurentSeries<FieldElement>;

KSeries invert(const KSeries& a);
KSeries sqrt(const KSeries& a);

// sqrt((c + r^2 d^2)(c + r^2 d^2 + 1)), known below `truncation`.
KSeries u_series(int c, int r, int truncation);

// Same root along a general path s(eps) = s0 + eps: sqrt((s0 + eps)(s0 + 1 + eps)).
KSeries shifted_root_series(int s0, int truncation);

}  // namespace qcapelli
