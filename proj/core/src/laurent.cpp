#include "qcapelli/laurent.hpp"

namespace qcapelli {

KSeries invert(const KSeries& a) {
  if (a.is_zero()) throw PoleError("cannot invert a series that vanishes up to its truncation");
  if (a.truncation() >= kExactOrder) throw SeriesError("invert needs a finite truncation");
  int v = a.valuation();
  int p = a.truncation() - v;
  std::vector<FieldElement> b(static_cast<std::size_t>(p));
  const auto& c = a.coeffs();
  FieldElement b0 = inv(c[0]);
  b[0] = b0;
  for (int k = 1; k < p; ++k) {
    FieldElement acc;
    for (int j = 1; j <= k && j < static_cast<int>(c.size()); ++j) {
      acc += c[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -(b0 * acc);
  }
  return KSeries::from_coeffs(-v, std::move(b), a.truncation() - 2 * v);
}

KSeries sqrt(const KSeries& a) {
  if (a.is_zero()) return KSeries::zero(a.truncation() / 2);
  if (a.truncation() >= kExactOrder) throw SeriesError("sqrt needs a finite truncation");
  int v = a.valuation();
  if (v % 2 != 0) throw SeriesError("sqrt of a series with odd valuation " + std::to_string(v));
  int p = a.truncation() - v;
  const auto& c = a.coeffs();
  FieldElement s0 = sqrt_of(c[0]);
  FieldElement half_inv = inv(s0 * FieldElement(2));
  std::vector<FieldElement> s(static_cast<std::size_t>(p));
  s[0] = s0;
  for (int k = 1; k < p; ++k) {
    FieldElement acc = k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : FieldElement();
    for (int j = 1; j < k; ++j) acc -= s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * half_inv;
  }
  return KSeries::from_coeffs(v / 2, std::move(s), v / 2 + p);
}

KSeries u_series(int c, int r, int truncation) {
  if (c < 0 || r < 1) throw UsageError("u_series needs c >= 0 and r >= 1");
  std::int64_t r2 = static_cast<std::int64_t>(r) * r;
  std::int64_t cc = c;
  // (c + r^2 d^2)(c + 1 + r^2 d^2) = c(c+1) + (2c+1) r^2 d^2 + r^4 d^4
  std::vector<FieldElement> poly = {FieldElement(cc * (cc + 1)), FieldElement(), FieldElement((2 * cc + 1) * r2),
                                    FieldElement(), FieldElement(r2 * r2)};
  int shift = c == 0 ? 1 : 0;
  return sqrt(KSeries::from_coeffs(0, std::move(poly), truncation + shift));
}

KSeries shifted_root_series(int s0, int truncation) {
  if (s0 < 1) throw UsageError("shifted_root_series needs s0 >= 1");
  std::int64_t s = s0;
  std::vector<FieldElement> poly = {FieldElement(s * (s + 1)), FieldElement(2 * s + 1), FieldElement(1)};
  return sqrt(KSeries::from_coeffs(0, std::move(poly), truncation));
}

}  // namespace qcapelli
