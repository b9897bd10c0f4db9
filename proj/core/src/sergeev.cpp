#include "qcapelli/sergeev.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "qcapelli/error.hpp"

namespace qcapelli {
namespace {

constexpr int kMaskBits = 16;
constexpr BasisKey kMaskField = (BasisKey{1} << kMaskBits) - 1;

using Images = std::array<std::uint8_t, kMaxSergeevRank>;  // 0-based

void unpack(BasisKey k, int n, Images& g) {
  BasisKey p = k >> kMaskBits;
  for (int i = n - 1; i >= 0; --i) {
    g[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p & 0xF);
    p >>= 4;
  }
}

BasisKey pack(const Images& g, int n, std::uint32_t mask) {
  BasisKey p = 0;
  for (int i = 0; i < n; ++i) p = (p << 4) | g[static_cast<std::size_t>(i)];
  return (p << kMaskBits) | mask;
}

void check_rank(int n) {
  if (n < 0 || n > kMaxSergeevRank) throw UsageError("Sergeev rank out of range: " + std::to_string(n));
}

void check_index(int i, int n) {
  if (i < 1 || i > n) throw UsageError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

// Clifford product a^A a^B = sign * a^(A xor B) for ascending monomials.
int clifford_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    std::uint32_t above = j + 1 >= 32 ? 0u : (a & ~((1u << (j + 1)) - 1u));
    swaps += std::popcount(above);
  }
  swaps += std::popcount(a & b);  // a_i^2 = -1
  return (swaps & 1) ? -1 : 1;
}

void merge_terms(std::vector<SergeevElement::Term>& t) {
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < t.size();) {
    std::size_t s = r + 1;
    FieldElement c = std::move(t[r].second);
    while (s < t.size() && t[s].first == t[r].first) c += t[s++].second;
    if (!c.is_zero()) t[w++] = {t[r].first, std::move(c)};
    r = s;
  }
  t.resize(w);
}

}  // namespace

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Perm Perm::transposition(int n, int i, int j) {
  check_index(i, n);
  check_index(j, n);
  Perm p = identity(n);
  std::swap(p.images[static_cast<std::size_t>(i - 1)], p.images[static_cast<std::size_t>(j - 1)]);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.images.resize(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) p.images[static_cast<std::size_t>(images[k] - 1)] = static_cast<int>(k) + 1;
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

int Perm::sign() const {
  int inv = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) inv += images[a] > images[b];
  }
  return (inv & 1) ? -1 : 1;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm p;
  p.images.resize(b.images.size());
  for (std::size_t k = 0; k < b.images.size(); ++k) p.images[k] = a(b.images[k]);
  return p;
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images.size(); ++k) s += (k ? "," : "") + std::to_string(images[k]);
  return s + "]";
}

CliffordMono CliffordMono::from_indices(const std::vector<int>& idx) {
  CliffordMono m;
  for (int i : idx) {
    if (i < 1 || i > kMaxSergeevRank) throw UsageError("Clifford index out of range");
    std::uint32_t bit = 1u << (i - 1);
    if (m.mask & bit) throw UsageError("repeated Clifford index");
    m.mask |= bit;
  }
  return m;
}

std::vector<int> CliffordMono::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

int CliffordMono::degree() const { return std::popcount(mask); }

BasisKey make_key(const Perm& g, CliffordMono a) {
  int n = g.size();
  check_rank(n);
  if (a.mask >> n) throw UsageError("Clifford index exceeds rank");
  Images im{};
  for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(g.images[static_cast<std::size_t>(k)] - 1);
  return pack(im, n, a.mask);
}

Perm key_perm(BasisKey k, int n) {
  Images im{};
  unpack(k, n, im);
  Perm p;
  p.images.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = im[static_cast<std::size_t>(i)] + 1;
  return p;
}

CliffordMono key_mono(BasisKey k) { return CliffordMono{static_cast<std::uint32_t>(k & kMaskField)}; }

bool key_is_odd(BasisKey k) { return std::popcount(static_cast<std::uint32_t>(k & kMaskField)) & 1; }

std::pair<BasisKey, int> basis_product(BasisKey x, BasisKey y, int n) {
  Images g1{}, g2{}, g{}, g2inv{};
  unpack(x, n, g1);
  unpack(y, n, g2);
  for (int k = 0; k < n; ++k) {
    g[static_cast<std::size_t>(k)] = g1[g2[static_cast<std::size_t>(k)]];
    g2inv[g2[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
  }
  // g2^{-1} a_i g2 = a_{g2^{-1}(i)}; reorder the conjugated word ascending.
  auto a1 = static_cast<std::uint32_t>(x & kMaskField);
  auto a2 = static_cast<std::uint32_t>(y & kMaskField);
  std::array<std::uint8_t, kMaxSergeevRank> seq{};
  int len = 0;
  std::uint32_t conj = 0;
  for (std::uint32_t rest = a1; rest != 0; rest &= rest - 1) {
    int i = std::countr_zero(rest);
    seq[static_cast<std::size_t>(len++)] = g2inv[static_cast<std::size_t>(i)];
    conj |= 1u << g2inv[static_cast<std::size_t>(i)];
  }
  int inversions = 0;
  for (int p = 0; p < len; ++p) {
    for (int q = p + 1; q < len; ++q) inversions += seq[static_cast<std::size_t>(p)] > seq[static_cast<std::size_t>(q)];
  }
  int sign = (inversions & 1) ? -1 : 1;
  sign *= clifford_sign(conj, a2);
  return {pack(g, n, conj ^ a2), sign};
}

std::pair<BasisKey, int> basis_star(BasisKey x, int n) {
  // (g a_{l1}..a_{lk})^* = (-1)^k a_{lk}..a_{l1} g^{-1} = (-1)^k (-1)^{k(k-1)/2} a^L g^{-1}
  Images g{}, ginv{};
  unpack(x, n, g);
  for (int k = 0; k < n; ++k) ginv[g[static_cast<std::size_t>(k)]] = static_cast<std::uint8_t>(k);
  Images id{};
  for (int k = 0; k < n; ++k) id[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
  auto mask = static_cast<std::uint32_t>(x & kMaskField);
  int k = std::popcount(mask);
  int sign = (((k + k * (k - 1) / 2)) & 1) ? -1 : 1;
  auto [key, s] = basis_product(pack(id, n, mask), pack(ginv, n, 0), n);
  return {key, sign * s};
}

std::vector<BasisKey> all_basis_keys(int n) {
  check_rank(n);
  std::vector<BasisKey> keys;
  Perm p = Perm::identity(n);
  do {
    for (std::uint32_t m = 0; m < (1u << n); ++m) keys.push_back(make_key(p, CliffordMono{m}));
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  std::sort(keys.begin(), keys.end());
  return keys;
}

SergeevElement::SergeevElement(int n) : n_(n) { check_rank(n); }

SergeevElement SergeevElement::identity(int n) { return scalar(n, FieldElement(1)); }

SergeevElement SergeevElement::scalar(int n, const FieldElement& c) {
  return basis(n, Perm::identity(n), CliffordMono{}, c);
}

SergeevElement SergeevElement::basis(int n, BasisKey k, const FieldElement& c) {
  SergeevElement e(n);
  if (!c.is_zero()) e.terms_.emplace_back(k, c);
  return e;
}

SergeevElement SergeevElement::basis(int n, const Perm& g, CliffordMono a, const FieldElement& c) {
  if (g.size() != n) throw UsageError("permutation size does not match rank");
  return basis(n, make_key(g, a), c);
}

SergeevElement SergeevElement::transposition(int n, int i, int j) {
  if (i == j) throw UsageError("transposition needs distinct indices");
  return basis(n, Perm::transposition(n, i, j), CliffordMono{});
}

SergeevElement SergeevElement::clifford_word(int n, const std::vector<int>& indices) {
  SergeevElement e = identity(n);
  for (int i : indices) {
    check_index(i, n);
    e = e * basis(n, Perm::identity(n), CliffordMono{1u << (i - 1)});
  }
  return e;
}

SergeevElement SergeevElement::from_terms(int n, std::vector<Term> terms) {
  SergeevElement e(n);
  merge_terms(terms);
  e.terms_ = std::move(terms);
  return e;
}

FieldElement SergeevElement::coefficient(BasisKey k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, BasisKey key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return FieldElement();
}

void SergeevElement::absorb_rank(const SergeevElement& o) {
  if (n_ == o.n_) return;
  if (terms_.empty() && n_ == 0) {
    n_ = o.n_;
    return;
  }
  if (o.terms_.empty() && o.n_ == 0) return;
  throw UsageError("Sergeev elements of different rank: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

SergeevElement SergeevElement::operator-() const {
  SergeevElement e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

SergeevElement& SergeevElement::operator+=(const SergeevElement& o) {
  absorb_rank(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
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
      FieldElement c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SergeevElement& SergeevElement::operator-=(const SergeevElement& o) { return *this += -o; }

SergeevElement operator*(const SergeevElement& a, const SergeevElement& b) {
  SergeevElement e(0);
  e.absorb_rank(a);
  e.absorb_rank(b);
  if (a.n_ != b.n_ && !(a.terms_.empty() || b.terms_.empty())) throw UsageError("Sergeev product of different ranks");
  if (a.terms_.empty() || b.terms_.empty()) return e;
  std::vector<SergeevElement::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      auto [k, s] = basis_product(ka, kb, a.n_);
      FieldElement c = ca * cb;
      out.emplace_back(k, s > 0 ? std::move(c) : -c);
    }
  }
  merge_terms(out);
  e.terms_ = std::move(out);
  return e;
}

SergeevElement operator*(const FieldElement& c, const SergeevElement& x) {
  SergeevElement e(x.n_);
  if (c.is_zero()) return e;
  e.terms_.reserve(x.terms_.size());
  for (const auto& [k, v] : x.terms_) e.terms_.emplace_back(k, c * v);
  return e;
}

bool operator==(const SergeevElement& a, const SergeevElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string SergeevElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    Perm g = key_perm(k, n_);
    if (!g.is_identity()) s += "*g" + g.str();
    for (int i : key_mono(k).indices()) s += "*a" + std::to_string(i);
  }
  return s;
}

SergeevElement product(const SergeevElement& x, const SergeevElement& y) { return x * y; }

SergeevElement star(const SergeevElement& x) {
  std::vector<SergeevElement::Term> out;
  out.reserve(x.size());
  for (const auto& [k, c] : x.terms()) {
    auto [key, s] = basis_star(k, x.n());
    out.emplace_back(key, s > 0 ? c : -c);
  }
  return SergeevElement::from_terms(x.n(), std::move(out));
}

SergeevElement alpha(const SergeevElement& x) {
  std::vector<SergeevElement::Term> out;
  for (const auto& [k, c] : x.terms()) {
    if (key_perm(k, x.n()).is_identity()) out.emplace_back(k, c);
  }
  return SergeevElement::from_terms(x.n(), std::move(out));
}

SergeevElement commutator(const SergeevElement& x, const SergeevElement& y) { return x * y - y * x; }

SergeevElement power(const SergeevElement& x, int e) {
  if (e < 0) throw UsageError("negative power");
  SergeevElement r = SergeevElement::identity(x.n());
  for (int k = 0; k < e; ++k) r = r * x;
  return r;
}

SergeevElement phi(int i, int j, const FieldElement& u, const FieldElement& v, int n) {
  check_index(i, n);
  check_index(j, n);
  if (i == j) throw UsageError("phi needs i != j");
  FieldElement dm = u - v, dp = u + v;
  if (dm.is_zero() || dp.is_zero()) throw PoleError("phi has a pole at u = +-v");
  SergeevElement t = SergeevElement::transposition(n, i, j);
  SergeevElement ta = t * SergeevElement::clifford_word(n, {i, j});
  return SergeevElement::identity(n) - inv(dm) * t + inv(dp) * ta;
}

SergeevElement jm_element(int k, int n) {
  check_index(k, n);
  SergeevElement x(n);
  for (int i = 1; i < k; ++i) {
    SergeevElement t = SergeevElement::transposition(n, i, k);
    x += t + t * SergeevElement::clifford_word(n, {i, k});
  }
  return x;
}

SergeevElement y_element(int k, int n, int m) {
  check_index(k, n);
  SergeevElement y(n + m);
  for (int j = 1; j <= m; ++j) {
    SergeevElement t = SergeevElement::transposition(n + m, k, j + n);
    y += t - t * SergeevElement::clifford_word(n + m, {k, j + n});
  }
  return y;
}

SergeevElement embed(const SergeevElement& x, int n_total, int offset) {
  int n = x.n();
  if (offset < 0 || offset + n > n_total) throw UsageError("embedding out of bounds");
  check_rank(n_total);
  std::vector<SergeevElement::Term> out;
  out.reserve(x.size());
  for (const auto& [k, c] : x.terms()) {
    Perm g = key_perm(k, n);
    Perm big = Perm::identity(n_total);
    for (int i = 1; i <= n; ++i) big.images[static_cast<std::size_t>(i - 1 + offset)] = g(i) + offset;
    CliffordMono a{key_mono(k).mask << offset};
    out.emplace_back(make_key(big, a), c);
  }
  return SergeevElement::from_terms(n_total, std::move(out));
}

SergeevSeries phi_series(int i, int j, const KSeries& us, const KSeries& vs, int n) {
  check_index(i, n);
  check_index(j, n);
  KSeries dm = us - vs, dp = us + vs;
  if (dm.is_zero() || dp.is_zero()) throw PoleError("phi_series: denominator vanishes up to truncation");
  KSeries im = invert(dm), ip = invert(dp);
  SergeevElement t = SergeevElement::transposition(n, i, j);
  SergeevElement ta = t * SergeevElement::clifford_word(n, {i, j});
  int lo = std::min({0, im.valuation(), ip.valuation()});
  int hi = std::min(im.truncation(), ip.truncation());
  std::vector<SergeevElement> coeffs;
  for (int k = lo; k < hi; ++k) {
    SergeevElement c = k == 0 ? SergeevElement::identity(n) : SergeevElement(n);
    FieldElement a = im.coefficient(k), b = ip.coefficient(k);
    if (!a.is_zero()) c -= a * t;
    if (!b.is_zero()) c += b * ta;
    coeffs.push_back(std::move(c));
  }
  return SergeevSeries::from_coeffs(lo, std::move(coeffs), hi, SergeevElement(n));
}

}  // namespace qcapelli
