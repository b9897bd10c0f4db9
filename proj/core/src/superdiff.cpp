#include "qcapelli/superdiff.hpp"

#include <algorithm>
#include <sstream>

#include "qcapelli/error.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/sergeev.hpp"

namespace qcapelli {

namespace {

int bar(int i) { return i < 0 ? 1 : 0; }

std::vector<int> signed_range(int K) {
  std::vector<int> out;
  for (int i = 1; i <= K; ++i) out.push_back(i);
  for (int i = 1; i <= K; ++i) out.push_back(-i);
  return out;
}

// Free generator for (i, a) with a of either sign, and the scalar from the rewriting rule.
std::pair<std::uint16_t, FieldElement> resolve(const SuperAlphabet& alpha, int i, int a, bool derivation) {
  if (a > 0) return {alpha.id(i, a), FieldElement(1)};
  FieldElement c = imaginary_unit();
  return {alpha.id(-i, -a), derivation ? -c : c};
}

int word_parity(const SuperMonomial& w, const SuperAlphabet& alpha) {
  int p = 0;
  for (auto g : w) p ^= alpha.odd(g) ? 1 : 0;
  return p;
}

using TermMap = std::map<NormalOrderedOperator::Key, FieldElement>;

void accumulate(TermMap& m, NormalOrderedOperator::Key k, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// d_g composed on the left of every term.
TermMap derive_left(std::uint16_t g, const TermMap& t, const SuperAlphabet& alpha) {
  TermMap out;
  bool godd = alpha.odd(g);
  for (const auto& [key, c] : t) {
    const auto& [xs, ds] = key;
    int before = 0;
    for (std::size_t p = 0; p < xs.size(); ++p) {
      if (xs[p] == g) {
        SuperMonomial rest = xs;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
        accumulate(out, {std::move(rest), ds}, (godd && before) ? -c : c);
      }
      before ^= alpha.odd(xs[p]) ? 1 : 0;
    }
    SuperMonomial nd = ds;
    nd.insert(nd.begin(), g);
    int s = sort_word(nd, alpha);
    if (s == 0) continue;
    if (godd && before) s = -s;
    accumulate(out, {xs, std::move(nd)}, s > 0 ? c : -c);
  }
  return out;
}

}  // namespace

SuperAlphabet::SuperAlphabet(int N, int M) : N_(N), M_(M) {
  if (N < 1 || M < 1) throw UsageError("alphabet needs N, M >= 1");
  if (2 * N * M > 60000) throw UsageError("alphabet too large");
}

std::uint16_t SuperAlphabet::id(int i, int a) const {
  if (i == 0 || std::abs(i) > N_ || a < 1 || a > M_) throw UsageError("generator index out of range");
  int code = i > 0 ? i - 1 : N_ - i - 1;
  return static_cast<std::uint16_t>(code * M_ + a - 1);
}

int SuperAlphabet::row(std::uint16_t g) const {
  int code = g / M_;
  return code < N_ ? code + 1 : -(code - N_ + 1);
}

int SuperAlphabet::col(std::uint16_t g) const { return g % M_ + 1; }

int sort_word(SuperMonomial& w, const SuperAlphabet& alpha) {
  int sign = 1;
  for (std::size_t k = 1; k < w.size(); ++k) {
    for (std::size_t p = k; p > 0 && w[p - 1] > w[p]; --p) {
      if (alpha.odd(w[p]) && alpha.odd(w[p - 1])) sign = -sign;
      std::swap(w[p - 1], w[p]);
    }
  }
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == w[k - 1] && alpha.odd(w[k])) return 0;
  }
  return sign;
}

// ---- SuperPolynomial ----

SuperPolynomial SuperPolynomial::one(SuperAlphabet alpha) {
  SuperPolynomial p(alpha);
  p.add({}, FieldElement(1));
  return p;
}

SuperPolynomial SuperPolynomial::word(SuperAlphabet alpha, const std::vector<std::pair<int, int>>& xs) {
  SuperMonomial w;
  FieldElement c(1);
  for (auto [i, a] : xs) {
    auto [g, s] = resolve(alpha, i, a, false);
    w.push_back(g);
    c *= s;
  }
  SuperPolynomial p(alpha);
  int s = sort_word(w, alpha);
  if (s != 0) p.add(std::move(w), s > 0 ? c : -c);
  return p;
}

void SuperPolynomial::add(SuperMonomial m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
  if (!(a.alpha_ == b.alpha_)) throw UsageError("polynomials over different alphabets");
  SuperPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add(m, c);
  return out;
}

SuperPolynomial operator*(const FieldElement& c, const SuperPolynomial& p) {
  SuperPolynomial out(p.alpha_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : p.terms_) out.terms_.emplace(m, c * v);
  return out;
}

namespace {

std::string gen_name(const SuperAlphabet& alpha, char sym, std::uint16_t g) {
  std::ostringstream os;
  os << sym << "[" << alpha.row(g) << "," << alpha.col(g) << "]";
  return os.str();
}

std::string term_str(const FieldElement& c, const std::string& body) {
  if (body.empty()) return "(" + c.str() + ")";
  if (c.is_one()) return body;
  return "(" + c.str() + ")*" + body;
}

}  // namespace

std::string SuperPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string body;
    for (auto g : m) body += (body.empty() ? "" : "*") + gen_name(alpha_, 'x', g);
    out += (out.empty() ? "" : " + ") + term_str(c, body);
  }
  return out;
}

// ---- NormalOrderedOperator ----

NormalOrderedOperator NormalOrderedOperator::identity(SuperAlphabet alpha) { return scalar(alpha, FieldElement(1)); }

NormalOrderedOperator NormalOrderedOperator::scalar(SuperAlphabet alpha, const FieldElement& c) {
  NormalOrderedOperator o(alpha);
  o.add({}, c);
  return o;
}

NormalOrderedOperator NormalOrderedOperator::x(SuperAlphabet alpha, int i, int a) { return word(alpha, {{i, a}}, {}); }

NormalOrderedOperator NormalOrderedOperator::d(SuperAlphabet alpha, int i, int a) { return word(alpha, {}, {{i, a}}); }

NormalOrderedOperator NormalOrderedOperator::word(SuperAlphabet alpha, const std::vector<std::pair<int, int>>& xs,
                                                  const std::vector<std::pair<int, int>>& ds, const FieldElement& c) {
  NormalOrderedOperator o(alpha);
  FieldElement coeff = c;
  SuperMonomial wx, wd;
  for (auto [i, a] : xs) {
    auto [g, s] = resolve(alpha, i, a, false);
    wx.push_back(g);
    coeff *= s;
  }
  for (auto [i, a] : ds) {
    auto [g, s] = resolve(alpha, i, a, true);
    wd.push_back(g);
    coeff *= s;
  }
  int s = sort_word(wx, alpha) * sort_word(wd, alpha);
  if (s != 0) o.add({std::move(wx), std::move(wd)}, s > 0 ? coeff : -coeff);
  return o;
}

void NormalOrderedOperator::add(Key k, const FieldElement& c) { accumulate(terms_, std::move(k), c); }

FieldElement NormalOrderedOperator::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? FieldElement() : it->second;
}

int NormalOrderedOperator::parity() const {
  int p = -2;
  for (const auto& [k, c] : terms_) {
    int q = word_parity(k.first, alpha_) ^ word_parity(k.second, alpha_);
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

int NormalOrderedOperator::order() const {
  int o = -1;
  for (const auto& [k, c] : terms_) o = std::max(o, static_cast<int>(k.second.size()));
  return o;
}

NormalOrderedOperator NormalOrderedOperator::homogeneous_part(int parity) const {
  NormalOrderedOperator out(alpha_);
  for (const auto& [k, c] : terms_) {
    if ((word_parity(k.first, alpha_) ^ word_parity(k.second, alpha_)) == parity) out.terms_.emplace(k, c);
  }
  return out;
}

NormalOrderedOperator NormalOrderedOperator::operator-() const {
  NormalOrderedOperator out(alpha_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

NormalOrderedOperator& NormalOrderedOperator::operator+=(const NormalOrderedOperator& o) {
  if (!(alpha_ == o.alpha_)) throw UsageError("operators over different alphabets");
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

NormalOrderedOperator& NormalOrderedOperator::operator-=(const NormalOrderedOperator& o) {
  if (!(alpha_ == o.alpha_)) throw UsageError("operators over different alphabets");
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

NormalOrderedOperator operator*(const FieldElement& c, const NormalOrderedOperator& a) {
  NormalOrderedOperator out(a.alpha_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms_) out.terms_.emplace(k, c * v);
  return out;
}

std::string NormalOrderedOperator::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string body;
    for (auto g : k.first) body += (body.empty() ? "" : "*") + gen_name(alpha_, 'x', g);
    for (auto g : k.second) body += (body.empty() ? "" : "*") + gen_name(alpha_, 'd', g);
    out += (out.empty() ? "" : " + ") + term_str(c, body);
  }
  return out;
}

NormalOrderedOperator op_mul(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
  const SuperAlphabet& alpha = a.alphabet();
  if (!(alpha == b.alphabet())) throw UsageError("operators over different alphabets");
  NormalOrderedOperator out(alpha);
  for (const auto& [ka, ca] : a.terms()) {
    TermMap t = b.terms();
    for (auto it = ka.second.rbegin(); it != ka.second.rend() && !t.empty(); ++it) t = derive_left(*it, t, alpha);
    for (const auto& [k, c] : t) {
      SuperMonomial nx = ka.first;
      nx.insert(nx.end(), k.first.begin(), k.first.end());
      int s = sort_word(nx, alpha);
      if (s == 0) continue;
      FieldElement v = ca * c;
      out.add({std::move(nx), k.second}, s > 0 ? v : -v);
    }
  }
  return out;
}

NormalOrderedOperator supercommutator(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
  NormalOrderedOperator out = op_mul(a, b) - op_mul(b, a);
  // odd-odd parts carry a plus sign
  NormalOrderedOperator ao = a.homogeneous_part(1), bo = b.homogeneous_part(1);
  if (!ao.is_zero() && !bo.is_zero()) out += FieldElement(2) * op_mul(bo, ao);
  return out;
}

SuperPolynomial derive(std::uint16_t g, const SuperPolynomial& p) {
  const SuperAlphabet& alpha = p.alphabet();
  SuperPolynomial out(alpha);
  bool godd = alpha.odd(g);
  for (const auto& [m, c] : p.terms()) {
    int before = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == g) {
        SuperMonomial rest = m;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        out.add(std::move(rest), (godd && before) ? -c : c);
      }
      before ^= alpha.odd(m[k]) ? 1 : 0;
    }
  }
  return out;
}

SuperPolynomial apply(const NormalOrderedOperator& a, const SuperPolynomial& p) {
  const SuperAlphabet& alpha = a.alphabet();
  if (!(alpha == p.alphabet())) throw UsageError("operator and polynomial over different alphabets");
  SuperPolynomial out(alpha);
  for (const auto& [k, c] : a.terms()) {
    SuperPolynomial q = p;
    for (auto it = k.second.rbegin(); it != k.second.rend() && !q.is_zero(); ++it) q = derive(*it, q);
    for (const auto& [m, v] : q.terms()) {
      SuperMonomial w = k.first;
      w.insert(w.end(), m.begin(), m.end());
      int s = sort_word(w, alpha);
      if (s == 0) continue;
      FieldElement t = c * v;
      out.add(std::move(w), s > 0 ? t : -t);
    }
  }
  return out;
}

std::vector<SuperMonomial> monomials_of_degree(const SuperAlphabet& alpha, int d) {
  std::vector<SuperMonomial> out;
  SuperMonomial cur;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < alpha.count(); ++g) {
      auto gg = static_cast<std::uint16_t>(g);
      if (alpha.odd(gg) && !cur.empty() && cur.back() == gg) continue;
      cur.push_back(gg);
      self(self, alpha.odd(gg) ? g + 1 : g, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

NormalOrderedOperator gamma(int i, int j, int N, int M) {
  SuperAlphabet alpha(N, M);
  NormalOrderedOperator out(alpha);
  for (int b : signed_range(M)) out += NormalOrderedOperator::word(alpha, {{i, b}}, {{j, b}});
  return out;
}

NormalOrderedOperator gamma_prime(int a, int b, int N, int M) {
  SuperAlphabet alpha(N, M);
  NormalOrderedOperator out(alpha);
  for (int j : signed_range(N)) {
    int e = bar(j) * (bar(a) + bar(b));
    out += NormalOrderedOperator::word(alpha, {{j, a}}, {{j, b}}, FieldElement(e % 2 ? -1 : 1));
  }
  return out;
}

namespace {

// Every tuple in signed_range(K)^n, as a flat odometer.
template <typename F>
void for_each_tuple(int K, int n, F&& f) {
  std::vector<int> vals = signed_range(K);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<int> t(static_cast<std::size_t>(n), vals[0]);
  while (true) {
    f(t);
    int p = n - 1;
    while (p >= 0) {
      auto up = static_cast<std::size_t>(p);
      if (++idx[up] < vals.size()) {
        t[up] = vals[idx[up]];
        break;
      }
      idx[up] = 0;
      t[up] = vals[0];
      --p;
    }
    if (p < 0) return;
  }
}

}  // namespace

NormalOrderedOperator i_lambda(const StrictPartition& lambda, int N, int M) {
  SuperAlphabet alpha(N, M);
  int n = lambda.size();
  if (n < 1) throw UsageError("i_lambda needs a nonempty partition");
  NormalOrderedOperator out(alpha);
  TermMap acc;
  for (BasisKey h : all_basis_keys(n)) {
    FieldElement chi = char_chi_basis(lambda, h);
    if (chi.is_zero()) continue;
    Perm g = key_perm(h, n);
    Perm ginv = g.inverse();
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    for (int s : key_mono(h).indices()) l[static_cast<std::size_t>(s - 1)] = 1;
    auto L = [&](int s) { return l[static_cast<std::size_t>(s - 1)]; };
    for_each_tuple(N, n, [&](const std::vector<int>& i) {
      auto I = [&](int s) { return i[static_cast<std::size_t>(s - 1)]; };
      std::vector<int> j(static_cast<std::size_t>(n));
      for (int s = 1; s <= n; ++s) j[static_cast<std::size_t>(s - 1)] = I(g(s)) * (L(s) ? -1 : 1);
      auto J = [&](int s) { return j[static_cast<std::size_t>(s - 1)]; };
      // b-independent part of e
      int e0 = 0;
      for (int s = 1; s <= n; ++s) {
        e0 += (bar(J(s)) + 1) * L(s);
        for (int r = 1; r < s; ++r) {
          e0 += bar(J(r)) * bar(J(s)) + bar(J(r)) * L(s);
          if (ginv(r) < ginv(s)) e0 += bar(I(r)) * bar(I(s));
        }
      }
      for_each_tuple(M, n, [&](const std::vector<int>& b) {
        auto B = [&](int s) { return b[static_cast<std::size_t>(s - 1)]; };
        int e = e0;
        for (int s = 1; s <= n; ++s) {
          for (int r = 1; r < s; ++r) e += (bar(I(r)) + bar(J(r))) * bar(B(s));
        }
        FieldElement c = chi;
        SuperMonomial wx, wd;
        for (int s = n; s >= 1; --s) {
          auto [gx, cx] = resolve(alpha, J(s), B(s), false);
          wx.push_back(gx);
          if (!cx.is_one()) c *= cx;
        }
        for (int s = 1; s <= n; ++s) {
          auto [gd, cd] = resolve(alpha, I(s), B(s), true);
          wd.push_back(gd);
          if (!cd.is_one()) c *= cd;
        }
        int sg = sort_word(wx, alpha);
        if (sg == 0) return;
        sg *= sort_word(wd, alpha);
        if (sg == 0) return;
        if (e % 2) sg = -sg;
        accumulate(acc, {std::move(wx), std::move(wd)}, sg > 0 ? c : -c);
      });
    });
  }
  for (auto& [k, c] : acc) out.add(k, c);
  return out;
}

NormalOrderedOperator invariant_capelli_sum(int n, int N, int M) {
  SuperAlphabet alpha(N, M);
  if (n < 1) throw UsageError("invariant_capelli_sum needs n >= 1");
  TermMap acc;
  for_each_tuple(N, n, [&](const std::vector<int>& i) {
    for_each_tuple(M, n, [&](const std::vector<int>& b) {
      std::vector<std::pair<int, int>> xs, ds;
      for (int s = n; s >= 1; --s) xs.emplace_back(i[static_cast<std::size_t>(s - 1)], b[static_cast<std::size_t>(s - 1)]);
      for (int s = 1; s <= n; ++s) ds.emplace_back(i[static_cast<std::size_t>(s - 1)], b[static_cast<std::size_t>(s - 1)]);
      NormalOrderedOperator w = NormalOrderedOperator::word(alpha, xs, ds);
      for (const auto& [k, c] : w.terms()) accumulate(acc, k, c);
    });
  });
  NormalOrderedOperator out(alpha);
  for (auto& [k, c] : acc) out.add(k, c);
  return out;
}

namespace {

// gamma-type image of [F_ij, F_kl] computed from the gl bracket on F = E_ij + E_{-i,-j}.
// [E_ij, E_kl] = d_jk E_il - (-1)^{(i+j)(k+l)} d_li E_kj, and E_pq maps to half of the image of F_pq.
template <typename G>
NormalOrderedOperator bracket_image(int i, int j, int k, int l, G&& img) {
  NormalOrderedOperator out = FieldElement(0) * img(1, 1);
  auto one = [&](int p, int q, int r, int s) {
    int sg = ((bar(p) + bar(q)) * (bar(r) + bar(s))) % 2 ? -1 : 1;
    // [E_pq, E_rs] with E_uv -> img(u,v) / 2 when images satisfy img(-u,-v) = img(u,v)
    if (q == r) out += FieldElement(Rational(1, 2)) * img(p, s);
    if (s == p) out -= FieldElement(Rational(sg, 2)) * img(r, q);
  };
  one(i, j, k, l);
  one(i, j, -k, -l);
  one(-i, -j, k, l);
  one(-i, -j, -k, -l);
  return out;
}

}  // namespace

bool verify_gamma_rep(int N, int M) {
  auto g = [&](int i, int j) { return gamma(i, j, N, M); };
  auto gp = [&](int a, int b) { return gamma_prime(a, b, N, M); };
  std::vector<int> rows = signed_range(N), cols = signed_range(M);
  for (int i : rows) {
    for (int j : rows) {
      NormalOrderedOperator x = g(i, j);
      if (x.parity() != (bar(i) + bar(j)) % 2) return false;
      for (int k : rows) {
        for (int l : rows) {
          if (supercommutator(x, g(k, l)) != bracket_image(i, j, k, l, g)) return false;
        }
      }
      for (int a : cols) {
        for (int b : cols) {
          if (!supercommutator(x, gp(a, b)).is_zero()) return false;
        }
      }
    }
  }
  for (int a : cols) {
    for (int b : cols) {
      NormalOrderedOperator x = gp(a, b);
      if (x.parity() != (bar(a) + bar(b)) % 2) return false;
      for (int c : cols) {
        for (int d : cols) {
          if (supercommutator(x, gp(c, d)) != bracket_image(a, b, c, d, gp)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qcapelli
