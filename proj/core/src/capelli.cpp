#include "qcapelli/capelli.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcapelli/error.hpp"
#include "qcapelli/fusion.hpp"
#include "qcapelli/sergeev.hpp"

namespace qcapelli {

namespace {

using Op = NormalOrderedOperator;

int bar(int i) { return i < 0 ? 1 : 0; }

std::vector<int> signed_range(int K) {
  std::vector<int> out;
  for (int i = 1; i <= K; ++i) out.push_back(i);
  for (int i = 1; i <= K; ++i) out.push_back(-i);
  return out;
}

// Every tuple in {1..K}^n.
template <typename F>
void for_each_positive_tuple(int K, int n, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  while (true) {
    f(t);
    int p = n - 1;
    while (p >= 0 && t[static_cast<std::size_t>(p)] == K) t[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) return;
    ++t[static_cast<std::size_t>(p)];
  }
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do out.push_back(Perm{v});
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

// ---- SymPolynomial ----

SymPolynomial SymPolynomial::constant(int nvars, const FieldElement& c) {
  SymPolynomial p(nvars);
  p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

SymPolynomial SymPolynomial::variable(int nvars, int k) {
  if (k < 1 || k > nvars) throw UsageError("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  SymPolynomial p(nvars);
  p.add(std::move(e), FieldElement(1));
  return p;
}

void SymPolynomial::add(Exponents e, const FieldElement& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars_) throw UsageError("exponent vector has wrong length");
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement SymPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement() : it->second;
}

int SymPolynomial::homogeneous_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d == -1) d = s;
    else if (d != s) return -1;
  }
  return d;
}

bool SymPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k + 1 < nvars_; ++k) {
      Exponents f = e;
      std::swap(f[static_cast<std::size_t>(k)], f[static_cast<std::size_t>(k + 1)]);
      if (coefficient(f) != c) return false;
    }
  }
  return true;
}

SymPolynomial operator+(const SymPolynomial& a, const SymPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("polynomials in different variables");
  SymPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

SymPolynomial operator-(const SymPolynomial& a, const SymPolynomial& b) { return a + FieldElement(-1) * b; }

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("polynomials in different variables");
  SymPolynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SymPolynomial::Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add(std::move(e), ca * cb);
    }
  }
  return out;
}

SymPolynomial operator*(const FieldElement& c, const SymPolynomial& a) {
  SymPolynomial out(a.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, c * v);
  return out;
}

std::string SymPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string body;
    for (int k = 0; k < nvars_; ++k) {
      int p = it->first[static_cast<std::size_t>(k)];
      if (p == 0) continue;
      body += (body.empty() ? "" : "*") + ("t" + std::to_string(k + 1)) + (p > 1 ? "^" + std::to_string(p) : "");
    }
    std::string term = body.empty() ? "(" + it->second.str() + ")"
                                    : (it->second.is_one() ? body : "(" + it->second.str() + ")*" + body);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

// ---- MatrixOverOperators ----

MatrixOverOperators MatrixOverOperators::from_matrix(const SuperMatrix& a, SuperAlphabet alpha) {
  MatrixOverOperators out(a.space(), alpha);
  for (std::uint32_t c = 0; c < a.dim(); ++c) {
    for (const auto& [r, v] : a.column(c)) out.add(r, c, Op::scalar(alpha, v));
  }
  return out;
}

MatrixOverOperators MatrixOverOperators::from_operator(SuperSpace space, const NormalOrderedOperator& y) {
  MatrixOverOperators out(space, y.alphabet());
  for (std::uint32_t r = 0; r < space.dim(); ++r) out.add(r, r, y);
  return out;
}

NormalOrderedOperator MatrixOverOperators::entry(std::uint32_t r, std::uint32_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Op(alpha_) : it->second;
}

void MatrixOverOperators::add(std::uint32_t r, std::uint32_t c, const NormalOrderedOperator& y) {
  if (y.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, y);
  if (!inserted) {
    it->second += y;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

int MatrixOverOperators::order() const {
  int o = -1;
  for (const auto& [k, y] : entries_) o = std::max(o, y.order());
  return o;
}

NormalOrderedOperator MatrixOverOperators::supertrace() const {
  Op out(alpha_);
  for (const auto& [k, y] : entries_) {
    if (k.first != k.second) continue;
    if (space_.parity(k.first)) out -= y;
    else out += y;
  }
  return out;
}

int MatrixOverOperators::degree() const {
  int d = -2;
  for (const auto& [k, y] : entries_) {
    int p = y.parity();
    if (p < 0) return -1;
    int t = (space_.parity(k.first) + space_.parity(k.second) + p) % 2;
    if (d == -2) d = t;
    else if (d != t) return -1;
  }
  return d == -2 ? 0 : d;
}

MatrixOverOperators operator+(const MatrixOverOperators& a, const MatrixOverOperators& b) {
  MatrixOverOperators out = a;
  for (const auto& [k, y] : b.entries_) out.add(k.first, k.second, y);
  return out;
}

MatrixOverOperators operator-(const MatrixOverOperators& a, const MatrixOverOperators& b) {
  MatrixOverOperators out = a;
  for (const auto& [k, y] : b.entries_) out.add(k.first, k.second, -y);
  return out;
}

MatrixOverOperators operator*(const FieldElement& c, const MatrixOverOperators& a) {
  MatrixOverOperators out(a.space_, a.alpha_);
  for (const auto& [k, y] : a.entries_) out.add(k.first, k.second, c * y);
  return out;
}

MatrixOverOperators operator*(const MatrixOverOperators& a, const MatrixOverOperators& b) {
  if (!(a.space_ == b.space_) || !(a.alpha_ == b.alpha_)) throw UsageError("matrix shapes differ");
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, const Op*>>> rows;
  for (const auto& [k, z] : b.entries_) rows[k.first].emplace_back(k.second, &z);
  MatrixOverOperators out(a.space_, a.alpha_);
  for (const auto& [k, y] : a.entries_) {
    auto it = rows.find(k.second);
    if (it == rows.end()) continue;
    Op y0 = y.homogeneous_part(0), y1 = y.homogeneous_part(1);
    for (const auto& [d, z] : it->second) {
      int mdeg = (a.space_.parity(k.second) + a.space_.parity(d)) % 2;
      Op prod = op_mul(y0, *z);
      if (!y1.is_zero()) {
        Op odd = op_mul(y1, *z);
        if (mdeg) prod -= odd;
        else prod += odd;
      }
      out.add(k.first, d, prod);
    }
  }
  return out;
}

MatrixOverOperators supercommutator(const MatrixOverOperators& a, const MatrixOverOperators& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) throw UsageError("supercommutator needs homogeneous arguments");
  MatrixOverOperators ab = a * b, ba = b * a;
  return (da && db) ? ab + ba : ab - ba;
}

// ---- F and C_lambda ----

MatrixOverOperators f_site(int s, int n, int N, int M) {
  SuperSpace sp(N, n);
  SuperAlphabet alpha(N, M);
  MatrixOverOperators out(sp, alpha);
  for (int i : signed_range(N)) {
    for (int j : signed_range(N)) {
      MonomialOp e = site_unit_op(sp, s, i, j);
      Op g = gamma(j, i, N, M);
      if (bar(j)) g = -g;
      for (std::uint32_t c = 0; c < sp.dim(); ++c) {
        if (e.image[c] == MonomialOp::kNone) continue;
        out.add(e.image[c], c, e.sign[c] > 0 ? g : -g);
      }
    }
  }
  return out;
}

MatrixOverOperators f_lambda(const StrictPartition& lambda, int N, int M) {
  int n = lambda.size();
  if (n < 1) throw UsageError("f_lambda needs a nonempty partition");
  if (lambda.length() > N) throw UsageError("f_lambda needs l(lambda) <= N");
  SuperSpace sp(N, n);
  SuperAlphabet alpha(N, M);
  std::vector<FieldElement> z = z_values(lambda);
  MatrixOverOperators out = MatrixOverOperators::from_matrix(rep(psi_cached(lambda), N), alpha);
  MatrixOverOperators id = MatrixOverOperators::from_operator(sp, Op::identity(alpha));
  for (int s = 1; s <= n; ++s) out = out * (f_site(s, n, N, M) - z[static_cast<std::size_t>(s - 1)] * id);
  return out;
}

NormalOrderedOperator c_lambda_gamma(const StrictPartition& lambda, int N, int M) {
  int n = lambda.size();
  if (n < 1) throw UsageError("c_lambda_gamma needs a nonempty partition");
  SuperSpace sp(N, n);
  SuperAlphabet alpha(N, M);
  std::vector<FieldElement> z = z_values(lambda);
  SuperMatrix r = rep(psi_cached(lambda), N);
  std::vector<int> letters = signed_range(N);

  // gamma(F_ji) (-1)^{deg j} and the site units, indexed by letter codes
  auto L = static_cast<std::size_t>(2 * N);
  std::vector<Op> g(L * L, Op(alpha));
  for (int i : letters) {
    for (int j : letters) {
      Op x = gamma(j, i, N, M);
      g[static_cast<std::size_t>(sp.code(i)) * L + static_cast<std::size_t>(sp.code(j))] = bar(j) ? -x : x;
    }
  }

  Op out(alpha);
  for (std::uint32_t col = 0; col < sp.dim(); ++col) {
    // column col of (F_1 - z_1)...(F_n - z_n), built from the right
    std::map<std::uint32_t, Op> v;
    v.emplace(col, Op::identity(alpha));
    int pcol = sp.parity(col);
    for (int s = n; s >= 1; --s) {
      std::map<std::uint32_t, Op> w;
      auto put = [&](std::uint32_t st, Op y) {
        if (y.is_zero()) return;
        auto [it, inserted] = w.try_emplace(st, y);
        if (!inserted) {
          it->second += y;
          if (it->second.is_zero()) w.erase(it);
        }
      };
      const FieldElement& zs = z[static_cast<std::size_t>(s - 1)];
      for (const auto& [c, y] : v) {
        int j = sp.letter_at(c, s);
        int mdeg = (sp.parity(c) + pcol) % 2;
        int before = sp.parity_before(c, s);
        for (int i : letters) {
          int deg = (bar(i) + bar(j)) % 2;
          int sign = (deg * (before + mdeg)) % 2 ? -1 : 1;
          Op t = op_mul(g[static_cast<std::size_t>(sp.code(i)) * L + static_cast<std::size_t>(sp.code(j))], y);
          put(sp.with_letter(c, s, i), sign > 0 ? t : -t);
        }
        if (!zs.is_zero()) put(c, -zs * y);
      }
      v = std::move(w);
    }
    // diagonal entry (col, col) of R . G, with the supertrace sign
    Op diag(alpha);
    for (const auto& [c, y] : v) {
      FieldElement rc = r.entry(col, c);
      if (!rc.is_zero()) diag += rc * y;
    }
    if (pcol) out -= diag;
    else out += diag;
  }
  return out;
}

bool verify_capelli_identity(const StrictPartition& lambda, int N, int M) {
  Op c = c_lambda_gamma(lambda, N, M);
  Op i = i_lambda(lambda, N, M);
  if (c != i) return false;
  if (lambda.length() <= std::min(M, N) && i.is_zero()) return false;
  return true;
}

bool verify_capelli_vanishing(const StrictPartition& lambda, const StrictPartition& mu, int N) {
  if (contains(lambda, mu)) throw UsageError("verify_capelli_vanishing needs lambda not contained in mu");
  if (mu.length() > N) throw UsageError("verify_capelli_vanishing needs l(mu) <= N");
  int n = lambda.size(), m = mu.size(), total = n + m;
  SuperSpace sp(N, total);
  std::vector<FieldElement> z = z_values(lambda);
  SuperMatrix prod = m > 0 ? rep(embed(psi_cached(mu), total, n), N) : SuperMatrix::identity(sp);
  SuperMatrix id = SuperMatrix::identity(sp);
  for (int s = n; s >= 1; --s) {
    SuperMatrix factor = FieldElement(-1) * z[static_cast<std::size_t>(s - 1)] * id;
    for (int r = 1; r <= m; ++r) {
      SuperMatrix p = p_matrix(s, n + r, N, total);
      factor = factor + (p - p * j_matrix(s, N, total) * j_matrix(n + r, N, total));
    }
    prod = factor * prod;
    if (prod.is_zero()) return true;
  }
  prod = rep(embed(psi_cached(lambda), total, 0), N) * prod;
  return prod.is_zero();
}

// ---- T_lambda and Schur Q ----

SymPolynomial t_lambda(const StrictPartition& lambda, int N) {
  int n = lambda.size();
  if (lambda.length() > N) throw UsageError("t_lambda needs l(lambda) <= N");
  SuperSpace sp(N, n);
  std::vector<FieldElement> diag(sp.dim());
  SergeevElement x = x_lambda(lambda);
  for (const auto& [key, c] : x.terms()) {
    MonomialOp op = basis_op(sp, key);
    for (std::uint32_t st = 0; st < sp.dim(); ++st) {
      if (op.image[st] != st) continue;
      if (op.sign[st] > 0) diag[st] += c;
      else diag[st] -= c;
    }
  }
  SymPolynomial out(N);
  for (std::uint32_t st = 0; st < sp.dim(); ++st) {
    if (diag[st].is_zero()) continue;
    SymPolynomial::Exponents e(static_cast<std::size_t>(N), 0);
    for (int letter : sp.letters(st)) ++e[static_cast<std::size_t>(std::abs(letter) - 1)];
    // T carries (-1)^{deg i} per site and the supertrace (-1)^{parity}; the two cancel
    out.add(std::move(e), diag[st]);
  }
  return out;
}

namespace {

// q_0 .. q_max from prod_i (1 + t_i u)/(1 - t_i u)
std::vector<SymPolynomial> q_generators(int max, int N) {
  std::vector<SymPolynomial> q(static_cast<std::size_t>(max + 1), SymPolynomial(N));
  q[0] = SymPolynomial::constant(N, FieldElement(1));
  for (int i = 1; i <= N; ++i) {
    std::vector<SymPolynomial> next(q.size(), SymPolynomial(N));
    for (int r = 0; r <= max; ++r) {
      SymPolynomial power = SymPolynomial::constant(N, FieldElement(1));
      for (int k = 0; k <= r; ++k) {
        next[static_cast<std::size_t>(r)] =
            next[static_cast<std::size_t>(r)] + (k == 0 ? FieldElement(1) : FieldElement(2)) * (q[static_cast<std::size_t>(r - k)] * power);
        power = power * SymPolynomial::variable(N, i);
      }
    }
    q = std::move(next);
  }
  return q;
}

SymPolynomial two_row(const std::vector<SymPolynomial>& q, int r, int s) {
  auto Q = [&](int k) { return q[static_cast<std::size_t>(k)]; };
  SymPolynomial out = Q(r) * Q(s);
  for (int k = 1; k <= s; ++k) out = out + FieldElement(k % 2 ? -2 : 2) * (Q(r + k) * Q(s - k));
  return out;
}

SymPolynomial pfaffian(const std::vector<std::vector<SymPolynomial>>& a, std::vector<int> idx, int N) {
  if (idx.empty()) return SymPolynomial::constant(N, FieldElement(1));
  SymPolynomial out(N);
  int first = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t t = 1; t < idx.size(); ++t) {
      if (t != k) rest.push_back(idx[t]);
    }
    SymPolynomial term = a[static_cast<std::size_t>(first)][static_cast<std::size_t>(idx[k])] * pfaffian(a, rest, N);
    out = k % 2 ? out + term : out - term;
  }
  return out;
}

}  // namespace

SymPolynomial schur_q(const StrictPartition& lambda, int N) {
  if (N < 1) throw UsageError("schur_q needs N >= 1");
  int n = lambda.size();
  if (lambda.empty()) return SymPolynomial::constant(N, FieldElement(1));
  std::vector<SymPolynomial> q = q_generators(n, N);
  std::vector<int> parts = lambda.parts();
  if (parts.size() == 1) return q[static_cast<std::size_t>(parts[0])];
  if (parts.size() % 2) parts.push_back(0);
  std::size_t L = parts.size();
  std::vector<std::vector<SymPolynomial>> a(L, std::vector<SymPolynomial>(L, SymPolynomial(N)));
  for (std::size_t x = 0; x < L; ++x) {
    for (std::size_t y = x + 1; y < L; ++y) a[x][y] = two_row(q, parts[x], parts[y]);
  }
  std::vector<int> idx(L);
  std::iota(idx.begin(), idx.end(), 0);
  return pfaffian(a, idx, N);
}

SymPolynomial schur_q_tableaux(const StrictPartition& lambda, int N) {
  if (N < 1) throw UsageError("schur_q_tableaux needs N >= 1");
  // cells in row reading order; value v in 1..2N, odd v is the primed letter (v+1)/2
  std::vector<Cell> cells;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = r; c < r + lambda[r]; ++c) cells.push_back({r, c});
  }
  std::map<std::pair<int, int>, int> filled;
  SymPolynomial out(N);
  SymPolynomial::Exponents e(static_cast<std::size_t>(N), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.add(e, FieldElement(1));
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= 2 * N; ++v) {
      bool primed = v % 2 == 1;
      if (c > r) {
        int left = filled[{r, c - 1}];
        if (left > v || (primed && left == v)) continue;
      }
      if (r > 1) {
        int up = filled[{r - 1, c}];
        if (up > v || (!primed && up == v)) continue;
      }
      filled[{r, c}] = v;
      ++e[static_cast<std::size_t>((v - 1) / 2)];
      self(self, k + 1);
      --e[static_cast<std::size_t>((v - 1) / 2)];
    }
    filled.erase({r, c});
  };
  rec(rec, 0);
  return out;
}

bool verify_capelli_symbol(const StrictPartition& lambda, int N) {
  int n = lambda.size();
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  FieldElement scale(Rational(fact, count_standard(lambda)));
  return t_lambda(lambda, N) == scale * schur_q(lambda, N);
}

// ---- classical baseline ----

NormalOrderedOperator cayley_operator(int n, int N, int M) {
  SuperAlphabet alpha(N, M);
  Op out(alpha);
  for (const Perm& g : all_perms(n)) {
    FieldElement sg(g.sign());
    for_each_positive_tuple(N, n, [&](const std::vector<int>& i) {
      for_each_positive_tuple(M, n, [&](const std::vector<int>& b) {
        std::vector<std::pair<int, int>> xs, ds;
        for (int s = 1; s <= n; ++s) {
          xs.emplace_back(i[static_cast<std::size_t>(g(s) - 1)], b[static_cast<std::size_t>(s - 1)]);
          ds.emplace_back(i[static_cast<std::size_t>(s - 1)], b[static_cast<std::size_t>(s - 1)]);
        }
        out += Op::word(alpha, xs, ds, sg);
      });
    });
  }
  return out;
}

NormalOrderedOperator classical_capelli_image(int n, int N, int M) {
  SuperAlphabet alpha(N, M);
  std::map<std::pair<int, int>, Op> e;
  for (int p = 1; p <= N; ++p) {
    for (int q = 1; q <= N; ++q) {
      Op x(alpha);
      for (int b = 1; b <= M; ++b) x += Op::word(alpha, {{p, b}}, {{q, b}});
      e.emplace(std::pair{p, q}, std::move(x));
    }
  }
  Op out(alpha);
  for (const Perm& g : all_perms(n)) {
    FieldElement sg(g.sign());
    for_each_positive_tuple(N, n, [&](const std::vector<int>& i) {
      Op prod = Op::scalar(alpha, sg);
      for (int s = 1; s <= n; ++s) {
        int p = i[static_cast<std::size_t>(g(s) - 1)], q = i[static_cast<std::size_t>(s - 1)];
        Op factor = e.at({p, q});
        if (p == q && s > 1) factor += Op::scalar(alpha, FieldElement(s - 1));
        prod = prod * factor;
      }
      out += prod;
    });
  }
  return out;
}

bool classical_capelli_check(int n, int N, int M) {
  if (n < 1 || n > std::min(M, N)) throw UsageError("classical_capelli_check needs 1 <= n <= min(M, N)");
  return cayley_operator(n, N, M) == classical_capelli_image(n, N, M);
}

}  // namespace qcapelli
