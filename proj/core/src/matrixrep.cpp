#include "qcapelli/matrixrep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

#include "qcapelli/error.hpp"
#include "qcapelli/fusion.hpp"

namespace qcapelli {

namespace {

constexpr std::uint32_t kMaxStates = 1u << 22;

FieldElement sign_of(int s) { return FieldElement(s); }

int odd(int letter) { return letter < 0 ? 1 : 0; }

void check_letter(const SuperSpace& sp, int i) {
  if (i == 0 || i > sp.N() || i < -sp.N()) throw UsageError("letter " + std::to_string(i) + " out of range");
}

void check_site(const SuperSpace& sp, int s) {
  if (s < 1 || s > sp.n()) throw UsageError("site " + std::to_string(s) + " out of range");
}

struct GeneratorOps {
  std::vector<MonomialOp> j;                   // j[s-1]
  std::vector<std::vector<MonomialOp>> p;      // p[k-1][l-1], k != l
};

const GeneratorOps& generator_ops(const SuperSpace& sp) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<GeneratorOps>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{sp.N(), sp.n()}];
  if (!slot) {
    auto ops = std::make_unique<GeneratorOps>();
    for (int s = 1; s <= sp.n(); ++s) ops->j.push_back(j_op(sp, s));
    ops->p.resize(static_cast<std::size_t>(sp.n()));
    for (int k = 1; k <= sp.n(); ++k) {
      for (int l = 1; l <= sp.n(); ++l) {
        ops->p[static_cast<std::size_t>(k - 1)].push_back(k == l ? MonomialOp::identity(sp.dim()) : p_op(sp, k, l));
      }
    }
    slot = std::move(ops);
  }
  return *slot;
}

SuperMatrix::Column merge_column(std::vector<std::pair<std::uint32_t, FieldElement>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SuperMatrix::Column out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

// Inverse of a bijective monomial op: src[p] = s with image[s] = p.
std::vector<std::uint32_t> preimages(const MonomialOp& op) {
  std::vector<std::uint32_t> src(op.dim(), MonomialOp::kNone);
  for (std::uint32_t s = 0; s < op.dim(); ++s) {
    if (op.image[s] != MonomialOp::kNone) src[op.image[s]] = s;
  }
  return src;
}

}  // namespace

SuperSpace::SuperSpace(int N, int n) : N_(N), n_(n), dim_(1) {
  if (N < 1) throw UsageError("N must be positive");
  if (n < 0) throw UsageError("n must be non-negative");
  place_.assign(static_cast<std::size_t>(n), 1);
  for (int s = n; s >= 1; --s) {
    place_[static_cast<std::size_t>(s - 1)] = dim_;
    if (static_cast<std::uint64_t>(dim_) * static_cast<std::uint64_t>(2 * N) > kMaxStates) {
      throw UsageError("tensor space (2N)^n too large");
    }
    dim_ *= static_cast<std::uint32_t>(2 * N);
  }
}

int SuperSpace::code(int letter) const { return letter > 0 ? letter - 1 : N_ - letter - 1; }

int SuperSpace::letter(int code) const { return code < N_ ? code + 1 : -(code - N_ + 1); }

std::uint32_t SuperSpace::state(const std::vector<int>& letters) const {
  if (static_cast<int>(letters.size()) != n_) throw UsageError("state needs n letters");
  std::uint32_t s = 0;
  for (int l : letters) {
    check_letter(*this, l);
    s = s * static_cast<std::uint32_t>(2 * N_) + static_cast<std::uint32_t>(code(l));
  }
  return s;
}

std::vector<int> SuperSpace::letters(std::uint32_t state) const {
  std::vector<int> out;
  for (int s = 1; s <= n_; ++s) out.push_back(letter_at(state, s));
  return out;
}

int SuperSpace::letter_at(std::uint32_t state, int site) const {
  return letter(static_cast<int>((state / place_[static_cast<std::size_t>(site - 1)]) % static_cast<std::uint32_t>(2 * N_)));
}

std::uint32_t SuperSpace::with_letter(std::uint32_t state, int site, int l) const {
  std::uint32_t p = place_[static_cast<std::size_t>(site - 1)];
  std::uint32_t old = (state / p) % static_cast<std::uint32_t>(2 * N_);
  return state - old * p + static_cast<std::uint32_t>(code(l)) * p;
}

int SuperSpace::parity_before(std::uint32_t state, int site) const {
  int par = 0;
  for (int s = 1; s < site; ++s) par += odd(letter_at(state, s));
  return par & 1;
}

SuperMatrix::SuperMatrix(SuperSpace space) : space_(space), cols_(space.dim()) {}

SuperMatrix SuperMatrix::identity(SuperSpace space) {
  SuperMatrix m(space);
  for (std::uint32_t c = 0; c < space.dim(); ++c) m.cols_[c].emplace_back(c, FieldElement(1));
  return m;
}

FieldElement SuperMatrix::entry(std::uint32_t r, std::uint32_t c) const {
  const Column& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::uint32_t v) { return e.first < v; });
  if (it != col.end() && it->first == r) return it->second;
  return FieldElement();
}

void SuperMatrix::set_column(std::uint32_t c, Column col) { cols_.at(c) = merge_column(std::move(col)); }

void SuperMatrix::add(std::uint32_t r, std::uint32_t c, const FieldElement& v) {
  Column col = cols_.at(c);
  col.emplace_back(r, v);
  cols_[c] = merge_column(std::move(col));
}

bool SuperMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

std::size_t SuperMatrix::nonzeros() const {
  std::size_t k = 0;
  for (const auto& c : cols_) k += c.size();
  return k;
}

int SuperMatrix::degree() const {
  int deg = -2;
  for (std::uint32_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : cols_[c]) {
      int d = (space_.parity(r) + space_.parity(c)) & 1;
      if (deg == -2) deg = d;
      else if (deg != d) return -1;
    }
  }
  return deg == -2 ? 0 : deg;
}

std::vector<FieldElement> SuperMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != dim()) throw UsageError("vector length does not match the matrix");
  std::vector<FieldElement> out(dim());
  for (std::uint32_t c = 0; c < dim(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, a] : cols_[c]) out[r] += a * v[c];
  }
  return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.space_ == b.space_)) throw UsageError("matrix spaces differ");
  SuperMatrix m(a.space_);
  for (std::uint32_t c = 0; c < a.dim(); ++c) {
    SuperMatrix::Column col = a.cols_[c];
    col.insert(col.end(), b.cols_[c].begin(), b.cols_[c].end());
    m.cols_[c] = merge_column(std::move(col));
  }
  return m;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) { return a + FieldElement(-1) * b; }

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.space_ == b.space_)) throw UsageError("matrix spaces differ");
  SuperMatrix m(a.space_);
  for (std::uint32_t c = 0; c < b.dim(); ++c) {
    SuperMatrix::Column acc;
    for (const auto& [k, bv] : b.cols_[c]) {
      for (const auto& [r, av] : a.cols_[k]) acc.emplace_back(r, av * bv);
    }
    m.cols_[c] = merge_column(std::move(acc));
  }
  return m;
}

SuperMatrix operator*(const FieldElement& c, const SuperMatrix& a) {
  SuperMatrix m(a.space_);
  if (c.is_zero()) return m;
  for (std::uint32_t k = 0; k < a.dim(); ++k) {
    for (const auto& [r, v] : a.cols_[k]) m.cols_[k].emplace_back(r, c * v);
  }
  return m;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.space_ == b.space_ && a.cols_ == b.cols_; }

MonomialOp MonomialOp::identity(std::uint32_t dim) {
  MonomialOp op;
  op.image.resize(dim);
  op.sign.assign(dim, 1);
  for (std::uint32_t s = 0; s < dim; ++s) op.image[s] = s;
  return op;
}

SuperMatrix MonomialOp::to_matrix(const SuperSpace& space) const {
  SuperMatrix m(space);
  for (std::uint32_t s = 0; s < dim(); ++s) {
    if (image[s] != kNone) m.set_column(s, {{image[s], sign_of(sign[s])}});
  }
  return m;
}

MonomialOp operator*(const MonomialOp& a, const MonomialOp& b) {
  MonomialOp op;
  op.image.assign(b.dim(), MonomialOp::kNone);
  op.sign.assign(b.dim(), 0);
  for (std::uint32_t s = 0; s < b.dim(); ++s) {
    std::uint32_t t = b.image[s];
    if (t == MonomialOp::kNone || a.image[t] == MonomialOp::kNone) continue;
    op.image[s] = a.image[t];
    op.sign[s] = static_cast<std::int8_t>(a.sign[t] * b.sign[s]);
  }
  return op;
}

MonomialOp site_unit_op(const SuperSpace& sp, int s, int i, int j) {
  check_site(sp, s);
  check_letter(sp, i);
  check_letter(sp, j);
  MonomialOp op;
  op.image.assign(sp.dim(), MonomialOp::kNone);
  op.sign.assign(sp.dim(), 0);
  int deg = odd(i) + odd(j);
  for (std::uint32_t st = 0; st < sp.dim(); ++st) {
    if (sp.letter_at(st, s) != j) continue;
    op.image[st] = sp.with_letter(st, s, i);
    op.sign[st] = static_cast<std::int8_t>((deg * sp.parity_before(st, s)) % 2 ? -1 : 1);
  }
  return op;
}

MonomialOp j_op(const SuperSpace& sp, int s) {
  check_site(sp, s);
  // J = sum_j E_{j,-j} (-1)^{deg j}; only j = -x acts on a letter x, and E_{j,-j} is odd.
  MonomialOp op;
  op.image.resize(sp.dim());
  op.sign.resize(sp.dim());
  for (std::uint32_t st = 0; st < sp.dim(); ++st) {
    int x = sp.letter_at(st, s);
    int sg = (odd(-x) + sp.parity_before(st, s)) % 2 ? -1 : 1;
    op.image[st] = sp.with_letter(st, s, -x);
    op.sign[st] = static_cast<std::int8_t>(sg);
  }
  return op;
}

MonomialOp p_op(const SuperSpace& sp, int k, int l) {
  check_site(sp, k);
  check_site(sp, l);
  if (k == l) throw UsageError("p_op needs distinct sites");
  // P_kl = sum_{i,j} (-1)^{deg j} iota_k(E_ij) iota_l(E_ji). On a state with letters x at k and
  // y at l only the term i = y, j = x survives.
  MonomialOp op;
  op.image.resize(sp.dim());
  op.sign.resize(sp.dim());
  for (std::uint32_t st = 0; st < sp.dim(); ++st) {
    int x = sp.letter_at(st, k), y = sp.letter_at(st, l);
    int deg = odd(x) + odd(y);
    int e = odd(x);
    e += deg * sp.parity_before(st, l);
    std::uint32_t mid = sp.with_letter(st, l, x);
    e += deg * sp.parity_before(mid, k);
    op.image[st] = sp.with_letter(mid, k, y);
    op.sign[st] = static_cast<std::int8_t>(e % 2 ? -1 : 1);
  }
  return op;
}

MonomialOp basis_op(const SuperSpace& sp, BasisKey key) {
  int n = sp.n();
  const GeneratorOps& gen = generator_ops(sp);
  // g = t_1 t_2 ... t_m with t_r = (k, h(k)) peeled off from the left
  Perm h = key_perm(key, n);
  MonomialOp op = MonomialOp::identity(sp.dim());
  for (int k = 1; k <= n; ++k) {
    int hk = h(k);
    if (hk == k) continue;
    op = op * gen.p[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(hk - 1)];
    h = Perm::transposition(n, k, hk) * h;
  }
  for (int i : key_mono(key).indices()) op = op * gen.j[static_cast<std::size_t>(i - 1)];
  return op;
}

SuperMatrix site_matrix_unit(int s, int i, int j, int N, int n) {
  SuperSpace sp(N, n);
  return site_unit_op(sp, s, i, j).to_matrix(sp);
}

SuperMatrix j_matrix(int s, int N, int n) {
  SuperSpace sp(N, n);
  return j_op(sp, s).to_matrix(sp);
}

SuperMatrix p_matrix(int k, int l, int N, int n) {
  SuperSpace sp(N, n);
  return p_op(sp, k, l).to_matrix(sp);
}

SuperMatrix rep(const SergeevElement& x, int N) {
  SuperSpace sp(N, x.n());
  std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>> cols(sp.dim());
  for (const auto& [key, c] : x.terms()) {
    MonomialOp op = basis_op(sp, key);
    for (std::uint32_t s = 0; s < sp.dim(); ++s) {
      cols[s].emplace_back(op.image[s], op.sign[s] > 0 ? c : -c);
    }
  }
  SuperMatrix m(sp);
  for (std::uint32_t s = 0; s < sp.dim(); ++s) m.set_column(s, std::move(cols[s]));
  return m;
}

std::vector<FieldElement> rep_apply(const SergeevElement& x, const SuperSpace& sp, const std::vector<FieldElement>& v) {
  if (x.n() != sp.n() && !x.is_zero()) throw UsageError("rank mismatch in rep_apply");
  if (v.size() != sp.dim()) throw UsageError("vector length does not match the space");
  std::vector<FieldElement> out(sp.dim());
  for (const auto& [key, c] : x.terms()) {
    MonomialOp op = basis_op(sp, key);
    for (std::uint32_t s = 0; s < sp.dim(); ++s) {
      if (v[s].is_zero()) continue;
      FieldElement t = c * v[s];
      if (op.sign[s] > 0) out[op.image[s]] += t;
      else out[op.image[s]] -= t;
    }
  }
  return out;
}

FieldElement supertrace(const SuperMatrix& a) {
  FieldElement t;
  for (std::uint32_t s = 0; s < a.dim(); ++s) {
    FieldElement d = a.entry(s, s);
    if (d.is_zero()) continue;
    if (a.space().parity(s)) t -= d;
    else t += d;
  }
  return t;
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) throw UsageError("supercommutator needs homogeneous matrices");
  SuperMatrix ba = b * a;
  return (da * db) % 2 ? a * b + ba : a * b - ba;
}

void Subspace::reduce(std::vector<FieldElement>& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    FieldElement f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const auto& b = basis_[k];
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!b[i].is_zero()) v[i] -= f * b[i];
    }
  }
}

bool Subspace::contains(std::vector<FieldElement> v) const {
  if (v.size() != dim_) throw UsageError("vector length does not match the subspace");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool Subspace::insert(std::vector<FieldElement> v) {
  if (v.size() != dim_) throw UsageError("vector length does not match the subspace");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  FieldElement s = inv(v[p]);
  for (auto& x : v) {
    if (!x.is_zero()) x = x * s;
  }
  for (auto& b : basis_) {
    FieldElement f = b[p];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!v[i].is_zero()) b[i] -= f * v[i];
    }
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

const CharacterModule& character_module(const StrictPartition& lambda) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const CharacterModule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda.parts());
    if (it != cache.end()) return *it->second;
  }
  int n = lambda.size();
  if (n < 1) throw UsageError("empty partition has no character module");
  SuperSpace sp(lambda.length(), n);
  const SergeevElement& p = psi_cached(lambda);

  // Any nonzero column of R_lambda generates a submodule of an isotypic module.
  std::vector<FieldElement> seed;
  for (std::uint32_t s = 0; s < sp.dim() && seed.empty(); ++s) {
    std::vector<FieldElement> e(sp.dim());
    e[s] = FieldElement(1);
    auto col = rep_apply(p, sp, e);
    if (std::any_of(col.begin(), col.end(), [](const FieldElement& x) { return !x.is_zero(); })) seed = std::move(col);
  }
  if (seed.empty()) throw Error("R_lambda vanishes for " + lambda.str());

  const GeneratorOps& gen = generator_ops(sp);
  std::vector<const MonomialOp*> gens;
  for (int s = 0; s < n; ++s) gens.push_back(&gen.j[static_cast<std::size_t>(s)]);
  for (int k = 0; k + 1 < n; ++k) gens.push_back(&gen.p[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)]);

  Subspace basis(sp.dim());
  std::deque<std::vector<FieldElement>> queue;
  basis.insert(seed);
  queue.push_back(std::move(seed));
  while (!queue.empty()) {
    std::vector<FieldElement> v = std::move(queue.front());
    queue.pop_front();
    for (const MonomialOp* g : gens) {
      std::vector<FieldElement> w(sp.dim());
      for (std::uint32_t s = 0; s < sp.dim(); ++s) {
        if (v[s].is_zero()) continue;
        w[g->image[s]] = g->sign[s] > 0 ? v[s] : -v[s];
      }
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  auto value = std::make_shared<const CharacterModule>(CharacterModule{lambda, sp, std::move(basis)});
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(lambda.parts(), value);
  return *it->second;
}

FieldElement char_chi_basis(const StrictPartition& lambda, BasisKey h) {
  const CharacterModule& mod = character_module(lambda);
  MonomialOp op = basis_op(mod.space, h);
  auto src = preimages(op);
  FieldElement tr;
  const auto& b = mod.basis.basis();
  const auto& piv = mod.basis.pivots();
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::uint32_t s = src[piv[k]];
    const FieldElement& x = b[k][s];
    if (x.is_zero()) continue;
    if (op.sign[s] > 0) tr += x;
    else tr -= x;
  }
  return tr * inv(FieldElement(static_cast<std::int64_t>(b.size())));
}

FieldElement char_chi(const StrictPartition& lambda, const SergeevElement& h) {
  if (h.n() != lambda.size() && !h.is_zero()) throw UsageError("element rank does not match the partition");
  FieldElement t;
  for (const auto& [key, c] : h.terms()) t += c * char_chi_basis(lambda, key);
  return t;
}

SergeevElement x_lambda(const StrictPartition& lambda) {
  int n = lambda.size();
  std::vector<SergeevElement::Term> terms;
  for (BasisKey h : all_basis_keys(n)) {
    FieldElement c = char_chi_basis(lambda, h);
    if (c.is_zero()) continue;
    auto [hinv, sg] = basis_star(h, n);
    terms.emplace_back(hinv, sg > 0 ? c : -c);
  }
  return SergeevElement::from_terms(n, std::move(terms));
}

bool verify_x_lambda_average(const StrictPartition& lambda) {
  int n = lambda.size();
  const SergeevElement& p = psi_cached(lambda);
  std::unordered_map<BasisKey, FieldElement> acc;
  auto keys = all_basis_keys(n);
  for (BasisKey h : keys) {
    auto [hinv, s0] = basis_star(h, n);
    for (const auto& [k, c] : p.terms()) {
      auto [hk, s1] = basis_product(h, k, n);
      auto [r, s2] = basis_product(hk, hinv, n);
      int sg = s0 * s1 * s2;
      if (sg > 0) acc[r] += c;
      else acc[r] -= c;
    }
  }
  std::vector<SergeevElement::Term> terms(acc.begin(), acc.end());
  SergeevElement rhs = SergeevElement::from_terms(n, std::move(terms));
  FieldElement order(static_cast<std::int64_t>(keys.size()));
  return order * x_lambda(lambda) == rhs;
}

bool verify_central_eigenvalue(const StrictPartition& lambda, int r) {
  if (r < 1) throw UsageError("r must be at least 1");
  int n = lambda.size();
  SergeevElement c(n);
  for (int k = 1; k <= n; ++k) c += power(jm_element(k, n), 2 * r);
  FieldElement value;
  for (const auto& z : z_values(lambda)) {
    FieldElement z2 = z * z, zp(1);
    for (int e = 0; e < r; ++e) zp = zp * z2;
    value += zp;
  }
  const SergeevElement& p = psi_cached(lambda);
  if (c * p != value * p) return false;
  const CharacterModule& mod = character_module(lambda);
  for (const auto& b : mod.basis.basis()) {
    auto img = rep_apply(c, mod.space, b);
    for (std::size_t s = 0; s < b.size(); ++s) {
      if (img[s] != value * b[s]) return false;
    }
  }
  return true;
}

std::vector<CharacterClass> character_table(const StrictPartition& lambda) {
  int n = lambda.size();
  auto keys = all_basis_keys(n);
  std::vector<BasisKey> gens;
  for (int k = 1; k < n; ++k) gens.push_back(make_key(Perm::transposition(n, k, k + 1), CliffordMono{}));
  for (int k = 1; k <= n; ++k) gens.push_back(make_key(Perm::identity(n), CliffordMono::from_indices({k})));
  std::unordered_map<BasisKey, bool> seen;
  std::vector<CharacterClass> out;
  for (BasisKey start : keys) {
    if (seen.count(start)) continue;
    std::vector<BasisKey> orbit = {start};
    seen[start] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (BasisKey g : gens) {
        auto [ginv, s0] = basis_star(g, n);
        auto [gx, s1] = basis_product(g, orbit[q], n);
        auto [y, s2] = basis_product(gx, ginv, n);
        (void)s0;
        (void)s1;
        (void)s2;
        if (!seen.count(y)) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    BasisKey rep_key = *std::min_element(orbit.begin(), orbit.end());
    out.push_back({rep_key, orbit.size(), char_chi_basis(lambda, rep_key)});
  }
  std::sort(out.begin(), out.end(), [](const CharacterClass& a, const CharacterClass& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace qcapelli
