#include "qlie/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlie {

RealVector vec_add(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RealVector r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] + b[t];
  return r;
}

RealVector vec_sub(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RealVector r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = a[t] - b[t];
  return r;
}

RealVector vec_scale(const Rational& s, const RealVector& a) {
  RealVector r(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) r[t] = s * a[t];
  return r;
}

bool vec_is_zero(const RealVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RealVector unit_vector(std::size_t ambient, std::size_t index) {
  RealVector v(ambient, Rational(0));
  v.at(index) = 1;
  return v;
}

MatrixQ::MatrixQ(int r, int c) : rows(r), cols(c) {
  if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  entries.assign(static_cast<std::size_t>(r) * c, Quaternion());
}

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

bool MatrixQ::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

MatrixQ MatrixQ::operator-() const {
  MatrixQ r = *this;
  for (auto& e : r.entries) e = -e;
  return r;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix size mismatch");
  MatrixQ r = a;
  for (std::size_t t = 0; t < r.entries.size(); ++t) r.entries[t] += b.entries[t];
  return r;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix size mismatch");
  MatrixQ r = a;
  for (std::size_t t = 0; t < r.entries.size(); ++t) r.entries[t] -= b.entries[t];
  return r;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ r = a;
  for (auto& e : r.entries) e = s * e;
  return r;
}

MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
  MatrixQ r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int s = 0; s < a.cols; ++s) {
      const Quaternion& ais = a.at(i, s);
      if (ais.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) {
        const Quaternion& bsj = b.at(s, j);
        if (bsj.is_zero()) continue;
        r.at(i, j) += ais * bsj;
      }
    }
  return r;
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) {
  if (!a.is_square() || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("commutator needs square matrices of equal size");
  return mat_mul(a, b) - mat_mul(b, a);
}

MatrixQ conj_transpose(const MatrixQ& a) {
  MatrixQ r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = conj(a.at(i, j));
  return r;
}

MatrixQ transpose(const MatrixQ& a) {
  MatrixQ r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Quaternion trace(const MatrixQ& a) {
  if (!a.is_square()) throw std::invalid_argument("trace needs a square matrix");
  Quaternion t;
  for (int i = 0; i < a.rows; ++i) t += a.at(i, i);
  return t;
}

Rational re_trace_form(const MatrixQ& a, const MatrixQ& b) {
  if (!a.is_square() || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("trace form needs square matrices of equal size");
  Rational acc(0);
  for (int i = 0; i < a.rows; ++i)
    for (int s = 0; s < a.cols; ++s) {
      const Quaternion& x = a.at(i, s);
      const Quaternion& y = b.at(s, i);
      // Re(xy) only
      acc += x.re * y.re - x.im_i * y.im_i - x.im_j * y.im_j - x.im_k * y.im_k;
    }
  return acc;
}

RealVector flatten(const MatrixQ& m) {
  RealVector v;
  v.reserve(m.entries.size() * 4);
  for (const auto& q : m.entries) {
    v.push_back(q.re);
    v.push_back(q.im_i);
    v.push_back(q.im_j);
    v.push_back(q.im_k);
  }
  return v;
}

std::vector<std::pair<int, Rational>> flatten_sparse(const MatrixQ& m) {
  std::vector<std::pair<int, Rational>> v;
  for (std::size_t t = 0; t < m.entries.size(); ++t) {
    const Quaternion& q = m.entries[t];
    for (int c = 0; c < 4; ++c) {
      const Rational& x = q.component(c);
      if (x != 0) v.emplace_back(static_cast<int>(4 * t) + c, x);
    }
  }
  return v;
}

MatrixQ quat_to_complex(const MatrixQ& a) {
  if (!a.is_square()) throw std::invalid_argument("quat_to_complex needs a square matrix");
  const int n = a.rows;
  MatrixQ r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = a.at(i, j);
      // q = z + j w, z = re + i im_i, w = im_j - i im_k
      GaussianRational z{q.re, q.im_i}, w{q.im_j, -q.im_k};
      r.at(i, j) = to_quaternion(z);
      r.at(i, j + n) = to_quaternion(-conj(w));
      r.at(i + n, j) = to_quaternion(w);
      r.at(i + n, j + n) = to_quaternion(conj(z));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Sparse integer rows.

namespace {

void normalize_row(SparseRow& r) {
  if (r.nz.empty()) return;
  BigInt g(0);
  for (const auto& [c, v] : r.nz) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (r.nz.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r.nz) v /= g;
}

/*
 * The elimination loop is the hot path of the whole library and GMP values
 * are heap-backed, so the merge works on persistent thread-local buffers:
 * assignments into existing entries reuse their limb storage and steady
 * state runs without allocation. This also keeps each worker thread's
 * arithmetic inside its own malloc arena.
 */
struct RowBuf {
  std::vector<std::pair<int, BigInt>> v;
  std::size_t len = 0;

  void ensure(std::size_t cap) {
    if (v.size() < cap) v.resize(cap);
  }
  void swap(RowBuf& o) {
    v.swap(o.v);
    std::swap(len, o.len);
  }
};

struct Scratch {
  RowBuf cur, tmp;
  BigInt t1, t2;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// out = a*cur - b*p over the merged support
void axpy_buf(Scratch& s, RowBuf& out, const RowBuf& r, const BigInt& a, const BigInt& b,
              const SparseRow& p) {
  out.ensure(r.len + p.nz.size());
  std::size_t w = 0, i = 0, j = 0;
  const std::size_t pn = p.nz.size();
  while (i < r.len || j < pn) {
    if (j == pn || (i < r.len && r.v[i].first < p.nz[j].first)) {
      out.v[w].first = r.v[i].first;
      out.v[w].second = a * r.v[i].second;
      ++w;
      ++i;
    } else if (i == r.len || p.nz[j].first < r.v[i].first) {
      out.v[w].first = p.nz[j].first;
      out.v[w].second = b * p.nz[j].second;
      out.v[w].second = -out.v[w].second;
      ++w;
      ++j;
    } else {
      s.t1 = a * r.v[i].second;
      s.t2 = b * p.nz[j].second;
      s.t1 -= s.t2;
      if (s.t1 != 0) {
        out.v[w].first = r.v[i].first;
        out.v[w].second = s.t1;
        ++w;
      }
      ++i;
      ++j;
    }
  }
  out.len = w;
}

void normalize_buf(Scratch& s, RowBuf& r) {
  if (r.len == 0) return;
  BigInt& g = s.t1;
  g = 0;
  for (std::size_t i = 0; i < r.len; ++i) {
    g = gcd(g, r.v[i].second);
    if (g == 1) break;
  }
  if (r.v[0].second < 0) g = -g;
  if (g != 1)
    for (std::size_t i = 0; i < r.len; ++i) r.v[i].second /= g;
}

void load_buf(RowBuf& buf, const SparseRow& row) {
  buf.ensure(row.nz.size());
  for (std::size_t i = 0; i < row.nz.size(); ++i) {
    buf.v[i].first = row.nz[i].first;
    buf.v[i].second = row.nz[i].second;
  }
  buf.len = row.nz.size();
}

void store_buf(const RowBuf& buf, SparseRow& row) {
  row.nz.resize(buf.len);
  for (std::size_t i = 0; i < buf.len; ++i) {
    row.nz[i].first = buf.v[i].first;
    row.nz[i].second = buf.v[i].second;
  }
}

}  // namespace

SparseRow sparse_from_rational(const RealVector& v) {
  BigInt l(1);
  for (const auto& x : v)
    if (x != 0) l = lcm(l, denominator(x));
  SparseRow r;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    r.nz.emplace_back(static_cast<int>(t), numerator(v[t]) * (l / denominator(v[t])));
  }
  normalize_row(r);
  return r;
}

SparseRow sparse_from_pairs(std::vector<std::pair<int, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicate indices
  std::vector<std::pair<int, Rational>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  BigInt l(1);
  for (const auto& [c, x] : merged)
    if (x != 0) l = lcm(l, denominator(x));
  SparseRow r;
  for (const auto& [c, x] : merged) {
    if (x == 0) continue;
    r.nz.emplace_back(c, numerator(x) * (l / denominator(x)));
  }
  normalize_row(r);
  return r;
}

void RrefBuilder::reduce(SparseRow& row) const {
  if (row.nz.empty()) return;
  // Every stored row has support {pivot} U (non-pivot columns > pivot), so
  // one ascending sweep eliminates all pivot hits.
  Scratch& s = scratch();
  load_buf(s.cur, row);
  std::size_t i = 0;
  bool touched = false;
  while (i < s.cur.len) {
    int col = s.cur.v[i].first;
    int ri = col < static_cast<int>(row_of_col_.size()) ? row_of_col_[col] : -1;
    if (ri < 0) {
      ++i;
      continue;
    }
    const SparseRow& p = rows_[ri];
    axpy_buf(s, s.tmp, s.cur, p.nz.front().second, s.cur.v[i].second, p);
    s.cur.swap(s.tmp);
    normalize_buf(s, s.cur);
    touched = true;
    // entries at indices < col are untouched; resume at the first
    // index >= col (col itself is gone)
    while (i < s.cur.len && s.cur.v[i].first < col) ++i;
  }
  if (touched) store_buf(s.cur, row);
}

bool RrefBuilder::insert(SparseRow row) {
  reduce(row);
  if (row.empty()) return false;
  normalize_row(row);
  int piv = row.lead();
  if (piv >= ambient_) throw std::logic_error("row index out of ambient range");
  if (static_cast<int>(row_of_col_.size()) < ambient_) row_of_col_.resize(ambient_, -1);

  // keep rows_ ordered by pivot column
  auto pos = std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_of_row_.begin());
  rows_.insert(rows_.begin() + idx, std::move(row));
  pivot_of_row_.insert(pos, piv);
  for (int c = 0; c < ambient_; ++c)
    if (row_of_col_[c] >= static_cast<int>(idx)) ++row_of_col_[c];
  row_of_col_[piv] = static_cast<int>(idx);

  // back-substitute the new pivot out of the older rows
  Scratch& s = scratch();
  const SparseRow& p = rows_[idx];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == idx) continue;
    auto it = std::lower_bound(rows_[r].nz.begin(), rows_[r].nz.end(), piv,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == rows_[r].nz.end() || it->first != piv) continue;
    load_buf(s.cur, rows_[r]);
    axpy_buf(s, s.tmp, s.cur, p.nz.front().second, it->second, p);
    normalize_buf(s, s.tmp);
    store_buf(s.tmp, rows_[r]);
  }
  return true;
}

void RrefBuilder::insert_batch(std::vector<SparseRow> rows) {
  // While the rank is still growing, plain insertion is the fastest order;
  // parallel pre-reduction only pays off once most incoming rows reduce to
  // zero against a near-final echelon. Rows that survive a pre-reduced
  // panel are re-reduced by insert(), which also covers pivots created
  // inside the same panel.
  constexpr std::size_t kPanel = 1024;
  const bool worth_threads = rows.size() >= 4096 && ambient_ >= 256;
  std::size_t t = 0;
  std::size_t stale = 0;  // rows since the last rank increase
  while (t < rows.size() && (stale < kPanel || !worth_threads)) {
    stale = insert(std::move(rows[t])) ? 0 : stale + 1;
    ++t;
  }
  while (t < rows.size()) {
    std::size_t end = std::min(rows.size(), t + kPanel);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::size_t u = t; u < end; ++u) reduce(rows[u]);
    for (std::size_t u = t; u < end; ++u)
      if (!rows[u].empty()) insert(std::move(rows[u]));
    t = end;
  }
}

std::vector<int> RrefBuilder::pivot_columns() const { return pivot_of_row_; }

std::vector<RealVector> RrefBuilder::rational_rows() const {
  std::vector<RealVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    RealVector v(ambient_, Rational(0));
    const BigInt& lead = r.nz.front().second;
    for (const auto& [c, x] : r.nz) v[c] = Rational(x, lead);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RealVector> RrefBuilder::kernel_vectors() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (int p : pivot_of_row_) is_pivot[p] = true;
  std::vector<RealVector> out;
  for (int f = 0; f < ambient_; ++f) {
    if (is_pivot[f]) continue;
    RealVector v(ambient_, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const SparseRow& row = rows_[r];
      auto it = std::lower_bound(row.nz.begin(), row.nz.end(), f,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it != row.nz.end() && it->first == f)
        v[pivot_of_row_[r]] = Rational(-it->second, row.nz.front().second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace.

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (int t = 0; t < ambient; ++t) {
    s.basis_.push_back(unit_vector(ambient, t));
    s.pivots_.push_back(t);
  }
  return s;
}

Subspace Subspace::from_spanning(int ambient, const std::vector<RealVector>& vectors) {
  RrefBuilder b(ambient);
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("spanning vector has wrong ambient dimension");
    rows.push_back(sparse_from_rational(v));
  }
  b.insert_batch(std::move(rows));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = b.rational_rows();
  s.pivots_ = b.pivot_columns();
  return s;
}

Subspace Subspace::from_rref(int ambient, std::vector<RealVector> rref_rows) {
  // trusted input: rows already reduced; recompute pivots only
  Subspace s;
  s.ambient_ = ambient;
  for (auto& r : rref_rows) {
    int p = -1;
    for (int c = 0; c < ambient; ++c)
      if (r[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) continue;
    s.pivots_.push_back(p);
    s.basis_.push_back(std::move(r));
  }
  return s;
}

RealVector Subspace::reduce(RealVector v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector has wrong ambient dimension");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    Rational f = c;  // basis rows have leading 1
    for (int t = pivots_[r]; t < ambient_; ++t)
      if (basis_[r][t] != 0) v[t] -= f * basis_[r][t];
  }
  return v;
}

bool Subspace::contains(const RealVector& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace sum needs equal ambient dimensions");
  std::vector<RealVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::from_spanning(a.ambient_dim(), all);
}

Subspace kernel_sparse(int ambient, std::vector<SparseRow> rows) {
  RrefBuilder b(ambient);
  b.insert_batch(std::move(rows));
  return Subspace::from_spanning(ambient, b.kernel_vectors());
}

Subspace kernel_sparse_serial(int ambient, std::vector<SparseRow> rows) {
  RrefBuilder b(ambient);
  for (auto& r : rows) b.insert(std::move(r));
  std::vector<RealVector> kv = b.kernel_vectors();
  RrefBuilder canon(ambient);
  for (const auto& v : kv) canon.insert(sparse_from_rational(v));
  return Subspace::from_rref(ambient, canon.rational_rows());
}

namespace {
std::vector<SparseRow> to_sparse_rows(const std::vector<RealVector>& rows, int& ambient) {
  ambient = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<SparseRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("kernel rows must all have the same length");
    out.push_back(sparse_from_rational(r));
  }
  return out;
}
}  // namespace

Subspace kernel(const std::vector<RealVector>& rows) {
  int ambient = 0;
  auto sparse = to_sparse_rows(rows, ambient);
  return kernel_sparse(ambient, std::move(sparse));
}

Subspace kernel_serial(const std::vector<RealVector>& rows) {
  int ambient = 0;
  auto sparse = to_sparse_rows(rows, ambient);
  return kernel_sparse_serial(ambient, std::move(sparse));
}

bool span_membership(const RealVector& v, const Subspace& s) {
  if (static_cast<int>(v.size()) != s.ambient_dim())
    throw std::invalid_argument("span membership: ambient dimension mismatch");
  return s.contains(v);
}

// ---------------------------------------------------------------------------
// SpanSolver.

namespace {

using SRat = std::vector<std::pair<int, Rational>>;

SRat srat_axpy(const SRat& r, const Rational& b, const SRat& p) {
  // r - b*p
  SRat out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Rational v = r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SpanSolver::SRat SpanSolver::reduce(SRat target, std::vector<Rational>& comb) const {
  std::size_t i = 0;
  while (i < target.size()) {
    int col = target[i].first;
    auto it = std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), col);
    if (it == pivot_of_row_.end() || *it != col) {
      ++i;
      continue;
    }
    const Row& row = rows_[static_cast<std::size_t>(it - pivot_of_row_.begin())];
    Rational f = target[i].second / row.main.front().second;
    target = srat_axpy(target, f, row.main);
    for (std::size_t g = 0; g < row.comb.size(); ++g)
      if (row.comb[g] != 0) comb[g] -= f * row.comb[g];
    i = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), col,
                                                  [](const auto& e, int c) {
                                                    return e.first < c;
                                                  }) -
                                 target.begin());
  }
  return target;
}

bool SpanSolver::add_sparse(const SRat& gen) {
  std::vector<Rational> comb(static_cast<std::size_t>(n_gens_) + 1, Rational(0));
  comb[n_gens_] = 1;
  for (auto& row : rows_) row.comb.resize(n_gens_ + 1, Rational(0));
  ++n_gens_;
  SRat reduced = reduce(gen, comb);
  if (reduced.empty()) return false;
  int piv = reduced.front().first;
  auto pos = std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_of_row_.begin());
  rows_.insert(rows_.begin() + idx, Row{std::move(reduced), std::move(comb)});
  pivot_of_row_.insert(pos, piv);
  return true;
}

bool SpanSolver::add(const RealVector& gen) {
  if (static_cast<int>(gen.size()) != ambient_)
    throw std::invalid_argument("generator has wrong ambient dimension");
  SRat s;
  for (std::size_t t = 0; t < gen.size(); ++t)
    if (gen[t] != 0) s.emplace_back(static_cast<int>(t), gen[t]);
  return add_sparse(s);
}

std::optional<std::vector<Rational>> SpanSolver::express_sparse(const SRat& target) const {
  std::vector<Rational> comb(n_gens_, Rational(0));
  std::vector<Rational> padded = comb;
  SRat rem = reduce(target, padded);
  if (!rem.empty()) return std::nullopt;
  for (auto& c : padded) c = -c;
  return padded;
}

std::optional<std::vector<Rational>> SpanSolver::express(const RealVector& target) const {
  SRat s;
  for (std::size_t t = 0; t < target.size(); ++t)
    if (target[t] != 0) s.emplace_back(static_cast<int>(t), target[t]);
  return express_sparse(s);
}

}  // namespace qlie
