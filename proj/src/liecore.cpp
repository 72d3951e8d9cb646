#include "qlie/liecore.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlie {

StructureTensor StructureTensor::empty(int dim) {
  StructureTensor t;
  t.dim = dim;
  t.upper.assign(static_cast<std::size_t>(dim) * dim, {});
  return t;
}

const SparseCoords& StructureTensor::at_upper(int a, int b) const {
  return upper[static_cast<std::size_t>(a) * dim + b];
}

void StructureTensor::set_upper(int a, int b, SparseCoords coords) {
  if (a >= b) throw std::logic_error("structure tensor stores pairs a < b");
  upper[static_cast<std::size_t>(a) * dim + b] = std::move(coords);
}

SparseCoords StructureTensor::bracket_basis_sparse(int a, int b) const {
  if (a == b) return {};
  if (a < b) return at_upper(a, b);
  SparseCoords c = at_upper(b, a);
  for (auto& [e, v] : c) v = -v;
  return c;
}

RealVector StructureTensor::bracket_basis(int a, int b) const {
  RealVector out(dim, Rational(0));
  if (a == b) return out;
  int sign = a < b ? 1 : -1;
  for (const auto& [e, v] : at_upper(std::min(a, b), std::max(a, b)))
    out[e] = sign > 0 ? v : -v;
  return out;
}

RealVector StructureTensor::bracket(const RealVector& x, const RealVector& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("bracket: coordinate length mismatch");
  RealVector out(dim, Rational(0));
  for (int a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b] == 0 || a == b) continue;
      Rational f = x[a] * y[b];
      int lo = std::min(a, b), hi = std::max(a, b);
      if (a > b) f = -f;
      for (const auto& [e, v] : at_upper(lo, hi)) out[e] += f * v;
    }
  }
  return out;
}

MatrixQ LieAlgebra::matrix_of(const RealVector& coords) const {
  if (coords.size() != basis.size())
    throw std::invalid_argument("coordinate length does not match basis size");
  MatrixQ acc(matrix_size(), matrix_size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coords[b] == 0) continue;
    acc = acc + coords[b] * basis[b];
  }
  return acc;
}

namespace {

// Exhaustive Jacobi check over basis triples; returns first violation.
std::optional<std::array<int, 3>> find_jacobi_violation(const StructureTensor& t) {
  const int d = t.dim;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c) {
        RealVector acc(d, Rational(0));
        auto accumulate = [&](int u, int v, int w) {
          // [[u,v], w]
          for (const auto& [e, val] : t.at_upper(u, v)) {
            if (e == w) continue;
            int lo = std::min(e, w), hi = std::max(e, w);
            Rational f = e < w ? val : -val;
            for (const auto& [g, x] : t.at_upper(lo, hi)) acc[g] += f * x;
          }
        };
        // [[b,c],a] + [[a,b],c] - [[a,c],b]
        accumulate(b, c, a);
        accumulate(a, b, c);
        for (auto& v : acc) v = -v;
        accumulate(a, c, b);
        for (const auto& v : acc)
          if (v != 0) return std::array<int, 3>{a, b, c};
      }
  return std::nullopt;
}

}  // namespace

LieAlgebra close_and_structure(std::string name, std::vector<MatrixQ> basis,
                               const CloseOptions& options) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  const int sz = basis.front().rows;
  for (const auto& m : basis)
    if (!m.is_square() || m.rows != sz)
      throw std::invalid_argument("basis matrices must be square and equally sized");

  const int d = static_cast<int>(basis.size());
  SpanSolver coords(4 * sz * sz);
  for (int b = 0; b < d; ++b)
    if (!coords.add(flatten(basis[b]))) throw std::invalid_argument("dependent basis");

  LieAlgebra algebra;
  algebra.name = std::move(name);
  algebra.basis = std::move(basis);
  algebra.structure = StructureTensor::empty(d);

  struct PairResult {
    bool ok = true;
    SparseCoords coords;
  };
  std::vector<PairResult> results(static_cast<std::size_t>(d) * d);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      MatrixQ comm = commutator(algebra.basis[a], algebra.basis[b]);
      auto expressed = coords.express_sparse(flatten_sparse(comm));
      PairResult& r = results[static_cast<std::size_t>(a) * d + b];
      if (!expressed) {
        r.ok = false;
        continue;
      }
      for (int e = 0; e < d; ++e)
        if ((*expressed)[e] != 0) r.coords.emplace_back(e, (*expressed)[e]);
    }
  }

  for (int a = 0; a < d && algebra.is_closed; ++a)
    for (int b = a + 1; b < d; ++b) {
      PairResult& r = results[static_cast<std::size_t>(a) * d + b];
      if (!r.ok) {
        algebra.is_closed = false;
        algebra.escape_witness = {a, b};
        break;
      }
      algebra.structure.set_upper(a, b, std::move(r.coords));
    }

  if (algebra.is_closed && options.check_jacobi) {
    if (auto bad = find_jacobi_violation(algebra.structure))
      throw std::logic_error("assembled structure tensor violates the Jacobi identity");
  }
  return algebra;
}

Subspace center(const LieAlgebra& algebra) {
  const int d = algebra.dim();
  // unknowns x_a; equations indexed (b, f): sum_a x_a c[a][b][f] = 0
  std::vector<SparseCoords> rows(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (const auto& [f, v] : algebra.structure.at_upper(a, b)) {
        rows[static_cast<std::size_t>(b) * d + f].emplace_back(a, v);
        rows[static_cast<std::size_t>(a) * d + f].emplace_back(b, -v);
      }
  std::vector<SparseRow> sys;
  sys.reserve(rows.size());
  for (auto& r : rows)
    if (!r.empty()) sys.push_back(sparse_from_pairs(std::move(r)));
  return kernel_sparse(d, std::move(sys));
}

Subspace centralizer(const LieAlgebra& algebra, const Subspace& s) {
  const int d = algebra.dim();
  if (s.ambient_dim() != d)
    throw std::invalid_argument("centralizer: subspace not in the coordinate space of L");
  std::vector<SparseRow> sys;
  for (const auto& gen : s.basis()) {
    // rows indexed f: sum_a x_a [e_a, gen]_f = 0
    std::vector<SparseCoords> rows(d);
    for (int a = 0; a < d; ++a) {
      RealVector w = algebra.structure.bracket(unit_vector(d, a), gen);
      for (int f = 0; f < d; ++f)
        if (w[f] != 0) rows[f].emplace_back(a, w[f]);
    }
    for (auto& r : rows)
      if (!r.empty()) sys.push_back(sparse_from_pairs(std::move(r)));
  }
  return kernel_sparse(d, std::move(sys));
}

RealVector ad_endo(const StructureTensor& t, const RealVector& x) {
  const int d = t.dim;
  RealVector endo(static_cast<std::size_t>(d) * d, Rational(0));
  for (int e = 0; e < d; ++e) {
    RealVector col = t.bracket(x, unit_vector(d, e));
    for (int f = 0; f < d; ++f)
      if (col[f] != 0) endo[static_cast<std::size_t>(f) * d + e] = col[f];
  }
  return endo;
}

std::vector<SparseRow> derivation_rows(const StructureTensor& t) {
  const int d = t.dim;
  // ad matrices in sparse row-major form: ad[a].row[f] = {(e, c[a][e][f])}
  std::vector<std::vector<SparseCoords>> ad(d, std::vector<SparseCoords>(d));
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (const auto& [f, v] : t.at_upper(a, b)) {
        ad[a][f].emplace_back(b, v);
        ad[b][f].emplace_back(a, -v);
      }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) pairs.emplace_back(a, b);

  std::vector<std::vector<SparseRow>> blocks(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [a, b] = pairs[p];
    const SparseCoords& cab = t.at_upper(a, b);
    std::vector<SparseRow>& out = blocks[p];
    for (int f = 0; f < d; ++f) {
      SparseCoords row;
      for (const auto& [e, v] : cab) row.emplace_back(f * d + e, v);
      for (const auto& [e, v] : ad[b][f]) row.emplace_back(e * d + a, v);
      for (const auto& [e, v] : ad[a][f]) row.emplace_back(e * d + b, -v);
      if (row.empty()) continue;
      SparseRow r = sparse_from_pairs(std::move(row));
      if (!r.empty()) out.push_back(std::move(r));
    }
  }

  std::vector<SparseRow> rows;
  for (auto& blk : blocks)
    for (auto& r : blk) rows.push_back(std::move(r));
  return rows;
}

Subspace derivations(const StructureTensor& t) {
  return kernel_sparse(t.dim * t.dim, derivation_rows(t));
}

Subspace derivations_serial(const StructureTensor& t) {
  return kernel_sparse_serial(t.dim * t.dim, derivation_rows(t));
}

RealVector jacobiator(const StructureTensor& t, const RealVector& x, const RealVector& y,
                      const RealVector& z) {
  RealVector acc = t.bracket(t.bracket(y, z), x);
  acc = vec_add(acc, t.bracket(t.bracket(x, y), z));
  acc = vec_add(acc, t.bracket(t.bracket(z, x), y));
  return acc;
}

LieCheck is_lie_algebra(const StructureTensor& t) {
  LieCheck r;
  if (auto bad = find_jacobi_violation(t)) {
    r.is_lie = false;
    r.witness = bad;
  } else {
    r.is_lie = true;
  }
  return r;
}

int sym_index(int m, int i, int j) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle
  return i * m - i * (i - 1) / 2 + (j - i);
}

std::optional<RealVector> coords_in_subspace(const Subspace& s, const RealVector& v) {
  // echelon basis: the coefficient of basis row r is v[pivot_r]
  RealVector coeffs(s.dim(), Rational(0));
  RealVector rem = v;
  for (int r = 0; r < s.dim(); ++r) {
    const RealVector& row = s.basis()[r];
    int pivot = -1;
    for (int c = 0; c < s.ambient_dim(); ++c)
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    Rational f = rem[pivot];
    if (f == 0) continue;
    coeffs[r] = f;
    for (int c = pivot; c < s.ambient_dim(); ++c)
      if (row[c] != 0) rem[c] -= f * row[c];
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coeffs;
}

InvariantForms invariant_symmetric_forms(const LieAlgebra& algebra,
                                         const std::vector<RealVector>& acting,
                                         const Subspace& m) {
  const int d = algebra.dim();
  const int md = m.dim();
  if (m.ambient_dim() != d)
    throw std::invalid_argument("module subspace not in the coordinate space of L");
  const int na = static_cast<int>(acting.size());

  InvariantForms out;
  out.actions.assign(na, {});
  for (int a = 0; a < na; ++a) {
    std::vector<RealVector> cols(md);
    for (int j = 0; j < md; ++j) {
      RealVector w = algebra.structure.bracket(acting[a], m.basis()[j]);
      auto c = coords_in_subspace(m, w);
      if (!c) throw AdStabilityError(a, j);
      cols[j] = std::move(*c);
    }
    out.actions[a] = std::move(cols);
  }

  const int unknowns = md * (md + 1) / 2;
  std::vector<SparseRow> sys;
  for (int a = 0; a < na; ++a) {
    const auto& cols = out.actions[a];  // cols[j][e] = (R_a)_{e j}
    for (int p = 0; p < md; ++p)
      for (int q = p; q < md; ++q) {
        SparseCoords row;
        for (int e = 0; e < md; ++e) {
          if (cols[p][e] != 0) row.emplace_back(sym_index(md, e, q), cols[p][e]);
          if (cols[q][e] != 0) row.emplace_back(sym_index(md, p, e), cols[q][e]);
        }
        if (row.empty()) continue;
        SparseRow r = sparse_from_pairs(std::move(row));
        if (!r.empty()) sys.push_back(std::move(r));
      }
  }
  out.forms = kernel_sparse(unknowns, std::move(sys));
  return out;
}

InvariantForms invariant_symmetric_forms(const LieAlgebra& algebra, const Subspace& m) {
  std::vector<RealVector> acting;
  for (int a = 0; a < algebra.dim(); ++a) acting.push_back(unit_vector(algebra.dim(), a));
  return invariant_symmetric_forms(algebra, acting, m);
}

bool symmetric_pair_check(const LieAlgebra& algebra, const Subspace& t, const Subspace& w) {
  const int d = algebra.dim();
  if (t.ambient_dim() != d || w.ambient_dim() != d)
    throw std::invalid_argument("symmetric pair: ambient dimension mismatch");
  Subspace sum = subspace_sum(t, w);
  if (t.dim() + w.dim() != d || sum.dim() != d)
    throw std::invalid_argument("symmetric pair: not a direct sum decomposition");

  auto bracket_into = [&](const Subspace& a, const Subspace& b, const Subspace& target) {
    for (const auto& u : a.basis())
      for (const auto& v : b.basis())
        if (!target.contains(algebra.structure.bracket(u, v))) return false;
    return true;
  };
  return bracket_into(t, t, t) && bracket_into(t, w, w) && bracket_into(w, w, t);
}

const Subspace& GradedDecomposition::part(const std::string& label) const {
  for (const auto& [name, sub] : parts)
    if (name == label) return sub;
  throw std::out_of_range("no decomposition part labelled " + label);
}

DecompositionReport validate_decomposition(const LieAlgebra& parent,
                                           const GradedDecomposition& decomposition,
                                           bool check_b_orthogonality) {
  DecompositionReport report;
  const int d = parent.dim();
  int total = 0;
  std::vector<RealVector> all;
  for (const auto& [label, sub] : decomposition.parts) {
    total += sub.dim();
    all.insert(all.end(), sub.basis().begin(), sub.basis().end());
  }
  Subspace join = Subspace::from_spanning(d, all);
  report.direct_sum = (total == d && join.dim() == d);

  report.b_orthogonal = true;
  if (check_b_orthogonality) {
    std::vector<std::vector<MatrixQ>> mats;
    for (const auto& [label, sub] : decomposition.parts) {
      std::vector<MatrixQ> part_mats;
      for (const auto& v : sub.basis()) part_mats.push_back(parent.matrix_of(v));
      mats.push_back(std::move(part_mats));
    }
    for (std::size_t p = 0; p < mats.size() && report.b_orthogonal; ++p)
      for (std::size_t q = p + 1; q < mats.size() && report.b_orthogonal; ++q)
        for (const auto& x : mats[p]) {
          for (const auto& y : mats[q])
            if (re_trace_form(x, y) != 0) {
              report.b_orthogonal = false;
              break;
            }
          if (!report.b_orthogonal) break;
        }
  }
  return report;
}

}  // namespace qlie
