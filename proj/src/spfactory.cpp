#include "qlie/spfactory.hpp"

#include <stdexcept>

namespace qlie {

namespace {

Subspace coordinate_range(int ambient, int begin, int count) {
  std::vector<RealVector> units;
  units.reserve(count);
  for (int t = 0; t < count; ++t) units.push_back(unit_vector(ambient, begin + t));
  return Subspace::from_spanning(ambient, units);
}

MatrixQ signature_matrix(const Signature& sig) {
  MatrixQ m(sig.n(), sig.n());
  for (int d = 0; d < sig.n(); ++d) m.at(d, d) = Quaternion(Rational(sig.slot_sign(d)));
  return m;
}

std::string sig_str(const Signature& sig) {
  return "(" + std::to_string(sig.k) + "," + std::to_string(sig.l) + ")";
}

// hermitian sign of complex coordinate t in (e_s, e^s) order
int coord_sign(const Signature& sig, int t) { return sig.slot_sign(t % sig.n()); }

MatrixQ cscale(const GaussianRational& c, const MatrixQ& m) {
  MatrixQ r = m;
  Quaternion q = to_quaternion(c);
  for (auto& e : r.entries) e = q * e;
  return r;
}

GaussianRational gaussian_of(const Quaternion& q) {
  if (!q.is_gaussian()) throw std::logic_error("matrix entry is not Gaussian");
  return {q.re, q.im_i};
}

}  // namespace

const char* variant_name(Variant v) {
  return v == Variant::add_to_l ? "add_to_l" : "add_to_k";
}

LieAlgebra build_sp(const Signature& sig) {
  const int n = sig.n();
  if (n < 1) throw std::invalid_argument("signature needs k + l >= 1");
  std::vector<MatrixQ> basis;
  basis.reserve(static_cast<std::size_t>(n) * (2 * n + 1));
  for (int d = 0; d < n; ++d)
    for (int q = 1; q <= 3; ++q) {
      MatrixQ m(n, n);
      m.at(d, d) = Quaternion::unit(q);
      basis.push_back(std::move(m));
    }
  for (int d = 0; d < n; ++d)
    for (int e = d + 1; e < n; ++e)
      for (int q = 0; q < 4; ++q) {
        MatrixQ m(n, n);
        m.at(d, e) = Quaternion::unit(q);
        m.at(e, d) = Rational(-sig.slot_sign(d) * sig.slot_sign(e)) * conj(Quaternion::unit(q));
        basis.push_back(std::move(m));
      }

  const MatrixQ ikl = signature_matrix(sig);
  for (const auto& x : basis)
    if (!(mat_mul(conj_transpose(x), ikl) + mat_mul(ikl, x)).is_zero())
      throw std::logic_error("sp basis element violates the defining relation");

  LieAlgebra algebra = close_and_structure("sp" + sig_str(sig), std::move(basis));
  if (!algebra.is_closed) throw std::logic_error("sp(k,l) failed to close");
  return algebra;
}

CVec cvec_unit(int two_n, int index) {
  CVec v(two_n);
  v[index] = GaussianRational(1);
  return v;
}

GaussianRational hermitian_form(const Signature& sig, const CVec& x, const CVec& y) {
  GaussianRational acc;
  for (std::size_t t = 0; t < x.size(); ++t) {
    GaussianRational term = conj(x[t]) * y[t];
    acc = coord_sign(sig, static_cast<int>(t)) > 0 ? acc + term : acc - term;
  }
  return acc;
}

GaussianRational symplectic_form(const Signature& sig, const CVec& x, const CVec& y) {
  const int n = sig.n();
  GaussianRational acc;
  for (int s = 0; s < n; ++s) {
    GaussianRational term = x[s] * y[n + s] - x[n + s] * y[s];
    acc = sig.slot_sign(s) > 0 ? acc + term : acc - term;
  }
  return acc;
}

MatrixQ sigma_involution(const Signature& sig, const MatrixQ& x) {
  const int n = sig.n();
  MatrixQ j(2 * n, 2 * n);
  for (int s = 0; s < n; ++s) {
    j.at(s, n + s) = Quaternion(Rational(sig.slot_sign(s)));
    j.at(n + s, s) = Quaternion(Rational(-sig.slot_sign(s)));
  }
  return mat_mul(mat_mul(j, transpose(x)), j);
}

MatrixQ realify_linear(const MatrixQ& complex_mat) {
  const int m = complex_mat.rows;
  MatrixQ r(2 * m, 2 * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      GaussianRational z = gaussian_of(complex_mat.at(s, t));
      r.at(s, t) = Quaternion(z.re);
      r.at(s, t + m) = Quaternion(-z.im);
      r.at(s + m, t) = Quaternion(z.im);
      r.at(s + m, t + m) = Quaternion(z.re);
    }
  return r;
}

MatrixQ realify_antilinear(const MatrixQ& complex_mat) {
  const int m = complex_mat.rows;
  MatrixQ r(2 * m, 2 * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      GaussianRational z = gaussian_of(complex_mat.at(s, t));
      r.at(s, t) = Quaternion(z.re);
      r.at(s, t + m) = Quaternion(z.im);
      r.at(s + m, t) = Quaternion(z.im);
      r.at(s + m, t + m) = Quaternion(-z.re);
    }
  return r;
}

SuDecomposition build_su(const Signature& sig) {
  const int n = sig.n();
  const int two_n = 2 * n;
  std::vector<MatrixQ> basis;
  for (int a = 1; a < two_n; ++a) {
    MatrixQ m(two_n, two_n);
    m.at(0, 0) = Quaternion::unit_i();
    m.at(a, a) = -Quaternion::unit_i();
    basis.push_back(std::move(m));
  }
  for (int a = 0; a < two_n; ++a)
    for (int b = a + 1; b < two_n; ++b) {
      int hab = coord_sign(sig, a) * coord_sign(sig, b);
      MatrixQ m1(two_n, two_n);
      m1.at(a, b) = Quaternion::one();
      m1.at(b, a) = Quaternion(Rational(-hab));
      basis.push_back(std::move(m1));
      MatrixQ m2(two_n, two_n);
      m2.at(a, b) = Quaternion::unit_i();
      m2.at(b, a) = Rational(hab) * Quaternion::unit_i();
      basis.push_back(std::move(m2));
    }

  SuDecomposition dec;
  dec.sig = sig;
  dec.su = close_and_structure("su(" + std::to_string(2 * sig.k) + "," +
                                   std::to_string(2 * sig.l) + ")",
                               std::move(basis));
  if (!dec.su.is_closed) throw std::logic_error("su failed to close");

  const int d = dec.su.dim();
  SpanSolver coords(4 * two_n * two_n);
  for (const auto& x : dec.su.basis) coords.add(flatten(x));

  std::vector<RealVector> plus, minus;
  for (const auto& x : dec.su.basis) {
    MatrixQ sx = sigma_involution(sig, x);
    if (sigma_involution(sig, sx) != x) throw std::logic_error("sigma is not involutive");
    auto p = coords.express(flatten(x + sx));
    auto m = coords.express(flatten(x - sx));
    if (!p || !m) throw std::logic_error("sigma does not preserve su");
    plus.push_back(std::move(*p));
    minus.push_back(std::move(*m));
  }
  dec.sp_part = Subspace::from_spanning(d, plus);
  dec.w0 = Subspace::from_spanning(d, minus);

  LieAlgebra sp = build_sp(sig);
  for (const auto& x : sp.basis) {
    auto c = coords.express(flatten(quat_to_complex(x)));
    if (!c) throw std::logic_error("quat_to_complex image escapes su");
    dec.psi_coords.push_back(std::move(*c));
  }
  if (Subspace::from_spanning(d, dec.psi_coords) != dec.sp_part)
    throw std::logic_error("fixed space of sigma differs from the sp(k,l) image");
  if (dec.sp_part.dim() != n * (2 * n + 1) || dec.w0.dim() != n * (2 * n - 1) - 1)
    throw std::logic_error("unexpected eigenspace dimensions in su split");
  return dec;
}

MatrixQ build_S_map(const Signature& sig, const CVec& x, const CVec& y) {
  const int two_n = 2 * sig.n();
  MatrixQ m(two_n, two_n);
  std::vector<GaussianRational> wx(two_n), wy(two_n);
  for (int t = 0; t < two_n; ++t) {
    CVec et = cvec_unit(two_n, t);
    wx[t] = symplectic_form(sig, x, et);
    wy[t] = symplectic_form(sig, y, et);
  }
  for (int s = 0; s < two_n; ++s)
    for (int t = 0; t < two_n; ++t)
      m.at(s, t) = to_quaternion(wx[t] * y[s] - wy[t] * x[s]);
  return m;
}

MatrixQ t0_complex(const Signature& sig, const CVec& x, const CVec& y) {
  const int two_n = 2 * sig.n();
  MatrixQ m(two_n, two_n);
  for (int s = 0; s < two_n; ++s)
    for (int t = 0; t < two_n; ++t) {
      GaussianRational v = conj(x[t]) * y[s] - conj(y[t]) * x[s];
      if (coord_sign(sig, t) < 0) v = -v;
      m.at(s, t) = to_quaternion(v);
    }
  return m;
}

MatrixQ t1_antilinear(const Signature& sig, const CVec& x, const CVec& y) {
  const int two_n = 2 * sig.n();
  MatrixQ m(two_n, two_n);
  for (int s = 0; s < two_n; ++s)
    for (int t = 0; t < two_n; ++t) {
      GaussianRational v = x[t] * y[s] - y[t] * x[s];
      if (coord_sign(sig, t) < 0) v = -v;
      m.at(s, t) = to_quaternion(v);
    }
  return m;
}

MatrixQ build_T_map(int s, const Signature& sig, const CVec& x, const CVec& y) {
  if (s == 0) return realify_linear(t0_complex(sig, x, y));
  if (s == 1) return realify_antilinear(t1_antilinear(sig, x, y));
  if (s != 2) throw std::invalid_argument("T map index must be 0, 1 or 2");
  const int two_n = 2 * sig.n();
  auto realify_vec = [&](const CVec& v) {
    RealVector r(2 * two_n, Rational(0));
    for (int t = 0; t < two_n; ++t) {
      r[t] = v[t].re;
      r[two_n + t] = v[t].im;
    }
    return r;
  };
  RealVector xr = realify_vec(x), yr = realify_vec(y);
  MatrixQ m(2 * two_n, 2 * two_n);
  for (int u = 0; u < 2 * two_n; ++u)
    for (int v = 0; v < 2 * two_n; ++v) {
      Rational val = (yr[u] * xr[v] - xr[u] * yr[v]) * Rational(coord_sign(sig, v % two_n));
      m.at(u, v) = Quaternion(val);
    }
  return m;
}

std::array<int, 2> SoDecomposition::part_range(const char* label) const {
  int begin = 0;
  for (const auto& [name, sub] : parts.parts) {
    if (name == label) return {begin, begin + sub.dim()};
    begin += sub.dim();
  }
  throw std::out_of_range("no such part");
}

SoDecomposition build_so_decomposition(const Signature& sig) {
  const int n = sig.n();
  if (n < 2) throw std::invalid_argument("so decomposition needs k + l >= 2");
  const int two_n = 2 * n, four_n = 4 * n;

  SuDecomposition su_dec = build_su(sig);
  LieAlgebra sp = build_sp(sig);

  std::vector<MatrixQ> basis;
  // sp(k,l), realified through its complex picture
  for (const auto& x : sp.basis) basis.push_back(realify_linear(quat_to_complex(x)));

  // the three explicit operators spanning the commuting sp(1)
  {
    MatrixQ a1(four_n, four_n), a2(four_n, four_n), a3(four_n, four_n);
    for (int t = 0; t < two_n; ++t) {
      a1.at(t, two_n + t) = Quaternion(Rational(1));
      a1.at(two_n + t, t) = Quaternion(Rational(-1));
    }
    for (int s = 0; s < n; ++s) {
      a2.at(s, n + s) = Quaternion(Rational(-1));
      a2.at(n + s, s) = Quaternion(Rational(1));
      a2.at(2 * n + s, 3 * n + s) = Quaternion(Rational(1));
      a2.at(3 * n + s, 2 * n + s) = Quaternion(Rational(-1));
      a3.at(s, 3 * n + s) = Quaternion(Rational(1));
      a3.at(n + s, 2 * n + s) = Quaternion(Rational(-1));
      a3.at(2 * n + s, n + s) = Quaternion(Rational(1));
      a3.at(3 * n + s, s) = Quaternion(Rational(-1));
    }
    basis.push_back(std::move(a1));
    basis.push_back(std::move(a2));
    basis.push_back(std::move(a3));
  }

  // V0: the -1 eigenspace of sigma, realified
  std::vector<MatrixQ> w0_mats;
  for (const auto& c : su_dec.w0.basis()) w0_mats.push_back(su_dec.su.matrix_of(c));
  for (const auto& y : w0_mats) basis.push_back(realify_linear(y));

  // wedge preimages: solve S(eta) = Y over the real span of the basis wedges
  std::vector<std::pair<int, int>> wedge_pairs;
  for (int a = 0; a < two_n; ++a)
    for (int b = a + 1; b < two_n; ++b) wedge_pairs.emplace_back(a, b);

  std::vector<MatrixQ> s_mats, t1_mats;
  SpanSolver s_span(4 * two_n * two_n);
  for (const auto& [a, b] : wedge_pairs) {
    CVec ea = cvec_unit(two_n, a), eb = cvec_unit(two_n, b);
    MatrixQ sm = build_S_map(sig, ea, eb);
    t1_mats.push_back(t1_antilinear(sig, ea, eb));
    if (!s_span.add(flatten(sm))) throw std::logic_error("S map degenerate on basis wedges");
    if (!s_span.add(flatten(cscale({Rational(0), Rational(1)}, sm))))
      throw std::logic_error("S map degenerate on basis wedges");
    s_mats.push_back(std::move(sm));
  }

  std::vector<MatrixQ> v1, v2;
  for (const auto& y : w0_mats) {
    auto coeffs = s_span.express(flatten(y));
    if (!coeffs) throw std::logic_error("sigma complement has no wedge preimage");
    MatrixQ m_eta(two_n, two_n), m_ieta(two_n, two_n);
    for (std::size_t p = 0; p < wedge_pairs.size(); ++p) {
      GaussianRational c{(*coeffs)[2 * p], (*coeffs)[2 * p + 1]};
      if (c.is_zero()) continue;
      m_eta = m_eta + cscale(c, t1_mats[p]);
      m_ieta = m_ieta + cscale(c * GaussianRational{Rational(0), Rational(1)}, t1_mats[p]);
    }
    v1.push_back(realify_antilinear(m_eta));
    v2.push_back(realify_antilinear(m_ieta));
  }
  for (const auto& m : v1) basis.push_back(m);
  for (const auto& m : v2) basis.push_back(m);

  // defining relation X^t Q + Q X = 0 for every basis element
  MatrixQ q(four_n, four_n);
  for (int t = 0; t < four_n; ++t)
    q.at(t, t) = Quaternion(Rational(coord_sign(sig, t % two_n)));
  for (const auto& x : basis)
    if (!(mat_mul(transpose(x), q) + mat_mul(q, x)).is_zero())
      throw std::logic_error("so basis element violates the defining relation");

  SoDecomposition dec;
  dec.sig = sig;
  dec.dim_sp = sp.dim();
  dec.dim_module = n * (2 * n - 1) - 1;
  dec.so = close_and_structure("so(" + std::to_string(4 * sig.k) + "," +
                                   std::to_string(4 * sig.l) + ")",
                               std::move(basis));
  if (!dec.so.is_closed) throw std::logic_error("so failed to close");
  if (dec.so.dim() != 2 * n * (4 * n - 1))
    throw std::logic_error("so has the wrong dimension");

  const int d = dec.so.dim();
  int at = 0;
  auto push_range = [&](const char* label, int count) {
    dec.parts.parts.emplace_back(label, coordinate_range(d, at, count));
    at += count;
  };
  push_range("sp", dec.dim_sp);
  push_range("sp1", 3);
  push_range("V0", dec.dim_module);
  push_range("V1", dec.dim_module);
  push_range("V2", dec.dim_module);
  return dec;
}

MatrixQ EmbeddingData::iota(const MatrixQ& x, const Quaternion& zeta,
                            const std::vector<Quaternion>& z) const {
  const int n = sig.n();
  if (x.rows != n || x.cols != n || static_cast<int>(z.size()) != n)
    throw std::invalid_argument("iota: block sizes do not match the signature");
  MatrixQ m(n + 1, n + 1);
  if (variant == Variant::add_to_l) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = x.at(r, c);
    for (int d = 0; d < n; ++d) {
      m.at(d, n) = -z[d];
      m.at(n, d) = Rational(-sig.slot_sign(d)) * conj(z[d]);
    }
    m.at(n, n) = zeta;
  } else {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r + 1, c + 1) = x.at(r, c);
    for (int d = 0; d < n; ++d) {
      m.at(0, d + 1) = Rational(-sig.slot_sign(d)) * conj(z[d]);
      m.at(d + 1, 0) = z[d];
    }
    m.at(0, 0) = zeta;
  }
  return m;
}

MatrixQ EmbeddingData::iota_v(const std::vector<Quaternion>& z) const {
  MatrixQ zero(sig.n(), sig.n());
  return iota(zero, Quaternion(), z);
}

EmbeddingData build_embedding(const Signature& sig, Variant variant) {
  const int n = sig.n();
  if (n < 1) throw std::invalid_argument("signature needs k + l >= 1");

  EmbeddingData e;
  e.sig = sig;
  e.variant = variant;
  e.h_sig = variant == Variant::add_to_l ? Signature{sig.k, sig.l + 1}
                                         : Signature{sig.k + 1, sig.l};
  LieAlgebra g = build_sp(sig);
  e.dim_g = g.dim();
  e.dim_v = 4 * n;

  std::vector<MatrixQ> adapted;
  std::vector<Quaternion> zero_col(n, Quaternion());
  MatrixQ zero_mat(n, n);
  for (const auto& x : g.basis) adapted.push_back(e.iota(x, Quaternion(), zero_col));
  for (int q = 1; q <= 3; ++q) adapted.push_back(e.iota(zero_mat, Quaternion::unit(q), zero_col));
  for (int d = 0; d < n; ++d)
    for (int q = 0; q < 4; ++q) {
      std::vector<Quaternion> z(n, Quaternion());
      z[d] = Quaternion::unit(q);
      adapted.push_back(e.iota_v(z));
    }

  auto h = close_and_structure("sp" + sig_str(e.h_sig) + "|" + variant_name(variant),
                               std::move(adapted));
  if (!h.is_closed) throw std::logic_error("embedded algebra failed to close");
  e.h = std::make_shared<const LieAlgebra>(std::move(h));

  // the adapted basis spans the same algebra as the plain construction
  {
    LieAlgebra plain = build_sp(e.h_sig);
    std::vector<RealVector> fa, fb;
    for (const auto& x : e.h->basis) fa.push_back(flatten(x));
    for (const auto& x : plain.basis) fb.push_back(flatten(x));
    int amb = static_cast<int>(fa.front().size());
    if (Subspace::from_spanning(amb, fa) != Subspace::from_spanning(amb, fb))
      throw std::logic_error("adapted basis does not span sp of the extended signature");
  }

  const int d = e.dim();
  e.parts.parts.emplace_back("g", coordinate_range(d, e.g_begin(), e.dim_g));
  e.parts.parts.emplace_back("k", coordinate_range(d, e.k_begin(), 3));
  e.parts.parts.emplace_back("V", coordinate_range(d, e.v_begin(), e.dim_v));

  auto report = validate_decomposition(*e.h, e.parts, true);
  if (!report.direct_sum || !report.b_orthogonal)
    throw std::logic_error("embedding decomposition is not B-orthogonal");
  Subspace gk = subspace_sum(e.parts.part("g"), e.parts.part("k"));
  if (!symmetric_pair_check(*e.h, gk, e.parts.part("V")))
    throw std::logic_error("embedding does not give a symmetric pair");
  return e;
}

OmegaValue omega_bracket(const EmbeddingData& e, const std::vector<Quaternion>& z,
                         const std::vector<Quaternion>& w) {
  const int n = e.sig.n();
  if (static_cast<int>(z.size()) != n || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("omega_bracket: columns must have length k + l");
  const int sign = e.variant == Variant::add_to_l ? 1 : -1;
  OmegaValue out;
  out.g_part = MatrixQ(n, n);
  for (int dd = 0; dd < n; ++dd)
    for (int ee = 0; ee < n; ++ee) {
      Quaternion val = z[dd] * conj(w[ee]) - w[dd] * conj(z[ee]);
      out.g_part.at(dd, ee) = Rational(sign * e.sig.slot_sign(ee)) * val;
    }
  Quaternion kp;
  for (int dd = 0; dd < n; ++dd)
    kp += Rational(e.sig.slot_sign(dd)) * (conj(z[dd]) * w[dd] - conj(w[dd]) * z[dd]);
  out.k_part = sign > 0 ? kp : -kp;

  if (!out.k_part.is_imaginary()) throw std::logic_error("omega k-part must be imaginary");
  const MatrixQ ikl = signature_matrix(e.sig);
  if (!(mat_mul(conj_transpose(out.g_part), ikl) + mat_mul(ikl, out.g_part)).is_zero())
    throw std::logic_error("omega g-part escapes sp(k,l)");
  return out;
}

NonAssocAlgebra build_h_rs(const EmbeddingData& e, const OmegaParams& p) {
  const int d = e.dim();
  NonAssocAlgebra a;
  a.name = "h_{" + rational_to_string(p.r) + "," + rational_to_string(p.s) + "}" +
           sig_str(e.sig) + variant_name(e.variant);
  a.ambient = e.h;
  a.product = StructureTensor::empty(d);
  for (int x = 0; x < d; ++x) a.basis_in_ambient.push_back(unit_vector(d, x));
  a.m_basis = Subspace::full(d);
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y) {
      SparseCoords coords = e.h->structure.at_upper(x, y);
      if (x >= e.v_begin() && y >= e.v_begin()) {
        SparseCoords scaled;
        for (const auto& [idx, v] : coords) {
          if (idx >= e.v_begin())
            throw std::logic_error("V x V bracket escapes g + k");
          Rational f = idx < e.k_begin() ? p.r * v : p.s * v;
          if (f != 0) scaled.emplace_back(idx, std::move(f));
        }
        coords = std::move(scaled);
      }
      a.product.set_upper(x, y, std::move(coords));
    }
  return a;
}

PhiRescaleResult phi_rescale_iso(const EmbeddingData& e, const Rational& t) {
  if (t == 0) throw std::invalid_argument("rescaling parameter must be nonzero");
  const int d = e.dim();
  const Rational r = t * t;
  NonAssocAlgebra hrr = build_h_rs(e, {r, r});

  PhiRescaleResult out;
  out.is_isomorphism = true;
  for (int x = 0; x < d && out.is_isomorphism; ++x)
    for (int y = x + 1; y < d; ++y) {
      // Phi applied to the deformed bracket
      RealVector lhs(d, Rational(0));
      for (const auto& [idx, v] : hrr.product.at_upper(x, y))
        lhs[idx] = idx >= e.v_begin() ? t * v : v;
      // bracket of the rescaled generators in h
      Rational factor(1);
      if (x >= e.v_begin()) factor *= t;
      if (y >= e.v_begin()) factor *= t;
      RealVector rhs(d, Rational(0));
      for (const auto& [idx, v] : e.h->structure.at_upper(x, y)) rhs[idx] = factor * v;
      if (lhs != rhs) {
        out.is_isomorphism = false;
        break;
      }
    }

  out.endo.assign(static_cast<std::size_t>(d) * d, Rational(0));
  for (int i = 0; i < d; ++i)
    out.endo[static_cast<std::size_t>(i) * d + i] = i >= e.v_begin() ? t : Rational(1);
  return out;
}

int m_index_of_h_index(const EmbeddingData& e, int h_index) {
  if (h_index < e.k_begin()) return h_index;
  if (h_index >= e.v_begin()) return h_index - 3;
  throw std::logic_error("index lies in the k factor");
}

NonAssocAlgebra build_m_algebra(const EmbeddingData& e) {
  const int d = e.dim();
  const int md = e.dim_g + e.dim_v;

  // B must be nondegenerate on k and on m before projecting along k
  std::vector<MatrixQ> k_mats, m_mats;
  for (int t = 0; t < 3; ++t) k_mats.push_back(e.h->basis[e.k_begin() + t]);
  for (int t = 0; t < e.dim_g; ++t) m_mats.push_back(e.h->basis[t]);
  for (int t = 0; t < e.dim_v; ++t) m_mats.push_back(e.h->basis[e.v_begin() + t]);
  if (gram_rank(k_mats) != 3) throw std::logic_error("B degenerate on k");
  if (gram_rank(m_mats) != md) throw std::logic_error("B degenerate on m");

  auto h_index = [&](int m_idx) {
    return m_idx < e.dim_g ? m_idx : m_idx + 3;
  };

  NonAssocAlgebra a;
  a.name = "m" + sig_str(e.sig) + variant_name(e.variant);
  a.ambient = e.h;
  a.product = StructureTensor::empty(md);
  for (int x = 0; x < md; ++x) a.basis_in_ambient.push_back(unit_vector(d, h_index(x)));
  a.m_basis = Subspace::from_spanning(d, a.basis_in_ambient);

  for (int x = 0; x < md; ++x)
    for (int y = x + 1; y < md; ++y) {
      const bool xg = x < e.dim_g, yg = y < e.dim_g;
      SparseCoords out;
      for (const auto& [idx, v] : e.h->structure.at_upper(h_index(x), h_index(y))) {
        const bool in_g = idx < e.k_begin();
        const bool in_k = !in_g && idx < e.v_begin();
        if (xg && yg && !in_g)
          throw std::logic_error("[g,g] escapes g");
        if (xg != yg && (in_g || in_k))
          throw std::logic_error("[g,V] escapes V");
        if (!xg && !yg && idx >= e.v_begin())
          throw std::logic_error("[V,V] escapes g + k");
        if (in_k) continue;  // orthogonal projection along k
        out.emplace_back(m_index_of_h_index(e, idx), v);
      }
      a.product.set_upper(x, y, std::move(out));
    }
  return a;
}

WitnessTriple pa2_witness(const EmbeddingData& e) {
  const int n = e.sig.n();
  WitnessTriple w;
  if (e.variant == Variant::add_to_l) {
    if (e.sig.l < 1)
      throw std::invalid_argument("witness block needs a negative slot in g");
    w.slot = e.sig.k;  // first slot with sign -1
    w.block = {w.slot, n};
  } else {
    if (e.sig.k < 1)
      throw std::invalid_argument("witness block needs a positive slot in g");
    w.slot = 0;
    w.block = {w.slot + 1, 0};
  }
  const int md = e.dim_g + e.dim_v;
  for (int q = 0; q < 3; ++q)
    w.xyz[q] = unit_vector(md, e.dim_g + 4 * w.slot + q);
  return w;
}

int gram_rank(const std::vector<MatrixQ>& mats) {
  const int m = static_cast<int>(mats.size());
  std::vector<RealVector> rows;
  for (int i = 0; i < m; ++i) {
    RealVector row(m);
    for (int j = 0; j < m; ++j) row[j] = re_trace_form(mats[i], mats[j]);
    rows.push_back(std::move(row));
  }
  return m - kernel(rows).dim();
}

}  // namespace qlie
