#include "qlie/verifier.hpp"

#include "qlie/prng.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace qlie {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

std::string sig_str(const Signature& s) {
  return std::to_string(s.k) + "," + std::to_string(s.l);
}

// Lazily built shared constructions; several checks look at the same
// algebras, so everything is cached per signature (and variant).
struct RunContext {
  RunConfig cfg;
  std::map<std::pair<int, int>, LieAlgebra> sp;
  std::map<std::pair<int, int>, SuDecomposition> su;
  std::map<std::pair<int, int>, SoDecomposition> so;
  std::map<std::tuple<int, int, int>, EmbeddingData> emb;
  std::map<std::tuple<int, int, int>, NonAssocAlgebra> malg;

  const LieAlgebra& get_sp(const Signature& s) {
    auto key = std::make_pair(s.k, s.l);
    auto it = sp.find(key);
    if (it == sp.end()) it = sp.emplace(key, build_sp(s)).first;
    return it->second;
  }
  const SuDecomposition& get_su(const Signature& s) {
    auto key = std::make_pair(s.k, s.l);
    auto it = su.find(key);
    if (it == su.end()) it = su.emplace(key, build_su(s)).first;
    return it->second;
  }
  const SoDecomposition& get_so(const Signature& s) {
    auto key = std::make_pair(s.k, s.l);
    auto it = so.find(key);
    if (it == so.end()) it = so.emplace(key, build_so_decomposition(s)).first;
    return it->second;
  }
  const EmbeddingData& get_emb(const Signature& s, Variant v) {
    auto key = std::make_tuple(s.k, s.l, static_cast<int>(v));
    auto it = emb.find(key);
    if (it == emb.end()) it = emb.emplace(key, build_embedding(s, v)).first;
    return it->second;
  }
  const NonAssocAlgebra& get_m(const Signature& s, Variant v) {
    auto key = std::make_tuple(s.k, s.l, static_cast<int>(v));
    auto it = malg.find(key);
    if (it == malg.end()) it = malg.emplace(key, build_m_algebra(get_emb(s, v))).first;
    return it->second;
  }

  std::uint64_t check_seed(const std::string& id) const {
    std::uint64_t h = cfg.seed ^ 0x51e03f9cd9a651c3ULL;
    for (char c : id) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ULL;
    return h;
  }
};

// Records the first violation; later ones are not interesting.
struct Checker {
  bool ok = true;
  Json witness = Json::object();

  void require(bool cond, const std::string& what, Json detail = Json()) {
    if (!cond && ok) {
      ok = false;
      witness = Json{{"violated", what}};
      if (!detail.is_null()) witness["detail"] = std::move(detail);
    }
  }
};

Json dims_json(std::initializer_list<std::pair<const char*, BigInt>> items) {
  Json j = Json::object();
  for (const auto& [k, v] : items) j[k] = v.str();
  return j;
}

RealVector lift_m_to_h(const EmbeddingData& e, const RealVector& m_coords) {
  RealVector h_coords(e.dim(), Rational(0));
  for (int i = 0; i < static_cast<int>(m_coords.size()); ++i) {
    int hi = i < e.dim_g ? i : i + 3;
    h_coords[hi] = m_coords[i];
  }
  return h_coords;
}

std::vector<Quaternion> v_column(const Signature& sig, int slot, int unit) {
  std::vector<Quaternion> z(sig.n(), Quaternion());
  z[slot] = Quaternion::unit(unit);
  return z;
}

// ---------------------------------------------------------------------------
// Checks.

CheckResult check_wdf_closed_forms(RunContext& ctx) {
  CheckResult r{"WDF-closed-forms", "WDF",
                "the dimension product reproduces every quoted closed form: 2n, n(2n+1), "
                "n(2n-1)-1, the binomial difference for fundamental weights, and the three "
                "mixed-weight forms, over the configured ranks"};
  Checker c;
  Json table = Json::array();
  for (int n : ctx.cfg.rank_range) {
    auto w = [&](std::vector<int> m) { return weyl_dim(DominantWeight(n, std::move(m))); };
    std::vector<int> w1(n, 0), w2(n, 0), two_w1(n, 0), w1w3(n, 0), two_w2(n, 0), w1w2(n, 0);
    w1[0] = 1;
    w2[1] = 1;
    two_w1[0] = 2;
    w1w3[0] = 1;
    w1w3[2] = 1;
    two_w2[1] = 2;
    w1w2[0] = 1;
    w1w2[1] = 1;
    c.require(w(w1) == dim_first_fundamental(n), "dim V(w1) = 2n", Json{{"n", n}});
    c.require(w(two_w1) == dim_adjoint(n), "dim V(2w1) = n(2n+1)", Json{{"n", n}});
    c.require(w(w2) == dim_second_fundamental(n), "dim V(w2) = n(2n-1)-1", Json{{"n", n}});
    for (int k = 1; k <= n; ++k)
      c.require(weyl_dim(DominantWeight::fundamental(n, k)) == fundamental_dim(k, n),
                "dim V(w_k) equals the binomial difference", Json{{"n", n}, {"k", k}});
    c.require(w(w1w3) == dim_w1_plus_w3(n), "dim V(w1+w3) closed form", Json{{"n", n}});
    c.require(w(two_w2) == dim_two_w2(n), "dim V(2w2) closed form", Json{{"n", n}});
    c.require(w(w1w2) == dim_w1_plus_w2(n), "dim V(w1+w2) closed form", Json{{"n", n}});
    table.push_back(Json{{"n", n},
                         {"dims", dims_json({{"w1", w(w1)},
                                             {"w2", w(w2)},
                                             {"2w1", w(two_w1)},
                                             {"w1+w3", w(w1w3)},
                                             {"2w2", w(two_w2)},
                                             {"w1+w2", w(w1w2)}})}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"ranks", table}} : c.witness;
  return r;
}

CheckResult check_l14(RunContext& ctx) {
  CheckResult r{"L1.4", "L1.4",
                "for n > 3 every fundamental weight w_k with 3 <= k <= n has dimension "
                "strictly above n(2n+1)"};
  Checker c;
  Json seen = Json::array();
  for (int n : ctx.cfg.rank_range) {
    if (n <= 3) continue;
    c.require(check_L14(n), "D_k^n > n(2n+1)", Json{{"n", n}});
    seen.push_back(n);
  }
  if (seen.empty()) {
    r.status = CheckStatus::skipped;
    r.witness = Json{{"reason", "no configured rank exceeds 3"}};
    return r;
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"ranks", seen}} : c.witness;
  return r;
}

CheckResult check_c12_enum(RunContext& ctx) {
  CheckResult r{"C1.2-enum", "C1.2",
                "bounded enumeration below dim sp returns exactly {w1, w2, 2w1} for n = 4, 5 "
                "and {w1, w2, w3, 2w1} for n = 3"};
  Checker c;
  Json listing = Json::array();
  bool any = false;
  for (int n : ctx.cfg.rank_range) {
    if (n < 3 || n > 5) continue;
    any = true;
    BigInt bound = dim_adjoint(n);
    auto got = enumerate_small_reps(n, bound);
    std::set<std::vector<int>> expected;
    auto fund = [&](int k) {
      std::vector<int> m(n, 0);
      m[k - 1] = 1;
      return m;
    };
    expected.insert(fund(1));
    expected.insert(fund(2));
    std::vector<int> two_w1(n, 0);
    two_w1[0] = 2;
    expected.insert(two_w1);
    if (n == 3) expected.insert(fund(3));
    std::set<std::vector<int>> got_set;
    Json names = Json::array();
    for (const auto& wt : got) {
      got_set.insert(wt.coeffs);
      names.push_back(wt.to_string());
    }
    c.require(got_set == expected, "enumerated set differs from the classified list",
              Json{{"n", n}, {"got", names}});
    listing.push_back(Json{{"n", n}, {"bound", bound.str()}, {"weights", names}});
  }
  if (!any) {
    r.status = CheckStatus::skipped;
    r.witness = Json{{"reason", "no configured rank in 3..5"}};
    return r;
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"enumerations", listing}} : c.witness;
  return r;
}

CheckResult check_l11_dims(RunContext& ctx) {
  CheckResult r{"L1.1-dims", "L1.1",
                "n(2n+1) + dim V(w1+w3) equals C(dim V(w2), 2) for every configured rank"};
  Checker c;
  Json rows = Json::array();
  for (int n : ctx.cfg.rank_range) {
    c.require(check_L11_dims(n), "alternating-square dimension identity", Json{{"n", n}});
    BigInt d2 = dim_second_fundamental(n);
    rows.push_back(Json{{"n", n},
                        {"identity", dim_adjoint(n).str() + " + " + dim_w1_plus_w3(n).str() +
                                         " = C(" + d2.str() + ",2)"}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"identities", rows}} : c.witness;
  return r;
}

CheckResult check_realforms_su(RunContext& ctx) {
  CheckResult r{"realforms-su", "real-forms",
                "su(2k,2l) splits under the involution into the image of sp(k,l) and a "
                "complement of dimension n(2n-1)-1 whose brackets land back in the image"};
  Checker c;
  Json per_sig = Json::array();
  Prng rng(ctx.check_seed(r.check_id));
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    const SuDecomposition& dec = ctx.get_su(sig);
    const int d = dec.su.dim();
    c.require(d == 4 * n * n - 1, "dim su = 4n^2 - 1", Json{{"sig", sig_str(sig)}});
    c.require(dec.sp_part.dim() == n * (2 * n + 1), "fixed part has dim n(2n+1)",
              Json{{"sig", sig_str(sig)}});
    c.require(dec.w0.dim() == n * (2 * n - 1) - 1, "complement has dim n(2n-1)-1",
              Json{{"sig", sig_str(sig)}});
    for (const auto& x : dec.su.basis)
      c.require(sigma_involution(sig, sigma_involution(sig, x)) == x, "sigma squared = id",
                Json{{"sig", sig_str(sig)}});
    // [W0, W0] lands in the fixed part
    for (const auto& u : dec.w0.basis()) {
      for (const auto& v : dec.w0.basis()) {
        if (!dec.sp_part.contains(dec.su.structure.bracket(u, v))) {
          c.require(false, "[W0, W0] escapes the sp image", Json{{"sig", sig_str(sig)}});
          break;
        }
      }
      if (!c.ok) break;
    }
    // module dimension agrees with the weight computation
    c.require(BigInt(dec.w0.dim()) == weyl_dim(DominantWeight::fundamental(n, 2)),
              "dim W0 equals dim V(w2)", Json{{"sig", sig_str(sig)}});
    // seeded spot check: the complex picture is a star ring homomorphism
    for (int trial = 0; trial < 4; ++trial) {
      MatrixQ a(n, n), b(n, n);
      for (auto& e : a.entries) e = rng.quaternion(3, 3);
      for (auto& e : b.entries) e = rng.quaternion(3, 3);
      c.require(quat_to_complex(mat_mul(a, b)) == mat_mul(quat_to_complex(a), quat_to_complex(b)),
                "complexification is multiplicative", Json{{"sig", sig_str(sig)}});
      c.require(quat_to_complex(conj_transpose(a)) == conj_transpose(quat_to_complex(a)),
                "complexification intertwines conjugate-transpose", Json{{"sig", sig_str(sig)}});
    }
    per_sig.push_back(Json{{"sig", sig_str(sig)},
                           {"split", std::to_string(d) + " = " +
                                         std::to_string(dec.sp_part.dim()) + " + " +
                                         std::to_string(dec.w0.dim())}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"splits", per_sig}, {"seeded_samples", 4}} : c.witness;
  return r;
}

CheckResult check_so_decomp(RunContext& ctx) {
  CheckResult r{"L1.6-so-decomp", "L1.6",
                "so(4k,4l) decomposes as sp(k,l) + sp(1) + V0 + V1 + V2 with the explicit "
                "sp(1) triple closing and commuting with sp(k,l) and each summand ad-stable"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    const SoDecomposition& dec = ctx.get_so(sig);
    const LieAlgebra& so = dec.so;
    c.require(so.dim() == 2 * n * (4 * n - 1), "dim so = 2n(4n-1)", Json{{"sig", sig_str(sig)}});
    auto rep = validate_decomposition(so, dec.parts, false);
    c.require(rep.direct_sum, "parts form a direct sum", Json{{"sig", sig_str(sig)}});

    auto sp_range = dec.part_range("sp");
    auto sp1_range = dec.part_range("sp1");
    // sp(1) triple closes with the unit-quaternion constants
    auto expect_bracket = [&](int a, int b, int target) {
      RealVector w = so.structure.bracket_basis(sp1_range[0] + a, sp1_range[0] + b);
      RealVector want(so.dim(), Rational(0));
      want[sp1_range[0] + target] = 2;
      return w == want;
    };
    c.require(expect_bracket(0, 1, 2) && expect_bracket(1, 2, 0) && expect_bracket(2, 0, 1),
              "sp(1) triple closes with constants 2", Json{{"sig", sig_str(sig)}});
    // ... and commutes with the sp(k,l) part
    for (int a = sp_range[0]; a < sp_range[1] && c.ok; ++a)
      for (int t = 0; t < 3; ++t)
        c.require(vec_is_zero(so.structure.bracket_basis(a, sp1_range[0] + t)),
                  "sp(1) triple commutes with sp(k,l)", Json{{"sig", sig_str(sig)}});
    // each part is stable under the sp(k,l) action
    for (const char* label : {"sp1", "V0", "V1", "V2"}) {
      const Subspace& part = dec.parts.part(label);
      bool stable = true;
      for (int a = sp_range[0]; a < sp_range[1] && stable; ++a)
        for (const auto& v : part.basis())
          if (!part.contains(so.structure.bracket(unit_vector(so.dim(), a), v))) {
            stable = false;
            break;
          }
      c.require(stable, "summand is not ad(sp)-stable",
                Json{{"sig", sig_str(sig)}, {"part", label}});
    }
    Json dims = Json::array();
    for (const auto& [label, sub] : dec.parts.parts) dims.push_back(sub.dim());
    per_sig.push_back(Json{{"sig", sig_str(sig)}, {"part_dims", dims}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"decompositions", per_sig}} : c.witness;
  return r;
}

CheckResult check_so_vsvs(RunContext& ctx) {
  CheckResult r{"L1.6-VsVs", "L1.6",
                "for each s the brackets of V_s with itself span exactly the sp(k,l) summand "
                "of so(4k,4l)"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const SoDecomposition& dec = ctx.get_so(sig);
    const LieAlgebra& so = dec.so;
    const Subspace& sp_part = dec.parts.part("sp");
    for (const char* label : {"V0", "V1", "V2"}) {
      auto range = dec.part_range(label);
      std::vector<RealVector> brackets;
      for (int a = range[0]; a < range[1]; ++a)
        for (int b = a + 1; b < range[1]; ++b) brackets.push_back(so.structure.bracket_basis(a, b));
      Subspace span = Subspace::from_spanning(so.dim(), brackets);
      c.require(span == sp_part, "span of [V_s, V_s] differs from sp(k,l)",
                Json{{"sig", sig_str(sig)}, {"part", label}, {"span_dim", span.dim()}});
    }
    per_sig.push_back(Json{{"sig", sig_str(sig)}, {"span_dim", sp_part.dim()}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"spans", per_sig}} : c.witness;
  return r;
}

CheckResult check_pa1_oracle(RunContext& ctx) {
  CheckResult r{"PA.1-oracle", "PA.1",
                "the closed block formula for the bracket of two complement columns equals "
                "the ambient commutator, exhaustively over basis pairs and on seeded samples"};
  Checker c;
  Prng rng(ctx.check_seed(r.check_id));
  long pairs_checked = 0;
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      const LieAlgebra& h = *e.h;
      for (int d1 = 0; d1 < n && c.ok; ++d1)
        for (int q1 = 0; q1 < 4; ++q1)
          for (int d2 = 0; d2 < n; ++d2)
            for (int q2 = 0; q2 < 4; ++q2) {
              int i1 = e.v_index(d1, q1), i2 = e.v_index(d2, q2);
              if (i1 >= i2) continue;
              OmegaValue omega = omega_bracket(e, v_column(sig, d1, q1), v_column(sig, d2, q2));
              MatrixQ ambient = commutator(h.basis[i1], h.basis[i2]);
              MatrixQ rebuilt =
                  e.iota(omega.g_part, omega.k_part, std::vector<Quaternion>(n, Quaternion()));
              c.require(rebuilt == ambient, "formula differs from the ambient commutator",
                        Json{{"sig", sig_str(sig)},
                             {"variant", variant_name(var)},
                             {"pair", Json::array({i1, i2})}});
              // the bracket lands in g + k, never back in V
              for (const auto& [idx, val] : h.structure.at_upper(i1, i2))
                c.require(idx < e.v_begin(), "bracket of two V elements has a V component",
                          Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
              ++pairs_checked;
            }
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Quaternion> z(n), w(n);
        for (auto& q : z) q = rng.quaternion(3, 2);
        for (auto& q : w) q = rng.quaternion(3, 2);
        OmegaValue omega = omega_bracket(e, z, w);
        MatrixQ ambient = commutator(e.iota_v(z), e.iota_v(w));
        MatrixQ rebuilt =
            e.iota(omega.g_part, omega.k_part, std::vector<Quaternion>(n, Quaternion()));
        c.require(rebuilt == ambient, "formula differs on random columns",
                  Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      }
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"basis_pairs", pairs_checked}, {"seeded_samples", 3}} : c.witness;
  return r;
}

CheckResult check_pa1_omega_prime(RunContext& ctx) {
  CheckResult r{"PA.1-omega-prime", "PA.1",
                "the bracket map of the second inclusion is the negative of the first on "
                "matching basis pairs"};
  bool have_both =
      std::count(ctx.cfg.variants.begin(), ctx.cfg.variants.end(), Variant::add_to_l) &&
      std::count(ctx.cfg.variants.begin(), ctx.cfg.variants.end(), Variant::add_to_k);
  if (!have_both) {
    r.status = CheckStatus::skipped;
    r.witness = Json{{"reason", "both inclusion variants are needed"}};
    return r;
  }
  Checker c;
  long pairs_checked = 0;
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    const EmbeddingData& el = ctx.get_emb(sig, Variant::add_to_l);
    const EmbeddingData& ek = ctx.get_emb(sig, Variant::add_to_k);
    for (int d1 = 0; d1 < n && c.ok; ++d1)
      for (int q1 = 0; q1 < 4; ++q1)
        for (int d2 = 0; d2 < n; ++d2)
          for (int q2 = 0; q2 < 4; ++q2) {
            auto z = v_column(sig, d1, q1), w = v_column(sig, d2, q2);
            OmegaValue a = omega_bracket(el, z, w);
            OmegaValue b = omega_bracket(ek, z, w);
            c.require(b.g_part == -a.g_part && b.k_part == -a.k_part,
                      "omega' differs from -omega",
                      Json{{"sig", sig_str(sig)},
                           {"pair", Json::array({4 * d1 + q1, 4 * d2 + q2})}});
            ++pairs_checked;
          }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"basis_pairs", pairs_checked}} : c.witness;
  return r;
}

CheckResult check_pa2_jacobiator(RunContext& ctx) {
  CheckResult r{"PA.2-jacobiator", "PA.2",
                "the embedded witness triple has equal double brackets with off-diagonal "
                "entries +-2ij and a nonzero Jacobiator proportional to them"};
  Checker c;
  Json blocks = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      const NonAssocAlgebra& m = ctx.get_m(sig, var);
      WitnessTriple wt = pa2_witness(e);
      const auto& [x, y, z] = wt.xyz;
      const StructureTensor& t = m.product;
      RealVector d1 = t.bracket(t.bracket(x, y), z);               // [[x,y], z]
      RealVector d2 = t.bracket(y, t.bracket(x, z));               // [y, [x,z]]
      RealVector d3 = vec_scale(Rational(-1), t.bracket(x, t.bracket(y, z)));  // -[x, [y,z]]
      c.require(d1 == d2 && d1 == d3, "double bracket relations fail",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});

      MatrixQ mat = e.h->matrix_of(lift_m_to_h(e, d1));
      const auto [p, q] = wt.block;
      Quaternion expect_plus{Rational(0), Rational(0), Rational(0), Rational(2)};
      bool entry_ok = (mat.at(p, q) == expect_plus || mat.at(p, q) == -expect_plus) &&
                      mat.at(q, p) == mat.at(p, q);
      c.require(entry_ok, "double bracket block is not +-2ij",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      bool support_ok = true;
      for (int rr = 0; rr < mat.rows; ++rr)
        for (int cc = 0; cc < mat.cols; ++cc)
          if (!((rr == p && cc == q) || (rr == q && cc == p)) && !mat.at(rr, cc).is_zero())
            support_ok = false;
      c.require(support_ok, "double bracket supported outside the embedded block",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});

      RealVector jac = jacobiator(t, x, y, z);
      c.require(!vec_is_zero(jac), "Jacobiator vanishes on the witness triple",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      c.require(jac == vec_scale(Rational(3), d1), "Jacobiator is not 3x the double bracket",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      if (c.ok)
        blocks.push_back(Json{{"sig", sig_str(sig)},
                              {"variant", variant_name(var)},
                              {"block", Json::array({p, q})},
                              {"entry", to_json(mat.at(p, q))}});
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"witness_blocks", blocks}} : c.witness;
  return r;
}

CheckResult check_ca1_m_not_lie(RunContext& ctx) {
  CheckResult r{"CA.1-m-not-lie", "CA.1",
                "the projected product on m = g + V violates the Jacobi identity, while the "
                "ambient algebra satisfies it"};
  Checker c;
  Json witnesses = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      const NonAssocAlgebra& m = ctx.get_m(sig, var);
      LieCheck ambient = is_lie_algebra(e.h->structure);
      c.require(ambient.is_lie, "ambient algebra fails the Jacobi identity",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      LieCheck projected = is_lie_algebra(m.product);
      c.require(!projected.is_lie, "projected product unexpectedly satisfies Jacobi",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      if (!projected.is_lie && projected.witness)
        witnesses.push_back(Json{{"sig", sig_str(sig)},
                                 {"variant", variant_name(var)},
                                 {"triple", Json::array({(*projected.witness)[0],
                                                         (*projected.witness)[1],
                                                         (*projected.witness)[2]})}});
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"witness_triples", witnesses}} : c.witness;
  return r;
}

CheckResult check_la1_grid(RunContext& ctx) {
  CheckResult r{"LA.1-grid", "LA.1",
                "over the rational grid {-2,-1,0,1/2,1,2}^2 the deformed algebra is Lie "
                "exactly on the diagonal r = s"};
  Checker c;
  const std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(0), Rational(1, 2),
                                   Rational(1), Rational(2)};
  Json non_lie = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const EmbeddingData& e = ctx.get_emb(sig, Variant::add_to_l);
    const int cells = static_cast<int>(grid.size() * grid.size());
    std::vector<LieCheck> results(cells);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int cell = 0; cell < cells; ++cell) {
      const Rational& rr = grid[cell / grid.size()];
      const Rational& ss = grid[cell % grid.size()];
      results[cell] = is_lie_algebra(build_h_rs(e, {rr, ss}).product);
    }
    for (int cell = 0; cell < cells; ++cell) {
      const Rational& rr = grid[cell / grid.size()];
      const Rational& ss = grid[cell % grid.size()];
      bool expect = rr == ss;
      c.require(results[cell].is_lie == expect, "Jacobi verdict differs from r = s",
                Json{{"sig", sig_str(sig)},
                     {"r", rational_to_string(rr)},
                     {"s", rational_to_string(ss)},
                     {"is_lie", results[cell].is_lie}});
      if (!results[cell].is_lie)
        non_lie.push_back(Json{{"sig", sig_str(sig)},
                               {"r", rational_to_string(rr)},
                               {"s", rational_to_string(ss)}});
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"non_lie_cells", non_lie}} : c.witness;
  return r;
}

CheckResult check_la1_phi(RunContext& ctx) {
  CheckResult r{"LA.1-phi", "LA.1",
                "the rescaling X + v -> X + t v is an isomorphism between the deformation at "
                "(t^2, t^2) and the undeformed algebra, for t = 1, 2, 3"};
  Checker c;
  for (const auto& sig : ctx.cfg.signatures) {
    const EmbeddingData& e = ctx.get_emb(sig, Variant::add_to_l);
    for (long t = 1; t <= 3; ++t)
      c.require(phi_rescale_iso(e, Rational(t)).is_isomorphism,
                "rescaling fails to intertwine the brackets",
                Json{{"sig", sig_str(sig)}, {"t", t}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"parameters", Json::array({1, 2, 3})}} : c.witness;
  return r;
}

CheckResult check_b_orthogonality(RunContext& ctx) {
  CheckResult r{"B-orthogonality", "B-form",
                "the grading g | k | V of the extended algebra is orthogonal for Re tr, the "
                "form is nondegenerate on each factor, and the defining relation holds on "
                "every basis element"};
  Checker c;
  Json per_case = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    const LieAlgebra& g = ctx.get_sp(sig);
    c.require(g.is_closed && g.dim() == n * (2 * n + 1), "sp(k,l) closed of dim n(2n+1)",
              Json{{"sig", sig_str(sig)}});
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      c.require(e.h->dim() == (n + 1) * (2 * n + 3), "dim of the extended algebra",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      auto rep = validate_decomposition(*e.h, e.parts, true);
      c.require(rep.direct_sum, "grading is not a direct sum",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      c.require(rep.b_orthogonal, "grading is not B-orthogonal",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      std::vector<MatrixQ> gm, km, vm, mm;
      for (int t = 0; t < e.dim_g; ++t) gm.push_back(e.h->basis[t]);
      for (int t = 0; t < 3; ++t) km.push_back(e.h->basis[e.k_begin() + t]);
      for (int t = 0; t < e.dim_v; ++t) vm.push_back(e.h->basis[e.v_begin() + t]);
      mm = gm;
      mm.insert(mm.end(), vm.begin(), vm.end());
      c.require(gram_rank(km) == 3 && gram_rank(gm) == e.dim_g &&
                    gram_rank(vm) == e.dim_v && gram_rank(mm) == e.dim_g + e.dim_v,
                "B degenerate on a factor",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      per_case.push_back(Json{{"sig", sig_str(sig)},
                              {"variant", variant_name(var)},
                              {"dims", Json::array({e.dim_g, 3, e.dim_v})}});
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"gradings", per_case}} : c.witness;
  return r;
}

CheckResult check_r14_forms(RunContext& ctx) {
  CheckResult r{"R1.4-forms", "R1.4",
                "the invariant symmetric forms on the irreducible complement are exactly the "
                "multiples of Re tr, and every invariant form on g + V has vanishing cross "
                "block"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const EmbeddingData& e = ctx.get_emb(sig, Variant::add_to_l);
    const LieAlgebra& h = *e.h;
    std::vector<RealVector> acting;
    for (int a = 0; a < e.dim_g; ++a) acting.push_back(unit_vector(h.dim(), a));

    // forms on V under the g-action
    const Subspace& v = e.parts.part("V");
    InvariantForms on_v = invariant_symmetric_forms(h, acting, v);
    c.require(on_v.forms.dim() == 1, "space of invariant forms on V is not a line",
              Json{{"sig", sig_str(sig)}, {"dim", on_v.forms.dim()}});
    const int vd = v.dim();
    RealVector trace_form(vd * (vd + 1) / 2, Rational(0));
    for (int i = 0; i < vd; ++i)
      for (int j = i; j < vd; ++j)
        trace_form[sym_index(vd, i, j)] =
            re_trace_form(h.basis[e.v_begin() + i], h.basis[e.v_begin() + j]);
    c.require(!vec_is_zero(trace_form) && on_v.forms.contains(trace_form),
              "restriction of Re tr is not among the invariant forms",
              Json{{"sig", sig_str(sig)}});

    // forms on g + V: the cross block dies
    std::vector<RealVector> gv_units;
    for (int a = 0; a < e.dim_g; ++a) gv_units.push_back(unit_vector(h.dim(), a));
    for (int a = 0; a < e.dim_v; ++a) gv_units.push_back(unit_vector(h.dim(), e.v_begin() + a));
    Subspace gv = Subspace::from_spanning(h.dim(), gv_units);
    InvariantForms on_gv = invariant_symmetric_forms(h, acting, gv);
    c.require(on_gv.forms.dim() == 2, "forms on g + V do not split into two lines",
              Json{{"sig", sig_str(sig)}, {"dim", on_gv.forms.dim()}});
    const int md = gv.dim();
    auto gv_mat = [&](int i) {
      return h.basis[i < e.dim_g ? i : e.v_begin() + (i - e.dim_g)];
    };
    RealVector combined(md * (md + 1) / 2, Rational(0));
    for (int i = 0; i < md; ++i)
      for (int j = i; j < md; ++j)
        combined[sym_index(md, i, j)] = re_trace_form(gv_mat(i), gv_mat(j));
    c.require(on_gv.forms.contains(combined),
              "restriction of Re tr to g + V is not invariant", Json{{"sig", sig_str(sig)}});
    for (const auto& form : on_gv.forms.basis())
      for (int i = 0; i < e.dim_g && c.ok; ++i)
        for (int j = e.dim_g; j < md; ++j)
          c.require(form[sym_index(md, i, j)] == 0, "cross block of an invariant form survives",
                    Json{{"sig", sig_str(sig)}, {"i", i}, {"j", j}});
    per_sig.push_back(Json{{"sig", sig_str(sig)},
                           {"forms_on_V", on_v.forms.dim()},
                           {"forms_on_gV", on_gv.forms.dim()}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"form_spaces", per_sig}} : c.witness;
  return r;
}

CheckResult check_l32_p_derivations(RunContext& ctx) {
  CheckResult r{"L3.2-p-derivations", "L3.2",
                "the set of complement elements whose projected adjoint action is a "
                "derivation of m is exactly zero"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const EmbeddingData& e = ctx.get_emb(sig, Variant::add_to_l);
    const NonAssocAlgebra& m = ctx.get_m(sig, Variant::add_to_l);
    const StructureTensor& t = m.product;
    const int md = t.dim;
    const int unknowns = e.dim_v;

    // defect(T) rows, specialized to T = ad of a V basis vector
    std::map<long, SparseCoords> rows;
    for (int s = 0; s < unknowns; ++s) {
      RealVector endo = ad_endo(t, unit_vector(md, e.dim_g + s));
      long row_base = 0;
      for (int a = 0; a < md; ++a)
        for (int b = a + 1; b < md; ++b) {
          RealVector cab = t.bracket_basis(a, b);
          RealVector w1(md, Rational(0));
          for (int ee = 0; ee < md; ++ee) {
            if (cab[ee] == 0) continue;
            for (int f = 0; f < md; ++f) {
              const Rational& tv = endo[static_cast<std::size_t>(f) * md + ee];
              if (tv != 0) w1[f] += tv * cab[ee];
            }
          }
          RealVector ta(md), tb(md);
          for (int ee = 0; ee < md; ++ee) {
            ta[ee] = endo[static_cast<std::size_t>(ee) * md + a];
            tb[ee] = endo[static_cast<std::size_t>(ee) * md + b];
          }
          RealVector defect = vec_sub(vec_sub(w1, t.bracket(ta, unit_vector(md, b))),
                                      t.bracket(unit_vector(md, a), tb));
          for (int f = 0; f < md; ++f)
            if (defect[f] != 0) rows[row_base + f].emplace_back(s, defect[f]);
          row_base += md;
        }
    }
    std::vector<SparseRow> sys;
    for (auto& [idx, coords] : rows) sys.push_back(sparse_from_pairs(std::move(coords)));
    Subspace solved = kernel_sparse(unknowns, std::move(sys));
    c.require(solved.dim() == 0, "a complement element acts as a derivation",
              Json{{"sig", sig_str(sig)}, {"dim", solved.dim()}});
    per_sig.push_back(Json{{"sig", sig_str(sig)}, {"solved_dim", solved.dim()}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"solution_spaces", per_sig}} : c.witness;
  return r;
}

CheckResult check_p33_der_m(RunContext& ctx) {
  CheckResult r{"P3.3-der-m", "P3.3",
                "the derivation algebra of m equals the span of the restricted adjoint "
                "actions of g and k, of dimension n(2n+1) + 3"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const int n = sig.n();
    const EmbeddingData& e = ctx.get_emb(sig, Variant::add_to_l);
    const NonAssocAlgebra& m = ctx.get_m(sig, Variant::add_to_l);
    const StructureTensor& t = m.product;
    const int md = t.dim;

    Subspace der = derivations(t);

    std::vector<RealVector> ad_gens;
    for (int a = 0; a < e.dim_g; ++a) ad_gens.push_back(ad_endo(t, unit_vector(md, a)));
    auto h_index = [&](int mi) { return mi < e.dim_g ? mi : mi + 3; };
    for (int kk = 0; kk < 3; ++kk) {
      RealVector endo(static_cast<std::size_t>(md) * md, Rational(0));
      for (int b = 0; b < md; ++b) {
        RealVector w = e.h->structure.bracket(unit_vector(e.dim(), e.k_begin() + kk),
                                              unit_vector(e.dim(), h_index(b)));
        for (int hf = 0; hf < e.dim(); ++hf) {
          if (w[hf] == 0) continue;
          if (hf >= e.k_begin() && hf < e.v_begin()) {
            c.require(false, "k-action on m leaves m", Json{{"sig", sig_str(sig)}});
            continue;
          }
          int f = m_index_of_h_index(e, hf);
          endo[static_cast<std::size_t>(f) * md + b] = w[hf];
        }
      }
      ad_gens.push_back(std::move(endo));
    }
    Subspace ad_span = Subspace::from_spanning(md * md, ad_gens);

    c.require(der.dim() == n * (2 * n + 1) + 3, "derivation dimension differs",
              Json{{"sig", sig_str(sig)}, {"dim", der.dim()}});
    c.require(ad_span.dim() == n * (2 * n + 1) + 3, "adjoint span dimension differs",
              Json{{"sig", sig_str(sig)}, {"dim", ad_span.dim()}});
    c.require(der == ad_span, "derivations differ from the adjoint span",
              Json{{"sig", sig_str(sig)}});
    per_sig.push_back(Json{{"sig", sig_str(sig)}, {"der_dim", der.dim()}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"derivation_algebras", per_sig}} : c.witness;
  return r;
}

CheckResult check_center_simple(RunContext& ctx) {
  CheckResult r{"center-simple", "TA.1",
                "sp(k,l) and the extended algebras have trivial center, and the centralizer "
                "of g in the extended algebra is exactly the k factor"};
  Checker c;
  Json per_sig = Json::array();
  for (const auto& sig : ctx.cfg.signatures) {
    const LieAlgebra& g = ctx.get_sp(sig);
    c.require(center(g).dim() == 0, "center of sp(k,l) is nontrivial",
              Json{{"sig", sig_str(sig)}});
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      c.require(center(*e.h).dim() == 0, "center of the extended algebra is nontrivial",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      Subspace z = centralizer(*e.h, e.parts.part("g"));
      c.require(z == e.parts.part("k"), "centralizer of g is not the k factor",
                Json{{"sig", sig_str(sig)},
                     {"variant", variant_name(var)},
                     {"dim", z.dim()}});
    }
    per_sig.push_back(Json{{"sig", sig_str(sig)}, {"center_dim", 0}});
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = c.ok ? Json{{"centers", per_sig}} : c.witness;
  return r;
}

CheckResult check_ra1_sympair(RunContext& ctx) {
  CheckResult r{"RA.1-sympair", "RA.1",
                "g + k with the complement V forms a symmetric pair in the extended algebra, "
                "while g with k + V does not"};
  Checker c;
  for (const auto& sig : ctx.cfg.signatures) {
    for (Variant var : ctx.cfg.variants) {
      const EmbeddingData& e = ctx.get_emb(sig, var);
      Subspace gk = subspace_sum(e.parts.part("g"), e.parts.part("k"));
      c.require(symmetric_pair_check(*e.h, gk, e.parts.part("V")),
                "(g + k, V) is not a symmetric pair",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
      Subspace kv = subspace_sum(e.parts.part("k"), e.parts.part("V"));
      c.require(!symmetric_pair_check(*e.h, e.parts.part("g"), kv),
                "(g, k + V) unexpectedly forms a symmetric pair",
                Json{{"sig", sig_str(sig)}, {"variant", variant_name(var)}});
    }
  }
  r.status = c.ok ? CheckStatus::pass : CheckStatus::fail;
  if (c.ok) r.witness = Json{{"note", "negative control: [k+V, k+V] escapes g"}};
  else r.witness = c.witness;
  return r;
}

using CheckFn = std::function<CheckResult(RunContext&)>;

struct RegistryImpl {
  std::vector<RegistryEntry> entries;
  std::vector<CheckFn> fns;

  void add(const char* id, const char* anchor, const char* description, CheckFn fn) {
    entries.push_back({id, anchor, description});
    fns.push_back(std::move(fn));
  }
};

const RegistryImpl& registry_impl() {
  static const RegistryImpl impl = [] {
    RegistryImpl r;
    r.add("WDF-closed-forms", "WDF", "dimension product vs quoted closed forms",
          check_wdf_closed_forms);
    r.add("L1.4", "L1.4", "fundamental weights beyond the second outgrow the adjoint",
          check_l14);
    r.add("C1.2-enum", "C1.2", "bounded enumeration of small irreducibles", check_c12_enum);
    r.add("L1.1-dims", "L1.1", "alternating-square dimension identity", check_l11_dims);
    r.add("realforms-su", "real-forms", "involution split of su(2k,2l)", check_realforms_su);
    r.add("L1.6-so-decomp", "L1.6", "five-part decomposition of so(4k,4l)", check_so_decomp);
    r.add("L1.6-VsVs", "L1.6", "brackets of each module summand span sp(k,l)", check_so_vsvs);
    r.add("PA.1-oracle", "PA.1", "block bracket formula vs ambient commutators",
          check_pa1_oracle);
    r.add("PA.1-omega-prime", "PA.1", "second inclusion bracket is the negative of the first",
          check_pa1_omega_prime);
    r.add("PA.2-jacobiator", "PA.2", "explicit witness triple with nonzero Jacobiator",
          check_pa2_jacobiator);
    r.add("CA.1-m-not-lie", "CA.1", "projected product is not a Lie bracket",
          check_ca1_m_not_lie);
    r.add("LA.1-grid", "LA.1", "deformations are Lie exactly on the diagonal",
          check_la1_grid);
    r.add("LA.1-phi", "LA.1", "square rescalings give isomorphic deformations",
          check_la1_phi);
    r.add("B-orthogonality", "B-form", "orthogonal grading and nondegeneracy of Re tr",
          check_b_orthogonality);
    r.add("R1.4-forms", "R1.4", "uniqueness of invariant forms and vanishing cross blocks",
          check_r14_forms);
    r.add("L3.2-p-derivations", "L3.2", "no complement element acts as a derivation",
          check_l32_p_derivations);
    r.add("P3.3-der-m", "P3.3", "derivations of m equal the restricted adjoint span",
          check_p33_der_m);
    r.add("center-simple", "TA.1", "trivial centers and the centralizer of g",
          check_center_simple);
    r.add("RA.1-sympair", "RA.1", "symmetric pair test with a negative control",
          check_ra1_sympair);
    return r;
  }();
  return impl;
}

}  // namespace

const std::vector<RegistryEntry>& registry() { return registry_impl().entries; }

namespace {

void validate_config(const RunConfig& cfg) {
  if (cfg.signatures.empty()) throw ConfigError("at least one signature is required");
  for (const auto& s : cfg.signatures)
    if (s.k < 1 || s.l < 1)
      throw ConfigError("signature (" + sig_str(s) + ") needs k >= 1 and l >= 1");
  if (cfg.variants.empty()) throw ConfigError("at least one inclusion variant is required");
  if (cfg.rank_range.empty()) throw ConfigError("at least one rank is required");
  for (int n : cfg.rank_range)
    if (n < 3 || n > 8) throw ConfigError("ranks must lie in 3..8");
  const auto& reg = registry();
  for (const auto& id : cfg.checks) {
    if (id == "all") continue;
    bool known = false;
    for (const auto& entry : reg)
      if (entry.id == id) {
        known = true;
        break;
      }
    if (!known) throw ConfigError("unknown check id: " + id);
  }
}

bool check_selected(const RunConfig& cfg, const std::string& id) {
  if (cfg.checks.empty()) return true;
  for (const auto& c : cfg.checks)
    if (c == "all" || c == id) return true;
  return false;
}

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg) {
  validate_config(cfg);
  RunContext ctx;
  ctx.cfg = cfg;
  if (cfg.include_heavy) {
    bool present = false;
    for (const auto& s : ctx.cfg.signatures)
      if (s.k == 2 && s.l == 2) present = true;
    if (!present) ctx.cfg.signatures.push_back({2, 2});
  }

  const RegistryImpl& impl = registry_impl();
  std::vector<CheckResult> results;
  for (std::size_t t = 0; t < impl.entries.size(); ++t) {
    if (!check_selected(cfg, impl.entries[t].id)) continue;
    auto start = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = impl.fns[t](ctx);
    } catch (const std::exception& ex) {
      res.check_id = impl.entries[t].id;
      res.anchor = impl.entries[t].anchor;
      res.statement = impl.entries[t].description;
      res.status = CheckStatus::fail;
      res.witness = Json{{"error", ex.what()}};
    }
    auto stop = std::chrono::steady_clock::now();
    res.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    results.push_back(std::move(res));
  }
  return results;
}

Json report_json(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  Json jc = Json::object();
  Json sigs = Json::array();
  for (const auto& s : cfg.signatures) sigs.push_back(sig_str(s));
  jc["signatures"] = std::move(sigs);
  Json vars = Json::array();
  for (Variant v : cfg.variants) vars.push_back(variant_name(v));
  jc["variants"] = std::move(vars);
  jc["rank_range"] = cfg.rank_range;
  jc["checks"] = cfg.checks.empty() ? Json("all") : Json(cfg.checks);
  jc["seed"] = cfg.seed;
  jc["heavy"] = cfg.include_heavy;

  Json jr = Json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    Json item{{"check_id", r.check_id},
              {"anchor", r.anchor},
              {"statement", r.statement},
              {"status", status_name(r.status)}};
    if (!r.witness.is_null() && !(r.witness.is_object() && r.witness.empty()))
      item["witness"] = r.witness;
    if (cfg.emit_timings) item["elapsed_ms"] = r.elapsed_ms;
    jr.push_back(std::move(item));
    if (r.status == CheckStatus::pass) ++pass;
    else if (r.status == CheckStatus::fail) ++fail;
    else ++skipped;
  }
  return Json{{"config", std::move(jc)},
              {"results", std::move(jr)},
              {"summary", Json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

}  // namespace qlie
