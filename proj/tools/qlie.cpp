/*
 * Command line front end: builds the matrix algebras and embeddings as JSON,
 * evaluates weight dimensions, enumerates small representations, and runs
 * the named check registry into a machine-readable report.
 */

#include "qlie/json_io.hpp"
#include "qlie/spfactory.hpp"
#include "qlie/verifier.hpp"
#include "qlie/weights.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qlie;

std::optional<Signature> parse_signature(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    int k = std::stoi(s.substr(0, comma));
    int l = std::stoi(s.substr(comma + 1));
    if (k < 0 || l < 0) return std::nullopt;
    return Signature{k, l};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::vector<int>> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  try {
    while (pos < s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

Json conventions_json() {
  return Json{{"scalar_component_order", "1,i,j,k"},
              {"complex_block", "q = z + j w -> [[z, -conj(w)], [w, conj(z)]], n x n blocks"},
              {"complex_coordinates", "(e_1..e_n, e^1..e^n)"},
              {"real_coordinates", "(e_s, e^s, i e_s, i e^s)"}};
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

Json subspaces_json(const GradedDecomposition& d) {
  Json parts = Json::object();
  for (const auto& [label, sub] : d.parts) parts[label] = to_json(sub);
  return parts;
}

int cmd_build_algebra(const std::string& type, const Signature& sig, const std::string& out) {
  if (type == "sp") {
    emit(to_json(build_sp(sig)), out);
    return 0;
  }
  if (type == "su") {
    SuDecomposition dec = build_su(sig);
    Json j{{"algebra", to_json(dec.su)},
           {"parts", Json{{"sp", to_json(dec.sp_part)}, {"W0", to_json(dec.w0)}}},
           {"conventions", conventions_json()}};
    emit(j, out);
    return 0;
  }
  if (type == "so") {
    SoDecomposition dec = build_so_decomposition(sig);
    Json j{{"algebra", to_json(dec.so)},
           {"parts", subspaces_json(dec.parts)},
           {"conventions", conventions_json()}};
    emit(j, out);
    return 0;
  }
  std::cerr << "unknown algebra type: " << type << "\n";
  return 2;
}

int cmd_embed(const Signature& sig, const std::string& variant, const std::string& out) {
  Variant v;
  if (variant == "add_to_l") v = Variant::add_to_l;
  else if (variant == "add_to_k") v = Variant::add_to_k;
  else {
    std::cerr << "unknown variant: " << variant << "\n";
    return 2;
  }
  EmbeddingData e = build_embedding(sig, v);
  Json j{{"signature", std::to_string(sig.k) + "," + std::to_string(sig.l)},
         {"variant", variant},
         {"h", to_json(*e.h)},
         {"parts", subspaces_json(e.parts)},
         {"conventions", conventions_json()}};
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational toolkit for quaternionic symplectic Lie algebras"};
  app.require_subcommand(1);

  // build-algebra
  std::string ba_type, ba_sig, ba_out;
  CLI::App* ba = app.add_subcommand("build-algebra", "emit an algebra with its basis and "
                                                     "structure constants as JSON");
  ba->add_option("--type", ba_type, "sp | su | so")->required();
  ba->add_option("--signature", ba_sig, "signature as k,l")->required();
  ba->add_option("--out", ba_out, "output file (stdout when omitted)");

  // embed
  std::string em_sig, em_variant, em_out;
  CLI::App* em = app.add_subcommand("embed", "emit the graded embedding of sp(k,l) + sp(1) "
                                             "into the next symplectic algebra");
  em->add_option("--signature", em_sig, "signature as k,l")->required();
  em->add_option("--variant", em_variant, "add_to_l | add_to_k")->required();
  em->add_option("--out", em_out, "output file (stdout when omitted)");

  // dim
  int dim_n = 0;
  std::string dim_weight;
  CLI::App* dm = app.add_subcommand("dim", "dimension of the irreducible with the given "
                                           "highest weight");
  dm->add_option("--n", dim_n, "rank")->required();
  dm->add_option("--weight", dim_weight, "coefficients m1,...,mN")->required();

  // enumerate
  int en_n = 0;
  std::string en_bound = "auto";
  CLI::App* en = app.add_subcommand("enumerate", "all nonzero dominant weights with "
                                                 "dimension at most the bound");
  en->add_option("--n", en_n, "rank (at most 8)")->required();
  en->add_option("--bound", en_bound, "positive integer or 'auto' for n(2n+1)");

  // verify
  std::string vf_checks = "all", vf_sigs, vf_variants, vf_ranks, vf_report;
  std::uint64_t vf_seed = 0;
  bool vf_heavy = false, vf_timings = false;
  CLI::App* vf = app.add_subcommand("verify", "run the named checks and write a JSON report");
  vf->add_option("--checks", vf_checks, "comma-separated check ids, or 'all'");
  vf->add_option("--signatures", vf_sigs, "semicolon-separated list, e.g. \"1,1;2,1\"");
  vf->add_option("--variants", vf_variants, "comma-separated: add_to_l,add_to_k");
  vf->add_option("--ranks", vf_ranks, "comma-separated ranks in 3..8 (default 3,4,5,6)");
  vf->add_option("--seed", vf_seed, "seed for the randomized spot checks (recorded)");
  vf->add_flag("--heavy", vf_heavy, "also run the expensive signature (2,2)");
  vf->add_flag("--timings", vf_timings, "include wall-clock timings in the report");
  vf->add_option("--report", vf_report, "report output path")->required();

  // checks listing
  CLI::App* ck = app.add_subcommand("checks", "list the available check ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ba->parsed()) {
      auto sig = parse_signature(ba_sig);
      if (!sig) {
        std::cerr << "malformed signature: " << ba_sig << "\n";
        return 2;
      }
      return cmd_build_algebra(ba_type, *sig, ba_out);
    }

    if (em->parsed()) {
      auto sig = parse_signature(em_sig);
      if (!sig) {
        std::cerr << "malformed signature: " << em_sig << "\n";
        return 2;
      }
      return cmd_embed(*sig, em_variant, em_out);
    }

    if (dm->parsed()) {
      auto coeffs = parse_int_list(dim_weight);
      if (!coeffs || static_cast<int>(coeffs->size()) != dim_n) {
        std::cerr << "weight needs exactly " << dim_n << " comma-separated coefficients\n";
        return 2;
      }
      std::cout << weyl_dim(DominantWeight(dim_n, *coeffs)).str() << "\n";
      return 0;
    }

    if (en->parsed()) {
      BigInt bound = en_bound == "auto" ? dim_adjoint(en_n) : BigInt(en_bound);
      for (const auto& wt : enumerate_small_reps(en_n, bound))
        std::cout << wt.to_string() << " " << weyl_dim(wt).str() << "\n";
      return 0;
    }

    if (ck->parsed()) {
      for (const auto& entry : registry())
        std::cout << entry.id << "\t" << entry.anchor << "\t" << entry.description << "\n";
      return 0;
    }

    if (vf->parsed()) {
      RunConfig cfg;
      cfg.seed = vf_seed;
      cfg.include_heavy = vf_heavy;
      cfg.emit_timings = vf_timings;
      cfg.output_path = vf_report;
      if (vf_checks != "all" && !vf_checks.empty()) {
        cfg.checks.clear();
        std::size_t pos = 0;
        while (pos < vf_checks.size()) {
          auto next = vf_checks.find(',', pos);
          if (next == std::string::npos) next = vf_checks.size();
          cfg.checks.push_back(vf_checks.substr(pos, next - pos));
          pos = next + 1;
        }
      }
      if (!vf_sigs.empty()) {
        cfg.signatures.clear();
        std::size_t pos = 0;
        while (pos < vf_sigs.size()) {
          auto next = vf_sigs.find(';', pos);
          if (next == std::string::npos) next = vf_sigs.size();
          auto sig = parse_signature(vf_sigs.substr(pos, next - pos));
          if (!sig) {
            std::cerr << "malformed signature list: " << vf_sigs << "\n";
            return 2;
          }
          cfg.signatures.push_back(*sig);
          pos = next + 1;
        }
      }
      if (!vf_variants.empty()) {
        cfg.variants.clear();
        std::size_t pos = 0;
        while (pos < vf_variants.size()) {
          auto next = vf_variants.find(',', pos);
          if (next == std::string::npos) next = vf_variants.size();
          std::string v = vf_variants.substr(pos, next - pos);
          if (v == "add_to_l") cfg.variants.push_back(Variant::add_to_l);
          else if (v == "add_to_k") cfg.variants.push_back(Variant::add_to_k);
          else {
            std::cerr << "unknown variant: " << v << "\n";
            return 2;
          }
          pos = next + 1;
        }
      }
      if (!vf_ranks.empty()) {
        auto ranks = parse_int_list(vf_ranks);
        if (!ranks) {
          std::cerr << "malformed rank list: " << vf_ranks << "\n";
          return 2;
        }
        cfg.rank_range = *ranks;
      }

      std::vector<CheckResult> results;
      try {
        results = run_checks(cfg);
      } catch (const ConfigError& ex) {
        std::cerr << "configuration error: " << ex.what() << "\n";
        return 2;
      }
      for (const auto& r : results)
        std::cerr << "[" << status_name(r.status) << "] " << r.check_id << " ("
                  << r.elapsed_ms << " ms)\n";
      emit(report_json(cfg, results), vf_report);
      bool ok = all_passed(results);
      std::cerr << (ok ? "all checks passed" : "FAILURES present") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
