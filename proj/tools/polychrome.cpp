// Command-line front end: constructions, verification, certificates,
// lattice bounds, search, and the d=4..12 comparison table.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polychrome/polychrome.hpp"

namespace {

using namespace polychrome;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string factor_string(int64_t value, const std::vector<int64_t>& factors) {
  std::string s = std::to_string(value) + "=";
  for (size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + std::to_string(factors[i]);
  return s;
}

struct TableRow {
  int d;
  PBas basic;
  int64_t construction_value;
  std::vector<int64_t> construction_moduli;
  int64_t binomial;
  std::string discrepancy;  // empty for all rows but d=7
};

std::vector<TableRow> make_table(int d_min, int d_max) {
  if (d_min < 4 || d_max < d_min) throw ParamViolation("table needs 4 <= d_min <= d_max");
  std::vector<TableRow> rows;
  for (int d = d_min; d <= d_max; ++d) {
    BuiltColoring built = main_coloring(d);
    TableRow row;
    row.d = d;
    row.basic = p_bas(d, 2);
    row.construction_value = built.coloring.group.order();
    row.construction_moduli = built.coloring.group.moduli();
    row.binomial = binom_upper(d, 2);
    if (built.note) row.discrepancy = *built.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["d"] = r.d;
    j["p_bas"] = {{"value", r.basic.value}, {"moduli", r.basic.moduli}};
    j["construction"] = {{"value", r.construction_value}, {"moduli", r.construction_moduli}};
    j["construction"]["discrepancy"] =
        r.discrepancy.empty() ? Json(nullptr) : Json(r.discrepancy);
    j["binom"] = r.binomial;
    out.push_back(std::move(j));
  }
  return out;
}

void print_table_tty(const std::vector<TableRow>& rows) {
  std::printf("%4s  %-14s  %-12s  %8s\n", "d", "p_bas", "construction", "binom");
  bool flagged = false;
  for (const auto& r : rows) {
    std::string basic = factor_string(r.basic.value, r.basic.moduli);
    std::string con = factor_string(r.construction_value, r.construction_moduli);
    if (!r.discrepancy.empty()) {
      con += " (*)";
      flagged = true;
    }
    std::printf("%4d  %-14s  %-12s  %8lld\n", r.d, basic.c_str(), con.c_str(),
                static_cast<long long>(r.binomial));
  }
  for (const auto& r : rows)
    if (!r.discrepancy.empty())
      std::printf("(*) d=%d: %s\n", r.d, r.discrepancy.c_str());
  (void)flagged;
}

void print_table_csv(const std::vector<TableRow>& rows) {
  std::printf("d,p_bas,p_bas_moduli,construction,construction_moduli,binom,discrepancy\n");
  for (const auto& r : rows) {
    auto join = [](const std::vector<int64_t>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + std::to_string(v[i]);
      return s;
    };
    std::printf("%d,%lld,%s,%lld,%s,%lld,%s\n", r.d, static_cast<long long>(r.basic.value),
                join(r.basic.moduli).c_str(), static_cast<long long>(r.construction_value),
                join(r.construction_moduli).c_str(), static_cast<long long>(r.binomial),
                r.discrepancy.c_str());
  }
}

void print_verdict_tty(const Verdict& v) {
  if (v.mode == VerifyMode::sampled && v.polychromatic) {
    std::printf("no counterexample found (%llu samples)\n",
                static_cast<unsigned long long>(v.states_enumerated));
    return;
  }
  std::printf("%s (%llu states, mode %s)\n", v.polychromatic ? "polychromatic" : "REFUTED",
              static_cast<unsigned long long>(v.states_enumerated), to_string(v.mode));
  if (v.witness) {
    std::string cls;
    for (size_t i = 0; i < v.witness->embedding_class.residues.size(); ++i)
      cls += (i ? "," : "") + std::to_string(v.witness->embedding_class.residues[i]);
    std::string col;
    for (size_t i = 0; i < v.witness->missing_color.residues.size(); ++i)
      col += (i ? "," : "") + std::to_string(v.witness->missing_color.residues[i]);
    std::printf("witness class (%s) misses color (%s)\n", cls.c_str(), col.c_str());
    if (!v.witness->embedding.empty())
      std::printf("witness embedding %s\n", v.witness->embedding.c_str());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"polychromatic hypercube-face colorings: construct, verify, bound, search"};
  app.require_subcommand(1);

  std::string format = "tty";

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "balanced basic vs. two-factor construction vs. binomial bound");
  int d_min = 4, d_max = 12;
  cmd_table->add_option("--d-min", d_min, "first row")->capture_default_str();
  cmd_table->add_option("--d-max", d_max, "last row")->capture_default_str();
  cmd_table->add_option("--format", format, "tty|csv|json")->capture_default_str();

  // ---- construct ----
  auto* cmd_construct = app.add_subcommand("construct", "build a coloring and write its file");
  std::string kind, out_path, in0, in1, variant_str = "A";
  int c_d = 0, c_ell = 2;
  int64_t c_t = 0, c_n = 0;
  cmd_construct->add_option("--kind", kind, "basic|crux|main|product")->required();
  cmd_construct->add_option("--d", c_d, "target dimension (basic, main)");
  cmd_construct->add_option("--ell", c_ell, "face dimension (basic)")->capture_default_str();
  cmd_construct->add_option("--t", c_t, "crux parameter t");
  cmd_construct->add_option("--n", c_n, "crux second modulus");
  cmd_construct->add_option("--variant", variant_str, "crux variant A|B")->capture_default_str();
  cmd_construct->add_option("--in0", in0, "first factor file (product)");
  cmd_construct->add_option("--in1", in1, "second factor file (product)");
  cmd_construct->add_option("-o,--out", out_path, "output file (default stdout)");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "decide d-polychromaticity of a coloring file");
  std::string coloring_path, mode_str = "reduced";
  int v_d = 0, ambient_n = -1, workers = 0;
  uint64_t samples = 100000, seed = 0, budget = VerifyOptions::kDefaultBudget;
  bool force = false;
  cmd_verify->add_option("--coloring", coloring_path, "coloring file")->required();
  cmd_verify->add_option("--d", v_d, "embedding dimension")->required();
  cmd_verify->add_option("--mode", mode_str, "reduced|oracle|sampled")->capture_default_str();
  cmd_verify->add_option("--ambient-n", ambient_n, "ambient cube size (oracle)");
  cmd_verify->add_option("--samples", samples, "sample count (sampled)")->capture_default_str();
  cmd_verify->add_option("--seed", seed, "generator seed (sampled)")->capture_default_str();
  cmd_verify->add_option("--workers", workers, "worker threads (0 = auto)");
  cmd_verify->add_option("--budget", budget, "elementary operation budget")->capture_default_str();
  cmd_verify->add_flag("--force", force, "ignore the operation budget");
  cmd_verify->add_option("--format", format, "tty|json")->capture_default_str();

  // ---- certificate ----
  auto* cmd_cert = app.add_subcommand("certificate", "check the finite obligations of the two-factor family");
  cmd_cert->add_option("--t", c_t, "parameter t")->required();
  cmd_cert->add_option("--n", c_n, "second modulus")->required();
  cmd_cert->add_option("--variant", variant_str, "A|B")->required();
  cmd_cert->add_option("--format", format, "tty|json")->capture_default_str();

  // ---- bound ----
  auto* cmd_bound = app.add_subcommand("bound", "kernel-lattice upper-bound certificate for an ell=2 coloring");
  cmd_bound->add_option("--coloring", coloring_path, "coloring file")->required();
  cmd_bound->add_option("--d", v_d, "embedding dimension")->required();
  cmd_bound->add_option("--format", format, "tty|json")->capture_default_str();

  // ---- asymptotic ----
  auto* cmd_asym = app.add_subcommand("asymptotic", "finite-d bound on c/d and N / C(d+1,3)");
  int64_t a_d = 1000000;
  cmd_asym->add_option("--d", a_d, "dimension")->capture_default_str();
  cmd_asym->add_option("--format", format, "tty|json")->capture_default_str();

  // ---- search ----
  auto* cmd_search = app.add_subcommand("search", "best linear coloring over small groups");
  int64_t max_order = 6;
  bool no_prune = false;
  cmd_search->add_option("--d", v_d, "embedding dimension")->required();
  cmd_search->add_option("--ell", c_ell, "face dimension")->required();
  cmd_search->add_option("--max-order", max_order, "largest group order")->capture_default_str();
  cmd_search->add_option("--workers", workers, "worker threads (0 = auto)");
  cmd_search->add_option("--budget", budget, "per-candidate operation budget")->capture_default_str();
  cmd_search->add_flag("--no-prune", no_prune, "disable bound-based pruning");
  cmd_search->add_option("--format", format, "tty|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_table->parsed()) {
    auto rows = make_table(d_min, d_max);
    if (format == "json")
      std::cout << table_to_json(rows).dump(2) << "\n";
    else if (format == "csv")
      print_table_csv(rows);
    else
      print_table_tty(rows);
    return kExitOk;
  }

  if (cmd_construct->parsed()) {
    BuiltColoring built;
    if (kind == "basic") {
      built = basic_coloring(c_d, c_ell);
    } else if (kind == "crux") {
      CruxParams p{c_t, c_n,
                   variant_str == "B" ? CruxParams::Variant::B : CruxParams::Variant::A};
      if (variant_str != "A" && variant_str != "B") throw ParamViolation("variant must be A or B");
      built = crux_coloring(p);
    } else if (kind == "main") {
      built = main_coloring(c_d);
    } else if (kind == "product") {
      if (in0.empty() || in1.empty())
        throw ParamViolation("product construction needs --in0 and --in1");
      LinearColoring a = load_coloring(in0), b = load_coloring(in1);
      built = BuiltColoring{product_coloring(a, b), 0, {}};
      std::cerr << "product coloring: ell=" << built.coloring.ell << ", "
                << built.coloring.group.order()
                << " colors; polychromatic for d0+d1+1 when the factors are d0-"
                   " and d1-polychromatic\n";
    } else {
      throw ParamViolation("unknown construction kind '" + kind + "'");
    }
    if (kind != "product")
      std::cerr << built.coloring.label << ": " << built.coloring.group.order()
                << " colors, polychromatic target d=" << built.d << "\n";
    if (built.note) std::cerr << "note: " << *built.note << "\n";
    if (out_path.empty())
      std::cout << encode_coloring(built.coloring);
    else
      save_coloring(built.coloring, out_path);
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    LinearColoring c = load_coloring(coloring_path);
    if (force) budget = ~uint64_t{0};
    Verdict v;
    if (mode_str == "reduced") {
      v = verify_reduced(c, v_d, VerifyOptions{budget, workers});
    } else if (mode_str == "oracle") {
      if (ambient_n < 0) throw ParamViolation("oracle mode needs --ambient-n");
      v = verify_cube_oracle(c, v_d, ambient_n, budget);
    } else if (mode_str == "sampled") {
      v = verify_sampled(c, v_d, samples, seed);
    } else {
      throw ParamViolation("unknown mode '" + mode_str + "'");
    }
    if (format == "json")
      std::cout << verdict_to_json(v).dump(2) << "\n";
    else
      print_verdict_tty(v);
    return v.polychromatic ? kExitOk : kExitRefuted;
  }

  if (cmd_cert->parsed()) {
    if (variant_str != "A" && variant_str != "B") throw ParamViolation("variant must be A or B");
    CruxParams p{c_t, c_n, variant_str == "B" ? CruxParams::Variant::B : CruxParams::Variant::A};
    CertificateReport rep = crux_certificate(p);
    if (format == "json") {
      std::cout << certificate_to_json(rep).dump(2) << "\n";
    } else {
      for (const auto& ob : rep.obligations)
        std::printf("%-34s %s %s\n", ob.name.c_str(), ob.pass ? "pass" : "FAIL",
                    ob.counterexample.c_str());
      std::printf("%s: %s (%lld colors at d=%lld)\n", rep.params.to_string().c_str(),
                  rep.pass ? "PASS" : "FAIL",
                  static_cast<long long>(rep.params.m() * rep.params.modulus_n),
                  static_cast<long long>(rep.params.target_d()));
    }
    return rep.pass ? kExitOk : kExitRefuted;
  }

  if (cmd_bound->parsed()) {
    LinearColoring c = load_coloring(coloring_path);
    LatticeCertificate cert = lattice_bound_check(c, v_d);
    if (format == "json") {
      std::cout << lattice_to_json(cert).dump(2) << "\n";
    } else {
      std::printf("N=%lld 2Q=%lld s=%lld frustum_bound=%lld sphere_ok=%d frustum_ok=%d\n",
                  static_cast<long long>(cert.N),
                  static_cast<long long>(cert.c_squared_times_2),
                  static_cast<long long>(cert.s), static_cast<long long>(cert.frustum_bound),
                  int(cert.sphere_ok), int(cert.frustum_ok));
    }
    return cert.sphere_ok && cert.frustum_ok ? kExitOk : kExitRefuted;
  }

  if (cmd_asym->parsed()) {
    AsymptoticReport rep = asymptotic_ratio(a_d);
    if (format == "json")
      std::cout << asymptotic_to_json(rep).dump(2) << "\n";
    else
      std::printf("c/d <= %.10f, s/d <= %.10f, N/C(d+1,3) <= %.10f\n", rep.c_over_d_max,
                  rep.s_over_d, rep.n_ratio_bound);
    return kExitOk;
  }

  if (cmd_search->parsed()) {
    SearchResult res =
        search_best_linear(v_d, c_ell, max_order, SearchOptions{budget, workers, !no_prune});
    if (format == "json") {
      std::cout << search_to_json(res).dump(2) << "\n";
    } else {
      std::printf("best verified color count: %lld (%zu colorings)\n",
                  static_cast<long long>(res.best_count), res.best.size());
      for (const auto& c : res.best) std::printf("  %s\n", detail::weight_key(c).c_str());
      std::printf("candidates=%llu not_surjective=%llu pruned=%llu refuted=%llu verified=%llu\n",
                  static_cast<unsigned long long>(res.candidates),
                  static_cast<unsigned long long>(res.not_surjective),
                  static_cast<unsigned long long>(res.pruned_by_bound),
                  static_cast<unsigned long long>(res.refuted),
                  static_cast<unsigned long long>(res.verified));
    }
    return res.complete ? kExitOk : kExitBudget;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polychrome::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const polychrome::ParamViolation& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const polychrome::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const polychrome::NotSurjective& e) {
    std::cerr << "not surjective: " << e.what() << "\n";
    return kExitUsage;
  } catch (const polychrome::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
