// Command-line frontend for the homogeneous-spectrum library: exact Laplace
// spectra, first/second eigenvalues, curvature data and isospectrality
// comparisons for the two-parameter metrics on SO(2n+1)/U(n) and the
// three-parameter metrics on SU(2n+1)/Sp(n).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homspec/aii.hpp"
#include "homspec/diii.hpp"
#include "homspec/geometry.hpp"
#include "homspec/serialize.hpp"
#include "homspec/uniqueness.hpp"
#include "homspec/verify.hpp"
#include "homspec/weight.hpp"

namespace {

using namespace homspec;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

Rational parse_rational_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, size_t count,
                                          const char* flag) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(parse_rational_arg(piece, flag));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count)
    throw CLI::ValidationError(std::string(flag) + ": expected " + std::to_string(count) +
                               " comma-separated rationals");
  return out;
}

Rational square_root_input(const std::string& text, const char* flag) {
  // unsquared lengths are accepted only as exact rationals, then squared
  Rational v = parse_rational_arg(text, flag);
  if (v.sign() <= 0) throw CLI::ValidationError(std::string(flag) + ": must be positive");
  return v * v;
}

struct CommonOut {
  std::string format = "table";
  std::string out_path;
  int decimal = 0;
  int threads = 1;

  RenderOptions render() const { return RenderOptions{parse_format(format), decimal}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    cmd->add_option("-o,--output", out_path, "Write output to a file instead of stdout");
    cmd->add_option("--decimal", decimal,
                    "Add k-digit decimal renderings (marked approximations)")
        ->check(CLI::Range(0, 60));
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->check(CLI::Range(0, 1024));
  }

  template <class Fn>
  void emit(Fn&& fn) const {
    if (out_path.empty()) {
      fn(std::cout);
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file " + out_path);
      fn(f);
    }
  }
};

struct SpaceArgs {
  std::string space = "diii";
  int n = 3;
  std::string s2_text, t2_text, r2_text;
  std::string s_text, t_text, r_text;

  void attach(CLI::App* cmd, bool fixed_diii = false) {
    if (!fixed_diii)
      cmd->add_option("--space", space, "diii (complex structures) or aii (quaternionic)")
          ->check(CLI::IsMember({"diii", "aii"}));
    cmd->add_option("--n", n, "Rank parameter (diii: n >= 3, aii: n >= 2)")->required();
    cmd->add_option("--s2", s2_text, "Squared parameter s^2 as p/q (diii)");
    cmd->add_option("--t2", t2_text, "Squared parameter t^2 as p/q (diii)");
    cmd->add_option("--r2", r2_text, "Squared parameters r1^2,r2^2,r3^2 (aii)");
    cmd->add_option("--s", s_text, "Unsquared s (exact rational; squared internally)");
    cmd->add_option("--t", t_text, "Unsquared t (exact rational; squared internally)");
    cmd->add_option("--r", r_text, "Unsquared r1,r2,r3 (exact rationals; squared internally)");
  }

  DiiiParams diii() const {
    Rational s2, t2;
    if (!s2_text.empty())
      s2 = parse_rational_arg(s2_text, "--s2");
    else if (!s_text.empty())
      s2 = square_root_input(s_text, "--s");
    else
      throw CLI::ValidationError("--s2 (or --s) is required for the diii space");
    if (!t2_text.empty())
      t2 = parse_rational_arg(t2_text, "--t2");
    else if (!t_text.empty())
      t2 = square_root_input(t_text, "--t");
    else
      throw CLI::ValidationError("--t2 (or --t) is required for the diii space");
    DiiiParams p{n, s2, t2};
    validate(p);
    return p;
  }

  AiiParams aii() const {
    std::vector<Rational> r2;
    if (!r2_text.empty()) {
      r2 = parse_rational_list(r2_text, 3, "--r2");
    } else if (!r_text.empty()) {
      auto r = parse_rational_list(r_text, 3, "--r");
      for (const auto& v : r) r2.push_back(v * v);
    } else {
      throw CLI::ValidationError("--r2 (or --r) is required for the aii space");
    }
    AiiParams p{n, r2[0], r2[1], r2[2]};
    validate(p);
    return p;
  }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact Laplace-Beltrami spectra of the homogeneous metric families on the"
               " spaces of complex and quaternionic structures"};
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "Enumerate the spectrum up to a cutoff");
  SpaceArgs sp_args;
  CommonOut sp_out;
  std::string sp_cutoff;
  sp_args.attach(sp);
  sp_out.attach(sp);
  sp->add_option("--cutoff", sp_cutoff, "Eigenvalue cutoff as p/q")->required();

  // lambda1
  auto* l1 = app.add_subcommand("lambda1", "First positive eigenvalue with multiplicity");
  SpaceArgs l1_args;
  CommonOut l1_out;
  bool l1_verify = false;
  l1_args.attach(l1);
  l1_out.attach(l1);
  l1->add_flag("--verify-enumeration", l1_verify,
               "Cross-check the closed form against the enumerator");

  // lambda2
  auto* l2 = app.add_subcommand(
      "lambda2", "Second distinct eigenvalue on the complex-structures space (s^2 > 2t^2)");
  SpaceArgs l2_args;
  CommonOut l2_out;
  bool l2_verify = false;
  l2_args.attach(l2, /*fixed_diii=*/true);
  l2_out.attach(l2);
  l2->add_flag("--verify-enumeration", l2_verify,
               "Cross-check the published case split against the enumerator");

  // geometry
  auto* ge = app.add_subcommand("geometry",
                                "Volume exponents, curvature and stability verdicts");
  SpaceArgs ge_args;
  CommonOut ge_out;
  ge_args.attach(ge);
  ge_out.attach(ge);

  // compare
  auto* cp = app.add_subcommand("compare", "Isospectrality comparison");
  CommonOut cp_out;
  std::string cp_space = "diii", cp_cutoff = "3";
  int cp_n = 3;
  std::string cp_params1, cp_params2, cp_r2;
  cp->add_option("--space", cp_space, "diii: compare two metrics; aii: compare to symmetric")
      ->check(CLI::IsMember({"diii", "aii"}));
  cp->add_option("--n", cp_n, "Rank parameter")->required();
  cp->add_option("--params1", cp_params1, "diii first metric: s^2,t^2");
  cp->add_option("--params2", cp_params2, "diii second metric: s^2,t^2");
  cp->add_option("--r2", cp_r2, "aii metric: r1^2,r2^2,r3^2");
  cp->add_option("--cutoff", cp_cutoff, "Truncation cutoff for the fallback comparison");
  cp_out.attach(cp);

  // vtheta
  auto* vt = app.add_subcommand("vtheta",
                                "Normalized volume along the equal-lambda1 curve");
  CommonOut vt_out;
  int vt_n = 2;
  std::string vt_theta, vt_step;
  vt->add_option("--n", vt_n, "Rank parameter (n >= 2)")->required();
  vt->add_option("--theta", vt_theta, "Evaluate at one point theta in (0, 2n+3)");
  vt->add_option("--grid-step", vt_step, "Profile the whole curve at this step");
  vt_out.attach(vt);

  // verify
  auto* vf = app.add_subcommand("verify", "Run the verification procedures");
  std::string vf_theorem = "all";
  verify::Options vf_opt;
  int vf_threads = 1;
  std::string vf_cutoff;
  vf->add_option("--theorem", vf_theorem,
                 "One of: diii-lambda1, diii-lambda2, diii-einstein, aii-lambda1, aii-oracle, "
                 "diii-uniqueness, aii-uniqueness, all");
  vf->add_option("--seed", vf_opt.seed, "Seed for the randomized grids");
  vf->add_option("--pairs", vf_opt.pairs, "Equal-volume pairs per rank")->check(CLI::Range(1, 100000));
  vf->add_option("--n-max", vf_opt.n_max, "Upper rank for the Einstein sweep")
      ->check(CLI::Range(3, 64));
  vf->add_option("--n", vf_opt.n_override, "Restrict sweeps to a single rank")
      ->check(CLI::Range(2, 64));
  vf->add_option("--cutoff", vf_cutoff, "Cutoff for the cross-oracle comparison");
  vf->add_option("--threads", vf_threads, "Worker threads (0 = all cores)")
      ->check(CLI::Range(0, 1024));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (sp->parsed()) {
    Rational cutoff = parse_rational_arg(sp_cutoff, "--cutoff");
    if (sp_args.space == "diii") {
      auto table = diii_spectrum(sp_args.diii(), cutoff, sp_out.threads);
      sp_out.emit([&](std::ostream& os) { write_spectrum(os, table, sp_out.render()); });
    } else {
      auto table = aii_spectrum(sp_args.aii(), cutoff, sp_out.threads);
      sp_out.emit([&](std::ostream& os) { write_spectrum(os, table, sp_out.render()); });
    }
    return 0;
  }

  if (l1->parsed()) {
    if (l1_args.space == "diii") {
      auto p = l1_args.diii();
      auto r = diii_first_eigenvalue(p);
      if (l1_verify) {
        auto table = diii_spectrum(p, r.value, l1_out.threads);
        if (table.empty() || table.entries.front().value != r.value ||
            table.multiplicity_of(r.value) != r.multiplicity) {
          std::cerr << "enumeration mismatch against the closed form\n";
          return kExitInternal;
        }
      }
      l1_out.emit([&](std::ostream& os) {
        os << r.value.str() << ", " << r.multiplicity.get_str() << "\n";
        for (const auto& pair : r.attained)
          os << "  Lambda = " << coords_str(std::span<const long long>(pair.hw_g))
             << "  mu = " << coords_str(std::span<const long long>(pair.hw_k)) << "\n";
        if (l1_out.decimal > 0) os << "  ~" << r.value.decimal(l1_out.decimal) << "\n";
      });
    } else {
      auto p = l1_args.aii();
      auto r = aii_first_eigenvalue(p);
      if (l1_verify) {
        auto table = aii_spectrum(p, r.value, l1_out.threads);
        if (table.empty() || table.entries.front().value != r.value ||
            table.multiplicity_of(r.value) != r.multiplicity) {
          std::cerr << "enumeration mismatch against the closed form\n";
          return kExitInternal;
        }
      }
      l1_out.emit([&](std::ostream& os) {
        os << r.value.str() << ", " << r.multiplicity.get_str() << "\n";
        for (const auto& idx : r.attained)
          os << "  (q,k,l) = (" << coords_str(std::span<const long long>(idx.q)) << "; "
             << idx.k << "; " << coords_str(std::span<const long long>(idx.l)) << ")\n";
        if (l1_out.decimal > 0) os << "  ~" << r.value.decimal(l1_out.decimal) << "\n";
      });
    }
    return 0;
  }

  if (l2->parsed()) {
    auto p = l2_args.diii();
    if (!(p.s2 > Rational(2) * p.t2)) {
      std::cerr << "lambda2 requires s^2 > 2 t^2 (got s2=" << p.s2.str()
                << ", t2=" << p.t2.str() << ")\n";
      return kExitUsage;
    }
    auto r = diii_second_eigenvalue(p);
    if (l2_verify) {
      auto e = diii_second_eigenvalue_enumerated(p);
      if (e.value != r.value || e.multiplicity != r.multiplicity) {
        std::cerr << "enumeration mismatch: published (" << r.value.str() << " x"
                  << r.multiplicity.get_str() << ") vs enumerated (" << e.value.str() << " x"
                  << e.multiplicity.get_str() << ")\n";
        return kExitInternal;
      }
    }
    l2_out.emit([&](std::ostream& os) {
      os << r.value.str() << ", " << r.multiplicity.get_str() << "\n";
      for (const auto& pair : r.attained)
        os << "  Lambda = " << coords_str(std::span<const long long>(pair.hw_g))
           << "  mu = " << coords_str(std::span<const long long>(pair.hw_k)) << "\n";
    });
    return 0;
  }

  if (ge->parsed()) {
    GeometryReport rep = ge_args.space == "diii" ? diii_geometry(ge_args.diii())
                                                 : aii_geometry(ge_args.aii());
    ge_out.emit([&](std::ostream& os) { write_geometry(os, rep, ge_out.render()); });
    return 0;
  }

  if (cp->parsed()) {
    Rational cutoff = parse_rational_arg(cp_cutoff, "--cutoff");
    IsospectralityVerdict verdict;
    if (cp_space == "diii") {
      if (cp_params1.empty() || cp_params2.empty())
        throw CLI::ValidationError("--params1 and --params2 are required for diii");
      auto p1 = parse_rational_list(cp_params1, 2, "--params1");
      auto p2 = parse_rational_list(cp_params2, 2, "--params2");
      verdict = compare_diii(DiiiParams{cp_n, p1[0], p1[1]}, DiiiParams{cp_n, p2[0], p2[1]},
                             cutoff);
    } else {
      if (cp_r2.empty()) throw CLI::ValidationError("--r2 is required for aii");
      auto r2 = parse_rational_list(cp_r2, 3, "--r2");
      verdict = compare_aii_to_symmetric(AiiParams{cp_n, r2[0], r2[1], r2[2]}, cutoff);
    }
    cp_out.emit([&](std::ostream& os) { write_verdict(os, verdict, cp_out.render()); });
    return 0;
  }

  if (vt->parsed()) {
    if (!vt_theta.empty()) {
      Rational theta = parse_rational_arg(vt_theta, "--theta");
      Rational value = volume_curve_value(vt_n, theta);
      vt_out.emit([&](std::ostream& os) {
        os << value.str() << "\n";
        if (vt_out.decimal > 0) os << "~" << value.decimal(vt_out.decimal) << "\n";
      });
    } else if (!vt_step.empty()) {
      Rational step = parse_rational_arg(vt_step, "--grid-step");
      auto prof = volume_curve_profile(vt_n, step, vt_out.threads);
      vt_out.emit(
          [&](std::ostream& os) { write_curve_profile(os, vt_n, step, prof, vt_out.render()); });
    } else {
      throw CLI::ValidationError("vtheta needs --theta or --grid-step");
    }
    return 0;
  }

  if (vf->parsed()) {
    vf_opt.threads = vf_threads;
    if (!vf_cutoff.empty()) vf_opt.oracle_cutoff = parse_rational_arg(vf_cutoff, "--cutoff");
    if (!verify::selector_known(vf_theorem)) {
      std::cerr << "unknown theorem selector '" << vf_theorem << "'\n";
      return kExitUsage;
    }
    auto results = verify::run(vf_theorem, vf_opt);
    bool all_pass = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                << r.seconds << "s)\n";
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
      all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : kExitInternal;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const homspec::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
