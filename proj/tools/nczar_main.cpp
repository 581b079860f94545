#include <CLI11.hpp>
#include <complex>
#include <iostream>
#include <json.hpp>

#include "nczar/gauge.hpp"
#include "nczar/json_io.hpp"
#include "nczar/limit.hpp"
#include "nczar/parser.hpp"
#include "nczar/reconstruction.hpp"
#include "nczar/representation.hpp"

using namespace nczar;
using nlohmann::json;

namespace {

struct Common {
  std::string case_name = "affine";
  int N = 3;
  unsigned seed = 1;
  std::string format = "text";
  int precision = 12;
  double b = 1.0;
  double rho = 2.718281828459045;
};

AlgebraKind kind_of(const std::string& name) {
  if (name == "affine") return AlgebraKind::AffineEps;
  if (name == "affine-sharp") return AlgebraKind::AffineSharp;
  if (name == "torus") return AlgebraKind::TorusBase;
  if (name == "torus-ext") return AlgebraKind::TorusExt;
  throw CLI::ValidationError("--case", "unknown case '" + name + "'");
}

ModelParams params_of(const Common& c) {
  AlgebraKind k = kind_of(c.case_name);
  return flavor_of(k) == Flavor::Affine ? ModelParams::affine(c.N, c.b)
                                        : ModelParams::torus(c.N, c.rho, c.b);
}

void add_common(CLI::App* cmd, Common& c, bool with_case = true) {
  if (with_case)
    cmd->add_option("--case", c.case_name,
                    "affine | affine-sharp | torus | torus-ext");
  cmd->add_option("--N", c.N, "cover degree")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--format", c.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--precision", c.precision, "digits for numeric output");
  cmd->add_option("--b", c.b, "structure constant b");
  cmd->add_option("--rho", c.rho, "torus modulus rho");
}

json element_json(const OpElement& el, bool numeric, const ModelParams& p) {
  json terms = json::array();
  for (const auto& [m, s] : el.terms()) {
    json t{{"monomial",
            {{"x", m.x}, {"w", m.w}, {"y", m.y}, {"z", m.z},
             {"f", m.f}, {"g", m.g}, {"e", m.e}}},
           {"coeff", s.to_string()}};
    if (numeric) {
      auto v = s.eval(p);
      t["coeff_numeric"] = {{"re", v.real()}, {"im", v.imag()}};
    }
    terms.push_back(t);
  }
  return {{"normal_form", el.to_string()}, {"terms", terms}};
}

int emit_report(const Common& c, const Report& rep) {
  if (c.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.case_name << " N=" << rep.N << "\n";
    for (const auto& chk : rep.checks) {
      std::cout << "  " << (chk.passed ? "PASS" : "FAIL") << "  " << chk.name;
      if (!chk.passed && !chk.witness.empty())
        std::cout << "  [" << chk.witness << "]";
      std::cout << "\n";
    }
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal forms, representations and limit checks for the "
               "N-cover operator algebras"};
  app.require_subcommand(1);

  Common c;
  std::string expr_text;
  bool numeric = false;

  auto* cmd_norm = app.add_subcommand("normalize", "normalize an expression");
  add_common(cmd_norm, c);
  cmd_norm->add_option("expr", expr_text, "expression")->required();
  cmd_norm->add_flag("--numeric", numeric, "also evaluate coefficients");

  auto* cmd_adj = app.add_subcommand("adjoint", "adjoint of an expression");
  add_common(cmd_adj, c);
  cmd_adj->add_option("expr", expr_text, "expression")->required();
  cmd_adj->add_flag("--numeric", numeric, "also evaluate coefficients");

  auto* cmd_rel = app.add_subcommand("relations-check",
                                     "verify the defining relations");
  add_common(cmd_rel, c);

  auto* cmd_act = app.add_subcommand("act", "apply an element to a basis state");
  add_common(cmd_act, c);
  cmd_act->add_option("expr", expr_text, "expression")->required();
  double x0 = 0.5, r0 = 1.0, m0_re = 1.0, m0_im = 0.0;
  long long gshift = 0, kk = 0, ja = 0, jb = 0;
  int xi = 0, zeta = 0, je = 0;
  cmd_act->add_option("--x0", x0, "affine: real part offset of mu");
  cmd_act->add_option("--gshift", gshift, "affine: b-lattice index");
  cmd_act->add_option("--k", kk, "affine band / torus-ext sector index");
  cmd_act->add_option("--xi", xi, "Y-grading");
  cmd_act->add_option("--zeta", zeta, "E-grading");
  cmd_act->add_option("--r0", r0, "torus-ext: radial part");
  cmd_act->add_option("--ja", ja, "torus: alpha-lattice index");
  cmd_act->add_option("--jb", jb, "torus: beta-lattice index");
  cmd_act->add_option("--je", je, "torus base: eps-grading");
  cmd_act->add_option("--m0-re", m0_re, "torus base: Re of the transversal");
  cmd_act->add_option("--m0-im", m0_im, "torus base: Im of the transversal");

  auto* cmd_faith = app.add_subcommand(
      "faithful", "equality of normal forms vs equality of operators");
  add_common(cmd_faith, c);
  int count = 100;
  cmd_faith->add_option("--count", count, "number of sampled elements");

  auto* cmd_dual = app.add_subcommand("duality",
                                      "reconstruct the geometry from states");
  add_common(cmd_dual, c);
  int samples = 500;
  cmd_dual->add_option("--samples", samples, "number of sampled states");

  auto* cmd_star = app.add_subcommand("starfn",
                                      "semi-definable star-functions");
  add_common(cmd_star, c);
  bool star_check = false;
  long long sm = 0, sn = 0, sell = 0;
  double s_re = 1.0, s_im = 0.0;
  cmd_star->add_flag("--check", star_check, "run the functional-equation checks");
  cmd_star->add_option("--m", sm, "phi-coordinate");
  cmd_star->add_option("--n", sn, "gamma-coordinate");
  cmd_star->add_option("--ell", sell, "deck coordinate");
  cmd_star->add_option("--s-re", s_re, "Re of the orbit representative");
  cmd_star->add_option("--s-im", s_im, "Im of the orbit representative");
  cmd_star->add_option("--samples", samples, "samples for --check");

  auto* cmd_haus = app.add_subcommand("hausdorff",
                                      "classical-limit Hausdorff distances");
  add_common(cmd_haus, c);
  double grid = 0.01, rr = 0.5;
  cmd_haus->add_option("--grid", grid, "grid step over the window");
  cmd_haus->add_option("--r", rr, "continuous translation target");

  auto* cmd_curv = app.add_subcommand("curvature", "gauge curvature checks");
  add_common(cmd_curv, c);
  double h = 1e-3;
  cmd_curv->add_option("--step", h, "difference step");
  cmd_curv->add_option("--samples", samples, "sample points");

  CLI11_PARSE(app, argc, argv);
  std::cout.precision(c.precision);

  try {
    const AlgebraKind kind = kind_of(c.case_name);
    const ModelParams p = params_of(c);

    if (cmd_norm->parsed() || cmd_adj->parsed()) {
      OpElement el = parse_element(kind, c.N, expr_text);
      if (cmd_adj->parsed()) el = el.adjoint();
      if (c.format == "json") {
        json j = element_json(el, numeric, p);
        j["case"] = c.case_name;
        j["N"] = c.N;
        j["input"] = expr_text;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << el.to_string() << "\n";
        if (numeric) {
          for (const auto& [m, s] : el.terms()) {
            auto v = s.eval(p);
            std::cout << "  coeff " << v.real() << (v.imag() < 0 ? " - " : " + ")
                      << std::abs(v.imag()) << "i\n";
          }
        }
      }
      return 0;
    }

    if (cmd_rel->parsed()) {
      auto checks = check_relations(kind, c.N);
      bool all = true;
      json jchecks = json::array();
      for (const auto& chk : checks) {
        all = all && chk.passed;
        if (c.format == "json") {
          jchecks.push_back({{"name", chk.name}, {"passed", chk.passed}});
        } else {
          std::cout << (chk.passed ? "PASS" : "FAIL") << "  " << chk.name
                    << "\n";
        }
      }
      if (c.format == "json")
        std::cout << json{{"case", c.case_name},
                          {"N", c.N},
                          {"passed", all},
                          {"checks", jchecks}}
                         .dump(2)
                  << "\n";
      return all ? 0 : 1;
    }

    if (cmd_act->parsed()) {
      OpElement el = parse_element(kind, c.N, expr_text);
      json out = json::array();
      auto emit = [&](const json& key, Complex amp) {
        if (c.format == "json") {
          out.push_back({{"key", key},
                         {"amp", {{"re", amp.real()}, {"im", amp.imag()}}}});
        } else {
          std::cout << key.dump() << "  " << amp.real()
                    << (amp.imag() < 0 ? " - " : " + ") << std::abs(amp.imag())
                    << "i\n";
        }
      };
      if (flavor_of(kind) == Flavor::Affine) {
        AffineKey key{x0, gshift, kk, xi, zeta};
        for (const auto& [k2, amp] : act(el, p, key))
          emit({{"x0", k2.x0}, {"gshift", k2.gshift}, {"k", k2.k},
                {"xi", k2.xi}, {"zeta", k2.zeta}},
               amp);
      } else if (kind == AlgebraKind::TorusExt) {
        TorusExtKey key{r0, ja, jb, static_cast<int>(kk)};
        for (const auto& [k2, amp] : act(el, p, key))
          emit({{"r0", k2.r0}, {"ja", k2.ja}, {"jb", k2.jb}, {"k", k2.k}}, amp);
      } else {
        TorusBaseKey key{m0_re, m0_im, ja, jb, je, xi};
        for (const auto& [k2, amp] : act(el, p, key))
          emit({{"m0_re", k2.m0_re}, {"m0_im", k2.m0_im}, {"ja", k2.ja},
                {"jb", k2.jb}, {"je", k2.je}, {"xi", k2.xi}},
               amp);
      }
      if (c.format == "json") std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_faith->parsed()) {
      return emit_report(c, faithfulness_report(kind, c.N, c.seed, count));
    }

    if (cmd_dual->parsed()) {
      Report rep = flavor_of(kind) == Flavor::Affine
                       ? duality_affine(c.N, c.seed, samples)
                       : duality_torus(c.N, c.seed, samples);
      return emit_report(c, rep);
    }

    if (cmd_star->parsed()) {
      if (star_check) {
        Report rep = flavor_of(kind) == Flavor::Affine
                         ? star_function_affine(c.N, c.seed, samples)
                         : star_function_torus(c.N, c.seed, samples);
        return emit_report(c, rep);
      }
      OrbitCoord oc{sm, sn, sell, Complex{s_re, s_im}};
      if (flavor_of(kind) == Flavor::Affine) {
        AffineSemiDef f = semidef_affine(oc, p);
        json j{{"p", {{"re", f.p.real()}, {"im", f.p.imag()}}},
               {"y", {{"re", f.y.real()}, {"im", f.y.imag()}}},
               {"z", {{"re", f.z.real()}, {"im", f.z.imag()}}},
               {"w", {{"re", f.w.real()}, {"im", f.w.imag()}}}};
        std::cout << (c.format == "json" ? j.dump(2) : j.dump()) << "\n";
      } else {
        Complex s_root = std::pow(Complex{s_re, s_im}, 1.0 / c.N);
        Complex s{1.0, 0.0};
        for (int i = 0; i < c.N; ++i) s *= s_root;
        oc.s = s;
        TorusSemiDef f = semidef_torus(oc, s_root, p);
        json j{{"p", {{"re", f.p.real()}, {"im", f.p.imag()}}},
               {"x", {{"re", f.x.real()}, {"im", f.x.imag()}}},
               {"x_prime", {{"re", f.x_prime.real()}, {"im", f.x_prime.imag()}}},
               {"y", {{"re", f.y.real()}, {"im", f.y.imag()}}},
               {"w", {{"re", f.w.real()}, {"im", f.w.imag()}}}};
        std::cout << (c.format == "json" ? j.dump(2) : j.dump()) << "\n";
      }
      return 0;
    }

    if (cmd_haus->parsed()) {
      HausdorffReport rep = hausdorff_report(c.N, grid, rr, c.seed);
      if (c.format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "N=" << rep.N << " k_N=" << rep.k_N
                  << " step_error=" << rep.step_error
                  << "\nd_group=" << rep.d_group << " (bound " << rep.bound_group
                  << ")\nd_graph=" << rep.d_graph << " (bound "
                  << rep.bound_graph << ")\n"
                  << (rep.within ? "PASS" : "FAIL") << "\n";
      }
      return rep.within ? 0 : 1;
    }

    if (cmd_curv->parsed()) {
      CurvatureReport rep = curvature_report(h, c.seed, samples);
      if (c.format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "dA deviation:         " << rep.max_dev_dA
                  << "\ncommutator deviation: " << rep.max_dev_comm << " (h/2: "
                  << rep.max_dev_comm_half << ", ratio " << rep.ratio
                  << ")\ntorus relative dev:   " << rep.max_rel_dev_torus << "\n"
                  << (rep.ok ? "PASS" : "FAIL") << "\n";
      }
      return rep.ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
