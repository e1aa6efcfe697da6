// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line entry point.  Every command is deterministic for a fixed
// seed and input set; floats are printed with 17 significant digits so CSV
// output round-trips exactly.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "monolie/cauchy.hpp"
#include "monolie/complex_geometry.hpp"
#include "monolie/json_io.hpp"
#include "monolie/legendre.hpp"
#include "monolie/lie_sphere.hpp"
#include "monolie/multivector.hpp"
#include "monolie/operator_calculus.hpp"
#include "monolie/poly.hpp"
#include "monolie/quadrature.hpp"
#include "monolie/verification.hpp"
#include "monolie/zonal_monogenic.hpp"

namespace {

using monolie::cplx;
using monolie::io::format_g17;
using monolie::io::json;

struct GlobalOpts {
  int K = 40;
  int level = 32;
  double r = 0.8;
  double tol = 1e-7;
  unsigned seed = 0;
  std::string format = "csv";
  std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + g.out + " for writing");
    f << text;
  }
}

bool json_format(const GlobalOpts& g) {
  if (g.format == "json") return true;
  if (g.format == "csv") return false;
  throw CLI::ValidationError("--format", "expected csv or json");
}

std::string multivector_csv_header(int n) {
  std::string h;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    h += ",m" + std::to_string(mask) + "_re";
    h += ",m" + std::to_string(mask) + "_im";
  }
  return h;
}

std::string multivector_csv_fields(const monolie::Multivector& u) {
  std::string row;
  for (unsigned mask = 0; mask < u.size(); ++mask) {
    row += "," + format_g17(u[mask].real());
    row += "," + format_g17(u[mask].imag());
  }
  return row;
}

std::vector<monolie::Paravector> load_points(const std::string& path) {
  return monolie::io::points_from_json(monolie::io::load_json_file(path));
}

// --- lie ------------------------------------------------------------------

int run_lie_norm(const GlobalOpts& g, const std::string& points_path) {
  auto pts = load_points(points_path);
  if (json_format(g)) {
    json rows = json::array();
    for (const auto& p : pts) {
      monolie::AbsC a = monolie::abs_c(p);
      rows.push_back(json{{"lieNorm", monolie::lie_norm(p)},
                          {"absC", {a.value.real(), a.value.imag()}},
                          {"onCut", a.on_cut},
                          {"inBall", monolie::in_lie_ball(p)}});
    }
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index,lie_norm,abs_c_re,abs_c_im,on_cut,in_ball\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    monolie::AbsC a = monolie::abs_c(pts[i]);
    text += std::to_string(i) + "," + format_g17(monolie::lie_norm(pts[i])) +
            "," + format_g17(a.value.real()) + "," + format_g17(a.value.imag()) +
            "," + (a.on_cut ? "1" : "0") + "," +
            (monolie::in_lie_ball(pts[i]) ? "1" : "0") + "\n";
  }
  emit(g, text);
  return 0;
}

int run_lie_member(const GlobalOpts& g, const std::string& points_path) {
  auto pts = load_points(points_path);
  if (json_format(g)) {
    json rows = json::array();
    for (const auto& p : pts) {
      rows.push_back(json{{"gammaMaxDist", monolie::gamma_max_dist(p)},
                          {"lieNorm", monolie::lie_norm(p)},
                          {"memberGamma", monolie::kappa_ball_member(p, g.r)},
                          {"memberNorm", monolie::lie_norm(p) < g.r}});
    }
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index,gamma_max_dist,lie_norm,member_gamma,member_norm\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double gd = monolie::gamma_max_dist(pts[i]);
    double ln = monolie::lie_norm(pts[i]);
    text += std::to_string(i) + "," + format_g17(gd) + "," + format_g17(ln) +
            "," + (monolie::kappa_ball_member(pts[i], g.r) ? "1" : "0") + "," +
            (ln < g.r ? "1" : "0") + "\n";
  }
  emit(g, text);
  return 0;
}

int run_lie_gamma(const GlobalOpts& g, const std::string& points_path) {
  auto pts = load_points(points_path);
  json rows = json::array();
  for (const auto& p : pts) {
    monolie::GammaDescriptor d = monolie::gamma_c(p);
    const char* kind = d.kind == monolie::GammaKind::Point    ? "point"
                       : d.kind == monolie::GammaKind::Sphere ? "sphere"
                                                              : "ball";
    rows.push_back(json{{"kind", kind},
                        {"center", d.center},
                        {"radius", d.radius},
                        {"normal", d.normal},
                        {"maxDist", monolie::gamma_max_dist(p)}});
  }
  if (json_format(g)) {
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index,kind,radius,max_dist,center,normal\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& row = rows[i];
    auto join = [](const json& arr) {
      std::string s;
      for (std::size_t j = 0; j < arr.size(); ++j) {
        if (j) s += ";";
        s += format_g17(arr[j].get<double>());
      }
      return s;
    };
    text += std::to_string(i) + "," + row["kind"].get<std::string>() + "," +
            format_g17(row["radius"].get<double>()) + "," +
            format_g17(row["maxDist"].get<double>()) + "," +
            join(row["center"]) + "," + join(row["normal"]) + "\n";
  }
  emit(g, text);
  return 0;
}

int run_lie_decompose(const GlobalOpts& g, const std::string& poly_path,
                      int max_degree) {
  monolie::PolyMultivector f =
      monolie::io::poly_from_json(monolie::io::load_json_file(poly_path));
  monolie::LieDecomposition dec = monolie::decompose(f, max_degree);
  emit(g, monolie::io::decomposition_to_json(dec).dump(2) + "\n");
  return 0;
}

int run_lie_extend(const GlobalOpts& g, const std::string& dec_path,
                   const std::string& points_path) {
  monolie::LieDecomposition dec =
      monolie::io::decomposition_from_json(monolie::io::load_json_file(dec_path));
  auto pts = load_points(points_path);
  if (json_format(g)) {
    json rows = json::array();
    for (const auto& p : pts)
      rows.push_back(
          monolie::io::multivector_to_json(monolie::map_w(dec, p, g.K)));
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index" + multivector_csv_header(dec.n) + "\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    text += std::to_string(i) +
            multivector_csv_fields(monolie::map_w(dec, pts[i], g.K)) + "\n";
  emit(g, text);
  return 0;
}

// --- legendre ---------------------------------------------------------------

int run_legendre_eval(const GlobalOpts& g, int k, int n, double t) {
  emit(g, format_g17(monolie::legendre_eval(k, n, t)) + "\n");
  return 0;
}

int run_legendre_table(const GlobalOpts& g, int k, int n, int grid) {
  if (grid < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
  const auto q = monolie::HomogenizedLegendre::get(k, n);
  const auto row = [&](double t) {
    const double p = monolie::legendre_eval(k, n, t);
    const double dp = q->eval_ds(monolie::cplx(t, 0.0), 1.0).real();
    const bool bounded = std::abs(p) <= 1.0 + 1e-12;
    return std::tuple<double, double, bool>(p, dp, bounded);
  };
  if (json_format(g)) {
    json rows = json::array();
    for (int i = 0; i < grid; ++i) {
      double t = -1.0 + 2.0 * static_cast<double>(i) / (grid - 1);
      const auto [p, dp, bounded] = row(t);
      rows.push_back(json{{"t", t}, {"p", p}, {"dp", dp}, {"bounded", bounded}});
    }
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "t,p,dp,bounded\n";
  for (int i = 0; i < grid; ++i) {
    double t = -1.0 + 2.0 * static_cast<double>(i) / (grid - 1);
    const auto [p, dp, bounded] = row(t);
    text += format_g17(t) + "," + format_g17(p) + "," + format_g17(dp) + "," +
            (bounded ? "1" : "0") + "\n";
  }
  emit(g, text);
  return 0;
}

// --- cauchy / extend --------------------------------------------------------

monolie::PolyMultivector load_monogenic_poly(const std::string& path) {
  monolie::PolyMultivector p =
      monolie::io::poly_from_json(monolie::io::load_json_file(path));
  // The transform needs monogenic data: restrict to x_0 = 0 and extend.
  return monolie::ck_extension(p);
}

int run_cauchy_transform(const GlobalOpts& g, const std::string& poly_path,
                         const std::string& points_path) {
  monolie::PolyMultivector f = load_monogenic_poly(poly_path);
  const int n = f.generators();
  auto pts = load_points(points_path);
  monolie::SphereQuadrature quad = monolie::build_sphere_quadrature(
      n + 1, g.level, g.r, monolie::SphereMeasure::Surface);
  monolie::MonogenicEvaluator ev = [&f](const monolie::Paravector& x) {
    return f.eval(x);
  };
  if (json_format(g)) {
    json rows = json::array();
    for (const auto& p : pts)
      rows.push_back(
          monolie::io::multivector_to_json(monolie::cauchy_transform(ev, quad, p)));
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index" + multivector_csv_header(n) + "\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    text += std::to_string(i) +
            multivector_csv_fields(monolie::cauchy_transform(ev, quad, pts[i])) +
            "\n";
  emit(g, text);
  return 0;
}

int run_extend_ck(const GlobalOpts& g, const std::string& poly_path,
                  const std::string& points_path) {
  monolie::PolyMultivector f = load_monogenic_poly(poly_path);
  if (points_path.empty()) {
    emit(g, monolie::io::poly_to_json(f).dump(2) + "\n");
    return 0;
  }
  auto pts = load_points(points_path);
  if (json_format(g)) {
    json rows = json::array();
    for (const auto& p : pts)
      rows.push_back(monolie::io::multivector_to_json(f.eval(p)));
    emit(g, rows.dump(2) + "\n");
    return 0;
  }
  std::string text = "index" + multivector_csv_header(f.generators()) + "\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    text += std::to_string(i) + multivector_csv_fields(f.eval(pts[i])) + "\n";
  emit(g, text);
  return 0;
}

// --- opcalc -----------------------------------------------------------------

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json flat = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      flat.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
  return flat;
}

int run_opcalc_run(const GlobalOpts& g, const std::string& tuple_path,
                   const std::string& phi_path) {
  monolie::MatrixTuple A =
      monolie::io::tuple_from_json(monolie::io::load_json_file(tuple_path));
  monolie::PolyMultivector f = load_monogenic_poly(phi_path);
  if (f.generators() != A.n)
    throw std::invalid_argument("phi polynomial and tuple disagree on n");
  monolie::MonogenicEvaluator ev = [&f](const monolie::Paravector& x) {
    return f.eval(x);
  };
  monolie::PhiResult res = monolie::phi_of_a(A, ev, g.r, g.level, g.K);
  json off = json::object();
  for (const auto& [mask, nn] : res.off_blade_norms)
    off[std::to_string(mask)] = nn;
  json out{{"d", A.d},
           {"phi", matrix_to_json(res.phi)},
           {"offBladeNorms", std::move(off)},
           {"tailRatio", res.tail_ratio}};
  emit(g, out.dump(2) + "\n");
  return 0;
}

int run_opcalc_probe(const GlobalOpts& g, const std::string& tuple_path,
                     int degree, int samples) {
  monolie::MatrixTuple A =
      monolie::io::tuple_from_json(monolie::io::load_json_file(tuple_path));
  double ratio = monolie::poly_norm_probe(A, degree, samples, g.seed);
  json out{{"degree", degree}, {"samples", samples}, {"maxRatio", ratio}};
  emit(g, out.dump(2) + "\n");
  return 0;
}

// --- verify -----------------------------------------------------------------

int report_and_status(const GlobalOpts& g,
                      const std::vector<monolie::SuiteResult>& results) {
  emit(g, monolie::format_report(results));
  for (const auto& s : results)
    if (!s.all_pass()) return 1;
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& module) {
  if (module == "all") return report_and_status(g, monolie::verify_all(g.seed));
  return report_and_status(g, {monolie::verify_module(module, g.seed)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monogenic extensions on the lie ball: numerical toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--K", g.K, "series truncation order")->capture_default_str();
  app.add_option("--level", g.level, "sphere quadrature level")
      ->capture_default_str();
  app.add_option("--r", g.r, "sphere radius / membership radius")
      ->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance for check commands")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampling suites")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: csv or json")
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default stdout)");

  int status = 0;

  // lie
  CLI::App* lie = app.add_subcommand("lie", "lie ball and lie sphere tools");
  lie->require_subcommand(1);
  lie->fallthrough();

  std::string lie_points, lie_poly, lie_dec;
  int lie_max_degree = 4;

  CLI::App* lie_norm = lie->add_subcommand("norm", "lie norm and complex modulus");
  lie_norm->fallthrough();
  lie_norm->add_option("--points", lie_points, "points JSON")->required();
  lie_norm->callback([&] { status = run_lie_norm(g, lie_points); });

  CLI::App* lie_member =
      lie->add_subcommand("member", "membership by singular set and by norm");
  lie_member->fallthrough();
  lie_member->add_option("--points", lie_points, "points JSON")->required();
  lie_member->callback([&] { status = run_lie_member(g, lie_points); });

  CLI::App* lie_gamma =
      lie->add_subcommand("gamma", "real singular set descriptor");
  lie_gamma->fallthrough();
  lie_gamma->add_option("--points", lie_points, "points JSON")->required();
  lie_gamma->callback([&] { status = run_lie_gamma(g, lie_points); });

  CLI::App* lie_dec_cmd =
      lie->add_subcommand("decompose", "harmonic components of a polynomial");
  lie_dec_cmd->fallthrough();
  lie_dec_cmd->add_option("--poly", lie_poly, "polynomial JSON")->required();
  lie_dec_cmd->add_option("--max-degree", lie_max_degree, "component bound")
      ->capture_default_str();
  lie_dec_cmd->callback(
      [&] { status = run_lie_decompose(g, lie_poly, lie_max_degree); });

  CLI::App* lie_ext =
      lie->add_subcommand("extend", "monogenic extension of a decomposition");
  lie_ext->fallthrough();
  lie_ext->add_option("--dec", lie_dec, "decomposition JSON")->required();
  lie_ext->add_option("--points", lie_points, "points JSON")->required();
  lie_ext->callback([&] { status = run_lie_extend(g, lie_dec, lie_points); });

  CLI::App* lie_verify =
      lie->add_subcommand("verify", "kernel and extension-map suites");
  lie_verify->fallthrough();
  lie_verify->callback([&] {
    status = report_and_status(g, {monolie::verify_module("kernel", g.seed),
                                   monolie::verify_module("diagram", g.seed)});
  });

  // legendre
  CLI::App* leg = app.add_subcommand("legendre", "legendre family tools");
  leg->require_subcommand(1);
  leg->fallthrough();
  int leg_k = 0, leg_n = 3, leg_grid = 11;
  double leg_t = 0.0;

  CLI::App* leg_eval = leg->add_subcommand("eval", "single evaluation");
  leg_eval->fallthrough();
  leg_eval->add_option("--k", leg_k, "degree")->required();
  leg_eval->add_option("--n", leg_n, "family dimension")->required();
  leg_eval->add_option("--t", leg_t, "argument in [-1,1]")->required();
  leg_eval->callback([&] { status = run_legendre_eval(g, leg_k, leg_n, leg_t); });

  CLI::App* leg_table = leg->add_subcommand("table", "values on a uniform grid");
  leg_table->fallthrough();
  leg_table->add_option("--k", leg_k, "degree")->required();
  leg_table->add_option("--n", leg_n, "family dimension")->required();
  leg_table->add_option("--grid", leg_grid, "grid size")->capture_default_str();
  leg_table->callback(
      [&] { status = run_legendre_table(g, leg_k, leg_n, leg_grid); });

  // cauchy
  CLI::App* cauchy = app.add_subcommand("cauchy", "cauchy transform tools");
  cauchy->require_subcommand(1);
  cauchy->fallthrough();
  std::string cauchy_poly, cauchy_points;

  CLI::App* cauchy_tr = cauchy->add_subcommand(
      "transform", "transform of the extension of a polynomial");
  cauchy_tr->fallthrough();
  cauchy_tr->add_option("--poly", cauchy_poly, "polynomial JSON")->required();
  cauchy_tr->add_option("--points", cauchy_points, "points JSON")->required();
  cauchy_tr->callback(
      [&] { status = run_cauchy_transform(g, cauchy_poly, cauchy_points); });

  CLI::App* cauchy_check =
      cauchy->add_subcommand("check", "reproduction and regularity suite");
  cauchy_check->fallthrough();
  cauchy_check->callback([&] { status = run_verify(g, "cauchy"); });

  // extend
  CLI::App* extend = app.add_subcommand("extend", "monogenic extension tools");
  extend->require_subcommand(1);
  extend->fallthrough();
  std::string extend_poly, extend_points;

  CLI::App* extend_ck = extend->add_subcommand(
      "ck", "power-series extension of spatial data");
  extend_ck->fallthrough();
  extend_ck->add_option("--poly", extend_poly, "polynomial JSON")->required();
  extend_ck->add_option("--points", extend_points,
                        "optional points JSON (evaluate instead of printing "
                        "the polynomial)");
  extend_ck->callback(
      [&] { status = run_extend_ck(g, extend_poly, extend_points); });

  // opcalc
  CLI::App* opcalc = app.add_subcommand("opcalc", "matrix functional calculus");
  opcalc->require_subcommand(1);
  opcalc->fallthrough();
  std::string op_tuple, op_phi;
  int op_degree = 2, op_samples = 5;

  CLI::App* op_run = opcalc->add_subcommand("run", "phi(A) by sphere quadrature");
  op_run->fallthrough();
  op_run->add_option("--tuple", op_tuple, "matrix tuple JSON")->required();
  op_run->add_option("--phi", op_phi, "polynomial JSON")->required();
  op_run->callback([&] { status = run_opcalc_run(g, op_tuple, op_phi); });

  CLI::App* op_probe =
      opcalc->add_subcommand("probe", "empirical polynomial norm ratio");
  op_probe->fallthrough();
  op_probe->add_option("--tuple", op_tuple, "matrix tuple JSON")->required();
  op_probe->add_option("--degree", op_degree, "homogeneous degree")
      ->capture_default_str();
  op_probe->add_option("--samples", op_samples, "sample count")
      ->capture_default_str();
  op_probe->callback(
      [&] { status = run_opcalc_probe(g, op_tuple, op_degree, op_samples); });

  // verify
  CLI::App* verify = app.add_subcommand("verify", "property suites");
  verify->fallthrough();
  std::string verify_mod = "all";
  verify->add_option("module", verify_mod,
                     "all or one of: clifford lie legendre monogenic cauchy "
                     "kernel diagram opcalc")
      ->capture_default_str();
  verify->callback([&] { status = run_verify(g, verify_mod); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return status;
}
