#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmfa/dyadic.hpp"
#include "pmfa/exponents.hpp"
#include "pmfa/generators.hpp"
#include "pmfa/io.hpp"
#include "pmfa/leaders.hpp"
#include "pmfa/mfa.hpp"
#include "pmfa/report.hpp"
#include "pmfa/wavelet.hpp"

namespace {

using namespace pmfa;
using nlohmann::json;

constexpr const char* kToolVersion = "pmfa 1.0.0";
constexpr double kInf = std::numeric_limits<double>::infinity();

// Exit-code contract: 0 pass, 1 tolerance failure, 2 usage/IO, 3 estimation.
enum ExitCode { kOk = 0, kToleranceFailure = 1, kUsageError = 2, kEstimationError = 3 };

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line.push_back(',');
    line += c;
  }
  line.push_back('\n');
  return line;
}

std::string num(double v) { return io::format_double(v); }

Array parse_grid(const json& spec) {
  if (spec.is_array()) {
    Array g(static_cast<Index>(spec.size()));
    for (size_t i = 0; i < spec.size(); ++i) g[static_cast<Index>(i)] = io::number_from(spec[i]);
    return g;
  }
  return grid_range(spec.at("min").get<double>(), spec.at("max").get<double>(),
                    spec.at("step").get<double>());
}

struct AnalysisConfig {
  std::string input;
  std::optional<std::string> truth_path;
  std::string out_dir = "pmfa-out";
  int filter_order = 8;
  Array p_grid = grid_range(0.25, 8.0, 0.25);
  std::optional<Array> q_grid;  // default derived from the estimated p0
  Array r_grid = grid_range(-5.0, 5.0, 0.25);
  Array h_grid = grid_range(-0.5, 1.5, 0.01);
  std::optional<JRange> j_range;  // default [3, j_max-2]
  std::optional<double> x0;       // default from truth when present
  double dq = 0.05;
  std::optional<double> q0_override;
  std::vector<double> spectrum_p{2.0, kInf};
  ZeroPolicy zero_policy = ZeroPolicy::exclude_undefined;
  unsigned long long seed = 0;
  // tolerances applied when a truth file provides the reference value
  double tol_hmin = 0.1;
  double tol_eta = 0.1;
  std::vector<double> eta_check_p{0.5, 1.0, 2.0};
  double tol_h = 0.1;
  double tol_lacunarity = 0.1;
  double tol_p0 = 0.5;

  json raw;  // merged config recorded in the provenance hash
};

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config " + path);
  }
  json j = json::parse(in);
  AnalysisConfig cfg;
  cfg.raw = j;
  cfg.input = j.at("input").get<std::string>();
  if (j.contains("truth")) cfg.truth_path = j.at("truth").get<std::string>();
  if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
  if (j.contains("filter")) cfg.filter_order = j.at("filter").value("order", 8);
  if (j.contains("p_grid")) cfg.p_grid = parse_grid(j.at("p_grid"));
  if (j.contains("q_grid")) cfg.q_grid = parse_grid(j.at("q_grid"));
  if (j.contains("r_grid")) cfg.r_grid = parse_grid(j.at("r_grid"));
  if (j.contains("h_grid")) cfg.h_grid = parse_grid(j.at("h_grid"));
  if (j.contains("j_range")) {
    cfg.j_range = JRange{j.at("j_range")[0].get<int>(), j.at("j_range")[1].get<int>()};
  }
  if (j.contains("x0")) cfg.x0 = j.at("x0").get<double>();
  if (j.contains("dq")) cfg.dq = j.at("dq").get<double>();
  if (j.contains("q0")) cfg.q0_override = io::number_from(j.at("q0"));
  if (j.contains("spectrum_p")) {
    cfg.spectrum_p.clear();
    for (const auto& v : j.at("spectrum_p")) cfg.spectrum_p.push_back(io::number_from(v));
  }
  if (j.contains("zero_policy")) {
    cfg.zero_policy = j.at("zero_policy").get<std::string>() == "strict"
                          ? ZeroPolicy::strict
                          : ZeroPolicy::exclude_undefined;
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long long>();
  if (j.contains("checks")) {
    const json& c = j.at("checks");
    cfg.tol_hmin = c.value("hmin_tol", cfg.tol_hmin);
    cfg.tol_eta = c.value("eta_tol", cfg.tol_eta);
    cfg.tol_h = c.value("h_tol", cfg.tol_h);
    cfg.tol_lacunarity = c.value("lacunarity_tol", cfg.tol_lacunarity);
    cfg.tol_p0 = c.value("p0_tol", cfg.tol_p0);
    if (c.contains("eta_p")) {
      cfg.eta_check_p.clear();
      for (const auto& v : c.at("eta_p")) cfg.eta_check_p.push_back(v.get<double>());
    }
  }
  return cfg;
}

CoefficientField load_input(const std::string& path, const FilterBank& bank) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".cff") return io::read_field(path);
  Array signal = ext == ".csv" ? io::read_signal_csv(path) : io::read_signal_f64(path);
  if ((signal == 0.0).all()) {
    throw estimation_error("input signal is identically zero");
  }
  return analyze(signal, bank);
}

json fit_to_json(const RegressionFit& fit) {
  return {{"slope", io::number_or_sentinel(fit.slope)},
          {"intercept", io::number_or_sentinel(fit.intercept)},
          {"residual_rms", io::number_or_sentinel(fit.residual_rms)},
          {"j1", fit.j1},
          {"j2", fit.j2},
          {"points_used", fit.points_used}};
}

std::string spectrum_tag(double p) {
  if (std::isinf(p)) return "inf";
  std::string s = io::format_double(p);
  for (auto& ch : s) {
    if (ch == '.') ch = '_';
  }
  return s;
}

void write_spectrum_csv(const std::string& path, const Spectrum& spec) {
  std::string csv = csv_line({"H", "d", "r_of_H", "interior"});
  for (Index i = 0; i < spec.h_grid.size(); ++i) {
    csv += csv_line({num(spec.h_grid[i]), num(spec.d[i]), num(spec.r_of_h[i]),
                     spec.interior[i] ? "1" : "0"});
  }
  io::atomic_write(path, csv);
}

void write_structure_csv(const std::string& path, const StructureFunctions& s) {
  std::string csv = csv_line({"r", "j", "log2_S", "count"});
  for (Index i = 0; i < s.r_grid.size(); ++i) {
    for (int j = 0; j <= s.j_max; ++j) {
      csv += csv_line({num(s.r_grid[i]), std::to_string(j), num(s.log_s(i, j)),
                       std::to_string(s.counts[j])});
    }
  }
  io::atomic_write(path, csv);
}

int run_analysis(const AnalysisConfig& cfg) {
  const FilterBank bank = FilterBank::daubechies(cfg.filter_order);
  const CoefficientField field = load_input(cfg.input, bank);
  std::filesystem::create_directories(cfg.out_dir);
  const auto out = [&](const std::string& name) { return cfg.out_dir + "/" + name; };

  std::optional<generators::GroundTruth> truth;
  if (cfg.truth_path) truth = io::read_truth(*cfg.truth_path);

  JRange jr = cfg.j_range ? *cfg.j_range : default_j_range(field);
  if (jr.j2 <= 0) jr.j2 = field.j_max - 2;  // partial override keeps the default upper end

  Report report;
  report.provenance = {{"tool", kToolVersion},
                       {"config_hash", config_hash(cfg.raw)},
                       {"seed", cfg.seed},
                       {"filter", bank.name}};
  json& est = report.estimates;
  est["j_max"] = field.j_max;
  est["j_range"] = {jr.j1, jr.j2};

  // Global regularity.
  const Estimate hmin = estimate_hmin(field, jr);
  est["hmin"] = {{"value", io::number_or_sentinel(hmin.value)}, {"fit", fit_to_json(hmin.fit)}};
  if (truth && truth->hmin) {
    report.checks.push_back({"hmin", hmin.value, *truth->hmin, cfg.tol_hmin,
                             std::abs(hmin.value - *truth->hmin) <= cfg.tol_hmin, ""});
  }

  // Wavelet scaling function and the critical Lebesgue index.
  const ScalingFunction eta = wavelet_scaling_function(field, cfg.p_grid, jr);
  {
    std::string csv = csv_line({"p", "eta_hat", "residual_rms"});
    json arr = json::array();
    for (Index i = 0; i < eta.grid.size(); ++i) {
      csv += csv_line({num(eta.grid[i]), num(eta.values[i]),
                       num(eta.fits[static_cast<size_t>(i)].residual_rms)});
      arr.push_back({{"p", eta.grid[i]}, {"value", io::number_or_sentinel(eta.values[i])}});
    }
    io::atomic_write(out("eta.csv"), csv);
    est["eta"] = arr;
    const double sobolev_drift = eta_over_p_increase(eta);
    est["eta_over_p_increase"] = io::number_or_sentinel(sobolev_drift);
    if (sobolev_drift > 0.05) {
      std::cerr << "warning: eta(p)/p increases along the grid by " << sobolev_drift
                << "; the scaling-function fit may be unreliable\n";
    }
  }
  if (truth && truth->eta) {
    for (double p : cfg.eta_check_p) {
      Array pg(1);
      pg[0] = p;
      const ScalingFunction one = wavelet_scaling_function(field, pg, jr);
      const double want = (*truth->eta)(p);
      std::ostringstream name;
      name << "eta(p=" << p << ")";
      report.checks.push_back({name.str(), one.values[0], want, cfg.tol_eta,
                               std::abs(one.values[0] - want) <= cfg.tol_eta, ""});
    }
  }
  const P0Bracket p0 = critical_lebesgue_index(eta);
  est["p0"] = {{"lower", io::number_or_sentinel(p0.lower)},
               {"upper", io::number_or_sentinel(p0.upper)}};
  if (truth) {
    if (std::isinf(truth->p0)) {
      report.checks.push_back({"p0", p0.upper, truth->p0, cfg.tol_p0, std::isinf(p0.upper),
                               "expected eta > 0 on the whole grid"});
    } else {
      const double mid = 0.5 * (p0.lower + p0.upper);
      report.checks.push_back({"p0", mid, truth->p0, cfg.tol_p0,
                               std::abs(mid - truth->p0) <= cfg.tol_p0, ""});
    }
  }

  // Sparsity certificate: nonzero coefficients per scale and their growth
  // rate; a rate below 1 predicts a positive critical Lebesgue index.
  {
    const IntArray counts = field.nonzero_counts();
    std::vector<double> xs, ys;
    std::string csv = csv_line({"j", "nonzero"});
    for (int j = 0; j <= field.j_max; ++j) {
      csv += csv_line({std::to_string(j), std::to_string(counts[j])});
      if (j >= jr.j1 && j <= jr.j2 && counts[j] > 0) {
        xs.push_back(static_cast<double>(j));
        ys.push_back(std::log2(static_cast<double>(counts[j])));
      }
    }
    io::atomic_write(out("sparsity.csv"), csv);
    if (xs.size() >= 3) {
      const RegressionFit fit = ols_fit(xs, ys, jr.j1, jr.j2);
      const bool sparse = fit.slope < 0.99;
      est["sparsity"] = {{"eta_prime", io::number_or_sentinel(fit.slope)},
                         {"sparse", sparse},
                         {"predicts_positive_p0", sparse}};
    }
  }

  // Pointwise analysis at the singular point, when one is known.
  std::optional<double> x0 = cfg.x0;
  if (!x0 && truth && truth->x0) x0 = truth->x0;
  double q0 = 0.0;
  if (cfg.q0_override) {
    q0 = *cfg.q0_override;
  } else if (!std::isinf(p0.upper)) {
    q0 = 2.0 / (p0.lower + p0.upper);
  }
  est["q0"] = q0;
  if (x0) {
    Array qg;
    if (cfg.q_grid) {
      qg = *cfg.q_grid;
    } else {
      std::vector<double> qs;
      for (double q : {0.0, 0.25, 0.5, 1.0}) {
        if (q >= q0 + (q0 > 0.0 ? kQ0Margin : 0.0)) qs.push_back(q);
      }
      while (qs.size() < 3) {
        qs.insert(qs.begin(), qs.empty() ? 1.0 : (q0 + kQ0Margin + qs.front()) / 2.0);
      }
      qg.resize(static_cast<Index>(qs.size()));
      for (size_t i = 0; i < qs.size(); ++i) qg[static_cast<Index>(i)] = qs[i];
    }
    const ExponentCurve curve = p_exponent_curve(field, *x0, qg, jr);
    std::string csv = csv_line({"q", "h_hat", "residual_rms"});
    json arr = json::array();
    std::vector<double> xs, ys;
    for (Index i = 0; i < qg.size(); ++i) {
      csv += csv_line({num(qg[i]), num(curve.h[i]),
                       num(curve.fits[static_cast<size_t>(i)].residual_rms)});
      arr.push_back({{"q", qg[i]}, {"h", io::number_or_sentinel(curve.h[i])}});
      xs.push_back(qg[i]);
      ys.push_back(curve.h[i]);
    }
    io::atomic_write(out("pointwise.csv"), csv);
    {
      // raw log2 leader decay along the dyadic path above x0, per q
      std::string path_csv = csv_line({"q", "j", "log2_leader"});
      for (Index i = 0; i < qg.size(); ++i) {
        const LeaderField lead =
            qg[i] == 0.0 ? wavelet_leaders(field) : p_leaders(field, 1.0 / qg[i]);
        for (int j = jr.j1; j <= jr.j2; ++j) {
          const Index k = locate(*x0, j).k;
          if (!lead.is_defined(j, k)) continue;
          path_csv += csv_line({num(qg[i]), std::to_string(j), num(std::log2(lead.value(j, k)))});
        }
      }
      io::atomic_write(out("leaders_x0.csv"), path_csv);
    }
    const RegressionFit hq = ols_fit(xs, ys, 0, 0);
    const Estimate lac = pointwise_lacunarity(field, *x0, q0, cfg.dq, jr);
    est["pointwise"] = {
        {"x0", *x0},
        {"curve", arr},
        {"curve_slope", io::number_or_sentinel(hq.slope)},
        {"curve_intercept", io::number_or_sentinel(hq.intercept)},
        {"concavity_violation", io::number_or_sentinel(curve.max_concavity_violation())},
        {"lacunarity",
         {{"value", io::number_or_sentinel(lac.value)}, {"fit", fit_to_json(lac.fit)}}}};
    if (truth && truth->p_exponent) {
      report.checks.push_back({"h(q) slope", hq.slope, truth->p_exponent->slope, cfg.tol_h,
                               std::abs(hq.slope - truth->p_exponent->slope) <= cfg.tol_h, ""});
      report.checks.push_back({"h(q) intercept", hq.intercept, truth->p_exponent->intercept,
                               cfg.tol_h,
                               std::abs(hq.intercept - truth->p_exponent->intercept) <= cfg.tol_h,
                               ""});
    }
    if (truth && truth->lacunarity) {
      report.checks.push_back({"lacunarity", lac.value, *truth->lacunarity, cfg.tol_lacunarity,
                               std::abs(lac.value - *truth->lacunarity) <= cfg.tol_lacunarity,
                               ""});
    }
  }

  // Leader-based spectra.
  json spectra = json::array();
  for (double p : cfg.spectrum_p) {
    const LeaderField lead = std::isinf(p) ? wavelet_leaders(field) : p_leaders(field, p);
    const StructureFunctions s = structure_functions(lead, cfg.r_grid, cfg.zero_policy);
    const Spectrum spec = legendre_spectrum(scaling_function(s, jr), cfg.h_grid);
    const std::string tag = spectrum_tag(p);
    write_structure_csv(out("structure_p" + tag + ".csv"), s);
    write_spectrum_csv(out("spectrum_p" + tag + ".csv"), spec);
    const auto [hm, dm] = spec.mode();
    spectra.push_back({{"p", io::number_or_sentinel(p)},
                       {"support", {io::number_or_sentinel(spec.support_lo()),
                                    io::number_or_sentinel(spec.support_hi())}},
                       {"mode_h", io::number_or_sentinel(hm)},
                       {"mode_d", io::number_or_sentinel(dm)},
                       {"note", spec.note}});
  }
  {
    const LeaderField lead = l_leaders(field, q0 > 0.0 ? q0 + kQ0Margin : 0.0, cfg.dq);
    const StructureFunctions s = structure_functions(lead, cfg.r_grid, cfg.zero_policy);
    const Spectrum spec = legendre_spectrum(scaling_function(s, jr), cfg.h_grid);
    write_structure_csv(out("structure_lac.csv"), s);
    write_spectrum_csv(out("spectrum_lac.csv"), spec);
    const auto [lm, dm] = spec.mode();
    spectra.push_back({{"p", "lacunarity"},
                       {"support", {io::number_or_sentinel(spec.support_lo()),
                                    io::number_or_sentinel(spec.support_hi())}},
                       {"mode_h", io::number_or_sentinel(lm)},
                       {"mode_d", io::number_or_sentinel(dm)},
                       {"note", spec.note}});
  }
  est["spectra"] = spectra;

  io::atomic_write(out("report.json"), report.to_json().dump(2) + "\n");

  for (const auto& c : report.checks) {
    std::printf("%-18s est=%-12.6g", c.name.c_str(), c.estimate);
    if (c.truth) std::printf(" truth=%-12.6g", *c.truth);
    if (c.pass) std::printf(" %s", *c.pass ? "pass" : "FAIL");
    std::printf("\n");
  }
  return report.all_pass() ? kOk : kToleranceFailure;
}

int run_report(const std::string& report_path, const std::string& truth_path) {
  std::ifstream in(report_path);
  if (!in) {
    throw std::runtime_error("cannot open report " + report_path);
  }
  const json rep = json::parse(in);
  const generators::GroundTruth truth = io::read_truth(truth_path);
  const json& est = rep.at("estimates");

  int failures = 0;
  const auto row = [&](const std::string& name, double estimate, double want, double tol) {
    const bool ok = std::abs(estimate - want) <= tol;
    failures += ok ? 0 : 1;
    std::printf("%-18s est=%-12.6g truth=%-12.6g tol=%-6g %s\n", name.c_str(), estimate, want,
                tol, ok ? "pass" : "FAIL");
  };
  if (truth.hmin && est.contains("hmin")) {
    row("hmin", io::number_from(est.at("hmin").at("value")), *truth.hmin, 0.1);
  }
  if (truth.eta && est.contains("eta")) {
    for (const auto& e : est.at("eta")) {
      const double p = e.at("p").get<double>();
      row("eta(p=" + io::format_double(p) + ")", io::number_from(e.at("value")),
          (*truth.eta)(p), 0.1);
    }
  }
  if (est.contains("pointwise") && truth.p_exponent) {
    row("h(q) slope", io::number_from(est.at("pointwise").at("curve_slope")),
        truth.p_exponent->slope, 0.1);
    row("h(q) intercept", io::number_from(est.at("pointwise").at("curve_intercept")),
        truth.p_exponent->intercept, 0.1);
    if (truth.lacunarity) {
      row("lacunarity", io::number_from(est.at("pointwise").at("lacunarity").at("value")),
          *truth.lacunarity, 0.1);
    }
  }
  return failures == 0 ? kOk : kToleranceFailure;
}

json meta_for(const std::string& generator, const json& params, unsigned long long seed) {
  return {{"generator", generator}, {"params", params}, {"seed", seed}};
}

void write_synthesis(const generators::Synthesis& syn, const std::string& out_dir,
                     const json& meta) {
  std::filesystem::create_directories(out_dir);
  if (syn.signal) {
    io::write_signal(out_dir + "/signal", *syn.signal, meta);
  } else {
    io::write_field(out_dir + "/field.cff", *syn.field, default_bank().name);
  }
  io::write_truth(out_dir + "/truth.json", syn.truth);
  if (!syn.locations.empty()) {
    json locs = json::array();
    for (const auto& per_scale : syn.locations) {
      json row = json::array();
      for (Index k : per_scale) row.push_back(k);
      locs.push_back(row);
    }
    io::atomic_write(out_dir + "/locations.json", locs.dump() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis and p-exponent multifractal analysis of 1-d signals"};
  app.require_subcommand(1);

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "synthesize an archetypal signal with ground truth");
  synth->require_subcommand(1);
  std::string out_dir = "pmfa-out";
  double g_alpha = 0.3, g_omega = 1.5, g_gamma = 2.0, g_a = 0.5, g_b = 3.0, g_eta = 0.8;
  int g_J = 14, g_terms = 10000;
  Index g_n = 16384;
  unsigned long long g_seed = 0;
  std::string g_mode = "coeff";

  auto* sc_cusp = synth->add_subcommand("cusp", "cusp |x-1/2|^alpha");
  sc_cusp->add_option("--alpha", g_alpha)->required();
  sc_cusp->add_option("--J", g_J);
  sc_cusp->add_option("--mode", g_mode, "coeff|time");
  sc_cusp->add_option("--out", out_dir);

  auto* sc_comb = synth->add_subcommand("comb", "lacunary comb");
  sc_comb->add_option("--alpha", g_alpha)->required();
  sc_comb->add_option("--omega", g_omega)->required();
  sc_comb->add_option("--gamma", g_gamma)->required();
  sc_comb->add_option("--J", g_J);
  sc_comb->add_option("--out", out_dir);

  auto* sc_chirp = synth->add_subcommand("chirp", "thin chirp");
  sc_chirp->add_option("--a", g_a)->required();
  sc_chirp->add_option("--b", g_b)->required();
  sc_chirp->add_option("--alpha", g_alpha)->required();
  sc_chirp->add_option("--J", g_J);
  sc_chirp->add_option("--out", out_dir);

  auto* sc_lws = synth->add_subcommand("lws", "lacunary wavelet series");
  sc_lws->add_option("--alpha", g_alpha)->required();
  sc_lws->add_option("--eta", g_eta)->required();
  sc_lws->add_option("--J", g_J);
  sc_lws->add_option("--seed", g_seed);
  sc_lws->add_option("--out", out_dir);

  auto* sc_weier = synth->add_subcommand("weierstrass", "Weierstrass function");
  sc_weier->add_option("--a", g_a)->required();
  sc_weier->add_option("--b", g_b)->required();
  sc_weier->add_option("--n", g_n, "number of samples");
  sc_weier->add_option("--terms", g_terms);
  sc_weier->add_option("--out", out_dir);

  auto* sc_noise = synth->add_subcommand("noise", "Gaussian white noise");
  sc_noise->add_option("--n", g_n);
  sc_noise->add_option("--seed", g_seed);
  sc_noise->add_option("--out", out_dir);

  auto* sc_cantor = synth->add_subcommand("cantor", "middle-third Cantor measure");
  sc_cantor->add_option("--J", g_J);
  sc_cantor->add_option("--out", out_dir);

  auto* sc_etazero = synth->add_subcommand("etazero", "1/j^2 counterexample field");
  sc_etazero->add_option("--J", g_J);
  sc_etazero->add_option("--out", out_dir);

  // ---- analyze ----
  auto* analyze_cmd = app.add_subcommand("analyze", "run the estimation pipeline from a config");
  std::string config_path;
  analyze_cmd->add_option("--config", config_path, "JSON config")->required();
  std::optional<std::string> ov_input, ov_out, ov_truth;
  std::optional<int> ov_j1, ov_j2, ov_order;
  std::optional<double> ov_x0, ov_dq;
  analyze_cmd->add_option("--input", ov_input, "override config input");
  analyze_cmd->add_option("--out", ov_out, "override output directory");
  analyze_cmd->add_option("--truth", ov_truth, "override truth sidecar");
  analyze_cmd->add_option("--j1", ov_j1);
  analyze_cmd->add_option("--j2", ov_j2);
  analyze_cmd->add_option("--x0", ov_x0);
  analyze_cmd->add_option("--dq", ov_dq);
  analyze_cmd->add_option("--order", ov_order, "filter order");

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "re-compare a report against a truth file");
  std::string report_path, compare_path;
  report_cmd->add_option("--report", report_path, "report.json from analyze")->required();
  report_cmd->add_option("--compare", compare_path, "truth.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (synth->parsed()) {
      using namespace pmfa::generators;
      if (sc_cusp->parsed()) {
        const CuspMode mode = g_mode == "time" ? CuspMode::time : CuspMode::coefficients;
        write_synthesis(cusp(g_alpha, g_J, mode), out_dir,
                        meta_for("cusp", {{"alpha", g_alpha}, {"J", g_J}, {"mode", g_mode}}, 0));
      } else if (sc_comb->parsed()) {
        write_synthesis(
            lacunary_comb(g_alpha, g_omega, g_gamma, g_J), out_dir,
            meta_for("lacunary_comb",
                     {{"alpha", g_alpha}, {"omega", g_omega}, {"gamma", g_gamma}, {"J", g_J}},
                     0));
      } else if (sc_chirp->parsed()) {
        write_synthesis(thin_chirp(g_a, g_b, g_alpha, g_J), out_dir,
                        meta_for("thin_chirp",
                                 {{"a", g_a}, {"b", g_b}, {"alpha", g_alpha}, {"J", g_J}}, 0));
      } else if (sc_lws->parsed()) {
        write_synthesis(lacunary_wavelet_series(g_alpha, g_eta, g_J, g_seed), out_dir,
                        meta_for("lacunary_wavelet_series",
                                 {{"alpha", g_alpha}, {"eta", g_eta}, {"J", g_J}}, g_seed));
      } else if (sc_weier->parsed()) {
        write_synthesis(weierstrass(g_a, g_b, g_terms, g_n), out_dir,
                        meta_for("weierstrass", {{"a", g_a}, {"b", g_b}, {"n", g_n}}, 0));
      } else if (sc_noise->parsed()) {
        write_synthesis(white_noise(g_n, g_seed), out_dir,
                        meta_for("white_noise", {{"n", g_n}}, g_seed));
      } else if (sc_cantor->parsed()) {
        write_synthesis(cantor_measure(g_J), out_dir,
                        meta_for("cantor_measure", {{"J", g_J}}, 0));
      } else if (sc_etazero->parsed()) {
        write_synthesis(eta_zero_counterexample(g_J), out_dir,
                        meta_for("eta_zero_counterexample", {{"J", g_J}}, 0));
      }
      return kOk;
    }
    if (analyze_cmd->parsed()) {
      AnalysisConfig cfg = load_config(config_path);
      if (ov_input) cfg.input = *ov_input;
      if (ov_out) cfg.out_dir = *ov_out;
      if (ov_truth) cfg.truth_path = *ov_truth;
      if (ov_j1 || ov_j2) {
        JRange jr = cfg.j_range.value_or(JRange{3, -1});
        if (ov_j1) jr.j1 = *ov_j1;
        if (ov_j2) jr.j2 = *ov_j2;
        cfg.j_range = jr;
      }
      if (ov_x0) cfg.x0 = *ov_x0;
      if (ov_dq) cfg.dq = *ov_dq;
      if (ov_order) cfg.filter_order = *ov_order;
      json overrides;
      if (ov_input) overrides["input"] = *ov_input;
      if (ov_j1) overrides["j1"] = *ov_j1;
      if (ov_j2) overrides["j2"] = *ov_j2;
      if (!overrides.is_null()) cfg.raw["overrides"] = overrides;
      return run_analysis(cfg);
    }
    if (report_cmd->parsed()) {
      return run_report(report_path, compare_path);
    }
  } catch (const estimation_error& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kEstimationError;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
