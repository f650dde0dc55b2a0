// Command-line front end: run or sweep a scenario, verify the field
// oracles, or list the built-in presets.
//
// Exit codes: 0 success, 2 configuration or usage error, 3 numerical
// failure (non-convergent quadrature, degenerate state, oracle mismatch).

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "ghost/ghost.hpp"

using namespace ghost;

namespace {

struct Overrides {
  double theta = -1.0;       // negative means "keep scenario value"
  double beta_scale = -1.0;
  int radial_nodes = 0;
  std::string out_dir;
  bool plot = false;
};

Scenario load_with_overrides(const std::string& source, const Overrides& ov) {
  Scenario s = load_scenario(source);
  if (ov.theta >= 0.0) s.spdc.theta = ov.theta;
  if (ov.beta_scale >= 0.0) s.spdc.beta_scale = ov.beta_scale;
  if (ov.radial_nodes > 0) s.quadrature.radial_nodes = ov.radial_nodes;
  s.validate();
  return s;
}

void print_rows(const std::vector<ReportRow>& rows) {
  std::fputs(to_csv(rows).c_str(), stdout);
}

int oracle_check() {
  ModelConfig cfg;
  SpdcConfig vac;
  vac.theta = 0.0;
  QuadratureSpec quad;
  Detector det;
  det.smearing = SmearingProfile::unit_ft(0.1, 3);
  det.worldline = InertialWorldline{{1.0, 0.0, 0.0}};

  bool ok = true;
  std::printf("%-32s %-22s %-22s %-10s\n", "quantity", "oracle", "pipeline",
              "rel_dev");
  for (double lam : {0.5, 1.0, 2.0}) {
    det.lambda = lam;
    GexpCache cache(cfg, vac, {det}, 0.0, quad);
    const GTable gt =
        build_g_table(1, [&](const DiffVector& c) { return cache(c); });
    const auto rho =
        assemble_rho(RegisterState::from_string("g", 0.0), gt, {det.omega});

    OracleReport rep;
    rep.quantity = "vacuum_excitation lambda=" + std::to_string(lam);
    rep.oracle_value = vacuum_excitation_oracle(cfg, det);
    rep.pipeline_value = rho.mat(1, 1).real();
    std::printf("%-32s %-22.15g %-22.15g %-10.2e\n", rep.quantity.c_str(),
                rep.oracle_value, rep.pipeline_value, rep.rel_dev());
    if (!rep.finite() || rep.rel_dev() >= 1e-6) ok = false;
  }

  det.lambda = 1.0;
  OracleReport norm;
  norm.quantity = "norm_integral c=(2)";
  norm.oracle_value = 4.0 * radial_norm_integral_oracle(cfg, det);
  norm.pipeline_value =
      beta_norm_integral(cfg, vac, {det}, 0.0, DiffVector({2}), quad).value;
  std::printf("%-32s %-22.15g %-22.15g %-10.2e\n", norm.quantity.c_str(),
              norm.oracle_value, norm.pipeline_value, norm.rel_dev());
  if (!norm.finite() || norm.rel_dev() >= 1e-6) ok = false;

  std::printf("oracle-check: %s\n", ok ? "all quantities agree" : "MISMATCH");
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-perturbative detector-pair imaging simulator"};
  app.require_subcommand(1);

  Overrides ov;
  std::string scenario_arg;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_arg,
                    "preset name (table1, table2, table3) or scenario file")
        ->required();
    cmd->add_option("--theta", ov.theta, "override the squeezing parameter");
    cmd->add_option("--beta-scale", ov.beta_scale,
                    "override the amplitude prefactor");
    cmd->add_option("--radial-nodes", ov.radial_nodes,
                    "override the radial quadrature node count");
    cmd->add_option("--out", ov.out_dir, "output directory for the report");
    cmd->add_flag("--plot", ov.plot, "also write the contrast plot (SVG)");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "single evaluation at the configured coupling instant");
  add_common(cmd_run);
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "evaluate every configured coupling instant");
  add_common(cmd_sweep);
  app.add_subcommand("oracle-check", "verify the engine against independent oracles");
  CLI::App* cmd_presets = app.add_subcommand("presets", "preset utilities");
  cmd_presets->require_subcommand(1);
  cmd_presets->add_subcommand("list", "list built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_run->parsed() || cmd_sweep->parsed()) {
      const Scenario s = load_with_overrides(scenario_arg, ov);
      const std::vector<ReportRow> rows =
          cmd_run->parsed() ? std::vector<ReportRow>{run_single(s)}
                            : run_sweep(s);
      print_rows(rows);
      emit_report(rows, s, ov.out_dir, ov.plot);
      return 0;
    }
    if (app.got_subcommand("oracle-check")) return oracle_check();
    if (cmd_presets->parsed()) {
      for (const auto& name : presets::names()) std::printf("%s\n", name.c_str());
      return 0;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const ProtocolError& e) {
    std::fprintf(stderr, "protocol failure: %s\n", e.what());
    return 3;
  }
  return 2;
}
