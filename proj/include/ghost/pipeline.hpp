#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>
#include <string>
#include <vector>

#include "ghost/errors.hpp"
#include "ghost/protocol.hpp"
#include "ghost/register_algebra.hpp"
#include "ghost/scenario.hpp"
#include "ghost/spdc.hpp"

namespace ghost {

/// One pipeline evaluation at a fixed coupling instant: Bob's outcome
/// probabilities and image intensity for each of Alice's candidate
/// preparations, the contrast between them, and the pre-post-selection
/// negativity across the Alice|Bob split.
struct ReportRow {
  double tau = 0.0;
  double p_g_given_gprep = 0.0;  // Bob all-ground, Alice prepared prep_b
  double p_e_given_gprep = 0.0;
  double p_g_given_eprep = 0.0;  // Alice prepared prep_a
  double p_e_given_eprep = 0.0;
  double intensity_gprep = 0.0;  // mean pixel intensity
  double intensity_eprep = 0.0;
  double contrast = 0.0;
  double negativity = 0.0;
  double quad_rel_err = 0.0;
};

namespace detail {

struct PrepOutcome {
  double p_all_ground = 0.0;
  double intensity = 0.0;
  std::vector<double> pixels;
};

inline RegisterState with_alice_prep(const Scenario& s,
                                     const std::string& prep, double tau) {
  RegisterState reg = s.reg;
  reg.tau = tau;
  for (std::size_t i = 0; i < s.protocol.alice.size(); ++i)
    reg.initial_excited[s.protocol.alice[i]] = (prep[i] == 'e');
  return reg;
}

inline PrepOutcome evaluate_prep(const Scenario& s, const GTable& gt,
                                 const std::string& prep, double tau,
                                 DensityMatrix* rho_out = nullptr) {
  std::vector<double> omegas;
  for (const auto& det : s.detectors) omegas.push_back(det.omega);
  const RegisterState reg = with_alice_prep(s, prep, tau);
  DensityMatrix rho = assemble_rho(reg, gt, omegas);
  rho.validate();

  const std::size_t n = s.detectors.size();
  std::size_t alice_mask = 0;
  for (std::size_t t : s.protocol.alice)
    alice_mask |= std::size_t{1} << (n - 1 - t);
  std::size_t prep_bits = 0;
  for (std::size_t i = 0; i < s.protocol.alice.size(); ++i)
    if (prep[i] == 'e')
      prep_bits |= std::size_t{1} << (n - 1 - s.protocol.alice[i]);

  const auto keep = [&](std::size_t idx) {
    const std::size_t abits = idx & alice_mask;
    if (s.protocol.mode == PostSelectMode::Ground) return abits == 0;
    return abits != prep_bits;  // any change from the prepared state
  };

  auto [rho_b, prob] = post_select_mask(
      rho, s.protocol.alice, keep,
      s.protocol.mode == PostSelectMode::Ground ? "Alice all-ground"
                                                : "change in Alice's state");
  (void)prob;

  const std::size_t nb = s.bob_detectors().size();
  PrepOutcome out;
  out.p_all_ground = rho_b.mat(0, 0).real();
  out.pixels.resize(nb, 0.0);
  for (std::size_t idx = 0; idx < rho_b.dim(); ++idx) {
    const double p = rho_b.mat(idx, idx).real();
    for (std::size_t b = 0; b < nb; ++b)
      if (idx & (std::size_t{1} << (nb - 1 - b))) out.pixels[b] += p;
  }
  double mean = 0.0;
  for (double px : out.pixels) mean += px;
  out.intensity = mean / static_cast<double>(nb);
  if (rho_out) *rho_out = std::move(rho);
  return out;
}

}  // namespace detail

/// Run the full protocol at coupling instant tau (overriding the
/// register's configured instant). The field-overlap cache and G-table
/// are shared between the two preparations.
inline ReportRow run_at_tau(const Scenario& s, double tau) {
  s.validate();
  const std::size_t n = s.detectors.size();
  GexpCache cache(s.model, s.spdc, s.detectors, tau, s.quadrature);
  const GTable gt =
      build_g_table(n, [&](const DiffVector& c) { return cache(c); });

  DensityMatrix rho_a;
  const auto a = detail::evaluate_prep(s, gt, s.protocol.prep_a, tau, &rho_a);
  const auto b = detail::evaluate_prep(s, gt, s.protocol.prep_b, tau);

  ReportRow row;
  row.tau = tau;
  row.p_g_given_eprep = a.p_all_ground;
  row.p_e_given_eprep = 1.0 - a.p_all_ground;
  row.p_g_given_gprep = b.p_all_ground;
  row.p_e_given_gprep = 1.0 - b.p_all_ground;
  row.intensity_eprep = a.intensity;
  row.intensity_gprep = b.intensity;
  // both intensities vanish identically when all couplings are zero
  row.contrast = (a.intensity + b.intensity > 0.0)
                     ? contrast(b.intensity, a.intensity)
                     : 0.0;
  row.negativity = negativity(rho_a, s.bob_detectors());
  row.quad_rel_err = cache.max_rel_err();
  return row;
}

inline ReportRow run_single(const Scenario& s) {
  return run_at_tau(s, s.reg.tau);
}

/// One row per configured coupling instant, in tau order as listed.
inline std::vector<ReportRow> run_sweep(const Scenario& s) {
  if (s.sweep.empty())
    throw ConfigError("scenario has no [sweep] tau values");
  std::vector<ReportRow> rows;
  rows.reserve(s.sweep.size());
  for (double tau : s.sweep) rows.push_back(run_at_tau(s, tau));
  return rows;
}

inline const char* kCsvHeader =
    "tau,p_g_given_gprep,p_e_given_gprep,p_g_given_eprep,p_e_given_eprep,"
    "intensity_gprep,intensity_eprep,contrast,negativity,quad_rel_err";

inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                  r.tau, r.p_g_given_gprep, r.p_e_given_gprep,
                  r.p_g_given_eprep, r.p_e_given_eprep, r.intensity_gprep,
                  r.intensity_eprep, r.contrast, r.negativity, r.quad_rel_err);
    out += buf;
  }
  return out;
}

/// Minimal standalone SVG line plot of contrast against tau.
inline std::string contrast_plot_svg(const std::vector<ReportRow>& rows) {
  const double w = 640.0, h = 400.0, ml = 70.0, mr = 20.0, mt = 20.0, mb = 50.0;
  double tmin = 0.0, tmax = 1.0, cmin = 0.0, cmax = 1.0;
  if (!rows.empty()) {
    tmin = tmax = rows.front().tau;
    cmin = 0.0;
    cmax = rows.front().contrast;
    for (const auto& r : rows) {
      tmin = std::min(tmin, r.tau);
      tmax = std::max(tmax, r.tau);
      cmax = std::max(cmax, r.contrast);
    }
    if (tmax == tmin) tmax = tmin + 1.0;
    if (cmax <= 0.0) cmax = 1.0;
  }
  const auto px = [&](double t) { return ml + (t - tmin) / (tmax - tmin) * (w - ml - mr); };
  const auto py = [&](double c) { return h - mb - (c - cmin) / (cmax - cmin) * (h - mt - mb); };

  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                "viewBox=\"0 0 %g %g\">\n", w, h, w, h);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<rect width=\"%g\" height=\"%g\" fill=\"white\"/>\n", w, h);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                ml, h - mb, w - mr, h - mb);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                ml, mt, ml, h - mb);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" font-size=\"14\">tau</text>\n",
                0.5 * w, h - 12.0);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"14\" y=\"%g\" font-size=\"14\" transform=\"rotate(-90 14 %g)\">"
                "contrast</text>\n", 0.55 * h, 0.55 * h);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" font-size=\"12\">%.6g</text>\n",
                8.0, mt + 4.0, cmax);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" font-size=\"12\">%.3g</text>\n",
                px(tmin) - 10.0, h - mb + 18.0, tmin);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" font-size=\"12\">%.3g</text>\n",
                px(tmax) - 10.0, h - mb + 18.0, tmax);
  svg += buf;
  if (!rows.empty()) {
    svg += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\" points=\"";
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf, "%g,%g ", px(r.tau), py(r.contrast));
      svg += buf;
    }
    svg += "\"/>\n";
    for (const auto& r : rows) {
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%g\" cy=\"%g\" r=\"3\" fill=\"#1f6fb2\"/>\n",
                    px(r.tau), py(r.contrast));
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

/// Write the CSV (and optionally the contrast plot) plus a resolved-config
/// echo so every report is traceable to its knobs. Byte-deterministic for
/// fixed inputs.
inline void emit_report(const std::vector<ReportRow>& rows, const Scenario& s,
                        const std::string& out_dir, bool plot) {
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
      throw ConfigError("cannot create output directory '" + out_dir +
                        "': " + ec.message());
  }
  const auto write = [&](const std::string& name, const std::string& content) {
    const std::string path = out_dir.empty() ? name : out_dir + "/" + name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write output file '" + path + "'");
    f << content;
    if (!f) throw ConfigError("I/O error writing '" + path + "'");
  };
  write(s.out_csv, to_csv(rows));
  write("resolved_config.txt", resolved_config(s));
  if (plot) write(s.out_plot, contrast_plot_svg(rows));
}

}  // namespace ghost
