#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ghost/errors.hpp"
#include "ghost/kinematics.hpp"
#include "ghost/register_algebra.hpp"
#include "ghost/spdc.hpp"

namespace ghost {

enum class PostSelectMode { Ground, Change };

/// Who holds which detectors and what Alice's two candidate preparations
/// are. Alice post-selects either on all-ground or on any change from her
/// prepared state; Bob's detectors always start in the ground state.
struct ProtocolSpec {
  std::vector<std::size_t> alice;  // 0-based detector indices
  std::string prep_a = "e";        // the "image" preparation
  std::string prep_b = "g";        // the alternative preparation
  PostSelectMode mode = PostSelectMode::Ground;
};

/// Full experiment description.
struct Scenario {
  std::string name = "custom";
  ModelConfig model;
  SpdcConfig spdc;
  std::vector<Detector> detectors;
  RegisterState reg;
  ProtocolSpec protocol;
  std::vector<double> sweep;  // coupling instants; empty for single runs
  QuadratureSpec quadrature;
  std::string out_csv = "report.csv";
  std::string out_plot = "contrast.svg";

  std::vector<std::size_t> bob_detectors() const {
    std::vector<std::size_t> bob;
    for (std::size_t t = 0; t < detectors.size(); ++t)
      if (std::find(protocol.alice.begin(), protocol.alice.end(), t) ==
          protocol.alice.end())
        bob.push_back(t);
    return bob;
  }

  void validate() const {
    model.validate();
    spdc.validate();
    if (detectors.empty()) throw ConfigError("scenario: no detectors");
    for (const auto& det : detectors) det.validate(model.d);
    reg.validate();
    if (reg.n != detectors.size())
      throw ConfigError("scenario: register size must match detector count");
    if (protocol.alice.empty())
      throw ConfigError("scenario: protocol needs at least one Alice detector");
    for (std::size_t t : protocol.alice)
      if (t >= detectors.size())
        throw ConfigError("scenario: Alice detector index out of range");
    if (protocol.prep_a.size() != protocol.alice.size() ||
        protocol.prep_b.size() != protocol.alice.size())
      throw ConfigError("scenario: preparation length must match Alice's detector count");
    for (char ch : protocol.prep_a + protocol.prep_b)
      if (ch != 'g' && ch != 'e')
        throw ConfigError("scenario: preparations must be strings over {g, e}");
    if (bob_detectors().empty())
      throw ConfigError("scenario: Bob needs at least one detector");
    for (double t : sweep)
      if (!std::isfinite(t)) throw ConfigError("scenario: sweep tau not finite");
    double sigma_min = 1e300;
    for (const auto& det : detectors)
      sigma_min = std::min(sigma_min, det.smearing.sigma);
    quadrature.validate(sigma_min);
  }
};

namespace presets {

inline Detector inertial_detector(double lambda, double omega, double sigma,
                                  Vec pos, int d) {
  Detector det;
  det.lambda = lambda;
  det.omega = omega;
  det.smearing = SmearingProfile::unit_ft(sigma, d);
  det.worldline = InertialWorldline{std::move(pos)};
  return det;
}

/// Two inertial detectors on the x axis at +-1; Alice prepares a single
/// pixel and post-selects on ground.
inline Scenario table1() {
  Scenario s;
  s.name = "table1";
  s.detectors = {inertial_detector(1.0, 1.0, 0.1, {1.0, 0.0, 0.0}, 3),
                 inertial_detector(1.0, 1.0, 0.1, {-1.0, 0.0, 0.0}, 3)};
  s.reg = RegisterState::from_string("eg", 0.0);
  s.protocol = {{0}, "e", "g", PostSelectMode::Ground};
  return s;
}

/// Four inertial detectors on a radius-1 square layout (polar angle
/// pi/6); Alice holds 1 and 2 and post-selects on a change.
inline Scenario table2() {
  Scenario s;
  s.name = "table2";
  const double r = 1.0;
  const double th = std::numbers::pi / 6.0;
  const double c = r * std::cos(th);
  const double sn = r * std::sin(th);
  s.detectors = {inertial_detector(1.0, 1.0, 0.1, {c, sn, 0.0}, 3),
                 inertial_detector(1.0, 1.0, 0.1, {c, -sn, 0.0}, 3),
                 inertial_detector(1.0, 1.0, 0.1, {-c, -sn, 0.0}, 3),
                 inertial_detector(1.0, 1.0, 0.1, {-c, sn, 0.0}, 3)};
  s.reg = RegisterState::from_string("eggg", 0.0);
  s.protocol = {{0, 1}, "eg", "ge", PostSelectMode::Change};
  return s;
}

/// Accelerated Alice: Rindler motion with a = 1/(r cos(theta)) at r = 1,
/// theta = 0, momentarily at rest at x = 1 when tau = 0; Bob inertial at
/// x = -1. Default sweep: 11 evenly spaced coupling instants in [-1, 1].
inline Scenario table3() {
  Scenario s;
  s.name = "table3";
  const double r = 1.0;
  const double th = 0.0;
  const double a = 1.0 / (r * std::cos(th));
  Detector alice;
  alice.lambda = 1.0;
  alice.omega = 1.0;
  alice.smearing = SmearingProfile::unit_ft(0.1, 3);
  alice.worldline = RindlerWorldline{a, r * std::sin(th), 0.0};
  s.detectors = {alice,
                 inertial_detector(1.0, 1.0, 0.1,
                                   {-1.0 / a, r * std::sin(th), 0.0}, 3)};
  s.reg = RegisterState::from_string("eg", 0.0);
  s.protocol = {{0}, "e", "g", PostSelectMode::Ground};
  for (int i = 0; i < 11; ++i) s.sweep.push_back(-1.0 + 0.2 * i);
  return s;
}

inline std::vector<std::string> names() { return {"table1", "table2", "table3"}; }

inline Scenario by_name(const std::string& name) {
  if (name == "table1") return table1();
  if (name == "table2") return table2();
  if (name == "table3") return table3();
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace presets

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline double parse_double(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + s + "'");
  }
}

}  // namespace detail

/// Parse a scenario file. Flat INI-style sections mirroring the Scenario
/// fields; [detector] repeats once per detector. Unknown sections or keys
/// are rejected with the offending line number.
inline Scenario parse_scenario(std::istream& in, const std::string& origin) {
  Scenario s;
  s.name = origin;
  s.detectors.clear();

  struct DetSpec {
    double lambda = 1.0, omega = 1.0, sigma = 0.1;
    std::string worldline = "inertial 0 0 0";
    int line = 0;
  };
  std::vector<DetSpec> det_specs;
  std::string initial;
  double reg_tau = 0.0;
  bool have_register = false;

  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
      section = line.substr(1, line.size() - 2);
      static const std::vector<std::string> known = {
          "model", "spdc", "detector", "register",
          "protocol", "sweep", "quadrature", "outputs"};
      if (std::find(known.begin(), known.end(), section) == known.end())
        throw ConfigError("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
      if (section == "detector") det_specs.push_back({.line = lineno});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    const auto trim = [](std::string& t) {
      const auto tb = t.find_first_not_of(" \t");
      const auto te = t.find_last_not_of(" \t");
      t = (tb == std::string::npos) ? "" : t.substr(tb, te - tb + 1);
    };
    trim(key);
    trim(val);

    const auto unknown = [&]() -> ConfigError {
      return ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                         key + "' in section [" + section + "]");
    };

    if (section == "model") {
      if (key == "d") s.model.d = static_cast<int>(detail::parse_double(val, lineno));
      else if (key == "m") s.model.m = detail::parse_double(val, lineno);
      else if (key == "pump") {
        s.model.pump.clear();
        for (const auto& tok : detail::split_ws(val))
          s.model.pump.push_back(detail::parse_double(tok, lineno));
      } else throw unknown();
    } else if (section == "spdc") {
      if (key == "theta") s.spdc.theta = detail::parse_double(val, lineno);
      else if (key == "beta_scale") s.spdc.beta_scale = detail::parse_double(val, lineno);
      else throw unknown();
    } else if (section == "detector") {
      if (det_specs.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": key outside a [detector] section");
      auto& d = det_specs.back();
      if (key == "lambda") d.lambda = detail::parse_double(val, lineno);
      else if (key == "omega") d.omega = detail::parse_double(val, lineno);
      else if (key == "sigma") d.sigma = detail::parse_double(val, lineno);
      else if (key == "worldline") { d.worldline = val; d.line = lineno; }
      else throw unknown();
    } else if (section == "register") {
      if (key == "initial") { initial = val; have_register = true; }
      else if (key == "tau") reg_tau = detail::parse_double(val, lineno);
      else throw unknown();
    } else if (section == "protocol") {
      if (key == "alice") {
        s.protocol.alice.clear();
        for (const auto& tok : detail::split_ws(val)) {
          const int idx = static_cast<int>(detail::parse_double(tok, lineno));
          if (idx < 1)
            throw ConfigError("line " + std::to_string(lineno) + ": detector indices are 1-based");
          s.protocol.alice.push_back(static_cast<std::size_t>(idx - 1));
        }
      } else if (key == "prep_a") s.protocol.prep_a = val;
      else if (key == "prep_b") s.protocol.prep_b = val;
      else if (key == "post_select") {
        if (val == "ground") s.protocol.mode = PostSelectMode::Ground;
        else if (val == "change") s.protocol.mode = PostSelectMode::Change;
        else throw ConfigError("line " + std::to_string(lineno) + ": post_select must be 'ground' or 'change'");
      } else throw unknown();
    } else if (section == "sweep") {
      if (key == "tau") {
        s.sweep.clear();
        for (const auto& tok : detail::split_ws(val))
          s.sweep.push_back(detail::parse_double(tok, lineno));
      } else throw unknown();
    } else if (section == "quadrature") {
      if (key == "radial_nodes") s.quadrature.radial_nodes = static_cast<int>(detail::parse_double(val, lineno));
      else if (key == "angular_nodes") s.quadrature.angular_nodes = static_cast<int>(detail::parse_double(val, lineno));
      else if (key == "radial_cutoff") s.quadrature.radial_cutoff = detail::parse_double(val, lineno);
      else throw unknown();
    } else if (section == "outputs") {
      if (key == "csv") s.out_csv = val;
      else if (key == "plot") s.out_plot = val;
      else throw unknown();
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": key before any section");
    }
  }

  for (const auto& d : det_specs) {
    Detector det;
    det.lambda = d.lambda;
    det.omega = d.omega;
    det.smearing = SmearingProfile::unit_ft(d.sigma, s.model.d);
    const auto toks = detail::split_ws(d.worldline);
    if (!toks.empty() && toks[0] == "inertial") {
      Vec pos;
      for (std::size_t i = 1; i < toks.size(); ++i)
        pos.push_back(detail::parse_double(toks[i], d.line));
      det.worldline = InertialWorldline{std::move(pos)};
    } else if (toks.size() == 4 && toks[0] == "rindler") {
      det.worldline = RindlerWorldline{detail::parse_double(toks[1], d.line),
                                       detail::parse_double(toks[2], d.line),
                                       detail::parse_double(toks[3], d.line)};
    } else {
      throw ConfigError("line " + std::to_string(d.line) +
                        ": worldline must be 'inertial x...' or 'rindler a y z'");
    }
    s.detectors.push_back(std::move(det));
  }

  if (!have_register)
    throw ConfigError("scenario: missing [register] initial state");
  s.reg = RegisterState::from_string(initial, reg_tau);
  s.validate();
  return s;
}

/// Load a scenario from a file path or a preset name.
inline Scenario load_scenario(const std::string& path_or_preset) {
  for (const auto& name : presets::names())
    if (path_or_preset == name) {
      Scenario s = presets::by_name(name);
      s.validate();
      return s;
    }
  std::ifstream in(path_or_preset);
  if (!in) throw ConfigError("cannot open scenario file '" + path_or_preset + "'");
  return parse_scenario(in, path_or_preset);
}

/// Serialize the fully resolved configuration (defaults filled in), in the
/// same format load_scenario accepts. Every report ships one of these so
/// results are traceable to the declared knobs.
inline std::string resolved_config(const Scenario& s) {
  std::ostringstream os;
  os.precision(17);
  os << "# resolved scenario: " << s.name << "\n";
  os << "[model]\nd = " << s.model.d << "\nm = " << s.model.m << "\npump =";
  for (double v : s.model.pump) os << ' ' << v;
  os << "\n\n[spdc]\ntheta = " << s.spdc.theta
     << "\nbeta_scale = " << s.spdc.beta_scale << "\n";
  for (const auto& det : s.detectors) {
    os << "\n[detector]\nlambda = " << det.lambda << "\nomega = " << det.omega
       << "\nsigma = " << det.smearing.sigma << "\nworldline = ";
    if (const auto* in = std::get_if<InertialWorldline>(&det.worldline)) {
      os << "inertial";
      for (double v : in->position) os << ' ' << v;
    } else {
      const auto& r = std::get<RindlerWorldline>(det.worldline);
      os << "rindler " << r.a << ' ' << r.y << ' ' << r.z;
    }
    os << "\n";
  }
  os << "\n[register]\ninitial = ";
  for (bool e : s.reg.initial_excited) os << (e ? 'e' : 'g');
  os << "\ntau = " << s.reg.tau << "\n";
  os << "\n[protocol]\nalice =";
  for (std::size_t t : s.protocol.alice) os << ' ' << (t + 1);
  os << "\nprep_a = " << s.protocol.prep_a << "\nprep_b = " << s.protocol.prep_b
     << "\npost_select = "
     << (s.protocol.mode == PostSelectMode::Ground ? "ground" : "change")
     << "\n";
  if (!s.sweep.empty()) {
    os << "\n[sweep]\ntau =";
    for (double t : s.sweep) os << ' ' << t;
    os << "\n";
  }
  os << "\n[quadrature]\nradial_nodes = " << s.quadrature.radial_nodes
     << "\nangular_nodes = " << s.quadrature.angular_nodes
     << "\nradial_cutoff = " << s.quadrature.radial_cutoff << "\n";
  return os.str();
}

}  // namespace ghost
