// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfq/distributions.hpp"
#include "tfq/errors.hpp"
#include "tfq/gaussian_oracles.hpp"
#include "tfq/io.hpp"
#include "tfq/kernels.hpp"
#include "tfq/norms.hpp"
#include "tfq/operators.hpp"
#include "tfq/special_functions.hpp"
#include "tfq/synth.hpp"

namespace tfq::cli {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

json report(const std::string& kind) { return json{{"schema_version", schema_version}, {"report", kind}}; }

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

// Exponents accept "inf".
double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return inf;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw UsageError("malformed exponent '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("malformed exponent '" + s + "'");
  }
}

std::string exponent_text(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << std::setprecision(17) << p;
  return os.str();
}

json exponent_json(double p) { return std::isinf(p) ? json("inf") : json(p); }

CohenKernel kernel_from(const std::string& kind, double tau) {
  if (kind == "bj") return CohenKernel::born_jordan();
  if (kind == "tau") return CohenKernel::tau(tau);
  if (kind == "delta" || kind == "wigner") return CohenKernel::delta();
  throw UsageError("unknown kernel '" + kind + "'");
}

QuantizationRule rule_from(const std::string& kind, double tau) {
  if (kind == "weyl") return QuantizationRule::weyl();
  if (kind == "bj") return QuantizationRule::born_jordan();
  if (kind == "tau") return QuantizationRule::tau(tau);
  throw UsageError("unknown rule '" + kind + "'");
}

std::vector<double> parse_list(const std::string& s, std::size_t count, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw UsageError(std::string("malformed ") + what);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("malformed ") + what);
    }
  }
  if (v.size() != count) throw UsageError(std::string(what) + " needs " + std::to_string(count) + " values");
  return v;
}

struct Options {
  bool json = false;

  // synth
  std::string kind = "gaussian";
  SignalRecipe recipe;
  std::string output;

  // transform, op, norm
  std::string method;
  std::string input;
  std::string cross;
  std::string symbol;
  double tau = 0.5;

  // kernel
  std::string grid;
  std::string at;
  double tol = 1e-10;
  double t = 1.0;
  double radius = 8.0;

  // norms and experiments
  std::string p = "2";
  std::string q = "2";
  bool amalgam = false;
  std::string family = "gaussian_mod";
  double lambda_min = 16.0;
  double lambda_max = 1024.0;
  std::size_t points = 8;
  std::string signal = "two_atoms";

  // oracle
  std::string what = "wigner";
  double lambda = 1.0;
};

void do_synth(const Options& o, std::ostream& out) {
  SignalRecipe r = o.recipe;
  r.kind = parse_recipe_kind(o.kind);
  const SampledSignal f = synth(r);
  write_signal(o.output, f);
  if (o.json) {
    json j = report("synth");
    j["kind"] = o.kind;
    j["n"] = f.n();
    j["x0"] = f.x0();
    j["dx"] = f.dx();
    j["energy"] = f.energy();
    j["output"] = o.output;
    out << j.dump(2) << "\n";
  }
}

void do_transform(const Options& o, std::ostream& out) {
  const SampledSignal f = read_signal(o.input);
  std::optional<SampledSignal> g;
  if (!o.cross.empty()) g = read_signal(o.cross);
  TFMatrix m = [&] {
    if (o.method == "stft") return stft(f, StftSpec{g ? *g : gaussian_window(f), false});
    const SampledSignal& second = g ? *g : f;
    if (o.method == "wigner") return wigner(f, second);
    if (o.method == "tau") return cohen(f, second, CohenKernel::tau(o.tau));
    if (o.method == "bj") return born_jordan(f, second);
    throw UsageError("unknown method '" + o.method + "'");
  }();
  write_matrix(o.output, m);
  if (o.json) {
    json j = report("transform");
    j["method"] = o.method;
    j["n"] = m.rows();
    j["output"] = o.output;
    out << j.dump(2) << "\n";
  }
}

void do_kernel(const Options& o, std::ostream& out) {
  auto emit = [&](const std::string& kind, json value) {
    if (o.json) {
      json j = report("kernel");
      j["kind"] = kind;
      j["value"] = std::move(value);
      out << j.dump(2) << "\n";
    } else if (value.is_array()) {
      out << std::setprecision(17) << value[0].get<double>() << " " << value[1].get<double>() << "\n";
    } else {
      out << std::setprecision(17) << value.get<double>() << "\n";
    }
  };
  if (o.kind == "vg") {
    const auto z = parse_list(o.at, 4, "--at");
    emit("vg", complex_json(vg_theta(z[0], z[1], z[2], z[3], o.tol)));
    return;
  }
  if (o.kind == "ci") {
    emit("ci", cosine_integral(o.t));
    return;
  }
  if (o.kind == "growth") {
    emit("growth", theta_growth_integral(parse_exponent(o.p), o.radius));
    return;
  }
  const CohenKernel k = kernel_from(o.kind, o.tau);
  if (o.grid.empty()) throw UsageError("--grid N,DX is required for multiplier output");
  const auto nd = parse_list(o.grid, 2, "--grid");
  if (!(nd[0] >= 8.0) || nd[0] != std::floor(nd[0])) throw UsageError("--grid needs an integer N >= 8");
  const auto n = static_cast<std::size_t>(nd[0]);
  if (!is_power_of_two(n)) throw UsageError("--grid N must be a power of two");
  if (!(nd[1] > 0.0)) throw UsageError("--grid DX must be positive");
  if (o.output.empty()) throw UsageError("--output is required for multiplier output");
  const PhaseSpaceGrid g = make_phase_space_grid(n, -static_cast<double>(n / 2) * nd[1], nd[1]);
  write_matrix(o.output, sample_multiplier(k, g));
  if (o.json) {
    json j = report("kernel");
    j["kind"] = k.name();
    j["output"] = o.output;
    out << j.dump(2) << "\n";
  }
}

void do_norm(const Options& o, std::ostream& out) {
  const SampledSignal f = read_signal(o.input);
  const MixedNormSpec spec(parse_exponent(o.p), parse_exponent(o.q));
  const double v = o.amalgam ? amalgam_norm(f, spec) : modulation_norm(f, spec);
  if (o.json) {
    json j = report("norm");
    j["p"] = exponent_json(spec.p);
    j["q"] = exponent_json(spec.q);
    j["nesting"] = o.amalgam ? "amalgam" : "modulation";
    j["value"] = v;
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(17) << v << "\n";
  }
}

void do_op(const Options& o, std::ostream& out) {
  const Symbol a(read_matrix(o.symbol));
  const SampledSignal f = read_signal(o.input);
  const QuantizationRule rule = rule_from(o.method, o.tau);
  write_signal(o.output, apply(a, rule, f));
  if (o.json) {
    json j = report("op");
    j["rule"] = rule.name();
    j["output"] = o.output;
    out << j.dump(2) << "\n";
  }
}

void do_oracle(const Options& o, std::ostream& out) {
  const auto z = parse_list(o.at, 2, "--at");
  cplx v;
  if (o.what == "wigner")
    v = wigner_gaussian(o.lambda, z[0], z[1]);
  else if (o.what == "fourier")
    v = fourier_wigner_gaussian(o.lambda, z[0], z[1], FourierVariant::plain);
  else if (o.what == "symplectic")
    v = fourier_wigner_gaussian(o.lambda, z[0], z[1], FourierVariant::symplectic);
  else
    throw UsageError("unknown oracle '" + o.what + "'");
  if (o.json) {
    json j = report("oracle");
    j["what"] = o.what;
    j["lambda"] = o.lambda;
    j["at"] = z;
    j["value"] = complex_json(v);
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(17) << v.real() << " " << v.imag() << "\n";
  }
}

void do_scaling(const Options& o, std::ostream& out) {
  const ScalingFamily family = parse_family(o.family);
  const MixedNormSpec spec(parse_exponent(o.p), parse_exponent(o.q));
  const ScalingFit fit = scaling_experiment(family, spec, log_spaced(o.lambda_min, o.lambda_max, o.points));
  if (o.json) {
    json j = report("scaling");
    j["family"] = to_string(family);
    j["p"] = exponent_json(spec.p);
    j["q"] = exponent_json(spec.q);
    j["exponent"] = fit.exponent;
    j["stderr"] = fit.stderr_;
    j["target"] = fit.target;
    j["lambda_min"] = fit.lambda_min;
    j["lambda_max"] = fit.lambda_max;
    j["points"] = fit.points;
    json table = json::array();
    for (const auto& r : fit.table) table.push_back({{"lambda", r.lambda}, {"norm", r.norm}, {"n", r.n}, {"dx", r.dx}});
    j["table"] = std::move(table);
    out << j.dump(2) << "\n";
    return;
  }
  out << std::setprecision(10);
  out << "family " << to_string(family) << " p " << exponent_text(spec.p) << " q " << exponent_text(spec.q) << "\n";
  out << "lambda,norm,n,dx\n";
  for (const auto& r : fit.table) out << r.lambda << "," << r.norm << "," << r.n << "," << r.dx << "\n";
  out << "exponent " << fit.exponent << " stderr " << fit.stderr_ << " target " << fit.target << "\n";
}

void do_ghost(const Options& o, std::ostream& out) {
  if (o.signal != "two_atoms") throw UsageError("ghost experiments support --signal two_atoms");
  SignalRecipe r = o.recipe;
  r.kind = SignalRecipe::Kind::two_atoms;
  if (r.n == 256) r.n = 512;
  const SampledSignal f = synth(r);
  const double dw = 1.0 / (static_cast<double>(f.n()) * f.dx());
  // Two cells on either side of the midpoint of the atom centers.
  const double xm = 0.0, wm = 0.0;
  const Rect region{xm - 2.0 * f.dx(), xm + 2.0 * f.dx(), wm - 2.0 * dw, wm + 2.0 * dw};
  const auto rows =
      ghost_energy_report(f, {CohenKernel::delta(), CohenKernel::born_jordan(), CohenKernel::tau(0.0)}, region);
  if (o.json) {
    json j = report("ghost");
    j["signal"] = o.signal;
    j["n"] = f.n();
    j["dx"] = f.dx();
    j["region"] = {region.x_min, region.x_max, region.w_min, region.w_max};
    json table = json::array();
    for (const auto& row : rows) table.push_back({{"kernel", row.kernel}, {"energy", row.energy}, {"ratio", row.ratio}});
    j["rows"] = std::move(table);
    out << j.dump(2) << "\n";
    return;
  }
  out << std::setprecision(10) << "kernel,energy,ratio\n";
  for (const auto& row : rows) out << row.kernel << "," << row.energy << "," << row.ratio << "\n";
}

void add_recipe_options(CLI::App* c, Options& o) {
  c->add_option("--n", o.recipe.n, "sample count (power of two)");
  c->add_option("--dx", o.recipe.dx, "sample spacing");
  c->add_option("--seed", o.recipe.seed, "random seed");
  c->add_option("--delta-t", o.recipe.delta_t, "two_atoms time separation");
  c->add_option("--delta-nu", o.recipe.delta_nu, "two_atoms frequency separation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Time-frequency quantization toolkit", "tfq"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit a JSON report");

  auto* s = app.add_subcommand("synth", "generate a test signal");
  s->add_option("--kind", o.kind, "gaussian, gabor_atom, two_atoms, two_tone, chirp or from_file");
  add_recipe_options(s, o);
  s->add_option("--lambda", o.recipe.lambda, "dilation");
  s->add_option("--t0", o.recipe.t0, "atom center");
  s->add_option("--nu0", o.recipe.nu0, "atom frequency");
  s->add_option("--nu1", o.recipe.nu1, "first tone");
  s->add_option("--nu2", o.recipe.nu2, "second tone");
  s->add_option("--rate", o.recipe.rate, "chirp rate");
  s->add_option("--path", o.recipe.path, "input CSV for from_file");
  s->add_option("--output", o.output, "signal CSV")->required();
  s->add_flag("--json", o.json, "emit a JSON report");

  auto* t = app.add_subcommand("transform", "compute a time-frequency distribution");
  t->add_option("--method", o.method, "stft, wigner, tau or bj")->required();
  t->add_option("--tau", o.tau, "tau parameter");
  t->add_option("--input", o.input, "signal CSV")->required();
  t->add_option("--cross", o.cross, "second signal (window for stft)");
  t->add_option("--output", o.output, "matrix file")->required();
  t->add_flag("--json", o.json, "emit a JSON report");

  auto* k = app.add_subcommand("kernel", "evaluate a kernel");
  k->add_option("--kind", o.kind, "bj, tau, delta, vg, ci or growth")->required();
  k->add_option("--tau", o.tau, "tau parameter");
  k->add_option("--grid", o.grid, "N,DX of the signal grid");
  k->add_option("--output", o.output, "matrix file");
  k->add_option("--at", o.at, "z1,z2,zeta1,zeta2 for vg");
  k->add_option("--tol", o.tol, "vg tolerance");
  k->add_option("--t", o.t, "ci argument");
  k->add_option("--p", o.p, "growth exponent");
  k->add_option("--R", o.radius, "growth radius");
  k->add_flag("--json", o.json, "emit a JSON report");

  auto* nm = app.add_subcommand("norm", "modulation or amalgam norm of a signal");
  nm->add_option("--input", o.input, "signal CSV")->required();
  nm->add_option("--p", o.p, "inner exponent (or inf)");
  nm->add_option("--q", o.q, "outer exponent (or inf)");
  nm->add_flag("--amalgam", o.amalgam, "frequency-inner nesting");
  nm->add_flag("--json", o.json, "emit a JSON report");

  auto* op = app.add_subcommand("op", "apply a quantized operator");
  op->add_option("--rule", o.method, "weyl, bj or tau")->required();
  op->add_option("--tau", o.tau, "tau parameter");
  op->add_option("--symbol", o.symbol, "symbol matrix")->required();
  op->add_option("--input", o.input, "signal CSV")->required();
  op->add_option("--output", o.output, "signal CSV")->required();
  op->add_flag("--json", o.json, "emit a JSON report");

  auto* orc = app.add_subcommand("oracle", "closed-form Gaussian values");
  orc->add_option("--what", o.what, "wigner, fourier or symplectic");
  orc->add_option("--lambda", o.lambda, "dilation");
  orc->add_option("--at", o.at, "two coordinates")->required();
  orc->add_flag("--json", o.json, "emit a JSON report");

  auto* ex = app.add_subcommand("experiment", "run an experiment");
  ex->require_subcommand(1);
  auto* sc = ex->add_subcommand("scaling", "dilation exponent sweep");
  sc->add_option("--family", o.family, "gaussian_mod, gaussian_amalgam or bump_amalgam");
  sc->add_option("--p", o.p, "inner exponent (or inf)");
  sc->add_option("--q", o.q, "outer exponent (or inf)");
  sc->add_option("--lambda-min", o.lambda_min, "smallest dilation");
  sc->add_option("--lambda-max", o.lambda_max, "largest dilation");
  sc->add_option("--points", o.points, "sweep size");
  sc->add_flag("--json", o.json, "emit a JSON report");
  auto* gh = ex->add_subcommand("ghost", "interference energy report");
  gh->add_option("--signal", o.signal, "two_atoms");
  add_recipe_options(gh, o);
  gh->add_flag("--json", o.json, "emit a JSON report");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tfq: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (s->parsed()) do_synth(o, out);
    else if (t->parsed()) do_transform(o, out);
    else if (k->parsed()) do_kernel(o, out);
    else if (nm->parsed()) do_norm(o, out);
    else if (op->parsed()) do_op(o, out);
    else if (orc->parsed()) do_oracle(o, out);
    else if (sc->parsed()) do_scaling(o, out);
    else if (gh->parsed()) do_ghost(o, out);
    return 0;
  } catch (const IoError& e) {
    err << "tfq: I/O error: " << e.what() << "\n";
    return 3;
  } catch (const AccuracyError& e) {
    err << "tfq: accuracy error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "tfq: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tfq::cli
