// Command-line front end: machine-readable spectral data for the 1-D Dirac
// operator with a general point interaction, its regular approximations, and
// the non-relativistic limit.

#include <CLI11.hpp>
#include <complex>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "dirac1d/approximation.hpp"
#include "dirac1d/nonrelativistic.hpp"
#include "dirac1d/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace dirac1d;

namespace {

json encode(Complex z) { return json::array({z.real(), z.imag()}); }

json encode(const Mat2C& m) {
  return json::array({json::array({encode(m.e[0]), encode(m.e[1])}),
                      json::array({encode(m.e[2]), encode(m.e[3])})});
}

json encode_coupling(const CouplingMatrix& A) {
  return json::array({encode(A.alpha), encode(A.beta), encode(A.gamma), encode(A.delta)});
}

json encode_records(const std::vector<EigenvalueRecord>& records) {
  json out = json::array();
  for (const auto& r : records) {
    json rec;
    rec["z"] = encode(r.z);
    rec["multiplicity"] = r.geometric_multiplicity;
    rec["residual"] = r.residual;
    json coeffs = json::array();
    for (const auto& [a, at] : r.coefficients)
      coeffs.push_back(json::array({encode(a), encode(at)}));
    rec["coefficients"] = coeffs;
    out.push_back(rec);
  }
  return out;
}

struct Config {
  std::vector<double> A_entries;
  double m = 0.0;
  std::vector<double> c_list{10.0, 20.0, 40.0};
  std::vector<double> z_pair{0.0, 1.0};
  std::vector<double> eps_list;
  std::string profile_spec = "box";
  std::vector<double> region;
  double L = 10.0;
  int N = 400;
  double tol = 1e-12;
  std::string out_path;
  std::string format = "json";

  CouplingMatrix coupling() const {
    if (A_entries.size() != 8)
      throw std::invalid_argument("--A needs 8 numbers: a_re,a_im,b_re,b_im,g_re,g_im,d_re,d_im");
    return CouplingMatrix({A_entries[0], A_entries[1]}, {A_entries[2], A_entries[3]},
                          {A_entries[4], A_entries[5]}, {A_entries[6], A_entries[7]});
  }
  Complex z() const {
    if (z_pair.size() != 2) throw std::invalid_argument("--z needs 2 numbers: re,im");
    return {z_pair[0], z_pair[1]};
  }
  Profile profile() const {
    if (profile_spec == "box") return Profile::box();
    if (profile_spec == "triangle") return Profile::triangle();
    if (profile_spec == "gauss") return Profile::truncated_gaussian();
    if (profile_spec.rfind("file:", 0) == 0) return Profile::load(profile_spec.substr(5));
    throw std::invalid_argument("--profile must be box|triangle|gauss|file:<path>");
  }
  Rect rect() const {
    if (region.size() != 4) throw std::invalid_argument("--region needs 4 numbers: x0,x1,y0,y1");
    Rect r{region[0], region[1], region[2], region[3]};
    if (!(r.re0 < r.re1) || !(r.im0 < r.im1))
      throw std::invalid_argument("--region must satisfy x0 < x1 and y0 < y1");
    return r;
  }
  std::vector<double> eps_or_throw() const {
    if (eps_list.empty()) throw std::invalid_argument("--eps is required for this command");
    for (double e : eps_list)
      if (!(e > 0.0)) throw std::invalid_argument("--eps entries must be positive");
    return eps_list;
  }

  json inputs_json() const {
    json j;
    j["A"] = encode_coupling(coupling());
    j["m"] = m;
    return j;
  }
};

void emit(const Config& cfg, const json& doc, const std::string& csv) {
  std::string payload;
  if (cfg.format == "json")
    payload = doc.dump(2) + "\n";
  else if (cfg.format == "csv" && !csv.empty())
    payload = csv;
  else
    throw std::invalid_argument("--format csv is available only for the converge tables");
  if (cfg.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + cfg.out_path);
    f << payload;
  }
}

int run_classify(const Config& cfg) {
  const auto result = classify_spectrum(cfg.coupling(), cfg.m,
                                        {cfg.tol, std::max(cfg.tol, 1e-6)});
  json doc;
  doc["command"] = "classify";
  doc["inputs"] = cfg.inputs_json();
  doc["case"] = to_string(result.label);
  doc["point_spectrum"] = to_string(result.kind);
  doc["near_transition"] = result.near_transition;
  doc["eigenvalues"] = encode_records(result.eigenvalues);
  emit(cfg, doc, "");
  return 0;
}

int run_spectrum(const Config& cfg) {
  const auto records = point_spectrum(cfg.coupling(), cfg.m);
  json doc;
  doc["command"] = "spectrum";
  doc["inputs"] = cfg.inputs_json();
  doc["eigenvalues"] = encode_records(records);
  emit(cfg, doc, "");
  return 0;
}

int run_resolvent(const Config& cfg) {
  if (cfg.N > 128)
    throw std::invalid_argument("resolvent: --N is a per-axis sample count; use N <= 128");
  const KernelEvaluator kernel = resolvent_kernel(cfg.coupling(), cfg.m, cfg.z(), cfg.tol);
  json doc;
  doc["command"] = "resolvent";
  doc["inputs"] = cfg.inputs_json();
  doc["inputs"]["z"] = encode(cfg.z());
  doc["inputs"]["L"] = cfg.L;
  doc["inputs"]["N"] = cfg.N;
  json samples = json::array();
  const double h = 2.0 * cfg.L / cfg.N;
  for (int i = 0; i < cfg.N; ++i) {
    const double x = -cfg.L + (i + 0.5) * h;
    for (int j = 0; j < cfg.N; ++j) {
      const double y = -cfg.L + (j + 0.5) * h;
      json s;
      s["x"] = x;
      s["y"] = y;
      s["K"] = encode(kernel.evaluate(x, y, Side::Plus));
      samples.push_back(s);
    }
  }
  doc["samples"] = samples;
  emit(cfg, doc, "");
  return 0;
}

int run_approx_spectrum(const Config& cfg) {
  const CouplingMatrix A = cfg.coupling();
  const Profile profile = cfg.profile();
  const Rect region = cfg.rect();
  json doc;
  doc["command"] = "approx-spectrum";
  doc["inputs"] = cfg.inputs_json();
  doc["inputs"]["profile"] = profile.name();
  doc["inputs"]["region"] = json::array({region.re0, region.re1, region.im0, region.im1});
  json results = json::array();
  for (double eps : cfg.eps_or_throw()) {
    RootSearchOptions opts;
    opts.newton_tol = std::min(1e-9, cfg.tol * 1e3);
    const auto roots = approx::approx_eigenvalues(A, cfg.m, eps, profile, region, opts);
    json entry;
    entry["eps"] = eps;
    entry["enclosure"] = approx::spectral_enclosure(A, eps, profile);
    json rr = json::array();
    for (const auto& r : roots) {
      json one;
      one["z"] = encode(r.z);
      one["residual"] = r.residual;
      rr.push_back(one);
    }
    entry["roots"] = rr;
    results.push_back(entry);
  }
  doc["results"] = results;
  emit(cfg, doc, "");
  return 0;
}

int run_approx_converge(const Config& cfg) {
  const CouplingMatrix A = cfg.coupling();
  const Profile profile = cfg.profile();
  json doc;
  doc["command"] = "approx-converge";
  doc["inputs"] = cfg.inputs_json();
  doc["inputs"]["z"] = encode(cfg.z());
  doc["inputs"]["profile"] = profile.name();
  doc["inputs"]["L"] = cfg.L;
  doc["inputs"]["N"] = cfg.N;
  json table = json::array();
  std::string csv = "eps,hs_distance,tail_bound\n";
  char line[128];
  for (double eps : cfg.eps_or_throw()) {
    const auto hs = approx::hs_distance(A, cfg.m, cfg.z(), eps, profile, cfg.L, cfg.N);
    json row;
    row["eps"] = eps;
    row["hs_distance"] = hs.value;
    row["tail_bound"] = hs.tail_bound;
    table.push_back(row);
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", eps, hs.value, hs.tail_bound);
    csv += line;
  }
  doc["table"] = table;
  emit(cfg, doc, csv);
  return 0;
}

int run_nonrel_converge(const Config& cfg) {
  const CouplingMatrix A = cfg.coupling();
  json doc;
  doc["command"] = "nonrel-converge";
  doc["inputs"] = cfg.inputs_json();
  doc["inputs"]["z"] = encode(cfg.z());
  doc["inputs"]["L"] = cfg.L;
  doc["inputs"]["N"] = cfg.N;
  json table = json::array();
  std::string csv = "c,distance\n";
  char line[96];
  for (double c : cfg.c_list) {
    if (!(c > 0.0)) throw std::invalid_argument("--c entries must be positive");
    const double d = nonrel::nonrel_limit_distance(A, cfg.m, c, cfg.z(), cfg.L, cfg.N);
    json row;
    row["c"] = c;
    row["distance"] = d;
    table.push_back(row);
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", c, d);
    csv += line;
  }
  doc["table"] = table;
  emit(cfg, doc, csv);
  return 0;
}

int run_oracle_verify(const Config& cfg) {
  const CouplingMatrix A = cfg.coupling();
  json doc;
  doc["command"] = "oracle-verify";
  doc["inputs"] = cfg.inputs_json();
  doc["inputs"]["z"] = encode(cfg.z());

  const KernelEvaluator kernel = resolvent_kernel(A, cfg.m, cfg.z(), cfg.tol);
  auto psi = [](double x) {
    const double g = std::exp(-x * x);
    return Vec2C{Complex(g, 0.0), Complex(x * g, 0.0)};
  };
  const auto res = oracle::resolvent_residual(kernel, A, cfg.m, cfg.z(), psi, 8.0, 4.0, 2000);
  doc["differential_residual"] = res.differential;
  doc["transmission_residual"] = res.transmission;

  if (!cfg.eps_list.empty() && cfg.region.size() == 4) {
    const Profile profile = cfg.profile();
    const double eps = cfg.eps_list.front();
    const auto roots = approx::approx_eigenvalues(A, cfg.m, eps, profile, cfg.rect());
    if (!roots.empty()) {
      const auto op = oracle::fourier_dirac_matrix(A, cfg.m, eps, profile, cfg.L, cfg.N);
      const Complex seed = roots.front().z;
      const auto near = op.eigenvalues_near(seed, 1);
      doc["eps"] = eps;
      doc["analytic_root"] = encode(seed);
      doc["oracle_eigenvalue"] = encode(near.front());
      doc["difference"] = std::abs(near.front() - seed);
    }
  }
  emit(cfg, doc, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for 1-D Dirac operators with point interactions"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* cmd, bool needs_A) {
    auto* a = cmd->add_option("--A", cfg.A_entries,
                              "coupling matrix, 8 reals: a_re,a_im,b_re,b_im,g_re,g_im,d_re,d_im")
                  ->delimiter(',')
                  ->expected(8);
    if (needs_A) a->required();
    cmd->add_option("--m", cfg.m, "mass")->required();
    cmd->add_option("--tol", cfg.tol, "primary tolerance of the command");
    cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* classify = app.add_subcommand("classify", "spectral classification of D_A");
  add_common(classify, true);

  auto* spectrum = app.add_subcommand("spectrum", "finite point spectrum of D_A");
  add_common(spectrum, true);

  auto* resolvent = app.add_subcommand("resolvent", "resolvent kernel samples of D_A");
  add_common(resolvent, true);
  resolvent->add_option("--z", cfg.z_pair, "spectral parameter re,im")
      ->delimiter(',')
      ->expected(2)
      ->required();
  resolvent->add_option("--L", cfg.L, "sample box half-width");
  resolvent->add_option("--N", cfg.N, "samples per axis");

  auto* approx_spectrum =
      app.add_subcommand("approx-spectrum", "eigenvalues of D_A^eps in a rectangle");
  add_common(approx_spectrum, true);
  approx_spectrum->add_option("--eps", cfg.eps_list, "eps values")->delimiter(',')->required();
  approx_spectrum->add_option("--profile", cfg.profile_spec, "box|triangle|gauss|file:<path>");
  approx_spectrum->add_option("--region", cfg.region, "search rectangle x0,x1,y0,y1")
      ->delimiter(',')
      ->expected(4)
      ->required();

  auto* approx_converge =
      app.add_subcommand("approx-converge", "Hilbert-Schmidt distance table over eps");
  add_common(approx_converge, true);
  approx_converge->add_option("--z", cfg.z_pair, "spectral parameter re,im")
      ->delimiter(',')
      ->expected(2)
      ->required();
  approx_converge->add_option("--eps", cfg.eps_list, "eps values")->delimiter(',')->required();
  approx_converge->add_option("--profile", cfg.profile_spec, "box|triangle|gauss|file:<path>");
  approx_converge->add_option("--L", cfg.L, "truncation half-width");
  approx_converge->add_option("--N", cfg.N, "quadrature nodes per axis");

  auto* nonrel_converge =
      app.add_subcommand("nonrel-converge", "non-relativistic limit distance table over c");
  add_common(nonrel_converge, true);
  nonrel_converge->add_option("--z", cfg.z_pair, "spectral parameter re,im")
      ->delimiter(',')
      ->expected(2)
      ->required();
  nonrel_converge->add_option("--c", cfg.c_list, "speed-of-light values")->delimiter(',');
  nonrel_converge->add_option("--L", cfg.L, "truncation half-width");
  nonrel_converge->add_option("--N", cfg.N, "quadrature nodes per axis");

  auto* oracle_verify =
      app.add_subcommand("oracle-verify", "brute-force checks of the analytic kernels");
  add_common(oracle_verify, true);
  oracle_verify->add_option("--z", cfg.z_pair, "spectral parameter re,im")
      ->delimiter(',')
      ->expected(2)
      ->required();
  oracle_verify->add_option("--eps", cfg.eps_list, "eps for the eigenvalue chain")
      ->delimiter(',');
  oracle_verify->add_option("--profile", cfg.profile_spec, "box|triangle|gauss|file:<path>");
  oracle_verify->add_option("--region", cfg.region, "gap rectangle for the eigenvalue chain")
      ->delimiter(',')
      ->expected(4);
  oracle_verify->add_option("--L", cfg.L, "periodic box half-width");
  oracle_verify->add_option("--N", cfg.N, "grid points of the discretization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return run_classify(cfg);
    if (spectrum->parsed()) return run_spectrum(cfg);
    if (resolvent->parsed()) return run_resolvent(cfg);
    if (approx_spectrum->parsed()) return run_approx_spectrum(cfg);
    if (approx_converge->parsed()) return run_approx_converge(cfg);
    if (nonrel_converge->parsed()) return run_nonrel_converge(cfg);
    if (oracle_verify->parsed()) return run_oracle_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
