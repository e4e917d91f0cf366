#include "dimint/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "dimint/delta1d.hpp"
#include "dimint/errors.hpp"

namespace dimint {

InputError::InputError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

void RunConfig::validate() const {
  if (opt_restarts < 1) throw DomainError("restarts must be at least 1");
  if (!(opt_tol > 0.0)) throw DomainError("tolerance must be positive");
  switch (command) {
    case Command::Atom:
      (void)AtomSpec::from_name(element);
      if (output_format == OutputFormat::Csv) throw DomainError("atom reports are text or json");
      break;
    case Command::H2Curve:
    case Command::Compare:
      if (command == Command::Compare && reference_path.empty()) throw DomainError("--reference is required");
      if (!curve_path.empty()) break;
      if (!(r_min > 0.0 && r_min < r_max && std::isfinite(r_max))) throw DomainError("need 0 < r-min < r-max");
      if (points < 2) throw DomainError("need at least two points");
      if (command == Command::H2Curve && output_format == OutputFormat::Text)
        throw DomainError("curves are csv or json");
      break;
  }
}

namespace {

std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double rounded9(double v) { return std::stod(sig9(v)); }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) f.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') f.emplace_back();
  return f;
}

double parse_number(const std::string& s, int line) {
  if (s.empty()) throw InputError("empty field", line);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + s + "'", line);
  }
  if (used != s.size() || !std::isfinite(v)) throw InputError("not a finite number: '" + s + "'", line);
  return v;
}

const std::vector<std::string> kCurveHeader{"R", "eps1_scaled", "epsinf_scaled", "eps3", "binding"};

// Reads a header plus numeric rows of the given width.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (t.header.empty()) {
      t.header = fields;
      continue;
    }
    if (fields.size() != t.header.size())
      throw InputError("expected " + std::to_string(t.header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       n);
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_number(f, n));
    if (!t.rows.empty() && !(row[0] > t.rows.back()[0])) throw InputError("R must be strictly increasing", n);
    if (!(row[0] > 0.0)) throw InputError("R must be positive", n);
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw InputError("empty file", 1);
  return t;
}

}  // namespace

ReferenceCurve read_reference_csv(std::istream& in) {
  Table t = read_table(in);
  std::size_t column;
  if (t.header == std::vector<std::string>{"R", "E"})
    column = 1;
  else if (t.header == kCurveHeader)
    column = 4;
  else
    throw InputError("header must be 'R,E' or a curve header", 1);
  if (t.rows.size() < 2) throw InputError("need at least two data rows");
  ReferenceCurve r;
  for (const auto& row : t.rows) {
    r.R.push_back(row[0]);
    r.E.push_back(row[column]);
  }
  return r;
}

PotentialCurve read_curve_csv(std::istream& in) {
  Table t = read_table(in);
  if (t.header != kCurveHeader) throw InputError("unexpected curve header", 1);
  if (t.rows.empty()) throw InputError("curve has no rows");
  PotentialCurve c;
  for (const auto& row : t.rows) c.points.push_back({row[0], row[1], row[2], row[3], row[4]});
  return c;
}

std::string format_curve_csv(const PotentialCurve& curve) {
  std::string s = "R,eps1_scaled,epsinf_scaled,eps3,binding\n";
  for (const auto& p : curve.points)
    s += sig9(p.R) + ',' + sig9(p.eps1_scaled) + ',' + sig9(p.epsinf_scaled) + ',' + sig9(p.eps3) + ',' +
         sig9(p.binding) + '\n';
  return s;
}

std::string format_curve_json(const PotentialCurve& curve) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : curve.points)
    rows.push_back({{"R", rounded9(p.R)},
                    {"eps1_scaled", rounded9(p.eps1_scaled)},
                    {"epsinf_scaled", rounded9(p.epsinf_scaled)},
                    {"eps3", rounded9(p.eps3)},
                    {"binding", rounded9(p.binding)}});
  return nlohmann::ordered_json{{"points", rows}}.dump(2) + '\n';
}

ComparisonReport compare_curves(const PotentialCurve& curve, const ReferenceCurve& ref) {
  if (ref.R.size() < 2 || ref.R.size() != ref.E.size()) throw InputError("reference needs at least two rows");
  double sum2 = 0.0, worst = 0.0;
  int n = 0;
  for (const auto& p : curve.points) {
    if (p.R < ref.R.front() || p.R > ref.R.back()) continue;
    auto hi = std::lower_bound(ref.R.begin(), ref.R.end(), p.R);
    std::size_t j = static_cast<std::size_t>(hi - ref.R.begin());
    double e;
    if (ref.R[j] == p.R) {
      e = ref.E[j];
    } else {
      const double t = (p.R - ref.R[j - 1]) / (ref.R[j] - ref.R[j - 1]);
      e = ref.E[j - 1] + t * (ref.E[j] - ref.E[j - 1]);
    }
    const double d = p.binding - e;
    sum2 += d * d;
    worst = std::max(worst, std::abs(d));
    ++n;
  }
  if (n == 0) throw InputError("computed and reference R ranges do not overlap");
  return {std::sqrt(sum2 / n), worst, n, "linear"};
}

int default_restarts() {
  const char* v = std::getenv(kRestartsEnv);
  if (v == nullptr || *v == '\0') return OptimSettings{}.restarts;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 100000)
    throw DomainError(std::string(kRestartsEnv) + " must be a positive integer");
  return static_cast<int>(n);
}

namespace {

// Writes to the configured path or to out; false when the file cannot be written.
bool emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream f(config.output_path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.close();
  return !f.fail();
}

int guarded(std::ostream& err, auto&& body) {
  try {
    return body();
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::nonconvergence;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_arguments;
  }
}

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string percent2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f%%", v);
  return buf;
}

std::string atom_text(const AtomReport& r) {
  std::ostringstream s;
  const auto& g = r.large_d.geometry;
  const double exact = exact_epsilon3(r.atom.element);
  s << "element " << to_string(r.atom.element) << "  Z=" << r.atom.Z << "  lambda=" << fixed6(r.atom.lambda)
    << '\n';
  s << "D=1      xi0 = " << fixed6(r.xi0) << '\n';
  if (r.eps1_exact) s << "         eps1 exact_constant = " << fixed6(*r.eps1_exact) << '\n';
  s << "         eps1 variational_1d = " << fixed6(r.eps1_variational) << '\n';
  s << "         eps1 subformula     = " << fixed6(r.eps1_subformula) << '\n';
  s << "D=inf    eps_inf = " << fixed6(r.large_d.epsilon_inf) << "  (restarts " << r.large_d.report.restarts_used
    << ", |grad| " << r.large_d.report.gradient_norm_fd << ")\n";
  s << "         radii";
  for (Eigen::Index i = 0; i < g.radii.size(); ++i) s << ' ' << fixed6(g.radii[i]);
  s << "\n         cosines";
  for (Eigen::Index i = 0; i < g.cosines.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cosines.cols(); ++j)
      s << " g" << i + 1 << j + 1 << '=' << fixed6(g.cosines(i, j));
  s << '\n';
  s << "1/Z      eps1^(1) = " << fixed6(r.coeffs.eps1_1) << "  eps3^(1) = " << fixed6(r.coeffs.eps3_1)
    << "  epsinf^(1) = " << fixed6(r.coeffs.epsinf_1) << '\n';
  for (Eps1Source src : {Eps1Source::ExactConstant, Eps1Source::Variational1D, Eps1Source::Subformula}) {
    if (src == Eps1Source::ExactConstant && !r.eps3_exact_constant) continue;
    const double e3 = r.eps3_of(src);
    s << "D=3      eps3 " << to_string(src) << (src == r.default_source ? " *" : "") << " = " << fixed6(e3)
      << "  E = " << fixed6(to_hartree(e3, r.atom.Z, 3.0)) << " hartree"
      << "  error " << percent2(percent_error(e3, exact)) << '\n';
  }
  s << "exact    eps3 = " << fixed6(exact) << "  E = " << fixed6(to_hartree(exact, r.atom.Z, 3.0))
    << " hartree\n";
  return s.str();
}

std::string atom_json(const AtomReport& r) {
  using nlohmann::ordered_json;
  const double exact = exact_epsilon3(r.atom.element);
  const auto& g = r.large_d.geometry;
  ordered_json eps1{{"variational_1d", r.eps1_variational}, {"subformula", r.eps1_subformula}};
  if (r.eps1_exact) eps1["exact_constant"] = *r.eps1_exact;
  ordered_json eps3 = ordered_json::object();
  for (Eps1Source src : {Eps1Source::ExactConstant, Eps1Source::Variational1D, Eps1Source::Subformula}) {
    if (src == Eps1Source::ExactConstant && !r.eps3_exact_constant) continue;
    const double e3 = r.eps3_of(src);
    eps3[std::string(to_string(src))] = {{"eps3", e3},
                                         {"hartree", to_hartree(e3, r.atom.Z, 3.0)},
                                         {"percent_error", percent_error(e3, exact)}};
  }
  std::vector<double> radii(g.radii.data(), g.radii.data() + g.radii.size());
  std::vector<double> cos;
  for (Eigen::Index i = 0; i < g.cosines.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cosines.cols(); ++j) cos.push_back(g.cosines(i, j));
  ordered_json j{{"element", std::string(to_string(r.atom.element))},
                 {"Z", r.atom.Z},
                 {"lambda", r.atom.lambda},
                 {"xi0", r.xi0},
                 {"eps1", eps1},
                 {"epsinf", {{"value", r.large_d.epsilon_inf}, {"radii", radii}, {"cosines", cos}}},
                 {"coefficients",
                  {{"eps1_1", r.coeffs.eps1_1}, {"eps3_1", r.coeffs.eps3_1}, {"epsinf_1", r.coeffs.epsinf_1}}},
                 {"eps3", eps3},
                 {"default_source", std::string(to_string(r.default_source))},
                 {"exact_eps3", exact}};
  return j.dump(2) + '\n';
}

}  // namespace

int run_atom(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const AtomReport r = analyze_atom(AtomSpec::from_name(config.element), config.settings());
    const std::string text = config.output_format == OutputFormat::Json ? atom_json(r) : atom_text(r);
    if (!emit(config, text, out)) {
      err << "error: cannot write " << config.output_path << '\n';
      return exit_code::unwritable;
    }
    return exit_code::ok;
  });
}

int run_h2_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const PotentialCurve c = build_curve(config.r_min, config.r_max, config.points, config.settings(),
                                         config.threads);
    const std::string text =
        config.output_format == OutputFormat::Json ? format_curve_json(c) : format_curve_csv(c);
    if (!emit(config, text, out)) {
      err << "error: cannot write " << config.output_path << '\n';
      return exit_code::unwritable;
    }
    return exit_code::ok;
  });
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    auto open = [](const std::string& path) {
      std::ifstream f(path);
      if (!f) throw InputError("cannot read " + path);
      return f;
    };
    ReferenceCurve ref;
    {
      std::ifstream f = open(config.reference_path);
      ref = read_reference_csv(f);
    }
    PotentialCurve curve;
    if (!config.curve_path.empty()) {
      std::ifstream f = open(config.curve_path);
      curve = read_curve_csv(f);
    } else {
      curve = build_curve(config.r_min, config.r_max, config.points, config.settings(), config.threads);
    }
    const ComparisonReport r = compare_curves(curve, ref);
    std::string text;
    if (config.output_format == OutputFormat::Json) {
      text = nlohmann::ordered_json{{"rmse", r.rmse},
                                    {"max_abs_err", r.max_abs_err},
                                    {"n_points_compared", r.n_points_compared},
                                    {"interpolation_method_for_grid_mismatch",
                                     r.interpolation_method_for_grid_mismatch}}
                 .dump(2) +
             '\n';
    } else {
      text = "rmse " + sig9(r.rmse) + " hartree\nmax_abs_err " + sig9(r.max_abs_err) +
             " hartree\nn_points_compared " + std::to_string(r.n_points_compared) +
             "\ninterpolation " + r.interpolation_method_for_grid_mismatch + '\n';
    }
    if (!emit(config, text, out)) {
      err << "error: cannot write " << config.output_path << '\n';
      return exit_code::unwritable;
    }
    return exit_code::ok;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.opt_restarts = default_restarts();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid_arguments;
  }
  config.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Ground-state energies by interpolation between D = 1 and D -> infinity"};
  app.require_subcommand(1);
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  OutputFormat format = OutputFormat::Text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", config.opt_tol, "optimizer simplex-diameter tolerance");
    sub->add_option("--restarts", config.opt_restarts,
                    std::string("optimizer starts (default 16, or $") + kRestartsEnv + ")");
    sub->add_option("--seed", config.seed, "optimizer seed");
    sub->add_option("--format", format, "text, csv or json")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("-o,--output", config.output_path, "output file (default: stdout)");
  };
  auto grid = [&](CLI::App* sub) {
    sub->add_option("--r-min", config.r_min, "smallest R (bohr)");
    sub->add_option("--r-max", config.r_max, "largest R (bohr)");
    sub->add_option("--points", config.points, "grid points");
    sub->add_option("--threads", config.threads, "worker threads");
  };

  CLI::App* atom = app.add_subcommand("atom", "report for He, Li or Be");
  atom->add_option("--element", config.element, "he, li or be")->required();
  common(atom);
  CLI::App* curve = app.add_subcommand("h2-curve", "H2 binding curve");
  common(curve);
  grid(curve);
  CLI::App* compare = app.add_subcommand("compare", "compare the H2 curve with a reference CSV");
  compare->add_option("--reference", config.reference_path, "CSV with header R,E (hartree)")->required();
  compare->add_option("--curve", config.curve_path, "use a previously written curve CSV");
  common(compare);
  grid(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::invalid_arguments;
  }

  if (atom->parsed()) {
    config.command = Command::Atom;
    if (format != OutputFormat::Text) config.output_format = format;
    return run_atom(config, out, err);
  }
  if (curve->parsed()) {
    config.command = Command::H2Curve;
    config.output_format = curve->count("--format") ? format : OutputFormat::Csv;
    return run_h2_curve(config, out, err);
  }
  config.command = Command::Compare;
  if (format != OutputFormat::Text) config.output_format = format;
  return run_compare(config, out, err);
}

}  // namespace dimint
