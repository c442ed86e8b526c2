#include "polytorus/cli.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polytorus/case_family.hpp"
#include "polytorus/classify.hpp"
#include "polytorus/hankel.hpp"
#include "polytorus/io.hpp"
#include "polytorus/kernels.hpp"
#include "polytorus/quadrature.hpp"
#include "polytorus/weak_product.hpp"

namespace polytorus::cli {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct CommonOpts {
  std::string out_path;
  bool json = false;
  bool serial = false;
  int threads = 0;
  int n_grid = 4096;
  int n_full = 512;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_grid = true) {
  cmd->add_option("--out", c.out_path, "write output to this file instead of stdout");
  cmd->add_flag("--json", c.json, "emit JSON instead of CSV");
  cmd->add_flag("--serial", c.serial, "run the serial reference kernels");
  cmd->add_option("--threads", c.threads, "OpenMP thread count (0 keeps the runtime default)")
      ->check(CLI::NonNegativeNumber);
  if (with_grid) {
    cmd->add_option("--n-grid", c.n_grid, "nodes for the reduced one-variable quadrature")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-full", c.n_full, "nodes per axis for the full tensor quadrature")
        ->check(CLI::PositiveNumber);
  }
}

Exec exec_of(const CommonOpts& c) { return c.serial ? Exec::serial : Exec::parallel; }

QuadratureOptions quad_of(const CommonOpts& c) { return {c.n_grid, c.n_full, exec_of(c)}; }

void apply_threads(const CommonOpts& c) {
  if (c.threads > 0) kernels::set_threads(c.threads);
}

int with_output(const CommonOpts& c, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (c.out_path.empty()) return body(out);
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << c.out_path << " for writing\n";
    return kUsage;
  }
  return body(file);
}

Polynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return polynomial_from_text(buf.str());
}

std::vector<double> alpha_range(double lo, double hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("--alpha-step must be positive");
  if (hi < lo) throw std::invalid_argument("--alpha-max is below --alpha-min");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
  return grid;
}

struct NormsOpts {
  CommonOpts common;
  double amin = 0.0;
  double amax = 2.5;
  double astep = 0.05;
};

int cmd_norms(const NormsOpts& o, std::ostream& out, std::ostream& err) {
  apply_threads(o.common);
  const Exec exec = exec_of(o.common);
  const QuadratureOptions quad = quad_of(o.common);
  DualSearchOptions dopt;
  dopt.search.exec = exec;
  std::vector<NormsRow> rows;
  for (double a : alpha_range(o.amin, o.amax, o.astep)) {
    const Polynomial phi = symmetric_quadratic(a);
    NormsRow r;
    r.alpha = a;
    r.h2 = family_h2(a);
    r.w_closed = family_w(a);
    r.h1_closed = family_h1(a);
    r.h1_quad = h1_norm(phi, quad);
    r.w_lower = w_bracket(phi, {}, dopt).lower;
    r.w_dual = dual_w_norm(phi, exec);
    rows.push_back(r);
  }
  return with_output(o.common, out, err, [&](std::ostream& os) {
    if (o.common.json)
      emit_norms_json(os, rows);
    else
      emit_norms_csv(os, rows);
    return kOk;
  });
}

struct ClassifyOpts {
  CommonOpts common;
  double alpha = 0.0;
  std::string input;
  double amin = 0.0;
  double amax = 2.5;
  double astep = 0.05;
  double tol = 0.0;  // 0 keeps the per-route defaults
};

int cmd_classify(const ClassifyOpts& o, bool have_alpha, bool have_range, std::ostream& out,
                 std::ostream& err) {
  apply_threads(o.common);
  ClassifySettings st;
  st.quad = quad_of(o.common);
  st.search.search.exec = exec_of(o.common);
  if (o.tol > 0.0) st.tol_closed = st.tol_numeric = o.tol;
  std::vector<NormReport> reports;
  if (!o.input.empty()) {
    reports.push_back(classify(read_polynomial_file(o.input), st));
  } else if (have_alpha) {
    reports = classification_sweep({o.alpha}, st);
  } else {
    reports = classification_sweep(have_range ? alpha_range(o.amin, o.amax, o.astep)
                                              : default_sweep_grid(),
                                   st);
  }
  const int code = with_output(o.common, out, err, [&](std::ostream& os) {
    if (o.common.json)
      emit_classify_json(os, reports);
    else
      emit_classify_csv(os, reports);
    return kOk;
  });
  if (code != kOk) return code;
  for (const auto& r : reports)
    if (!r.w_conclusive) {
      err << "warning: weak-product bracket too loose to certify hp_w for at least one symbol\n";
      return kNumeric;
    }
  return kOk;
}

struct HankelOpts {
  CommonOpts common;
  double alpha = 1.0;
  std::string input;
};

int cmd_hankel(const HankelOpts& o, std::ostream& out, std::ostream& err) {
  apply_threads(o.common);
  const Polynomial phi =
      o.input.empty() ? symmetric_quadratic(o.alpha) : read_polynomial_file(o.input);
  const HankelMatrix h = build_hankel(phi, exec_of(o.common));
  const double norm = spectral_norm(h);
  return with_output(o.common, out, err, [&](std::ostream& os) {
    if (o.common.json)
      emit_hankel_json(os, h, norm);
    else
      emit_hankel_csv(os, h, norm);
    return kOk;
  });
}

struct FactorizeOpts {
  CommonOpts common;
  double alpha = 0.0;
};

int cmd_factorize(const FactorizeOpts& o, std::ostream& out, std::ostream& err) {
  const WeakFactorization f = family_factorization(o.alpha);
  const std::string text = f.to_text();  // includes the cost line; throws when the identity fails
  return with_output(o.common, out, err, [&](std::ostream& os) {
    os << text << "# verification PASS\n";
    return kOk;
  });
}

struct CheckH1Opts {
  CommonOpts common;
  double alpha = 0.0;
  std::string input;
  double tol = 1e-3;
};

int cmd_check_h1(const CheckH1Opts& o, bool have_alpha, std::ostream& out, std::ostream& err) {
  apply_threads(o.common);
  if (o.input.empty() && !have_alpha)
    throw std::invalid_argument("check-h1 needs --alpha or --input");
  const Polynomial phi =
      o.input.empty() ? symmetric_quadratic(o.alpha) : read_polynomial_file(o.input);
  const double res = h1_hilbert_residual(phi, quad_of(o.common));
  return with_output(o.common, out, err, [&](std::ostream& os) {
    os << "residual " << format_double(res) << '\n';
    if (res < o.tol) {
      os << "verdict yes\n";
      return kOk;
    }
    if (res >= 10.0 * o.tol) {
      os << "verdict no\n";
      return kOk;
    }
    os << "verdict ambiguous\n";
    return kNumeric;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hardy, Hankel and weak-product norms on the polytorus"};
  app.name("polytorus");
  app.require_subcommand(1);
  int code = kOk;

  NormsOpts no;
  CLI::App* norms = app.add_subcommand(
      "norms", "norm table for the family z1^2 + alpha z1 z2 + z2^2 over an alpha grid");
  add_common(norms, no.common);
  norms->add_option("--alpha-min", no.amin, "first alpha")->check(CLI::NonNegativeNumber);
  norms->add_option("--alpha-max", no.amax, "last alpha");
  norms->add_option("--alpha-step", no.astep, "alpha increment");
  norms->callback([&] { code = cmd_norms(no, out, err); });

  ClassifyOpts co;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "norm-attaining and Hilbert-point flags for family members or a polynomial file");
  add_common(classify_cmd, co.common);
  CLI::Option* co_alpha =
      classify_cmd->add_option("--alpha", co.alpha, "single family parameter")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--input", co.input, "polynomial text file to classify instead")
      ->check(CLI::ExistingFile)
      ->excludes(co_alpha);
  CLI::Option* co_min = classify_cmd->add_option("--alpha-min", co.amin, "first alpha")
                            ->check(CLI::NonNegativeNumber);
  CLI::Option* co_max = classify_cmd->add_option("--alpha-max", co.amax, "last alpha");
  CLI::Option* co_step = classify_cmd->add_option("--alpha-step", co.astep, "alpha increment");
  classify_cmd->add_option("--tol", co.tol, "flag tolerance override")->check(CLI::PositiveNumber);
  classify_cmd->callback([&] {
    const bool have_range = co_min->count() || co_max->count() || co_step->count();
    code = cmd_classify(co, co_alpha->count() > 0, have_range, out, err);
  });

  double a0_tol = 1e-8;
  CLI::App* alpha0 = app.add_subcommand(
      "alpha0", "family parameter where the H1 Hilbert-point identity holds again");
  alpha0->add_option("--tol", a0_tol, "bisection tolerance")->check(CLI::PositiveNumber);
  alpha0->callback([&] { out << format_double(solve_alpha0(a0_tol)) << '\n'; });

  HankelOpts ho;
  CLI::App* hankel = app.add_subcommand(
      "hankel", "Hankel matrix and spectral norm for a family member or a polynomial file");
  add_common(hankel, ho.common, false);
  CLI::Option* ha_alpha = hankel->add_option("--alpha", ho.alpha, "family parameter (default 1)")
                              ->check(CLI::NonNegativeNumber);
  hankel->add_option("--input", ho.input, "polynomial text file")
      ->check(CLI::ExistingFile)
      ->excludes(ha_alpha);
  hankel->callback([&] { code = cmd_hankel(ho, out, err); });

  FactorizeOpts fo;
  CLI::App* factorize = app.add_subcommand(
      "factorize", "cost-optimal weak-product factorization of a family member");
  add_common(factorize, fo.common, false);
  factorize->add_option("--alpha", fo.alpha, "family parameter")
      ->check(CLI::NonNegativeNumber)
      ->required();
  factorize->callback([&] { code = cmd_factorize(fo, out, err); });

  CheckH1Opts cho;
  CLI::App* check = app.add_subcommand(
      "check-h1", "quadrature verdict on the H1 Hilbert-point identity for one symbol");
  add_common(check, cho.common);
  CLI::Option* ch_alpha =
      check->add_option("--alpha", cho.alpha, "family parameter")->check(CLI::NonNegativeNumber);
  check->add_option("--input", cho.input, "polynomial text file")
      ->check(CLI::ExistingFile)
      ->excludes(ch_alpha);
  check->add_option("--tol", cho.tol, "residual threshold for a yes verdict")
      ->check(CLI::PositiveNumber);
  check->callback([&] { code = cmd_check_h1(cho, ch_alpha->count() > 0, out, err); });

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("polytorus");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return code;
}

}  // namespace polytorus::cli
