// ubenford: u-Benford experiments from the command line.
//
// Exit status: 0 on success, 1 on bad input (arguments, files, parameters),
// 2 when a computation fails (certificate violation, precision cap, ...).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ubenford/emit.hpp"
#include "ubenford/error.hpp"
#include "ubenford/experiments.hpp"

namespace {

using namespace ubenford;

struct CommonOptions {
  std::optional<long> n;
  std::uint64_t seed = 1;
  std::string transform;
  int base = 10;
  int precision = PrecisionPolicy{}.initial_digits;
  int max_digits = PrecisionPolicy{}.max_digits;
  std::string format = "text";
  double alpha_level = 0.05;
  std::string ks_reference = "range";
  unsigned threads = 0;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--n", o.n, "Sequence length or sample size (overrides the defaults)");
  cmd->add_option("--seed", o.seed, "Seed of the random sampler")->capture_default_str();
  cmd->add_option("--transform", o.transform, "loglog, log, logB, sqrt, pisquare or identity");
  cmd->add_option("--base", o.base, "Base of the log transform and of digit reports")->capture_default_str();
  cmd->add_option("--precision", o.precision, "Initial working precision in decimal digits")->capture_default_str();
  cmd->add_option("--max-digits", o.max_digits, "Precision cap in decimal digits")->capture_default_str();
  cmd->add_option("--format", o.format, "text, json or plot")->capture_default_str();
  cmd->add_option("--alpha-level", o.alpha_level, "Significance level of the KS verdicts")->capture_default_str();
  cmd->add_option("--ks-reference", o.ks_reference, "range (uniform on the sample range) or unit (on [0,1))")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores")->capture_default_str();
  cmd->add_option("-o,--output", o.output, "Write to this file instead of standard output");
}

ExperimentConfig make_config(const CommonOptions& o, ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  c.n = o.n;
  c.seed = o.seed;
  c.precision.initial_digits = o.precision;
  c.precision.max_digits = o.max_digits;
  c.alpha_level = o.alpha_level;
  c.ks_reference = parse_ks_reference(o.ks_reference);
  c.base = o.base;
  c.threads = o.threads;
  if (!o.transform.empty()) {
    TransformSpec u = parse_transform(o.transform);
    if (u.kind == TransformKind::Log && o.transform == "log") u.base = o.base;
    c.transform = u;
  }
  (void)parse_format(o.format);
  c.validate();
  return c;
}

template <typename Report>
void write(const Report& r, const CommonOptions& o) {
  const OutputFormat f = parse_format(o.format);
  if (o.output.empty()) {
    emit(r, f, std::cout);
  } else {
    emit_to_file(r, f, o.output);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"u-Benford experiments: fractional parts {u(x)} and their uniformity"};
  app.require_subcommand(1);

  CommonOptions t1o, t3o, bo, po, ao;
  auto* table1 = app.add_subcommand("table1", "KS tests of {u(v_n)} for six sequences and four transforms");
  add_common(table1, t1o);

  auto* table3 = app.add_subcommand("table3", "Uniform and exponential limits, half-normal sample");
  add_common(table3, t3o);

  auto* bounds = app.add_subcommand("bounds", "Bound certificates: the sweep, or one model with --family");
  add_common(bounds, bo);
  std::string b_family, b_theorem = "auto";
  std::optional<double> b_param;
  int z_grid = kDefaultZGrid;
  bounds->add_option("--family", b_family, "pareto1, pareto2, lognormal, uniform, exponential, halfnormal");
  bounds->add_option("--param", b_param, "Main parameter of the family");
  bounds->add_option("--theorem", b_theorem, "T1, T2 or auto (T1 for log base 10)")->capture_default_str();
  bounds->add_option("--z-grid", z_grid, "Points of the z grid")->capture_default_str();

  auto* pdelta = app.add_subcommand("pdelta", "P({pi X^2} < delta) for uniform and exponential X");
  add_common(pdelta, po);
  std::string p_family;
  std::optional<double> p_param;
  pdelta->add_option("--family", p_family, "uniform or exponential (with --param)");
  pdelta->add_option("--param", p_param, "k for uniform, lambda for exponential");

  auto* analyze = app.add_subcommand("analyze", "u-Benford tests of one column of a CSV file");
  add_common(analyze, ao);
  std::string csv_path, column = "1";
  analyze->add_option("csv", csv_path, "Input file")->required();
  analyze->add_option("--column", column, "1-based column index or header name")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (table1->parsed()) {
      write(run_table1(make_config(t1o, ExperimentKind::SequenceTable)), t1o);
    } else if (table3->parsed()) {
      write(run_table3(make_config(t3o, ExperimentKind::RvTable)), t3o);
    } else if (bounds->parsed()) {
      const ExperimentConfig c = make_config(bo, ExperimentKind::BoundSweep);
      if (b_family.empty()) {
        write(run_bound_sweep(c, z_grid), bo);
      } else {
        if (!b_param) throw Error(ErrorKind::InvalidParameter, "--family needs --param");
        const DistributionModel m = make_model(b_family, *b_param);
        const TransformSpec u = c.transform.value_or(TransformSpec::log(10));
        Theorem t;
        if (b_theorem == "auto") {
          t = u == TransformSpec::log(10) ? Theorem::T1 : Theorem::T2;
        } else if (b_theorem == "T1" || b_theorem == "T2") {
          t = b_theorem == "T1" ? Theorem::T1 : Theorem::T2;
        } else {
          throw Error(ErrorKind::InvalidParameter, "--theorem must be T1, T2 or auto");
        }
        write(certify(t, m, u, z_grid), bo);
      }
    } else if (pdelta->parsed()) {
      const ExperimentConfig c = make_config(po, ExperimentKind::PDeltaCurve);
      if (p_family.empty()) {
        write(run_pdelta_curves(c), po);
      } else {
        if (!p_param) throw Error(ErrorKind::InvalidParameter, "--family needs --param");
        if (p_family != "uniform" && p_family != "exponential") {
          throw Error(ErrorKind::InvalidParameter, "pdelta family must be uniform or exponential");
        }
        PDeltaCurve curve{p_family, *p_param, delta_grid(), {}};
        for (double d : curve.deltas) {
          curve.values.push_back(p_family == "uniform" ? p_delta_uniform(*p_param, d)
                                                       : p_delta_exponential(*p_param, d));
        }
        write(std::vector<PDeltaCurve>{curve}, po);
      }
    } else if (analyze->parsed()) {
      const ExperimentConfig c = make_config(ao, ExperimentKind::DataTable);
      write(run_analyze(ingest_csv(csv_path, ColumnSelector::parse(column)), c), ao);
    }
  } catch (const Error& e) {
    std::cerr << "ubenford: " << e.what() << '\n';
    return is_input_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "ubenford: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
