#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ubenford/bounds.hpp"
#include "ubenford/dataset.hpp"
#include "ubenford/precision.hpp"
#include "ubenford/sequences.hpp"
#include "ubenford/uniformity.hpp"

namespace ubenford {

enum class ExperimentKind { SequenceTable, DataTable, RvTable, BoundSweep, PDeltaCurve };
std::string to_string(ExperimentKind k);

inline constexpr long kMaxSequenceN = 1'000'000;
inline constexpr long kMaxSampleN = 100'000'000;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::SequenceTable;
  /// Replaces every sequence length (table1) or the sample size (table3).
  std::optional<long> n;
  std::uint64_t seed = 1;
  PrecisionPolicy precision;
  /// Experiments compare against the sample range by default; this is the
  /// convention under which the published tables were computed.
  KsReference ks_reference = KsReference::SampleRange;
  double alpha_level = 0.05;
  int base = 10;  ///< base of the Log transform and of digit reports
  /// Restricts table1 / analyze to one transform.
  std::optional<TransformSpec> transform;
  unsigned threads = 0;

  void validate() const;
};

struct SequenceCell {
  std::string sequence;
  std::string transform;
  long requested = 0;
  long filtered = 0;
  long out_of_domain = 0;
  std::string exclusions;
  UniformityReport ks;
  bool flagged = false;
  std::string note;
  std::vector<double> values;  ///< the fractional parts, for ECDF output
};

struct Table1Report {
  std::vector<std::string> sequences;
  std::vector<std::string> transforms;
  std::vector<SequenceCell> cells;  ///< row-major over sequences x transforms
  std::vector<SequenceCell> reruns;
  std::vector<std::string> footnotes;

  const SequenceCell& cell(std::size_t row, std::size_t col) const { return cells.at(row * transforms.size() + col); }
};

/// The six sequences with their default lengths (10000 for sqrt(n), pi n, p_n;
/// 1000 for e^n, n!, n^n).
std::vector<SequenceSpec> table1_sequences(const ExperimentConfig& config);
std::vector<TransformSpec> table1_transforms(const ExperimentConfig& config);

Table1Report run_table1(const ExperimentConfig& config);

/// sup-discrepancy of {u(X)} along a parameter path, with a YES/NO reading.
struct LimitCell {
  std::string transform;
  std::string method;  ///< "mod1-law" or "p-delta"
  std::vector<double> parameters;
  std::vector<double> discrepancies;
  bool u_benford = false;
};

struct LimitRow {
  std::string family;
  std::string parameter_name;
  std::vector<LimitCell> cells;  ///< Log, Sqrt, PiSquare
};

struct SampleRow {
  std::string model;
  long n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> transforms;
  std::vector<UniformityReport> reports;
  std::vector<std::vector<double>> values;
};

struct Table3Report {
  std::vector<LimitRow> limits;  ///< uniform, exponential
  SampleRow sample;              ///< half-normal
  std::vector<std::string> footnotes;
};

/// A path reads YES when its last discrepancy is below 0.01 and at most half
/// of its first one.
bool limit_verdict(const std::vector<double>& discrepancies);

/// The 9 deltas 0.1, 0.2, ..., 0.9.
std::vector<double> delta_grid();

Table3Report run_table3(const ExperimentConfig& config);

/// Half-normal row alone: fractional parts of Log, Sqrt, PiSquare of a seeded
/// sample, each KS-tested.
SampleRow half_normal_row(double sigma, long n, std::uint64_t seed, const ExperimentConfig& config);

struct BoundSweep {
  std::vector<BoundCertificate> certificates;
};

/// T1 on ParetoI, ParetoII and lognormal grids; T2 on uniform and exponential
/// grids under sqrt. A certificate violation propagates.
BoundSweep run_bound_sweep(const ExperimentConfig& config, int z_grid = kDefaultZGrid);

struct PDeltaCurve {
  std::string family;  ///< "uniform" or "exponential"
  double parameter = 0.0;
  std::vector<double> deltas;
  std::vector<PDelta> values;
};

/// Uniform k in {1, 10, 100, 1000} and exponential lambda in {1, 0.1, 0.01, 0.001}
/// over delta_grid().
std::vector<PDeltaCurve> run_pdelta_curves(const ExperimentConfig& config);

struct AnalyzeColumn {
  std::string transform;
  long out_of_domain = 0;
  UniformityReport ks;
  std::vector<double> values;
};

struct AnalyzeReport {
  Dataset dataset;
  std::vector<AnalyzeColumn> columns;
  DigitHistogram digits;
};

/// KS tests of {u(x)} for loglog, log base b, sqrt and pi x^2 plus a digit report.
AnalyzeReport run_analyze(const Dataset& dataset, const ExperimentConfig& config);

}  // namespace ubenford
