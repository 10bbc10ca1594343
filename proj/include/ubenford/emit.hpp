#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "ubenford/bounds.hpp"
#include "ubenford/experiments.hpp"

namespace ubenford {

/// text-table: aligned tables for reading. structured-record: one JSON
/// document. plot-points: comma-separated rows with a header line.
enum class OutputFormat { TextTable, StructuredRecord, PlotPoints };

std::string to_string(OutputFormat f);
/// Accepts text|text-table, json|structured-record, plot|plot-points.
OutputFormat parse_format(std::string_view name);

/// Formats a p-value as a table cell: ".842", "1.000".
std::string format_p(double p);
/// "z (p)" with z to three decimals.
std::string format_cell(const UniformityReport& r);

/// Every emitter writes deterministically and throws IoError when the stream fails.
///
/// Plot-points layouts: Mod1Law and a single certificate give "z,value";
/// everything else gives "series,transform,x,y", where (x, y) are ECDF steps
/// for samples, (z, P) for laws, (parameter, discrepancy) for limit paths and
/// (delta, P_delta) for P_delta curves.
void emit(const Table1Report& r, OutputFormat f, std::ostream& out);
void emit(const Table3Report& r, OutputFormat f, std::ostream& out);
void emit(const BoundSweep& r, OutputFormat f, std::ostream& out);
void emit(const BoundCertificate& r, OutputFormat f, std::ostream& out);
void emit(const std::vector<PDeltaCurve>& r, OutputFormat f, std::ostream& out);
void emit(const AnalyzeReport& r, OutputFormat f, std::ostream& out);
void emit(const Mod1Law& r, OutputFormat f, std::ostream& out);

/// Writes through `emit` into `path` (created or truncated).
template <typename Report>
void emit_to_file(const Report& r, OutputFormat f, const std::filesystem::path& path);

}  // namespace ubenford
