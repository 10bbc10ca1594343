#include "ubenford/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "ubenford/error.hpp"

namespace ubenford {

using nlohmann::ordered_json;

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::TextTable: return "text-table";
    case OutputFormat::StructuredRecord: return "structured-record";
    case OutputFormat::PlotPoints: return "plot-points";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text" || name == "text-table") return OutputFormat::TextTable;
  if (name == "json" || name == "structured-record") return OutputFormat::StructuredRecord;
  if (name == "plot" || name == "plot-points") return OutputFormat::PlotPoints;
  throw Error(ErrorKind::InvalidParameter, "unknown format '" + std::string(name) + "' (text|json|plot)");
}

namespace {

constexpr int kSchemaVersion = 1;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.12g", v); }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void check(std::ostream& out) {
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed to write report");
}

ordered_json header(const char* report) {
  ordered_json j;
  j["report"] = report;
  j["schema_version"] = kSchemaVersion;
  return j;
}

ordered_json to_json(const UniformityReport& r) {
  return {{"n", r.n}, {"d", r.d}, {"z", r.z}, {"p", r.p}, {"alpha", r.alpha}, {"reject", r.reject},
          {"reference", to_string(r.reference)}};
}

ordered_json to_json(const SequenceCell& c) {
  return {{"sequence", c.sequence}, {"transform", c.transform}, {"requested", c.requested},
          {"filtered", c.filtered}, {"out_of_domain", c.out_of_domain}, {"exclusions", c.exclusions},
          {"ks", to_json(c.ks)},    {"flagged", c.flagged},       {"note", c.note}};
}

ordered_json to_json(const BoundCertificate& c) {
  return {{"theorem", to_string(c.theorem)},
          {"model", c.model},
          {"transform", c.transform},
          {"m", c.m},
          {"argmax", c.argmax},
          {"bound", c.bound},
          {"measured_discrepancy", c.measured_discrepancy},
          {"discrepancy_at_z", c.discrepancy_at_z},
          {"z_grid", c.z_grid},
          {"grid_error", c.grid_error},
          {"truncation", {{"mass", c.truncation_mass}, {"index_lo", c.law.index_lo}, {"index_hi", c.law.index_hi}}},
          {"diagnostic", c.diagnostic}};
}

ordered_json to_json(const PDelta& p, double delta) {
  return {{"delta", delta}, {"p", p.p}, {"lower", p.lower}, {"upper", p.upper}, {"terms", p.terms},
          {"tail_estimate", p.tail_estimate}};
}

void write_json(const ordered_json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void ecdf_rows(std::ostream& out, const std::string& series, const std::string& transform,
               std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << series << ',' << transform << ',' << num(values[i]) << ',' << num((i + 1) / n) << '\n';
  }
}

void law_rows(std::ostream& out, const std::string& series, const std::string& transform, const Mod1Law& law) {
  for (std::size_t i = 0; i < law.z.size(); ++i) {
    out << series << ',' << transform << ',' << num(law.z[i]) << ',' << num(law.values[i]) << '\n';
  }
}

constexpr const char* kSeriesHeader = "series,transform,x,y\n";

}  // namespace

std::string format_p(double p) {
  std::string s = fmt("%.3f", p);
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  return s;
}

std::string format_cell(const UniformityReport& r) { return fmt("%.3f", r.z) + " (" + format_p(r.p) + ")"; }

void emit(const Table1Report& r, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable: {
      const std::size_t w0 = 12, w = 18;
      out << pad("", w0);
      for (const auto& t : r.transforms) out << pad(t, w);
      out << '\n';
      for (std::size_t i = 0; i < r.sequences.size(); ++i) {
        out << pad(r.sequences[i], w0);
        for (std::size_t j = 0; j < r.transforms.size(); ++j) {
          const auto& c = r.cell(i, j);
          out << pad(format_cell(c.ks) + (c.flagged ? " *" : ""), w);
        }
        out << '\n';
      }
      out << '\n';
      for (const auto& c : r.reruns) {
        out << "re-run " << c.sequence << " under " << c.transform;
        if (!c.exclusions.empty()) out << " (without " << c.exclusions << ")";
        out << ", N = " << c.ks.n << ": " << format_cell(c.ks) << '\n';
      }
      out << '\n';
      for (const auto& c : r.cells) {
        if (c.flagged) out << "* " << c.sequence << " / " << c.transform << ": " << c.note << '\n';
      }
      for (const auto& note : r.footnotes) out << "- " << note << '\n';
      break;
    }
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("table1");
      j["sequences"] = r.sequences;
      j["transforms"] = r.transforms;
      j["cells"] = ordered_json::array();
      for (const auto& c : r.cells) j["cells"].push_back(to_json(c));
      j["reruns"] = ordered_json::array();
      for (const auto& c : r.reruns) j["reruns"].push_back(to_json(c));
      j["footnotes"] = r.footnotes;
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << kSeriesHeader;
      for (const auto& c : r.cells) ecdf_rows(out, c.sequence, c.transform, c.values);
      for (const auto& c : r.reruns) ecdf_rows(out, c.sequence + " re-run", c.transform, c.values);
      break;
  }
  check(out);
}

void emit(const Table3Report& r, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable: {
      const std::size_t w0 = 28, w = 18;
      out << pad("", w0);
      for (const auto& t : r.sample.transforms) out << pad(t, w);
      out << '\n';
      for (const auto& row : r.limits) {
        out << pad(row.family + " (" + row.parameter_name + " limit)", w0);
        for (const auto& c : row.cells) out << pad(c.u_benford ? "YES" : "NO", w);
        out << '\n';
      }
      out << pad(r.sample.model, w0);
      for (const auto& rep : r.sample.reports) out << pad(format_cell(rep), w);
      out << "\n\n";
      for (const auto& row : r.limits) {
        for (const auto& c : row.cells) {
          out << row.family << " / " << c.transform << " (" << c.method << "):";
          for (std::size_t i = 0; i < c.parameters.size(); ++i) {
            out << ' ' << row.parameter_name << '=' << num(c.parameters[i]) << " -> " << fmt("%.3g", c.discrepancies[i])
                << (i + 1 < c.parameters.size() ? ";" : "");
          }
          out << '\n';
        }
      }
      for (const auto& note : r.footnotes) out << "- " << note << '\n';
      break;
    }
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("table3");
      j["limits"] = ordered_json::array();
      for (const auto& row : r.limits) {
        ordered_json jr = {{"family", row.family}, {"parameter_name", row.parameter_name},
                           {"cells", ordered_json::array()}};
        for (const auto& c : row.cells) {
          jr["cells"].push_back({{"transform", c.transform},
                                 {"method", c.method},
                                 {"parameters", c.parameters},
                                 {"discrepancies", c.discrepancies},
                                 {"u_benford", c.u_benford}});
        }
        j["limits"].push_back(std::move(jr));
      }
      ordered_json s = {{"model", r.sample.model}, {"n", r.sample.n}, {"seed", r.sample.seed},
                        {"tests", ordered_json::array()}};
      for (std::size_t i = 0; i < r.sample.reports.size(); ++i) {
        s["tests"].push_back({{"transform", r.sample.transforms[i]}, {"ks", to_json(r.sample.reports[i])}});
      }
      j["sample"] = std::move(s);
      j["footnotes"] = r.footnotes;
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << kSeriesHeader;
      for (const auto& row : r.limits) {
        for (const auto& c : row.cells) {
          for (std::size_t i = 0; i < c.parameters.size(); ++i) {
            out << row.family << " limit," << c.transform << ',' << num(c.parameters[i]) << ','
                << num(c.discrepancies[i]) << '\n';
          }
        }
      }
      for (std::size_t i = 0; i < r.sample.values.size(); ++i) {
        ecdf_rows(out, r.sample.model, r.sample.transforms[i], r.sample.values[i]);
      }
      break;
  }
  check(out);
}

void emit(const BoundCertificate& c, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable:
      out << "theorem              " << to_string(c.theorem) << '\n'
          << "model                " << c.model << '\n'
          << "transform            " << c.transform << '\n'
          << "m                    " << num(c.m) << '\n'
          << "argmax               " << num(c.argmax) << '\n'
          << "bound                " << num(c.bound) << '\n'
          << "measured discrepancy " << num(c.measured_discrepancy) << " at z = " << num(c.discrepancy_at_z) << '\n'
          << "grid                 " << c.z_grid << " points, increment <= " << num(c.grid_error) << '\n'
          << "truncation mass      " << num(c.truncation_mass) << " (j = " << c.law.index_lo << " .. "
          << c.law.index_hi << ")\n";
      if (!c.diagnostic.empty()) out << "diagnostic           " << c.diagnostic << '\n';
      break;
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("certificate");
      j.update(to_json(c));
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      emit(c.law, f, out);
      return;
  }
  check(out);
}

void emit(const BoundSweep& r, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable:
      out << pad("theorem", 9) << pad("model", 30) << pad("transform", 11) << pad("m", 14) << pad("bound", 14)
          << pad("measured", 14) << "truncation\n";
      for (const auto& c : r.certificates) {
        out << pad(to_string(c.theorem), 9) << pad(c.model, 30) << pad(c.transform, 11) << pad(fmt("%.6g", c.m), 14)
            << pad(fmt("%.6g", c.bound), 14) << pad(fmt("%.6g", c.measured_discrepancy), 14)
            << fmt("%.2g", c.truncation_mass) << '\n';
      }
      for (const auto& c : r.certificates) {
        if (!c.diagnostic.empty()) out << "- " << c.model << ": " << c.diagnostic << '\n';
      }
      break;
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("bound-sweep");
      j["certificates"] = ordered_json::array();
      for (const auto& c : r.certificates) j["certificates"].push_back(to_json(c));
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << kSeriesHeader;
      for (const auto& c : r.certificates) law_rows(out, c.model, c.transform, c.law);
      break;
  }
  check(out);
}

void emit(const std::vector<PDeltaCurve>& r, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable:
      for (const auto& c : r) {
        out << c.family << (c.family == "uniform" ? " k = " : " lambda = ") << num(c.parameter) << '\n';
        out << "  " << pad("delta", 8) << pad("lower", 16) << pad("P_delta", 16) << "upper\n";
        for (std::size_t i = 0; i < c.deltas.size(); ++i) {
          out << "  " << pad(fmt("%.2f", c.deltas[i]), 8) << pad(fmt("%.10f", c.values[i].lower), 16)
              << pad(fmt("%.10f", c.values[i].p), 16) << fmt("%.10f", c.values[i].upper) << '\n';
        }
      }
      break;
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("pdelta");
      j["curves"] = ordered_json::array();
      for (const auto& c : r) {
        ordered_json jc = {{"family", c.family}, {"parameter", c.parameter}, {"points", ordered_json::array()}};
        for (std::size_t i = 0; i < c.deltas.size(); ++i) jc["points"].push_back(to_json(c.values[i], c.deltas[i]));
        j["curves"].push_back(std::move(jc));
      }
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << kSeriesHeader;
      for (const auto& c : r) {
        for (std::size_t i = 0; i < c.deltas.size(); ++i) {
          out << c.family << '(' << num(c.parameter) << "),pisquare," << num(c.deltas[i]) << ','
              << num(c.values[i].p) << '\n';
        }
      }
      break;
  }
  check(out);
}

void emit(const AnalyzeReport& r, OutputFormat f, std::ostream& out) {
  const Dataset& d = r.dataset;
  switch (f) {
    case OutputFormat::TextTable: {
      out << "dataset " << d.name << (d.header.empty() ? "" : " [" + d.header + "]") << ": N = " << d.values.size()
          << " of " << d.raw_rows << " rows (dropped " << d.dropped_zero << " zero, " << d.dropped_negative
          << " negative, " << d.dropped_non_numeric << " non-numeric)\n\n";
      out << pad("transform", 12) << pad("N", 8) << pad("z (p)", 18) << "verdict\n";
      for (const auto& c : r.columns) {
        out << pad(c.transform, 12) << pad(std::to_string(c.ks.n), 8) << pad(format_cell(c.ks), 18)
            << (c.ks.reject ? "reject" : "not rejected") << " at " << num(c.ks.alpha);
        if (c.out_of_domain > 0) out << " (" << c.out_of_domain << " values outside the domain)";
        out << '\n';
      }
      out << "\nfirst digit, base " << r.digits.base << '\n';
      out << pad("digit", 8) << pad("count", 10) << pad("observed", 12) << "benford\n";
      for (std::size_t i = 0; i < r.digits.counts.size(); ++i) {
        const double obs = static_cast<double>(r.digits.counts[i]) / static_cast<double>(r.digits.n);
        out << pad(std::to_string(i + 1), 8) << pad(std::to_string(r.digits.counts[i]), 10)
            << pad(fmt("%.4f", obs), 12) << fmt("%.4f", r.digits.expected[i]) << '\n';
      }
      if (r.digits.has_chi_square) {
        out << "chi-square " << fmt("%.4f", r.digits.chi_square) << " on " << r.digits.degrees_of_freedom
            << " degrees of freedom\n";
      } else {
        out << "chi-square not reported: N < " << 5 * (r.digits.base - 1) << '\n';
      }
      break;
    }
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("analyze");
      j["dataset"] = {{"name", d.name},
                      {"source", d.source.string()},
                      {"column", d.header},
                      {"delimiter", std::string(1, d.delimiter)},
                      {"n", d.values.size()},
                      {"raw_rows", d.raw_rows},
                      {"dropped", {{"zero", d.dropped_zero}, {"negative", d.dropped_negative},
                                   {"non_numeric", d.dropped_non_numeric}}}};
      j["tests"] = ordered_json::array();
      for (const auto& c : r.columns) {
        j["tests"].push_back({{"transform", c.transform}, {"out_of_domain", c.out_of_domain}, {"ks", to_json(c.ks)}});
      }
      j["digits"] = {{"base", r.digits.base},
                     {"n", r.digits.n},
                     {"counts", r.digits.counts},
                     {"expected", r.digits.expected},
                     {"chi_square", r.digits.has_chi_square ? ordered_json(r.digits.chi_square) : ordered_json()},
                     {"degrees_of_freedom", r.digits.degrees_of_freedom}};
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << kSeriesHeader;
      for (const auto& c : r.columns) ecdf_rows(out, d.name, c.transform, c.values);
      break;
  }
  check(out);
}

void emit(const Mod1Law& law, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::TextTable:
      out << pad("z", 14) << "P({Y} < z)\n";
      for (std::size_t i = 0; i < law.z.size(); ++i) out << pad(num(law.z[i]), 14) << num(law.values[i]) << '\n';
      out << "truncation mass " << num(law.truncation_mass) << '\n';
      break;
    case OutputFormat::StructuredRecord: {
      ordered_json j = header("mod1-law");
      j["z"] = law.z;
      j["values"] = law.values;
      j["truncation"] = {{"mass", law.truncation_mass}, {"index_lo", law.index_lo}, {"index_hi", law.index_hi}};
      write_json(j, out);
      break;
    }
    case OutputFormat::PlotPoints:
      out << "z,value\n";
      for (std::size_t i = 0; i < law.z.size(); ++i) out << num(law.z[i]) << ',' << num(law.values[i]) << '\n';
      break;
  }
  check(out);
}

template <typename Report>
void emit_to_file(const Report& r, OutputFormat f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  emit(r, f, out);
}

template void emit_to_file(const Table1Report&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const Table3Report&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const BoundSweep&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const BoundCertificate&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const std::vector<PDeltaCurve>&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const AnalyzeReport&, OutputFormat, const std::filesystem::path&);
template void emit_to_file(const Mod1Law&, OutputFormat, const std::filesystem::path&);

}  // namespace ubenford
