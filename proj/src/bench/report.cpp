#include "transit/bench/report.hpp"

#include <cstdio>
#include <fstream>

#include "transit/core/csv.hpp"
#include "transit/core/errors.hpp"

namespace transit {

namespace {

std::string fmt(double v, const char* spec) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string opt_num(const std::optional<double>& v, const char* spec) {
  return v ? fmt(*v, spec) : std::string{};
}

std::string opt_count(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::vector<report_row> combine_reports(const std::vector<accuracy_report>& accuracy,
                                        const std::vector<timing_row>& timing) {
  std::vector<report_row> rows;
  for (const auto& acc : accuracy) {
    report_row row;
    row.engine = acc.engine;
    row.failed_queries = acc.failed_queries;
    row.failed_journeys = acc.failed_journeys;
    row.pct_affected = acc.pct_fq_affected();
    row.pct_all = acc.pct_fq_all();
    for (const auto& t : timing) {
      if (t.engine == acc.engine) {
        row.ms_per_query = t.mean_ms;
        row.speedup = t.speedup_vs_oracle;
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report_csv(const std::vector<report_row>& rows, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << "engine,ms_per_query,speedup,failed_queries,failed_journeys,pct_affected,pct_all\n";
  for (const auto& r : rows) {
    out << r.engine << ',' << opt_num(r.ms_per_query, "%.4f") << ','
        << opt_num(r.speedup, "%.2f") << ',' << opt_count(r.failed_queries) << ','
        << opt_count(r.failed_journeys) << ',' << opt_num(r.pct_affected, "%.2f") << ','
        << opt_num(r.pct_all, "%.2f") << '\n';
  }
}

std::vector<report_row> read_report_csv(const std::filesystem::path& file) {
  csv_reader csv(file, {"engine", "ms_per_query", "speedup", "failed_queries",
                        "failed_journeys", "pct_affected", "pct_all"});
  std::vector<report_row> rows;
  std::vector<std::string> f;
  while (csv.next(f)) {
    report_row r;
    r.engine = f[0];
    if (!f[1].empty()) r.ms_per_query = std::stod(f[1]);
    if (!f[2].empty()) r.speedup = std::stod(f[2]);
    if (!f[3].empty()) r.failed_queries = static_cast<std::size_t>(std::stoull(f[3]));
    if (!f[4].empty()) r.failed_journeys = static_cast<std::size_t>(std::stoull(f[4]));
    if (!f[5].empty()) r.pct_affected = std::stod(f[5]);
    if (!f[6].empty()) r.pct_all = std::stod(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_report_md(const std::vector<report_row>& rows, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << "| engine | ms/q | speedup | F.Q | F.J | % affected | % all |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.engine << " | " << opt_num(r.ms_per_query, "%.4f") << " | "
        << opt_num(r.speedup, "%.2f") << " | " << opt_count(r.failed_queries) << " | "
        << opt_count(r.failed_journeys) << " | " << opt_num(r.pct_affected, "%.2f")
        << " | " << opt_num(r.pct_all, "%.2f") << " |\n";
  }
}

void write_accuracy_csv(const std::vector<accuracy_report>& reports,
                        const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << "engine,failed_queries,failed_journeys,affected_total,all_total,"
         "journeys_affected_total,journeys_all_total,"
         "pct_fq_affected,pct_fq_all,pct_fj_affected,pct_fj_all\n";
  for (const auto& r : reports) {
    out << r.engine << ',' << r.failed_queries << ',' << opt_count(r.failed_journeys) << ','
        << r.affected_total << ',' << r.all_total << ',' << r.journeys_affected_total << ','
        << r.journeys_all_total << ',' << format_percent(r.pct_fq_affected()) << ','
        << format_percent(r.pct_fq_all()) << ','
        << (r.pct_fj_affected() ? format_percent(*r.pct_fj_affected()) : std::string{}) << ','
        << (r.pct_fj_all() ? format_percent(*r.pct_fj_all()) : std::string{}) << '\n';
  }
}

void write_timing_csv(const std::vector<timing_row>& rows, const std::filesystem::path& file,
                      double update_seconds, double prepare_seconds) {
  std::ofstream out(file);
  if (!out) {
    throw io_error("cannot write " + file.string());
  }
  out << "engine,mean_ms,median_of_means_ms,speedup_vs_oracle,queries,repetitions\n";
  for (const auto& r : rows) {
    out << r.engine << ',' << fmt(r.mean_ms, "%.4f") << ','
        << fmt(r.median_of_means_ms, "%.4f") << ',' << fmt(r.speedup_vs_oracle, "%.2f")
        << ',' << r.queries << ',' << r.repetitions << '\n';
  }
  out << "update," << fmt(update_seconds * 1000.0, "%.4f") << ",,,,\n";
  out << "prepare," << fmt(prepare_seconds * 1000.0, "%.4f") << ",,,,\n";
}

}  // namespace transit
