#include "rnatc/report.hpp"

#include <iomanip>
#include <ostream>

namespace rnatc {
namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_report_csv(std::ostream& out, const AnalysisReport& r) {
  auto row = [&out](const char* name, const std::optional<double>& v) {
    out << name << ',';
    if (v) {
      out << std::setprecision(10) << *v;
    } else {
      out << "nan";
    }
    out << '\n';
  };
  out << "metric,value\n";
  row("entropy", r.entropy);
  row("chi_square", r.chi_square);
  row("glcm_contrast", r.glcm.contrast);
  row("glcm_correlation", r.glcm.correlation);
  row("glcm_energy", r.glcm.energy);
  row("glcm_homogeneity", r.glcm.homogeneity);
  row("correlation_horizontal", r.horizontal);
  row("correlation_vertical", r.vertical);
  row("correlation_diagonal", r.diagonal);
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  return {
      {"entropy", r.entropy},
      {"chi_square", r.chi_square},
      {"histogram", r.histogram},
      {"glcm",
       {{"contrast", r.glcm.contrast},
        {"correlation", optional_number(r.glcm.correlation)},
        {"energy", r.glcm.energy},
        {"homogeneity", r.glcm.homogeneity}}},
      {"adjacency",
       {{"horizontal", optional_number(r.horizontal)},
        {"vertical", optional_number(r.vertical)},
        {"diagonal", optional_number(r.diagonal)}}},
  };
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "value,count\n";
  for (std::size_t v = 0; v < h.size(); ++v) out << v << ',' << h[v] << '\n';
}

}  // namespace rnatc
