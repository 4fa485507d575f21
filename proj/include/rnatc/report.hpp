#pragma once

#include <iosfwd>

#include "json.hpp"
#include "rnatc/analysis.hpp"

namespace rnatc {

/// "metric,value" rows; undefined correlations are written as "nan".
void write_report_csv(std::ostream& out, const AnalysisReport& report);

/// Undefined correlations are null.
nlohmann::json report_to_json(const AnalysisReport& report);

/// "value,count" header plus 256 rows.
void write_histogram_csv(std::ostream& out, const Histogram& h);

}  // namespace rnatc
