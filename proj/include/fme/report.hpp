#pragma once

#include "fme/evaluation.hpp"
#include "fme/schedule.hpp"

#include <json.hpp>

#include <ostream>

namespace fme
{

nlohmann::ordered_json to_json( const Rational& r );
nlohmann::ordered_json to_json( const CuRecord& rec, int frame );
nlohmann::ordered_json to_json( const ScheduleReport& report, int frame );
nlohmann::ordered_json to_json( const EvaluationSummary& summary );

/// One row per CU; drops the report-level fields.
void write_csv( std::ostream& os, const ScheduleReport& report, int frame );

/// Fixed six-decimal rounding so float metrics serialize identically everywhere.
double fixed6( double v );

}  // namespace fme
