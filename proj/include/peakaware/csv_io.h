/*
Copyright 2026 The peakaware Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Reading and writing `timestamp,value` series, e.g. hourly spot prices and
// metered demand.

#ifndef PEAKAWARE_CSV_IO_H_
#define PEAKAWARE_CSV_IO_H_

#include <chrono>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "peakaware/trace.h"

namespace peakaware {

using Timestamp = std::chrono::sys_seconds;

// Accepts YYYY-MM-DDTHH:MM[:SS] with 'T' or a space between date and time.
// Throws ParseError (without location; callers add it).
Timestamp ParseTimestamp(std::string_view text);
// YYYY-MM-DDTHH:MM, plus :SS when the seconds are non-zero.
std::string FormatTimestamp(Timestamp timestamp);

enum class SeriesKind { kPrice, kDemand };

struct Series {
  std::vector<Timestamp> timestamps;  // as read, not sorted
  std::vector<double> values;
};

// Parses a `timestamp,value` CSV with a header row. Blank lines are skipped.
// Errors name `source` and the 1-based line: ParseError for malformed rows
// and duplicate timestamps, ValidationError for a non-positive price or a
// negative demand.
Series ReadSeries(std::istream& in, std::string_view source, SeriesKind kind);
Series ReadSeriesFile(const std::string& path, SeriesKind kind);

struct AlignedTrace {
  Trace trace;
  std::vector<Timestamp> timestamps;  // ascending
  std::size_t dropped_price_rows = 0;
  std::size_t dropped_demand_rows = 0;
};

// Keeps the timestamps present in both series, ascending. Throws
// ValidationError when they share none.
AlignedTrace AlignSeries(const Series& prices, const Series& demands);

AlignedTrace ParseTraceCsv(const std::string& price_path,
                           const std::string& demand_path);

void WriteSeries(std::ostream& out, const std::vector<Timestamp>& timestamps,
                 std::span<const double> values);

}  // namespace peakaware

#endif  // PEAKAWARE_CSV_IO_H_
