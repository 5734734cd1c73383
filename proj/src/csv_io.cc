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

#include "peakaware/csv_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "peakaware/error.h"

namespace peakaware {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

// Reads exactly `width` digits.
bool ReadDigits(std::string_view text, std::size_t pos, std::size_t width,
                int* out) {
  if (pos + width > text.size()) return false;
  const char* begin = text.data() + pos;
  const char* end = begin + width;
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end &&
         std::all_of(begin, end, [](char c) { return c >= '0' && c <= '9'; });
}

std::string Where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

}  // namespace

Timestamp ParseTimestamp(std::string_view text) {
  using namespace std::chrono;
  text = Trim(text);
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  const bool shape_ok =
      (text.size() == 16 || text.size() == 19) && ReadDigits(text, 0, 4, &y) &&
      text[4] == '-' && ReadDigits(text, 5, 2, &mo) && text[7] == '-' &&
      ReadDigits(text, 8, 2, &d) && (text[10] == 'T' || text[10] == ' ') &&
      ReadDigits(text, 11, 2, &h) && text[13] == ':' &&
      ReadDigits(text, 14, 2, &mi) &&
      (text.size() == 16 || (text[16] == ':' && ReadDigits(text, 17, 2, &s)));
  if (!shape_ok) {
    throw ParseError("malformed timestamp '" + std::string(text) + "'");
  }
  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)},
                            day{static_cast<unsigned>(d)}};
  if (!date.ok() || h > 23 || mi > 59 || s > 59) {
    throw ParseError("invalid timestamp '" + std::string(text) + "'");
  }
  return sys_days{date} + hours{h} + minutes{mi} + seconds{s};
}

std::string FormatTimestamp(Timestamp timestamp) {
  using namespace std::chrono;
  const auto day_start = floor<days>(timestamp);
  const year_month_day date{day_start};
  const hh_mm_ss time{timestamp - day_start};
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02uT%02d:%02d",
                static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()),
                static_cast<int>(time.hours().count()),
                static_cast<int>(time.minutes().count()));
  std::string result = buffer;
  if (time.seconds().count() != 0) {
    std::snprintf(buffer, sizeof(buffer), ":%02d",
                  static_cast<int>(time.seconds().count()));
    result += buffer;
  }
  return result;
}

Series ReadSeries(std::istream& in, std::string_view source, SeriesKind kind) {
  Series series;
  std::unordered_set<Timestamp::rep> seen;
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view row = Trim(raw);
    if (row.empty()) continue;
    if (!header_seen) {
      // The header names the columns; any first non-blank row whose value
      // column is not numeric counts as one.
      header_seen = true;
      const auto comma = row.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError(Where(source, line) + "expected header 'timestamp,value'");
      }
      double ignored = 0.0;
      const std::string_view value = Trim(row.substr(comma + 1));
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), ignored);
      if (ec != std::errc() || ptr != value.data() + value.size()) continue;
      throw ParseError(Where(source, line) + "missing header row");
    }

    const auto comma = row.find(',');
    if (comma == std::string_view::npos ||
        row.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(Where(source, line) + "expected two columns");
    }
    Timestamp timestamp;
    try {
      timestamp = ParseTimestamp(row.substr(0, comma));
    } catch (const ParseError& e) {
      throw ParseError(Where(source, line) + e.what());
    }
    const std::string_view text = Trim(row.substr(comma + 1));
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
      throw ParseError(Where(source, line) + "unparseable value '" +
                       std::string(text) + "'");
    }
    if (kind == SeriesKind::kPrice && !(value > 0.0)) {
      throw ValidationError(Where(source, line) + "price must be positive");
    }
    if (kind == SeriesKind::kDemand && value < 0.0) {
      throw ValidationError(Where(source, line) + "demand must be non-negative");
    }
    if (!seen.insert(timestamp.time_since_epoch().count()).second) {
      throw ParseError(Where(source, line) + "duplicate timestamp " +
                       FormatTimestamp(timestamp));
    }
    series.timestamps.push_back(timestamp);
    series.values.push_back(value);
  }
  return series;
}

Series ReadSeriesFile(const std::string& path, SeriesKind kind) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return ReadSeries(in, path, kind);
}

AlignedTrace AlignSeries(const Series& prices, const Series& demands) {
  std::map<Timestamp, double> demand_at;
  for (std::size_t i = 0; i < demands.timestamps.size(); ++i) {
    demand_at.emplace(demands.timestamps[i], demands.values[i]);
  }
  std::map<Timestamp, std::pair<double, double>> joined;
  for (std::size_t i = 0; i < prices.timestamps.size(); ++i) {
    const auto it = demand_at.find(prices.timestamps[i]);
    if (it != demand_at.end()) {
      joined.emplace(prices.timestamps[i],
                     std::make_pair(prices.values[i], it->second));
    }
  }
  if (joined.empty()) {
    throw ValidationError("price and demand series share no timestamps");
  }
  std::vector<Timestamp> timestamps;
  std::vector<double> price_values;
  std::vector<double> demand_values;
  for (const auto& [timestamp, pair] : joined) {
    timestamps.push_back(timestamp);
    price_values.push_back(pair.first);
    demand_values.push_back(pair.second);
  }
  return {Trace(std::move(price_values), std::move(demand_values)),
          std::move(timestamps), prices.timestamps.size() - joined.size(),
          demands.timestamps.size() - joined.size()};
}

AlignedTrace ParseTraceCsv(const std::string& price_path,
                           const std::string& demand_path) {
  return AlignSeries(ReadSeriesFile(price_path, SeriesKind::kPrice),
                     ReadSeriesFile(demand_path, SeriesKind::kDemand));
}

void WriteSeries(std::ostream& out, const std::vector<Timestamp>& timestamps,
                 std::span<const double> values) {
  if (timestamps.size() != values.size()) {
    throw StructuralError("timestamp and value counts differ");
  }
  out << "timestamp,value\n";
  char buffer[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Shortest text that reads back to the same double.
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), values[i]);
    out << FormatTimestamp(timestamps[i]) << ','
        << std::string_view(buffer, result.ptr - buffer) << '\n';
  }
}

}  // namespace peakaware
