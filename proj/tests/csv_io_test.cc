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

#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "peakaware/error.h"

namespace peakaware {
namespace {

Series Read(const std::string& text, SeriesKind kind = SeriesKind::kPrice) {
  std::istringstream in(text);
  return ReadSeries(in, "prices.csv", kind);
}

// Runs fn and returns the message of the peakaware::Error it throws.
template <typename Fn>
std::string ErrorMessage(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(TimestampTest, RoundTrip) {
  const Timestamp t = ParseTimestamp("2018-04-01T00:00");
  EXPECT_EQ(FormatTimestamp(t), "2018-04-01T00:00");
  EXPECT_EQ(ParseTimestamp("2018-04-01 13:30:15"),
            ParseTimestamp("2018-04-01T13:30:15"));
  EXPECT_EQ(ParseTimestamp("2018-04-02T00:00") - t, std::chrono::hours(24));
  EXPECT_THROW(ParseTimestamp("2018-13-01T00:00"), ParseError);
  EXPECT_THROW(ParseTimestamp("yesterday"), ParseError);
}

TEST(ReadSeriesTest, ParsesRows) {
  const Series series = Read("timestamp,value\n2018-04-01T00:00,23.5\n"
                             "2018-04-01T01:00,20\n");
  ASSERT_EQ(series.values.size(), 2u);
  EXPECT_EQ(series.values[0], 23.5);
  EXPECT_EQ(series.timestamps[1] - series.timestamps[0], std::chrono::hours(1));
}

TEST(ReadSeriesTest, ErrorsNameTheLine) {
  EXPECT_NE(ErrorMessage([] { Read("2018-04-01T00:00,1\n"); })
                .find("prices.csv:1: missing header row"),
            std::string::npos);
  EXPECT_NE(ErrorMessage([] {
              Read("timestamp,value\n2018-04-01T00:00,abc\n");
            }).find("prices.csv:2:"),
            std::string::npos);
  const std::string negative = ErrorMessage([] {
    Read("timestamp,value\n2018-04-01T00:00,1\n2018-04-01T01:00,-1\n",
         SeriesKind::kDemand);
  });
  EXPECT_NE(negative.find("prices.csv:3:"), std::string::npos) << negative;
  EXPECT_THROW(Read("timestamp,value\n2018-04-01T00:00,-1\n",
                    SeriesKind::kDemand),
               ValidationError);
  EXPECT_THROW(Read("timestamp,value\n2018-04-01T00:00,0\n"), ValidationError);
  EXPECT_THROW(Read("timestamp,value\n2018-04-01T00:00,1\n"
                    "2018-04-01T00:00,2\n"),
               ParseError);
  EXPECT_THROW(Read("timestamp,value\n2018-04-01T00:00\n"), ParseError);
}

TEST(AlignSeriesTest, IntersectionSortedAscending) {
  const Series prices = Read("timestamp,value\n2018-04-01T02:00,3\n"
                             "2018-04-01T00:00,1\n2018-04-01T01:00,2\n");
  const Series demands =
      Read("timestamp,value\n2018-04-01T01:00,5\n2018-04-01T02:00,6\n"
           "2018-04-01T03:00,7\n",
           SeriesKind::kDemand);
  const AlignedTrace aligned = AlignSeries(prices, demands);
  ASSERT_EQ(aligned.trace.size(), 2u);
  EXPECT_EQ(aligned.trace.price(0), 2.0);
  EXPECT_EQ(aligned.trace.demand(1), 6.0);
  EXPECT_EQ(aligned.dropped_price_rows, 1u);
  EXPECT_EQ(aligned.dropped_demand_rows, 1u);
  EXPECT_LT(aligned.timestamps[0], aligned.timestamps[1]);
}

TEST(AlignSeriesTest, SingleCommonHourAndEmptyIntersection) {
  const Series prices =
      Read("timestamp,value\n2018-04-01T00:00,1\n2018-04-01T01:00,2\n");
  const Series one = Read("timestamp,value\n2018-04-01T01:00,4\n",
                          SeriesKind::kDemand);
  EXPECT_EQ(AlignSeries(prices, one).trace.size(), 1u);
  const Series none = Read("timestamp,value\n2018-05-01T01:00,4\n",
                           SeriesKind::kDemand);
  EXPECT_THROW(AlignSeries(prices, none), ValidationError);
}

TEST(WriteSeriesTest, RoundTrips) {
  const Series series = Read("timestamp,value\n2018-04-01T00:00,23.5\n"
                             "2018-04-01T01:00,0.1\n");
  std::ostringstream out;
  WriteSeries(out, series.timestamps, series.values);
  EXPECT_EQ(out.str(),
            "timestamp,value\n2018-04-01T00:00,23.5\n"
            "2018-04-01T01:00,0.1\n");
  const Series again = Read(out.str());
  EXPECT_EQ(again.values, series.values);
  EXPECT_EQ(again.timestamps, series.timestamps);
}

}  // namespace
}  // namespace peakaware
