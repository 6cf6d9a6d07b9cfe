// Copyright 2026 The tspbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tspbound/tsplib_io.hpp"

#include <cmath>

#include <gtest/gtest.h>
#include <json.hpp>

#include "test_support.hpp"
#include "tspbound/error.hpp"
#include "tspbound/exact_oracle.hpp"
#include "tspbound/generators.hpp"
#include "tspbound/heuristics.hpp"

namespace tspbound {
namespace {

using testing::d4;

constexpr const char* kTriangle = R"(NAME: tri
TYPE: TSP
COMMENT: 3-4-5
DIMENSION: 3
EDGE_WEIGHT_TYPE: EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 0
3 0 4
EOF
)";

constexpr const char* kD4 = R"(NAME : D4
TYPE : TSP
DIMENSION : 4
EDGE_WEIGHT_TYPE : EXPLICIT
EDGE_WEIGHT_FORMAT : FULL_MATRIX
EDGE_WEIGHT_SECTION
 0  1  2 10
 1  0  1  2
 2  1  0  1
10  2  1  0
EOF
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

TEST(ParseTsplib, Euc2dTriangle) {
  const Instance inst = parse_tsplib(kTriangle);
  EXPECT_EQ(inst.name(), "tri");
  EXPECT_EQ(inst.weight(0, 1), 3);
  EXPECT_EQ(inst.weight(0, 2), 4);
  EXPECT_EQ(inst.weight(1, 2), 5);
}

TEST(ParseTsplib, FullMatrixEqualsConstructedInstance) {
  EXPECT_EQ(parse_tsplib(kD4), d4());
}

TEST(ParseTsplib, UnsupportedTypeIsNamed) {
  try {
    parse_tsplib(replace(kTriangle, "EUC_2D", "GEO"));
    FAIL() << "GEO accepted";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("GEO"), std::string::npos);
  }
}

TEST(ParseTsplib, Rejections) {
  EXPECT_THROW(parse_tsplib(replace(kTriangle, "COMMENT", "CAPACITY")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, "10  2  1  0", " 9  2  1  0")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, "DIMENSION : 4", "DIMENSION : 5")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, "DIMENSION : 4", "DIMENSION : 3")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, "FULL_MATRIX", "LOWER_ROW")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kTriangle, "TYPE: TSP", "TYPE: ATSP")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kTriangle, "3 0 4\n", "")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kTriangle, "2 3 0", "1 3 0")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, " 1  0  1  2", " 1  0  x  2")), DataError);
  EXPECT_THROW(parse_tsplib(replace(kD4, "DIMENSION : 4", "DIMENSION : 2")), DataError);
}

TEST(EmitTsplib, FormatAndRoundTrip) {
  const std::string text = emit_tsplib(d4());
  EXPECT_NE(text.find("DIMENSION: 4\n"), std::string::npos);
  EXPECT_NE(text.find("EDGE_WEIGHT_SECTION\n0 1 2 10\n1 0 1 2\n2 1 0 1\n10 2 1 0\nEOF\n"),
            std::string::npos);
  EXPECT_EQ(parse_tsplib(text), d4());
}

TEST(EmitTsplib, SeededRoundTrips) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 15;
    const Instance inst =
        seed % 2 ? gen_random_metric(n, seed) : gen_random_euclidean(n, seed);
    const Instance back = parse_tsplib(emit_tsplib(inst));
    ASSERT_EQ(back, inst) << inst.name();
    EXPECT_EQ(emit_tsplib(back), emit_tsplib(inst));
  }
}

// Exact nint(sqrt(s)) for integer s: with r = isqrt(s), round up iff s > r^2 + r.
Weight exact_nint_sqrt(std::int64_t s) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(s)));
  while (r * r > s) --r;
  while ((r + 1) * (r + 1) <= s) ++r;
  return s > r * r + r ? r + 1 : r;
}

TEST(EmitTsplib, Euc2dWeightsMatchExactRounding) {
  const Instance inst = gen_random_euclidean(60, 5);
  const auto& pts = inst.points();
  for (Vertex a = 0; a < inst.n(); ++a) {
    for (Vertex b = a + 1; b < inst.n(); ++b) {
      const auto dx = static_cast<std::int64_t>(pts[a].x - pts[b].x);
      const auto dy = static_cast<std::int64_t>(pts[a].y - pts[b].y);
      ASSERT_EQ(inst.weight(a, b), exact_nint_sqrt(dx * dx + dy * dy));
    }
  }
}

TEST(TraceJson, RoundTrip) {
  const Trace t = nearest_neighbor(d4());
  const std::string text = trace_to_json(t);
  EXPECT_EQ(trace_from_json(text), t);
  EXPECT_NE(text.find("\"final_weight\": 13"), std::string::npos);
  EXPECT_EQ(text.find("beta_used"), std::string::npos);
}

TEST(TraceJson, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = gen_random_metric(3 + seed % 10, seed);
    for (Heuristic h : {Heuristic::nearest_neighbor, Heuristic::cheapest_insertion,
                        Heuristic::greedy_edge}) {
      const Trace t = construct(inst, h);
      ASSERT_EQ(trace_from_json(trace_to_json(t)), t);
    }
  }
}

std::string error_of(const std::string& text) {
  try {
    trace_from_json(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

TEST(TraceJson, SchemaErrorsNameTheField) {
  const std::string good = trace_to_json(nearest_neighbor(d4()));
  nlohmann::json doc = nlohmann::json::parse(good);
  doc["steps"][2].erase("w_after");
  EXPECT_EQ(error_of(doc.dump()).rfind("steps[2].w_after", 0), 0u);

  doc = nlohmann::json::parse(good);
  doc["steps"][1]["m"] = 0;
  const std::string m_err = error_of(doc.dump());
  EXPECT_EQ(m_err.rfind("steps[1].m", 0), 0u);
  EXPECT_NE(m_err.find("m >= 1"), std::string::npos);

  doc = nlohmann::json::parse(good);
  doc.erase("final_weight");
  EXPECT_EQ(error_of(doc.dump()), "final_weight: missing");

  doc = nlohmann::json::parse(good);
  doc["final_arcs"][0] = {2, 2};
  EXPECT_EQ(error_of(doc.dump()).rfind("final_arcs[0]", 0), 0u);

  EXPECT_NE(error_of("{not json").find("malformed"), std::string::npos);
}

TEST(ReportJson, Fields) {
  const Instance inst = d4();
  const auto r = build_report(nearest_neighbor(inst), held_karp_opt(inst));
  const auto doc = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(doc["final"], 13);
  EXPECT_EQ(doc["avarc_violations"], nlohmann::json::array({3}));
  EXPECT_EQ(doc["pr_holds"], true);
  EXPECT_DOUBLE_EQ(doc["ratio"].get<double>(), r.ratio);
}

}  // namespace
}  // namespace tspbound
