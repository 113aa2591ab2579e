// Copyright 2026 The srbench Authors
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

#include <cmath>
#include <random>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "srbench/bench/report.h"
#include "srbench/error.h"

namespace srbench::bench {
namespace {

using metrics::MetricResult;
using metrics::MetricStatus;

BenchRecord rec(std::string model, std::string image, double psnr, double ssim,
                std::string dataset = "Set5", int scale = 4) {
  BenchRecord r;
  r.model = std::move(model);
  r.dataset = std::move(dataset);
  r.scale = scale;
  r.image = std::move(image);
  r.shave = scale;
  r.metrics = {{"psnr", psnr, MetricStatus::kOk}, {"ssim", ssim, MetricStatus::kOk}};
  r.fingerprint = "fp0";
  return r;
}

TEST(Report, MarkdownFormattingAndOrder) {
  std::vector<BenchRecord> recs = {rec("B", "a", 27.85, 0.81234), rec("B", "b", 27.85, 0.81234),
                                   rec("A", "a", 27.575, 0.7), rec("A", "b", 27.585, 0.7)};
  recs[0].reported = {{"psnr", 28.0}};
  const std::string md = emit_table(recs, TableFormat::kMarkdown);
  EXPECT_NE(md.find("## Set5 x4"), std::string::npos) << md;
  EXPECT_NE(md.find("Criteria fingerprint: fp0"), std::string::npos);
  EXPECT_NE(md.find("| Model | Reported PSNR (dB) | PSNR (dB) | SSIM |"), std::string::npos) << md;
  EXPECT_NE(md.find("| A | N/A | 27.58 | 0.7000 |"), std::string::npos) << md;
  EXPECT_NE(md.find("| B | 28.00 | 27.85 | 0.8123 |"), std::string::npos) << md;
  EXPECT_LT(md.find("| A |"), md.find("| B |"));
}

TEST(Report, TiesBreakByNameAndEnsembleIsMarked) {
  std::vector<BenchRecord> recs = {rec("zeta", "a", 30.0, 0.9), rec("alpha", "a", 30.0, 0.9)};
  recs[0].self_ensemble = true;
  const TableReport t = aggregate(recs);
  ASSERT_EQ(t.groups.size(), 1u);
  EXPECT_EQ(t.groups[0].rows[0].model, "alpha");
  EXPECT_NE(emit_table(t, TableFormat::kMarkdown).find("| zeta+ |"), std::string::npos);
}

TEST(Report, MeansMatchNaiveMean) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> psnr(20.0, 40.0);
  std::vector<BenchRecord> recs;
  double sum = 0.0;
  for (int i = 0; i < 100; ++i) {
    recs.push_back(rec("m", "img" + std::to_string(i), psnr(rng), 0.5));
    sum += recs.back().metrics[0].value;
  }
  const TableReport t = aggregate(recs);
  EXPECT_NEAR(t.groups[0].rows[0].metric("psnr")->mean, sum / 100.0, 1e-12);
  EXPECT_EQ(t.groups[0].rows[0].metric("psnr")->ok_count, 100);
}

TEST(Report, InfiniteAndUndefinedHandling) {
  std::vector<BenchRecord> recs = {rec("id", "a", 0, 1), rec("id", "b", 0, 1), rec("mix", "a", 30, 1),
                                   rec("mix", "b", 0, 1)};
  for (int i : {0, 1, 3}) recs[i].metrics[0] = {"psnr", INFINITY, MetricStatus::kInfinite};
  recs[2].metrics[1] = {"ssim", NAN, MetricStatus::kUndefined};
  const TableReport t = aggregate(recs);
  const auto& rows = t.groups[0].rows;
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].model, "mix");  // finite means sort before infinite ones
  EXPECT_EQ(rows[0].metric("psnr")->mean, 30.0);
  EXPECT_EQ(rows[0].metric("psnr")->infinite_count, 1);
  EXPECT_EQ(rows[0].metric("ssim")->undefined_count, 1);
  EXPECT_EQ(rows[1].metric("psnr")->status, MetricStatus::kInfinite);
  const std::string md = emit_table(t, TableFormat::kMarkdown);
  EXPECT_NE(md.find("| id | inf | 1.0000 |"), std::string::npos) << md;
}

TEST(Report, ErroredModelsAreListedSeparately) {
  std::vector<BenchRecord> recs = {rec("ok", "a", 30, 0.9), rec("bad", "a", 31, 0.9), rec("bad", "b", 0, 0)};
  recs[2].ok = false;
  recs[2].error = "model 'bad': crashed";
  recs[2].metrics.clear();
  const TableReport t = aggregate(recs);
  ASSERT_EQ(t.groups[0].rows.size(), 1u);
  ASSERT_EQ(t.groups[0].errored.size(), 1u);
  EXPECT_EQ(t.groups[0].errored[0].errored_images, 1);
  const std::string md = emit_table(t, TableFormat::kMarkdown);
  EXPECT_NE(md.find("### Errored models"), std::string::npos);
  EXPECT_NE(md.find("| bad | 1/2 | b: model 'bad': crashed |"), std::string::npos) << md;
  const std::string csv = emit_table(t, TableFormat::kCsv);
  EXPECT_NE(csv.find("Set5,4,bad,false,errored,2,1,N/A,N/A,b: model 'bad': crashed"), std::string::npos) << csv;
}

TEST(Report, GroupsPerDatasetAndScale) {
  std::vector<BenchRecord> recs = {rec("m", "a", 30, 0.9, "Urban100", 4), rec("m", "a", 31, 0.9, "Set5", 4),
                                   rec("m", "a", 35, 0.9, "Set5", 2)};
  recs[2].fingerprint = "fp1";
  const TableReport t = aggregate(recs);
  ASSERT_EQ(t.groups.size(), 3u);
  EXPECT_EQ(t.groups[0].dataset, "Set5");
  EXPECT_EQ(t.groups[0].scale, 2);
  EXPECT_EQ(t.groups[0].fingerprints, std::vector<std::string>{"fp1"});
  EXPECT_EQ(t.groups[2].dataset, "Urban100");
}

TEST(Report, CsvLayout) {
  const std::string csv = emit_table({rec("x,y", "a", 30.123, 0.91)}, TableFormat::kCsv);
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "dataset,scale,model,self_ensemble,status,images,errored_images,psnr,ssim,error");
  EXPECT_EQ(row, "Set5,4,\"x,y\",false,ok,1,0,30.12,0.9100,");
}

TEST(Report, JsonRoundTripKeepsFullPrecision) {
  std::vector<BenchRecord> recs = {rec("a", "1", 30.123456789012345, 0.9), rec("b", "1", INFINITY, 1.0)};
  recs[1].metrics[0].status = MetricStatus::kInfinite;
  recs[0].reported = {{"psnr", 30.1}};
  const TableReport t = aggregate(recs);
  const std::string text = emit_table(t, TableFormat::kJson);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["format"], "srbench.table");
  EXPECT_EQ(parse_table_json(text), t);
  EXPECT_EQ(parse_table_json(text).groups[0].rows[0].metric("psnr")->mean, 30.123456789012345);
  EXPECT_THROW(parse_table_json("{}"), Error);
}

TEST(Report, FormatParsingAndLabels) {
  EXPECT_EQ(parse_table_format("md"), TableFormat::kMarkdown);
  EXPECT_EQ(parse_table_format("csv"), TableFormat::kCsv);
  EXPECT_THROW(parse_table_format("xlsx"), Error);
  EXPECT_EQ(metric_decimals("psnr"), 2);
  EXPECT_EQ(metric_decimals("ssim"), 4);
  EXPECT_EQ(metric_decimals("niqe"), 3);
  EXPECT_EQ(metric_decimals("runtime_gpu"), 3);
  EXPECT_EQ(metric_label("runtime"), "Runtime (s)");
  EXPECT_EQ(metric_label("runtime_gpu"), "Runtime gpu (s)");
  EXPECT_THROW(emit_table(std::vector<BenchRecord>{}, TableFormat::kMarkdown), Error);
}

std::vector<BenchRecord> scatter_records() {
  std::vector<BenchRecord> recs;
  const std::vector<std::tuple<std::string, double, double>> models = {
      {"EDSR", 32.46, 0.25}, {"RCAN", 32.63, 0.4}, {"CARN", 32.13, 0.05}, {"ESRGAN", 30.4, 0.2}};
  for (const auto& [name, psnr, t] : models) {
    BenchRecord r = rec(name, "a", psnr, 0.9);
    r.metrics.push_back({"runtime", t, MetricStatus::kOk});
    recs.push_back(r);
  }
  return recs;
}

TEST(Report, ScatterPointsAndExclusion) {
  const ScatterPlot plot = emit_scatter(scatter_records(), "runtime", "psnr", {"esrgan"});
  ASSERT_EQ(plot.points.size(), 3u);
  EXPECT_EQ(plot.excluded, std::vector<std::string>{"ESRGAN"});
  EXPECT_NE(plot.svg.find("3 models"), std::string::npos);
  EXPECT_NE(plot.svg.find("Excluded:"), std::string::npos);
  EXPECT_NE(plot.svg.find("Runtime (s)"), std::string::npos);
  EXPECT_NE(plot.svg.find("PSNR (dB)"), std::string::npos);
  EXPECT_EQ(plot.svg.find("data-label=\"ESRGAN\""), std::string::npos);
  EXPECT_NE(plot.svg.find("class=\"excluded\""), std::string::npos);
}

TEST(Report, ScatterCsvMatchesSvgCoordinates) {
  const ScatterPlot plot = emit_scatter(scatter_records(), "runtime", "psnr");
  std::istringstream in(plot.csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "label,runtime,psnr");
  int n = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const std::string label = line.substr(0, c1), x = line.substr(c1 + 1, c2 - c1 - 1), y = line.substr(c2 + 1);
    const std::string needle = "data-label=\"" + label + "\" data-x=\"" + x + "\" data-y=\"" + y + "\"";
    EXPECT_NE(plot.svg.find(needle), std::string::npos) << needle;
    ++n;
  }
  EXPECT_EQ(n, 4);
}

TEST(Report, ScatterRejectsAbsentMetric) {
  try {
    emit_scatter(scatter_records(), "lpips", "psnr");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

}  // namespace
}  // namespace srbench::bench
