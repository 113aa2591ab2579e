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

#include "srbench/bench/report.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "srbench/error.h"

namespace srbench::bench {

using metrics::MetricStatus;
using nlohmann::ordered_json;

std::string_view to_string(TableFormat format) {
  switch (format) {
    case TableFormat::kMarkdown: return "markdown";
    case TableFormat::kCsv: return "csv";
    case TableFormat::kJson: return "json";
  }
  return "markdown";
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "markdown" || text == "md") return TableFormat::kMarkdown;
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown table format '{}' (expected markdown, csv or json)", text));
}

const MetricAggregate* ModelAggregate::metric(std::string_view id) const {
  for (const auto& m : metrics) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

int metric_decimals(std::string_view id) {
  if (id == "psnr") return 2;
  if (id == "ssim") return 4;
  if (id == "niqe") return 3;
  if (id.starts_with("runtime")) return 3;
  return 4;
}

std::string metric_label(std::string_view id) {
  if (id == "psnr") return "PSNR (dB)";
  if (id == "ssim") return "SSIM";
  if (id == "niqe") return "NIQE";
  if (id == "runtime") return "Runtime (s)";
  if (id.starts_with("runtime_")) return fmt::format("Runtime {} (s)", id.substr(8));
  return std::string(id);
}

namespace {

struct Accumulator {
  double sum = 0.0;
  int ok = 0;
  int inf = 0;
  int undef = 0;
};

MetricAggregate finish(const std::string& id, const Accumulator& acc) {
  MetricAggregate m;
  m.id = id;
  m.ok_count = acc.ok;
  m.infinite_count = acc.inf;
  m.undefined_count = acc.undef;
  if (acc.ok > 0) {
    m.mean = acc.sum / acc.ok;
    m.status = MetricStatus::kOk;
  } else if (acc.inf > 0) {
    m.mean = std::numeric_limits<double>::infinity();
    m.status = MetricStatus::kInfinite;
  }
  return m;
}

// Sort key for the PSNR ordering: Ok values by value, then Infinite, then
// models without a usable PSNR.
std::tuple<int, double> psnr_key(const ModelAggregate& a) {
  const auto* m = a.metric("psnr");
  if (m == nullptr || m->status == MetricStatus::kUndefined) return {2, 0.0};
  if (m->status == MetricStatus::kInfinite) return {1, 0.0};
  return {0, m->mean};
}

std::string format_value(const MetricAggregate& m) {
  switch (m.status) {
    case MetricStatus::kOk: return fmt::format("{:.{}f}", m.mean, metric_decimals(m.id));
    case MetricStatus::kInfinite: return "inf";
    case MetricStatus::kUndefined: return "N/A";
  }
  return "N/A";
}

std::string format_reported(const ModelAggregate& row, const std::string& id) {
  auto it = row.reported.find(id);
  if (it == row.reported.end()) return "N/A";
  return fmt::format("{:.{}f}", it->second, metric_decimals(id));
}

std::string measured_cell(const ModelAggregate& row, const std::string& id) {
  const auto* m = row.metric(id);
  return m == nullptr ? "N/A" : format_value(*m);
}

std::string md_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string emit_markdown(const TableReport& report) {
  std::string out;
  for (std::size_t g = 0; g < report.groups.size(); ++g) {
    const auto& group = report.groups[g];
    if (g > 0) out += '\n';
    out += fmt::format("## {} x{}\n\n", group.dataset, group.scale);
    out += fmt::format("Criteria fingerprint: {}\n\n", fmt::join(group.fingerprints, ", "));
    if (!group.rows.empty()) {
      std::string header = "| Model |";
      std::string rule = "|:---|";
      for (const auto& id : group.reported_ids) {
        header += fmt::format(" Reported {} |", metric_label(id));
        rule += "---:|";
      }
      for (const auto& id : group.metric_ids) {
        header += fmt::format(" {} |", metric_label(id));
        rule += "---:|";
      }
      out += header + '\n' + rule + '\n';
      for (const auto& row : group.rows) {
        std::string line = fmt::format("| {}{} |", md_escape(row.model), row.self_ensemble ? "+" : "");
        for (const auto& id : group.reported_ids) line += fmt::format(" {} |", format_reported(row, id));
        for (const auto& id : group.metric_ids) line += fmt::format(" {} |", measured_cell(row, id));
        out += line + '\n';
      }
    }
    if (!group.errored.empty()) {
      if (!group.rows.empty()) out += '\n';
      out += "### Errored models\n\n| Model | Failed images | First error |\n|:---|---:|:---|\n";
      for (const auto& row : group.errored) {
        out += fmt::format("| {} | {}/{} | {} |\n", md_escape(row.model), row.errored_images,
                           row.images, md_escape(row.first_error));
      }
    }
  }
  return out;
}

std::string emit_csv(const TableReport& report) {
  std::set<std::string> reported_ids;
  std::vector<std::string> metric_ids;
  for (const auto& g : report.groups) {
    reported_ids.insert(g.reported_ids.begin(), g.reported_ids.end());
    for (const auto& id : g.metric_ids) {
      if (std::find(metric_ids.begin(), metric_ids.end(), id) == metric_ids.end()) {
        metric_ids.push_back(id);
      }
    }
  }
  std::string out = "dataset,scale,model,self_ensemble,status,images,errored_images";
  for (const auto& id : reported_ids) out += ",reported_" + id;
  for (const auto& id : metric_ids) out += "," + id;
  out += ",error\n";
  auto emit_row = [&](const TableGroup& g, const ModelAggregate& row, bool errored) {
    out += fmt::format("{},{},{},{},{},{},{}", csv_field(g.dataset), g.scale, csv_field(row.model),
                       row.self_ensemble ? "true" : "false", errored ? "errored" : "ok", row.images,
                       row.errored_images);
    for (const auto& id : reported_ids) out += "," + format_reported(row, id);
    for (const auto& id : metric_ids) out += "," + (errored ? std::string("N/A") : measured_cell(row, id));
    out += "," + csv_field(row.first_error) + "\n";
  };
  for (const auto& g : report.groups) {
    for (const auto& row : g.rows) emit_row(g, row, false);
    for (const auto& row : g.errored) emit_row(g, row, true);
  }
  return out;
}

ordered_json aggregate_to_json(const ModelAggregate& row) {
  ordered_json j;
  j["model"] = row.model;
  j["images"] = row.images;
  j["errored_images"] = row.errored_images;
  j["first_error"] = row.first_error;
  j["self_ensemble"] = row.self_ensemble;
  j["device"] = row.device_label;
  ordered_json ms = ordered_json::array();
  for (const auto& m : row.metrics) {
    ordered_json mj;
    mj["id"] = m.id;
    mj["mean"] = m.status == MetricStatus::kOk ? ordered_json(m.mean) : ordered_json(nullptr);
    mj["status"] = std::string(metrics::to_string(m.status));
    mj["ok"] = m.ok_count;
    mj["infinite"] = m.infinite_count;
    mj["undefined"] = m.undefined_count;
    ms.push_back(std::move(mj));
  }
  j["metrics"] = std::move(ms);
  ordered_json rep = ordered_json::object();
  for (const auto& [k, v] : row.reported) rep[k] = v;
  j["reported"] = std::move(rep);
  return j;
}

ModelAggregate aggregate_from_json(const nlohmann::json& j) {
  ModelAggregate row;
  row.model = j.at("model").get<std::string>();
  row.images = j.at("images").get<int>();
  row.errored_images = j.at("errored_images").get<int>();
  row.first_error = j.at("first_error").get<std::string>();
  row.self_ensemble = j.at("self_ensemble").get<bool>();
  row.device_label = j.at("device").get<std::string>();
  for (const auto& mj : j.at("metrics")) {
    MetricAggregate m;
    m.id = mj.at("id").get<std::string>();
    m.status = metrics::parse_metric_status(mj.at("status").get<std::string>());
    if (m.status == MetricStatus::kOk) m.mean = mj.at("mean").get<double>();
    if (m.status == MetricStatus::kInfinite) m.mean = std::numeric_limits<double>::infinity();
    m.ok_count = mj.at("ok").get<int>();
    m.infinite_count = mj.at("infinite").get<int>();
    m.undefined_count = mj.at("undefined").get<int>();
    row.metrics.push_back(std::move(m));
  }
  for (const auto& [k, v] : j.at("reported").items()) row.reported[k] = v.get<double>();
  return row;
}

// Axis range padded to "nice" tick steps (1, 2 or 5 times a power of ten).
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.2;
};

Axis nice_axis(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
    lo -= pad;
    hi += pad;
  }
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

}  // namespace

TableReport aggregate(const std::vector<BenchRecord>& records) {
  struct ModelState {
    ModelAggregate agg;
    std::map<std::string, Accumulator> acc;
  };
  struct GroupState {
    TableGroup group;
    std::map<std::string, ModelState> models;
    std::set<std::string> fingerprints;
    std::set<std::string> reported;
  };
  std::map<std::pair<std::string, int>, GroupState> groups;

  for (const auto& r : records) {
    auto& gs = groups[{r.dataset, r.scale}];
    gs.group.dataset = r.dataset;
    gs.group.scale = r.scale;
    gs.fingerprints.insert(r.fingerprint);
    for (const auto& [k, v] : r.reported) gs.reported.insert(k);
    auto& ms = gs.models[r.model];
    auto& agg = ms.agg;
    agg.model = r.model;
    agg.self_ensemble = agg.self_ensemble || r.self_ensemble;
    agg.images += 1;
    for (const auto& [k, v] : r.reported) agg.reported[k] = v;
    if (r.timing && agg.device_label.empty()) agg.device_label = r.timing->device_label;
    if (!r.ok) {
      if (agg.errored_images == 0) agg.first_error = fmt::format("{}: {}", r.image, r.error);
      agg.errored_images += 1;
      continue;
    }
    for (const auto& m : r.metrics) {
      if (std::find(gs.group.metric_ids.begin(), gs.group.metric_ids.end(), m.id) ==
          gs.group.metric_ids.end()) {
        gs.group.metric_ids.push_back(m.id);
      }
      auto& a = ms.acc[m.id];
      switch (m.status) {
        case MetricStatus::kOk:
          a.sum += m.value;
          a.ok += 1;
          break;
        case MetricStatus::kInfinite: a.inf += 1; break;
        case MetricStatus::kUndefined: a.undef += 1; break;
      }
    }
  }

  TableReport report;
  for (auto& [key, gs] : groups) {
    TableGroup group = std::move(gs.group);
    group.fingerprints.assign(gs.fingerprints.begin(), gs.fingerprints.end());
    group.reported_ids.assign(gs.reported.begin(), gs.reported.end());
    for (auto& [name, ms] : gs.models) {
      ModelAggregate agg = std::move(ms.agg);
      if (agg.errored_images > 0) {
        group.errored.push_back(std::move(agg));
        continue;
      }
      for (const auto& id : group.metric_ids) agg.metrics.push_back(finish(id, ms.acc[id]));
      group.rows.push_back(std::move(agg));
    }
    std::stable_sort(group.rows.begin(), group.rows.end(),
                     [](const ModelAggregate& a, const ModelAggregate& b) {
                       auto ka = psnr_key(a);
                       auto kb = psnr_key(b);
                       if (ka != kb) return ka < kb;
                       return a.model < b.model;
                     });
    report.groups.push_back(std::move(group));
  }
  return report;
}

std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format) {
  if (records.empty()) throw Error(ErrorKind::kInvalidArgument, "no records to report");
  return emit_table(aggregate(records), format);
}

std::string emit_table(const TableReport& report, TableFormat format) {
  switch (format) {
    case TableFormat::kMarkdown: return emit_markdown(report);
    case TableFormat::kCsv: return emit_csv(report);
    case TableFormat::kJson: return table_to_json(report).dump(2) + "\n";
  }
  return {};
}

ordered_json table_to_json(const TableReport& report) {
  ordered_json j;
  j["format"] = "srbench.table";
  j["version"] = kRecordSchemaVersion;
  ordered_json groups = ordered_json::array();
  for (const auto& g : report.groups) {
    ordered_json gj;
    gj["dataset"] = g.dataset;
    gj["scale"] = g.scale;
    gj["fingerprints"] = g.fingerprints;
    gj["metrics"] = g.metric_ids;
    gj["reported"] = g.reported_ids;
    gj["rows"] = ordered_json::array();
    for (const auto& row : g.rows) gj["rows"].push_back(aggregate_to_json(row));
    gj["errored"] = ordered_json::array();
    for (const auto& row : g.errored) gj["errored"].push_back(aggregate_to_json(row));
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j;
}

TableReport parse_table_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != "srbench.table") {
      throw Error(ErrorKind::kFormat, "not an srbench table document");
    }
    TableReport report;
    for (const auto& gj : j.at("groups")) {
      TableGroup g;
      g.dataset = gj.at("dataset").get<std::string>();
      g.scale = gj.at("scale").get<int>();
      g.fingerprints = gj.at("fingerprints").get<std::vector<std::string>>();
      g.metric_ids = gj.at("metrics").get<std::vector<std::string>>();
      g.reported_ids = gj.at("reported").get<std::vector<std::string>>();
      for (const auto& rj : gj.at("rows")) g.rows.push_back(aggregate_from_json(rj));
      for (const auto& rj : gj.at("errored")) g.errored.push_back(aggregate_from_json(rj));
      report.groups.push_back(std::move(g));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, fmt::format("table JSON: {}", e.what()));
  }
}

ScatterPlot emit_scatter(const std::vector<BenchRecord>& records, std::string_view x_metric,
                         std::string_view y_metric, const std::vector<std::string>& exclude) {
  auto present = [&](std::string_view id) {
    return std::any_of(records.begin(), records.end(),
                       [&](const BenchRecord& r) { return r.metric(id) != nullptr; });
  };
  for (auto id : {x_metric, y_metric}) {
    if (!present(id)) {
      throw Error(ErrorKind::kInvalidArgument, fmt::format("metric '{}' is absent from the records", id));
    }
  }
  std::set<std::string> excluded_names;
  for (const auto& e : exclude) excluded_names.insert(lower(e));

  ScatterPlot plot;
  plot.x_metric = x_metric;
  plot.y_metric = y_metric;
  const TableReport report = aggregate(records);
  const bool qualify = report.groups.size() > 1;
  for (const auto& g : report.groups) {
    auto label_of = [&](const ModelAggregate& row) {
      return qualify ? fmt::format("{} ({} x{})", row.model, g.dataset, g.scale) : row.model;
    };
    for (const auto& row : g.rows) {
      const auto* mx = row.metric(x_metric);
      const auto* my = row.metric(y_metric);
      if (excluded_names.count(lower(row.model)) != 0) {
        plot.excluded.push_back(label_of(row));
      } else if (mx == nullptr || my == nullptr || mx->status != MetricStatus::kOk ||
                 my->status != MetricStatus::kOk) {
        plot.excluded.push_back(label_of(row) + " (no finite value)");
      } else {
        plot.points.push_back({label_of(row), mx->mean, my->mean});
      }
    }
    for (const auto& row : g.errored) plot.excluded.push_back(label_of(row) + " (errored)");
  }

  // Coordinates are formatted once and shared by the CSV and the SVG.
  std::vector<std::pair<std::string, std::string>> coords;
  for (const auto& p : plot.points) coords.emplace_back(fmt::format("{}", p.x), fmt::format("{}", p.y));

  plot.csv = fmt::format("label,{},{}\n", csv_field(x_metric), csv_field(y_metric));
  for (std::size_t i = 0; i < plot.points.size(); ++i) {
    plot.csv += fmt::format("{},{},{}\n", csv_field(plot.points[i].label), coords[i].first, coords[i].second);
  }

  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 80, kRight = 200, kTop = 30, kBottom = 60;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (!plot.points.empty()) {
    xmin = xmax = plot.points[0].x;
    ymin = ymax = plot.points[0].y;
    for (const auto& p : plot.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const Axis ax = nice_axis(xmin, xmax);
  const Axis ay = nice_axis(ymin, ymax);
  auto sx = [&](double v) { return kLeft + (v - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto sy = [&](double v) { return kTop + ph - (v - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                     kLeft, kTop, pw, ph);
  const int xticks = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
  for (int i = 0; i <= xticks; ++i) {
    const double v = ax.lo + i * ax.step;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text x=\"{0:.2f}\" y=\"{3}\" text-anchor=\"middle\">{4}</text>\n",
        sx(v), kTop + ph, kTop + ph + 5, kTop + ph + 18, fmt::format("{:.6g}", v));
  }
  const int yticks = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
  for (int i = 0; i <= yticks; ++i) {
    const double v = ay.lo + i * ay.step;
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{2:.2f}\" x2=\"{1}\" y2=\"{2:.2f}\" stroke=\"black\"/>"
        "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5}</text>\n",
        kLeft - 5, kLeft, sy(v), kLeft - 8, sy(v) + 4, fmt::format("{:.6g}", v));
  }
  svg += fmt::format("<text class=\"x-label\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                     kLeft + pw / 2, kHeight - 15, xml_escape(metric_label(x_metric)));
  svg += fmt::format(
      "<text class=\"y-label\" x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">{1}</text>\n",
      kTop + ph / 2, xml_escape(metric_label(y_metric)));
  for (std::size_t i = 0; i < plot.points.size(); ++i) {
    const auto& p = plot.points[i];
    svg += fmt::format(
        "<g class=\"point\" data-label=\"{0}\" data-x=\"{1}\" data-y=\"{2}\">"
        "<circle cx=\"{3:.2f}\" cy=\"{4:.2f}\" r=\"4\" fill=\"steelblue\"/>"
        "<text x=\"{5:.2f}\" y=\"{6:.2f}\">{0}</text></g>\n",
        xml_escape(p.label), coords[i].first, coords[i].second, sx(p.x), sy(p.y), sx(p.x) + 6,
        sy(p.y) - 6);
  }
  const double lx = kLeft + pw + 15;
  svg += fmt::format("<g class=\"legend\"><text x=\"{}\" y=\"{}\" font-weight=\"bold\">{} models</text>\n",
                     lx, kTop + 10, plot.points.size());
  if (!plot.excluded.empty()) {
    svg += fmt::format("<text x=\"{}\" y=\"{}\">Excluded:</text>\n", lx, kTop + 30);
    for (std::size_t i = 0; i < plot.excluded.size(); ++i) {
      svg += fmt::format("<text class=\"excluded\" x=\"{}\" y=\"{}\">{}</text>\n", lx + 8,
                         kTop + 46 + 16 * static_cast<double>(i), xml_escape(plot.excluded[i]));
    }
  }
  svg += "</g>\n</svg>\n";
  plot.svg = std::move(svg);
  return plot;
}

}  // namespace srbench::bench
