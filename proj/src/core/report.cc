//
// Copyright 2026 The Dialobust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <algorithm>
#include <cstdio>
#include <string>

#include "core/metrics.h"
#include "json.hpp"

namespace dialobust {
namespace {

using Json = nlohmann::ordered_json;

Json ReportJson(const MetricReport& report) {
  Json j;
  j["name"] = report.name;
  j["value"] = report.value;
  j["support"] = report.support;
  Json extras = Json::object();
  for (const auto& [key, value] : report.extras) extras[key] = value;
  j["extras"] = std::move(extras);
  return j;
}

}  // namespace

std::string ReportToJson(const MetricReport& report) {
  return ReportJson(report).dump();
}

std::string ReportsToJson(std::span<const MetricReport> reports) {
  Json array = Json::array();
  for (const auto& report : reports) array.push_back(ReportJson(report));
  return array.dump();
}

std::string ReportsToTable(std::span<const MetricReport> reports) {
  std::size_t name_width = 6;  // "metric"
  for (const auto& report : reports) {
    name_width = std::max(name_width, report.name.size());
  }
  const int width = static_cast<int>(name_width);
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-*s  %8s  %9s\n", width, "metric", "value",
                "support");
  out += line;
  for (const auto& report : reports) {
    std::snprintf(line, sizeof(line), "%-*s  %8.4f  %9lld\n", width,
                  report.name.c_str(), report.value,
                  static_cast<long long>(report.support));
    out += line;
  }
  return out;
}

}  // namespace dialobust
