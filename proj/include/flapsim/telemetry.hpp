// Copyright 2026 The flapsim Authors
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

#ifndef FLAPSIM_TELEMETRY_HPP
#define FLAPSIM_TELEMETRY_HPP

#include <fstream>
#include <string>
#include <vector>

namespace flapsim::sim {

// CSV writer with a fixed column contract; one header row, then one row per
// step. Values are rendered with %.9g so reruns are byte-identical.
class TelemetryWriter {
  public:
    TelemetryWriter(const std::string& path, const std::vector<std::string>& columns);
    void write_row(const std::vector<double>& values);
    const std::vector<std::string>& columns() const { return columns_; }

  private:
    std::ofstream out_;
    std::vector<std::string> columns_;
};

}  // namespace flapsim::sim

#endif  // FLAPSIM_TELEMETRY_HPP
