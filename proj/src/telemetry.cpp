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

#include "flapsim/telemetry.hpp"

#include <cstdio>
#include <stdexcept>

namespace flapsim::sim {

TelemetryWriter::TelemetryWriter(const std::string& path, const std::vector<std::string>& columns)
    : out_(path), columns_(columns) {
    if (!out_) throw std::runtime_error("cannot open telemetry file: " + path);
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out_ << columns_[i];
        if (i + 1 < columns_.size()) out_ << ',';
    }
    out_ << '\n';
}

void TelemetryWriter::write_row(const std::vector<double>& values) {
    if (values.size() != columns_.size())
        throw std::runtime_error("telemetry row width does not match the header");
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.9g", values[i]);
        out_ << buf;
        if (i + 1 < values.size()) out_ << ',';
    }
    out_ << '\n';
}

}  // namespace flapsim::sim
