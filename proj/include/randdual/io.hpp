// Copyright 2026 The randdual Authors
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

// JSON and CSV interchange. A matrix is a JSON array of rows; each entry is
// either a real number or a [re, im] pair.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "randdual/channels.hpp"
#include "randdual/linalg.hpp"

namespace randdual {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kCsvSchemaVersion = "1";

/// Throws ConfigError on ragged rows, malformed entries or non-finite values.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// {"kind": "kraus" | "unitary_induced" | "dilated", "d_a", "d_b",
///  "matrices": [...]}. Shape problems throw ConfigError; CPTP violations
/// under Check::enforce throw ValidationError.
QuantumChannel channel_from_json(const nlohmann::json& j, Check check = Check::enforce);
nlohmann::json channel_to_json(const QuantumChannel& ch);

/// Throws ConfigError if the file is unreadable or not valid JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Round-trip decimal: printf "%.17g"; NaN prints as "nan".
std::string format_number(double v);

/// NaN and infinities become null.
nlohmann::json number_or_null(double v);

std::string sha256_hex(std::string_view bytes);

class CsvTable {
   public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws std::invalid_argument if the cell count differs from the header.
    void add_row(std::vector<std::string> cells);
    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::string to_string() const;

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::string version = kLibraryVersion;
    double wall_clock_seconds = 0.0;
    std::map<std::string, std::string> output_digests;  // file name -> sha256

    [[nodiscard]] nlohmann::json to_json() const;
};

}  // namespace randdual
