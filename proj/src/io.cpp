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

#include "randdual/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "randdual/errors.hpp"
#include "randdual/random.hpp"

namespace randdual {

namespace {

Complex entry_from_json(const nlohmann::json& e) {
    double re = 0.0;
    double im = 0.0;
    if (e.is_number()) {
        re = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        re = e[0].get<double>();
        im = e[1].get<double>();
    } else {
        throw ConfigError("matrix entry must be a number or a [re, im] pair, got " + e.dump());
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw ConfigError("matrix entry is not finite");
    return {re, im};
}

Index index_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("channel spec is missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ConfigError(std::string("channel field \"") + key + "\" must be a positive integer");
    }
    return v.get<Index>();
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a nonempty array of rows");
    const auto rows = static_cast<Index>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw ConfigError("matrix rows must be nonempty arrays");
    const auto cols = static_cast<Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw ConfigError("matrix rows must all have " + std::to_string(cols) + " entries");
        }
        for (Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        out.push_back(std::move(row));
    }
    return out;
}

QuantumChannel channel_from_json(const nlohmann::json& j, Check check) {
    if (!j.is_object()) throw ConfigError("channel spec must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw ConfigError("channel spec needs a string \"kind\"");
    }
    if (!j.contains("matrices") || !j.at("matrices").is_array() || j.at("matrices").empty()) {
        throw ConfigError("channel spec needs a nonempty \"matrices\" array");
    }
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<ComplexMatrix> mats;
    for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m));

    try {
        if (kind == "kraus") {
            const Index d_b = mats.front().rows();
            const Index d_a = mats.front().cols();
            if (j.contains("d_a") && index_field(j, "d_a") != d_a) throw ConfigError("d_a disagrees with the Kraus shapes");
            if (j.contains("d_b") && index_field(j, "d_b") != d_b) throw ConfigError("d_b disagrees with the Kraus shapes");
            return QuantumChannel::kraus(std::move(mats), check);
        }
        if (mats.size() != 1) throw ConfigError("\"" + kind + "\" channel takes exactly one matrix");
        if (kind == "unitary_induced") {
            const Index d_b = index_field(j, "d_b");
            if (j.contains("d_a") && index_field(j, "d_a") != mats.front().rows()) {
                throw ConfigError("d_a disagrees with the unitary size");
            }
            return QuantumChannel::unitary_induced(std::move(mats.front()), d_b, check);
        }
        if (kind == "dilated") {
            return QuantumChannel::dilated(std::move(mats.front()), index_field(j, "d_a"),
                                           index_field(j, "d_b"), check);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("channel spec: ") + e.what());
    }
    throw ConfigError("unknown channel kind \"" + kind + "\"");
}

nlohmann::json channel_to_json(const QuantumChannel& ch) {
    nlohmann::json out;
    out["kind"] = std::string(to_string(ch.kind()));
    out["d_a"] = ch.d_a();
    out["d_b"] = ch.d_b();
    nlohmann::json mats = nlohmann::json::array();
    switch (ch.kind()) {
        case ChannelKind::kraus:
            for (const auto& m : ch.as_kraus().ops) mats.push_back(matrix_to_json(m));
            break;
        case ChannelKind::unitary_induced:
            mats.push_back(matrix_to_json(ch.as_unitary_induced().unitary));
            break;
        case ChannelKind::dilated:
            mats.push_back(matrix_to_json(ch.as_dilated().unitary));
            break;
    }
    out["matrices"] = std::move(mats);
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ConfigError("write failed for " + path.string());
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json number_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 15]);
    }
    return out;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw std::invalid_argument("CsvTable: row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out.push_back(',');
            out += cells[k];
        }
        out.push_back('\n');
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json out;
    out["command"] = command;
    out["config"] = config;
    out["seed"] = seed;
    out["version"] = version;
    out["rng"] = kRngVersion;
    out["csv_schema"] = kCsvSchemaVersion;
    out["wall_clock_seconds"] = wall_clock_seconds;
    nlohmann::json outputs = nlohmann::json::object();
    for (const auto& [name, digest] : output_digests) outputs[name] = {{"sha256", digest}};
    out["outputs"] = std::move(outputs);
    return out;
}

}  // namespace randdual
