// Copyright 2026 The cosetsum Authors
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

#include "cosetsum/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cosetsum {

ComplexMatrix matrix_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw MatrixParseError(std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data")) {
        throw MatrixParseError("matrix JSON: expected an object with rows, cols and data");
    }
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
        throw MatrixParseError("matrix JSON: rows and cols must be integers");
    }
    const long long rows = doc["rows"].get<long long>();
    const long long cols = doc["cols"].get<long long>();
    if (rows < 1 || cols < 1) {
        throw MatrixParseError("matrix JSON: rows and cols must be at least 1");
    }
    const auto &data = doc["data"];
    if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols) {
        throw MatrixParseError("matrix JSON: data must hold exactly rows*cols entries");
    }
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const auto &pair : data) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw MatrixParseError("matrix JSON: each entry must be a [re, im] number pair");
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw MatrixParseError("matrix JSON: entries must be finite");
        }
        entries.emplace_back(re, im);
    }
    return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                         std::move(entries));
}

std::string matrix_to_json(const ComplexMatrix &m) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    auto data = nlohmann::ordered_json::array();
    for (const Complex &z : m.data()) {
        data.push_back({z.real(), z.imag()});
    }
    doc["data"] = std::move(data);
    return doc.dump();
}

ComplexMatrix load_matrix(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw MatrixParseError("matrix JSON: cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return matrix_from_json(buffer.str());
}

void save_matrix(const ComplexMatrix &m, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw MatrixParseError("matrix JSON: cannot write " + path.string());
    }
    out << matrix_to_json(m) << "\n";
}

}  // namespace cosetsum
