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

#ifndef COSETSUM_MATRIX_JSON_HPP
#define COSETSUM_MATRIX_JSON_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "cosetsum/complex_matrix.hpp"

namespace cosetsum {

/// Raised for malformed matrix JSON (syntax errors, missing keys, ragged or
/// non-finite data) and unreadable files.
class MatrixParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Wire format:
///   {"rows": n, "cols": m, "data": [[re, im], ...]}
/// with data in row-major order, exactly rows*cols pairs, every component a
/// finite number.
ComplexMatrix matrix_from_json(const std::string &text);

std::string matrix_to_json(const ComplexMatrix &m);

ComplexMatrix load_matrix(const std::filesystem::path &path);

void save_matrix(const ComplexMatrix &m, const std::filesystem::path &path);

}  // namespace cosetsum

#endif
