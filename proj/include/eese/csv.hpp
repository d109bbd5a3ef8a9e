// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 eese contributors
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

#ifndef EESE_CSV_HPP
#define EESE_CSV_HPP

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eese {

// Shortest decimal form that parses back to exactly the same double
// (std::to_chars default), so CSV output never loses precision and is
// byte-stable across runs.
inline std::string format_double(double v) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), v);
    if (result.ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buffer, result.ptr);
}

// Incremental CSV builder: '#'-prefixed header comments recording how the
// table was produced, one column-name row, then data rows.
class CsvBuilder {
  public:
    // A "# key = value" provenance line; call before the first row.
    void comment(std::string_view key, std::string_view value) {
        text_ += "# ";
        text_ += key;
        text_ += " = ";
        text_ += value;
        text_ += '\n';
    }

    void header(const std::vector<std::string>& columns) {
        append_row(columns);
    }

    void row(const std::vector<std::string>& cells) { append_row(cells); }

    const std::string& str() const { return text_; }

  private:
    void append_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                text_ += ',';
            }
            text_ += cells[i];
        }
        text_ += '\n';
    }

    std::string text_;
};

}  // namespace eese

#endif  // EESE_CSV_HPP
