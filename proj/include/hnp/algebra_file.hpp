// Copyright 2026 The hnp-kit Authors
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

#ifndef HNP_ALGEBRA_FILE_HPP
#define HNP_ALGEBRA_FILE_HPP

#include "hnp/checks.hpp"
#include "hnp/fixtures.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// JSON document format, version 1:
//
//   {
//     "format_version": 1,
//     "dim": n,
//     "basis_names": ["1", "x", ...],            (optional)
//     "alpha": [[q, ...], ...],                   n rows of n entries, row-major
//     "dot":   [[[q, ...], ...], ...],            dot[i][j][k] = coeff of e_k in e_i . e_j
//     "star":  [[[q, ...], ...], ...],            same layout as dot
//     "descriptor": {"family": ..., "params": [q, ...], "seed": s}   (optional)
//   }
//
// Every q is a string "p" or "p/q". A linear map file is
//   {"format_version": 1, "dim": n, "map": [[q, ...], ...]}.

namespace hnp {

inline constexpr int kFormatVersion = 1;

/// Malformed document; the message names the offending field.
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct AlgebraFile {
  QAlgebra algebra;
  std::vector<std::string> basis_names;
  std::optional<FixtureDescriptor> descriptor;
};

AlgebraFile parse_algebra_file(std::string_view text);
std::string serialize(const AlgebraFile& file);

QLinearMap parse_linear_map_file(std::string_view text);
std::string serialize_linear_map(const QLinearMap& map);

/// Comma-separated rational literals, e.g. "1,0,-1/2".
QVector parse_vector_literal(std::string_view text);

AlgebraFile fixture_file(const Fixture& fixture);

std::string read_text_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it
/// over `path`.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents);

nlohmann::json to_json(const QVector& v);
nlohmann::json to_json(const Witness<Rational>& w);
nlohmann::json to_json(const CheckReport<Rational>& report);

/// One-paragraph prose rendering of a report.
std::string describe(const CheckReport<Rational>& report, const std::vector<std::string>& basis_names);

/// Renders coordinates as a linear combination of basis names, e.g. "12x + 8".
std::string format_element(const QVector& v, const std::vector<std::string>& basis_names);

}  // namespace hnp

#endif  // HNP_ALGEBRA_FILE_HPP
