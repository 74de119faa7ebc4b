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

#include "hnp/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace hnp {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw FormatError("field '" + field + "': " + what);
}

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(key, "missing");
  return *it;
}

Rational entry(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Index read_dim(const json& doc) {
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  const json& version = member(doc, "format_version");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    fail("format_version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
  }
  const json& dim = member(doc, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) fail("dim", "expected a positive integer");
  return static_cast<Index>(dim.get<long long>());
}

QMatrix read_matrix(const json& j, const std::string& field, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) fail(field, "expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      fail(row_field, "expected " + std::to_string(n) + " entries");
    }
    for (Index c = 0; c < n; ++c) {
      m(r, c) = entry(row[static_cast<std::size_t>(c)], row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

QBilinearOp read_op(const json& j, const std::string& field, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) fail(field, "expected " + std::to_string(n) + " entries");
  QMatrix c(n, n * n);
  for (Index i = 0; i < n; ++i) {
    const json& slice = j[static_cast<std::size_t>(i)];
    const std::string slice_field = field + "[" + std::to_string(i) + "]";
    if (!slice.is_array() || static_cast<Index>(slice.size()) != n) {
      fail(slice_field, "expected " + std::to_string(n) + " entries");
    }
    for (Index k = 0; k < n; ++k) {
      const json& v = slice[static_cast<std::size_t>(k)];
      const std::string v_field = slice_field + "[" + std::to_string(k) + "]";
      if (!v.is_array() || static_cast<Index>(v.size()) != n) fail(v_field, "expected " + std::to_string(n) + " entries");
      for (Index m = 0; m < n; ++m) c(m, i * n + k) = entry(v[static_cast<std::size_t>(m)], v_field + "[" + std::to_string(m) + "]");
    }
  }
  return QBilinearOp(std::move(c));
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json op_json(const QBilinearOp& op) {
  json out = json::array();
  for (Index i = 0; i < op.dim(); ++i) {
    json slice = json::array();
    for (Index j = 0; j < op.dim(); ++j) slice.push_back(to_json(QVector(op.product(i, j))));
    out.push_back(std::move(slice));
  }
  return out;
}

bool is_flat(const nlohmann::ordered_json& j) {
  return std::none_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); });
}

// Indented layout with arrays of scalars kept on one line, so a row of
// structure constants reads as a row.
void pretty(std::ostringstream& os, const nlohmann::ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << nlohmann::ordered_json(it.key()).dump() << ": ";
      pretty(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      pretty(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else {
    os << j.dump();
  }
}

std::string render(const nlohmann::ordered_json& doc) {
  std::ostringstream os;
  pretty(os, doc, 0);
  os << "\n";
  return os.str();
}

FixtureDescriptor read_descriptor(const json& j) {
  if (!j.is_object()) fail("descriptor", "expected an object");
  const json& family = member(j, "family");
  if (!family.is_string()) fail("descriptor.family", "expected a string");
  auto f = family_from_string(family.get<std::string>());
  if (!f) fail("descriptor.family", "unknown family '" + family.get<std::string>() + "'");
  FixtureDescriptor d{*f, {}, 0};
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_array()) fail("descriptor.params", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      d.params.push_back(entry((*it)[i], "descriptor.params[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) fail("descriptor.seed", "expected a non-negative integer");
    d.seed = it->get<std::uint64_t>();
  }
  return d;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  const json doc = parse_json(text);
  const Index n = read_dim(doc);
  QMatrix alpha = read_matrix(member(doc, "alpha"), "alpha", n);
  QBilinearOp dot = read_op(member(doc, "dot"), "dot", n);
  QBilinearOp star = read_op(member(doc, "star"), "star", n);
  AlgebraFile file{QAlgebra(std::move(dot), std::move(star), std::move(alpha)), {}, std::nullopt};
  if (auto it = doc.find("basis_names"); it != doc.end()) {
    if (!it->is_array() || static_cast<Index>(it->size()) != n) {
      fail("basis_names", "expected " + std::to_string(n) + " strings");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("basis_names[" + std::to_string(i) + "]", "expected a string");
      file.basis_names.push_back((*it)[i].get<std::string>());
    }
  }
  if (auto it = doc.find("descriptor"); it != doc.end()) file.descriptor = read_descriptor(*it);
  return file;
}

std::string serialize(const AlgebraFile& file) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["dim"] = file.algebra.dim();
  if (!file.basis_names.empty()) doc["basis_names"] = file.basis_names;
  doc["alpha"] = matrix_json(file.algebra.alpha());
  doc["dot"] = op_json(file.algebra.dot());
  doc["star"] = op_json(file.algebra.star());
  if (file.descriptor) {
    json params = json::array();
    for (const auto& p : file.descriptor->params) params.push_back(to_string(p));
    doc["descriptor"] = {{"family", std::string(to_string(file.descriptor->family))},
                         {"params", std::move(params)},
                         {"seed", file.descriptor->seed}};
  }
  return render(doc);
}

QLinearMap parse_linear_map_file(std::string_view text) {
  const json doc = parse_json(text);
  const Index n = read_dim(doc);
  return read_matrix(member(doc, "map"), "map", n);
}

std::string serialize_linear_map(const QLinearMap& map) {
  nlohmann::ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["dim"] = map.rows();
  doc["map"] = matrix_json(map);
  return render(doc);
}

QVector parse_vector_literal(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  QVector v(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = coords[i];
  return v;
}

AlgebraFile fixture_file(const Fixture& fixture) {
  return {fixture.algebra, fixture.basis_names, fixture.descriptor};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

json to_json(const QVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json to_json(const Witness<Rational>& w) {
  json indices = json::array();
  for (int a = 0; a < w.arity; ++a) indices.push_back(w.indices[static_cast<std::size_t>(a)]);
  return {{"identity", std::string(to_string(w.identity))},
          {"indices", std::move(indices)},
          {"lhs", to_json(w.lhs)},
          {"rhs", to_json(w.rhs)}};
}

json to_json(const CheckReport<Rational>& report) {
  json out{{"identity", std::string(to_string(report.identity))},
           {"passed", report.passed},
           {"triples_checked", report.triples_checked}};
  out["witness"] = report.witness ? to_json(*report.witness) : json(nullptr);
  if (!report.parts.empty()) {
    json parts = json::array();
    for (const auto& p : report.parts) parts.push_back(to_json(p));
    out["parts"] = std::move(parts);
  }
  return out;
}

std::string format_element(const QVector& v, const std::vector<std::string>& basis_names) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    const std::string name = static_cast<std::size_t>(i) < basis_names.size() ? basis_names[static_cast<std::size_t>(i)]
                                                                               : "e" + std::to_string(i);
    Rational c = v(i);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (name == "1") {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c);
      out += name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string describe(const CheckReport<Rational>& report, const std::vector<std::string>& basis_names) {
  std::ostringstream os;
  os << to_string(report.identity) << ": " << (report.passed ? "PASS" : "FAIL") << " (" << report.triples_checked
     << " basis tuples checked)";
  if (report.witness) {
    const auto& w = *report.witness;
    os << "\n  first failure in " << to_string(w.identity) << " at (";
    for (int a = 0; a < w.arity; ++a) {
      const auto idx = static_cast<std::size_t>(w.indices[static_cast<std::size_t>(a)]);
      os << (a ? ", " : "") << (idx < basis_names.size() ? basis_names[idx] : "e" + std::to_string(idx));
    }
    os << ")\n  lhs = " << format_element(w.lhs, basis_names) << "\n  rhs = " << format_element(w.rhs, basis_names);
  }
  for (const auto& p : report.parts) {
    os << "\n  - " << to_string(p.identity) << ": " << (p.passed ? "pass" : "fail");
  }
  return os.str();
}

}  // namespace hnp
