// Copyright 2026 The twalg Authors
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

#include "twalg/scheme_io.hpp"

#include <sstream>

namespace twalg {

nlohmann::json scheme_to_json(const AssociationScheme& s) {
  const IntMatrix& r = s.relations();
  nlohmann::json table = nlohmann::json::array();
  for (Index x = 0; x < r.rows(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (Index y = 0; y < r.cols(); ++y) row.push_back(r(x, y));
    table.push_back(std::move(row));
  }
  return {{"order", s.order()},
          {"classes", s.classes()},
          {"relation_table", std::move(table)}};
}

AssociationScheme scheme_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("classes") ||
      !doc.contains("relation_table")) {
    throw InvalidSchemeError(
        "scheme document needs order, classes and relation_table");
  }
  const auto& rows = doc.at("relation_table");
  const Index n = doc.at("order").get<Index>();
  const int d = doc.at("classes").get<int>();
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n || n <= 0) {
    throw InvalidSchemeError("relation_table must have order rows");
  }
  IntMatrix table(n, n);
  for (Index x = 0; x < n; ++x) {
    const auto& row = rows.at(x);
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw InvalidSchemeError("relation_table row " + std::to_string(x) +
                               " must have order entries");
    }
    for (Index y = 0; y < n; ++y) {
      if (!row.at(y).is_number_integer()) {
        throw InvalidSchemeError("relation_table entries must be integers");
      }
      const int v = row.at(y).get<int>();
      if (v < 0 || v > d) {
        throw InvalidSchemeError("relation_table entry (" + std::to_string(x) +
                                 "," + std::to_string(y) + ") = " +
                                 std::to_string(v) + " outside 0.." +
                                 std::to_string(d));
      }
      table(x, y) = v;
    }
  }
  if (table.maxCoeff() != d) {
    throw InvalidSchemeError("relation " + std::to_string(d) + " is empty");
  }
  AssociationScheme s = AssociationScheme::from_relation_table(table);
  require_valid(s);
  return s;
}

std::string relation_table_csv(const AssociationScheme& s, bool header) {
  const IntMatrix& r = s.relations();
  std::ostringstream os;
  if (header) {
    for (Index y = 0; y < r.cols(); ++y) os << (y ? "," : "") << "v" << y;
    os << "\n";
  }
  for (Index x = 0; x < r.rows(); ++x) {
    for (Index y = 0; y < r.cols(); ++y) os << (y ? "," : "") << r(x, y);
    os << "\n";
  }
  return os.str();
}

}  // namespace twalg
