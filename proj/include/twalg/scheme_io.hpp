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

#ifndef TWALG_SCHEME_IO_HPP_
#define TWALG_SCHEME_IO_HPP_

#include <string>

#include "json.hpp"
#include "twalg/scheme.hpp"

namespace twalg {

// {"order": n, "classes": d, "relation_table": [[int]]}
nlohmann::json scheme_to_json(const AssociationScheme& s);

// Throws InvalidSchemeError on a malformed document or when validate()
// fails; the message names the failing axiom.
AssociationScheme scheme_from_json(const nlohmann::json& doc);

// One row of comma-separated integers per vertex. With header, a first row
// "v0,v1,..." names the columns.
std::string relation_table_csv(const AssociationScheme& s, bool header = false);

}  // namespace twalg

#endif  // TWALG_SCHEME_IO_HPP_
