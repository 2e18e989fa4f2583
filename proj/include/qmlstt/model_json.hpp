// Copyright 2026 The qmlstt Authors
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

#pragma once

#include <json.hpp>

#include "qmlstt/model.hpp"

namespace qml {

// Stable field order: worlds, domain, relations, relation_functions,
// propositions, predicates, individual_constants, witness_world.
nlohmann::ordered_json model_to_json(const KripkeModel& m, int witness_world = -1);

// Inverse of model_to_json; throws Error on malformed input.
KripkeModel model_from_json(const nlohmann::ordered_json& j);

}  // namespace qml
