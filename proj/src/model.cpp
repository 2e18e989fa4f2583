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

#include "qmlstt/model.hpp"

#include "qmlstt/error.hpp"

namespace qml {

KripkeModel::KripkeModel(int worlds, int domain) : worlds_(worlds), domain_(domain) {
  if (worlds < 1 || worlds > kMaxWorlds) {
    throw Error("model needs between 1 and " + std::to_string(kMaxWorlds) + " worlds");
  }
  if (domain < 1) throw Error("model needs a nonempty domain");
}

}  // namespace qml
