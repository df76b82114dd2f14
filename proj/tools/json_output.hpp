//  Copyright 2026 The neutro Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// JSON rendering of evaluation results. The layout is described by
// schemas/eval_result.schema.json.

#ifndef NEUTRO_TOOLS_JSON_OUTPUT_HPP
#define NEUTRO_TOOLS_JSON_OUTPUT_HPP

#include <json.hpp>

#include "neutro/formula.hpp"

namespace neutro::cli {

/// {"kind": "left", "value": 0.3, "exact": "0.3"}
nlohmann::json to_json(const NsNumber& x);

/// Array of elements: points as above, intervals as {"lo": point, "hi": point}.
nlohmann::json to_json(const NeutroComponent& c);

nlohmann::json to_json(const OperatorConfig& cfg, Scale scale, const OffsetBounds& bounds);

nlohmann::json to_json(const Formula& formula, const EvalResult& result);

}  // namespace neutro::cli

#endif  // NEUTRO_TOOLS_JSON_OUTPUT_HPP
