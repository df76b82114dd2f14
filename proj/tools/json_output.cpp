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

#include "json_output.hpp"

namespace neutro::cli {

using nlohmann::json;

json to_json(const NsNumber& x) {
  return {{"kind", std::string(kind_name(x.kind()))},
          {"value", to_double(x.value())},
          {"exact", to_decimal_string(x.value())}};
}

namespace {

json std_point(const Real& v) { return to_json(NsNumber(v)); }

json range(const json& lo, const json& hi) { return {{"lo", lo}, {"hi", hi}}; }

}  // namespace

json to_json(const NeutroComponent& c) {
  json out = json::array();
  switch (c.shape()) {
    case ComponentShape::SingleValued:
      out.push_back(std_point(c.single_value()));
      break;
    case ComponentShape::IntervalValued:
      out.push_back(range(std_point(c.interval_value().lo), std_point(c.interval_value().hi)));
      break;
    case ComponentShape::Hesitant:
      for (const Real& v : c.hesitant_values()) out.push_back(std_point(v));
      break;
    case ComponentShape::Nonstandard:
      for (const NsMember& m : c.nonstandard_members()) {
        if (const auto* x = std::get_if<NsNumber>(&m)) {
          out.push_back(to_json(*x));
        } else {
          const auto& iv = std::get<NsInterval>(m);
          out.push_back(range(to_json(iv.lo()), to_json(iv.hi())));
        }
      }
      break;
  }
  return out;
}

json to_json(const OperatorConfig& cfg, Scale scale, const OffsetBounds& bounds) {
  return {{"family", std::string(family_name(cfg.family))},
          {"tnorm", std::string(tnorm_name(cfg.tnorm))},
          {"scale", std::string(scale_name(scale))},
          {"psi", to_double(bounds.psi())},
          {"omega", to_double(bounds.omega())}};
}

json to_json(const Formula& formula, const EvalResult& result) {
  const NeutroTriple& v = result.value;
  return {{"formula", to_string(formula)},
          {"result", to_string(v)},
          {"shape", std::string(shape_name(v.shape()))},
          {"components", {{"T", to_json(v.t())}, {"I", to_json(v.i())}, {"F", to_json(v.f())}}},
          {"config", to_json(result.config, result.scale, result.bounds)},
          {"warnings", result.warnings}};
}

}  // namespace neutro::cli
