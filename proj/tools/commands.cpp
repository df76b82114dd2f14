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

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <random>

#include "json_output.hpp"
#include "neutro/formula.hpp"

namespace neutro::cli {

namespace {

// Raised for malformed command-line values; maps to the usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

Real decimal_arg(const std::string& what, const std::string& text) {
  try {
    return parse_decimal(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

NsNumber number_arg(const std::string& what, const std::string& text) {
  try {
    return parse_ns_number(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

// KIND:VALUE, e.g. left:0.2 or R:1; plain formula notation is accepted too.
NsNumber kind_value_arg(const std::string& what, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return number_arg(what, text);
  try {
    return {parse_decimal(text.substr(colon + 1)), parse_kind(text.substr(0, colon))};
  } catch (const InvalidArgument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

OffsetBounds bounds_arg(const std::string& psi, const std::string& omega) {
  try {
    return {decimal_arg("--psi", psi), decimal_arg("--omega", omega)};
  } catch (const UsageError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::pair<std::string, NeutroTriple> binding_arg(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--bind expects NAME=<triple>, got '" + text + "'");
  }
  std::string name = text.substr(0, eq);
  const FormulaPtr probe = parse(name);
  if (!std::holds_alternative<Formula::Variable>(probe->node())) {
    throw UsageError("--bind name '" + name + "' is not an identifier");
  }
  return {std::move(name), parse_triple(text.substr(eq + 1))};
}

struct EvalOptions {
  std::string formula;
  std::string family = "if";
  std::string tnorm = "minmax";
  bool json = false;
  std::string psi = "0";
  std::string omega = "1";
  std::string scale = "unit";
  std::vector<std::string> bindings;
};

int eval_command(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  EvalRequest req;
  req.formula = o.formula;
  req.config = {parse_family(o.family), parse_tnorm(o.tnorm)};
  req.scale = parse_scale(o.scale);
  req.bounds = bounds_arg(o.psi, o.omega);
  for (const std::string& b : o.bindings) {
    auto [name, value] = binding_arg(b);
    if (!req.bindings.emplace(name, value).second) throw UsageError("identifier '" + name + "' bound twice");
  }
  const EvalResult result = evaluate(req);
  if (o.json) {
    out << to_json(*parse(req.formula), result).dump() << '\n';
  } else {
    out << to_string(result.value) << '\n';
    for (const std::string& w : result.warnings) err << "warning: " << w << '\n';
  }
  return kExitOk;
}

int compare_command(const std::string& x, const std::string& y, std::ostream& out) {
  out << relation_symbol(compare_ns(number_arg("X", x), number_arg("Y", y))) << '\n';
  return kExitOk;
}

int rough_compare_command(const std::string& x, const std::string& y, std::ostream& out) {
  const NsNumber a = number_arg("X", x);
  const NsNumber b = number_arg("Y", y);
  if (infinitely_close(a, b)) {
    out << "≈\n";
  } else if (roughly_leq(a, b)) {
    out << "≲\n";
  } else {
    out << "≳\n";
  }
  return kExitOk;
}

int interval_command(const std::string& which, const std::string& lo, const std::string& hi, std::ostream& out) {
  const NsNumber l = kind_value_arg("--lo", lo);
  const NsNumber h = kind_value_arg("--hi", hi);
  std::optional<NsInterval> iv;
  try {
    iv.emplace(l, h);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  out << to_string(which == "inf" ? inf_ns(*iv) : sup_ns(*iv)) << '\n';
  return kExitOk;
}

int classify_command(double t, double i, double f, const std::string& scale, std::ostream& out) {
  const std::vector<LogicLabel> labels = classify_logic(t, i, f, parse_scale(scale));
  if (labels.empty()) out << "unclassified\n";
  for (LogicLabel label : labels) out << label_name(label) << '\n';
  return kExitOk;
}

int validate_command(const std::vector<std::string>& comps, const std::string& psi, const std::string& omega,
                     std::ostream& out) {
  const OffsetBounds bounds = bounds_arg(psi, omega);
  const NeutroTriple x =
      NeutroTriple::lifted(parse_component(comps[0]), parse_component(comps[1]), parse_component(comps[2]));
  const ValidationReport report = validate(x, bounds);
  if (report.ok()) {
    out << "valid " << to_string(x) << '\n';
    return kExitOk;
  }
  out << "invalid " << to_string(x) << '\n';
  for (const Violation& v : report.violations) out << "  " << v.message() << '\n';
  return kExitFailure;
}

int anomaly_command(const std::string& a_text, const std::string& b_text, std::size_t probes, std::uint64_t seed,
                    std::ostream& out) {
  const Real a = decimal_arg("--a", a_text);
  const Real b = decimal_arg("--b", b_text);
  if (!(a < b)) throw UsageError("anomaly needs a < b");
  const std::vector<NsNumber> set = anomaly_probes(a, b, probes, seed);
  const AnomalyReport r = anomaly_check(a, b, set);
  const std::string as = to_decimal_string(a);
  const std::string bs = to_decimal_string(b);
  auto yes_no = [](bool v) { return v ? "yes" : "no"; };
  out << "probes: " << set.size() << " (seed " << seed << ")\n";
  out << "rough ]" << as << "," << bs << "+[ vs ]" << as << "+,-" << bs << "[: " << r.rough_discrepancies
      << " discrepancies, wide within narrow: " << yes_no(r.wide_within_narrow_rough) << '\n';
  out << "neutrosophic ]L(" << as << "),R(" << bs << ")[ vs ]R(" << as << "),L(" << bs
      << ")[: " << r.neutro_discrepancies
      << " discrepancies, wide within narrow: " << yes_no(r.wide_within_narrow_neutro) << '\n';
  return r.rough_discrepancies == 0 ? kExitOk : kExitFailure;
}

void build(CLI::App& app, int& code, std::ostream& out, std::ostream& err) {
  app.require_subcommand(1);
  const std::vector<std::string> families{"ti", "if", "plith"};
  const std::vector<std::string> tnorms{"minmax", "product", "luk"};
  const std::vector<std::string> scales{"unit", "percent"};

  auto* eval = app.add_subcommand("eval", "Evaluate a formula over neutrosophic triples");
  auto eo = std::make_shared<EvalOptions>();
  eval->add_option("formula", eo->formula, "Formula text, e.g. \"<1,0,0> & <0,0,1>\"")->required();
  eval->add_option("--family", eo->family, "Indeterminacy alignment")->check(CLI::IsMember(families));
  eval->add_option("--tnorm", eo->tnorm, "Fuzzy kernel")->check(CLI::IsMember(tnorms));
  eval->add_flag("--json", eo->json, "Print one JSON object per result");
  eval->add_option("--psi", eo->psi, "Lower offset bound (<= 0)");
  eval->add_option("--omega", eo->omega, "Upper offset bound (>= 1)");
  eval->add_option("--scale", eo->scale, "Input and output scale")->check(CLI::IsMember(scales));
  eval->add_option("--bind", eo->bindings, "NAME=<triple>, repeatable");
  eval->callback([eo, &code, &out, &err] { code = eval_command(*eo, out, err); });

  auto pair = std::make_shared<std::pair<std::string, std::string>>();
  auto* compare = app.add_subcommand("compare", "Neutrosophic order of two nonstandard numbers");
  compare->add_option("x", pair->first, "e.g. L(0.3)")->required();
  compare->add_option("y", pair->second, "e.g. R(0.3)")->required();
  compare->callback([pair, &code, &out] { code = compare_command(pair->first, pair->second, out); });

  auto* rough = app.add_subcommand("rough-compare", "Rough order of two nonstandard numbers");
  rough->add_option("x", pair->first)->required();
  rough->add_option("y", pair->second)->required();
  rough->callback([pair, &code, &out] { code = rough_compare_command(pair->first, pair->second, out); });

  auto iv = std::make_shared<std::array<std::string, 3>>();
  auto* interval = app.add_subcommand("interval", "Neutrosophic infimum or supremum of an interval");
  interval->add_option("which", (*iv)[0], "inf or sup")->required()->check(CLI::IsMember({"inf", "sup"}));
  interval->add_option("--lo", (*iv)[1], "KIND:VALUE, e.g. left:0.2")->required();
  interval->add_option("--hi", (*iv)[2], "KIND:VALUE, e.g. right:0.7")->required();
  interval->callback([iv, &code, &out] { code = interval_command((*iv)[0], (*iv)[1], (*iv)[2], out); });

  auto cl = std::make_shared<std::pair<std::array<double, 3>, std::string>>();
  cl->second = "unit";
  auto* classify = app.add_subcommand("classify", "Classical logics a single-valued triple falls under");
  classify->add_option("t", cl->first[0])->required();
  classify->add_option("i", cl->first[1])->required();
  classify->add_option("f", cl->first[2])->required();
  classify->add_option("--scale", cl->second)->check(CLI::IsMember(scales));
  classify->callback([cl, &code, &out] {
    code = classify_command(cl->first[0], cl->first[1], cl->first[2], cl->second, out);
  });

  auto va = std::make_shared<std::array<std::string, 5>>();
  (*va)[3] = "0";
  (*va)[4] = "1";
  auto* validate_cmd = app.add_subcommand("validate", "Check a triple against offset bounds");
  validate_cmd->add_option("t", (*va)[0], "component, e.g. 0.4, [0.1,0.2] or R(1)")->required();
  validate_cmd->add_option("i", (*va)[1])->required();
  validate_cmd->add_option("f", (*va)[2])->required();
  validate_cmd->add_option("--psi", (*va)[3]);
  validate_cmd->add_option("--omega", (*va)[4]);
  validate_cmd->callback([va, &code, &out] {
    code = validate_command({(*va)[0], (*va)[1], (*va)[2]}, (*va)[3], (*va)[4], out);
  });

  auto tb = std::make_shared<std::array<std::string, 3>>();
  auto* table = app.add_subcommand("table", "Print a relation table");
  table->add_option("name", (*tb)[0], "inequalities")->required()->check(CLI::IsMember({"inequalities"}));
  table->add_option("--a", (*tb)[1])->required();
  table->add_option("--b", (*tb)[2])->required();
  table->callback([tb, &code, &out] {
    out << inequality_table(decimal_arg("--a", (*tb)[1]), decimal_arg("--b", (*tb)[2]));
    code = kExitOk;
  });

  struct AnomalyOptions {
    std::string a, b;
    std::size_t probes = 1000;
    std::uint64_t seed = 42;
  };
  auto an = std::make_shared<AnomalyOptions>();
  auto* anomaly = app.add_subcommand("anomaly", "Compare the rough and neutrosophic readings of two intervals");
  anomaly->add_option("--a", an->a)->required();
  anomaly->add_option("--b", an->b)->required();
  anomaly->add_option("--probes", an->probes)->check(CLI::PositiveNumber);
  anomaly->add_option("--seed", an->seed);
  anomaly->callback([an, &code, &out] { code = anomaly_command(an->a, an->b, an->probes, an->seed, out); });
}

}  // namespace

std::string inequality_table(const Real& a, const Real& b) {
  std::string out = "kind_a\tkind_b\trelation\n";
  for (MonadKind ka : kAllKinds) {
    for (MonadKind kb : kAllKinds) {
      out += std::string(kind_name(ka)) + "\t" + std::string(kind_name(kb)) + "\t" +
             std::string(relation_symbol(compare_ns({a, ka}, {b, kb}))) + "\n";
    }
  }
  return out;
}

std::vector<NsNumber> anomaly_probes(const Real& a, const Real& b, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> where(0, 3);
  std::uniform_int_distribution<long> step(-500, 1500);
  std::uniform_int_distribution<std::size_t> kind(0, kAllKinds.size() - 1);
  const Real width = b - a;
  std::vector<NsNumber> probes;
  probes.reserve(count);
  while (probes.size() < count) {
    Real v;
    switch (where(rng)) {
      case 0: v = a; break;
      case 1: v = b; break;
      default: v = a + width * Real(step(rng)) / 1000; break;
    }
    probes.emplace_back(v, kAllKinds[kind(rng)]);
  }
  return probes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neutrosophic nonstandard calculus", "neutro"};
  int code = kExitOk;
  build(app, code, out, err);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return code;
}

}  // namespace neutro::cli
