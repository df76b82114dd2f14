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

#include "neutro/formula.hpp"

#include <algorithm>
#include <functional>

namespace neutro {

namespace {

enum class Tok {
  Lt, Gt, Comma, LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  And, Or, Arrow, Not, Number, Ident, Invalid, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;  // 1-based code point index
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

// Decodes UTF-8 into code points. Malformed bytes are reported at the code
// point position where they start.
std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b < 0x80) {
      len = 1;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      throw SyntaxError(out.size() + 1, {"valid UTF-8"}, "a malformed byte");
    }
    if (i + len > text.size()) throw SyntaxError(out.size() + 1, {"valid UTF-8"}, "a truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) throw SyntaxError(out.size() + 1, {"valid UTF-8"}, "a malformed byte");
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool is_ident_start(char32_t c) { return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || c == U'_'; }
bool is_ident_char(char32_t c) { return is_ident_start(c) || is_digit(c); }

std::string encode_utf8(char32_t cp) {
  std::string s;
  if (cp < 0x80) {
    s += static_cast<char>(cp);
  } else if (cp < 0x800) {
    s += static_cast<char>(0xC0 | (cp >> 6));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (cp >> 18));
    s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return s;
}

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string src = decode_utf8(text);
  std::vector<Token> out;
  std::size_t i = 0;
  auto ascii = [&](std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t k = from; k < to; ++k) s += static_cast<char>(src[k]);
    return s;
  };
  while (i < src.size()) {
    const char32_t c = src[i];
    const std::size_t at = i + 1;
    if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r') {
      ++i;
      continue;
    }
    auto single = [&](Tok kind, std::string spelling) {
      out.push_back({kind, std::move(spelling), at});
      ++i;
    };
    switch (c) {
      case U'<': single(Tok::Lt, "<"); continue;
      case U'>': single(Tok::Gt, ">"); continue;
      case U',': single(Tok::Comma, ","); continue;
      case U'(': single(Tok::LParen, "("); continue;
      case U')': single(Tok::RParen, ")"); continue;
      case U'[': single(Tok::LBracket, "["); continue;
      case U']': single(Tok::RBracket, "]"); continue;
      case U'{': single(Tok::LBrace, "{"); continue;
      case U'}': single(Tok::RBrace, "}"); continue;
      case U'&': case U'∧': single(Tok::And, "&"); continue;
      case U'|': case U'∨': single(Tok::Or, "|"); continue;
      case U'!': case U'¬': single(Tok::Not, "!"); continue;
      case U'→': single(Tok::Arrow, "->"); continue;
      default: break;
    }
    const bool signed_number = c == U'-' && i + 1 < src.size() &&
                               (is_digit(src[i + 1]) || src[i + 1] == U'.');
    if (c == U'-' && !signed_number) {
      if (i + 1 < src.size() && src[i + 1] == U'>') {
        out.push_back({Tok::Arrow, "->", at});
        i += 2;
        continue;
      }
      out.push_back({Tok::Invalid, "-", at});
      ++i;
      continue;
    }
    if (signed_number || is_digit(c) || c == U'.') {
      std::size_t j = i + (signed_number ? 1 : 0);
      while (j < src.size() && (is_digit(src[j]) || src[j] == U'.')) ++j;
      if (j < src.size() && (src[j] == U'e' || src[j] == U'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == U'+' || src[k] == U'-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          while (k < src.size() && is_digit(src[k])) ++k;
          j = k;
        }
      }
      out.push_back({Tok::Number, ascii(i, j), at});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, ascii(i, j), at});
      i = j;
      continue;
    }
    out.push_back({Tok::Invalid, encode_utf8(c), at});
    ++i;
  }
  out.push_back({Tok::End, "", src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  FormulaPtr formula() {
    FormulaPtr f = implication();
    if (peek().kind != Tok::End) fail({"'&'", "'|'", "'->'", "end of input"});
    return f;
  }

  NeutroTriple lone_triple() {
    if (peek().kind != Tok::Lt) fail({"'<'"});
    NeutroTriple t = triple();
    if (peek().kind != Tok::End) fail({"end of input"});
    return t;
  }

  NeutroComponent lone_component() {
    NeutroComponent c = component();
    if (peek().kind != Tok::End) fail({"end of input"});
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().offset, std::move(expected), describe(peek()));
  }

  void expect(Tok kind, const char* spelling) {
    if (peek().kind != kind) fail({std::string("'") + spelling + "'"});
    ++pos_;
  }

  std::vector<std::string> continuation(std::vector<std::string> ops) const {
    ops.push_back(depth_ > 0 ? "')'" : "end of input");
    return ops;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (peek().kind != Tok::Arrow) return lhs;
    ++pos_;
    return Formula::binary(BinaryOp::Implies, lhs, implication());
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = Formula::binary(BinaryOp::Or, lhs, conjunction());
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = Formula::binary(BinaryOp::And, lhs, unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      return Formula::negation(unary());
    }
    return atom();
  }

  FormulaPtr atom() {
    switch (peek().kind) {
      case Tok::Lt: return Formula::literal(triple());
      case Tok::Ident: return Formula::variable(take().text);
      case Tok::LParen: {
        ++pos_;
        ++depth_;
        FormulaPtr inner = implication();
        if (peek().kind != Tok::RParen) fail(continuation({"'&'", "'|'", "'->'"}));
        ++pos_;
        --depth_;
        return inner;
      }
      default: fail({"'!'", "'<'", "'('", "identifier"});
    }
  }

  NeutroTriple triple() {
    const std::size_t start = take().offset;
    std::vector<RawComponent> comps;
    comps.push_back(raw_component());
    for (;;) {
      if (peek().kind == Tok::Comma) {
        ++pos_;
        comps.push_back(raw_component());
      } else if (peek().kind == Tok::Gt) {
        ++pos_;
        break;
      } else {
        fail({"','", "'>'"});
      }
    }
    if (comps.size() != 3) throw ArityError(start, comps.size());
    const bool nonstandard = std::any_of(comps.begin(), comps.end(),
                                         [](const RawComponent& c) { return c.needs_nonstandard(); });
    if (nonstandard) {
      return {NeutroComponent::nonstandard(comps[0].members), NeutroComponent::nonstandard(comps[1].members),
              NeutroComponent::nonstandard(comps[2].members)};
    }
    return {comps[0].standard(), comps[1].standard(), comps[2].standard()};
  }

  // Returns the number and whether it carried an L/R/B decoration.
  std::pair<NsNumber, bool> ns_number() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return {NsNumber(number(t)), false};
    }
    if (t.kind == Tok::Ident && (t.text == "L" || t.text == "R" || t.text == "B") &&
        toks_[pos_ + 1].kind == Tok::LParen) {
      const MonadKind kind = parse_kind(t.text);
      pos_ += 2;
      if (peek().kind != Tok::Number) fail({"number"});
      Real v = number(take());
      expect(Tok::RParen, ")");
      return {NsNumber(std::move(v), kind), true};
    }
    fail({"number", "'L('", "'R('", "'B('"});
  }

  Real number(const Token& t) const {
    try {
      return parse_decimal(t.text);
    } catch (const InvalidArgument&) {
      throw SyntaxError(t.offset, {"number"}, describe(t));
    }
  }

  // Returns the member and whether any endpoint was decorated.
  std::pair<NsMember, bool> interval_member() {
    const std::size_t start = take().offset;
    auto [lo, lo_dec] = ns_number();
    expect(Tok::Comma, ",");
    auto [hi, hi_dec] = ns_number();
    expect(Tok::RBracket, "]");
    try {
      return {NsInterval(lo, hi), lo_dec || hi_dec};
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("interval at offset " + std::to_string(start) + ": " + e.what());
    }
  }

  // A component as written. The final shape depends on its siblings: one
  // decorated component makes the whole triple nonstandard, and then the
  // members keep the order they were written in.
  struct RawComponent {
    enum class Form { Point, Interval, Set } form;
    std::vector<NsMember> members;
    bool decorated = false;
    std::size_t offset = 0;

    NeutroComponent standard() const {
      switch (form) {
        case Form::Point: return NeutroComponent::single(std::get<NsNumber>(members[0]).value());
        case Form::Interval: {
          const auto& iv = std::get<NsInterval>(members[0]);
          return NeutroComponent::interval(iv.lo().value(), iv.hi().value());
        }
        case Form::Set: break;
      }
      std::vector<Real> values;
      for (const NsMember& m : members) values.push_back(std::get<NsNumber>(m).value());
      return NeutroComponent::hesitant(std::move(values));
    }

    bool has_interval_in_set() const {
      return form == Form::Set &&
             std::any_of(members.begin(), members.end(),
                         [](const NsMember& m) { return std::holds_alternative<NsInterval>(m); });
    }

    bool needs_nonstandard() const { return decorated || has_interval_in_set(); }
  };

  RawComponent raw_component() {
    RawComponent raw{RawComponent::Form::Point, {}, false, peek().offset};
    switch (peek().kind) {
      case Tok::LBracket: {
        auto [member, decorated] = interval_member();
        raw.form = RawComponent::Form::Interval;
        raw.members.push_back(std::move(member));
        raw.decorated = decorated;
        return raw;
      }
      case Tok::LBrace: {
        ++pos_;
        raw.form = RawComponent::Form::Set;
        for (;;) {
          if (peek().kind == Tok::LBracket) {
            auto [member, decorated] = interval_member();
            raw.members.push_back(std::move(member));
            raw.decorated = raw.decorated || decorated;
          } else {
            auto [x, decorated] = ns_number();
            raw.members.emplace_back(x);
            raw.decorated = raw.decorated || decorated;
          }
          if (peek().kind == Tok::RBrace) break;
          if (peek().kind != Tok::Comma) fail({"','", "'}'"});
          ++pos_;
        }
        ++pos_;
        return raw;
      }
      case Tok::Number:
      case Tok::Ident: {
        auto [x, decorated] = ns_number();
        raw.members.emplace_back(x);
        raw.decorated = decorated;
        return raw;
      }
      default: fail({"number", "'L('", "'R('", "'B('", "'['", "'{'"});
    }
  }

  NeutroComponent component() {
    const RawComponent raw = raw_component();
    if (raw.needs_nonstandard()) return NeutroComponent::nonstandard(raw.members);
    return raw.standard();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

int precedence(const Formula& f) {
  if (const auto* b = std::get_if<Formula::Binary>(&f.node())) {
    switch (b->op) {
      case BinaryOp::Implies: return 1;
      case BinaryOp::Or: return 2;
      case BinaryOp::And: return 3;
    }
  }
  if (std::holds_alternative<Formula::Negation>(f.node())) return 4;
  return 5;
}

std::string render(const Formula& f, int min_prec) {
  std::string s = std::visit(
      [](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Formula::Literal>) {
          return to_string(n.value);
        } else if constexpr (std::is_same_v<N, Formula::Variable>) {
          return n.name;
        } else if constexpr (std::is_same_v<N, Formula::Negation>) {
          return "!" + render(*n.operand, 4);
        } else {
          switch (n.op) {
            case BinaryOp::And: return render(*n.lhs, 3) + " & " + render(*n.rhs, 4);
            case BinaryOp::Or: return render(*n.lhs, 2) + " | " + render(*n.rhs, 3);
            case BinaryOp::Implies: return render(*n.lhs, 2) + " -> " + render(*n.rhs, 1);
          }
          return {};
        }
      },
      f.node());
  return precedence(f) < min_prec ? "(" + s + ")" : s;
}

void collect_identifiers(const Formula& f, std::set<std::string>& out) {
  std::visit(
      [&out](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Formula::Variable>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<N, Formula::Negation>) {
          collect_identifiers(*n.operand, out);
        } else if constexpr (std::is_same_v<N, Formula::Binary>) {
          collect_identifiers(*n.lhs, out);
          collect_identifiers(*n.rhs, out);
        }
      },
      f.node());
}

NeutroComponent scale_component(const NeutroComponent& c, const Real& k) {
  switch (c.shape()) {
    case ComponentShape::SingleValued: return NeutroComponent::single(c.single_value() * k);
    case ComponentShape::IntervalValued:
      return NeutroComponent::interval(c.interval_value().lo * k, c.interval_value().hi * k);
    case ComponentShape::Hesitant: {
      std::vector<Real> v;
      for (const Real& x : c.hesitant_values()) v.push_back(x * k);
      return NeutroComponent::hesitant(std::move(v));
    }
    case ComponentShape::Nonstandard: {
      std::vector<NsMember> members;
      for (const NsMember& m : c.nonstandard_members()) {
        if (const auto* x = std::get_if<NsNumber>(&m)) {
          members.emplace_back(scale_ns(*x, k));
        } else {
          const auto& iv = std::get<NsInterval>(m);
          members.emplace_back(NsInterval(scale_ns(iv.lo(), k), scale_ns(iv.hi(), k)));
        }
      }
      return NeutroComponent::nonstandard(std::move(members));
    }
  }
  return c;
}

class Evaluator {
 public:
  Evaluator(const std::map<std::string, NeutroTriple>& env, const OperatorConfig& cfg, Diagnostics* diag,
            const OffsetBounds* bounds)
      : env_(env), cfg_(cfg), diag_(diag), bounds_(bounds) {}

  NeutroTriple operator()(const Formula& f) const {
    return std::visit([this](const auto& n) { return eval(n); }, f.node());
  }

 private:
  NeutroTriple eval(const Formula::Literal& n) const { return checked(n.value); }

  NeutroTriple eval(const Formula::Variable& n) const {
    auto it = env_.find(n.name);
    if (it == env_.end()) throw UnboundIdentifier(n.name);
    return checked(it->second);
  }

  NeutroTriple eval(const Formula::Negation& n) const { return neg((*this)(*n.operand)); }

  NeutroTriple eval(const Formula::Binary& n) const {
    const NeutroTriple a = (*this)(*n.lhs);
    const NeutroTriple b = (*this)(*n.rhs);
    switch (n.op) {
      case BinaryOp::And: return conj(a, b, cfg_, diag_);
      case BinaryOp::Or: return disj(a, b, cfg_, diag_);
      case BinaryOp::Implies: return impl(a, b, cfg_, diag_);
    }
    return a;
  }

  const NeutroTriple& checked(const NeutroTriple& x) const {
    if (bounds_ == nullptr) return x;
    const ValidationReport report = validate(x, *bounds_);
    if (!report.ok()) {
      std::string msg = "input " + to_string(x) + " is outside the offset bounds:";
      for (const Violation& v : report.violations) msg += " " + v.message() + ";";
      msg.pop_back();
      throw OutOfBounds(msg);
    }
    return x;
  }

  const std::map<std::string, NeutroTriple>& env_;
  const OperatorConfig& cfg_;
  Diagnostics* diag_;
  const OffsetBounds* bounds_;
};

}  // namespace

FormulaPtr Formula::literal(NeutroTriple value) {
  return std::make_shared<const Formula>(Literal{std::move(value)});
}

FormulaPtr Formula::variable(std::string name) {
  return std::make_shared<const Formula>(Variable{std::move(name)});
}

FormulaPtr Formula::negation(FormulaPtr operand) {
  return std::make_shared<const Formula>(Negation{std::move(operand)});
}

FormulaPtr Formula::binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(Binary{op, std::move(lhs), std::move(rhs)});
}

bool same_structure(const Formula& a, const Formula& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&b](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        const auto& m = std::get<N>(b.node());
        if constexpr (std::is_same_v<N, Formula::Literal>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<N, Formula::Variable>) {
          return n.name == m.name;
        } else if constexpr (std::is_same_v<N, Formula::Negation>) {
          return same_structure(*n.operand, *m.operand);
        } else {
          return n.op == m.op && same_structure(*n.lhs, *m.lhs) && same_structure(*n.rhs, *m.rhs);
        }
      },
      a.node());
}

std::set<std::string> free_identifiers(const Formula& f) {
  std::set<std::string> out;
  collect_identifiers(f, out);
  return out;
}

FormulaPtr parse(std::string_view text) { return Parser(text).formula(); }

NeutroTriple parse_triple(std::string_view text) { return Parser(text).lone_triple(); }

NeutroComponent parse_component(std::string_view text) { return Parser(text).lone_component(); }

std::string to_string(const Formula& f) { return render(f, 1); }

std::string_view scale_name(Scale scale) { return scale == Scale::Percent ? "percent" : "unit"; }

Scale parse_scale(std::string_view text) {
  if (text == "unit") return Scale::Unit;
  if (text == "percent") return Scale::Percent;
  throw InvalidArgument("unknown scale '" + std::string(text) + "' (expected unit or percent)");
}

NeutroTriple scale_triple(const NeutroTriple& x, const Real& factor) {
  if (factor <= 0) throw InvalidArgument("scale factor must be positive, got " + to_decimal_string(factor));
  return {scale_component(x.t(), factor), scale_component(x.i(), factor), scale_component(x.f(), factor)};
}

NeutroTriple evaluate(const Formula& f, const std::map<std::string, NeutroTriple>& bindings,
                      const OperatorConfig& cfg, Diagnostics* diag) {
  for (const std::string& name : free_identifiers(f)) {
    if (!bindings.contains(name)) throw UnboundIdentifier(name);
  }
  return Evaluator(bindings, cfg, diag, nullptr)(f);
}

EvalResult evaluate(const EvalRequest& req) {
  const FormulaPtr f = parse(req.formula);
  for (const std::string& name : free_identifiers(*f)) {
    if (!req.bindings.contains(name)) throw UnboundIdentifier(name);
  }

  const bool percent = req.scale == Scale::Percent;
  const Real to_unit = percent ? Real(1) / 100 : Real(1);
  const Real from_unit = percent ? Real(100) : Real(1);

  std::map<std::string, NeutroTriple> env;
  for (const auto& [name, value] : req.bindings) env.emplace(name, scale_triple(value, to_unit));

  std::function<FormulaPtr(const FormulaPtr&)> to_unit_tree = [&](const FormulaPtr& node) -> FormulaPtr {
    return std::visit(
        [&](const auto& n) -> FormulaPtr {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Formula::Literal>) {
            return Formula::literal(scale_triple(n.value, to_unit));
          } else if constexpr (std::is_same_v<N, Formula::Variable>) {
            return node;
          } else if constexpr (std::is_same_v<N, Formula::Negation>) {
            return Formula::negation(to_unit_tree(n.operand));
          } else {
            return Formula::binary(n.op, to_unit_tree(n.lhs), to_unit_tree(n.rhs));
          }
        },
        node->node());
  };
  const FormulaPtr unit_tree = percent ? to_unit_tree(f) : f;

  Diagnostics diag;
  NeutroTriple value = Evaluator(env, req.config, &diag, &req.bounds)(*unit_tree);
  if (percent) value = scale_triple(value, from_unit);
  return {std::move(value), req.config, req.scale, req.bounds, std::move(diag.warnings)};
}

}  // namespace neutro
