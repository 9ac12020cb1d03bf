#include "cohere/kb.hpp"

#include <fstream>
#include <sstream>

namespace cohere::kb {

KbError::KbError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

coherence::Assessment KnowledgeBase::assessment() const {
  std::vector<coherence::Entry> out;
  for (const auto& e : entries) out.push_back(e.entry);
  return coherence::Assessment(universe, std::move(out));
}

defaults::DefaultKB KnowledgeBase::default_kb() const {
  std::vector<defaults::DefaultRule> rules;
  std::vector<coherence::Entry> extra;
  for (const auto& e : entries) {
    if (e.entry.value == 1)
      rules.push_back({e.entry.event.conditioning, e.entry.event.consequent});
    else
      extra.push_back(e.entry);
  }
  return defaults::DefaultKB(universe, std::move(rules), std::move(extra));
}

defaults::DefaultRule parse_rule(std::string_view text, const logic::Vocabulary& vocabulary) {
  std::size_t arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw logic::SyntaxError(text.size(), "expected '=>' in default rule");
  if (std::size_t second = text.find("=>", arrow + 2); second != std::string_view::npos)
    throw logic::SyntaxError(second, "default rule has more than one '=>'");
  logic::Formula h = logic::parse_formula(text.substr(0, arrow), vocabulary);
  try {
    return {h, logic::parse_formula(text.substr(arrow + 2), vocabulary)};
  } catch (const logic::SyntaxError& e) {
    throw logic::SyntaxError(arrow + 2 + e.offset(), e.message());
  }
}

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t column_of(const std::string& line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

// Splits off the leading keyword.
std::pair<std::string_view, std::string_view> keyword(std::string_view s) {
  std::size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  return {s.substr(0, end), trim(s.substr(end))};
}

struct Quoted {
  std::string_view body;
  std::string_view rest;
};

Quoted quoted(const Line& line, std::string_view s) {
  if (s.empty() || s.front() != '"') throw KbError(line.number, column_of(line.text, s), "expected '\"'");
  std::size_t close = s.find('"', 1);
  if (close == std::string_view::npos) throw KbError(line.number, column_of(line.text, s), "unterminated string");
  return {s.substr(1, close - 1), trim(s.substr(close + 1))};
}

// Runs `fn`, mapping syntax-error offsets inside `body` to line/column.
template <typename F>
auto located(const Line& line, std::string_view body, F&& fn) {
  try {
    return fn();
  } catch (const logic::SyntaxError& e) {
    throw KbError(line.number, column_of(line.text, body) + e.offset(), e.message());
  }
}

Rational value_token(const Line& line, std::string_view token, const std::optional<Rational>& alpha) {
  if (token == "alpha") {
    if (!alpha) throw KbError(line.number, column_of(line.text, token), "alpha is not bound; pass --alpha");
    return *alpha;
  }
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw KbError(line.number, column_of(line.text, token), e.what());
  }
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text, const Options& options) {
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string raw(text.substr(start, end - start));
      bool in_string = false;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '"') in_string = !in_string;
        if (raw[i] == '#' && !in_string) {
          raw.resize(i);
          break;
        }
      }
      lines.push_back({number, std::move(raw)});
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  // Pass 1: propositions and parameters.
  logic::Vocabulary vocabulary;
  std::optional<Rational> alpha = options.alpha;
  std::optional<Rational> file_alpha;
  for (const auto& line : lines) {
    auto [kw, rest] = keyword(trim(line.text));
    if (kw == "prop") {
      if (rest.empty()) throw KbError(line.number, column_of(line.text, kw), "prop needs at least one name");
      while (!rest.empty()) {
        auto [name, tail] = keyword(rest);
        if (!logic::Vocabulary::is_identifier(name) || logic::Vocabulary::is_reserved(name))
          throw KbError(line.number, column_of(line.text, name), "invalid proposition name '" + std::string(name) + "'");
        vocabulary.add(name);
        rest = tail;
      }
    } else if (kw == "param") {
      auto [name, tail] = keyword(rest);
      if (name != "alpha") throw KbError(line.number, column_of(line.text, name), "unknown parameter");
      tail = trim(tail);
      if (tail.empty() || tail.front() != '=') throw KbError(line.number, column_of(line.text, tail), "expected '='");
      auto value = trim(tail.substr(1));
      file_alpha = value_token(line, value, std::nullopt);
    }
  }
  if (!alpha) alpha = file_alpha;

  // Pass 2: formulas.
  struct RawEntry {
    logic::ConditionalEvent event;
    Rational value;
    bool from_default;
    const Line* line;
    std::size_t column;
  };
  std::vector<logic::Formula> axioms;
  std::vector<RawEntry> raw;
  KnowledgeBase kb;
  for (const auto& line : lines) {
    std::string_view body = trim(line.text);
    if (body.empty()) continue;
    auto [kw, rest] = keyword(body);
    if (kw == "prop" || kw == "param") continue;
    if (kw == "axiom") {
      if (rest.empty()) throw KbError(line.number, column_of(line.text, kw), "axiom needs a formula");
      axioms.push_back(located(line, rest, [&] { return logic::parse_formula(rest, vocabulary); }));
    } else if (kw == "assess") {
      auto q = quoted(line, rest);
      auto event = located(line, q.body, [&] { return logic::parse_conditional(q.body, vocabulary); });
      if (q.rest.empty() || q.rest.front() != '=')
        throw KbError(line.number, column_of(line.text, q.rest), "expected '=' after the conditional event");
      auto token = trim(q.rest.substr(1));
      Rational value = value_token(line, token, alpha);
      if (sgn(value) < 0 || value > 1)
        throw KbError(line.number, column_of(line.text, token), "value outside [0, 1]");
      raw.push_back({std::move(event), std::move(value), false, &line, column_of(line.text, q.body)});
    } else if (kw == "default") {
      auto q = quoted(line, rest);
      if (!q.rest.empty()) throw KbError(line.number, column_of(line.text, q.rest), "unexpected text after rule");
      auto rule = located(line, q.body, [&] { return parse_rule(q.body, vocabulary); });
      raw.push_back({rule.event(), Rational(1), true, &line, column_of(line.text, q.body)});
    } else if (kw == "query") {
      auto q = quoted(line, rest);
      if (!q.rest.empty()) throw KbError(line.number, column_of(line.text, q.rest), "unexpected text after query");
      kb.queries.push_back(located(line, q.body, [&] { return logic::parse_conditional(q.body, vocabulary); }));
    } else {
      throw KbError(line.number, column_of(line.text, kw), "unknown directive '" + std::string(kw) + "'");
    }
  }

  try {
    kb.universe = std::make_shared<const logic::Universe>(std::move(vocabulary), std::move(axioms), options.max_props);
  } catch (const logic::BoundExceeded& e) {
    throw KbError(1, 1, e.what());
  }
  if (!kb.universe->admissible().any()) throw KbError(1, 1, "the axioms are contradictory");

  // Pass 3: semantic checks.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    if (!kb.universe->possible(r.event.conditioning))
      throw KbError(r.line->number, r.column, "impossible conditioning event");
    bool duplicate = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!logic::same_conditional(*kb.universe, raw[j].event, r.event)) continue;
      if (raw[j].value != r.value)
        throw KbError(r.line->number, r.column,
                      "conflicting value for the conditional event assessed on line " +
                          std::to_string(raw[j].line->number));
      duplicate = true;
    }
    if (!duplicate) kb.entries.push_back({{r.event, r.value}, r.from_default, r.line->number});
  }
  for (const auto& q : kb.queries)
    if (!kb.universe->possible(q.conditioning)) throw KbError(1, 1, "query has an impossible conditioning event");
  return kb;
}

KnowledgeBase load_kb(const std::string& path, const Options& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_kb(ss.str(), options);
}

}  // namespace cohere::kb
