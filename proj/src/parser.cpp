#include "cohere/logic.hpp"

namespace cohere::logic {

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocabulary, std::size_t base)
      : text_(text), vocabulary_(vocabulary), base_(base) {
    advance();
  }

  Formula parse() {
    Formula f = implication();
    if (current_.kind != Tok::End) fail(current_.offset, "unexpected '" + std::string(current_.text) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw SyntaxError(base_ + offset, message);
  }

  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' || text_[pos_] == '\n'))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ == text_.size()) {
      current_ = {Tok::End, start, {}};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      current_ = {kind, start, text_.substr(start, 1)};
    };
    switch (c) {
      case '~':
        return single(Tok::Not);
      case '&':
        return single(Tok::And);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Tok::Implies, start, text_.substr(start, 2)};
          return;
        }
        fail(start, "expected '->'");
      default:
        break;
    }
    std::size_t end = pos_;
    while (end < text_.size() && Vocabulary::is_identifier(text_.substr(pos_, end - pos_ + 1))) ++end;
    if (end == pos_) fail(start, std::string("unexpected character '") + c + "'");
    std::string_view word = text_.substr(pos_, end - pos_);
    pos_ = end;
    Tok kind = word == "v" ? Tok::Or : word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
    current_ = {kind, start, word};
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (current_.kind != Tok::Implies) return lhs;
    advance();
    return Formula::implication(std::move(lhs), implication());
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (current_.kind == Tok::Or) {
      advance();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (current_.kind == Tok::And) {
      advance();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (current_.kind == Tok::Not) {
      advance();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    Token t = current_;
    switch (t.kind) {
      case Tok::True:
        advance();
        return Formula::truth();
      case Tok::False:
        advance();
        return Formula::falsity();
      case Tok::Ident: {
        auto index = vocabulary_.find(t.text);
        if (!index) fail(t.offset, "unknown proposition '" + std::string(t.text) + "'");
        advance();
        return Formula::prop(*index);
      }
      case Tok::LParen: {
        advance();
        Formula inner = implication();
        if (current_.kind != Tok::RParen) fail(current_.offset, "expected ')'");
        advance();
        return inner;
      }
      case Tok::End:
        fail(t.offset, "unexpected end of input");
      default:
        fail(t.offset, "unexpected '" + std::string(t.text) + "'");
    }
  }

  std::string_view text_;
  const Vocabulary& vocabulary_;
  std::size_t base_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocabulary) {
  return Parser(text, vocabulary, 0).parse();
}

ConditionalEvent parse_conditional(std::string_view text, const Vocabulary& vocabulary) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw SyntaxError(text.size(), "expected '|' in conditional event");
  if (std::size_t second = text.find('|', bar + 1); second != std::string_view::npos)
    throw SyntaxError(second, "conditional event has more than one '|'");
  return {Parser(text.substr(0, bar), vocabulary, 0).parse(),
          Parser(text.substr(bar + 1), vocabulary, bar + 1).parse()};
}

}  // namespace cohere::logic
