#include "cohere/logic.hpp"

#include <algorithm>

namespace cohere::logic {

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset), message_(message) {}

bool Vocabulary::is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(), tail);
}

bool Vocabulary::is_reserved(std::string_view text) {
  return text == "v" || text == "true" || text == "false";
}

std::size_t Vocabulary::add(std::string_view name) {
  if (!is_identifier(name) || is_reserved(name))
    throw std::invalid_argument("invalid proposition name '" + std::string(name) + "'");
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  names_.emplace_back(name);
  index_.emplace(std::string(name), names_.size() - 1);
  return names_.size() - 1;
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

struct Formula::Node {
  Op op;
  std::size_t prop = 0;
  Formula lhs;
  Formula rhs;
  std::size_t span = 0;

  Node(Op o, std::size_t p, Formula l, Formula r, std::size_t s)
      : op(o), prop(p), lhs(std::move(l)), rhs(std::move(r)), span(s) {}
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(truth()) {}

// Leaf nodes carry null children, since a default Formula is itself a node.
Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>(Op::True, 0, Formula(nullptr), Formula(nullptr), 0));
  return t;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Op::False, 0, Formula(nullptr), Formula(nullptr), 0));
  return f;
}

Formula Formula::prop(std::size_t index) {
  return Formula(std::make_shared<const Node>(Op::Prop, index, Formula(nullptr), Formula(nullptr), index + 1));
}

Formula Formula::negation(Formula operand) {
  std::size_t span = operand.prop_span();
  return Formula(std::make_shared<const Node>(Op::Not, 0, std::move(operand), Formula(nullptr), span));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  std::size_t span = std::max(lhs.prop_span(), rhs.prop_span());
  return Formula(std::make_shared<const Node>(Op::And, 0, std::move(lhs), std::move(rhs), span));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  std::size_t span = std::max(lhs.prop_span(), rhs.prop_span());
  return Formula(std::make_shared<const Node>(Op::Or, 0, std::move(lhs), std::move(rhs), span));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  std::size_t span = std::max(lhs.prop_span(), rhs.prop_span());
  return Formula(std::make_shared<const Node>(Op::Implies, 0, std::move(lhs), std::move(rhs), span));
}

Op Formula::op() const { return node_->op; }
std::size_t Formula::prop_index() const { return node_->prop; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::prop_span() const { return node_ ? node_->span : 0; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (op() != other.op()) return false;
  switch (op()) {
    case Op::True:
    case Op::False:
      return true;
    case Op::Prop:
      return prop_index() == other.prop_index();
    case Op::Not:
      return operand() == other.operand();
    default:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

bool evaluate(const Formula& f, World world) {
  switch (f.op()) {
    case Op::True:
      return true;
    case Op::False:
      return false;
    case Op::Prop:
      return (world >> f.prop_index()) & 1U;
    case Op::Not:
      return !evaluate(f.operand(), world);
    case Op::And:
      return evaluate(f.lhs(), world) && evaluate(f.rhs(), world);
    case Op::Or:
      return evaluate(f.lhs(), world) || evaluate(f.rhs(), world);
    case Op::Implies:
      return !evaluate(f.lhs(), world) || evaluate(f.rhs(), world);
  }
  return false;
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Implies:
      return 1;
    case Op::Or:
      return 2;
    case Op::And:
      return 3;
    case Op::Not:
      return 4;
    default:
      return 5;
  }
}

void render(const Formula& f, const Vocabulary& vocabulary, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    render(c, vocabulary, out);
    if (parens) out += ')';
  };
  switch (f.op()) {
    case Op::True:
      out += "true";
      return;
    case Op::False:
      out += "false";
      return;
    case Op::Prop:
      out += vocabulary.name(f.prop_index());
      return;
    case Op::Not:
      out += '~';
      child(f.operand(), precedence(f.operand().op()) < precedence(Op::Not));
      return;
    default:
      break;
  }
  int p = precedence(f.op());
  // & and v associate left, -> associates right.
  bool right_assoc = f.op() == Op::Implies;
  int lp = precedence(f.lhs().op());
  int rp = precedence(f.rhs().op());
  child(f.lhs(), lp < p || (right_assoc && lp == p));
  out += f.op() == Op::And ? " & " : f.op() == Op::Or ? " v " : " -> ";
  child(f.rhs(), rp < p || (!right_assoc && rp == p));
}

}  // namespace

std::string to_string(const Formula& f, const Vocabulary& vocabulary) {
  std::string out;
  render(f, vocabulary, out);
  return out;
}

std::string to_string(const ConditionalEvent& ce, const Vocabulary& vocabulary) {
  return to_string(ce.consequent, vocabulary) + " | " + to_string(ce.conditioning, vocabulary);
}

}  // namespace cohere::logic
