#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/defaults.hpp"

namespace cohere::kb {

/// Diagnostic with a 1-based source position.
class KbError : public std::runtime_error {
 public:
  KbError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct Options {
  std::size_t max_props = logic::kDefaultMaxProps;
  std::optional<Rational> alpha;  // overrides `param alpha = ...`
};

struct KbEntry {
  coherence::Entry entry;
  bool from_default = false;  // a `default` line rather than `assess`
  std::size_t line = 0;
};

/// Line format:
///   prop <ident>...
///   axiom <formula>
///   assess "<E> | <H>" = <rational | alpha>
///   default "<H> => <E>"
///   query "<E> | <H>"
///   param alpha = <rational>
/// `#` starts a comment. Propositions may be declared anywhere in the file.
struct KnowledgeBase {
  std::shared_ptr<const logic::Universe> universe;
  std::vector<KbEntry> entries;  // file order
  std::vector<logic::ConditionalEvent> queries;

  /// Every entry, in file order.
  coherence::Assessment assessment() const;
  /// Entries valued 1 become rules; the others are extra entries.
  defaults::DefaultKB default_kb() const;
};

KnowledgeBase parse_kb(std::string_view text, const Options& options = {});
KnowledgeBase load_kb(const std::string& path, const Options& options = {});

/// `H => E` with exactly one `=>`.
defaults::DefaultRule parse_rule(std::string_view text, const logic::Vocabulary& vocabulary);

}  // namespace cohere::kb
