#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cohere/defaults.hpp"
#include "cohere/kb.hpp"

namespace cohere::report {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

/// Header shared by every machine-readable report.
Json envelope(const std::string& command);

Json atoms_json(const logic::AtomTable& atoms);
std::string atoms_human(const logic::AtomTable& atoms);

/// Per entry: ord(H), ord(E∧H), ord(E^c∧H), ord(E|H), ord(E^c|H).
struct ZeroLayerRow {
  logic::ConditionalEvent event;
  coherence::ZeroLayer h, eh, ech, given, complement_given;
};
std::vector<ZeroLayerRow> zero_layer_table(const coherence::Assessment& a, const coherence::AgreeingClass& cls);

Json check_json(const coherence::Assessment& a, const coherence::Verdict& verdict);
std::string check_human(const coherence::Assessment& a, const coherence::Verdict& verdict);

std::string interval_text(const extension::CoherentInterval& interval);
Json extend_json(const logic::Vocabulary& v, const logic::ConditionalEvent& target,
                 const extension::CoherentInterval& interval);

Json entails_json(const logic::Vocabulary& v, const defaults::DefaultRule& rule, const defaults::Entailment& result);
std::string entails_human(const defaults::Entailment& result);

struct DefaultsResult {
  defaults::Consistency boolean;
  coherence::Verdict coherence;  // of the full assessment, rules at 1 plus extra entries
};
Json defaults_json(const defaults::DefaultKB& kb, const DefaultsResult& result);
std::string defaults_human(const defaults::DefaultKB& kb, const DefaultsResult& result);

Json schema_json(const logic::Vocabulary& v, const defaults::Instance& inst, const defaults::SchemaReport& r);
std::string schema_human(const logic::Vocabulary& v, const defaults::Instance& inst, const defaults::SchemaReport& r);

}  // namespace cohere::report
