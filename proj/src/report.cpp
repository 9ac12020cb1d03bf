#include "cohere/report.hpp"

#include <sstream>

namespace cohere::report {

namespace {

std::string signature_string(const logic::Atom& atom) {
  std::string s;
  for (bool b : atom.signature) s.push_back(b ? '1' : '0');
  return s;
}

std::string event_text(const logic::Vocabulary& v, const logic::ConditionalEvent& ce) { return logic::to_string(ce, v); }

std::string rule_text(const logic::Vocabulary& v, const defaults::DefaultRule& r) {
  return logic::to_string(r.antecedent, v) + " => " + logic::to_string(r.consequent, v);
}

Json interval_json(const extension::CoherentInterval& i) { return Json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}}; }

Json zero_layer_json(const coherence::ZeroLayer& z) {
  if (z.is_infinite()) return "inf";
  return z.value();
}

}  // namespace

Json envelope(const std::string& command) {
  return Json{{"format", "cohere-report"}, {"version", kFormatVersion}, {"command", command}};
}

Json atoms_json(const logic::AtomTable& atoms) {
  const auto& v = atoms.universe().vocabulary();
  Json events = Json::array();
  for (const auto& e : atoms.events()) events.push_back(logic::to_string(e, v));
  Json rows = Json::array();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    rows.push_back({{"index", i},
                    {"signature", signature_string(atoms[i])},
                    {"description", atoms.describe(i)},
                    {"witnesses", atoms[i].witnesses.size()}});
  }
  return Json{{"events", events}, {"atoms", rows}};
}

std::string atoms_human(const logic::AtomTable& atoms) {
  std::ostringstream out;
  const auto& v = atoms.universe().vocabulary();
  out << "events:\n";
  for (std::size_t e = 0; e < atoms.events().size(); ++e)
    out << "  e" << e << " = " << logic::to_string(atoms.events()[e], v) << "\n";
  out << "atoms: " << atoms.size() << "\n";
  for (std::size_t i = 0; i < atoms.size(); ++i)
    out << "  A" << i << "  " << signature_string(atoms[i]) << "  " << atoms.describe(i) << "  ("
        << atoms[i].witnesses.size() << " world" << (atoms[i].witnesses.size() == 1 ? "" : "s") << ")\n";
  return out.str();
}

std::vector<ZeroLayerRow> zero_layer_table(const coherence::Assessment& a, const coherence::AgreeingClass& cls) {
  std::vector<ZeroLayerRow> rows;
  const std::size_t count = cls.atoms->size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto e = cls.atoms->event_members(2 * i);
    const auto h = cls.atoms->event_members(2 * i + 1);
    std::vector<bool> eh(count), ech(count);
    for (std::size_t r = 0; r < count; ++r) {
      eh[r] = e[r] && h[r];
      ech[r] = !e[r] && h[r];
    }
    const auto& ce = a.entries()[i].event;
    rows.push_back({ce, coherence::zero_layer(cls, h), coherence::zero_layer(cls, eh), coherence::zero_layer(cls, ech),
                    coherence::conditional_zero_layer(cls, ce),
                    coherence::conditional_zero_layer(cls, {!ce.consequent, ce.conditioning})});
  }
  return rows;
}

Json check_json(const coherence::Assessment& a, const coherence::Verdict& verdict) {
  const auto& v = a.universe().vocabulary();
  Json out = envelope("check");
  Json entries = Json::array();
  for (const auto& e : a.entries()) entries.push_back({{"event", event_text(v, e.event)}, {"value", to_string(e.value)}});

  if (const auto* bad = std::get_if<coherence::Incoherent>(&verdict)) {
    out["verdict"] = "incoherent";
    out["infeasible_layer"] = bad->layer;
    out["entries"] = entries;
    return out;
  }
  const auto& cls = std::get<coherence::Coherent>(verdict).agreeing;
  out["verdict"] = "coherent";
  for (std::size_t i = 0; i < a.size(); ++i) entries[i]["layer"] = cls.resolution[i];
  out["entries"] = entries;
  out["atoms"] = atoms_json(*cls.atoms);
  Json layers = Json::array();
  for (const auto& layer : cls.layers) {
    Json mass = Json::array();
    for (const auto& m : layer.mass) mass.push_back(to_string(m));
    layers.push_back({{"support", layer.support}, {"mass", mass}});
  }
  out["layers"] = layers;
  Json table = Json::array();
  for (const auto& row : zero_layer_table(a, cls)) {
    table.push_back({{"event", event_text(v, row.event)},
                     {"ord_h", zero_layer_json(row.h)},
                     {"ord_eh", zero_layer_json(row.eh)},
                     {"ord_ech", zero_layer_json(row.ech)},
                     {"ord_e_given_h", zero_layer_json(row.given)},
                     {"ord_ec_given_h", zero_layer_json(row.complement_given)}});
  }
  out["zero_layers"] = table;
  return out;
}

std::string check_human(const coherence::Assessment& a, const coherence::Verdict& verdict) {
  const auto& v = a.universe().vocabulary();
  std::ostringstream out;
  if (const auto* bad = std::get_if<coherence::Incoherent>(&verdict)) {
    out << "INCOHERENT; layer " << bad->layer << " has no solution\n";
    for (std::size_t i = 0; i < a.size(); ++i)
      out << "  [" << i << "] P(" << event_text(v, a.entries()[i].event) << ") = " << to_string(a.entries()[i].value)
          << "\n";
    return out.str();
  }
  const auto& cls = std::get<coherence::Coherent>(verdict).agreeing;
  out << "COHERENT; layers: " << cls.depth() << "\n";
  out << "entries:\n";
  for (std::size_t i = 0; i < a.size(); ++i)
    out << "  [" << i << "] P(" << event_text(v, a.entries()[i].event) << ") = " << to_string(a.entries()[i].value)
        << "  layer " << cls.resolution[i] << "\n";
  for (std::size_t l = 0; l < cls.layers.size(); ++l) {
    const auto& layer = cls.layers[l];
    out << "layer " << l << " (" << layer.support.size() << " atoms in support):\n";
    for (auto r : layer.support) out << "  A" << r << "  " << to_string(layer.mass[r]) << "  " << cls.atoms->describe(r) << "\n";
  }
  out << "zero-layers:\n";
  for (const auto& row : zero_layer_table(a, cls)) {
    out << "  " << event_text(v, row.event) << ": ord(H)=" << row.h.to_string() << " ord(E&H)=" << row.eh.to_string()
        << " ord(~E&H)=" << row.ech.to_string() << " ord(E|H)=" << row.given.to_string()
        << " ord(~E|H)=" << row.complement_given.to_string() << "\n";
  }
  return out.str();
}

std::string interval_text(const extension::CoherentInterval& interval) {
  return "[" + to_string(interval.lo) + ", " + to_string(interval.hi) + "]";
}

Json extend_json(const logic::Vocabulary& v, const logic::ConditionalEvent& target,
                 const extension::CoherentInterval& interval) {
  Json out = envelope("extend");
  out["event"] = event_text(v, target);
  out["interval"] = interval_json(interval);
  return out;
}

Json entails_json(const logic::Vocabulary& v, const defaults::DefaultRule& rule, const defaults::Entailment& result) {
  Json out = envelope("entails");
  out["rule"] = rule_text(v, rule);
  out["entailed"] = result.entailed;
  out["interval"] = interval_json(result.interval);
  return out;
}

std::string entails_human(const defaults::Entailment& result) {
  return std::string(result.entailed ? "YES" : "NO") + "; interval " + interval_text(result.interval) + "\n";
}

Json defaults_json(const defaults::DefaultKB& kb, const DefaultsResult& result) {
  const auto& v = kb.universe().vocabulary();
  Json out = envelope("defaults");
  Json rules = Json::array();
  for (const auto& r : kb.rules()) rules.push_back(rule_text(v, r));
  out["rules"] = rules;
  if (const auto* bad = std::get_if<defaults::Violated>(&result.boolean)) {
    out["consistent"] = false;
    out["violating_subset"] = bad->subset;
  } else {
    out["consistent"] = true;
  }
  out["assessment_coherent"] = coherence::is_coherent(result.coherence);
  return out;
}

std::string defaults_human(const defaults::DefaultKB& kb, const DefaultsResult& result) {
  const auto& v = kb.universe().vocabulary();
  std::ostringstream out;
  if (const auto* bad = std::get_if<defaults::Violated>(&result.boolean)) {
    out << "INCONSISTENT; violating subset:\n";
    for (auto k : bad->subset) out << "  [" << k << "] " << rule_text(v, kb.rules()[k]) << "\n";
  } else {
    out << "CONSISTENT; " << kb.rules().size() << " rule" << (kb.rules().size() == 1 ? "" : "s") << "\n";
  }
  if (!kb.extra().empty())
    out << "with the " << kb.extra().size() << " other assessed value" << (kb.extra().size() == 1 ? "" : "s") << ": "
        << (coherence::is_coherent(result.coherence) ? "coherent" : "incoherent") << "\n";
  return out.str();
}

Json schema_json(const logic::Vocabulary& v, const defaults::Instance& inst, const defaults::SchemaReport& r) {
  Json out = envelope("rules");
  out["schema"] = std::string(defaults::schema_name(r.schema));
  out["instance"] = {{"a", logic::to_string(inst.a, v)}, {"b", logic::to_string(inst.b, v)}, {"c", logic::to_string(inst.c, v)}};
  out["premises_wellformed"] = r.premises_wellformed;
  out["premises_consistent"] = r.premises_consistent;
  out["conclusion_wellformed"] = r.conclusion_wellformed;
  out["conclusion_entailed"] = r.conclusion_entailed;
  out["conclusion_interval"] = r.conclusion ? interval_json(*r.conclusion) : Json(nullptr);
  if (r.kind == defaults::SchemaKind::Rationality) {
    Json absent = Json::array();
    for (const auto& i : r.absent_intervals) absent.push_back(interval_json(i));
    out["absent_intervals"] = absent;
    out["absent_hold"] = r.absent_hold;
  }
  out["upholds_schema"] = r.upholds_schema();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string schema_human(const logic::Vocabulary& v, const defaults::Instance& inst, const defaults::SchemaReport& r) {
  std::ostringstream out;
  const auto shape = defaults::instantiate(r.schema, inst);
  out << "schema " << defaults::schema_name(r.schema) << "\n";
  for (const auto& ax : shape.side_axioms) out << "  side condition: " << logic::to_string(ax, v) << "\n";
  for (const auto& p : shape.premises) out << "  premise: " << rule_text(v, p) << "\n";
  for (std::size_t i = 0; i < shape.absent.size(); ++i) {
    out << "  absent: " << rule_text(v, shape.absent[i]);
    if (i < r.absent_intervals.size()) out << "  interval " << interval_text(r.absent_intervals[i]);
    out << "\n";
  }
  out << "  conclusion: " << rule_text(v, shape.conclusion) << "\n";
  if (!r.premises_wellformed)
    out << "NOT APPLICABLE; a premise has an impossible antecedent\n";
  else if (!r.premises_consistent)
    out << "NOT APPLICABLE; premises are inconsistent\n";
  else if (!r.conclusion_wellformed)
    out << "NOT APPLICABLE; the conclusion has an impossible antecedent\n";
  else
    out << (r.conclusion_entailed ? "ENTAILED" : "NOT ENTAILED") << "; interval " << interval_text(*r.conclusion) << "\n";
  out << (r.upholds_schema() ? "schema upheld" : "COUNTEREXAMPLE") << "\n";
  return out.str();
}

}  // namespace cohere::report
