#pragma once

// Builders and independent oracles shared by the unit and acceptance tests.

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/defaults.hpp"
#include "cohere/extension.hpp"
#include "cohere/lp.hpp"

namespace testing_support {

using namespace cohere;

std::shared_ptr<const logic::Universe> universe(std::initializer_list<const char*> props,
                                                std::initializer_list<const char*> axioms = {});

logic::Formula formula(const logic::Universe& u, const std::string& text);
logic::ConditionalEvent conditional(const logic::Universe& u, const std::string& text);

/// Entries as ("E | H", "p") pairs.
coherence::Assessment assessment(std::shared_ptr<const logic::Universe> u,
                                 const std::vector<std::pair<std::string, std::string>>& entries);

defaults::DefaultRule rule(const logic::Universe& u, const std::string& h, const std::string& e);

/// Formulas over propositions a, b, c used by the exhaustive sweeps.
std::vector<std::string> formula_pool();

// ---- oracles -------------------------------------------------------------

/// Optimum by enumerating every basic solution of the constraint system plus
/// the nonnegativity bounds. Only valid for bounded feasible regions.
ratlp::Outcome lp_by_vertices(const ratlp::LinearProgram& lp);

/// Coherence by trying every ordered partition of the entries into layers.
/// Layer L gets mass only on atoms under some H_j (j in L) and outside every
/// H_m resolved later; each H_j in L must be able to carry positive mass.
bool coherent_by_partitions(const coherence::Assessment& a);

/// Endpoints of the coherent-value set by bisection on
/// coherent_by_partitions, starting from a known coherent value `seed`.
std::pair<Rational, Rational> interval_by_bisection(const coherence::Assessment& a,
                                                    const logic::ConditionalEvent& target, const Rational& seed,
                                                    int iterations);

/// P(E_i | H_i) recomputed from a dumped check report, using only the atom
/// signatures and per-layer masses in the JSON. Returns the values as "n/d".
std::vector<std::string> resubstitute_from_json(const std::string& json_text);

}  // namespace testing_support
