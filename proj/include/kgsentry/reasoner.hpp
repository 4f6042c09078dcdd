#pragma once
// Closed-world instance checking for the class-expression fragment.
// Negation is absence of an assertion; existential witnesses are chosen by
// smallest object label so justifications are deterministic.

#include <optional>
#include <vector>

#include "kgsentry/expr.hpp"
#include "kgsentry/graph.hpp"
#include "kgsentry/ontology.hpp"

namespace kgsentry {

// The assertions witnessing an entailment, plus the graph edges traversed by
// the existential steps (the overlap surface used for fidelity).
struct Justification {
  std::vector<Axiom> assertions;  // deduplicated, sorted
  std::vector<Triple> edges;      // property-assertion triples, deduplicated, sorted
  bool has_negative_parts = false;
};

struct HoldsResult {
  bool holds = false;
  Justification justification;  // meaningful only when holds
};

// Closed-world semantics: Thing always holds; Atomic(C) holds iff the
// individual is asserted into C or a descendant; Existential(p, F) holds iff
// some asserted p-successor satisfies F (smallest-label witness);
// Intersection requires all children; Negation(C) holds iff Atomic(C) does
// not, contributing no assertions.
HoldsResult holds(const ExprPtr& expr, EntityId individual, const Ontology& onto);

// { a | holds(expr, a) }, computed bottom-up with set operations; sorted.
std::vector<EntityId> instances(const ExprPtr& expr, const Ontology& onto);

}  // namespace kgsentry
