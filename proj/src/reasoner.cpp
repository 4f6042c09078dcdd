#include "kgsentry/reasoner.hpp"

#include <algorithm>

#include "kgsentry/errors.hpp"

namespace kgsentry {

namespace {

void add_assertion(Justification& j, Axiom ax) { j.assertions.push_back(std::move(ax)); }

void merge(Justification& into, Justification&& from) {
  into.assertions.insert(into.assertions.end(),
                         std::make_move_iterator(from.assertions.begin()),
                         std::make_move_iterator(from.assertions.end()));
  into.edges.insert(into.edges.end(), from.edges.begin(), from.edges.end());
  into.has_negative_parts |= from.has_negative_parts;
}

void normalize(Justification& j) {
  std::sort(j.assertions.begin(), j.assertions.end());
  j.assertions.erase(std::unique(j.assertions.begin(), j.assertions.end()),
                     j.assertions.end());
  std::sort(j.edges.begin(), j.edges.end());
  j.edges.erase(std::unique(j.edges.begin(), j.edges.end()), j.edges.end());
}

// Atomic membership: the asserted class equal to `cls` or below it, choosing
// the lexicographically smallest class name as witness.
std::optional<int> atomic_witness(int cls, EntityId individual, const Ontology& onto) {
  std::optional<int> best;
  for (int c : onto.classes_of(individual)) {
    if (!onto.is_subclass_of(c, cls)) continue;
    if (!best || onto.class_name(c) < onto.class_name(*best)) best = c;
  }
  return best;
}

bool holds_rec(const ClassExpression& e, EntityId a, const Ontology& onto,
               Justification* j);

bool holds_expr(const ExprPtr& e, EntityId a, const Ontology& onto, Justification* j) {
  return holds_rec(*e, a, onto, j);
}

bool holds_rec(const ClassExpression& e, EntityId a, const Ontology& onto,
               Justification* j) {
  const TypedGraph& g = onto.graph();
  switch (e.kind()) {
    case ExprKind::thing:
      return true;
    case ExprKind::atomic: {
      int cls = onto.class_id(e.name());
      if (cls < 0) return false;
      auto witness = atomic_witness(cls, a, onto);
      if (!witness) return false;
      if (j)
        add_assertion(*j, {Axiom::Kind::class_assertion, onto.class_name(*witness),
                           g.entity(a).label, ""});
      return true;
    }
    case ExprKind::negation: {
      int cls = onto.class_id(e.name());
      bool member = cls >= 0 && atomic_witness(cls, a, onto).has_value();
      if (member) return false;
      if (j) j->has_negative_parts = true;
      return true;
    }
    case ExprKind::existential: {
      auto rel = g.find_relation(e.name());
      if (!rel) return false;
      // Successors sorted by object label for a deterministic witness.
      std::vector<std::uint32_t> succ;
      for (std::uint32_t ti : g.out_edges(a))
        if (g.triples()[ti].relation == *rel) succ.push_back(ti);
      std::sort(succ.begin(), succ.end(), [&](std::uint32_t x, std::uint32_t y) {
        return g.entity(g.triples()[x].object).label <
               g.entity(g.triples()[y].object).label;
      });
      for (std::uint32_t ti : succ) {
        const Triple& t = g.triples()[ti];
        Justification sub;
        if (holds_rec(*e.filler(), t.object, onto, j ? &sub : nullptr)) {
          if (j) {
            add_assertion(*j, {Axiom::Kind::property_assertion,
                               g.relation(t.relation).label, g.entity(t.subject).label,
                               g.entity(t.object).label});
            j->edges.push_back(t);
            merge(*j, std::move(sub));
          }
          return true;
        }
      }
      return false;
    }
    case ExprKind::intersection: {
      for (const ExprPtr& c : e.children())
        if (!holds_expr(c, a, onto, j)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

HoldsResult holds(const ExprPtr& expr, EntityId individual, const Ontology& onto) {
  if (individual >= onto.n_individuals())
    throw LookupError("unknown individual id " + std::to_string(individual));
  HoldsResult result;
  Justification j;
  result.holds = holds_rec(*expr, individual, onto, &j);
  if (result.holds) {
    normalize(j);
    result.justification = std::move(j);
  }
  return result;
}

std::vector<EntityId> instances(const ExprPtr& expr, const Ontology& onto) {
  const TypedGraph& g = onto.graph();
  switch (expr->kind()) {
    case ExprKind::thing: {
      std::vector<EntityId> all(g.entity_count());
      for (EntityId e = 0; e < all.size(); ++e) all[e] = e;
      return all;
    }
    case ExprKind::atomic: {
      int cls = onto.class_id(expr->name());
      if (cls < 0) return {};
      std::vector<EntityId> out = onto.direct_members(cls);
      for (int d : onto.descendants(cls)) {
        const auto& mem = onto.direct_members(d);
        out.insert(out.end(), mem.begin(), mem.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case ExprKind::negation: {
      std::vector<EntityId> member =
          instances(ClassExpression::atomic(expr->name()), onto);
      std::vector<EntityId> out;
      out.reserve(g.entity_count() - member.size());
      auto it = member.begin();
      for (EntityId e = 0; e < g.entity_count(); ++e) {
        while (it != member.end() && *it < e) ++it;
        if (it == member.end() || *it != e) out.push_back(e);
      }
      return out;
    }
    case ExprKind::existential: {
      auto rel = g.find_relation(expr->name());
      if (!rel) return {};
      std::vector<EntityId> filler_set = instances(expr->filler(), onto);
      std::vector<EntityId> out;
      for (std::uint32_t ti : onto.triples_of_relation(*rel)) {
        const Triple& t = g.triples()[ti];
        if (std::binary_search(filler_set.begin(), filler_set.end(), t.object))
          out.push_back(t.subject);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case ExprKind::intersection: {
      std::vector<EntityId> acc = instances(expr->children()[0], onto);
      for (std::size_t i = 1; i < expr->children().size() && !acc.empty(); ++i) {
        std::vector<EntityId> next = instances(expr->children()[i], onto);
        std::vector<EntityId> merged;
        std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                              std::back_inserter(merged));
        acc = std::move(merged);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace kgsentry
