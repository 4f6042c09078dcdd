#pragma once
// Immutable multi-relational graph with typed entities and adjacency indices.
//
// Entities and relations are interned in first-seen order; all downstream
// determinism keys on labels, never on the dense ids. A GraphBuilder is the
// single writer; freeze() produces a read-only TypedGraph that is safe to
// share across threads.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kgsentry {

using EntityId = std::uint32_t;
using RelationId = std::uint32_t;

struct EntityRecord {
  std::string label;
  std::string kind;  // e.g. "App", "IP", "UAVariable", "ConnEvent"
};

struct RelationRecord {
  std::string label;
};

struct Triple {
  EntityId subject;
  RelationId relation;
  EntityId object;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::size_t h = t.subject;
    h = h * 0x9e3779b97f4a7c15ull + t.relation;
    h = h * 0x9e3779b97f4a7c15ull + t.object;
    return h;
  }
};

enum class EdgeDir : std::uint8_t { out, in };

struct IncidentEdge {
  RelationId relation;
  EntityId neighbor;
  EdgeDir dir;
  std::uint32_t triple_index;
};

class TypedGraph;

// Entities plus triples selected from a base graph, ids preserved.
struct Subgraph {
  std::vector<EntityId> entities;  // sorted ascending
  std::vector<Triple> triples;     // in base-graph triple order
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const TypedGraph& base);  // copy-extend an existing graph

  // Interns labels idempotently, ignores duplicate triples. Conflicting kind
  // for an existing label raises SchemaError.
  Triple add_triple(std::string_view s_label, std::string_view r_label,
                    std::string_view o_label, std::string_view s_kind,
                    std::string_view o_kind);

  EntityId intern_entity(std::string_view label, std::string_view kind);
  RelationId intern_relation(std::string_view label);

  std::size_t entity_count() const { return entities_.size(); }
  std::size_t triple_count() const { return triples_.size(); }

  TypedGraph freeze() &&;
  TypedGraph freeze() const&;

 private:
  std::vector<EntityRecord> entities_;
  std::vector<RelationRecord> relations_;
  std::unordered_map<std::string, EntityId> entity_by_label_;
  std::unordered_map<std::string, RelationId> relation_by_label_;
  std::vector<Triple> triples_;
  std::unordered_set<Triple, TripleHash> triple_set_;
};

class TypedGraph {
 public:
  TypedGraph() = default;

  std::size_t entity_count() const { return entities_.size(); }
  std::size_t relation_count() const { return relations_.size(); }
  std::size_t triple_count() const { return triples_.size(); }

  const EntityRecord& entity(EntityId e) const { return entities_.at(e); }
  const RelationRecord& relation(RelationId r) const { return relations_.at(r); }
  const std::vector<EntityRecord>& entities() const { return entities_; }
  const std::vector<RelationRecord>& relations() const { return relations_; }
  const std::vector<Triple>& triples() const { return triples_; }

  std::optional<EntityId> find_entity(std::string_view label) const;
  std::optional<RelationId> find_relation(std::string_view label) const;
  // Throwing variants for callers that require the label to resolve.
  EntityId entity_id(std::string_view label) const;
  RelationId relation_id(std::string_view label) const;

  bool contains(const Triple& t) const { return triple_set_.contains(t); }

  // Indices of triples with the given subject / object.
  std::span<const std::uint32_t> out_edges(EntityId e) const;
  std::span<const std::uint32_t> in_edges(EntityId e) const;

  // All incident triples in both directions, sorted by (relation id,
  // neighbor id, direction).
  std::vector<IncidentEdge> neighbors(EntityId e) const;

  std::size_t degree(EntityId e) const;

  // Entities within k undirected hops of the centers plus the edges that a
  // k-layer message-passing pass over the centers can touch: a triple is
  // included iff one endpoint lies within distance k-1. k=0 yields the
  // centers and no triples.
  Subgraph khop_subgraph(std::span<const EntityId> centers, int k) const;

  // BFS distances from the centers, capped at k (entities farther than k get
  // no entry).
  std::unordered_map<EntityId, int> khop_distances(std::span<const EntityId> centers,
                                                   int k) const;

  // One triple per line, `subject<TAB>relation<TAB>object`, sorted
  // lexicographically by labels.
  void dump_tsv(std::ostream& out) const;

 private:
  friend class GraphBuilder;

  std::vector<EntityRecord> entities_;
  std::vector<RelationRecord> relations_;
  std::unordered_map<std::string, EntityId> entity_by_label_;
  std::unordered_map<std::string, RelationId> relation_by_label_;
  std::vector<Triple> triples_;
  std::unordered_set<Triple, TripleHash> triple_set_;

  // CSR-style adjacency: triple indices grouped by subject / object.
  std::vector<std::uint32_t> out_offsets_, out_index_;
  std::vector<std::uint32_t> in_offsets_, in_index_;
};

}  // namespace kgsentry
