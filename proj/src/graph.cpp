#include "kgsentry/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "kgsentry/errors.hpp"

namespace kgsentry {

GraphBuilder::GraphBuilder(const TypedGraph& base)
    : entities_(base.entities()),
      relations_(base.relations()),
      triples_(base.triples()) {
  entity_by_label_.reserve(entities_.size());
  for (EntityId i = 0; i < entities_.size(); ++i)
    entity_by_label_.emplace(entities_[i].label, i);
  relation_by_label_.reserve(relations_.size());
  for (RelationId i = 0; i < relations_.size(); ++i)
    relation_by_label_.emplace(relations_[i].label, i);
  triple_set_.reserve(triples_.size());
  for (const Triple& t : triples_) triple_set_.insert(t);
}

EntityId GraphBuilder::intern_entity(std::string_view label, std::string_view kind) {
  if (label.empty()) throw SchemaError("empty entity label");
  auto it = entity_by_label_.find(std::string(label));
  if (it != entity_by_label_.end()) {
    const EntityRecord& rec = entities_[it->second];
    if (rec.kind != kind)
      throw SchemaError("entity '" + rec.label + "' already interned with kind '" +
                        rec.kind + "', got '" + std::string(kind) + "'");
    return it->second;
  }
  EntityId id = static_cast<EntityId>(entities_.size());
  entities_.push_back({std::string(label), std::string(kind)});
  entity_by_label_.emplace(std::string(label), id);
  return id;
}

RelationId GraphBuilder::intern_relation(std::string_view label) {
  if (label.empty()) throw SchemaError("empty relation label");
  auto it = relation_by_label_.find(std::string(label));
  if (it != relation_by_label_.end()) return it->second;
  RelationId id = static_cast<RelationId>(relations_.size());
  relations_.push_back({std::string(label)});
  relation_by_label_.emplace(std::string(label), id);
  return id;
}

Triple GraphBuilder::add_triple(std::string_view s_label, std::string_view r_label,
                                std::string_view o_label, std::string_view s_kind,
                                std::string_view o_kind) {
  EntityId s = intern_entity(s_label, s_kind);
  RelationId r = intern_relation(r_label);
  EntityId o = intern_entity(o_label, o_kind);
  Triple t{s, r, o};
  if (triple_set_.insert(t).second) triples_.push_back(t);
  return t;
}

namespace {

void build_indices(TypedGraph& g, const std::vector<Triple>& triples,
                   std::size_t n_entities, std::vector<std::uint32_t>& offsets,
                   std::vector<std::uint32_t>& index, bool by_subject) {
  offsets.assign(n_entities + 1, 0);
  for (const Triple& t : triples)
    ++offsets[(by_subject ? t.subject : t.object) + 1];
  for (std::size_t i = 1; i <= n_entities; ++i) offsets[i] += offsets[i - 1];
  index.resize(triples.size());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::uint32_t ti = 0; ti < triples.size(); ++ti) {
    EntityId key = by_subject ? triples[ti].subject : triples[ti].object;
    index[cursor[key]++] = ti;
  }
  (void)g;
}

}  // namespace

TypedGraph GraphBuilder::freeze() && {
  TypedGraph g;
  g.entities_ = std::move(entities_);
  g.relations_ = std::move(relations_);
  g.entity_by_label_ = std::move(entity_by_label_);
  g.relation_by_label_ = std::move(relation_by_label_);
  g.triples_ = std::move(triples_);
  g.triple_set_ = std::move(triple_set_);
  build_indices(g, g.triples_, g.entities_.size(), g.out_offsets_, g.out_index_, true);
  build_indices(g, g.triples_, g.entities_.size(), g.in_offsets_, g.in_index_, false);
  return g;
}

TypedGraph GraphBuilder::freeze() const& {
  GraphBuilder copy(*this);
  return std::move(copy).freeze();
}

std::optional<EntityId> TypedGraph::find_entity(std::string_view label) const {
  auto it = entity_by_label_.find(std::string(label));
  if (it == entity_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<RelationId> TypedGraph::find_relation(std::string_view label) const {
  auto it = relation_by_label_.find(std::string(label));
  if (it == relation_by_label_.end()) return std::nullopt;
  return it->second;
}

EntityId TypedGraph::entity_id(std::string_view label) const {
  auto id = find_entity(label);
  if (!id) throw LookupError("unknown entity '" + std::string(label) + "'");
  return *id;
}

RelationId TypedGraph::relation_id(std::string_view label) const {
  auto id = find_relation(label);
  if (!id) throw LookupError("unknown relation '" + std::string(label) + "'");
  return *id;
}

std::span<const std::uint32_t> TypedGraph::out_edges(EntityId e) const {
  if (e >= entities_.size()) throw LookupError("entity id out of range");
  return {out_index_.data() + out_offsets_[e],
          out_index_.data() + out_offsets_[e + 1]};
}

std::span<const std::uint32_t> TypedGraph::in_edges(EntityId e) const {
  if (e >= entities_.size()) throw LookupError("entity id out of range");
  return {in_index_.data() + in_offsets_[e], in_index_.data() + in_offsets_[e + 1]};
}

std::vector<IncidentEdge> TypedGraph::neighbors(EntityId e) const {
  std::vector<IncidentEdge> result;
  for (std::uint32_t ti : out_edges(e))
    result.push_back({triples_[ti].relation, triples_[ti].object, EdgeDir::out, ti});
  for (std::uint32_t ti : in_edges(e))
    result.push_back({triples_[ti].relation, triples_[ti].subject, EdgeDir::in, ti});
  std::sort(result.begin(), result.end(), [](const IncidentEdge& a, const IncidentEdge& b) {
    return std::tie(a.relation, a.neighbor, a.dir) < std::tie(b.relation, b.neighbor, b.dir);
  });
  return result;
}

std::size_t TypedGraph::degree(EntityId e) const {
  return out_edges(e).size() + in_edges(e).size();
}

std::unordered_map<EntityId, int> TypedGraph::khop_distances(
    std::span<const EntityId> centers, int k) const {
  std::unordered_map<EntityId, int> dist;
  std::deque<EntityId> queue;
  for (EntityId c : centers) {
    if (c >= entities_.size()) throw LookupError("unknown k-hop center");
    if (dist.emplace(c, 0).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    EntityId v = queue.front();
    queue.pop_front();
    int d = dist[v];
    if (d >= k) continue;
    auto visit = [&](EntityId u) {
      if (dist.emplace(u, d + 1).second) queue.push_back(u);
    };
    for (std::uint32_t ti : out_edges(v)) visit(triples_[ti].object);
    for (std::uint32_t ti : in_edges(v)) visit(triples_[ti].subject);
  }
  return dist;
}

Subgraph TypedGraph::khop_subgraph(std::span<const EntityId> centers, int k) const {
  if (centers.empty()) throw LookupError("k-hop requires at least one center");
  if (k < 0) throw LookupError("k-hop requires k >= 0");
  auto dist = khop_distances(centers, k);
  Subgraph sub;
  sub.entities.reserve(dist.size());
  for (const auto& [e, d] : dist) sub.entities.push_back(e);
  std::sort(sub.entities.begin(), sub.entities.end());
  for (std::uint32_t ti = 0; ti < triples_.size(); ++ti) {
    const Triple& t = triples_[ti];
    auto ds = dist.find(t.subject);
    auto doo = dist.find(t.object);
    if (ds == dist.end() || doo == dist.end()) continue;
    if (std::min(ds->second, doo->second) <= k - 1) sub.triples.push_back(t);
  }
  return sub;
}

void TypedGraph::dump_tsv(std::ostream& out) const {
  std::vector<std::tuple<std::string_view, std::string_view, std::string_view>> rows;
  rows.reserve(triples_.size());
  for (const Triple& t : triples_)
    rows.emplace_back(entities_[t.subject].label, relations_[t.relation].label,
                      entities_[t.object].label);
  std::sort(rows.begin(), rows.end());
  for (const auto& [s, r, o] : rows) out << s << '\t' << r << '\t' << o << '\n';
}

}  // namespace kgsentry
