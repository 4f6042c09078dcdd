#include "kgsentry/ontology.hpp"

#include <algorithm>
#include <ostream>

#include "kgsentry/errors.hpp"

namespace kgsentry {

namespace {

// (child, parent) pairs of the static hierarchy.
constexpr std::pair<const char*, const char*> kHierarchy[] = {
    {"InternalStructure", "AutomationPart"},
    {"InternalElement", "InternalStructure"},
    {"ExternalInterface", "InternalStructure"},
    {"Attribute", "InternalStructure"},
    {"InternalLink", "InternalStructure"},
    {"UAVariable", "AutomationPart"},
    {"PLCtag", "UAVariable"},
    {"Attribute", "UAVariable"},
    {"DataTypeValue", "AutomationPart"},
    {"InitEvent", "EdgePart"},
    {"DataEvent", "EdgePart"},
    {"Application", "EdgePart"},
    {"Operation", "EdgePart"},
    {"NetworkConnection", "NetworkPart"},
    {"Network_CL", "NetworkConnection"},
    {"Network_CG", "NetworkConnection"},
    {"IP", "NetworkPart"},
    {"LocalIP", "IP"},
    {"GlobalIP", "IP"},
    {"Service", "NetworkPart"},
    {"PortValue", "NetworkPart"},
    {"VolumeBucket", "NetworkPart"},
};

// Kind -> umbrella class for plain (non-event) entities.
const std::map<std::string, std::string>& kind_class_table() {
  static const std::map<std::string, std::string> table = {
      {"App", "Application"},
      {"UAVariable", "PLCtag"},
      {"PortValue", "PortValue"},
      {"VolumeBucket", "VolumeBucket"},
      {"DataTypeValue", "DataTypeValue"},
      {"Service", "Service"},
      {"Operation", "Operation"},
      {"InternalElement", "InternalElement"},
      {"ExternalInterface", "ExternalInterface"},
      {"DataEvent", "DataEvent"},
      {"InitEvent", "InitEvent"},
      {"Individual", "Thing"},  // placeholder kind used by from_axioms
  };
  return table;
}

const std::map<std::string, std::pair<std::string, std::string>>& schema_table() {
  static const std::map<std::string, std::pair<std::string, std::string>> table = {
      {"reads", {"Application", "UAVariable"}},
      {"writes", {"Application", "UAVariable"}},
      {"connectsTo_https", {"IP", "IP"}},
      {"connectsTo_ssh", {"IP", "IP"}},
      {"initiatedFrom", {"Application", "IP"}},
      {"hostedOn", {"Application", "IP"}},
      {"hasAddress", {"InternalElement", "IP"}},
      {"exposedVia", {"UAVariable", "ExternalInterface"}},
      {"hasDataType", {"UAVariable", "DataTypeValue"}},
      {"data_event_client", {"DataEvent", "Application"}},
      {"data_event_variable", {"DataEvent", "UAVariable"}},
      {"data_event_operation", {"DataEvent", "Operation"}},
      {"id.orig_h", {"NetworkConnection", "IP"}},
      {"id.resp_h", {"NetworkConnection", "IP"}},
      {"service", {"NetworkConnection", "Service"}},
      {"id.resp_p", {"NetworkConnection", "PortValue"}},
      {"orig_bytes", {"NetworkConnection", "VolumeBucket"}},
      {"init_client", {"InitEvent", "Application"}},
      {"init_server", {"InitEvent", "IP"}},
  };
  return table;
}

// Properties whose promoted value classes keep the bare value label.
const std::set<std::string>& bare_name_promotions() {
  static const std::set<std::string> bare = {
      "data_event_client", "data_event_variable", "data_event_operation",
      "init_client",       "init_server",         "isPartOf",
      "exposedVia",        "hostedOn",            "orig_bytes",
  };
  return bare;
}

}  // namespace

const std::set<std::string>& default_promoted_properties() {
  static const std::set<std::string> props = {
      "data_event_client", "data_event_variable", "data_event_operation",
      "init_client",       "isPartOf",            "exposedVia",
      "service",           "id.resp_p",           "orig_bytes",
      "hasDataType",
  };
  return props;
}

std::string to_string(const Axiom& ax) {
  switch (ax.kind) {
    case Axiom::Kind::class_assertion:
      return "ClassAssertion(" + ax.a + ", " + ax.b + ")";
    case Axiom::Kind::property_assertion:
      return "PropertyAssertion(" + ax.a + ", " + ax.b + ", " + ax.c + ")";
    case Axiom::Kind::subclass_of:
      return "SubClassOf(" + ax.a + ", " + ax.b + ")";
    case Axiom::Kind::domain:
      return "Domain(" + ax.a + ", " + ax.b + ")";
    case Axiom::Kind::range:
      return "Range(" + ax.a + ", " + ax.b + ")";
  }
  return "?";
}

int Ontology::class_id(const std::string& name) const {
  auto it = class_ids_.find(name);
  return it == class_ids_.end() ? -1 : it->second;
}

int Ontology::require_class(const std::string& name) const {
  int c = class_id(name);
  if (c < 0) throw LookupError("unknown class '" + name + "'");
  return c;
}

int Ontology::intern_class(const std::string& name) {
  auto it = class_ids_.find(name);
  if (it != class_ids_.end()) return it->second;
  int id = static_cast<int>(class_names_.size());
  class_names_.push_back(name);
  class_ids_.emplace(name, id);
  members_.emplace_back();
  promoted_from_.push_back(-1);
  return id;
}

void Ontology::add_subclass(const std::string& child, const std::string& parent) {
  int c = intern_class(child);
  int p = intern_class(parent);
  auto pair = std::make_pair(c, p);
  if (std::find(subclass_pairs_.begin(), subclass_pairs_.end(), pair) ==
      subclass_pairs_.end())
    subclass_pairs_.push_back(pair);
}

void Ontology::assert_class(const std::string& cls, EntityId individual,
                            int promoted_rel) {
  int c = intern_class(cls);
  if (promoted_rel >= 0 && promoted_from_[c] < 0) promoted_from_[c] = promoted_rel;
  auto& mem = members_[c];
  auto it = std::lower_bound(mem.begin(), mem.end(), individual);
  if (it != mem.end() && *it == individual) return;
  mem.insert(it, individual);
  auto& cls_list = classes_of_[individual];
  auto cit = std::lower_bound(cls_list.begin(), cls_list.end(), c);
  if (cit == cls_list.end() || *cit != c) cls_list.insert(cit, c);
}

void Ontology::finalize() {
  int n = n_classes();
  direct_subs_.assign(n, {});
  for (auto [c, p] : subclass_pairs_) direct_subs_[p].push_back(c);
  for (auto& subs : direct_subs_) {
    std::sort(subs.begin(), subs.end(), [&](int a, int b) {
      return class_names_[a] < class_names_[b];
    });
  }
  // Transitive closure by repeated descent; the hierarchy is a small DAG.
  descendants_.assign(n, {});
  for (int c = 0; c < n; ++c) {
    std::vector<int> stack = direct_subs_[c];
    std::set<int> seen;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (int y : direct_subs_[x]) stack.push_back(y);
    }
    descendants_[c].assign(seen.begin(), seen.end());
  }
  for (int c = 0; c < n; ++c) {
    const auto& desc = descendants_[c];
    if (std::binary_search(desc.begin(), desc.end(), c))
      throw DataError("class hierarchy contains a cycle at '" + class_names_[c] + "'");
  }
  // Triple lists per relation.
  rel_triples_.assign(graph_->relation_count(), {});
  for (std::uint32_t ti = 0; ti < graph_->triple_count(); ++ti)
    rel_triples_[graph_->triples()[ti].relation].push_back(ti);
}

Ontology Ontology::build(std::shared_ptr<const TypedGraph> graph) {
  Ontology onto;
  onto.graph_ = std::move(graph);
  const TypedGraph& g = *onto.graph_;
  onto.classes_of_.assign(g.entity_count(), {});

  onto.intern_class("AutomationPart");
  onto.intern_class("EdgePart");
  onto.intern_class("NetworkPart");
  for (auto [child, parent] : kHierarchy) onto.add_subclass(child, parent);

  auto segment_of = [&](EntityId ip) -> const std::string* {
    // Network membership comes from an isPartOf edge to a Network entity.
    auto rel = g.find_relation("isPartOf");
    if (!rel) return nullptr;
    for (std::uint32_t ti : g.out_edges(ip)) {
      const Triple& t = g.triples()[ti];
      if (t.relation == *rel && g.entity(t.object).kind == "Network")
        return &g.entity(t.object).label;
    }
    return nullptr;
  };

  // Network segment classes first, so IP assertions can reference them.
  for (EntityId e = 0; e < g.entity_count(); ++e) {
    const EntityRecord& rec = g.entity(e);
    if (rec.kind != "Network") continue;
    bool global = rec.label == "GlobalNet";
    onto.add_subclass(rec.label, global ? "GlobalIP" : "LocalIP");
  }

  for (EntityId e = 0; e < g.entity_count(); ++e) {
    const EntityRecord& rec = g.entity(e);
    if (rec.kind == "Network") {
      onto.assert_class(rec.label, e, -1);
      continue;
    }
    if (rec.kind == "IP") {
      const std::string* segment = segment_of(e);
      onto.assert_class(segment ? *segment : "IP", e, -1);
      continue;
    }
    if (rec.kind == "ConnEvent") {
      // Local connection iff both endpoints sit in an assigned local segment.
      bool local = true;
      int endpoints = 0;
      for (std::uint32_t ti : g.out_edges(e)) {
        const Triple& t = g.triples()[ti];
        const std::string& rl = g.relation(t.relation).label;
        if (rl != "id.orig_h" && rl != "id.resp_h") continue;
        ++endpoints;
        const std::string* segment = segment_of(t.object);
        if (!segment || *segment == "GlobalNet") local = false;
      }
      onto.assert_class(endpoints == 2 && local ? "Network_CL" : "Network_CG", e, -1);
      continue;
    }
    auto it = kind_class_table().find(rec.kind);
    if (it == kind_class_table().end())
      throw DataError("entity '" + rec.label + "' has unmappable kind '" + rec.kind +
                      "'");
    if (it->second != "Thing") onto.assert_class(it->second, e, -1);
  }

  onto.domain_.assign(g.relation_count(), -1);
  onto.range_.assign(g.relation_count(), -1);
  for (RelationId r = 0; r < g.relation_count(); ++r) {
    auto it = schema_table().find(g.relation(r).label);
    if (it == schema_table().end()) continue;
    onto.domain_[r] = onto.intern_class(it->second.first);
    onto.range_[r] = onto.intern_class(it->second.second);
  }

  onto.finalize();
  return onto;
}

Ontology Ontology::from_axioms(const std::vector<Axiom>& axioms) {
  GraphBuilder b;
  for (const Axiom& ax : axioms) {
    if (ax.kind == Axiom::Kind::property_assertion)
      b.add_triple(ax.b, ax.a, ax.c, "Individual", "Individual");
    else if (ax.kind == Axiom::Kind::class_assertion)
      b.intern_entity(ax.b, "Individual");
  }
  Ontology onto;
  onto.graph_ = std::make_shared<const TypedGraph>(std::move(b).freeze());
  const TypedGraph& g = *onto.graph_;
  onto.classes_of_.assign(g.entity_count(), {});
  onto.domain_.assign(g.relation_count(), -1);
  onto.range_.assign(g.relation_count(), -1);
  for (const Axiom& ax : axioms) {
    switch (ax.kind) {
      case Axiom::Kind::class_assertion:
        onto.assert_class(ax.a, g.entity_id(ax.b), -1);
        break;
      case Axiom::Kind::subclass_of:
        onto.add_subclass(ax.a, ax.b);
        break;
      case Axiom::Kind::domain:
        onto.domain_[g.relation_id(ax.a)] = onto.intern_class(ax.b);
        break;
      case Axiom::Kind::range:
        onto.range_[g.relation_id(ax.a)] = onto.intern_class(ax.b);
        break;
      case Axiom::Kind::property_assertion:
        break;
    }
  }
  onto.finalize();
  return onto;
}

Ontology Ontology::promote(const std::set<std::string>& properties) const {
  Ontology onto(*this);
  const TypedGraph& g = *onto.graph_;
  for (const std::string& prop : properties) {
    auto rel = g.find_relation(prop);
    if (!rel) throw LookupError("cannot promote unknown property '" + prop + "'");
    bool bare = bare_name_promotions().contains(prop);
    for (std::uint32_t ti : rel_triples_[*rel]) {
      const Triple& t = g.triples()[ti];
      const std::string& value = g.entity(t.object).label;
      std::string cls;
      if (bare || value.rfind(prop + "_", 0) == 0)
        cls = value;
      else
        cls = prop + "_" + value;
      bool fresh = onto.class_id(cls) < 0;
      onto.assert_class(cls, t.object, static_cast<int>(*rel));
      if (fresh) {
        auto it = kind_class_table().find(g.entity(t.object).kind);
        std::string parent =
            g.entity(t.object).kind == "IP"
                ? "IP"
                : (it != kind_class_table().end() ? it->second : "");
        if (!parent.empty() && parent != "Thing" && parent != cls)
          onto.add_subclass(cls, parent);
      }
    }
  }
  onto.finalize();
  return onto;
}

const std::vector<EntityId>& Ontology::direct_members(int c) const {
  return members_.at(c);
}

const std::vector<int>& Ontology::classes_of(EntityId individual) const {
  return classes_of_.at(individual);
}

const std::vector<int>& Ontology::direct_subclasses(int c) const {
  return direct_subs_.at(c);
}

const std::vector<int>& Ontology::descendants(int c) const {
  return descendants_.at(c);
}

bool Ontology::is_subclass_of(int c, int ancestor) const {
  if (c == ancestor) return true;
  const auto& desc = descendants_.at(ancestor);
  return std::binary_search(desc.begin(), desc.end(), c);
}

const std::vector<std::uint32_t>& Ontology::triples_of_relation(RelationId r) const {
  return rel_triples_.at(r);
}

std::vector<Axiom> Ontology::all_axioms() const {
  std::vector<Axiom> axioms;
  const TypedGraph& g = *graph_;
  for (int c = 0; c < n_classes(); ++c)
    for (EntityId e : members_[c])
      axioms.push_back({Axiom::Kind::class_assertion, class_names_[c],
                        g.entity(e).label, ""});
  for (const Triple& t : g.triples())
    axioms.push_back({Axiom::Kind::property_assertion, g.relation(t.relation).label,
                      g.entity(t.subject).label, g.entity(t.object).label});
  for (auto [c, p] : subclass_pairs_)
    axioms.push_back({Axiom::Kind::subclass_of, class_names_[c], class_names_[p], ""});
  for (RelationId r = 0; r < g.relation_count(); ++r) {
    if (domain_[r] >= 0)
      axioms.push_back({Axiom::Kind::domain, g.relation(r).label,
                        class_names_[domain_[r]], ""});
    if (range_[r] >= 0)
      axioms.push_back({Axiom::Kind::range, g.relation(r).label,
                        class_names_[range_[r]], ""});
  }
  return axioms;
}

void Ontology::dump_axioms(std::ostream& out) const {
  std::vector<Axiom> axioms = all_axioms();
  std::stable_sort(axioms.begin(), axioms.end(), [](const Axiom& x, const Axiom& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  for (const Axiom& ax : axioms) out << to_string(ax) << '\n';
}

}  // namespace kgsentry
