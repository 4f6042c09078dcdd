#pragma once
// OWL-fragment ontology over a typed graph: a class hierarchy split into
// automation, edge and network domains, class assertions derived from entity
// kinds, every graph triple as a property assertion, domain/range axioms per
// relation, and promotion of selected properties to value classes (one class
// per value individual, e.g. id.resp_p_22.0).
//
// Individuals are the graph's entities; properties are the graph's relations.

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "kgsentry/graph.hpp"

namespace kgsentry {

struct Axiom {
  enum class Kind { class_assertion, property_assertion, subclass_of, domain, range };
  Kind kind;
  // class_assertion: (a=class, b=individual)
  // property_assertion: (a=property, b=subject, c=object)
  // subclass_of: (a=child, b=parent); domain/range: (a=property, b=class)
  std::string a, b, c;
  friend bool operator==(const Axiom&, const Axiom&) = default;
  friend auto operator<=>(const Axiom&, const Axiom&) = default;
};

std::string to_string(const Axiom& ax);

class Ontology {
 public:
  // Maps every entity to classes by its kind, converts triples to property
  // assertions, emits the static hierarchy plus domain/range axioms.
  // Entities with an unmappable kind raise DataError.
  static Ontology build(std::shared_ptr<const TypedGraph> graph);

  // Standalone ontology from explicit axioms (test oracles, justification
  // replay). Individuals and properties are collected from the axioms.
  static Ontology from_axioms(const std::vector<Axiom>& axioms);

  // For each promoted property p and value individual v occurring as object
  // of p, adds a value class and asserts v into it. Class naming: the value's
  // label when it already carries the property prefix or when p is a
  // bare-name property (apps, variables, operations, networks, elements),
  // otherwise `p_<label>`. Idempotent. Unknown property raises LookupError.
  Ontology promote(const std::set<std::string>& properties) const;

  const TypedGraph& graph() const { return *graph_; }
  std::shared_ptr<const TypedGraph> graph_ptr() const { return graph_; }

  int n_classes() const { return static_cast<int>(class_names_.size()); }
  const std::string& class_name(int c) const { return class_names_.at(c); }
  int class_id(const std::string& name) const;       // -1 when absent
  int require_class(const std::string& name) const;  // LookupError when absent
  const std::vector<std::string>& class_names() const { return class_names_; }

  std::size_t n_individuals() const { return graph_->entity_count(); }

  // Direct assertions only; subclass membership is resolved by the reasoner.
  const std::vector<EntityId>& direct_members(int c) const;
  const std::vector<int>& classes_of(EntityId individual) const;

  const std::vector<int>& direct_subclasses(int c) const;
  // Strict descendants (transitive, excluding c), sorted.
  const std::vector<int>& descendants(int c) const;
  bool is_subclass_of(int c, int ancestor) const;  // reflexive

  // -1 means Thing.
  int domain_of(RelationId r) const { return domain_.at(r); }
  int range_of(RelationId r) const { return range_.at(r); }

  // Triple indices grouped by relation.
  const std::vector<std::uint32_t>& triples_of_relation(RelationId r) const;

  // True when the class was created by property promotion (value classes).
  bool is_promoted(int c) const { return promoted_from_.at(c) >= 0; }
  // The promoting relation, or -1.
  int promoted_from(int c) const { return promoted_from_.at(c); }

  std::vector<Axiom> all_axioms() const;
  void dump_axioms(std::ostream& out) const;

 private:
  Ontology() = default;

  int intern_class(const std::string& name);
  void add_subclass(const std::string& child, const std::string& parent);
  void assert_class(const std::string& cls, EntityId individual, int promoted_rel);
  void finalize();

  std::shared_ptr<const TypedGraph> graph_;
  std::vector<std::string> class_names_;
  std::map<std::string, int> class_ids_;
  std::vector<std::vector<EntityId>> members_;      // per class, sorted
  std::vector<std::vector<int>> classes_of_;        // per individual, sorted
  std::vector<std::pair<int, int>> subclass_pairs_; // (child, parent)
  std::vector<std::vector<int>> direct_subs_;
  std::vector<std::vector<int>> descendants_;
  std::vector<int> promoted_from_;                  // per class, relation id or -1
  std::vector<int> domain_, range_;                 // per relation, class id or -1
  std::vector<std::vector<std::uint32_t>> rel_triples_;
};

// The shipped default: applications, variables, operations, part-of targets
// (networks, internal elements), exposure interfaces, services, ports,
// volume buckets and datatypes.
const std::set<std::string>& default_promoted_properties();

}  // namespace kgsentry
