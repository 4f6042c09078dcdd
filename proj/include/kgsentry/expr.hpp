#pragma once
// Description-logic class expressions: Thing, atomic names, intersections,
// existential restrictions and atomic negation, with a Manchester-syntax
// parser and canonical printer.
//
// Canonical form: intersections are flattened, deduplicated and sorted
// (atomics before negations before existentials); negation applies to atomic
// names only. parse and print are mutually inverse on canonical strings.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace kgsentry {

enum class ExprKind { thing, atomic, negation, existential, intersection };

class ClassExpression;
using ExprPtr = std::shared_ptr<const ClassExpression>;

class ClassExpression {
 public:
  static ExprPtr thing();
  static ExprPtr atomic(std::string name);
  static ExprPtr negation(std::string atomic_name);
  static ExprPtr existential(std::string property, ExprPtr filler);
  // Flattens, deduplicates and sorts; collapses to the single child (or
  // Thing) when fewer than two distinct children remain. Thing children are
  // absorbed.
  static ExprPtr intersection(std::vector<ExprPtr> children);

  ExprKind kind() const { return kind_; }
  // Atomic/negated class name, or the existential property.
  const std::string& name() const { return name_; }
  const ExprPtr& filler() const { return filler_; }
  const std::vector<ExprPtr>& children() const { return children_; }

  // Number of atomic names, properties and negations in the expression.
  int length() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  // Canonical ordering: by kind rank, then structurally.
  static int compare(const ClassExpression& a, const ClassExpression& b);

 private:
  ClassExpression(ExprKind kind, std::string name, ExprPtr filler,
                  std::vector<ExprPtr> children)
      : kind_(kind), name_(std::move(name)), filler_(std::move(filler)),
        children_(std::move(children)) {}

  ExprKind kind_;
  std::string name_;
  ExprPtr filler_;
  std::vector<ExprPtr> children_;
};

bool operator==(const ClassExpression& a, const ClassExpression& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return *a == *b; }

// Canonical Manchester rendering. Existential fillers that are not atomic
// (and not Thing) are parenthesized, as are existential and negation
// children of an intersection.
std::string print_manchester(const ExprPtr& expr);

// Grammar: `Thing`; bare names; `A and B`; `p some C`; `not (A)` / `not A`;
// parentheses group; `and` binds looser than `some`. Names may contain
// letters, digits, dots and underscores. The result is canonicalized.
// Raises ParseError with byte offset; negation of a non-atomic expression is
// an unsupported construct.
ExprPtr parse_manchester(std::string_view text);

}  // namespace kgsentry
