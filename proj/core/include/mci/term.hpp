#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mci/object.hpp"
#include "mci/report.hpp"

namespace mci {

/// Term over the operations of a signature: variables, 0, -, +, unary and
/// binary operations referenced by name.
class Term {
 public:
  enum class Kind { variable, zero, neg, add, unary, binary };

  static Term var(std::string name);
  static Term zero();
  static Term neg(Term t);
  static Term add(Term a, Term b);
  /// a + (-b)
  static Term sub(Term a, Term b);
  static Term unary(std::string op, Term t);
  static Term binary(std::string op, Term a, Term b);

  Kind kind() const { return node_->kind; }
  /// Variable name or operation name.
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }

  std::set<std::string> variables() const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, Element>;

/// Value of `t` in `obj`. Unknown op names raise signature-mismatch; an
/// unassigned variable raises invalid-input.
Element evaluate_term(const Term& t, const Assignment& assignment, const MciObject& obj);

/// Degree behaviour of a variable inside an identity, used to pick the
/// cheapest sound strategy on linear objects.
enum class VariableShape {
  multilinear,  // both sides homogeneous of degree <= 1
  affine,       // every monomial of degree <= 1 (values on 0 and the basis decide)
  quadratic,    // both sides homogeneous of degree 2 (polarization applies)
  general,
};

struct Identity {
  std::string name;
  Term lhs;
  Term rhs;
  std::vector<std::string> variables;
  std::vector<VariableShape> shapes;

  bool multilinear() const;
  std::string to_string() const;
};

/// Builds an identity and derives the per-variable shapes. Every variable
/// of both sides must appear in `variables`.
Identity make_identity(std::string name, Term lhs, Term rhs, std::vector<std::string> variables);

struct IdentityResult {
  Status status = Status::pass;
  /// "exhaustive", "basis", "polarization" or a mix ("basis+exhaustive").
  std::string method;
  std::uint64_t tuples = 0;
  /// {"assignment": {...}, "lhs": ..., "rhs": ...} when the identity fails;
  /// {"reason": ...} when not checked.
  json witness;
};

/// Table objects: every assignment (capped). Linear objects: multilinear
/// variables range over the basis, affine ones over 0 and the basis, quadratic ones over e_i and e_i+e_j
/// (polarization), and the rest over all elements, which requires a finite
/// field; over Q a general variable raises unsupported-check.
IdentityResult check_identity(const MciObject& obj, const Identity& id);

}  // namespace mci
