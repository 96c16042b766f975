#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mci/constructions.hpp"
#include "mci/morphism.hpp"
#include "mci/report.hpp"
#include "mci/varieties.hpp"

namespace mci {

/// Action of B (acting) on A (acted): a dot action b.a and, per binary op,
/// the maps b*a (left data, B x A -> A) and a*b (right data, A x B -> A).
/// Table layout: dot[b * |A| + a], left[op][b * |A| + a], right[op][a * |B| + b].
/// Linear layout (basis f_i of B, e_j of A): left_lin[op][i * dimA + j] is
/// f_i * e_j and right_lin[op][j * dimB + i] is e_j * f_i, both in A
/// coordinates. The linear dot action is the trivial one.
struct ActionData {
  ObjectPtr acting;
  ObjectPtr acted;
  std::vector<std::uint32_t> dot;
  std::vector<std::vector<std::uint32_t>> left, right;
  std::vector<std::vector<Vector>> left_lin, right_lin;

  bool is_table() const { return acted->is_table(); }

  /// Zero star maps and the trivial dot action.
  static ActionData trivial(ObjectPtr acting, ObjectPtr acted);

  std::uint32_t dot_id(std::uint32_t b, std::uint32_t a) const { return dot[b * acted->extent() + a]; }
  std::uint32_t left_id(std::size_t op, std::uint32_t b, std::uint32_t a) const {
    return left[op][b * acted->extent() + a];
  }
  std::uint32_t right_id(std::size_t op, std::uint32_t a, std::uint32_t b) const {
    return right[op][a * acting->extent() + b];
  }
  /// Bilinear extension of the basis data.
  Vector left_vec(std::size_t op, const Vector& b, const Vector& a) const;
  Vector right_vec(std::size_t op, const Vector& a, const Vector& b) const;

  Element act_dot(const Element& b, const Element& a) const;
  Element act_left(std::size_t op, const Element& b, const Element& a) const;
  Element act_right(std::size_t op, const Element& a, const Element& b) const;

  /// Rewrites the data of derived partner ops from their primaries:
  /// left[op^o](b, a) = right[op](a, b) and right[op^o](a, b) = left[op](b, a).
  void complete_partners();
};

using DotFn = std::function<Element(const Element& b, const Element& a)>;
using StarFn = std::function<Element(std::size_t op, const Element& x, const Element& y)>;
/// Action data from element functions: left(op, b, a) = b*a and
/// right(op, a, b) = a*b, evaluated on all pairs (table) or basis pairs
/// (linear, where `dot` is not used).
ActionData tabulate_action(ObjectPtr acting, ObjectPtr acted, const DotFn& dot, const StarFn& left,
                           const StarFn& right);

/// Shapes, ranges and swap coherence of the action data.
Report validate_action(const ActionData& act);

struct Semidirect {
  ObjectPtr object;
  Morphism inject;   // a -> (a, 0)
  Morphism section;  // b -> (0, b)
  Morphism project;  // (a, b) -> b
};

/// Carrier A x B with (a',b')+(a,b) = (a' + b'.a, b'+b), omega(a,b) =
/// (omega a, omega b) and (a',b')*(a,b) = (a'*a + a'*b + b'*a, b'*b). Table ids
/// (a, b) -> a + |A| * b; linear basis A's then B's. Tagged with A's variety.
Semidirect build_semidirect(const ActionData& act, const std::string& name = {});

/// Where the semidirect criterion is evaluated: in the variety of A (the
/// semidirect must satisfy its identities) or in the ambient category of
/// groups with operations (the semidirect must only be structurally valid).
enum class Ambient { variety, groups_with_operations };

/// Semidirect criterion: the semidirect product lies in the ambient category.
Report is_derived_action(const ActionData& act, Ambient ambient = Ambient::variety,
                         LeibnizConvention conv = LeibnizConvention::right);

/// The twelve conditions, exhaustively. Table objects directly; linear
/// objects over F_p through their table realization, with the conditions on
/// the (trivial) dot action reported as holding by construction. Linear
/// objects over Q raise unsupported-check.
Report check_action_conditions(const ActionData& act);

/// Action induced by a split extension: b.a = s(b)+a-s(b), b*a = s(b)*a,
/// a*b = a*s(b), read back through the injection.
ActionData recover_action(const Morphism& inject, const Morphism& section);

/// Element-wise image of a linear F_p action between table realizations.
ActionData realize_action(const ActionData& act, const TableRealization& acting,
                          const TableRealization& acted);

/// Linear action data over Q reduced mod p between base-changed objects.
ActionData base_change(const ActionData& act, const ObjectPtr& acting, const ObjectPtr& acted);

bool same_action(const ActionData& x, const ActionData& y);

}  // namespace mci
