#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "mci/morphism.hpp"
#include "mci/report.hpp"

namespace mci {

/// Group axioms, conditions (c) and (d), Axiom 1 and swap coherence. Table
/// objects are checked exhaustively under the enumeration cap; for linear
/// objects the backend guarantees everything except swap coherence and the
/// multiplicativity of unary ops, which are checked on the basis.
Report validate_structure(const MciObject& obj);

/// f(0)=0, additivity, and preservation of every unary and binary op.
Report validate_morphism(const Morphism& f);

/// Contains 0 and is closed under +, -, the unary ops and the binary ops.
Report validate_subobject(const Subobject& s);

/// Subobject closure plus normality and two-sided star absorption. Entries
/// for unary closure are named "closed.unary.<op>".
Report validate_ideal(const Subobject& s);

/// True when tuple count n fits under the enumeration cap; otherwise records
/// a not-checked entry in `report`.
bool within_cap(Report& report, const std::string& name, std::uint64_t tuples);

/// {"x": "e1", ...} rendering of an assignment.
json assignment_json(const MciObject& obj,
                     std::initializer_list<std::pair<const char*, Element>> vars);

/// Assignment plus the two sides that differ.
json mismatch_json(const MciObject& obj,
                   std::initializer_list<std::pair<const char*, Element>> vars, const Element& lhs,
                   const Element& rhs);

}  // namespace mci
