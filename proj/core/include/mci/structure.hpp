#pragma once

#include <string>
#include <vector>

#include "mci/constructions.hpp"
#include "mci/morphism.hpp"
#include "mci/report.hpp"

namespace mci {

/// z with a+z = z+a, a+w(z) = w(z)+a, a*z = 0 and a*w(z) = 0 for every a,
/// every binary op and every w among the unary ops and the identity.
/// Validated as an ideal.
Ideal center(const ObjectPtr& A);

/// The same conditions with a ranging over the ideal I only.
Ideal centralizer(const ObjectPtr& B, const Ideal& I);

/// Least ideal containing S: closure under +, -, conjugation, the unary ops
/// and two-sided stars with B.
Ideal ideal_generated(const ObjectPtr& B, const std::vector<Element>& S);
Ideal ideal_generated(const Subobject& S);

/// Ideal generated by b+c-b-c, b*c, b+w(c)-b-w(c), c+w(b)-c-w(b), b*w(c) and
/// c*w(b) for b in I, c in J.
Ideal commutator_object(const ObjectPtr& A, const Ideal& I, const Ideal& J);

/// [A,A]: ideal generated by x+y-x-y, x+w(y)-x-w(y), x*y and x*w(y).
Ideal commutator(const ObjectPtr& A);

/// Generators of [A,A] as listed above (all pairs for tables, basis pairs for
/// linear objects).
std::vector<Element> commutator_generators(const MciObject& A);

struct Singularization {
  ObjectPtr object;
  Morphism unit;  // A -> A/[A,A]
};
Singularization singularization(const ObjectPtr& A, const std::string& name = {});

/// center(A) = A, cross-checked against [A,A] = 0; a disagreement raises an
/// internal error.
bool is_singular(const ObjectPtr& A);
Report singular_report(const ObjectPtr& A);

/// Every ideal of A, by closure over generating sets. Tables up to
/// `max_size` elements, linear objects over F_p with p^dim <= max_size.
std::vector<Ideal> enumerate_ideals(const ObjectPtr& A, std::size_t max_size = 729);

}  // namespace mci
