#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mci/extensions.hpp"
#include "mci/structure.hpp"
#include "mci/xmodcat1.hpp"

namespace mci {

/// Reading of the clause "c1 . d(z1) = c1" in the precrossed Z1 list:
/// `reversed` evaluates d(z1) . c1 = c1, `literal` reads the left operand
/// as acted on from the right, c1 . g := (-g) . c1.
enum class ActionOrder { reversed, literal };

/// A sub-(pre)crossed module with its inclusion maps.
struct SubXmod {
  PreCrossedModule xmod;
  Morphism inc1, inc0;
};
/// Induced boundary and action on (K1, K0); precondition-violation when
/// d(K1) is not inside K0 or K1 is not stable under the K0 action.
SubXmod sub_xmod(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0,
                 const std::string& name = {});

/// Quotient by a crossed ideal, with the projection pair.
struct QuotientXmod {
  PreCrossedModule xmod;
  Morphism pi1, pi0;
};
QuotientXmod quotient_xmod(const PreCrossedModule& x, const CrossedIdeal& k, const std::string& name = {});

/// Componentwise product crossed module with projections and injections.
struct ProductXmod {
  PreCrossedModule xmod;
  Morphism p1_1, p1_0, p2_1, p2_0;  // projections
  Morphism i1_1, i1_0, i2_1, i2_0;  // injections
};
ProductXmod product_xmod(const PreCrossedModule& x, const PreCrossedModule& y, const std::string& name = {});

struct XmodCenter {
  Subobject z1;  // of C1
  Subobject z0;  // of C0
  Report report;
};
/// Z1, Z0 by the predicate lists (crossed lists when `crossed`, precrossed
/// lists otherwise). The report carries the crossed-ideal validation.
XmodCenter xmod_center_predicate(const PreCrossedModule& x, bool crossed, ActionOrder order = ActionOrder::reversed);
/// Z1 = {z1 | (z1,0) in Z}, Z0 = {z0 | (0,z0) in omega0(Z)} for Z the center of
/// C(X) in the precat1 signature.
XmodCenter xmod_center_transport(const PreCrossedModule& x);
/// The predicate center, with the precrossed/crossed choice made by
/// check_crossed, cross-checked against the transport (entries
/// "transport.z1", "transport.z0") and against the other action-order
/// reading.
XmodCenter xmod_center(const PreCrossedModule& x, ActionOrder order = ActionOrder::reversed);

/// The semidirect-level predicate read literally, including the repeated term,
/// compared with the center of C(X) (informational entries).
Report semidirect_center_literal(const PreCrossedModule& x);

bool is_singular_xmod(const PreCrossedModule& x);
Report singular_xmod_report(const PreCrossedModule& x);

struct XmodCommutator {
  Subobject k1;
  Subobject k0;
  Report report;
};
/// K1 from {x0.x1 - x1, x1+y1-x1-y1, x1*y1, x0*x1}, closed under the C0
/// action; K0 from {x0+y0-x0-y0, x0*y0}. For crossed X the reduced set
/// {x0.x1 - x1, x0*x1} is also closed and must agree.
XmodCommutator xmod_commutator(const PreCrossedModule& x);

/// Ideal of C1 generated by `gens` and closed under the C0 action.
Subobject action_closed_ideal(const PreCrossedModule& x, const std::vector<Element>& gens);

/// (i) alpha(c, z) = c + z is an xmod morphism from X x Z(X) to X and the Huq
/// triangles commute; (ii) for each candidate (mu1, mu0): H -> X, if the
/// analogous sigma is an xmod morphism the images must lie in Z(X).
struct HuqCandidate {
  PreCrossedModule h;
  Morphism mu1, mu0;
};
Report huq_center_check(const PreCrossedModule& x, const std::vector<HuqCandidate>& candidates = {});
/// sigma(c, h) = c + mu(h) for the Huq diagram of (mu1, mu0).
Report huq_central_report(const PreCrossedModule& x, const HuqCandidate& h);

/// A >-> B ->> C componentwise.
struct XmodExtension {
  PreCrossedModule a, b, c;
  Morphism iota1, iota0;
  Morphism pi1, pi0;
};
XmodExtension xmod_extension_from_crossed_ideal(const PreCrossedModule& x, const CrossedIdeal& k,
                                                const std::string& name = {});
/// Validation of both component extensions and the two xmod morphisms; the
/// kernel must be singular (otherwise details.error =
/// "precondition-violation"); then the image of A must be a crossed ideal of
/// Z(B) inside it.
Report xmod_central_extension_check(const XmodExtension& e);

}  // namespace mci
