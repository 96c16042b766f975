#pragma once

#include <string>

#include "mci/constructions.hpp"
#include "mci/morphism.hpp"
#include "mci/report.hpp"
#include "mci/structure.hpp"

namespace mci {

/// A >-> B ->> C.
struct Extension {
  ObjectPtr a, b, c;
  Morphism iota;  // A -> B
  Morphism pi;    // B -> C
};

/// iota and pi are morphisms, iota injective, pi surjective, and
/// image(iota) = kernel(pi).
Report validate_extension(const Extension& ext);

/// I >-> B ->> B/I with the materialized ideal and the quotient map.
Extension extension_from_ideal(const Ideal& I, const std::string& name = {});

/// Kernel singular (otherwise a report whose "precondition.kernel-singular"
/// entry fails and details.error = "precondition-violation"), then
/// image(iota) inside center(B).
Report central_report(const Extension& ext);
bool is_central(const Extension& ext);

/// The induced Sing(B) -> Sing(C), checked against the unit square.
Morphism sing_on_morphism(const Morphism& f, const Singularization& sb, const Singularization& sc);
Morphism sing_on_morphism(const Morphism& f);

/// The comparison A -> B x_{Sing B} Sing A is an isomorphism.
Report trivial_extension_report(const Morphism& f);
bool is_trivial_extension(const Morphism& f);

/// pi1: B x_C B -> B is a trivial extension.
Report jk_central_report(const Extension& ext);
bool is_jk_central(const Extension& ext);

}  // namespace mci
