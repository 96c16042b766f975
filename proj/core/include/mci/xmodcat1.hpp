#pragma once

#include <string>

#include "mci/actions.hpp"
#include "mci/constructions.hpp"
#include "mci/morphism.hpp"
#include "mci/report.hpp"

namespace mci {

/// (C1, C0, d) with an action of C0 on C1.
struct PreCrossedModule {
  ObjectPtr c1;
  ObjectPtr c0;
  Morphism boundary;  // C1 -> C0
  ActionData action;  // acting C0, acted C1
};

/// A precrossed module that has passed check_crossed.
class CrossedModule {
 public:
  /// Raises precondition-violation (with the failing axiom) otherwise.
  static CrossedModule make(PreCrossedModule x, LeibnizConvention conv = LeibnizConvention::right);
  const PreCrossedModule& data() const { return x_; }
  operator const PreCrossedModule&() const { return x_; }

 private:
  explicit CrossedModule(PreCrossedModule x) : x_(std::move(x)) {}
  PreCrossedModule x_;
};

/// (I, B, inclusion) for an ideal I of B, with conjugation as dot action and
/// the stars of B restricted to I.
PreCrossedModule xmod_from_ideal(const Ideal& I, const std::string& name = {});

/// Components, boundary and action reduced mod p (linear over Q).
PreCrossedModule base_change(const PreCrossedModule& x, std::uint32_t p);

/// The element tables of a linear crossed module over F_p.
struct XmodRealization {
  PreCrossedModule table;
  TableRealization r1, r0;
};
XmodRealization realize_xmod(const PreCrossedModule& x);

/// Action derived, d a morphism, axioms a) and b).
Report check_precrossed(const PreCrossedModule& x, LeibnizConvention conv = LeibnizConvention::right);
/// check_precrossed plus the Peiffer axioms c) and d).
Report check_crossed(const PreCrossedModule& x, LeibnizConvention conv = LeibnizConvention::right);

/// (mu1, mu0): X -> Y.
Report check_xmod_morphism(const PreCrossedModule& x, const PreCrossedModule& y, const Morphism& mu1,
                           const Morphism& mu0);

/// Subobjects (K1 of C1, K0 of C0) forming a crossed ideal.
struct CrossedIdeal {
  Ideal k1;
  Ideal k0;
};
/// Ideal checks on both components, d(K1) in K0, and the four action
/// absorption conditions.
Report check_crossed_ideal(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0);
/// Validates; raises ideal-invalid when check_crossed_ideal fails.
CrossedIdeal make_crossed_ideal(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0);

/// (C, omega0, omega1) with C in a base variety.
struct Cat1Object {
  ObjectPtr object;
  Morphism omega0;
  Morphism omega1;

  /// C with omega0 and omega1 adjoined as unary ops, tagged precat1:<base>.
  ObjectPtr with_omegas() const;
  /// Inverse of with_omegas: splits the unary ops off a precat1/cat1 object.
  static Cat1Object from_tagged(const ObjectPtr& tagged);
};

/// Membership of with_omegas() in precat1:<base>, and with require_cat1 the
/// kernel condition as well.
Report check_cat1(const Cat1Object& t, bool require_cat1 = true,
                  LeibnizConvention conv = LeibnizConvention::right);

/// C1 x| C0 with omega0(c1,c0) = (0,c0) and omega1(c1,c0) = (0, d(c1)+c0).
/// Raises invalid-input when the action data is malformed.
Cat1Object functor_C(const PreCrossedModule& x);

/// ker omega0 <- Im omega0 with d = omega1 restricted, conjugation as dot
/// action and stars computed inside C.
struct FunctorXResult {
  PreCrossedModule xmod;
  Morphism c1_inclusion;  // ker omega0 -> C
  Morphism c0_inclusion;  // Im omega0 -> C
};
FunctorXResult functor_X_full(const Cat1Object& t);
PreCrossedModule functor_X(const Cat1Object& t);

/// X -> X(C(X)) via c1 -> (c1,0) and c0 -> (0,c0): both components must be
/// isomorphisms and the pair an xmod morphism.
Report roundtrip_check(const PreCrossedModule& x);
/// T -> C(X(T)) via c -> (c - omega0(c), omega0(c)): a cat1 morphism and an
/// isomorphism.
Report roundtrip_check_cat1(const Cat1Object& t);

/// Isomorphism-search variant of roundtrip_check_cat1 for tables of at most
/// 24 elements.
Report roundtrip_search_cat1(const Cat1Object& t);

}  // namespace mci
