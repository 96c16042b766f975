#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mci/extensions.hpp"
#include "mci/xmodcat1.hpp"
#include "mci/xmodinv.hpp"

// Bundled example objects. Basis e1..en; heis3 is [e1,e2] = e3, sol2 is
// [e1,e2] = e2, leib2 is [e1,e1] = e2, dial1 is t -| t = t |- t = t^2.
namespace mci::corpus {

ObjectPtr ab1(const Field& f = Field::rationals());
ObjectPtr ab2(const Field& f = Field::rationals());
ObjectPtr sol2(const Field& f = Field::rationals());
ObjectPtr heis3(const Field& f = Field::rationals());
ObjectPtr leib2(const Field& f = Field::rationals());
/// Non-Lie Leibniz algebra: [e1,e1] = e3, [e2,e1] = e3 (3-dim).
ObjectPtr leib3(const Field& f = Field::rationals());
ObjectPtr dial1(const Field& f = Field::rationals());
/// t, t^2 with t.t = t^2 (associative, commutative).
ObjectPtr nil2(const Field& f = Field::rationals());
/// Dual numbers 1, t with t.t = 0, tagged comm_assoc.
ObjectPtr dual2(const Field& f = Field::rationals());
/// Upper triangular 2x2 matrices, basis e11, e12, e22.
ObjectPtr tri2(const Field& f = Field::rationals());
/// tri2 as a dialgebra with -| = |- = matrix product.
ObjectPtr tri2_dialgebra(const Field& f = Field::rationals());

ObjectPtr s3();
ObjectPtr z4();
ObjectPtr d4();
ObjectPtr z2();

Cat1Object s3_cat1();       // (S3, id, id)
Cat1Object s3_sign_cat1();  // retraction onto {e, (12)}
Cat1Object z4_cat1();       // (Z4, id, id)

PreCrossedModule identity_xmod(const ObjectPtr& B);
/// (0, B, 0).
PreCrossedModule zero_source_xmod(const ObjectPtr& B);
/// (V, W, 0) with the trivial action.
PreCrossedModule trivial_xmod(const ObjectPtr& V, const ObjectPtr& W);

PreCrossedModule xm_inc(const Field& f = Field::rationals());  // span(e3) -> heis3
PreCrossedModule xm_id(const Field& f = Field::rationals());   // heis3 -> heis3
/// (heis3, heis3, 0) with the bracket action: precrossed, not crossed.
PreCrossedModule xm_precrossed(const Field& f = Field::rationals());
PreCrossedModule xm_a3_s3();

/// A = span(e2,e3), B = span(e1) of heis3 with the restricted bracket.
struct HeisDecomposition {
  ObjectPtr a, b;
  ActionData action;
};
HeisDecomposition heis3_decomposition(const Field& f = Field::rationals());

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

Named<ObjectPtr> objects();
Named<PreCrossedModule> xmods();
Named<Cat1Object> cat1s();
Named<Extension> extensions();
Named<XmodExtension> xmod_extensions();

/// Every corpus document, keyed by file name.
std::map<std::string, json> documents();

}  // namespace mci::corpus
