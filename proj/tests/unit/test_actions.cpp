#include <random>

#include "doctest.h"
#include "mci/corpus.hpp"
#include "mci/errors.hpp"
#include "mci/validation.hpp"
#include "mci/varieties.hpp"
#include "support.hpp"

using namespace mci;

namespace {

const Field F3 = Field::prime(3);

bool same_element(const MciObject& obj, const Element& a, const Element& b) {
  return obj.is_table() ? as_id(a) == as_id(b) : as_vector(a) == as_vector(b);
}

}  // namespace

TEST_CASE("trivial action gives the direct product") {
  const ObjectPtr a = corpus::heis3(), b = corpus::sol2();
  Semidirect sd = build_semidirect(ActionData::trivial(b, a));
  const MciObject& s = *sd.object;
  REQUIRE(s.extent() == 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 5; ++j) {
      CHECK(is_zero(s.linear().product(0, i, j)));
      CHECK(is_zero(s.linear().product(0, j, i)));
    }
  Product p = direct_product(a, b);
  CHECK(s.linear().products == p.object->linear().products);
  CHECK(is_derived_action(ActionData::trivial(b, a)).passed());
}

TEST_CASE("heis3 decomposition: semidirect is heis3 via (a,b) -> a+b") {
  auto d = corpus::heis3_decomposition();
  CHECK(validate_action(d.action).passed());
  Semidirect sd = build_semidirect(d.action);
  const ObjectPtr h = corpus::heis3();
  const auto& l = h->linear();
  Matrix m = Matrix::from_rows(Field::rationals(), 3, {l.basis_vector(1), l.basis_vector(2), l.basis_vector(0)});
  Morphism f(sd.object, h, m);
  CHECK(validate_morphism(f).passed());
  CHECK(is_isomorphism(f));
  Report r = is_derived_action(d.action);
  CHECK(r.passed());
  CHECK(r.details()["ambient"] == "variety");
}

TEST_CASE("flipping one star constant of the heis3 action breaks derivedness") {
  auto d = corpus::heis3_decomposition();
  ActionData bad = d.action;
  Vector& c = bad.left_lin[0][0 * 2 + 0];  // e1 * e2 in A coordinates
  REQUIRE(c[1].is_one());
  c[1] = -c[1];
  bad.complete_partners();
  Report r = is_derived_action(bad);
  CHECK(r.failed());
  const CheckEntry* e = r.first_failure();
  REQUIRE(e != nullptr);
  CHECK(e->name == "semidirect.identity.alternating");
  CHECK(e->witness.contains("assignment"));
}

TEST_CASE("dialgebra semidirect follows the twisted product formula") {
  const ObjectPtr d = corpus::dial1();
  ActionData act = corpus::identity_xmod(d).action;
  Semidirect sd = build_semidirect(act);
  const MciObject& s = *sd.object;
  const MciObject& A = *act.acted;
  const MciObject& B = *act.acting;
  CHECK(check_variety(s).passed());
  for (std::size_t op = 0; op < A.signature().binary().size(); ++op)
    for (const auto& a1 : A.spanning_elements())
      for (const auto& b1 : B.spanning_elements())
        for (const auto& a2 : A.spanning_elements())
          for (const auto& b2 : B.spanning_elements()) {
            const Element x = s.add(sd.inject(a1), sd.section(b1));
            const Element y = s.add(sd.inject(a2), sd.section(b2));
            const Element first = A.add(A.add(A.star(op, a1, a2), act.act_left(op, b1, a2)), act.act_right(op, a1, b2));
            const Element expect = s.add(sd.inject(first), sd.section(B.star(op, b1, b2)));
            CHECK(same_element(s, s.star(op, x, y), expect));
          }
}

TEST_CASE("twelve conditions: trivial action on abelian tables") {
  Report r = check_action_conditions(ActionData::trivial(corpus::z4(), corpus::z2()));
  CHECK(r.passed());
  for (int c = 1; c <= 12; ++c) CHECK(r.find("condition." + std::to_string(c)) != nullptr);
}

TEST_CASE("twelve conditions: heis3 action over F3 agrees with the semidirect test") {
  auto d = corpus::heis3_decomposition(F3);
  Report c = check_action_conditions(d.action);
  CHECK(c.passed());
  CHECK(is_derived_action(d.action).passed());
  CHECK(is_derived_action(d.action, Ambient::groups_with_operations).passed());
  auto dq = corpus::heis3_decomposition();
  ErrorKind k = ErrorKind::internal;
  try {
    check_action_conditions(dq.action);
  } catch (const Error& e) {
    k = e.kind();
  }
  CHECK(k == ErrorKind::unsupported_check);
}

TEST_CASE("a non-homomorphic dot action violates condition 3") {
  ActionData conj = corpus::xm_a3_s3().action;
  ActionData broken = conj;
  // every non-identity element acts by inversion: not multiplicative
  for (std::uint32_t b = 1; b < 6; ++b)
    for (std::uint32_t a = 0; a < 3; ++a) broken.dot[b * 3 + a] = conj.acted->table().neg(a);
  Report r = check_action_conditions(broken);
  const CheckEntry* c3 = r.find("condition.3");
  REQUIRE(c3 != nullptr);
  CHECK(c3->status == Status::fail);
  CHECK(c3->witness.contains("b1"));
  CHECK(c3->witness.contains("b2"));
  CHECK(c3->witness.contains("a"));
  CHECK(is_derived_action(broken, Ambient::groups_with_operations).failed());
  CHECK(check_action_conditions(conj).passed());
}

TEST_CASE("split-extension recovery returns the input action") {
  for (const auto& inst : support::action_instances()) {
    CAPTURE(inst.name);
    if (!is_derived_action(inst.act, Ambient::groups_with_operations).passed()) continue;
    Semidirect sd = build_semidirect(inst.act);
    ActionData back = recover_action(sd.inject, sd.section);
    CHECK(same_action(back, inst.act));
  }
}

TEST_CASE("corpus action instances are derived under both readings") {
  for (const auto& inst : support::action_instances()) {
    CAPTURE(inst.name);
    CHECK(check_action_conditions(inst.act).passed());
    CHECK(is_derived_action(inst.act, Ambient::groups_with_operations).passed());
    CHECK(is_derived_action(inst.act).passed());
  }
}

TEST_CASE("sampled perturbations: conditions agree with the semidirect test") {
  std::mt19937 rng(99);
  for (const auto& inst : support::action_instances()) {
    CAPTURE(inst.name);
    for (int i = 0; i < 10; ++i) {
      ActionData p = support::perturb_action(inst.act, rng);
      const bool conditions = check_action_conditions(p).passed();
      const bool semidirect = is_derived_action(p, Ambient::groups_with_operations).passed();
      CHECK(conditions == semidirect);
    }
  }
}

TEST_CASE("action validation catches malformed data") {
  ActionData act = corpus::xm_a3_s3().action;
  act.dot[7] = 99;
  CHECK(validate_action(act).failed());
  ActionData short_data = corpus::xm_a3_s3().action;
  short_data.dot.pop_back();
  CHECK(validate_action(short_data).failed());
}

TEST_CASE("realized linear actions agree with the linear data") {
  auto d = corpus::heis3_decomposition(F3);
  TableRealization ra = realize_table(d.a), rb = realize_table(d.b);
  ActionData t = realize_action(d.action, rb, ra);
  CHECK(validate_action(t).passed());
  for (std::uint32_t b = 0; b < rb.table->extent(); ++b)
    for (std::uint32_t a = 0; a < ra.table->extent(); ++a)
      CHECK(ra.decode(t.left_id(0, b, a)) == d.action.left_vec(0, rb.decode(b), ra.decode(a)));
  ActionData bc = base_change(corpus::heis3_decomposition().action, d.b, d.a);
  CHECK(same_action(bc, d.action));
}
