#include <algorithm>

#include "doctest.h"
#include "mci/corpus.hpp"
#include "mci/errors.hpp"
#include "mci/validation.hpp"
#include "mci/varieties.hpp"

using namespace mci;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

std::uint32_t label_id(const ObjectPtr& g, const std::string& label) {
  const auto& ls = g->table().labels;
  return static_cast<std::uint32_t>(std::find(ls.begin(), ls.end(), label) - ls.begin());
}

bool every_failure_has_witness(const Report& r) {
  for (const auto& e : r.entries())
    if (e.status == Status::fail && e.witness.is_null()) return false;
  return true;
}

}  // namespace

TEST_CASE("signature closure adds derived partners") {
  Signature s = Signature::closed({{"mul", "mul^op"}}, {});
  REQUIRE(s.binary().size() == 2);
  CHECK(s.binary()[1].name == "mul^op");
  CHECK(s.binary()[1].derived);
  CHECK(s.partner(0) == 1);
  CHECK(s.partner(1) == 0);
  CHECK(kind_of([] { Signature({{"a", "missing"}}, {}); }) == ErrorKind::invalid_input);
  CHECK(Signature::closed({{"m", "m"}}, {}).binary().size() == 1);
}

TEST_CASE("corpus objects are structurally valid") {
  for (const auto& [name, obj] : corpus::objects()) {
    CAPTURE(name);
    Report r = validate_structure(*obj);
    CHECK(r.verdict() != Status::fail);
    CHECK(r.verdict() != Status::not_checked);
  }
}

TEST_CASE("corrupting any single table cell breaks a named check") {
  std::size_t corrupted = 0;
  for (const auto& [name, obj] : corpus::objects()) {
    if (!obj->is_table()) continue;
    const TableObject& base = obj->table();
    auto probe = [&](auto mutate, const std::string& what) {
      TableObject t = base;
      mutate(t);
      ObjectPtr bad = make_object(std::move(t), obj->variety(), name + "~");
      Report r = validate_structure(*bad);
      CAPTURE(name);
      CAPTURE(what);
      CHECK(r.failed());
      CHECK(every_failure_has_witness(r));
      ++corrupted;
    };
    for (std::size_t c = 0; c < base.add_table.size(); ++c)
      probe([&](TableObject& t) { t.add_table[c] = (t.add_table[c] + 1) % t.size; }, "add[" + std::to_string(c) + "]");
    for (std::size_t u = 0; u < base.unary.size(); ++u)
      for (std::size_t c = 0; c < base.unary[u].size(); ++c)
        probe([&](TableObject& t) { t.unary[u][c] = (t.unary[u][c] + 1) % t.size; },
              "unary" + std::to_string(u) + "[" + std::to_string(c) + "]");
  }
  CHECK(corrupted > 200);
}

TEST_CASE("a capped enumeration is not-checked, never pass") {
  ScopedEnumerationCap cap(10);
  Report r = validate_structure(*corpus::s3());
  CHECK(r.verdict() == Status::not_checked);
  CHECK_FALSE(r.passed());
}

TEST_CASE("report verdict rules") {
  Report r("x");
  r.add_pass("a");
  r.add_by_construction("b");
  CHECK(r.verdict() == Status::pass);
  r.add_not_checked("c", "too big");
  CHECK(r.verdict() == Status::not_checked);
  r.add_fail("d", json{{"w", 1}});
  CHECK(r.verdict() == Status::fail);
  CHECK(r.first_failure()->name == "d");
  Report only;
  only.add_by_construction("x");
  CHECK(only.verdict() == Status::pass);
  Report m("m");
  m.merge(r, "inner.");
  CHECK(m.find("inner.d") != nullptr);
  CHECK(r.to_json(false).contains("timing_ms") == false);
}

TEST_CASE("morphism validation") {
  const ObjectPtr h = corpus::heis3();
  CHECK(validate_morphism(identity_morphism(h)).passed());
  CHECK(validate_morphism(zero_morphism(h, h)).passed());
  Matrix m = Matrix::identity(Field::rationals(), 3);
  m(0, 0) = Scalar::from_int(Field::rationals(), 2);
  Report r = validate_morphism(Morphism(h, h, m));
  CHECK(r.failed());
  CHECK(r.first_failure()->name == "preserves.bracket");

  const ObjectPtr z4 = corpus::z4();
  CHECK(validate_morphism(Morphism(z4, z4, {0, 3, 2, 1})).passed());
  CHECK(validate_morphism(Morphism(z4, z4, {0, 2, 0, 2})).passed());
  CHECK(validate_morphism(Morphism(z4, z4, {0, 1, 1, 3})).failed());
}

TEST_CASE("subobjects and ideals of S3") {
  const ObjectPtr s3 = corpus::s3();
  const auto e = label_id(s3, "e"), t = label_id(s3, "(12)"), r = label_id(s3, "(123)"), r2 = label_id(s3, "(132)");
  Subobject h = Subobject::from_ids(s3, {e, t});
  CHECK(validate_subobject(h).passed());
  Report ideal = validate_ideal(h);
  CHECK(ideal.failed());
  CHECK(ideal.find("normal")->status == Status::fail);
  CHECK(kind_of([&] { Ideal::make(h); }) == ErrorKind::ideal_invalid);
  Ideal a3 = Ideal::make(Subobject::from_ids(s3, {e, r, r2}));
  CHECK(a3.extent() == 3);
  CHECK(validate_subobject(Subobject::from_ids(s3, {e, r})).failed());
}

TEST_CASE("an ideal missing only unary closure gets its own error") {
  const ObjectPtr c = functor_C(corpus::xm_inc()).with_omegas();
  // (e3, 0) is central in the semidirect but omega1 moves it to (0, e3)
  Vector f = c->linear().basis_vector(0);
  CHECK(kind_of([&] { Ideal::make(Subobject::from_elements(c, {f})); }) == ErrorKind::ideal_not_unary_stable);
  Report r = validate_ideal(Subobject::from_elements(c, {f}));
  CHECK(r.find("closed.unary.omega1")->status == Status::fail);
}

TEST_CASE("linear subobject membership") {
  const ObjectPtr h = corpus::heis3();
  const auto& l = h->linear();
  Subobject s = Subobject::from_elements(h, {l.basis_vector(1), l.basis_vector(2)});
  CHECK(s.extent() == 2);
  CHECK(s.contains(Element(l.basis_vector(2))));
  CHECK_FALSE(s.contains(Element(l.basis_vector(0))));
  CHECK(validate_subobject(s).passed());
  CHECK(validate_ideal(s).passed());
  CHECK(validate_ideal(Subobject::from_elements(h, {l.basis_vector(0)})).failed());
  CHECK(Subobject::whole(h).is_whole());
  CHECK(Subobject::zero(h).is_zero());
  CHECK(s.intersect(Subobject::from_elements(h, {l.basis_vector(0), l.basis_vector(1)})).extent() == 1);
}

TEST_CASE("elements and describe") {
  const ObjectPtr h = corpus::heis3();
  const auto& l = h->linear();
  const Element x = l.basis_vector(0), y = l.basis_vector(1);
  CHECK(h->describe(h->star(0, x, y)) == "e3");
  CHECK(h->describe(h->star(0, y, x)) == "-e3");
  CHECK(h->is_zero(h->add(x, h->neg(x))));
  CHECK(h->enumerable() == false);
  CHECK(corpus::heis3(Field::prime(3))->enumerable());
  CHECK(corpus::s3()->describe(std::uint32_t{0}) == "e");
}
