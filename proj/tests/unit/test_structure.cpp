#include <algorithm>
#include <random>

#include "doctest.h"
#include "mci/corpus.hpp"
#include "mci/structure.hpp"
#include "mci/validation.hpp"
#include "support.hpp"

using namespace mci;

namespace {

const Field F3 = Field::prime(3);

Subobject span(const ObjectPtr& obj, std::initializer_list<std::size_t> basis) {
  std::vector<Element> v;
  for (auto i : basis) v.push_back(obj->linear().basis_vector(i - 1));
  return Subobject::from_elements(obj, v);
}

Subobject labels(const ObjectPtr& g, std::initializer_list<const char*> ls) {
  std::vector<std::uint32_t> ids;
  const auto& all = g->table().labels;
  for (const char* l : ls) ids.push_back(static_cast<std::uint32_t>(std::find(all.begin(), all.end(), l) - all.begin()));
  return Subobject::from_ids(g, ids);
}

Ideal whole(const ObjectPtr& A) { return Ideal::make(Subobject::whole(A)); }

std::vector<std::pair<std::string, ObjectPtr>> small_objects() {
  std::vector<std::pair<std::string, ObjectPtr>> out;
  for (auto& [n, o] : corpus::objects())
    if (o->is_table() && o->extent() <= 24) out.emplace_back(n, o);
  for (auto& [n, o] : support::f3_objects())
    if (o->extent() <= 4) out.emplace_back(n, o);
  return out;
}

}  // namespace

TEST_CASE("center and commutator desk values") {
  const ObjectPtr h = corpus::heis3(), s = corpus::sol2(), l = corpus::leib2(), d = corpus::dial1();
  CHECK(center(h).sub() == span(h, {3}));
  CHECK(commutator(h).sub() == span(h, {3}));
  CHECK(center(s).is_zero());
  CHECK(commutator(s).sub() == span(s, {2}));
  CHECK(center(l).sub() == span(l, {2}));
  CHECK(commutator(l).sub() == span(l, {2}));
  CHECK(center(d).sub() == span(d, {2}));
  CHECK(commutator(d).sub() == span(d, {2}));
  CHECK(center(corpus::dual2()).is_zero());
  CHECK(commutator(corpus::dual2()).is_whole());
  CHECK(center(corpus::tri2()).is_zero());
  CHECK(commutator(corpus::tri2()).is_whole());
  CHECK(center(corpus::ab2()).is_whole());
  CHECK(commutator(corpus::ab2()).is_zero());

  const ObjectPtr g = corpus::s3();
  CHECK(center(g).is_zero());
  CHECK(commutator(g).sub() == labels(g, {"e", "(123)", "(132)"}));
  CHECK(center(corpus::d4()).extent() == 2);
  CHECK(commutator(corpus::d4()).extent() == 2);
  CHECK(center(corpus::d4()).sub() == commutator(corpus::d4()).sub());
}

TEST_CASE("center of objects with unary operations") {
  const ObjectPtr t = corpus::s3_sign_cat1().with_omegas();
  CHECK(center(t).is_zero());
  CHECK(commutator(t).extent() == 3);
  // (0, B, 0): the cat1 object is B itself, so nothing changes
  const ObjectPtr z = functor_C(corpus::zero_source_xmod(corpus::heis3())).with_omegas();
  CHECK(center(z).extent() == 1);
  // C(xm-id) for heis3: z = (c1, c0) must also commute with omega(z)
  const ObjectPtr c = functor_C(corpus::xm_id()).with_omegas();
  CHECK(center(c).extent() == 2);
}

TEST_CASE("centralizers") {
  const ObjectPtr h = corpus::heis3(), s = corpus::sol2();
  CHECK(centralizer(h, Ideal::make(span(h, {3}))).is_whole());
  CHECK(centralizer(h, whole(h)) == center(h));
  CHECK(centralizer(s, Ideal::make(span(s, {2}))).sub() == span(s, {2}));
  const ObjectPtr g = corpus::s3();
  CHECK(centralizer(g, Ideal::make(labels(g, {"e", "(123)", "(132)"}))).sub() == labels(g, {"e", "(123)", "(132)"}));
  CHECK(centralizer(g, Ideal::make(Subobject::zero(g))).is_whole());
}

TEST_CASE("generated ideals") {
  const ObjectPtr h = corpus::heis3(), s = corpus::sol2();
  CHECK(ideal_generated(h, {h->linear().basis_vector(0)}).sub() == span(h, {1, 3}));
  CHECK(ideal_generated(h, {h->linear().basis_vector(2)}).sub() == span(h, {3}));
  CHECK(ideal_generated(s, {s->linear().basis_vector(0)}).is_whole());
  CHECK(ideal_generated(h, {}).is_zero());
  const ObjectPtr g = corpus::s3();
  CHECK(ideal_generated(labels(g, {"(12)"})).is_whole());
  CHECK(ideal_generated(labels(g, {"(123)"})).sub() == labels(g, {"e", "(123)", "(132)"}));
}

TEST_CASE("generated ideals are extensive, monotone and idempotent") {
  std::mt19937 rng(5);
  for (const auto& [name, A] : small_objects()) {
    CAPTURE(name);
    std::vector<Element> pool = A->is_table() ? std::vector<Element>{} : A->spanning_elements();
    if (A->is_table())
      for (std::uint32_t i = 0; i < A->extent(); ++i) pool.push_back(i);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Element> S, T;
      for (const auto& e : pool) {
        if (rng() % 3 == 0) S.push_back(e);
        if (rng() % 2 == 0) T.push_back(e);
      }
      for (const auto& e : S) T.push_back(e);
      Ideal is = ideal_generated(A, S), it = ideal_generated(A, T);
      for (const auto& e : S) CHECK(is.contains(e));
      CHECK(it.sub().contains(is.sub()));
      CHECK(ideal_generated(A, is.sub().spanning_elements()) == is);
      CHECK_NOTHROW(Ideal::make(is.sub()));
    }
  }
}

TEST_CASE("commutator objects") {
  const ObjectPtr h = corpus::heis3(), s = corpus::sol2();
  CHECK(commutator_object(h, whole(h), Ideal::make(span(h, {3}))).is_zero());
  CHECK(commutator_object(h, whole(h), whole(h)) == commutator(h));
  CHECK(commutator_object(s, whole(s), Ideal::make(span(s, {2}))).sub() == span(s, {2}));
  CHECK(commutator_object(s, Ideal::make(span(s, {2})), Ideal::make(span(s, {2}))).is_zero());
  for (const auto& [name, A] : small_objects()) {
    CAPTURE(name);
    CHECK(commutator_object(A, whole(A), center(A)).is_zero());
    CHECK(commutator_object(A, whole(A), whole(A)) == commutator(A));
  }
}

TEST_CASE("singularization") {
  Singularization h = singularization(corpus::heis3());
  CHECK(h.object->extent() == 2);
  CHECK(is_singular(h.object));
  CHECK(validate_morphism(h.unit).passed());
  CHECK(is_surjective(h.unit));
  CHECK(kernel(h.unit) == commutator(corpus::heis3()));
  Singularization d = singularization(corpus::dial1());
  CHECK(d.object->extent() == 1);
  for (const auto& op : d.object->linear().products)
    for (const auto& v : op) CHECK(is_zero(v));
  Singularization g = singularization(corpus::s3());
  CHECK(g.object->extent() == 2);
  CHECK(is_singular(g.object));
}

TEST_CASE("singular objects") {
  CHECK(is_singular(corpus::z4_cat1().with_omegas()));
  CHECK(is_singular(corpus::ab2()));
  CHECK(is_singular(corpus::z4()));
  CHECK_FALSE(is_singular(corpus::heis3()));
  CHECK_FALSE(is_singular(corpus::s3()));
  CHECK_FALSE(is_singular(corpus::dual2()));
  CHECK(singular_report(corpus::heis3()).failed());
  CHECK(singular_report(corpus::ab1()).passed());
  for (const auto& [name, A] : small_objects()) {
    CAPTURE(name);
    CHECK(is_singular(A) == commutator(A).is_zero());
    CHECK(is_singular(A) == center(A).is_whole());
  }
}

TEST_CASE("[A,A] is the least ideal with a singular quotient") {
  for (const auto& [name, A] : small_objects()) {
    CAPTURE(name);
    const Ideal c = commutator(A);
    const auto ideals = enumerate_ideals(A);
    CHECK(std::find(ideals.begin(), ideals.end(), c) != ideals.end());
    CHECK(std::find(ideals.begin(), ideals.end(), center(A)) != ideals.end());
    for (const auto& I : ideals) {
      const bool singular = is_singular(quotient(A, I).object);
      CHECK(singular == I.sub().contains(c.sub()));
    }
  }
}

TEST_CASE("ideal enumeration on small examples") {
  CHECK(enumerate_ideals(corpus::s3()).size() == 3);
  CHECK(enumerate_ideals(corpus::z4()).size() == 3);
  // 0, span(e3), the four planes through e3, and the whole
  CHECK(enumerate_ideals(corpus::heis3(F3)).size() == 7);
  CHECK(enumerate_ideals(corpus::ab2(F3)).size() == 6);
}
