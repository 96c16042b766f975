#include <algorithm>
#include <map>

#include "doctest.h"
#include "mci/corpus.hpp"
#include "mci/validation.hpp"
#include "support.hpp"

using namespace mci;

namespace {

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

std::vector<std::pair<std::string, PreCrossedModule>> all_xmods() {
  auto out = corpus::xmods();
  for (auto& [n, x] : support::f3_xmods()) out.emplace_back(n, x);
  return out;
}

HuqCandidate candidate(const PreCrossedModule& x, std::size_t idx) {
  SubXmod h = sub_xmod(x, span(x.c1, {idx}), span(x.c0, {idx}));
  return {h.xmod, h.inc1, h.inc0};
}

}  // namespace

TEST_CASE("center and commutator desk values") {
  {
    PreCrossedModule x = corpus::xm_id();
    XmodCenter z = xmod_center(x);
    CHECK(z.z1 == span(x.c1, {3}));
    CHECK(z.z0 == span(x.c0, {3}));
    XmodCommutator k = xmod_commutator(x);
    CHECK(k.k1 == span(x.c1, {3}));
    CHECK(k.k0 == span(x.c0, {3}));
  }
  {
    PreCrossedModule x = corpus::xm_inc();
    XmodCenter z = xmod_center(x);
    CHECK(z.z1.is_whole());
    CHECK(z.z0 == span(x.c0, {3}));
    XmodCommutator k = xmod_commutator(x);
    CHECK(k.k1.is_zero());
    CHECK(k.k0 == span(x.c0, {3}));
  }
  {
    PreCrossedModule x = corpus::xm_a3_s3();
    XmodCenter z = xmod_center(x);
    CHECK(z.z1.is_zero());
    CHECK(z.z0.is_zero());
    XmodCommutator k = xmod_commutator(x);
    CHECK(k.k1.is_whole());
    CHECK(k.k0 == labels(x.c0, {"e", "(123)", "(132)"}));
  }
  for (const auto& [name, x] : corpus::xmods()) {
    if (name != "xm-v0" && name != "xm-vw") continue;
    CAPTURE(name);
    XmodCenter z = xmod_center(x);
    CHECK(z.z1.is_whole());
    CHECK(z.z0.is_whole());
    XmodCommutator k = xmod_commutator(x);
    CHECK(k.k1.is_zero());
    CHECK(k.k0.is_zero());
    CHECK(is_singular_xmod(x));
  }
}

TEST_CASE("the predicate center matches the transported center under both readings") {
  for (const auto& [name, x] : all_xmods()) {
    CAPTURE(name);
    const bool crossed = check_crossed(x).passed();
    XmodCenter tr = xmod_center_transport(x);
    for (ActionOrder order : {ActionOrder::reversed, ActionOrder::literal}) {
      XmodCenter p = xmod_center_predicate(x, crossed, order);
      CHECK(p.z1 == tr.z1);
      CHECK(p.z0 == tr.z0);
      CHECK(p.report.passed());
    }
    XmodCenter z = xmod_center(x);
    CHECK(z.report.passed());
    for (const char* e : {"transport.z1", "transport.z0", "reading.z1", "reading.z0"}) CHECK(z.report.find(e) != nullptr);
  }
}

TEST_CASE("the center is a crossed ideal") {
  for (const auto& [name, x] : all_xmods()) {
    CAPTURE(name);
    XmodCenter z = xmod_center(x);
    CHECK(check_crossed_ideal(x, z.z1, z.z0).passed());
  }
}

TEST_CASE("singular crossed modules are those with zero commutator") {
  for (const auto& [name, x] : all_xmods()) {
    CAPTURE(name);
    XmodCommutator k = xmod_commutator(x);
    CHECK(k.report.passed());
    CHECK(is_singular_xmod(x) == (k.k1.is_zero() && k.k0.is_zero()));
    XmodCenter z = xmod_center(x);
    CHECK(is_singular_xmod(x) == (z.z1.is_whole() && z.z0.is_whole()));
  }
  CHECK_FALSE(is_singular_xmod(corpus::xm_id()));
  CHECK(singular_xmod_report(corpus::xm_id()).failed());
}

TEST_CASE("reduced generators give the same K1 for crossed modules") {
  for (const auto& [name, x] : all_xmods()) {
    CAPTURE(name);
    XmodCommutator k = xmod_commutator(x);
    const CheckEntry* e = k.report.find("k1.reduced-generators-agree");
    if (check_crossed(x).passed()) {
      REQUIRE(e != nullptr);
      CHECK(e->status == Status::pass);
    }
  }
}

TEST_CASE("Huq centrality of the center") {
  PreCrossedModule x = corpus::xm_id();
  Report r = huq_center_check(x, {candidate(x, 2), candidate(x, 3)});
  CHECK(r.passed());
  CHECK(r.details()["candidates"][0]["central"] == false);
  CHECK(r.details()["candidates"][1]["central"] == true);
  CHECK(r.find("maximality.1.image-in-z1") != nullptr);

  Report e2 = huq_central_report(x, candidate(x, 2));
  CHECK(e2.failed());
  REQUIRE(e2.first_failure() != nullptr);
  CHECK(e2.first_failure()->name.rfind("sigma.", 0) == 0);
  CHECK(huq_central_report(x, candidate(x, 3)).passed());

  for (const auto& [name, y] : all_xmods()) {
    CAPTURE(name);
    CHECK(huq_center_check(y).passed());
  }
}

TEST_CASE("central extensions of crossed modules") {
  const std::map<std::string, bool> expected{{"xext-heis3-center", true},
                                             {"xext-heis3-e2e3", false},
                                             {"xext-abelian", true},
                                             {"xext-heis3-center-F3", true},
                                             {"xext-inc-center", true}};
  for (const auto& [name, e] : corpus::xmod_extensions()) {
    CAPTURE(name);
    Report r = xmod_central_extension_check(e);
    CHECK(r.find("precondition.kernel-singular")->status == Status::pass);
    CHECK(r.passed() == expected.at(name));
    CHECK(check_crossed(e.a).passed());
    CHECK(check_crossed(e.c).passed());
  }
}

TEST_CASE("sub, quotient and product crossed modules") {
  PreCrossedModule x = corpus::xm_id();
  SubXmod s = sub_xmod(x, span(x.c1, {2, 3}), span(x.c0, {2, 3}));
  CHECK(check_crossed(s.xmod).passed());
  CHECK(check_xmod_morphism(s.xmod, x, s.inc1, s.inc0).passed());

  CrossedIdeal k = make_crossed_ideal(x, span(x.c1, {3}), span(x.c0, {3}));
  QuotientXmod q = quotient_xmod(x, k);
  CHECK(q.xmod.c1->extent() == 2);
  CHECK(check_crossed(q.xmod).passed());
  CHECK(is_singular_xmod(q.xmod));
  CHECK(check_xmod_morphism(x, q.xmod, q.pi1, q.pi0).passed());

  PreCrossedModule y = corpus::xm_inc();
  ProductXmod p = product_xmod(x, y);
  CHECK(p.xmod.c1->extent() == 4);
  CHECK(p.xmod.c0->extent() == 6);
  CHECK(check_crossed(p.xmod).passed());
  CHECK(check_xmod_morphism(p.xmod, x, p.p1_1, p.p1_0).passed());
  CHECK(check_xmod_morphism(y, p.xmod, p.i2_1, p.i2_0).passed());

}
