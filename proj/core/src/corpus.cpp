#include "mci/corpus.hpp"

#include <algorithm>
#include <array>

#include "mci/errors.hpp"
#include "mci/io.hpp"
#include "mci/structure.hpp"
#include "mci/varieties.hpp"

namespace mci::corpus {

namespace {

using Id = std::uint32_t;

struct Entry {
  std::string op;
  std::size_t i, j, k;  // e_i op e_j gets c * e_k (1-based)
  long num = 1, den = 1;
};

std::string suffix(const Field& f) { return f.is_rational() ? "" : "-" + f.name(); }

ObjectPtr linear(const std::string& name, const std::string& variety, const Field& f, std::size_t dim,
                 const std::vector<Entry>& entries, std::vector<std::string> labels = {}) {
  LinearObject l = LinearObject::zeros(base_signature(VarietyTag::parse(variety).base), f, dim);
  const bool lie = variety == "lie";
  for (const auto& e : entries) {
    const std::size_t op = l.signature.require_binary(e.op);
    const Scalar c = Scalar::from_rational(f, mpq_class(e.num, e.den));
    l.products[op][(e.i - 1) * dim + (e.j - 1)][e.k - 1] += c;
    if (lie) l.products[op][(e.j - 1) * dim + (e.i - 1)][e.k - 1] -= c;
  }
  if (labels.empty())
    for (std::size_t i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  l.basis_labels = std::move(labels);
  l.complete_partners();
  return make_object(std::move(l), variety, name + suffix(f));
}

using Perm = std::vector<int>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(p[c])) {
      seen[c] = true;
      out += std::to_string(c + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

// Permutation group generated by `gens`, composed right to left, with the
// identity as element 0.
ObjectPtr perm_group(const std::string& name, const std::vector<Perm>& gens) {
  const std::size_t n = gens.front().size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> elems{id};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = g[static_cast<std::size_t>(elems[k][i])];
      if (std::find(elems.begin(), elems.end(), q) == elems.end()) elems.push_back(q);
    }
  std::sort(elems.begin() + 1, elems.end(), [](const Perm& a, const Perm& b) {
    std::string la = cycle_label(a), lb = cycle_label(b);
    return la.size() != lb.size() ? la.size() < lb.size() : la < lb;
  });
  TableObject t;
  t.signature = base_signature("group");
  t.size = static_cast<Id>(elems.size());
  t.zero = 0;
  t.add_table.assign(t.size * t.size, 0);
  for (Id a = 0; a < t.size; ++a)
    for (Id b = 0; b < t.size; ++b) {
      Perm q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = elems[a][static_cast<std::size_t>(elems[b][i])];
      t.add_table[a * t.size + b] =
          static_cast<Id>(std::find(elems.begin(), elems.end(), q) - elems.begin());
    }
  for (const auto& e : elems) t.labels.push_back(cycle_label(e));
  t.complete_negation();
  return make_object(std::move(t), "group", name);
}

ObjectPtr cyclic(const std::string& name, Id n) {
  TableObject t;
  t.signature = base_signature("group");
  t.size = n;
  t.zero = 0;
  t.add_table.resize(n * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) t.add_table[a * n + b] = (a + b) % n;
  for (Id a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
  t.complete_negation();
  return make_object(std::move(t), "group", name);
}

Id find_label(const MciObject& g, const std::string& label) {
  const auto& ls = g.table().labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) fail(ErrorKind::internal, "no element " + label);
  return static_cast<Id>(it - ls.begin());
}

Ideal ideal_of(const ObjectPtr& parent, const std::vector<Element>& elems) {
  return Ideal::make(Subobject::from_elements(parent, elems));
}

Ideal ideal_of_basis(const ObjectPtr& parent, std::initializer_list<std::size_t> basis) {
  std::vector<Element> elems;
  for (std::size_t i : basis) elems.push_back(parent->linear().basis_vector(i - 1));
  return ideal_of(parent, elems);
}

ActionData action_in(const Morphism& acting_inc, const Morphism& acted_inc) {
  const MciObject& P = *acted_inc.target();
  Preimage back(acted_inc);
  return tabulate_action(
      acting_inc.source(), acted_inc.source(),
      [&](const Element& b, const Element& a) { return back(P.sub(P.add(acting_inc(b), acted_inc(a)), acting_inc(b))); },
      [&](std::size_t op, const Element& b, const Element& a) { return back(P.star(op, acting_inc(b), acted_inc(a))); },
      [&](std::size_t op, const Element& a, const Element& b) { return back(P.star(op, acted_inc(a), acting_inc(b))); });
}

}  // namespace

ObjectPtr ab1(const Field& f) { return linear("ab1", "lie", f, 1, {}); }
ObjectPtr ab2(const Field& f) { return linear("ab2", "lie", f, 2, {}); }
ObjectPtr sol2(const Field& f) { return linear("sol2", "lie", f, 2, {{ops::bracket, 1, 2, 2}}); }
ObjectPtr heis3(const Field& f) { return linear("heis3", "lie", f, 3, {{ops::bracket, 1, 2, 3}}); }
ObjectPtr leib2(const Field& f) { return linear("leib2", "leibniz", f, 2, {{ops::bracket, 1, 1, 2}}); }
ObjectPtr leib3(const Field& f) {
  return linear("leib3", "leibniz", f, 3, {{ops::bracket, 1, 1, 3}, {ops::bracket, 2, 1, 3}});
}
ObjectPtr dial1(const Field& f) {
  return linear("dial1", "dialgebra", f, 2, {{ops::dashv, 1, 1, 2}, {ops::vdash, 1, 1, 2}}, {"t", "t2"});
}
ObjectPtr nil2(const Field& f) { return linear("nil2", "comm_assoc", f, 2, {{ops::mul, 1, 1, 2}}, {"t", "t2"}); }
ObjectPtr dual2(const Field& f) {
  return linear("dual2", "comm_assoc", f, 2, {{ops::mul, 1, 1, 1}, {ops::mul, 1, 2, 2}, {ops::mul, 2, 1, 2}},
                {"1", "t"});
}

namespace {
std::vector<Entry> tri_products(const std::string& op) {
  // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
  return {{op, 1, 1, 1}, {op, 1, 2, 2}, {op, 2, 3, 2}, {op, 3, 3, 3}};
}
}  // namespace

ObjectPtr tri2(const Field& f) { return linear("tri2", "assoc", f, 3, tri_products(ops::mul), {"e11", "e12", "e22"}); }
ObjectPtr tri2_dialgebra(const Field& f) {
  auto e = tri_products(ops::dashv);
  auto v = tri_products(ops::vdash);
  e.insert(e.end(), v.begin(), v.end());
  return linear("tri2-dialgebra", "dialgebra", f, 3, e, {"e11", "e12", "e22"});
}

ObjectPtr s3() {
  static const ObjectPtr g = perm_group("S3", {{1, 0, 2}, {1, 2, 0}});
  return g;
}
ObjectPtr z4() {
  static const ObjectPtr g = cyclic("Z4", 4);
  return g;
}
ObjectPtr z2() {
  static const ObjectPtr g = cyclic("Z2", 2);
  return g;
}
ObjectPtr d4() {
  static const ObjectPtr g = perm_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}});
  return g;
}

Cat1Object s3_cat1() { return {s3(), identity_morphism(s3()), identity_morphism(s3())}; }

Cat1Object s3_sign_cat1() {
  const ObjectPtr g = s3();
  const Id e = find_label(*g, "e"), t = find_label(*g, "(12)");
  const Ideal a3 = ideal_of(g, {find_label(*g, "e"), find_label(*g, "(123)"), find_label(*g, "(132)")});
  std::vector<Id> map(g->extent());
  for (Id x = 0; x < g->extent(); ++x) map[x] = a3.contains(Element{x}) ? e : t;
  Morphism r(g, g, map);
  return {g, r, r};
}

Cat1Object z4_cat1() { return {z4(), identity_morphism(z4()), identity_morphism(z4())}; }

PreCrossedModule identity_xmod(const ObjectPtr& B) {
  Morphism id = identity_morphism(B);
  return {B, B, id, action_in(id, id)};
}

PreCrossedModule zero_source_xmod(const ObjectPtr& B) {
  Materialized z = materialize(Subobject::zero(B), "0");
  return {z.object, B, zero_morphism(z.object, B), ActionData::trivial(B, z.object)};
}

PreCrossedModule trivial_xmod(const ObjectPtr& V, const ObjectPtr& W) {
  return {V, W, zero_morphism(V, W), ActionData::trivial(W, V)};
}

PreCrossedModule xm_inc(const Field& f) {
  const ObjectPtr h = heis3(f);
  return xmod_from_ideal(ideal_of_basis(h, {3}), "span(e3)" + suffix(f));
}

PreCrossedModule xm_id(const Field& f) { return identity_xmod(heis3(f)); }

PreCrossedModule xm_precrossed(const Field& f) {
  PreCrossedModule x = identity_xmod(heis3(f));
  x.boundary = zero_morphism(x.c1, x.c0);
  return x;
}

PreCrossedModule xm_a3_s3() {
  const ObjectPtr g = s3();
  return xmod_from_ideal(ideal_of(g, {find_label(*g, "e"), find_label(*g, "(123)"), find_label(*g, "(132)")}), "A3");
}

HeisDecomposition heis3_decomposition(const Field& f) {
  const ObjectPtr h = heis3(f);
  const LinearObject& l = h->linear();
  Materialized a = materialize(Subobject::from_elements(h, {l.basis_vector(1), l.basis_vector(2)}), "span(e2,e3)");
  Materialized b = materialize(Subobject::from_elements(h, {l.basis_vector(0)}), "span(e1)");
  return {a.object, b.object, action_in(b.inclusion, a.inclusion)};
}

Named<ObjectPtr> objects() {
  Named<ObjectPtr> out;
  const Field f3 = Field::prime(3);
  for (const Field& f : {Field::rationals(), f3}) {
    for (auto make : {ab1, ab2, sol2, heis3, leib2, leib3, dial1, nil2, dual2, tri2, tri2_dialgebra}) {
      ObjectPtr o = make(f);
      out.emplace_back(o->name(), o);
    }
  }
  for (const auto& g : {s3(), z4(), z2(), d4()}) out.emplace_back(g->name(), g);
  for (const auto& [n, t] : cat1s()) out.emplace_back("precat1-" + n, t.with_omegas());
  return out;
}

Named<PreCrossedModule> xmods() {
  Named<PreCrossedModule> out;
  const Field f3 = Field::prime(3);
  out.emplace_back("xm-inc", xm_inc());
  out.emplace_back("xm-id", xm_id());
  out.emplace_back("xm-zero", zero_source_xmod(heis3()));
  out.emplace_back("xm-precrossed", xm_precrossed());
  out.emplace_back("xm-vw", trivial_xmod(ab2(), ab1()));
  out.emplace_back("xm-v0", trivial_xmod(ab2(), materialize(Subobject::zero(ab2()), "0").object));
  out.emplace_back("xm-sol2-ideal", xmod_from_ideal(ideal_of_basis(sol2(), {2}), "span(e2)"));
  out.emplace_back("xm-leib2-id", identity_xmod(leib2()));
  out.emplace_back("xm-leib3-inc", xmod_from_ideal(ideal_of_basis(leib3(), {3}), "span(e3)"));
  out.emplace_back("xm-dial1-id", identity_xmod(dial1()));
  out.emplace_back("xm-dial1-inc", xmod_from_ideal(ideal_of_basis(dial1(), {2}), "span(t2)"));
  out.emplace_back("xm-a3-s3", xm_a3_s3());
  out.emplace_back("xm-s3-id", identity_xmod(s3()));
  out.emplace_back("xm-z4-zero", trivial_xmod(z4(), z2()));
  out.emplace_back("xm-inc-F3", xm_inc(f3));
  out.emplace_back("xm-id-F3", xm_id(f3));
  out.emplace_back("xm-precrossed-F3", xm_precrossed(f3));
  out.emplace_back("xm-sol2-ideal-F3", xmod_from_ideal(ideal_of_basis(sol2(f3), {2}), "span(e2)-F3"));
  return out;
}

Named<Cat1Object> cat1s() {
  Named<Cat1Object> out;
  out.emplace_back("S3-cat1", s3_cat1());
  out.emplace_back("S3-sign-cat1", s3_sign_cat1());
  out.emplace_back("Z4-cat1", z4_cat1());
  out.emplace_back("cat1-xm-inc", functor_C(xm_inc()));
  out.emplace_back("cat1-xm-id", functor_C(xm_id()));
  out.emplace_back("cat1-xm-a3-s3", functor_C(xm_a3_s3()));
  out.emplace_back("cat1-leib2-id", functor_C(identity_xmod(leib2())));
  out.emplace_back("cat1-dial1-id", functor_C(identity_xmod(dial1())));
  return out;
}

Named<Extension> extensions() {
  Named<Extension> out;
  const Field f3 = Field::prime(3);
  auto add = [&](const std::string& name, const Ideal& I) { out.emplace_back(name, extension_from_ideal(I, name)); };
  add("ext-heis3-center", ideal_of_basis(heis3(), {3}));
  add("ext-sol2-e2", ideal_of_basis(sol2(), {2}));
  add("ext-heis3-zero", Ideal::make(Subobject::zero(heis3())));
  add("ext-sol2-zero", Ideal::make(Subobject::zero(sol2())));
  add("ext-heis3-e2e3", ideal_of_basis(heis3(), {2, 3}));
  add("ext-heis3-center-F3", ideal_of_basis(heis3(f3), {3}));
  add("ext-sol2-e2-F3", ideal_of_basis(sol2(f3), {2}));
  add("ext-ab2-whole", Ideal::make(Subobject::whole(ab2())));
  add("ext-leib2-e2", ideal_of_basis(leib2(), {2}));
  add("ext-leib3-e3", ideal_of_basis(leib3(), {3}));
  add("ext-dial1-t2", ideal_of_basis(dial1(), {2}));
  add("ext-tri2-e12", ideal_of_basis(tri2(), {2}));
  {
    const ObjectPtr g = s3();
    add("ext-S3-A3", ideal_of(g, {find_label(*g, "e"), find_label(*g, "(123)"), find_label(*g, "(132)")}));
  }
  {
    const ObjectPtr g = z4();
    add("ext-Z4-2Z4", ideal_of(g, {Id{0}, Id{2}}));
  }
  {
    const ObjectPtr g = d4();
    add("ext-D4-center", center(g));
  }
  return out;
}

Named<XmodExtension> xmod_extensions() {
  Named<XmodExtension> out;
  const Field f3 = Field::prime(3);
  auto add = [&](const std::string& name, const PreCrossedModule& x, std::initializer_list<std::size_t> b1,
                 std::initializer_list<std::size_t> b0) {
    std::vector<Element> g1, g0;
    for (std::size_t i : b1) g1.push_back(x.c1->linear().basis_vector(i - 1));
    for (std::size_t i : b0) g0.push_back(x.c0->linear().basis_vector(i - 1));
    CrossedIdeal k = make_crossed_ideal(x, Subobject::from_elements(x.c1, g1), Subobject::from_elements(x.c0, g0));
    out.emplace_back(name, xmod_extension_from_crossed_ideal(x, k, name));
  };
  add("xext-heis3-center", xm_id(), {3}, {3});
  add("xext-heis3-e2e3", xm_id(), {2, 3}, {2, 3});
  add("xext-abelian", trivial_xmod(ab2(), materialize(Subobject::zero(ab2()), "0").object), {1}, {});
  add("xext-heis3-center-F3", xm_id(f3), {3}, {3});
  add("xext-inc-center", xm_inc(), {1}, {3});
  return out;
}

std::map<std::string, json> documents() {
  std::map<std::string, json> docs;
  for (const auto& [n, o] : objects()) docs[n + ".json"] = object_to_json(*o);
  for (const auto& [n, x] : xmods()) docs[n + ".json"] = xmod_to_json(x);
  for (const auto& [n, t] : cat1s()) docs[n + ".json"] = cat1_to_json(t);
  for (const auto& [n, e] : extensions()) docs[n + ".json"] = extension_to_json(e);
  for (const auto& [n, e] : xmod_extensions()) docs[n + ".json"] = xmod_extension_to_json(e);

  {
    const ObjectPtr h = heis3();
    Cat1Object t{h, zero_morphism(h, h), zero_morphism(h, h)};
    docs["precat1-heis3-zero-omegas.json"] = cat1_to_json(t);
  }
  HeisDecomposition dec = heis3_decomposition();
  docs["heis3-decomp-a.json"] = object_to_json(*dec.a);
  docs["heis3-decomp-b.json"] = object_to_json(*dec.b);
  docs["heis3-decomp-action.json"] = action_to_json(dec.action);
  {
    docs["heis3-ideal-e2e3.json"] = json{{"basis", json::array({json::array({"0", "1", "0"}), json::array({"0", "0", "1"})})}};
    docs["heis3-ideal-e3.json"] = json{{"basis", json::array({json::array({"0", "0", "1"})})}};
    docs["heis3-gens-e1.json"] = json{{"elements", json::array({json::array({"1", "0", "0"})})}};
    docs["sol2-gens-e2.json"] = json{{"elements", json::array({json::array({"0", "1"})})}};

    // Huq candidates into xm-id: span(e2) (not central) and span(e3) (central).
    PreCrossedModule x = xm_id();
    for (auto [tag, idx] : std::array<std::pair<const char*, std::size_t>, 2>{{{"e2", 1}, {"e3", 2}}}) {
      SubXmod hx = sub_xmod(x, Subobject::from_elements(x.c1, {x.c1->linear().basis_vector(idx)}),
                            Subobject::from_elements(x.c0, {x.c0->linear().basis_vector(idx)}),
                            std::string("span(") + tag + ")");
      docs[std::string("huq-h-span-") + tag + ".json"] = xmod_to_json(hx.xmod);
      docs[std::string("huq-mu-span-") + tag + ".json"] =
          json{{"mu1", morphism_to_json(hx.inc1)}, {"mu0", morphism_to_json(hx.inc0)}};
    }
  }
  return docs;
}

}  // namespace mci::corpus
