#include "mci/xmodcat1.hpp"

#include "mci/errors.hpp"
#include "mci/validation.hpp"
#include "mci/varieties.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;

void require_shape(const PreCrossedModule& x) {
  if (x.boundary.source() != x.c1 || x.boundary.target() != x.c0)
    fail(ErrorKind::invalid_input, "boundary must map C1 to C0");
  if (x.action.acting != x.c0 || x.action.acted != x.c1)
    fail(ErrorKind::invalid_input, "action must be an action of C0 on C1");
}

json show(const MciObject& obj, const Element& e) { return obj.describe(e); }

// Runs `body(c0, c1)` over spanning elements (all elements for tables,
// basis vectors for linear objects) until it returns a witness.
template <class Body>
json scan_pairs(const std::vector<Element>& xs, const std::vector<Element>& ys, Body body) {
  for (const auto& x : xs)
    for (const auto& y : ys) {
      json w = body(x, y);
      if (!w.is_null()) return w;
    }
  return nullptr;
}

// axioms b) and d) and the morphism condition c) are bilinear, so basis
// pairs suffice in the linear backend.
void check_ab(const PreCrossedModule& x, Report& r) {
  const MciObject& C1 = *x.c1;
  const MciObject& C0 = *x.c0;
  const auto s0 = C0.spanning_elements(), s1 = C1.spanning_elements();
  const std::size_t ops = C1.signature().binary().size();
  const std::uint64_t pairs = std::uint64_t{s0.size()} * s1.size();
  if (C1.is_linear()) {
    r.add_by_construction("axiom.a");
  } else if (within_cap(r, "axiom.a", pairs)) {
    r.add_check("axiom.a", scan_pairs(s0, s1, [&](const Element& c0, const Element& c1) -> json {
      Element lhs = x.boundary(x.action.act_dot(c0, c1));
      Element rhs = C0.sub(C0.add(c0, x.boundary(c1)), c0);
      if (lhs == rhs) return nullptr;
      return json{{"c0", show(C0, c0)}, {"c1", show(C1, c1)}, {"lhs", show(C0, lhs)}, {"rhs", show(C0, rhs)}};
    }));
  }
  for (std::size_t op = 0; op < ops; ++op) {
    const std::string name = "axiom.b." + C1.signature().binary()[op].name;
    if (!within_cap(r, name, pairs)) continue;
    r.add_check(name, scan_pairs(s0, s1, [&](const Element& c0, const Element& c1) -> json {
      Element lhs = x.boundary(x.action.act_left(op, c0, c1));
      Element rhs = C0.star(op, c0, x.boundary(c1));
      if (lhs == rhs) return nullptr;
      return json{{"c0", show(C0, c0)}, {"c1", show(C1, c1)}, {"lhs", show(C0, lhs)}, {"rhs", show(C0, rhs)}};
    }));
  }
}

void check_cd(const PreCrossedModule& x, Report& r) {
  const MciObject& C1 = *x.c1;
  const auto s1 = C1.spanning_elements();
  const std::size_t ops = C1.signature().binary().size();
  const std::uint64_t pairs = std::uint64_t{s1.size()} * s1.size();
  if (C1.is_linear()) {
    r.add_by_construction("axiom.c");
  } else if (within_cap(r, "axiom.c", pairs)) {
    r.add_check("axiom.c", scan_pairs(s1, s1, [&](const Element& c, const Element& d) -> json {
      Element lhs = x.action.act_dot(x.boundary(c), d);
      Element rhs = C1.sub(C1.add(c, d), c);
      if (lhs == rhs) return nullptr;
      return json{{"c1", show(C1, c)}, {"c1'", show(C1, d)}, {"lhs", show(C1, lhs)}, {"rhs", show(C1, rhs)}};
    }));
  }
  for (std::size_t op = 0; op < ops; ++op) {
    const std::string name = "axiom.d." + C1.signature().binary()[op].name;
    if (!within_cap(r, name, pairs)) continue;
    r.add_check(name, scan_pairs(s1, s1, [&](const Element& c, const Element& d) -> json {
      Element lhs = x.action.act_left(op, x.boundary(c), d);
      Element rhs = C1.star(op, c, d);
      if (lhs == rhs) return nullptr;
      return json{{"c1", show(C1, c)}, {"c1'", show(C1, d)}, {"lhs", show(C1, lhs)}, {"rhs", show(C1, rhs)}};
    }));
  }
}

// Fills one Report entry per failure-free scan of `members` against
// `sub`, where `value` produces the element that must belong to it.
template <class F>
void membership(Report& r, const std::string& name, const Subobject& sub, const std::vector<Element>& xs,
                const std::vector<Element>& ys, F value) {
  if (!within_cap(r, name, std::uint64_t{xs.size()} * ys.size())) return;
  const MciObject& P = *sub.parent();
  r.add_check(name, scan_pairs(xs, ys, [&](const Element& a, const Element& b) -> json {
    Element v = value(a, b);
    if (sub.contains(v)) return nullptr;
    return json{{"value", show(P, v)}};
  }));
}

Id pack(Id a, Id b, Id na) { return a + na * b; }

}  // namespace

CrossedModule CrossedModule::make(PreCrossedModule x, LeibnizConvention conv) {
  Report r = check_crossed(x, conv);
  if (!r.passed()) {
    const CheckEntry* e = r.first_failure();
    fail(ErrorKind::precondition_violation,
         "not a crossed module" + (e ? ": " + e->name + " " + e->witness.dump() : std::string(" (unchecked entries)")));
  }
  return CrossedModule(std::move(x));
}

PreCrossedModule xmod_from_ideal(const Ideal& I, const std::string& name) {
  const ObjectPtr& B = I.parent();
  Materialized m = materialize(I.sub(), name.empty() ? B->name() + "_ideal" : name);
  Preimage back(m.inclusion);
  const MciObject& P = *B;
  ActionData act = tabulate_action(
      B, m.object, [&](const Element& b, const Element& a) { return back(P.sub(P.add(b, m.inclusion(a)), b)); },
      [&](std::size_t op, const Element& b, const Element& a) { return back(P.star(op, b, m.inclusion(a))); },
      [&](std::size_t op, const Element& a, const Element& b) { return back(P.star(op, m.inclusion(a), b)); });
  return {m.object, B, m.inclusion, std::move(act)};
}

PreCrossedModule base_change(const PreCrossedModule& x, std::uint32_t p) {
  ObjectPtr c1 = base_change(*x.c1, p);
  ObjectPtr c0 = base_change(*x.c0, p);
  return {c1, c0, base_change(x.boundary, c1, c0), base_change(x.action, c0, c1)};
}

XmodRealization realize_xmod(const PreCrossedModule& x) {
  TableRealization r1 = realize_table(x.c1);
  TableRealization r0 = realize_table(x.c0);
  PreCrossedModule t{r1.table, r0.table, realize_morphism(x.boundary, r1, r0), realize_action(x.action, r0, r1)};
  return {std::move(t), std::move(r1), std::move(r0)};
}

Report check_precrossed(const PreCrossedModule& x, LeibnizConvention conv) {
  require_shape(x);
  Report r("xmod-check");
  r.merge(check_variety(*x.c1, conv), "c1.");
  r.merge(check_variety(*x.c0, conv), "c0.");
  r.merge(validate_morphism(x.boundary), "boundary.");
  Report act = is_derived_action(x.action, Ambient::variety, conv);
  r.merge(act, "action.");
  if (act.failed()) return r;
  check_ab(x, r);
  return r;
}

Report check_crossed(const PreCrossedModule& x, LeibnizConvention conv) {
  Report r = check_precrossed(x, conv);
  if (r.find("action.action.shape") && r.find("action.action.shape")->status == Status::fail) return r;
  check_cd(x, r);
  return r;
}

Report check_xmod_morphism(const PreCrossedModule& x, const PreCrossedModule& y, const Morphism& mu1,
                           const Morphism& mu0) {
  require_shape(x);
  require_shape(y);
  if (mu1.source() != x.c1 || mu1.target() != y.c1 || mu0.source() != x.c0 || mu0.target() != y.c0)
    fail(ErrorKind::invalid_input, "xmod morphism components do not match the crossed modules");
  Report r("xmod-morphism");
  r.merge(validate_morphism(mu1), "mu1.");
  r.merge(validate_morphism(mu0), "mu0.");
  const MciObject& C1 = *x.c1;
  const MciObject& D0 = *y.c0;
  const MciObject& D1 = *y.c1;
  const auto s0 = x.c0->spanning_elements(), s1 = C1.spanning_elements();
  {
    json w;
    for (const auto& c : s1) {
      Element lhs = mu0(x.boundary(c)), rhs = y.boundary(mu1(c));
      if (!(lhs == rhs)) {
        w = json{{"c1", show(C1, c)}, {"lhs", show(D0, lhs)}, {"rhs", show(D0, rhs)}};
        break;
      }
    }
    r.add_check("boundary-square", w);
  }
  const std::uint64_t pairs = std::uint64_t{s0.size()} * s1.size();
  if (C1.is_linear()) {
    r.add_by_construction("dot");
  } else if (within_cap(r, "dot", pairs)) {
    r.add_check("dot", scan_pairs(s0, s1, [&](const Element& c0, const Element& c1) -> json {
      Element lhs = mu1(x.action.act_dot(c0, c1)), rhs = y.action.act_dot(mu0(c0), mu1(c1));
      if (lhs == rhs) return nullptr;
      return json{{"c0", show(*x.c0, c0)}, {"c1", show(C1, c1)}, {"lhs", show(D1, lhs)}, {"rhs", show(D1, rhs)}};
    }));
  }
  for (std::size_t op = 0; op < C1.signature().binary().size(); ++op) {
    const std::string name = "star." + C1.signature().binary()[op].name;
    if (!within_cap(r, name, pairs)) continue;
    r.add_check(name, scan_pairs(s0, s1, [&](const Element& c0, const Element& c1) -> json {
      Element lhs = mu1(x.action.act_left(op, c0, c1)), rhs = y.action.act_left(op, mu0(c0), mu1(c1));
      if (lhs == rhs) return nullptr;
      return json{{"c0", show(*x.c0, c0)}, {"c1", show(C1, c1)}, {"lhs", show(D1, lhs)}, {"rhs", show(D1, rhs)}};
    }));
  }
  return r;
}

Report check_crossed_ideal(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0) {
  require_shape(x);
  if (k1.parent() != x.c1 || k0.parent() != x.c0)
    fail(ErrorKind::invalid_input, "crossed ideal components must be subobjects of C1 and C0");
  Report r("crossed-ideal");
  r.merge(validate_ideal(k1), "k1.");
  r.merge(validate_ideal(k0), "k0.");
  const MciObject& C1 = *x.c1;
  const auto all0 = x.c0->spanning_elements(), all1 = C1.spanning_elements();
  const auto sub0 = k0.spanning_elements(), sub1 = k1.spanning_elements();
  {
    json w;
    for (const auto& c : sub1) {
      Element v = x.boundary(c);
      if (!k0.contains(v)) {
        w = json{{"c1'", show(C1, c)}, {"value", show(*x.c0, v)}};
        break;
      }
    }
    r.add_check("boundary", w);
  }
  for (std::size_t op = 0; op < C1.signature().binary().size(); ++op) {
    const std::string& nm = C1.signature().binary()[op].name;
    membership(r, "c0*k1." + nm, k1, all0, sub1,
               [&](const Element& c0, const Element& c1) { return x.action.act_left(op, c0, c1); });
    membership(r, "k0*c1." + nm, k1, sub0, all1,
               [&](const Element& c0, const Element& c1) { return x.action.act_left(op, c0, c1); });
  }
  membership(r, "c0.k1", k1, all0, sub1,
             [&](const Element& c0, const Element& c1) { return x.action.act_dot(c0, c1); });
  // linear: the dot action is trivial and every value below is 0
  membership(r, "k0.c1-c1", k1, sub0, all1,
             [&](const Element& c0, const Element& c1) { return C1.sub(x.action.act_dot(c0, c1), c1); });
  return r;
}

CrossedIdeal make_crossed_ideal(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0) {
  Report r = check_crossed_ideal(x, k1, k0);
  if (r.failed()) {
    const CheckEntry* e = r.first_failure();
    fail(ErrorKind::ideal_invalid, "not a crossed ideal: " + e->name + " " + e->witness.dump());
  }
  return {Ideal::unchecked(k1), Ideal::unchecked(k0)};
}

ObjectPtr Cat1Object::with_omegas() const {
  if (omega0.source() != object || omega0.target() != object || omega1.source() != object ||
      omega1.target() != object)
    fail(ErrorKind::invalid_input, "omega0 and omega1 must be endomorphisms of the cat1 carrier");
  VarietyTag tag = VarietyTag::parse(object->variety());
  if (tag.has_omegas()) fail(ErrorKind::invalid_input, "cat1 carrier must be tagged with a base variety");
  Signature sig = object->signature().with_unary({ops::omega0, ops::omega1});
  const std::string variety = "precat1:" + tag.base;
  if (object->is_table()) {
    TableObject t = object->table();
    t.signature = sig;
    t.unary.push_back(omega0.map());
    t.unary.push_back(omega1.map());
    return make_object(std::move(t), variety, object->name());
  }
  LinearObject l = object->linear();
  l.signature = sig;
  l.unary.push_back(omega0.matrix());
  l.unary.push_back(omega1.matrix());
  return make_object(std::move(l), variety, object->name());
}

Cat1Object Cat1Object::from_tagged(const ObjectPtr& tagged) {
  VarietyTag tag = VarietyTag::parse(tagged->variety());
  if (!tag.has_omegas()) fail(ErrorKind::invalid_input, "object is not tagged precat1:<base> or cat1:<base>");
  const Signature& sig = tagged->signature();
  const std::size_t w0 = sig.require_unary(ops::omega0), w1 = sig.require_unary(ops::omega1);
  if (sig.unary().size() != 2) fail(ErrorKind::invalid_input, "unexpected unary ops besides omega0, omega1");
  Signature base = sig.without_unary();
  ObjectPtr obj;
  if (tagged->is_table()) {
    TableObject t = tagged->table();
    std::vector<Id> m0 = t.unary[w0], m1 = t.unary[w1];
    t.signature = base;
    t.unary.clear();
    obj = make_object(std::move(t), tag.base, tagged->name());
    return {obj, Morphism(obj, obj, std::move(m0)), Morphism(obj, obj, std::move(m1))};
  }
  LinearObject l = tagged->linear();
  Matrix m0 = l.unary[w0], m1 = l.unary[w1];
  l.signature = base;
  l.unary.clear();
  obj = make_object(std::move(l), tag.base, tagged->name());
  return {obj, Morphism(obj, obj, std::move(m0)), Morphism(obj, obj, std::move(m1))};
}

Report check_cat1(const Cat1Object& t, bool require_cat1, LeibnizConvention conv) {
  ObjectPtr w = t.with_omegas();
  const std::string base = VarietyTag::parse(t.object->variety()).base;
  Report r = check_variety_as(*w, (require_cat1 ? "cat1:" : "precat1:") + base, conv);
  r.set_command("cat1-check");
  return r;
}

Cat1Object functor_C(const PreCrossedModule& x) {
  require_shape(x);
  Semidirect sd = build_semidirect(x.action, x.c1->name() + "⋊" + x.c0->name());
  Morphism w0 = compose(sd.section, sd.project);
  if (sd.object->is_table()) {
    const Id n1 = static_cast<Id>(x.c1->extent()), n0 = static_cast<Id>(x.c0->extent());
    const TableObject& t0 = x.c0->table();
    std::vector<Id> m(std::size_t{n1} * n0);
    for (Id b = 0; b < n0; ++b)
      for (Id a = 0; a < n1; ++a) m[pack(a, b, n1)] = sd.section(t0.add(x.boundary(a), b));
    return {sd.object, std::move(w0), Morphism(sd.object, sd.object, std::move(m))};
  }
  const std::size_t d1 = x.c1->extent(), d0 = x.c0->extent();
  const Field f = *x.c1->field();
  Matrix m(f, d1 + d0, d1 + d0);
  const Vector z1 = zero_vector(f, d1);
  for (std::size_t i = 0; i < d1; ++i) m.set_row(i, concat(z1, x.boundary.matrix().row(i)));
  for (std::size_t j = 0; j < d0; ++j) m.set_row(d1 + j, concat(z1, unit_vector(f, d0, j)));
  return {sd.object, std::move(w0), Morphism(sd.object, sd.object, std::move(m))};
}

FunctorXResult functor_X_full(const Cat1Object& t) {
  const ObjectPtr& C = t.object;
  const std::string nm = C->name().empty() ? std::string("C") : C->name();
  Materialized m1 = materialize(kernel(t.omega0).sub(), "ker omega0(" + nm + ")");
  Materialized m0 = materialize(image(t.omega0), "Im omega0(" + nm + ")");
  Preimage back1(m1.inclusion), back0(m0.inclusion);
  const MciObject& K = *m1.object;
  const MciObject& I = *m0.object;
  ActionData act = ActionData::trivial(m0.object, m1.object);
  const std::size_t ops = C->signature().binary().size();
  if (C->is_table()) {
    const TableObject& tc = C->table();
    const Id n1 = static_cast<Id>(K.extent()), n0 = static_cast<Id>(I.extent());
    std::vector<Id> d(n1);
    for (Id a = 0; a < n1; ++a) d[a] = as_id(back0(Element{t.omega1(m1.inclusion(a))}));
    for (Id b = 0; b < n0; ++b)
      for (Id a = 0; a < n1; ++a) {
        const Id cb = m0.inclusion(b), ca = m1.inclusion(a);
        act.dot[b * n1 + a] = as_id(back1(Element{tc.conj(cb, ca)}));
        for (std::size_t op = 0; op < ops; ++op) {
          act.left[op][b * n1 + a] = as_id(back1(Element{tc.star(op, cb, ca)}));
          act.right[op][a * n0 + b] = as_id(back1(Element{tc.star(op, ca, cb)}));
        }
      }
    Morphism boundary(m1.object, m0.object, std::move(d));
    return {{m1.object, m0.object, std::move(boundary), std::move(act)}, m1.inclusion, m0.inclusion};
  }
  const LinearObject& lc = C->linear();
  const std::size_t d1 = K.extent(), d0 = I.extent();
  Matrix d(*C->field(), d1, d0);
  for (std::size_t i = 0; i < d1; ++i)
    d.set_row(i, as_vector(back0(Element{t.omega1(m1.inclusion.matrix().row(i))})));
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      const Vector cb = m0.inclusion.matrix().row(i), ca = m1.inclusion.matrix().row(j);
      for (std::size_t op = 0; op < ops; ++op) {
        act.left_lin[op][i * d1 + j] = as_vector(back1(Element{lc.multiply(op, cb, ca)}));
        act.right_lin[op][j * d0 + i] = as_vector(back1(Element{lc.multiply(op, ca, cb)}));
      }
    }
  Morphism boundary(m1.object, m0.object, std::move(d));
  return {{m1.object, m0.object, std::move(boundary), std::move(act)}, m1.inclusion, m0.inclusion};
}

PreCrossedModule functor_X(const Cat1Object& t) { return functor_X_full(t).xmod; }

Report roundtrip_check(const PreCrossedModule& x) {
  Report r("roundtrip");
  Cat1Object t = functor_C(x);
  r.merge(check_cat1(t, false), "cat1.");
  FunctorXResult fx = functor_X_full(t);
  const PreCrossedModule& y = fx.xmod;
  r.details()["c1_extent"] = x.c1->extent();
  r.details()["c0_extent"] = x.c0->extent();
  r.details()["ker_omega0_extent"] = y.c1->extent();
  r.details()["im_omega0_extent"] = y.c0->extent();
  try {
    Preimage back1(fx.c1_inclusion), back0(fx.c0_inclusion);
    std::optional<Morphism> mu1, mu0;
    if (x.c1->is_table()) {
      const Id n1 = static_cast<Id>(x.c1->extent()), n0 = static_cast<Id>(x.c0->extent());
      const Id z0 = x.c0->table().zero, z1 = x.c1->table().zero;
      std::vector<Id> m1(n1), m0(n0);
      for (Id a = 0; a < n1; ++a) m1[a] = as_id(back1(Element{pack(a, z0, n1)}));
      for (Id b = 0; b < n0; ++b) m0[b] = as_id(back0(Element{pack(z1, b, n1)}));
      mu1.emplace(x.c1, y.c1, std::move(m1));
      mu0.emplace(x.c0, y.c0, std::move(m0));
    } else {
      const std::size_t d1 = x.c1->extent(), d0 = x.c0->extent();
      const Field f = *x.c1->field();
      Matrix m1(f, d1, y.c1->extent()), m0(f, d0, y.c0->extent());
      for (std::size_t i = 0; i < d1; ++i)
        m1.set_row(i, as_vector(back1(Element{concat(unit_vector(f, d1, i), zero_vector(f, d0))})));
      for (std::size_t j = 0; j < d0; ++j)
        m0.set_row(j, as_vector(back0(Element{concat(zero_vector(f, d1), unit_vector(f, d0, j))})));
      mu1.emplace(x.c1, y.c1, std::move(m1));
      mu0.emplace(x.c0, y.c0, std::move(m0));
    }
    r.merge(check_xmod_morphism(x, y, *mu1, *mu0), "comparison.");
    r.add_check("comparison.mu1.isomorphism",
                is_isomorphism(*mu1) ? json(nullptr) : json{{"problem", "c1 -> (c1,0) is not bijective"}});
    r.add_check("comparison.mu0.isomorphism",
                is_isomorphism(*mu0) ? json(nullptr) : json{{"problem", "c0 -> (0,c0) is not bijective"}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::precondition_violation) throw;
    r.add_fail("comparison", json{{"problem", e.what()}});
  }
  return r;
}

Report roundtrip_check_cat1(const Cat1Object& t) {
  Report r("roundtrip-cat1");
  r.merge(check_cat1(t, false), "input.");
  if (r.failed()) return r;
  FunctorXResult fx = functor_X_full(t);
  Cat1Object t2 = functor_C(fx.xmod);
  const ObjectPtr& C = t.object;
  r.details()["extent"] = C->extent();
  r.details()["roundtrip_extent"] = t2.object->extent();
  try {
    Preimage back1(fx.c1_inclusion), back0(fx.c0_inclusion);
    std::optional<Morphism> phi;
    if (C->is_table()) {
      const TableObject& tc = C->table();
      const Id n1 = static_cast<Id>(fx.xmod.c1->extent());
      std::vector<Id> m(tc.size);
      for (Id c = 0; c < tc.size; ++c) {
        const Id w = t.omega0(c);
        m[c] = pack(as_id(back1(Element{tc.sub(c, w)})), as_id(back0(Element{w})), n1);
      }
      phi.emplace(C, t2.object, std::move(m));
    } else {
      const std::size_t n = C->extent();
      const Field f = *C->field();
      Matrix m(f, n, t2.object->extent());
      for (std::size_t k = 0; k < n; ++k) {
        Vector e = unit_vector(f, n, k), w = t.omega0(e);
        m.set_row(k, concat(as_vector(back1(Element{e - w})), as_vector(back0(Element{w}))));
      }
      phi.emplace(C, t2.object, std::move(m));
    }
    r.merge(validate_morphism(*phi), "comparison.");
    r.add_check("comparison.omega0", same_map(compose(*phi, t.omega0), compose(t2.omega0, *phi))
                                         ? json(nullptr)
                                         : json{{"problem", "phi omega0 != omega0' phi"}});
    r.add_check("comparison.omega1", same_map(compose(*phi, t.omega1), compose(t2.omega1, *phi))
                                         ? json(nullptr)
                                         : json{{"problem", "phi omega1 != omega1' phi"}});
    r.add_check("comparison.isomorphism",
                is_isomorphism(*phi) ? json(nullptr) : json{{"problem", "c -> (c-omega0(c), omega0(c)) is not bijective"}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::precondition_violation) throw;
    r.add_fail("comparison", json{{"problem", e.what()}});
  }
  return r;
}

Report roundtrip_search_cat1(const Cat1Object& t) {
  Report r("roundtrip-cat1-search");
  if (!t.object->is_table()) {
    r.add_not_checked("isomorphism-search", "isomorphism search needs a table object");
    return r;
  }
  if (t.object->extent() > 24) {
    r.add_not_checked("isomorphism-search", "isomorphism search is limited to 24 elements");
    return r;
  }
  Cat1Object t2 = functor_C(functor_X(t));
  auto iso = find_isomorphism(t.with_omegas(), t2.with_omegas(), 24);
  r.add_check("isomorphism-search", iso ? json(nullptr) : json{{"problem", "no isomorphism found"}});
  return r;
}

}  // namespace mci
