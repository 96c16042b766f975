#include "mci/xmodinv.hpp"

#include <functional>

#include "mci/errors.hpp"
#include "mci/validation.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;
using Fn = std::function<Element(const Element&)>;

// lhs(z) = rhs(z), both sides in `value`.
struct Cond {
  const MciObject* value;
  Fn lhs, rhs;
};

// Members of `parent` satisfying every condition. In the linear backend every
// lhs - rhs is linear in z, so the solution is a joint kernel.
Subobject solve(const ObjectPtr& parent, const std::vector<Cond>& conds) {
  if (parent->is_table()) {
    std::vector<Id> ids;
    for (Id z = 0; z < parent->extent(); ++z) {
      bool ok = true;
      for (const auto& c : conds)
        if (!(c.lhs(Element{z}) == c.rhs(Element{z}))) {
          ok = false;
          break;
        }
      if (ok) ids.push_back(z);
    }
    return Subobject::from_ids(parent, std::move(ids));
  }
  const Field f = *parent->field();
  const std::size_t n = parent->extent();
  std::vector<Matrix> blocks;
  for (const auto& c : conds) {
    Matrix m(f, n, c.value->extent());
    for (std::size_t i = 0; i < n; ++i) {
      Element e{parent->linear().basis_vector(i)};
      m.set_row(i, as_vector(c.lhs(e)) - as_vector(c.rhs(e)));
    }
    if (!m.is_zero()) blocks.push_back(std::move(m));
  }
  if (blocks.empty()) return Subobject::whole(parent);
  return Subobject::from_subspace(parent, Subspace::from_matrix(left_kernel(hconcat(f, n, blocks))));
}

Fn constant(Element e) {
  return [e = std::move(e)](const Element&) { return e; };
}

json subobject_difference(const Subobject& a, const Subobject& b) {
  json only_a = json::array(), only_b = json::array();
  const MciObject& P = *a.parent();
  for (const auto& e : a.spanning_elements())
    if (!b.contains(e)) only_a.push_back(P.describe(e));
  for (const auto& e : b.spanning_elements())
    if (!a.contains(e)) only_b.push_back(P.describe(e));
  return json{{"first", a.to_json()}, {"second", b.to_json()}, {"only_in_first", only_a}, {"only_in_second", only_b}};
}

void compare(Report& r, const std::string& name, const Subobject& a, const Subobject& b) {
  r.add_check(name, a == b ? json(nullptr) : subobject_difference(a, b));
}

// Semidirect coordinates (z1, z0) of an element of C(X).
std::pair<Element, Element> split(const PreCrossedModule& x, const Element& z) {
  if (x.c1->is_table()) {
    const Id n1 = static_cast<Id>(x.c1->extent());
    return {Element{as_id(z) % n1}, Element{as_id(z) / n1}};
  }
  const Vector& v = as_vector(z);
  const std::size_t d1 = x.c1->extent();
  return {Element{Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d1))},
          Element{Vector(v.begin() + static_cast<std::ptrdiff_t>(d1), v.end())}};
}

Subobject relocate(const Subobject& s, const ObjectPtr& parent) {
  return Subobject::from_elements(parent, s.spanning_elements());
}

}  // namespace

SubXmod sub_xmod(const PreCrossedModule& x, const Subobject& k1, const Subobject& k0, const std::string& name) {
  if (k1.parent() != x.c1 || k0.parent() != x.c0)
    fail(ErrorKind::invalid_input, "sub crossed module components must be subobjects of C1 and C0");
  const std::string nm = name.empty() ? "sub" : name;
  Materialized m1 = materialize(k1, nm + "_1");
  Materialized m0 = materialize(k0, nm + "_0");
  Preimage b1(m1.inclusion), b0(m0.inclusion);
  Morphism d = tabulate(m1.object, m0.object, [&](const Element& z) { return b0(x.boundary(m1.inclusion(z))); });
  ActionData act = tabulate_action(
      m0.object, m1.object,
      [&](const Element& b, const Element& a) { return b1(x.action.act_dot(m0.inclusion(b), m1.inclusion(a))); },
      [&](std::size_t op, const Element& b, const Element& a) {
        return b1(x.action.act_left(op, m0.inclusion(b), m1.inclusion(a)));
      },
      [&](std::size_t op, const Element& a, const Element& b) {
        return b1(x.action.act_right(op, m1.inclusion(a), m0.inclusion(b)));
      });
  return {{m1.object, m0.object, std::move(d), std::move(act)}, m1.inclusion, m0.inclusion};
}

QuotientXmod quotient_xmod(const PreCrossedModule& x, const CrossedIdeal& k, const std::string& name) {
  const std::string nm = name.empty() ? "quotient" : name;
  Quotient q1 = quotient(x.c1, k.k1, nm + "_1");
  Quotient q0 = quotient(x.c0, k.k0, nm + "_0");
  Lift l1(q1.projection), l0(q0.projection);
  const Morphism& p1 = q1.projection;
  const Morphism& p0 = q0.projection;
  Morphism d = tabulate(q1.object, q0.object, [&](const Element& z) { return p0(x.boundary(l1(z))); });
  ActionData act = tabulate_action(
      q0.object, q1.object, [&](const Element& b, const Element& a) { return p1(x.action.act_dot(l0(b), l1(a))); },
      [&](std::size_t op, const Element& b, const Element& a) { return p1(x.action.act_left(op, l0(b), l1(a))); },
      [&](std::size_t op, const Element& a, const Element& b) { return p1(x.action.act_right(op, l1(a), l0(b))); });
  QuotientXmod out{{q1.object, q0.object, std::move(d), std::move(act)}, p1, p0};
  Report r = check_xmod_morphism(x, out.xmod, p1, p0);
  if (r.failed())
    fail(ErrorKind::ideal_invalid,
         "induced crossed module structure depends on representatives: " + r.first_failure()->name);
  return out;
}

ProductXmod product_xmod(const PreCrossedModule& x, const PreCrossedModule& y, const std::string& name) {
  const std::string nm = name.empty() ? "product" : name;
  Product p1 = direct_product(x.c1, y.c1, nm + "_1");
  Product p0 = direct_product(x.c0, y.c0, nm + "_0");
  const MciObject& P1 = *p1.object;
  const MciObject& P0 = *p0.object;
  auto pair1 = [&](const Element& u, const Element& v) { return P1.add(p1.i1(u), p1.i2(v)); };
  Morphism d = tabulate(p1.object, p0.object, [&](const Element& e) {
    return P0.add(p0.i1(x.boundary(p1.p1(e))), p0.i2(y.boundary(p1.p2(e))));
  });
  ActionData act = tabulate_action(
      p0.object, p1.object,
      [&](const Element& b, const Element& a) {
        return pair1(x.action.act_dot(p0.p1(b), p1.p1(a)), y.action.act_dot(p0.p2(b), p1.p2(a)));
      },
      [&](std::size_t op, const Element& b, const Element& a) {
        return pair1(x.action.act_left(op, p0.p1(b), p1.p1(a)), y.action.act_left(op, p0.p2(b), p1.p2(a)));
      },
      [&](std::size_t op, const Element& a, const Element& b) {
        return pair1(x.action.act_right(op, p1.p1(a), p0.p1(b)), y.action.act_right(op, p1.p2(a), p0.p2(b)));
      });
  return {{p1.object, p0.object, std::move(d), std::move(act)}, p1.p1, p0.p1, p1.p2, p0.p2, p1.i1, p0.i1, p1.i2,
          p0.i2};
}

XmodCenter xmod_center_predicate(const PreCrossedModule& x, bool crossed, ActionOrder order) {
  const MciObject& C1 = *x.c1;
  const MciObject& C0 = *x.c0;
  const auto s1 = C1.spanning_elements(), s0 = C0.spanning_elements();
  const std::size_t ops = C1.signature().binary().size();
  const ActionData& act = x.action;
  const Morphism& d = x.boundary;
  const Element zero1 = C1.zero(), zero0 = C0.zero();

  std::vector<Cond> z1;
  for (const auto& c1 : s1) {
    z1.push_back({&C1, [&, c1](const Element& z) { return C1.add(z, c1); },
                  [&, c1](const Element& z) { return C1.add(c1, z); }});
    if (!crossed) {
      if (order == ActionOrder::reversed)
        z1.push_back({&C1, [&, c1](const Element& z) { return act.act_dot(d(z), c1); }, constant(c1)});
      else
        z1.push_back({&C1, [&, c1](const Element& z) { return act.act_dot(C0.neg(d(z)), c1); }, constant(c1)});
    }
    for (std::size_t op = 0; op < ops; ++op) {
      z1.push_back({&C1, [&, c1, op](const Element& z) { return C1.star(op, c1, z); }, constant(zero1)});
      if (!crossed)
        z1.push_back({&C1, [&, c1, op](const Element& z) { return act.act_right(op, c1, d(z)); }, constant(zero1)});
    }
  }
  for (const auto& c0 : s0) {
    z1.push_back({&C0, [&, c0](const Element& z) { return C0.add(c0, d(z)); },
                  [&, c0](const Element& z) { return C0.add(d(z), c0); }});
    z1.push_back({&C1, [](const Element& z) { return z; }, [&, c0](const Element& z) { return act.act_dot(c0, z); }});
    for (std::size_t op = 0; op < ops; ++op)
      z1.push_back({&C1, [&, c0, op](const Element& z) { return act.act_left(op, c0, z); }, constant(zero1)});
  }

  std::vector<Cond> z0;
  for (const auto& c1 : s1) {
    z0.push_back({&C1, [&, c1](const Element& z) { return act.act_dot(z, c1); }, constant(c1)});
    for (std::size_t op = 0; op < ops; ++op)
      z0.push_back({&C1, [&, c1, op](const Element& z) { return act.act_right(op, c1, z); }, constant(zero1)});
  }
  for (const auto& c0 : s0) {
    z0.push_back({&C0, [&, c0](const Element& z) { return C0.add(z, c0); },
                  [&, c0](const Element& z) { return C0.add(c0, z); }});
    for (std::size_t op = 0; op < ops; ++op)
      z0.push_back({&C0, [&, c0, op](const Element& z) { return C0.star(op, c0, z); }, constant(zero0)});
  }

  XmodCenter out{solve(x.c1, z1), solve(x.c0, z0), Report("xmod-center")};
  out.report.details()["lists"] = crossed ? "crossed" : "precrossed";
  out.report.details()["action_order"] = order == ActionOrder::reversed ? "reversed" : "literal";
  out.report.merge(check_crossed_ideal(x, out.z1, out.z0), "crossed-ideal.");
  return out;
}

XmodCenter xmod_center_transport(const PreCrossedModule& x) {
  Cat1Object t = functor_C(x);
  ObjectPtr w = t.with_omegas();
  Ideal z = center(w);
  std::vector<Element> g1, g0;
  if (x.c1->is_table()) {
    for (const auto& e : z.sub().spanning_elements()) {
      auto [a, b] = split(x, e);
      if (b == x.c0->zero()) g1.push_back(a);
      auto [a0, b0] = split(x, t.omega0(e));
      (void)a0;
      g0.push_back(b0);
    }
  } else {
    const Field f = *x.c1->field();
    const std::size_t d1 = x.c1->extent(), d0 = x.c0->extent();
    std::vector<Vector> first;
    for (std::size_t i = 0; i < d1; ++i) first.push_back(concat(unit_vector(f, d1, i), zero_vector(f, d0)));
    Subspace c1_part = Subspace::span(f, d1 + d0, first);
    for (const auto& v : z.sub().subspace().intersect(c1_part).basis_vectors()) g1.push_back(split(x, v).first);
    for (const auto& e : z.sub().spanning_elements()) g0.push_back(split(x, t.omega0(e)).second);
  }
  XmodCenter out{Subobject::from_elements(x.c1, g1), Subobject::from_elements(x.c0, g0), Report("xmod-center-transport")};
  out.report.details()["semidirect_center"] = z.sub().to_json();
  return out;
}

XmodCenter xmod_center(const PreCrossedModule& x, ActionOrder order) {
  const bool crossed = check_crossed(x).passed();
  XmodCenter out = xmod_center_predicate(x, crossed, order);
  XmodCenter tr = xmod_center_transport(x);
  compare(out.report, "transport.z1", out.z1, tr.z1);
  compare(out.report, "transport.z0", out.z0, tr.z0);
  const ActionOrder other = order == ActionOrder::reversed ? ActionOrder::literal : ActionOrder::reversed;
  XmodCenter alt = xmod_center_predicate(x, crossed, other);
  compare(out.report, "reading.z1", out.z1, alt.z1);
  compare(out.report, "reading.z0", out.z0, alt.z0);
  if (crossed) {
    XmodCenter pre = xmod_center_predicate(x, false, order);
    compare(out.report, "lists.z1", out.z1, pre.z1);
    compare(out.report, "lists.z0", out.z0, pre.z0);
  }
  out.report.details()["z1"] = out.z1.to_json();
  out.report.details()["z0"] = out.z0.to_json();
  out.report.details()["semidirect_literal"] = semidirect_center_literal(x).to_json(false);
  return out;
}

Report semidirect_center_literal(const PreCrossedModule& x) {
  Cat1Object t = functor_C(x);
  const ObjectPtr& S = t.object;
  const MciObject& C1 = *x.c1;
  const MciObject& C0 = *x.c0;
  const ActionData& act = x.action;
  const Morphism& d = x.boundary;
  const std::size_t ops = C1.signature().binary().size();
  const Element zero1 = C1.zero(), zero0 = C0.zero();
  auto z1 = [&](const Element& z) { return split(x, z).first; };
  auto z0 = [&](const Element& z) { return split(x, z).second; };
  std::vector<Cond> conds;
  for (const auto& c : S->spanning_elements()) {
    auto [c1, c0] = split(x, c);
    conds.push_back({&C1, [&, c1](const Element& z) { return C1.add(z1(z), act.act_dot(z0(z), c1)); },
                     [&, c1, c0](const Element& z) { return C1.add(c1, act.act_dot(c0, z1(z))); }});
    conds.push_back({&C1, [&, c1](const Element& z) { return C1.add(z1(z), c1); },
                     [&, c1](const Element& z) { return C1.add(c1, z1(z)); }});
    conds.push_back({&C1, constant(c1), [&, c1](const Element& z) { return act.act_dot(z0(z), c1); }});
    conds.push_back({&C1, constant(c1), [&, c1](const Element& z) { return act.act_dot(d(z1(z)), c1); }});
    conds.push_back({&C0, [&, c0](const Element& z) { return C0.add(c0, d(z1(z))); },
                     [&, c0](const Element& z) { return C0.add(d(z1(z)), c0); }});
    for (std::size_t op = 0; op < ops; ++op) {
      conds.push_back({&C1,
                       [&, c1, c0, op](const Element& z) {
                         Element t1 = act.act_right(op, c1, z0(z));
                         return C1.add(C1.add(t1, act.act_left(op, c0, z1(z))), t1);
                       },
                       constant(zero1)});
      conds.push_back({&C1, [&, c1, op](const Element& z) { return C1.star(op, c1, z1(z)); }, constant(zero1)});
      conds.push_back({&C1, [&, c1, op](const Element& z) { return act.act_right(op, c1, z0(z)); }, constant(zero1)});
      conds.push_back(
          {&C1, [&, c1, op](const Element& z) { return act.act_right(op, c1, d(z1(z))); }, constant(zero1)});
      conds.push_back({&C0, [&, c0, op](const Element& z) { return d(act.act_left(op, c0, z1(z))); },
                       constant(zero0)});
    }
  }
  Subobject literal = solve(S, conds);
  Subobject actual = relocate(center(t.with_omegas()).sub(), S);
  Report r("semidirect-center-literal");
  compare(r, "literal-matches-center", literal, actual);
  r.details()["literal"] = literal.to_json();
  r.details()["center"] = actual.to_json();
  return r;
}

Report singular_xmod_report(const PreCrossedModule& x) {
  XmodCenter z = xmod_center(x);
  Report r("xmod-singular");
  r.merge(z.report, "center.");
  r.add_check("z1-is-whole", z.z1.is_whole() ? json(nullptr) : json{{"z1", z.z1.to_json()}});
  r.add_check("z0-is-whole", z.z0.is_whole() ? json(nullptr) : json{{"z0", z.z0.to_json()}});
  return r;
}

bool is_singular_xmod(const PreCrossedModule& x) {
  XmodCenter z = xmod_center(x);
  return z.z1.is_whole() && z.z0.is_whole();
}

Subobject action_closed_ideal(const PreCrossedModule& x, const std::vector<Element>& gens) {
  const std::size_t ops = x.c1->signature().binary().size();
  const auto s0 = x.c0->spanning_elements();
  std::vector<Element> current = gens;
  Subobject k = ideal_generated(x.c1, current).sub();
  for (;;) {
    std::vector<Element> extra;
    for (const auto& a : k.spanning_elements())
      for (const auto& b : s0) {
        const Element v = x.action.act_dot(b, a);
        if (!k.contains(v)) extra.push_back(v);
        for (std::size_t op = 0; op < ops; ++op) {
          const Element l = x.action.act_left(op, b, a), rr = x.action.act_right(op, a, b);
          if (!k.contains(l)) extra.push_back(l);
          if (!k.contains(rr)) extra.push_back(rr);
        }
      }
    if (extra.empty()) return k;
    for (auto& e : k.spanning_elements()) extra.push_back(e);
    k = ideal_generated(x.c1, extra).sub();
  }
}

XmodCommutator xmod_commutator(const PreCrossedModule& x) {
  const MciObject& C1 = *x.c1;
  const MciObject& C0 = *x.c0;
  const auto s1 = C1.spanning_elements(), s0 = C0.spanning_elements();
  const std::size_t ops = C1.signature().binary().size();
  auto comm = [](const MciObject& A, const Element& u, const Element& v) { return A.sub(A.sub(A.add(u, v), u), v); };
  std::vector<Element> reduced, full, g0;
  for (const auto& b : s0)
    for (const auto& a : s1) {
      reduced.push_back(C1.sub(x.action.act_dot(b, a), a));
      for (std::size_t op = 0; op < ops; ++op) reduced.push_back(x.action.act_left(op, b, a));
    }
  full = reduced;
  for (const auto& a : s1)
    for (const auto& c : s1) {
      if (C1.is_table()) full.push_back(comm(C1, a, c));
      for (std::size_t op = 0; op < ops; ++op) full.push_back(C1.star(op, a, c));
    }
  for (const auto& b : s0)
    for (const auto& c : s0) {
      if (C0.is_table()) g0.push_back(comm(C0, b, c));
      for (std::size_t op = 0; op < ops; ++op) g0.push_back(C0.star(op, b, c));
    }
  XmodCommutator out{action_closed_ideal(x, full), ideal_generated(x.c0, g0).sub(), Report("xmod-commutator")};
  out.report.details()["k1"] = out.k1.to_json();
  out.report.details()["k0"] = out.k0.to_json();
  if (check_crossed(x).passed())
    compare(out.report, "k1.reduced-generators-agree", out.k1, action_closed_ideal(x, reduced));
  out.report.merge(check_crossed_ideal(x, out.k1, out.k0), "crossed-ideal.");

  // X applied to the commutator of C(X)
  Cat1Object t = functor_C(x);
  Ideal k = commutator(t.with_omegas());
  std::vector<Element> t1, t0;
  if (C1.is_table()) {
    for (const auto& e : k.sub().spanning_elements()) {
      auto [a, b] = split(x, e);
      if (b == C0.zero()) t1.push_back(a);
      t0.push_back(split(x, t.omega0(e)).second);
    }
  } else {
    const Field f = *C1.field();
    const std::size_t d1 = C1.extent(), d0 = C0.extent();
    std::vector<Vector> first;
    for (std::size_t i = 0; i < d1; ++i) first.push_back(concat(unit_vector(f, d1, i), zero_vector(f, d0)));
    Subspace part = Subspace::span(f, d1 + d0, first);
    for (const auto& v : k.sub().subspace().intersect(part).basis_vectors()) t1.push_back(split(x, v).first);
    for (const auto& e : k.sub().spanning_elements()) t0.push_back(split(x, t.omega0(e)).second);
  }
  compare(out.report, "transport.k1", out.k1, Subobject::from_elements(x.c1, t1));
  compare(out.report, "transport.k0", out.k0, Subobject::from_elements(x.c0, t0));
  return out;
}

Report huq_central_report(const PreCrossedModule& x, const HuqCandidate& h) {
  ProductXmod p = product_xmod(x, h.h);
  const MciObject& C1 = *x.c1;
  const MciObject& C0 = *x.c0;
  Morphism s1 = tabulate(p.xmod.c1, x.c1, [&](const Element& e) { return C1.add(p.p1_1(e), h.mu1(p.p2_1(e))); });
  Morphism s0 = tabulate(p.xmod.c0, x.c0, [&](const Element& e) { return C0.add(p.p1_0(e), h.mu0(p.p2_0(e))); });
  Report r("huq-central");
  r.merge(check_xmod_morphism(p.xmod, x, s1, s0), "sigma.");
  auto tri = [&](const std::string& name, const Morphism& lhs, const Morphism& rhs) {
    r.add_check(name, same_map(lhs, rhs) ? json(nullptr) : json{{"problem", name + " does not commute"}});
  };
  tri("triangle.identity.1", compose(s1, p.i1_1), identity_morphism(x.c1));
  tri("triangle.identity.0", compose(s0, p.i1_0), identity_morphism(x.c0));
  tri("triangle.mu.1", compose(s1, p.i2_1), h.mu1);
  tri("triangle.mu.0", compose(s0, p.i2_0), h.mu0);
  return r;
}

Report huq_center_check(const PreCrossedModule& x, const std::vector<HuqCandidate>& candidates) {
  Report r("huq-check");
  XmodCenter z = xmod_center(x);
  SubXmod zs = sub_xmod(x, z.z1, z.z0, "center");
  r.merge(huq_central_report(x, {zs.xmod, zs.inc1, zs.inc0}), "centrality.");
  json cands = json::array();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const HuqCandidate& h = candidates[k];
    Report cr = huq_central_report(x, h);
    json info{{"central", cr.passed()}};
    if (!cr.passed()) {
      const CheckEntry* f = cr.first_failure();
      if (f) info["witness"] = json{{"check", f->name}, {"witness", f->witness}};
      cands.push_back(info);
      continue;
    }
    cands.push_back(info);
    const std::string pre = "maximality." + std::to_string(k) + ".";
    r.add_check(pre + "image-in-z1", z.z1.contains(image(h.mu1)) ? json(nullptr) : subobject_difference(image(h.mu1), z.z1));
    r.add_check(pre + "image-in-z0", z.z0.contains(image(h.mu0)) ? json(nullptr) : subobject_difference(image(h.mu0), z.z0));
  }
  r.details()["candidates"] = cands;
  r.details()["z1"] = z.z1.to_json();
  r.details()["z0"] = z.z0.to_json();
  return r;
}

XmodExtension xmod_extension_from_crossed_ideal(const PreCrossedModule& x, const CrossedIdeal& k,
                                                const std::string& name) {
  const std::string nm = name.empty() ? "ext" : name;
  SubXmod a = sub_xmod(x, k.k1.sub(), k.k0.sub(), nm + "_kernel");
  QuotientXmod q = quotient_xmod(x, k, nm + "_quotient");
  return {a.xmod, x, q.xmod, a.inc1, a.inc0, q.pi1, q.pi0};
}

Report xmod_central_extension_check(const XmodExtension& e) {
  Report r("xmod-ext-central");
  r.merge(validate_extension({e.a.c1, e.b.c1, e.c.c1, e.iota1, e.pi1}), "ext1.");
  r.merge(validate_extension({e.a.c0, e.b.c0, e.c.c0, e.iota0, e.pi0}), "ext0.");
  r.merge(check_xmod_morphism(e.a, e.b, e.iota1, e.iota0), "iota.");
  r.merge(check_xmod_morphism(e.b, e.c, e.pi1, e.pi0), "pi.");
  if (r.failed()) return r;
  if (!is_singular_xmod(e.a)) {
    r.details()["error"] = "precondition-violation";
    r.add_fail("precondition.kernel-singular", json{{"problem", "the kernel crossed module is not singular"}});
    return r;
  }
  r.add_pass("precondition.kernel-singular");
  XmodCenter z = xmod_center(e.b);
  Subobject im1 = image(e.iota1), im0 = image(e.iota0);
  const bool in1 = z.z1.contains(im1), in0 = z.z0.contains(im0);
  r.add_check("image-in-center.1", in1 ? json(nullptr) : subobject_difference(im1, z.z1));
  r.add_check("image-in-center.0", in0 ? json(nullptr) : subobject_difference(im0, z.z0));
  if (!in1 || !in0) return r;
  SubXmod zs = sub_xmod(e.b, z.z1, z.z0, "center");
  Preimage b1(zs.inc1), b0(zs.inc0);
  std::vector<Element> g1, g0;
  for (const auto& v : im1.spanning_elements()) g1.push_back(b1(v));
  for (const auto& v : im0.spanning_elements()) g0.push_back(b0(v));
  r.merge(check_crossed_ideal(zs.xmod, Subobject::from_elements(zs.xmod.c1, g1),
                              Subobject::from_elements(zs.xmod.c0, g0)),
          "crossed-ideal-of-center.");
  return r;
}

}  // namespace mci
