#include "mci/validation.hpp"

#include <set>

#include "mci/errors.hpp"

namespace mci {

bool within_cap(Report& report, const std::string& name, std::uint64_t tuples) {
  if (tuples <= enumeration_cap()) return true;
  report.add_not_checked(name, std::to_string(tuples) + " tuples exceed the enumeration cap of " +
                                   std::to_string(enumeration_cap()));
  return false;
}

json assignment_json(const MciObject& obj,
                     std::initializer_list<std::pair<const char*, Element>> vars) {
  json j = json::object();
  for (const auto& [name, value] : vars) j[name] = obj.describe(value);
  return j;
}

json mismatch_json(const MciObject& obj,
                   std::initializer_list<std::pair<const char*, Element>> vars, const Element& lhs,
                   const Element& rhs) {
  json j{{"assignment", assignment_json(obj, vars)}};
  j["lhs"] = obj.describe(lhs);
  j["rhs"] = obj.describe(rhs);
  return j;
}

namespace {

using Id = std::uint32_t;

bool table_shapes(const TableObject& t, Report& r) {
  const std::size_t n = t.size;
  auto bad = [&](const std::string& what) {
    r.add_fail("tables.shape", json{{"problem", what}});
    return false;
  };
  if (n == 0) return bad("empty carrier");
  if (t.zero >= n) return bad("zero id out of range");
  if (t.add_table.size() != n * n) return bad("addition table has wrong size");
  if (t.neg_table.size() != n) return bad("negation table has wrong size");
  for (Id v : t.add_table)
    if (v >= n) return bad("addition table entry out of range");
  for (Id v : t.neg_table)
    if (v >= n) return bad("negation table entry out of range");
  if (t.binary.size() != t.signature.binary().size()) return bad("binary table count mismatch");
  if (t.unary.size() != t.signature.unary().size()) return bad("unary table count mismatch");
  for (std::size_t op = 0; op < t.binary.size(); ++op) {
    if (t.binary[op].size() != n * n)
      return bad("table of '" + t.signature.binary()[op].name + "' has wrong size");
    for (Id v : t.binary[op])
      if (v >= n) return bad("table of '" + t.signature.binary()[op].name + "' out of range");
  }
  for (std::size_t op = 0; op < t.unary.size(); ++op) {
    if (t.unary[op].size() != n) return bad("table of '" + t.signature.unary()[op] + "' has wrong size");
    for (Id v : t.unary[op])
      if (v >= n) return bad("table of '" + t.signature.unary()[op] + "' out of range");
  }
  r.add_pass("tables.shape");
  return true;
}

void validate_table(const MciObject& obj, Report& r) {
  const TableObject& t = obj.table();
  if (!table_shapes(t, r)) return;
  const Id n = t.size;
  const std::uint64_t n2 = std::uint64_t{n} * n, n3 = n2 * n;
  const auto& sig = t.signature;

  {
    json w;
    for (Id x = 0; x < n && w.is_null(); ++x)
      if (t.add(t.zero, x) != x || t.add(x, t.zero) != x)
        w = mismatch_json(obj, {{"x", x}}, t.add(t.zero, x), Element{x});
    r.add_check("group.identity", w);
  }
  {
    json w;
    for (Id x = 0; x < n && w.is_null(); ++x)
      if (t.add(x, t.neg(x)) != t.zero || t.add(t.neg(x), x) != t.zero)
        w = mismatch_json(obj, {{"x", x}}, t.add(x, t.neg(x)), Element{t.zero});
    r.add_check("group.inverse", w);
  }
  if (within_cap(r, "group.associativity", n3)) {
    json w;
    for (Id x = 0; x < n && w.is_null(); ++x)
      for (Id y = 0; y < n && w.is_null(); ++y) {
        Id xy = t.add(x, y);
        for (Id z = 0; z < n; ++z) {
          Id l = t.add(xy, z), rr = t.add(x, t.add(y, z));
          if (l != rr) {
            w = mismatch_json(obj, {{"x", x}, {"y", y}, {"z", z}}, l, rr);
            break;
          }
        }
      }
    r.add_check("group.associativity", w);
  }

  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    const std::string& name = sig.binary()[op].name;
    std::size_t p = sig.partner(op);
    if (within_cap(r, "swap." + name, n2)) {
      json w;
      for (Id x = 0; x < n && w.is_null(); ++x)
        for (Id y = 0; y < n; ++y)
          if (t.star(p, x, y) != t.star(op, y, x)) {
            w = mismatch_json(obj, {{"x", x}, {"y", y}}, t.star(p, x, y), t.star(op, y, x));
            break;
          }
      r.add_check("swap." + name, w);
    }
    if (within_cap(r, "distributive." + name, n3)) {
      json w;
      for (Id x = 0; x < n && w.is_null(); ++x)
        for (Id y = 0; y < n && w.is_null(); ++y) {
          Id xy = t.star(op, x, y);
          for (Id z = 0; z < n; ++z) {
            Id l = t.star(op, x, t.add(y, z)), rr = t.add(xy, t.star(op, x, z));
            if (l != rr) {
              w = mismatch_json(obj, {{"x", x}, {"y", y}, {"z", z}}, l, rr);
              break;
            }
          }
        }
      r.add_check("distributive." + name, w);
    }
    if (within_cap(r, "axiom1." + name, n3)) {
      // only the distinct values x2*x3 matter
      std::vector<bool> seen(n, false);
      std::vector<std::pair<Id, Id>> values;
      for (Id x = 0; x < n; ++x)
        for (Id y = 0; y < n; ++y) {
          Id s = t.star(op, x, y);
          if (!seen[s]) {
            seen[s] = true;
            values.emplace_back(x, y);
          }
        }
      json w;
      for (auto [x2, x3] : values) {
        Id s = t.star(op, x2, x3);
        for (Id x1 = 0; x1 < n; ++x1)
          if (t.add(x1, s) != t.add(s, x1)) {
            w = mismatch_json(obj, {{"x1", x1}, {"x2", x2}, {"x3", x3}}, t.add(x1, s), t.add(s, x1));
            break;
          }
        if (!w.is_null()) break;
      }
      r.add_check("axiom1." + name, w);
    }
  }

  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    const std::string& name = sig.unary()[u];
    if (within_cap(r, "unary-additive." + name, n2)) {
      json w;
      for (Id x = 0; x < n && w.is_null(); ++x)
        for (Id y = 0; y < n; ++y) {
          Id l = t.apply(u, t.add(x, y)), rr = t.add(t.apply(u, x), t.apply(u, y));
          if (l != rr) {
            w = mismatch_json(obj, {{"x", x}, {"y", y}}, l, rr);
            break;
          }
        }
      r.add_check("unary-additive." + name, w);
    }
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      std::string check = "unary-multiplicative." + name + "." + sig.binary()[op].name;
      if (!within_cap(r, check, n2)) continue;
      json w;
      for (Id x = 0; x < n && w.is_null(); ++x)
        for (Id y = 0; y < n; ++y) {
          Id l = t.apply(u, t.star(op, x, y)), rr = t.star(op, t.apply(u, x), t.apply(u, y));
          if (l != rr) {
            w = mismatch_json(obj, {{"x", x}, {"y", y}}, l, rr);
            break;
          }
        }
      r.add_check(check, w);
    }
  }
}

void validate_linear(const MciObject& obj, Report& r) {
  const LinearObject& l = obj.linear();
  const auto& sig = l.signature;
  const std::size_t n = l.dim;
  bool shapes = l.products.size() == sig.binary().size() && l.unary.size() == sig.unary().size() &&
                l.basis_labels.size() == n;
  for (const auto& p : l.products) {
    shapes = shapes && p.size() == n * n;
    for (const auto& v : p) shapes = shapes && v.size() == n;
  }
  for (const auto& m : l.unary) shapes = shapes && m.rows() == n && m.cols() == n;
  if (!shapes) {
    r.add_fail("tensors.shape", json{{"problem", "tensor or matrix dimensions disagree with dim"}});
    return;
  }
  r.add_pass("tensors.shape");
  r.add_by_construction("group.axioms");
  r.add_by_construction("axiom1");
  r.add_by_construction("distributive");
  r.add_by_construction("unary-additive");

  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    std::size_t p = sig.partner(op);
    json w;
    for (std::size_t i = 0; i < n && w.is_null(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(l.product(p, i, j) == l.product(op, j, i))) {
          Element ei = l.basis_vector(i), ej = l.basis_vector(j);
          w = mismatch_json(obj, {{"x", ei}, {"y", ej}}, l.product(p, i, j), l.product(op, j, i));
          break;
        }
    r.add_check("swap." + sig.binary()[op].name, w);
  }
  for (std::size_t u = 0; u < sig.unary().size(); ++u)
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      json w;
      for (std::size_t i = 0; i < n && w.is_null(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector lhs = l.apply(u, l.product(op, i, j));
          Vector rhs = l.multiply(op, l.unary[u].row(i), l.unary[u].row(j));
          if (!(lhs == rhs)) {
            w = mismatch_json(obj, {{"x", l.basis_vector(i)}, {"y", l.basis_vector(j)}}, lhs, rhs);
            break;
          }
        }
      r.add_check("unary-multiplicative." + sig.unary()[u] + "." + sig.binary()[op].name, w);
    }
}

}  // namespace

Report validate_structure(const MciObject& obj) {
  Report r("structure");
  if (obj.is_table())
    validate_table(obj, r);
  else
    validate_linear(obj, r);
  return r;
}

Report validate_morphism(const Morphism& f) {
  Report r("morphism");
  const MciObject& A = *f.source();
  const MciObject& B = *f.target();
  if (!(A.signature() == B.signature()))
    fail(ErrorKind::signature_mismatch, "morphism source and target have different signatures");
  const auto& sig = A.signature();
  auto wit = [&](const char* check, std::initializer_list<std::pair<const char*, Element>> vars,
                 const Element& lhs, const Element& rhs) {
    json w{{"assignment", assignment_json(A, vars)}};
    w["lhs"] = B.describe(lhs);
    w["rhs"] = B.describe(rhs);
    r.add_fail(check, std::move(w));
  };

  if (f.is_table()) {
    const TableObject& ta = A.table();
    const TableObject& tb = B.table();
    const Id n = ta.size;
    if (f(ta.zero) != tb.zero)
      wit("preserves.zero", {}, f(ta.zero), tb.zero);
    else
      r.add_pass("preserves.zero");
    if (within_cap(r, "preserves.add", std::uint64_t{n} * n)) {
      bool ok = true;
      for (Id x = 0; x < n && ok; ++x)
        for (Id y = 0; y < n; ++y)
          if (f(ta.add(x, y)) != tb.add(f(x), f(y))) {
            wit("preserves.add", {{"x", x}, {"y", y}}, f(ta.add(x, y)), tb.add(f(x), f(y)));
            ok = false;
            break;
          }
      if (ok) r.add_pass("preserves.add");
    }
    for (std::size_t u = 0; u < sig.unary().size(); ++u) {
      bool ok = true;
      for (Id x = 0; x < n; ++x)
        if (f(ta.apply(u, x)) != tb.apply(u, f(x))) {
          wit(("preserves." + sig.unary()[u]).c_str(), {{"x", x}}, f(ta.apply(u, x)), tb.apply(u, f(x)));
          ok = false;
          break;
        }
      if (ok) r.add_pass("preserves." + sig.unary()[u]);
    }
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      std::string check = "preserves." + sig.binary()[op].name;
      if (!within_cap(r, check, std::uint64_t{n} * n)) continue;
      bool ok = true;
      for (Id x = 0; x < n && ok; ++x)
        for (Id y = 0; y < n; ++y)
          if (f(ta.star(op, x, y)) != tb.star(op, f(x), f(y))) {
            wit(check.c_str(), {{"x", x}, {"y", y}}, f(ta.star(op, x, y)), tb.star(op, f(x), f(y)));
            ok = false;
            break;
          }
      if (ok) r.add_pass(check);
    }
    return r;
  }

  const LinearObject& la = A.linear();
  const LinearObject& lb = B.linear();
  r.add_by_construction("preserves.zero");
  r.add_by_construction("preserves.add");
  const std::size_t n = la.dim;
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      Vector lhs = f(la.apply(u, la.basis_vector(i)));
      Vector rhs = lb.apply(u, f(la.basis_vector(i)));
      if (!(lhs == rhs)) {
        wit(("preserves." + sig.unary()[u]).c_str(), {{"x", la.basis_vector(i)}}, lhs, rhs);
        ok = false;
        break;
      }
    }
    if (ok) r.add_pass("preserves." + sig.unary()[u]);
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f(la.basis_vector(i)));
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector lhs = f(la.product(op, i, j));
        Vector rhs = lb.multiply(op, images[i], images[j]);
        if (!(lhs == rhs)) {
          wit(("preserves." + sig.binary()[op].name).c_str(),
              {{"x", la.basis_vector(i)}, {"y", la.basis_vector(j)}}, lhs, rhs);
          ok = false;
          break;
        }
      }
    if (ok) r.add_pass("preserves." + sig.binary()[op].name);
  }
  return r;
}

namespace {

void subobject_checks(const Subobject& s, Report& r) {
  const MciObject& P = *s.parent();
  const auto& sig = P.signature();
  if (s.is_table()) {
    const TableObject& t = P.table();
    const auto& ids = s.ids();
    const std::uint64_t m2 = std::uint64_t{ids.size()} * ids.size();
    r.add_check("contains.zero", s.contains(t.zero) ? json() : json{{"missing", t.label(t.zero)}});
    if (within_cap(r, "closed.add", m2)) {
      json w;
      for (Id x : ids) {
        for (Id y : ids)
          if (!s.contains(t.add(x, y))) {
            w = assignment_json(P, {{"x", x}, {"y", y}, {"x+y", t.add(x, y)}});
            break;
          }
        if (!w.is_null()) break;
      }
      r.add_check("closed.add", w);
    }
    {
      json w;
      for (Id x : ids)
        if (!s.contains(t.neg(x))) {
          w = assignment_json(P, {{"x", x}, {"-x", t.neg(x)}});
          break;
        }
      r.add_check("closed.neg", w);
    }
    for (std::size_t u = 0; u < sig.unary().size(); ++u) {
      json w;
      for (Id x : ids)
        if (!s.contains(t.apply(u, x))) {
          w = assignment_json(P, {{"x", x}, {"image", t.apply(u, x)}});
          break;
        }
      r.add_check("closed.unary." + sig.unary()[u], w);
    }
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      std::string check = "closed." + sig.binary()[op].name;
      if (!within_cap(r, check, m2)) continue;
      json w;
      for (Id x : ids) {
        for (Id y : ids)
          if (!s.contains(t.star(op, x, y))) {
            w = assignment_json(P, {{"x", x}, {"y", y}, {"product", t.star(op, x, y)}});
            break;
          }
        if (!w.is_null()) break;
      }
      r.add_check(check, w);
    }
    return;
  }
  const LinearObject& l = P.linear();
  const auto basis = s.subspace().basis_vectors();
  r.add_by_construction("contains.zero");
  r.add_by_construction("closed.add");
  r.add_by_construction("closed.neg");
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    json w;
    for (const auto& b : basis) {
      Vector img = l.apply(u, b);
      if (!s.subspace().contains(img)) {
        w = assignment_json(P, {{"x", b}, {"image", img}});
        break;
      }
    }
    r.add_check("closed.unary." + sig.unary()[u], w);
  }
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    json w;
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        Vector p = l.multiply(op, x, y);
        if (!s.subspace().contains(p)) {
          w = assignment_json(P, {{"x", x}, {"y", y}, {"product", p}});
          break;
        }
      }
      if (!w.is_null()) break;
    }
    r.add_check("closed." + sig.binary()[op].name, w);
  }
}

}  // namespace

Report validate_subobject(const Subobject& s) {
  Report r("subobject");
  subobject_checks(s, r);
  return r;
}

Report validate_ideal(const Subobject& s) {
  Report r("ideal");
  subobject_checks(s, r);
  const MciObject& P = *s.parent();
  const auto& sig = P.signature();
  if (s.is_table()) {
    const TableObject& t = P.table();
    const Id n = t.size;
    const std::uint64_t mn = std::uint64_t{s.ids().size()} * n;
    if (within_cap(r, "normal", mn)) {
      json w;
      for (Id g = 0; g < n && w.is_null(); ++g)
        for (Id a : s.ids())
          if (!s.contains(t.conj(g, a))) {
            w = assignment_json(P, {{"g", g}, {"a", a}, {"g+a-g", t.conj(g, a)}});
            break;
          }
      r.add_check("normal", w);
    }
    for (std::size_t op = 0; op < sig.binary().size(); ++op) {
      std::string check = "absorbing." + sig.binary()[op].name;
      if (!within_cap(r, check, 2 * mn)) continue;
      json w;
      for (Id a : s.ids()) {
        for (Id b = 0; b < n; ++b) {
          if (!s.contains(t.star(op, a, b))) {
            w = assignment_json(P, {{"a", a}, {"b", b}, {"a*b", t.star(op, a, b)}});
            break;
          }
          if (!s.contains(t.star(op, b, a))) {
            w = assignment_json(P, {{"a", a}, {"b", b}, {"b*a", t.star(op, b, a)}});
            break;
          }
        }
        if (!w.is_null()) break;
      }
      r.add_check(check, w);
    }
    return r;
  }
  const LinearObject& l = P.linear();
  r.add_by_construction("normal");
  const auto basis = s.subspace().basis_vectors();
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    json w;
    for (const auto& a : basis) {
      for (std::size_t j = 0; j < l.dim; ++j) {
        Vector b = l.basis_vector(j);
        Vector ab = l.multiply(op, a, b), ba = l.multiply(op, b, a);
        if (!s.subspace().contains(ab)) {
          w = assignment_json(P, {{"a", a}, {"b", b}, {"a*b", ab}});
          break;
        }
        if (!s.subspace().contains(ba)) {
          w = assignment_json(P, {{"a", a}, {"b", b}, {"b*a", ba}});
          break;
        }
      }
      if (!w.is_null()) break;
    }
    r.add_check("absorbing." + sig.binary()[op].name, w);
  }
  return r;
}

Ideal Ideal::make(Subobject sub) {
  Report r = validate_ideal(sub);
  bool other = false, unary = false;
  json witness;
  for (const auto& e : r.entries()) {
    if (e.status == Status::pass || e.status == Status::holds_by_construction) continue;
    bool is_unary = e.name.rfind("closed.unary.", 0) == 0;
    if (is_unary)
      unary = true;
    else
      other = true;
    if (witness.is_null()) witness = json{{"check", e.name}, {"witness", e.witness}};
  }
  if (other) fail(ErrorKind::ideal_invalid, "not an ideal: " + witness.dump());
  if (unary)
    fail(ErrorKind::ideal_not_unary_stable,
         "star-absorbing normal subobject that is not stable under the unary operations: " +
             witness.dump());
  return Ideal(std::move(sub));
}

}  // namespace mci
