#include "mci/actions.hpp"

#include <algorithm>
#include <set>

#include "mci/errors.hpp"
#include "mci/validation.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;

void require_compatible(const MciObject& A, const MciObject& B) {
  if (!(A.signature() == B.signature()))
    fail(ErrorKind::signature_mismatch, "acting and acted objects have different signatures");
  if (A.is_table() != B.is_table())
    fail(ErrorKind::signature_mismatch, "acting and acted objects use different backends");
  if (A.is_linear() && !(*A.field() == *B.field()))
    fail(ErrorKind::signature_mismatch, "acting and acted objects live over different fields");
}

}  // namespace

ActionData ActionData::trivial(ObjectPtr acting, ObjectPtr acted) {
  require_compatible(*acted, *acting);
  ActionData act;
  act.acting = std::move(acting);
  act.acted = std::move(acted);
  const std::size_t ops = act.acted->signature().binary().size();
  const std::size_t na = act.acted->extent(), nb = act.acting->extent();
  if (act.is_table()) {
    const Id z = act.acted->table().zero;
    act.dot.resize(nb * na);
    for (Id b = 0; b < nb; ++b)
      for (Id a = 0; a < na; ++a) act.dot[b * na + a] = a;
    act.left.assign(ops, std::vector<Id>(nb * na, z));
    act.right.assign(ops, std::vector<Id>(na * nb, z));
  } else {
    Vector zero = act.acted->linear().zero_vector();
    act.left_lin.assign(ops, std::vector<Vector>(nb * na, zero));
    act.right_lin.assign(ops, std::vector<Vector>(na * nb, zero));
  }
  return act;
}

Vector ActionData::left_vec(std::size_t op, const Vector& b, const Vector& a) const {
  const std::size_t na = acted->extent(), nb = acting->extent();
  Vector r = acted->linear().zero_vector();
  for (std::size_t i = 0; i < nb; ++i) {
    if (b[i].is_zero()) continue;
    for (std::size_t j = 0; j < na; ++j) {
      if (a[j].is_zero()) continue;
      r += (b[i] * a[j]) * left_lin[op][i * na + j];
    }
  }
  return r;
}

Vector ActionData::right_vec(std::size_t op, const Vector& a, const Vector& b) const {
  const std::size_t na = acted->extent(), nb = acting->extent();
  Vector r = acted->linear().zero_vector();
  for (std::size_t j = 0; j < na; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < nb; ++i) {
      if (b[i].is_zero()) continue;
      r += (a[j] * b[i]) * right_lin[op][j * nb + i];
    }
  }
  return r;
}

Element ActionData::act_dot(const Element& b, const Element& a) const {
  if (is_table()) return dot_id(as_id(b), as_id(a));
  return a;
}

Element ActionData::act_left(std::size_t op, const Element& b, const Element& a) const {
  if (is_table()) return left_id(op, as_id(b), as_id(a));
  return left_vec(op, as_vector(b), as_vector(a));
}

Element ActionData::act_right(std::size_t op, const Element& a, const Element& b) const {
  if (is_table()) return right_id(op, as_id(a), as_id(b));
  return right_vec(op, as_vector(a), as_vector(b));
}

void ActionData::complete_partners() {
  const Signature& sig = acted->signature();
  const std::size_t na = acted->extent(), nb = acting->extent();
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    if (!sig.binary()[op].derived) continue;
    const std::size_t p = sig.partner(op);
    if (is_table()) {
      for (Id b = 0; b < nb; ++b)
        for (Id a = 0; a < na; ++a) {
          left[op][b * na + a] = right[p][a * nb + b];
          right[op][a * nb + b] = left[p][b * na + a];
        }
    } else {
      for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < na; ++j) {
          left_lin[op][i * na + j] = right_lin[p][j * nb + i];
          right_lin[op][j * nb + i] = left_lin[p][i * na + j];
        }
    }
  }
}

ActionData tabulate_action(ObjectPtr acting, ObjectPtr acted, const DotFn& dot, const StarFn& left,
                           const StarFn& right) {
  ActionData act = ActionData::trivial(std::move(acting), std::move(acted));
  const std::size_t ops = act.acted->signature().binary().size();
  const std::size_t na = act.acted->extent(), nb = act.acting->extent();
  const auto as = act.acted->spanning_elements(), bs = act.acting->spanning_elements();
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < na; ++a) {
      if (act.is_table()) {
        act.dot[b * na + a] = as_id(dot(bs[b], as[a]));
        for (std::size_t op = 0; op < ops; ++op) {
          act.left[op][b * na + a] = as_id(left(op, bs[b], as[a]));
          act.right[op][a * nb + b] = as_id(right(op, as[a], bs[b]));
        }
      } else {
        for (std::size_t op = 0; op < ops; ++op) {
          act.left_lin[op][b * na + a] = as_vector(left(op, bs[b], as[a]));
          act.right_lin[op][a * nb + b] = as_vector(right(op, as[a], bs[b]));
        }
      }
    }
  return act;
}

Report validate_action(const ActionData& act) {
  Report r("action");
  require_compatible(*act.acted, *act.acting);
  const Signature& sig = act.acted->signature();
  const std::size_t ops = sig.binary().size();
  const std::size_t na = act.acted->extent(), nb = act.acting->extent();
  bool ok = true;
  if (act.is_table()) {
    ok = act.dot.size() == nb * na && act.left.size() == ops && act.right.size() == ops;
    for (std::size_t op = 0; ok && op < ops; ++op)
      ok = act.left[op].size() == nb * na && act.right[op].size() == na * nb;
    if (ok) {
      auto in_range = [&](const std::vector<Id>& v) {
        return std::all_of(v.begin(), v.end(), [&](Id x) { return x < na; });
      };
      ok = in_range(act.dot);
      for (std::size_t op = 0; ok && op < ops; ++op) ok = in_range(act.left[op]) && in_range(act.right[op]);
    }
  } else {
    ok = act.left_lin.size() == ops && act.right_lin.size() == ops;
    for (std::size_t op = 0; ok && op < ops; ++op) {
      ok = act.left_lin[op].size() == nb * na && act.right_lin[op].size() == na * nb;
      for (std::size_t k = 0; ok && k < nb * na; ++k)
        ok = act.left_lin[op][k].size() == na && act.right_lin[op][k].size() == na;
    }
  }
  if (!ok) {
    r.add_fail("action.shape", json{{"problem", "action data dimensions disagree with the objects"}});
    return r;
  }
  r.add_pass("action.shape");
  for (std::size_t op = 0; op < ops; ++op) {
    const std::size_t p = sig.partner(op);
    json w;
    if (act.is_table()) {
      for (Id b = 0; b < nb && w.is_null(); ++b)
        for (Id a = 0; a < na; ++a)
          if (act.left_id(p, b, a) != act.right_id(op, a, b)) {
            w = json{{"b", act.acting->describe(Element{b})},
                     {"a", act.acted->describe(Element{a})},
                     {"lhs", act.acted->describe(Element{act.left_id(p, b, a)})},
                     {"rhs", act.acted->describe(Element{act.right_id(op, a, b)})}};
            break;
          }
    } else {
      for (std::size_t i = 0; i < nb && w.is_null(); ++i)
        for (std::size_t j = 0; j < na; ++j)
          if (!(act.left_lin[p][i * na + j] == act.right_lin[op][j * nb + i])) {
            w = json{{"b", act.acting->linear().basis_labels[i]},
                     {"a", act.acted->linear().basis_labels[j]},
                     {"lhs", act.acted->linear().describe(act.left_lin[p][i * na + j])},
                     {"rhs", act.acted->linear().describe(act.right_lin[op][j * nb + i])}};
            break;
          }
    }
    r.add_check("action.swap." + sig.binary()[op].name, w);
  }
  return r;
}

Semidirect build_semidirect(const ActionData& act, const std::string& name) {
  Report v = validate_action(act);
  if (v.failed())
    fail(ErrorKind::invalid_input, "invalid action data: " + v.first_failure()->name + " " +
                                       v.first_failure()->witness.dump());
  const ObjectPtr& A = act.acted;
  const ObjectPtr& B = act.acting;
  const Signature& sig = A->signature();
  const std::string nm = name.empty() ? A->name() + "⋊" + B->name() : name;

  if (act.is_table()) {
    const TableObject& ta = A->table();
    const TableObject& tb = B->table();
    const Id na = ta.size, nb = tb.size;
    if (std::uint64_t{na} * nb > kMaxTableCarrier)
      fail(ErrorKind::invalid_input, "semidirect carrier exceeds " + std::to_string(kMaxTableCarrier));
    const Id n = na * nb;
    auto pack = [&](Id a, Id b) { return a + na * b; };
    TableObject out;
    out.signature = sig;
    out.size = n;
    out.zero = pack(ta.zero, tb.zero);
    out.add_table.resize(std::size_t{n} * n);
    out.neg_table.resize(n);
    out.binary.assign(sig.binary().size(), std::vector<Id>(std::size_t{n} * n));
    out.unary.assign(sig.unary().size(), std::vector<Id>(n));
    for (Id x = 0; x < n; ++x) {
      const Id a1 = x % na, b1 = x / na;
      out.labels.push_back("(" + ta.label(a1) + "," + tb.label(b1) + ")");
      // -(a,b) = ((-b).(-a), -b)
      out.neg_table[x] = pack(act.dot_id(tb.neg(b1), ta.neg(a1)), tb.neg(b1));
      for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u][x] = pack(ta.apply(u, a1), tb.apply(u, b1));
      for (Id y = 0; y < n; ++y) {
        const Id a2 = y % na, b2 = y / na;
        out.add_table[std::size_t{x} * n + y] = pack(ta.add(a1, act.dot_id(b1, a2)), tb.add(b1, b2));
        for (std::size_t op = 0; op < sig.binary().size(); ++op) {
          Id first = ta.add(ta.add(ta.star(op, a1, a2), act.right_id(op, a1, b2)), act.left_id(op, b1, a2));
          out.binary[op][std::size_t{x} * n + y] = pack(first, tb.star(op, b1, b2));
        }
      }
    }
    ObjectPtr S = make_object(std::move(out), A->variety(), nm);
    std::vector<Id> inj(na), sec(nb), proj(n);
    for (Id a = 0; a < na; ++a) inj[a] = pack(a, tb.zero);
    for (Id b = 0; b < nb; ++b) sec[b] = pack(ta.zero, b);
    for (Id x = 0; x < n; ++x) proj[x] = x / na;
    return {S, Morphism(A, S, std::move(inj)), Morphism(B, S, std::move(sec)), Morphism(S, B, std::move(proj))};
  }

  const LinearObject& la = A->linear();
  const LinearObject& lb = B->linear();
  const std::size_t da = la.dim, db = lb.dim, n = da + db;
  const Field& f = la.field;
  LinearObject out = LinearObject::zeros(sig, f, n);
  for (std::size_t i = 0; i < da; ++i) out.basis_labels[i] = "(" + la.basis_labels[i] + ",0)";
  for (std::size_t i = 0; i < db; ++i) out.basis_labels[da + i] = "(0," + lb.basis_labels[i] + ")";
  const Vector za = la.zero_vector(), zb = lb.zero_vector();
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) out.products[op][i * n + j] = concat(la.product(op, i, j), zb);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) out.products[op][i * n + da + j] = concat(act.right_lin[op][i * db + j], zb);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) out.products[op][(da + i) * n + j] = concat(act.left_lin[op][i * da + j], zb);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j)
        out.products[op][(da + i) * n + da + j] = concat(za, lb.product(op, i, j));
  }
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    for (std::size_t i = 0; i < da; ++i) out.unary[u].set_row(i, concat(la.unary[u].row(i), zb));
    for (std::size_t i = 0; i < db; ++i) out.unary[u].set_row(da + i, concat(za, lb.unary[u].row(i)));
  }
  ObjectPtr S = make_object(std::move(out), A->variety(), nm);
  Matrix inj(f, da, n), sec(f, db, n), proj(f, n, db);
  for (std::size_t i = 0; i < da; ++i) inj(i, i) = Scalar::one(f);
  for (std::size_t i = 0; i < db; ++i) sec(i, da + i) = proj(da + i, i) = Scalar::one(f);
  return {S, Morphism(A, S, std::move(inj)), Morphism(B, S, std::move(sec)), Morphism(S, B, std::move(proj))};
}

Report is_derived_action(const ActionData& act, Ambient ambient, LeibnizConvention conv) {
  Report r("action-check");
  r.merge(validate_action(act));
  if (r.failed()) return r;
  Semidirect sd = build_semidirect(act);
  if (ambient == Ambient::variety) {
    r.details()["ambient"] = "variety";
    r.merge(check_variety_as(*sd.object, act.acted->variety(), conv), "semidirect.");
  } else {
    r.details()["ambient"] = "groups-with-operations";
    r.merge(validate_structure(*sd.object), "semidirect.structure.");
  }
  return r;
}

namespace {

// The twelve conditions on table data. `dot_trivial` marks a linear source,
// whose conditions on the dot action hold by construction.
void table_conditions(const ActionData& act, bool dot_trivial, Report& r) {
  const TableObject& ta = act.acted->table();
  const TableObject& tb = act.acting->table();
  const MciObject& A = *act.acted;
  const MciObject& B = *act.acting;
  const Signature& sig = ta.signature;
  const Id na = ta.size, nb = tb.size;
  const std::size_t ops = sig.binary().size();
  auto a_ = [&](Id x) { return A.describe(Element{x}); };
  auto b_ = [&](Id x) { return B.describe(Element{x}); };
  const std::uint64_t NA = na, NB = nb;

  if (dot_trivial) {
    for (int c : {1, 2, 3}) r.add_by_construction("condition." + std::to_string(c));
  } else {
    {
      json w;
      for (Id a = 0; a < na; ++a)
        if (act.dot_id(tb.zero, a) != a) {
          w = json{{"a", a_(a)}, {"lhs", a_(act.dot_id(tb.zero, a))}, {"rhs", a_(a)}};
          break;
        }
      r.add_check("condition.1", w);
    }
    if (within_cap(r, "condition.2", NB * NA * NA)) {
      json w;
      for (Id b = 0; b < nb && w.is_null(); ++b)
        for (Id a1 = 0; a1 < na && w.is_null(); ++a1)
          for (Id a2 = 0; a2 < na; ++a2) {
            Id l = act.dot_id(b, ta.add(a1, a2)), rr = ta.add(act.dot_id(b, a1), act.dot_id(b, a2));
            if (l != rr) {
              w = json{{"b", b_(b)}, {"a1", a_(a1)}, {"a2", a_(a2)}, {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
          }
      r.add_check("condition.2", w);
    }
    if (within_cap(r, "condition.3", NB * NB * NA)) {
      json w;
      for (Id b1 = 0; b1 < nb && w.is_null(); ++b1)
        for (Id b2 = 0; b2 < nb && w.is_null(); ++b2)
          for (Id a = 0; a < na; ++a) {
            Id l = act.dot_id(tb.add(b1, b2), a), rr = act.dot_id(b1, act.dot_id(b2, a));
            if (l != rr) {
              w = json{{"b1", b_(b1)}, {"b2", b_(b2)}, {"a", a_(a)}, {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
          }
      r.add_check("condition.3", w);
    }
  }

  // 4 and 5: additivity of the left data; the right data is the left data of
  // the swap partner.
  if (within_cap(r, "condition.4", ops * NB * NA * NA)) {
    json w;
    for (std::size_t op = 0; op < ops && w.is_null(); ++op)
      for (Id b = 0; b < nb && w.is_null(); ++b)
        for (Id a1 = 0; a1 < na && w.is_null(); ++a1)
          for (Id a2 = 0; a2 < na; ++a2) {
            Id l = act.left_id(op, b, ta.add(a1, a2));
            Id rr = ta.add(act.left_id(op, b, a1), act.left_id(op, b, a2));
            if (l != rr) {
              w = json{{"op", sig.binary()[op].name}, {"b", b_(b)}, {"a1", a_(a1)}, {"a2", a_(a2)},
                       {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
          }
    r.add_check("condition.4", w);
  }
  if (within_cap(r, "condition.5", ops * NB * NB * NA)) {
    json w;
    for (std::size_t op = 0; op < ops && w.is_null(); ++op)
      for (Id b1 = 0; b1 < nb && w.is_null(); ++b1)
        for (Id b2 = 0; b2 < nb && w.is_null(); ++b2)
          for (Id a = 0; a < na; ++a) {
            Id l = act.left_id(op, tb.add(b1, b2), a);
            Id rr = ta.add(act.left_id(op, b1, a), act.left_id(op, b2, a));
            if (l != rr) {
              w = json{{"op", sig.binary()[op].name}, {"b1", b_(b1)}, {"b2", b_(b2)}, {"a", a_(a)},
                       {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
          }
    r.add_check("condition.5", w);
  }

  // value sets of b1*b2, a1*a2 and a*b per op
  auto values = [](std::size_t n1, std::size_t n2, auto f) {
    std::set<Id> s;
    for (Id x = 0; x < n1; ++x)
      for (Id y = 0; y < n2; ++y) s.insert(f(x, y));
    return std::vector<Id>(s.begin(), s.end());
  };
  if (dot_trivial) {
    for (int c : {6, 7, 8, 9, 10}) r.add_by_construction("condition." + std::to_string(c));
  } else {
    json w6, w7;
    for (std::size_t op = 0; op < ops; ++op) {
      auto bb = values(nb, nb, [&](Id x, Id y) { return tb.star(op, x, y); });
      auto aa = values(na, na, [&](Id x, Id y) { return ta.star(op, x, y); });
      auto ab = values(na, nb, [&](Id x, Id y) { return act.right_id(op, x, y); });
      for (Id c : bb) {
        for (Id v : aa)
          if (w6.is_null() && act.dot_id(c, v) != v)
            w6 = json{{"op", sig.binary()[op].name}, {"b1*b2", b_(c)}, {"a1*a2", a_(v)}, {"lhs", a_(act.dot_id(c, v))}};
        for (Id v : ab)
          if (w7.is_null() && act.dot_id(c, v) != v)
            w7 = json{{"op", sig.binary()[op].name}, {"b1*b2", b_(c)}, {"a*b", a_(v)}, {"lhs", a_(act.dot_id(c, v))}};
      }
    }
    r.add_check("condition.6", w6);
    r.add_check("condition.7", w7);
    if (within_cap(r, "condition.8", ops * NA * NA * NB)) {
      json w;
      for (std::size_t op = 0; op < ops && w.is_null(); ++op)
        for (Id a1 = 0; a1 < na && w.is_null(); ++a1)
          for (Id b = 0; b < nb && w.is_null(); ++b)
            for (Id a2 = 0; a2 < na; ++a2) {
              Id l = ta.star(op, a1, act.dot_id(b, a2)), rr = ta.star(op, a1, a2);
              if (l != rr) {
                w = json{{"op", sig.binary()[op].name}, {"a1", a_(a1)}, {"b", b_(b)}, {"a2", a_(a2)},
                         {"lhs", a_(l)}, {"rhs", a_(rr)}};
                break;
              }
            }
      r.add_check("condition.8", w);
    }
    if (within_cap(r, "condition.9", ops * NB * NB * NA)) {
      json w;
      for (std::size_t op = 0; op < ops && w.is_null(); ++op)
        for (Id b = 0; b < nb && w.is_null(); ++b)
          for (Id b1 = 0; b1 < nb && w.is_null(); ++b1)
            for (Id a = 0; a < na; ++a) {
              Id l = act.left_id(op, b, act.dot_id(b1, a)), rr = act.left_id(op, b, a);
              if (l != rr) {
                w = json{{"op", sig.binary()[op].name}, {"b", b_(b)}, {"b1", b_(b1)}, {"a", a_(a)},
                         {"lhs", a_(l)}, {"rhs", a_(rr)}};
                break;
              }
            }
      r.add_check("condition.9", w);
    }
    {
      json w;
      for (std::size_t u = 0; u < sig.unary().size() && w.is_null(); ++u)
        for (Id b = 0; b < nb && w.is_null(); ++b)
          for (Id a = 0; a < na; ++a) {
            Id l = ta.apply(u, act.dot_id(b, a)), rr = act.dot_id(tb.apply(u, b), ta.apply(u, a));
            if (l != rr) {
              w = json{{"op", sig.unary()[u]}, {"b", b_(b)}, {"a", a_(a)}, {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
          }
      r.add_check("condition.10", w);
    }
  }
  {
    json w;
    for (std::size_t u = 0; u < sig.unary().size() && w.is_null(); ++u)
      for (std::size_t op = 0; op < ops && w.is_null(); ++op)
        for (Id a = 0; a < na && w.is_null(); ++a)
          for (Id b = 0; b < nb; ++b) {
            Id l = ta.apply(u, act.right_id(op, a, b)), rr = act.right_id(op, ta.apply(u, a), tb.apply(u, b));
            Id l2 = ta.apply(u, act.left_id(op, b, a)), rr2 = act.left_id(op, tb.apply(u, b), ta.apply(u, a));
            if (l != rr) {
              w = json{{"op", sig.unary()[u] + "," + sig.binary()[op].name}, {"a", a_(a)}, {"b", b_(b)},
                       {"lhs", a_(l)}, {"rhs", a_(rr)}};
              break;
            }
            if (l2 != rr2) {
              w = json{{"op", sig.unary()[u] + "," + sig.binary()[op].name}, {"b", b_(b)}, {"a", a_(a)},
                       {"lhs", a_(l2)}, {"rhs", a_(rr2)}};
              break;
            }
          }
    r.add_check("condition.11", w);
  }
  {
    // star values x*y for x, y in A u B, as pairs (a, b) of the semidirect
    std::set<std::pair<Id, Id>> s;
    for (std::size_t op = 0; op < ops; ++op) {
      for (Id x = 0; x < na; ++x) {
        for (Id y = 0; y < na; ++y) s.insert({ta.star(op, x, y), tb.zero});
        for (Id y = 0; y < nb; ++y) {
          s.insert({act.right_id(op, x, y), tb.zero});
          s.insert({act.left_id(op, y, x), tb.zero});
        }
      }
      for (Id x = 0; x < nb; ++x)
        for (Id y = 0; y < nb; ++y) s.insert({ta.zero, tb.star(op, x, y)});
    }
    std::vector<std::pair<Id, Id>> vals(s.begin(), s.end());
    auto plus = [&](std::pair<Id, Id> p, std::pair<Id, Id> q) {
      return std::pair<Id, Id>{ta.add(p.first, act.dot_id(p.second, q.first)), tb.add(p.second, q.second)};
    };
    auto show = [&](std::pair<Id, Id> p) { return "(" + a_(p.first) + "," + b_(p.second) + ")"; };
    json w;
    if (within_cap(r, "condition.12", std::uint64_t{vals.size()} * vals.size())) {
      for (std::size_t i = 0; i < vals.size() && w.is_null(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
          if (plus(vals[i], vals[j]) != plus(vals[j], vals[i])) {
            w = json{{"x*y", show(vals[i])}, {"z*t", show(vals[j])}, {"lhs", show(plus(vals[i], vals[j]))},
                     {"rhs", show(plus(vals[j], vals[i]))}};
            break;
          }
      r.add_check("condition.12", w);
    }
  }
}

}  // namespace

Report check_action_conditions(const ActionData& act) {
  Report r("action-conditions");
  r.merge(validate_action(act));
  if (r.failed()) return r;
  if (act.is_table()) {
    table_conditions(act, false, r);
    return r;
  }
  if (act.acted->field()->is_rational())
    fail(ErrorKind::unsupported_check,
         "the twelve conditions need an enumerable carrier; base-change the objects to a finite field");
  TableRealization ra = realize_table(act.acted);
  TableRealization rb = realize_table(act.acting);
  ActionData t = realize_action(act, rb, ra);
  table_conditions(t, true, r);
  return r;
}

ActionData recover_action(const Morphism& inject, const Morphism& section) {
  const ObjectPtr& A = inject.source();
  const ObjectPtr& B = section.source();
  const MciObject& E = *inject.target();
  ActionData act = ActionData::trivial(B, A);
  const std::size_t ops = A->signature().binary().size();
  Preimage back(inject);
  if (act.is_table()) {
    const TableObject& te = E.table();
    const Id na = static_cast<Id>(A->extent()), nb = static_cast<Id>(B->extent());
    for (Id b = 0; b < nb; ++b)
      for (Id a = 0; a < na; ++a) {
        Id sb = section(b), ia = inject(a);
        act.dot[b * na + a] = as_id(back(te.conj(sb, ia)));
        for (std::size_t op = 0; op < ops; ++op) {
          act.left[op][b * na + a] = as_id(back(te.star(op, sb, ia)));
          act.right[op][a * nb + b] = as_id(back(te.star(op, ia, sb)));
        }
      }
    return act;
  }
  const LinearObject& le = E.linear();
  const std::size_t na = A->extent(), nb = B->extent();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      Vector sb = section.matrix().row(i), ia = inject.matrix().row(j);
      for (std::size_t op = 0; op < ops; ++op) {
        act.left_lin[op][i * na + j] = as_vector(back(le.multiply(op, sb, ia)));
        act.right_lin[op][j * nb + i] = as_vector(back(le.multiply(op, ia, sb)));
      }
    }
  return act;
}

ActionData realize_action(const ActionData& act, const TableRealization& acting, const TableRealization& acted) {
  ActionData t = ActionData::trivial(acting.table, acted.table);
  const std::size_t ops = acted.table->signature().binary().size();
  const Id na = static_cast<Id>(acted.table->extent()), nb = static_cast<Id>(acting.table->extent());
  const std::size_t da = act.acted->extent(), db = act.acting->extent();
  const std::uint32_t p = act.acted->field()->characteristic();
  std::vector<std::uint32_t> av(na * da), bv(nb * db), pw(da, 1);
  for (std::size_t k = 1; k < da; ++k) pw[k] = pw[k - 1] * p;
  for (Id a = 0; a < na; ++a) {
    const Vector v = acted.decode(a);
    for (std::size_t j = 0; j < da; ++j) av[a * da + j] = v[j].residue();
  }
  for (Id b = 0; b < nb; ++b) {
    const Vector v = acting.decode(b);
    for (std::size_t i = 0; i < db; ++i) bv[b * db + i] = v[i].residue();
  }
  // bilinear in residues: c_k = sum_ij b_i a_j T[i][j][k] mod p
  std::vector<std::uint32_t> lt(db * da * da), rt(db * da * da), acc(da);
  auto realize = [&](const std::vector<std::uint32_t>& tensor, Id b, Id a) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < db; ++i) {
      const std::uint32_t bi = bv[b * db + i];
      if (bi == 0) continue;
      for (std::size_t j = 0; j < da; ++j) {
        const std::uint32_t c = bi * av[a * da + j] % p;
        if (c == 0) continue;
        const std::uint32_t* row = &tensor[(i * da + j) * da];
        for (std::size_t k = 0; k < da; ++k) acc[k] += c * row[k];
      }
    }
    Id id = 0;
    for (std::size_t k = 0; k < da; ++k) id += (acc[k] % p) * pw[k];
    return id;
  };
  for (std::size_t op = 0; op < ops; ++op) {
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < da; ++k) {
          lt[(i * da + j) * da + k] = act.left_lin[op][i * da + j][k].residue();
          rt[(i * da + j) * da + k] = act.right_lin[op][j * db + i][k].residue();
        }
    for (Id b = 0; b < nb; ++b)
      for (Id a = 0; a < na; ++a) {
        t.left[op][b * na + a] = realize(lt, b, a);
        t.right[op][a * nb + b] = realize(rt, b, a);
      }
  }
  return t;
}

ActionData base_change(const ActionData& act, const ObjectPtr& acting, const ObjectPtr& acted) {
  if (act.is_table()) fail(ErrorKind::invalid_input, "base change needs a linear action");
  const Field f = *acted->field();
  auto reduce = [&](const Vector& v) {
    Vector out;
    out.reserve(v.size());
    for (const auto& s : v)
      out.push_back(s.field().is_rational() ? Scalar::from_rational(f, s.rational()) : Scalar::from_int(f, s.residue()));
    return out;
  };
  ActionData out = ActionData::trivial(acting, acted);
  for (std::size_t op = 0; op < act.left_lin.size(); ++op) {
    for (std::size_t k = 0; k < act.left_lin[op].size(); ++k) out.left_lin[op][k] = reduce(act.left_lin[op][k]);
    for (std::size_t k = 0; k < act.right_lin[op].size(); ++k) out.right_lin[op][k] = reduce(act.right_lin[op][k]);
  }
  return out;
}

bool same_action(const ActionData& x, const ActionData& y) {
  if (x.is_table() != y.is_table()) return false;
  if (x.is_table()) return x.dot == y.dot && x.left == y.left && x.right == y.right;
  return x.left_lin == y.left_lin && x.right_lin == y.right_lin;
}

}  // namespace mci
