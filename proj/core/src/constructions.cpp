#include "mci/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "mci/errors.hpp"
#include "mci/validation.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;

void require_same_signature(const MciObject& a, const MciObject& b, const char* what) {
  if (!(a.signature() == b.signature()))
    fail(ErrorKind::signature_mismatch, std::string(what) + ": objects have different signatures");
  if (a.is_table() != b.is_table())
    fail(ErrorKind::signature_mismatch, std::string(what) + ": objects use different backends");
  if (a.is_linear() && !(*a.field() == *b.field()))
    fail(ErrorKind::signature_mismatch, std::string(what) + ": objects live over different fields");
}

std::string or_default(const std::string& name, const std::string& fallback) {
  return name.empty() ? fallback : name;
}

}  // namespace

Ideal kernel(const Morphism& f) {
  if (f.is_table()) {
    std::vector<Id> ids;
    const Id z = f.target()->table().zero;
    for (Id x = 0; x < f.map().size(); ++x)
      if (f(x) == z) ids.push_back(x);
    return Ideal::unchecked(Subobject::from_ids(f.source(), std::move(ids)));
  }
  return Ideal::unchecked(Subobject::from_subspace(f.source(), Subspace::from_matrix(left_kernel(f.matrix()))));
}

Subobject image(const Morphism& f) {
  if (f.is_table()) return Subobject::from_ids(f.target(), f.map());
  Subspace sp = Subspace::from_matrix(f.matrix());
  if (f.matrix().rows() == 0) sp = Subspace(*f.target()->field(), f.target()->extent());
  return Subobject::from_subspace(f.target(), std::move(sp));
}

bool is_injective(const Morphism& f) {
  if (f.is_table()) {
    std::vector<Id> m = f.map();
    std::sort(m.begin(), m.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end();
  }
  return rank(f.matrix()) == f.matrix().rows();
}

bool is_surjective(const Morphism& f) {
  if (f.is_table()) return image(f).extent() == f.target()->extent();
  return rank(f.matrix()) == f.matrix().cols();
}

bool is_isomorphism(const Morphism& f) {
  if (f.source()->extent() != f.target()->extent()) return false;
  return is_injective(f) && is_surjective(f);
}

Materialized materialize(const Subobject& s, const std::string& name) {
  const ObjectPtr& P = s.parent();
  const Signature& sig = P->signature();
  const std::string nm = or_default(name, "sub(" + P->name() + ")");
  if (s.is_table()) {
    const TableObject& t = P->table();
    const auto& ids = s.ids();
    const Id m = static_cast<Id>(ids.size());
    std::vector<Id> index(t.size, UINT32_MAX);
    for (Id i = 0; i < m; ++i) index[ids[i]] = i;
    auto local = [&](Id x) {
      if (index[x] == UINT32_MAX)
        fail(ErrorKind::invalid_input, "subset is not closed under the operations (reaches " + t.label(x) + ")");
      return index[x];
    };
    TableObject out;
    out.signature = sig;
    out.size = m;
    out.zero = local(t.zero);
    out.add_table.resize(std::size_t{m} * m);
    out.neg_table.resize(m);
    out.binary.assign(sig.binary().size(), std::vector<Id>(std::size_t{m} * m));
    out.unary.assign(sig.unary().size(), std::vector<Id>(m));
    for (Id i = 0; i < m; ++i) {
      out.labels.push_back(t.label(ids[i]));
      out.neg_table[i] = local(t.neg(ids[i]));
      for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u][i] = local(t.apply(u, ids[i]));
      for (Id j = 0; j < m; ++j) {
        out.add_table[i * m + j] = local(t.add(ids[i], ids[j]));
        for (std::size_t op = 0; op < sig.binary().size(); ++op)
          out.binary[op][i * m + j] = local(t.star(op, ids[i], ids[j]));
      }
    }
    ObjectPtr obj = make_object(std::move(out), P->variety(), nm);
    return {obj, Morphism(obj, P, ids)};
  }
  const LinearObject& l = P->linear();
  const Subspace& sp = s.subspace();
  const std::size_t d = sp.dim();
  const auto basis = sp.basis_vectors();
  LinearObject out = LinearObject::zeros(sig, l.field, d);
  auto coords = [&](const Vector& v) {
    if (!sp.contains(v))
      fail(ErrorKind::invalid_input, "subspace is not closed under the operations (reaches " + l.describe(v) + ")");
    return sp.coordinates(v);
  };
  for (std::size_t i = 0; i < d; ++i) {
    out.basis_labels[i] = l.describe(basis[i]);
    for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u].set_row(i, coords(l.apply(u, basis[i])));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t op = 0; op < sig.binary().size(); ++op)
        out.products[op][i * d + j] = coords(l.multiply(op, basis[i], basis[j]));
  }
  ObjectPtr obj = make_object(std::move(out), P->variety(), nm);
  Matrix inc = d == 0 ? Matrix(l.field, 0, l.dim) : sp.basis();
  return {obj, Morphism(obj, P, inc)};
}

Quotient quotient(const ObjectPtr& obj, const Ideal& I, const std::string& name) {
  if (I.parent().get() != obj.get() && !(I.parent()->signature() == obj->signature() &&
                                         I.parent()->extent() == obj->extent()))
    fail(ErrorKind::invalid_input, "ideal belongs to a different object");
  Ideal::make(I.sub());  // throws ideal-invalid with a witness
  const Signature& sig = obj->signature();
  const std::string nm = or_default(name, obj->name() + "/I");

  if (obj->is_table()) {
    const TableObject& t = obj->table();
    const Id n = t.size;
    std::vector<Id> cls(n, UINT32_MAX), reps;
    for (Id x = 0; x < n; ++x) {
      if (cls[x] != UINT32_MAX) continue;
      Id c = static_cast<Id>(reps.size());
      reps.push_back(x);
      for (Id i : I.sub().ids()) {
        Id y = t.add(x, i);
        if (cls[y] != UINT32_MAX && cls[y] != c)
          fail(ErrorKind::ideal_invalid, "cosets overlap at " + t.label(y));
        cls[y] = c;
      }
    }
    const Id m = static_cast<Id>(reps.size());
    TableObject out;
    out.signature = sig;
    out.size = m;
    out.zero = cls[t.zero];
    out.add_table.resize(std::size_t{m} * m);
    out.neg_table.resize(m);
    out.binary.assign(sig.binary().size(), std::vector<Id>(std::size_t{m} * m));
    out.unary.assign(sig.unary().size(), std::vector<Id>(m));
    for (Id a = 0; a < m; ++a) {
      out.labels.push_back(I.is_zero() ? t.label(reps[a]) : "[" + t.label(reps[a]) + "]");
      out.neg_table[a] = cls[t.neg(reps[a])];
      for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u][a] = cls[t.apply(u, reps[a])];
      for (Id b = 0; b < m; ++b) {
        out.add_table[a * m + b] = cls[t.add(reps[a], reps[b])];
        for (std::size_t op = 0; op < sig.binary().size(); ++op)
          out.binary[op][a * m + b] = cls[t.star(op, reps[a], reps[b])];
      }
    }
    // representative independence
    auto bad = [&](const std::string& op, Id x, Id y) {
      fail(ErrorKind::ideal_invalid, "induced '" + op + "' depends on coset representatives at (" +
                                         t.label(x) + ", " + t.label(y) + ")");
    };
    for (Id x = 0; x < n; ++x) {
      if (out.neg_table[cls[x]] != cls[t.neg(x)]) bad("-", x, x);
      for (std::size_t u = 0; u < sig.unary().size(); ++u)
        if (out.unary[u][cls[x]] != cls[t.apply(u, x)]) bad(sig.unary()[u], x, x);
      for (Id y = 0; y < n; ++y) {
        if (out.add_table[cls[x] * m + cls[y]] != cls[t.add(x, y)]) bad("+", x, y);
        for (std::size_t op = 0; op < sig.binary().size(); ++op)
          if (out.binary[op][cls[x] * m + cls[y]] != cls[t.star(op, x, y)]) bad(sig.binary()[op].name, x, y);
      }
    }
    ObjectPtr q = make_object(std::move(out), obj->variety(), nm);
    return {q, Morphism(obj, q, cls)};
  }

  const LinearObject& l = obj->linear();
  const Subspace& sp = I.sub().subspace();
  const std::size_t n = l.dim;
  std::vector<bool> pivot(n, false);
  for (auto p : sp.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) free.push_back(i);
  const std::size_t m = free.size();
  // v -> reduce(v) read at the non-pivot columns
  auto project = [&](const Vector& v) {
    Vector r = sp.reduce(v), out;
    out.reserve(m);
    for (auto c : free) out.push_back(r[c]);
    return out;
  };
  Matrix proj(l.field, n, m);
  for (std::size_t i = 0; i < n; ++i) proj.set_row(i, project(l.basis_vector(i)));
  LinearObject out = LinearObject::zeros(sig, l.field, m);
  for (std::size_t a = 0; a < m; ++a) {
    out.basis_labels[a] = l.basis_labels[free[a]];
    for (std::size_t u = 0; u < sig.unary().size(); ++u)
      out.unary[u].set_row(a, project(l.apply(u, l.basis_vector(free[a]))));
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t op = 0; op < sig.binary().size(); ++op)
        out.products[op][a * m + b] = project(l.product(op, free[a], free[b]));
  }
  // Representative independence: I absorbs products and unary images, so
  // the projection must kill them.
  for (const auto& v : sp.basis_vectors()) {
    for (std::size_t u = 0; u < sig.unary().size(); ++u)
      if (!mci::is_zero(project(l.apply(u, v))))
        fail(ErrorKind::ideal_invalid, "induced '" + sig.unary()[u] + "' depends on representatives");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t op = 0; op < sig.binary().size(); ++op)
        if (!mci::is_zero(project(l.multiply(op, v, l.basis_vector(j)))) ||
            !mci::is_zero(project(l.multiply(op, l.basis_vector(j), v))))
          fail(ErrorKind::ideal_invalid, "induced '" + sig.binary()[op].name + "' depends on representatives");
  }
  ObjectPtr q = make_object(std::move(out), obj->variety(), nm);
  return {q, Morphism(obj, q, std::move(proj))};
}

Product direct_product(const ObjectPtr& A, const ObjectPtr& B, const std::string& name) {
  require_same_signature(*A, *B, "direct product");
  const Signature& sig = A->signature();
  const std::string nm = or_default(name, A->name() + "x" + B->name());
  if (A->is_table()) {
    const TableObject& ta = A->table();
    const TableObject& tb = B->table();
    const Id na = ta.size, nb = tb.size;
    if (std::uint64_t{na} * nb > kMaxTableCarrier)
      fail(ErrorKind::invalid_input, "direct product carrier exceeds " + std::to_string(kMaxTableCarrier));
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
      Id a = x % na, b = x / na;
      out.labels.push_back("(" + ta.label(a) + "," + tb.label(b) + ")");
      out.neg_table[x] = pack(ta.neg(a), tb.neg(b));
      for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u][x] = pack(ta.apply(u, a), tb.apply(u, b));
      for (Id y = 0; y < n; ++y) {
        Id c = y % na, d = y / na;
        out.add_table[std::size_t{x} * n + y] = pack(ta.add(a, c), tb.add(b, d));
        for (std::size_t op = 0; op < sig.binary().size(); ++op)
          out.binary[op][std::size_t{x} * n + y] = pack(ta.star(op, a, c), tb.star(op, b, d));
      }
    }
    ObjectPtr P = make_object(std::move(out), A->variety(), nm);
    std::vector<Id> p1(n), p2(n), i1(na), i2(nb);
    for (Id x = 0; x < n; ++x) {
      p1[x] = x % na;
      p2[x] = x / na;
    }
    for (Id a = 0; a < na; ++a) i1[a] = pack(a, tb.zero);
    for (Id b = 0; b < nb; ++b) i2[b] = pack(ta.zero, b);
    return {P, Morphism(P, A, p1), Morphism(P, B, p2), Morphism(A, P, i1), Morphism(B, P, i2)};
  }
  const LinearObject& la = A->linear();
  const LinearObject& lb = B->linear();
  const std::size_t da = la.dim, db = lb.dim, n = da + db;
  const Field& f = la.field;
  LinearObject out = LinearObject::zeros(sig, f, n);
  for (std::size_t i = 0; i < da; ++i) out.basis_labels[i] = "(" + la.basis_labels[i] + ",0)";
  for (std::size_t i = 0; i < db; ++i) out.basis_labels[da + i] = "(0," + lb.basis_labels[i] + ")";
  Vector za = la.zero_vector(), zb = lb.zero_vector();
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) out.products[op][i * n + j] = concat(la.product(op, i, j), zb);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j)
        out.products[op][(da + i) * n + da + j] = concat(za, lb.product(op, i, j));
  }
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    for (std::size_t i = 0; i < da; ++i) out.unary[u].set_row(i, concat(la.unary[u].row(i), zb));
    for (std::size_t i = 0; i < db; ++i) out.unary[u].set_row(da + i, concat(za, lb.unary[u].row(i)));
  }
  ObjectPtr P = make_object(std::move(out), A->variety(), nm);
  Matrix p1(f, n, da), p2(f, n, db), i1(f, da, n), i2(f, db, n);
  for (std::size_t i = 0; i < da; ++i) p1(i, i) = i1(i, i) = Scalar::one(f);
  for (std::size_t i = 0; i < db; ++i) p2(da + i, i) = i2(i, da + i) = Scalar::one(f);
  return {P, Morphism(P, A, std::move(p1)), Morphism(P, B, std::move(p2)), Morphism(A, P, std::move(i1)),
          Morphism(B, P, std::move(i2))};
}

Pullback pullback(const Morphism& f, const Morphism& g, const std::string& name) {
  const ObjectPtr& B = f.source();
  const ObjectPtr& E = g.source();
  require_same_signature(*B, *E, "pullback");
  require_same_signature(*f.target(), *g.target(), "pullback");
  if (f.target()->extent() != g.target()->extent())
    fail(ErrorKind::invalid_input, "pullback: morphisms do not share a target");
  const std::string nm = or_default(name, E->name() + "x_C" + B->name());
  if (B->is_table()) {
    const Id ne = static_cast<Id>(E->extent()), nb = static_cast<Id>(B->extent());
    std::vector<Id> members;
    for (Id b = 0; b < nb; ++b)
      for (Id e = 0; e < ne; ++e)
        if (g(e) == f(b)) members.push_back(e + ne * b);
    if (members.size() > kMaxTableCarrier)
      fail(ErrorKind::invalid_input, "pullback carrier exceeds " + std::to_string(kMaxTableCarrier));
    // build the subobject directly; the full product may be too large
    const TableObject& te = E->table();
    const TableObject& tb = B->table();
    const Signature& sig = E->signature();
    const Id m = static_cast<Id>(members.size());
    std::unordered_map<Id, Id> index;
    for (Id i = 0; i < m; ++i) index[members[i]] = i;
    auto local = [&](Id e, Id b) {
      auto it = index.find(e + ne * b);
      if (it == index.end()) fail(ErrorKind::internal, "pullback is not closed; morphisms are invalid");
      return it->second;
    };
    TableObject out;
    out.signature = sig;
    out.size = m;
    out.zero = local(te.zero, tb.zero);
    out.add_table.resize(std::size_t{m} * m);
    out.neg_table.resize(m);
    out.binary.assign(sig.binary().size(), std::vector<Id>(std::size_t{m} * m));
    out.unary.assign(sig.unary().size(), std::vector<Id>(m));
    std::vector<Id> p1(m), p2(m);
    for (Id x = 0; x < m; ++x) {
      Id e = members[x] % ne, b = members[x] / ne;
      p1[x] = e;
      p2[x] = b;
      out.labels.push_back("(" + te.label(e) + "," + tb.label(b) + ")");
      out.neg_table[x] = local(te.neg(e), tb.neg(b));
      for (std::size_t u = 0; u < sig.unary().size(); ++u) out.unary[u][x] = local(te.apply(u, e), tb.apply(u, b));
    }
    for (Id x = 0; x < m; ++x)
      for (Id y = 0; y < m; ++y) {
        out.add_table[std::size_t{x} * m + y] = local(te.add(p1[x], p1[y]), tb.add(p2[x], p2[y]));
        for (std::size_t op = 0; op < sig.binary().size(); ++op)
          out.binary[op][std::size_t{x} * m + y] =
              local(te.star(op, p1[x], p1[y]), tb.star(op, p2[x], p2[y]));
      }
    ObjectPtr P = make_object(std::move(out), E->variety(), nm);
    return {P, Morphism(P, E, std::move(p1)), Morphism(P, B, std::move(p2))};
  }
  Product prod = direct_product(E, B);
  const Field& fld = *E->field();
  Matrix diff(fld, E->extent() + B->extent(), f.target()->extent());
  for (std::size_t i = 0; i < E->extent(); ++i) diff.set_row(i, g.matrix().row(i));
  for (std::size_t i = 0; i < B->extent(); ++i) diff.set_row(E->extent() + i, -f.matrix().row(i));
  Subspace ker = Subspace::from_matrix(left_kernel(diff));
  if (ker.dim() == 0) ker = Subspace(fld, E->extent() + B->extent());
  Materialized mat = materialize(Subobject::from_subspace(prod.object, ker), nm);
  ObjectPtr P = retag(mat.object, E->variety(), nm);
  Matrix inc = mat.inclusion.matrix();
  return {P, Morphism(P, E, inc * prod.p1.matrix()), Morphism(P, B, inc * prod.p2.matrix())};
}

Morphism pullback_factor(const Pullback& pb, const Morphism& f, const Morphism& g,
                         const Morphism& to_e, const Morphism& to_b) {
  const ObjectPtr& X = to_e.source();
  if (!same_map(compose(g, to_e), compose(f, to_b)))
    fail(ErrorKind::precondition_violation, "the square does not commute; no factorization through the pullback");
  if (X->is_table()) {
    std::map<std::pair<Id, Id>, Id> index;
    for (Id p = 0; p < pb.object->extent(); ++p) index[{pb.pi1(p), pb.pi2(p)}] = p;
    std::vector<Id> m(X->extent());
    for (Id x = 0; x < m.size(); ++x) m[x] = index.at({to_e(x), to_b(x)});
    return Morphism(X, pb.object, std::move(m));
  }
  const Field& fld = *X->field();
  std::vector<Matrix> blocks{pb.pi1.matrix(), pb.pi2.matrix()};
  Subspace sp = Subspace::from_matrix(hconcat(fld, pb.object->extent(), blocks));
  Matrix u(fld, X->extent(), pb.object->extent());
  for (std::size_t i = 0; i < X->extent(); ++i) {
    Vector x = unit_vector(fld, X->extent(), i);
    u.set_row(i, sp.coordinates(concat(to_e(x), to_b(x))));
  }
  return Morphism(X, pb.object, std::move(u));
}

ObjectPtr base_change(const MciObject& obj, std::uint32_t p) {
  if (!obj.is_linear()) fail(ErrorKind::invalid_input, "base change needs a linear object");
  const Field target = Field::prime(p);
  const LinearObject& l = obj.linear();
  if (!l.field.is_rational()) {
    if (l.field == target) return std::make_shared<const MciObject>(obj);
    fail(ErrorKind::invalid_input, "cannot change " + l.field.name() + " to " + target.name());
  }
  auto reduce = [&](const Scalar& s) { return Scalar::from_rational(target, s.rational()); };
  LinearObject out = LinearObject::zeros(l.signature, target, l.dim);
  out.basis_labels = l.basis_labels;
  for (std::size_t op = 0; op < l.products.size(); ++op)
    for (std::size_t k = 0; k < l.products[op].size(); ++k)
      for (std::size_t c = 0; c < l.dim; ++c) out.products[op][k][c] = reduce(l.products[op][k][c]);
  for (std::size_t u = 0; u < l.unary.size(); ++u)
    for (std::size_t i = 0; i < l.dim; ++i)
      for (std::size_t j = 0; j < l.dim; ++j) out.unary[u](i, j) = reduce(l.unary[u](i, j));
  return make_object(std::move(out), obj.variety(), obj.name() + "@" + target.name());
}

Morphism base_change(const Morphism& f, const ObjectPtr& source, const ObjectPtr& target) {
  const Field fld = *source->field();
  const Matrix& m = f.matrix();
  Matrix out(fld, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m.field().is_rational() ? Scalar::from_rational(fld, m(i, j).rational())
                                          : Scalar::from_int(fld, m(i, j).residue());
  return Morphism(source, target, std::move(out));
}

std::uint32_t TableRealization::encode(const Vector& v) const {
  const std::uint32_t p = linear->field()->characteristic();
  std::uint32_t id = 0, w = 1;
  for (const auto& s : v) {
    id += s.residue() * w;
    w *= p;
  }
  return id;
}

Vector TableRealization::decode(std::uint32_t id) const {
  const Field f = *linear->field();
  Vector v;
  for (std::size_t i = 0; i < linear->extent(); ++i) {
    v.push_back(Scalar::from_int(f, id % f.characteristic()));
    id /= f.characteristic();
  }
  return v;
}

TableRealization realize_table(const ObjectPtr& linear) {
  if (!linear->is_linear() || linear->field()->is_rational())
    fail(ErrorKind::invalid_input, "table realization needs a linear object over a finite field");
  const LinearObject& l = linear->linear();
  const std::uint32_t p = l.field.characteristic();
  const std::size_t d = l.dim;
  const std::uint64_t size = saturating_pow(p, d);
  if (size > kMaxTableCarrier)
    fail(ErrorKind::invalid_input, "table realization of " + std::to_string(size) + " elements exceeds " +
                                       std::to_string(kMaxTableCarrier));
  const Id n = static_cast<Id>(size);
  const Signature& sig = l.signature;
  // integer digits of every element
  std::vector<std::vector<std::uint32_t>> digits(n, std::vector<std::uint32_t>(d));
  for (Id x = 0; x < n; ++x) {
    Id y = x;
    for (std::size_t i = 0; i < d; ++i) {
      digits[x][i] = y % p;
      y /= p;
    }
  }
  auto enc = [&](const std::vector<std::uint32_t>& v) {
    Id id = 0, w = 1;
    for (std::size_t i = 0; i < d; ++i) {
      id += (v[i] % p) * w;
      w *= p;
    }
    return id;
  };
  TableObject t;
  t.signature = sig;
  t.size = n;
  t.zero = 0;
  t.add_table.resize(std::size_t{n} * n);
  t.neg_table.resize(n);
  std::vector<std::uint32_t> tmp(d);
  for (Id x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < d; ++i) tmp[i] = (p - digits[x][i]) % p;
    t.neg_table[x] = enc(tmp);
    for (Id y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < d; ++i) tmp[i] = digits[x][i] + digits[y][i];
      t.add_table[std::size_t{x} * n + y] = enc(tmp);
    }
  }
  t.unary.assign(sig.unary().size(), std::vector<Id>(n));
  for (std::size_t u = 0; u < sig.unary().size(); ++u) {
    for (Id x = 0; x < n; ++x) {
      std::fill(tmp.begin(), tmp.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) tmp[j] = (tmp[j] + digits[x][i] * l.unary[u](i, j).residue()) % p;
      t.unary[u][x] = enc(tmp);
    }
  }
  t.binary.assign(sig.binary().size(), std::vector<Id>(std::size_t{n} * n));
  for (std::size_t op = 0; op < sig.binary().size(); ++op) {
    // c[i][j][k]
    std::vector<std::uint32_t> c(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = l.product(op, i, j)[k].residue();
    std::vector<std::uint32_t> left(d * d);  // left[i][k]: coefficient k of e_i * y
    for (Id y = 0; y < n; ++y) {
      std::fill(left.begin(), left.end(), 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::uint32_t yj = digits[y][j];
          if (!yj) continue;
          for (std::size_t k = 0; k < d; ++k) left[i * d + k] = (left[i * d + k] + yj * c[(i * d + j) * d + k]) % p;
        }
      for (Id x = 0; x < n; ++x) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
          std::uint32_t xi = digits[x][i];
          if (!xi) continue;
          for (std::size_t k = 0; k < d; ++k) tmp[k] = (tmp[k] + xi * left[i * d + k]) % p;
        }
        t.binary[op][std::size_t{x} * n + y] = enc(tmp);
      }
    }
  }
  TableRealization r{linear, nullptr};
  t.labels.reserve(n);
  for (Id x = 0; x < n; ++x) t.labels.push_back(l.describe(r.decode(x)));
  r.table = make_object(std::move(t), linear->variety(), linear->name() + "@table");
  return r;
}

Morphism realize_morphism(const Morphism& f, const TableRealization& source, const TableRealization& target) {
  std::vector<Id> m(source.table->extent());
  for (Id x = 0; x < m.size(); ++x) m[x] = target.encode(f(source.decode(x)));
  return Morphism(source.table, target.table, std::move(m));
}

Subobject realize_subobject(const Subobject& s, const TableRealization& r) {
  const Field f = *r.linear->field();
  const auto basis = s.subspace().basis_vectors();
  const std::uint64_t count = saturating_pow(f.characteristic(), basis.size());
  std::vector<Id> ids;
  ids.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    Vector v = zero_vector(f, r.linear->extent());
    std::uint64_t y = c;
    for (const auto& b : basis) {
      v += Scalar::from_int(f, static_cast<long>(y % f.characteristic())) * b;
      y /= f.characteristic();
    }
    ids.push_back(r.encode(v));
  }
  return Subobject::from_ids(r.table, std::move(ids));
}

std::optional<Morphism> find_isomorphism(const ObjectPtr& A, const ObjectPtr& B, std::size_t max_size) {
  require_same_signature(*A, *B, "isomorphism search");
  if (!A->is_table()) fail(ErrorKind::invalid_input, "isomorphism search needs table objects");
  if (A->extent() > max_size)
    fail(ErrorKind::unsupported_check, "isomorphism search is limited to " + std::to_string(max_size) + " elements");
  if (A->extent() != B->extent()) return std::nullopt;
  const TableObject& ta = A->table();
  const TableObject& tb = B->table();
  const Id n = ta.size;
  const Signature& sig = ta.signature;

  auto order = [](const TableObject& t, Id x) {
    Id k = 1;
    for (Id y = x; y != t.zero; y = t.add(y, x)) ++k;
    return k;
  };
  std::vector<Id> ord_a(n), ord_b(n);
  for (Id x = 0; x < n; ++x) {
    ord_a[x] = order(ta, x);
    ord_b[x] = order(tb, x);
  }
  // greedy additive generators of A
  std::vector<Id> gens;
  std::vector<bool> covered(n, false);
  covered[ta.zero] = true;
  auto close = [&](std::vector<bool>& in) {
    std::vector<Id> frontier;
    for (Id x = 0; x < n; ++x)
      if (in[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      Id x = frontier.back();
      frontier.pop_back();
      for (Id g : gens) {
        Id y = ta.add(x, g);
        if (!in[y]) {
          in[y] = true;
          frontier.push_back(y);
        }
      }
    }
  };
  for (Id x = 0; x < n; ++x)
    if (!covered[x]) {
      gens.push_back(x);
      close(covered);
    }

  std::vector<Id> phi(n, UINT32_MAX);
  std::vector<Id> images;
  // Extends phi to <gens[0..k)> by right translation; false on conflict.
  auto extend = [&](std::size_t k) {
    std::fill(phi.begin(), phi.end(), UINT32_MAX);
    phi[ta.zero] = tb.zero;
    std::vector<Id> frontier{ta.zero};
    while (!frontier.empty()) {
      Id x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < k; ++i) {
        Id y = ta.add(x, gens[i]);
        Id fy = tb.add(phi[x], images[i]);
        if (phi[y] == UINT32_MAX) {
          phi[y] = fy;
          frontier.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };
  auto complete = [&]() {
    std::vector<bool> hit(n, false);
    for (Id x = 0; x < n; ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = true;
    }
    for (std::size_t u = 0; u < sig.unary().size(); ++u)
      for (Id x = 0; x < n; ++x)
        if (phi[ta.apply(u, x)] != tb.apply(u, phi[x])) return false;
    for (std::size_t op = 0; op < sig.binary().size(); ++op)
      for (Id x = 0; x < n; ++x)
        for (Id y = 0; y < n; ++y)
          if (phi[ta.star(op, x, y)] != tb.star(op, phi[x], phi[y])) return false;
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return extend(k) && complete();
    for (Id h = 0; h < n; ++h) {
      if (ord_b[h] != ord_a[gens[k]]) continue;
      images.push_back(h);
      if (extend(k + 1) && search(k + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return Morphism(A, B, phi);
}

Preimage::Preimage(const Morphism& injective) : f_(injective) {
  if (!is_injective(injective)) fail(ErrorKind::precondition_violation, "preimage of a non-injective morphism");
  if (injective.is_table()) {
    inverse_.assign(injective.target()->extent(), UINT32_MAX);
    for (Id x = 0; x < injective.map().size(); ++x) inverse_[injective(x)] = x;
    return;
  }
  const Matrix& m = injective.matrix();
  const Field fld = *injective.source()->field();
  image_ = image(injective).subspace();
  columns_ = row_reduce(m).pivots;
  Matrix block(fld, m.rows(), columns_.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < columns_.size(); ++c) block(i, c) = m(i, columns_[c]);
  auto inv = inverse(block);
  if (!inv) fail(ErrorKind::internal, "pivot block of an injective map is singular");
  block_inverse_ = std::move(*inv);
}

bool Preimage::in_image(const Element& e) const {
  if (f_.is_table()) return inverse_[as_id(e)] != UINT32_MAX;
  return image_.contains(as_vector(e));
}

Element Preimage::operator()(const Element& e) const {
  if (!in_image(e))
    fail(ErrorKind::precondition_violation, "element " + f_.target()->describe(e) + " is outside the image");
  if (f_.is_table()) return inverse_[as_id(e)];
  const Vector& v = as_vector(e);
  Vector restricted;
  for (auto c : columns_) restricted.push_back(v[c]);
  if (columns_.empty()) return f_.source()->zero();
  return mci::apply(restricted, block_inverse_);
}

Morphism tabulate(const ObjectPtr& source, const ObjectPtr& target,
                  const std::function<Element(const Element&)>& fn) {
  if (source->is_table()) {
    std::vector<Id> m(source->extent());
    for (Id x = 0; x < m.size(); ++x) m[x] = as_id(fn(Element{x}));
    return Morphism(source, target, std::move(m));
  }
  Matrix m(*source->field(), source->extent(), target->extent());
  for (std::size_t i = 0; i < source->extent(); ++i)
    m.set_row(i, as_vector(fn(Element{source->linear().basis_vector(i)})));
  return Morphism(source, target, std::move(m));
}

Lift::Lift(const Morphism& surjective) : f_(surjective) {
  if (!is_surjective(surjective)) fail(ErrorKind::precondition_violation, "lift along a non-surjective morphism");
  if (surjective.is_table()) {
    first_.assign(surjective.target()->extent(), UINT32_MAX);
    for (Id x = static_cast<Id>(surjective.map().size()); x-- > 0;) first_[surjective(x)] = x;
    return;
  }
  const Matrix& m = surjective.matrix();
  rows_ = row_reduce(m.transpose()).pivots;
  Matrix block(m.field(), rows_.size(), m.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i) block.set_row(i, m.row(rows_[i]));
  auto inv = inverse(block);
  if (!inv) fail(ErrorKind::internal, "row block of a surjective map is singular");
  rows_inverse_ = std::move(*inv);
}

Element Lift::operator()(const Element& e) const {
  if (f_.is_table()) return first_[as_id(e)];
  Vector out = f_.source()->linear().zero_vector();
  if (rows_.empty()) return out;
  Vector c = mci::apply(as_vector(e), rows_inverse_);
  for (std::size_t i = 0; i < rows_.size(); ++i) out[rows_[i]] = c[i];
  return out;
}

ObjectPtr retag(const ObjectPtr& obj, const std::string& variety, const std::string& name) {
  const std::string nm = name.empty() ? obj->name() : name;
  if (obj->is_table()) return make_object(obj->table(), variety, nm);
  return make_object(obj->linear(), variety, nm);
}

}  // namespace mci
