#include "support.hpp"

#include <stdexcept>

#include "mci/io.hpp"
#include "mci/varieties.hpp"

namespace support {

using namespace mci;

namespace {

std::vector<int> residues(const Vector& v) {
  std::vector<int> out;
  for (const auto& s : v) out.push_back(static_cast<int>(s.residue()));
  return out;
}

int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

template <class T>
const T& pick(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
  for (const auto& [n, x] : v)
    if (n == name) return x;
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace

oracle::FpConstants constants_of(const LinearObject& l) {
  if (l.field.is_rational()) throw std::runtime_error("constants_of needs a prime field");
  oracle::FpConstants s;
  s.p = static_cast<int>(l.field.characteristic());
  s.dim = static_cast<int>(l.dim);
  for (const auto& t : l.products) {
    std::vector<std::vector<int>> op;
    for (const auto& v : t) op.push_back(residues(v));
    s.ops.push_back(std::move(op));
  }
  for (const auto& m : l.unary) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(residues(m.row(i)));
    s.un.push_back(std::move(rows));
  }
  return s;
}

oracle::Alg alg_of(const MciObject& obj) {
  if (obj.is_linear()) return oracle::realize(constants_of(obj.linear()));
  const TableObject& t = obj.table();
  oracle::Alg a;
  a.n = t.size;
  a.zero = t.zero;
  a.add = t.add_table;
  a.neg = t.neg_table;
  a.ops = t.binary;
  a.un = t.unary;
  return a;
}

oracle::Xm xm_of(const PreCrossedModule& x) {
  oracle::Xm o{alg_of(*x.c1), alg_of(*x.c0), {}, {}, {}, {}};
  const std::size_t ops = x.c1->signature().binary().size();
  if (x.c1->is_table()) {
    o.d = x.boundary.map();
    o.dot = x.action.dot;
    o.left = x.action.left;
    o.right = x.action.right;
    return o;
  }
  const auto s1 = constants_of(x.c1->linear()), s0 = constants_of(x.c0->linear());
  const int p = s1.p, d1 = s1.dim, d0 = s0.dim;
  using oracle::Id;
  const Id n1 = o.c1.n, n0 = o.c0.n;
  const Matrix& m = x.boundary.matrix();
  for (Id a = 0; a < n1; ++a) {
    const auto c = oracle::decode(s1, a);
    std::vector<int> img(d0);
    for (int k = 0; k < d0; ++k) {
      long acc = 0;
      for (int i = 0; i < d1; ++i) acc += long(c[i]) * m(i, k).residue();
      img[k] = mod(acc, p);
    }
    o.d.push_back(oracle::encode(s0, img));
  }
  o.dot.resize(std::size_t(n0) * n1);
  for (Id b = 0; b < n0; ++b)
    for (Id a = 0; a < n1; ++a) o.dot[b * n1 + a] = a;
  o.left.assign(ops, std::vector<Id>(std::size_t(n0) * n1));
  o.right.assign(ops, std::vector<Id>(std::size_t(n1) * n0));
  for (std::size_t k = 0; k < ops; ++k)
    for (Id b = 0; b < n0; ++b)
      for (Id a = 0; a < n1; ++a) {
        const auto cb = oracle::decode(s0, b), ca = oracle::decode(s1, a);
        std::vector<long> l(d1, 0), r(d1, 0);
        for (int i = 0; i < d0; ++i)
          for (int j = 0; j < d1; ++j) {
            const long c = long(cb[i]) * ca[j];
            if (c == 0) continue;
            const auto& lv = x.action.left_lin[k][std::size_t(i) * d1 + j];
            const auto& rv = x.action.right_lin[k][std::size_t(j) * d0 + i];
            for (int t = 0; t < d1; ++t) {
              l[t] += c * lv[t].residue();
              r[t] += c * rv[t].residue();
            }
          }
        std::vector<int> li(d1), ri(d1);
        for (int t = 0; t < d1; ++t) {
          li[t] = mod(l[t], p);
          ri[t] = mod(r[t], p);
        }
        o.left[k][b * n1 + a] = oracle::encode(s1, li);
        o.right[k][a * n0 + b] = oracle::encode(s1, ri);
      }
  return o;
}

oracle::Set set_of(const Subobject& s) {
  const MciObject& parent = *s.parent();
  if (parent.is_table()) {
    oracle::Set out(parent.extent(), false);
    for (auto id : s.ids()) out[id] = true;
    return out;
  }
  const auto consts = constants_of(parent.linear());
  const Field f = *parent.field();
  const oracle::Alg a = oracle::realize(oracle::FpConstants{consts.p, consts.dim, {}, {}});
  oracle::Set out(a.n, false);
  for (oracle::Id id = 0; id < a.n; ++id) {
    Vector v;
    for (int c : oracle::decode(consts, id)) v.push_back(Scalar::from_int(f, c));
    out[id] = s.contains(Element(v));
  }
  return out;
}

ObjectPtr object_from_spec(const oracle::FpConstants& s, const std::string& variety, const std::string& name) {
  const Field f = Field::prime(static_cast<std::uint32_t>(s.p));
  const auto dim = static_cast<std::size_t>(s.dim);
  LinearObject l = LinearObject::zeros(base_signature(variety), f, dim);
  for (std::size_t i = 0; i < dim * dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) l.products[0][i][k] = Scalar::from_int(f, s.ops[0][i][k]);
  l.complete_partners();
  return make_object(std::move(l), variety, name);
}

RandomObject random_member(std::mt19937& rng, int p, int dim, const std::string& variety) {
  const bool lie = variety == "lie";
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(1, p - 1);
  const double density = dim <= 2 ? 0.4 : 0.2;
  RandomObject out;
  for (;;) {
    ++out.attempts;
    oracle::FpConstants s;
    s.p = p;
    s.dim = dim;
    s.ops.assign(1, std::vector<std::vector<int>>(std::size_t(dim) * dim, std::vector<int>(dim, 0)));
    for (int i = 0; i < dim; ++i)
      for (int j = lie ? i + 1 : 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          if (coin(rng) >= density) continue;
          const int c = value(rng);
          s.ops[0][i * dim + j][k] = c;
          if (lie) s.ops[0][j * dim + i][k] = mod(-c, p);
        }
    if (!(lie ? oracle::is_lie(s) : oracle::is_leibniz_right(s))) continue;
    out.object = object_from_spec(s, variety, variety + "-random");
    out.consts = constants_of(out.object->linear());
    return out;
  }
}

std::vector<ActionInstance> action_instances() {
  namespace c = corpus;
  std::vector<ActionInstance> out;
  const Field f3 = Field::prime(3);
  out.push_back({"S3 on A3", c::xm_a3_s3().action});
  out.push_back({"S3 on S3", c::identity_xmod(c::s3()).action});
  out.push_back({"D4 on D4", c::identity_xmod(c::d4()).action});
  {
    const ObjectPtr z2 = c::z2(), z4 = c::z4();
    auto none = [](std::size_t, const Element&, const Element&) -> Element { return std::uint32_t{0}; };
    out.push_back({"Z2 on Z4 by inversion",
                   tabulate_action(
                       z2, z4,
                       [z4](const Element& b, const Element& a) { return as_id(b) == 0 ? a : z4->neg(a); }, none,
                       none)});
    out.push_back({"Z4 on Z2 trivially", ActionData::trivial(z4, z2)});
  }
  out.push_back({"S3-sign-cat1 on itself", c::identity_xmod(c::s3_sign_cat1().with_omegas()).action});
  out.push_back({"Z4-cat1 on itself", c::identity_xmod(c::z4_cat1().with_omegas()).action});

  out.push_back({"heis3 decomposition F3", c::heis3_decomposition(f3).action});
  out.push_back({"heis3 on span(e3) F3", c::xm_inc(f3).action});
  out.push_back({"heis3 on ab1 trivially F3", ActionData::trivial(c::heis3(f3), c::ab1(f3))});
  for (auto make : {c::sol2, c::heis3, c::leib2, c::leib3, c::dial1, c::nil2, c::dual2, c::tri2}) {
    const ObjectPtr o = make(f3);
    out.push_back({o->name() + " adjoint", c::identity_xmod(o).action});
  }
  for (const char* name : {"cat1-xm-inc", "cat1-leib2-id", "cat1-dial1-id"}) {
    const ObjectPtr o = base_change(*pick(c::cat1s(), name).with_omegas(), 3);
    out.push_back({std::string(name) + "-F3 adjoint", c::identity_xmod(o).action});
  }
  return out;
}

ActionData perturb_action(const ActionData& act, std::mt19937& rng) {
  ActionData out = act;
  const Signature& sig = act.acted->signature();
  const auto& ops = sig.binary();
  const std::size_t na = act.acted->extent();
  struct Slot {
    std::vector<std::uint32_t>* ids;
    std::vector<Vector>* vecs;
    std::size_t size;
  };
  std::vector<Slot> slots;
  if (act.is_table()) {
    if (na > 1) slots.push_back({&out.dot, nullptr, out.dot.size()});
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (ops[k].derived) continue;
      slots.push_back({&out.left[k], nullptr, out.left[k].size()});
      if (sig.partner(k) != k) slots.push_back({&out.right[k], nullptr, out.right[k].size()});
    }
  } else {
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (ops[k].derived) continue;
      slots.push_back({nullptr, &out.left_lin[k], out.left_lin[k].size() * na});
      if (sig.partner(k) != k) slots.push_back({nullptr, &out.right_lin[k], out.right_lin[k].size() * na});
    }
  }
  std::size_t total = 0;
  for (const auto& s : slots) total += s.size;
  if (total == 0 || (act.is_table() && na < 2)) throw std::runtime_error("nothing to perturb");
  std::size_t r = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  std::size_t which = 0;
  while (r >= slots[which].size) r -= slots[which++].size;
  Slot& s = slots[which];
  if (s.ids) {
    auto& cell = (*s.ids)[r];
    const auto shift = std::uniform_int_distribution<std::uint32_t>(1, static_cast<std::uint32_t>(na - 1))(rng);
    cell = static_cast<std::uint32_t>((cell + shift) % na);
  } else {
    Scalar& c = (*s.vecs)[r / na][r % na];
    const Field f = c.field();
    const long p = f.characteristic();
    const long shift = p == 0 ? 1 : std::uniform_int_distribution<long>(1, p - 1)(rng);
    c += Scalar::from_int(f, shift);
  }
  // a commutative op keeps a*b = b*a
  const std::size_t nb = act.acting->extent();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].derived || sig.partner(k) != k) continue;
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t a = 0; a < na; ++a) {
        if (act.is_table())
          out.right[k][a * nb + b] = out.left[k][b * na + a];
        else
          out.right_lin[k][a * nb + b] = out.left_lin[k][b * na + a];
      }
  }
  out.complete_partners();
  return out;
}

ObjectPtr perturb_object(const ObjectPtr& obj, std::mt19937& rng) {
  if (obj->is_table()) {
    TableObject t = obj->table();
    std::vector<std::vector<std::uint32_t>*> tabs{&t.add_table};
    for (std::size_t k = 0; k < t.binary.size(); ++k)
      if (!t.signature.binary()[k].derived) tabs.push_back(&t.binary[k]);
    std::size_t total = 0;
    for (auto* v : tabs) total += v->size();
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    std::size_t which = 0;
    while (r >= tabs[which]->size()) r -= tabs[which++]->size();
    auto& cell = (*tabs[which])[r];
    const auto shift = std::uniform_int_distribution<std::uint32_t>(1, t.size - 1)(rng);
    cell = (cell + shift) % t.size;
    t.complete_negation();
    t.complete_partners();
    return make_object(std::move(t), obj->variety(), obj->name() + "~");
  }
  LinearObject l = obj->linear();
  std::vector<std::vector<Vector>*> tabs;
  for (std::size_t k = 0; k < l.products.size(); ++k)
    if (!l.signature.binary()[k].derived) tabs.push_back(&l.products[k]);
  std::size_t total = 0;
  for (auto* v : tabs) total += v->size() * l.dim;
  std::size_t r = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  std::size_t which = 0;
  while (r >= tabs[which]->size() * l.dim) r -= tabs[which++]->size() * l.dim;
  Scalar& c = (*tabs[which])[r / l.dim][r % l.dim];
  const long p = l.field.characteristic();
  c += Scalar::from_int(l.field, p == 0 ? 1 : std::uniform_int_distribution<long>(1, p - 1)(rng));
  l.complete_partners();
  return make_object(std::move(l), obj->variety(), obj->name() + "~");
}

std::vector<std::pair<std::string, ObjectPtr>> f3_objects() {
  std::vector<std::pair<std::string, ObjectPtr>> out;
  for (const auto& [n, o] : corpus::objects()) {
    if (!o->is_linear()) continue;
    if (o->field()->is_rational()) {
      if (n.rfind("precat1-", 0) == 0) out.emplace_back(n + "-F3", base_change(*o, 3));
    } else {
      out.emplace_back(n, o);
    }
  }
  return out;
}

std::vector<std::pair<std::string, PreCrossedModule>> f3_xmods() {
  std::vector<std::pair<std::string, PreCrossedModule>> out;
  for (const auto& [n, x] : corpus::xmods()) {
    if (!x.c1->is_linear()) continue;
    if (x.c1->field()->is_rational()) {
      if (n.find("-F3") == std::string::npos) out.emplace_back(n + "@F3", base_change(x, 3));
    } else {
      out.emplace_back(n, x);
    }
  }
  return out;
}

}  // namespace support
