#include "mci/structure.hpp"

#include <deque>

#include "mci/errors.hpp"

namespace mci {

namespace {

using Id = std::uint32_t;

// z satisfies the centralizing conditions against every a in `as`.
bool table_centralizes(const TableObject& t, const std::vector<Id>& as, Id z) {
  const std::size_t nu = t.unary.size();
  for (Id a : as) {
    if (t.add(a, z) != t.add(z, a)) return false;
    for (std::size_t op = 0; op < t.binary.size(); ++op)
      if (t.star(op, a, z) != t.zero) return false;
    for (std::size_t u = 0; u < nu; ++u) {
      const Id w = t.apply(u, z);
      if (t.add(a, w) != t.add(w, a)) return false;
      for (std::size_t op = 0; op < t.binary.size(); ++op)
        if (t.star(op, a, w) != t.zero) return false;
    }
  }
  return true;
}

// Joint kernel of z -> a*w(z) over a in `as`, all ops, w in unary ops + id.
Subspace linear_centralizer(const LinearObject& l, const std::vector<Vector>& as) {
  std::vector<Matrix> blocks;
  for (const auto& a : as)
    for (std::size_t op = 0; op < l.signature.binary().size(); ++op) {
      Matrix L = l.left_multiplication(op, a);
      blocks.push_back(L);
      for (const auto& W : l.unary) blocks.push_back(W * L);
    }
  if (blocks.empty()) return Subspace::whole(l.field, l.dim);
  return Subspace::from_matrix(left_kernel(hconcat(l.field, l.dim, blocks)));
}

Ideal centralizer_of(const ObjectPtr& B, const std::vector<Element>& as) {
  if (B->is_table()) {
    const TableObject& t = B->table();
    std::vector<Id> ids, a;
    for (const auto& e : as) a.push_back(as_id(e));
    for (Id z = 0; z < t.size; ++z)
      if (table_centralizes(t, a, z)) ids.push_back(z);
    return Ideal::make(Subobject::from_ids(B, std::move(ids)));
  }
  std::vector<Vector> a;
  for (const auto& e : as) a.push_back(as_vector(e));
  return Ideal::make(Subobject::from_subspace(B, linear_centralizer(B->linear(), a)));
}

std::vector<Id> table_closure(const TableObject& t, std::vector<Id> seed) {
  std::vector<bool> in(t.size, false);
  std::vector<Id> members;
  std::deque<Id> work;
  auto push = [&](Id x) {
    if (in[x]) return;
    in[x] = true;
    members.push_back(x);
    work.push_back(x);
  };
  push(t.zero);
  for (Id s : seed) push(s);
  while (!work.empty()) {
    const Id x = work.front();
    work.pop_front();
    push(t.neg(x));
    for (std::size_t u = 0; u < t.unary.size(); ++u) push(t.apply(u, x));
    for (Id g = 0; g < t.size; ++g) {
      push(t.conj(g, x));
      for (std::size_t op = 0; op < t.binary.size(); ++op) {
        push(t.star(op, g, x));
        push(t.star(op, x, g));
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Id y = members[i];
      push(t.add(x, y));
      push(t.add(y, x));
    }
  }
  return members;
}

Subspace linear_closure(const LinearObject& l, Subspace v) {
  for (;;) {
    bool grew = false;
    for (const auto& x : v.basis_vectors()) {
      for (const auto& W : l.unary) grew |= v.insert(mci::apply(x, W));
      for (std::size_t op = 0; op < l.signature.binary().size(); ++op)
        for (std::size_t i = 0; i < l.dim; ++i) {
          grew |= v.insert(l.multiply(op, l.basis_vector(i), x));
          grew |= v.insert(l.multiply(op, x, l.basis_vector(i)));
        }
    }
    if (!grew) return v;
  }
}

// Generators b+c-b-c, b*c, b+w(c)-b-w(c), c+w(b)-c-w(b), b*w(c), c*w(b).
std::vector<Element> pair_generators(const MciObject& A, const std::vector<Element>& bs,
                                     const std::vector<Element>& cs, bool symmetric_unary) {
  std::vector<Element> gens;
  const Signature& sig = A.signature();
  auto comm = [&](const Element& x, const Element& y) { return A.sub(A.sub(A.add(x, y), x), y); };
  for (const auto& b : bs)
    for (const auto& c : cs) {
      if (A.is_table()) gens.push_back(comm(b, c));
      for (std::size_t op = 0; op < sig.binary().size(); ++op) gens.push_back(A.star(op, b, c));
      for (std::size_t u = 0; u < sig.unary().size(); ++u) {
        const Element wc = A.apply(u, c), wb = A.apply(u, b);
        if (A.is_table()) {
          gens.push_back(comm(b, wc));
          if (symmetric_unary) gens.push_back(comm(c, wb));
        }
        for (std::size_t op = 0; op < sig.binary().size(); ++op) {
          gens.push_back(A.star(op, b, wc));
          if (symmetric_unary) gens.push_back(A.star(op, c, wb));
        }
      }
    }
  return gens;
}

std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  const std::uint64_t p = f.characteristic();
  std::vector<Vector> out;
  Vector v = zero_vector(f, n);
  const std::uint64_t total = saturating_pow(p, n);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t r = k;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Scalar::from_int(f, static_cast<long>(r % p));
      r /= p;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

Ideal center(const ObjectPtr& A) { return centralizer_of(A, A->spanning_elements()); }

Ideal centralizer(const ObjectPtr& B, const Ideal& I) {
  if (I.parent() != B) fail(ErrorKind::invalid_input, "centralizer: the ideal does not belong to B");
  return centralizer_of(B, I.sub().spanning_elements());
}

Ideal ideal_generated(const ObjectPtr& B, const std::vector<Element>& S) {
  if (B->is_table()) {
    std::vector<Id> seed;
    for (const auto& e : S) {
      const Id x = as_id(e);
      if (x >= B->extent()) fail(ErrorKind::invalid_input, "generator id out of range");
      seed.push_back(x);
    }
    return Ideal::unchecked(Subobject::from_ids(B, table_closure(B->table(), std::move(seed))));
  }
  std::vector<Vector> vs;
  for (const auto& e : S) {
    if (as_vector(e).size() != B->extent()) fail(ErrorKind::invalid_input, "generator has the wrong dimension");
    vs.push_back(as_vector(e));
  }
  Subspace sp = Subspace::span(*B->field(), B->extent(), vs);
  return Ideal::unchecked(Subobject::from_subspace(B, linear_closure(B->linear(), std::move(sp))));
}

Ideal ideal_generated(const Subobject& S) { return ideal_generated(S.parent(), S.spanning_elements()); }

Ideal commutator_object(const ObjectPtr& A, const Ideal& I, const Ideal& J) {
  if (I.parent() != A || J.parent() != A) fail(ErrorKind::invalid_input, "commutator object: ideals of another object");
  return ideal_generated(A, pair_generators(*A, I.sub().spanning_elements(), J.sub().spanning_elements(), true));
}

std::vector<Element> commutator_generators(const MciObject& A) {
  auto all = A.spanning_elements();
  return pair_generators(A, all, all, false);
}

Ideal commutator(const ObjectPtr& A) { return ideal_generated(A, commutator_generators(*A)); }

Singularization singularization(const ObjectPtr& A, const std::string& name) {
  Quotient q = quotient(A, commutator(A), name.empty() ? "Sing(" + A->name() + ")" : name);
  return {q.object, q.projection};
}

Report singular_report(const ObjectPtr& A) {
  Report r("is-singular");
  Ideal z = center(A);
  Ideal k = commutator(A);
  r.details()["center"] = z.sub().to_json();
  r.details()["commutator"] = k.sub().to_json();
  const bool by_center = z.is_whole();
  const bool by_commutator = k.is_zero();
  if (by_center != by_commutator)
    fail(ErrorKind::internal, "center and commutator disagree on singularity of " + A->name());
  r.add_check("center-is-whole", by_center ? json(nullptr) : json{{"center", z.sub().to_json()}});
  r.add_check("commutator-is-zero", by_commutator ? json(nullptr) : json{{"commutator", k.sub().to_json()}});
  return r;
}

bool is_singular(const ObjectPtr& A) { return singular_report(A).passed(); }

std::vector<Ideal> enumerate_ideals(const ObjectPtr& A, std::size_t max_size) {
  std::vector<Element> elems;
  if (A->is_table()) {
    if (A->extent() > max_size) fail(ErrorKind::unsupported_check, "too many elements to enumerate ideals");
    elems = A->spanning_elements();
  } else {
    const Field f = *A->field();
    if (f.is_rational() || saturating_pow(f.characteristic(), A->extent()) > max_size)
      fail(ErrorKind::unsupported_check, "ideal enumeration needs a small object over F_p");
    for (auto& v : all_vectors(f, A->extent())) elems.emplace_back(std::move(v));
  }
  std::vector<Ideal> found{ideal_generated(A, {})};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subobject cur = found[i].sub();
    for (const auto& x : elems) {
      if (cur.contains(x)) continue;
      auto gens = cur.spanning_elements();
      gens.push_back(x);
      Ideal next = ideal_generated(A, gens);
      bool seen = false;
      for (const auto& f : found)
        if (f == next) {
          seen = true;
          break;
        }
      if (!seen) found.push_back(std::move(next));
    }
  }
  return found;
}

}  // namespace mci
