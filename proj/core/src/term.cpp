#include "mci/term.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "mci/errors.hpp"

namespace mci {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}}));
}
Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::zero, "0", {}})); }
Term Term::neg(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::neg, "-", {std::move(t)}}));
}
Term Term::add(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{Kind::add, "+", {std::move(a), std::move(b)}}));
}
Term Term::sub(Term a, Term b) { return add(std::move(a), neg(std::move(b))); }
Term Term::unary(std::string op, Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::unary, std::move(op), {std::move(t)}}));
}
Term Term::binary(std::string op, Term a, Term b) {
  return Term(
      std::make_shared<const Node>(Node{Kind::binary, std::move(op), {std::move(a), std::move(b)}}));
}

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.kind() == Kind::variable) out.insert(t.name());
    for (std::size_t i = 0; i < t.arity(); ++i) walk(t.arg(i));
  };
  walk(*this);
  return out;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::variable: return name();
    case Kind::zero: return "0";
    case Kind::neg: return "-(" + arg(0).to_string() + ")";
    case Kind::add:
      if (arg(1).kind() == Kind::neg) return "(" + arg(0).to_string() + " - " + arg(1).arg(0).to_string() + ")";
      return "(" + arg(0).to_string() + " + " + arg(1).to_string() + ")";
    case Kind::unary: return name() + "(" + arg(0).to_string() + ")";
    case Kind::binary:
      return "(" + arg(0).to_string() + " " + name() + " " + arg(1).to_string() + ")";
  }
  return "?";
}

namespace {

// Term with op names resolved to indices and variables to slots.
struct Compiled {
  Term::Kind kind;
  std::size_t index = 0;
  std::vector<Compiled> args;
};

Compiled compile(const Term& t, const Signature& sig, const std::vector<std::string>& vars) {
  Compiled c{t.kind(), 0, {}};
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = std::find(vars.begin(), vars.end(), t.name());
      if (it == vars.end()) fail(ErrorKind::invalid_input, "variable '" + t.name() + "' is not assigned");
      c.index = static_cast<std::size_t>(it - vars.begin());
      break;
    }
    case Term::Kind::unary: c.index = sig.require_unary(t.name()); break;
    case Term::Kind::binary: c.index = sig.require_binary(t.name()); break;
    default: break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) c.args.push_back(compile(t.arg(i), sig, vars));
  return c;
}

std::uint32_t eval_ids(const Compiled& c, const std::vector<std::uint32_t>& v, const TableObject& t) {
  switch (c.kind) {
    case Term::Kind::variable: return v[c.index];
    case Term::Kind::zero: return t.zero;
    case Term::Kind::neg: return t.neg(eval_ids(c.args[0], v, t));
    case Term::Kind::add: return t.add(eval_ids(c.args[0], v, t), eval_ids(c.args[1], v, t));
    case Term::Kind::unary: return t.apply(c.index, eval_ids(c.args[0], v, t));
    case Term::Kind::binary:
      return t.star(c.index, eval_ids(c.args[0], v, t), eval_ids(c.args[1], v, t));
  }
  return t.zero;
}

Vector eval_vec(const Compiled& c, const std::vector<Vector>& v, const LinearObject& l) {
  switch (c.kind) {
    case Term::Kind::variable: return v[c.index];
    case Term::Kind::zero: return l.zero_vector();
    case Term::Kind::neg: return -eval_vec(c.args[0], v, l);
    case Term::Kind::add: return eval_vec(c.args[0], v, l) + eval_vec(c.args[1], v, l);
    case Term::Kind::unary: return l.apply(c.index, eval_vec(c.args[0], v, l));
    case Term::Kind::binary:
      return l.multiply(c.index, eval_vec(c.args[0], v, l), eval_vec(c.args[1], v, l));
  }
  return l.zero_vector();
}

// Homogeneous degree of a term in one variable; nullopt = not homogeneous,
// -1 = the zero term (compatible with every degree).
constexpr int kAnyDegree = -1;

std::optional<int> degree(const Term& t, const std::string& var) {
  switch (t.kind()) {
    case Term::Kind::variable: return t.name() == var ? 1 : 0;
    case Term::Kind::zero: return kAnyDegree;
    case Term::Kind::neg:
    case Term::Kind::unary: return degree(t.arg(0), var);
    case Term::Kind::add: {
      auto a = degree(t.arg(0), var), b = degree(t.arg(1), var);
      if (!a || !b) return std::nullopt;
      if (*a == kAnyDegree) return b;
      if (*b == kAnyDegree) return a;
      if (*a != *b) return std::nullopt;
      return a;
    }
    case Term::Kind::binary: {
      auto a = degree(t.arg(0), var), b = degree(t.arg(1), var);
      if (!a || !b) return std::nullopt;
      if (*a == kAnyDegree || *b == kAnyDegree) return kAnyDegree;
      return *a + *b;
    }
  }
  return std::nullopt;
}

// Largest degree of a monomial in `var`.
int max_degree(const Term& t, const std::string& var) {
  switch (t.kind()) {
    case Term::Kind::variable: return t.name() == var ? 1 : 0;
    case Term::Kind::zero: return 0;
    case Term::Kind::neg:
    case Term::Kind::unary: return max_degree(t.arg(0), var);
    case Term::Kind::add: return std::max(max_degree(t.arg(0), var), max_degree(t.arg(1), var));
    case Term::Kind::binary: return max_degree(t.arg(0), var) + max_degree(t.arg(1), var);
  }
  return 0;
}

VariableShape shape_of(const Term& lhs, const Term& rhs, const std::string& var) {
  auto a = degree(lhs, var), b = degree(rhs, var);
  const bool affine = max_degree(lhs, var) <= 1 && max_degree(rhs, var) <= 1;
  if (!a || !b) return affine ? VariableShape::affine : VariableShape::general;
  int d;
  if (*a == kAnyDegree)
    d = *b;
  else if (*b == kAnyDegree || *a == *b)
    d = *a;
  else
    return affine ? VariableShape::affine : VariableShape::general;
  if (d == kAnyDegree || d <= 1) return VariableShape::multilinear;
  if (d == 2) return VariableShape::quadratic;
  return VariableShape::general;
}

}  // namespace

Element evaluate_term(const Term& t, const Assignment& assignment, const MciObject& obj) {
  std::vector<std::string> vars;
  for (const auto& [name, value] : assignment) vars.push_back(name);
  Compiled c = compile(t, obj.signature(), vars);
  if (obj.is_table()) {
    std::vector<std::uint32_t> ids;
    for (const auto& [name, value] : assignment) {
      std::uint32_t id = as_id(value);
      if (id >= obj.extent()) fail(ErrorKind::invalid_input, "element id out of range for '" + name + "'");
      ids.push_back(id);
    }
    return eval_ids(c, ids, obj.table());
  }
  std::vector<Vector> vs;
  for (const auto& [name, value] : assignment) {
    const Vector& v = as_vector(value);
    if (v.size() != obj.extent())
      fail(ErrorKind::invalid_input, "vector for '" + name + "' has the wrong dimension");
    vs.push_back(v);
  }
  return eval_vec(c, vs, obj.linear());
}

bool Identity::multilinear() const {
  return std::all_of(shapes.begin(), shapes.end(),
                     [](VariableShape s) { return s == VariableShape::multilinear; });
}

std::string Identity::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

Identity make_identity(std::string name, Term lhs, Term rhs, std::vector<std::string> variables) {
  for (const auto* side : {&lhs, &rhs})
    for (const auto& v : side->variables())
      if (std::find(variables.begin(), variables.end(), v) == variables.end())
        fail(ErrorKind::invalid_input, "identity '" + name + "' uses undeclared variable '" + v + "'");
  Identity id{std::move(name), lhs, rhs, variables, {}};
  for (const auto& v : id.variables) id.shapes.push_back(shape_of(id.lhs, id.rhs, v));
  return id;
}

namespace {

// Odometer over per-variable candidate lists; stops when `visit` returns false.
template <class T, class Visit>
void for_each_tuple(const std::vector<std::vector<T>>& choices, Visit visit) {
  const std::size_t k = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  std::vector<T> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = choices[i][0];
  while (true) {
    if (!visit(current)) return;
    std::size_t i = 0;
    while (i < k) {
      if (++idx[i] < choices[i].size()) {
        current[i] = choices[i][idx[i]];
        break;
      }
      idx[i] = 0;
      current[i] = choices[i][0];
      ++i;
    }
    if (i == k) return;
  }
}

std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  std::vector<Vector> out;
  std::uint64_t count = saturating_pow(p, n);
  out.reserve(count);
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, digits[i]);
    out.push_back(std::move(v));
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

IdentityResult check_identity(const MciObject& obj, const Identity& id) {
  IdentityResult res;
  const std::size_t k = id.variables.size();
  Compiled lhs = compile(id.lhs, obj.signature(), id.variables);
  Compiled rhs = compile(id.rhs, obj.signature(), id.variables);

  if (obj.is_table()) {
    const TableObject& t = obj.table();
    res.method = "exhaustive";
    res.tuples = saturating_pow(t.size, k);
    if (res.tuples > enumeration_cap()) {
      res.status = Status::not_checked;
      res.witness = json{{"reason", std::to_string(res.tuples) + " assignments exceed the enumeration cap of " +
                                        std::to_string(enumeration_cap())}};
      return res;
    }
    std::vector<std::uint32_t> all(t.size);
    for (std::uint32_t i = 0; i < t.size; ++i) all[i] = i;
    std::vector<std::vector<std::uint32_t>> choices(k, all);
    for_each_tuple(choices, [&](const std::vector<std::uint32_t>& v) {
      std::uint32_t a = eval_ids(lhs, v, t), b = eval_ids(rhs, v, t);
      if (a == b) return true;
      json asg = json::object();
      for (std::size_t i = 0; i < k; ++i) asg[id.variables[i]] = t.label(v[i]);
      res.status = Status::fail;
      res.witness = json{{"assignment", asg}, {"lhs", t.label(a)}, {"rhs", t.label(b)}};
      return false;
    });
    return res;
  }

  const LinearObject& l = obj.linear();
  const std::size_t n = l.dim;
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(l.basis_vector(i));
  std::vector<Vector> polar = basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) polar.push_back(basis[i] + basis[j]);

  std::vector<Vector> with_zero = basis;
  with_zero.push_back(l.zero_vector());
  bool used[4] = {false, false, false, false};
  std::vector<std::vector<Vector>> choices;
  std::optional<std::vector<Vector>> everything;
  res.tuples = 1;
  for (std::size_t i = 0; i < k; ++i) {
    switch (id.shapes[i]) {
      case VariableShape::multilinear:
        choices.push_back(basis);
        used[0] = true;
        break;
      case VariableShape::affine:
        choices.push_back(with_zero);
        used[3] = true;
        break;
      case VariableShape::quadratic:
        choices.push_back(polar);
        used[1] = true;
        break;
      case VariableShape::general:
        if (l.field.is_rational())
          fail(ErrorKind::unsupported_check,
               "identity '" + id.name + "' is not multilinear in '" + id.variables[i] +
                   "' and cannot be decided over Q; base-change to a finite field");
        if (!everything) {
          std::uint64_t count = saturating_pow(l.field.characteristic(), n);
          if (count > enumeration_cap()) {
            res.status = Status::not_checked;
            res.method = "exhaustive";
            res.tuples = count;
            res.witness = json{{"reason", "carrier of " + std::to_string(count) + " elements exceeds the enumeration cap"}};
            return res;
          }
          everything = all_vectors(l.field, n);
        }
        choices.push_back(*everything);
        used[2] = true;
        break;
    }
    res.tuples = saturating_mul(res.tuples, choices.back().size());
  }
  const char* names[4] = {"basis", "polarization", "exhaustive", "basis+zero"};
  for (int m = 0; m < 4; ++m)
    if (used[m]) res.method += (res.method.empty() ? "" : "+") + std::string(names[m]);
  if (res.method.empty()) res.method = "constant";
  if (res.tuples > enumeration_cap()) {
    res.status = Status::not_checked;
    res.witness = json{{"reason", std::to_string(res.tuples) + " assignments exceed the enumeration cap of " +
                                      std::to_string(enumeration_cap())}};
    return res;
  }
  if (n == 0) return res;
  for_each_tuple(choices, [&](const std::vector<Vector>& v) {
    Vector a = eval_vec(lhs, v, l), b = eval_vec(rhs, v, l);
    if (a == b) return true;
    json asg = json::object();
    for (std::size_t i = 0; i < k; ++i) asg[id.variables[i]] = l.describe(v[i]);
    res.status = Status::fail;
    res.witness = json{{"assignment", asg}, {"lhs", l.describe(a)}, {"rhs", l.describe(b)}};
    return false;
  });
  return res;
}

}  // namespace mci
