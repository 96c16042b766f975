#include "mci/object.hpp"

#include <algorithm>
#include <set>

#include "mci/errors.hpp"

namespace mci {

Signature::Signature(std::vector<BinaryOp> binary, std::vector<std::string> unary)
    : binary_(std::move(binary)), unary_(std::move(unary)) {
  std::set<std::string> names;
  for (const auto& op : binary_)
    if (!names.insert(op.name).second)
      fail(ErrorKind::invalid_input, "duplicate operation name '" + op.name + "'");
  for (const auto& u : unary_)
    if (!names.insert(u).second) fail(ErrorKind::invalid_input, "duplicate operation name '" + u + "'");
  partners_.resize(binary_.size());
  for (std::size_t i = 0; i < binary_.size(); ++i) {
    auto p = binary_index(binary_[i].partner);
    if (!p)
      fail(ErrorKind::invalid_input,
           "swap partner '" + binary_[i].partner + "' of '" + binary_[i].name + "' is missing");
    if (binary_[*p].partner != binary_[i].name)
      fail(ErrorKind::invalid_input, "swap partners of '" + binary_[i].name + "' are not mutual");
    partners_[i] = *p;
  }
}

Signature Signature::closed(std::vector<BinaryOp> primary, std::vector<std::string> unary) {
  std::vector<BinaryOp> all = primary;
  for (const auto& op : primary) {
    bool present = std::any_of(all.begin(), all.end(),
                               [&](const BinaryOp& o) { return o.name == op.partner; });
    if (!present) all.push_back({op.partner, op.name, true});
  }
  return Signature(std::move(all), std::move(unary));
}

std::optional<std::size_t> Signature::binary_index(const std::string& name) const {
  for (std::size_t i = 0; i < binary_.size(); ++i)
    if (binary_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::unary_index(const std::string& name) const {
  for (std::size_t i = 0; i < unary_.size(); ++i)
    if (unary_[i] == name) return i;
  return std::nullopt;
}

std::size_t Signature::require_binary(const std::string& name) const {
  auto i = binary_index(name);
  if (!i) fail(ErrorKind::signature_mismatch, "unknown binary operation '" + name + "'");
  return *i;
}

std::size_t Signature::require_unary(const std::string& name) const {
  auto i = unary_index(name);
  if (!i) fail(ErrorKind::signature_mismatch, "unknown unary operation '" + name + "'");
  return *i;
}

Signature Signature::with_unary(const std::vector<std::string>& extra) const {
  auto u = unary_;
  u.insert(u.end(), extra.begin(), extra.end());
  return Signature(binary_, u);
}

Signature Signature::without_unary() const { return Signature(binary_, {}); }

std::string TableObject::label(std::uint32_t x) const {
  if (x < labels.size() && !labels[x].empty()) return labels[x];
  return "#" + std::to_string(x);
}

void TableObject::complete_negation() {
  neg_table.assign(size, zero);
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y)
      if (add(x, y) == zero && add(y, x) == zero) {
        neg_table[x] = y;
        break;
      }
}

void TableObject::complete_partners() {
  binary.resize(signature.binary().size());
  for (std::size_t op = 0; op < signature.binary().size(); ++op) {
    if (!signature.binary()[op].derived) continue;
    std::size_t p = signature.partner(op);
    auto& t = binary[op];
    t.assign(std::size_t{size} * size, zero);
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y) t[x * size + y] = binary[p][y * size + x];
  }
}

LinearObject LinearObject::zeros(const Signature& sig, const Field& f, std::size_t dim) {
  LinearObject l;
  l.signature = sig;
  l.field = f;
  l.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) l.basis_labels.push_back("e" + std::to_string(i + 1));
  l.products.assign(sig.binary().size(), std::vector<Vector>(dim * dim, mci::zero_vector(f, dim)));
  l.unary.assign(sig.unary().size(), Matrix(f, dim, dim));
  return l;
}

Vector LinearObject::multiply(std::size_t op, const Vector& x, const Vector& y) const {
  Vector r = zero_vector();
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vector& p = product(op, i, j);
      for (std::size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Vector LinearObject::apply(std::size_t op, const Vector& x) const { return mci::apply(x, unary[op]); }

Matrix LinearObject::left_multiplication(std::size_t op, const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_row(j, multiply(op, a, basis_vector(j)));
  return m;
}

Matrix LinearObject::right_multiplication(std::size_t op, const Vector& a) const {
  Matrix m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_row(j, multiply(op, basis_vector(j), a));
  return m;
}

void LinearObject::complete_partners() {
  products.resize(signature.binary().size(), std::vector<Vector>(dim * dim, zero_vector()));
  for (std::size_t op = 0; op < signature.binary().size(); ++op) {
    if (!signature.binary()[op].derived) continue;
    std::size_t p = signature.partner(op);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) products[op][i * dim + j] = products[p][j * dim + i];
  }
}

std::string LinearObject::describe(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    std::string label = i < basis_labels.size() ? basis_labels[i] : "e" + std::to_string(i + 1);
    if (!out.empty()) {
      if (field.is_rational() && coef.front() == '-') {
        out += "-";
        coef.erase(0, 1);
      } else {
        out += "+";
      }
    } else if (field.is_rational() && coef.front() == '-') {
      out += "-";
      coef.erase(0, 1);
    }
    if (coef != "1") out += coef + "*";
    out += label;
  }
  return out.empty() ? "0" : out;
}

MciObject::MciObject(TableObject t, std::string variety, std::string name)
    : backend_(std::move(t)), variety_(std::move(variety)), name_(std::move(name)) {}

MciObject::MciObject(LinearObject l, std::string variety, std::string name)
    : backend_(std::move(l)), variety_(std::move(variety)), name_(std::move(name)) {}

const TableObject& MciObject::table() const {
  if (!is_table()) fail(ErrorKind::internal, "object is not in the table backend");
  return std::get<TableObject>(backend_);
}

const LinearObject& MciObject::linear() const {
  if (!is_linear()) fail(ErrorKind::internal, "object is not in the linear backend");
  return std::get<LinearObject>(backend_);
}

const Signature& MciObject::signature() const {
  return is_table() ? table().signature : linear().signature;
}

std::optional<Field> MciObject::field() const {
  if (is_table()) return std::nullopt;
  return linear().field;
}

std::size_t MciObject::extent() const { return is_table() ? table().size : linear().dim; }

bool MciObject::enumerable() const { return is_table() || !linear().field.is_rational(); }

Element MciObject::zero() const {
  if (is_table()) return table().zero;
  return linear().zero_vector();
}

Element MciObject::add(const Element& x, const Element& y) const {
  if (is_table()) return table().add(as_id(x), as_id(y));
  return as_vector(x) + as_vector(y);
}

Element MciObject::neg(const Element& x) const {
  if (is_table()) return table().neg(as_id(x));
  return -as_vector(x);
}

Element MciObject::star(std::size_t op, const Element& x, const Element& y) const {
  if (is_table()) return table().star(op, as_id(x), as_id(y));
  return linear().multiply(op, as_vector(x), as_vector(y));
}

Element MciObject::apply(std::size_t op, const Element& x) const {
  if (is_table()) return table().apply(op, as_id(x));
  return linear().apply(op, as_vector(x));
}

bool MciObject::is_zero(const Element& x) const {
  if (is_table()) return as_id(x) == table().zero;
  return mci::is_zero(as_vector(x));
}

std::vector<Element> MciObject::spanning_elements() const {
  std::vector<Element> out;
  if (is_table()) {
    for (std::uint32_t x = 0; x < table().size; ++x) out.emplace_back(x);
  } else {
    for (std::size_t i = 0; i < linear().dim; ++i) out.emplace_back(linear().basis_vector(i));
  }
  return out;
}

std::string MciObject::describe(const Element& x) const {
  if (is_table()) return table().label(as_id(x));
  return linear().describe(as_vector(x));
}

std::uint32_t as_id(const Element& e) {
  if (!std::holds_alternative<std::uint32_t>(e)) fail(ErrorKind::internal, "expected a table element");
  return std::get<std::uint32_t>(e);
}

const Vector& as_vector(const Element& e) {
  if (!std::holds_alternative<Vector>(e)) fail(ErrorKind::internal, "expected a vector element");
  return std::get<Vector>(e);
}

}  // namespace mci
