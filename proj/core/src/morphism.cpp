#include "mci/morphism.hpp"

#include <algorithm>

#include "mci/errors.hpp"

namespace mci {

Morphism::Morphism(ObjectPtr source, ObjectPtr target, std::vector<std::uint32_t> map)
    : source_(std::move(source)), target_(std::move(target)), data_(std::move(map)) {
  if (!source_->is_table() || !target_->is_table())
    fail(ErrorKind::invalid_input, "element-map morphism needs table objects on both ends");
  const auto& m = std::get<std::vector<std::uint32_t>>(data_);
  if (m.size() != source_->extent())
    fail(ErrorKind::invalid_input, "morphism map has " + std::to_string(m.size()) +
                                       " entries, source has " + std::to_string(source_->extent()));
  for (auto v : m)
    if (v >= target_->extent()) fail(ErrorKind::invalid_input, "morphism map entry out of range");
}

Morphism::Morphism(ObjectPtr source, ObjectPtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), data_(std::move(matrix)) {
  if (!source_->is_linear() || !target_->is_linear())
    fail(ErrorKind::invalid_input, "matrix morphism needs linear objects on both ends");
  if (!(*source_->field() == *target_->field()))
    fail(ErrorKind::signature_mismatch, "morphism between objects over different fields");
  const auto& m = std::get<Matrix>(data_);
  if (m.rows() != source_->extent() || m.cols() != target_->extent())
    fail(ErrorKind::invalid_input, "morphism matrix is " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ", expected " +
                                       std::to_string(source_->extent()) + "x" +
                                       std::to_string(target_->extent()));
}

const std::vector<std::uint32_t>& Morphism::map() const {
  if (!is_table()) fail(ErrorKind::internal, "morphism is not an element map");
  return std::get<std::vector<std::uint32_t>>(data_);
}

const Matrix& Morphism::matrix() const {
  if (is_table()) fail(ErrorKind::internal, "morphism is not a matrix");
  return std::get<Matrix>(data_);
}

Element Morphism::operator()(const Element& e) const {
  if (is_table()) return map()[as_id(e)];
  return mci::apply(as_vector(e), matrix());
}

Morphism identity_morphism(const ObjectPtr& obj) {
  if (obj->is_table()) {
    std::vector<std::uint32_t> m(obj->extent());
    for (std::uint32_t i = 0; i < m.size(); ++i) m[i] = i;
    return Morphism(obj, obj, std::move(m));
  }
  return Morphism(obj, obj, Matrix::identity(*obj->field(), obj->extent()));
}

Morphism zero_morphism(const ObjectPtr& source, const ObjectPtr& target) {
  if (source->is_table())
    return Morphism(source, target, std::vector<std::uint32_t>(source->extent(), target->table().zero));
  return Morphism(source, target, Matrix(*source->field(), source->extent(), target->extent()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target()->extent() != g.source()->extent() || f.is_table() != g.is_table())
    fail(ErrorKind::invalid_input, "morphisms are not composable");
  if (f.is_table()) {
    std::vector<std::uint32_t> m(f.map().size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map()[f.map()[i]];
    return Morphism(f.source(), g.target(), std::move(m));
  }
  return Morphism(f.source(), g.target(), f.matrix() * g.matrix());
}

bool same_map(const Morphism& f, const Morphism& g) {
  if (f.is_table() != g.is_table()) return false;
  if (f.source()->extent() != g.source()->extent() || f.target()->extent() != g.target()->extent())
    return false;
  return f.is_table() ? f.map() == g.map() : f.matrix() == g.matrix();
}

Subobject Subobject::from_ids(ObjectPtr parent, std::vector<std::uint32_t> ids) {
  if (!parent->is_table()) fail(ErrorKind::invalid_input, "element ids given for a linear object");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Subobject s;
  s.mask_.assign(parent->extent(), false);
  for (auto i : ids) {
    if (i >= parent->extent()) fail(ErrorKind::invalid_input, "subobject element id out of range");
    s.mask_[i] = true;
  }
  s.parent_ = std::move(parent);
  s.ids_ = std::move(ids);
  return s;
}

Subobject Subobject::from_subspace(ObjectPtr parent, Subspace space) {
  if (!parent->is_linear()) fail(ErrorKind::invalid_input, "subspace given for a table object");
  if (space.ambient_dim() != parent->extent())
    fail(ErrorKind::invalid_input, "subspace lives in dimension " + std::to_string(space.ambient_dim()) +
                                       ", object has dimension " + std::to_string(parent->extent()));
  Subobject s;
  s.parent_ = std::move(parent);
  s.space_ = std::move(space);
  return s;
}

Subobject Subobject::from_elements(ObjectPtr parent, const std::vector<Element>& elements) {
  if (parent->is_table()) {
    std::vector<std::uint32_t> ids;
    for (const auto& e : elements) ids.push_back(as_id(e));
    return from_ids(std::move(parent), std::move(ids));
  }
  std::vector<Vector> vs;
  for (const auto& e : elements) vs.push_back(as_vector(e));
  Subspace sp = Subspace::span(*parent->field(), parent->extent(), vs);
  return from_subspace(std::move(parent), std::move(sp));
}

Subobject Subobject::whole(ObjectPtr parent) {
  if (parent->is_table()) {
    std::vector<std::uint32_t> ids(parent->extent());
    for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return from_ids(std::move(parent), std::move(ids));
  }
  Subspace sp = Subspace::whole(*parent->field(), parent->extent());
  return from_subspace(std::move(parent), std::move(sp));
}

Subobject Subobject::zero(ObjectPtr parent) {
  if (parent->is_table()) {
    std::uint32_t z = parent->table().zero;
    return from_ids(std::move(parent), {z});
  }
  Subspace sp(*parent->field(), parent->extent());
  return from_subspace(std::move(parent), std::move(sp));
}

bool Subobject::contains(const Element& e) const {
  if (is_table()) return contains(as_id(e));
  return space_.contains(as_vector(e));
}

bool Subobject::contains(const Subobject& other) const {
  if (is_table() != other.is_table()) return false;
  if (is_table()) {
    for (auto i : other.ids_)
      if (!contains(i)) return false;
    return true;
  }
  return space_.contains(other.space_);
}

bool Subobject::is_zero() const {
  if (is_table()) return ids_.size() == 1 && ids_[0] == parent_->table().zero;
  return space_.dim() == 0;
}

bool Subobject::is_whole() const { return extent() == parent_->extent(); }

std::vector<Element> Subobject::spanning_elements() const {
  std::vector<Element> out;
  if (is_table()) {
    for (auto i : ids_) out.emplace_back(i);
  } else {
    for (auto& v : space_.basis_vectors()) out.emplace_back(std::move(v));
  }
  return out;
}

Subobject Subobject::intersect(const Subobject& other) const {
  if (is_table()) {
    std::vector<std::uint32_t> ids;
    for (auto i : ids_)
      if (other.contains(i)) ids.push_back(i);
    return from_ids(parent_, std::move(ids));
  }
  return from_subspace(parent_, space_.intersect(other.space_));
}

bool operator==(const Subobject& a, const Subobject& b) {
  if (a.is_table() != b.is_table()) return false;
  if (a.is_table()) return a.ids_ == b.ids_;
  return a.space_ == b.space_;
}

json Subobject::to_json() const {
  json j;
  if (is_table()) {
    j["size"] = ids_.size();
    json els = json::array();
    for (auto i : ids_) els.push_back(parent_->describe(Element{i}));
    j["elements"] = std::move(els);
  } else {
    j["dim"] = space_.dim();
    json basis = json::array();
    for (const auto& v : space_.basis_vectors()) {
      json row = json::array();
      for (const auto& s : v) row.push_back(s.to_string());
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    json span = json::array();
    for (const auto& v : space_.basis_vectors()) span.push_back(parent_->describe(Element{v}));
    j["span"] = std::move(span);
  }
  return j;
}

}  // namespace mci
