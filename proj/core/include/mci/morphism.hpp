#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mci/object.hpp"
#include "mci/report.hpp"

namespace mci {

/// A map between two objects with the same signature: an element table for
/// the table backend, a matrix in images form for the linear backend.
class Morphism {
 public:
  Morphism(ObjectPtr source, ObjectPtr target, std::vector<std::uint32_t> map);
  Morphism(ObjectPtr source, ObjectPtr target, Matrix matrix);

  const ObjectPtr& source() const { return source_; }
  const ObjectPtr& target() const { return target_; }
  bool is_table() const { return std::holds_alternative<std::vector<std::uint32_t>>(data_); }
  const std::vector<std::uint32_t>& map() const;
  const Matrix& matrix() const;

  std::uint32_t operator()(std::uint32_t x) const { return map()[x]; }
  Vector operator()(const Vector& v) const { return mci::apply(v, matrix()); }
  Element operator()(const Element& e) const;

 private:
  ObjectPtr source_;
  ObjectPtr target_;
  std::variant<std::vector<std::uint32_t>, Matrix> data_;
};

Morphism identity_morphism(const ObjectPtr& obj);
Morphism zero_morphism(const ObjectPtr& source, const ObjectPtr& target);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
/// Equal as maps (same source/target extents, same data).
bool same_map(const Morphism& f, const Morphism& g);

/// A subset (table) or subspace (linear) of a parent object. Subspaces are
/// stored in reduced echelon form so equality is matrix equality.
class Subobject {
 public:
  static Subobject from_ids(ObjectPtr parent, std::vector<std::uint32_t> ids);
  static Subobject from_subspace(ObjectPtr parent, Subspace space);
  /// Membership from arbitrary elements: the ids themselves (table) or their
  /// span (linear). Not closed under anything in general.
  static Subobject from_elements(ObjectPtr parent, const std::vector<Element>& elements);
  static Subobject whole(ObjectPtr parent);
  static Subobject zero(ObjectPtr parent);

  const ObjectPtr& parent() const { return parent_; }
  bool is_table() const { return parent_->is_table(); }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  const Subspace& subspace() const { return space_; }

  bool contains(const Element& e) const;
  bool contains(std::uint32_t id) const { return id < mask_.size() && mask_[id]; }
  bool contains(const Subobject& other) const;
  /// Cardinality (table) or dimension (linear).
  std::size_t extent() const { return is_table() ? ids_.size() : space_.dim(); }
  bool is_zero() const;
  bool is_whole() const;
  /// Members (table) or echelon basis vectors (linear).
  std::vector<Element> spanning_elements() const;
  Subobject intersect(const Subobject& other) const;

  friend bool operator==(const Subobject& a, const Subobject& b);

  json to_json() const;

 private:
  ObjectPtr parent_;
  std::vector<std::uint32_t> ids_;
  std::vector<bool> mask_;
  Subspace space_;
};

/// A subobject that is normal, star-absorbing and stable under the unary
/// operations; equivalently the kernel of a morphism.
class Ideal {
 public:
  /// Validates; throws ideal-invalid, or ideal-not-unary-stable when the only
  /// defect is a missing unary closure.
  static Ideal make(Subobject sub);
  /// For subobjects produced by closure algorithms that guarantee the
  /// invariants.
  static Ideal unchecked(Subobject sub) { return Ideal(std::move(sub)); }

  const Subobject& sub() const { return sub_; }
  const ObjectPtr& parent() const { return sub_.parent(); }
  bool contains(const Element& e) const { return sub_.contains(e); }
  std::size_t extent() const { return sub_.extent(); }
  bool is_zero() const { return sub_.is_zero(); }
  bool is_whole() const { return sub_.is_whole(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.sub_ == b.sub_; }

 private:
  explicit Ideal(Subobject sub) : sub_(std::move(sub)) {}
  Subobject sub_;
};

}  // namespace mci
