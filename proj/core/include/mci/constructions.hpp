#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mci/morphism.hpp"

namespace mci {

Ideal kernel(const Morphism& f);
Subobject image(const Morphism& f);

bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
/// Bijective map (table) or square invertible matrix (linear).
bool is_isomorphism(const Morphism& f);

/// A subobject turned into an object of its own, with the inclusion.
struct Materialized {
  ObjectPtr object;
  Morphism inclusion;
};
/// Table members keep their labels and are renumbered in increasing id
/// order; linear subobjects use the echelon basis.
Materialized materialize(const Subobject& s, const std::string& name = {});

struct Quotient {
  ObjectPtr object;
  Morphism projection;
};
/// Validates I first (ideal-invalid with witness otherwise) and verifies
/// that the induced operations are independent of coset representatives.
Quotient quotient(const ObjectPtr& obj, const Ideal& I, const std::string& name = {});

struct Product {
  ObjectPtr object;
  Morphism p1, p2;
  Morphism i1, i2;
};
/// Componentwise operations. Table ids: (a, b) -> a + |A| * b. Linear basis:
/// A's basis followed by B's.
Product direct_product(const ObjectPtr& A, const ObjectPtr& B, const std::string& name = {});

struct Pullback {
  ObjectPtr object;
  Morphism pi1;  // to the source of g
  Morphism pi2;  // to the source of f
};
/// Carrier {(e, b) | g(e) = f(b)} for f: B -> C and g: E -> C.
Pullback pullback(const Morphism& f, const Morphism& g, const std::string& name = {});
/// The unique map X -> P with pi1 u = to_e and pi2 u = to_b; raises
/// precondition-violation when g to_e != f to_b.
Morphism pullback_factor(const Pullback& pb, const Morphism& f, const Morphism& g,
                         const Morphism& to_e, const Morphism& to_b);

/// Reduction of a linear object over Q to F_p. Only the tensors change; the
/// variety tag is kept (membership is re-verified by the varieties module).
ObjectPtr base_change(const MciObject& obj, std::uint32_t p);
/// The same matrix reduced mod p between base-changed objects.
Morphism base_change(const Morphism& f, const ObjectPtr& source, const ObjectPtr& target);

/// The finite object F_p^n of a linear object, as a table object. Vector
/// (c_0, ..., c_{n-1}) has id sum c_i p^i.
struct TableRealization {
  ObjectPtr linear;
  ObjectPtr table;
  std::uint32_t encode(const Vector& v) const;
  Vector decode(std::uint32_t id) const;
};
constexpr std::uint64_t kMaxTableCarrier = 4096;
TableRealization realize_table(const ObjectPtr& linear);
/// The element map of a linear morphism between realized objects.
Morphism realize_morphism(const Morphism& f, const TableRealization& source,
                          const TableRealization& target);
/// All members of a linear subobject, as a table subobject.
Subobject realize_subobject(const Subobject& s, const TableRealization& r);

/// Isomorphism search for table objects of at most `max_size` elements:
/// backtracking over images of an additive generating set.
std::optional<Morphism> find_isomorphism(const ObjectPtr& A, const ObjectPtr& B,
                                         std::size_t max_size = 24);

/// Inverse of an injective morphism on its image.
class Preimage {
 public:
  explicit Preimage(const Morphism& injective);
  /// Raises precondition-violation when `e` is outside the image.
  Element operator()(const Element& e) const;
  bool in_image(const Element& e) const;

 private:
  Morphism f_;
  std::vector<std::uint32_t> inverse_;  // table
  std::vector<std::size_t> columns_;    // linear: invertible column block
  Matrix block_inverse_;
  Subspace image_;
};

/// The morphism with the given element function: evaluated on every element
/// (table) or on the basis (linear).
Morphism tabulate(const ObjectPtr& source, const ObjectPtr& target,
                  const std::function<Element(const Element&)>& fn);

/// A set-theoretic section of a surjective morphism: some preimage of each
/// element (the least id for tables, a linear section otherwise).
class Lift {
 public:
  explicit Lift(const Morphism& surjective);
  Element operator()(const Element& e) const;

 private:
  Morphism f_;
  std::vector<std::uint32_t> first_;  // table
  std::vector<std::size_t> rows_;     // linear: rows of f forming a basis of the target
  Matrix rows_inverse_;
};

/// Same object with a new variety tag (and optionally a new name).
ObjectPtr retag(const ObjectPtr& obj, const std::string& variety, const std::string& name = {});

}  // namespace mci
