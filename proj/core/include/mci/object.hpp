#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mci/matrix.hpp"

namespace mci {

/// A binary operation of Omega_2' together with its swap partner
/// (x op^o y = y op x). `derived` marks partners synthesized by the library
/// rather than supplied by the user.
struct BinaryOp {
  std::string name;
  std::string partner;
  bool derived = false;

  friend bool operator==(const BinaryOp& a, const BinaryOp& b) {
    return a.name == b.name && a.partner == b.partner;
  }
};

/// Omega_2' (with swap partners) and Omega_1'. The group operations 0, -, +
/// are implicit.
class Signature {
 public:
  Signature() = default;
  /// Validates uniqueness of names and presence of every swap partner.
  Signature(std::vector<BinaryOp> binary, std::vector<std::string> unary);

  /// Adds any missing partner ops (named "<op>^op") marked as derived.
  static Signature closed(std::vector<BinaryOp> primary, std::vector<std::string> unary);

  const std::vector<BinaryOp>& binary() const { return binary_; }
  const std::vector<std::string>& unary() const { return unary_; }

  std::optional<std::size_t> binary_index(const std::string& name) const;
  std::optional<std::size_t> unary_index(const std::string& name) const;
  std::size_t require_binary(const std::string& name) const;
  std::size_t require_unary(const std::string& name) const;
  std::size_t partner(std::size_t op) const { return partners_[op]; }

  Signature with_unary(const std::vector<std::string>& extra) const;
  Signature without_unary() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.binary_ == b.binary_ && a.unary_ == b.unary_;
  }

 private:
  std::vector<BinaryOp> binary_;
  std::vector<std::string> unary_;
  std::vector<std::size_t> partners_;
};

/// Finite group with operations given by Cayley tables. Element ids are
/// 0..size-1. Tables are row-major: op[x * size + y] = x op y.
struct TableObject {
  Signature signature;
  std::uint32_t size = 1;
  std::uint32_t zero = 0;
  std::vector<std::uint32_t> add_table{0};
  std::vector<std::uint32_t> neg_table{0};
  std::vector<std::vector<std::uint32_t>> binary;
  std::vector<std::vector<std::uint32_t>> unary;
  std::vector<std::string> labels;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_table[x * size + y]; }
  std::uint32_t neg(std::uint32_t x) const { return neg_table[x]; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
  /// g + x - g
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return sub(add(g, x), g); }
  /// x + y - x - y
  std::uint32_t commutator(std::uint32_t x, std::uint32_t y) const {
    return sub(sub(add(x, y), x), y);
  }
  std::uint32_t star(std::size_t op, std::uint32_t x, std::uint32_t y) const {
    return binary[op][x * size + y];
  }
  std::uint32_t apply(std::size_t op, std::uint32_t x) const { return unary[op][x]; }

  std::string label(std::uint32_t x) const;

  /// Fills the negation table by searching the addition table; entries with
  /// no inverse are set to zero (structural validation reports them).
  void complete_negation();
  /// Fills data of derived partner ops as transposes of their partners.
  void complete_partners();
};

/// Finite-dimensional object over an exact field: + is vector addition,
/// binary ops are bilinear (structure constants), unary ops are linear.
struct LinearObject {
  Signature signature;
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  /// products[op][i * dim + j] = coordinates of e_i op e_j.
  std::vector<std::vector<Vector>> products;
  /// unary[op] in images form (row i = image of e_i).
  std::vector<Matrix> unary;

  static LinearObject zeros(const Signature& sig, const Field& f, std::size_t dim);

  const Vector& product(std::size_t op, std::size_t i, std::size_t j) const {
    return products[op][i * dim + j];
  }
  Vector multiply(std::size_t op, const Vector& x, const Vector& y) const;
  Vector apply(std::size_t op, const Vector& x) const;
  /// Map z -> a op z in images form.
  Matrix left_multiplication(std::size_t op, const Vector& a) const;
  /// Map z -> z op a in images form.
  Matrix right_multiplication(std::size_t op, const Vector& a) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(field, dim, i); }
  Vector zero_vector() const { return mci::zero_vector(field, dim); }

  void complete_partners();
  std::string describe(const Vector& v) const;
};

using Element = std::variant<std::uint32_t, Vector>;

/// An object of a modified category of interest in one of the two backends,
/// tagged with its variety ("lie", "precat1:lie", "group", ...).
class MciObject {
 public:
  MciObject(TableObject t, std::string variety, std::string name = {});
  MciObject(LinearObject l, std::string variety, std::string name = {});

  bool is_table() const { return std::holds_alternative<TableObject>(backend_); }
  bool is_linear() const { return std::holds_alternative<LinearObject>(backend_); }
  const TableObject& table() const;
  const LinearObject& linear() const;

  const Signature& signature() const;
  const std::string& variety() const { return variety_; }
  const std::string& name() const { return name_; }
  /// Field of the linear backend; nullopt for tables.
  std::optional<Field> field() const;

  /// Carrier size for tables, dimension for linear objects.
  std::size_t extent() const;
  /// True when every element can be listed (tables, or linear over F_p).
  bool enumerable() const;

  Element zero() const;
  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
  Element star(std::size_t op, const Element& x, const Element& y) const;
  Element apply(std::size_t op, const Element& x) const;
  bool is_zero(const Element& x) const;

  /// Basis vectors (linear) or all elements (table).
  std::vector<Element> spanning_elements() const;
  std::string describe(const Element& x) const;

 private:
  std::variant<TableObject, LinearObject> backend_;
  std::string variety_;
  std::string name_;
};

using ObjectPtr = std::shared_ptr<const MciObject>;

template <class Backend>
ObjectPtr make_object(Backend backend, std::string variety, std::string name = {}) {
  return std::make_shared<const MciObject>(std::move(backend), std::move(variety), std::move(name));
}

std::uint32_t as_id(const Element& e);
const Vector& as_vector(const Element& e);

}  // namespace mci
