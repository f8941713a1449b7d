#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

/// Kinds of symbols appearing in expressions. The numeric order of the kinds
/// is part of the global monomial order.
enum class VarKind : std::uint8_t {
  CoordMatrix = 0,   // x[i,j]  dual coordinate of e[j,i]
  CoordDiag = 1,     // x[p,0]  dual coordinate of f[p]
  CoordGeneric = 2,  // xk      dual coordinate of the k-th basis element
  ElemMatrix = 3,    // e[i,j]
  ElemDiag = 4,      // f[p]
  ElemGeneric = 5,   // ek
  GroupB = 6,        // b[i,j]  off-diagonal entry of a triangular group element
  GroupE = 7,        // E[p]    exp(eps_p), scaled so only integer powers occur
  Theta = 8,         // t[k]    second canonical coordinate
  ThetaExp = 9,      // T[k]    exp(t[k] / scale)
};

/// A variable is identified by its descriptor packed into 32 bits:
/// kind (4 bits) | first index (14 bits) | second index (14 bits).
/// The packed value is the variable id and fixes the global variable order.
class Var {
 public:
  constexpr Var() = default;

  static constexpr Var make(VarKind kind, unsigned i, unsigned j = 0) {
    return Var((static_cast<std::uint32_t>(kind) << 28) | (i << 14) | j);
  }

  static constexpr Var x(unsigned i, unsigned j) { return make(VarKind::CoordMatrix, i, j); }
  static constexpr Var x0(unsigned p) { return make(VarKind::CoordDiag, p); }
  static constexpr Var xg(unsigned k) { return make(VarKind::CoordGeneric, k); }
  static constexpr Var e(unsigned i, unsigned j) { return make(VarKind::ElemMatrix, i, j); }
  static constexpr Var f(unsigned p) { return make(VarKind::ElemDiag, p); }
  static constexpr Var eg(unsigned k) { return make(VarKind::ElemGeneric, k); }
  static constexpr Var b(unsigned i, unsigned j) { return make(VarKind::GroupB, i, j); }
  static constexpr Var E(unsigned p) { return make(VarKind::GroupE, p); }
  static constexpr Var theta(unsigned k) { return make(VarKind::Theta, k); }
  static constexpr Var T(unsigned k) { return make(VarKind::ThetaExp, k); }

  constexpr std::uint32_t id() const { return id_; }
  constexpr VarKind kind() const { return static_cast<VarKind>(id_ >> 28); }
  constexpr unsigned i() const { return (id_ >> 14) & 0x3fffu; }
  constexpr unsigned j() const { return id_ & 0x3fffu; }

  constexpr bool is_coordinate() const { return kind() <= VarKind::CoordGeneric; }
  constexpr bool is_element() const {
    return kind() >= VarKind::ElemMatrix && kind() <= VarKind::ElemGeneric;
  }
  constexpr bool is_parameter() const { return kind() >= VarKind::GroupB; }
  /// Parameters standing for exponentials; they are never zero.
  constexpr bool is_exp_parameter() const {
    return kind() == VarKind::GroupE || kind() == VarKind::ThetaExp;
  }

  /// Canonical text form, e.g. "x[3,1]", "f[2]", "x4".
  std::string name() const;

  constexpr auto operator<=>(const Var&) const = default;

 private:
  constexpr explicit Var(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Maps an element variable to its dual coordinate (e[i,j] -> x[j,i],
/// f[p] -> x[p,0], ek -> xk) and back. Other kinds map to nullopt.
std::optional<Var> element_to_coordinate(Var v);
std::optional<Var> coordinate_to_element(Var v);

/// Parses a canonical variable name; returns nullopt on malformed input.
std::optional<Var> parse_var(std::string_view text);

/// Ordered set of variable descriptors; the position in the table is the
/// variable's index within one computation (coordinates, parameters, ...).
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<Var> vars);

  /// Appends v if absent; returns its index.
  std::size_t add(Var v);
  std::optional<std::size_t> index_of(Var v) const;
  bool contains(Var v) const { return index_of(v).has_value(); }

  std::size_t size() const { return vars_.size(); }
  const Var& operator[](std::size_t k) const { return vars_[k]; }
  const std::vector<Var>& vars() const { return vars_; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  VariableTable coordinates() const;
  VariableTable parameters() const;

 private:
  std::vector<Var> vars_;
};

}  // namespace casimir

template <>
struct std::hash<casimir::Var> {
  std::size_t operator()(const casimir::Var& v) const noexcept {
    return std::hash<std::uint32_t>{}(v.id());
  }
};
