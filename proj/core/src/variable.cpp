#include "casimir/variable.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace casimir {

std::string Var::name() const {
  const auto pair = [this](const char* head) {
    return std::string(head) + "[" + std::to_string(i()) + "," + std::to_string(j()) + "]";
  };
  const auto single = [this](const char* head) {
    return std::string(head) + "[" + std::to_string(i()) + "]";
  };
  switch (kind()) {
    case VarKind::CoordMatrix: return pair("x");
    case VarKind::CoordDiag: return "x[" + std::to_string(i()) + ",0]";
    case VarKind::CoordGeneric: return "x" + std::to_string(i());
    case VarKind::ElemMatrix: return pair("e");
    case VarKind::ElemDiag: return single("f");
    case VarKind::ElemGeneric: return "e" + std::to_string(i());
    case VarKind::GroupB: return pair("b");
    case VarKind::GroupE: return single("E");
    case VarKind::Theta: return single("t");
    case VarKind::ThetaExp: return single("T");
  }
  return "?";
}

std::optional<Var> element_to_coordinate(Var v) {
  switch (v.kind()) {
    case VarKind::ElemMatrix: return Var::x(v.j(), v.i());
    case VarKind::ElemDiag: return Var::x0(v.i());
    case VarKind::ElemGeneric: return Var::xg(v.i());
    default: return std::nullopt;
  }
}

std::optional<Var> coordinate_to_element(Var v) {
  switch (v.kind()) {
    case VarKind::CoordMatrix: return Var::e(v.j(), v.i());
    case VarKind::CoordDiag: return Var::f(v.i());
    case VarKind::CoordGeneric: return Var::eg(v.i());
    default: return std::nullopt;
  }
}

namespace {

std::optional<unsigned> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 5) return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value >= (1u << 14)) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Var> parse_var(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const char head = text.front();
  auto rest = text.substr(1);
  if (rest.empty()) return std::nullopt;

  if (rest.front() != '[') {
    // Generic form "x4" / "e4".
    auto k = parse_index(rest);
    if (!k || *k == 0) return std::nullopt;
    if (head == 'x') return Var::xg(*k);
    if (head == 'e') return Var::eg(*k);
    return std::nullopt;
  }
  if (rest.back() != ']') return std::nullopt;
  auto inner = rest.substr(1, rest.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) {
    auto k = parse_index(inner);
    if (!k || *k == 0) return std::nullopt;
    switch (head) {
      case 'x': return Var::xg(*k);
      case 'e': return Var::eg(*k);
      case 'f': return Var::f(*k);
      case 'E': return Var::E(*k);
      case 't': return Var::theta(*k);
      case 'T': return Var::T(*k);
      default: return std::nullopt;
    }
  }
  auto a = parse_index(inner.substr(0, comma));
  auto b = parse_index(inner.substr(comma + 1));
  if (!a || !b || *a == 0) return std::nullopt;
  switch (head) {
    case 'x': return *b == 0 ? Var::x0(*a) : Var::x(*a, *b);
    case 'e': return *b == 0 ? std::nullopt : std::optional<Var>(Var::e(*a, *b));
    case 'b': return *b == 0 ? std::nullopt : std::optional<Var>(Var::b(*a, *b));
    default: return std::nullopt;
  }
}

VariableTable::VariableTable(std::vector<Var> vars) {
  for (Var v : vars) add(v);
}

std::size_t VariableTable::add(Var v) {
  if (auto k = index_of(v)) return *k;
  vars_.push_back(v);
  return vars_.size() - 1;
}

std::optional<std::size_t> VariableTable::index_of(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

VariableTable VariableTable::coordinates() const {
  VariableTable out;
  for (Var v : vars_) {
    if (v.is_coordinate()) out.add(v);
  }
  return out;
}

VariableTable VariableTable::parameters() const {
  VariableTable out;
  for (Var v : vars_) {
    if (v.is_parameter()) out.add(v);
  }
  return out;
}

}  // namespace casimir
