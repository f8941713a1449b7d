#include "casimir/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "casimir/error.hpp"

namespace casimir {

// ---------------------------------------------------------------- spec

void TriangularSpec::validate() const {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  if (s < 0 || s > n - 1) fail(ErrorKind::SpecError, "s must lie in 0..n-1");
  if (static_cast<int>(gamma.size()) != s) fail(ErrorKind::SpecError, "gamma must have s rows");
  QMatrix m(s + 1, n);
  for (int p = 0; p < s; ++p) {
    if (static_cast<int>(gamma[p].size()) != n) fail(ErrorKind::SpecError, "gamma rows must have n entries");
    for (int i = 0; i < n; ++i) m(p, i) = gamma[p][i];
  }
  for (int i = 0; i < n; ++i) m(s, i) = 1;
  if (rank(m) != static_cast<std::size_t>(s + 1)) {
    fail(ErrorKind::SpecError, "gamma rows and the unit row are linearly dependent");
  }
}

std::vector<Integer> TriangularSpec::row_scales() const {
  std::vector<Integer> out;
  for (const auto& row : gamma) {
    Integer l = 1;
    for (const auto& g : row) l = lcm(l, g.get_den());
    out.push_back(l);
  }
  return out;
}

TriangularSpec TriangularSpec::integer_scaled() const {
  TriangularSpec out = *this;
  const auto scales = row_scales();
  for (int p = 0; p < s; ++p) {
    for (auto& g : out.gamma[p]) g *= scales[p];
  }
  return out;
}

// ---------------------------------------------------------------- algebra

LieAlgebra::LieAlgebra(std::vector<Var> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  std::set<Var> seen;
  for (Var v : elements_) {
    auto c = element_to_coordinate(v);
    if (!c) fail(ErrorKind::SpecError, v.name() + " is not a basis element variable");
    if (!seen.insert(v).second) fail(ErrorKind::SpecError, "duplicate basis element " + v.name());
    coordinates_.push_back(*c);
  }
  if (labels_.empty()) {
    for (Var v : elements_) labels_.push_back(v.name());
  }
  if (labels_.size() != elements_.size()) fail(ErrorKind::SpecError, "label count mismatch");
  table_.assign(elements_.size() * elements_.size(), {});
}

std::optional<std::size_t> LieAlgebra::index_of(Var v) const {
  auto it = std::find(elements_.begin(), elements_.end(), v);
  if (it == elements_.end()) {
    it = std::find(coordinates_.begin(), coordinates_.end(), v);
    if (it == coordinates_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - coordinates_.begin());
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim() || j >= dim()) fail(ErrorKind::IndexError, "bracket index out of range");
  if (i == j) {
    if (!value.empty()) fail(ErrorKind::SpecError, "[e_i, e_i] must vanish");
    return;
  }
  std::sort(value.begin(), value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector merged;
  for (auto& [k, c] : value) {
    if (k >= dim()) fail(ErrorKind::IndexError, "bracket result index out of range");
    if (!merged.empty() && merged.back().first == k) {
      merged.back().second += c;
    } else {
      merged.emplace_back(k, c);
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.second == 0; });
  SparseVector negated = merged;
  for (auto& t : negated) t.second = -t.second;
  table_[i * dim() + j] = std::move(merged);
  table_[j * dim() + i] = std::move(negated);
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket(i, j)) {
    if (idx == k) return c;
  }
  return Rational(0);
}

namespace {

void add_scaled(SparseVector& acc, const SparseVector& v, const Rational& scale) {
  std::map<std::size_t, Rational> m(acc.begin(), acc.end());
  for (const auto& [k, c] : v) m[k] += scale * c;
  acc.clear();
  for (auto& [k, c] : m) {
    if (c != 0) acc.emplace_back(k, c);
  }
}

}  // namespace

SparseVector bracket(const LieAlgebra& L, const SparseVector& a, const SparseVector& b) {
  SparseVector out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) add_scaled(out, L.bracket(i, j), ci * cj);
  }
  return out;
}

std::vector<JacobiViolation> validate(const LieAlgebra& L) {
  std::vector<JacobiViolation> out;
  const std::size_t n = L.dim();
  auto unit = [](std::size_t k) { return SparseVector{{k, Rational(1)}}; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector sum;
        add_scaled(sum, bracket(L, L.bracket(i, j), unit(k)), 1);
        add_scaled(sum, bracket(L, L.bracket(j, k), unit(i)), 1);
        add_scaled(sum, bracket(L, L.bracket(k, i), unit(j)), 1);
        if (!sum.empty()) out.push_back({i, j, k, sum});
      }
    }
  }
  return out;
}

std::size_t triangular_index(int n, int i, int j) {
  if (i < 1 || j <= i || j > n) fail(ErrorKind::IndexError, "no element e[" + std::to_string(i) + "," + std::to_string(j) + "]");
  std::size_t pos = 0;
  for (int r = 1; r < i; ++r) pos += static_cast<std::size_t>(n - r);
  return pos + static_cast<std::size_t>(j - i - 1);
}

// ---------------------------------------------------------------- families

LieAlgebra build_t_gamma(const TriangularSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<Var> basis;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) basis.push_back(Var::e(i, j));
  }
  for (int p = 1; p <= spec.s; ++p) basis.push_back(Var::f(p));
  LieAlgebra L(basis);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t a = triangular_index(n, i, j);
      for (int k = j + 1; k <= n; ++k) {
        // [e_ij, e_jk] = e_ik
        L.set_bracket(a, triangular_index(n, j, k), {{triangular_index(n, i, k), Rational(1)}});
      }
    }
  }
  const std::size_t base = static_cast<std::size_t>(n * (n - 1) / 2);
  for (int p = 1; p <= spec.s; ++p) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Rational c = spec.g(p, i) - spec.g(p, j);
        if (c != 0) {
          const std::size_t a = triangular_index(n, i, j);
          L.set_bracket(base + p - 1, a, {{a, c}});
        }
      }
    }
  }
  L.set_family({"t_gamma", n, spec, Rational(0)});
  return L;
}

TriangularSpec t0_spec(int n) { return TriangularSpec{n, 0, {}}; }

TriangularSpec st_spec(int n) {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  TriangularSpec spec{n, n - 1, {}};
  for (int p = 1; p < n; ++p) {
    std::vector<Rational> row;
    for (int i = 1; i <= n; ++i) {
      row.push_back(i <= p ? make_rational(n - p, n) : make_rational(-p, n));
    }
    for (auto& r : row) r.canonicalize();
    spec.gamma.push_back(row);
  }
  return spec;
}

TriangularSpec g48_spec(const Rational& b) {
  return TriangularSpec{3, 1, {{Rational(-1), Rational(0), b}}};
}

LieAlgebra build_t0(int n) {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  LieAlgebra L = build_t_gamma(t0_spec(n));
  L.set_family({"t0", n, t0_spec(n), Rational(0)});
  return L;
}

LieAlgebra build_st(int n) {
  LieAlgebra L = build_t_gamma(st_spec(n));
  L.set_family({"st", n, st_spec(n), Rational(0)});
  return L;
}

LieAlgebra build_t(int n) {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  std::vector<Var> basis;
  std::map<std::pair<int, int>, std::size_t> index;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      index[{i, j}] = basis.size();
      basis.push_back(Var::e(i, j));
    }
  }
  LieAlgebra L(basis);
  // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
  for (const auto& [a, ia] : index) {
    for (const auto& [b, ib] : index) {
      if (ia >= ib) continue;
      SparseVector v;
      if (a.second == b.first) v.emplace_back(index.at({a.first, b.second}), Rational(1));
      if (b.second == a.first) v.emplace_back(index.at({b.first, a.second}), Rational(-1));
      if (!v.empty()) L.set_bracket(ia, ib, v);
    }
  }
  L.set_family({"t", n, {}, Rational(0)});
  return L;
}

LieAlgebra build_g48(const Rational& b) {
  LieAlgebra L({Var::eg(1), Var::eg(2), Var::eg(3), Var::eg(4)});
  L.set_bracket(1, 2, {{0, Rational(1)}});
  L.set_bracket(0, 3, {{0, Rational(1 + b)}});
  L.set_bracket(1, 3, {{1, Rational(1)}});
  L.set_bracket(2, 3, {{2, b}});
  L.set_family({"g48", 3, g48_spec(b), b});
  return L;
}

// ---------------------------------------------------------------- reduced form

TriangularSpec ReducedGamma::reduced_spec(int n) const {
  return TriangularSpec{n, static_cast<int>(gamma_reduced.size()), gamma_reduced};
}

ReducedGamma reduce_gamma(const TriangularSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int s = spec.s;
  const int half = n / 2;
  ReducedGamma r;
  r.gamma_reduced = spec.gamma;
  r.row_transform = QMatrix::identity(static_cast<std::size_t>(s));
  r.shift.assign(static_cast<std::size_t>(s), Rational(0));
  auto& g = r.gamma_reduced;
  auto diff = [&](int p, int k) { return g[p][n - k] - g[p][k - 1]; };
  auto swap_rows = [&](int a, int b) {
    std::swap(g[a], g[b]);
    for (int c = 0; c < s; ++c) std::swap(r.row_transform(a, c), r.row_transform(b, c));
  };
  auto scale_row = [&](int a, const Rational& f) {
    for (auto& x : g[a]) x *= f;
    for (int c = 0; c < s; ++c) r.row_transform(a, c) *= f;
  };
  auto add_row = [&](int dst, int src, const Rational& f) {
    for (int c = 0; c < n; ++c) g[dst][c] += f * g[src][c];
    for (int c = 0; c < s; ++c) r.row_transform(dst, c) += f * r.row_transform(src, c);
  };

  int q = 0;
  for (int k = 1; k <= half && q < s; ++k) {
    int p = q;
    while (p < s && diff(p, k) == 0) ++p;
    if (p == s) continue;
    if (p != q) swap_rows(p, q);
    scale_row(q, 1 / diff(q, k));
    for (int other = 0; other < s; ++other) {
      if (other == q) continue;
      const Rational d = diff(other, k);
      if (d != 0) add_row(other, q, -d);
    }
    r.k_list.push_back(k);
    ++q;
  }
  r.s_prime = q;

  r.alpha.assign(static_cast<std::size_t>(q), std::vector<Rational>(static_cast<std::size_t>(half)));
  for (int a = 0; a < q; ++a) {
    Rational acc = 0;
    for (int k = 1; k <= half; ++k) {
      acc -= diff(a, k);
      r.alpha[a][k - 1] = acc;
    }
  }
  QMatrix delta(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) delta(a, b) = r.alpha[a][r.k_list[b] - 1];
  }
  r.delta = determinant(delta);
  r.beta.assign(static_cast<std::size_t>(q), std::vector<Rational>(static_cast<std::size_t>(half)));
  for (int k = 1; k <= half; ++k) {
    for (int b = 0; b < q; ++b) {
      QMatrix m = delta;
      for (int a = 0; a < q; ++a) m(a, b) = r.alpha[a][k - 1];
      r.beta[b][k - 1] = -determinant(m) / r.delta;
    }
  }
  return r;
}

std::string check_reduced_form(int n, const ReducedGamma& r) {
  const auto& g = r.gamma_reduced;
  const int s = static_cast<int>(g.size());
  const int half = n / 2;
  auto diff = [&](int p, int k) { return g[p][n - k] - g[p][k - 1]; };
  if (static_cast<int>(r.k_list.size()) != r.s_prime) return "k_list length differs from s'";
  for (int q = 0; q < r.s_prime; ++q) {
    const int kq = r.k_list[q];
    if (kq < 1 || kq > half) return "k_q out of range";
    if (q > 0 && r.k_list[q - 1] >= kq) return "k_list not increasing";
    for (int k = 1; k < kq; ++k) {
      if (diff(q, k) != 0) return "row " + std::to_string(q + 1) + " differs before k_q";
    }
    if (diff(q, kq) != 1) return "pivot difference of row " + std::to_string(q + 1) + " is not 1";
    for (int p = 0; p < s; ++p) {
      if (p != q && diff(p, kq) != 0) return "column k_q not cleared in row " + std::to_string(p + 1);
    }
  }
  for (int p = r.s_prime; p < s; ++p) {
    for (int k = 1; k <= half; ++k) {
      if (diff(p, k) != 0) return "row " + std::to_string(p + 1) + " beyond s' is not symmetric";
    }
  }
  return {};
}

int gamma_difference_rank(const TriangularSpec& spec) {
  const int half = spec.n / 2;
  QMatrix m(static_cast<std::size_t>(spec.s), static_cast<std::size_t>(half));
  for (int p = 1; p <= spec.s; ++p) {
    for (int k = 1; k <= half; ++k) m(p - 1, k - 1) = spec.g(p, spec.n - k + 1) - spec.g(p, k);
  }
  return static_cast<int>(rank(m));
}

std::size_t center_dim(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Rows (i, k), columns j: coefficient c_ij^k of [e_i, z] for z = sum z_j e_j.
  QMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : L.bracket(i, j)) m(i * n + k, j) = c;
    }
  }
  return n - rank(m);
}

// ---------------------------------------------------------------- JSON

namespace {

using json = nlohmann::json;

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(ErrorKind::ParseError, "expected an exact rational, got " + v.dump());
}

int json_int(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    fail(ErrorKind::ParseError, std::string("missing integer field '") + key + "'");
  }
  return obj[key].get<int>();
}

LieAlgebra from_family(const json& j) {
  const std::string family = j["family"].get<std::string>();
  if (family == "g48") {
    if (!j.contains("b")) fail(ErrorKind::ParseError, "g48 requires 'b'");
    return build_g48(json_rational(j["b"]));
  }
  const int n = json_int(j, "n");
  if (family == "t0") return build_t0(n);
  if (family == "st") return build_st(n);
  if (family == "t") return build_t(n);
  if (family == "t_gamma") {
    TriangularSpec spec{n, 0, {}};
    if (j.contains("gamma")) {
      if (!j["gamma"].is_array()) fail(ErrorKind::ParseError, "'gamma' must be an array of rows");
      for (const auto& row : j["gamma"]) {
        if (!row.is_array()) fail(ErrorKind::ParseError, "'gamma' rows must be arrays");
        std::vector<Rational> values;
        for (const auto& x : row) values.push_back(json_rational(x));
        spec.gamma.push_back(values);
      }
    }
    spec.s = static_cast<int>(spec.gamma.size());
    return build_t_gamma(spec);
  }
  fail(ErrorKind::ParseError, "unknown family '" + family + "'");
}

}  // namespace

LieAlgebra parse_algebra_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::ParseError, "algebra file must be a JSON object");
  try {
    if (j.contains("family")) return from_family(j);
    const int dim = json_int(j, "dim");
    if (dim < 1) fail(ErrorKind::SpecError, "dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("basis")) {
      for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
      if (static_cast<int>(labels.size()) != dim) fail(ErrorKind::SpecError, "basis length differs from dim");
    }
    // Labels that name distinct element variables are kept as variables.
    std::vector<Var> elements;
    std::set<Var> seen;
    bool named = !labels.empty();
    for (const auto& l : labels) {
      auto v = parse_var(l);
      if (!v || !v->is_element() || !seen.insert(*v).second) {
        named = false;
        break;
      }
      elements.push_back(*v);
    }
    if (!named) {
      elements.clear();
      for (int k = 1; k <= dim; ++k) elements.push_back(Var::eg(static_cast<unsigned>(k)));
    }
    LieAlgebra L(elements, labels);
    std::set<std::pair<int, int>> given;
    if (j.contains("brackets")) {
      for (const auto& b : j["brackets"]) {
        const int i = json_int(b, "i");
        const int jj = json_int(b, "j");
        if (i < 1 || jj < 1 || i > dim || jj > dim) fail(ErrorKind::SpecError, "bracket index out of range");
        if (i == jj) fail(ErrorKind::SpecError, "bracket of an element with itself");
        if (!given.insert({std::min(i, jj), std::max(i, jj)}).second) {
          fail(ErrorKind::SpecError, "duplicate bracket entry");
        }
        SparseVector v;
        for (const auto& t : b.value("terms", json::array())) {
          const int k = json_int(t, "k");
          if (k < 1 || k > dim) fail(ErrorKind::SpecError, "bracket term index out of range");
          v.emplace_back(static_cast<std::size_t>(k - 1), json_rational(t.at("c")));
        }
        L.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), v);
      }
    }
    return L;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed algebra file: ") + e.what());
  }
}

std::string algebra_to_json(const LieAlgebra& L, bool expand) {
  json j;
  if (L.family() && !expand) {
    const auto& f = *L.family();
    j["family"] = f.family;
    if (f.family == "g48") {
      j["b"] = to_string(f.b);
    } else {
      j["n"] = f.n;
    }
    if (f.family == "t_gamma") {
      json rows = json::array();
      for (const auto& row : f.spec.gamma) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(r);
      }
      j["gamma"] = rows;
    }
    return j.dump(2);
  }
  j["dim"] = L.dim();
  j["basis"] = L.labels();
  json brackets = json::array();
  for (std::size_t a = 0; a < L.dim(); ++a) {
    for (std::size_t b = a + 1; b < L.dim(); ++b) {
      const auto& v = L.bracket(a, b);
      if (v.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : v) terms.push_back({{"k", k + 1}, {"c", to_string(c)}});
      brackets.push_back({{"i", a + 1}, {"j", b + 1}, {"terms", terms}});
    }
  }
  j["brackets"] = brackets;
  return j.dump(2);
}

}  // namespace casimir
