#include "casimir/coadjoint.hpp"

#include <algorithm>
#include <set>

#include "casimir/error.hpp"

namespace casimir {

std::optional<std::size_t> LiftedInvariantSet::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::string lifted_label(Var coordinate) {
  const std::string name = coordinate.name();
  return "I" + name.substr(1);
}

QMatrix adjoint_matrix(const LieAlgebra& L, std::size_t i) {
  if (i >= L.dim()) fail(ErrorKind::IndexError, "generator index out of range");
  QMatrix m(L.dim(), L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    for (const auto& [k, c] : L.bracket(i, j)) m(k, j) = c;
  }
  return m;
}

bool is_diagonal(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && m(r, c) != 0) return false;
    }
  }
  return true;
}

bool is_nilpotent(const QMatrix& m) {
  QMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (p(r, c) != 0) return false;
    }
  }
  return true;
}

SymMatrix exp_ad(const QMatrix& m, Var t, const Integer& scale) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "exp of a non-square matrix");
  const std::size_t n = m.rows();
  if (is_nilpotent(m)) {
    SymMatrix out = SymMatrix::identity(n);
    QMatrix power = m;
    Polynomial tp(t);
    Rational factorial = 1;
    for (std::size_t r = 1; r <= n; ++r) {
      bool zero = true;
      factorial *= static_cast<long>(r);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (power(a, b) == 0) continue;
          zero = false;
          out(a, b) += RationalFunction(tp * (power(a, b) / factorial));
        }
      }
      if (zero) break;
      power = power * m;
      tp = tp * Polynomial(t);
    }
    return out;
  }
  if (!is_diagonal(m)) fail(ErrorKind::UnsupportedGenerator, "generator is neither nilpotent nor diagonal");
  if (t.kind() != VarKind::Theta) fail(ErrorKind::DomainError, "diagonal exponent needs a theta variable");
  const Var T = Var::T(t.i());
  SymMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Rational d = m(a, a) * scale;
    if (!is_integer(d)) fail(ErrorKind::UnsupportedGenerator, "non-integral diagonal exponent");
    out(a, a) = RationalFunction(T).pow(to_long(d));
  }
  return out;
}

namespace {

void prune(LiftedInvariantSet& set) {
  std::set<Var> used;
  for (const auto& e : set.entries) {
    for (Var v : e.variables()) {
      if (v.is_parameter()) used.insert(v);
    }
  }
  set.params.assign(used.begin(), used.end());
}

}  // namespace

LiftedInvariantSet lifted_generic(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  SymMatrix nil = SymMatrix::identity(n);
  SymMatrix diag = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const QMatrix ad = adjoint_matrix(L, i);
    const Var theta = Var::theta(static_cast<unsigned>(i + 1));
    if (is_nilpotent(ad)) {
      nil = nil * exp_ad(ad, theta);
    } else if (is_diagonal(ad)) {
      QMatrix neg = ad;
      Integer scale = 1;
      for (std::size_t k = 0; k < n; ++k) {
        neg(k, k) = -neg(k, k);
        scale = lcm(scale, neg(k, k).get_den());
      }
      diag = diag * exp_ad(neg, theta, scale);
    } else {
      fail(ErrorKind::UnsupportedGenerator,
           "ad " + L.labels()[i] + " is neither nilpotent nor diagonal");
    }
  }
  const SymMatrix B = nil * diag;
  LiftedInvariantSet set;
  set.coords = L.coordinates();
  for (std::size_t j = 0; j < n; ++j) {
    RationalFunction e;
    for (std::size_t k = 0; k < n; ++k) {
      if (!B(k, j).is_zero()) e += RationalFunction(set.coords[k]) * B(k, j);
    }
    set.labels.push_back(lifted_label(set.coords[j]));
    set.entries.push_back(std::move(e));
  }
  prune(set);
  return set;
}

SymMatrix coordinate_matrix(int n) {
  SymMatrix X(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) X(i - 1, j - 1) = RationalFunction(Var::x(i, j));
  }
  return X;
}

LiftedInvariantSet lifted_triangular(const TriangularSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const TriangularSpec scaled = spec.integer_scaled();
  SymMatrix B(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    RationalFunction d(1L);
    for (int p = 1; p <= spec.s; ++p) {
      const Rational& g = scaled.g(p, i);
      if (g != 0) d *= RationalFunction(Var::E(p)).pow(to_long(g));
    }
    B(i - 1, i - 1) = d;
    for (int j = i + 1; j <= n; ++j) B(i - 1, j - 1) = RationalFunction(Var::b(i, j));
  }
  const SymMatrix Binv = invert_upper_triangular(B);
  const SymMatrix X = coordinate_matrix(n);
  const SymMatrix I = B * X * Binv;

  LiftedInvariantSet set;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      set.coords.push_back(Var::x(i, j));
      set.labels.push_back(lifted_label(Var::x(i, j)));
      set.entries.push_back(I(i - 1, j - 1));
    }
  }
  for (int p = 1; p <= spec.s; ++p) {
    RationalFunction e(Var::x0(p));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        RationalFunction inner;
        for (int l = j; l <= i; ++l) {
          const Rational& g = spec.g(p, l);
          if (g == 0) continue;
          inner += RationalFunction(g) * B(l - 1, i - 1) * Binv(j - 1, l - 1);
        }
        if (!inner.is_zero()) e += inner * RationalFunction(Var::x(i, j));
      }
    }
    set.coords.push_back(Var::x0(p));
    set.labels.push_back(lifted_label(Var::x0(p)));
    set.entries.push_back(std::move(e));
  }
  prune(set);
  return set;
}

}  // namespace casimir
