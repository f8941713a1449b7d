#include "generators.hpp"

#include "casimir/error.hpp"

namespace gen {

using namespace casimir;

int integer(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational rational(Rng& rng, int range) {
  return make_rational(integer(rng, -range, range), integer(rng, 1, range));
}

Polynomial polynomial(Rng& rng, int vars, int terms, int degree) {
  Polynomial p;
  const int count = integer(rng, 0, terms);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> fs;
    for (int v = 1; v <= vars; ++v) fs.emplace_back(Var::xg(static_cast<unsigned>(v)), integer(rng, 0, degree));
    p += Polynomial(Monomial(fs), rational(rng));
  }
  return p;
}

Polynomial nonzero_polynomial(Rng& rng, int vars, int terms, int degree) {
  for (;;) {
    Polynomial p = polynomial(rng, vars, terms, degree);
    if (!p.is_zero()) return p;
  }
}

RationalFunction rational_function(Rng& rng, int vars) {
  return RationalFunction(polynomial(rng, vars), nonzero_polynomial(rng, vars, 2, 2));
}

QMatrix rational_matrix(Rng& rng, std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = integer(rng, -5, 5);
  }
  return m;
}

SymMatrix polynomial_matrix(Rng& rng, std::size_t n, int vars) {
  SymMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = RationalFunction(polynomial(rng, vars, 2, 1));
  }
  return m;
}

SymMatrix upper_triangular(Rng& rng, std::size_t n) {
  SymMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = RationalFunction(Polynomial(Monomial(Var::xg(static_cast<unsigned>(r + 1)), integer(rng, 0, 2)),
                                          Rational(integer(rng, 1, 4))));
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = RationalFunction(polynomial(rng, 3, 2, 1));
  }
  return m;
}

NCWord word(Rng& rng, std::size_t dim, std::size_t max_length) {
  NCWord w(static_cast<std::size_t>(integer(rng, 0, static_cast<int>(max_length))));
  for (auto& k : w) k = static_cast<std::size_t>(integer(rng, 0, static_cast<int>(dim) - 1));
  return w;
}

TriangularSpec triangular_spec(Rng& rng, int n, int s) {
  for (;;) {
    TriangularSpec spec{n, s, {}};
    for (int p = 0; p < s; ++p) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (auto& g : row) g = integer(rng, -3, 3);
      spec.gamma.push_back(row);
    }
    try {
      spec.validate();
      return spec;
    } catch (const Error&) {
    }
  }
}

}  // namespace gen
