#include "casimir/uea.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "casimir/error.hpp"

namespace casimir {

NCPolynomial::NCPolynomial(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

NCPolynomial::NCPolynomial(NCWord w, const Rational& c) {
  if (c != 0) terms_[std::move(w)] = c;
}

void NCPolynomial::add(const NCWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

bool NCPolynomial::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return std::is_sorted(t.first.begin(), t.first.end()); });
}

std::string NCPolynomial::to_string(const LieAlgebra& L) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NCWord, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : ts) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string word;
    for (std::size_t k : w) {
      if (!word.empty()) word += '*';
      word += L.element(k).name();
    }
    if (word.empty()) {
      out << casimir::to_string(mag);
    } else if (mag == 1) {
      out << word;
    } else {
      out << casimir::to_string(mag) << '*' << word;
    }
  }
  return out.str();
}

namespace {

struct WordHash {
  std::size_t operator()(const NCWord& w) const {
    std::size_t h = w.size();
    for (std::size_t k : w) h = h * 1000003u ^ k;
    return h;
  }
};

class Normalizer {
 public:
  Normalizer(const LieAlgebra& L, std::mt19937_64* rng) : L_(L), rng_(rng) {}

  NCPolynomial word(const NCWord& w) {
    if (!rng_) {
      if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    std::vector<std::size_t> descents;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        descents.push_back(p);
        if (!rng_) break;
      }
    }
    NCPolynomial out;
    if (descents.empty()) {
      out = NCPolynomial(w);
    } else {
      std::size_t p = descents.front();
      if (rng_) p = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(*rng_)];
      NCWord swapped = w;
      std::swap(swapped[p], swapped[p + 1]);
      out = word(swapped);
      for (const auto& [k, c] : L_.bracket(w[p], w[p + 1])) {
        NCWord shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        shorter.push_back(k);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        out += word(shorter) * c;
      }
    }
    if (!rng_) cache_.emplace(w, out);
    return out;
  }

 private:
  const LieAlgebra& L_;
  std::mt19937_64* rng_;
  std::unordered_map<NCWord, NCPolynomial, WordHash> cache_;
};

}  // namespace

NCPolynomial nc_normalize(const NCWord& w, const LieAlgebra& L, std::mt19937_64* rng) {
  for (std::size_t k : w) {
    if (k >= L.dim()) fail(ErrorKind::IndexError, "word letter out of range");
  }
  Normalizer norm(L, rng);
  return norm.word(w);
}

NCPolynomial nc_normalize(const NCPolynomial& p, const LieAlgebra& L, std::mt19937_64* rng) {
  Normalizer norm(L, rng);
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t k : w) {
      if (k >= L.dim()) fail(ErrorKind::IndexError, "word letter out of range");
    }
    out += norm.word(w) * c;
  }
  return out;
}

NCPolynomial from_polynomial(const Polynomial& p, const LieAlgebra& L) {
  NCPolynomial out;
  for (const auto& t : p.terms()) {
    NCWord w;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto k = L.index_of(v);
      if (!k) fail(ErrorKind::DomainError, v.name() + " is not an element of the algebra");
      w.insert(w.end(), static_cast<std::size_t>(e), *k);
    }
    std::sort(w.begin(), w.end());
    out.add(w, t.coeff);
  }
  return out;
}

NCPolynomial sym(const NCPolynomial& p, const LieAlgebra& L) {
  NCPolynomial avg;
  for (const auto& [w, c] : p.terms()) {
    NCWord perm = w;
    std::sort(perm.begin(), perm.end());
    std::vector<NCWord> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational share = c / Rational(static_cast<long>(perms.size()));
    for (const auto& q : perms) avg.add(q, share);
  }
  return nc_normalize(avg, L);
}

bool is_casimir(const NCPolynomial& C, const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const NCPolynomial e(NCWord{i});
    if (!nc_normalize(e * C - C * e, L).is_zero()) return false;
  }
  return true;
}

std::string SymmetrizedInvariant::to_string(const LieAlgebra& L) const {
  if (!denominator) return numerator.to_string(L);
  return "(" + numerator.to_string(L) + ")/(" + denominator->to_string(L) + ")";
}

SymmetrizedInvariant symmetrize_invariant(const InvariantExpression& F, const LieAlgebra& L) {
  if (F.kind() == InvariantExpression::Kind::PowerProduct && F.product().has_fractional_exponent()) {
    fail(ErrorKind::NotSymmetrizable, "power-product with fractional exponents: " + F.to_string());
  }
  RationalFunction value = F.value();
  std::map<Var, Var> m;
  for (Var v : value.variables()) {
    if (v.is_coordinate()) m[v] = *coordinate_to_element(v);
  }
  if (!m.empty()) value = value.rename(m);
  SymmetrizedInvariant out;
  if (value.is_polynomial()) {
    out.numerator = sym(from_polynomial(value.as_polynomial(), L), L);
    return out;
  }
  out.numerator = from_polynomial(value.numerator(), L);
  out.denominator = from_polynomial(value.denominator(), L);
  return out;
}

}  // namespace casimir
