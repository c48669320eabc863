#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homat/cobordism.hpp"
#include "homat/matrix.hpp"

namespace homat {

// Factor shims: symmetric powers are generic over the ambient algebra or
// module; a factor type supplies a total content order, a zero test and
// a homogeneous degree (the effective degree for matrices, the stored
// degree for module vectors).
inline int factor_compare(const HomMatrix& a, const HomMatrix& b) { return compare_matrices(a, b); }
inline bool factor_is_zero(const HomMatrix& m) { return m.is_zero(); }
inline std::optional<int> factor_degree(const HomMatrix& m) { return effective_degree(m); }

inline int factor_compare(const ModuleVector& a, const ModuleVector& b) {
  return compare_module_vectors(a, b);
}
inline bool factor_is_zero(const ModuleVector& v) { return v.is_zero(); }
inline std::optional<int> factor_degree(const ModuleVector& v) { return stored_degree(v); }

// An m-fold tensor before passing to coinvariants.
template <class F>
struct SymTensor {
  std::vector<F> factors;

  std::size_t arity() const { return factors.size(); }
};

template <class F>
int compare_tensors(const SymTensor<F>& a, const SymTensor<F>& b) {
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (int c = factor_compare(a.factors[i], b.factors[i]); c != 0) return c;
  return 0;
}

template <class F>
struct TensorLess {
  bool operator()(const SymTensor<F>& a, const SymTensor<F>& b) const {
    return compare_tensors(a, b) < 0;
  }
};

template <class F>
struct CanonicalTensor {
  int sign;  // +1 or -1
  SymTensor<F> tensor;
};

// Sorts the factors by the global content order, picking up the Koszul
// sign of each adjacent transposition of odd-degree factors. Returns
// nothing when the class is zero: a zero factor kills the tensor, and so
// does a repeated factor of odd degree (x = -x over the rationals).
template <class F>
std::optional<CanonicalTensor<F>> canonicalize(SymTensor<F> t) {
  if (t.factors.empty()) throw ArityMismatch("symmetric tensors need at least one factor");
  std::vector<int> degrees;
  for (const auto& f : t.factors) {
    if (factor_is_zero(f)) return std::nullopt;
    degrees.push_back(factor_degree(f).value());
  }
  int sign = 1;
  const std::size_t m = t.factors.size();
  for (std::size_t pass = 0; pass + 1 < m; ++pass)
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (factor_compare(t.factors[i + 1], t.factors[i]) < 0) {
        if ((degrees[i] & 1) && (degrees[i + 1] & 1)) sign = -sign;
        std::swap(t.factors[i], t.factors[i + 1]);
        std::swap(degrees[i], degrees[i + 1]);
      }
    }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if ((degrees[i] & 1) && factor_compare(t.factors[i], t.factors[i + 1]) == 0)
      return std::nullopt;
  return CanonicalTensor<F>{sign, std::move(t)};
}

// Independent brute-force Koszul sign: the product over all inverted
// pairs i<j (those with sigma(i) > sigma(j)) of (-1)^{deg_i * deg_j}.
inline int koszul_sign_oracle(const std::vector<int>& degrees, const Permutation& sigma) {
  if (degrees.size() != sigma.size())
    throw ArityMismatch("degree list and permutation sizes differ");
  int sign = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      if (sigma(i) > sigma(j) && (degrees[i] & 1) && (degrees[j] & 1)) sign = -sign;
  return sign;
}

enum class Convention { averaged, orbit_sum };

inline const char* convention_name(Convention c) {
  return c == Convention::averaged ? "averaged" : "orbit-sum";
}

// The printed sign of the symmetric-power product for the sigma-term of
// (a_1 x..x a_m)(b_1 x..x b_m): (-1)^e with
//   e = sum_{i>j} |a_i b_{sigma^{-1}(j)}|  +  sum_{i<j, sigma(i)>sigma(j)} |b_i b_j|
// where the degree of a product is read as the sum of the factor
// degrees. For even degree lists this is always +1.
inline int printed_sign(const std::vector<int>& adeg, const std::vector<int>& bdeg,
                        const Permutation& sigma) {
  const std::size_t m = sigma.size();
  if (adeg.size() != m || bdeg.size() != m)
    throw ArityMismatch("degree lists and permutation sizes differ");
  const Permutation inv = sigma.inverse();
  int e = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) e += adeg[i] + bdeg[inv(j)];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (sigma(i) > sigma(j)) e += bdeg[i] + bdeg[j];
  return (e & 1) ? -1 : 1;
}

// The textbook comparison sign for the same sigma-term: shuffle the word
// a_1..a_m b_1..b_m into a_1 b_{sigma^{-1}(1)} .. a_m b_{sigma^{-1}(m)}
// and take the Koszul sign of that letter permutation.
inline int standard_shuffle_sign(const std::vector<int>& adeg, const std::vector<int>& bdeg,
                                 const Permutation& sigma) {
  const std::size_t m = sigma.size();
  std::vector<int> degrees = adeg;
  degrees.insert(degrees.end(), bdeg.begin(), bdeg.end());
  std::vector<std::size_t> images(2 * m);
  for (std::size_t i = 0; i < m; ++i) images[i] = 2 * i;
  for (std::size_t j = 0; j < m; ++j) images[m + j] = 2 * sigma(j) + 1;
  return koszul_sign_oracle(degrees, Permutation(std::move(images)));
}

// Exact-rational combination of canonical symmetric tensor classes of a
// fixed arity, under one normalization convention.
template <class F>
class SymElement {
 public:
  SymElement(Convention convention, std::size_t arity)
      : convention_(convention), arity_(arity) {
    if (arity_ < 1) throw ArityMismatch("symmetric power arity must be >= 1");
  }

  Convention convention() const { return convention_; }
  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SymTensor<F>, Rational, TensorLess<F>>& terms() const { return terms_; }

  // Canonicalizes the tensor and accumulates; zero classes are dropped.
  void add_term(const Rational& coeff, SymTensor<F> tensor) {
    if (coeff == 0) return;
    if (tensor.arity() != arity_)
      throw ArityMismatch("tensor arity " + std::to_string(tensor.arity()) +
                          " != element arity " + std::to_string(arity_));
    auto canonical = canonicalize(std::move(tensor));
    if (!canonical) return;
    const Rational c = coeff * canonical->sign;
    auto [it, fresh] = terms_.emplace(std::move(canonical->tensor), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
  }

  friend SymElement operator+(const SymElement& a, const SymElement& b) {
    if (a.convention_ != b.convention_)
      throw MathError("mixing normalization conventions");
    if (a.arity_ != b.arity_) throw ArityMismatch("adding symmetric elements of different arity");
    SymElement out = a;
    for (const auto& [t, c] : b.terms_) {
      auto [it, fresh] = out.terms_.emplace(t, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
    return out;
  }

  friend SymElement operator*(const Rational& c, const SymElement& v) {
    SymElement out = v;
    if (c == 0)
      out.terms_.clear();
    else
      out.scale(c);
    return out;
  }

  friend bool operator==(const SymElement& a, const SymElement& b) {
    if (a.convention_ != b.convention_ || a.arity_ != b.arity_) return false;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (compare_tensors(ia->first, ib->first) != 0 || ia->second != ib->second) return false;
    }
    return ia == a.terms_.end() && ib == b.terms_.end();
  }

 private:
  Convention convention_;
  std::size_t arity_;
  std::map<SymTensor<F>, Rational, TensorLess<F>> terms_;
};

constexpr std::size_t kDefaultMaxSymArity = 8;

inline Rational factorial(std::size_t m) {
  Rational f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= (int)i;
  return f;
}

// Shared engine for the symmetric-power product and the symmetric-power
// action: per pair of tensor terms, every permutation sigma contributes
// the tensor of factorwise products a_i * b_{sigma^{-1}(i)} with the
// printed sign. The averaged convention divides the total by m!.
template <class FA, class FB, class Mul>
SymElement<FB> sym_combine(const SymElement<FA>& a, const SymElement<FB>& b, Mul&& mul,
                           std::size_t max_arity) {
  if (a.convention() != b.convention()) throw MathError("mixing normalization conventions");
  if (a.arity() != b.arity())
    throw ArityMismatch("arity " + std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
  const std::size_t m = a.arity();
  if (m > max_arity)
    throw ArityCapExceeded("arity " + std::to_string(m) + " exceeds the factorial cap " +
                           std::to_string(max_arity));
  const auto perms = Permutation::all(m);
  SymElement<FB> out(a.convention(), m);
  for (const auto& [ta, ca] : a.terms()) {
    std::vector<int> adeg;
    for (const auto& f : ta.factors) adeg.push_back(factor_degree(f).value());
    for (const auto& [tb, cb] : b.terms()) {
      std::vector<int> bdeg;
      for (const auto& f : tb.factors) bdeg.push_back(factor_degree(f).value());
      for (const auto& sigma : perms) {
        const Permutation inv = sigma.inverse();
        SymTensor<FB> product;
        bool vanished = false;
        for (std::size_t i = 0; i < m; ++i) {
          product.factors.push_back(mul(ta.factors[i], tb.factors[inv(i)]));
          if (factor_is_zero(product.factors.back())) {
            vanished = true;
            break;
          }
        }
        if (vanished) continue;
        out.add_term(ca * cb * printed_sign(adeg, bdeg, sigma), std::move(product));
      }
    }
  }
  if (a.convention() == Convention::averaged) out.scale(Rational(1) / factorial(m));
  return out;
}

inline SymElement<HomMatrix> sym_product(const SymElement<HomMatrix>& a,
                                         const SymElement<HomMatrix>& b,
                                         std::size_t max_arity = kDefaultMaxSymArity) {
  return sym_combine(a, b, [](const HomMatrix& x, const HomMatrix& y) { return hg_product(x, y); },
                     max_arity);
}

inline SymElement<ModuleVector> sym_act(const SymElement<HomMatrix>& a,
                                        const SymElement<ModuleVector>& v,
                                        std::size_t max_arity = kDefaultMaxSymArity) {
  return sym_combine(a, v, [](const HomMatrix& x, const ModuleVector& w) { return hg_act(x, w); },
                     max_arity);
}

// The algebra inclusion of cobordism elements into the m-th symmetric
// power of the square matrix algebra: the class of the tensor whose i-th
// factor is the single-entry matrix carrying t_i at (alpha(i), i).
// Requires m equal to the index map size and even dimensions/degrees
// throughout.
inline SymElement<HomMatrix> schur_include(const CobordismElement& e, std::size_t m,
                                           Convention convention,
                                           std::size_t max_arity = kDefaultMaxSymArity) {
  const std::size_t n = e.index.size();
  if (m != n)
    throw ArityMismatch("symmetric power arity " + std::to_string(m) +
                        " must equal the index map size " + std::to_string(n));
  if (m > max_arity)
    throw ArityCapExceeded("arity " + std::to_string(m) + " exceeds the factorial cap " +
                           std::to_string(max_arity));
  const CategoryPtr& cat = e.category;
  for (const auto& x : e.index.objects)
    if (cat->dim_of(x) % 2 != 0)
      throw ParityViolation("object '" + x + "' has odd dimension");

  SymElement<HomMatrix> out(convention, m);
  SymTensor<HomMatrix> tensor;
  for (std::size_t i = 0; i < n; ++i) {
    if (e.entries[i].is_zero()) return out;  // a zero strand kills the class
    const auto intrinsic = e.entries[i].homogeneous_degree();
    if (!intrinsic)
      throw NotHomogeneous("cobordism entry " + std::to_string(i + 1) + " mixes degrees");
    const int eff = *intrinsic - cat->dim_of(e.index.at(e.alpha(i)));
    if (eff % 2 != 0)
      throw ParityViolation("cobordism entry " + std::to_string(i + 1) +
                            " has odd effective degree " + std::to_string(eff));
    HomMatrix factor(cat, e.index, e.index);
    factor.set_entry(e.alpha(i), i, e.entries[i]);
    tensor.factors.push_back(std::move(factor));
  }
  out.add_term(1, std::move(tensor));
  return out;
}

}  // namespace homat
