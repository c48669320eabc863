#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "homat/graded.hpp"
#include "homat/report.hpp"

namespace homat {

// Finite chain complex over the rationals: a graded basis together with
// a differential that lowers degree by exactly one and squares to zero.
class ChainComplex {
 public:
  ChainComplex(std::vector<GradedBasisElement> basis,
               std::map<BasisKey, GradedVector> differential)
      : basis_(make_basis(std::move(basis))) {
    for (auto& [k, v] : differential) {
      if (!basis_->contains(k))
        throw AmbientMismatch("differential source " + format_key(k) + " not in complex basis");
      if (!same_basis(v.ambient(), basis_))
        throw AmbientMismatch("differential value for " + format_key(k) +
                              " lives in a foreign basis");
      if (!v.is_zero()) diff_.emplace(k, std::move(v));
    }
  }

  const BasisPtr& basis() const { return basis_; }

  GradedVector differential(const BasisKey& k) const {
    auto it = diff_.find(k);
    return it == diff_.end() ? GradedVector::zero(basis_) : it->second;
  }

  GradedVector differential(const GradedVector& v) const {
    GradedVector out = GradedVector::zero(basis_);
    for (const auto& [k, c] : v.terms()) out.add_scaled(c, differential(k));
    return out;
  }

  // Basis keys grouped by degree, each group in key order.
  std::map<int, std::vector<BasisKey>> basis_by_degree() const {
    std::map<int, std::vector<BasisKey>> out;
    for (const auto& [k, d] : basis_->elements()) out[d].push_back(k);
    return out;
  }

 private:
  BasisPtr basis_;
  std::map<BasisKey, GradedVector> diff_;
};

// Checks the two differential laws and reports the first offender of
// each kind: a term that does not sit one degree lower, and a basis
// element whose d(d(b)) is nonzero (the nonzero value is included).
inline Report validate_complex(const ChainComplex& c) {
  Report report;
  for (const auto& [k, d] : c.basis()->elements()) {
    const GradedVector dv = c.differential(k);
    for (const auto& [tk, coeff] : dv.terms()) {
      if (c.basis()->degree_of(tk) != d - 1) {
        report.add("degree-drop", "d" + format_key(k) + " hits " + format_key(tk) +
                                      " of degree " + std::to_string(c.basis()->degree_of(tk)) +
                                      ", expected " + std::to_string(d - 1));
        return report;
      }
    }
  }
  for (const auto& [k, d] : c.basis()->elements()) {
    const GradedVector ddv = c.differential(c.differential(k));
    if (!ddv.is_zero()) {
      std::string val;
      for (const auto& [tk, coeff] : ddv.terms()) {
        if (!val.empty()) val += " + ";
        val += format_rational(coeff) + "*" + format_key(tk);
      }
      report.add("d-squared", "d(d" + format_key(k) + ") = " + val);
      return report;
    }
  }
  return report;
}

namespace detail {

// Rank of a dense rational matrix by exact Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t cc = col; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Betti numbers over the rationals: dim ker d_i - rank d_{i+1} per
// degree, for every degree carrying basis elements. Requires a valid
// complex.
inline std::map<int, std::size_t> homology_betti(const ChainComplex& c) {
  const Report report = validate_complex(c);
  if (!report.ok())
    throw ComplexInvalid("homology of an invalid complex: " + report.violations.front().rule +
                         " — " + report.violations.front().detail);

  const auto by_degree = c.basis_by_degree();
  // rank of d_i: C_i -> C_{i-1}, as a dense matrix in basis coordinates
  std::map<int, std::size_t> rank_d;
  for (const auto& [deg, keys] : by_degree) {
    auto below = by_degree.find(deg - 1);
    if (below == by_degree.end()) {
      rank_d[deg] = 0;
      continue;
    }
    std::map<BasisKey, std::size_t> row_of;
    for (std::size_t r = 0; r < below->second.size(); ++r) row_of[below->second[r]] = r;
    std::vector<std::vector<Rational>> m(below->second.size(),
                                         std::vector<Rational>(keys.size(), Rational(0)));
    for (std::size_t col = 0; col < keys.size(); ++col) {
      const GradedVector dv = c.differential(keys[col]);
      for (const auto& [tk, coeff] : dv.terms()) m[row_of.at(tk)][col] = coeff;
    }
    rank_d[deg] = detail::rational_rank(std::move(m));
  }

  std::map<int, std::size_t> betti;
  for (const auto& [deg, keys] : by_degree) {
    const std::size_t kernel = keys.size() - rank_d.at(deg);
    const auto above = rank_d.find(deg + 1);
    const std::size_t image = above == rank_d.end() ? 0 : above->second;
    betti[deg] = kernel - image;
  }
  return betti;
}

}  // namespace homat
