#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fig/degree.hpp"
#include "fig/module.hpp"

namespace fig {

struct DensifyRefused : Error {
  using Error::Error;
};

inline constexpr int kDenseCap = 5;

/// Every morphism m → n (m ≤ n ≤ N) with its matrix, indexed by hom_index.
struct DenseFunctor {
  Field field = Field::rationals();
  FiniteGroup group = FiniteGroup::trivial();
  int truncation = 0;
  std::vector<std::size_t> dims;
  std::map<std::pair<int, int>, std::vector<Matrix>> action;

  const Matrix& at(const FiMorphism& f) const;
};

/// Refuses truncations above `cap`; a larger cap is allowed but |Hom| grows
/// factorially.
DenseFunctor densify(const Module& v, int cap = kDenseCap);

/// Identities and every composable pair g ∘ f, checked exhaustively.
std::vector<std::string> functoriality_violations(const DenseFunctor& d);

struct DenseInvariants {
  std::vector<SubspaceBasis> m_v;      // span of f(V_m) over all f: m → n, m < n
  std::vector<SubspaceBasis> torsion;  // sum of ker f over all f: n → n'
  std::vector<std::size_t> h0;
  Degree gd;
  Degree td;
};

DenseInvariants dense_invariants(const DenseFunctor& d);

struct OracleMismatch {
  std::string quantity;  // h0, torsion, m_v, gd, td
  int degree = -1;       // -1 for gd and td
  std::string optimized;
  std::string dense;
};

struct OracleReport {
  std::vector<std::string> functoriality;
  std::vector<OracleMismatch> mismatches;
  bool agree() const { return functoriality.empty() && mismatches.empty(); }
};

OracleReport compare(const Module& v, int cap = kDenseCap);

}  // namespace fig
