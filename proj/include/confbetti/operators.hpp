#pragma once

// The algebra X_g = Q[a~_j, b~_j] (x) Lambda[a_j, b_j] with its operators,
// and brute-force graded dimensions of the subspaces built from them: the
// joint kernel K_g, the spaces V(g, n), ker(delta Delta), and the homology of
// the two-column stable complex.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ce.hpp"
#include "core.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "report.hpp"

namespace confbetti {

enum class XOperator {
  PairContraction,  // Delta = sum_j d_{b_j} d_{a_j}, degree -2
  Tilde,            // delta = sum_c c~ d_c, degree +1
  Untilde,          // h = sum_c c d_{c~}, degree -1
  Nullhomotopy,     // H = h / (factor count), degree -1
};

inline int degree_shift(XOperator op) {
  switch (op) {
    case XOperator::PairContraction: return -2;
    case XOperator::Tilde: return 1;
    case XOperator::Untilde:
    case XOperator::Nullhomotopy: return -1;
  }
  return 0;
}

/// Generator order a_1 < b_1 < ... < a_g < b_g < a~_1 < b~_1 < ... < b~_g.
inline std::vector<GeneratorSpec> x_generators(int g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  std::vector<GeneratorSpec> gens;
  for (int j = 1; j <= g; ++j) {
    gens.push_back({"a" + std::to_string(j), 1, 1});
    gens.push_back({"b" + std::to_string(j), 1, 1});
  }
  for (int j = 1; j <= g; ++j) {
    gens.push_back({"a" + std::to_string(j) + "~", 2, 2});
    gens.push_back({"b" + std::to_string(j) + "~", 2, 2});
  }
  return gens;
}

/// Degree-d monomial basis of X_g (empty for d < 0).
inline BasisBlock x_block(int g, int d, const OracleLimits& limits = {}) {
  if (d < 0) return BasisBlock{d, -1, {}, {}};
  return enumerate_block(x_generators(g), d, -1, limits.max_block_dim);
}

inline Operator x_operator(int g, XOperator which) {
  using K = OperatorWord::Kind;
  const auto odd = [](int j) { return static_cast<std::size_t>(j); };              // a_j -> 2j, b_j -> 2j+1
  const auto even = [g](int j) { return static_cast<std::size_t>(2 * g + j); };  // same layout, shifted
  Operator op;
  for (int j = 0; j < g; ++j) {
    const std::size_t a = odd(2 * j), b = odd(2 * j + 1);
    const std::size_t at = even(2 * j), bt = even(2 * j + 1);
    switch (which) {
      case XOperator::PairContraction:
        op.push_back({1, {{K::Derive, b}, {K::Derive, a}}});
        break;
      case XOperator::Tilde:
        op.push_back({1, {{K::Multiply, at}, {K::Derive, a}}});
        op.push_back({1, {{K::Multiply, bt}, {K::Derive, b}}});
        break;
      case XOperator::Untilde:
      case XOperator::Nullhomotopy:
        op.push_back({1, {{K::Multiply, a}, {K::Derive, at}}});
        op.push_back({1, {{K::Multiply, b}, {K::Derive, bt}}});
        break;
    }
  }
  return op;
}

/// Matrix of the operator from X_g in degree `degree` to its target degree.
inline SparseRationalMatrix operator_matrix(int g, XOperator which, int degree, const OracleLimits& limits = {}) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const auto gens = x_generators(g);
  const BasisBlock source = x_block(g, degree, limits);
  const BasisBlock target = x_block(g, degree + degree_shift(which), limits);
  SparseRationalMatrix m = operator_matrix(gens, x_operator(g, which), source, target);
  if (which != XOperator::Nullhomotopy) return m;
  SparseRationalMatrix scaled(m.rows(), m.cols());
  for (const auto& [pos, v] : m.entries()) {
    scaled.add(pos.first, pos.second, v / factor_count(source.monomials[pos.second]));
  }
  return scaled;
}

/// Composite Delta^n from degree d (identity when n = 0).
inline SparseRationalMatrix contraction_power(int g, int n, int degree, const OracleLimits& limits = {}) {
  SparseRationalMatrix m = SparseRationalMatrix::identity(x_block(g, degree, limits).size());
  for (int step = 0; step < n; ++step) {
    const int d = degree - 2 * step;
    if (d < 2) return SparseRationalMatrix(x_block(g, degree - 2 * n, limits).size(), m.cols());
    m = operator_matrix(g, XOperator::PairContraction, d, limits) * m;
  }
  return m;
}

inline std::size_t x_dim(int g, int d, const OracleLimits& limits = {}) { return x_block(g, d, limits).size(); }

/// delta from degree d, as a map into degree d+1 (well-defined for every d,
/// including the empty blocks below degree 0).
inline SparseRationalMatrix tilde_matrix(int g, int d, const OracleLimits& limits = {}) {
  if (d < 0) return SparseRationalMatrix(x_dim(g, d + 1, limits), 0);
  return operator_matrix(g, XOperator::Tilde, d, limits);
}

/// Operator from X_g in degree d, as a map into degree d + shift; zero when
/// the source degree is negative.
inline SparseRationalMatrix x_map(int g, XOperator which, int d, const OracleLimits& limits = {}) {
  if (d < 0) return SparseRationalMatrix(x_dim(g, d + degree_shift(which), limits), x_dim(g, d, limits));
  return operator_matrix(g, which, d, limits);
}

/// delta^2 = 0, Delta delta = delta Delta, h^2 = 0, delta H + H delta = id on
/// positive polynomial degree, and Delta H Delta H = ((p-4)/p) H Delta H Delta
/// on monomials of polynomial degree p, checked on X_g in degrees 0..max_degree.
inline CheckReport operator_identities(int g, int max_degree, const OracleLimits& limits = {}) {
  using X = XOperator;
  CheckReport report;
  const std::string tag = " g=" + std::to_string(g) + " d=";
  for (int d = 0; d <= max_degree; ++d) {
    const std::string at = tag + std::to_string(d);
    const BasisBlock block = x_block(g, d, limits);
    report.add("delta^2 = 0" + at, (x_map(g, X::Tilde, d + 1, limits) * x_map(g, X::Tilde, d, limits)).is_zero());
    report.add("Delta delta = delta Delta" + at,
               x_map(g, X::PairContraction, d + 1, limits) * x_map(g, X::Tilde, d, limits) ==
                   x_map(g, X::Tilde, d - 2, limits) * x_map(g, X::PairContraction, d, limits));
    report.add("h^2 = 0" + at, (x_map(g, X::Untilde, d - 1, limits) * x_map(g, X::Untilde, d, limits)).is_zero());

    const SparseRationalMatrix homotopy = x_map(g, X::Tilde, d - 1, limits) * x_map(g, X::Nullhomotopy, d, limits) +
                                          x_map(g, X::Nullhomotopy, d + 1, limits) * x_map(g, X::Tilde, d, limits);
    SparseRationalMatrix expected(block.size(), block.size());
    for (std::size_t c = 0; c < block.size(); ++c) {
      if (factor_count(block.monomials[c]) > 0) expected.add(c, c, 1);
    }
    report.add("delta H + H delta = id" + at, homotopy == expected);

    const SparseRationalMatrix lhs = x_map(g, X::PairContraction, d - 4, limits) * x_map(g, X::Nullhomotopy, d - 3, limits) *
                                     x_map(g, X::PairContraction, d - 1, limits) * x_map(g, X::Nullhomotopy, d, limits);
    const SparseRationalMatrix rhs = x_map(g, X::Nullhomotopy, d - 5, limits) * x_map(g, X::PairContraction, d - 3, limits) *
                                     x_map(g, X::Nullhomotopy, d - 2, limits) * x_map(g, X::PairContraction, d, limits);
    SparseRationalMatrix scaled(rhs.rows(), rhs.cols());
    for (const auto& [pos, v] : rhs.entries()) {
      const long p = static_cast<long>(factor_count(block.monomials[pos.second]));
      scaled.add(pos.first, pos.second, v * (Rational(p - 4) / p));
    }
    report.add("Delta H Delta H = ((p-4)/p) H Delta H Delta" + at, lhs == scaled);
  }
  return report;
}

/// dim_i(K_g), K_g = ker(delta) n ker(Delta), for 0 <= i <= max_i.
inline std::vector<std::size_t> K_dims_oracle(int g, int max_i, const OracleLimits& limits = {}) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= max_i; ++i) {
    const std::size_t n = x_dim(g, i, limits);
    std::vector<SparseRationalMatrix> maps{operator_matrix(g, XOperator::Tilde, i, limits)};
    if (i >= 2) maps.push_back(operator_matrix(g, XOperator::PairContraction, i, limits));
    dims.push_back(joint_nullity(maps, n));
  }
  return dims;
}

/// Graded dimensions of V(g, n) = {(q, r) in X + X[3] : Delta^n q = delta Delta^{n-1} r,
/// Delta^n r = 0}, degrees 0..max_degree. V(g, 0) = 0.
inline std::vector<std::size_t> V_dims_oracle(int g, int n, int max_degree, const OracleLimits& limits = {}) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  if (n == 0) return dims;
  for (int d = 0; d <= max_degree; ++d) {
    // q in X_d, r in X_{d-3}; both equations land in degree d - 2n (q side)
    // and d - 3 - 2n (r side).
    const std::size_t nq = x_dim(g, d, limits);
    const std::size_t nr = x_dim(g, d - 3, limits);
    const std::size_t target1 = x_dim(g, d - 2 * n, limits);
    const std::size_t target2 = x_dim(g, d - 3 - 2 * n, limits);
    SparseRationalMatrix q_part = nq ? contraction_power(g, n, d, limits) : SparseRationalMatrix(target1, 0);
    SparseRationalMatrix r_part(target1, nr);
    SparseRationalMatrix r_kill(target2, nr);
    if (nr) {
      const SparseRationalMatrix lower = contraction_power(g, n - 1, d - 3, limits);
      r_part = (tilde_matrix(g, d - 3 - 2 * (n - 1), limits) * lower).scaled(-1);
      r_kill = contraction_power(g, n, d - 3, limits);
    }
    const SparseRationalMatrix system = block_matrix(
        {{q_part, r_part}, {SparseRationalMatrix(), r_kill}}, {target1, target2}, {nq, nr});
    dims[d] = nq + nr - rank(system);
  }
  return dims;
}

/// delta Delta from degree d into degree d-1.
inline SparseRationalMatrix tilde_contraction(int g, int d, const OracleLimits& limits = {}) {
  const std::size_t n = x_dim(g, d, limits);
  if (d < 2) return SparseRationalMatrix(x_dim(g, d - 1, limits), n);
  return tilde_matrix(g, d - 2, limits) * operator_matrix(g, XOperator::PairContraction, d, limits);
}

/// dim of ker(delta Delta) on X_g in degrees 0..max_i.
inline std::vector<std::size_t> ker_deltaDelta_dims(int g, int max_i, const OracleLimits& limits = {}) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_i; ++d) dims.push_back(x_dim(g, d, limits) - rank(tilde_contraction(g, d, limits)));
  return dims;
}

/// The stable differential on X + X[3] from total degree d to d-1:
/// (q, r) -> (delta Delta q, Delta^2 q - delta Delta r).
inline SparseRationalMatrix stable_differential(int g, int d, const OracleLimits& limits = {}) {
  const std::size_t nq = x_dim(g, d, limits), nr = x_dim(g, d - 3, limits);
  const std::size_t mq = x_dim(g, d - 1, limits), mr = x_dim(g, d - 4, limits);
  if (d <= 0) return SparseRationalMatrix(mq + mr, nq + nr);
  SparseRationalMatrix qq = tilde_contraction(g, d, limits);
  SparseRationalMatrix rq = d >= 4 ? contraction_power(g, 2, d, limits) : SparseRationalMatrix(mr, nq);
  SparseRationalMatrix rr = nr ? tilde_contraction(g, d - 3, limits).scaled(-1) : SparseRationalMatrix(mr, nr);
  return block_matrix({{qq, SparseRationalMatrix()}, {rq, rr}}, {mq, mr}, {nq, nr});
}

/// Homology dimensions of (X + X[3], d_st) in degrees 0..max_i.
inline std::vector<std::size_t> stable_complex_dims(int g, int max_i, const OracleLimits& limits = {}) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_i; ++d) dims.push_back(homology_dim(stable_differential(g, d, limits), stable_differential(g, d + 1, limits)));
  return dims;
}

}  // namespace confbetti
