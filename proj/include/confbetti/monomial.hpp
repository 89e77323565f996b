#pragma once

// Monomials in a free graded-commutative algebra Q[even] (x) Lambda[odd] on
// an ordered list of generators, with the Koszul-signed elementary operators
// (left multiplication, left partial derivative) everything else is built from.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "linalg.hpp"

namespace confbetti {

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  int weight = 1;

  bool odd() const { return degree % 2 != 0; }
};

/// Exponent vector over a fixed generator list; exterior exponents are 0 or 1.
using Monomial = std::vector<std::uint16_t>;

/// Linear combination of monomials.
using Chain = std::map<Monomial, Rational>;

inline void accumulate(Chain& into, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

inline int monomial_degree(const std::vector<GeneratorSpec>& gens, const Monomial& m) {
  int d = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) d += gens[j].degree * m[j];
  return d;
}

inline int monomial_weight(const std::vector<GeneratorSpec>& gens, const Monomial& m) {
  int w = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) w += gens[j].weight * m[j];
  return w;
}

/// Total number of factors, counted with multiplicity.
inline int factor_count(const Monomial& m) {
  int c = 0;
  for (auto e : m) c += e;
  return c;
}

namespace detail {

// Parity of the number of odd factors standing before generator `x`.
inline bool odd_prefix(const std::vector<GeneratorSpec>& gens, const Monomial& m, std::size_t x) {
  int count = 0;
  for (std::size_t j = 0; j < x; ++j) {
    if (gens[j].odd()) count += m[j];
  }
  return count % 2 != 0;
}

}  // namespace detail

/// x * m, rewritten in canonical order. Returns coefficient 0 when an odd
/// generator would be squared.
inline std::pair<Monomial, Rational> multiply_generator(const std::vector<GeneratorSpec>& gens, const Monomial& m,
                                                        std::size_t x) {
  Monomial out = m;
  if (gens[x].odd()) {
    if (m[x] != 0) return {out, Rational(0)};
    out[x] = 1;
    return {out, Rational(detail::odd_prefix(gens, m, x) ? -1 : 1)};
  }
  ++out[x];
  return {out, Rational(1)};
}

/// Left partial derivative with respect to generator x.
inline std::pair<Monomial, Rational> derivative(const std::vector<GeneratorSpec>& gens, const Monomial& m,
                                                std::size_t x) {
  Monomial out = m;
  if (m[x] == 0) return {out, Rational(0)};
  --out[x];
  if (gens[x].odd()) return {out, Rational(detail::odd_prefix(gens, m, x) ? -1 : 1)};
  return {out, Rational(m[x])};
}

/// A product of elementary operators applied right-to-left, with a scalar.
/// `ops[0]` is applied last.
struct OperatorWord {
  enum class Kind { Multiply, Derive };
  struct Step {
    Kind kind;
    std::size_t generator;
  };
  Rational scalar = 1;
  std::vector<Step> ops;
};

inline Chain apply(const std::vector<GeneratorSpec>& gens, const OperatorWord& word, const Monomial& m) {
  Monomial cur = m;
  Rational coeff = word.scalar;
  for (auto it = word.ops.rbegin(); it != word.ops.rend(); ++it) {
    auto [next, c] = it->kind == OperatorWord::Kind::Multiply ? multiply_generator(gens, cur, it->generator)
                                                              : derivative(gens, cur, it->generator);
    if (c == 0) return {};
    coeff *= c;
    cur = std::move(next);
  }
  Chain out;
  accumulate(out, cur, coeff);
  return out;
}

/// A linear differential operator: sum of operator words.
using Operator = std::vector<OperatorWord>;

inline Chain apply(const std::vector<GeneratorSpec>& gens, const Operator& op, const Monomial& m) {
  Chain out;
  for (const auto& word : op) {
    for (const auto& [mono, c] : apply(gens, word, m)) accumulate(out, mono, c);
  }
  return out;
}

/// Ordered monomial basis of one homogeneous block.
struct BasisBlock {
  int degree = 0;
  int weight = -1;  // -1 when the block is graded by degree only
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;

  std::size_t size() const { return monomials.size(); }

  std::size_t position(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("monomial outside basis block");
    return it->second;
  }
};

/// All monomials of total degree `degree` (and total weight `weight`, unless
/// it is negative), in lexicographic order of exponent vectors.
///
/// Without a weight constraint every generator must have positive degree.
/// Throws std::length_error if the block would exceed `cap` monomials.
inline BasisBlock enumerate_block(const std::vector<GeneratorSpec>& gens, int degree, int weight,
                                  std::size_t cap = static_cast<std::size_t>(-1)) {
  BasisBlock block;
  block.degree = degree;
  block.weight = weight;
  if (degree < 0 || (weight < -1)) return block;
  if (weight < 0) {
    for (const auto& g : gens) {
      if (g.degree <= 0) throw std::invalid_argument("degree-only enumeration needs positive generator degrees");
    }
  }
  Monomial cur(gens.size(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t j, int deg_left, int wt_left) {
    if (j == gens.size()) {
      if (deg_left == 0 && (weight < 0 || wt_left == 0)) {
        if (block.monomials.size() >= cap) {
          throw std::length_error("block (i,k)=(" + std::to_string(degree) + "," + std::to_string(weight) +
                                  ") exceeds the dimension cap " + std::to_string(cap));
        }
        block.monomials.push_back(cur);
      }
      return;
    }
    const auto& g = gens[j];
    int max_e = g.odd() ? 1 : 1 << 14;
    if (g.degree > 0) max_e = std::min(max_e, deg_left / g.degree);
    if (weight >= 0 && g.weight > 0) max_e = std::min(max_e, wt_left / g.weight);
    for (int e = 0; e <= max_e; ++e) {
      cur[j] = static_cast<std::uint16_t>(e);
      rec(j + 1, deg_left - e * g.degree, wt_left - e * g.weight);
    }
    cur[j] = 0;
  };
  rec(0, degree, weight);
  for (std::size_t j = 0; j < block.monomials.size(); ++j) block.index.emplace(block.monomials[j], j);
  return block;
}

/// Matrix of `op` from `source` into `target` (columns indexed by source).
/// Throws if the operator leaves the target block.
inline SparseRationalMatrix operator_matrix(const std::vector<GeneratorSpec>& gens, const Operator& op,
                                            const BasisBlock& source, const BasisBlock& target) {
  SparseRationalMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (const auto& [mono, v] : apply(gens, op, source.monomials[c])) m.add(target.position(mono), c, v);
  }
  return m;
}

}  // namespace confbetti
