#pragma once

// The weighted Chevalley-Eilenberg complex of the Lie algebra attached to a
// surface, built explicitly on monomial bases. Its (i, k) homology is
// beta_i(B_k(surface)); this is the brute-force oracle every closed form is
// checked against.

#include <cstddef>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "core.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace confbetti {

/// [x, y] = sum of coefficient * generator, for x <= y in generator order.
/// The sign-free convention is used: D(x.y) = [x, y] on the canonical product.
struct Bracket {
  std::size_t x;
  std::size_t y;
  std::vector<std::pair<std::size_t, Rational>> value;
};

class CESpec {
 public:
  CESpec(std::vector<GeneratorSpec> generators, std::vector<Bracket> brackets)
      : generators_(std::move(generators)), brackets_(std::move(brackets)) {
    for (const auto& g : generators_) {
      if (g.degree < 0 || (g.weight != 1 && g.weight != 2)) throw std::invalid_argument("bad generator " + g.name);
    }
    for (const auto& b : brackets_) {
      if (b.x > b.y || b.y >= generators_.size()) throw std::invalid_argument("bracket pair out of order");
      const auto& gx = generators_[b.x];
      const auto& gy = generators_[b.y];
      if (gx.weight != 1 || gy.weight != 1) throw std::invalid_argument("brackets take weight-1 generators");
      if (b.x == b.y && gx.odd()) throw std::invalid_argument("odd generator squares to zero");
      for (const auto& [z, c] : b.value) {
        const auto& gz = generators_.at(z);
        if (gz.weight != 2 || gz.degree != gx.degree + gy.degree - 1) {
          throw std::invalid_argument("[" + gx.name + "," + gy.name + "] = " + gz.name + " has the wrong bidegree");
        }
      }
    }
  }

  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  const std::vector<Bracket>& brackets() const { return brackets_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (generators_[j].name == name) return j;
    }
    throw std::out_of_range("no generator named " + name);
  }

  /// D = sum over brackets [x,y] = c z of  c z d_y d_x  (x < y), and
  /// (c/2) z d_x^2 on the diagonal. Partial derivatives carry Koszul signs,
  /// so on a monomial this moves the bracketed pair to the front, applies the
  /// bracket, and re-sorts.
  Operator differential() const {
    Operator op;
    using K = OperatorWord::Kind;
    for (const auto& b : brackets_) {
      for (const auto& [z, c] : b.value) {
        OperatorWord w;
        w.scalar = b.x == b.y ? c / 2 : c;
        w.ops = {{K::Multiply, z}, {K::Derive, b.y}, {K::Derive, b.x}};
        op.push_back(std::move(w));
      }
    }
    return op;
  }

  /// Largest degree a monomial of weight k can reach.
  int top_degree(int k) const {
    int best = 0;
    for (const auto& g : generators_) {
      best = std::max(best, (g.degree * k) / g.weight);
    }
    return best;
  }

 private:
  std::vector<GeneratorSpec> generators_;
  std::vector<Bracket> brackets_;
};

/// Generators and brackets of CE(g_surface).
inline CESpec surface_ce_spec(const Surface& s) {
  std::vector<GeneratorSpec> gens;
  std::vector<Bracket> brackets;
  auto add = [&](std::string name, int degree, int weight) {
    gens.push_back({std::move(name), degree, weight});
    return gens.size() - 1;
  };
  const auto one = Rational(1);
  switch (s.kind()) {
    case SurfaceKind::ClosedOrientable: {
      const int g = s.genus();
      const auto p = add("p", 0, 1);
      std::vector<std::size_t> a(g), b(g);
      for (int j = 0; j < g; ++j) {
        a[j] = add("a" + std::to_string(j + 1), 1, 1);
        b[j] = add("b" + std::to_string(j + 1), 1, 1);
      }
      const auto v = add("v", 2, 1);
      const auto pt = add("p~", 1, 2);
      std::vector<std::size_t> at(g), bt(g);
      for (int j = 0; j < g; ++j) {
        at[j] = add("a" + std::to_string(j + 1) + "~", 2, 2);
        bt[j] = add("b" + std::to_string(j + 1) + "~", 2, 2);
      }
      const auto vt = add("v~", 3, 2);
      for (int j = 0; j < g; ++j) {
        brackets.push_back({a[j], b[j], {{pt, one}}});
        brackets.push_back({a[j], v, {{at[j], one}}});
        brackets.push_back({b[j], v, {{bt[j], one}}});
      }
      brackets.push_back({p, v, {{pt, one}}});
      brackets.push_back({v, v, {{vt, one}}});
      break;
    }
    case SurfaceKind::OpenOrientable: {
      const int g = s.genus();
      const int n = s.punctures();
      add("p", 0, 1);
      std::vector<std::size_t> a(g), b(g);
      for (int j = 0; j < g; ++j) {
        a[j] = add("a" + std::to_string(j + 1), 1, 1);
        b[j] = add("b" + std::to_string(j + 1), 1, 1);
      }
      for (int j = 1; j < n; ++j) add("u" + std::to_string(j), 1, 1);
      const auto pt = add("p~", 1, 2);
      for (int j = 0; j < g; ++j) {
        add("a" + std::to_string(j + 1) + "~", 2, 2);
        add("b" + std::to_string(j + 1) + "~", 2, 2);
      }
      for (int j = 1; j < n; ++j) add("u" + std::to_string(j) + "~", 2, 2);
      for (int j = 0; j < g; ++j) brackets.push_back({a[j], b[j], {{pt, one}}});
      break;
    }
    case SurfaceKind::ClosedNonorientable: {
      const int h = s.crosscaps();
      add("p", 0, 1);
      for (int j = 1; j < h; ++j) add("u" + std::to_string(j), 1, 1);
      for (int j = 1; j < h; ++j) add("u" + std::to_string(j) + "~", 2, 2);
      add("v~", 3, 2);
      break;
    }
    case SurfaceKind::OpenNonorientable: {
      const int h = s.crosscaps();
      const int n = s.punctures();
      add("p", 0, 1);
      for (int j = 1; j <= h + n - 1; ++j) add("u" + std::to_string(j), 1, 1);
      for (int j = 1; j <= h + n - 2; ++j) add("u" + std::to_string(j) + "~", 2, 2);
      break;
    }
  }
  return CESpec(std::move(gens), std::move(brackets));
}

struct OracleLimits {
  std::size_t max_block_dim = 50000;

  /// Defaults, overridden by CONFBETTI_MAX_BLOCK_DIM when set.
  static OracleLimits from_environment() {
    OracleLimits l;
    if (const char* env = std::getenv("CONFBETTI_MAX_BLOCK_DIM")) l.max_block_dim = std::stoul(env);
    return l;
  }
};

/// Monomial bases of every block (i, k) with i <= max_i and k <= max_k.
inline std::map<GradedIndex, BasisBlock> enumerate_basis(const CESpec& spec, int max_i, int max_k,
                                                         const OracleLimits& limits = {}) {
  if (max_i < 0 || max_k < 0) throw std::invalid_argument("bounds must be nonnegative");
  std::map<GradedIndex, BasisBlock> out;
  for (int k = 0; k <= max_k; ++k) {
    for (int i = 0; i <= max_i; ++i) out.emplace(GradedIndex(i, k), enumerate_block(spec.generators(), i, k, limits.max_block_dim));
  }
  return out;
}

/// Matrix of D from `source` (i, k) into `target` (i-1, k).
inline SparseRationalMatrix build_differential(const CESpec& spec, const BasisBlock& source, const BasisBlock& target) {
  if (target.degree != source.degree - 1 || target.weight != source.weight) {
    throw std::invalid_argument("differential goes from (i,k) to (i-1,k)");
  }
  return operator_matrix(spec.generators(), spec.differential(), source, target);
}

/// One weight of the complex: blocks in degrees 0..last and the
/// differentials between them.
class WeightSlice {
 public:
  WeightSlice(const CESpec& spec, int k, int last_degree, const OracleLimits& limits) : k_(k) {
    const Operator d = spec.differential();
    for (int i = 0; i <= last_degree; ++i) blocks_.push_back(enumerate_block(spec.generators(), i, k, limits.max_block_dim));
    // out_[i] : block i -> block i-1
    out_.emplace_back(0, blocks_[0].size());
    for (int i = 1; i <= last_degree; ++i) {
      out_.push_back(operator_matrix(spec.generators(), d, blocks_[i], blocks_[i - 1]));
    }
  }

  int weight() const { return k_; }
  int last_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  const BasisBlock& block(int i) const { return blocks_.at(i); }
  const SparseRationalMatrix& d_out(int i) const { return out_.at(i); }

  /// Homology dimension at degree i; requires i + 1 <= last_degree unless
  /// the block above is known to be empty.
  std::size_t homology(int i, bool above_empty = false) const {
    if (i + 1 > last_degree() && !above_empty) throw std::out_of_range("slice does not reach degree i+1");
    SparseRationalMatrix d_in = (i + 1 <= last_degree()) ? out_[i + 1] : SparseRationalMatrix(blocks_[i].size(), 0);
    return homology_dim(out_[i], d_in);
  }

 private:
  int k_;
  std::vector<BasisBlock> blocks_;
  std::vector<SparseRationalMatrix> out_;
};

/// beta_i(B_k(s)) for i <= max_i, k <= max_k, as homology of the CE complex.
/// Every differential pair is checked to square to zero.
inline BettiTable betti_oracle(const Surface& s, int max_i, int max_k, const OracleLimits& limits = {}) {
  if (max_i < 0 || max_k < 0) throw std::invalid_argument("bounds must be nonnegative");
  const CESpec spec = surface_ce_spec(s);
  BettiTable table(s);
  for (int k = 0; k <= max_k; ++k) {
    const int top = spec.top_degree(k);
    const int last = std::min(max_i + 1, top);
    WeightSlice slice(spec, k, last, limits);
    for (int i = 0; i <= max_i; ++i) {
      long value = 0;
      if (i <= last) value = static_cast<long>(slice.homology(i, /*above_empty=*/i + 1 > top));
      table.record(GradedIndex(i, k), BettiValue(value), Provenance::Oracle);
    }
  }
  return table;
}

/// Alternating sums over all degrees of one weight: (sum (-1)^i beta_i,
/// sum (-1)^i dim block(i, k)). They agree for any chain complex.
struct EulerCharacteristics {
  long from_homology = 0;
  long from_chains = 0;
};

inline EulerCharacteristics euler_characteristics(const CESpec& spec, int k, const OracleLimits& limits = {}) {
  const int top = spec.top_degree(k);
  WeightSlice slice(spec, k, top, limits);
  EulerCharacteristics e;
  for (int i = 0; i <= top; ++i) {
    const long sign = i % 2 == 0 ? 1 : -1;
    e.from_homology += sign * static_cast<long>(slice.homology(i, /*above_empty=*/i == top));
    e.from_chains += sign * static_cast<long>(slice.block(i).size());
  }
  return e;
}

}  // namespace confbetti
