#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace confbetti {

enum class Provenance { Formula, Series, Oracle };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::Series: return "series";
    case Provenance::Oracle: return "oracle";
  }
  return "?";
}

/// Betti numbers of B_k(surface) indexed by (i, k). An entry may be recorded
/// by several computation paths; they are required to agree.
class BettiTable {
 public:
  struct Entry {
    BettiValue value;
    std::vector<Provenance> provenance;
  };

  explicit BettiTable(Surface surface) : surface_(surface) {}

  const Surface& surface() const { return surface_; }
  const std::map<GradedIndex, Entry>& entries() const { return entries_; }
  bool contains(GradedIndex idx) const { return entries_.count(idx) != 0; }

  const BettiValue& at(GradedIndex idx) const {
    auto it = entries_.find(idx);
    if (it == entries_.end()) {
      throw std::out_of_range("no Betti number recorded at (i,k)=(" + std::to_string(idx.i) + "," +
                              std::to_string(idx.k) + ")");
    }
    return it->second.value;
  }

  /// Throws std::logic_error if a different value was already recorded.
  void record(GradedIndex idx, const BettiValue& value, Provenance p) {
    auto [it, inserted] = entries_.try_emplace(idx, Entry{value, {p}});
    if (inserted) return;
    if (!(it->second.value == value)) {
      throw std::logic_error(surface_.name() + " (i,k)=(" + std::to_string(idx.i) + "," + std::to_string(idx.k) +
                             "): " + to_string(p) + " gives " + value.str() + " but " +
                             to_string(it->second.provenance.front()) + " gave " + it->second.value.str());
    }
    auto& prov = it->second.provenance;
    if (std::find(prov.begin(), prov.end(), p) == prov.end()) prov.push_back(p);
  }

 private:
  Surface surface_;
  std::map<GradedIndex, Entry> entries_;
};

}  // namespace confbetti
