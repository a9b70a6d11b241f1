#pragma once

#include <compare>
#include <vector>

namespace arith {

/// A multisubset of [n], kept sorted ascending. The bound n is supplied by
/// the operations that need it.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<long> elements);

  const std::vector<long>& elements() const { return elems_; }
  long size() const { return static_cast<long>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  bool operator==(const Multiset& other) const { return elems_ == other.elems_; }
  auto operator<=>(const Multiset& other) const { return elems_ <=> other.elems_; }

 private:
  std::vector<long> elems_;
};

/// Comparison at the largest index of disagreement of the sorted forms;
/// both multisets must have the same size.
bool reverse_lex_less(const Multiset& a, const Multiset& b);

}  // namespace arith
