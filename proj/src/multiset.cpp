#include "arith/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace arith {

Multiset::Multiset(std::vector<long> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (!elems_.empty() && elems_.front() < 1) {
    throw std::invalid_argument("multiset elements must be >= 1");
  }
}

bool reverse_lex_less(const Multiset& a, const Multiset& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("reverse-lex comparison needs equal sizes");
  }
  const auto& x = a.elements();
  const auto& y = b.elements();
  for (size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace arith
