#include "arith/path_enum.hpp"

#include <stdexcept>

#include "arith/bijections.hpp"
#include "arith/transforms.hpp"

namespace arith {

PathEnumerator::PathEnumerator(long n) : n_(n) {
  if (n < 2) throw std::invalid_argument("paths need n >= 2");
  start_base(2);
}

void PathEnumerator::start_base(long base) {
  base_ = base;
  plan_.base = base;
  plan_.edges.assign(n_ - base, 1);
  stack_.clear();
  stack_.push_back(laplacian_structure(shared_path(base)));
  for (long edge : plan_.edges) {
    stack_.push_back(subdivide_path(stack_.back(), edge + 1));
  }
}

bool PathEnumerator::advance() {
  // Lexicographic successor among weakly increasing in-range sequences:
  // bump the last bumpable step, then restart the tail at its minimum.
  long len = n_ - base_;
  long idx = len - 1;
  while (idx >= 0 && plan_.edges[idx] >= base_ + idx - 1) --idx;
  if (idx < 0) {
    if (base_ >= n_) return false;
    start_base(base_ + 1);
    return true;
  }
  plan_.edges[idx] += 1;
  for (long k = idx + 1; k < len; ++k) plan_.edges[k] = plan_.edges[idx];
  stack_.erase(stack_.begin() + idx + 1, stack_.end());
  for (long k = idx; k < len; ++k) {
    stack_.push_back(subdivide_path(stack_.back(), plan_.edges[k] + 1));
  }
  return true;
}

std::optional<ArithmeticalStructure> PathEnumerator::next() {
  if (done_) return std::nullopt;
  if (!primed_) {
    primed_ = true;
    return stack_.back();
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return stack_.back();
}

std::vector<ArithmeticalStructure> enumerate_paths(long n) {
  std::vector<ArithmeticalStructure> out;
  PathEnumerator it(n);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

void for_each_path(long n,
                   const std::function<void(const ArithmeticalStructure&)>& fn) {
  PathEnumerator it(n);
  while (auto s = it.next()) fn(*s);
}

CountTable census_by_r1(long n) {
  CountTable table{n, {}};
  for_each_path(n, [&](const ArithmeticalStructure& s) { table.rows[r_ones(s)] += 1; });
  return table;
}

CountTable census_by_d_entry(long n, long i) {
  if (i < 1 || i > n) throw std::invalid_argument("position out of range");
  CountTable table{n, {}};
  for_each_path(n, [&](const ArithmeticalStructure& s) {
    table.rows[to_long(s.d_at(i))] += 1;
  });
  return table;
}

Int apex_quiddity(const ArithmeticalStructure& s) {
  if (s.graph().kind() != GraphKind::path) {
    throw std::invalid_argument("apex_quiddity needs a path structure");
  }
  Int sum = 0;
  for (const Int& x : s.d()) sum += x;
  return 3 * s.size() - 3 - sum;
}

std::pair<ArithmeticalStructure, ArithmeticalStructure> split_at_one(
    const ArithmeticalStructure& s, long j) {
  if (s.graph().kind() != GraphKind::path) {
    throw std::invalid_argument("split_at_one needs a path structure");
  }
  long n = s.size();
  if (j <= 1 || j >= n) throw std::invalid_argument("split position must be interior");
  if (s.r_at(j) != 1) {
    throw std::invalid_argument("split needs r_" + std::to_string(j) + " = 1 (got " +
                                s.r_at(j).get_str() + ")");
  }
  const auto& r = s.r();
  std::vector<Int> head(r.begin(), r.begin() + j);
  std::vector<Int> tail(r.begin() + (j - 1), r.end());
  return {structure_from_r(shared_path(j), std::move(head)),
          structure_from_r(shared_path(n - j + 1), std::move(tail))};
}

}  // namespace arith
