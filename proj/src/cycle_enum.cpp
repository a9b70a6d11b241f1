#include "arith/cycle_enum.hpp"

#include <stdexcept>

#include "arith/bijections.hpp"
#include "arith/transforms.hpp"

namespace arith {

CycleEnumerator::CycleEnumerator(long n) : n_(n) {
  if (n < 2) throw std::invalid_argument("cycles need n >= 2");
}

bool CycleEnumerator::advance() {
  long idx = size_ - 1;
  while (idx >= 0 && elems_[idx] >= n_) --idx;
  if (idx < 0) {
    ++size_;
    if (size_ > n_ - 1) return false;
    elems_.assign(size_, 1);
    return true;
  }
  elems_[idx] += 1;
  for (long k = idx + 1; k < size_; ++k) elems_[k] = elems_[idx];
  return true;
}

std::optional<std::pair<Multiset, ArithmeticalStructure>> CycleEnumerator::next() {
  if (done_) return std::nullopt;
  if (!primed_) {
    primed_ = true;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  Multiset ms(elems_);
  ArithmeticalStructure s = structure_from_multiset(ms, n_);
  return std::make_pair(std::move(ms), std::move(s));
}

std::vector<ArithmeticalStructure> enumerate_cycles(long n) {
  std::vector<ArithmeticalStructure> out;
  CycleEnumerator it(n);
  while (auto pair = it.next()) out.push_back(std::move(pair->second));
  return out;
}

void for_each_cycle(
    long n,
    const std::function<void(const Multiset&, const ArithmeticalStructure&)>& fn) {
  CycleEnumerator it(n);
  while (auto pair = it.next()) fn(pair->first, pair->second);
}

CountTable census_by_r1_cycle(long n) {
  CountTable table{n, {}};
  for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
    table.rows[r_ones(s)] += 1;
  });
  return table;
}

ArithmeticalStructure cut_cycle_at_one(const ArithmeticalStructure& s, long j) {
  if (s.graph().kind() != GraphKind::cycle) {
    throw std::invalid_argument("cut_cycle_at_one needs a cycle structure");
  }
  long n = s.size();
  if (j < 1 || j > n) throw std::invalid_argument("position out of range");
  if (s.r_at(j) != 1) {
    throw std::invalid_argument("cut needs r_" + std::to_string(j) + " = 1 (got " +
                                s.r_at(j).get_str() + ")");
  }
  const auto& r = s.r();
  std::vector<Int> out;
  out.reserve(n + 1);
  for (long k = 0; k < n; ++k) out.push_back(r[(j - 1 + k) % n]);
  out.push_back(r[j - 1]);
  return structure_from_r(shared_path(n + 1), std::move(out));
}

std::pair<ArithmeticalStructure, ArithmeticalStructure> cut_cycle_between(
    const ArithmeticalStructure& s, long alpha, long beta) {
  if (s.graph().kind() != GraphKind::cycle) {
    throw std::invalid_argument("cut_cycle_between needs a cycle structure");
  }
  long n = s.size();
  if (alpha < 1 || beta > n || alpha >= beta) {
    throw std::invalid_argument("cut positions must satisfy 1 <= alpha < beta <= n");
  }
  if (s.r_at(alpha) != 1 || s.r_at(beta) != 1) {
    throw std::invalid_argument("cut needs r_alpha = r_beta = 1");
  }
  const auto& r = s.r();
  std::vector<Int> inner(r.begin() + (alpha - 1), r.begin() + beta);
  std::vector<Int> outer;
  outer.reserve(n - beta + alpha + 1);
  for (long k = 0; k <= n - beta + alpha; ++k) outer.push_back(r[(beta - 1 + k) % n]);
  return {structure_from_r(shared_path(beta - alpha + 1), std::move(inner)),
          structure_from_r(shared_path(n - beta + alpha + 1), std::move(outer))};
}

Int census_d_equals_one(long n) {
  if (n < 3) throw std::invalid_argument("census_d_equals_one needs n >= 3");
  Int count = 0;
  for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
    if (s.d_at(1) == 1) count += 1;
  });
  return count;
}

}  // namespace arith
