#include "arith/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "arith/structure.hpp"
#include "arith/transforms.hpp"

namespace arith {

std::set<std::vector<Int>> brute_force_path(long n, std::optional<Int> bound_override) {
  if (n < 2) throw std::invalid_argument("paths need n >= 2");
  std::set<std::vector<Int>> out;
  if (n == 2) {
    out.insert({Int(1), Int(1)});
    return out;
  }
  const Int bound = bound_override.value_or(fibonacci(n));
  std::vector<Int> r(n);
  r[0] = 1;
  std::function<void(long)> extend = [&](long i) {
    if (i == n - 1) {
      if (r[i] == 1) out.insert(r);
      return;
    }
    // r[i+1] = k r[i] - r[i-1] with 1 <= r[i+1] <= bound.
    Int kmin = (r[i - 1] + r[i]) / r[i];  // ceil((r[i-1]+1)/r[i])
    Int kmax = (bound + r[i - 1]) / r[i];
    for (Int k = kmin; k <= kmax; k += 1) {
      r[i + 1] = k * r[i] - r[i - 1];
      extend(i + 1);
    }
  };
  for (Int v = 1; v <= bound; v += 1) {
    r[1] = v;
    extend(1);
  }
  return out;
}

std::set<std::vector<Int>> brute_force_cycle(long n, std::optional<Int> bound_override) {
  if (n < 2) throw std::invalid_argument("cycles need n >= 2");
  std::set<std::vector<Int>> out;
  for (const auto& path_r : brute_force_path(n + 1, std::move(bound_override))) {
    std::vector<Int> wrapped(path_r.begin(), path_r.end() - 1);
    // Seam divisibilities at positions 1 and n (multiplicity 2 on C_2).
    bool ok;
    if (n == 2) {
      ok = (2 * wrapped[1]) % wrapped[0] == 0 && (2 * wrapped[0]) % wrapped[1] == 0;
    } else {
      ok = (wrapped[n - 1] + wrapped[1]) % wrapped[0] == 0 &&
           (wrapped[n - 2] + wrapped[0]) % wrapped[n - 1] == 0;
    }
    if (!ok) continue;
    for (long c = 0; c < n; ++c) out.insert(rotate_vector(wrapped, c));
  }
  return out;
}

std::set<std::vector<Int>> brute_force_general(const Graph& g, long r_max,
                                               unsigned long budget) {
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  long n = g.size();
  Int space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(r_max),
                static_cast<unsigned long>(n));
  if (space > budget) {
    throw std::invalid_argument("search space " + space.get_str() +
                                " exceeds the budget " + std::to_string(budget));
  }
  std::set<std::vector<Int>> out;
  std::vector<Int> r(n, 1);
  while (true) {
    bool ok = true;
    for (long i = 0; i < n && ok; ++i) {
      Int sum = 0;
      for (auto [j, mult] : g.neighbor_lists()[i]) sum += mult * r[j];
      ok = sum % r[i] == 0;
    }
    if (ok) {
      Int gcd = 0;
      for (const Int& x : r) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_mpz_t());
      if (gcd == 1) out.insert(r);
    }
    long idx = n - 1;
    while (idx >= 0 && r[idx] == r_max) {
      r[idx] = 1;
      --idx;
    }
    if (idx < 0) break;
    r[idx] += 1;
  }
  return out;
}

namespace {

void validate_star_tuple(long n, const Int& center, const std::vector<Int>& leaves) {
  Int r0 = 1;
  for (const Int& d : leaves) mpz_lcm(r0.get_mpz_t(), r0.get_mpz_t(), d.get_mpz_t());
  std::vector<Int> d{center};
  std::vector<Int> r{r0};
  for (const Int& leaf : leaves) {
    d.push_back(leaf);
    r.push_back(r0 / leaf);
  }
  Int gcd = 0;
  for (const Int& x : r) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_mpz_t());
  for (Int& x : r) x /= gcd;
  ArithmeticalStructure check(shared_star(n), std::move(d), std::move(r));
  (void)check;
}

}  // namespace

std::vector<StarStructure> star_structures(long n, unsigned long cap) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  unsigned long nodes = 0;
  std::vector<std::pair<Int, std::vector<Int>>> sorted_solutions;
  std::vector<Int> current(n);

  std::function<void(long, const mpq_class&)> dfs = [&](long i,
                                                        const mpq_class& remaining) {
    if (++nodes > cap) throw std::runtime_error("star search cap exceeded");
    if (i == n) return;  // handled at i == n-1 via exact last step
    long terms = n - i;
    if (remaining <= 0) return;
    const Int& num = remaining.get_num();
    const Int& den = remaining.get_den();
    // 1/d <= remaining and terms/d >= remaining, plus weak increase.
    Int lo;
    mpz_cdiv_q(lo.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    if (i > 0 && current[i - 1] > lo) lo = current[i - 1];
    if (lo < 1) lo = 1;
    Int hi = (terms * den) / num;
    if (terms == 1) {
      // exact: d = den/num when num divides den
      if (num == 1 || den % num == 0) {
        Int d = den / num;
        if (d >= lo && d <= hi) {
          current[i] = d;
          sorted_solutions.emplace_back(0, current);  // center filled by caller
        }
      }
      return;
    }
    for (Int d = lo; d <= hi; d += 1) {
      current[i] = d;
      dfs(i + 1, remaining - mpq_class(1, d));
    }
  };

  std::vector<StarStructure> out;
  for (long d0 = 1; d0 <= n; ++d0) {
    sorted_solutions.clear();
    dfs(0, mpq_class(d0));
    for (auto& [center, sol] : sorted_solutions) {
      center = d0;
      std::vector<Int> perm = sol;
      do {
        validate_star_tuple(n, center, perm);
        out.push_back({center, perm});
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

}  // namespace arith
