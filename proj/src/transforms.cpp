#include "arith/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace arith {

namespace {

void require_kind(const ArithmeticalStructure& s, GraphKind kind, const char* op) {
  if (s.graph().kind() != kind) {
    throw std::invalid_argument(std::string(op) + " needs a " +
                                to_string(kind) + " structure");
  }
}

}  // namespace

ArithmeticalStructure subdivide_path(const ArithmeticalStructure& s, long i) {
  require_kind(s, GraphKind::path, "subdivide_path");
  long n = s.size();
  if (i < 2 || i > n) {
    throw std::invalid_argument("subdivision position must satisfy 2 <= i <= n");
  }
  long p = i - 1;  // 0-based slot of the new vertex
  std::vector<Int> d = s.d();
  std::vector<Int> r = s.r();
  r.insert(r.begin() + p, r[p - 1] + r[p]);
  d.insert(d.begin() + p, 1);
  d[p - 1] += 1;
  d[p + 1] += 1;
  return ArithmeticalStructure(shared_path(n + 1), std::move(d), std::move(r));
}

ArithmeticalStructure smooth_path(const ArithmeticalStructure& s, long i) {
  require_kind(s, GraphKind::path, "smooth_path");
  long n = s.size();
  if (n < 3) throw std::invalid_argument("smoothing needs n >= 3");
  if (i <= 1 || i >= n) {
    throw std::invalid_argument("smoothing position must be interior (1 < i < n)");
  }
  if (s.d_at(i) != 1) {
    throw std::invalid_argument("smoothing needs d_" + std::to_string(i) +
                                " = 1 (got " + s.d_at(i).get_str() + ")");
  }
  long p = i - 1;
  std::vector<Int> d = s.d();
  std::vector<Int> r = s.r();
  d.erase(d.begin() + p);
  r.erase(r.begin() + p);
  d[p - 1] -= 1;
  d[p] -= 1;
  return ArithmeticalStructure(shared_path(n - 1), std::move(d), std::move(r));
}

ArithmeticalStructure subdivide_cycle(const ArithmeticalStructure& s, long i) {
  require_kind(s, GraphKind::cycle, "subdivide_cycle");
  long n = s.size();
  if (i < 1 || i > n) {
    throw std::invalid_argument("subdivision position must satisfy 1 <= i <= n");
  }
  long p = i - 1;
  std::vector<Int> d = s.d();
  std::vector<Int> r = s.r();
  Int left = r[(p + n - 1) % n];
  r.insert(r.begin() + p, left + r[p]);
  d.insert(d.begin() + p, 1);
  long m = n + 1;
  d[(p + m - 1) % m] += 1;
  d[(p + 1) % m] += 1;
  return ArithmeticalStructure(shared_cycle(m), std::move(d), std::move(r));
}

ArithmeticalStructure smooth_cycle(const ArithmeticalStructure& s, long i) {
  require_kind(s, GraphKind::cycle, "smooth_cycle");
  long n = s.size();
  if (n < 3) throw std::invalid_argument("cycle smoothing needs n >= 3");
  if (i < 1 || i > n) throw std::invalid_argument("position out of range");
  long p = i - 1;
  const Int& here = s.d()[p];
  const Int& before = s.d()[(p + n - 1) % n];
  const Int& after = s.d()[(p + 1) % n];
  if (here != 1 || before <= 1 || after <= 1) {
    throw std::invalid_argument("cycle smoothing needs d_{i-1} > d_i = 1 < d_{i+1}");
  }
  std::vector<Int> d = s.d();
  std::vector<Int> r = s.r();
  d.erase(d.begin() + p);
  r.erase(r.begin() + p);
  long m = n - 1;
  d[(p + m - 1) % m] -= 1;
  d[p % m] -= 1;
  return ArithmeticalStructure(shared_cycle(m), std::move(d), std::move(r));
}

std::vector<Int> rotate_vector(const std::vector<Int>& r, long c) {
  long n = static_cast<long>(r.size());
  if (n == 0) return {};
  c = ((c % n) + n) % n;
  std::vector<Int> out(r.size());
  for (long j = 0; j < n; ++j) out[j] = r[(j + c) % n];
  return out;
}

ArithmeticalStructure rotate_structure(const ArithmeticalStructure& s, long c) {
  require_kind(s, GraphKind::cycle, "rotate_structure");
  return ArithmeticalStructure(s.graph_ptr(), rotate_vector(s.d(), c),
                               rotate_vector(s.r(), c));
}

Multiset rotate_multiset(const Multiset& s, long c, long n) {
  if (n < 1) throw std::invalid_argument("rotate_multiset needs n >= 1");
  std::vector<long> out;
  out.reserve(s.size());
  for (long a : s.elements()) {
    if (a < 1 || a > n) {
      throw std::invalid_argument("multiset element outside [1, n]");
    }
    long b = (a - 1 + (c % n) + n) % n + 1;
    out.push_back(b);
  }
  return Multiset(std::move(out));
}

bool reverse_lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("reverse-lex comparison needs equal lengths");
  }
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

OrbitRep<std::vector<Int>> canonical_orbit_rep(const std::vector<Int>& r) {
  long n = static_cast<long>(r.size());
  if (n == 0) throw std::invalid_argument("empty vector");
  OrbitRep<std::vector<Int>> best{r, 0};
  for (long c = 1; c < n; ++c) {
    std::vector<Int> candidate = rotate_vector(r, c);
    if (reverse_lex_less(candidate, best.canonical)) {
      best = {std::move(candidate), c};
    }
  }
  return best;
}

OrbitRep<Multiset> canonical_orbit_rep(const Multiset& s, long n) {
  if (n < 1) throw std::invalid_argument("canonical_orbit_rep needs n >= 1");
  OrbitRep<Multiset> best{rotate_multiset(s, 0, n), 0};
  for (long c = 1; c < n; ++c) {
    Multiset candidate = rotate_multiset(s, c, n);
    if (reverse_lex_less(candidate, best.canonical)) {
      best = {std::move(candidate), c};
    }
  }
  return best;
}

}  // namespace arith
