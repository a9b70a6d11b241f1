#include "arith/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "arith/algebra.hpp"
#include "arith/bijections.hpp"
#include "arith/combinatorics.hpp"
#include "arith/cycle_enum.hpp"
#include "arith/oracle.hpp"
#include "arith/path_enum.hpp"
#include "arith/transforms.hpp"

namespace arith {

namespace {

using Failure = std::optional<std::string>;
using CheckFn = std::function<Failure(const VerifyOptions&)>;

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

template <typename... Parts>
Failure fail(Parts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::vector<std::vector<long>> all_ballot_words(long length) {
  std::vector<std::vector<long>> out;
  std::vector<long> w(length, 0);
  while (true) {
    out.push_back(w);
    long idx = length - 1;
    while (idx >= 0 && w[idx] >= idx + 1) --idx;
    if (idx < 0) break;
    w[idx] += 1;
    for (long k = idx + 1; k < length; ++k) w[k] = w[idx];
  }
  return out;
}

// ---- path checks ----

Failure check_path_totals(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    Int count = 0;
    for_each_path(n, [&](const ArithmeticalStructure&) { count += 1; });
    if (count != catalan(n - 1)) {
      return fail("n=", n, ": enumerated ", count.get_str(), " structures, expected ",
                  catalan(n - 1).get_str());
    }
  }
  return std::nullopt;
}

Failure check_path_r1_census(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    CountTable census = census_by_r1(n);
    if (census.rows.count(1)) return fail("n=", n, ": census has key 1");
    std::map<long, Int> expected;
    for (long k = 2; k <= n; ++k) expected[k] = path_count_refined(n, k);
    if (census.rows != expected) return fail("n=", n, ": r(1) census mismatch");
  }
  return std::nullopt;
}

Failure check_path_d_entry_census(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 10L); ++n) {
    std::vector<std::map<long, Int>> tally(n);
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      for (long i = 1; i <= n; ++i) tally[i - 1][to_long(s.d_at(i))] += 1;
    });
    std::map<long, Int> expected;
    for (long v = 1; v <= n - 1; ++v) expected[v] = ballot(n - 2, n - v - 1);
    for (long i = 1; i <= n; ++i) {
      if (tally[i - 1] != expected) {
        return fail("n=", n, ", position ", i, ": d-entry census mismatch");
      }
    }
  }
  return std::nullopt;
}

Failure check_path_dsum_census(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    std::map<long, Int> tally;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      Int sum = 0;
      for (const Int& x : s.d()) sum += x;
      tally[to_long(sum)] += 1;
    });
    for (long t = 2 * n - 4; t <= 3 * n - 2; ++t) {
      Int have = tally.count(t) ? tally[t] : Int(0);
      if (have != dsum_census_closed(n, t)) {
        return fail("n=", n, ", d-sum ", t, ": counted ", have.get_str(),
                    ", closed form ", dsum_census_closed(n, t).get_str());
      }
    }
    for (const auto& [t, c] : tally) {
      (void)c;
      if (t < 2 * n - 2 || t > 3 * n - 4) {
        return fail("n=", n, ": d-sum ", t, " outside the support");
      }
    }
  }
  return std::nullopt;
}

Failure check_path_dsum_identity(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      Int sum = 0;
      for (const Int& x : s.d()) sum += x;
      if (sum != 3 * n - 2 - r_ones(s)) {
        bad = fail("n=", n, ": sum(d) != 3n-2-r(1) for r=", vec_str(s.r()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_path_critical_trivial(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 10L); ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      AbelianGroup g = critical_group(s.graph(), s.d());
      if (!g.trivial_torsion() || g.free_rank != 1) {
        bad = fail("n=", n, ": nontrivial critical group for d=", vec_str(s.d()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_path_laplacian_unique(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    long hits = 0;
    bool is_laplacian = true;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      bool all_big = true;
      for (long i = 2; i < n; ++i) {
        if (s.d_at(i) < 2) all_big = false;
      }
      if (all_big) {
        ++hits;
        if (s.r() != std::vector<Int>(n, 1)) is_laplacian = false;
      }
    });
    if (hits != 1 || !is_laplacian) {
      return fail("n=", n, ": ", hits, " structures with interior d >= 2");
    }
  }
  return std::nullopt;
}

Failure check_adjacent_unit_d(const VerifyOptions& o) {
  for (long n = 3; n <= o.max_path; ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      for (long i = 1; i < n; ++i) {
        if (s.d_at(i) == 1 && s.d_at(i + 1) == 1) {
          bad = fail("path n=", n, ": adjacent unit d-entries at ", i);
        }
      }
    });
    if (bad) return bad;
  }
  for (long n = 3; n <= o.max_cycle; ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      for (long i = 1; i <= n; ++i) {
        long j = i % n + 1;
        if (s.d_at(i) == 1 && s.d_at(j) == 1) {
          bad = fail("cycle n=", n, ": adjacent unit d-entries at ", i);
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_oracle_path(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 10L); ++n) {
    std::set<std::vector<Int>> enumerated;
    for_each_path(n, [&](const ArithmeticalStructure& s) { enumerated.insert(s.r()); });
    if (enumerated != brute_force_path(n)) {
      return fail("n=", n, ": oracle and enumerator disagree");
    }
  }
  return std::nullopt;
}

Failure check_plan_roundtrip(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 10L); ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      SubdivisionPlan plan = plan_from_structure(s);
      if (!plan.weakly_increasing()) {
        bad = fail("n=", n, ": extracted plan is not weakly increasing");
      } else if (plan.base != r_ones(s)) {
        bad = fail("n=", n, ": plan base ", plan.base, " != r(1) ", r_ones(s));
      } else if (!(apply_plan(plan, n) == s)) {
        bad = fail("n=", n, ": plan does not reproduce r=", vec_str(s.r()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_word_roundtrip(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 10L); ++n) {
    Failure bad;
    std::set<BallotWord> seen;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      BallotWord w = word_encode(s);
      long zeros = 0;
      while (zeros < w.length() && w.entries()[zeros] == 0) ++zeros;
      if (zeros != r_ones(s) - 2) {
        bad = fail("n=", n, ": ", zeros, " leading zeros, expected ", r_ones(s) - 2);
      } else if (!(word_decode(w, n) == s)) {
        bad = fail("n=", n, ": word does not decode back");
      }
      seen.insert(w);
    });
    if (bad) return bad;
    if (Int(static_cast<long>(seen.size())) != catalan(n - 1)) {
      return fail("n=", n, ": word collision");
    }
  }
  return std::nullopt;
}

Failure check_aigner_schulze(const VerifyOptions& o) {
  for (long n = 1; n <= std::min(o.max_path - 2, 10L); ++n) {
    std::map<long, Int> tally;
    for_each_path(n + 2, [&](const ArithmeticalStructure& s) {
      if (r_ones(s) == 2) tally[d_ones(s)] += 1;
    });
    for (long k = 1; 2 * k - 2 <= n + 1; ++k) {
      Int have = tally.count(k) ? tally[k] : Int(0);
      if (have != aigner_schulze_count(n, k)) {
        return fail("n=", n, ", k=", k, ": counted ", have.get_str(), ", formula ",
                    aigner_schulze_count(n, k).get_str());
      }
      tally.erase(k);
    }
    if (!tally.empty()) return fail("n=", n, ": unexpected unit-d count key");
  }
  return std::nullopt;
}

Failure check_split_merge(const VerifyOptions& o) {
  for (long n = 4; n <= std::min(o.max_path, 9L); ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      for (long j = 2; j < n; ++j) {
        if (s.r_at(j) != 1) continue;
        auto [head, tail] = split_at_one(s, j);
        if (r_ones(head) + r_ones(tail) != r_ones(s) + 1) {
          bad = fail("n=", n, ", j=", j, ": r(1) additivity fails");
          return;
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_apex_quiddity(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_path; ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (!bad && apex_quiddity(s) != r_ones(s) - 1) {
        bad = fail("n=", n, ": apex quiddity != r(1)-1 for d=", vec_str(s.d()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_triangulation_roundtrip(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 8L); ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      Triangulation t = triangulation_from_structure(s);
      if (!(structure_from_triangulation(t) == s)) {
        bad = fail("n=", n, ": triangulation round trip fails for d=", vec_str(s.d()));
        return;
      }
      std::vector<long> q = quiddity(t);
      if (Int(q[0]) != apex_quiddity(s)) {
        bad = fail("n=", n, ": apex entry disagrees with the quiddity");
        return;
      }
      std::vector<long> rotated = quiddity(rotate_triangulation(t));
      std::vector<long> expected(q.size());
      for (size_t i = 0; i < q.size(); ++i) expected[(i + 1) % q.size()] = q[i];
      if (rotated != expected) {
        bad = fail("n=", n, ": rotation does not shift the quiddity");
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_word_rotation_agreement(const VerifyOptions& o) {
  for (long len = 1; len <= std::min(o.max_path - 2, 8L); ++len) {
    for (const auto& entries : all_ballot_words(len)) {
      BallotWord w(entries);
      if (!(rotate_word(w) == rotate_word_inductive(w))) {
        return fail("length ", len, ": the two definitions disagree");
      }
    }
  }
  return std::nullopt;
}

Failure check_word_rotation_order(const VerifyOptions& o) {
  for (long len = 1; len <= std::min(o.max_path - 2, 8L); ++len) {
    auto words = all_ballot_words(len);
    if (Int(static_cast<long>(words.size())) != catalan(len + 1)) {
      return fail("length ", len, ": word count != catalan(length+1)");
    }
    std::set<BallotWord> images;
    for (const auto& entries : words) {
      BallotWord w(entries);
      images.insert(rotate_word(w));
      BallotWord iter = w;
      for (long k = 0; k < len + 3; ++k) iter = rotate_word(iter);
      if (!(iter == w)) return fail("length ", len, ": order is not length+3");
    }
    if (images.size() != words.size()) {
      return fail("length ", len, ": rotation is not injective");
    }
  }
  return std::nullopt;
}

Failure check_word_rotation_conjugation(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_path, 8L); ++n) {
    Failure bad;
    for_each_path(n, [&](const ArithmeticalStructure& s) {
      if (bad) return;
      Triangulation t = triangulation_from_structure(s);
      BallotWord lhs = word_encode(structure_from_triangulation(rotate_triangulation(t)));
      BallotWord rhs = rotate_word(word_encode(s));
      if (!(lhs == rhs)) {
        bad = fail("n=", n, ": conjugation identity fails for d=", vec_str(s.d()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

// ---- cycle checks ----

Failure check_cycle_totals(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_cycle; ++n) {
    Int count = 0;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure&) { count += 1; });
    if (count != binomial(2 * n - 1, n - 1)) {
      return fail("n=", n, ": enumerated ", count.get_str(), ", expected ",
                  binomial(2 * n - 1, n - 1).get_str());
    }
  }
  return std::nullopt;
}

Failure check_cycle_r1_census(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_cycle; ++n) {
    CountTable census = census_by_r1_cycle(n);
    if (census.rows.count(0)) return fail("n=", n, ": census has key 0");
    std::map<long, Int> expected;
    for (long k = 1; k <= n; ++k) expected[k] = cycle_count_refined(n, k);
    if (census.rows != expected) return fail("n=", n, ": cycle r(1) census mismatch");
    if (census.rows.at(1) != n * catalan(n - 1)) {
      return fail("n=", n, ": unique-1 count is not n*catalan(n-1)");
    }
  }
  return std::nullopt;
}

Failure check_cycle_dsum_identity(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_cycle; ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      if (bad) return;
      Int sum = 0;
      for (const Int& x : s.d()) sum += x;
      if (sum != 3 * n - r_ones(s)) {
        bad = fail("n=", n, ": sum(d) != 3n-r(1) for r=", vec_str(s.r()));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_cycle_rotation_closure(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_cycle, 7L); ++n) {
    std::set<std::vector<Int>> all;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      all.insert(s.r());
    });
    for (const auto& r : all) {
      for (long c = 1; c < n; ++c) {
        if (!all.count(rotate_vector(r, c))) {
          return fail("n=", n, ": rotation of ", vec_str(r), " missing");
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_cycle_laplacian_unique(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_cycle; ++n) {
    long hits = 0;
    bool is_laplacian = true;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      bool all_big = true;
      for (const Int& x : s.d()) {
        if (x < 2) all_big = false;
      }
      if (all_big) {
        ++hits;
        if (s.r() != std::vector<Int>(n, 1)) is_laplacian = false;
      }
    });
    if (hits != 1 || !is_laplacian) {
      return fail("n=", n, ": ", hits, " structures with all d >= 2");
    }
  }
  return std::nullopt;
}

Failure check_cycle_unit_d_census(const VerifyOptions& o) {
  // The unconditioned unit-d census equals |Arith(C_{n-1})| (subdividing at
  // the unit position is a bijection onto the smaller cycle), and the count
  // conditioned on r_1 = 1 equals catalan(n-1): cutting at vertex 1 turns it
  // into the P_{n+1} census of d-value 1 at a fixed interior position.
  for (long n = 3; n <= o.max_cycle; ++n) {
    Int count1 = census_d_equals_one(n);
    Int count2 = 0;
    Int conditioned = 0;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      if (s.d_at(2) == 1) count2 += 1;
      if (s.r_at(1) == 1 && s.d_at(2) == 1) conditioned += 1;
    });
    if (count1 != count2) {
      return fail("n=", n, ": unit-d census depends on the position");
    }
    if (count1 != binomial(2 * n - 3, n - 2)) {
      return fail("n=", n, ": unit-d census ", count1.get_str(),
                  " != binom(2n-3, n-2)");
    }
    if (conditioned != catalan(n - 1)) {
      return fail("n=", n, ": conditioned unit-d census ", conditioned.get_str(),
                  " != catalan(n-1)");
    }
    Int path_side = 0;
    for_each_path(n + 1, [&](const ArithmeticalStructure& s) {
      if (s.d_at(2) == 1) path_side += 1;
    });
    if (path_side != conditioned) {
      return fail("n=", n, ": conditioned census differs from the path census");
    }
  }
  return std::nullopt;
}

Failure check_oracle_cycle(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_cycle, 8L); ++n) {
    std::set<std::vector<Int>> enumerated;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      enumerated.insert(s.r());
    });
    if (enumerated != brute_force_cycle(n)) {
      return fail("n=", n, ": oracle and enumerator disagree");
    }
  }
  return std::nullopt;
}

Failure check_multiset_roundtrip(const VerifyOptions& o) {
  for (long n = 2; n <= o.max_cycle; ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset& ms, const ArithmeticalStructure& s) {
      if (bad) return;
      if (r_ones(s) != n - ms.size()) {
        bad = fail("n=", n, ": r(1) != n-|S| for S=", ms.size());
        return;
      }
      Multiset back = multiset_from_structure(s);
      if (!(back == ms)) {
        bad = fail("n=", n, ": multiset round trip fails for r=", vec_str(s.r()));
        return;
      }
      if (!ms.empty()) {
        OrbitRep<Multiset> rep = omega_canonical_rep(ms, n);
        if (rep.shift == 0) {
          // canonical multisets must map to reverse-lex-first structures
          // ending in a unit entry
          OrbitRep<std::vector<Int>> rrep = canonical_orbit_rep(s.r());
          if (rrep.canonical != s.r() || s.r_at(n) != 1) {
            bad = fail("n=", n, ": canonical multiset maps to non-canonical r");
          }
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_multiset_equivariance(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_cycle, 7L); ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset& ms, const ArithmeticalStructure& s) {
      if (bad) return;
      for (long t = 0; t < n; ++t) {
        ArithmeticalStructure lhs = structure_from_multiset(rotate_multiset(ms, t, n), n);
        if (!(lhs == rotate_structure(s, t))) {
          bad = fail("n=", n, ", t=", t, ": equivariance fails for r=", vec_str(s.r()));
          return;
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_cycle_cutting(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_cycle, 7L); ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      if (bad) return;
      for (long j = 1; j <= n; ++j) {
        if (s.r_at(j) != 1) continue;
        ArithmeticalStructure opened = cut_cycle_at_one(s, j);  // validates
        if (opened.size() != n + 1) {
          bad = fail("n=", n, ": opened path has the wrong length");
          return;
        }
      }
      for (long a = 1; a <= n; ++a) {
        if (s.r_at(a) != 1) continue;
        for (long b = a + 1; b <= n; ++b) {
          if (s.r_at(b) != 1) continue;
          auto [inner, outer] = cut_cycle_between(s, a, b);
          if (inner.size() + outer.size() != n + 2) {
            bad = fail("n=", n, ": cut pieces have the wrong lengths");
            return;
          }
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_cycle_critical(const VerifyOptions& o) {
  for (long n = 2; n <= std::min(o.max_cycle, 9L); ++n) {
    Failure bad;
    for_each_cycle(n, [&](const Multiset&, const ArithmeticalStructure& s) {
      if (bad) return;
      AbelianGroup g = critical_group(s.graph(), s.d());
      long k = r_ones(s);
      bool ok = (k == 1) ? g.trivial_torsion()
                         : (g.torsion.size() == 1 && g.torsion[0] == k);
      if (!ok || g.free_rank != 1) {
        bad = fail("n=", n, ": critical group ", g.torsion_string(),
                   " but r(1) = ", k);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Failure check_subdivision_invariance(const VerifyOptions& o) {
  std::mt19937 rng(20250810u);
  long cap = std::min(std::max(o.max_path, o.max_cycle), 9L);
  for (long n = 3; n <= cap; ++n) {
    auto paths = enumerate_paths(n);
    auto cycles = enumerate_cycles(n);
    std::uniform_int_distribution<size_t> pick_path(0, paths.size() - 1);
    std::uniform_int_distribution<size_t> pick_cycle(0, cycles.size() - 1);
    std::uniform_int_distribution<long> path_pos(2, n);
    std::uniform_int_distribution<long> cycle_pos(1, n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& p = paths[pick_path(rng)];
      long i = path_pos(rng);
      AbelianGroup before = critical_group(p.graph(), p.d());
      ArithmeticalStructure after = subdivide_path(p, i);
      if (!(critical_group(after.graph(), after.d()) == before)) {
        return fail("path n=", n, ", i=", i, ": critical group changed");
      }
      const auto& c = cycles[pick_cycle(rng)];
      long j = cycle_pos(rng);
      AbelianGroup cbefore = critical_group(c.graph(), c.d());
      ArithmeticalStructure cafter = subdivide_cycle(c, j);
      if (!(critical_group(cafter.graph(), cafter.d()) == cbefore)) {
        return fail("cycle n=", n, ", i=", j, ": critical group changed");
      }
    }
  }
  return std::nullopt;
}

Failure check_snf_selftest(const VerifyOptions&) {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<long> dim(1, 6);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    long rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    }
    SmithForm with = smith_normal_form(m, true);
    IntMatrix check = multiply(multiply(*with.left, m), *with.right);
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < cols; ++j) {
        Int expected = (i == j && i < static_cast<long>(with.diagonal.size()))
                           ? with.diagonal[i]
                           : Int(0);
        if (check.at(i, j) != expected) return fail("U*M*V is not the diagonal form");
      }
    }
    Int du = determinant(*with.left), dv = determinant(*with.right);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
      return fail("transforms are not unimodular");
    }
    for (size_t t = 0; t + 1 < with.diagonal.size(); ++t) {
      if (with.diagonal[t + 1] != 0 && with.diagonal[t] == 0) {
        return fail("zeros do not trail the diagonal");
      }
      if (with.diagonal[t] != 0 && with.diagonal[t + 1] % with.diagonal[t] != 0) {
        return fail("diagonal is not in divisibility order");
      }
    }
    // Invariance under random unimodular row/column operations.
    IntMatrix scrambled = m;
    for (int op = 0; op < 12; ++op) {
      long a = std::uniform_int_distribution<long>(0, rows - 1)(rng);
      long b = std::uniform_int_distribution<long>(0, rows - 1)(rng);
      if (a != b) {
        Int f = coeff(rng);
        for (long j = 0; j < cols; ++j) scrambled.at(a, j) += f * scrambled.at(b, j);
      }
      long c = std::uniform_int_distribution<long>(0, cols - 1)(rng);
      long d = std::uniform_int_distribution<long>(0, cols - 1)(rng);
      if (c != d) {
        Int f = coeff(rng);
        for (long i = 0; i < rows; ++i) scrambled.at(i, c) += f * scrambled.at(i, d);
      }
    }
    if (smith_normal_form(scrambled).diagonal != with.diagonal) {
      return fail("SNF changed under unimodular multiplication");
    }
  }
  return std::nullopt;
}

Failure check_star_structures(const VerifyOptions&) {
  auto one = star_structures(1);
  if (one.size() != 1 || !(one[0] == StarStructure{1, {Int(1)}})) {
    return fail("star(1) solutions wrong");
  }
  auto two = star_structures(2);
  std::set<StarStructure> got(two.begin(), two.end());
  std::set<StarStructure> want{{Int(2), {Int(1), Int(1)}}, {Int(1), {Int(2), Int(2)}}};
  if (got != want) return fail("star(2) solutions wrong");
  if (two.size() != enumerate_paths(3).size()) {
    return fail("star(2) count differs from |Arith(P_3)|");
  }
  auto three = star_structures(3);
  auto general = brute_force_general(Graph::star(3), 6);
  if (three.size() != general.size()) {
    return fail("star(3): ", three.size(), " tuples vs ", general.size(),
                " r-vectors from the direct search");
  }
  return std::nullopt;
}

Failure check_c2_structures(const VerifyOptions&) {
  auto structures = enumerate_cycles(2);
  if (structures.size() != 3) return fail("C_2 should carry 3 structures");
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> got;
  for (const auto& s : structures) got.emplace(s.d(), s.r());
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> want{
      {{Int(2), Int(2)}, {Int(1), Int(1)}},
      {{Int(1), Int(4)}, {Int(2), Int(1)}},
      {{Int(4), Int(1)}, {Int(1), Int(2)}}};
  if (got != want) return fail("C_2 structures differ from the known three");
  std::set<std::vector<Int>> oracle_want{{Int(1), Int(1)}, {Int(2), Int(1)}, {Int(1), Int(2)}};
  if (brute_force_cycle(2) != oracle_want) return fail("C_2 oracle set wrong");
  for (const auto& s : structures) {
    AbelianGroup g = critical_group(s.graph(), s.d());
    long k = r_ones(s);
    bool ok = (k == 1) ? g.trivial_torsion() : (g.torsion == std::vector<Int>{Int(k)});
    if (!ok) return fail("C_2 critical group mismatch");
  }
  return std::nullopt;
}

Failure check_literal_subdivision_chain(const VerifyOptions&) {
  ArithmeticalStructure s = apply_plan({2, {1, 2, 2}}, 5);
  if (s.d() != std::vector<Int>{2, 3, 1, 2, 3} || s.r() != std::vector<Int>{1, 2, 5, 3, 1}) {
    return fail("chain (1,2,2) gives d=", vec_str(s.d()), ", r=", vec_str(s.r()));
  }
  ArithmeticalStructure mid = apply_plan({2, {1}}, 3);
  if (mid.d() != std::vector<Int>{2, 1, 2} || mid.r() != std::vector<Int>{1, 2, 1}) {
    return fail("chain prefix (1) is wrong");
  }
  ArithmeticalStructure mid2 = apply_plan({2, {1, 2}}, 4);
  if (mid2.d() != std::vector<Int>{2, 2, 1, 3} || mid2.r() != std::vector<Int>{1, 2, 3, 1}) {
    return fail("chain prefix (1,2) is wrong");
  }
  return std::nullopt;
}

Failure check_literal_multiset_figures(const VerifyOptions&) {
  ArithmeticalStructure a = structure_from_multiset(Multiset({1, 1, 3, 5}), 6);
  if (a.r() != std::vector<Int>{3, 2, 3, 1, 2, 1}) {
    return fail("[1,1,3,5] gives r=", vec_str(a.r()));
  }
  ArithmeticalStructure b = structure_from_multiset(Multiset({1, 1, 4, 4}), 6);
  if (b.r() != std::vector<Int>{3, 2, 1, 3, 2, 1}) {
    return fail("[1,1,4,4] gives r=", vec_str(b.r()));
  }
  return std::nullopt;
}

Failure check_literal_quiddity(const VerifyOptions&) {
  Triangulation pentagon(5, {{0, 1, 4}, {1, 3, 4}, {1, 2, 3}});
  if (quiddity(pentagon) != std::vector<long>{1, 3, 1, 2, 2}) {
    return fail("pentagon quiddity wrong");
  }
  ArithmeticalStructure ps = structure_from_triangulation(pentagon);
  if (ps.d() != std::vector<Int>{3, 1, 2, 2}) return fail("pentagon d-structure wrong");
  Triangulation hexagon(6, {{0, 1, 5}, {1, 4, 5}, {1, 2, 4}, {2, 3, 4}});
  if (quiddity(hexagon) != std::vector<long>{1, 3, 2, 1, 3, 2}) {
    return fail("hexagon quiddity wrong");
  }
  ArithmeticalStructure hs = structure_from_triangulation(hexagon);
  if (hs.d() != std::vector<Int>{3, 2, 1, 3, 2}) return fail("hexagon d-structure wrong");
  Triangulation triangle(3, {{0, 1, 2}});
  ArithmeticalStructure ts = structure_from_triangulation(triangle);
  if (ts.d() != std::vector<Int>{1, 1}) return fail("triangle d-structure wrong");
  return std::nullopt;
}

Failure check_literal_word_table(const VerifyOptions&) {
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> table{
      {{1, 1, 1}, {0, 2, 2}}, {{0, 1, 1}, {1, 2, 2}}, {{0, 0, 1}, {1, 1, 2}},
      {{1, 1, 2}, {0, 2, 3}}, {{0, 1, 2}, {1, 2, 3}}, {{0, 0, 2}, {1, 1, 3}},
      {{1, 1, 3}, {0, 0, 2}}, {{0, 1, 3}, {0, 1, 2}}, {{0, 0, 3}, {0, 1, 1}},
      {{1, 2, 2}, {0, 0, 3}}, {{0, 2, 2}, {0, 1, 3}}, {{0, 0, 0}, {1, 1, 1}},
      {{1, 2, 3}, {0, 0, 0}}, {{0, 2, 3}, {0, 0, 1}}};
  if (table.size() != 14) return fail("table must have 14 rows");
  for (const auto& [input, image] : table) {
    if (!(rotate_word(BallotWord(input)) == BallotWord(image))) {
      return fail("rotation image of a table row is wrong");
    }
  }
  return std::nullopt;
}

Failure check_injected_corruption(const VerifyOptions&) {
  try {
    validate(shared_path(3), {Int(1), Int(2), Int(1)}, {Int(1), Int(2), Int(1)});
  } catch (const validation_error& e) {
    return fail("corrupted structure rejected as expected: ", e.what(), " (row ",
                e.row(), ")");
  }
  return fail("corrupted structure was not rejected");
}

struct Check {
  std::string name;
  CheckFn fn;
};

std::vector<Check> registry(const VerifyOptions& options) {
  std::vector<Check> checks{
      {"path-structure-totals", check_path_totals},
      {"path-r1-census", check_path_r1_census},
      {"path-d-entry-census", check_path_d_entry_census},
      {"path-dsum-census", check_path_dsum_census},
      {"path-dsum-identity", check_path_dsum_identity},
      {"path-critical-trivial", check_path_critical_trivial},
      {"path-laplacian-unique", check_path_laplacian_unique},
      {"adjacent-unit-d", check_adjacent_unit_d},
      {"oracle-path-agreement", check_oracle_path},
      {"plan-roundtrip", check_plan_roundtrip},
      {"word-roundtrip", check_word_roundtrip},
      {"aigner-schulze-filter", check_aigner_schulze},
      {"split-merge", check_split_merge},
      {"apex-quiddity-identity", check_apex_quiddity},
      {"triangulation-roundtrip", check_triangulation_roundtrip},
      {"word-rotation-agreement", check_word_rotation_agreement},
      {"word-rotation-order", check_word_rotation_order},
      {"word-rotation-conjugation", check_word_rotation_conjugation},
      {"cycle-structure-totals", check_cycle_totals},
      {"cycle-r1-census", check_cycle_r1_census},
      {"cycle-dsum-identity", check_cycle_dsum_identity},
      {"cycle-rotation-closure", check_cycle_rotation_closure},
      {"cycle-laplacian-unique", check_cycle_laplacian_unique},
      {"cycle-unit-d-census", check_cycle_unit_d_census},
      {"oracle-cycle-agreement", check_oracle_cycle},
      {"multiset-roundtrip", check_multiset_roundtrip},
      {"multiset-equivariance", check_multiset_equivariance},
      {"cycle-cutting", check_cycle_cutting},
      {"cycle-critical-cyclic", check_cycle_critical},
      {"subdivision-critical-invariance", check_subdivision_invariance},
      {"snf-unimodular-selftest", check_snf_selftest},
      {"star-structure-search", check_star_structures},
      {"c2-structures", check_c2_structures},
      {"literal-subdivision-chain", check_literal_subdivision_chain},
      {"literal-multiset-figures", check_literal_multiset_figures},
      {"literal-quiddity", check_literal_quiddity},
      {"literal-word-table", check_literal_word_table},
  };
  if (options.inject_failure) {
    checks.push_back({"injected-corruption", check_injected_corruption});
  }
  if (!options.only.empty()) {
    std::vector<Check> filtered;
    for (auto& c : checks) {
      if (c.name.find(options.only) != std::string::npos) filtered.push_back(std::move(c));
    }
    checks = std::move(filtered);
  }
  return checks;
}

int resolve_threads(const VerifyOptions& options, size_t jobs) {
  long t = options.threads;
  if (t <= 0) {
    if (const char* env = std::getenv("ARITH_THREADS")) t = std::atol(env);
  }
  if (t <= 0) t = static_cast<long>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  return static_cast<int>(std::min<size_t>(t, jobs));
}

}  // namespace

std::vector<std::string> verification_check_names(const VerifyOptions& options) {
  std::vector<std::string> names;
  for (const auto& c : registry(options)) names.push_back(c.name);
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  auto checks = registry(options);
  std::vector<CheckResult> results(checks.size());
  if (checks.empty()) return results;
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= checks.size()) break;
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      r.name = checks[i].name;
      try {
        Failure f = checks[i].fn(options);
        r.passed = !f.has_value();
        r.detail = f.value_or("");
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  int nthreads = resolve_threads(options, checks.size());
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace arith
