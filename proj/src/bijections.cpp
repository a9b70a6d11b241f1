#include "arith/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "arith/transforms.hpp"

namespace arith {

ArithmeticalStructure apply_plan(const SubdivisionPlan& plan, long n) {
  check_plan(plan);
  if (plan.target() != n) {
    throw std::invalid_argument("plan targets a path with " +
                                std::to_string(plan.target()) + " vertices, not " +
                                std::to_string(n));
  }
  ArithmeticalStructure cur = laplacian_structure(shared_path(plan.base));
  for (long edge : plan.edges) cur = subdivide_path(cur, edge + 1);
  return cur;
}

SubdivisionPlan normalize_plan(long base, std::vector<long> edges) {
  SubdivisionPlan plan{base, std::move(edges)};
  check_plan(plan);
  auto& e = plan.edges;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] > e[i + 1]) {
        long lo = e[i + 1];
        e[i + 1] = e[i] + 1;
        e[i] = lo;
        changed = true;
      }
    }
  }
  return plan;
}

SubdivisionPlan plan_from_structure(const ArithmeticalStructure& s) {
  if (s.graph().kind() != GraphKind::path) {
    throw std::invalid_argument("plan_from_structure needs a path structure");
  }
  // Undo subdivisions at the greatest interior position with d = 1; the
  // reversed record is the weakly increasing representative.
  ArithmeticalStructure cur = s;
  std::vector<long> reversed;
  while (true) {
    long n = cur.size();
    long pos = 0;
    for (long i = n - 1; i >= 2; --i) {
      if (cur.d_at(i) == 1) {
        pos = i;
        break;
      }
    }
    if (pos == 0) break;
    reversed.push_back(pos - 1);
    cur = smooth_path(cur, pos);
  }
  SubdivisionPlan plan{cur.size(),
                       std::vector<long>(reversed.rbegin(), reversed.rend())};
  check_plan(plan);
  return plan;
}

bool SubdivisionPlan::weakly_increasing() const {
  return std::is_sorted(edges.begin(), edges.end());
}

void check_plan(const SubdivisionPlan& plan) {
  if (plan.base < 2) throw std::invalid_argument("plan base must be >= 2");
  for (size_t i = 0; i < plan.edges.size(); ++i) {
    long bound = plan.base + static_cast<long>(i) - 1;
    if (plan.edges[i] < 1 || plan.edges[i] > bound) {
      throw std::invalid_argument("plan edge " + std::to_string(plan.edges[i]) +
                                  " at step " + std::to_string(i + 1) +
                                  " is outside [1, " + std::to_string(bound) + "]");
    }
  }
}

BallotWord::BallotWord(std::vector<long> entries) : entries_(std::move(entries)) {
  for (size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 0 || entries_[j] > static_cast<long>(j) + 1) {
      throw std::invalid_argument("word entry " + std::to_string(entries_[j]) +
                                  " at position " + std::to_string(j + 1) +
                                  " is outside [0, " + std::to_string(j + 1) + "]");
    }
    if (j > 0 && entries_[j] < entries_[j - 1]) {
      throw std::invalid_argument("word is not weakly increasing at position " +
                                  std::to_string(j + 1));
    }
  }
}

BallotWord word_encode(const ArithmeticalStructure& s) {
  SubdivisionPlan plan = plan_from_structure(s);
  std::vector<long> word(plan.base - 2, 0);
  word.insert(word.end(), plan.edges.begin(), plan.edges.end());
  return BallotWord(std::move(word));
}

ArithmeticalStructure word_decode(const BallotWord& word, long n) {
  if (word.length() != n - 2) {
    throw std::invalid_argument("a word for the " + std::to_string(n) +
                                "-vertex path must have length " +
                                std::to_string(n - 2));
  }
  const auto& e = word.entries();
  size_t zeros = 0;
  while (zeros < e.size() && e[zeros] == 0) ++zeros;
  SubdivisionPlan plan{static_cast<long>(zeros) + 2,
                       std::vector<long>(e.begin() + zeros, e.end())};
  return apply_plan(plan, n);
}

BallotWord rotate_word(const BallotWord& word) {
  const auto& e = word.entries();
  std::vector<long> bumped(e.size());
  for (size_t j = 0; j < e.size(); ++j) {
    bumped[j] = (e[j] + 1) % (static_cast<long>(j) + 2);
  }
  std::vector<long> out;
  out.assign(std::count(bumped.begin(), bumped.end(), 0L), 0);
  for (long v : bumped) {
    if (v != 0) out.push_back(v);
  }
  return BallotWord(std::move(out));
}

BallotWord rotate_word_inductive(const BallotWord& word) {
  const auto& e = word.entries();
  if (e.empty()) return word;
  std::vector<long> out{e[0] == 0 ? 1L : 0L};
  for (size_t k = 1; k < e.size(); ++k) {
    if (e[k] < static_cast<long>(k) + 1) {
      out.push_back(e[k] + 1);
    } else {
      out.insert(out.begin(), 0);
    }
  }
  return BallotWord(std::move(out));
}

namespace {

bool chords_cross(std::pair<long, long> a, std::pair<long, long> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::array<std::pair<long, long>, 3> triangle_edges(const std::array<long, 3>& t) {
  return {{{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}};
}

}  // namespace

Triangulation::Triangulation(long polygon_size,
                             std::vector<std::array<long, 3>> triangles)
    : n_(polygon_size), triangles_(std::move(triangles)) {
  if (n_ < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  if (static_cast<long>(triangles_.size()) != n_ - 2) {
    throw std::invalid_argument("a triangulation of an N-gon has N-2 triangles");
  }
  for (auto& t : triangles_) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= n_ || t[0] == t[1] || t[1] == t[2]) {
      throw std::invalid_argument("triangle with out-of-range or repeated vertices");
    }
  }
  std::sort(triangles_.begin(), triangles_.end());
  if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end()) {
    throw std::invalid_argument("duplicate triangle");
  }
  for (size_t i = 0; i < triangles_.size(); ++i) {
    for (size_t j = i + 1; j < triangles_.size(); ++j) {
      for (auto ea : triangle_edges(triangles_[i])) {
        for (auto eb : triangle_edges(triangles_[j])) {
          if (chords_cross(ea, eb)) {
            throw std::invalid_argument("crossing chords");
          }
        }
      }
    }
  }
  for (long v = 0; v < n_; ++v) {
    long w = (v + 1) % n_;
    bool covered = false;
    for (const auto& t : triangles_) {
      bool has_v = t[0] == v || t[1] == v || t[2] == v;
      bool has_w = t[0] == w || t[1] == w || t[2] == w;
      if (has_v && has_w) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw std::invalid_argument("boundary edge " + std::to_string(v) + "-" +
                                  std::to_string(w) + " is not covered");
    }
  }
}

std::vector<long> quiddity(const Triangulation& t) {
  std::vector<long> counts(t.polygon_size(), 0);
  for (const auto& tri : t.triangles()) {
    for (long v : tri) counts[v] += 1;
  }
  return counts;
}

ArithmeticalStructure structure_from_triangulation(const Triangulation& t) {
  std::vector<long> counts = quiddity(t);
  long n = t.polygon_size() - 1;
  std::vector<Int> d(counts.begin() + 1, counts.end());
  GraphPtr g = shared_path(n);
  std::vector<Int> r = r_from_d(*g, d);
  return ArithmeticalStructure(std::move(g), std::move(d), std::move(r));
}

Triangulation triangulation_from_structure(const ArithmeticalStructure& s) {
  SubdivisionPlan plan = plan_from_structure(s);
  // Fan of the (base+1)-gon from vertex 0, then one glued triangle per
  // subdivision step; labels >= the inserted vertex shift up by one.
  std::vector<std::array<long, 3>> tris;
  for (long i = 1; i < plan.base; ++i) tris.push_back({0, i, i + 1});
  for (long edge : plan.edges) {
    long at = edge + 1;
    for (auto& t : tris) {
      for (long& v : t) {
        if (v >= at) v += 1;
      }
    }
    tris.push_back({at - 1, at, at + 1});
  }
  return Triangulation(s.size() + 1, std::move(tris));
}

Triangulation rotate_triangulation(const Triangulation& t) {
  long n = t.polygon_size();
  std::vector<std::array<long, 3>> tris = t.triangles();
  for (auto& tri : tris) {
    for (long& v : tri) v = (v + 1) % n;
  }
  return Triangulation(n, std::move(tris));
}

namespace {

bool insertion_chain_fits(const Multiset& s, long n) {
  const auto& e = s.elements();
  long size = s.size();
  for (long i = 0; i < size; ++i) {
    if (e[i] > n - size + i) return false;  // s_{i+1} <= n - size - 1 + (i+1)
  }
  return true;
}

// Runs the insertion chain for a fitting sorted multiset and returns the
// r-vector (r_1, ..., r_n). labels[k] is the label of vertex v_k; the
// initial vertex v_0 ends up in position n.
std::vector<Int> run_insertion_chain(const Multiset& s, long n) {
  std::vector<Int> labels{1};
  for (long at : s.elements()) {
    long have = static_cast<long>(labels.size());
    if (have < at) {
      labels.resize(at, Int(1));
      labels.emplace_back(2);
    } else if (have == at) {
      labels.push_back(labels[at - 1] + 1);
    } else {
      Int inserted = labels[at] + labels[at - 1];
      labels.insert(labels.begin() + at, std::move(inserted));
    }
    if (static_cast<long>(labels.size()) > n) {
      throw std::logic_error("insertion chain overflows the cycle");
    }
  }
  labels.resize(n, Int(1));
  std::vector<Int> r(labels.begin() + 1, labels.end());
  r.push_back(labels[0]);
  return r;
}

}  // namespace

OrbitRep<Multiset> omega_canonical_rep(const Multiset& s, long n) {
  if (n < 1) throw std::invalid_argument("omega_canonical_rep needs n >= 1");
  if (s.size() >= n) {
    throw std::invalid_argument("multiset size must be smaller than n");
  }
  if (s.empty()) return {Multiset(), 0};
  // Several rotations may fit the insertion chain; the canonical one is the
  // rotation whose chain output is reverse-lex first, so that the inverse
  // pass (which canonicalizes the structure) extracts exactly this
  // representative.
  std::optional<OrbitRep<Multiset>> best;
  std::vector<Int> best_r;
  for (long c = 0; c < n; ++c) {
    Multiset candidate = rotate_multiset(s, c, n);
    if (!insertion_chain_fits(candidate, n)) continue;
    if (best && candidate == best->canonical) continue;  // periodic orbit
    std::vector<Int> r = run_insertion_chain(candidate, n);
    if (!best || reverse_lex_less(r, best_r)) {
      best = OrbitRep<Multiset>{std::move(candidate), c};
      best_r = std::move(r);
    }
  }
  if (!best) {
    throw std::logic_error("no rotation of the multiset fits the insertion chain");
  }
  return *best;
}

ArithmeticalStructure structure_from_multiset(const Multiset& s, long n) {
  if (n < 2) throw std::invalid_argument("cycles need n >= 2");
  if (s.size() >= n) {
    throw std::invalid_argument("multiset size must be smaller than n");
  }
  if (s.empty()) return laplacian_structure(shared_cycle(n));

  OrbitRep<Multiset> rep = omega_canonical_rep(s, n);
  std::vector<Int> canonical_r = run_insertion_chain(rep.canonical, n);
  std::vector<Int> r = rotate_vector(canonical_r, -rep.shift);
  return structure_from_r(shared_cycle(n), std::move(r));
}

Multiset multiset_from_structure(const ArithmeticalStructure& s) {
  if (s.graph().kind() != GraphKind::cycle) {
    throw std::invalid_argument("multiset_from_structure needs a cycle structure");
  }
  long n = s.size();
  OrbitRep<std::vector<Int>> rep = canonical_orbit_rep(s.r());
  std::vector<Int> rt = rep.canonical;
  std::vector<long> recorded;
  while (true) {
    long cur = static_cast<long>(rt.size());
    long pos = 0;
    for (long j = cur; j >= 1; --j) {
      const Int& here = rt[j - 1];
      const Int& prev = rt[(j - 2 + cur) % cur];
      const Int& next = rt[j % cur];
      if (here == prev + next) {
        pos = j;
        break;
      }
    }
    if (pos == 0) break;
    recorded.push_back(pos);
    rt.erase(rt.begin() + (pos - 1));
  }
  for (const Int& x : rt) {
    if (x != 1) throw std::logic_error("deletion did not reach the all-ones vector");
  }
  return rotate_multiset(Multiset(std::move(recorded)), -rep.shift, n);
}

}  // namespace arith
