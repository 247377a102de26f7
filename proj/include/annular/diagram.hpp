#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "annular/numeric.hpp"

namespace annular {

enum class Side : std::uint8_t { Inner = 0, Outer = 1 };

inline long floordiv(long x, long y) {
  long q = x / y, r = x % y;
  if (r != 0 && ((r < 0) != (y < 0))) --q;
  return q;
}

/// Quotient label of a cover index, in 1..period.
inline long label_of(long cover_index, long period) {
  return cover_index - period * floordiv(cover_index - 1, period);
}

/// Marked point on one boundary circle, by quotient label 1..period.
struct BoundaryPoint {
  Side side;
  long index;

  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
    return x.side == y.side && x.index == y.index;
  }
  friend bool operator<(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.side != y.side) return x.side < y.side;
    return x.index < y.index;
  }
};

/// Boundary point in the universal cover. The deck transformation shifts
/// inner indices by m and outer indices by n simultaneously.
struct CoverPoint {
  Side side;
  long cover_index;
};

using RawArc = std::pair<CoverPoint, CoverPoint>;

/// Unordered boundary arc in canonical storage: `first` is the endpoint with
/// smaller (side-rank, label) and sits in the fundamental window; the
/// partner's cover index is second.index + offset * period(second.side).
struct Arc {
  BoundaryPoint first;
  BoundaryPoint second;
  long offset;

  bool is_through() const { return first.side != second.side; }

  friend bool operator==(const Arc& x, const Arc& y) {
    return x.first == y.first && x.second == y.second && x.offset == y.offset;
  }
  friend bool operator<(const Arc& x, const Arc& y) {
    return std::tie(x.first, x.second, x.offset) <
           std::tie(y.first, y.second, y.offset);
  }
};

namespace detail {

// Cover position as an exact fraction (cover_index - 1) / period.
struct CoverPos {
  long num;
  long den;
};
inline int cmp_pos(const CoverPos& x, const CoverPos& y) {
  long long l = static_cast<long long>(x.num) * y.den;
  long long r = static_cast<long long>(y.num) * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

struct CoverChord {
  Side s1, s2;
  CoverPos p1, p2;
};

// Minimal-position crossing test for two chords between the boundary lines
// of the cover strip.
inline bool chords_cross(const CoverChord& a, const CoverChord& b) {
  const bool a_thru = a.s1 != a.s2;
  const bool b_thru = b.s1 != b.s2;
  if (a_thru && b_thru) {
    CoverPos ai = a.s1 == Side::Inner ? a.p1 : a.p2;
    CoverPos ao = a.s1 == Side::Inner ? a.p2 : a.p1;
    CoverPos bi = b.s1 == Side::Inner ? b.p1 : b.p2;
    CoverPos bo = b.s1 == Side::Inner ? b.p2 : b.p1;
    return cmp_pos(ai, bi) * cmp_pos(ao, bo) < 0;
  }
  if (a_thru != b_thru) {
    const CoverChord& thru = a_thru ? a : b;
    const CoverChord& cup = a_thru ? b : a;
    CoverPos end = thru.s1 == cup.s1 ? thru.p1 : thru.p2;
    CoverPos lo = cup.p1, hi = cup.p2;
    if (cmp_pos(lo, hi) > 0) std::swap(lo, hi);
    return cmp_pos(lo, end) < 0 && cmp_pos(end, hi) < 0;
  }
  if (a.s1 != b.s1) return false;
  CoverPos alo = a.p1, ahi = a.p2;
  if (cmp_pos(alo, ahi) > 0) std::swap(alo, ahi);
  auto inside = [&](const CoverPos& p) {
    return cmp_pos(alo, p) < 0 && cmp_pos(p, ahi) < 0;
  };
  return inside(b.p1) != inside(b.p2);
}

}  // namespace detail

/// Canonical crossing-free affine (m,n)-diagram on the annulus: an
/// equivariant non-crossing matching of the marked points in the universal
/// cover plus a count of noncontractible loops. Two diagrams are equal as
/// skein-category basis elements iff their canonical encodings are equal.
class AffineDiagram {
 public:
  AffineDiagram() : m_(0), n_(0), loops_(0) {}

  /// Normalize, validate and order raw cover arcs. Throws SignatureError on
  /// parity violation and InvalidDiagramError for crossings / bad coverage.
  static AffineDiagram canonicalize(long m, long n,
                                    const std::vector<RawArc>& raw,
                                    long loops) {
    if (m < 0 || n < 0 || ((m + n) % 2) != 0)
      throw SignatureError("signature (" + std::to_string(m) + "," +
                           std::to_string(n) + ") admits no diagrams");
    if (loops < 0) throw InvalidDiagramError("negative loop count");
    AffineDiagram d;
    d.m_ = m;
    d.n_ = n;
    d.loops_ = loops;
    d.arcs_.reserve(raw.size());
    for (const auto& [p, q] : raw) d.arcs_.push_back(normalize_arc(m, n, p, q));
    std::sort(d.arcs_.begin(), d.arcs_.end());
    d.validate();
    return d;
  }

  static AffineDiagram identity(long n) {
    std::vector<RawArc> raw;
    for (long i = 1; i <= n; ++i)
      raw.push_back({{Side::Inner, i}, {Side::Outer, i}});
    return canonicalize(n, n, raw, 0);
  }

  /// Empty diagram of End(0) with k noncontractible loops (the class X^k).
  static AffineDiagram x_power(long k) { return canonicalize(0, 0, {}, k); }

  long m() const { return m_; }
  long n() const { return n_; }
  long loops() const { return loops_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  long period(Side s) const { return s == Side::Inner ? m_ : n_; }

  bool has_through_arc() const {
    return std::any_of(arcs_.begin(), arcs_.end(),
                       [](const Arc& a) { return a.is_through(); });
  }

  AffineDiagram with_loops(long loops) const {
    if (loops > 0 && has_through_arc())
      throw InvalidDiagramError("loops cannot coexist with a through-strand");
    if (loops < 0) throw InvalidDiagramError("negative loop count");
    AffineDiagram d = *this;
    d.loops_ = loops;
    return d;
  }

  /// Both cover endpoints of an arc, as (side, cover index).
  std::pair<CoverPoint, CoverPoint> cover_ends(const Arc& a) const {
    CoverPoint p{a.first.side, a.first.index};
    CoverPoint q{a.second.side,
                 a.second.index + a.offset * period(a.second.side)};
    return {p, q};
  }

  /// Whole periods swept by an arc: floor |x2 - x1| with x in turns.
  long arc_winding(const Arc& a) const {
    auto [p, q] = cover_ends(a);
    long pp = period(p.side), pq = period(q.side);
    long long num = std::llabs(static_cast<long long>(p.cover_index - 1) * pq -
                               static_cast<long long>(q.cover_index - 1) * pp);
    return static_cast<long>(num / (static_cast<long long>(pp) * pq));
  }

  friend bool operator==(const AffineDiagram& x, const AffineDiagram& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.loops_ == y.loops_ &&
           x.arcs_ == y.arcs_;
  }
  friend bool operator!=(const AffineDiagram& x, const AffineDiagram& y) {
    return !(x == y);
  }
  friend bool operator<(const AffineDiagram& x, const AffineDiagram& y) {
    return std::tie(x.m_, x.n_, x.loops_, x.arcs_) <
           std::tie(y.m_, y.n_, y.loops_, y.arcs_);
  }

 private:
  static Arc normalize_arc(long m, long n, CoverPoint p, CoverPoint q) {
    auto period = [&](Side s) { return s == Side::Inner ? m : n; };
    if (period(p.side) <= 0 || period(q.side) <= 0)
      throw InvalidDiagramError("arc endpoint on an empty boundary");
    BoundaryPoint bp{p.side, label_of(p.cover_index, period(p.side))};
    BoundaryPoint bq{q.side, label_of(q.cover_index, period(q.side))};
    if (bp == bq)
      throw InvalidDiagramError(
          "arc joins a marked point to itself or its own translate");
    if (bq < bp) {
      std::swap(p, q);
      std::swap(bp, bq);
    }
    long k = floordiv(p.cover_index - 1, period(p.side));
    long q_idx = q.cover_index - k * period(q.side);
    return Arc{bp, bq, (q_idx - bq.index) / period(q.side)};
  }

  void validate() const {
    std::set<BoundaryPoint> seen;
    for (const Arc& a : arcs_) {
      if (!seen.insert(a.first).second || !seen.insert(a.second).second)
        throw InvalidDiagramError("marked point covered more than once");
    }
    if (static_cast<long>(seen.size()) != m_ + n_)
      throw InvalidDiagramError("marked point left uncovered");
    if (loops_ > 0 && has_through_arc())
      throw InvalidDiagramError("loops cannot coexist with a through-strand");

    // Crossing check: a window two periods beyond the maximal offset span
    // suffices for equivariant chord families.
    long w = 2;
    for (const Arc& a : arcs_) w = std::max(w, std::labs(a.offset) + 2);
    auto chord = [&](const Arc& a, long t) {
      auto [p, q] = cover_ends(a);
      detail::CoverChord c;
      c.s1 = p.side;
      c.s2 = q.side;
      c.p1 = {p.cover_index - 1 + t * period(p.side), period(p.side)};
      c.p2 = {q.cover_index - 1 + t * period(q.side), period(q.side)};
      return c;
    };
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      detail::CoverChord ci = chord(arcs_[i], 0);
      for (std::size_t j = i; j < arcs_.size(); ++j) {
        for (long t = -w; t <= w; ++t) {
          if (i == j && t == 0) continue;
          if (detail::chords_cross(ci, chord(arcs_[j], t)))
            throw InvalidDiagramError("arcs cross in the universal cover");
        }
      }
    }
  }

  long m_, n_;
  std::vector<Arc> arcs_;
  long loops_;
};

/// Glue D's outer circle to E's inner circle and trace all strands with
/// exact cover bookkeeping. Closed components with zero deck offset are
/// contractible and counted in `removed`; nonzero offsets become
/// noncontractible loops of the composite.
inline std::pair<AffineDiagram, long> compose_diagrams(const AffineDiagram& D,
                                                       const AffineDiagram& E) {
  if (D.n() != E.m())
    throw SignatureError("compose: outer rank " + std::to_string(D.n()) +
                         " does not match inner rank " + std::to_string(E.m()));
  const long g = D.n();

  struct End {
    int arc;
    int end;  // 0 = first endpoint, 1 = second
  };
  auto index_side = [](const AffineDiagram& d, Side s) {
    std::map<long, End> out;
    const auto& arcs = d.arcs();
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      if (arcs[i].first.side == s) out[arcs[i].first.index] = {i, 0};
      if (arcs[i].second.side == s) out[arcs[i].second.index] = {i, 1};
    }
    return out;
  };
  const auto d_glue = index_side(D, Side::Outer);  // label -> D arc end
  const auto e_glue = index_side(E, Side::Inner);

  // Enter the arc at the endpoint matching `which` at cover index enter_idx,
  // exit at the translated opposite endpoint.
  auto traverse = [](const AffineDiagram& d, const Arc& a, int which,
                     long enter_idx) {
    auto [p, q] = d.cover_ends(a);
    CoverPoint in = which == 0 ? p : q;
    CoverPoint out = which == 0 ? q : p;
    long t = (enter_idx - in.cover_index) / d.period(in.side);
    return CoverPoint{out.side, out.cover_index + t * d.period(out.side)};
  };

  // Walk across the glue circle starting from a glue cover point about to
  // enter the given family; stops at a free boundary point.
  std::set<long> glue_visited;  // quotient labels consumed
  auto walk = [&](bool into_D, CoverPoint pt) {
    bool in_D = into_D;
    for (;;) {
      long lbl = label_of(pt.cover_index, g);
      glue_visited.insert(lbl);
      const AffineDiagram& fam = in_D ? D : E;
      End e = in_D ? d_glue.at(lbl) : e_glue.at(lbl);
      CoverPoint out = traverse(fam, fam.arcs()[e.arc], e.end, pt.cover_index);
      bool out_glue =
          in_D ? (out.side == Side::Outer) : (out.side == Side::Inner);
      if (!out_glue) return std::make_pair(in_D, out);
      in_D = !in_D;
      pt = out;
    }
  };

  std::vector<RawArc> raw;
  long removed = 0, new_loops = 0;

  // Arcs with no glue ends carry over; arcs with one glue end seed walks.
  for (const Arc& a : D.arcs()) {
    auto [p, q] = D.cover_ends(a);
    if (p.side == Side::Inner && q.side == Side::Inner) {
      raw.push_back({p, q});
    } else if (p.side == Side::Inner) {  // through strand: inner -> glue
      auto [fam_end, endpt] = walk(false, q);
      raw.push_back({p, CoverPoint{fam_end ? Side::Inner : Side::Outer,
                                   endpt.cover_index}});
    }
  }
  for (const Arc& a : E.arcs()) {
    auto [p, q] = E.cover_ends(a);
    bool pg = p.side == Side::Inner, qg = q.side == Side::Inner;
    if (!pg && !qg) {
      raw.push_back({p, q});
    } else if (pg != qg) {
      CoverPoint outer_end = pg ? q : p;
      CoverPoint glue_end = pg ? p : q;
      if (glue_visited.count(label_of(glue_end.cover_index, g))) continue;
      auto [fam_end, endpt] = walk(true, glue_end);
      raw.push_back({outer_end, CoverPoint{fam_end ? Side::Inner : Side::Outer,
                                           endpt.cover_index}});
    }
  }

  // Remaining glue labels belong to closed components.
  for (long lbl = 1; lbl <= g; ++lbl) {
    if (glue_visited.count(lbl)) continue;
    long start = lbl;
    CoverPoint pt{Side::Outer, lbl};
    for (;;) {
      long cur = label_of(pt.cover_index, g);
      glue_visited.insert(cur);
      End de = d_glue.at(cur);
      CoverPoint mid = traverse(D, D.arcs()[de.arc], de.end, pt.cover_index);
      long mid_lbl = label_of(mid.cover_index, g);
      glue_visited.insert(mid_lbl);
      End ee = e_glue.at(mid_lbl);
      pt = traverse(E, E.arcs()[ee.arc], ee.end, mid.cover_index);
      if (label_of(pt.cover_index, g) == start) {
        long off = (pt.cover_index - start) / g;
        if (off == 0)
          ++removed;
        else
          ++new_loops;
        break;
      }
    }
  }

  AffineDiagram result = AffineDiagram::canonicalize(
      D.m(), E.n(), raw, D.loops() + E.loops() + new_loops);
  return {result, removed};
}

enum class GenKind { E, Rho, RhoInv, CPlus, CMinus, CCyclic };

/// The canonical generator diagrams of the extended affine Temperley-Lieb
/// presentation: e_i (cyclic, e_n joins positions n and 1 across the seam),
/// the one-step counterclockwise rotation rho, the two basic (0,2) cups and
/// the rainbow class C^(n).
inline AffineDiagram generator_diagram(long n, GenKind kind, long i = 0) {
  std::vector<RawArc> raw;
  switch (kind) {
    case GenKind::E: {
      if (n < 2 || i < 1 || i > n)
        throw InvalidDiagramError(
            "e_i needs rank n >= 2 and 1 <= i <= n (no crossing-free (1,1) "
            "diagram realizes e_1)");
      raw.push_back({{Side::Inner, i}, {Side::Inner, i + 1}});
      raw.push_back({{Side::Outer, i}, {Side::Outer, i + 1}});
      for (long j = 1; j <= n; ++j) {
        bool in_cup = j == i || j == i + 1 || (i == n && j == 1);
        if (!in_cup) raw.push_back({{Side::Inner, j}, {Side::Outer, j}});
      }
      return AffineDiagram::canonicalize(n, n, raw, 0);
    }
    case GenKind::Rho: {
      if (n < 1) throw InvalidDiagramError("rho needs rank n >= 1");
      for (long j = 1; j <= n; ++j)
        raw.push_back({{Side::Inner, j}, {Side::Outer, j + 1}});
      return AffineDiagram::canonicalize(n, n, raw, 0);
    }
    case GenKind::RhoInv: {
      if (n < 1) throw InvalidDiagramError("rho^-1 needs rank n >= 1");
      for (long j = 1; j <= n; ++j)
        raw.push_back({{Side::Inner, j}, {Side::Outer, j - 1}});
      return AffineDiagram::canonicalize(n, n, raw, 0);
    }
    case GenKind::CPlus: {
      if (n != 2) throw InvalidDiagramError("c+ is a (0,2) diagram");
      raw.push_back({{Side::Outer, 1}, {Side::Outer, 2}});
      return AffineDiagram::canonicalize(0, 2, raw, 0);
    }
    case GenKind::CMinus: {
      if (n != 2) throw InvalidDiagramError("c- is a (0,2) diagram");
      raw.push_back({{Side::Outer, 2}, {Side::Outer, 3}});
      return AffineDiagram::canonicalize(0, 2, raw, 0);
    }
    case GenKind::CCyclic: {
      if (n < 0) throw InvalidDiagramError("C^(n) needs n >= 0");
      long k = n / 2;
      for (long j = 1; j <= k; ++j)
        raw.push_back({{Side::Outer, j}, {Side::Outer, 2 * k + 1 - j}});
      if (n % 2 == 1) {
        raw.push_back({{Side::Inner, 1}, {Side::Outer, n}});
        return AffineDiagram::canonicalize(1, n, raw, 0);
      }
      return AffineDiagram::canonicalize(0, n, raw, 0);
    }
  }
  throw InvalidDiagramError("unknown generator kind");
}

/// All canonical (m,n)-diagrams whose arcs sweep at most max_abs_winding
/// whole periods and whose loop count is at most max_loops, in deterministic
/// order. Empty for odd m+n.
inline std::vector<AffineDiagram> enumerate_affine(long m, long n,
                                                   long max_abs_winding,
                                                   long max_loops) {
  std::vector<AffineDiagram> out;
  if (m < 0 || n < 0 || ((m + n) % 2) != 0) return out;
  std::vector<BoundaryPoint> pts;
  for (long i = 1; i <= m; ++i) pts.push_back({Side::Inner, i});
  for (long i = 1; i <= n; ++i) pts.push_back({Side::Outer, i});

  std::set<AffineDiagram> found;
  std::vector<RawArc> current;
  std::vector<bool> used(pts.size(), false);

  auto offsets_for = [&](const BoundaryPoint& a, const BoundaryPoint& b) {
    std::vector<long> ts;
    long reach = max_abs_winding + 2;
    for (long t = -reach; t <= reach; ++t) ts.push_back(t);
    (void)a;
    (void)b;
    return ts;
  };

  auto emit = [&]() {
    AffineDiagram d;
    try {
      d = AffineDiagram::canonicalize(m, n, current, 0);
    } catch (const InvalidDiagramError&) {
      return;
    }
    for (const Arc& a : d.arcs())
      if (d.arc_winding(a) > max_abs_winding) return;
    if (found.insert(d).second) {
      if (!d.has_through_arc())
        for (long l = 1; l <= max_loops; ++l) found.insert(d.with_loops(l));
    }
  };

  auto rec = [&](auto&& self, std::size_t first_free) -> void {
    while (first_free < pts.size() && used[first_free]) ++first_free;
    if (first_free == pts.size()) {
      emit();
      return;
    }
    used[first_free] = true;
    for (std::size_t j = first_free + 1; j < pts.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      long pj = pts[j].side == Side::Inner ? m : n;
      for (long t : offsets_for(pts[first_free], pts[j])) {
        current.push_back({{pts[first_free].side, pts[first_free].index},
                           {pts[j].side, pts[j].index + t * pj}});
        self(self, first_free + 1);
        current.pop_back();
      }
      used[j] = false;
    }
    used[first_free] = false;
  };
  rec(rec, 0);
  if (pts.empty()) {
    for (long l = 0; l <= max_loops; ++l) found.insert(AffineDiagram::x_power(l));
  }
  out.assign(found.begin(), found.end());
  return out;
}

}  // namespace annular
