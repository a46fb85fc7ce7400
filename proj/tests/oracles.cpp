#include "oracles.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace legrep::oracles {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Slice layout shared by both passes.
struct Layout {
  std::vector<int> strands;                 // per slice
  std::vector<std::vector<int>> seg;        // segment id per slice/pos
  int nseg = 0;
  std::vector<int> crossing_events;         // event indices of type Crossing
};

Layout layout_of(const FrontDiagram& fd) {
  Layout L;
  int cur = 0;
  L.strands.push_back(0);
  for (size_t s = 0; s < fd.events.size(); ++s) {
    const Event& e = fd.events[s];
    if (e.type == EventType::LeftCusp) cur += 2;
    else if (e.type == EventType::RightCusp) cur -= 2;
    else if (e.type == EventType::Crossing) L.crossing_events.push_back(int(s));
    L.strands.push_back(cur);
  }
  L.seg.resize(L.strands.size());
  for (size_t s = 0; s < L.strands.size(); ++s) {
    L.seg[s].resize(L.strands[s]);
    for (int k = 0; k < L.strands[s]; ++k) L.seg[s][k] = L.nseg++;
  }
  return L;
}

// Orientation pass: direction (+1 east) per segment, knot oriented so the
// basepoint segment heads east.
std::vector<int> directions(const FrontDiagram& fd, const Layout& L) {
  // next[(seg,dirbit)] transitions implemented directly on (slice,pos,dir).
  int E = int(fd.events.size());
  int bslice = -1, bpos = -1;
  for (int s = 0; s < E; ++s)
    if (fd.events[s].type == EventType::Basepoint) bslice = s, bpos = fd.events[s].pos;
  if (bslice < 0) throw std::invalid_argument("oracle: no basepoint");

  std::vector<int> dir(L.nseg, 0);
  int s = bslice, pos = bpos, d = 1; // heading east
  size_t guard = 0;
  while (true) {
    if (++guard > size_t(L.nseg) * 4 + 16) throw std::logic_error("oracle: runaway trace");
    int id = L.seg[s][pos - 1];
    if (dir[id]) break;
    dir[id] = d;
    if (d > 0) {
      // cross event s (east side of slice s is event index s)
      const Event& e = fd.events[s];
      switch (e.type) {
        case EventType::Crossing:
          pos = pos == e.pos ? e.pos + 1 : pos == e.pos + 1 ? e.pos : pos;
          ++s;
          break;
        case EventType::Basepoint: ++s; break;
        case EventType::LeftCusp:
          pos = pos >= e.pos ? pos + 2 : pos;
          ++s;
          break;
        case EventType::RightCusp:
          if (pos == e.pos) {
            pos = e.pos + 1;
            d = -1; // turn around at the cusp, stay in slice s
          } else if (pos == e.pos + 1) {
            pos = e.pos;
            d = -1;
          } else {
            pos = pos > e.pos + 1 ? pos - 2 : pos;
            ++s;
          }
          break;
      }
    } else {
      // heading west: cross event s-1
      const Event& e = fd.events[s - 1];
      switch (e.type) {
        case EventType::Crossing:
          pos = pos == e.pos ? e.pos + 1 : pos == e.pos + 1 ? e.pos : pos;
          --s;
          break;
        case EventType::Basepoint: --s; break;
        case EventType::LeftCusp:
          if (pos == e.pos) {
            pos = e.pos + 1;
            d = 1;
          } else if (pos == e.pos + 1) {
            pos = e.pos;
            d = 1;
          } else {
            pos = pos > e.pos + 1 ? pos - 2 : pos;
            --s;
          }
          break;
        case EventType::RightCusp:
          pos = pos >= e.pos ? pos + 2 : pos;
          --s;
          break;
      }
    }
  }
  return dir;
}

} // namespace

LaurentZ jones_in_A(const FrontDiagram& fd) {
  Layout L = layout_of(fd);
  std::vector<int> dir = directions(fd, L);
  for (int v : dir)
    if (!v) throw std::invalid_argument("oracle: front is not a knot");

  int writhe = 0;
  for (int s : L.crossing_events) {
    int p = fd.events[s].pos;
    writhe += dir[L.seg[s][p - 1]] == dir[L.seg[s][p]] ? 1 : -1;
  }

  int nc = int(L.crossing_events.size());
  LaurentZ bracket;
  for (int state = 0; state < (1 << nc); ++state) {
    DSU dsu(L.nseg);
    int asmooth = 0;
    int ci = 0;
    for (size_t s = 0; s < fd.events.size(); ++s) {
      const Event& e = fd.events[s];
      int wn = L.strands[s];
      switch (e.type) {
        case EventType::Crossing: {
          bool a = (state >> ci) & 1;
          ++ci;
          asmooth += a ? 1 : -1;
          for (int k = 1; k <= wn; ++k) {
            if (k == e.pos || k == e.pos + 1) continue;
            dsu.unite(L.seg[s][k - 1], L.seg[s + 1][k - 1]);
          }
          if (a) {
            // A-smoothing joins the E and W quadrants: arcs pass straight.
            dsu.unite(L.seg[s][e.pos - 1], L.seg[s + 1][e.pos - 1]);
            dsu.unite(L.seg[s][e.pos], L.seg[s + 1][e.pos]);
          } else {
            dsu.unite(L.seg[s][e.pos - 1], L.seg[s][e.pos]);
            dsu.unite(L.seg[s + 1][e.pos - 1], L.seg[s + 1][e.pos]);
          }
          break;
        }
        case EventType::Basepoint:
          for (int k = 1; k <= wn; ++k) dsu.unite(L.seg[s][k - 1], L.seg[s + 1][k - 1]);
          break;
        case EventType::LeftCusp:
          dsu.unite(L.seg[s + 1][e.pos - 1], L.seg[s + 1][e.pos]);
          for (int k = 1; k <= wn; ++k)
            dsu.unite(L.seg[s][k - 1], L.seg[s + 1][(k < e.pos ? k : k + 2) - 1]);
          break;
        case EventType::RightCusp:
          dsu.unite(L.seg[s][e.pos - 1], L.seg[s][e.pos]);
          for (int k = 1; k <= wn; ++k) {
            if (k == e.pos || k == e.pos + 1) continue;
            dsu.unite(L.seg[s][k - 1], L.seg[s + 1][(k < e.pos ? k : k - 2) - 1]);
          }
          break;
      }
    }
    int loops = 0;
    for (int i = 0; i < L.nseg; ++i)
      if (dsu.find(i) == i) ++loops;
    // A^{#A-#B} * (-A^2 - A^-2)^{loops-1}
    LaurentZ term = LaurentZ::monomial(asmooth);
    LaurentZ delta = LaurentZ::monomial(2, -1) + LaurentZ::monomial(-2, -1);
    for (int i = 1; i < loops; ++i) term = term * delta;
    bracket += term;
  }
  // V = (-A)^{-3w} * bracket
  LaurentZ norm = LaurentZ::monomial(-3 * writhe, (writhe % 2) ? -1 : 1);
  return norm * bracket;
}

LaurentZ jones_unknot() { return LaurentZ::monomial(0); }

LaurentZ jones_trefoil_rh() {
  // -t^-4 + t^-3 + t^-1 with t = A^-4
  LaurentZ v = LaurentZ::monomial(16, -1);
  v += LaurentZ::monomial(12);
  v += LaurentZ::monomial(4);
  return v;
}

LaurentZ jones_trefoil_lh() {
  LaurentZ v = LaurentZ::monomial(-16, -1);
  v += LaurentZ::monomial(-12);
  v += LaurentZ::monomial(-4);
  return v;
}

LaurentZ jones_figure8() {
  // t^-2 - t^-1 + 1 - t + t^2
  LaurentZ v = LaurentZ::monomial(8);
  v += LaurentZ::monomial(4, -1);
  v += LaurentZ::monomial(0);
  v += LaurentZ::monomial(-4, -1);
  v += LaurentZ::monomial(-8);
  return v;
}

FrontDiagram random_front(std::mt19937& rng, int max_strands, int max_events) {
  FrontDiagram fd;
  int cur = 0;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int body = pick(3, max_events);
  for (int i = 0; i < body; ++i) {
    int roll = pick(0, 9);
    if (cur == 0) {
      fd.events.push_back({EventType::LeftCusp, 1});
      cur += 2;
    } else if (roll < 3 && cur + 2 <= max_strands) {
      fd.events.push_back({EventType::LeftCusp, pick(1, cur + 1)});
      cur += 2;
    } else if (roll < 8 && cur >= 2) {
      fd.events.push_back({EventType::Crossing, pick(1, cur - 1)});
    } else if (cur >= 2) {
      fd.events.push_back({EventType::RightCusp, pick(1, cur - 1)});
      cur -= 2;
    }
  }
  while (cur > 0) {
    if (cur >= 2 && pick(0, 2) == 0)
      fd.events.push_back({EventType::Crossing, pick(1, cur - 1)});
    else {
      fd.events.push_back({EventType::RightCusp, pick(1, cur - 1)});
      cur -= 2;
    }
  }
  // Drop one basepoint onto a random strand of a random nonempty slice.
  std::vector<std::pair<int, int>> spots;
  int c2 = 0;
  for (size_t s = 0; s < fd.events.size(); ++s) {
    if (fd.events[s].type == EventType::LeftCusp) c2 += 2;
    else if (fd.events[s].type == EventType::RightCusp) c2 -= 2;
    if (c2 > 0) spots.emplace_back(int(s) + 1, c2);
  }
  auto [slice, width] = spots[pick(0, int(spots.size()) - 1)];
  fd.events.insert(fd.events.begin() + slice, {EventType::Basepoint, pick(1, width)});
  return fd;
}

} // namespace legrep::oracles
