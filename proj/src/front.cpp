#include "legrep/front.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

namespace legrep {

namespace {

const char* type_token(EventType t) {
  switch (t) {
    case EventType::LeftCusp: return "L";
    case EventType::RightCusp: return "R";
    case EventType::Crossing: return "X";
    case EventType::Basepoint: return "*";
  }
  return "?";
}

} // namespace

FrontDiagram parse_front(const std::string& text) {
  FrontDiagram fd;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int cur = 0, basepoints = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      size_t b = comment.find_first_not_of(" \t\r");
      size_t e = comment.find_last_not_of(" \t\r");
      if (b != std::string::npos && comment.substr(b, e - b + 1) == "satellite") fd.link = true;
      line = line.substr(0, hash);
    }
    for (char& ch : line)
      if (ch == '/') ch = ' ';
    std::istringstream toks(line);
    std::string kind;
    while (toks >> kind) {
      EventType t;
      if (kind == "L") t = EventType::LeftCusp;
      else if (kind == "R") t = EventType::RightCusp;
      else if (kind == "X") t = EventType::Crossing;
      else if (kind == "*") t = EventType::Basepoint;
      else throw FrontError(lineno, "unknown event '" + kind + "'");
      long pos;
      if (!(toks >> pos)) throw FrontError(lineno, "missing position after '" + kind + "'");
      int lo = 1, hi;
      switch (t) {
        case EventType::LeftCusp: hi = cur + 1; break;
        case EventType::Basepoint: hi = cur; break;
        default: hi = cur - 1; break;
      }
      if (pos < lo || pos > hi)
        throw FrontError(lineno, std::string(type_token(t)) + " at position " + std::to_string(pos) +
                                     " with " + std::to_string(cur) + " strands");
      if (t == EventType::LeftCusp) cur += 2;
      else if (t == EventType::RightCusp) cur -= 2;
      else if (t == EventType::Basepoint) {
        if (++basepoints > 1) throw FrontError(lineno, "duplicate basepoint");
      }
      fd.events.push_back(Event{t, int(pos)});
    }
  }
  if (fd.events.empty()) throw FrontError(lineno ? lineno : 1, "empty diagram");
  if (cur != 0) throw FrontError(lineno, std::to_string(cur) + " strands left open");
  if (basepoints == 0) throw FrontError(lineno, "no basepoint");
  return fd;
}

std::string serialize_front(const FrontDiagram& fd) {
  std::ostringstream os;
  if (fd.link) os << "# satellite\n";
  for (const Event& e : fd.events) os << type_token(e.type) << " " << e.pos << "\n";
  return os.str();
}

TracedFront trace_front(const FrontDiagram& fd) {
  TracedFront tf;
  tf.fd = fd;
  const auto& ev = fd.events;
  const int E = int(ev.size());

  // Validate and lay out arcs slice by slice.
  tf.strands.assign(E + 1, 0);
  tf.edge_at.assign(E + 1, {});
  int cur = 0, basepoints = 0;
  auto bad = [](const std::string& m) { return FrontError(-1, m); };
  for (int s = 0; s < E; ++s) {
    const Event& e = ev[s];
    switch (e.type) {
      case EventType::LeftCusp:
        if (e.pos < 1 || e.pos > cur + 1) throw bad("left cusp out of range");
        cur += 2;
        ++tf.left_cusps;
        break;
      case EventType::RightCusp:
        if (e.pos < 1 || e.pos > cur - 1) throw bad("right cusp out of range");
        cur -= 2;
        ++tf.right_cusps;
        break;
      case EventType::Crossing:
        if (e.pos < 1 || e.pos > cur - 1) throw bad("crossing out of range");
        break;
      case EventType::Basepoint:
        if (e.pos < 1 || e.pos > cur) throw bad("basepoint out of range");
        ++basepoints;
        break;
    }
    tf.strands[s + 1] = cur;
  }
  if (cur != 0) throw bad("strands left open");
  if (basepoints != 1) throw bad(basepoints ? "duplicate basepoint" : "no basepoint");

  int next_edge = 0;
  for (int s = 0; s <= E; ++s) {
    tf.edge_at[s].resize(tf.strands[s]);
    for (int k = 0; k < tf.strands[s]; ++k) tf.edge_at[s][k] = next_edge++;
  }
  tf.nedges = next_edge;

  // Endpoint graph: key = 2*edge + (0 west, 1 east). mu_delta[key] applies
  // when leaving through that endpoint (cusp transitions shift potential).
  std::vector<int> conn(size_t(tf.nedges) * 2, -1);
  std::vector<int> mu_delta(size_t(tf.nedges) * 2, 0);
  auto join = [&](int key_a, int key_b) {
    conn[key_a] = key_b;
    conn[key_b] = key_a;
  };
  auto west_end = [&](int s, int pos) { return 2 * tf.edge_at[s][pos - 1]; };
  auto east_end = [&](int s, int pos) { return 2 * tf.edge_at[s][pos - 1] + 1; };

  for (int s = 0; s < E; ++s) {
    const Event& e = ev[s];
    int p = e.pos;
    int wn = tf.strands[s];
    switch (e.type) {
      case EventType::Crossing:
        for (int k = 1; k <= wn; ++k) {
          int to = (k == p) ? p + 1 : (k == p + 1) ? p : k;
          join(east_end(s, k), west_end(s + 1, to));
        }
        break;
      case EventType::Basepoint:
        for (int k = 1; k <= wn; ++k) join(east_end(s, k), west_end(s + 1, k));
        tf.basepoint_edge = tf.edge_at[s][p - 1];
        break;
      case EventType::LeftCusp: {
        int up = west_end(s + 1, p), down = west_end(s + 1, p + 1);
        join(up, down);
        mu_delta[up] = -1;  // leaving along the upper arc westward: upper -> lower
        mu_delta[down] = 1;
        for (int k = 1; k <= wn; ++k) join(east_end(s, k), west_end(s + 1, k < p ? k : k + 2));
        break;
      }
      case EventType::RightCusp: {
        int up = east_end(s, p), down = east_end(s, p + 1);
        join(up, down);
        mu_delta[up] = -1;
        mu_delta[down] = 1;
        for (int k = 1; k <= wn; ++k) {
          if (k == p || k == p + 1) continue;
          join(east_end(s, k), west_end(s + 1, k < p ? k : k - 2));
        }
        break;
      }
    }
  }

  // Traverse components. Direction +1 means heading east (will exit through
  // the east end).
  tf.edge_dir.assign(tf.nedges, 0);
  tf.edge_mu.assign(tf.nedges, 0);
  tf.comp_of_edge.assign(tf.nedges, -1);
  std::vector<char> seen(tf.nedges, 0);
  tf.has_mu = true;
  int comp = 0;
  for (int anchor = 0; anchor < tf.nedges + 1; ++anchor) {
    int start;
    if (comp == 0) {
      start = tf.basepoint_edge;
    } else {
      start = -1;
      for (int i = 0; i < tf.nedges; ++i)
        if (!seen[i]) {
          start = i;
          break;
        }
      if (start < 0) break;
    }
    int edge = start, dir = 1, mu = 0;
    while (!seen[edge]) {
      seen[edge] = 1;
      tf.edge_dir[edge] = dir;
      tf.edge_mu[edge] = mu;
      tf.comp_of_edge[edge] = comp;
      int out = 2 * edge + (dir > 0 ? 1 : 0);
      int in = conn[out];
      assert(in >= 0);
      mu += mu_delta[out];
      edge = in / 2;
      dir = (in % 2 == 0) ? 1 : -1;
    }
    // Closed up: potential consistency requires returning with mu == 0.
    if (edge == start && mu != 0) tf.has_mu = false;
    ++comp;
  }
  tf.ncomponents = comp;

  // Writhe: a crossing is positive iff the strands run the same way.
  for (int s = 0; s < E; ++s) {
    if (ev[s].type != EventType::Crossing) continue;
    int a = tf.edge_at[s][ev[s].pos - 1], b = tf.edge_at[s][ev[s].pos];
    tf.writhe += tf.edge_dir[a] == tf.edge_dir[b] ? 1 : -1;
  }
  // Cusp traversal census: down-cusps minus up-cusps.
  for (int s = 0; s < E; ++s) {
    if (ev[s].type == EventType::LeftCusp) {
      int upper = tf.edge_at[s + 1][ev[s].pos - 1];
      tf.rot2 += tf.edge_dir[upper] < 0 ? 1 : -1;
    } else if (ev[s].type == EventType::RightCusp) {
      int upper = tf.edge_at[s][ev[s].pos - 1];
      tf.rot2 += tf.edge_dir[upper] > 0 ? 1 : -1;
    }
  }
  return tf;
}

ClassicalInvariants classical_invariants(const FrontDiagram& fd) {
  TracedFront tf = trace_front(fd);
  ClassicalInvariants ci;
  ci.writhe = tf.writhe;
  ci.left_cusps = tf.left_cusps;
  ci.right_cusps = tf.right_cusps;
  ci.tb = tf.tb();
  ci.rot = tf.rot2 / 2;
  ci.components = tf.ncomponents;
  ci.graded = tf.has_mu;
  if (ci.graded) {
    for (size_t s = 0; s < fd.events.size(); ++s) {
      if (fd.events[s].type != EventType::Crossing) continue;
      int p = fd.events[s].pos;
      // Descending strand enters upper-left; grading = mu(desc) - mu(asc).
      ci.crossing_gradings.push_back(tf.edge_mu[tf.edge_at[s][p - 1]] -
                                     tf.edge_mu[tf.edge_at[s][p]]);
    }
  }
  return ci;
}

std::vector<std::vector<int>> slice_potentials(const TracedFront& tf) {
  assert(tf.has_mu);
  std::vector<std::vector<int>> out(tf.edge_at.size());
  for (size_t s = 0; s < tf.edge_at.size(); ++s) {
    out[s].resize(tf.edge_at[s].size());
    for (size_t k = 0; k < tf.edge_at[s].size(); ++k) out[s][k] = tf.edge_mu[tf.edge_at[s][k]];
  }
  return out;
}

namespace {
const std::map<std::string, const char*>& catalog_table() {
  static const std::map<std::string, const char*> table = {
      {"unknot", "L 1\n* 1\nR 1\n"},
      {"trefoil", "L 1\nL 1\nX 2\nX 2\nX 2\n* 1\nR 1\nR 1\n"},
      {"unknot_s2", "L 1\nX 1\nX 1\n* 1\nR 1\n"},
      // Fixed by a search over small plat fronts; the unit tests pin its
      // knot type through the Jones polynomial and tb = -3, rot = 0.
      {"figure8", "@FIG8@"},
  };
  return table;
}
} // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (auto& [k, v] : catalog_table()) names.push_back(k);
  return names;
}

FrontDiagram catalog_front(const std::string& name) {
  auto& tab = catalog_table();
  auto it = tab.find(name);
  if (it == tab.end()) {
    std::string msg = "unknown catalog knot '" + name + "'; available:";
    for (auto& [k, v] : tab) msg += " " + k;
    throw std::out_of_range(msg);
  }
  return parse_front(it->second);
}

} // namespace legrep
