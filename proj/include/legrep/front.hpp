#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace legrep {

enum class EventType { LeftCusp, RightCusp, Crossing, Basepoint };

// One event of a plat-position front, read left to right. Positions are
// 1-based from the top strand.
struct Event {
  EventType type;
  int pos;
  friend bool operator==(const Event&, const Event&) = default;
};

struct FrontError : std::runtime_error {
  int line; // 1-based source line, or -1 for programmatic fronts
  FrontError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

struct FrontDiagram {
  std::vector<Event> events;
  bool link = false; // multi-component allowed (satellite output)
};

// Text format: one event per line, "L p" / "R p" / "X p" / "* p", comments
// from '#' to end of line; '/' also separates events. A "# satellite"
// comment marks a multi-component diagram.
FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& fd);

// Combinatorial completion of a front: per-slice arcs, knot traversal,
// orientations, Maslov potentials.
struct TracedFront {
  FrontDiagram fd;
  std::vector<int> strands;              // strand count per slice (events+1 slices)
  std::vector<std::vector<int>> edge_at; // arc id per slice, index pos-1
  int nedges = 0;
  int ncomponents = 0;
  std::vector<int> comp_of_edge;
  // Traversal direction per arc, +1 east / -1 west. The component holding
  // the basepoint is oriented so the basepoint arc goes east; every other
  // component is oriented east at its lowest-numbered arc.
  std::vector<int> edge_dir;
  // Maslov potential per arc, 0 on each component's anchor arc; valid only
  // when has_mu (every component has rotation number 0).
  std::vector<int> edge_mu;
  bool has_mu = false;
  int basepoint_edge = -1;

  int left_cusps = 0, right_cusps = 0;
  int writhe = 0;
  int rot2 = 0; // down-cusps minus up-cusps = 2 * rotation number
  int tb() const { return writhe - right_cusps; }
};

// Validates and traces; throws FrontError on malformed input (bad positions,
// missing/duplicate basepoint, open strands at the end).
TracedFront trace_front(const FrontDiagram& fd);

struct ClassicalInvariants {
  int tb = 0;
  int rot = 0; // (down - up)/2; sum over components for links
  int writhe = 0;
  int left_cusps = 0, right_cusps = 0;
  int components = 1;
  bool graded = false;                // potentials exist (rotation 0)
  std::vector<int> crossing_gradings; // one per Crossing event, when graded
};

ClassicalInvariants classical_invariants(const FrontDiagram& fd);

// Potential of the arc at each slice and position; requires has_mu.
std::vector<std::vector<int>> slice_potentials(const TracedFront& tf);

std::vector<std::string> catalog_names();
// Throws std::out_of_range listing the valid names.
FrontDiagram catalog_front(const std::string& name);

} // namespace legrep
