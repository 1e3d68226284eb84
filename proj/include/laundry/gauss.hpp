#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laundry/braid.hpp"
#include "laundry/linking.hpp"
#include "laundry/matrix.hpp"

namespace laundry {

// A vertex on the circle: one endpoint of an oriented chord. Chord 0 is the
// outer arc closing the complement of the base arc J.
struct ChordEndpoint {
    int chord = 0;
    bool second = false;  // false: a_i, true: b_i
    bool operator==(const ChordEndpoint&) const = default;
};

// A based, oriented circle-with-chords: the 2n+2 vertices in J-order,
// starting at a_0 and ending at b_0. Chords are numbered by their first
// endpoints, so a_1 < a_2 < ... < a_n along J and a_i < b_i.
struct CircleWithChords {
    int chords = 0;                     // n, not counting chord 0
    std::vector<ChordEndpoint> seq;     // size 2n+2
    std::vector<CycleLabel> labels;     // per chord 1..n (labels[i-1]); may be empty

    int position_of(int chord, bool second) const;
    bool operator==(const CircleWithChords& o) const {
        return chords == o.chords && seq == o.seq;
    }
};

std::string token(const ChordEndpoint& e);

// Chord diagram text format: line 1 the chord count n, line 2 the 2n+2
// endpoint tokens a<i>/b<i> in J-order.
std::string to_text(const CircleWithChords& c);
CircleWithChords chords_from_text(const std::string& text);

// One chord per surface cycle, endpoints in the laundry order of the band
// feet: each even circle contributes u_e, the first feet of its block's
// bands by increasing height, then v_e; each odd circle (descending)
// contributes u_o, the second feet of its bands by decreasing height, then
// v_o. Chord order equals the laundry cycle order.
CircleWithChords circle_with_chords(const ClosedBraidDiagram& d);

// Chords kept keep their relative order and are renumbered consecutively.
CircleWithChords remove_chords(const CircleWithChords& c, const std::set<int>& drop);

struct OverlapGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, sorted
    bool operator==(const OverlapGraph&) const = default;
};

// Edge (i,j) iff a_i < a_j < b_i < b_j along J: the chords' arcs overlap
// without containment.
OverlapGraph overlap_graph(const CircleWithChords& c);

// A J-edge, as the pair of adjacent positions (in seq) it connects.
using JEdge = std::pair<int, int>;

// For each overlap-graph component not containing chord 1, the J-edge ending
// at a_i for the component's minimal chord i.
std::vector<JEdge> interior_first_edges(const CircleWithChords& c);

using TurnAssignment = std::map<JEdge, int>;

// Braid-derived laundry surfaces turn nowhere: every interior first-edge
// gets turn zero.
TurnAssignment braid_turns(const CircleWithChords& c);

struct EquivalenceCertificate {
    CircleWithChords graph;
    IntMat matrix;  // linking matrix augmented by a zero row/column first, for the outer cycle
    TurnAssignment turns;
};

EquivalenceCertificate certificate(const CircleWithChords& c, const IntMat& augmented,
                                   const TurnAssignment& t);
EquivalenceCertificate certificate(const ClosedBraidDiagram& d);
bool certificates_equal(const EquivalenceCertificate& x, const EquivalenceCertificate& y);

// Canonical drawing check: with J on a line and chords as semicircles below,
// every chord must meet the higher-indexed chords it overlaps in index
// order along its own arc.
bool condition6_check(const CircleWithChords& c);

}  // namespace laundry
