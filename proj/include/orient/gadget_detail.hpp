#pragma once

// Construction-side plumbing shared by the gadget catalog and the
// reduction builders: an incremental graph sketch plus per-gadget
// blueprints recording which vertex plays which role.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orient/graph.hpp"

namespace orient::detail {

struct GraphSketch {
    int n = 0;
    std::vector<Edge> edges;
    std::map<int, std::string> labels;

    int add_vertex(const std::string& label = "") {
        if (!label.empty()) labels[n] = label;
        return n++;
    }
    void add_edge(int a, int b) {
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    Graph build() const { return Graph::from_edges(n, edges, labels); }
};

// Complete bipartite block K_{2,5}: any orientation with all in-sums at
// most 2 leaves the hub with in-sum at most 1, which is what the
// low-sum side of every reduction leans on.
struct F1Block {
    int hub = -1;                 // z
    std::array<int, 5> mids{};    // f_1..f_5
    int co_hub = -1;              // f_6
};

// Three K_{2,5} blocks with their hubs joined in a path; the middle hub
// (the port) is forced to in-sum 0 in every max-2 orientation.
struct F2Block {
    F1Block left, mid, right;
    int port = -1;  // mid.hub
};

struct HBlueprint {
    int x = -1, neg_x = -1;
    F2Block fx, fnx;
};

struct KBlueprint {
    std::array<int, 7> q{};
    std::array<int, 3> ports{};
};

// Seven-vertex path between two clause ports with a forced-sum-1 vertex
// attached at its middle.
struct QBlueprint {
    std::array<int, 7> r{};
    int z1 = -1;
    F1Block z1_f1;
    F2Block f2;
    std::array<int, 2> ports{};
};

// Center with three length-3 arms, one per clause port; each arm's
// vertex next to the center carries an F1 block.
struct LBlueprint {
    int center = -1;
    std::array<int, 3> arm_hub{};    // adjacent to center, F1 ports
    std::array<F1Block, 3> arm_f1{};
    std::array<int, 3> arm_inner{};  // adjacent to the clause ports
    std::array<int, 3> ports{};
};

struct SBlueprint {
    std::array<int, 3> ports{};
    LBlueprint l;
    std::array<QBlueprint, 3> q;  // port pairs (0,1), (1,2), (0,2)
};

F1Block add_f1(GraphSketch& sk, const std::string& prefix = "");
F1Block add_f1_at(GraphSketch& sk, int hub, const std::string& prefix = "");
F2Block add_f2(GraphSketch& sk, const std::string& prefix = "");
KBlueprint add_k(GraphSketch& sk, const std::string& prefix = "");
HBlueprint add_h(GraphSketch& sk, const std::string& prefix = "");
QBlueprint add_q(GraphSketch& sk, int port_a, int port_b,
                 const std::string& prefix = "");
LBlueprint add_l(GraphSketch& sk, int c1, int c2, int c3,
                 const std::string& prefix = "");
SBlueprint add_s(GraphSketch& sk, const std::string& prefix = "");

struct TBlueprint {
    std::array<int, 5> p{};
    int x = -1, neg_x = -1;
};
TBlueprint add_t(GraphSketch& sk, const std::string& prefix = "");

} // namespace orient::detail
