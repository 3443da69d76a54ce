#pragma once

// The modular 3x+1 digraphs Gamma_d / pruned Gamma~_d and the graph
// algorithms used by the certification pipeline: node deletion, pruning
// of acyclic edges via strongly connected components, simple-cycle
// enumeration (Johnson), color dual / reversal / relabeling, and weakly
// connected components.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "collatz/arith.hpp"

namespace collatz {

enum class Color : std::uint8_t { black, red };

struct ColoredEdge {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    Color color = Color::black;

    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Immutable after construction; nodes and edges kept sorted and unique so
// that graph equality is plain value equality.
struct ColoredDigraph {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> nodes;
    std::vector<ColoredEdge> edges;

    bool has_node(std::uint64_t v) const;
    bool has_edge(std::uint64_t from, std::uint64_t to, Color c) const;
    friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;
};

ColoredDigraph make_graph(std::uint64_t modulus, std::vector<std::uint64_t> nodes,
                          std::vector<ColoredEdge> edges);

// Gamma_d on all residues mod d. Edges come from the closed forms: for odd
// d, r -> r/2 (black) and r -> (3r+1)/2 (red) with 1/2 the inverse of 2;
// for even d, even r -> r/2 and r/2 + d/2 (black), odd r -> (3r+1)/2 and
// (3r+1)/2 + d/2 (red).
ColoredDigraph build_gamma(std::uint64_t d);

// Gamma~_d: for 3 | d, drop the nodes divisible by 3; otherwise unchanged.
ColoredDigraph prune(const ColoredDigraph& g);

// Induced subgraph on nodes \ removed (Gamma'). Unknown residues rejected.
ColoredDigraph delete_nodes(const ColoredDigraph& g,
                            const std::vector<std::uint64_t>& removed);

// Keeps an edge iff its endpoints lie in the same strongly connected
// component, which is equivalent to lying on some cycle (Gamma''). Nodes
// are kept, possibly isolated. Idempotent.
ColoredDigraph prune_acyclic_edges(const ColoredDigraph& g);

struct DisjointCycleCheck {
    bool ok = false;             // disjoint union of cycles and isolated nodes
    std::uint64_t max_cycle_length = 0;
};

// True iff every node has in- and out-degree at most one and every edge
// lies on a cycle.
DisjointCycleCheck is_disjoint_cycle_union(const ColoredDigraph& g);

struct SimpleCycle {
    std::vector<std::uint64_t> nodes;  // in order; closes back to nodes[0]
    std::uint32_t red_edges = 0;

    std::uint32_t length() const { return static_cast<std::uint32_t>(nodes.size()); }
    RedFraction red_fraction() const { return RedFraction{red_edges, length()}; }
};

struct CycleReport {
    std::vector<SimpleCycle> cycles;
    std::uint64_t max_length = 0;
    bool budget_exhausted = false;  // enumeration stopped early; not a pass
};

// All simple cycles of the colored multigraph (parallel edges of different
// colors yield distinct cycles), Johnson-style, stopping once budget many
// cycles have been emitted.
CycleReport simple_cycles(const ColoredDigraph& g, std::uint64_t budget = 1000000);

ColoredDigraph color_dual(const ColoredDigraph& g);
ColoredDigraph reverse(const ColoredDigraph& g);

// Renames node v to perm[v]. perm must be indexed by residue value and map
// the node set bijectively onto itself.
ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<std::uint64_t>& perm);

// Partition of the nodes into weakly connected components, each sorted,
// components ordered by smallest node.
std::vector<std::vector<std::uint64_t>> weak_components(const ColoredDigraph& g);

// DOT with black edges solid and red edges dashed (and colored red).
std::string to_dot(const ColoredDigraph& g, const std::string& name = "gamma");
std::string to_json(const ColoredDigraph& g);

}  // namespace collatz
