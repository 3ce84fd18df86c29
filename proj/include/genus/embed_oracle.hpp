#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "genus/graphfam.hpp"
#include "genus/seqcore.hpp"

namespace genus {

// Dart-based undirected multigraph. Edge k owns darts 2k (at its first
// endpoint) and 2k+1 (at its second); twin(d) = d ^ 1. Parallel edges and
// loops are allowed; a loop contributes two distinct darts at its vertex.
class Multigraph {
public:
    // Validates vertex ids and connectivity (required by the Euler-formula
    // genus computation). Throws InvalidGraph.
    static Multigraph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    static int twin(int dart) { return dart ^ 1; }
    int dart_vertex(int dart) const { return dart_vertex_[static_cast<std::size_t>(dart)]; }

    // Incident darts in ascending order; a loop lists both of its darts.
    const std::vector<int>& darts_at(int v) const {
        return incidence_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(darts_at(v).size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    Multigraph() = default;
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> dart_vertex_;
    std::vector<std::vector<int>> incidence_;
};

// One cyclic ordering of incident darts per vertex.
using RotationSystem = std::vector<std::vector<int>>;

// Throws InvalidGraph unless every dart appears exactly once, at its own
// vertex.
void validate_rotation(const Multigraph& g, const RotationSystem& rot);

// Number of face orbits of the embedding: orbits of dart -> successor of
// its twin in the rotation at the twin's vertex. V - E + F = 2 - 2*genus.
int face_count(const Multigraph& g, const RotationSystem& rot);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Exhaustive census over all prod_v (deg(v)-1)! rotation systems: the
// histogram of embedding genus as a GenusDistribution. The result is
// independent of enumeration order and of `threads` (partial histograms
// merge by addition). Throws BudgetExceeded when the rotation space is
// larger than `budget`.
GenusDistribution enumerate_distribution(const Multigraph& g,
                                         std::uint64_t budget = kDefaultEnumerationBudget,
                                         int threads = 1);

// Cubic realizations of the named ladder families (crosses have no pinned
// construction and are rejected):
//   L_n  - rung-and-rail ladder on 2n vertices with both end rungs doubled
//          (n = 1 is the three-edge dipole)
//   CL_n - prism: two disjoint n-cycles joined by rungs, n >= 3
//   ML_n - 2n-cycle plus n diameters, n >= 3
//   RL_n - L_n with each doubling edge subdivided once and the two new
//          vertices joined, giving 2n+2 cubic vertices
Multigraph build_named_graph(GraphFamilyTag fam, int n);

}  // namespace genus
