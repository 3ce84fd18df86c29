#include "genus/embed_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "genus/errors.hpp"

namespace genus {

Multigraph Multigraph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count <= 0) throw InvalidGraph("multigraph: need at least one vertex");
    if (edges.empty()) throw InvalidGraph("multigraph: need at least one edge");
    Multigraph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.dart_vertex_.resize(2 * g.edges_.size());
    g.incidence_.assign(static_cast<std::size_t>(vertex_count), {});
    for (std::size_t k = 0; k < g.edges_.size(); ++k) {
        auto [u, v] = g.edges_[k];
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw InvalidGraph("multigraph: edge endpoint out of range");
        }
        g.dart_vertex_[2 * k] = u;
        g.dart_vertex_[2 * k + 1] = v;
        g.incidence_[static_cast<std::size_t>(u)].push_back(static_cast<int>(2 * k));
        g.incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(2 * k + 1));
    }
    for (auto& inc : g.incidence_) std::sort(inc.begin(), inc.end());

    // Connectivity via dart walk from vertex 0.
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : g.incidence_[static_cast<std::size_t>(v)]) {
            int w = g.dart_vertex_[static_cast<std::size_t>(twin(d))];
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw InvalidGraph("multigraph: not connected");
    }
    return g;
}

void validate_rotation(const Multigraph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.size()) != g.vertex_count()) {
        throw InvalidGraph("rotation system: wrong vertex count");
    }
    std::vector<char> seen(static_cast<std::size_t>(g.dart_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : rot[static_cast<std::size_t>(v)]) {
            if (d < 0 || d >= g.dart_count() || g.dart_vertex(d) != v ||
                seen[static_cast<std::size_t>(d)]) {
                throw InvalidGraph("rotation system: bad dart assignment");
            }
            seen[static_cast<std::size_t>(d)] = 1;
        }
    }
    for (char s : seen) {
        if (!s) throw InvalidGraph("rotation system: missing dart");
    }
}

namespace {

// Orbit count of dart -> succ[twin(dart)], with succ the rotation
// successor. `scratch` must be dart_count bytes, zeroed; it is left dirty.
int trace_faces(const std::vector<int>& succ, std::vector<char>& scratch) {
    int faces = 0;
    const int darts = static_cast<int>(succ.size());
    for (int d0 = 0; d0 < darts; ++d0) {
        if (scratch[static_cast<std::size_t>(d0)]) continue;
        ++faces;
        int d = d0;
        do {
            scratch[static_cast<std::size_t>(d)] = 1;
            d = succ[static_cast<std::size_t>(d ^ 1)];
        } while (d != d0);
    }
    return faces;
}

void fill_succ(const RotationSystem& rot, std::vector<int>& succ) {
    for (const auto& cycle : rot) {
        const std::size_t k = cycle.size();
        for (std::size_t t = 0; t < k; ++t) {
            succ[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % k];
        }
    }
}

int genus_from_faces(const Multigraph& g, int faces) {
    const int euler = g.vertex_count() - g.edge_count() + faces;
    const int doubled = 2 - euler;  // = 2 * genus
    if (doubled < 0 || doubled % 2 != 0) {
        throw NonIntegerGenus("face tracing produced Euler characteristic " +
                              std::to_string(euler));
    }
    return doubled / 2;
}

std::uint64_t factorial_u64(int k) {
    std::uint64_t r = 1;
    for (int t = 2; t <= k; ++t) r *= static_cast<std::uint64_t>(t);
    return r;
}

// The index-th permutation (factorial number system) of the sorted items.
std::vector<int> kth_permutation(std::vector<int> items, std::uint64_t index) {
    std::vector<int> out;
    out.reserve(items.size());
    for (std::size_t left = items.size(); left > 0; --left) {
        std::uint64_t f = factorial_u64(static_cast<int>(left) - 1);
        std::size_t pick = static_cast<std::size_t>(index / f);
        index %= f;
        out.push_back(items[pick]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

struct EnumState {
    // Per vertex: the fixed anchor dart and the current tail permutation.
    std::vector<int> anchors;
    std::vector<std::vector<int>> tails;
    std::vector<int> succ;

    explicit EnumState(const Multigraph& g) : succ(static_cast<std::size_t>(g.dart_count())) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& inc = g.darts_at(v);
            anchors.push_back(inc[0]);
            tails.emplace_back(inc.begin() + 1, inc.end());
        }
    }

    // Seek each vertex's tail to its digit of the global index (mixed-radix,
    // vertex 0 fastest).
    void seek(std::uint64_t index) {
        for (std::size_t v = 0; v < tails.size(); ++v) {
            std::uint64_t radix = factorial_u64(static_cast<int>(tails[v].size()));
            std::sort(tails[v].begin(), tails[v].end());
            tails[v] = kth_permutation(std::move(tails[v]), index % radix);
            index /= radix;
        }
    }

    // Advance the odometer by one; false once the space is exhausted.
    bool advance() {
        for (auto& tail : tails) {
            if (std::next_permutation(tail.begin(), tail.end())) return true;
        }
        return false;
    }

    void rebuild_succ() {
        for (std::size_t v = 0; v < tails.size(); ++v) {
            int prev = anchors[v];
            for (int d : tails[v]) {
                succ[static_cast<std::size_t>(prev)] = d;
                prev = d;
            }
            succ[static_cast<std::size_t>(prev)] = anchors[v];
        }
    }
};

std::vector<std::uint64_t> census_slice(const Multigraph& g, std::uint64_t first,
                                        std::uint64_t count) {
    const int max_genus_slots = (g.edge_count() - g.vertex_count() + 1) / 2 + 2;
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(std::max(max_genus_slots, 2)));
    EnumState state(g);
    state.seek(first);
    std::vector<char> scratch(static_cast<std::size_t>(g.dart_count()));
    for (std::uint64_t step = 0; step < count; ++step) {
        state.rebuild_succ();
        std::fill(scratch.begin(), scratch.end(), 0);
        int genus = genus_from_faces(g, trace_faces(state.succ, scratch));
        histogram[static_cast<std::size_t>(genus)] += 1;
        if (step + 1 < count && !state.advance()) {
            throw Error("enumerate_distribution: rotation space exhausted early");
        }
    }
    return histogram;
}

}  // namespace

int face_count(const Multigraph& g, const RotationSystem& rot) {
    validate_rotation(g, rot);
    std::vector<int> succ(static_cast<std::size_t>(g.dart_count()));
    fill_succ(rot, succ);
    std::vector<char> scratch(static_cast<std::size_t>(g.dart_count()));
    int faces = trace_faces(succ, scratch);
    genus_from_faces(g, faces);  // Euler sanity; throws on violation
    return faces;
}

GenusDistribution enumerate_distribution(const Multigraph& g, std::uint64_t budget,
                                         int threads) {
    BigInt space = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        BigInt f = 1;
        for (int t = 2; t <= g.degree(v) - 1; ++t) f *= t;
        space *= f;
    }
    if (space > budget) {
        throw BudgetExceeded("enumerate_distribution: " + space.str() +
                             " rotation systems exceed budget " + std::to_string(budget));
    }
    const std::uint64_t total = space.convert_to<std::uint64_t>();

    threads = std::clamp<int>(threads, 1, 64);
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(threads));
    if (threads == 1 || total < 64) {
        partial[0] = census_slice(g, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::uint64_t first = chunk * static_cast<std::uint64_t>(t);
            std::uint64_t count = (t + 1 == threads) ? total - first : chunk;
            pool.emplace_back([&g, &partial, t, first, count] {
                partial[static_cast<std::size_t>(t)] = census_slice(g, first, count);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<BigInt> merged(partial[0].size());
    for (const auto& h : partial) {
        for (std::size_t i = 0; i < h.size(); ++i) merged[i] += h[i];
    }
    return GenusDistribution(0, std::move(merged));
}

Multigraph build_named_graph(GraphFamilyTag fam, int n) {
    std::vector<std::pair<int, int>> e;
    switch (fam) {
        case GraphFamilyTag::L: {
            if (n < 1) throw OutOfRange("build_named_graph: L requires n >= 1");
            auto x = [](int i) { return i; };
            auto y = [n](int i) { return n + i; };
            for (int i = 0; i < n; ++i) e.emplace_back(x(i), y(i));          // rungs
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(x(i), x(i + 1));  // rails
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(y(i), y(i + 1));
            e.emplace_back(x(0), y(0));  // doubled end rungs
            e.emplace_back(x(n - 1), y(n - 1));
            return Multigraph::from_edges(2 * n, std::move(e));
        }
        case GraphFamilyTag::CL: {
            if (n < 3) throw OutOfRange("build_named_graph: CL requires n >= 3");
            for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
            for (int i = 0; i < n; ++i) e.emplace_back(n + i, n + (i + 1) % n);
            for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
            return Multigraph::from_edges(2 * n, std::move(e));
        }
        case GraphFamilyTag::ML: {
            if (n < 3) throw OutOfRange("build_named_graph: ML requires n >= 3");
            for (int i = 0; i < 2 * n; ++i) e.emplace_back(i, (i + 1) % (2 * n));
            for (int i = 0; i < n; ++i) e.emplace_back(i, i + n);
            return Multigraph::from_edges(2 * n, std::move(e));
        }
        case GraphFamilyTag::RL: {
            if (n < 1) throw OutOfRange("build_named_graph: RL requires n >= 1");
            auto x = [](int i) { return i; };
            auto y = [n](int i) { return n + i; };
            const int w0 = 2 * n, w1 = 2 * n + 1;  // subdivision vertices
            for (int i = 0; i < n; ++i) e.emplace_back(x(i), y(i));
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(x(i), x(i + 1));
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(y(i), y(i + 1));
            e.emplace_back(x(0), w0);
            e.emplace_back(w0, y(0));
            e.emplace_back(x(n - 1), w1);
            e.emplace_back(w1, y(n - 1));
            e.emplace_back(w0, w1);
            return Multigraph::from_edges(2 * n + 2, std::move(e));
        }
        case GraphFamilyTag::R:
            throw OutOfRange("build_named_graph: crosses have no pinned construction");
    }
    throw Error("build_named_graph: unknown tag");
}

}  // namespace genus
