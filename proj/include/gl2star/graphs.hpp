#pragma once

#include <gl2star/rational.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2star {

// Directed graph with n aerial vertices (each emitting an ordered pair of
// edges) and m ordered terrestrial vertices. Targets are encoded as
// 0..n-1 aerial, n..n+m-1 terrestrial.
struct KGraph {
    int n_aerial = 0;
    int m_terrestrial = 0;
    bool generalized = false;
    std::vector<std::pair<int, int>> edges; // one ordered pair per aerial vertex

    bool is_aerial(int target) const { return target < n_aerial; }

    // standard mode forbids self-loops; both modes forbid double edges
    bool valid() const {
        if (static_cast<int>(edges.size()) != n_aerial) return false;
        for (int v = 0; v < n_aerial; ++v) {
            auto [t1, t2] = edges[static_cast<size_t>(v)];
            if (t1 < 0 || t2 < 0 || t1 >= n_aerial + m_terrestrial ||
                t2 >= n_aerial + m_terrestrial)
                return false;
            if (t1 == t2) return false;
            if (!generalized && (t1 == v || t2 == v)) return false;
        }
        return true;
    }

    bool has_loop() const {
        for (int v = 0; v < n_aerial; ++v)
            if (edges[static_cast<size_t>(v)].first == v ||
                edges[static_cast<size_t>(v)].second == v)
                return true;
        return false;
    }

    // every terrestrial vertex receives at least one edge
    bool covers_ground() const {
        std::vector<int> in(static_cast<size_t>(m_terrestrial), 0);
        for (const auto& [t1, t2] : edges) {
            if (t1 >= n_aerial) in[static_cast<size_t>(t1 - n_aerial)]++;
            if (t2 >= n_aerial) in[static_cast<size_t>(t2 - n_aerial)]++;
        }
        return std::all_of(in.begin(), in.end(), [](int c) { return c > 0; });
    }

    friend bool operator==(const KGraph& a, const KGraph& b) {
        return a.n_aerial == b.n_aerial && a.m_terrestrial == b.m_terrestrial &&
               a.edges == b.edges;
    }
    friend bool operator<(const KGraph& a, const KGraph& b) { return a.edges < b.edges; }

    // "n=2 m=2; p1->(p2,q1); p2->(q1,q2)"
    std::string str() const {
        auto tname = [&](int t) {
            return t < n_aerial ? "p" + std::to_string(t + 1)
                                : "q" + std::to_string(t - n_aerial + 1);
        };
        std::ostringstream out;
        out << "n=" << n_aerial << " m=" << m_terrestrial;
        for (int v = 0; v < n_aerial; ++v)
            out << "; " << tname(v) << "->(" << tname(edges[static_cast<size_t>(v)].first)
                << "," << tname(edges[static_cast<size_t>(v)].second) << ")";
        return out.str();
    }
};

// Swap the two terrestrial labels (m = 2 only).
inline KGraph mirrored(const KGraph& g) {
    if (g.m_terrestrial != 2) throw std::invalid_argument("mirror needs m = 2");
    KGraph out = g;
    auto swap_target = [&](int t) {
        if (t == g.n_aerial) return g.n_aerial + 1;
        if (t == g.n_aerial + 1) return g.n_aerial;
        return t;
    };
    for (auto& [t1, t2] : out.edges) {
        t1 = swap_target(t1);
        t2 = swap_target(t2);
    }
    return out;
}

namespace detail {

inline KGraph relabeled(const KGraph& g, const std::vector<int>& perm, unsigned swap_mask) {
    KGraph out = g;
    auto map_target = [&](int t) {
        return t < g.n_aerial ? perm[static_cast<size_t>(t)] : t;
    };
    for (int v = 0; v < g.n_aerial; ++v) {
        auto [t1, t2] = g.edges[static_cast<size_t>(v)];
        std::pair<int, int> e{map_target(t1), map_target(t2)};
        if (swap_mask & (1u << v)) std::swap(e.first, e.second);
        out.edges[static_cast<size_t>(perm[static_cast<size_t>(v)])] = e;
    }
    return out;
}

} // namespace detail

// Result of canonicalization: the lexicographically smallest relabeling
// over aerial permutations and per-vertex edge swaps. Each edge swap flips
// the compiled operator's sign, so the parity is recorded; a graph whose
// stabilizer contains an odd-parity symmetry compiles to the zero operator.
struct CanonicalForm {
    KGraph graph;
    int sign = 1;            // sign of the input relative to the canonical form
    bool sign_ambiguous = false;
};

inline CanonicalForm canonical_form(const KGraph& g) {
    std::vector<int> perm(static_cast<size_t>(g.n_aerial));
    std::iota(perm.begin(), perm.end(), 0);
    CanonicalForm best;
    bool have = false;
    std::map<std::vector<std::pair<int, int>>, int> seen_signs;
    do {
        for (unsigned mask = 0; mask < (1u << g.n_aerial); ++mask) {
            KGraph cand = detail::relabeled(g, perm, mask);
            int sign = __builtin_popcount(mask) % 2 == 0 ? 1 : -1;
            auto it = seen_signs.find(cand.edges);
            bool ambiguous = it != seen_signs.end() && it->second != sign;
            if (it == seen_signs.end()) seen_signs.emplace(cand.edges, sign);
            if (!have || cand.edges < best.graph.edges) {
                best.graph = cand;
                best.sign = sign;
                have = true;
            }
            if (ambiguous) best.sign_ambiguous = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Equivalence class of graphs under aerial relabeling and edge reordering.
struct GraphClass {
    KGraph representative;
    std::vector<std::pair<KGraph, int>> members; // raw graph, sign vs representative
    bool symmetric = false; // closed under swapping the two terrestrial vertices
    bool sign_ambiguous = false;
    int mirror_sign = 1;    // representative sign of the mirrored class (m = 2)
};

// Exhaustive, duplicate-free enumeration of the coverage-filtered graphs,
// ordered by canonical edge list.
inline std::vector<GraphClass> enumerate_graphs(int n, int m, bool generalized) {
    if (n < 0 || n > 3 || (m != 1 && m != 2))
        throw std::invalid_argument("enumerate_graphs supports n <= 3, m in {1,2}");
    std::map<std::vector<std::pair<int, int>>, GraphClass> classes;
    const int targets = n + m;
    // iterate all ordered distinct target pairs per aerial vertex
    std::vector<std::pair<int, int>> choice(static_cast<size_t>(n));
    auto emit = [&]() {
        KGraph g{n, m, generalized, choice};
        if (!g.valid() || !g.covers_ground()) return;
        CanonicalForm cf = canonical_form(g);
        auto& cls = classes[cf.graph.edges];
        if (cls.members.empty()) {
            cls.representative = cf.graph;
            cls.sign_ambiguous = cf.sign_ambiguous;
        }
        cls.members.emplace_back(g, cf.sign);
    };
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            emit();
            return;
        }
        for (int t1 = 0; t1 < targets; ++t1)
            for (int t2 = 0; t2 < targets; ++t2) {
                if (t1 == t2) continue;
                if (!generalized && (t1 == v || t2 == v)) continue;
                choice[static_cast<size_t>(v)] = {t1, t2};
                rec(v + 1);
            }
    };
    if (n == 0) emit();
    else rec(0);

    std::vector<GraphClass> out;
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    if (m == 2) {
        for (auto& cls : out) {
            CanonicalForm mc = canonical_form(mirrored(cls.representative));
            cls.symmetric = mc.graph.edges == cls.representative.edges;
            cls.mirror_sign = mc.sign;
        }
    }
    return out;
}

// ---- operator schemata ---------------------------------------------------

// The four contraction indices used by the printed second-order patterns.
enum class Idx : int { i1 = 0, i2 = 1, j1 = 2, j2 = 3 };

struct SchemaFactor {
    Idx upper_first;            // first upper index of this tensor factor
    Idx upper_second;           // second upper index
    std::vector<Idx> derivs;    // derivatives applied to the factor
};

struct SchemaProduct {
    std::vector<SchemaFactor> factors;
    std::vector<std::vector<Idx>> slot_derivs; // one derivative list per argument slot
};

struct Schema {
    std::string name;
    std::string weight_label;
    int arity = 2;
    int t_order = 2;
    std::vector<SchemaProduct> products;
};

// The six symmetric second-order bidifferential patterns, exactly the
// printed contractions, tagged with their weight symbols.
inline const std::vector<Schema>& symmetric_basis() {
    using I = Idx;
    static const std::vector<Schema> basis = [] {
        auto f = [](I a, I b, std::vector<I> d) { return SchemaFactor{a, b, std::move(d)}; };
        std::vector<Schema> v;
        // G1: dj1 L^{i2 j2} dj2 L^{i1 j1} di1 (x) di2
        v.push_back({"Gamma1", "a_Gamma1", 2, 2,
                     {{{f(I::i2, I::j2, {I::j1}), f(I::i1, I::j1, {I::j2})},
                       {{I::i1}, {I::i2}}}}});
        // G2: dj1 L^{i1 j1} dj2 L^{i2 j2} di1 (x) di2
        v.push_back({"Gamma2", "a_Gamma2", 2, 2,
                     {{{f(I::i1, I::j1, {I::j1}), f(I::i2, I::j2, {I::j2})},
                       {{I::i1}, {I::i2}}}}});
        // G3: L^{i1 j1} dj1 dj2 L^{i2 j2} (di1 (x) di2 + di2 (x) di1)
        v.push_back({"Gamma3", "a_Gamma3", 2, 2,
                     {{{f(I::i1, I::j1, {}), f(I::i2, I::j2, {I::j1, I::j2})},
                       {{I::i1}, {I::i2}}},
                      {{f(I::i1, I::j1, {}), f(I::i2, I::j2, {I::j1, I::j2})},
                       {{I::i2}, {I::i1}}}}});
        // G4: L^{i1 j1} L^{i2 j2} di2 di1 (x) dj2 dj1
        v.push_back({"Gamma4", "a_Gamma4", 2, 2,
                     {{{f(I::i1, I::j1, {}), f(I::i2, I::j2, {})},
                       {{I::i1, I::i2}, {I::j1, I::j2}}}}});
        // G5: L^{i1 j1} dj1 L^{i2 j2} (di2 di1 (x) dj2 + dj2 (x) di2 di1)
        v.push_back({"Gamma5", "a_Gamma5", 2, 2,
                     {{{f(I::i1, I::j1, {}), f(I::i2, I::j2, {I::j1})},
                       {{I::i1, I::i2}, {I::j2}}},
                      {{f(I::i1, I::j1, {}), f(I::i2, I::j2, {I::j1})},
                       {{I::j2}, {I::i1, I::i2}}}}});
        // G6: L^{i2 j2} dj1 L^{i1 j1} (di2 di1 (x) dj2 + dj2 (x) di2 di1)
        v.push_back({"Gamma6", "a_Gamma6", 2, 2,
                     {{{f(I::i1, I::j1, {I::j1}), f(I::i2, I::j2, {})},
                       {{I::i1, I::i2}, {I::j2}}},
                      {{f(I::i1, I::j1, {I::j1}), f(I::i2, I::j2, {})},
                       {{I::j2}, {I::i1, I::i2}}}}});
        return v;
    }();
    return basis;
}

// The unary patterns of the order-two equivalence operator: one first-order
// term and five second-order terms, weight symbols K1..K6.
inline const std::vector<Schema>& unary_basis() {
    using I = Idx;
    static const std::vector<Schema> basis = [] {
        auto f = [](I a, I b, std::vector<I> d) { return SchemaFactor{a, b, std::move(d)}; };
        std::vector<Schema> v;
        // K1 (order t): dj1 L^{i1 j1} di1
        v.push_back({"K1", "K1", 1, 1, {{{f(I::i1, I::j1, {I::j1})}, {{I::i1}}}}});
        // K2: dj2 L^{i2 j2} dj1 L^{i1 j1} di1 di2
        v.push_back({"K2", "K2", 1, 2,
                     {{{f(I::i2, I::j2, {I::j2}), f(I::i1, I::j1, {I::j1})},
                       {{I::i1, I::i2}}}}});
        // K3: L^{i2 j2} dj1 dj2 L^{i1 j1} di1 di2
        v.push_back({"K3", "K3", 1, 2,
                     {{{f(I::i2, I::j2, {}), f(I::i1, I::j1, {I::j1, I::j2})},
                       {{I::i1, I::i2}}}}});
        // K4: dj1 L^{i2 j2} dj2 L^{i1 j1} di1 di2
        v.push_back({"K4", "K4", 1, 2,
                     {{{f(I::i2, I::j2, {I::j1}), f(I::i1, I::j1, {I::j2})},
                       {{I::i1, I::i2}}}}});
        // K5: di1 L^{i1 j1} dj2 dj1 L^{i2 j2} di2
        v.push_back({"K5", "K5", 1, 2,
                     {{{f(I::i1, I::j1, {I::i1}), f(I::i2, I::j2, {I::j2, I::j1})},
                       {{I::i2}}}}});
        // K6: dj2 dj1 L^{i1 j1} di1 L^{i2 j2} di2
        v.push_back({"K6", "K6", 1, 2,
                     {{{f(I::i1, I::j1, {I::j2, I::j1}), f(I::i2, I::j2, {I::i1})},
                       {{I::i2}}}}});
        return v;
    }();
    return basis;
}

// Mechanical translation of one schema product into its underlying graph:
// tensor factors become aerial vertices whose ordered edges follow the two
// upper indices; an index consumed as a derivative of factor k points at
// aerial vertex k, one consumed by argument slot s points at q_{s+1}.
inline KGraph schema_product_graph(const SchemaProduct& product) {
    const int n = static_cast<int>(product.factors.size());
    const int m = static_cast<int>(product.slot_derivs.size());
    auto target_of = [&](Idx idx) {
        for (int k = 0; k < n; ++k)
            for (Idx d : product.factors[static_cast<size_t>(k)].derivs)
                if (d == idx) return k;
        for (int s = 0; s < m; ++s)
            for (Idx d : product.slot_derivs[static_cast<size_t>(s)])
                if (d == idx) return n + s;
        throw std::invalid_argument("schema index is never consumed");
    };
    KGraph g{n, m, true, {}};
    for (int k = 0; k < n; ++k) {
        const auto& factor = product.factors[static_cast<size_t>(k)];
        g.edges.emplace_back(target_of(factor.upper_first), target_of(factor.upper_second));
    }
    return g;
}

} // namespace gl2star
