#include "ldpc/factor_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

// Per-node socket owners: degree-d node contributes d consecutive slots.
std::vector<std::int32_t> socket_owners(const polynomial& node_counts, long long n_nodes) {
    std::vector<std::int32_t> owners;
    std::int32_t node = 0;
    for (std::size_t d = 1; d < node_counts.coeffs().size(); ++d) {
        const long long count = std::llround(node_counts.coeff(d));
        for (long long k = 0; k < count; ++k, ++node) {
            for (std::size_t s = 0; s < d; ++s) owners.push_back(node);
        }
    }
    // degree-0 nodes (if any) still occupy indices
    if (node > n_nodes) throw invalid_distribution("node counts disagree with node total");
    return owners;
}

std::vector<std::int32_t> build_csr(int n_nodes, std::size_t n_edges,
                                    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                                    bool by_var, std::vector<std::int32_t>& offsets) {
    offsets.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
    for (const auto& e : edges) {
        const std::int32_t node = by_var ? e.first : e.second;
        ++offsets[static_cast<std::size_t>(node) + 1];
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<std::int32_t> ids(n_edges);
    std::vector<std::int32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::int32_t node = by_var ? edges[e].first : edges[e].second;
        ids[static_cast<std::size_t>(cursor[static_cast<std::size_t>(node)]++)] =
            static_cast<std::int32_t>(e);
    }
    return ids;
}

}  // namespace

factor_graph::factor_graph(int n_var, int n_chk,
                           std::vector<std::pair<std::int32_t, std::int32_t>> edges)
    : n_var_(n_var), n_chk_(n_chk), edges_(std::move(edges)) {
    for (const auto& [v, c] : edges_) {
        if (v < 0 || v >= n_var_ || c < 0 || c >= n_chk_) {
            throw invalid_parameter("edge references an out-of-range node");
        }
    }
    var_edge_ids_ = build_csr(n_var_, edges_.size(), edges_, true, var_offsets_);
    chk_edge_ids_ = build_csr(n_chk_, edges_.size(), edges_, false, chk_offsets_);
}

std::span<const std::int32_t> factor_graph::var_edges(int v) const {
    return {var_edge_ids_.data() + var_offsets_[static_cast<std::size_t>(v)],
            var_edge_ids_.data() + var_offsets_[static_cast<std::size_t>(v) + 1]};
}

std::span<const std::int32_t> factor_graph::chk_edges(int c) const {
    return {chk_edge_ids_.data() + chk_offsets_[static_cast<std::size_t>(c)],
            chk_edge_ids_.data() + chk_offsets_[static_cast<std::size_t>(c) + 1]};
}

int factor_graph::var_degree(int v) const {
    return var_offsets_[static_cast<std::size_t>(v) + 1] - var_offsets_[static_cast<std::size_t>(v)];
}

int factor_graph::chk_degree(int c) const {
    return chk_offsets_[static_cast<std::size_t>(c) + 1] - chk_offsets_[static_cast<std::size_t>(c)];
}

factor_graph sample_ensemble(const node_perspective& np, std::uint64_t seed) {
    np.validate();
    const long long n_var = np.variable_count();
    const long long n_chk = np.check_count();
    std::vector<std::int32_t> var_sockets = socket_owners(np.lambda_nodes, n_var);
    std::vector<std::int32_t> chk_sockets = socket_owners(np.check_nodes, n_chk);
    if (var_sockets.size() != chk_sockets.size()) {
        throw invalid_distribution("socket counts differ between sides");
    }
    graph_rng rng(seed);
    for (std::size_t i = chk_sockets.size(); i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(chk_sockets[i - 1], chk_sockets[j]);
    }
    std::vector<std::pair<std::int32_t, std::int32_t>> edges(var_sockets.size());
    for (std::size_t i = 0; i < var_sockets.size(); ++i) {
        edges[i] = {var_sockets[i], chk_sockets[i]};
    }
    return {static_cast<int>(n_var), static_cast<int>(n_chk), std::move(edges)};
}

factor_graph sample_regular(int n, int d_v, int d_c, std::uint64_t seed) {
    if (n < 1 || d_v < 1 || d_c < 1) throw invalid_parameter("bad regular parameters");
    const long long sockets = static_cast<long long>(n) * d_v;
    if (sockets % d_c != 0) {
        throw invalid_parameter(std::to_string(n) + "*" + std::to_string(d_v) +
                                " sockets not divisible by d_c=" + std::to_string(d_c));
    }
    node_perspective np{
        polynomial::monomial(static_cast<std::size_t>(d_v), static_cast<double>(n)),
        polynomial::monomial(static_cast<std::size_t>(d_c), static_cast<double>(sockets / d_c))};
    return sample_ensemble(np, seed);
}

std::optional<int> girth(const factor_graph& g) {
    // BFS over the simple graph from every node; nodes 0..n_var-1 are
    // variables, n_var.. are checks.
    const int total = g.variable_count() + g.check_count();
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(total));
    {
        std::set<std::pair<std::int32_t, std::int32_t>> seen;
        for (const auto& [v, c] : g.edges()) {
            if (seen.insert({v, c}).second) {
                adj[static_cast<std::size_t>(v)].push_back(g.variable_count() + c);
                adj[static_cast<std::size_t>(g.variable_count() + c)].push_back(v);
            }
        }
    }
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(total));
    std::vector<std::int32_t> parent(static_cast<std::size_t>(total));
    for (int s = 0; s < total; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<std::int32_t> q;
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        q.push(s);
        while (!q.empty()) {
            const std::int32_t u = q.front();
            q.pop();
            if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (std::int32_t w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    best = std::min(best,
                                    dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace {

// One edge from every parallel pair and every 4-cycle, found by hashing
// check pairs per variable. Catches everything shorter than girth 6.
std::vector<std::int32_t> offending_edges(const factor_graph& g) {
    std::vector<std::int32_t> bad;
    std::set<std::pair<std::int32_t, std::int32_t>> edge_seen;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!edge_seen.insert(g.edges()[e]).second) bad.push_back(static_cast<std::int32_t>(e));
    }
    std::set<std::pair<std::int64_t, std::int64_t>> pair_seen;  // ((c1,c2), -) keyed
    for (int v = 0; v < g.variable_count(); ++v) {
        const auto es = g.var_edges(v);
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                std::int64_t c1 = g.edge_chk(es[i]);
                std::int64_t c2 = g.edge_chk(es[j]);
                if (c1 == c2) continue;  // parallel, handled above
                if (c1 > c2) std::swap(c1, c2);
                if (!pair_seen.insert({c1, c2}).second) bad.push_back(es[j]);
            }
        }
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    return bad;
}

}  // namespace

bool ensure_girth(factor_graph& g, int min_girth, std::uint64_t seed, int max_passes) {
    if (min_girth > 6) throw invalid_parameter("girth conditioning supports targets up to 6");
    graph_rng rng(seed);
    for (int pass = 0; pass < max_passes; ++pass) {
        std::vector<std::int32_t> bad = offending_edges(g);
        if (min_girth <= 4) {
            // only parallel edges matter; recompute accordingly
            bad.clear();
            std::set<std::pair<std::int32_t, std::int32_t>> edge_seen;
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                if (!edge_seen.insert(g.edges()[e]).second) {
                    bad.push_back(static_cast<std::int32_t>(e));
                }
            }
        }
        if (bad.empty()) return true;
        // swap check endpoints of each offender with a random partner edge
        auto edges = g.edges();
        for (std::int32_t a : bad) {
            std::size_t b = rng() % edges.size();
            while (b == static_cast<std::size_t>(a)) b = rng() % edges.size();
            std::swap(edges[static_cast<std::size_t>(a)].second, edges[b].second);
        }
        g = factor_graph(g.variable_count(), g.check_count(), std::move(edges));
    }
    return offending_edges(g).empty();
}

std::size_t parity_check_matrix::entry_count() const {
    std::size_t acc = 0;
    for (const auto& r : row_cols) acc += r.size();
    return acc;
}

parity_check_matrix to_parity_check(const factor_graph& g) {
    parity_check_matrix h;
    h.rows = g.check_count();
    h.cols = g.variable_count();
    h.row_cols.assign(static_cast<std::size_t>(h.rows), {});
    for (int c = 0; c < h.rows; ++c) {
        auto& row = h.row_cols[static_cast<std::size_t>(c)];
        for (std::int32_t e : g.chk_edges(c)) row.push_back(g.edge_var(e));
        std::sort(row.begin(), row.end());
        // odd multiplicity rule: pairs cancel
        std::vector<std::int32_t> reduced;
        for (std::size_t i = 0; i < row.size();) {
            std::size_t j = i;
            while (j < row.size() && row[j] == row[i]) ++j;
            if ((j - i) % 2 == 1) reduced.push_back(row[i]);
            i = j;
        }
        row = std::move(reduced);
    }
    return h;
}

std::size_t tree_sample::variable_count() const {
    std::size_t acc = 0;
    for (const auto& n : nodes) acc += n.is_variable ? 1 : 0;
    return acc;
}

std::size_t tree_sample::leaf_count_at_depth(int depth) const {
    std::size_t acc = 0;
    for (const auto& n : nodes) acc += n.depth == depth ? 1 : 0;
    return acc;
}

namespace {

int sample_child_count(const polynomial& edge_poly, double u) {
    // child count i with probability equal to the coefficient of x^i
    double cum = 0.0;
    const auto& c = edge_poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        cum += c[i];
        if (u < cum) return static_cast<int>(i);
    }
    return c.empty() ? 0 : static_cast<int>(c.size() - 1);
}

}  // namespace

tree_sample sample_tree(int ell, const edge_perspective& ep, std::uint64_t seed) {
    if (ell < 0) throw invalid_parameter("ell must be non-negative");
    ep.validate();
    graph_rng rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    tree_sample t;
    t.nodes.push_back({-1, true, 0, {}});
    std::vector<std::int32_t> frontier{0};
    for (int level = 0; level < ell; ++level) {
        std::vector<std::int32_t> next_vars;
        // attach check children to every variable leaf
        std::vector<std::int32_t> checks;
        for (std::int32_t v : frontier) {
            const int k = sample_child_count(ep.lambda, unif(rng));
            for (int i = 0; i < k; ++i) {
                const std::int32_t id = static_cast<std::int32_t>(t.nodes.size());
                t.nodes.push_back({v, false, t.nodes[static_cast<std::size_t>(v)].depth + 1, {}});
                t.nodes[static_cast<std::size_t>(v)].children.push_back(id);
                checks.push_back(id);
            }
        }
        // attach variable children to every new check leaf
        for (std::int32_t c : checks) {
            const int k = sample_child_count(ep.rho, unif(rng));
            for (int i = 0; i < k; ++i) {
                const std::int32_t id = static_cast<std::int32_t>(t.nodes.size());
                t.nodes.push_back({c, true, t.nodes[static_cast<std::size_t>(c)].depth + 1, {}});
                t.nodes[static_cast<std::size_t>(c)].children.push_back(id);
                next_vars.push_back(id);
            }
        }
        frontier = std::move(next_vars);
    }
    return t;
}

}  // namespace ldpc
