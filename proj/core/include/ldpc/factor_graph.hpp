#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ldpc/degree_dist.hpp"

namespace ldpc {

// Bipartite multigraph of variable and check nodes with socket-level edges.
// Immutable once built; decoders hold their own message state, so one graph
// can serve many concurrent decode calls.
class factor_graph {
  public:
    factor_graph(int n_var, int n_chk, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

    int variable_count() const { return n_var_; }
    int check_count() const { return n_chk_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }

    // CSR adjacency: edge ids incident on a node, in socket order.
    std::span<const std::int32_t> var_edges(int v) const;
    std::span<const std::int32_t> chk_edges(int c) const;
    int var_degree(int v) const;
    int chk_degree(int c) const;

    std::int32_t edge_var(std::int32_t e) const { return edges_[static_cast<std::size_t>(e)].first; }
    std::int32_t edge_chk(std::int32_t e) const { return edges_[static_cast<std::size_t>(e)].second; }

  private:
    int n_var_;
    int n_chk_;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
    std::vector<std::int32_t> var_offsets_, var_edge_ids_;
    std::vector<std::int32_t> chk_offsets_, chk_edge_ids_;
};

// Uniform random matching between variable and check sockets. Sockets are
// allocated to nodes in index order (variables of lower degree first); all
// randomness lives in the Fisher-Yates permutation of check sockets.
factor_graph sample_ensemble(const node_perspective& np, std::uint64_t seed);

factor_graph sample_regular(int n, int d_v, int d_c, std::uint64_t seed);

// Shortest cycle length of the underlying simple graph (parallel edges
// collapsed); nullopt for forests. Always even and at least 4.
std::optional<int> girth(const factor_graph& g);

// Rewire edges by random socket swaps until the graph is simple and has
// girth >= min_girth; gives up after max_passes sweeps. Pure whole-graph
// rejection is hopeless here: a (3,6) ensemble at n = 1000 contains short
// cycles with overwhelming probability.
bool ensure_girth(factor_graph& g, int min_girth, std::uint64_t seed, int max_passes = 100);

// Sparse GF(2) parity-check matrix; entry (i, j) present iff check i and
// variable j are joined by an odd number of edges.
struct parity_check_matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::int32_t>> row_cols;  // sorted, unique

    std::size_t entry_count() const;
};

parity_check_matrix to_parity_check(const factor_graph& g);

// Rooted tree of alternating variable/check layers; node 0 is the variable
// root, layers alternate, depth <= 2*ell.
struct tree_sample {
    struct node {
        std::int32_t parent;  // -1 for the root
        bool is_variable;
        std::int32_t depth;
        std::vector<std::int32_t> children;
    };
    std::vector<node> nodes;

    std::size_t variable_count() const;
    std::size_t leaf_count_at_depth(int depth) const;
};

tree_sample sample_tree(int ell, const edge_perspective& ep, std::uint64_t seed);

}  // namespace ldpc
