#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/decoders.hpp"
#include "ldpc/degree_dist.hpp"
#include "ldpc/factor_graph.hpp"

namespace ldpc {

// Repeat part of an IRA code: bipartite multigraph between k information
// nodes and n check nodes; the accumulator over check outputs is implied by
// the check index order.
class ira_graph {
  public:
    ira_graph(int k, int n, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

    static ira_graph sample(int k, const edge_perspective& ep, std::uint64_t seed);

    int info_count() const { return k_; }
    int check_count() const { return n_; }
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
    std::span<const std::int32_t> info_edges(int v) const;
    std::span<const std::int32_t> check_edges(int c) const;
    std::int32_t edge_info(std::int32_t e) const { return edges_[static_cast<std::size_t>(e)].first; }
    std::int32_t edge_check(std::int32_t e) const { return edges_[static_cast<std::size_t>(e)].second; }

  private:
    int k_;
    int n_;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
    std::vector<std::int32_t> info_offsets_, info_edge_ids_;
    std::vector<std::int32_t> chk_offsets_, chk_edge_ids_;
};

// R_i = fraction of check nodes with i information neighbors; R(x) is the
// normalized integral of rho.
struct check_series {
    polynomial r;

    static check_series from_edge_perspective(const edge_perspective& ep);
};

// v_i = parity of the message bits on check i, w_j = prod_{i<=j} v_i.
std::vector<double> ira_encode(const ira_graph& g, std::span<const double> message);

// int(lambda)/int(rho); rejects infeasible pairs with rate > 1.
double ira_rate(const edge_perspective& ep);

struct ira_condition_report {
    bool satisfied = false;
    double min_slack = 0.0;
    double argmin_x = 0.0;
    // rho(0) = 0 forces equality at x = 1, where the success condition
    // demands strict inequality; evaluation stays on the open interior and
    // the boundary case is reported here instead of failing the check.
    bool boundary_equality = false;
};

// Checks lambda(1 - [(1-a)/(1-a R(1-x))]^2 rho(1-x)) < x on a grid over
// (0, 1) with geometric refinement toward both endpoints.
ira_condition_report ira_success_condition(const edge_perspective& ep, double alpha,
                                           int grid_points = 10000);

// Peeling over the joint graphical model: check i constrains its information
// neighbors together with code nodes x_{i-1} and x_i. Returns the message
// estimate; residual counts unresolved message bits.
decode_result ira_decode_bec(const ira_graph& g, const received_word& rw, int max_iter);

}  // namespace ldpc
