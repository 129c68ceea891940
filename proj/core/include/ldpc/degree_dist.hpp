#pragma once

#include "ldpc/polynomial.hpp"

namespace ldpc {

// Node-perspective degree pair: coefficient of x^i in lambda_nodes is the
// number of degree-i variable nodes, likewise check_nodes for check nodes.
struct node_perspective {
    polynomial lambda_nodes;  // Lambda
    polynomial check_nodes;   // P

    void validate() const;
    long long variable_count() const;
    long long check_count() const;
    long long edge_count() const;
};

// Edge-perspective degree pair: coefficient of x^i is the fraction of edges
// incident on nodes of degree i+1. lambda(1) = rho(1) = 1 within 1e-12.
struct edge_perspective {
    polynomial lambda;
    polynomial rho;

    void validate() const;
};

edge_perspective regular_pair(int d_v, int d_c);

edge_perspective node_to_edge(const node_perspective& np);

// Inverse map for n variable nodes. Node counts are rounded to nearest
// integers; any edge-count imbalance left by rounding is repaired by bumping
// the degree of one highest-degree node on the deficient side.
node_perspective edge_to_node(long long n, const edge_perspective& ep);

// 1 - int(rho)/int(lambda)
double designed_rate(const edge_perspective& ep);

double harmonic_number(int m);

// Unnormalized series behind the two capacity-achieving recipes.
polynomial tornado_lambda_hat(int big_n, double theta);
polynomial check_concentrated_lambda_hat(int big_n, double theta);

// Heavy-tail/Poisson pair with theta = H(N-1)/alpha. rho is the Taylor
// series of exp(theta (x-1)) truncated once the omitted tail mass drops
// below 1e-12, then renormalized so rho(1) = 1.
edge_perspective tornado_pair(int big_n, double alpha);

// lambda = first N terms of 1 - (1-x)^theta, normalized; rho = x^(1/theta).
// Requires 1/theta to be a positive integer.
edge_perspective check_concentrated_pair(int big_n, double theta);

// lambda_hat(1 - rho(1 - x)) - x; zero for untruncated recipe pairs and
// non-positive for truncated ones.
double recipe_residual(const polynomial& lambda_hat, const polynomial& rho, double x);

// Largest achievable rate on BSC(p) with maximum check degree d_c:
// 1 - H(p)/H(p_dc), p_dc = (1 + (1-2p)^d_c)/2.
double gallager_rate_bound(double p, int d_c);

}  // namespace ldpc
