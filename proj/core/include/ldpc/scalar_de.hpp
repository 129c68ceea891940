#pragma once

#include <span>

#include "ldpc/degree_dist.hpp"
#include "ldpc/threshold.hpp"

namespace ldpc {

// One erasure-probability update: alpha * lambda(1 - rho(1 - x)).
double bec_de_step(double x, double alpha, const edge_perspective& ep);

// min over (0, 1] of x / lambda(1 - rho(1 - x)), grid scan plus golden
// refinement; accurate to 1e-7 in the value.
threshold_result bec_threshold(const edge_perspective& ep);

// (1 - gamma) / (1 - gamma^(d_c - 1))^(d_v - 1) with gamma the positive root
// of ((d_v-1)(d_c-1) - 1) x^(d_c-2) - sum_{i<d_c-2} x^i. Requires d_v >= 3.
double bec_threshold_regular_closed_form(int d_v, int d_c);

double gallager_a_de_step(double p_i, double p0, int d_v, int d_c);
threshold_result gallager_a_threshold(int d_v, int d_c);

// Smallest b in ((d_v-1)/2, d_v-1] with
// (1-p0)/p0 <= ((1+s)/(1-s))^(2b-d_v+1), s = (1-2 p_i)^(d_c-1);
// d_v-1 when nothing in range qualifies.
int optimal_cutoff(double p_i, double p0, int d_v, int d_c);

double gallager_b_de_step(double p_i, double p0, int d_v, int d_c, int b);

// Threshold with the per-iteration optimal cutoff.
threshold_result gallager_b_threshold(int d_v, int d_c);

// Per-degree cutoff for the irregular recursion, driven by s = rho(1-2 p_i).
int irregular_optimal_cutoff(double s, double p0, int degree);

// Degree-averaged flipping recursion; cutoffs[j] applies to variable degree
// j (index 0 and 1 unused). Empty cutoffs selects the optimal rule.
double irregular_b_de_step(double p_i, double p0, const edge_perspective& ep,
                           std::span<const int> cutoffs = {});

threshold_result irregular_b_threshold(const edge_perspective& ep);

}  // namespace ldpc
