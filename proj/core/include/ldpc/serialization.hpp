#pragma once

#include <iosfwd>
#include <string>

#include "ldpc/channel.hpp"
#include "ldpc/degree_dist.hpp"

namespace ldpc {

// Degree pairs serialize as JSON with a "perspective" header field:
//   {"perspective": "edge", "lambda": [c0, c1, ...], "rho": [...]}
// Index i holds the coefficient of x^i; the edge perspective stores the
// fraction for degree i+1 at index i.
std::string degree_pair_to_json(const edge_perspective& ep);
std::string degree_pair_to_json(const node_perspective& np);

// Accepts either perspective; node-perspective files are converted.
edge_perspective edge_perspective_from_json(const std::string& text);

void save_degree_pair(const std::string& path, const edge_perspective& ep);
edge_perspective load_degree_pair(const std::string& path);

// Received words as CSV rows "index,kind,value" with kind one of
// known/erased/real.
void write_received_csv(std::ostream& os, const received_word& rw);
received_word read_received_csv(std::istream& is, const channel_model& ch);

}  // namespace ldpc
