#pragma once

#include <iosfwd>
#include <string>

#include "ldpc/factor_graph.hpp"

namespace ldpc {

// MacKay alist text format: dimensions line (n m), max-degree line, the two
// per-node degree lists, then 1-indexed neighbor lists padded with zeros.
void write_alist(std::ostream& os, const parity_check_matrix& h);
parity_check_matrix read_alist(std::istream& is);

void save_alist(const std::string& path, const parity_check_matrix& h);
parity_check_matrix load_alist(const std::string& path);

}  // namespace ldpc
