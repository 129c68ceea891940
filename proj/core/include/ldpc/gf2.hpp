#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ldpc/factor_graph.hpp"

namespace ldpc {

// Dense GF(2) matrix with 64-bit packed rows.
class gf2_matrix {
  public:
    gf2_matrix(int rows, int cols);
    static gf2_matrix from_sparse(const parity_check_matrix& h);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void xor_rows(int dst, int src);

    int rank() const;  // by elimination on a copy

  private:
    int rows_, cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

// Row-equivalent form whose last `rank` columns, after applying col_perm,
// are lower triangular with 1s on the diagonal. col_perm[p] is the original
// column stored at permuted position p; h_tilde is already permuted.
struct triangular_form {
    parity_check_matrix h_tilde;
    std::vector<std::int32_t> col_perm;
    int rank = 0;

    int block_length() const { return h_tilde.cols; }
    int message_length() const { return h_tilde.cols - rank; }
};

triangular_form triangularize(const parity_check_matrix& h);

// Systematic encoding by back-substitution; message bits are 0/1, the
// returned codeword is +/-1 (0 -> +1, 1 -> -1) and satisfies every original
// parity check.
std::vector<double> encode_systematic(const triangular_form& tf, std::span<const int> message);

}  // namespace ldpc
