#include "ldpc/gf2.hpp"

#include <algorithm>
#include <string>

#include "ldpc/errors.hpp"

namespace ldpc {

gf2_matrix::gf2_matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((static_cast<std::size_t>(cols) + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * words_per_row_, 0) {}

gf2_matrix gf2_matrix::from_sparse(const parity_check_matrix& h) {
    gf2_matrix m(h.rows, h.cols);
    for (int r = 0; r < h.rows; ++r) {
        for (std::int32_t c : h.row_cols[static_cast<std::size_t>(r)]) m.set(r, c, true);
    }
    return m;
}

bool gf2_matrix::get(int r, int c) const {
    const std::size_t w = static_cast<std::size_t>(r) * words_per_row_ +
                          static_cast<std::size_t>(c) / 64;
    return (bits_[w] >> (static_cast<std::size_t>(c) % 64)) & 1ULL;
}

void gf2_matrix::set(int r, int c, bool value) {
    const std::size_t w = static_cast<std::size_t>(r) * words_per_row_ +
                          static_cast<std::size_t>(c) / 64;
    const std::uint64_t mask = 1ULL << (static_cast<std::size_t>(c) % 64);
    if (value) {
        bits_[w] |= mask;
    } else {
        bits_[w] &= ~mask;
    }
}

void gf2_matrix::xor_rows(int dst, int src) {
    std::uint64_t* d = bits_.data() + static_cast<std::size_t>(dst) * words_per_row_;
    const std::uint64_t* s = bits_.data() + static_cast<std::size_t>(src) * words_per_row_;
    for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

int gf2_matrix::rank() const {
    gf2_matrix work = *this;
    int rank = 0;
    for (int c = 0; c < work.cols_ && rank < work.rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < work.rows_; ++r) {
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (std::size_t w = 0; w < work.words_per_row_; ++w) {
                std::swap(work.bits_[static_cast<std::size_t>(pivot) * work.words_per_row_ + w],
                          work.bits_[static_cast<std::size_t>(rank) * work.words_per_row_ + w]);
            }
        }
        for (int r = 0; r < work.rows_; ++r) {
            if (r != rank && work.get(r, c)) work.xor_rows(r, rank);
        }
        ++rank;
    }
    return rank;
}

triangular_form triangularize(const parity_check_matrix& h) {
    gf2_matrix m = gf2_matrix::from_sparse(h);
    const int rows = h.rows, cols = h.cols;

    // Sweep columns right to left. A pivot row claims the current column and
    // fills the triangular block from the bottom up; the column is then
    // cleared from every still-unassigned row, so assigned rows keep zeros to
    // the right of their diagonal.
    std::vector<std::int32_t> pivot_rows;  // bottom-up order
    std::vector<std::int32_t> pivot_cols;  // matching original columns
    std::vector<bool> assigned(static_cast<std::size_t>(rows), false);
    for (int c = cols - 1; c >= 0 && static_cast<int>(pivot_rows.size()) < rows; --c) {
        int pivot = -1;
        for (int r = 0; r < rows; ++r) {
            if (!assigned[static_cast<std::size_t>(r)] && m.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        assigned[static_cast<std::size_t>(pivot)] = true;
        pivot_rows.push_back(pivot);
        pivot_cols.push_back(c);
        for (int r = 0; r < rows; ++r) {
            if (!assigned[static_cast<std::size_t>(r)] && m.get(r, c)) m.xor_rows(r, pivot);
        }
    }
    const int rank = static_cast<int>(pivot_rows.size());

    // Permutation: non-pivot columns first (ascending), pivot columns last in
    // ascending order so the bottom-right block comes out lower triangular.
    std::vector<bool> is_pivot_col(static_cast<std::size_t>(cols), false);
    for (std::int32_t c : pivot_cols) is_pivot_col[static_cast<std::size_t>(c)] = true;
    triangular_form tf;
    tf.rank = rank;
    tf.col_perm.reserve(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot_col[static_cast<std::size_t>(c)]) tf.col_perm.push_back(c);
    }
    for (int c = 0; c < cols; ++c) {
        if (is_pivot_col[static_cast<std::size_t>(c)]) tf.col_perm.push_back(c);
    }
    std::vector<std::int32_t> perm_of_col(static_cast<std::size_t>(cols));
    for (int p = 0; p < cols; ++p) {
        perm_of_col[static_cast<std::size_t>(tf.col_perm[static_cast<std::size_t>(p)])] =
            static_cast<std::int32_t>(p);
    }

    // Emit rows top-down: pivot_rows is bottom-up, so reverse it.
    tf.h_tilde.rows = rank;
    tf.h_tilde.cols = cols;
    tf.h_tilde.row_cols.assign(static_cast<std::size_t>(rank), {});
    for (int i = 0; i < rank; ++i) {
        const int r = pivot_rows[static_cast<std::size_t>(rank - 1 - i)];
        auto& out = tf.h_tilde.row_cols[static_cast<std::size_t>(i)];
        for (int c = 0; c < cols; ++c) {
            if (m.get(r, c)) out.push_back(perm_of_col[static_cast<std::size_t>(c)]);
        }
        std::sort(out.begin(), out.end());
    }
    return tf;
}

std::vector<double> encode_systematic(const triangular_form& tf, std::span<const int> message) {
    const int n = tf.block_length();
    const int k = tf.message_length();
    if (static_cast<int>(message.size()) != k) {
        throw invalid_parameter("message length " + std::to_string(message.size()) +
                                " != " + std::to_string(k));
    }
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
        if (message[static_cast<std::size_t>(i)] != 0 && message[static_cast<std::size_t>(i)] != 1) {
            throw invalid_parameter("message bits must be 0/1");
        }
        x[static_cast<std::size_t>(i)] = message[static_cast<std::size_t>(i)];
    }
    // Row i's diagonal sits at permuted column k+i; everything else in the
    // row is strictly to the left, so back-substitution runs top-down.
    for (int i = 0; i < tf.rank; ++i) {
        int parity = 0;
        for (std::int32_t c : tf.h_tilde.row_cols[static_cast<std::size_t>(i)]) {
            if (c != k + i) parity ^= x[static_cast<std::size_t>(c)];
        }
        x[static_cast<std::size_t>(k + i)] = parity;
    }
    std::vector<double> codeword(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        codeword[static_cast<std::size_t>(tf.col_perm[static_cast<std::size_t>(p)])] =
            x[static_cast<std::size_t>(p)] ? -1.0 : 1.0;
    }
    return codeword;
}

}  // namespace ldpc
