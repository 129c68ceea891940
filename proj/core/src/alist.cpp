#include "ldpc/alist.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "ldpc/errors.hpp"

namespace ldpc {

void write_alist(std::ostream& os, const parity_check_matrix& h) {
    const int n = h.cols, m = h.rows;
    std::vector<std::vector<std::int32_t>> col_rows(static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r) {
        for (std::int32_t c : h.row_cols[static_cast<std::size_t>(r)]) {
            col_rows[static_cast<std::size_t>(c)].push_back(r);
        }
    }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_rows) max_col = std::max(max_col, v.size());
    for (const auto& v : h.row_cols) max_row = std::max(max_row, v.size());

    os << n << ' ' << m << '\n';
    os << max_col << ' ' << max_row << '\n';
    for (int c = 0; c < n; ++c) {
        os << col_rows[static_cast<std::size_t>(c)].size() << (c + 1 < n ? ' ' : '\n');
    }
    for (int r = 0; r < m; ++r) {
        os << h.row_cols[static_cast<std::size_t>(r)].size() << (r + 1 < m ? ' ' : '\n');
    }
    for (int c = 0; c < n; ++c) {
        const auto& v = col_rows[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < max_col; ++i) {
            os << (i < v.size() ? v[i] + 1 : 0) << (i + 1 < max_col ? ' ' : '\n');
        }
    }
    for (int r = 0; r < m; ++r) {
        const auto& v = h.row_cols[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < max_row; ++i) {
            os << (i < v.size() ? v[i] + 1 : 0) << (i + 1 < max_row ? ' ' : '\n');
        }
    }
}

parity_check_matrix read_alist(std::istream& is) {
    int n = 0, m = 0;
    long long max_col = 0, max_row = 0;
    if (!(is >> n >> m >> max_col >> max_row) || n <= 0 || m <= 0) {
        throw config_error("bad alist header");
    }
    std::vector<int> col_deg(static_cast<std::size_t>(n)), row_deg(static_cast<std::size_t>(m));
    for (auto& d : col_deg) {
        if (!(is >> d)) throw config_error("truncated alist column degrees");
    }
    for (auto& d : row_deg) {
        if (!(is >> d)) throw config_error("truncated alist row degrees");
    }
    parity_check_matrix h;
    h.rows = m;
    h.cols = n;
    h.row_cols.assign(static_cast<std::size_t>(m), {});
    for (int c = 0; c < n; ++c) {
        for (long long i = 0; i < max_col; ++i) {
            long long r = 0;
            if (!(is >> r)) throw config_error("truncated alist column lists");
            if (r == 0) continue;  // padding
            if (r < 1 || r > m) throw config_error("alist row index out of range");
            h.row_cols[static_cast<std::size_t>(r - 1)].push_back(c);
        }
    }
    // The row lists repeat the same information; consume and cross-check.
    for (int r = 0; r < m; ++r) {
        std::vector<std::int32_t> cols;
        for (long long i = 0; i < max_row; ++i) {
            long long c = 0;
            if (!(is >> c)) throw config_error("truncated alist row lists");
            if (c == 0) continue;
            if (c < 1 || c > n) throw config_error("alist column index out of range");
            cols.push_back(static_cast<std::int32_t>(c - 1));
        }
        std::sort(cols.begin(), cols.end());
        auto& expect = h.row_cols[static_cast<std::size_t>(r)];
        std::sort(expect.begin(), expect.end());
        if (cols != expect) throw config_error("alist row/column lists disagree");
    }
    return h;
}

void save_alist(const std::string& path, const parity_check_matrix& h) {
    std::ofstream f(path);
    if (!f) throw config_error("cannot open " + path + " for writing");
    write_alist(f, h);
}

parity_check_matrix load_alist(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open " + path);
    return read_alist(f);
}

}  // namespace ldpc
