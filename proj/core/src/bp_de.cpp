#include "ldpc/bp_de.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

// Band-loop masses below this are dropped; the discarded total is bounded by
// bins * cut, three orders of magnitude under the 1e-9 mass tolerance.
constexpr double kRowCut = 1e-15;

// Band half-width in LLR units. Outside the band the pairwise combine
// m = 2 atanh(tanh(a/2) tanh(b/2)) equals sign(a) * b up to
// ln(1 + e^-8) < 3.4e-4, under the grid step, so far pairs are handled as
// exact sign-copies with prefix sums.
constexpr double kBandLlr = 8.0;

double log1p_exp_neg(double x) {  // ln(1 + e^-x) for x >= 0
    return x > 745.0 ? 0.0 : std::log1p(std::exp(-x));
}

// Exact pairwise check combine via the boxplus identity, stable for large
// magnitudes where tanh saturates.
double boxplus(double a, double b) {
    const double mag = std::min(std::abs(a), std::abs(b));
    const double sign = (a < 0.0) == (b < 0.0) ? 1.0 : -1.0;
    return sign * mag + log1p_exp_neg(std::abs(a + b)) - log1p_exp_neg(std::abs(a - b));
}

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

llr_grid llr_grid::symmetric(double max_llr, double step) {
    if (!(step > 0.0) || !(max_llr > step)) throw invalid_parameter("bad LLR grid");
    const double half = max_llr / step;
    if (std::abs(half - std::round(half)) > 1e-9) {
        throw invalid_parameter("grid max must be a multiple of the step");
    }
    return {step, static_cast<int>(std::llround(half))};
}

double quantized_density::total_mass() const {
    double acc = mass_pos_inf + mass_neg_inf;
    for (double m : pmf) acc += m;
    return acc;
}

double quantized_density::error_mass() const {
    double acc = mass_neg_inf;
    for (int k = 0; k < grid.center(); ++k) acc += pmf[static_cast<std::size_t>(k)];
    return acc + 0.5 * pmf[static_cast<std::size_t>(grid.center())];
}

double quantized_density::mean() const {
    double acc = 0.0;
    for (int k = 0; k < grid.bins(); ++k) acc += grid.value(k) * pmf[static_cast<std::size_t>(k)];
    return acc;
}

void quantized_density::add_scaled(const quantized_density& other, double s) {
    if (!(other.grid == grid)) throw invalid_parameter("grid mismatch");
    mass_pos_inf += s * other.mass_pos_inf;
    mass_neg_inf += s * other.mass_neg_inf;
    for (std::size_t k = 0; k < pmf.size(); ++k) pmf[k] += s * other.pmf[k];
}

double quantized_density::normalize() {
    const double total = total_mass();
    if (total > 0.0) {
        const double inv = 1.0 / total;
        mass_pos_inf *= inv;
        mass_neg_inf *= inv;
        for (double& m : pmf) m *= inv;
    }
    return total;
}

void quantized_density::deposit(double llr_value, double mass) {
    if (mass == 0.0) return;
    if (std::isinf(llr_value)) {
        (llr_value > 0.0 ? mass_pos_inf : mass_neg_inf) += mass;
        return;
    }
    const int last = grid.bins() - 1;
    double kf = llr_value / grid.step + grid.center();
    kf = std::clamp(kf, 0.0, static_cast<double>(last));
    const int k = std::min(static_cast<int>(kf), last - 1);
    const double frac = kf - k;
    pmf[static_cast<std::size_t>(k)] += mass * (1.0 - frac);
    pmf[static_cast<std::size_t>(k) + 1] += mass * frac;
}

struct bp_engine::impl {
    llr_grid grid;
    int bins;
    int center;
    int band;  // half-width in bins

    // Banded combine table: per row, one or two j-intervals with packed
    // (bin, split) entries laid out consecutively.
    std::vector<std::array<std::int32_t, 4>> intervals;  // lo1, hi1, lo2, hi2
    std::vector<std::size_t> row_offset;
    std::vector<std::uint16_t> out_bin;
    std::vector<std::uint8_t> out_frac;
    double w_lut0[256], w_lut1[256];

    // FFT workspace for variable-side convolutions
    int nfft = 0;
    double* buf_a = nullptr;
    double* buf_b = nullptr;
    fftw_complex* spec_a = nullptr;
    fftw_complex* spec_b = nullptr;
    fftw_plan plan_a{}, plan_b{}, plan_inv{};

    mutable std::mutex mu;

    explicit impl(const llr_grid& g) : grid(g), bins(g.bins()), center(g.center()) {
        band = static_cast<int>(std::lround(kBandLlr / g.step));
        build_table();
        {
            std::lock_guard<std::mutex> lock(fftw_mutex());
            nfft = 1;
            while (nfft < 2 * bins - 1) nfft *= 2;
            buf_a = fftw_alloc_real(static_cast<std::size_t>(nfft));
            buf_b = fftw_alloc_real(static_cast<std::size_t>(nfft));
            spec_a = fftw_alloc_complex(static_cast<std::size_t>(nfft / 2 + 1));
            spec_b = fftw_alloc_complex(static_cast<std::size_t>(nfft / 2 + 1));
            plan_a = fftw_plan_dft_r2c_1d(nfft, buf_a, spec_a, FFTW_ESTIMATE);
            plan_b = fftw_plan_dft_r2c_1d(nfft, buf_b, spec_b, FFTW_ESTIMATE);
            plan_inv = fftw_plan_dft_c2r_1d(nfft, spec_a, buf_a, FFTW_ESTIMATE);
        }
        for (int t = 0; t < 256; ++t) {
            w_lut0[t] = static_cast<double>(255 - t) / 255.0;
            w_lut1[t] = static_cast<double>(t) / 255.0;
        }
    }

    ~impl() {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan_a);
        fftw_destroy_plan(plan_b);
        fftw_destroy_plan(plan_inv);
        fftw_free(buf_a);
        fftw_free(buf_b);
        fftw_free(spec_a);
        fftw_free(spec_b);
    }

    void build_table() {
        intervals.assign(static_cast<std::size_t>(bins), {0, -1, 0, -1});
        row_offset.assign(static_cast<std::size_t>(bins) + 1, 0);
        // size pass
        for (int i = 0; i < bins; ++i) {
            const int a = std::abs(i - center);
            const int lo_abs = std::max(0, a - band);
            const int hi_abs = std::min(a + band, center);
            auto& iv = intervals[static_cast<std::size_t>(i)];
            if (lo_abs == 0) {
                iv = {center - hi_abs, center + hi_abs, 0, -1};
            } else {
                iv = {center - hi_abs, center - lo_abs, center + lo_abs, center + hi_abs};
            }
            std::size_t count = static_cast<std::size_t>(iv[1] - iv[0] + 1);
            if (iv[3] >= iv[2]) count += static_cast<std::size_t>(iv[3] - iv[2] + 1);
            row_offset[static_cast<std::size_t>(i) + 1] =
                row_offset[static_cast<std::size_t>(i)] + count;
        }
        out_bin.resize(row_offset.back());
        out_frac.resize(row_offset.back());
        const int last = bins - 1;
        for (int i = 0; i < bins; ++i) {
            const double vi = grid.value(i);
            std::size_t ent = row_offset[static_cast<std::size_t>(i)];
            const auto& iv = intervals[static_cast<std::size_t>(i)];
            auto fill = [&](int lo, int hi) {
                for (int j = lo; j <= hi; ++j, ++ent) {
                    const double u = boxplus(vi, grid.value(j));
                    double kf = u / grid.step + center;
                    kf = std::clamp(kf, 0.0, static_cast<double>(last));
                    int k = std::min(static_cast<int>(kf), last - 1);
                    const double frac = kf - k;
                    out_bin[ent] = static_cast<std::uint16_t>(k);
                    out_frac[ent] = static_cast<std::uint8_t>(std::lround(frac * 255.0));
                }
            };
            fill(iv[0], iv[1]);
            if (iv[3] >= iv[2]) fill(iv[2], iv[3]);
        }
    }

    // suffix masses used by the sign-copy far field; index m in [0, center+1],
    // entry center+1 holds only the infinite mass
    void suffix_masses(const quantized_density& d, std::vector<double>& up_pos,
                       std::vector<double>& up_neg) const {
        up_pos.assign(static_cast<std::size_t>(center) + 2, 0.0);
        up_neg.assign(static_cast<std::size_t>(center) + 2, 0.0);
        up_pos[static_cast<std::size_t>(center) + 1] = d.mass_pos_inf;
        up_neg[static_cast<std::size_t>(center) + 1] = d.mass_neg_inf;
        for (int m = center; m >= 0; --m) {
            up_pos[static_cast<std::size_t>(m)] =
                up_pos[static_cast<std::size_t>(m) + 1] + d.pmf[static_cast<std::size_t>(center + m)];
            up_neg[static_cast<std::size_t>(m)] =
                up_neg[static_cast<std::size_t>(m) + 1] + d.pmf[static_cast<std::size_t>(center - m)];
        }
    }

    quantized_density check_combine(const quantized_density& p, const quantized_density& q) const {
        quantized_density out(grid);
        out.mass_pos_inf = p.mass_pos_inf * q.mass_pos_inf + p.mass_neg_inf * q.mass_neg_inf;
        out.mass_neg_inf = p.mass_pos_inf * q.mass_neg_inf + p.mass_neg_inf * q.mass_pos_inf;

        std::vector<double> pp, pn, qp, qn;
        suffix_masses(p, pp, pn);
        suffix_masses(q, qp, qn);
        const int inf_idx = center + 1;

        // far field: the larger magnitude acts as a pure sign flip
        for (int j = 0; j < bins; ++j) {
            const double qj = q.pmf[static_cast<std::size_t>(j)];
            if (qj == 0.0) continue;
            const int m = std::min(std::abs(j - center) + band + 1, inf_idx);
            out.pmf[static_cast<std::size_t>(j)] += qj * pp[static_cast<std::size_t>(m)];
            out.pmf[static_cast<std::size_t>(2 * center - j)] += qj * pn[static_cast<std::size_t>(m)];
        }
        for (int i = 0; i < bins; ++i) {
            const double pi = p.pmf[static_cast<std::size_t>(i)];
            if (pi == 0.0) continue;
            const int m = std::min(std::abs(i - center) + band + 1, inf_idx);
            out.pmf[static_cast<std::size_t>(i)] += pi * qp[static_cast<std::size_t>(m)];
            out.pmf[static_cast<std::size_t>(2 * center - i)] += pi * qn[static_cast<std::size_t>(m)];
        }

        // band: table-driven with two-bin mass splitting
        int q_lo = 0, q_hi = bins - 1;
        while (q_lo < bins && q.pmf[static_cast<std::size_t>(q_lo)] <= kRowCut) ++q_lo;
        while (q_hi >= 0 && q.pmf[static_cast<std::size_t>(q_hi)] <= kRowCut) --q_hi;
        if (q_lo > q_hi) return out;

        auto band_rows = [&](int row_begin, int row_end, double* acc) {
            for (int i = row_begin; i < row_end; ++i) {
                const double pi = p.pmf[static_cast<std::size_t>(i)];
                if (pi <= kRowCut) continue;
                const auto& iv = intervals[static_cast<std::size_t>(i)];
                const std::size_t base = row_offset[static_cast<std::size_t>(i)];
                auto run = [&](int lo, int hi, std::size_t ent0) {
                    int jl = std::max(lo, q_lo), jh = std::min(hi, q_hi);
                    std::size_t ent = ent0 + static_cast<std::size_t>(jl - lo);
                    const double* qrow = q.pmf.data();
                    for (int j = jl; j <= jh; ++j, ++ent) {
                        const double m = pi * qrow[j];
                        const int k = out_bin[ent];
                        const int t = out_frac[ent];
                        acc[k] += m * w_lut0[t];
                        acc[k + 1] += m * w_lut1[t];
                    }
                };
                run(iv[0], iv[1], base);
                if (iv[3] >= iv[2]) {
                    run(iv[2], iv[3], base + static_cast<std::size_t>(iv[1] - iv[0] + 1));
                }
            }
        };
#ifdef _OPENMP
        if (bins > 4096) {
            std::vector<double> half(static_cast<std::size_t>(bins), 0.0);
            const int mid = bins / 2;
#pragma omp parallel sections num_threads(2)
            {
#pragma omp section
                band_rows(0, mid, out.pmf.data());
#pragma omp section
                band_rows(mid, bins, half.data());
            }
            for (int k = 0; k < bins; ++k) {
                out.pmf[static_cast<std::size_t>(k)] += half[static_cast<std::size_t>(k)];
            }
        } else {
            band_rows(0, bins, out.pmf.data());
        }
#else
        band_rows(0, bins, out.pmf.data());
#endif
        return out;
    }

    quantized_density var_convolve(const quantized_density& p, const quantized_density& q) const {
        quantized_density out(grid);
        double p_fin = 0.0, q_fin = 0.0;
        for (double m : p.pmf) p_fin += m;
        for (double m : q.pmf) q_fin += m;
        out.mass_pos_inf =
            p.mass_pos_inf * (q_fin + q.mass_pos_inf) + q.mass_pos_inf * p_fin;
        out.mass_neg_inf =
            p.mass_neg_inf * (q_fin + q.mass_neg_inf) + q.mass_neg_inf * p_fin;
        // opposing certainties cancel to LLR 0
        out.pmf[static_cast<std::size_t>(center)] +=
            p.mass_pos_inf * q.mass_neg_inf + p.mass_neg_inf * q.mass_pos_inf;

        if (p_fin == 0.0 || q_fin == 0.0) return out;

        auto support = [&](const quantized_density& d, int& lo, int& hi) {
            lo = 0;
            hi = bins - 1;
            while (lo < bins && d.pmf[static_cast<std::size_t>(lo)] == 0.0) ++lo;
            while (hi >= 0 && d.pmf[static_cast<std::size_t>(hi)] == 0.0) --hi;
        };
        int plo, phi, qlo, qhi;
        support(p, plo, phi);
        support(q, qlo, qhi);

        auto fold = [&](int conv_index, double mass) {
            const int k = std::clamp(conv_index - center, 0, bins - 1);
            out.pmf[static_cast<std::size_t>(k)] += mass;
        };

        const long long p_nnz = phi - plo + 1, q_nnz = qhi - qlo + 1;
        if (std::min(p_nnz, q_nnz) <= 8) {
            const bool p_small = p_nnz <= q_nnz;
            const auto& small = p_small ? p : q;
            const auto& big = p_small ? q : p;
            const int slo = p_small ? plo : qlo, shi = p_small ? phi : qhi;
            const int blo = p_small ? qlo : plo, bhi = p_small ? qhi : phi;
            for (int i = slo; i <= shi; ++i) {
                const double mi = small.pmf[static_cast<std::size_t>(i)];
                if (mi == 0.0) continue;
                for (int j = blo; j <= bhi; ++j) {
                    const double mj = big.pmf[static_cast<std::size_t>(j)];
                    if (mj != 0.0) fold(i + j, mi * mj);
                }
            }
            return out;
        }

        std::fill(buf_a, buf_a + nfft, 0.0);
        std::fill(buf_b, buf_b + nfft, 0.0);
        std::copy(p.pmf.begin(), p.pmf.end(), buf_a);
        std::copy(q.pmf.begin(), q.pmf.end(), buf_b);
        fftw_execute(plan_a);
        fftw_execute(plan_b);
        for (int k = 0; k <= nfft / 2; ++k) {
            const double re = spec_a[k][0] * spec_b[k][0] - spec_a[k][1] * spec_b[k][1];
            const double im = spec_a[k][0] * spec_b[k][1] + spec_a[k][1] * spec_b[k][0];
            spec_a[k][0] = re;
            spec_a[k][1] = im;
        }
        fftw_execute(plan_inv);
        const double scale = 1.0 / nfft;
        for (int idx = 0; idx < 2 * bins - 1; ++idx) {
            const double mass = buf_a[idx] * scale;
            if (mass > 0.0) fold(idx, mass);
        }
        return out;
    }

    quantized_density de_step(const quantized_density& incoming, const quantized_density& channel,
                              const edge_perspective& ep) const {
        // check transform, rho-averaged; a degree-1 check pins its neighbor.
        // Combine powers come from an addition chain over the powers already
        // built, e.g. the (3,6) code takes three combines instead of four.
        quantized_density chk(grid);
        chk.mass_pos_inf += ep.rho.coeff(0);
        const auto& rho = ep.rho.coeffs();
        std::map<std::size_t, quantized_density> powers;
        powers.emplace(1, incoming);
        auto power = [&](std::size_t k, auto&& self) -> const quantized_density& {
            auto found = powers.find(k);
            if (found != powers.end()) return found->second;
            const std::size_t lo = std::prev(powers.lower_bound(k))->first;
            const quantized_density& rest = self(k - lo, self);
            quantized_density built = check_combine(powers.at(lo), rest);
            return powers.emplace(k, std::move(built)).first->second;
        };
        for (std::size_t idx = 1; idx < rho.size(); ++idx) {
            if (rho[idx] != 0.0) chk.add_scaled(power(idx, power), rho[idx]);
        }
        // variable transform, lambda-averaged convolution powers
        quantized_density out(grid);
        quantized_density vacc = channel;
        const auto& lambda = ep.lambda.coeffs();
        for (std::size_t idx = 0; idx < lambda.size(); ++idx) {
            if (idx > 0) vacc = var_convolve(vacc, chk);
            if (lambda[idx] != 0.0) out.add_scaled(vacc, lambda[idx]);
        }
        out.normalize();
        return out;
    }
};

bp_engine::bp_engine(const llr_grid& grid) : impl_(std::make_unique<impl>(grid)) {}
bp_engine::~bp_engine() = default;

const llr_grid& bp_engine::grid() const { return impl_->grid; }

quantized_density bp_engine::initial_density(const channel_model& ch) const {
    const llr_grid& g = impl_->grid;
    quantized_density d(g);
    switch (ch.kind()) {
        case channel_kind::bec:
            d.pmf[static_cast<std::size_t>(g.center())] = ch.param();
            d.mass_pos_inf = 1.0 - ch.param();
            break;
        case channel_kind::bsc: {
            const double p = ch.param();
            if (p == 0.0) {
                d.mass_pos_inf = 1.0;
                break;
            }
            const double mag = std::log((1.0 - p) / p);
            if (mag > g.max_llr()) {
                throw invalid_parameter("LLR grid too narrow for BSC point masses");
            }
            const int off = static_cast<int>(std::lround(mag / g.step));
            d.pmf[static_cast<std::size_t>(g.center() + off)] += 1.0 - p;
            d.pmf[static_cast<std::size_t>(g.center() - off)] += p;
            break;
        }
        case channel_kind::biawgn: {
            const double sigma = ch.param();
            const double mu = 2.0 / (sigma * sigma);
            const double sd = 2.0 / sigma;
            if (mu > g.max_llr()) {
                throw invalid_parameter("LLR grid too narrow for BIAWGN LLR density");
            }
            auto cdf = [&](double x) { return 1.0 - q_function((x - mu) / sd); };
            double below = cdf(g.value(0) + 0.5 * g.step);
            d.pmf[0] = below;
            for (int k = 1; k < g.bins() - 1; ++k) {
                const double here = cdf(g.value(k) + 0.5 * g.step);
                d.pmf[static_cast<std::size_t>(k)] = here - below;
                below = here;
            }
            d.pmf[static_cast<std::size_t>(g.bins() - 1)] = 1.0 - below;
            break;
        }
    }
    return d;
}

quantized_density bp_engine::check_combine(const quantized_density& a,
                                           const quantized_density& b) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->check_combine(a, b);
}

quantized_density bp_engine::var_convolve(const quantized_density& a,
                                          const quantized_density& b) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->var_convolve(a, b);
}

quantized_density bp_engine::de_step(const quantized_density& incoming,
                                     const quantized_density& channel,
                                     const edge_perspective& ep) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->de_step(incoming, channel, ep);
}

evolution_report bp_engine::evolve(const channel_model& ch, const edge_perspective& ep,
                                   int max_iter, double eps) const {
    ep.validate();
    const quantized_density channel = initial_density(ch);
    quantized_density state = channel;
    convergence_tracker tracker(eps);
    if (tracker.observe(state.error_mass(), 0)) return tracker.report();
    for (int i = 1; i <= max_iter; ++i) {
        state = de_step(state, channel, ep);
        if (tracker.observe(state.error_mass(), i)) break;
    }
    return tracker.report();
}

threshold_result bp_engine::bp_threshold(channel_kind family, const edge_perspective& ep,
                                         double tolerance, int max_iter) const {
    double lo = 0.0, hi = 0.0;
    switch (family) {
        case channel_kind::bec:
            lo = 0.005;
            hi = 0.995;
            break;
        case channel_kind::bsc:
            lo = 0.005;
            hi = 0.495;
            break;
        case channel_kind::biawgn:
            lo = 0.3;
            hi = 1.6;
            break;
    }
    auto make = [&](double p) {
        switch (family) {
            case channel_kind::bec:
                return channel_model::bec(p);
            case channel_kind::bsc:
                return channel_model::bsc(p);
            default:
                return channel_model::biawgn(p);
        }
    };
    auto converges = [&](double p) { return evolve(make(p), ep, max_iter).converged; };
    return bisect_threshold(converges, lo, hi, tolerance);
}

std::shared_ptr<bp_engine> shared_engine(const llr_grid& grid) {
    static std::mutex mu;
    static std::map<std::pair<double, int>, std::shared_ptr<bp_engine>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{grid.step, grid.half_bins}];
    if (!slot) slot = std::make_shared<bp_engine>(grid);
    return slot;
}

quantized_density bp_initial_density(const channel_model& ch, const llr_grid& grid) {
    return shared_engine(grid)->initial_density(ch);
}

quantized_density bp_de_step(const quantized_density& incoming, const quantized_density& channel,
                             const edge_perspective& ep) {
    if (!(incoming.grid == channel.grid)) throw invalid_parameter("grid mismatch");
    return shared_engine(incoming.grid)->de_step(incoming, channel, ep);
}

threshold_result bp_threshold(channel_kind family, const edge_perspective& ep,
                              const llr_grid& grid, int max_iter, double tolerance) {
    return shared_engine(grid)->bp_threshold(family, ep, tolerance, max_iter);
}

}  // namespace ldpc
