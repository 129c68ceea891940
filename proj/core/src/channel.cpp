#include "ldpc/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log2_1p_exp(double t) {
    // log2(1 + e^-t), stable for large |t|
    if (t > 700.0) return 0.0;
    if (t < -700.0) return -t / std::log(2.0);
    return std::log1p(std::exp(-t)) / std::log(2.0);
}

}  // namespace

channel_model channel_model::bec(double erasure_prob) {
    if (erasure_prob < 0.0 || erasure_prob >= 1.0) {
        throw invalid_parameter("BEC erasure probability must lie in [0, 1)");
    }
    return {channel_kind::bec, erasure_prob};
}

channel_model channel_model::bsc(double crossover_prob) {
    // The useless p = 1/2 channel is accepted so that degenerate inputs can be
    // probed; everything above it is a caller error.
    if (crossover_prob < 0.0 || crossover_prob > 0.5) {
        throw invalid_parameter("BSC crossover probability must lie in [0, 1/2]");
    }
    return {channel_kind::bsc, crossover_prob};
}

channel_model channel_model::biawgn(double sigma) {
    if (!(sigma > 0.0)) throw invalid_parameter("BIAWGN sigma must be positive");
    return {channel_kind::biawgn, sigma};
}

std::string channel_model::spec_string() const {
    const char* name = kind_ == channel_kind::bec   ? "bec"
                       : kind_ == channel_kind::bsc ? "bsc"
                                                    : "biawgn";
    return std::string(name) + ":" + std::to_string(param_);
}

channel_model parse_channel(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw config_error("channel spec must look like \"bec:0.42\", got \"" + spec + "\"");
    }
    const std::string name = spec.substr(0, colon);
    double value = 0.0;
    try {
        value = std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw config_error("bad channel parameter in \"" + spec + "\"");
    }
    try {
        if (name == "bec") return channel_model::bec(value);
        if (name == "bsc") return channel_model::bsc(value);
        if (name == "biawgn") return channel_model::biawgn(value);
    } catch (const invalid_parameter& e) {
        throw config_error(e.what());
    }
    throw config_error("unknown channel \"" + name + "\"");
}

received_word transmit(std::span<const double> codeword, const channel_model& ch,
                       std::uint64_t seed) {
    received_word out{ch, std::vector<double>(codeword.size())};
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double x = codeword[i];
        if (x != 1.0 && x != -1.0) throw invalid_parameter("codeword entries must be +/-1");
        symbol_rng rng(seed, i);
        switch (ch.kind()) {
            case channel_kind::bec:
                out.symbols[i] = rng.uniform() < ch.param() ? 0.0 : x;
                break;
            case channel_kind::bsc:
                out.symbols[i] = rng.uniform() < ch.param() ? -x : x;
                break;
            case channel_kind::biawgn:
                out.symbols[i] = x + ch.param() * rng.gaussian();
                break;
        }
    }
    return out;
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw invalid_parameter("entropy argument must lie in [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double inverse_binary_entropy(double y) {
    if (y < 0.0 || y > 1.0) throw invalid_parameter("entropy value must lie in [0, 1]");
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (binary_entropy(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double capacity(const channel_model& ch) {
    switch (ch.kind()) {
        case channel_kind::bec:
            return 1.0 - ch.param();
        case channel_kind::bsc:
            return 1.0 - binary_entropy(ch.param());
        case channel_kind::biawgn:
            break;
    }
    // C = 1 - E_{y|x=+1}[log2(1 + e^{-2y/sigma^2})], integrated by Simpson's
    // rule over +/-12 sigma around the conditional mean.
    const double sigma = ch.param();
    const double lo = 1.0 - 12.0 * sigma;
    const double hi = 1.0 + 12.0 * sigma;
    const int n = 4000;  // even; ~1e-6 accuracy, well inside the 1e-4 target
    const double h = (hi - lo) / n;
    const double inv_norm = 1.0 / (sigma * std::sqrt(2.0 * std::acos(-1.0)));
    auto f = [&](double y) {
        const double z = (y - 1.0) / sigma;
        return inv_norm * std::exp(-0.5 * z * z) * log2_1p_exp(2.0 * y / (sigma * sigma));
    };
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(lo + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
    return 1.0 - acc * h / 3.0;
}

received_word hard_quantize(const received_word& rw) {
    if (rw.channel.kind() != channel_kind::biawgn) {
        throw invalid_parameter("hard_quantize expects BIAWGN output");
    }
    received_word out{channel_model::bsc(q_function(1.0 / rw.channel.param())),
                      std::vector<double>(rw.symbols.size())};
    for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
        out.symbols[i] = rw.symbols[i] >= 0.0 ? 1.0 : -1.0;
    }
    return out;
}

received_word ternary_quantize(const received_word& rw, double tau) {
    if (rw.channel.kind() != channel_kind::biawgn) {
        throw invalid_parameter("ternary_quantize expects BIAWGN output");
    }
    if (tau < 0.0) throw invalid_parameter("tau must be non-negative");
    received_word out{rw.channel, std::vector<double>(rw.symbols.size())};
    for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
        const double r = rw.symbols[i];
        out.symbols[i] = r >= tau ? 1.0 : (r <= -tau ? -1.0 : 0.0);
    }
    return out;
}

llr_word initial_llr(const received_word& rw) {
    llr_word out(rw.symbols.size());
    switch (rw.channel.kind()) {
        case channel_kind::bec:
            for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
                out[i] = rw.symbols[i] == 0.0 ? 0.0 : rw.symbols[i] * kInf;
            }
            break;
        case channel_kind::bsc: {
            const double p = rw.channel.param();
            const double mag = p == 0.0 ? kInf : std::log((1.0 - p) / p);
            for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
                out[i] = p == 0.5 ? 0.0 : rw.symbols[i] * mag;
            }
            break;
        }
        case channel_kind::biawgn: {
            const double scale = 2.0 / (rw.channel.param() * rw.channel.param());
            for (std::size_t i = 0; i < rw.symbols.size(); ++i) {
                out[i] = scale * rw.symbols[i];
            }
            break;
        }
    }
    return out;
}

}  // namespace ldpc
