#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/decoders.hpp"
#include "ldpc/degree_dist.hpp"

namespace ldpc {

enum class decoder_id { peel, bec_mp, gal_a, gal_b, weighted, bp };

decoder_id parse_decoder(const std::string& name);  // "peel", "bec-mp", ...
std::string decoder_name(decoder_id id);

struct code_spec {
    enum class family { regular, distribution, ira };

    family kind = family::regular;
    int d_v = 3;
    int d_c = 6;
    edge_perspective ep;  // distribution/ira codes

    static code_spec regular(int d_v, int d_c);
    static code_spec distribution(edge_perspective ep);
    static code_spec ira(edge_perspective ep);

    std::string label() const;
};

struct simulation_config {
    code_spec code;
    int n = 1000;  // block length; information length for IRA codes
    channel_kind family = channel_kind::bec;
    std::vector<double> channel_params{0.4};
    decoder_id decoder = decoder_id::peel;
    std::vector<double> weights{2.0, 1.0};  // weighted decoder schedule
    std::vector<int> cutoffs;               // gal-b per-iteration table; empty = majority
    double ternary_tau = 0.5;               // BIAWGN quantizer for the weighted decoder
    int max_iter = 100;
    long long trials = 100;
    std::uint64_t seed = 1;
    bool random_codeword = false;  // default all-ones transmission
    bool fresh_code_per_trial = false;
    long long target_bit_errors = 100;  // stop refining a sweep point early
    int min_girth = 0;                  // 0 = unconditioned sampling

    void validate() const;  // throws config_error
};

struct simulation_record {
    std::string code;
    int n = 0;
    std::string channel;
    std::string decoder;
    int max_iter = 0;
    long long trials_requested = 0;
    std::uint64_t seed = 0;
    bool random_codeword = false;
    bool fresh_code_per_trial = false;

    long long trials_run = 0;
    long long bit_errors = 0;
    long long bits = 0;
    double ber = 0.0;
    double wer = 0.0;
    double mean_iterations = 0.0;
    double stall_rate = 0.0;
    double wall_seconds = 0.0;
};

std::vector<simulation_record> run_ber_sweep(const simulation_config& cfg);

void write_records_csv(std::ostream& os, const std::vector<simulation_record>& records);
std::vector<simulation_record> read_records_csv(std::istream& is);
void write_records_jsonl(std::ostream& os, const std::vector<simulation_record>& records);

struct threshold_row {
    std::string decoder;
    std::string code;
    std::string channel;
    double threshold = 0.0;
    double certified_below = 0.0;
    double certified_above = 0.0;
    double tolerance = 0.0;
    int iterations = 0;
};

// The hard-decision threshold table for the six small regular pairs plus
// the analytic BEC values for d_v = 3.
std::vector<threshold_row> builtin_threshold_table();
void write_threshold_csv(std::ostream& os, const std::vector<threshold_row>& rows);

struct concentration_stats {
    int n = 0;
    double mean_ber = 0.0;
    double std_ber = 0.0;       // dispersion across sampled codes
    double msg_rate_mean = 0.0; // message erasure rate at the probe depth
    double msg_rate_se = 0.0;   // standard error of that mean
    double de_prediction = 0.0; // density-evolution value at the probe depth
};

struct concentration_report {
    int d_v = 0, d_c = 0;
    double alpha = 0.0;
    int codes = 0;
    int fixed_iterations = 0;
    int probe_depth = 0;
    std::vector<concentration_stats> sizes;
};

// Samples `codes` girth-conditioned graphs per block length, decodes
// `words_per_code` erasure words on each at a fixed iteration budget, and
// compares the depth-`probe_depth` message erasure rate with density
// evolution.
concentration_report run_concentration(int d_v, int d_c, double alpha, int codes,
                                       const std::vector<int>& sizes, int fixed_iterations,
                                       int words_per_code, std::uint64_t seed);

}  // namespace ldpc
