#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ldpc {

enum class channel_kind { bec, bsc, biawgn };

// Memoryless binary-input channel. Immutable after construction; transmit is
// reentrant (each symbol draws from its own (seed, index) stream).
class channel_model {
  public:
    static channel_model bec(double erasure_prob);
    static channel_model bsc(double crossover_prob);
    static channel_model biawgn(double sigma);

    channel_kind kind() const { return kind_; }
    double param() const { return param_; }

    std::string spec_string() const;  // e.g. "bec:0.42"

  private:
    channel_model(channel_kind kind, double param) : kind_(kind), param_(param) {}

    channel_kind kind_;
    double param_;
};

// "bec:0.42", "bsc:0.084", "biawgn:0.88"
channel_model parse_channel(const std::string& spec);

// Channel output. BEC/BSC symbols are +1/-1 with 0 marking an erasure;
// BIAWGN symbols are raw reals.
struct received_word {
    channel_model channel;
    std::vector<double> symbols;
};

// Log-likelihood ratios ln(p(+1)/p(-1)); +/-inf for known bits, 0 for erasures.
using llr_word = std::vector<double>;

received_word transmit(std::span<const double> codeword, const channel_model& ch,
                       std::uint64_t seed);

double binary_entropy(double p);
double inverse_binary_entropy(double y);
double q_function(double x);

double capacity(const channel_model& ch);

received_word hard_quantize(const received_word& rw);
received_word ternary_quantize(const received_word& rw, double tau);

llr_word initial_llr(const received_word& rw);

}  // namespace ldpc
