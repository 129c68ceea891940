#pragma once

#include <span>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/factor_graph.hpp"

namespace ldpc {

enum class decode_status { success, stall, iteration_cap };

// word entries are +/-1 with 0 marking positions still erased/undecided.
// status == success implies residual == 0 and every parity check holds.
struct decode_result {
    std::vector<double> word;
    decode_status status = decode_status::stall;
    int iterations = 0;
    int residual = 0;
};

// Flip cutoff b(i, j) for iteration i >= 1 and variable degree j. Valid
// cutoffs satisfy (j-1)/2 < b <= j-1.
class cutoff_schedule {
  public:
    // b = j-1: flip only on unanimous disagreement (Gallager A).
    static cutoff_schedule algorithm_a();
    // smallest valid cutoff: ceil((j+1)/2) capped to j-1
    static cutoff_schedule majority();
    static cutoff_schedule fixed(int b);
    // per-iteration values applied to every degree (clamped to the valid
    // range); the last entry persists
    static cutoff_schedule per_iteration(std::vector<int> b);

    int operator()(int iteration, int degree) const;

  private:
    enum class mode { unanimous, majority, fixed_value, table };
    mode mode_ = mode::unanimous;
    int fixed_b_ = 0;
    std::vector<int> table_;
};

// Weight w(i) >= 0 given to the received value in iteration i >= 1; the last
// entry persists for later iterations.
class weight_schedule {
  public:
    explicit weight_schedule(std::vector<double> weights);
    double operator()(int iteration) const;
    const std::vector<double>& weights() const { return weights_; }

  private:
    std::vector<double> weights_;
};

decode_result decode_bec_peeling(const factor_graph& g, const received_word& rw);
decode_result decode_bec_mp(const factor_graph& g, const received_word& rw, int max_iter);
decode_result decode_gallager_a(const factor_graph& g, const received_word& rw, int max_iter);
decode_result decode_gallager_b(const factor_graph& g, const received_word& rw,
                                const cutoff_schedule& cutoffs, int max_iter);
decode_result decode_weighted_erasure(const factor_graph& g, const received_word& rw,
                                      const weight_schedule& weights, int max_iter);

// LLR sum with signed-infinity saturation; +inf plus -inf cancels to 0.
double bp_variable_map(double m0, std::span<const double> msgs);
// 2 atanh(prod tanh(m/2)), clamped for numerical safety.
double bp_check_map(std::span<const double> msgs);

decode_result decode_bp(const factor_graph& g, const llr_word& llr, int max_iter);

// Maximum-likelihood erasure decoding by linear solve; the oracle decoders
// iterate against. Unique solution -> success; otherwise stall with
// residual = dimension of the solution space.
decode_result ml_erasure_decode(const parity_check_matrix& h, const received_word& rw);

// True when every check over the edge multiset multiplies to +1 and no entry
// is 0.
bool is_codeword(const factor_graph& g, std::span<const double> word);

}  // namespace ldpc
