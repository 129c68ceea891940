#include "ldpc/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "ldpc/bp_de.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/gf2.hpp"
#include "ldpc/ira.hpp"
#include "ldpc/rng.hpp"
#include "ldpc/scalar_de.hpp"

namespace ldpc {

decoder_id parse_decoder(const std::string& name) {
    if (name == "peel") return decoder_id::peel;
    if (name == "bec-mp") return decoder_id::bec_mp;
    if (name == "gal-a") return decoder_id::gal_a;
    if (name == "gal-b") return decoder_id::gal_b;
    if (name == "weighted") return decoder_id::weighted;
    if (name == "bp") return decoder_id::bp;
    throw config_error("unknown decoder \"" + name + "\"");
}

std::string decoder_name(decoder_id id) {
    switch (id) {
        case decoder_id::peel: return "peel";
        case decoder_id::bec_mp: return "bec-mp";
        case decoder_id::gal_a: return "gal-a";
        case decoder_id::gal_b: return "gal-b";
        case decoder_id::weighted: return "weighted";
        case decoder_id::bp: return "bp";
    }
    return "?";
}

code_spec code_spec::regular(int d_v, int d_c) {
    code_spec s;
    s.kind = family::regular;
    s.d_v = d_v;
    s.d_c = d_c;
    s.ep = regular_pair(d_v, d_c);
    return s;
}

code_spec code_spec::distribution(edge_perspective ep) {
    code_spec s;
    s.kind = family::distribution;
    s.ep = std::move(ep);
    return s;
}

code_spec code_spec::ira(edge_perspective ep) {
    code_spec s;
    s.kind = family::ira;
    s.ep = std::move(ep);
    return s;
}

std::string code_spec::label() const {
    switch (kind) {
        case family::regular:
            return "regular:" + std::to_string(d_v) + "," + std::to_string(d_c);
        case family::distribution:
            return "distribution";
        case family::ira:
            return "ira";
    }
    return "?";
}

void simulation_config::validate() const {
    if (trials < 1) throw config_error("trials must be at least 1");
    if (n < 10) throw config_error("block length must be at least 10");
    if (max_iter < 1) throw config_error("max_iter must be at least 1");
    if (channel_params.empty()) throw config_error("no channel parameters given");
    for (double p : channel_params) {
        switch (family) {
            case channel_kind::bec:
                if (p < 0.0 || p >= 1.0) throw config_error("BEC parameter out of range");
                break;
            case channel_kind::bsc:
                if (p < 0.0 || p > 0.5) throw config_error("BSC parameter out of range");
                break;
            case channel_kind::biawgn:
                if (!(p > 0.0)) throw config_error("BIAWGN sigma out of range");
                break;
        }
    }
    if (code.kind == code_spec::family::ira && decoder != decoder_id::peel) {
        throw config_error("IRA simulation uses the peeling decoder");
    }
    if (code.kind == code_spec::family::regular &&
        (static_cast<long long>(n) * code.d_v) % code.d_c != 0) {
        throw config_error("n*d_v must be divisible by d_c");
    }
    try {
        code.ep.validate();
    } catch (const invalid_distribution& e) {
        throw config_error(e.what());
    }
}

namespace {

channel_model make_channel(channel_kind family, double p) {
    switch (family) {
        case channel_kind::bec:
            return channel_model::bec(p);
        case channel_kind::bsc:
            return channel_model::bsc(p);
        default:
            return channel_model::biawgn(p);
    }
}

struct trial_outcome {
    long long bit_errors = 0;
    int iterations = 0;
    bool word_error = false;
    bool stall = false;
};

// Cached per-graph state shared across trials.
struct code_instance {
    factor_graph graph{1, 1, {{0, 0}}};
    std::optional<ira_graph> ira;
    std::optional<triangular_form> tf;  // built lazily for random codewords
};

code_instance build_code(const simulation_config& cfg, std::uint64_t seed) {
    code_instance inst;
    if (cfg.code.kind == code_spec::family::ira) {
        inst.ira = ira_graph::sample(cfg.n, cfg.code.ep, seed);
        return inst;
    }
    if (cfg.code.kind == code_spec::family::regular) {
        inst.graph = sample_regular(cfg.n, cfg.code.d_v, cfg.code.d_c, seed);
    } else {
        inst.graph = sample_ensemble(edge_to_node(cfg.n, cfg.code.ep), seed);
    }
    if (cfg.min_girth > 0) {
        ensure_girth(inst.graph, cfg.min_girth, derive_seed(seed, 0x617), 200);
    }
    return inst;
}

trial_outcome run_trial(const simulation_config& cfg, code_instance& inst,
                        const channel_model& ch, std::uint64_t trial_seed) {
    trial_outcome out;

    if (cfg.code.kind == code_spec::family::ira) {
        const int k = inst.ira->info_count();
        std::vector<double> message(static_cast<std::size_t>(k), 1.0);
        if (cfg.random_codeword) {
            symbol_rng rng(trial_seed, 0xabcd);
            for (double& m : message) m = rng.uniform() < 0.5 ? 1.0 : -1.0;
        }
        const std::vector<double> codeword = ira_encode(*inst.ira, message);
        const received_word rw = transmit(codeword, ch, trial_seed);
        const decode_result res = ira_decode_bec(*inst.ira, rw, 1 << 30);
        for (int i = 0; i < k; ++i) {
            if (res.word[static_cast<std::size_t>(i)] != message[static_cast<std::size_t>(i)]) {
                ++out.bit_errors;
            }
        }
        out.iterations = res.iterations;
        out.stall = res.status == decode_status::stall;
        out.word_error = out.bit_errors > 0 || res.status != decode_status::success;
        return out;
    }

    std::vector<double> codeword(static_cast<std::size_t>(cfg.n), 1.0);
    if (cfg.random_codeword) {
        if (!inst.tf) inst.tf = triangularize(to_parity_check(inst.graph));
        std::vector<int> message(static_cast<std::size_t>(inst.tf->message_length()));
        symbol_rng rng(trial_seed, 0xabcd);
        for (int& b : message) b = rng.uniform() < 0.5 ? 0 : 1;
        codeword = encode_systematic(*inst.tf, message);
    }
    received_word rw = transmit(codeword, ch, trial_seed);

    decode_result res;
    switch (cfg.decoder) {
        case decoder_id::peel:
            res = decode_bec_peeling(inst.graph, rw);
            break;
        case decoder_id::bec_mp:
            res = decode_bec_mp(inst.graph, rw, cfg.max_iter);
            break;
        case decoder_id::gal_a:
            if (ch.kind() == channel_kind::biawgn) rw = hard_quantize(rw);
            res = decode_gallager_a(inst.graph, rw, cfg.max_iter);
            break;
        case decoder_id::gal_b: {
            if (ch.kind() == channel_kind::biawgn) rw = hard_quantize(rw);
            const cutoff_schedule sched = cfg.cutoffs.empty()
                                              ? cutoff_schedule::majority()
                                              : cutoff_schedule::per_iteration(cfg.cutoffs);
            res = decode_gallager_b(inst.graph, rw, sched, cfg.max_iter);
            break;
        }
        case decoder_id::weighted:
            if (ch.kind() == channel_kind::biawgn) rw = ternary_quantize(rw, cfg.ternary_tau);
            res = decode_weighted_erasure(inst.graph, rw, weight_schedule(cfg.weights),
                                          cfg.max_iter);
            break;
        case decoder_id::bp:
            res = decode_bp(inst.graph, initial_llr(rw), cfg.max_iter);
            break;
    }

    for (int i = 0; i < cfg.n; ++i) {
        if (res.word[static_cast<std::size_t>(i)] != codeword[static_cast<std::size_t>(i)]) {
            ++out.bit_errors;
        }
    }
    out.iterations = res.iterations;
    out.stall = res.status == decode_status::stall;
    out.word_error = out.bit_errors > 0 || res.status != decode_status::success;
    return out;
}

}  // namespace

std::vector<simulation_record> run_ber_sweep(const simulation_config& cfg) {
    cfg.validate();
    std::vector<simulation_record> records;

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t pi = 0; pi < cfg.channel_params.size(); ++pi) {
        const channel_model ch = make_channel(cfg.family, cfg.channel_params[pi]);
        const auto t0 = std::chrono::steady_clock::now();

        code_instance shared_inst;
        if (!cfg.fresh_code_per_trial) {
            shared_inst = build_code(cfg, cfg.seed);
            if (cfg.random_codeword && !shared_inst.ira) {
                // triangularize up front so the shared instance stays
                // read-only under the worker pool
                shared_inst.tf = triangularize(to_parity_check(shared_inst.graph));
            }
        }

        simulation_record rec;
        rec.code = cfg.code.label();
        rec.n = cfg.n;
        rec.channel = ch.spec_string();
        rec.decoder = decoder_name(cfg.decoder);
        rec.max_iter = cfg.max_iter;
        rec.trials_requested = cfg.trials;
        rec.seed = cfg.seed;
        rec.random_codeword = cfg.random_codeword;
        rec.fresh_code_per_trial = cfg.fresh_code_per_trial;

        long long iter_sum = 0, stalls = 0, word_errors = 0;
        long long trial = 0;
        while (trial < cfg.trials) {
            const long long batch =
                std::min<long long>(cfg.trials - trial, std::max<long long>(workers * 8, 16));
            std::vector<trial_outcome> outcomes(static_cast<std::size_t>(batch));
            std::vector<code_instance> fresh(cfg.fresh_code_per_trial
                                                 ? static_cast<std::size_t>(batch)
                                                 : 0);
            auto work = [&](unsigned tid) {
                for (long long b = tid; b < batch; b += workers) {
                    const std::uint64_t trial_seed =
                        derive_seed(cfg.seed, static_cast<std::uint64_t>((trial + b) * 2 + 1) ^
                                                  (pi << 32));
                    code_instance* inst = &shared_inst;
                    if (cfg.fresh_code_per_trial) {
                        fresh[static_cast<std::size_t>(b)] =
                            build_code(cfg, derive_seed(cfg.seed,
                                                        static_cast<std::uint64_t>(trial + b) ^
                                                            (pi << 32)));
                        inst = &fresh[static_cast<std::size_t>(b)];
                    }
                    outcomes[static_cast<std::size_t>(b)] = run_trial(cfg, *inst, ch, trial_seed);
                }
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
                for (auto& th : pool) th.join();
            }
            for (const trial_outcome& o : outcomes) {
                rec.bit_errors += o.bit_errors;
                iter_sum += o.iterations;
                stalls += o.stall ? 1 : 0;
                word_errors += o.word_error ? 1 : 0;
            }
            trial += batch;
            rec.trials_run = trial;
            if (rec.bit_errors >= cfg.target_bit_errors) break;
        }

        const int block = cfg.code.kind == code_spec::family::ira
                              ? (shared_inst.ira ? shared_inst.ira->info_count() : cfg.n)
                              : cfg.n;
        rec.bits = rec.trials_run * block;
        rec.ber = rec.bits > 0 ? static_cast<double>(rec.bit_errors) / static_cast<double>(rec.bits)
                               : 0.0;
        rec.wer = rec.trials_run > 0 ? static_cast<double>(word_errors) /
                                           static_cast<double>(rec.trials_run)
                                     : 0.0;
        rec.mean_iterations = rec.trials_run > 0 ? static_cast<double>(iter_sum) /
                                                       static_cast<double>(rec.trials_run)
                                                 : 0.0;
        rec.stall_rate = rec.trials_run > 0 ? static_cast<double>(stalls) /
                                                  static_cast<double>(rec.trials_run)
                                            : 0.0;
        rec.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

constexpr char kRecordHeader[] =
    "code,n,channel,decoder,max_iter,trials_requested,seed,random_codeword,"
    "fresh_code_per_trial,trials_run,bit_errors,bits,ber,wer,mean_iterations,"
    "stall_rate,wall_seconds";

}  // namespace

void write_records_csv(std::ostream& os, const std::vector<simulation_record>& records) {
    os << kRecordHeader << '\n';
    os.precision(17);
    for (const auto& r : records) {
        os << r.code << ',' << r.n << ',' << r.channel << ',' << r.decoder << ',' << r.max_iter
           << ',' << r.trials_requested << ',' << r.seed << ',' << (r.random_codeword ? 1 : 0)
           << ',' << (r.fresh_code_per_trial ? 1 : 0) << ',' << r.trials_run << ','
           << r.bit_errors << ',' << r.bits << ',' << r.ber << ',' << r.wer << ','
           << r.mean_iterations << ',' << r.stall_rate << ',' << r.wall_seconds << '\n';
    }
}

std::vector<simulation_record> read_records_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kRecordHeader) {
        throw config_error("unexpected simulation CSV header");
    }
    std::vector<simulation_record> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        auto next = [&]() {
            if (!std::getline(ss, field, ',')) throw config_error("short CSV row: " + line);
            return field;
        };
        simulation_record r;
        r.code = next();
        r.n = std::stoi(next());
        r.channel = next();
        r.decoder = next();
        r.max_iter = std::stoi(next());
        r.trials_requested = std::stoll(next());
        r.seed = std::stoull(next());
        r.random_codeword = next() == "1";
        r.fresh_code_per_trial = next() == "1";
        r.trials_run = std::stoll(next());
        r.bit_errors = std::stoll(next());
        r.bits = std::stoll(next());
        r.ber = std::stod(next());
        r.wer = std::stod(next());
        r.mean_iterations = std::stod(next());
        r.stall_rate = std::stod(next());
        r.wall_seconds = std::stod(next());
        records.push_back(std::move(r));
    }
    return records;
}

void write_records_jsonl(std::ostream& os, const std::vector<simulation_record>& records) {
    os.precision(17);
    for (const auto& r : records) {
        os << "{\"code\":\"" << r.code << "\",\"n\":" << r.n << ",\"channel\":\"" << r.channel
           << "\",\"decoder\":\"" << r.decoder << "\",\"max_iter\":" << r.max_iter
           << ",\"trials_requested\":" << r.trials_requested << ",\"seed\":" << r.seed
           << ",\"random_codeword\":" << (r.random_codeword ? "true" : "false")
           << ",\"fresh_code_per_trial\":" << (r.fresh_code_per_trial ? "true" : "false")
           << ",\"trials_run\":" << r.trials_run << ",\"bit_errors\":" << r.bit_errors
           << ",\"bits\":" << r.bits << ",\"ber\":" << r.ber << ",\"wer\":" << r.wer
           << ",\"mean_iterations\":" << r.mean_iterations << ",\"stall_rate\":" << r.stall_rate
           << ",\"wall_seconds\":" << r.wall_seconds << "}\n";
    }
}

std::vector<threshold_row> builtin_threshold_table() {
    std::vector<threshold_row> rows;
    const int pairs[6][2] = {{3, 6}, {4, 8}, {5, 10}, {4, 6}, {3, 4}, {3, 5}};
    for (const auto& p : pairs) {
        const threshold_result t = gallager_a_threshold(p[0], p[1]);
        rows.push_back({"gal-a", "regular:" + std::to_string(p[0]) + "," + std::to_string(p[1]),
                        "bsc", t.value, t.certified_below, t.certified_above, t.tolerance,
                        t.iterations_used});
    }
    for (int dc : {4, 5, 6}) {
        const threshold_result t = bec_threshold(regular_pair(3, dc));
        rows.push_back({"peel", "regular:3," + std::to_string(dc), "bec", t.value,
                        t.certified_below, t.certified_above, t.tolerance, t.iterations_used});
    }
    return rows;
}

void write_threshold_csv(std::ostream& os, const std::vector<threshold_row>& rows) {
    os << "decoder,code,channel,threshold,certified_below,certified_above,tolerance,iterations\n";
    os.precision(12);
    for (const auto& r : rows) {
        os << r.decoder << ',' << r.code << ',' << r.channel << ',' << r.threshold << ','
           << r.certified_below << ',' << r.certified_above << ',' << r.tolerance << ','
           << r.iterations << '\n';
    }
}

namespace {

// Erasure rate of variable-to-check messages after `depth` synchronous
// iterations, over the edge set.
double message_erasure_rate(const factor_graph& g, const received_word& rw, int depth) {
    const std::size_t ne = g.edge_count();
    std::vector<double> v2c(ne), c2v(ne, 0.0);
    for (std::size_t e = 0; e < ne; ++e) {
        v2c[e] = rw.symbols[static_cast<std::size_t>(g.edge_var(static_cast<std::int32_t>(e)))];
    }
    for (int it = 0; it < depth; ++it) {
        for (int c = 0; c < g.check_count(); ++c) {
            int zeros = 0;
            double prod = 1.0;
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                if (m == 0.0) {
                    ++zeros;
                } else {
                    prod *= m;
                }
            }
            for (std::int32_t e : g.chk_edges(c)) {
                const double m = v2c[static_cast<std::size_t>(e)];
                const int others = zeros - (m == 0.0 ? 1 : 0);
                c2v[static_cast<std::size_t>(e)] = others > 0 ? 0.0 : (m == 0.0 ? prod : prod * m);
            }
        }
        for (int v = 0; v < g.variable_count(); ++v) {
            const double r = rw.symbols[static_cast<std::size_t>(v)];
            for (std::int32_t e : g.var_edges(v)) {
                double out = r;
                if (out == 0.0) {
                    for (std::int32_t e2 : g.var_edges(v)) {
                        if (e2 == e) continue;
                        if (c2v[static_cast<std::size_t>(e2)] != 0.0) {
                            out = c2v[static_cast<std::size_t>(e2)];
                            break;
                        }
                    }
                }
                v2c[static_cast<std::size_t>(e)] = out;
            }
        }
    }
    long long erased = 0;
    for (double m : v2c) erased += m == 0.0 ? 1 : 0;
    return static_cast<double>(erased) / static_cast<double>(ne);
}

}  // namespace

concentration_report run_concentration(int d_v, int d_c, double alpha, int codes,
                                       const std::vector<int>& sizes, int fixed_iterations,
                                       int words_per_code, std::uint64_t seed) {
    if (codes < 2) throw config_error("need at least two code samples");
    concentration_report report;
    report.d_v = d_v;
    report.d_c = d_c;
    report.alpha = alpha;
    report.codes = codes;
    report.fixed_iterations = fixed_iterations;
    report.probe_depth = 1;

    const edge_perspective ep = regular_pair(d_v, d_c);
    double de = alpha;
    for (int i = 0; i < report.probe_depth; ++i) de = bec_de_step(de, alpha, ep);

    const channel_model ch = channel_model::bec(alpha);
    for (int n : sizes) {
        concentration_stats stats;
        stats.n = n;
        stats.de_prediction = de;
        std::vector<double> code_ber;
        std::vector<double> msg_rates;
        for (int cidx = 0; cidx < codes; ++cidx) {
            factor_graph g =
                sample_regular(n, d_v, d_c, derive_seed(seed, static_cast<std::uint64_t>(
                                                                  (n * 131) + cidx)));
            ensure_girth(g, 6, derive_seed(seed, static_cast<std::uint64_t>(cidx) * 977 + 5), 200);
            long long erased_bits = 0;
            double msg_acc = 0.0;
            const std::vector<double> all_ones(static_cast<std::size_t>(n), 1.0);
            for (int w = 0; w < words_per_code; ++w) {
                const std::uint64_t ts =
                    derive_seed(seed, (static_cast<std::uint64_t>(cidx) << 20) ^
                                          static_cast<std::uint64_t>(w * 2 + 1) ^
                                          (static_cast<std::uint64_t>(n) << 40));
                const received_word rw = transmit(all_ones, ch, ts);
                const decode_result res = decode_bec_mp(g, rw, fixed_iterations);
                for (double v : res.word) erased_bits += v == 0.0 ? 1 : 0;
                msg_acc += message_erasure_rate(g, rw, report.probe_depth);
            }
            code_ber.push_back(static_cast<double>(erased_bits) /
                               (static_cast<double>(n) * words_per_code));
            msg_rates.push_back(msg_acc / words_per_code);
        }
        double mean = 0.0, msg_mean = 0.0;
        for (double b : code_ber) mean += b;
        for (double m : msg_rates) msg_mean += m;
        mean /= codes;
        msg_mean /= codes;
        double var = 0.0, msg_var = 0.0;
        for (double b : code_ber) var += (b - mean) * (b - mean);
        for (double m : msg_rates) msg_var += (m - msg_mean) * (m - msg_mean);
        var /= codes - 1;
        msg_var /= codes - 1;
        stats.mean_ber = mean;
        stats.std_ber = std::sqrt(var);
        stats.msg_rate_mean = msg_mean;
        stats.msg_rate_se = std::sqrt(msg_var / codes);
        report.sizes.push_back(stats);
    }
    return report;
}

}  // namespace ldpc
