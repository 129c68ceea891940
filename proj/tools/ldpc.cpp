// Command-line workbench: Monte-Carlo BER sweeps, decoding-threshold tables,
// concentration experiments, degree-distribution generators, and one-shot
// encode/decode over the alist format.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ldpc/alist.hpp"
#include "ldpc/bp_de.hpp"
#include "ldpc/channel.hpp"
#include "ldpc/decoders.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/gf2.hpp"
#include "ldpc/ira.hpp"
#include "ldpc/rng.hpp"
#include "ldpc/scalar_de.hpp"
#include "ldpc/serialization.hpp"
#include "ldpc/simulation.hpp"
#include "ldpc/ternary_de.hpp"

namespace {

using namespace ldpc;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw config_error("empty numeric list: \"" + text + "\"");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
    const auto vals = parse_int_list(text);
    if (vals.size() != 2) throw config_error("expected \"a,b\", got \"" + text + "\"");
    return {vals[0], vals[1]};
}

code_spec parse_code(const std::string& text) {
    if (text.rfind("regular:", 0) == 0) {
        const auto [dv, dc] = parse_pair(text.substr(8));
        return code_spec::regular(dv, dc);
    }
    if (text.rfind("dist:", 0) == 0) {
        return code_spec::distribution(load_degree_pair(text.substr(5)));
    }
    if (text.rfind("ira:", 0) == 0) {
        return code_spec::ira(load_degree_pair(text.substr(4)));
    }
    throw config_error("code spec must be regular:DV,DC, dist:FILE, or ira:FILE");
}

channel_kind parse_family(const std::string& name) {
    if (name == "bec") return channel_kind::bec;
    if (name == "bsc") return channel_kind::bsc;
    if (name == "biawgn") return channel_kind::biawgn;
    throw config_error("channel family must be bec, bsc, or biawgn");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw config_error("cannot open " + path + " for writing");
    return file;
}

factor_graph graph_from_parity(const parity_check_matrix& h) {
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    for (int r = 0; r < h.rows; ++r) {
        for (std::int32_t c : h.row_cols[static_cast<std::size_t>(r)]) edges.push_back({c, r});
    }
    return {h.cols, h.rows, std::move(edges)};
}

void apply_config_file(simulation_config& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("bad config JSON: ") + e.what());
    }
    if (j.contains("code")) cfg.code = parse_code(j["code"].get<std::string>());
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("channel")) cfg.family = parse_family(j["channel"].get<std::string>());
    if (j.contains("params")) cfg.channel_params = j["params"].get<std::vector<double>>();
    if (j.contains("decoder")) cfg.decoder = parse_decoder(j["decoder"].get<std::string>());
    if (j.contains("weights")) cfg.weights = j["weights"].get<std::vector<double>>();
    if (j.contains("cutoffs")) cfg.cutoffs = j["cutoffs"].get<std::vector<int>>();
    if (j.contains("tau")) cfg.ternary_tau = j["tau"].get<double>();
    if (j.contains("max_iter")) cfg.max_iter = j["max_iter"].get<int>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<long long>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("random_codeword")) cfg.random_codeword = j["random_codeword"].get<bool>();
    if (j.contains("fresh_code_per_trial")) {
        cfg.fresh_code_per_trial = j["fresh_code_per_trial"].get<bool>();
    }
    if (j.contains("min_girth")) cfg.min_girth = j["min_girth"].get<int>();
    if (j.contains("target_bit_errors")) {
        cfg.target_bit_errors = j["target_bit_errors"].get<long long>();
    }
}

void add_simulate(CLI::App& app) {
    auto* cmd = app.add_subcommand("simulate", "Monte-Carlo BER/WER sweep");
    auto cfg = std::make_shared<simulation_config>();
    auto code_text = std::make_shared<std::string>("regular:3,6");
    auto family_text = std::make_shared<std::string>("bec");
    auto params_text = std::make_shared<std::string>("0.4");
    auto weights_text = std::make_shared<std::string>("2,1");
    auto cutoffs_text = std::make_shared<std::string>("");
    auto decoder_text = std::make_shared<std::string>("peel");
    auto format = std::make_shared<std::string>("csv");
    auto out_path = std::make_shared<std::string>("");
    auto config_path = std::make_shared<std::string>("");

    cmd->add_option("--config", *config_path, "JSON config file; flags override");
    auto* o_code = cmd->add_option("--code", *code_text, "regular:DV,DC | dist:FILE | ira:FILE");
    cmd->add_option("--n", cfg->n, "block length (information length for IRA)");
    auto* o_family = cmd->add_option("--channel", *family_text, "bec | bsc | biawgn");
    auto* o_params = cmd->add_option("--params", *params_text, "channel parameter list");
    auto* o_decoder = cmd->add_option("--decoder", *decoder_text,
                                      "peel | bec-mp | gal-a | gal-b | weighted | bp");
    auto* o_weights = cmd->add_option("--weights", *weights_text, "weighted decoder schedule");
    auto* o_cutoffs = cmd->add_option("--cutoffs", *cutoffs_text, "gal-b per-iteration cutoffs");
    cmd->add_option("--tau", cfg->ternary_tau, "BIAWGN ternary quantizer");
    cmd->add_option("--max-iter", cfg->max_iter, "iteration cap");
    cmd->add_option("--trials", cfg->trials, "trial budget per point");
    cmd->add_option("--seed", cfg->seed, "master seed");
    cmd->add_option("--min-girth", cfg->min_girth, "condition sampled graphs");
    cmd->add_option("--target-bit-errors", cfg->target_bit_errors,
                    "stop a point early after this many bit errors");
    cmd->add_flag("--random-codeword", cfg->random_codeword,
                  "encode random messages instead of the all-ones word");
    cmd->add_flag("--fresh-code", cfg->fresh_code_per_trial, "sample a new code every trial");
    cmd->add_option("--format", *format, "csv | jsonl");
    cmd->add_option("--out", *out_path, "output path (default stdout)");

    cmd->callback([=]() {
        if (!config_path->empty()) apply_config_file(*cfg, *config_path);
        if (o_code->count() || config_path->empty()) cfg->code = parse_code(*code_text);
        if (o_family->count() || config_path->empty()) cfg->family = parse_family(*family_text);
        if (o_params->count() || config_path->empty()) {
            cfg->channel_params = parse_double_list(*params_text);
        }
        if (o_decoder->count() || config_path->empty()) {
            cfg->decoder = parse_decoder(*decoder_text);
        }
        if (o_weights->count()) cfg->weights = parse_double_list(*weights_text);
        if (o_cutoffs->count()) cfg->cutoffs = parse_int_list(*cutoffs_text);
        const auto records = run_ber_sweep(*cfg);
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        if (*format == "jsonl") {
            write_records_jsonl(os, records);
        } else if (*format == "csv") {
            write_records_csv(os, records);
        } else {
            throw config_error("format must be csv or jsonl");
        }
    });
}

threshold_row fill_row(const std::string& decoder, const std::string& code,
                       const std::string& channel, const threshold_result& t) {
    return {decoder, code,          channel,          t.value,
            t.certified_below, t.certified_above, t.tolerance, t.iterations_used};
}

void add_threshold(CLI::App& app) {
    auto* cmd = app.add_subcommand("threshold", "decoding thresholds via density evolution");
    auto decoder = std::make_shared<std::string>("gal-a");
    auto pair_text = std::make_shared<std::string>("3,6");
    auto dist_path = std::make_shared<std::string>("");
    auto family_text = std::make_shared<std::string>("bsc");
    auto weights_text = std::make_shared<std::string>("2,1");
    auto out_path = std::make_shared<std::string>("");
    auto tolerance = std::make_shared<double>(0.0);
    auto grid_step = std::make_shared<double>(0.01);
    auto grid_max = std::make_shared<double>(30.0);
    auto table = std::make_shared<bool>(false);

    cmd->add_flag("--table", *table, "emit the builtin hard-decision and BEC table");
    cmd->add_option("--decoder", *decoder, "gal-a | gal-b | weighted | ternary | bec | bp");
    cmd->add_option("--pair", *pair_text, "regular pair DV,DC");
    cmd->add_option("--dist", *dist_path, "degree pair JSON (overrides --pair)");
    cmd->add_option("--channel", *family_text, "bec | bsc | biawgn (bp decoder only)");
    cmd->add_option("--weights", *weights_text, "weighted decoder schedule");
    cmd->add_option("--tol", *tolerance, "bisection tolerance override");
    cmd->add_option("--grid-step", *grid_step, "LLR grid step for bp");
    cmd->add_option("--grid-max", *grid_max, "LLR grid half-range for bp");
    cmd->add_option("--out", *out_path, "output path (default stdout)");

    cmd->callback([=]() {
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        if (*table) {
            write_threshold_csv(os, builtin_threshold_table());
            return;
        }
        const auto [dv, dc] = parse_pair(*pair_text);
        const bool has_dist = !dist_path->empty();
        const edge_perspective ep =
            has_dist ? load_degree_pair(*dist_path) : regular_pair(dv, dc);
        const std::string code_label =
            has_dist ? *dist_path : "regular:" + std::to_string(dv) + "," + std::to_string(dc);

        threshold_row row;
        if (*decoder == "bec") {
            row = fill_row("bec", code_label, "bec", bec_threshold(ep));
        } else if (*decoder == "gal-a") {
            if (has_dist) throw config_error("gal-a thresholds use regular pairs");
            row = fill_row("gal-a", code_label, "bsc", gallager_a_threshold(dv, dc));
        } else if (*decoder == "gal-b") {
            row = fill_row("gal-b", code_label, "bsc",
                           has_dist ? irregular_b_threshold(ep) : gallager_b_threshold(dv, dc));
        } else if (*decoder == "weighted") {
            row = fill_row("weighted", code_label, "bsc",
                           weighted_bsc_threshold(ep,
                                                  weight_schedule(parse_double_list(*weights_text)),
                                                  *tolerance > 0 ? *tolerance : 1e-4));
        } else if (*decoder == "ternary") {
            row = fill_row("ternary", code_label, "biawgn",
                           ternary_biawgn_threshold(ep, *tolerance > 0 ? *tolerance : 5e-3));
        } else if (*decoder == "bp") {
            const auto grid = llr_grid::symmetric(*grid_max, *grid_step);
            const auto family = parse_family(*family_text);
            row = fill_row("bp", code_label, *family_text,
                           bp_threshold(family, ep, grid, kDeMaxIterations,
                                        *tolerance > 0 ? *tolerance : 1e-3));
        } else {
            throw config_error("unknown threshold decoder \"" + *decoder + "\"");
        }
        write_threshold_csv(os, {row});
    });
}

void add_concentration(CLI::App& app) {
    auto* cmd = app.add_subcommand("concentration", "per-code BER dispersion experiment");
    auto pair_text = std::make_shared<std::string>("3,6");
    auto alpha = std::make_shared<double>(0.40);
    auto codes = std::make_shared<int>(50);
    auto sizes_text = std::make_shared<std::string>("1000,4000");
    auto iters = std::make_shared<int>(10);
    auto words = std::make_shared<int>(10);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto out_path = std::make_shared<std::string>("");

    cmd->add_option("--pair", *pair_text, "regular pair DV,DC");
    cmd->add_option("--alpha", *alpha, "BEC erasure probability");
    cmd->add_option("--codes", *codes, "number of sampled codes");
    cmd->add_option("--sizes", *sizes_text, "block lengths");
    cmd->add_option("--iters", *iters, "fixed decoding iterations");
    cmd->add_option("--words", *words, "words per code");
    cmd->add_option("--seed", *seed, "master seed");
    cmd->add_option("--out", *out_path, "output path (default stdout)");

    cmd->callback([=]() {
        const auto [dv, dc] = parse_pair(*pair_text);
        const auto report = run_concentration(dv, dc, *alpha, *codes, parse_int_list(*sizes_text),
                                              *iters, *words, *seed);
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        os << "n,codes,mean_ber,std_ber,msg_rate_mean,msg_rate_se,de_prediction\n";
        os.precision(12);
        for (const auto& s : report.sizes) {
            os << s.n << ',' << report.codes << ',' << s.mean_ber << ',' << s.std_ber << ','
               << s.msg_rate_mean << ',' << s.msg_rate_se << ',' << s.de_prediction << '\n';
        }
    });
}

void add_ira(CLI::App& app) {
    auto* cmd = app.add_subcommand("ira", "repeat-accumulate encode/decode and the BEC condition");
    auto dist_path = std::make_shared<std::string>("");
    auto lambda_text = std::make_shared<std::string>("0,0,0,1");
    auto rho_text = std::make_shared<std::string>("0,1");
    auto condition_alpha = std::make_shared<double>(-1.0);
    auto roundtrip_k = std::make_shared<int>(0);
    auto sim_k = std::make_shared<int>(0);
    auto alpha = std::make_shared<double>(0.3);
    auto trials = std::make_shared<int>(20);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto out_path = std::make_shared<std::string>("");

    cmd->add_option("--dist", *dist_path, "degree pair JSON");
    cmd->add_option("--lambda", *lambda_text, "edge-perspective lambda coefficients");
    cmd->add_option("--rho", *rho_text, "edge-perspective rho coefficients");
    cmd->add_option("--condition", *condition_alpha, "evaluate the success condition at alpha");
    cmd->add_option("--roundtrip", *roundtrip_k, "erasure-free encode/decode at this k");
    cmd->add_option("--simulate", *sim_k, "Monte-Carlo BEC run at this k");
    cmd->add_option("--alpha", *alpha, "erasure probability for --simulate");
    cmd->add_option("--trials", *trials, "trials for --simulate");
    cmd->add_option("--seed", *seed, "seed");
    cmd->add_option("--out", *out_path, "output path (default stdout)");

    cmd->callback([=]() {
        const edge_perspective ep =
            !dist_path->empty()
                ? load_degree_pair(*dist_path)
                : edge_perspective{polynomial(parse_double_list(*lambda_text)),
                                   polynomial(parse_double_list(*rho_text))};
        ep.validate();
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        os.precision(12);
        os << "action,alpha,rate,satisfied,min_slack,argmin_x,boundary_equality,ber,status\n";
        if (*condition_alpha >= 0.0) {
            const auto rep = ira_success_condition(ep, *condition_alpha);
            os << "condition," << *condition_alpha << ',' << ira_rate(ep) << ','
               << (rep.satisfied ? 1 : 0) << ',' << rep.min_slack << ',' << rep.argmin_x << ','
               << (rep.boundary_equality ? 1 : 0) << ",,\n";
        }
        if (*roundtrip_k > 0) {
            const ira_graph g = ira_graph::sample(*roundtrip_k, ep, *seed);
            std::mt19937_64 rng(*seed);
            std::vector<double> message(static_cast<std::size_t>(g.info_count()));
            for (double& m : message) m = rng() % 2 == 0 ? 1.0 : -1.0;
            const auto w = ira_encode(g, message);
            const auto res = ira_decode_bec(g, received_word{channel_model::bec(0.0), w}, 1 << 30);
            const bool ok = res.status == decode_status::success && res.word == message;
            os << "roundtrip,0," << ira_rate(ep) << ",,,,," << (ok ? 0.0 : 1.0) << ','
               << (ok ? "success" : "failed") << '\n';
        }
        if (*sim_k > 0) {
            long long errors = 0, bits = 0, stalls = 0;
            for (int t = 0; t < *trials; ++t) {
                const ira_graph g = ira_graph::sample(
                    *sim_k, ep, derive_seed(*seed, static_cast<std::uint64_t>(t)));
                const std::vector<double> message(static_cast<std::size_t>(g.info_count()), 1.0);
                const auto w = ira_encode(g, message);
                const auto rw =
                    transmit(w, channel_model::bec(*alpha),
                             derive_seed(*seed, 0x9000 + static_cast<std::uint64_t>(t)));
                const auto res = ira_decode_bec(g, rw, 1 << 30);
                errors += res.residual;
                bits += g.info_count();
                stalls += res.status == decode_status::stall ? 1 : 0;
            }
            os << "simulate," << *alpha << ',' << ira_rate(ep) << ",,,,,"
               << static_cast<double>(errors) / static_cast<double>(bits) << ','
               << (stalls ? "stalls" : "clean") << '\n';
        }
    });
}

void add_distributions(CLI::App& app) {
    auto* cmd = app.add_subcommand("distributions", "capacity-achieving degree pairs");
    auto tornado_text = std::make_shared<std::string>("");
    auto cc_text = std::make_shared<std::string>("");
    auto regular_text = std::make_shared<std::string>("");
    auto out_path = std::make_shared<std::string>("");
    auto report_path = std::make_shared<std::string>("");
    auto residual_grid = std::make_shared<int>(0);

    cmd->add_option("--tornado", *tornado_text, "N,ALPHA heavy-tail/Poisson pair");
    cmd->add_option("--check-concentrated", *cc_text, "N,A pair with rho = x^A");
    cmd->add_option("--regular", *regular_text, "DV,DC pair");
    cmd->add_option("--out", *out_path, "degree pair JSON output path");
    cmd->add_option("--report", *report_path, "CSV summary path (default stdout)");
    cmd->add_option("--residual-grid", *residual_grid,
                    "check the recipe residual sign on this many grid points");

    cmd->callback([=]() {
        edge_perspective ep;
        std::string label;
        double bound = 0.0;
        polynomial lam_hat;
        if (!tornado_text->empty()) {
            const auto vals = parse_double_list(*tornado_text);
            if (vals.size() != 2) throw config_error("--tornado needs N,ALPHA");
            const int big_n = static_cast<int>(vals[0]);
            ep = tornado_pair(big_n, vals[1]);
            label = "tornado";
            bound = vals[1];
            lam_hat = tornado_lambda_hat(big_n, harmonic_number(big_n - 1) / vals[1]);
        } else if (!cc_text->empty()) {
            const auto [n, a] = parse_pair(*cc_text);
            if (a < 1) throw config_error("--check-concentrated needs N,A with integer A >= 1");
            ep = check_concentrated_pair(n, 1.0 / a);
            label = "check-concentrated";
            lam_hat = check_concentrated_lambda_hat(n, 1.0 / a);
            bound = lam_hat(1.0);
        } else if (!regular_text->empty()) {
            const auto [dv, dc] = parse_pair(*regular_text);
            ep = regular_pair(dv, dc);
            label = "regular";
        } else {
            throw config_error("pick one of --tornado, --check-concentrated, --regular");
        }
        if (!out_path->empty()) save_degree_pair(*out_path, ep);
        const auto thr = bec_threshold(ep);
        bool residual_ok = true;
        if (*residual_grid > 0 && !lam_hat.is_zero()) {
            for (int i = 0; i < *residual_grid; ++i) {
                const double x = static_cast<double>(i) / *residual_grid;
                residual_ok &= recipe_residual(lam_hat, ep.rho, x) <= 1e-9;
            }
        }
        std::ofstream file;
        std::ostream& os = open_output(*report_path, file);
        os.precision(12);
        os << "family,designed_rate,bec_threshold,threshold_bound,residual_ok\n";
        os << label << ',' << designed_rate(ep) << ',' << thr.value << ',' << bound << ','
           << (residual_ok ? 1 : 0) << '\n';
    });
}

void add_encode(CLI::App& app) {
    auto* cmd = app.add_subcommand("encode", "systematic encode via lower triangulation");
    auto alist_path = std::make_shared<std::string>("");
    auto regular_text = std::make_shared<std::string>("");
    auto seed = std::make_shared<std::uint64_t>(1);
    auto message_path = std::make_shared<std::string>("");
    auto random_message = std::make_shared<bool>(false);
    auto out_path = std::make_shared<std::string>("");
    auto save_alist_path = std::make_shared<std::string>("");

    cmd->add_option("--alist", *alist_path, "parity-check matrix (alist)");
    cmd->add_option("--regular", *regular_text, "sample a regular code N,DV,DC instead");
    cmd->add_option("--seed", *seed, "sampling/message seed");
    cmd->add_option("--message", *message_path, "file of 0/1 characters");
    cmd->add_flag("--random-message", *random_message, "draw the message from the seed");
    cmd->add_option("--out", *out_path, "codeword output (default stdout)");
    cmd->add_option("--save-alist", *save_alist_path, "persist the sampled matrix");

    cmd->callback([=]() {
        parity_check_matrix h;
        if (!alist_path->empty()) {
            h = load_alist(*alist_path);
        } else if (!regular_text->empty()) {
            const auto vals = parse_int_list(*regular_text);
            if (vals.size() != 3) throw config_error("--regular needs N,DV,DC");
            h = to_parity_check(sample_regular(vals[0], vals[1], vals[2], *seed));
        } else {
            throw config_error("pick --alist or --regular");
        }
        if (!save_alist_path->empty()) save_alist(*save_alist_path, h);
        const triangular_form tf = triangularize(h);
        std::vector<int> message(static_cast<std::size_t>(tf.message_length()), 0);
        if (!message_path->empty()) {
            std::ifstream f(*message_path);
            if (!f) throw config_error("cannot open " + *message_path);
            char c;
            std::size_t i = 0;
            while (f >> c && i < message.size()) {
                if (c == '0' || c == '1') message[i++] = c - '0';
            }
            if (i != message.size()) {
                throw config_error("message file holds " + std::to_string(i) + " bits, need " +
                                   std::to_string(message.size()));
            }
        } else if (*random_message) {
            symbol_rng rng(*seed, 0x5eed);
            for (int& b : message) b = rng.uniform() < 0.5 ? 0 : 1;
        }
        const auto codeword = encode_systematic(tf, message);
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        for (std::size_t i = 0; i < codeword.size(); ++i) {
            os << (codeword[i] > 0 ? 1 : -1) << (i + 1 < codeword.size() ? ' ' : '\n');
        }
    });
}

void add_decode(CLI::App& app) {
    auto* cmd = app.add_subcommand("decode", "decode a received word");
    auto alist_path = std::make_shared<std::string>("");
    auto channel_text = std::make_shared<std::string>("bec:0.4");
    auto received_path = std::make_shared<std::string>("");
    auto decoder_text = std::make_shared<std::string>("peel");
    auto weights_text = std::make_shared<std::string>("2,1");
    auto max_iter = std::make_shared<int>(100);
    auto out_path = std::make_shared<std::string>("");

    cmd->add_option("--alist", *alist_path, "parity-check matrix (alist)")->required();
    cmd->add_option("--channel", *channel_text, "channel spec, e.g. bec:0.4");
    cmd->add_option("--received", *received_path, "received word CSV")->required();
    cmd->add_option("--decoder", *decoder_text, "peel | bec-mp | gal-a | gal-b | weighted | bp");
    cmd->add_option("--weights", *weights_text, "weighted decoder schedule");
    cmd->add_option("--max-iter", *max_iter, "iteration cap");
    cmd->add_option("--out", *out_path, "output path (default stdout)");

    cmd->callback([=]() {
        const parity_check_matrix h = load_alist(*alist_path);
        const factor_graph g = graph_from_parity(h);
        const channel_model ch = parse_channel(*channel_text);
        std::ifstream f(*received_path);
        if (!f) throw config_error("cannot open " + *received_path);
        const received_word rw = read_received_csv(f, ch);
        if (static_cast<int>(rw.symbols.size()) != h.cols) {
            throw config_error("received word length does not match the code");
        }

        decode_result res;
        switch (parse_decoder(*decoder_text)) {
            case decoder_id::peel:
                res = decode_bec_peeling(g, rw);
                break;
            case decoder_id::bec_mp:
                res = decode_bec_mp(g, rw, *max_iter);
                break;
            case decoder_id::gal_a:
                res = decode_gallager_a(g, rw, *max_iter);
                break;
            case decoder_id::gal_b:
                res = decode_gallager_b(g, rw, cutoff_schedule::majority(), *max_iter);
                break;
            case decoder_id::weighted:
                res = decode_weighted_erasure(
                    g, rw, weight_schedule(parse_double_list(*weights_text)), *max_iter);
                break;
            case decoder_id::bp:
                res = decode_bp(g, initial_llr(rw), *max_iter);
                break;
        }
        std::ofstream file;
        std::ostream& os = open_output(*out_path, file);
        os << "status,iterations,residual\n";
        os << (res.status == decode_status::success
                   ? "success"
                   : res.status == decode_status::stall ? "stall" : "iteration-cap")
           << ',' << res.iterations << ',' << res.residual << '\n';
        for (std::size_t i = 0; i < res.word.size(); ++i) {
            os << static_cast<int>(res.word[i]) << (i + 1 < res.word.size() ? ' ' : '\n');
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDPC workbench: ensembles, message-passing decoders, density evolution"};
    app.require_subcommand(1);
    add_simulate(app);
    add_threshold(app);
    add_concentration(app);
    add_ira(app);
    add_distributions(app);
    add_encode(app);
    add_decode(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ldpc::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ldpc::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ldpc::invalid_distribution& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
