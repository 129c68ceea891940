#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ldpc/errors.hpp"
#include "ldpc/simulation.hpp"

using namespace ldpc;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("decoder names round trip") {
    for (const char* name : {"peel", "bec-mp", "gal-a", "gal-b", "weighted", "bp"}) {
        CHECK(decoder_name(parse_decoder(name)) == name);
    }
    CHECK_THROWS_AS(parse_decoder("turbo"), config_error);
}

TEST_CASE("config validation") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 5;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.n = 120;
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.trials = 10;
    cfg.channel_params = {1.2};
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.channel_params = {0.4};
    CHECK_NOTHROW(cfg.validate());
    cfg.n = 121;  // 121*3 not divisible by 6
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("alpha = 0 gives zero BER") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 120;
    cfg.family = channel_kind::bec;
    cfg.channel_params = {0.0};
    cfg.decoder = decoder_id::peel;
    cfg.trials = 1;
    cfg.seed = 5;
    const auto records = run_ber_sweep(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].ber == 0.0);
    CHECK(records[0].wer == 0.0);
}

TEST_CASE("identical seeds reproduce records exactly") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 240;
    cfg.family = channel_kind::bec;
    cfg.channel_params = {0.35, 0.42};
    cfg.decoder = decoder_id::peel;
    cfg.trials = 40;
    cfg.seed = 77;
    const auto a = run_ber_sweep(cfg);
    const auto b = run_ber_sweep(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].bit_errors == b[i].bit_errors);
        CHECK(a[i].ber == b[i].ber);
        CHECK(a[i].wer == b[i].wer);
        CHECK(a[i].trials_run == b[i].trials_run);
    }
}

TEST_CASE("BER is monotone in the channel parameter") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 1002;
    cfg.family = channel_kind::bec;
    cfg.channel_params = {0.30, 0.38, 0.46};
    cfg.decoder = decoder_id::peel;
    cfg.trials = 30;
    cfg.seed = 3;
    cfg.target_bit_errors = 1 << 30;
    const auto records = run_ber_sweep(cfg);
    CHECK(records[0].ber <= records[1].ber + 0.01);
    CHECK(records[1].ber <= records[2].ber + 0.01);
}

TEST_CASE("random-codeword mode cross-validates the all-ones shortcut") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 504;
    cfg.family = channel_kind::bsc;
    cfg.channel_params = {0.02};
    cfg.decoder = decoder_id::gal_a;
    cfg.max_iter = 40;
    cfg.trials = 30;
    cfg.seed = 11;
    cfg.target_bit_errors = 1 << 30;
    const auto ones = run_ber_sweep(cfg);
    cfg.random_codeword = true;
    const auto random = run_ber_sweep(cfg);
    // the symmetry lemma makes the two modes statistically identical; with
    // shared noise seeds the error counts agree exactly
    CHECK(ones[0].bit_errors == random[0].bit_errors);
}

TEST_CASE("records round trip through CSV") {
    simulation_config cfg;
    cfg.code = code_spec::regular(3, 6);
    cfg.n = 120;
    cfg.family = channel_kind::bec;
    cfg.channel_params = {0.3, 0.4};
    cfg.decoder = decoder_id::bec_mp;
    cfg.trials = 5;
    const auto records = run_ber_sweep(cfg);
    std::stringstream ss;
    write_records_csv(ss, records);
    const auto back = read_records_csv(ss);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].code == records[i].code);
        CHECK(back[i].channel == records[i].channel);
        CHECK(back[i].decoder == records[i].decoder);
        CHECK(back[i].ber == records[i].ber);
        CHECK(back[i].bit_errors == records[i].bit_errors);
        CHECK(back[i].seed == records[i].seed);
    }
    std::stringstream jl;
    write_records_jsonl(jl, records);
    CHECK(jl.str().find("\"ber\":") != std::string::npos);
}

TEST_CASE("ira sweep runs through the harness") {
    simulation_config cfg;
    cfg.code = code_spec::ira({polynomial::monomial(1), polynomial({1.0})});
    cfg.n = 200;  // information length
    cfg.family = channel_kind::bec;
    cfg.channel_params = {0.2};
    cfg.decoder = decoder_id::peel;
    cfg.trials = 10;
    const auto records = run_ber_sweep(cfg);
    CHECK(records[0].bits == 10 * 200);
    CHECK(records[0].ber < 0.2);
}

TEST_CASE("concentration dispersion shrinks with block length") {
    const auto report = run_concentration(3, 6, 0.40, 24, {504, 2004}, 10, 6, 99);
    REQUIRE(report.sizes.size() == 2);
    CHECK(report.sizes[0].std_ber > report.sizes[1].std_ber);
    // depth-1 message erasure rate matches density evolution on girth-6
    // conditioned graphs
    for (const auto& s : report.sizes) {
        CHECK(std::abs(s.msg_rate_mean - s.de_prediction) < 3.0 * s.msg_rate_se + 1e-6);
    }
}

TEST_CASE("builtin threshold table emits well-formed CSV") {
    // spot check only the cheap BEC rows here; the full table is exercised by
    // the acceptance suite
    std::vector<threshold_row> rows;
    rows.push_back({"peel", "regular:3,6", "bec", 0.4294, 0.4293, 0.4295, 1e-4, 12});
    std::stringstream ss;
    write_threshold_csv(ss, rows);
    CHECK(ss.str().find("decoder,code,channel") == 0);
    CHECK(ss.str().find("regular:3,6") != std::string::npos);
}

TEST_SUITE_END();
