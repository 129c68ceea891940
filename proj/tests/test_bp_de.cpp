#include <doctest.h>

#include <cmath>
#include <random>

#include "ldpc/bp_de.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/scalar_de.hpp"

using namespace ldpc;

namespace {

quantized_density point_mass(const bp_engine& eng, double llr) {
    quantized_density d(eng.grid());
    d.deposit(llr, 1.0);
    return d;
}

quantized_density reflect(const quantized_density& d) {
    quantized_density out(d.grid);
    out.mass_pos_inf = d.mass_neg_inf;
    out.mass_neg_inf = d.mass_pos_inf;
    for (int k = 0; k < d.grid.bins(); ++k) {
        out.pmf[static_cast<std::size_t>(d.grid.bins() - 1 - k)] =
            d.pmf[static_cast<std::size_t>(k)];
    }
    return out;
}

double boxplus_ref(double a, double b) {
    return 2.0 * std::atanh(std::tanh(a / 2.0) * std::tanh(b / 2.0));
}

}  // namespace

TEST_SUITE_BEGIN("bp_de");

TEST_CASE("grid constructor checks alignment") {
    const llr_grid g = llr_grid::symmetric(30.0, 0.01);
    CHECK(g.bins() == 6001);
    CHECK(g.value(g.center()) == doctest::Approx(0.0));
    CHECK(g.value(0) == doctest::Approx(-30.0));
    CHECK_THROWS_AS(llr_grid::symmetric(1.0, 0.3), invalid_parameter);
}

TEST_CASE("initial densities") {
    auto eng = shared_engine(default_llr_grid());
    SUBCASE("bsc point masses snap to the nearest bins") {
        const auto d = eng->initial_density(channel_model::bsc(0.11));
        const double mag = std::log(0.89 / 0.11);
        const int off = static_cast<int>(std::lround(mag / 0.01));
        CHECK(d.pmf[static_cast<std::size_t>(d.grid.center() + off)] == doctest::Approx(0.89));
        CHECK(d.pmf[static_cast<std::size_t>(d.grid.center() - off)] == doctest::Approx(0.11));
        CHECK(d.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(d.error_mass() == doctest::Approx(0.11));
    }
    SUBCASE("bec splits between erasure and certainty") {
        const auto d = eng->initial_density(channel_model::bec(0.37));
        CHECK(d.pmf[static_cast<std::size_t>(d.grid.center())] == doctest::Approx(0.37));
        CHECK(d.mass_pos_inf == doctest::Approx(0.63));
        CHECK(d.error_mass() == doctest::Approx(0.185));
    }
    SUBCASE("biawgn discretized gaussian") {
        const auto d = eng->initial_density(channel_model::biawgn(0.9));
        CHECK(d.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        const double mu = 2.0 / 0.81;
        CHECK(d.mean() == doctest::Approx(mu).epsilon(1e-4));
        CHECK(d.error_mass() == doctest::Approx(q_function(1.0 / 0.9)).epsilon(1e-3));
    }
    SUBCASE("grid too narrow") {
        auto tiny = shared_engine(llr_grid::symmetric(5.0, 0.01));
        CHECK_THROWS_AS(tiny->initial_density(channel_model::bsc(0.001)), invalid_parameter);
        CHECK_THROWS_AS(tiny->initial_density(channel_model::biawgn(0.4)), invalid_parameter);
    }
}

TEST_CASE("pairwise check combine against direct evaluation") {
    auto eng = shared_engine(default_llr_grid());
    SUBCASE("two unit point masses") {
        const auto out = eng->check_combine(point_mass(*eng, 1.0), point_mass(*eng, 1.0));
        CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(out.mean() == doctest::Approx(boxplus_ref(1.0, 1.0)).epsilon(1e-3));
        CHECK(std::abs(out.mean() - 0.43379) < 5e-3);
    }
    SUBCASE("band pair keeps sub-bin accuracy") {
        const auto out = eng->check_combine(point_mass(*eng, 5.0), point_mass(*eng, 4.5));
        CHECK(out.mean() == doctest::Approx(boxplus_ref(5.0, 4.5)).epsilon(2e-3));
    }
    SUBCASE("far pair degenerates to a copy") {
        const auto out = eng->check_combine(point_mass(*eng, 20.0), point_mass(*eng, 1.0));
        CHECK(out.mean() == doctest::Approx(boxplus_ref(20.0, 1.0)).epsilon(1e-3));
        CHECK(std::abs(out.mean() - 1.0) < 1e-3);
    }
    SUBCASE("negative far side reflects") {
        const auto out = eng->check_combine(point_mass(*eng, -20.0), point_mass(*eng, 1.0));
        CHECK(out.mean() == doctest::Approx(-1.0).epsilon(1e-3));
    }
    SUBCASE("infinite mass acts as identity") {
        quantized_density inf(eng->grid());
        inf.mass_pos_inf = 1.0;
        const auto out = eng->check_combine(inf, point_mass(*eng, 1.7));
        CHECK(out.mean() == doctest::Approx(1.7).epsilon(1e-9));
        CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("erasure absorbs") {
        const auto out = eng->check_combine(point_mass(*eng, 0.0), point_mass(*eng, 2.5));
        CHECK(out.pmf[static_cast<std::size_t>(eng->grid().center())] ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("check combine respects sign symmetry and commutes") {
    auto eng = shared_engine(default_llr_grid());
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-9.0, 9.0);
    quantized_density a(eng->grid()), b(eng->grid());
    for (int i = 0; i < 24; ++i) {
        a.deposit(unif(rng), 1.0 / 32.0);
        b.deposit(unif(rng), 1.0 / 24.0);
    }
    a.mass_pos_inf = 0.15;
    a.pmf[static_cast<std::size_t>(a.grid.center())] += 0.1;  // erasure mass

    const auto ab = eng->check_combine(a, b);
    const auto ba = eng->check_combine(b, a);
    const auto ref = eng->check_combine(reflect(a), b);
    for (int k = 0; k < eng->grid().bins(); ++k) {
        CHECK(ab.pmf[static_cast<std::size_t>(k)] ==
              doctest::Approx(ba.pmf[static_cast<std::size_t>(k)]).epsilon(1e-9));
        CHECK(ref.pmf[static_cast<std::size_t>(k)] ==
              doctest::Approx(ab.pmf[static_cast<std::size_t>(eng->grid().bins() - 1 - k)])
                  .epsilon(1e-9));
    }
    CHECK(ab.total_mass() == doctest::Approx(a.total_mass() * b.total_mass()).epsilon(1e-9));
}

TEST_CASE("variable convolution adds means and saturates at the ends") {
    auto eng = shared_engine(default_llr_grid());
    SUBCASE("means add") {
        const auto out = eng->var_convolve(point_mass(*eng, 1.25), point_mass(*eng, -0.75));
        CHECK(out.mean() == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("dense path matches the sparse one") {
        const auto g1 = eng->initial_density(channel_model::biawgn(1.0));
        const auto g2 = eng->initial_density(channel_model::biawgn(0.8));
        const auto out = eng->var_convolve(g1, g2);
        CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(out.mean() == doctest::Approx(g1.mean() + g2.mean()).epsilon(1e-6));
    }
    SUBCASE("saturation keeps mass") {
        const auto out = eng->var_convolve(point_mass(*eng, 29.0), point_mass(*eng, 15.0));
        CHECK(out.pmf.back() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("opposing certainties cancel") {
        quantized_density plus(eng->grid()), minus(eng->grid());
        plus.mass_pos_inf = 1.0;
        minus.mass_neg_inf = 1.0;
        const auto out = eng->var_convolve(plus, minus);
        CHECK(out.pmf[static_cast<std::size_t>(eng->grid().center())] == doctest::Approx(1.0));
    }
}

TEST_CASE("perfect channel stays perfect through a step") {
    auto eng = shared_engine(default_llr_grid());
    quantized_density perfect(eng->grid());
    perfect.mass_pos_inf = 1.0;
    const auto out = eng->de_step(perfect, perfect, regular_pair(3, 6));
    CHECK(out.mass_pos_inf == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("BEC densities reproduce the scalar recursion exactly") {
    auto eng = shared_engine(default_llr_grid());
    const edge_perspective ep = regular_pair(3, 6);
    const double alpha = 0.42;
    const auto channel = eng->initial_density(channel_model::bec(alpha));
    quantized_density state = channel;
    double x = alpha;
    for (int iter = 1; iter <= 10; ++iter) {
        state = eng->de_step(state, channel, ep);
        x = bec_de_step(x, alpha, ep);
        CHECK(state.pmf[static_cast<std::size_t>(eng->grid().center())] ==
              doctest::Approx(x).epsilon(1e-6));
        CHECK(std::abs(state.total_mass() - 1.0) < 1e-12);  // renormalized
    }
}

TEST_CASE("mass is conserved along a BSC evolution") {
    // raw per-step deviation, measured through the primitives before the
    // engine's renormalization
    auto eng = shared_engine(default_llr_grid());
    const auto channel = eng->initial_density(channel_model::bsc(0.08));
    quantized_density state = channel;
    for (int iter = 1; iter <= 30; ++iter) {
        quantized_density chk = state;
        for (int k = 0; k < 4; ++k) chk = eng->check_combine(chk, state);
        quantized_density next = channel;
        for (int k = 0; k < 2; ++k) next = eng->var_convolve(next, chk);
        CHECK(std::abs(next.total_mass() - 1.0) < 1e-9);
        next.normalize();
        state = next;
    }
}

TEST_CASE("bsc evolution decides convergence on both sides") {
    auto eng = shared_engine(default_llr_grid());
    const edge_perspective ep = regular_pair(3, 6);
    CHECK(eng->evolve(channel_model::bsc(0.06), ep).converged);
    CHECK(!eng->evolve(channel_model::bsc(0.12), ep).converged);
}

TEST_CASE("bec threshold via densities matches the analytic value") {
    auto eng = shared_engine(default_llr_grid());
    const auto thr = eng->bp_threshold(channel_kind::bec, regular_pair(3, 6));
    CHECK(std::abs(thr.value - 0.4294) < 1e-3);
}

TEST_SUITE_END();
