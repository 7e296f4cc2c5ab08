#include <doctest.h>

#include <random>

#include "microgrid/components.hpp"
#include "microgrid/errors.hpp"
#include "microgrid/rng.hpp"

using namespace microgrid;
using doctest::Approx;

namespace {
const PvParams kPv{}; // study values: 15.4%, 1.9 m2
DeviceRatings study_ratings(double el_kw = 49.73, double fc_kw = 48.31) {
    DeviceRatings r;
    r.electrolyzer_kw = el_kw;
    r.fuel_cell_kw = fc_kw;
    r.converter_kw = 53.59;
    return r;
}
} // namespace

TEST_CASE("pv output matches hand products") {
    // 0.154 * 1 * 1.9 * 1000 W = 292.6 W
    CHECK(pv_output_kw(kPv, 1, 1000.0) == Approx(0.2926).epsilon(1e-12));
    CHECK(pv_output_kw(kPv, 384, 1000.0) == Approx(112.3584).epsilon(1e-12));
    CHECK(pv_output_kw(kPv, 384, 0.0) == 0.0);
    CHECK_THROWS_AS(pv_output_kw(kPv, -1, 100.0), DomainError);
    CHECK_THROWS_AS(pv_output_kw(kPv, 1, -100.0), DomainError);
}

TEST_CASE("pv output is linear in count and irradiance") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const double n = uniform_in(rng, 0.0, 1000.0);
        const double g = uniform_in(rng, 0.0, 1500.0);
        const double k = uniform_in(rng, 0.0, 5.0);
        CHECK(pv_output_kw(kPv, k * n, g) == Approx(k * pv_output_kw(kPv, n, g)).epsilon(1e-9));
        CHECK(pv_output_kw(kPv, n, k * g) == Approx(k * pv_output_kw(kPv, n, g)).epsilon(1e-9));
    }
}

TEST_CASE("fuel cell output applies the conversion efficiency") {
    const auto r = study_ratings();
    CHECK(fuel_cell_output_kw(10.0, r) == Approx(5.0).epsilon(1e-12));
    CHECK(fuel_cell_output_kw(0.0, r) == 0.0);
    // Drawing rating/efficiency gives exactly the rated output.
    CHECK(fuel_cell_output_kw(96.62, r) == Approx(48.31).epsilon(1e-12));
    CHECK_THROWS_AS(fuel_cell_output_kw(-1.0, r), DomainError);
}

TEST_CASE("electrolyzer output applies efficiency and enforces the rating contract") {
    const auto r = study_ratings();
    CHECK(electrolyzer_output_kw(10.0, r) == Approx(7.5).epsilon(1e-12));
    CHECK(electrolyzer_output_kw(0.0, r) == 0.0);
    CHECK(electrolyzer_output_kw(49.73, r) == Approx(37.2975).epsilon(1e-12));
    CHECK_THROWS_AS(electrolyzer_output_kw(49.74, r), ContractError);
}

TEST_CASE("power conversions are homogeneous of degree one") {
    const auto r = study_ratings(1e9, 1e9); // ratings out of the way
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double p = uniform_in(rng, 0.0, 100.0);
        const double k = uniform_in(rng, 0.0, 10.0);
        CHECK(fuel_cell_output_kw(k * p, r) == Approx(k * fuel_cell_output_kw(p, r)).epsilon(1e-9));
        CHECK(electrolyzer_output_kw(k * p, r) ==
              Approx(k * electrolyzer_output_kw(p, r)).epsilon(1e-9));
    }
}

TEST_CASE("tank bounds from rated mass") {
    const auto small = tank_bounds(1.0);
    CHECK(small.floor_kwh == Approx(1.985).epsilon(1e-12));
    CHECK(small.capacity_kwh == Approx(39.7).epsilon(1e-12));

    const auto zero = tank_bounds(0.0);
    CHECK(zero.floor_kwh == 0.0);
    CHECK(zero.capacity_kwh == 0.0);

    const auto study = tank_bounds(52.63);
    CHECK(study.floor_kwh == Approx(104.47055).epsilon(1e-12));
    CHECK(study.capacity_kwh == Approx(2089.411).epsilon(1e-12));

    CHECK_THROWS_AS(tank_bounds(-1.0), DomainError);
}

namespace {
TankState big_tank(double energy) {
    TankState t;
    t.rated_mass_kg = 100.0; // capacity 3970, floor 198.5
    t.energy_kwh = energy;
    return t;
}
} // namespace

TEST_CASE("tank step follows the storage balance literally") {
    // charge: energy rises by the full hydrogen inflow
    auto charged = tank_step(big_tank(100.0 + 98.5), 10.0, 0.0, 1.0);
    CHECK(charged.state.energy_kwh == Approx(198.5 + 10.0).epsilon(1e-12));
    CHECK(charged.overflow_kwh == 0.0);

    // discharge: the stored energy drops by draw * eta_storage
    auto discharged = tank_step(big_tank(198.5 + 100.0), 0.0, 10.0, 1.0);
    CHECK(discharged.state.energy_kwh == Approx(198.5 + 100.0 - 9.5).epsilon(1e-12));

    // no flows: identity
    auto idle = tank_step(big_tank(500.0), 0.0, 0.0, 1.0);
    CHECK(idle.state.energy_kwh == 500.0);

    CHECK_THROWS_AS(tank_step(big_tank(500.0), 1.0, 1.0, 1.0), ContractError);
    CHECK_THROWS_AS(tank_step(big_tank(500.0), -1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("tank step clamps at both bounds and reports the clamp") {
    auto over = tank_step(big_tank(3965.0), 10.0, 0.0, 1.0);
    CHECK(over.state.energy_kwh == Approx(3970.0).epsilon(1e-12));
    CHECK(over.overflow_kwh == Approx(5.0).epsilon(1e-12));

    auto under = tank_step(big_tank(200.0), 0.0, 10.0, 1.0); // would drop to 190.5 < 198.5
    CHECK(under.state.energy_kwh == Approx(198.5).epsilon(1e-12));
    CHECK(under.shortfall_kwh == Approx(8.0).epsilon(1e-12));
}

TEST_CASE("tank trajectories stay inside bounds on random flow sequences") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        TankState t = big_tank(uniform_in(rng, 198.5, 3970.0));
        for (int step = 0; step < 200; ++step) {
            const bool charge = uniform01(rng) < 0.5;
            const double flow = uniform_in(rng, 0.0, 300.0);
            t = tank_step(t, charge ? flow : 0.0, charge ? 0.0 : flow, 1.0).state;
            REQUIRE(t.energy_kwh >= t.floor_kwh() - 1e-9);
            REQUIRE(t.energy_kwh <= t.capacity_kwh() + 1e-9);
        }
    }
}

TEST_CASE("round trip through the tank matches the balance algebra") {
    // Charging E then withdrawing w leaves E - 0.95 w; recovering the full
    // charge at the fuel cell input therefore needs w = E / 0.95.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const double e = uniform_in(rng, 1.0, 500.0);
        TankState t = big_tank(1000.0);
        t = tank_step(t, e, 0.0, 1.0).state;
        const double withdraw = e / t.storage_efficiency;
        t = tank_step(t, 0.0, withdraw, 1.0).state;
        CHECK(t.energy_kwh == Approx(1000.0).epsilon(1e-9));
    }
}
