#include <doctest.h>

#include <cmath>

#include "tdho/profiles.hpp"

using namespace tdho;

namespace {

ParameterProfile constant_profile(double M, double Omega, double B, double e = 1.0,
                                  double theta = 0.0) {
    return ParameterProfile(TimeFunction::constant(M), TimeFunction::constant(Omega),
                            TimeFunction::constant(B), e, theta);
}

}  // namespace

TEST_CASE("commutative map on the worked values") {
    // zero field
    auto ep = effective_commutative(constant_profile(1, 1, 0), 0.0);
    CHECK(ep.mu == 1.0);
    CHECK(ep.omega_sq == 1.0);
    CHECK(ep.nu == 0.0);
    // Landau limit, Omega = 0
    ep = effective_commutative(constant_profile(1, 0, 2), 0.0);
    CHECK(ep.mu == 1.0);
    CHECK(ep.omega_sq == 1.0);
    CHECK(ep.nu == 1.0);
    // M=2, Omega=1, B=2: mu=2, omega^2 = 2*1 + 4/8 = 2.5, nu = 2/4 = 0.5
    ep = effective_commutative(constant_profile(2, 1, 2), 0.0);
    CHECK(ep.mu == 2.0);
    CHECK(ep.omega_sq == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(ep.nu == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("noncommutative map on the worked values") {
    // M=1, Omega=0, B=2, e=1, theta=0.1: 1/mu = (4.2)^2/16 = 1.1025,
    // omega^2 = 1, nu = 4.2*2/8 = 1.05
    auto ep = effective_noncommutative(constant_profile(1, 0, 2, 1, 0.1), 0.0);
    CHECK(1.0 / ep.mu == doctest::Approx(1.1025).epsilon(1e-15));
    CHECK(ep.omega_sq == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ep.nu == doctest::Approx(1.05).epsilon(1e-15));
    // M=1, Omega=1, B=0, theta=0.5: 1/mu = 1 + 0.0625, omega^2 = 1, nu = 0.25
    ep = effective_noncommutative(constant_profile(1, 1, 0, 1, 0.5), 0.0);
    CHECK(1.0 / ep.mu == doctest::Approx(1.0625).epsilon(1e-15));
    CHECK(ep.omega_sq == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ep.nu == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("theta = 0 reduces the noncommutative map to the commutative one") {
    const double Ms[] = {1.0, 2.0, 0.7};
    const double Oms[] = {0.0, 1.0, 2.3};
    const double Bs[] = {0.0, 2.0, -1.5};
    for (double M : Ms)
        for (double Om : Oms)
            for (double B : Bs) {
                const auto p = constant_profile(M, Om, B, 1.0, 0.0);
                const auto c = effective_commutative(p, 0.0);
                const auto nc = effective_noncommutative(p, 0.0);
                CHECK(nc.mu == doctest::Approx(c.mu).epsilon(1e-14));
                CHECK(nc.omega_sq == doctest::Approx(c.omega_sq).epsilon(1e-14));
                CHECK(nc.nu == doctest::Approx(c.nu).epsilon(1e-14));
            }
}

TEST_CASE("omega^2 is identical under both maps for any theta") {
    const auto p = constant_profile(1.3, 0.8, -2.0, 1.0, 0.4);
    const auto c = effective_commutative(p, 0.0);
    const auto nc = effective_noncommutative(p, 0.0);
    CHECK(nc.omega_sq == doctest::Approx(c.omega_sq).epsilon(1e-15));
}

TEST_CASE("Landau-limit identity omega^2 mu = nu^2 mu^2") {
    for (double M : {0.5, 1.0, 3.0})
        for (double B : {0.5, 2.0, -1.0}) {
            const auto ep = effective_commutative(constant_profile(M, 0.0, B), 0.0);
            CHECK(ep.omega_sq * ep.mu ==
                  doctest::Approx(ep.nu * ep.nu * ep.mu * ep.mu).epsilon(1e-14));
        }
}

TEST_CASE("non-positive mass raises a domain error naming the time") {
    const ParameterProfile p(TimeFunction::ramp(1.0, -1.0, 0.0, 1.0),
                             TimeFunction::constant(1.0), TimeFunction::constant(0.0),
                             1.0, 0.0);
    CHECK_NOTHROW(effective_commutative(p, 0.0));
    CHECK_THROWS_WITH_AS(effective_commutative(p, 0.75),
                         doctest::Contains("t = 0.75"), std::domain_error);
    CHECK_THROWS_AS(effective_noncommutative(p, 0.75), std::domain_error);
}

TEST_CASE("Bopp-shift expansion agrees with the reduced Hamiltonian") {
    // theta = 0: trivially equal
    CHECK(bopp_shift_check(constant_profile(1, 1, 1, 1, 0.0), 0.0) <= 1e-13);
    // the two derived cases from the map tests
    CHECK(bopp_shift_check(constant_profile(1, 0, 2, 1, 0.1), 0.0) <= 1e-10);
    CHECK(bopp_shift_check(constant_profile(1, 1, 0, 1, 0.5), 0.0) <= 1e-10);
    // a generic crooked case, time-dependent profile
    const ParameterProfile p(TimeFunction::sinusoid(1.2, 0.1, 0.9),
                             TimeFunction::sinusoid(1.0, 0.2, 1.0),
                             TimeFunction::tanh_step(2.0, 3.0, 0.0, 0.5), 1.0, 0.3);
    CHECK(bopp_shift_check(p, 0.7) <= 1e-10);
}

TEST_CASE("EffectiveModel picks the map by theta and differentiates mu") {
    const double h = 1e-5;
    const ParameterProfile nc(TimeFunction::sinusoid(1.2, 0.1, 0.9),
                              TimeFunction::sinusoid(1.0, 0.2, 1.0),
                              TimeFunction::tanh_step(2.0, 3.0, 0.0, 0.5), 1.0, 0.3);
    const EffectiveModel model(nc);
    for (double t : {-0.8, 0.0, 0.6, 1.9}) {
        const auto direct = effective_noncommutative(nc, t);
        CHECK(model.mu(t) == direct.mu);
        const double fd = (model.mu(t - 2 * h) - 8 * model.mu(t - h) +
                           8 * model.mu(t + h) - model.mu(t + 2 * h)) /
                          (12 * h);
        CHECK(model.mu_dot(t) == doctest::Approx(fd).epsilon(1e-8));
    }
    const EffectiveModel comm(constant_profile(2.0, 1.0, 1.0));
    CHECK(comm.mu(0.0) == 2.0);
    CHECK(comm.mu_dot(0.0) == 0.0);
    CHECK(comm.is_constant());
}

TEST_CASE("profile breakpoints are merged, sorted, and clipped to the horizon") {
    const ParameterProfile p(TimeFunction::step(1.0, 2.0, 0.5),
                             TimeFunction::ramp(0.0, 1.0, -1.0, 1.0),
                             TimeFunction::step(0.0, 1.0, 0.5), 1.0, 0.0);
    const auto bp = p.breakpoints(-2.0, 2.0);
    REQUIRE(bp.size() == 3);  // -1, 0.5 (deduplicated), 1
    CHECK(bp[0] == -1.0);
    CHECK(bp[1] == 0.5);
    CHECK(bp[2] == 1.0);
    CHECK(p.breakpoints(0.6, 0.9).empty());
}
