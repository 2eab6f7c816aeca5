#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "faddeyeva/regions.hpp"

using namespace faddeyeva;

TEST_CASE("rho basics") {
    CHECK(rho(0.0, 0.0) == 0.0);
    CHECK(rho(6.3, 0.0) == 1.0);
    CHECK(rho(1.0, 1.0) == Catch::Approx(0.2772149993281115).epsilon(1e-12));
    CHECK(rho(0.0, 4.4) == 1.0);
}

TEST_CASE("rho is symmetric under sign flips") {
    const double xs[] = {0.0, 0.3, 1.8396, 6.3, 17.2, 29.9};
    const double ys[] = {0.0, 1e-12, 0.031623, 2.5, 29.9};
    for (double x : xs)
        for (double y : ys) {
            const double r = rho(x, y);
            CHECK(rho(-x, y) == r);
            CHECK(rho(x, -y) == r);
            CHECK(rho(-x, -y) == r);
        }
}

TEST_CASE("classify region examples") {
    CHECK(classify(1.0, 1.0) == RegionLabel::S);
    CHECK(classify(6.3, 1e-6) == RegionLabel::RemedyStrip);
    CHECK(classify(6.3, 1e-6, default_params(), false) == RegionLabel::Q);
    CHECK(classify(25.0, 1e-8) == RegionLabel::Q);
    CHECK(classify(3.0, 2.0) == RegionLabel::R);
}

TEST_CASE("strip boundary tie-breaking") {
    CHECK(classify(1.8396, 0.01) == RegionLabel::RemedyStrip);
    CHECK(classify(1.8395, 0.01) == RegionLabel::S);
    CHECK(rho(1.8395, 0.01) < 0.292);
    // inclusive bounds
    CHECK(classify(20.0, 0.01) == RegionLabel::RemedyStrip);
    CHECK(classify(4.0, 0.031623) == RegionLabel::RemedyStrip);
    CHECK(classify(20.0000000001, 0.01) == RegionLabel::Q);
    CHECK(classify(4.0, 0.0316231) == RegionLabel::R);
}

TEST_CASE("strip_x_min is consistent with x0 * rho_inner") {
    const auto& p = default_params();
    CHECK(std::fabs(p.x0 * p.rho_inner - p.strip_x_min) < 5e-5);
    CHECK(p.rho_inner > 0.0);
    CHECK(p.rho_inner < p.rho_outer);
}

TEST_CASE("classify is total and remedy-off never yields the strip") {
    for (int i = 0; i <= 60; ++i) {
        for (int j = 0; j <= 60; ++j) {
            const double x = i * 0.5;
            const double y = j * 0.5;
            const RegionLabel on = classify(x, y);
            const RegionLabel off = classify(x, y, default_params(), false);
            CHECK(off != RegionLabel::RemedyStrip);
            if (on != RegionLabel::RemedyStrip) CHECK(on == off);
            CHECK(classify(x, y) == on);  // deterministic
        }
    }
}

TEST_CASE("without the strip the rho partition is reproduced") {
    const auto& p = default_params();
    for (int i = 0; i < 400; ++i) {
        const double x = 0.07 * i;
        for (double y : {1e-9, 0.02, 0.4, 3.7, 21.0}) {
            const double r = rho(x, y);
            const RegionLabel lab = classify(x, y, p, false);
            if (r <= p.rho_inner) CHECK(lab == RegionLabel::S);
            else if (r < p.rho_outer) CHECK(lab == RegionLabel::R);
            else CHECK(lab == RegionLabel::Q);
        }
    }
}

TEST_CASE("nu_for spec points and clamping") {
    CHECK(nu_for(1.0) == 16);
    CHECK(nu_for(1000.0) == 3);
    for (double r = 1.0; r < 500.0; r *= 1.07) {
        const int nu = nu_for(r);
        CHECK(nu >= 3);
        CHECK(nu <= 16);
    }
}

TEST_CASE("nu_for is monotone nonincreasing") {
    int prev = nu_for(1.0);
    for (double r = 1.0; r < 2000.0; r *= 1.03) {
        const int nu = nu_for(r);
        CHECK(nu <= prev);
        prev = nu;
    }
}

TEST_CASE("downward parameters are sane across R") {
    for (double r = 0.2921; r < 1.0; r += 0.007) {
        const DownwardParams d = downward_params(r);
        CHECK(d.h > 0.0);
        CHECK(d.kapn >= 7);
        CHECK(d.kapn <= d.nu);
        CHECK(d.nu <= 41);
    }
}
