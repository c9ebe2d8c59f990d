// SPDX-License-Identifier: Apache-2.0
//
// risfocus - inter-RIS beam focusing codebook construction and evaluation
// Copyright (C) 2026 the risfocus contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risfocus/arrays.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace risfocus;

TEST_CASE("direction cosines at axis-aligned directions")
{
    DirectionCosines c = direction_cosines({pi / 2, 0.0});
    CHECK(c.ax == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.ay == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.az == doctest::Approx(0.0).epsilon(1e-12));

    c = direction_cosines({0.0, 1.3});
    CHECK(std::abs(c.ax) < 1e-12);
    CHECK(std::abs(c.ay) < 1e-12);
    CHECK(c.az == doctest::Approx(1.0).epsilon(1e-12));

    c = direction_cosines({pi / 2, pi / 2});
    CHECK(std::abs(c.ax) < 1e-12);
    CHECK(c.ay == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(c.az) < 1e-12);
}

TEST_CASE("direction cosines have unit norm")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; i++)
    {
        DirectionCosines c = direction_cosines(testing::random_angle(rng));
        CHECK(std::abs(c.ax * c.ax + c.ay * c.ay + c.az * c.az - 1.0) < 1e-12);
    }
}

TEST_CASE("azimuth is normalized to [0, 2*pi)")
{
    CHECK(AngleDirection(1.0, -pi / 2).azimuth == doctest::Approx(1.5 * pi));
    CHECK(AngleDirection(1.0, two_pi).azimuth == doctest::Approx(0.0));
    CHECK(AngleDirection(1.0, 5.0 * two_pi + 0.25).azimuth == doctest::Approx(0.25));
    CHECK_THROWS_AS(AngleDirection(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AngleDirection(pi + 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("combined cosine sums the per-direction cosines")
{
    CHECK(combined_cosine({pi / 2, 0.0}, {pi / 2, pi}, Axis::x) == doctest::Approx(0.0));
    CHECK(combined_cosine({pi / 2, 0.0}, {pi / 2, 0.0}, Axis::x) == doctest::Approx(2.0));
    CHECK(combined_cosine({pi / 2, pi / 3}, {pi / 2, 2 * pi / 3}, Axis::z) == doctest::Approx(0.0));

    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; i++)
    {
        AngleDirection t = testing::random_angle(rng);
        AngleDirection r = testing::random_angle(rng);
        for (Axis axis : {Axis::x, Axis::y, Axis::z})
        {
            double c = combined_cosine(t, r, axis);
            CHECK(c >= -2.0 - 1e-12);
            CHECK(c <= 2.0 + 1e-12);
        }
    }
}

TEST_CASE("wave invariant")
{
    Wave w(0.0123);
    CHECK(std::abs(w.wavenumber() * w.wavelength - two_pi) < 1e-12);
    CHECK_THROWS_AS(Wave(0.0), std::invalid_argument);
}

TEST_CASE("steering vector basic shapes")
{
    Wave w(0.01);
    double q = w.wavelength / 4;

    ArrayGeometry single(1, 1, q, q, q, q);
    Eigen::VectorXcd v = steering_vector(single, {1.1, 2.2}, w);
    REQUIRE(v.size() == 1);
    CHECK(std::abs(v[0] - 1.0) < 1e-15);

    // Zenith: zero phase gradient along x.
    ArrayGeometry two(2, 1, q, q, q, q);
    v = steering_vector(two, {0.0, 0.0}, w);
    CHECK(std::abs(v[0] - 1.0) < 1e-12);
    CHECK(std::abs(v[1] - 1.0) < 1e-12);
}

TEST_CASE("steering vector 2x2 hand evaluation")
{
    // kappa*dx = pi/2; direction (pi/2, 0) has Ax=1, Az=0. Expected
    // ordering x-outer/z-inner: [1, 1, j, j] with j = exp(j*pi/2).
    Wave w(0.01);
    double q = w.wavelength / 4;
    ArrayGeometry g(2, 2, q, q, q, q);
    Eigen::VectorXcd v = steering_vector(g, {pi / 2, 0.0}, w);
    std::complex<double> j90 = std::polar(1.0, pi / 2);
    REQUIRE(v.size() == 4);
    CHECK(std::abs(v[0] - 1.0) < 1e-12);
    CHECK(std::abs(v[1] - 1.0) < 1e-12);
    CHECK(std::abs(v[2] - j90) < 1e-12);
    CHECK(std::abs(v[3] - j90) < 1e-12);
}

TEST_CASE("steering vector entries have unit modulus")
{
    std::mt19937_64 rng(13);
    Wave w(0.004);
    ArrayGeometry g(5, 3, 0.001, 0.0013, 0.001, 0.001);
    for (int i = 0; i < 50; i++)
    {
        Eigen::VectorXcd v = steering_vector(g, testing::random_angle(rng), w);
        for (Eigen::Index k = 0; k < v.size(); k++)
            CHECK(std::abs(std::abs(v[k]) - 1.0) < 1e-12);
    }
}

TEST_CASE("steering vector equals the Kronecker product of its 1-D factors")
{
    std::mt19937_64 rng(14);
    Wave w(0.01);
    ArrayGeometry g(4, 3, 0.0025, 0.0025, 0.0025, 0.0025);
    for (int i = 0; i < 25; i++)
    {
        AngleDirection a = testing::random_angle(rng);
        DirectionCosines c = direction_cosines(a);
        double kappa = w.wavenumber();

        Eigen::VectorXcd fx(g.nx), fz(g.nz);
        for (int n = 0; n < g.nx; n++)
            fx[n] = std::polar(1.0, kappa * g.dx * c.ax * n);
        for (int n = 0; n < g.nz; n++)
            fz[n] = std::polar(1.0, kappa * g.dz * c.az * n);

        Eigen::VectorXcd v = steering_vector(g, a, w);
        for (int n1 = 0; n1 < g.nx; n1++)
            for (int n2 = 0; n2 < g.nz; n2++)
                CHECK(v[static_cast<Eigen::Index>(n1) * g.nz + n2] == fx[n1] * fz[n2]);
    }
}

TEST_CASE("steering vector conjugation symmetry")
{
    // (pi - el, pi - az) negates Ax and Az, conjugating every entry.
    std::mt19937_64 rng(15);
    Wave w(0.01);
    ArrayGeometry g(4, 5, 0.0025, 0.0025, 0.0025, 0.0025);
    for (int i = 0; i < 25; i++)
    {
        AngleDirection a = testing::random_angle(rng);
        AngleDirection mirrored(pi - a.elevation, pi - a.azimuth);
        Eigen::VectorXcd v = steering_vector(g, a, w);
        Eigen::VectorXcd m = steering_vector(g, mirrored, w);
        for (Eigen::Index k = 0; k < v.size(); k++)
            CHECK(std::abs(m[k] - std::conj(v[k])) < 1e-12);
    }
}

TEST_CASE("array geometry validation")
{
    CHECK_THROWS_AS(ArrayGeometry(0, 1, 0.1, 0.1, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ArrayGeometry(1, 1, 0.0, 0.1, 0.1, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ArrayGeometry(1, 1, 0.1, 0.1, -0.1, 0.1), std::invalid_argument);
    CHECK(ArrayGeometry(7, 7, 0.1, 0.1, 0.1, 0.1).size() == 49);
}
