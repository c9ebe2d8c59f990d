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

#include "risfocus/kernels.hpp"

#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

using namespace risfocus;
using cd = std::complex<double>;

namespace
{

std::vector<cd> random_vec(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cd> v(n);
    for (auto &x : v)
        x = {u(rng), u(rng)};
    return v;
}

cd reference_dotu(const std::vector<cd> &a, const std::vector<cd> &b)
{
    cd s = 0.0;
    for (std::size_t i = 0; i < a.size(); i++)
        s += a[i] * b[i];
    return s;
}

cd reference_dotc(const std::vector<cd> &a, const std::vector<cd> &b)
{
    cd s = 0.0;
    for (std::size_t i = 0; i < a.size(); i++)
        s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace

TEST_CASE("scalar kernels match a plain reference")
{
    std::mt19937_64 rng(21);
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 49u, 100u})
    {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);
        cd du = kernels::detail::dotu_scalar(a.data(), b.data(), n);
        cd dc = kernels::detail::dotc_scalar(a.data(), b.data(), n);
        CHECK(std::abs(du - reference_dotu(a, b)) < 1e-13 * (1.0 + static_cast<double>(n)));
        CHECK(std::abs(dc - reference_dotc(a, b)) < 1e-13 * (1.0 + static_cast<double>(n)));
    }
}

#ifdef RISFOCUS_HAVE_AVX2
TEST_CASE("avx2 kernels are equivalent to the scalar reference")
{
    if (!kernels::avx2_available())
        return; // nothing to compare on this CPU

    std::mt19937_64 rng(22);
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 16u, 17u, 49u, 100u, 1001u})
    {
        auto a = random_vec(rng, n);
        auto b = random_vec(rng, n);
        double tol = 1e-13 * (1.0 + static_cast<double>(n));
        CHECK(std::abs(kernels::detail::dotu_avx2(a.data(), b.data(), n) -
                       kernels::detail::dotu_scalar(a.data(), b.data(), n)) < tol);
        CHECK(std::abs(kernels::detail::dotc_avx2(a.data(), b.data(), n) -
                       kernels::detail::dotc_scalar(a.data(), b.data(), n)) < tol);
    }
}
#endif

TEST_CASE("backend dispatch")
{
    kernels::Backend initial = kernels::active();

    kernels::force_backend(kernels::Backend::scalar);
    CHECK(kernels::active() == kernels::Backend::scalar);

    std::mt19937_64 rng(23);
    auto a = random_vec(rng, 33);
    auto b = random_vec(rng, 33);
    cd scalar_result = kernels::dotu(a.data(), b.data(), a.size());

    if (kernels::avx2_available())
    {
        kernels::force_backend(kernels::Backend::avx2);
        CHECK(kernels::active() == kernels::Backend::avx2);
        CHECK(std::abs(kernels::dotu(a.data(), b.data(), a.size()) - scalar_result) < 1e-12);
    }
    else
    {
        CHECK_THROWS(kernels::force_backend(kernels::Backend::avx2));
    }

    kernels::force_backend(initial);
}
