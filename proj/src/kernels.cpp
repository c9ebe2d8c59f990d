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

#include <stdexcept>

namespace risfocus::kernels
{

namespace detail
{

std::complex<double> dotu_scalar(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; i++)
    {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

std::complex<double> dotc_scalar(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; i++)
    {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace detail

static bool detect_avx2()
{
#if defined(RISFOCUS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool avx2_available()
{
    static const bool available = detect_avx2();
    return available;
}

static Backend g_backend = avx2_available() ? Backend::avx2 : Backend::scalar;

Backend active() { return g_backend; }

void force_backend(Backend b)
{
    if (b == Backend::avx2 && !avx2_available())
        throw std::runtime_error("kernels: AVX2 backend not available on this CPU/build");
    g_backend = b;
}

std::string to_string(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

std::complex<double> dotu(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
#ifdef RISFOCUS_HAVE_AVX2
    if (g_backend == Backend::avx2)
        return detail::dotu_avx2(a, b, n);
#endif
    return detail::dotu_scalar(a, b, n);
}

std::complex<double> dotc(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
#ifdef RISFOCUS_HAVE_AVX2
    if (g_backend == Backend::avx2)
        return detail::dotc_avx2(a, b, n);
#endif
    return detail::dotc_scalar(a, b, n);
}

} // namespace risfocus::kernels
