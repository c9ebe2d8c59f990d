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
//
// AVX2 variants of the complex dot-product kernels. Compiled with
// -mavx2 -mfma; only dispatched to after a runtime CPU check.

#include "risfocus/kernels.hpp"

#ifdef RISFOCUS_HAVE_AVX2

#include <immintrin.h>

namespace risfocus::kernels::detail
{

namespace
{

// Accumulates acc_a = sum a .* b and acc_b = sum a .* swap_pairs(b) over
// 2 complex doubles per 256-bit lane. The caller combines even/odd lanes
// into the real/imaginary parts of the requested dot-product flavor.
inline void accumulate_products(const double *pa, const double *pb, std::size_t pairs,
                                __m256d &acc_a, __m256d &acc_b)
{
    acc_a = _mm256_setzero_pd();
    acc_b = _mm256_setzero_pd();
    for (std::size_t i = 0; i < pairs; i++)
    {
        __m256d a = _mm256_loadu_pd(pa + 4 * i);
        __m256d b = _mm256_loadu_pd(pb + 4 * i);
        __m256d bs = _mm256_permute_pd(b, 0x5); // swap re/im within each pair
        acc_a = _mm256_fmadd_pd(a, b, acc_a);
        acc_b = _mm256_fmadd_pd(a, bs, acc_b);
    }
}

struct LaneSums
{
    double a_even, a_odd, b_even, b_odd;
};

inline LaneSums reduce_lanes(__m256d acc_a, __m256d acc_b)
{
    alignas(32) double ta[4], tb[4];
    _mm256_store_pd(ta, acc_a);
    _mm256_store_pd(tb, acc_b);
    return {ta[0] + ta[2], ta[1] + ta[3], tb[0] + tb[2], tb[1] + tb[3]};
}

} // namespace

std::complex<double> dotu_avx2(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    std::size_t pairs = n / 2;

    __m256d acc_a, acc_b;
    accumulate_products(pa, pb, pairs, acc_a, acc_b);
    LaneSums s = reduce_lanes(acc_a, acc_b);

    // a*b: re = ar*br - ai*bi, im = ar*bi + ai*br
    double re = s.a_even - s.a_odd;
    double im = s.b_even + s.b_odd;
    for (std::size_t i = 2 * pairs; i < n; i++)
    {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

std::complex<double> dotc_avx2(const std::complex<double> *a, const std::complex<double> *b, std::size_t n)
{
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    std::size_t pairs = n / 2;

    __m256d acc_a, acc_b;
    accumulate_products(pa, pb, pairs, acc_a, acc_b);
    LaneSums s = reduce_lanes(acc_a, acc_b);

    // conj(a)*b: re = ar*br + ai*bi, im = ar*bi - ai*br
    double re = s.a_even + s.a_odd;
    double im = s.b_even - s.b_odd;
    for (std::size_t i = 2 * pairs; i < n; i++)
    {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace risfocus::kernels::detail

#endif // RISFOCUS_HAVE_AVX2
