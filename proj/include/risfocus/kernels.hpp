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

#ifndef RISFOCUS_KERNELS_HPP
#define RISFOCUS_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

// Data-parallel inner loops of the response-function evaluation path.
// Scalar reference kernels plus an AVX2 variant selected at runtime; the
// two are equivalence-tested against each other in tests/kernels_test.cpp.
namespace risfocus::kernels
{

enum class Backend
{
    scalar,
    avx2
};

// Backend chosen for this process (AVX2 when the CPU supports it).
Backend active();

// Overrides the dispatch, primarily for equivalence tests. Throws
// std::runtime_error if the requested backend is not available.
void force_backend(Backend b);

bool avx2_available();

std::string to_string(Backend b);

// Unconjugated dot product: sum_i a[i]*b[i].
std::complex<double> dotu(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);

// Conjugated dot product: sum_i conj(a[i])*b[i].
std::complex<double> dotc(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);

namespace detail
{
std::complex<double> dotu_scalar(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);
std::complex<double> dotc_scalar(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);
#ifdef RISFOCUS_HAVE_AVX2
std::complex<double> dotu_avx2(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);
std::complex<double> dotc_avx2(const std::complex<double> *a, const std::complex<double> *b, std::size_t n);
#endif
} // namespace detail

} // namespace risfocus::kernels

#endif
