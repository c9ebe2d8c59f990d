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

#ifndef RISFOCUS_CODEBOOK_IO_HPP
#define RISFOCUS_CODEBOOK_IO_HPP

#include "risfocus/eval.hpp"

#include <string>
#include <vector>

namespace risfocus
{

// Codeword file payload: per-element phases in radians, one codeword per
// target. Phases reconstruct the unit-modulus coefficients exactly.
struct CodebookEntry
{
    int target;
    Eigen::VectorXd phases_rad;
};

struct CodebookFile
{
    int source;
    Method method;
    int nx;
    int nz;
    uint64_t scenario_seed;
    std::vector<CodebookEntry> entries;

    // Rebuilds the codeword for one target; throws when the target is
    // absent or the geometry does not match the stored element counts.
    PhaseVector codeword_for(int target, const ArrayGeometry &g) const;
};

CodebookFile make_codebook_file(int source, Method method, const ArrayGeometry &g,
                                uint64_t scenario_seed,
                                const std::vector<std::pair<int, PhaseVector>> &codewords);

std::string codebook_to_json(const CodebookFile &cb, const std::string &command_line = "");
CodebookFile codebook_from_json(const std::string &text);
void save_codebook(const CodebookFile &cb, const std::string &path,
                   const std::string &command_line = "");
CodebookFile load_codebook(const std::string &path);

} // namespace risfocus

#endif
