// Copyright 2026 The inhomsat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INHOMSAT_KERNEL_IO_HPP_
#define INHOMSAT_KERNEL_IO_HPP_

// Kernel definition files (JSON).
//
//   {
//     "name": "optional free text",
//     "types":   [ {"label": "hub", "weight": 0.25}, ... ],
//     "entries": [ {"from": ["hub", "+"], "to": [0, "-"], "value": 2.5}, ... ]
//   }
//
// A type reference is either its label or its zero-based index; a sign is
// "+" or "-". Unlisted entries are 0. Every entry also sets its mirror
// (to, from); listing both with different values is an error. Unknown keys
// are rejected at every level.

#include <filesystem>
#include <string>

#include "inhomsat/kernel.hpp"

namespace inhomsat {

BlockKernel ParseKernelJson(const std::string& text);
BlockKernel LoadKernelFile(const std::filesystem::path& path);

// Writes each symmetric pair once, skipping zeros.
std::string KernelToJson(const BlockKernel& w, const std::string& name = "");

// Short stable digest of the kernel contents (hex), used for provenance.
std::string KernelDigest(const BlockKernel& w);

}  // namespace inhomsat

#endif  // INHOMSAT_KERNEL_IO_HPP_
