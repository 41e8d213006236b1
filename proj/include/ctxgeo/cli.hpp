// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXGEO_CLI_HPP
#define CTXGEO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ctxgeo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name). Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Catalog name whose geometry is isomorphic to `canonical`, or empty.
std::string identify_geometry(const std::string& canonical);

}  // namespace ctxgeo

#endif  // CTXGEO_CLI_HPP
