// SPDX-License-Identifier: Apache-2.0
//
// airs-channel: wideband channel simulator for AIRS/IRS-assisted MIMO links
// Copyright (C) 2026 The airs-channel authors
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

#ifndef airs_errors_H
#define airs_errors_H

#include <stdexcept>
#include <string>

namespace airs
{
    // Coincident endpoints, zero-length link vectors or elevation arguments outside [-1, 1].
    class geometry_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Non-finite matrix entries or other numerical breakdowns during evaluation.
    class numeric_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Invalid configuration value. `key` names the offending entry ("section.key"),
    // `line` is the 1-based source line or 0 when the value did not come from a file.
    class config_error : public std::invalid_argument
    {
    public:
        config_error(std::string key, const std::string &what, int line = 0)
            : std::invalid_argument(line > 0 ? key + " (line " + std::to_string(line) + "): " + what
                                             : key + ": " + what),
              key_(std::move(key)), line_(line)
        {
        }

        const std::string &key() const noexcept { return key_; }
        int line() const noexcept { return line_; }

    private:
        std::string key_;
        int line_;
    };
}

#endif
