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

#ifndef airs_results_H
#define airs_results_H

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace airs
{
    inline constexpr const char *tool_version = "airs-channel 0.1.0";

    struct ResultTable
    {
        std::string name; // file stem
        std::vector<std::pair<std::string, std::string>> metadata;
        std::vector<std::string> columns;
        std::vector<std::vector<double>> rows;

        void add_row(std::vector<double> row); // throws std::invalid_argument on width mismatch
        void set_meta(const std::string &key, const std::string &value);
        const std::string *meta(const std::string &key) const;
    };

    // "# key: value" metadata lines, then the header row, then one line per row.
    // Values use 17 significant digits and '.' as decimal separator.
    void write_csv(const ResultTable &table, std::ostream &out);
    void emit_csv(const ResultTable &table, const std::filesystem::path &path);

    // Reads a file produced by write_csv.
    ResultTable read_csv(std::istream &in);
    ResultTable read_csv(const std::filesystem::path &path);

    std::string format_value(double v);
}

#endif
