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

#include "airs/results.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace airs
{
    namespace
    {
        std::string quote(const std::string &field)
        {
            if (field.find_first_of(",\"\r\n") == std::string::npos)
                return field;
            std::string out = "\"";
            for (char c : field)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }

        std::vector<std::string> split_record(const std::string &line)
        {
            std::vector<std::string> fields(1);
            bool quoted = false;
            for (std::size_t i = 0; i < line.size(); ++i)
            {
                const char c = line[i];
                if (quoted)
                {
                    if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
                        fields.back() += '"', ++i;
                    else if (c == '"')
                        quoted = false;
                    else
                        fields.back() += c;
                }
                else if (c == '"')
                    quoted = true;
                else if (c == ',')
                    fields.emplace_back();
                else
                    fields.back() += c;
            }
            return fields;
        }

        std::string strip_cr(std::string line)
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            return line;
        }
    }

    void ResultTable::add_row(std::vector<double> row)
    {
        if (row.size() != columns.size())
            throw std::invalid_argument("Row width " + std::to_string(row.size()) + " does not match " +
                                        std::to_string(columns.size()) + " columns");
        rows.push_back(std::move(row));
    }

    void ResultTable::set_meta(const std::string &key, const std::string &value)
    {
        for (auto &kv : metadata)
            if (kv.first == key)
            {
                kv.second = value;
                return;
            }
        metadata.emplace_back(key, value);
    }

    const std::string *ResultTable::meta(const std::string &key) const
    {
        for (const auto &kv : metadata)
            if (kv.first == key)
                return &kv.second;
        return nullptr;
    }

    std::string format_value(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    void write_csv(const ResultTable &table, std::ostream &out)
    {
        for (const auto &[key, value] : table.metadata)
            out << "# " << key << ": " << value << "\r\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << quote(table.columns[i]);
        out << "\r\n";
        for (const auto &row : table.rows)
        {
            if (row.size() != table.columns.size())
                throw std::invalid_argument("Table is not rectangular");
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_value(row[i]);
            out << "\r\n";
        }
    }

    void emit_csv(const ResultTable &table, const std::filesystem::path &path)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("Cannot open " + path.string() + " for writing");
        write_csv(table, out);
        out.flush();
        if (!out)
            throw std::runtime_error("Failed writing " + path.string());
    }

    ResultTable read_csv(std::istream &in)
    {
        ResultTable t;
        std::string line;
        bool header = false;
        while (std::getline(in, line))
        {
            line = strip_cr(line);
            if (!header && line.rfind("# ", 0) == 0)
            {
                const auto sep = line.find(": ", 2);
                if (sep == std::string::npos)
                    t.metadata.emplace_back(line.substr(2), "");
                else
                    t.metadata.emplace_back(line.substr(2, sep - 2), line.substr(sep + 2));
                continue;
            }
            if (!header)
            {
                t.columns = split_record(line);
                header = true;
                continue;
            }
            if (line.empty())
                continue;
            std::vector<double> row;
            for (const auto &f : split_record(line))
            {
                char *end = nullptr;
                const double v = std::strtod(f.c_str(), &end);
                if (end == f.c_str() || *end != '\0')
                    throw std::invalid_argument("Malformed CSV value '" + f + "'");
                row.push_back(v);
            }
            t.add_row(std::move(row));
        }
        return t;
    }

    ResultTable read_csv(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("Cannot open " + path.string());
        auto t = read_csv(in);
        t.name = path.stem().string();
        return t;
    }
}
