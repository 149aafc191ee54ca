#include "atmoead/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace atmoead {

std::string format_number(double v)
{
    char buf[32];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) { throw UsageError("format_number: conversion failed"); }
    return {buf, end};
}

void write_points(std::ostream& out, std::span<const ObjectiveVector> points, bool header)
{
    if (header && !points.empty()) {
        for (std::size_t i = 0; i < points.front().size(); ++i) { out << (i ? ",f" : "f") << i + 1; }
        out << '\n';
    }
    for (auto const& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) { out << (i ? "," : "") << format_number(p[i]); }
        out << '\n';
    }
}

void save_points(std::filesystem::path const& path, std::span<const ObjectiveVector> points, bool header)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) { throw ConfigError("cannot write " + path.string()); }
    write_points(out, points, header);
}

namespace {

bool parse_row(std::string const& line, ObjectiveVector& row)
{
    row.clear();
    std::size_t pos = 0;
    while (pos <= line.size()) {
        auto const comma = std::min(line.find(',', pos), line.size());
        auto first = line.data() + pos;
        auto last = line.data() + comma;
        while (first < last && (*first == ' ' || *first == '\t')) { ++first; }
        while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) { --last; }
        double v = 0.0;
        auto const [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) { return false; }
        row.push_back(v);
        pos = comma + 1;
    }
    return true;
}

} // namespace

std::vector<ObjectiveVector> read_points(std::istream& in)
{
    std::vector<ObjectiveVector> out;
    std::string line;
    std::size_t lineno = 0;
    ObjectiveVector row;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") { continue; }
        if (!parse_row(line, row)) {
            if (lineno == 1) { continue; }
            throw ConfigError("csv line " + std::to_string(lineno) + ": not numeric");
        }
        if (!out.empty() && row.size() != out.front().size()) {
            throw ConfigError("csv line " + std::to_string(lineno) + ": wrong column count");
        }
        out.push_back(row);
    }
    return out;
}

std::vector<ObjectiveVector> load_points(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw ConfigError("cannot read " + path.string()); }
    return read_points(in);
}

void write_event_log(std::ostream& out, std::span<const TriggerReport> events)
{
    out << "generation,stagnant,consistent,adapted,r,archive_size\n";
    for (auto const& e : events) {
        out << e.generation << ',' << int(e.stagnant) << ',' << int(e.consistent) << ',' << int(e.adapted) << ','
            << format_number(e.r) << ',' << e.archive_size << '\n';
    }
}

} // namespace atmoead
