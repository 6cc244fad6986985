// io.hpp — stable serialization: the "sidonset v1" text format, coverage
// CSVs, and the construction report JSON. Emission is byte-deterministic;
// a written set re-parses to an identical set.
#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sidon/ruzsa.hpp"
#include "sidon/set.hpp"

namespace sidon::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kSetHeader = "# sidonset v1";

inline std::string point_hex(Point p) {
    char buf[16];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p, 16);
    return "0x" + std::string(buf, end);
}

/// Exact "sidonset v1" layout: header line, `n=<decimal>`, then one point
/// per line as 0x-prefixed lowercase hex, strictly ascending.
inline void write_set(std::ostream& out, const SidonSet& s) {
    out << kSetHeader << '\n' << "n=" << s.n << '\n';
    for (const Point p : s.points) {
        out << point_hex(p) << '\n';
    }
}

inline std::string set_to_string(const SidonSet& s) {
    std::ostringstream out;
    write_set(out, s);
    return out.str();
}

/// Parses a "sidonset v1" document. Throws ParseError on any deviation:
/// wrong header, bad dimension line, non-hex points, out-of-range points,
/// or points not strictly ascending.
inline SidonSet read_set(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSetHeader) {
        throw ParseError("set file: missing '# sidonset v1' header");
    }
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0) {
        throw ParseError("set file: missing 'n=<decimal>' line");
    }
    int n = 0;
    {
        const char* first = line.data() + 2;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("set file: malformed dimension line '" + line + "'");
        }
    }
    if (n < 1 || n > kMaxDimension) {
        throw ParseError("set file: dimension out of [1, 30]");
    }
    const std::uint64_t universe = std::uint64_t{1} << n;
    std::vector<Point> pts;
    bool have_prev = false;
    Point prev = 0;
    while (std::getline(in, line)) {
        if (line.rfind("0x", 0) != 0 || line.size() < 3) {
            throw ParseError("set file: malformed point line '" + line + "'");
        }
        std::uint64_t value = 0;
        const char* first = line.data() + 2;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, value, 16);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("set file: malformed point line '" + line + "'");
        }
        if (value >= universe) {
            throw ParseError("set file: point " + line + " out of range for n=" +
                             std::to_string(n));
        }
        if (have_prev && value <= prev) {
            throw ParseError("set file: points not strictly ascending at " + line);
        }
        prev = static_cast<Point>(value);
        have_prev = true;
        pts.push_back(prev);
    }
    return set_from_points(n, std::move(pts));
}

/// Per-point CSV: `point_hex,count`, one row per point of Z2^n in ascending
/// point order.
inline void write_profile_csv(std::ostream& out, const CoverProfile& prof) {
    out << "point_hex,count\n";
    for (std::uint64_t x = 0; x < prof.counts.size(); ++x) {
        out << point_hex(static_cast<Point>(x)) << ',' << prof.counts[x] << '\n';
    }
}

/// Histogram CSV: `count,num_points`, ascending by count.
inline void write_histogram_csv(std::ostream& out, const CoverProfile& prof) {
    out << "count,num_points\n";
    for (const auto& [count, num] : prof.histogram) {
        out << count << ',' << num << '\n';
    }
}

/// Report document with fixed keys. The set itself travels separately in
/// "sidonset v1" form.
inline nlohmann::json report_to_json(const RuzsaReport& report) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["T"] = report.T;
    doc["seed"] = report.seed;
    doc["attempts_used"] = report.attempts_used;
    doc["j_min"] = report.j_min;
    doc["size_a"] = report.size_a;
    doc["size_b"] = report.size_b;
    doc["size_x"] = report.size_x;
    doc["size_s"] = report.size_s;
    doc["union_bound"] = report.union_bound;
    doc["maximal"] = report.maximal;
    doc["modulus_hex"] = "0x" + [&] {
        char buf[24];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, report.modulus, 16);
        return std::string(buf, end);
    }();
    return doc;
}

} // namespace sidon::io
