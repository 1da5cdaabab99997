#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace cogga {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Headings are degrees in [0, 360), clockwise, 0 = +y axis.
inline double normalize_heading(double deg) {
    double h = std::fmod(deg, 360.0);
    if (h < 0.0) h += 360.0;
    if (h == 360.0) h = 0.0;  // fmod can round up
    return h;
}

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Point position() const { return {x, y}; }
};

inline Point heading_vector(double heading_deg) {
    double r = heading_deg * M_PI / 180.0;
    return {std::sin(r), std::cos(r)};
}

// Bearing of b as seen from a, in the same clockwise-from-+y convention.
inline double bearing_deg(Point a, Point b) {
    return normalize_heading(std::atan2(b.x - a.x, b.y - a.y) * 180.0 / M_PI);
}

// Signed smallest rotation from one heading to another, in (-180, 180].
inline double heading_delta(double from_deg, double to_deg) {
    double d = normalize_heading(to_deg - from_deg);
    return d > 180.0 ? d - 360.0 : d;
}

// Shortest decimal string that parses back to exactly the same double.
inline std::string fmt_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

// Quantized distances (multiples of 0.25 m) rendered like "0.75", "2.5", "3.0".
inline std::string fmt_distance(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s = buf;
    if (s.size() >= 2 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
    return s;
}

}  // namespace cogga
