#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dkg {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Violated precondition or malformed input.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite value produced during a computation.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double wedge(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Unoriented angle in [0, pi] between two nonzero vectors.
inline double angle_between(Vec2 a, Vec2 b) {
    return std::abs(std::atan2(wedge(a, b), dot(a, b)));
}

/// <x> = 1 + |x|
inline double japanese(double x) { return 1.0 + std::abs(x); }

/// Free-form notes attached to a computation (zero-mode handling, warnings).
struct Notes {
    std::vector<std::string> items;
    void add(std::string s) { items.push_back(std::move(s)); }
    bool contains(const std::string& needle) const {
        for (const auto& s : items)
            if (s.find(needle) != std::string::npos) return true;
        return false;
    }
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

inline void require_finite(double v, const std::string& what) {
    if (!std::isfinite(v)) throw NumericalError("non-finite value in " + what);
}

}  // namespace dkg
