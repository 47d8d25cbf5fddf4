#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace manip {

inline constexpr std::size_t kJoints = 3;

/// Per-joint scalars: angles [rad], velocities [rad/s], torques [N·m], ...
struct JointVector {
    std::array<double, kJoints> v{0.0, 0.0, 0.0};

    constexpr double& operator[](std::size_t i) { return v[i]; }
    constexpr double operator[](std::size_t i) const { return v[i]; }

    constexpr auto begin() { return v.begin(); }
    constexpr auto end() { return v.end(); }
    constexpr auto begin() const { return v.begin(); }
    constexpr auto end() const { return v.end(); }

    static constexpr JointVector filled(double x) { return {{x, x, x}}; }

    constexpr JointVector& operator+=(const JointVector& o) {
        for (std::size_t i = 0; i < kJoints; ++i) v[i] += o.v[i];
        return *this;
    }
    constexpr JointVector& operator-=(const JointVector& o) {
        for (std::size_t i = 0; i < kJoints; ++i) v[i] -= o.v[i];
        return *this;
    }
    constexpr JointVector& operator*=(double s) {
        for (auto& x : v) x *= s;
        return *this;
    }

    friend constexpr bool operator==(const JointVector&, const JointVector&) = default;
};

constexpr JointVector operator+(JointVector a, const JointVector& b) { return a += b; }
constexpr JointVector operator-(JointVector a, const JointVector& b) { return a -= b; }
constexpr JointVector operator-(JointVector a) { return a *= -1.0; }
constexpr JointVector operator*(double s, JointVector a) { return a *= s; }
constexpr JointVector operator*(JointVector a, double s) { return a *= s; }

inline double max_abs(const JointVector& a) {
    double m = 0.0;
    for (double x : a) m = std::fmax(m, std::fabs(x));
    return m;
}

inline bool all_finite(const JointVector& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Joint positions and velocities. Arithmetic treats the pair as one
/// 6-vector so the state can be fed to generic integrators.
struct JointState {
    JointVector q;
    JointVector qdot;

    friend constexpr bool operator==(const JointState&, const JointState&) = default;
};

constexpr JointState operator+(const JointState& a, const JointState& b) {
    return {a.q + b.q, a.qdot + b.qdot};
}
constexpr JointState operator*(double s, const JointState& a) { return {s * a.q, s * a.qdot}; }

}  // namespace manip
