#include "manip/dynamics.hpp"

#include <cmath>
#include <utility>

namespace manip {

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("params.") + field + " " + what);
}

}  // namespace

void ManipulatorParams::validate() const {
    const std::pair<const char*, double> positive[] = {
        {"m1", m1}, {"m2", m2}, {"m3", m3}, {"L1", L1}, {"L2", L2}, {"L3", L3}};
    for (const auto& [name, value] : positive)
        require(std::isfinite(value) && value > 0.0, name, "must be finite and > 0");
    const std::pair<const char*, double> non_negative[] = {
        {"J1", J1}, {"J2", J2}, {"J3", J3}, {"g", g}};
    for (const auto& [name, value] : non_negative)
        require(std::isfinite(value) && value >= 0.0, name, "must be finite and >= 0");
}

JointVector InertiaMatrix::operator*(const JointVector& x) const {
    JointVector y;
    for (std::size_t i = 0; i < kJoints; ++i)
        y[i] = a[i][0] * x[0] + a[i][1] * x[1] + a[i][2] * x[2];
    return y;
}

InertiaMatrix mass_matrix(const ManipulatorParams& p, const JointVector& q) {
    const double c2 = std::cos(q[1]);
    const double c3 = std::cos(q[2]);
    const double c23 = std::cos(q[1] + q[2]);
    const double L1 = p.L1, L2 = p.L2, L3 = p.L3;

    const double a11 = p.m1 * L1 * L1 +
                       p.m2 * (L1 * L1 + 2 * L1 * L2 * c2 + L2 * L2) +
                       p.m3 * (L1 * L1 + 2 * L1 * L2 * c2 + L1 * L3 * c23 + L2 * L2 +
                               4 * L2 * L3 * c3 + 2 * L3 * L3) +
                       p.J1 + p.J2 + p.J3;
    const double a12 = p.m2 * (L1 * L2 * c2 + L2 * L2) +
                       p.m3 * (2 * L1 * L2 * c2 + L1 * L3 * c23 + L2 * L2 +
                               4 * L2 * L3 * c3 + 2 * L3 * L3) +
                       p.J2 + p.J3;
    const double a13 = p.m3 * (L1 * L3 * c23 + 2 * L2 * L3 * c3 + 2 * L3 * L3);
    const double a22 = p.m2 * L2 * L2 + p.m3 * (L2 * L2 + 4 * L2 * L3 * c3 + 2 * L3 * L3) +
                       p.J2 + p.J3;
    const double a23 = p.m3 * (2 * L2 * L3 * c3 + 2 * L3 * L3) + p.J3;
    const double a33 = 2 * p.m3 * L3 * L3 + p.J3;

    InertiaMatrix m;
    m.a = {{{a11, a12, a13}, {a12, a22, a23}, {a13, a23, a33}}};
    return m;
}

JointVector velocity_vector(const ManipulatorParams& p, const JointState& s) {
    const double d1 = s.qdot[0], d2 = s.qdot[1], d3 = s.qdot[2];
    const double s2 = std::sin(s.q[1]);
    const double s3 = std::sin(s.q[2]);
    const double s23 = std::sin(s.q[1] + s.q[2]);
    const double m2 = p.m2, m3 = p.m3;
    const double L1 = p.L1, L2 = p.L2, L3 = p.L3;

    const double b1 =
        -m2 * L1 * L2 * (2 * d1 * d2 + d2 * d2) * s2 -
        m3 * L1 * L2 * (2 * d1 * d2 + d2 * d2 + 2 * d2 * d3 + 2 * d1 * d3 + d3 * d3) * s23 -
        2 * L2 * L3 * (2 * d1 * d3 + 2 * d2 * d3 + d3 * d3) * s3;

    const double b2 = -m2 * L1 * L2 * (d1 * d2) * s2 - m3 * L1 * L2 * (d1 * d2) * s2 -
                      m3 * L1 * L3 * (d1 * d2 + d2 * d3) * s23 -
                      2 * L2 * L3 * (2 * d1 * d3 + 2 * d2 * d3 + d3 * d3) * s3 +
                      m2 * L1 * L2 * (d1 * d1 + d1 * d2) * s2 +
                      m3 * L1 * L2 * (d1 * d1 + d1 * d2) * s2 +
                      m3 * L1 * L3 * (d1 * d1 + d1 * d2 + d1 * d3) * s23;

    const double b3 =
        -m3 * L1 * L3 * (d1 * d2 + d1 * d3) * s23 -
        2 * m3 * L2 * L3 * (d1 * d3 + d2 * d3) * s3 +
        m3 * L1 * L3 * (d1 * d1 + d1 * d2 + d1 * d3) * s23 +
        2 * m3 * L2 * L3 * (d1 * d1 + 2 * d1 * d2 + d1 * d3 + d2 * d2 + d2 * d3) * s3;

    return {{b1, b2, b3}};
}

JointVector gravity_vector(const ManipulatorParams& p, const JointVector& q) {
    const double c1 = std::cos(q[0]);
    const double c12 = std::cos(q[0] + q[1]);
    const double c123 = std::cos(q[0] + q[1] + q[2]);
    const double g = p.g;

    const double g1 = p.m1 * p.L1 * g * c1 + p.m2 * g * (p.L1 * c1 + p.L2 * c12) +
                      p.m3 * g * (p.L1 * c1 + p.L2 * c12 + p.L3 * c123);
    const double g2 = p.m2 * g * (p.L2 * c12) + p.m3 * g * (p.L2 * c12 + p.L3 * c123);
    const double g3 = p.m3 * p.L3 * g * c123;
    return {{g1, g2, g3}};
}

JointVector solve(const InertiaMatrix& m, const JointVector& rhs) {
    auto a = m.a;
    JointVector b = rhs;

    for (std::size_t col = 0; col < kJoints; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < kJoints; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (!(std::fabs(a[pivot][col]) >= kSingularPivot))
            throw SingularMass("inertia matrix is singular (pivot " +
                               std::to_string(a[pivot][col]) + " in column " +
                               std::to_string(col) + ")");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < kJoints; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < kJoints; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }

    JointVector x;
    for (std::size_t i = kJoints; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < kJoints; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

JointVector forward_dynamics(const ManipulatorParams& p, const JointState& s,
                             const JointVector& tau) {
    const JointVector rhs = tau - velocity_vector(p, s) - gravity_vector(p, s.q);
    return solve(mass_matrix(p, s.q), rhs);
}

}  // namespace manip
