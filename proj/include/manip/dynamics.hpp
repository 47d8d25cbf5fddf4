#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "manip/joint.hpp"

namespace manip {

/// Physical parameters of the three-link planar arm. Defaults are the
/// reference arm: unit masses, 0.5 m links, 0.5 kg·m² link inertias.
struct ManipulatorParams {
    double m1 = 1.0, m2 = 1.0, m3 = 1.0;     // [kg]
    double L1 = 0.5, L2 = 0.5, L3 = 0.5;     // [m]
    double J1 = 0.5, J2 = 0.5, J3 = 0.5;     // [kg·m²]
    double g = 9.81;                         // [m/s²]

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

/// Symmetric 3×3 configuration-dependent inertia matrix [kg·m²].
struct InertiaMatrix {
    std::array<std::array<double, kJoints>, kJoints> a{};

    double operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
    JointVector operator*(const JointVector& x) const;
};

/// Raised when the pivoted solve meets a pivot below kSingularPivot.
class SingularMass : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kSingularPivot = 1e-12;

/// Inertia matrix from the closed forms of the model. The upper triangle is
/// evaluated once and mirrored, so the result is bitwise symmetric.
InertiaMatrix mass_matrix(const ManipulatorParams& p, const JointVector& q);

/// Velocity-product (Coriolis/centrifugal) torques b(q, q̇).
///
/// Every term is kept exactly as the closed forms print it, including the
/// final term of b1 and the fourth term of b2, which carry no m3 factor,
/// and the pairs in b2 that partially cancel. Each term is a product of two
/// joint velocities, so b is quadratic in q̇ and vanishes at rest.
JointVector velocity_vector(const ManipulatorParams& p, const JointState& s);

/// Gravity torques G(q). Angles are measured from the horizontal.
JointVector gravity_vector(const ManipulatorParams& p, const JointVector& q);

/// Solves M x = rhs by Gaussian elimination with partial pivoting.
/// Throws SingularMass if a pivot magnitude falls below kSingularPivot.
JointVector solve(const InertiaMatrix& m, const JointVector& rhs);

/// q̈ from M(q) q̈ = τ − b(q, q̇) − G(q).
JointVector forward_dynamics(const ManipulatorParams& p, const JointState& s,
                             const JointVector& tau);

}  // namespace manip
