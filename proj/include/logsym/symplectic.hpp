#pragma once

#include "logsym/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsym {

/// A closed logarithmic 2-form with its Gram matrix in a chosen frame.
struct SymplecticData {
    Divisor divisor;
    LogForm omega;
    std::vector<LogVectorField> frame;
    /// True when frame is a Saito basis rather than the coordinate log frame.
    bool saito_frame = false;
    /// gram[k][l] = omega(frame_k, frame_l)
    std::vector<std::vector<Poly>> gram;
    Poly det;
    bool nondegenerate = false;
    /// Inverse of gram, obtained from exact solves; filled when nondegenerate
    /// (the determinant is then a unit, so the entries are ring elements).
    std::vector<std::vector<Poly>> gram_inverse;
};

/// The coordinate log frame: z_i d/dz_i on divisor coordinates, d/dz_j elsewhere.
std::vector<LogVectorField> coordinate_frame(const ContextPtr& ctx);

/// Outcome of the checks behind assemble_symplectic, without throwing.
struct SymplecticCheck {
    bool closed = false;
    bool even_dimension = false;
    bool nondegenerate = false;
    LogForm d_omega;
    std::optional<SymplecticData> data;
    /// Empty when every check passed.
    std::string reason;
};

/// Nondegeneracy test for a Gram determinant: with the coordinate frame of a
/// torus chart the determinant must be a unit (one term, invertible scalar,
/// monomial in divisor coordinates); otherwise a nonzero invertible scalar.
bool is_nondegenerate_det(const Poly& det, bool saito_frame);

SymplecticCheck check_symplectic(const Divisor& d, const LogForm& omega,
                                 const std::optional<std::vector<LogVectorField>>& frame = std::nullopt);

/// Throws DomainError when omega is not a closed nondegenerate 2-form on an
/// even-dimensional chart.
SymplecticData assemble_symplectic(const Divisor& d, const LogForm& omega,
                                   const std::optional<std::vector<LogVectorField>>& frame = std::nullopt);

} // namespace logsym
