#pragma once

#include "logsym/algebra.hpp"
#include "logsym/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsym {

struct HamiltonianResult {
    Poly f;
    LogVectorField delta;
    /// i_delta omega - d f; zero by construction and checked.
    LogForm certificate;
};

/// The field delta_f with i_{delta_f} omega = d f.
HamiltonianResult hamiltonian(const SymplecticData& s, const Poly& f);

/// The field with i_delta omega = (d u)/u.  Throws ArenaError when (d u)/u
/// has coefficients outside the arena.
LogVectorField tilde_hamiltonian(const SymplecticData& s, const Poly& u);

/// {f, g} = -omega(delta_f, delta_g), checked against delta_f(g).
Poly bracket(const SymplecticData& s, const Poly& f, const Poly& g);

/// u lies in the ideal of the divisor in the sense of the singular bracket:
/// u is nonzero and shares a component with h (a nonconstant common factor
/// with h as polynomials on the chart).
bool in_divisor_ideal(const Divisor& d, const Poly& u);

/// The singular bracket, by cases on membership of a and b.  Declared
/// memberships are checked against in_divisor_ideal; a mismatch throws
/// DomainError.
RationalFunction sing_bracket(const SymplecticData& s, const Poly& a, const Poly& b,
                              std::optional<bool> a_in = std::nullopt,
                              std::optional<bool> b_in = std::nullopt);

struct IdentityDefect {
    std::string name;
    bool applicable = true;
    bool zero = false;
    /// Canonical text of the defect (or the reason when not applicable).
    std::string defect;
};

struct IdentityReport {
    std::vector<IdentityDefect> items;
    bool all_zero() const;
    /// Identities asserted to hold; (ii) is only reported.
    bool asserted_zero() const;
};

/// Defects of the Poisson identities for u, v in the ideal and arbitrary
/// a, b, plus the Jacobi defect on (a, b, u).
IdentityReport verify_identities(const SymplecticData& s, const Poly& u, const Poly& v, const Poly& a,
                                 const Poly& b);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
Poly jacobi_defect(const SymplecticData& s, const Poly& f, const Poly& g, const Poly& h);

} // namespace logsym
