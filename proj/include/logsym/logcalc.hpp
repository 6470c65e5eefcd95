#pragma once

// Logarithmic Cartan calculus on a chart: vector fields, forms in the
// logarithmic coframe, d, wedge, contraction, Lie derivative and bracket,
// residues.
//
// Frame and coframe: for a divisor coordinate z_i the frame element is
// xi_i = z_i d/dz_i with dual e^i = dz_i/z_i; for a plain coordinate z_j it
// is d/dz_j with dual e^j = dz_j.  Both d(e^i) = 0 and [xi_i, xi_j] = 0, so
// d(f e^J) = sum_i xi_i(f) e^i ^ e^J.

#include "logsym/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logsym {

/// Derivation stored by its coefficients in the plain frame d/dz_1..d/dz_n.
class LogVectorField {
public:
    explicit LogVectorField(ContextPtr ctx);
    explicit LogVectorField(std::vector<Poly> plain_coeffs);

    /// d/dz_i
    static LogVectorField partial(ContextPtr ctx, std::size_t i);
    /// z_i d/dz_i for divisor coordinates, d/dz_i otherwise.
    static LogVectorField frame_element(ContextPtr ctx, std::size_t i);
    /// Sum of c_i * frame_element(i).
    static LogVectorField from_log_frame(const std::vector<Poly>& log_coeffs);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(std::size_t i) const { return coeffs_.at(i); }
    /// Pairing <e^i, this>: v_i / z_i for divisor coordinates, v_i otherwise.
    /// May leave the arena when the field is not logarithmic along z_i.
    Poly log_coeff(std::size_t i) const;
    /// All log_coeff are in the arena ring.
    bool is_log_along_coordinates() const;

    bool is_zero() const;
    bool in_arena() const;
    /// The derivation applied to a function.
    Poly apply(const Poly& f) const;

    LogVectorField operator-() const;
    LogVectorField& operator+=(const LogVectorField& o);
    LogVectorField& operator-=(const LogVectorField& o);
    friend LogVectorField operator+(LogVectorField a, const LogVectorField& b) { return a += b; }
    friend LogVectorField operator-(LogVectorField a, const LogVectorField& b) { return a -= b; }
    friend LogVectorField operator*(const Poly& f, const LogVectorField& v);
    friend bool operator==(const LogVectorField& a, const LogVectorField& b);

    /// Canonical text, e.g. "x*@x + y*@y".
    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::vector<Poly> coeffs_;
};

LogVectorField lie_bracket(const LogVectorField& a, const LogVectorField& b);

/// Set of coframe indices as a bit mask.
using IndexSet = std::uint32_t;

std::vector<std::size_t> indices_of(IndexSet s);
IndexSet index_set(const std::vector<std::size_t>& idx);

/// Lexicographic order on the sorted index lists.
struct IndexSetOrder {
    bool operator()(IndexSet a, IndexSet b) const;
};

/// Differential form of fixed degree, sum of c_I e^I over sorted index sets.
class LogForm {
public:
    using CoeffMap = std::map<IndexSet, Poly, IndexSetOrder>;

    LogForm(ContextPtr ctx, int degree);
    static LogForm function(const Poly& f);
    /// c * e^I
    static LogForm basis(const Poly& c, IndexSet I);
    /// e^i
    static LogForm coframe(const ContextPtr& ctx, std::size_t i);

    const ContextPtr& context() const { return ctx_; }
    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    Poly coefficient(IndexSet I) const;
    /// Value of a degree-0 form.
    Poly as_function() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool in_arena() const;
    void add(IndexSet I, const Poly& c);

    LogForm operator-() const;
    LogForm& operator+=(const LogForm& o);
    LogForm& operator-=(const LogForm& o);
    friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
    friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
    friend LogForm operator*(const Poly& f, const LogForm& w);
    friend bool operator==(const LogForm& a, const LogForm& b);

    /// Canonical text, e.g. "T*x*dlog(y)" or "d(x)^dlog(y)".
    std::string to_string() const;

private:
    ContextPtr ctx_;
    int degree_;
    CoeffMap coeffs_;
};

/// Exterior derivative in the logarithmic coframe.
LogForm d_log(const LogForm& w);
/// d of a function.
LogForm d_log(const Poly& f);
LogForm wedge(const LogForm& a, const LogForm& b);
/// Contraction i_v w (anti-derivation of degree -1).  Throws ArenaError if
/// the result leaves the arena (v not logarithmic where w has poles).
LogForm interior(const LogVectorField& v, const LogForm& w);
/// L_v = i_v d + d i_v
LogForm lie_derivative(const LogVectorField& v, const LogForm& w);
/// w(X_1, ..., X_p) = i_{X_p} ... i_{X_1} w
Poly evaluate(const LogForm& w, const std::vector<LogVectorField>& args);

/// Residue of a 1-form along the divisor coordinate z_i: the e^i coefficient
/// with the divisor coordinates set to zero one after another in index
/// order.  Throws DomainError when i is not a divisor coordinate or a
/// coefficient has a pole along a divisor coordinate.
Poly residue(const LogForm& w, std::size_t i);

/// The e^i coefficient restricted to z_i = 0 only, a function on the
/// component {z_i = 0}.
Poly residue_restriction(const LogForm& w, std::size_t i);

struct ResidueSummary {
    std::vector<std::size_t> coords;
    /// residue_restriction along each divisor coordinate
    std::vector<Poly> residues;
    /// Set when every residue is a constant.
    std::optional<std::vector<Scalar>> constants;
};

/// Residues along every divisor coordinate; constant for closed forms.
ResidueSummary res_const(const LogForm& w);

} // namespace logsym
