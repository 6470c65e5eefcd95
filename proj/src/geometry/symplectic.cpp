#include "logsym/symplectic.hpp"

#include "logsym/algebra.hpp"
#include "logsym/errors.hpp"

namespace logsym {

std::vector<LogVectorField> coordinate_frame(const ContextPtr& ctx)
{
    std::vector<LogVectorField> out;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        out.push_back(LogVectorField::frame_element(ctx, i));
    }
    return out;
}

namespace {

std::vector<std::vector<Poly>> invert_gram(const std::vector<std::vector<Poly>>& gram)
{
    std::size_t n = gram.size();
    const auto& ctx = gram[0][0].context();
    RfMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : gram[i]) {
            a[i].emplace_back(e);
        }
    }
    std::vector<std::vector<Poly>> inv(n, std::vector<Poly>(n, Poly(ctx)));
    for (std::size_t col = 0; col < n; ++col) {
        RfVector e(n, RationalFunction(Poly(ctx)));
        e[col] = RationalFunction(Poly(ctx, Scalar(1)));
        auto x = solve_linear(a, e);
        for (std::size_t row = 0; row < n; ++row) {
            auto p = x[row].as_poly();
            if (!p) {
                throw ArenaError("inverse Gram entry " + x[row].to_string() + " is not in the arena");
            }
            inv[row][col] = std::move(*p);
        }
    }
    return inv;
}

} // namespace

bool is_nondegenerate_det(const Poly& det, bool saito_frame)
{
    if (det.is_zero()) {
        return false;
    }
    if (saito_frame || det.context()->arena() == Arena::polynomial) {
        auto s = det.as_scalar();
        return s && s->single_power().has_value();
    }
    return det.unit_inverse().has_value();
}

SymplecticCheck check_symplectic(const Divisor& d, const LogForm& omega,
                                 const std::optional<std::vector<LogVectorField>>& frame)
{
    require_same_context(d.context(), omega.context());
    const auto& ctx = omega.context();
    if (omega.degree() != 2) {
        throw DomainError("a symplectic form has degree 2, got " + std::to_string(omega.degree()));
    }
    SymplecticCheck out{false, false, false, d_log(omega), std::nullopt, {}};
    out.closed = out.d_omega.is_zero();
    out.even_dimension = ctx->size() % 2 == 0;

    SymplecticData data{d, omega, frame ? *frame : coordinate_frame(ctx), frame.has_value(), {}, Poly(ctx), false, {}};
    if (data.frame.size() != ctx->size()) {
        throw DomainError("frame must have " + std::to_string(ctx->size()) + " fields");
    }
    for (const auto& a : data.frame) {
        std::vector<Poly> row;
        for (const auto& b : data.frame) {
            row.push_back(evaluate(omega, {a, b}));
        }
        data.gram.push_back(std::move(row));
    }
    data.det = determinant(data.gram);
    data.nondegenerate = out.even_dimension && is_nondegenerate_det(data.det, data.saito_frame);
    out.nondegenerate = data.nondegenerate;
    if (data.nondegenerate) {
        data.gram_inverse = invert_gram(data.gram);
    }

    if (!out.closed) {
        out.reason = "not a 2-cocycle: d(omega) = " + out.d_omega.to_string();
    } else if (!out.even_dimension) {
        out.reason = "odd dimension " + std::to_string(ctx->size());
    } else if (!out.nondegenerate) {
        out.reason = "degenerate: det = " + data.det.to_string();
    }
    out.data = std::move(data);
    return out;
}

SymplecticData assemble_symplectic(const Divisor& d, const LogForm& omega,
                                   const std::optional<std::vector<LogVectorField>>& frame)
{
    auto c = check_symplectic(d, omega, frame);
    if (!c.reason.empty()) {
        throw DomainError(c.reason);
    }
    return std::move(*c.data);
}

} // namespace logsym
