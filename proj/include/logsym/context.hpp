#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace logsym {

/// Coefficient ring of a computation.
///
/// polynomial: Q(i)[T, 1/T][z_1..z_n].
/// torus:      the same ring with the divisor coordinates inverted, i.e. the
///             chart X - D of a coordinate normal crossing divisor.
enum class Arena { polynomial, torus };

/// Ordered variables of a chart together with the coordinates cut out by a
/// coordinate normal crossing divisor.
class VarContext {
public:
    VarContext(std::vector<std::string> names, std::vector<std::size_t> divisor_coords,
               Arena arena);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    Arena arena() const { return arena_; }
    bool is_divisor_coord(std::size_t i) const { return divisor_.at(i); }
    const std::vector<std::size_t>& divisor_coords() const { return divisor_coords_; }
    /// Variables invertible in the coefficient ring (divisor coordinates in the torus arena).
    bool is_unit_var(std::size_t i) const { return arena_ == Arena::torus && divisor_.at(i); }

    friend bool operator==(const VarContext& a, const VarContext& b)
    {
        return a.names_ == b.names_ && a.divisor_ == b.divisor_ && a.arena_ == b.arena_;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> divisor_;
    std::vector<std::size_t> divisor_coords_;
    Arena arena_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names,
                        const std::vector<std::string>& divisor_coords = {},
                        Arena arena = Arena::polynomial);

/// Throws ContextError unless both contexts describe the same chart.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace logsym
