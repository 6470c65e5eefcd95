#include "logsym/context.hpp"

#include "logsym/errors.hpp"

#include <algorithm>
#include <set>

namespace logsym {

VarContext::VarContext(std::vector<std::string> names, std::vector<std::size_t> divisor_coords,
                       Arena arena)
    : names_(std::move(names)), divisor_(names_.size(), false), arena_(arena)
{
    if (names_.size() > 30) {
        throw ContextError("at most 30 variables are supported");
    }
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !seen.insert(n).second) {
            throw ContextError("variable names must be nonempty and distinct: '" + n + "'");
        }
    }
    for (std::size_t i : divisor_coords) {
        if (i >= names_.size()) {
            throw ContextError("divisor coordinate index out of range");
        }
        divisor_[i] = true;
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (divisor_[i]) {
            divisor_coords_.push_back(i);
        }
    }
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names, const std::vector<std::string>& divisor_coords,
                        Arena arena)
{
    std::vector<std::size_t> idx;
    for (const auto& d : divisor_coords) {
        auto it = std::find(names.begin(), names.end(), d);
        if (it == names.end()) {
            throw ContextError("divisor coordinate '" + d + "' is not a declared variable");
        }
        idx.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    return std::make_shared<const VarContext>(std::move(names), std::move(idx), arena);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b)
{
    if (a == b) {
        return;
    }
    if (!a || !b || !(*a == *b)) {
        throw ContextError("objects belong to different variable contexts");
    }
}

} // namespace logsym
