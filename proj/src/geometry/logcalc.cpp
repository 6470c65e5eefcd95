#include "logsym/logcalc.hpp"

#include "logsym/errors.hpp"

#include <bit>

namespace logsym {

namespace {

Exponents unit_vector(std::size_t n, std::size_t i, int k)
{
    Exponents e(n, 0);
    e[i] = k;
    return e;
}

// Joins signed summands, turning "a + -b" into "a - b".
std::string join_terms(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (out.empty()) {
            out = p;
        } else if (p.front() == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

// c*basis with the usual abbreviations.
std::string scaled_atom(const Poly& c, const std::string& atom)
{
    if (auto s = c.as_scalar()) {
        if (s->is_one()) {
            return atom;
        }
        if ((-*s).is_one()) {
            return "-" + atom;
        }
    }
    if (c.is_product_safe()) {
        return c.to_string() + "*" + atom;
    }
    return "(" + c.to_string() + ")*" + atom;
}

std::string coframe_name(const VarContext& ctx, std::size_t i)
{
    return (ctx.is_divisor_coord(i) ? "dlog(" : "d(") + ctx.name(i) + ")";
}

std::string basis_name(const VarContext& ctx, IndexSet s)
{
    std::string out;
    for (std::size_t i : indices_of(s)) {
        if (!out.empty()) {
            out += "^";
        }
        out += coframe_name(ctx, i);
    }
    return out;
}

// Sign of e^I ^ e^J once sorted; 0 when I and J overlap.
int wedge_sign(IndexSet a, IndexSet b)
{
    if (a & b) {
        return 0;
    }
    int inversions = 0;
    for (std::size_t j : indices_of(b)) {
        // elements of a greater than j
        IndexSet above = a & ~((IndexSet{2} << j) - 1);
        inversions += std::popcount(above);
    }
    return inversions % 2 ? -1 : 1;
}

// xi_i applied to f.
Poly frame_derivative(const Poly& f, std::size_t i)
{
    return f.context()->is_divisor_coord(i) ? f.euler(i) : f.partial(i);
}

} // namespace

LogVectorField::LogVectorField(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_) {
        throw ContextError("vector field without a context");
    }
    coeffs_.assign(ctx_->size(), Poly(ctx_));
}

LogVectorField::LogVectorField(std::vector<Poly> plain_coeffs) : coeffs_(std::move(plain_coeffs))
{
    if (coeffs_.empty()) {
        throw ContextError("vector field needs at least one coefficient");
    }
    ctx_ = coeffs_.front().context();
    if (coeffs_.size() != ctx_->size()) {
        throw ContextError("vector field coefficient count does not match the context");
    }
    for (const auto& c : coeffs_) {
        require_same_context(ctx_, c.context());
    }
}

LogVectorField LogVectorField::partial(ContextPtr ctx, std::size_t i)
{
    LogVectorField v(std::move(ctx));
    v.coeffs_.at(i) = Poly(v.ctx_, Scalar(1));
    return v;
}

LogVectorField LogVectorField::frame_element(ContextPtr ctx, std::size_t i)
{
    LogVectorField v(std::move(ctx));
    v.coeffs_.at(i) = v.ctx_->is_divisor_coord(i) ? Poly::variable(v.ctx_, i) : Poly(v.ctx_, Scalar(1));
    return v;
}

LogVectorField LogVectorField::from_log_frame(const std::vector<Poly>& log_coeffs)
{
    LogVectorField v(log_coeffs);
    for (std::size_t i = 0; i < v.coeffs_.size(); ++i) {
        if (v.ctx_->is_divisor_coord(i)) {
            v.coeffs_[i] = v.coeffs_[i].shifted(unit_vector(v.ctx_->size(), i, 1));
        }
    }
    return v;
}

Poly LogVectorField::log_coeff(std::size_t i) const
{
    if (ctx_->is_divisor_coord(i)) {
        return coeffs_.at(i).shifted(unit_vector(ctx_->size(), i, -1));
    }
    return coeffs_.at(i);
}

bool LogVectorField::is_log_along_coordinates() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!log_coeff(i).in_arena()) {
            return false;
        }
    }
    return true;
}

bool LogVectorField::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool LogVectorField::in_arena() const
{
    for (const auto& c : coeffs_) {
        if (!c.in_arena()) {
            return false;
        }
    }
    return true;
}

Poly LogVectorField::apply(const Poly& f) const
{
    require_same_context(ctx_, f.context());
    Poly out(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            out += coeffs_[i] * f.partial(i);
        }
    }
    return out;
}

LogVectorField LogVectorField::operator-() const
{
    LogVectorField r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LogVectorField& LogVectorField::operator+=(const LogVectorField& o)
{
    require_same_context(ctx_, o.ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

LogVectorField& LogVectorField::operator-=(const LogVectorField& o)
{
    require_same_context(ctx_, o.ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

LogVectorField operator*(const Poly& f, const LogVectorField& v)
{
    require_same_context(f.context(), v.ctx_);
    LogVectorField r = v;
    for (auto& c : r.coeffs_) {
        c = f * c;
    }
    return r;
}

bool operator==(const LogVectorField& a, const LogVectorField& b)
{
    return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
}

std::string LogVectorField::to_string() const
{
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            parts.push_back(scaled_atom(coeffs_[i], "@" + ctx_->name(i)));
        }
    }
    if (parts.empty()) {
        return "0*@" + ctx_->name(0);
    }
    return join_terms(parts);
}

LogVectorField lie_bracket(const LogVectorField& a, const LogVectorField& b)
{
    require_same_context(a.context(), b.context());
    std::vector<Poly> c;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        c.push_back(a.apply(b.coeff(i)) - b.apply(a.coeff(i)));
    }
    return LogVectorField(std::move(c));
}

std::vector<std::size_t> indices_of(IndexSet s)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; s; ++i, s >>= 1) {
        if (s & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

IndexSet index_set(const std::vector<std::size_t>& idx)
{
    IndexSet s = 0;
    for (std::size_t i : idx) {
        s |= IndexSet{1} << i;
    }
    return s;
}

bool IndexSetOrder::operator()(IndexSet a, IndexSet b) const
{
    if (a == b) {
        return false;
    }
    // The sorted lists agree below the lowest differing index.
    IndexSet diff = a ^ b;
    IndexSet low = diff & (~diff + 1);
    if (a & low) {
        return (b & ~(low - 1)) != 0;
    }
    return (a & ~(low - 1)) == 0;
}

LogForm::LogForm(ContextPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree)
{
    if (!ctx_) {
        throw ContextError("form without a context");
    }
    if (degree < 0 || degree > static_cast<int>(ctx_->size())) {
        throw DomainError("form degree " + std::to_string(degree) + " out of range");
    }
}

LogForm LogForm::function(const Poly& f)
{
    LogForm w(f.context(), 0);
    w.add(0, f);
    return w;
}

LogForm LogForm::basis(const Poly& c, IndexSet I)
{
    LogForm w(c.context(), std::popcount(I));
    if (!indices_of(I).empty() && indices_of(I).back() >= c.nvars()) {
        throw ContextError("coframe index out of range");
    }
    w.add(I, c);
    return w;
}

LogForm LogForm::coframe(const ContextPtr& ctx, std::size_t i)
{
    return basis(Poly(ctx, Scalar(1)), IndexSet{1} << i);
}

Poly LogForm::coefficient(IndexSet I) const
{
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? Poly(ctx_) : it->second;
}

Poly LogForm::as_function() const
{
    if (degree_ != 0) {
        throw DomainError("form of degree " + std::to_string(degree_) + " is not a function");
    }
    return coefficient(0);
}

bool LogForm::in_arena() const
{
    for (const auto& [I, c] : coeffs_) {
        if (!c.in_arena()) {
            return false;
        }
    }
    return true;
}

void LogForm::add(IndexSet I, const Poly& c)
{
    require_same_context(ctx_, c.context());
    if (std::popcount(I) != degree_) {
        throw DomainError("basis element of the wrong degree");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

LogForm LogForm::operator-() const
{
    LogForm r = *this;
    for (auto& [I, c] : r.coeffs_) {
        c = -c;
    }
    return r;
}

LogForm& LogForm::operator+=(const LogForm& o)
{
    require_same_context(ctx_, o.ctx_);
    if (o.degree_ != degree_) {
        throw DomainError("adding forms of degrees " + std::to_string(degree_) + " and " +
                          std::to_string(o.degree_));
    }
    for (const auto& [I, c] : o.coeffs_) {
        add(I, c);
    }
    return *this;
}

LogForm& LogForm::operator-=(const LogForm& o)
{
    return *this += -o;
}

LogForm operator*(const Poly& f, const LogForm& w)
{
    require_same_context(f.context(), w.ctx_);
    LogForm r(w.ctx_, w.degree_);
    for (const auto& [I, c] : w.coeffs_) {
        r.add(I, f * c);
    }
    return r;
}

bool operator==(const LogForm& a, const LogForm& b)
{
    return *a.ctx_ == *b.ctx_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string LogForm::to_string() const
{
    if (degree_ == 0) {
        return coefficient(0).to_string();
    }
    std::vector<std::string> parts;
    for (const auto& [I, c] : coeffs_) {
        parts.push_back(scaled_atom(c, basis_name(*ctx_, I)));
    }
    if (parts.empty()) {
        IndexSet first = (IndexSet{1} << degree_) - 1;
        return "0*" + basis_name(*ctx_, first);
    }
    return join_terms(parts);
}

LogForm d_log(const LogForm& w)
{
    const auto& ctx = w.context();
    if (w.degree() >= static_cast<int>(ctx->size())) {
        return LogForm(ctx, w.degree());
    }
    LogForm r(ctx, w.degree() + 1);
    for (const auto& [J, c] : w.coeffs()) {
        for (std::size_t i = 0; i < ctx->size(); ++i) {
            IndexSet bit = IndexSet{1} << i;
            if (J & bit) {
                continue;
            }
            Poly xi = frame_derivative(c, i);
            if (xi.is_zero()) {
                continue;
            }
            int s = wedge_sign(bit, J);
            r.add(J | bit, s > 0 ? xi : -xi);
        }
    }
    return r;
}

LogForm d_log(const Poly& f)
{
    return d_log(LogForm::function(f));
}

LogForm wedge(const LogForm& a, const LogForm& b)
{
    require_same_context(a.context(), b.context());
    int deg = a.degree() + b.degree();
    if (deg > static_cast<int>(a.context()->size())) {
        throw DomainError("wedge product exceeds the top degree");
    }
    LogForm r(a.context(), deg);
    for (const auto& [I, c] : a.coeffs()) {
        for (const auto& [J, e] : b.coeffs()) {
            int s = wedge_sign(I, J);
            if (s == 0) {
                continue;
            }
            Poly p = c * e;
            r.add(I | J, s > 0 ? p : -p);
        }
    }
    return r;
}

LogForm interior(const LogVectorField& v, const LogForm& w)
{
    require_same_context(v.context(), w.context());
    if (w.degree() == 0) {
        throw DomainError("contraction of a function");
    }
    const auto& ctx = w.context();
    std::vector<Poly> pair;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        pair.push_back(v.log_coeff(i));
    }
    LogForm r(ctx, w.degree() - 1);
    for (const auto& [I, c] : w.coeffs()) {
        auto idx = indices_of(I);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (pair[idx[k]].is_zero()) {
                continue;
            }
            Poly p = pair[idx[k]] * c;
            r.add(I & ~(IndexSet{1} << idx[k]), k % 2 ? -p : p);
        }
    }
    if (!r.in_arena()) {
        throw ArenaError("contraction of '" + w.to_string() + "' with '" + v.to_string() +
                         "' leaves the arena; the field is not logarithmic");
    }
    return r;
}

LogForm lie_derivative(const LogVectorField& v, const LogForm& w)
{
    LogForm r(w.context(), w.degree());
    if (w.degree() < static_cast<int>(w.context()->size())) {
        r += interior(v, d_log(w));
    }
    if (w.degree() > 0) {
        r += d_log(interior(v, w));
    }
    return r;
}

Poly evaluate(const LogForm& w, const std::vector<LogVectorField>& args)
{
    if (static_cast<int>(args.size()) != w.degree()) {
        throw DomainError("a form of degree " + std::to_string(w.degree()) + " takes " +
                          std::to_string(w.degree()) + " arguments");
    }
    LogForm cur = w;
    for (const auto& a : args) {
        cur = interior(a, cur);
    }
    return cur.as_function();
}

namespace {

void require_divisor_one_form(const LogForm& w, std::size_t i)
{
    const auto& ctx = *w.context();
    if (w.degree() != 1) {
        throw DomainError("residues are taken of 1-forms");
    }
    if (i >= ctx.size() || !ctx.is_divisor_coord(i)) {
        throw DomainError("residue along a coordinate that is not a divisor component");
    }
}

Poly restrict_to_zero(const Poly& c, std::size_t i)
{
    if (c.min_degree_in(i) < 0) {
        throw DomainError("coefficient '" + c.to_string() + "' has a pole along " +
                          c.context()->name(i) + "; not a logarithmic form");
    }
    return c.coefficient_in(i, 0);
}

} // namespace

Poly residue(const LogForm& w, std::size_t i)
{
    require_divisor_one_form(w, i);
    Poly c = w.coefficient(IndexSet{1} << i);
    for (std::size_t j : w.context()->divisor_coords()) {
        c = restrict_to_zero(c, j);
    }
    return c;
}

Poly residue_restriction(const LogForm& w, std::size_t i)
{
    require_divisor_one_form(w, i);
    return restrict_to_zero(w.coefficient(IndexSet{1} << i), i);
}

ResidueSummary res_const(const LogForm& w)
{
    ResidueSummary out;
    std::vector<Scalar> consts;
    bool all_const = true;
    for (std::size_t i : w.context()->divisor_coords()) {
        Poly r = residue_restriction(w, i);
        out.coords.push_back(i);
        if (auto s = r.as_scalar()) {
            consts.push_back(*s);
        } else {
            all_const = false;
        }
        out.residues.push_back(std::move(r));
    }
    if (all_const) {
        out.constants = std::move(consts);
    }
    return out;
}

} // namespace logsym
