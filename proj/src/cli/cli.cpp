#include "logsym/cli.hpp"

#include "logsym/diffop.hpp"
#include "logsym/frontend.hpp"
#include "logsym/poisson.hpp"
#include "logsym/prequant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace logsym::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

/// A report is rendered either as text (verdict line, then "key: value"
/// lines) or as json with the same keys, so both modes agree by construction.
struct Report {
    bool pass = true;
    std::string verdict;
    json fields = json::object();

    void add(const std::string& key, const std::string& value) { fields[key] = value; }
    void add(const std::string& key, bool value) { fields[key] = value; }
    void add(const std::string& key, const std::vector<std::string>& values) { fields[key] = values; }
    void add(const std::string& key, json value) { fields[key] = std::move(value); }
};

std::string text_value(const json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "yes" : "no";
    }
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? "; " : "") + text_value(v[i]);
        }
        return out.empty() ? "(none)" : out;
    }
    if (v.is_object()) {
        std::string out;
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            out += (first ? "" : ", ") + k + "=" + text_value(x);
            first = false;
        }
        return out;
    }
    return v.dump();
}

void render(const std::string& command, const Report& r, bool as_json, std::ostream& out)
{
    if (as_json) {
        json j;
        j["schema"] = "logsym/1";
        j["command"] = command;
        j["pass"] = r.pass;
        j["verdict"] = r.verdict;
        for (const auto& [k, v] : r.fields.items()) {
            j[k] = v;
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << r.verdict << "\n";
    for (const auto& [k, v] : r.fields.items()) {
        out << "  " << k << ": " << text_value(v) << "\n";
    }
}

std::string read_all(std::istream& in)
{
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Everything a subcommand handler sees.
class Env {
public:
    Env(Session s, std::map<std::string, std::string> opts)
        : session_(std::move(s)), names_(session_.names()), opts_(std::move(opts))
    {
    }

    const Session& session() const { return session_; }
    const ContextPtr& ctx() const { return session_.ctx; }
    const Divisor& divisor() const { return *session_.divisor; }

    bool has(const std::string& key) const { return opts_.count(key) > 0; }

    const std::string& raw(const std::string& key) const
    {
        auto it = opts_.find(key);
        if (it == opts_.end()) {
            throw UsageError("missing required option --" + key);
        }
        return it->second;
    }

    Value value(const std::string& key, const std::string& text) const
    {
        try {
            return parse_expression(text, ctx(), names_);
        } catch (const ParseError& e) {
            throw UsageError("--" + key + ": " + e.what());
        }
    }

    Poly func(const std::string& key) const { return as<Poly>(key, raw(key), "a function"); }

    LogVectorField field(const std::string& key) const { return as<LogVectorField>(key, raw(key), "a vector field"); }

    LogForm form(const std::string& key, std::optional<int> degree = std::nullopt) const
    {
        LogForm w = as<LogForm>(key, raw(key), "a form");
        if (degree && w.degree() != *degree) {
            throw UsageError("--" + key + " must be a " + std::to_string(*degree) + "-form, got a " +
                             std::to_string(w.degree()) + "-form");
        }
        return w;
    }

    /// --form, or the unique 2-form declared by the session.
    LogForm omega() const
    {
        if (has("form")) {
            return form("form", 2);
        }
        const NamedObject* found = nullptr;
        for (const auto& o : session_.objects) {
            const auto* w = std::get_if<LogForm>(&o.value);
            if (o.kind == ObjectKind::form && w && w->degree() == 2) {
                if (found) {
                    throw UsageError("several 2-forms in the session; choose one with --form");
                }
                found = &o;
            }
        }
        if (!found) {
            throw UsageError("missing required option --form");
        }
        return std::get<LogForm>(found->value);
    }

    Connection1 conn() const { return Connection1(form("conn", 1)); }

    std::optional<std::vector<LogVectorField>> fields() const
    {
        if (!has("fields")) {
            return std::nullopt;
        }
        std::vector<LogVectorField> out;
        std::stringstream ss(raw("fields"));
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(as<LogVectorField>("fields", item, "a vector field"));
        }
        return out;
    }

    SymplecticData symplectic() const { return assemble_symplectic(divisor(), omega(), fields()); }

    std::optional<bool> membership(const std::string& key) const
    {
        if (!has(key) || raw(key) == "auto") {
            return std::nullopt;
        }
        if (raw(key) == "yes") {
            return true;
        }
        if (raw(key) == "no") {
            return false;
        }
        throw UsageError("--" + key + " takes yes, no or auto");
    }

private:
    template <class T>
    T as(const std::string& key, const std::string& text, const char* what) const
    {
        Value v = value(key, text);
        if (auto* p = std::get_if<T>(&v)) {
            return std::move(*p);
        }
        throw UsageError("--" + key + " must be " + what);
    }

    Session session_;
    std::map<std::string, Value> names_;
    std::map<std::string, std::string> opts_;
};

std::vector<std::string> strings(const std::vector<Scalar>& xs)
{
    std::vector<std::string> out;
    for (const auto& x : xs) {
        out.push_back(x.to_string());
    }
    return out;
}

json period_json(const VarContext& ctx, const Period& p)
{
    json j;
    j["cycle"] = "T_{" + ctx.name(p.i) + "," + ctx.name(p.j) + "}";
    j["period"] = p.value.to_string();
    auto n = integral_multiple_of_t(p.value);
    j["multiple_of_T"] = n ? json(n->get_str()) : json(nullptr);
    return j;
}

json periods_json(const VarContext& ctx, const std::vector<Period>& ps)
{
    json arr = json::array();
    for (const auto& p : ps) {
        arr.push_back(period_json(ctx, p));
    }
    return arr;
}

json residues_json(const VarContext& ctx, const std::vector<std::size_t>& coords, const std::vector<std::string>& vals)
{
    json j = json::object();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        j[ctx.name(coords[k])] = vals[k];
    }
    return j;
}

std::string factor(const Scalar& c)
{
    return c.is_product_safe() ? c.to_string() : "(" + c.to_string() + ")";
}

// Handlers. Each fills a Report; DomainError and ArenaError become a failing
// verdict, everything else propagates.

Report cmd_check_divisor(const Env& e)
{
    Report r;
    Poly h = e.has("h") ? e.func("h") : e.divisor().equation();
    auto sq = check_squarefree(h);
    r.add("equation", h.to_string());
    r.add("reduced", sq.reduced);
    if (!sq.reduced) {
        r.add("repeated_factor", sq.witness.to_string());
    }
    auto ncd = is_coordinate_ncd(h);
    r.add("coordinate_normal_crossing", ncd.has_value());
    r.pass = sq.reduced;
    if (auto fs = e.fields()) {
        Divisor d = Divisor::general(h);
        std::vector<std::string> lines;
        for (const auto& f : *fs) {
            auto lr = is_logarithmic(f, d);
            lines.push_back(f.to_string() + (lr.logarithmic ? " logarithmic" : " not logarithmic, remainder " +
                                                                                    lr.remainder.to_string()));
            r.pass = r.pass && lr.logarithmic;
        }
        r.add("fields", lines);
    }
    r.verdict = sq.reduced ? "reduced divisor: h = " + h.to_string()
                           : "not reduced: repeated factor " + sq.witness.to_string();
    return r;
}

Report cmd_check_saito(const Env& e)
{
    Report r;
    auto fs = e.fields();
    if (!fs) {
        throw UsageError("missing required option --fields");
    }
    const Divisor& d = e.divisor();
    std::vector<std::string> logs;
    for (const auto& f : *fs) {
        auto lr = is_logarithmic(f, d);
        logs.push_back(f.to_string() + (lr.logarithmic ? " logarithmic" : " not logarithmic"));
    }
    auto sr = saito_check(*fs, d);
    r.add("h", d.equation().to_string());
    r.add("det", sr.det.to_string());
    r.add("fields", logs);
    r.pass = sr.free;
    if (sr.free) {
        r.add("unit", sr.basis->certificate.to_string());
        r.verdict = "free: det = " + sr.det.to_string() + " = " + factor(sr.basis->certificate) + "*h";
    } else if (sr.non_logarithmic) {
        r.verdict = "not certified: field " + std::to_string(*sr.non_logarithmic + 1) + " is not logarithmic";
    } else {
        r.verdict = "not certified: det = " + sr.det.to_string() + " is not a nonzero constant multiple of h";
    }
    return r;
}

Report cmd_weights(const Env& e)
{
    Report r;
    Poly h = e.has("h") ? e.func("h") : e.divisor().equation();
    r.add("equation", h.to_string());
    auto w = weighted_homogeneous(h);
    if (!w) {
        r.pass = false;
        r.verdict = "none: not weighted homogeneous with positive weights";
        return r;
    }
    json ws = json::object();
    std::string text;
    for (std::size_t i = 0; i < w->w.size(); ++i) {
        ws[e.ctx()->name(i)] = w->w[i].get_str();
        text += (i ? ", " : "") + e.ctx()->name(i) + "=" + w->w[i].get_str();
    }
    r.add("weights", ws);
    r.add("degree", w->degree.get_str());
    r.verdict = "weighted homogeneous: " + text + "; degree " + w->degree.get_str();
    return r;
}

Report cmd_check_logsymplectic(const Env& e)
{
    Report r;
    auto chk = check_symplectic(e.divisor(), e.omega(), e.fields());
    r.add("closed", chk.closed);
    r.add("even_dimension", chk.even_dimension);
    r.add("nondegenerate", chk.nondegenerate);
    if (chk.data) {
        r.add("det", chk.data->det.to_string());
    }
    r.pass = chk.closed && chk.even_dimension && chk.nondegenerate;
    r.verdict = r.pass ? "log-symplectic: det = " + chk.data->det.to_string() : "not log-symplectic: " + chk.reason;
    return r;
}

Report cmd_hamiltonian(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    auto h = hamiltonian(s, e.func("f"));
    r.add("f", h.f.to_string());
    r.add("field", h.delta.to_string());
    r.add("certificate", h.certificate.to_string());
    r.verdict = "delta_f = " + h.delta.to_string();
    return r;
}

Report cmd_bracket(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    Poly b = bracket(s, e.func("f"), e.func("g"));
    r.add("bracket", b.to_string());
    r.verdict = "{f,g} = " + b.to_string();
    return r;
}

Report cmd_singbracket(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    auto b = sing_bracket(s, e.func("a"), e.func("b"), e.membership("a-in"), e.membership("b-in"));
    r.add("numerator", b.num().to_string());
    r.add("denominator", b.den().to_string());
    r.verdict = "{a,b}_sing = " + b.to_string();
    return r;
}

Report cmd_jacobi(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    Poly j = jacobi_defect(s, e.func("f"), e.func("g"), e.func("h"));
    r.add("defect", j.to_string());
    r.pass = j.is_zero();
    r.verdict = r.pass ? "jacobi holds" : "jacobi fails: defect " + j.to_string();
    return r;
}

Report cmd_identities(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    auto rep = verify_identities(s, e.func("u"), e.func("v"), e.func("a"), e.func("b"));
    json items = json::object();
    for (const auto& it : rep.items) {
        items[it.name] = !it.applicable ? std::string("not applicable") : it.zero ? std::string("0") : it.defect;
    }
    r.add("defects", items);
    r.add("reported_only", std::vector<std::string>{"ii"});
    r.pass = rep.asserted_zero();
    r.verdict = r.pass ? "identities hold" : "identities fail";
    return r;
}

LogDiffOp1 operator_arg(const Env& e, const std::string& field_key, const std::string& mult_key)
{
    LogVectorField v = e.has(field_key) ? e.field(field_key) : LogVectorField(e.ctx());
    Poly m = e.has(mult_key) ? e.func(mult_key) : Poly(e.ctx());
    return {v, m};
}

Report cmd_symbol(const Env& e)
{
    Report r;
    auto a = operator_arg(e, "field", "mult");
    r.add("operator", a.to_string());
    r.add("symbol", symbol(a).to_string());
    r.verdict = "symbol = " + symbol(a).to_string();
    if (e.has("field2") || e.has("mult2")) {
        auto b = operator_arg(e, "field2", "mult2");
        auto lhs = symbol(commutator(a, b));
        auto rhs = lie_bracket(symbol(a), symbol(b));
        r.add("commutator", commutator(a, b).to_string());
        r.add("homomorphism", lhs == rhs);
        r.pass = lhs == rhs;
    }
    return r;
}

Report cmd_decompose(const Env& e)
{
    Report r;
    auto c = e.conn();
    auto phi = operator_arg(e, "field", "mult");
    auto dec = decompose(phi, c);
    r.add("operator", phi.to_string());
    r.add("derivation", dec.delta.to_string());
    r.add("multiplier", dec.m.to_string());
    auto split = splitting_check(c, {phi});
    r.add("section_identity", split.section_identity);
    r.add("lambda_chi_zero", split.lambda_chi_zero);
    r.pass = split.section_identity && split.lambda_chi_zero;
    r.verdict = "phi = nabla_(" + dec.delta.to_string() + ") + " + dec.m.to_string();
    return r;
}

std::optional<Scalar> alpha_arg(const Env& e)
{
    if (!e.has("alpha")) {
        return std::nullopt;
    }
    auto s = e.func("alpha").as_scalar();
    if (!s || s->is_zero()) {
        throw UsageError("--alpha must be a nonzero constant");
    }
    return s;
}

Report cmd_dirac_test(const Env& e)
{
    Report r;
    auto s = e.symplectic();
    auto c = e.conn();
    auto res = dirac_check(e.func("f"), e.func("g"), s, c, alpha_arg(e));
    r.add("curvature", c.curvature().to_string());
    r.add("defect", res.defect.to_string());
    r.add("predicted_multiplier", res.predicted.to_string());
    r.pass = res.holds;
    r.verdict = res.holds ? "holds" : "fails: defect multiplier " + res.defect.mult().to_string();
    return r;
}

Report cmd_curvature(const Env& e)
{
    Report r;
    auto c = e.conn();
    r.add("connection", c.sigma().to_string());
    r.add("curvature", c.curvature().to_string());
    r.verdict = "K = " + c.curvature().to_string();
    return r;
}

Report cmd_gauge(const Env& e)
{
    Report r;
    auto c = e.conn();
    auto g = gauge(c, e.form("tau", 1));
    r.add("connection", g.sigma().to_string());
    r.add("curvature", g.curvature().to_string());
    r.verdict = "gauged: curvature unchanged, K = " + g.curvature().to_string();
    return r;
}

Report cmd_flat(const Env& e)
{
    Report r;
    auto f = is_flat(e.conn());
    r.add("curvature", f.curvature.to_string());
    r.pass = f.flat;
    if (!f.flat) {
        r.verdict = "not flat: K = " + f.curvature.to_string();
        return r;
    }
    r.add("residues", residues_json(*e.ctx(), f.coords, strings(f.residues)));
    r.add("potential", f.potential->to_string());
    r.verdict = "flat";
    return r;
}

Report cmd_residues(const Env& e)
{
    Report r;
    LogForm w = e.has("conn") ? e.form("conn") : e.form("form");
    auto rs = res_const(w);
    std::vector<std::string> vals;
    for (const auto& p : rs.residues) {
        vals.push_back(p.to_string());
    }
    r.add("residues", residues_json(*e.ctx(), rs.coords, vals));
    r.verdict = rs.constants ? "constant residues" : "nonconstant residues";
    return r;
}

Report cmd_normalize_residues(const Env& e)
{
    Report r;
    auto n = normalize_residues(e.conn());
    json shifts = json::object();
    for (std::size_t k = 0; k < n.coords.size(); ++k) {
        shifts[e.ctx()->name(n.coords[k])] = std::to_string(n.shifts[k]);
    }
    r.add("residues", residues_json(*e.ctx(), n.coords, strings(n.residues)));
    r.add("shifts", shifts);
    r.add("connection", n.conn.sigma().to_string());
    r.add("curvature", n.conn.curvature().to_string());
    r.verdict = "normalized: connection " + n.conn.sigma().to_string();
    return r;
}

Report cmd_periods(const Env& e)
{
    Report r;
    LogForm w = e.omega();
    r.add("periods", periods_json(*e.ctx(), periods(w)));
    r.verdict = "periods of " + w.to_string();
    return r;
}

Report cmd_integrality(const Env& e)
{
    Report r;
    auto res = integrality_check(e.omega());
    r.add("periods", periods_json(*e.ctx(), res.periods));
    r.pass = res.integral;
    if (res.integral) {
        r.verdict = "integral";
    } else {
        const auto& p = *res.witness;
        r.verdict = "non-integral: period " + p.value.to_string() + " over T_{" + e.ctx()->name(p.i) + "," +
                    e.ctx()->name(p.j) + "}";
    }
    return r;
}

Report cmd_class(const Env& e, bool primitive)
{
    Report r;
    LogForm w = e.has("form") ? e.form("form") : e.omega();
    auto cp = class_and_primitive(w);
    r.add("class", cp.class_part.to_string());
    r.add("primitive", cp.primitive.to_string());
    r.verdict = primitive ? "primitive = " + cp.primitive.to_string() : "class = " + cp.class_part.to_string();
    return r;
}

Report cmd_prequantize(const Env& e)
{
    Report r;
    auto p = prequantize(e.divisor(), e.omega());
    r.add("closed", p.closed);
    r.add("even_dimension", p.even_dimension);
    r.add("nondegenerate", p.nondegenerate);
    if (p.det) {
        r.add("det", p.det->to_string());
    }
    r.add("periods", periods_json(*e.ctx(), p.periods));
    r.add("integral", p.integral);
    if (p.class_part) {
        r.add("class", p.class_part->to_string());
    }
    if (p.connection) {
        r.add("connection", p.connection->sigma().to_string());
        r.add("curvature", p.connection->curvature().to_string());
        r.add("residues", strings(p.residues));
        std::vector<std::string> shifts;
        for (long s : p.shifts) {
            shifts.push_back(std::to_string(s));
        }
        r.add("shifts", shifts);
    }
    r.add("notes", p.notes);
    r.add("comparison", p.lct_caveat);
    r.pass = p.prequantizable;
    r.verdict = p.verdict;
    return r;
}

struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> options;
    std::function<Report(const Env&)> run;
};

const std::vector<Command>& table()
{
    static const std::vector<Command> cmds{
        {"check-divisor", "reducedness and normal crossing test of the divisor", {"h", "fields"}, cmd_check_divisor},
        {"check-saito", "Saito freeness criterion for a list of fields", {"fields"}, cmd_check_saito},
        {"check-logsymplectic", "closedness and nondegeneracy of a 2-form", {"form", "fields"}, cmd_check_logsymplectic},
        {"hamiltonian", "Hamiltonian field of a function", {"form", "fields", "f"}, cmd_hamiltonian},
        {"bracket", "Poisson bracket of two functions", {"form", "fields", "f", "g"}, cmd_bracket},
        {"singbracket", "singular bracket", {"form", "fields", "a", "b", "a-in", "b-in"}, cmd_singbracket},
        {"jacobi", "Jacobi defect of three functions", {"form", "fields", "f", "g", "h"}, cmd_jacobi},
        {"identities", "bracket identities on u, v, a, b", {"form", "fields", "u", "v", "a", "b"}, cmd_identities},
        {"symbol", "symbol of a first-order operator", {"field", "mult", "field2", "mult2"}, cmd_symbol},
        {"decompose", "split an operator along a connection", {"conn", "field", "mult"}, cmd_decompose},
        {"dirac-test", "Dirac condition for prequantum operators", {"form", "fields", "conn", "f", "g", "alpha"},
         cmd_dirac_test},
        {"curvature", "curvature of a connection", {"conn"}, cmd_curvature},
        {"gauge", "gauge a connection by a closed 1-form", {"conn", "tau"}, cmd_gauge},
        {"flat", "flatness with residues and potential", {"conn"}, cmd_flat},
        {"residues", "residues along the divisor coordinates", {"conn", "form"}, cmd_residues},
        {"normalize-residues", "shift constant residues into [0,1)", {"conn"}, cmd_normalize_residues},
        {"periods", "periods over the coordinate tori", {"form"}, cmd_periods},
        {"integrality", "integrality of the periods", {"form"}, cmd_integrality},
        {"class", "constant logarithmic class of a closed form", {"form"},
         [](const Env& e) { return cmd_class(e, false); }},
        {"primitive", "primitive of the exact part of a closed form", {"form"},
         [](const Env& e) { return cmd_class(e, true); }},
        {"prequantize", "full prequantization pipeline", {"form"}, cmd_prequantize},
        {"weights", "positive weights making h weighted homogeneous", {"h"}, cmd_weights},
    };
    return cmds;
}

const std::map<std::string, std::string>& option_help()
{
    static const std::map<std::string, std::string> help{
        {"h", "divisor equation, or the third function for jacobi"},
        {"fields", "comma-separated vector fields"},
        {"form", "2-form (defaults to the unique session 2-form)"},
        {"conn", "connection 1-form"},
        {"tau", "closed 1-form"},
        {"f", "function"},
        {"g", "function"},
        {"a", "function"},
        {"b", "function"},
        {"u", "function in the divisor ideal"},
        {"v", "function in the divisor ideal"},
        {"a-in", "membership of a in the ideal: yes, no or auto"},
        {"b-in", "membership of b in the ideal: yes, no or auto"},
        {"field", "vector field of the operator"},
        {"mult", "multiplier of the operator"},
        {"field2", "vector field of the second operator"},
        {"mult2", "multiplier of the second operator"},
        {"alpha", "scalar replacing T in the prequantum operator"},
    };
    return help;
}

} // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& c : table()) {
            out.push_back(c.name);
        }
        return out;
    }();
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Exact logarithmic symplectic calculus on affine charts", "logsym"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    std::string session_path;
    std::string format = "text";
    std::map<std::string, std::string> opts;
    const Command* chosen = nullptr;

    for (const auto& c : table()) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--session", session_path, "session file, - for stdin")->required();
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        for (const auto& o : c.options) {
            sub->add_option_function<std::string>(
                "--" + o, [&opts, o](const std::string& v) { opts[o] = v; }, option_help().at(o));
        }
        sub->callback([&chosen, &c] { chosen = &c; });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Exit::pass : Exit::usage;
    }

    try {
        std::string text;
        if (session_path == "-") {
            text = read_all(in);
        } else {
            std::ifstream f(session_path, std::ios::binary);
            if (!f) {
                throw UsageError("cannot read session file " + session_path);
            }
            text = read_all(f);
        }
        Session s;
        try {
            s = parse_session(text);
        } catch (const ParseError& e) {
            throw UsageError(session_path + ": " + e.what());
        }
        Env env(std::move(s), opts);
        Report r;
        try {
            r = chosen->run(env);
        } catch (const DomainError& e) {
            r = Report{false, std::string("failed: ") + e.what(), json::object()};
        } catch (const ArenaError& e) {
            r = Report{false, std::string("failed: ") + e.what(), json::object()};
        }
        render(chosen->name, r, format == "json", out);
        return r.pass ? Exit::pass : Exit::fail;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    }
}

} // namespace logsym::cli
