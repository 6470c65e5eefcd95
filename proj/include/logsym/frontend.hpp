#pragma once

// Session files and expressions.
//
//   session := line*
//   line    := "vars" ident+
//            | "arena" ("torus" | "polynomial")
//            | "divisor" ("coords" ident* | "poly" expr)
//            | ("func" | "vfield" | "form" | "conn") ident ":" expr
//   comments start with '#' and run to the end of the line.
//
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := "-" unary | power
//   power   := postfix ("^" ["-"] postfix)*          left associative
//   postfix := atom ["(" expr ")"]                   field applied to a function
//   atom    := NUMBER | "I" | "T" | ident | "@" ident
//            | "d(" expr ")" | "dlog(" ident ")" | "(" expr ")"
//
// '^' is the wedge product on forms and an integer power on functions.
// "arena" must precede "divisor"; "divisor coords" defaults to the torus
// arena, "divisor poly" to the polynomial arena.  Without a divisor line
// the chart has no divisor coordinates.

#include "logsym/divisor.hpp"
#include "logsym/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logsym {

class ParseError : public Error {
public:
    ParseError(int line, int column, std::vector<std::string> expected, std::string found,
               const std::string& detail = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
    std::string found_;
};

using Value = std::variant<Poly, LogVectorField, LogForm>;

enum class ObjectKind { func, vfield, form, conn };

const char* kind_name(ObjectKind k);

struct NamedObject {
    std::string name;
    ObjectKind kind;
    Value value;
    int line;
};

struct Session {
    ContextPtr ctx;
    std::optional<Divisor> divisor;
    std::vector<NamedObject> objects;

    const NamedObject* find(const std::string& name) const;
    std::map<std::string, Value> names() const;
};

Session parse_session(std::string_view text);

/// Parses one expression over ctx; idents that are not variables are looked
/// up in names.  `line` is used for error positions.
Value parse_expression(std::string_view text, const ContextPtr& ctx,
                       const std::map<std::string, Value>& names = {}, int line = 1);

Poly parse_function(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names = {});
LogVectorField parse_field(std::string_view text, const ContextPtr& ctx,
                           const std::map<std::string, Value>& names = {});
LogForm parse_form(std::string_view text, const ContextPtr& ctx, const std::map<std::string, Value>& names = {});

std::string print_canonical(const Value& v);
std::string print_canonical(const Scalar& s);

/// Canonical session text; parse_session(print_session(s)) reproduces s.
std::string print_session(const Session& s);

} // namespace logsym
