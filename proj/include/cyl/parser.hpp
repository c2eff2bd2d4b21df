#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cyl/operators.hpp"

namespace cyl {

/// Syntax error with the byte offset of the offending token and the set of
/// token descriptions that would have been accepted there.
struct ParseError : Error {
    std::size_t offset;
    std::vector<std::string> expected;
    ParseError(const std::string& msg, std::size_t off, std::vector<std::string> exp = {})
        : Error(msg), offset(off), expected(std::move(exp)) {}
};

struct ParseOptions {
    /// When set, decimal literals are accepted and snapped to the simplest
    /// rational within +-tol; each conversion is reported in `warnings`.
    std::optional<Rational> rationalize_tol;
};

/// Parses the operator mini-language:
///
///   op        := term ("+" | "-" term)*
///   term      := coeff ["*"] factor | factor | coeff
///   factor    := ("Dt" | "Dx") ["^" int]
///   coeff     := cplx | "(" trigsum ")" ["i"]
///   cplx      := rational ["i"] | "i" | "(" csum ")" ["i"]
///   trigsum   := trigterm (("+" | "-") trigterm)*
///   trigterm  := [cplx ["*"]] ("sin(t)" | "cos(t)") | csum-atom
///
/// plus the separable alternative "p(Dx)=<poly>; q(Dt)=<poly>", which
/// specifies the symbol form directly. Normalization yields exactly one
/// DifferentialOperator variant or a structured rejection (mixed Dt*Dx
/// products; powers >= 2 outside the separable form; non-real a(t); ...).
DifferentialOperator parse_operator(std::string_view text, const ParseOptions& opts,
                                    std::vector<std::string>& warnings);
DifferentialOperator parse_operator(std::string_view text);

} // namespace cyl
