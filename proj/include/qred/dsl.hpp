#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qred/bimodule.hpp"
#include "qred/presentation.hpp"

namespace qred {

/// Lexical, syntactic or semantic error in an input file, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses the algebra text format. Words are stored right-to-left
/// regardless of the declared convention. The result always validates.
Presentation parse_algebra(std::string_view text);

/// Emits `p` in the algebra text format (right-to-left convention).
std::string format_algebra(const Presentation &p);

/// Formats a field scalar as it appears in files: `n`, `n/d` or a residue.
std::string format_scalar(const Field &f, const Scalar &c);

/// Parses one element of kQ in relation syntax (right-to-left words). A term
/// `e_<vertex>` that is not an arrow name denotes the trivial path.
Element parse_element(const Quiver &q, const Field &f, std::string_view text);

/// Module file: `module <name> over <algebra>`, `dim <vertex> = <n>` and
/// `map <arrow> = [[...], ...]` lines. Unlisted dimensions and maps are zero.
/// The result is checked against the relations of `a`.
Rep parse_module(std::string_view text, const AlgebraHandle &a);

/// Bimodule file: `bimodule <name> over <left> <right>` followed by `dim` and
/// `map` lines over the product quiver, with vertices `(v,w)` and arrows
/// `(a,w)` and `(v,b^op)`.
Bimodule parse_bimodule(std::string_view text, const AlgebraHandle &left, const AlgebraHandle &right);

std::string format_module(const Rep &m, const std::string &name);
std::string format_bimodule(const Bimodule &m, const std::string &name);

namespace detail {

struct Token {
    enum Kind { Ident, Number, Punct, Bracketed } kind;
    std::string text;
    std::size_t column;
};

/// Splits one line (comment already removed) into tokens. `[...]` groups are
/// returned whole as Bracketed tokens.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no);
std::string_view strip_comment(std::string_view line);

/// Parses `int` or `int/int` (optionally signed) into the field.
Scalar parse_scalar(const Field &f, std::string_view text, std::size_t line, std::size_t column);

} // namespace detail

} // namespace qred
