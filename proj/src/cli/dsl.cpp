#include "qred/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qred {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace detail {

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')' || c == ',' ||
           c == '^' || c == '\'' || c == '.';
}

} // namespace

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = i + 1;
        if (c == '[') {
            int depth = 0;
            std::size_t j = i;
            for (; j < line.size(); ++j) {
                if (line[j] == '[')
                    ++depth;
                else if (line[j] == ']' && --depth == 0)
                    break;
            }
            if (j == line.size())
                throw ParseError(line_no, col, "unterminated '['");
            out.push_back({Token::Bracketed, std::string(line.substr(i, j - i + 1)), col});
            i = j + 1;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Token::Punct, "->", col});
            i += 2;
            continue;
        }
        if (c == ':' || c == '*' || c == '+' || c == '-' || c == '/' || c == '=') {
            out.push_back({Token::Punct, std::string(1, c), col});
            ++i;
            continue;
        }
        if (!ident_char(c))
            throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
        std::size_t j = i;
        while (j < line.size() && ident_char(line[j]))
            ++j;
        std::string text(line.substr(i, j - i));
        bool numeric = std::all_of(text.begin(), text.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); });
        out.push_back({numeric ? Token::Number : Token::Ident, std::move(text), col});
        i = j;
    }
    return out;
}

Scalar parse_scalar(const Field &f, std::string_view text, std::size_t line, std::size_t column) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string &t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); });
    };
    if (!digits(num) || !digits(den))
        throw ParseError(line, column, "malformed scalar '" + std::string(text) + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw ParseError(line, column, "zero denominator");
    if (negative)
        n = -n;
    try {
        return f.from_fraction(n, d);
    } catch (const std::invalid_argument &e) {
        throw ParseError(line, column, e.what());
    }
}

} // namespace detail

using detail::Token;

namespace {

class AlgebraParser {
public:
    Presentation run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        bool in_relations = false;
        bool saw_end = true;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            auto tokens = detail::tokenize(detail::strip_comment(raw), line_no);
            if (tokens.empty())
                continue;
            if (in_relations) {
                if (tokens.size() == 1 && tokens[0].text == "end") {
                    in_relations = false;
                    saw_end = true;
                    continue;
                }
                relation(tokens, line_no);
                continue;
            }
            directive(tokens, line_no, in_relations, saw_end);
        }
        if (!saw_end)
            throw ParseError(line_no, 1, "missing 'end' after relations");

        for (auto &[rel, line] : pending_) {
            Relation out;
            for (auto &t : rel)
                out.push_back(resolve(t, line));
            p_.relations.push_back(std::move(out));
        }
        Diagnostics d = validate(p_);
        if (!d.ok()) {
            const Diagnostic &first = d.items.front();
            std::size_t line = first.relation ? pending_[*first.relation].second : 1;
            throw ParseError(line, 1, first.code + ": " + first.message);
        }
        return p_;
    }

private:
    struct RawTerm {
        Scalar coefficient;
        std::vector<std::pair<std::string, std::size_t>> arrows;
    };

    void directive(const std::vector<Token> &t, std::size_t line, bool &in_relations, bool &saw_end) {
        const std::string &kw = t[0].text;
        auto need = [&](std::size_t n) {
            if (t.size() != n)
                throw ParseError(line, t[0].column, "malformed '" + kw + "' line");
        };
        if (kw == "algebra") {
            need(2);
            p_.name = t[1].text;
        } else if (kw == "field") {
            if (t.size() == 2 && t[1].text == "rational") {
                p_.field = Field::rational();
            } else if (t.size() == 3 && t[1].text == "gf" && t[2].kind == Token::Number) {
                try {
                    p_.field = Field::prime(std::stoull(t[2].text));
                } catch (const std::exception &) {
                    throw ParseError(line, t[2].column, "field characteristic must be a prime below 2^31");
                }
            } else {
                throw ParseError(line, t[0].column, "expected 'field rational' or 'field gf <p>'");
            }
        } else if (kw == "convention") {
            std::string joined;
            for (std::size_t i = 1; i < t.size(); ++i)
                joined += t[i].text;
            if (joined == "right-to-left")
                p_.convention = Convention::RightToLeft;
            else if (joined == "left-to-right")
                p_.convention = Convention::LeftToRight;
            else
                throw ParseError(line, t[0].column, "expected 'right-to-left' or 'left-to-right'");
        } else if (kw == "vertices") {
            if (t.size() < 2)
                throw ParseError(line, t[0].column, "'vertices' needs at least one name");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (t[i].kind == Token::Punct)
                    throw ParseError(line, t[i].column, "expected a vertex name");
                if (p_.quiver.find_vertex(t[i].text))
                    throw ParseError(line, t[i].column, "duplicate name: vertex '" + t[i].text + "'");
                p_.quiver.vertices.push_back(t[i].text);
            }
        } else if (kw == "arrow") {
            if (t.size() != 6 || t[2].text != ":" || t[4].text != "->" || t[1].kind != Token::Ident)
                throw ParseError(line, t[0].column, "expected 'arrow <name> : <vertex> -> <vertex>'");
            if (p_.quiver.find_arrow(t[1].text))
                throw ParseError(line, t[1].column, "duplicate name: arrow '" + t[1].text + "'");
            auto s = p_.quiver.find_vertex(t[3].text);
            if (!s)
                throw ParseError(line, t[3].column, "unknown vertex '" + t[3].text + "'");
            auto e = p_.quiver.find_vertex(t[5].text);
            if (!e)
                throw ParseError(line, t[5].column, "unknown vertex '" + t[5].text + "'");
            p_.quiver.arrows.push_back({t[1].text, *s, *e});
        } else if (kw == "relations") {
            need(1);
            in_relations = true;
            saw_end = false;
        } else {
            throw ParseError(line, t[0].column, "unknown directive '" + kw + "'");
        }
    }

    bool is_arrow_name(const std::string &s) const {
        return std::any_of(p_.quiver.arrows.begin(), p_.quiver.arrows.end(),
                           [&](const Arrow &a) { return a.name == s; });
    }

    void relation(const std::vector<Token> &t, std::size_t line) {
        std::vector<RawTerm> terms;
        std::size_t i = 0;
        bool first = true;
        while (i < t.size()) {
            bool negative = false;
            if (t[i].text == "+" || t[i].text == "-") {
                negative = t[i].text == "-";
                ++i;
            } else if (!first) {
                throw ParseError(line, t[i].column, "expected '+' or '-' between terms");
            }
            first = false;
            if (i >= t.size())
                throw ParseError(line, t.back().column, "dangling sign");
            RawTerm term;
            term.coefficient = p_.field.from_int(negative ? -1 : 1);
            if (t[i].kind == Token::Number && !is_arrow_name(t[i].text)) {
                std::string coeff = t[i].text;
                std::size_t col = t[i].column;
                ++i;
                if (i + 1 < t.size() && t[i].text == "/") {
                    if (t[i + 1].kind != Token::Number)
                        throw ParseError(line, t[i + 1].column, "expected a denominator");
                    coeff += "/" + t[i + 1].text;
                    i += 2;
                }
                if (i >= t.size() || t[i].text != "*")
                    throw ParseError(line, col, "expected '*' after coefficient");
                ++i;
                Scalar c = detail::parse_scalar(p_.field, coeff, line, col);
                term.coefficient = negative ? p_.field.neg(c) : c;
            }
            for (;;) {
                if (i >= t.size() || t[i].kind == Token::Punct)
                    throw ParseError(line, i < t.size() ? t[i].column : t.back().column, "expected an arrow name");
                term.arrows.emplace_back(t[i].text, t[i].column);
                ++i;
                if (i < t.size() && t[i].text == "*") {
                    ++i;
                    continue;
                }
                break;
            }
            terms.push_back(std::move(term));
        }
        pending_.emplace_back(std::move(terms), line);
    }

    RelationTerm resolve(const RawTerm &t, std::size_t line) const {
        RelationTerm out{t.coefficient, {}};
        for (const auto &[name, col] : t.arrows) {
            auto a = p_.quiver.find_arrow(name);
            if (!a)
                throw ParseError(line, col, "unknown arrow '" + name + "'");
            out.word.push_back(*a);
        }
        if (p_.convention == Convention::LeftToRight)
            std::reverse(out.word.begin(), out.word.end());
        if (out.word.size() >= 2 && !make_path(p_.quiver, out.word))
            throw ParseError(line, t.arrows.front().second, "non-composable word");
        return out;
    }

    Presentation p_;
    std::vector<std::pair<std::vector<RawTerm>, std::size_t>> pending_;
};

} // namespace

Presentation parse_algebra(std::string_view text) { return AlgebraParser().run(text); }

std::string format_scalar(const Field &f, const Scalar &c) { return f.format(c); }

std::string format_algebra(const Presentation &p) {
    std::ostringstream os;
    os << "algebra " << p.name << "\n";
    os << "field " << p.field.name() << "\n";
    os << "vertices";
    for (const auto &v : p.quiver.vertices)
        os << ' ' << v;
    os << "\n";
    for (const auto &a : p.quiver.arrows)
        os << "arrow " << a.name << " : " << p.quiver.vertices[a.source] << " -> " << p.quiver.vertices[a.target]
           << "\n";
    os << "relations\n";
    for (const auto &rel : p.relations) {
        bool first = true;
        for (const auto &term : rel) {
            Scalar c = p.field.canonical(term.coefficient);
            bool negative = p.field.is_rational() && sgn(c) < 0;
            if (negative)
                c = -c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (c != 1)
                os << p.field.format(c) << " * ";
            for (std::size_t i = 0; i < term.word.size(); ++i)
                os << (i ? "*" : "") << p.quiver.arrows[term.word[i]].name;
        }
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

} // namespace qred
