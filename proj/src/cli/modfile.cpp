#include <algorithm>
#include <cctype>
#include <sstream>

#include "qred/dsl.hpp"

namespace qred {

using detail::Token;

Element parse_element(const Quiver &q, const Field &f, std::string_view text) {
    auto t = detail::tokenize(detail::strip_comment(text), 1);
    if (t.empty())
        throw ParseError(1, 1, "empty element");
    Element out;
    std::size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool negative = false;
        if (t[i].text == "+" || t[i].text == "-") {
            negative = t[i].text == "-";
            ++i;
        } else if (!first) {
            throw ParseError(1, t[i].column, "expected '+' or '-' between terms");
        }
        first = false;
        if (i >= t.size())
            throw ParseError(1, t.back().column, "dangling sign");
        Scalar c = f.from_int(1);
        if (t[i].kind == Token::Number && !q.find_arrow(t[i].text)) {
            std::string coeff = t[i].text;
            std::size_t col = t[i].column;
            ++i;
            if (i + 1 < t.size() && t[i].text == "/") {
                coeff += "/" + t[i + 1].text;
                i += 2;
            }
            if (i >= t.size() || t[i].text != "*")
                throw ParseError(1, col, "expected '*' after coefficient");
            ++i;
            c = detail::parse_scalar(f, coeff, 1, col);
        }
        if (negative)
            c = f.neg(c);

        Word word;
        std::optional<VertexId> trivial;
        std::size_t start = i < t.size() ? t[i].column : t.back().column;
        for (;;) {
            if (i >= t.size() || t[i].kind == Token::Punct)
                throw ParseError(1, i < t.size() ? t[i].column : t.back().column, "expected an arrow name");
            const std::string &name = t[i].text;
            if (auto a = q.find_arrow(name)) {
                word.push_back(*a);
            } else if (name.rfind("e_", 0) == 0 && q.find_vertex(name.substr(2)) && word.empty() &&
                       (i + 1 >= t.size() || t[i + 1].text != "*")) {
                trivial = q.find_vertex(name.substr(2));
            } else {
                throw ParseError(1, t[i].column, "unknown arrow '" + name + "'");
            }
            ++i;
            if (trivial || i >= t.size() || t[i].text != "*")
                break;
            ++i;
        }
        if (trivial) {
            add_term(out, Path::trivial(*trivial), c, f);
            continue;
        }
        auto path = make_path(q, word);
        if (!path)
            throw ParseError(1, start, "non-composable word");
        add_term(out, *path, c, f);
    }
    return out;
}

namespace {

std::vector<std::vector<std::string>> split_matrix(const std::string &text, std::size_t line, std::size_t col) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError(line, col, "expected a matrix literal [[...], ...]");
    std::vector<std::vector<std::string>> rows;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] != '[')
            throw ParseError(line, col, "expected '[' starting a matrix row");
        auto close = body.find(']', i);
        if (close == std::string::npos)
            throw ParseError(line, col, "unterminated matrix row");
        std::string row = body.substr(i + 1, close - i - 1);
        std::vector<std::string> entries;
        std::stringstream ss(row);
        std::string entry;
        while (std::getline(ss, entry, ','))
            entries.push_back(entry);
        if (!row.empty() && row.back() == ',')
            throw ParseError(line, col, "empty matrix entry");
        rows.push_back(std::move(entries));
        i = close + 1;
        if (i < body.size()) {
            if (body[i] != ',')
                throw ParseError(line, col, "expected ',' between matrix rows");
            ++i;
        }
    }
    return rows;
}

struct Header {
    std::string name;
    std::vector<std::string> over;
};

Rep parse_body(std::string_view text, const AlgebraHandle &a, const std::string &keyword, std::size_t over_count,
               Header &header) {
    const Quiver &q = a->quiver();
    const Field &f = a->field();
    Rep r{a, std::vector<std::size_t>(a->vertex_count(), 0), {}};
    std::vector<std::optional<std::pair<std::vector<std::vector<std::string>>, std::size_t>>> maps(
        a->arrow_count());
    bool saw_header = false;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto t = detail::tokenize(detail::strip_comment(raw), line_no);
        if (t.empty())
            continue;
        const std::string &kw = t[0].text;
        if (kw == keyword) {
            if (saw_header)
                throw ParseError(line_no, t[0].column, "duplicate '" + keyword + "' line");
            if (t.size() != 3 + over_count || t[2].text != "over")
                throw ParseError(line_no, t[0].column, "malformed '" + keyword + "' line");
            header.name = t[1].text;
            for (std::size_t i = 0; i < over_count; ++i)
                header.over.push_back(t[3 + i].text);
            saw_header = true;
        } else if (kw == "dim") {
            if (t.size() != 4 || t[2].text != "=" || t[3].kind != Token::Number)
                throw ParseError(line_no, t[0].column, "expected 'dim <vertex> = <int>'");
            auto v = q.find_vertex(t[1].text);
            if (!v)
                throw ParseError(line_no, t[1].column, "unknown vertex '" + t[1].text + "'");
            r.dims[*v] = std::stoul(t[3].text);
        } else if (kw == "map") {
            if (t.size() != 4 || t[2].text != "=" || t[3].kind != Token::Bracketed)
                throw ParseError(line_no, t[0].column, "expected 'map <arrow> = [[...]]'");
            auto x = q.find_arrow(t[1].text);
            if (!x)
                throw ParseError(line_no, t[1].column, "unknown arrow '" + t[1].text + "'");
            maps[*x] = std::make_pair(split_matrix(t[3].text, line_no, t[3].column), line_no);
        } else {
            throw ParseError(line_no, t[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!saw_header)
        throw ParseError(1, 1, "missing '" + keyword + " <name> over ...' line");

    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        const Arrow &arrow = q.arrows[x];
        std::size_t rows = r.dims[arrow.target], cols = r.dims[arrow.source];
        Matrix m(f, rows, cols);
        if (maps[x]) {
            const auto &[entries, line] = *maps[x];
            bool ok = entries.size() == rows;
            for (const auto &row : entries)
                ok = ok && row.size() == cols;
            if (!ok)
                throw ParseError(line, 1, "shape mismatch on arrow " + arrow.name + ": expected " +
                                              std::to_string(rows) + "x" + std::to_string(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m(i, j) = detail::parse_scalar(f, entries[i][j], line, 1);
        }
        r.maps.push_back(std::move(m));
    }
    try {
        check_rep(r);
    } catch (const std::invalid_argument &e) {
        throw ParseError(1, 1, e.what());
    }
    return r;
}

std::string matrix_literal(const Field &f, const Matrix &m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? ", " : "") + f.format(m(i, j));
        s += "]";
    }
    return s + "]";
}

std::string format_body(const Rep &m) {
    const Quiver &q = m.algebra->quiver();
    std::ostringstream os;
    for (VertexId v = 0; v < q.vertices.size(); ++v)
        os << "dim " << q.vertices[v] << " = " << m.dims[v] << "\n";
    for (ArrowId x = 0; x < q.arrows.size(); ++x)
        if (m.maps[x].rows() > 0 && m.maps[x].cols() > 0)
            os << "map " << q.arrows[x].name << " = " << matrix_literal(m.field(), m.maps[x]) << "\n";
    return os.str();
}

} // namespace

Rep parse_module(std::string_view text, const AlgebraHandle &a) {
    Header h;
    Rep r = parse_body(text, a, "module", 1, h);
    if (h.over[0] != a->name())
        throw ParseError(1, 1, "module is over '" + h.over[0] + "', expected '" + a->name() + "'");
    return r;
}

Bimodule parse_bimodule(std::string_view text, const AlgebraHandle &left, const AlgebraHandle &right) {
    Header h;
    Rep r = parse_body(text, tensor_with_opposite(left, right), "bimodule", 2, h);
    if (h.over[0] != left->name() || h.over[1] != right->name())
        throw ParseError(1, 1, "bimodule is over '" + h.over[0] + "' and '" + h.over[1] + "', expected '" +
                                   left->name() + "' and '" + right->name() + "'");
    return {left, right, std::move(r)};
}

std::string format_module(const Rep &m, const std::string &name) {
    return "module " + name + " over " + m.algebra->name() + "\n" + format_body(m);
}

std::string format_bimodule(const Bimodule &m, const std::string &name) {
    return "bimodule " + name + " over " + m.left->name() + " " + m.right->name() + "\n" + format_body(m.rep);
}

} // namespace qred
