#include "qred/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qred {

std::optional<VertexId> Quiver::find_vertex(const std::string &name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name)
            return static_cast<VertexId>(i);
    return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string &name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name)
            return static_cast<ArrowId>(i);
    return std::nullopt;
}

bool Quiver::same_shape(const Quiver &other) const {
    if (vertices.size() != other.vertices.size() || arrows.size() != other.arrows.size())
        return false;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source != other.arrows[i].source || arrows[i].target != other.arrows[i].target)
            return false;
    return true;
}

std::optional<Path> make_path(const Quiver &q, Word word) {
    if (word.empty())
        return std::nullopt;
    for (auto a : word)
        if (a >= q.arrows.size())
            return std::nullopt;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (q.arrows[word[i]].source != q.arrows[word[i + 1]].target)
            return std::nullopt;
    Path p;
    p.target = q.arrows[word.front()].target;
    p.source = q.arrows[word.back()].source;
    p.arrows = std::move(word);
    return p;
}

std::optional<Path> concat(const Path &p, const Path &q) {
    if (p.source != q.target)
        return std::nullopt;
    Path r;
    r.target = p.target;
    r.source = q.source;
    r.arrows.reserve(p.arrows.size() + q.arrows.size());
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

void add_term(Element &e, const Path &p, const Scalar &c, const Field &f) {
    if (Field::is_zero(c))
        return;
    auto [it, inserted] = e.try_emplace(p, c);
    if (inserted)
        return;
    it->second = f.add(it->second, c);
    if (Field::is_zero(it->second))
        e.erase(it);
}

void add_scaled(Element &e, const Element &x, const Scalar &c, const Field &f) {
    for (const auto &[p, v] : x)
        add_term(e, p, f.mul(v, c), f);
}

Element sandwich(const Path &u, const Element &x, const Path &v, const Field &f) {
    Element out;
    for (const auto &[p, c] : x) {
        auto left = concat(u, p);
        if (!left)
            continue;
        auto full = concat(*left, v);
        if (full)
            add_term(out, *full, c, f);
    }
    return out;
}

Element multiply(const Element &x, const Element &y, const Field &f) {
    Element out;
    for (const auto &[p, a] : x)
        for (const auto &[q, b] : y)
            if (auto pq = concat(p, q))
                add_term(out, *pq, f.mul(a, b), f);
    return out;
}

std::string Diagnostics::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            os << "; ";
        os << items[i].code << ": " << items[i].message;
    }
    return os.str();
}

Diagnostics validate(const Presentation &p) {
    Diagnostics d;
    const Quiver &q = p.quiver;
    auto report = [&](std::string code, std::string msg, std::optional<std::size_t> rel = std::nullopt) {
        d.items.push_back({std::move(code), std::move(msg), rel});
    };

    if (q.vertices.empty())
        report("empty quiver", "the quiver has no vertices");
    std::set<std::string> names;
    for (const auto &v : q.vertices)
        if (!names.insert(v).second)
            report("duplicate name", "vertex '" + v + "' declared twice");
    std::set<std::string> arrow_names;
    for (const auto &a : q.arrows) {
        if (!arrow_names.insert(a.name).second)
            report("duplicate name", "arrow '" + a.name + "' declared twice");
        if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
            report("dangling arrow endpoint", "arrow '" + a.name + "' has an undeclared endpoint");
    }
    if (!d.ok())
        return d;

    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const Relation &rel = p.relations[r];
        std::optional<std::pair<VertexId, VertexId>> ends;
        std::string label = "relation " + std::to_string(r + 1);
        for (const auto &term : rel) {
            if (term.word.size() < 2) {
                report("non-admissible generator", label + " has a term of length " +
                                                       std::to_string(term.word.size()) + " (< 2)",
                       r);
                continue;
            }
            bool known = true;
            for (auto a : term.word)
                if (a >= q.arrows.size()) {
                    report("unknown arrow", label + " refers to an undeclared arrow", r);
                    known = false;
                    break;
                }
            if (!known)
                continue;
            auto path = make_path(q, term.word);
            if (!path) {
                report("non-composable word", label + " contains a word whose arrows do not compose", r);
                continue;
            }
            if (!ends)
                ends = {path->source, path->target};
            else if (ends->first != path->source || ends->second != path->target)
                report("non-parallel relation terms", label + " mixes paths with different endpoints", r);
        }
    }
    return d;
}

std::vector<Element> relation_elements(const Presentation &p) {
    Diagnostics d = validate(p);
    if (!d.ok())
        throw std::invalid_argument("invalid presentation: " + d.summary());
    std::vector<Element> out;
    for (const auto &rel : p.relations) {
        Element e;
        for (const auto &term : rel)
            add_term(e, *make_path(p.quiver, term.word), p.field.canonical(term.coefficient), p.field);
        if (!e.empty())
            out.push_back(std::move(e));
    }
    return out;
}

Relation to_relation(const Element &e) {
    Relation r;
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        r.push_back({it->second, it->first.arrows});
    return r;
}

Presentation opposite_presentation(const Presentation &p) {
    Presentation op = p;
    op.name = p.name + "^op";
    for (auto &a : op.quiver.arrows)
        std::swap(a.source, a.target);
    for (auto &rel : op.relations)
        for (auto &term : rel)
            std::reverse(term.word.begin(), term.word.end());
    return op;
}

std::string format_path(const Quiver &q, const Path &p) {
    if (p.is_trivial())
        return "e_" + q.vertices[p.source];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += '*';
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

std::string format_element(const Quiver &q, const Field &f, const Element &e) {
    if (e.empty())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        Scalar c = it->second;
        bool negative = f.is_rational() && sgn(c) < 0;
        if (negative)
            c = -c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (c != 1)
            s += f.format(c) + " * ";
        s += format_path(q, it->first);
        first = false;
    }
    return s;
}

} // namespace qred
