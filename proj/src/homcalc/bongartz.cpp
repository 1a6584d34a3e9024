#include <map>

#include "qred/homcalc.hpp"

namespace qred {

namespace {

// All paths of Q (not only normal ones) of length at most `max_len`.
std::vector<Path> all_paths(const Quiver &q, std::size_t max_len) {
    std::vector<Path> out;
    for (VertexId v = 0; v < q.vertices.size(); ++v)
        out.push_back(Path::trivial(v));
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (ArrowId a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == out[i].target)
                    if (auto p = concat(Path{q.arrows[a].source, q.arrows[a].target, {a}}, out[i]))
                        out.push_back(std::move(*p));
        begin = end;
    }
    return out;
}

// Sparse vectors over the paths of one block, indexed on first sight.
struct BlockSpace {
    std::map<Path, std::size_t> index;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> products;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> generators;

    std::vector<std::pair<std::size_t, Scalar>> encode(const Element &e, std::size_t max_len) {
        std::vector<std::pair<std::size_t, Scalar>> v;
        for (const auto &[p, c] : e)
            if (p.length() <= max_len)
                v.emplace_back(index.try_emplace(p, index.size()).first->second, c);
        return v;
    }
};

std::size_t span_rank(const Field &f, std::size_t n, const std::vector<std::vector<std::pair<std::size_t, Scalar>>> &rows) {
    EchelonBasis basis(f, n);
    for (const auto &sparse : rows) {
        Vec v(n);
        for (const auto &[i, c] : sparse)
            v[i] = c;
        basis.add(std::move(v));
    }
    return basis.size();
}

} // namespace

std::vector<std::vector<std::size_t>> minimal_relation_counts(const Algebra &a) {
    const Quiver &q = a.quiver();
    const Field &f = a.field();
    std::size_t nv = a.vertex_count();
    std::size_t ll = a.loewy_length();
    std::vector<std::vector<std::size_t>> counts(nv, std::vector<std::size_t>(nv, 0));
    if (a.rules().empty())
        return counts;

    // Modulo paths longer than the Loewy length, which lie in I J already,
    // I / (I J + J I) is spanned by the rules.
    std::vector<Element> rels;
    std::size_t shortest = ll;
    for (const Rule &r : a.rules()) {
        Element e;
        e.emplace(r.lead, f.from_int(1));
        for (const auto &[p, c] : r.tail) {
            e.emplace(p, f.neg(c));
            shortest = std::min(shortest, p.length());
        }
        shortest = std::min(shortest, r.lead.length());
        rels.push_back(std::move(e));
    }
    std::size_t span = ll > shortest ? ll - shortest : 0;
    std::vector<Path> paths = all_paths(q, span);

    std::vector<std::vector<BlockSpace>> blocks(nv, std::vector<BlockSpace>(nv));
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const Path &lead = a.rules()[k].lead;
        blocks[lead.source][lead.target].generators.push_back(
            blocks[lead.source][lead.target].encode(rels[k], ll));
        std::size_t min_len = lead.length();
        for (const auto &[p, c] : rels[k])
            min_len = std::min(min_len, p.length());
        for (const Path &left : paths) {
            if (left.source != lead.target || left.length() + min_len > ll)
                continue;
            for (const Path &right : paths) {
                if (right.target != lead.source || left.length() + right.length() == 0 ||
                    left.length() + right.length() + min_len > ll)
                    continue;
                Element prod = sandwich(left, rels[k], right, f);
                BlockSpace &b = blocks[right.source][left.target];
                auto v = b.encode(prod, ll);
                if (!v.empty())
                    b.products.push_back(std::move(v));
            }
        }
    }

    for (VertexId s = 0; s < nv; ++s)
        for (VertexId t = 0; t < nv; ++t) {
            BlockSpace &b = blocks[s][t];
            if (b.generators.empty())
                continue;
            std::size_t n = b.index.size();
            std::size_t base = span_rank(f, n, b.products);
            auto all = b.products;
            all.insert(all.end(), b.generators.begin(), b.generators.end());
            counts[s][t] = span_rank(f, n, all) - base;
        }
    return counts;
}

BongartzSides bongartz(const Algebra &a, VertexId v) {
    auto counts = minimal_relation_counts(a);
    BongartzSides out;
    for (VertexId u = 0; u < a.vertex_count(); ++u) {
        if (counts[v][u] > 0)
            out.no_relation_starts = false;
        if (counts[u][v] > 0)
            out.no_relation_ends = false;
    }
    return out;
}

} // namespace qred
