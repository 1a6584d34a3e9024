#include "support.hpp"

#include <algorithm>

#include "qred/cli.hpp"
#include "qred/dsl.hpp"

namespace qred::testing {

std::string fixture_dir() { return QRED_TEST_FIXTURE_DIR; }

AlgebraHandle fixture(const std::string &name) { return load_algebra(name, fixture_dir()); }

AlgebraHandle algebra_from_text(const std::string &text) { return complete(parse_algebra(text), 16); }

namespace {

std::optional<Path> random_walk(const Quiver &q, std::size_t length, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> pick_arrow(0, q.arrows.size() - 1);
    Path p{0, 0, {}};
    ArrowId first = static_cast<ArrowId>(pick_arrow(rng));
    p = *make_path(q, {first});
    for (std::size_t k = 1; k < length; ++k) {
        std::vector<ArrowId> next;
        for (ArrowId a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == p.target)
                next.push_back(a);
        if (next.empty())
            return std::nullopt;
        ArrowId a = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        p = *concat(*make_path(q, {a}), p);
    }
    return p;
}

std::optional<Relation> random_relation(const Quiver &q, const Field &f, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> len(2, 3);
    auto lead = random_walk(q, len(rng), rng);
    if (!lead)
        return std::nullopt;
    Relation r{{f.from_int(1), lead->arrows}};
    if (std::bernoulli_distribution(0.35)(rng)) {
        std::vector<Path> partners;
        for (const Path &p : all_paths(q, 4))
            if (p.length() >= 2 && p.source == lead->source && p.target == lead->target && !(p == *lead))
                partners.push_back(p);
        if (!partners.empty()) {
            const Path &other = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
            long c = std::uniform_int_distribution<long>(1, static_cast<long>(f.characteristic()) - 1)(rng);
            r.push_back({f.neg(f.from_int(c)), other.arrows});
        }
    }
    return r;
}

} // namespace

AlgebraHandle random_algebra(std::mt19937_64 &rng, const RandomShape &shape) {
    Field f = Field::prime(shape.prime);
    for (;;) {
        Presentation p;
        p.name = "R";
        p.field = f;
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, shape.max_vertices)(rng);
        for (std::size_t v = 0; v < n; ++v)
            p.quiver.vertices.push_back(std::to_string(v + 1));
        std::size_t m = std::uniform_int_distribution<std::size_t>(1, shape.max_arrows)(rng);
        std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
        for (std::size_t i = 0; i < m; ++i) {
            VertexId s = vertex(rng), t = vertex(rng);
            if (std::bernoulli_distribution(0.7)(rng) && s > t)
                std::swap(s, t);
            p.quiver.arrows.push_back({"a" + std::to_string(i), s, t});
        }
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, shape.max_relations)(rng);
        for (std::size_t i = 0; i < k; ++i)
            if (auto r = random_relation(p.quiver, f, rng))
                p.relations.push_back(std::move(*r));
        try {
            AlgebraHandle a = complete(p, 6);
            if (a->dim() <= 24)
                return a;
        } catch (const CompletionError &) {
        } catch (const std::invalid_argument &) {
        }
    }
}

Vec random_vec(const Field &f, std::size_t n, std::mt19937_64 &rng) {
    long hi = f.is_rational() ? 3 : static_cast<long>(f.characteristic()) - 1;
    long lo = f.is_rational() ? -3 : 0;
    std::uniform_int_distribution<long> coeff(lo, hi);
    Vec v(n);
    for (auto &x : v)
        x = f.from_int(coeff(rng));
    return v;
}

Subspaces generated_submodule(const Rep &m, const std::vector<std::pair<VertexId, Vec>> &generators) {
    const Field &f = m.field();
    const Quiver &q = m.algebra->quiver();
    std::vector<EchelonBasis> spans;
    std::vector<std::vector<Vec>> kept(m.dims.size());
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        spans.emplace_back(f, m.dims[v]);
    std::vector<std::pair<VertexId, Vec>> queue = generators;
    while (!queue.empty()) {
        auto [v, x] = std::move(queue.back());
        queue.pop_back();
        if (!spans[v].add(x))
            continue;
        kept[v].push_back(x);
        for (ArrowId a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == v)
                queue.emplace_back(q.arrows[a].target, m.maps[a].apply(x));
    }
    Subspaces out;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        out.push_back(Matrix::from_columns(f, m.dims[v], kept[v]));
    return out;
}

Rep random_module(const AlgebraHandle &a, std::mt19937_64 &rng, std::size_t max_summands,
                  std::size_t max_generators) {
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(a->vertex_count() - 1));
    std::vector<Rep> parts;
    std::size_t summands = std::uniform_int_distribution<std::size_t>(1, max_summands)(rng);
    for (std::size_t i = 0; i < summands; ++i)
        parts.push_back(projective(a, vertex(rng)));
    Rep p = direct_sum(a, parts);
    std::vector<std::pair<VertexId, Vec>> gens;
    std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_generators)(rng);
    for (std::size_t i = 0; i < count; ++i) {
        VertexId v = vertex(rng);
        if (p.dims[v] > 0)
            gens.emplace_back(v, random_vec(a->field(), p.dims[v], rng));
    }
    return quotient_rep(p, generated_submodule(p, gens));
}

std::vector<Path> all_paths(const Quiver &q, std::size_t max_len) {
    std::vector<Path> out;
    if (max_len == 0)
        return out;
    std::vector<Path> layer;
    for (VertexId v = 0; v < q.vertices.size(); ++v)
        layer.push_back(Path::trivial(v));
    for (std::size_t len = 0; len < max_len && !layer.empty(); ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const Path &p : layer)
            for (ArrowId a = 0; a < q.arrows.size(); ++a)
                if (auto longer = concat(*make_path(q, {a}), p))
                    next.push_back(std::move(*longer));
        layer = std::move(next);
    }
    return out;
}

std::size_t truncated_quotient_dim(const Presentation &p, std::size_t max_len) {
    const Field &f = p.field;
    std::vector<Path> paths = all_paths(p.quiver, max_len);
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index.emplace(paths[i], i);
    EchelonBasis span(f, paths.size());
    for (const Element &r : relation_elements(p)) {
        const Path &shortest = r.begin()->first;
        for (const Path &u : paths) {
            if (u.source != shortest.target)
                continue;
            for (const Path &v : paths) {
                if (v.target != shortest.source || u.length() + v.length() + shortest.length() >= max_len)
                    continue;
                Vec row(paths.size(), f.from_int(0));
                for (const auto &[path, c] : sandwich(u, r, v, f))
                    if (auto it = index.find(path); it != index.end())
                        row[it->second] = c;
                span.add(std::move(row));
            }
        }
    }
    return paths.size() - span.size();
}

std::size_t second_syzygy_tops(const AlgebraHandle &a, VertexId s, VertexId t) {
    Resolution res = minimal_resolution(simple(a, s), 3);
    if (res.steps.size() < 3)
        return 0;
    const auto &tops = res.steps[2].cover.tops;
    return static_cast<std::size_t>(std::count(tops.begin(), tops.end(), t));
}

} // namespace qred::testing
