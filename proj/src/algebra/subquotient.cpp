#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qred/algebra.hpp"

namespace qred {

namespace {

Vec unit(const Field &f, std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = f.from_int(1);
    return v;
}

bool is_zero_vec(const Vec &v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar &c) { return Field::is_zero(c); });
}

} // namespace

Matrix ideal_span(const Algebra &a, const std::vector<Element> &generators) {
    const Field &f = a.field();
    std::deque<Vec> queue;
    for (const Element &g : generators) {
        std::map<std::pair<VertexId, VertexId>, Element> blocks;
        for (const auto &[p, c] : g)
            blocks[{p.source, p.target}].emplace(p, c);
        for (const auto &[key, part] : blocks) {
            Vec v = a.to_coords(part);
            if (!is_zero_vec(v))
                queue.push_back(std::move(v));
        }
    }

    std::vector<Vec> arrows;
    for (ArrowId x = 0; x < a.arrow_count(); ++x)
        arrows.push_back(unit(f, a.dim(), a.arrow_index(x)));

    EchelonBasis span(f, a.dim());
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        if (!span.add(v))
            continue;
        for (const Vec &x : arrows) {
            Vec l = a.multiply(x, v);
            if (!is_zero_vec(l))
                queue.push_back(std::move(l));
            Vec r = a.multiply(v, x);
            if (!is_zero_vec(r))
                queue.push_back(std::move(r));
        }
    }
    if (span.size() == 0)
        return Matrix(f, 0, a.dim());
    RrefResult r = rref(span.rows_matrix());
    return r.reduced.block(0, 0, r.rank, a.dim());
}

Subquotient present_subquotient(const AlgebraHandle &a, const std::vector<VertexId> &kept,
                                const Matrix &ideal_rows, const std::string &name) {
    const Field &f = a->field();
    const std::size_t n = a->dim();
    if (kept.empty())
        throw std::invalid_argument("present_subquotient: empty vertex set");

    QuotientMap mod_j = ideal_rows.rows() == 0 ? QuotientMap(f, n) : QuotientMap(ideal_rows.transpose());
    std::vector<std::ptrdiff_t> new_vertex(a->vertex_count(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        VertexId v = kept[i];
        if (v >= a->vertex_count() || new_vertex[v] >= 0)
            throw std::invalid_argument("present_subquotient: invalid or repeated vertex");
        new_vertex[v] = static_cast<std::ptrdiff_t>(i);
    }

    std::vector<bool> is_free(n, false);
    for (std::size_t c : mod_j.free_coords())
        is_free[c] = true;
    for (VertexId v : kept)
        if (!is_free[*a->index_of(Path::trivial(v))])
            throw std::invalid_argument("present_subquotient: the idempotent of vertex " +
                                        a->quiver().vertices[v] + " lies in the ideal");

    // Basis of e(A/J)e: free coordinates inside kept x kept blocks.
    std::vector<std::size_t> radical;
    std::size_t target_dim = 0;
    for (std::size_t i : corner_basis(*a, kept)) {
        if (!is_free[i])
            continue;
        ++target_dim;
        if (!a->basis()[i].is_trivial())
            radical.push_back(i);
    }

    auto reduce = [&](Vec v) {
        mod_j.reduce(v);
        return v;
    };

    EchelonBasis square(f, n);
    for (std::size_t i : radical)
        for (std::size_t j : radical)
            square.add(reduce(a->multiply(unit(f, n, i), unit(f, n, j))));

    Subquotient out;
    out.ambient = a;
    out.kept = kept;
    out.ideal = ideal_rows;

    Presentation p;
    p.name = name;
    p.field = f;
    for (VertexId v : kept)
        p.quiver.vertices.push_back(a->quiver().vertices[v]);

    EchelonBasis generated = square;
    for (std::size_t i : radical) {
        Vec v = unit(f, n, i);
        if (!generated.add(v))
            continue;
        const Path &path = a->basis()[i];
        std::string arrow_name;
        if (path.length() == 1) {
            arrow_name = a->quiver().arrows[path.arrows[0]].name;
        } else {
            arrow_name = "t";
            for (ArrowId x : path.arrows)
                arrow_name += "_" + a->quiver().arrows[x].name;
        }
        p.quiver.arrows.push_back({arrow_name, static_cast<VertexId>(new_vertex[path.source]),
                                   static_cast<VertexId>(new_vertex[path.target])});
        out.arrow_realizations.push_back(std::move(v));
        out.arrow_paths.push_back(path);
    }

    // Deg-lex scan of the new quiver's paths: a path whose value is spanned by
    // the values of smaller normal paths in its block becomes a leading word.
    struct Normal {
        Path path;
        Vec value;
    };
    const Quiver &q = p.quiver;
    std::size_t nv = kept.size();
    std::vector<std::vector<std::vector<Vec>>> block_values(nv, std::vector<std::vector<Vec>>(nv));
    std::vector<std::vector<std::vector<Path>>> block_paths(nv, std::vector<std::vector<Path>>(nv));
    std::vector<Word> leads;
    auto has_lead_suffix = [&](const Word &w) {
        for (const Word &l : leads)
            if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - static_cast<std::ptrdiff_t>(l.size())))
                return true;
        return false;
    };

    std::vector<Normal> level;
    for (VertexId v = 0; v < nv; ++v) {
        Vec e = unit(f, n, *a->index_of(Path::trivial(kept[v])));
        block_values[v][v].push_back(e);
        block_paths[v][v].push_back(Path::trivial(v));
        level.push_back({Path::trivial(v), e});
    }
    std::vector<std::vector<ArrowId>> by_target(nv);
    for (ArrowId x = 0; x < q.arrows.size(); ++x)
        by_target[q.arrows[x].target].push_back(x);

    for (std::size_t len = 1; !level.empty(); ++len) {
        if (len > a->loewy_length() + 1)
            throw std::logic_error("present_subquotient: path scan did not terminate");
        std::vector<Normal> next;
        std::vector<std::pair<Path, const Normal *>> candidates;
        for (const Normal &w : level) {
            for (ArrowId x : by_target[w.path.source]) {
                Path path;
                path.target = w.path.is_trivial() ? q.arrows[x].target : w.path.target;
                path.source = q.arrows[x].source;
                path.arrows = w.path.arrows;
                path.arrows.push_back(x);
                candidates.emplace_back(std::move(path), &w);
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto &l, const auto &r) { return l.first < r.first; });
        for (auto &[path, parent] : candidates) {
            const Normal &w = *parent;
            ArrowId x = path.arrows.back();
            if (has_lead_suffix(path.arrows))
                continue;
            Vec value = reduce(a->multiply(w.value, out.arrow_realizations[x]));
            auto &values = block_values[path.source][path.target];
            auto &paths = block_paths[path.source][path.target];
            std::optional<Matrix> coeffs;
            if (is_zero_vec(value))
                coeffs = Matrix(f, values.size(), 1);
            else if (!values.empty())
                coeffs = solve(Matrix::from_columns(f, n, values), Matrix::from_columns(f, n, std::span(&value, 1)));
            if (!coeffs) {
                values.push_back(value);
                paths.push_back(path);
                next.push_back({std::move(path), std::move(value)});
                continue;
            }
            Relation rel{{f.from_int(1), path.arrows}};
            for (std::size_t k = paths.size(); k-- > 0;)
                if (!Field::is_zero((*coeffs)(k, 0)))
                    rel.push_back({f.neg((*coeffs)(k, 0)), paths[k].arrows});
            leads.push_back(path.arrows);
            p.relations.push_back(std::move(rel));
        }
        level = std::move(next);
    }

    std::size_t ll = 1;
    for (const auto &row : block_paths)
        for (const auto &paths : row)
            for (const Path &path : paths)
                ll = std::max(ll, path.length() + 1);
    out.algebra = complete(p, 2 * ll + 1);
    if (out.algebra->dim() != target_dim)
        throw std::logic_error("present_subquotient: presented algebra has dimension " +
                               std::to_string(out.algebra->dim()) + ", expected " + std::to_string(target_dim));
    return out;
}

} // namespace qred
