#include <numeric>
#include <stdexcept>

#include "qred/rep.hpp"

namespace qred {

std::size_t Rep::dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::vector<Matrix> Rep::path_matrices() const {
    const Algebra &a = *algebra;
    std::vector<Matrix> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Path &p = a.basis()[i];
        if (p.is_trivial()) {
            out[i] = Matrix::identity(field(), dims[p.source]);
            continue;
        }
        if (p.length() == 1) {
            out[i] = maps[p.arrows[0]];
            continue;
        }
        Path rest{p.source, a.quiver().arrows[p.arrows[1]].target, Word(p.arrows.begin() + 1, p.arrows.end())};
        out[i] = maps[p.arrows[0]] * out[*a.index_of(rest)];
    }
    return out;
}

Matrix Rep::path_matrix(const Path &p) const {
    if (p.is_trivial())
        return Matrix::identity(field(), dims[p.source]);
    Matrix m = maps[p.arrows.back()];
    for (std::size_t i = p.arrows.size() - 1; i-- > 0;)
        m = maps[p.arrows[i]] * m;
    return m;
}

Rep zero_rep(const AlgebraHandle &a) {
    Rep r{a, std::vector<std::size_t>(a->vertex_count(), 0), {}};
    for (const auto &arrow : a->quiver().arrows) {
        (void)arrow;
        r.maps.emplace_back(a->field(), 0, 0);
    }
    return r;
}

Rep simple(const AlgebraHandle &a, VertexId v) {
    Rep r{a, std::vector<std::size_t>(a->vertex_count(), 0), {}};
    r.dims.at(v) = 1;
    for (const auto &arrow : a->quiver().arrows)
        r.maps.emplace_back(a->field(), r.dims[arrow.target], r.dims[arrow.source]);
    return r;
}

Rep projective(const AlgebraHandle &a, VertexId v) {
    Rep r{a, {}, {}};
    for (VertexId u = 0; u < a->vertex_count(); ++u)
        r.dims.push_back(a->block(v, u).size());
    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        const Arrow &arrow = a->quiver().arrows[x];
        Vec e(a->dim());
        e[a->arrow_index(x)] = 1;
        r.maps.push_back(a->multiplication_matrix(e, true, a->block(v, arrow.source), a->block(v, arrow.target)));
    }
    return r;
}

Rep injective(const AlgebraHandle &a, VertexId v) {
    Rep r{a, {}, {}};
    for (VertexId u = 0; u < a->vertex_count(); ++u)
        r.dims.push_back(a->block(u, v).size());
    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        const Arrow &arrow = a->quiver().arrows[x];
        Vec e(a->dim());
        e[a->arrow_index(x)] = 1;
        r.maps.push_back(
            a->multiplication_matrix(e, false, a->block(arrow.target, v), a->block(arrow.source, v)).transpose());
    }
    return r;
}

Rep standard_module(const AlgebraHandle &a, ModuleKind kind, VertexId v) {
    if (v >= a->vertex_count())
        throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    switch (kind) {
    case ModuleKind::Simple:
        return simple(a, v);
    case ModuleKind::Projective:
        return projective(a, v);
    case ModuleKind::Injective:
        return injective(a, v);
    }
    throw std::invalid_argument("unknown module kind");
}

Rep regular(const AlgebraHandle &a) {
    Rep r{a, {}, {}};
    for (VertexId u = 0; u < a->vertex_count(); ++u)
        r.dims.push_back(a->paths_to(u).size());
    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        const Arrow &arrow = a->quiver().arrows[x];
        Vec e(a->dim());
        e[a->arrow_index(x)] = 1;
        r.maps.push_back(a->multiplication_matrix(e, true, a->paths_to(arrow.source), a->paths_to(arrow.target)));
    }
    return r;
}

Rep right_regular(const AlgebraHandle &a) {
    AlgebraHandle op = a->opposite();
    Rep r{op, {}, {}};
    for (VertexId u = 0; u < a->vertex_count(); ++u)
        r.dims.push_back(a->paths_from(u).size());
    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        const Arrow &arrow = a->quiver().arrows[x];
        Vec e(a->dim());
        e[a->arrow_index(x)] = 1;
        // In the opposite quiver the arrow runs target -> source.
        r.maps.push_back(
            a->multiplication_matrix(e, false, a->paths_from(arrow.target), a->paths_from(arrow.source)));
    }
    return r;
}

std::optional<std::size_t> violated_rule(const Rep &m) {
    const Algebra &a = *m.algebra;
    std::vector<Matrix> paths = m.path_matrices();
    for (std::size_t i = 0; i < a.rules().size(); ++i) {
        const Rule &rule = a.rules()[i];
        Path rest{rule.lead.source, a.quiver().arrows[rule.lead.arrows[1]].target,
                  Word(rule.lead.arrows.begin() + 1, rule.lead.arrows.end())};
        Matrix value = m.maps[rule.lead.arrows[0]] * paths[*a.index_of(rest)];
        for (const auto &[p, c] : rule.tail)
            value = value - paths[*a.index_of(p)].scaled(c);
        if (!value.is_zero())
            return i;
    }
    return std::nullopt;
}

void check_rep(const Rep &m) {
    const Algebra &a = *m.algebra;
    if (m.dims.size() != a.vertex_count() || m.maps.size() != a.arrow_count())
        throw std::invalid_argument("representation does not match the quiver");
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        const Arrow &arrow = a.quiver().arrows[x];
        if (m.maps[x].rows() != m.dims[arrow.target] || m.maps[x].cols() != m.dims[arrow.source])
            throw std::invalid_argument("shape mismatch on arrow " + arrow.name);
    }
    if (auto bad = violated_rule(m)) {
        const Rule &r = a.rules()[*bad];
        Element rel = r.tail;
        for (auto &[p, c] : rel)
            c = a.field().neg(c);
        rel.emplace(r.lead, a.field().from_int(1));
        throw std::invalid_argument("relation violation: " + format_element(a.quiver(), a.field(), rel) + " != 0");
    }
}

Rep direct_sum(const AlgebraHandle &a, const std::vector<Rep> &parts) {
    Rep r{a, std::vector<std::size_t>(a->vertex_count(), 0), {}};
    for (const Rep &p : parts)
        for (std::size_t v = 0; v < r.dims.size(); ++v)
            r.dims[v] += p.dims[v];
    for (ArrowId x = 0; x < a->arrow_count(); ++x) {
        std::vector<Matrix> blocks;
        for (const Rep &p : parts)
            blocks.push_back(p.maps[x]);
        r.maps.push_back(block_diagonal(a->field(), blocks));
    }
    return r;
}

Rep direct_sum(const Rep &m, const Rep &n) { return direct_sum(m.algebra, {m, n}); }

Rep dual(const Rep &m) {
    Rep r{m.algebra->opposite(), m.dims, {}};
    for (const Matrix &x : m.maps)
        r.maps.push_back(x.transpose());
    return r;
}

Rep rebase(const Rep &m, const AlgebraHandle &a) {
    if (!same_algebra(*m.algebra, *a))
        throw std::invalid_argument("rebase: algebras differ");
    Rep r = m;
    r.algebra = a;
    return r;
}

Rep subrep(const Rep &m, const Subspaces &basis) {
    const Algebra &a = *m.algebra;
    Rep r{m.algebra, {}, {}};
    for (const Matrix &b : basis)
        r.dims.push_back(b.cols());
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        const Arrow &arrow = a.quiver().arrows[x];
        const Matrix &src = basis[arrow.source];
        const Matrix &dst = basis[arrow.target];
        if (src.cols() == 0 || dst.cols() == 0) {
            r.maps.emplace_back(m.field(), dst.cols(), src.cols());
            continue;
        }
        auto coords = solve(dst, m.maps[x] * src);
        if (!coords)
            throw std::logic_error("subrep: subspace is not closed under arrow " + arrow.name);
        r.maps.push_back(std::move(*coords));
    }
    return r;
}

Rep quotient_rep(const Rep &m, const Subspaces &sub, std::vector<Matrix> *projections) {
    const Algebra &a = *m.algebra;
    std::vector<QuotientMap> q;
    std::vector<Matrix> proj;
    Rep r{m.algebra, {}, {}};
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        q.push_back(sub[v].cols() == 0 ? QuotientMap(m.field(), m.dims[v]) : QuotientMap(sub[v]));
        proj.push_back(q.back().projection_matrix());
        r.dims.push_back(q.back().quotient_dim());
    }
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        const Arrow &arrow = a.quiver().arrows[x];
        Matrix lift(m.field(), m.dims[arrow.source], r.dims[arrow.source]);
        const auto &free = q[arrow.source].free_coords();
        for (std::size_t j = 0; j < free.size(); ++j)
            lift(free[j], j) = 1;
        r.maps.push_back(proj[arrow.target] * (m.maps[x] * lift));
    }
    if (projections)
        *projections = std::move(proj);
    return r;
}

std::string BoundedDim::to_string() const {
    return (exact() ? "Exact(" : "AtLeast(") + std::to_string(value) + ")";
}

std::string to_string(Answer a) {
    switch (a) {
    case Answer::Yes:
        return "yes";
    case Answer::No:
        return "no";
    case Answer::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

} // namespace qred
