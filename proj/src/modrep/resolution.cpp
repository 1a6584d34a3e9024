#include <stdexcept>

#include "qred/rep.hpp"

namespace qred {

ProjectiveCover projective_cover(const Rep &m) {
    const AlgebraHandle &a = m.algebra;
    const Field &f = m.field();
    ProjectiveCover out;
    Subspaces rad = radical(m);
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
        EchelonBasis span(f, m.dims[v]);
        for (std::size_t c = 0; c < rad[v].cols(); ++c)
            span.add(rad[v].column(c));
        for (std::size_t i = 0; i < m.dims[v] && span.size() < m.dims[v]; ++i) {
            Vec e(m.dims[v]);
            e[i] = 1;
            if (span.add(e)) {
                out.tops.push_back(v);
                out.generators.push_back(std::move(e));
            }
        }
    }

    std::vector<Rep> parts;
    for (VertexId v : out.tops)
        parts.push_back(projective(a, v));
    out.projective = direct_sum(a, parts);

    std::vector<Matrix> paths = m.path_matrices();
    for (VertexId u = 0; u < a->vertex_count(); ++u) {
        std::vector<Vec> cols;
        for (std::size_t g = 0; g < out.tops.size(); ++g)
            for (std::size_t p : a->block(out.tops[g], u))
                cols.push_back(paths[p].apply(out.generators[g]));
        out.map.blocks.push_back(Matrix::from_columns(f, m.dims[u], cols));
    }
    return out;
}

RepMap Resolution::differential(std::size_t i) const {
    if (i == 0 || i >= steps.size())
        throw std::out_of_range("Resolution::differential: index out of range");
    RepMap d;
    const Subspaces &incl = steps[i - 1].kernel;
    for (std::size_t v = 0; v < incl.size(); ++v)
        d.blocks.push_back(incl[v] * steps[i].cover.map.blocks[v]);
    return d;
}

Resolution minimal_resolution(const Rep &m, std::size_t steps, std::size_t dim_cap) {
    Resolution res;
    res.module = m;
    const Rep *cur = &res.module;
    for (std::size_t i = 0; i < steps; ++i) {
        if (cur->is_zero()) {
            res.terminated = true;
            return res;
        }
        if (cur->dim() > dim_cap)
            return res;
        ResolutionStep step;
        step.cover = projective_cover(*cur);
        step.kernel = kernel_spaces(step.cover.map, step.cover.projective);
        step.syzygy = subrep(step.cover.projective, step.kernel);
        res.steps.push_back(std::move(step));
        cur = &res.steps.back().syzygy;
    }
    res.terminated = cur->is_zero();
    return res;
}

BoundedDim pd_bounded(const Rep &m, std::size_t bound) {
    if (m.is_zero())
        return BoundedDim::exact_value(0, bound);
    Rep cur = m;
    for (std::size_t i = 0; i <= bound; ++i) {
        if (i > 0 && cur.dim() > syzygy_dim_cap)
            return BoundedDim::at_least(i - 1);
        ProjectiveCover cover = projective_cover(cur);
        Subspaces kernel = kernel_spaces(cover.map, cover.projective);
        std::size_t kdim = 0;
        for (const Matrix &k : kernel)
            kdim += k.cols();
        if (kdim == 0)
            return BoundedDim::exact_value(i, bound);
        cur = subrep(cover.projective, kernel);
    }
    return BoundedDim::at_least(bound);
}

BoundedDim pd_bounded(const Rep &m, std::size_t bound, Side side) {
    return side == Side::Projective ? pd_bounded(m, bound) : pd_bounded(dual(m), bound);
}

namespace {

struct Envelope {
    Rep injective;
    std::vector<Matrix> embedding; // per vertex, module -> injective
};

Envelope injective_envelope(const Rep &m) {
    const AlgebraHandle &a = m.algebra;
    const Field &f = m.field();
    Subspaces soc = socle(m);
    std::vector<Matrix> paths = m.path_matrices();

    struct Functional {
        VertexId vertex;
        Vec row;
    };
    std::vector<Functional> functionals;
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
        std::size_t s = soc[v].cols();
        if (s == 0)
            continue;
        // Extend the socle basis to a basis of M_v; the first s rows of the
        // inverse are functionals dual to the socle basis.
        Matrix basis = soc[v];
        EchelonBasis span(f, m.dims[v]);
        for (std::size_t c = 0; c < s; ++c)
            span.add(soc[v].column(c));
        for (std::size_t i = 0; i < m.dims[v] && basis.cols() < m.dims[v]; ++i) {
            Vec e(m.dims[v]);
            e[i] = 1;
            if (span.add(e))
                basis = basis.hstack(Matrix::from_columns(f, m.dims[v], std::span(&e, 1)));
        }
        Matrix inv = inverse(basis);
        for (std::size_t j = 0; j < s; ++j)
            functionals.push_back({v, inv.row(j)});
    }

    Envelope out;
    std::vector<Rep> parts;
    for (const auto &fn : functionals)
        parts.push_back(injective(a, fn.vertex));
    out.injective = direct_sum(a, parts);
    for (VertexId u = 0; u < a->vertex_count(); ++u) {
        std::vector<Vec> rows;
        for (const auto &fn : functionals)
            for (std::size_t p : a->block(u, fn.vertex)) {
                const Matrix &mp = paths[p];
                Vec r(m.dims[u]);
                for (std::size_t c = 0; c < m.dims[u]; ++c)
                    for (std::size_t k = 0; k < mp.rows(); ++k)
                        if (!Field::is_zero(fn.row[k]))
                            f.axpy(r[c], fn.row[k], mp(k, c));
                rows.push_back(std::move(r));
            }
        out.embedding.push_back(Matrix::from_rows(f, m.dims[u], rows));
    }
    return out;
}

} // namespace

BoundedDim id_by_coresolution(const Rep &m, std::size_t bound) {
    if (m.is_zero())
        return BoundedDim::exact_value(0, bound);
    Rep cur = m;
    for (std::size_t i = 0; i <= bound; ++i) {
        Envelope env = injective_envelope(cur);
        Rep cokernel = quotient_rep(env.injective, env.embedding);
        if (cokernel.is_zero())
            return BoundedDim::exact_value(i, bound);
        cur = std::move(cokernel);
    }
    return BoundedDim::at_least(bound);
}

} // namespace qred
