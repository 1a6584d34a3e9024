#include <stdexcept>

#include "qred/bimodule.hpp"

namespace qred {

namespace {

const ProductInfo &product_of(const Rep &r) {
    const auto &info = r.algebra->product();
    if (!info)
        throw std::invalid_argument("bimodule: representation is not over a product algebra");
    return *info;
}

Vec unit(std::size_t n, std::size_t i) {
    Vec e(n);
    e[i] = 1;
    return e;
}

std::vector<Vec> arrow_units(const Algebra &a) {
    std::vector<Vec> out;
    for (ArrowId x = 0; x < a.arrow_count(); ++x)
        out.push_back(unit(a.dim(), a.arrow_index(x)));
    return out;
}

} // namespace

Bimodule make_bimodule(const AlgebraHandle &left, const AlgebraHandle &right, Rep rep) {
    const ProductInfo &info = product_of(rep);
    if (!same_algebra(*info.left, *left) || !same_algebra(*info.right, *right))
        throw std::invalid_argument("bimodule: product algebra does not match the given sides");
    return {left, right, std::move(rep)};
}

Bimodule bimodule_from_ambient(const AlgebraHandle &left, const AlgebraHandle &right, const Algebra &c,
                               const std::vector<std::vector<std::vector<std::size_t>>> &spaces,
                               const std::vector<Vec> &left_real, const std::vector<Vec> &right_real) {
    AlgebraHandle prod = tensor_with_opposite(left, right);
    const ProductInfo &info = *prod->product();
    Rep r{prod, std::vector<std::size_t>(prod->vertex_count(), 0), {}};
    for (VertexId v = 0; v < left->vertex_count(); ++v)
        for (VertexId w = 0; w < right->vertex_count(); ++w)
            r.dims[info.vertex(v, w)] = spaces[v][w].size();
    r.maps.resize(prod->arrow_count());
    for (ArrowId a = 0; a < left->arrow_count(); ++a) {
        const Arrow &arrow = left->quiver().arrows[a];
        for (VertexId w = 0; w < right->vertex_count(); ++w)
            r.maps[info.left_arrow(a, w)] =
                c.multiplication_matrix(left_real[a], true, spaces[arrow.source][w], spaces[arrow.target][w]);
    }
    for (ArrowId b = 0; b < right->arrow_count(); ++b) {
        const Arrow &arrow = right->quiver().arrows[b];
        for (VertexId v = 0; v < left->vertex_count(); ++v)
            r.maps[info.right_arrow(v, b)] =
                c.multiplication_matrix(right_real[b], false, spaces[v][arrow.target], spaces[v][arrow.source]);
    }
    return {left, right, std::move(r)};
}

Bimodule regular_bimodule(const AlgebraHandle &a) {
    std::vector<std::vector<std::vector<std::size_t>>> spaces(a->vertex_count());
    for (VertexId v = 0; v < a->vertex_count(); ++v)
        for (VertexId w = 0; w < a->vertex_count(); ++w)
            spaces[v].push_back(a->block(w, v));
    std::vector<Vec> arrows = arrow_units(*a);
    return bimodule_from_ambient(a, a, *a, spaces, arrows, arrows);
}

Bimodule corner_left_bimodule(const Subquotient &corner) {
    const AlgebraHandle &a = corner.ambient;
    std::vector<std::vector<std::vector<std::size_t>>> spaces(a->vertex_count());
    for (VertexId v = 0; v < a->vertex_count(); ++v)
        for (VertexId k : corner.kept)
            spaces[v].push_back(a->block(k, v));
    return bimodule_from_ambient(a, corner.algebra, *a, spaces, arrow_units(*a), corner.arrow_realizations);
}

Bimodule corner_right_bimodule(const Subquotient &corner) {
    const AlgebraHandle &a = corner.ambient;
    std::vector<std::vector<std::vector<std::size_t>>> spaces;
    for (VertexId k : corner.kept) {
        spaces.emplace_back();
        for (VertexId v = 0; v < a->vertex_count(); ++v)
            spaces.back().push_back(a->block(v, k));
    }
    return bimodule_from_ambient(corner.algebra, a, *a, spaces, corner.arrow_realizations, arrow_units(*a));
}

Rep restrict_left(const Bimodule &m) {
    const ProductInfo &info = product_of(m.rep);
    const Algebra &a = *m.left;
    std::size_t nw = m.right->vertex_count();
    Rep r{m.left, std::vector<std::size_t>(a.vertex_count(), 0), {}};
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        for (VertexId w = 0; w < nw; ++w)
            r.dims[v] += m.rep.dims[info.vertex(v, w)];
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        std::vector<Matrix> blocks;
        for (VertexId w = 0; w < nw; ++w)
            blocks.push_back(m.rep.maps[info.left_arrow(x, w)]);
        r.maps.push_back(block_diagonal(a.field(), blocks));
    }
    return r;
}

Rep restrict_right(const Bimodule &m) {
    const ProductInfo &info = product_of(m.rep);
    const Algebra &b = *m.right;
    std::size_t nv = m.left->vertex_count();
    Rep r{b.opposite(), std::vector<std::size_t>(b.vertex_count(), 0), {}};
    for (VertexId w = 0; w < b.vertex_count(); ++w)
        for (VertexId v = 0; v < nv; ++v)
            r.dims[w] += m.rep.dims[info.vertex(v, w)];
    for (ArrowId x = 0; x < b.arrow_count(); ++x) {
        std::vector<Matrix> blocks;
        for (VertexId v = 0; v < nv; ++v)
            blocks.push_back(m.rep.maps[info.right_arrow(v, x)]);
        r.maps.push_back(block_diagonal(b.field(), blocks));
    }
    return r;
}

Bimodule tensor_bimodules(const Bimodule &m, const Bimodule &n) {
    if (!same_algebra(*m.right, *n.left))
        throw std::invalid_argument("tensor_bimodules: middle algebras differ");
    const Algebra &a = *m.left;
    const Algebra &b = *m.right;
    const Algebra &c = *n.right;
    const Field &f = a.field();
    const ProductInfo &mi = product_of(m.rep);
    const ProductInfo &ni = product_of(n.rep);
    AlgebraHandle prod = tensor_with_opposite(m.left, n.right);
    const ProductInfo &pi = *prod->product();

    auto mdim = [&](VertexId u, VertexId w) { return m.rep.dims[mi.vertex(u, w)]; };
    auto ndim = [&](VertexId w, VertexId x) { return n.rep.dims[ni.vertex(w, x)]; };

    // The free tensor space at (u, x) is the direct sum over w of
    // M(u, w) (x) N(w, x), in increasing w.
    std::vector<std::vector<std::size_t>> offsets(prod->vertex_count());
    Rep free{prod, std::vector<std::size_t>(prod->vertex_count(), 0), {}};
    for (VertexId u = 0; u < a.vertex_count(); ++u)
        for (VertexId x = 0; x < c.vertex_count(); ++x) {
            auto &off = offsets[pi.vertex(u, x)];
            std::size_t total = 0;
            for (VertexId w = 0; w < b.vertex_count(); ++w) {
                off.push_back(total);
                total += mdim(u, w) * ndim(w, x);
            }
            free.dims[pi.vertex(u, x)] = total;
        }

    free.maps.resize(prod->arrow_count());
    for (ArrowId y = 0; y < a.arrow_count(); ++y) {
        for (VertexId x = 0; x < c.vertex_count(); ++x) {
            std::vector<Matrix> blocks;
            for (VertexId w = 0; w < b.vertex_count(); ++w)
                blocks.push_back(kron(m.rep.maps[mi.left_arrow(y, w)], Matrix::identity(f, ndim(w, x))));
            free.maps[pi.left_arrow(y, x)] = block_diagonal(f, blocks);
        }
    }
    for (ArrowId z = 0; z < c.arrow_count(); ++z)
        for (VertexId u = 0; u < a.vertex_count(); ++u) {
            std::vector<Matrix> blocks;
            for (VertexId w = 0; w < b.vertex_count(); ++w)
                blocks.push_back(kron(Matrix::identity(f, mdim(u, w)), n.rep.maps[ni.right_arrow(w, z)]));
            free.maps[pi.right_arrow(u, z)] = block_diagonal(f, blocks);
        }

    // Relators (m.b) (x) n - m (x) (b.n) for every arrow b: w -> w' of B.
    Subspaces relators(prod->vertex_count());
    for (VertexId u = 0; u < a.vertex_count(); ++u)
        for (VertexId x = 0; x < c.vertex_count(); ++x) {
            std::size_t pv = pi.vertex(u, x);
            const auto &off = offsets[pv];
            std::vector<Vec> cols;
            for (ArrowId bb = 0; bb < b.arrow_count(); ++bb) {
                const Arrow &arrow = b.quiver().arrows[bb];
                VertexId w = arrow.source, w2 = arrow.target;
                const Matrix &mb = m.rep.maps[mi.right_arrow(u, bb)]; // M(u, w') -> M(u, w)
                const Matrix &nb = n.rep.maps[ni.left_arrow(bb, x)];  // N(w, x) -> N(w', x)
                for (std::size_t i = 0; i < mdim(u, w2); ++i)
                    for (std::size_t j = 0; j < ndim(w, x); ++j) {
                        Vec r(free.dims[pv]);
                        for (std::size_t k = 0; k < mdim(u, w); ++k)
                            if (!Field::is_zero(mb(k, i)))
                                f.axpy(r[off[w] + k * ndim(w, x) + j], mb(k, i), 1);
                        for (std::size_t k = 0; k < ndim(w2, x); ++k)
                            if (!Field::is_zero(nb(k, j)))
                                f.axpy(r[off[w2] + i * ndim(w2, x) + k], f.neg(nb(k, j)), 1);
                        cols.push_back(std::move(r));
                    }
            }
            relators[pv] = Matrix::from_columns(f, free.dims[pv], cols);
        }
    return {m.left, n.right, quotient_rep(free, relators)};
}

} // namespace qred
