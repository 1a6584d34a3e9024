#include <stdexcept>

#include "qred/rep.hpp"

namespace qred {

namespace {

void require_same(const Rep &m, const Rep &n) {
    if (!same_algebra(*m.algebra, *n.algebra))
        throw std::invalid_argument("modules over different algebras");
}

} // namespace

bool is_hom(const RepMap &f, const Rep &m, const Rep &n) {
    const Algebra &a = *m.algebra;
    if (f.blocks.size() != a.vertex_count())
        return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (f.blocks[v].rows() != n.dims[v] || f.blocks[v].cols() != m.dims[v])
            return false;
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        const Arrow &arrow = a.quiver().arrows[x];
        if (!(n.maps[x] * f.blocks[arrow.source] == f.blocks[arrow.target] * m.maps[x]))
            return false;
    }
    return true;
}

RepMap compose(const RepMap &g, const RepMap &f) {
    RepMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        h.blocks.push_back(g.blocks[v] * f.blocks[v]);
    return h;
}

RepMap identity_map(const Rep &m) {
    RepMap f;
    for (std::size_t d : m.dims)
        f.blocks.push_back(Matrix::identity(m.field(), d));
    return f;
}

std::vector<RepMap> hom_basis(const Rep &m, const Rep &n) {
    require_same(m, n);
    const Algebra &a = *m.algebra;
    const Field &f = m.field();
    std::size_t nv = a.vertex_count();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    std::size_t unknowns = offset[nv];

    std::size_t equations = 0;
    for (const auto &arrow : a.quiver().arrows)
        equations += n.dims[arrow.target] * m.dims[arrow.source];

    Matrix sys(f, equations, unknowns);
    std::size_t row = 0;
    for (ArrowId x = 0; x < a.arrow_count(); ++x) {
        const Arrow &arrow = a.quiver().arrows[x];
        std::size_t s = arrow.source, t = arrow.target;
        const Matrix &ma = m.maps[x];
        const Matrix &na = n.maps[x];
        for (std::size_t i = 0; i < n.dims[t]; ++i)
            for (std::size_t j = 0; j < m.dims[s]; ++j, ++row) {
                // (N_a f_s)(i, j) - (f_t M_a)(i, j)
                for (std::size_t k = 0; k < n.dims[s]; ++k)
                    if (!Field::is_zero(na(i, k)))
                        f.axpy(sys(row, offset[s] + k * m.dims[s] + j), na(i, k), 1);
                for (std::size_t k = 0; k < m.dims[t]; ++k)
                    if (!Field::is_zero(ma(k, j)))
                        f.axpy(sys(row, offset[t] + i * m.dims[t] + k), f.neg(ma(k, j)), 1);
            }
    }

    Matrix kernel = equations == 0 ? Matrix::identity(f, unknowns) : kernel_basis(sys);
    std::vector<RepMap> out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        RepMap h;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix b(f, n.dims[v], m.dims[v]);
            for (std::size_t i = 0; i < n.dims[v]; ++i)
                for (std::size_t j = 0; j < m.dims[v]; ++j)
                    b(i, j) = kernel(offset[v] + i * m.dims[v] + j, c);
            h.blocks.push_back(std::move(b));
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::size_t hom_dim(const Rep &m, const Rep &n) { return hom_basis(m, n).size(); }

Subspaces kernel_spaces(const RepMap &f, const Rep &m) {
    Subspaces out;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        out.push_back(kernel_basis(f.blocks[v]));
    return out;
}

Subspaces radical(const Rep &m) {
    const Algebra &a = *m.algebra;
    Subspaces out;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        Matrix images(m.field(), m.dims[v], 0);
        for (ArrowId x = 0; x < a.arrow_count(); ++x)
            if (a.quiver().arrows[x].target == v)
                images = images.hstack(m.maps[x]);
        out.push_back(column_basis(images));
    }
    return out;
}

Subspaces socle(const Rep &m) {
    const Algebra &a = *m.algebra;
    Subspaces out;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        Matrix stacked(m.field(), 0, m.dims[v]);
        for (ArrowId x = 0; x < a.arrow_count(); ++x)
            if (a.quiver().arrows[x].source == v)
                stacked = stacked.vstack(m.maps[x]);
        out.push_back(kernel_basis(stacked));
    }
    return out;
}

std::vector<std::vector<std::size_t>> radical_layers(const Rep &m) {
    const Algebra &a = *m.algebra;
    std::size_t nv = a.vertex_count();
    Subspaces cur;
    for (std::size_t d : m.dims)
        cur.push_back(Matrix::identity(m.field(), d));
    std::vector<std::vector<std::size_t>> layers;
    for (;;) {
        std::size_t total = 0;
        for (const Matrix &c : cur)
            total += c.cols();
        if (total == 0)
            return layers;
        Subspaces next;
        for (VertexId v = 0; v < nv; ++v) {
            Matrix images(m.field(), m.dims[v], 0);
            for (ArrowId x = 0; x < a.arrow_count(); ++x) {
                const Arrow &arrow = a.quiver().arrows[x];
                if (arrow.target == v)
                    images = images.hstack(m.maps[x] * cur[arrow.source]);
            }
            next.push_back(column_basis(images));
        }
        std::vector<std::size_t> layer(nv);
        for (VertexId v = 0; v < nv; ++v)
            layer[v] = cur[v].cols() - next[v].cols();
        layers.push_back(std::move(layer));
        cur = std::move(next);
    }
}

std::vector<std::vector<std::size_t>> socle_layers(const Rep &m) {
    const Algebra &a = *m.algebra;
    const Field &f = m.field();
    std::size_t nv = a.vertex_count();
    Subspaces cur;
    for (std::size_t d : m.dims)
        cur.emplace_back(f, d, 0);
    std::vector<std::vector<std::size_t>> layers;
    for (;;) {
        bool full = true;
        for (VertexId v = 0; v < nv; ++v)
            full = full && cur[v].cols() == m.dims[v];
        if (full)
            return layers;
        std::vector<Matrix> proj;
        for (VertexId v = 0; v < nv; ++v)
            proj.push_back((cur[v].cols() == 0 ? QuotientMap(f, m.dims[v]) : QuotientMap(cur[v])).projection_matrix());
        Subspaces next;
        for (VertexId v = 0; v < nv; ++v) {
            Matrix stacked(f, 0, m.dims[v]);
            for (ArrowId x = 0; x < a.arrow_count(); ++x) {
                const Arrow &arrow = a.quiver().arrows[x];
                if (arrow.source == v)
                    stacked = stacked.vstack(proj[arrow.target] * m.maps[x]);
            }
            next.push_back(kernel_basis(stacked));
        }
        std::vector<std::size_t> layer(nv);
        for (VertexId v = 0; v < nv; ++v)
            layer[v] = next[v].cols() - cur[v].cols();
        layers.push_back(std::move(layer));
        cur = std::move(next);
    }
}

std::vector<std::size_t> top_dims(const Rep &m) {
    Subspaces rad = radical(m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        out.push_back(m.dims[v] - rad[v].cols());
    return out;
}

std::size_t tensor_dim(const Rep &x, const Rep &y) {
    const Algebra &a = *y.algebra;
    if (!x.algebra->quiver().same_shape(opposite_presentation(a.presentation()).quiver))
        throw std::invalid_argument("tensor_dim: first argument must be a module over the opposite algebra");
    const Field &f = y.field();
    std::size_t nv = a.vertex_count();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
    std::size_t total = offset[nv];
    if (total == 0)
        return 0;

    std::vector<Vec> relators;
    for (ArrowId id = 0; id < a.arrow_count(); ++id) {
        const Arrow &arrow = a.quiver().arrows[id];
        std::size_t s = arrow.source, t = arrow.target;
        const Matrix &xa = x.maps[id]; // X_t -> X_s
        const Matrix &ya = y.maps[id]; // Y_s -> Y_t
        for (std::size_t i = 0; i < x.dims[t]; ++i)
            for (std::size_t j = 0; j < y.dims[s]; ++j) {
                Vec r(total);
                for (std::size_t k = 0; k < x.dims[s]; ++k)
                    f.axpy(r[offset[s] + k * y.dims[s] + j], xa(k, i), 1);
                for (std::size_t k = 0; k < y.dims[t]; ++k)
                    f.axpy(r[offset[t] + i * y.dims[t] + k], f.neg(ya(k, j)), 1);
                relators.push_back(std::move(r));
            }
    }
    if (relators.empty())
        return total;
    return total - rank(Matrix::from_rows(f, total, relators));
}

} // namespace qred
