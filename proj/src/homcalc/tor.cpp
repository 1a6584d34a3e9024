#include <algorithm>
#include <stdexcept>

#include "qred/homcalc.hpp"

namespace qred {

namespace {

// Matrix of x |-> x.p on a right module X (a representation of the opposite
// quiver) for the normal path p = a_0 a_1 ... a_{k-1}.
Matrix right_action(const Rep &x, const Path &p) {
    Matrix m = Matrix::identity(x.field(), x.dims[p.target]);
    for (ArrowId a : p.arrows)
        m = x.maps[a] * m;
    return m;
}

// Boundary X (x) P_i -> X (x) P_{i-1} of the tensored resolution.
Matrix boundary(const Rep &x, const Resolution &res, std::size_t i, std::vector<std::optional<Matrix>> &actions) {
    const Algebra &a = *res.module.algebra;
    const Field &f = x.field();
    const auto &tops = res.steps[i].cover.tops;
    const auto &prev = res.steps[i - 1].cover.tops;
    RepMap d = res.differential(i);

    std::vector<std::size_t> row_off(prev.size() + 1, 0);
    for (std::size_t h = 0; h < prev.size(); ++h)
        row_off[h + 1] = row_off[h] + x.dims[prev[h]];
    std::vector<std::size_t> col_off(tops.size() + 1, 0);
    for (std::size_t g = 0; g < tops.size(); ++g)
        col_off[g + 1] = col_off[g] + x.dims[tops[g]];

    Matrix out(f, row_off.back(), col_off.back());
    for (std::size_t g = 0; g < tops.size(); ++g) {
        VertexId vg = tops[g];
        std::size_t pos = 0;
        for (std::size_t g2 = 0; g2 < g; ++g2)
            pos += a.block(tops[g2], vg).size();
        Vec image = d.blocks[vg].column(pos);
        std::size_t k = 0;
        for (std::size_t h = 0; h < prev.size(); ++h)
            for (std::size_t p : a.block(prev[h], vg)) {
                const Scalar &c = image[k++];
                if (Field::is_zero(c))
                    continue;
                if (!actions[p])
                    actions[p] = right_action(x, a.basis()[p]);
                const Matrix &act = *actions[p];
                for (std::size_t r = 0; r < act.rows(); ++r)
                    for (std::size_t s = 0; s < act.cols(); ++s)
                        if (!Field::is_zero(act(r, s)))
                            f.axpy(out(row_off[h] + r, col_off[g] + s), c, act(r, s));
            }
    }
    return out;
}

} // namespace

std::vector<std::size_t> tor_bounded(const Rep &x, const Rep &y, std::size_t n, bool *resolved) {
    const Algebra &a = *y.algebra;
    if (!same_algebra(*x.algebra, *a.opposite()))
        throw std::invalid_argument("tor_bounded: first argument must be a module over the opposite algebra");
    Resolution res = minimal_resolution(y, n + 2);
    if (resolved)
        *resolved = res.terminated && res.steps.size() <= n + 1;

    std::size_t len = res.steps.size();
    std::vector<std::size_t> chain(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (VertexId v : res.steps[i].cover.tops)
            chain[i] += x.dims[v];
    std::vector<std::optional<Matrix>> actions(a.dim());
    std::vector<std::size_t> ranks(len + 1, 0); // ranks[i] = rank of the boundary out of degree i
    for (std::size_t i = 1; i < len; ++i)
        ranks[i] = rank(boundary(x, res, i, actions));

    bool cut = !res.terminated && len < n + 2;
    std::size_t top = cut ? (len >= 2 ? len - 1 : 0) : n + 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < top; ++i)
        out.push_back(i < len ? chain[i] - ranks[i] - ranks[i + 1] : 0);
    return out;
}

BoundedDim gldim_bounded(const AlgebraHandle &a, std::size_t n) {
    std::size_t worst = 0;
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
        BoundedDim d = pd_bounded(simple(a, v), n);
        if (!d.exact())
            return d;
        worst = std::max(worst, d.value);
    }
    return BoundedDim::exact_value(worst, n);
}

std::pair<BoundedDim, BoundedDim> gorenstein_bounded(const AlgebraHandle &a, std::size_t n) {
    return {pd_bounded(dual(regular(a)), n), pd_bounded(dual(right_regular(a)), n)};
}

bool serial_check(const AlgebraHandle &a) {
    auto uniserial = [](const Rep &p) {
        for (const auto &layer : radical_layers(p)) {
            std::size_t total = 0;
            for (std::size_t d : layer)
                total += d;
            if (total > 1)
                return false;
        }
        return true;
    };
    AlgebraHandle op = a->opposite();
    for (VertexId v = 0; v < a->vertex_count(); ++v)
        if (!uniserial(projective(a, v)) || !uniserial(projective(op, v)))
            return false;
    return true;
}

} // namespace qred
