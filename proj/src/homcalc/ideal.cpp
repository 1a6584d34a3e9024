#include <stdexcept>

#include "qred/homcalc.hpp"

namespace qred {

std::string to_string(Status s) {
    switch (s) {
    case Status::Certified:
        return "certified";
    case Status::Evidence:
        return "evidence";
    case Status::Refuted:
        return "refuted";
    }
    return "evidence";
}

namespace {

// Rows of `ideal` lying in the block source -> target, restricted to the
// positions given by `coords` (basis indices of the ambient space).
Matrix rows_in(const Algebra &a, const Matrix &ideal, const std::vector<std::size_t> &coords,
               bool (*keep)(const Path &, VertexId), VertexId v) {
    std::vector<Vec> cols;
    for (std::size_t r = 0; r < ideal.rows(); ++r) {
        Vec row = ideal.row(r);
        std::size_t lead = 0;
        while (Field::is_zero(row[lead]))
            ++lead;
        if (!keep(a.basis()[lead], v))
            continue;
        Vec col;
        for (std::size_t i : coords)
            col.push_back(row[i]);
        cols.push_back(std::move(col));
    }
    return Matrix::from_columns(a.field(), coords.size(), cols);
}

bool ends_at(const Path &p, VertexId v) { return p.target == v; }
bool starts_at(const Path &p, VertexId v) { return p.source == v; }

} // namespace

Quotient quotient_by_ideal(const AlgebraHandle &a, const std::vector<Element> &generators) {
    const Field &f = a->field();
    Quotient q;
    q.ideal = ideal_span(*a, generators);
    QuotientMap span = q.ideal.rows() == 0 ? QuotientMap(f, a->dim()) : QuotientMap(q.ideal.transpose());

    std::vector<VertexId> kept;
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
        Vec e(a->dim());
        e[*a->index_of(Path::trivial(v))] = 1;
        (span.contains(e) ? q.killed : kept).push_back(v);
    }
    if (kept.empty())
        throw std::invalid_argument("the ideal is the whole algebra");
    for (std::size_t r = 0; r < q.ideal.rows(); ++r)
        for (VertexId v : kept)
            if (!Field::is_zero(q.ideal(r, *a->index_of(Path::trivial(v)))))
                throw std::invalid_argument("the ideal is not contained in the radical plus killed idempotents");

    q.presented = present_subquotient(a, kept, q.ideal, a->name() + "_q");

    Subspaces left_sub, right_sub;
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
        left_sub.push_back(rows_in(*a, q.ideal, a->paths_to(v), ends_at, v));
        right_sub.push_back(rows_in(*a, q.ideal, a->paths_from(v), starts_at, v));
    }
    q.left = quotient_rep(regular(a), left_sub);
    q.right = quotient_rep(right_regular(a), right_sub);

    Bimodule reg = regular_bimodule(a);
    const ProductInfo &info = *reg.rep.algebra->product();
    Subspaces bi_sub(reg.rep.algebra->vertex_count());
    for (VertexId v = 0; v < a->vertex_count(); ++v)
        for (VertexId w = 0; w < a->vertex_count(); ++w) {
            const auto &coords = a->block(w, v);
            std::vector<Vec> cols;
            for (std::size_t r = 0; r < q.ideal.rows(); ++r) {
                Vec col;
                bool any = false;
                for (std::size_t i : coords) {
                    col.push_back(q.ideal(r, i));
                    any = any || !Field::is_zero(col.back());
                }
                if (any)
                    cols.push_back(std::move(col));
            }
            bi_sub[info.vertex(v, w)] = Matrix::from_columns(f, coords.size(), cols);
        }
    q.ideal_bimodule = {a, a, subrep(reg.rep, bi_sub)};
    return q;
}

IdealCheck homological_ideal_check(const Quotient &q, std::size_t n) {
    IdealCheck out;
    out.bound = n;
    bool resolved = false;
    out.tor = tor_bounded(q.right, q.left, n, &resolved);
    out.bound = out.tor.empty() ? 0 : std::min(n, out.tor.size() - 1);
    for (std::size_t i = 1; i < out.tor.size(); ++i)
        if (out.tor[i] != 0) {
            out.status = Status::Refuted;
            out.refuted_degree = i;
            out.tor.resize(i + 1);
            return out;
        }
    out.status = resolved ? Status::Certified : Status::Evidence;
    return out;
}

IdealCheck homological_ideal_check(const AlgebraHandle &a, const std::vector<Element> &generators,
                                   std::size_t n) {
    return homological_ideal_check(quotient_by_ideal(a, generators), n);
}

BoundedDim bimodule_pd_bounded(const Bimodule &m, std::size_t n) { return pd_bounded(m.rep, n); }

DerivedTensorCheck derived_tensor_bounded(const Subquotient &corner, std::size_t n) {
    DerivedTensorCheck out;
    out.bound = n;
    Rep x = restrict_right(corner_left_bimodule(corner));
    Rep y = restrict_left(corner_right_bimodule(corner));
    bool resolved = false;
    out.tor = tor_bounded(x, y, n, &resolved);
    out.bound = out.tor.empty() ? 0 : std::min(n, out.tor.size() - 1);
    out.status = resolved ? Status::Certified : Status::Evidence;
    return out;
}

} // namespace qred
