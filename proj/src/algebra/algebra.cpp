#include <algorithm>
#include <functional>
#include <list>

#include "qred/algebra.hpp"
#include "ruleset.hpp"

namespace qred {

std::size_t ProductInfo::right_vertices() const { return right->vertex_count(); }

VertexId ProductInfo::vertex(VertexId v, VertexId w) const {
    return static_cast<VertexId>(v * right->vertex_count() + w);
}

ArrowId ProductInfo::left_arrow(ArrowId a, VertexId w) const {
    return static_cast<ArrowId>(a * right->vertex_count() + w);
}

ArrowId ProductInfo::right_arrow(VertexId v, ArrowId b) const {
    return static_cast<ArrowId>(left->arrow_count() * right->vertex_count() + v * right->arrow_count() + b);
}

void Algebra::finish() {
    rule_index_.clear();
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word &w = rules_[i].lead.arrows;
        rule_index_.emplace(detail::word_key(w.data(), w.size()), i);
        lengths.push_back(w.size());
    }
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    lead_lengths_ = std::move(lengths);

    index_.clear();
    std::size_t nv = vertex_count();
    blocks_.assign(nv, std::vector<std::vector<std::size_t>>(nv));
    arrow_basis_.assign(arrow_count(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Path &p = basis_[i];
        index_.emplace(p, i);
        blocks_[p.source][p.target].push_back(i);
        if (p.length() == 1)
            arrow_basis_[p.arrows[0]] = i;
    }
}

bool Algebra::is_monomial() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule &r) { return r.tail.empty(); });
}

std::optional<std::size_t> Algebra::index_of(const Path &p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<std::size_t> &Algebra::block(VertexId source, VertexId target) const {
    return blocks_.at(source).at(target);
}

std::vector<std::size_t> Algebra::paths_from(VertexId source) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].source == source)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> Algebra::paths_to(VertexId target) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].target == target)
            out.push_back(i);
    return out;
}

Element Algebra::normal_form(const Element &x) const {
    return detail::rewrite(x, field(), [&](const Word &w, const Element *&tail) {
        auto hit = detail::find_lead(w, lead_lengths_, rule_index_);
        if (hit)
            tail = &rules_[hit->rule].tail;
        return hit;
    });
}

Element Algebra::to_element(const Vec &coords) const {
    Element e;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!Field::is_zero(coords[i]))
            e.emplace_hint(e.end(), basis_[i], coords[i]);
    return e;
}

Vec Algebra::to_coords(const Element &x) const {
    Vec v(dim());
    for (const auto &[p, c] : normal_form(x))
        v[*index_of(p)] = c;
    return v;
}

const SparseVec &Algebra::product(std::size_t i, std::size_t j) const {
    std::call_once(table_once_, [this] {
        std::size_t n = dim();
        table_.assign(n * n, {});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto pq = concat(basis_[a], basis_[b]);
                if (!pq)
                    continue;
                Element one;
                one.emplace(std::move(*pq), field().from_int(1));
                SparseVec &out = table_[a * n + b];
                for (const auto &[p, c] : normal_form(one))
                    out.emplace_back(*index_of(p), c);
            }
    });
    return table_[i * dim() + j];
}

Vec Algebra::multiply(const Vec &x, const Vec &y) const {
    Vec out(dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (Field::is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (Field::is_zero(y[j]))
                continue;
            Scalar c = field().mul(x[i], y[j]);
            for (const auto &[k, v] : product(i, j))
                field().axpy(out[k], c, v);
        }
    }
    return out;
}

Matrix Algebra::multiplication_matrix(const Vec &x, bool left, const std::vector<std::size_t> &from,
                                      const std::vector<std::size_t> &to) const {
    std::vector<std::ptrdiff_t> row_of(dim(), -1);
    for (std::size_t r = 0; r < to.size(); ++r)
        row_of[to[r]] = static_cast<std::ptrdiff_t>(r);
    Matrix m(field(), to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c)
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (Field::is_zero(x[i]))
                continue;
            const SparseVec &prod = left ? product(i, from[c]) : product(from[c], i);
            for (const auto &[k, v] : prod)
                if (row_of[k] >= 0)
                    field().axpy(m(static_cast<std::size_t>(row_of[k]), c), x[i], v);
        }
    return m;
}

AlgebraHandle Algebra::opposite() const {
    std::lock_guard lock(opposite_mutex_);
    if (opposite_strong_)
        return opposite_strong_;
    if (auto back = opposite_weak_.lock())
        return back;
    Presentation op = opposite_presentation(pres_);
    if (pres_.name.size() > 3 && pres_.name.ends_with("^op"))
        op.name = pres_.name.substr(0, pres_.name.size() - 3);
    auto handle = complete(op, 2 * loewy_length_ + 1);
    std::const_pointer_cast<Algebra>(handle)->opposite_weak_ = shared_from_this();
    opposite_strong_ = handle;
    return handle;
}

AlgebraHandle Algebra::enveloping() const {
    auto self = shared_from_this();
    return tensor_with_opposite(self, self);
}

std::size_t Algebra::normal_paths_of_length(std::size_t len) const {
    return static_cast<std::size_t>(
        std::count_if(basis_.begin(), basis_.end(), [&](const Path &p) { return p.length() == len; }));
}

AlgebraHandle opposite(const AlgebraHandle &a) { return a->opposite(); }

namespace {

constexpr std::size_t kProductCacheSize = 16;

std::mutex product_cache_mutex;
std::list<AlgebraHandle> product_cache;

Word lift_word(const Word &w, const std::function<ArrowId(ArrowId)> &f) {
    Word out;
    out.reserve(w.size());
    for (ArrowId a : w)
        out.push_back(f(a));
    return out;
}

void add_rule_relations(Presentation &p, const Algebra &alg, bool reverse,
                        const std::function<ArrowId(ArrowId)> &lift) {
    for (const Rule &r : alg.rules()) {
        Relation rel;
        Word lead = r.lead.arrows;
        if (reverse)
            std::reverse(lead.begin(), lead.end());
        rel.push_back({alg.field().from_int(1), lift_word(lead, lift)});
        for (const auto &[t, c] : r.tail) {
            Word w = t.arrows;
            if (reverse)
                std::reverse(w.begin(), w.end());
            rel.push_back({alg.field().neg(c), lift_word(w, lift)});
        }
        p.relations.push_back(std::move(rel));
    }
}

} // namespace

AlgebraHandle tensor_with_opposite(const AlgebraHandle &a, const AlgebraHandle &b) {
    if (!(a->field() == b->field()))
        throw std::invalid_argument("tensor_with_opposite: algebras over different fields");
    {
        std::lock_guard lock(product_cache_mutex);
        for (auto it = product_cache.begin(); it != product_cache.end(); ++it) {
            const ProductInfo &info = *(*it)->product();
            if (info.left == a && info.right == b) {
                product_cache.splice(product_cache.begin(), product_cache, it);
                return product_cache.front();
            }
        }
    }

    ProductInfo info{a, b};
    const Quiver &qa = a->quiver();
    const Quiver &qb = b->quiver();
    Presentation p;
    p.name = a == b ? a->name() + "^e" : a->name() + "(x)" + b->name() + "^op";
    p.field = a->field();
    for (const auto &v : qa.vertices)
        for (const auto &w : qb.vertices)
            p.quiver.vertices.push_back("(" + v + "," + w + ")");
    for (ArrowId x = 0; x < qa.arrows.size(); ++x)
        for (VertexId w = 0; w < qb.vertices.size(); ++w)
            p.quiver.arrows.push_back({"(" + qa.arrows[x].name + "," + qb.vertices[w] + ")",
                                       info.vertex(qa.arrows[x].source, w),
                                       info.vertex(qa.arrows[x].target, w)});
    for (VertexId v = 0; v < qa.vertices.size(); ++v)
        for (ArrowId y = 0; y < qb.arrows.size(); ++y)
            p.quiver.arrows.push_back({"(" + qa.vertices[v] + "," + qb.arrows[y].name + "^op)",
                                       info.vertex(v, qb.arrows[y].target),
                                       info.vertex(v, qb.arrows[y].source)});

    for (VertexId w = 0; w < qb.vertices.size(); ++w)
        add_rule_relations(p, *a, false, [&](ArrowId x) { return info.left_arrow(x, w); });
    for (VertexId v = 0; v < qa.vertices.size(); ++v)
        add_rule_relations(p, *b, true, [&](ArrowId y) { return info.right_arrow(v, y); });
    Scalar one = a->field().from_int(1);
    Scalar minus_one = a->field().from_int(-1);
    for (ArrowId x = 0; x < qa.arrows.size(); ++x)
        for (ArrowId y = 0; y < qb.arrows.size(); ++y) {
            VertexId v = qa.arrows[x].source, v2 = qa.arrows[x].target;
            VertexId w = qb.arrows[y].source, w2 = qb.arrows[y].target;
            p.relations.push_back({{one, {info.left_arrow(x, w), info.right_arrow(v, y)}},
                                   {minus_one, {info.right_arrow(v2, y), info.left_arrow(x, w2)}}});
        }

    std::size_t bound = 2 * (a->loewy_length() + b->loewy_length() - 1) + 1;
    auto handle = complete(p, bound);
    if (handle->dim() != a->dim() * b->dim())
        throw std::logic_error("dimension mismatch: product algebra has dimension " +
                               std::to_string(handle->dim()) + ", expected " +
                               std::to_string(a->dim() * b->dim()));
    std::const_pointer_cast<Algebra>(handle)->product_ = info;

    std::lock_guard lock(product_cache_mutex);
    product_cache.push_front(handle);
    if (product_cache.size() > kProductCacheSize)
        product_cache.pop_back();
    return handle;
}

std::vector<std::size_t> corner_basis(const Algebra &a, const std::vector<VertexId> &vertices) {
    std::vector<bool> in(a.vertex_count(), false);
    for (VertexId v : vertices)
        in.at(v) = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (in[a.basis()[i].source] && in[a.basis()[i].target])
            out.push_back(i);
    return out;
}

bool same_algebra(const Algebra &a, const Algebra &b) {
    if (&a == &b)
        return true;
    if (!(a.field() == b.field()) || !a.quiver().same_shape(b.quiver()) || a.basis() != b.basis())
        return false;
    if (a.rules().size() != b.rules().size())
        return false;
    for (std::size_t i = 0; i < a.rules().size(); ++i)
        if (!(a.rules()[i].lead == b.rules()[i].lead) || a.rules()[i].tail != b.rules()[i].tail)
            return false;
    return true;
}

} // namespace qred
