#include <random>

#include <doctest.h>

#include "qred/rep.hpp"
#include "support.hpp"

using namespace qred;
using testing::fixture;

namespace {

using Dims = std::vector<std::size_t>;

bool is_projective_module(const Rep &m) { return projective_cover(m).projective.dim() == m.dim(); }

// Ω^k(M) with projective summands stripped.
Rep syzygy_core(const Rep &m, std::size_t k) {
    Resolution r = minimal_resolution(m, k);
    Rep out = r.steps.size() < k ? zero_rep(m.algebra) : r.syzygy(k);
    return split_projective_summands(out).core;
}

bool in_radical(const Rep &p, VertexId v, const Vec &x) {
    Subspaces rad = radical(p);
    return solve(rad[v], Matrix::from_columns(p.field(), p.dims[v], std::span<const Vec>(&x, 1))).has_value();
}

} // namespace

TEST_CASE("standard modules") {
    auto a2 = fixture("FIX-A2");
    CHECK(projective(a2, 0).dims == Dims{1, 1});
    CHECK(projective(a2, 1).dims == simple(a2, 1).dims);
    CHECK(is_isomorphic(projective(a2, 1), simple(a2, 1)).answer == Answer::Yes);
    auto a44 = fixture("FIX-A44");
    CHECK(projective(a44, 1).dims == Dims{1, 2});
    CHECK(injective(a2, 0).dims == Dims{1, 0});
    CHECK_THROWS_AS(standard_module(a2, ModuleKind::Simple, 5), std::invalid_argument);
}

TEST_CASE("module validation reports relation violations") {
    auto kr2 = fixture("FIX-KR2");
    Field f = kr2->field();
    Rep bad{kr2, {2}, {Matrix(f, 2, 2, {f.from_int(0), f.from_int(1), f.from_int(1), f.from_int(0)})}};
    CHECK(violated_rule(bad));
    CHECK_THROWS_AS(check_rep(bad), std::invalid_argument);
    Rep shape{kr2, {2}, {Matrix(f, 1, 2)}};
    CHECK_THROWS_AS(check_rep(shape), std::invalid_argument);
}

TEST_CASE("homomorphism spaces") {
    auto a2 = fixture("FIX-A2");
    CHECK(hom_dim(simple(a2, 0), simple(a2, 0)) == 1);
    CHECK(hom_dim(simple(a2, 0), simple(a2, 1)) == 0);
    CHECK(hom_dim(projective(a2, 0), simple(a2, 1)) == 0);
    CHECK(hom_dim(projective(a2, 0), simple(a2, 0)) == 1);
    for (const RepMap &f : hom_basis(projective(a2, 0), projective(a2, 0)))
        CHECK(is_hom(f, projective(a2, 0), projective(a2, 0)));
}

TEST_CASE("projective covers") {
    auto a2 = fixture("FIX-A2");
    CHECK(projective_cover(simple(a2, 0)).projective.dims == Dims{1, 1});
    auto a44 = fixture("FIX-A44");
    auto cover = projective_cover(simple(a44, 1));
    CHECK(cover.projective.dims == Dims{1, 2});
    CHECK(cover.tops == std::vector<VertexId>{1});
    auto p = projective(a44, 1);
    CHECK(projective_cover(p).projective.dim() == p.dim());
}

TEST_CASE("minimal resolutions") {
    auto a2 = fixture("FIX-A2");
    Resolution r = minimal_resolution(simple(a2, 0), 5);
    CHECK(r.terminated);
    CHECK(r.syzygy(1).dims == Dims{0, 1});
    CHECK(pd_bounded(simple(a2, 0), 5) == BoundedDim::exact_value(1, 5));

    auto kr2 = fixture("FIX-KR2");
    Resolution periodic = minimal_resolution(simple(kr2, 0), 5);
    CHECK_FALSE(periodic.terminated);
    for (std::size_t i = 1; i <= 5; ++i)
        CHECK(is_isomorphic(periodic.syzygy(i), simple(kr2, 0)).answer == Answer::Yes);
    CHECK(pd_bounded(simple(kr2, 0), 10) == BoundedDim::at_least(10));

    auto a44 = fixture("FIX-A44");
    Rep omega = minimal_resolution(simple(a44, 1), 3).syzygy(1);
    CHECK(is_isomorphic(omega, direct_sum(simple(a44, 0), simple(a44, 1))).answer == Answer::Yes);
    CHECK(pd_bounded(simple(a44, 0), 10) == BoundedDim::exact_value(0, 10));
}

TEST_CASE("duality") {
    for (const char *name : {"FIX-A2", "FIX-KR2", "FIX-A44", "FIX-G56"}) {
        auto a = fixture(name);
        for (VertexId v = 0; v < a->vertex_count(); ++v) {
            CHECK(dual(simple(a, v)).dims == simple(a->opposite(), v).dims);
            Rep dp = dual(projective(a, v));
            CHECK(dp.dims == projective(a, v).dims);
            CHECK(is_isomorphic(rebase(dp, a->opposite()), injective(a->opposite(), v)).answer == Answer::Yes);
        }
    }
}

TEST_CASE("tensor dimensions") {
    auto a2 = fixture("FIX-A2");
    CHECK(tensor_dim(simple(a2->opposite(), 1), simple(a2, 0)) == 0);
    auto a44 = fixture("FIX-A44");
    Rep y = direct_sum(projective(a44, 1), simple(a44, 1));
    CHECK(tensor_dim(right_regular(a44), y) == y.dim());
}

TEST_CASE("isomorphism and projective splitting") {
    auto a44 = fixture("FIX-A44");
    Rep s1 = simple(a44, 0), s2 = simple(a44, 1);
    CHECK(is_isomorphic(s2, s2).answer == Answer::Yes);
    auto no = is_isomorphic(s1, s2);
    CHECK(no.answer == Answer::No);
    CHECK_FALSE(no.invariant.empty());

    Rep p2 = projective(a44, 1);
    Subspaces rad = radical(p2);
    Rep radp2 = subrep(p2, rad);
    CHECK(is_isomorphic(radp2, direct_sum(s1, s2)).answer == Answer::Yes);

    auto kr2 = fixture("FIX-KR2");
    auto split = split_projective_summands(direct_sum(simple(kr2, 0), projective(kr2, 0)));
    CHECK(split.core.dim() == 1);
    CHECK(split.stripped == std::vector<VertexId>{0});
    CHECK(split_projective_summands(projective(a44, 1)).core.dim() == 0);
    CHECK(split_projective_summands(s2).core.dim() == 1);

    CHECK(stable_isomorphic(s2, direct_sum(s2, projective(a44, 0))).answer == Answer::Yes);
    CHECK(stable_isomorphic(minimal_resolution(simple(kr2, 0), 1).syzygy(1), simple(kr2, 0)).answer ==
          Answer::Yes);
}

TEST_CASE("random modules: cover, syzygy, duality and tensor identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CAPTURE(trial);
        auto a = testing::random_algebra(rng);
        Rep m = testing::random_module(a, rng);
        check_rep(m);

        auto cover = projective_cover(m);
        CHECK(top_dims(cover.projective) == top_dims(m));
        Subspaces ker = kernel_spaces(cover.map, cover.projective);
        for (VertexId v = 0; v < a->vertex_count(); ++v)
            for (std::size_t c = 0; c < ker[v].cols(); ++c)
                CHECK(in_radical(cover.projective, v, ker[v].column(c)));

        for (VertexId v = 0; v < a->vertex_count(); ++v)
            CHECK(minimal_resolution(projective(a, v), 2).syzygy(1).dim() == 0);

        Resolution r1 = minimal_resolution(m, 1);
        Rep omega1 = r1.steps.empty() ? zero_rep(a) : r1.syzygy(1);
        Rep lhs = syzygy_core(m, 3);
        Rep rhs = syzygy_core(omega1, 2);
        CHECK(is_isomorphic(lhs, rhs, 3).answer != Answer::No);

        CHECK(pd_bounded(m, 6, Side::Injective) == pd_bounded(dual(m), 6));

        Rep x = testing::random_module(a->opposite(), rng);
        std::size_t top_bound = 0;
        for (VertexId v : cover.tops)
            top_bound += x.dims[v];
        CHECK(tensor_dim(x, m) <= top_bound);
        for (VertexId v = 0; v < a->vertex_count(); ++v)
            CHECK(tensor_dim(x, projective(a, v)) == x.dims[v]);

        Rep p = projective(a, static_cast<VertexId>(rng() % a->vertex_count()));
        CHECK(stable_isomorphic(direct_sum(m, p), m).answer == Answer::Yes);
        CHECK(is_projective_module(p));
    }
}
