#include <random>

#include <doctest.h>

#include "qred/homcalc.hpp"
#include "support.hpp"

using namespace qred;
using testing::fixture;

namespace {

using Dims = std::vector<std::size_t>;

Element idempotent(const AlgebraHandle &a, VertexId v) { return {{Path::trivial(v), a->field().from_int(1)}}; }

std::size_t as_number(const BoundedDim &d) { return d.exact() ? d.value : SIZE_MAX; }

} // namespace

TEST_CASE("Tor over fixtures") {
    auto kr2 = fixture("FIX-KR2");
    Rep s = simple(kr2, 0);
    CHECK(tor_bounded(simple(kr2->opposite(), 0), s, 6) == Dims(7, 1));

    auto a2 = fixture("FIX-A2");
    bool resolved = false;
    CHECK(tor_bounded(simple(a2->opposite(), 1), simple(a2, 0), 3, &resolved) == Dims{0, 1, 0, 0});
    CHECK(resolved);

    auto a44 = fixture("FIX-A44");
    Rep y = direct_sum(simple(a44, 1), projective(a44, 1));
    Dims expected(4, 0);
    expected[0] = y.dim();
    CHECK(tor_bounded(right_regular(a44), y, 3) == expected);
}

TEST_CASE("global and self-injective dimensions") {
    auto a2 = fixture("FIX-A2");
    CHECK(gldim_bounded(a2, 10) == BoundedDim::exact_value(1, 10));
    auto kr2 = fixture("FIX-KR2");
    CHECK(gldim_bounded(kr2, 10) == BoundedDim::at_least(10));
    auto semisimple = testing::algebra_from_text("algebra K2\nvertices 1 2\n");
    CHECK(gldim_bounded(semisimple, 10) == BoundedDim::exact_value(0, 10));

    auto [kl, kr] = gorenstein_bounded(kr2, 10);
    CHECK(kl == BoundedDim::exact_value(0, 10));
    CHECK(kr == BoundedDim::exact_value(0, 10));
    auto [al, ar] = gorenstein_bounded(a2, 10);
    CHECK(as_number(al) <= 1);
    CHECK(as_number(ar) <= 1);
    auto [sl, sr] = gorenstein_bounded(semisimple, 10);
    CHECK(sl == BoundedDim::exact_value(0, 10));
    CHECK(sr == BoundedDim::exact_value(0, 10));
}

TEST_CASE("relation endpoints") {
    auto a44 = fixture("FIX-A44");
    CHECK(bongartz(*a44, 0).no_relation_starts);
    CHECK_FALSE(bongartz(*a44, 0).no_relation_ends);
    auto g56 = fixture("FIX-G56");
    for (VertexId v = 0; v < 3; ++v) {
        CHECK_FALSE(bongartz(*g56, v).no_relation_starts);
        CHECK_FALSE(bongartz(*g56, v).no_relation_ends);
    }
    auto a2 = fixture("FIX-A2");
    CHECK(bongartz(*a2, 0).no_relation_starts);
    CHECK(bongartz(*a2, 1).no_relation_ends);
}

TEST_CASE("minimal relations ignore redundant generators") {
    auto a = testing::algebra_from_text("algebra R\nvertices 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 3\n"
                                        "arrow c : 3 -> 4\nrelations\nb*a\nc*b*a\nend\n");
    auto counts = minimal_relation_counts(*a);
    CHECK(counts[0][2] == 1);
    CHECK(counts[0][3] == 0);
}

TEST_CASE("homological ideals") {
    auto a2 = fixture("FIX-A2");
    CHECK(homological_ideal_check(a2, {}, 6).status == Status::Certified);
    CHECK(homological_ideal_check(a2, {idempotent(a2, 0)}, 6).status == Status::Certified);

    auto g56 = fixture("FIX-G56");
    Quotient q = quotient_by_ideal(g56, {idempotent(g56, 0)});
    CHECK(q.presented.algebra->dim() == 5);
    CHECK(q.presented.algebra->is_monomial());
    CHECK(q.killed == std::vector<VertexId>{0});
    IdealCheck check = homological_ideal_check(q, 8);
    CHECK(check.status != Status::Refuted);
    BoundedDim pd = bimodule_pd_bounded(q.ideal_bimodule, 8);
    CHECK(pd.exact());
    CHECK(pd.value <= 8);

    auto kr2 = fixture("FIX-KR2");
    Element x{{*make_path(kr2->quiver(), {0}), kr2->field().from_int(1)}};
    IdealCheck rad = homological_ideal_check(kr2, {x}, 6);
    CHECK(rad.status == Status::Refuted);
    CHECK(rad.refuted_degree == std::optional<std::size_t>(1));

    CHECK_THROWS_AS(quotient_by_ideal(a2, {idempotent(a2, 0), idempotent(a2, 1)}), std::invalid_argument);
}

TEST_CASE("bimodule projective dimension") {
    auto semisimple = testing::algebra_from_text("algebra K2\nvertices 1 2\n");
    CHECK(bimodule_pd_bounded(regular_bimodule(semisimple), 6) == BoundedDim::exact_value(0, 6));
    auto a2 = fixture("FIX-A2");
    CHECK(bimodule_pd_bounded(regular_bimodule(a2), 6) == BoundedDim::exact_value(1, 6));
    auto env = a2->enveloping();
    for (VertexId v = 0; v < env->vertex_count(); ++v)
        CHECK(bimodule_pd_bounded(make_bimodule(a2, a2, projective(env, v)), 6) == BoundedDim::exact_value(0, 6));
}

TEST_CASE("bounded derived tensor over corners") {
    auto a44 = fixture("FIX-A44");
    Subquotient c = present_subquotient(a44, {1}, Matrix(a44->field(), 0, a44->dim()), "C");
    auto check = derived_tensor_bounded(c, 6);
    CHECK(check.status == Status::Certified);
    for (std::size_t i = 1; i < check.tor.size(); ++i)
        CHECK(check.tor[i] == 0);

    Subquotient all = present_subquotient(a44, {0, 1}, Matrix(a44->field(), 0, a44->dim()), "C");
    CHECK(derived_tensor_bounded(all, 6).status == Status::Certified);

    auto a2 = fixture("FIX-A2");
    Subquotient c2 = present_subquotient(a2, {1}, Matrix(a2->field(), 0, a2->dim()), "C");
    CHECK(derived_tensor_bounded(c2, 6).status == Status::Certified);
}

TEST_CASE("serial algebras") {
    CHECK(serial_check(fixture("FIX-KR2")));
    CHECK(serial_check(fixture("FIX-A2")));
    CHECK_FALSE(serial_check(fixture("FIX-A44")));
}

TEST_CASE("random corpus: relation counts, Bongartz, Tor symmetry and injective dimension") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        CAPTURE(trial);
        auto a = testing::random_algebra(rng);
        auto counts = minimal_relation_counts(*a);
        for (VertexId s = 0; s < a->vertex_count(); ++s)
            for (VertexId t = 0; t < a->vertex_count(); ++t)
                CHECK(counts[s][t] == testing::second_syzygy_tops(a, s, t));

        for (VertexId v = 0; v < a->vertex_count(); ++v) {
            BongartzSides b = bongartz(*a, v);
            CHECK((as_number(pd_bounded(simple(a, v), 10)) <= 1) == b.no_relation_starts);
            CHECK((as_number(pd_bounded(simple(a, v), 10, Side::Injective)) <= 1) == b.no_relation_ends);
        }

        Rep y = testing::random_module(a, rng);
        Rep x = testing::random_module(a->opposite(), rng);
        CHECK(tor_bounded(x, y, 4) == tor_bounded(rebase(y, a->opposite()->opposite()), x, 4));
        CHECK(tor_bounded(x, y, 0).front() == tensor_dim(x, y));
        CHECK(pd_bounded(y, 8, Side::Injective) == id_by_coresolution(y, 8));

        BoundedDim gl = gldim_bounded(a, 8);
        if (gl.exact())
            for (VertexId v = 0; v < a->vertex_count(); ++v)
                CHECK(as_number(pd_bounded(simple(a, v), 8)) <= gl.value);
        CHECK(homological_ideal_check(a, {}, 4).status == Status::Certified);
    }
}

TEST_CASE("growing syzygies stop at the dimension cap") {
    auto g56 = fixture("FIX-G56");
    Resolution r = minimal_resolution(simple(g56, 0), 20, 100);
    CHECK_FALSE(r.terminated);
    CHECK(r.steps.size() < 20);
    CHECK(r.syzygy(r.steps.size()).dim() > 100);

    BoundedDim pd = pd_bounded(simple(g56, 0), 20);
    CHECK_FALSE(pd.exact());
    CHECK(pd.bound < 20);
    CHECK(pd.value == pd.bound + 1);

    Rep x = simple(g56->opposite(), 0);
    bool resolved = true;
    std::vector<std::size_t> tor = tor_bounded(x, simple(g56, 0), 20, &resolved);
    CHECK_FALSE(resolved);
    CHECK(tor.size() < 21);
    CHECK(tor == tor_bounded(x, simple(g56, 0), tor.size() - 1));
}
