#include <random>

#include <doctest.h>

#include "qred/witness.hpp"
#include "support.hpp"

using namespace qred;
using testing::fixture;

namespace {

const char *const kSelfTestFixtures[] = {"FIX-A2", "FIX-KR2", "FIX-A44", "FIX-G56-quotient"};

Bimodule random_bimodule(const AlgebraHandle &a, std::mt19937_64 &rng) {
    return make_bimodule(a, a, testing::random_module(a->enveloping(), rng, 2, 2));
}

} // namespace

TEST_CASE("restrictions of the regular bimodule") {
    for (const char *name : {"FIX-A2", "FIX-A44", "FIX-G56"}) {
        auto a = fixture(name);
        Bimodule reg = regular_bimodule(a);
        CHECK(reg.dim() == a->dim());
        CHECK(is_isomorphic(restrict(reg, BimoduleSide::Left), regular(a)).answer == Answer::Yes);
        CHECK(is_isomorphic(restrict(reg, BimoduleSide::Right), right_regular(a)).answer == Answer::Yes);
    }
}

TEST_CASE("projective bimodules restrict to projectives") {
    for (const char *name : {"FIX-A2", "FIX-KR2", "FIX-A44"}) {
        auto a = fixture(name);
        auto env = a->enveloping();
        for (VertexId v = 0; v < env->vertex_count(); ++v) {
            Bimodule p = make_bimodule(a, a, projective(env, v));
            CHECK(is_projective(restrict_left(p)));
            CHECK(is_projective(restrict_right(p)));
        }
    }
}

TEST_CASE("tensor products of bimodules") {
    auto a44 = fixture("FIX-A44");
    Bimodule reg = regular_bimodule(a44);
    CHECK(is_isomorphic(tensor_bimodules(reg, reg).rep, reg.rep).answer == Answer::Yes);
    Bimodule zero = make_bimodule(a44, a44, zero_rep(a44->enveloping()));
    CHECK(tensor_bimodules(reg, zero).dim() == 0);

    IdempotentCandidate c = idempotent_candidate(a44, {1});
    Bimodule ae_ea = tensor_bimodules(c.m, c.n);
    // eA is free of rank one over eAe, so Ae (x) eA collapses to Ae.
    CHECK(ae_ea.dim() == tensor_dim(restrict_right(c.m), restrict_left(c.n)));
    CHECK(ae_ea.dim() == 3);
    CHECK(tensor_bimodules(c.n, c.m).dim() == 2);
}

TEST_CASE("idempotent candidates") {
    IdempotentCandidate a44 = idempotent_candidate(fixture("FIX-A44"), {1});
    CHECK(a44.m.dim() == 3);
    CHECK(a44.n.dim() == 2);
    IdempotentCandidate g56 = idempotent_candidate(fixture("FIX-G56"), {1, 2});
    CHECK(g56.m.dim() == 7);
    CHECK(g56.n.dim() == 7);
    auto a2 = fixture("FIX-A2");
    IdempotentCandidate whole = idempotent_candidate(a2, {0, 1});
    CHECK(whole.m.dim() == a2->dim());
    CHECK(whole.n.dim() == a2->dim());
}

TEST_CASE("bimodule syzygies") {
    CHECK(bimodule_syzygy(fixture("FIX-A2"), 1).dim() == 1);
    CHECK(bimodule_syzygy(fixture("FIX-KR2"), 1).dim() == 2);
    CHECK(bimodule_syzygy(fixture("FIX-A2"), 2).dim() == 0);
    for (const char *name : {"FIX-KR2", "FIX-A44"}) {
        auto a = fixture(name);
        Rep omega1 = bimodule_syzygy(a, 1).rep;
        Rep omega2 = bimodule_syzygy(a, 2).rep;
        Rep again = minimal_resolution(omega1, 1).syzygy(1);
        CHECK(stable_isomorphic(omega2, again).answer == Answer::Yes);
    }
}

TEST_CASE("level self-tests over the fixtures") {
    for (const char *name : kSelfTestFixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        Bimodule reg = regular_bimodule(a);
        CHECK(verify_level({reg, reg, 0}).verdict == Outcome::Holds);
        CHECK(verify_level({bimodule_syzygy(a, 1), reg, 1}).verdict == Outcome::Holds);
    }
    auto kr2 = fixture("FIX-KR2");
    Bimodule reg = regular_bimodule(kr2);
    LevelReport wrong = verify_level({reg, reg, 1});
    CHECK(wrong.verdict == Outcome::Fails);
    CHECK(wrong.iso_a == Answer::No);
}

TEST_CASE("level search") {
    auto a2 = fixture("FIX-A2");
    Bimodule reg = regular_bimodule(a2);
    CHECK(search_level(reg, reg, 4).level == std::optional<std::size_t>(0));
    CHECK(search_level(bimodule_syzygy(a2, 1), reg, 4).level == std::optional<std::size_t>(1));

    auto a44 = fixture("FIX-A44");
    CHECK(default_level_max(a44) == 6);
    IdempotentCandidate c = idempotent_candidate(a44, {1});
    LevelSearch s = search_level(c.m, c.n, 6);
    CHECK_FALSE(s.level);
    CHECK(s.reports.size() == 7);
    CHECK_FALSE(s.reports.front().projectivity.m_right);
}

TEST_CASE("random bimodules: tensor associativity in dimension") {
    std::mt19937_64 rng(17);
    testing::RandomShape small{2, 3, 3, 5};
    int checked = 0;
    while (checked < 8) {
        auto a = testing::random_algebra(rng, small);
        if (a->dim() > 5)
            continue;
        Bimodule m = random_bimodule(a, rng), n = random_bimodule(a, rng), k = random_bimodule(a, rng);
        CHECK(tensor_bimodules(tensor_bimodules(m, n), k).dim() ==
              tensor_bimodules(m, tensor_bimodules(n, k)).dim());
        CHECK(tensor_bimodules(regular_bimodule(a), m).dim() == m.dim());
        ++checked;
    }
}
