#include <algorithm>
#include <random>

#include <doctest.h>

#include "qred/dsl.hpp"
#include "support.hpp"

using namespace qred;
using testing::fixture;

namespace {

Path word_path(const Algebra &a, std::vector<std::string> names) {
    Word w;
    for (const auto &n : names)
        w.push_back(*a.quiver().find_arrow(n));
    return *make_path(a.quiver(), w);
}

bool has_code(const Diagnostics &d, const std::string &code) {
    return std::any_of(d.items.begin(), d.items.end(), [&](const Diagnostic &x) { return x.code == code; });
}

std::vector<std::size_t> length_profile(const Algebra &a) {
    std::vector<std::size_t> out;
    for (std::size_t len = 0; len <= a.loewy_length(); ++len)
        out.push_back(a.normal_paths_of_length(len));
    return out;
}

} // namespace

TEST_CASE("parsing the fixture corpus") {
    Presentation kr2 = parse_algebra("algebra KR2\nfield rational\nvertices 1\narrow x : 1 -> 1\n"
                                     "relations\nx*x\nend\n");
    CHECK(kr2.quiver.vertices.size() == 1);
    CHECK(kr2.quiver.arrows.size() == 1);
    CHECK(kr2.relations.size() == 1);

    auto g56 = fixture("FIX-G56");
    CHECK(g56->vertex_count() == 3);
    CHECK(g56->arrow_count() == 5);
    CHECK(g56->presentation().relations.size() == 10);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_algebra("algebra X\nvertices 1 2\narrow a : 1 -> 9\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_algebra("algebra X\nvertices 1\nbogus line\n"), ParseError);
}

TEST_CASE("validation rejects non-admissible and non-composable relations") {
    CHECK_THROWS_WITH_AS(parse_algebra("algebra X\nvertices 1 2\narrow a : 1 -> 2\nrelations\na\nend\n"),
                         doctest::Contains("non-admissible generator"), ParseError);
    Presentation p = parse_algebra("algebra X\nvertices 1 2\narrow a : 1 -> 2\n");
    p.relations.push_back({{p.field.from_int(1), {0}}});
    CHECK(has_code(validate(p), "non-admissible generator"));

    Presentation q = parse_algebra("algebra Y\nvertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n");
    q.relations.push_back({{q.field.from_int(1), {0, 1}}});
    CHECK(has_code(validate(q), "non-composable word"));
    CHECK(validate(fixture("FIX-KR2")->presentation()).ok());
}

TEST_CASE("left-to-right convention stores reversed words") {
    auto rl = testing::algebra_from_text("algebra P\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n"
                                         "relations\nb*a\nend\n");
    auto lr = testing::algebra_from_text("algebra P\nconvention left-to-right\nvertices 1 2 3\n"
                                         "arrow a : 1 -> 2\narrow b : 2 -> 3\nrelations\na*b\nend\n");
    CHECK(rl->dim() == 5);
    CHECK(lr->dim() == 5);
    CHECK(rl->rules().front().lead == lr->rules().front().lead);
}

TEST_CASE("completed dimensions and bases of fixtures") {
    auto kr2 = fixture("FIX-KR2");
    CHECK(kr2->dim() == 2);
    CHECK(kr2->loewy_length() == 2);

    auto a44 = fixture("FIX-A44");
    CHECK(a44->dim() == 4);
    CHECK(a44->index_of(word_path(*a44, {"a"})));
    CHECK(a44->index_of(word_path(*a44, {"x"})));

    auto g56 = fixture("FIX-G56");
    CHECK(g56->dim() == 9);
    CHECK(g56->loewy_length() == 3);
    CHECK(g56->index_of(word_path(*g56, {"alpha", "beta"})));
    CHECK_FALSE(g56->index_of(word_path(*g56, {"gamma", "delta"})));

    CHECK(fixture("FIX-A2")->loewy_length() == 2);
    CHECK(fixture("FIX-A2")->dim() == 3);
}

TEST_CASE("completion reports infinite dimension") {
    Presentation loop = parse_algebra("algebra L\nvertices 1\narrow x : 1 -> 1\n");
    CHECK_THROWS_AS(complete(loop, 6), CompletionError);
}

TEST_CASE("normal forms") {
    auto g56 = fixture("FIX-G56");
    const Field &f = g56->field();
    Element gd{{word_path(*g56, {"gamma", "delta"}), f.from_int(1)}};
    Element ab{{word_path(*g56, {"alpha", "beta"}), f.from_int(1)}};
    CHECK(g56->normal_form(gd) == ab);

    for (const Element &r : relation_elements(g56->presentation()))
        CHECK(g56->normal_form(r).empty());

    Element ev{{Path::trivial(1), f.from_int(1)}};
    CHECK(g56->normal_form(ev) == ev);
}

TEST_CASE("monomial flags") {
    CHECK(fixture("FIX-KR2")->is_monomial());
    CHECK_FALSE(fixture("FIX-G56")->is_monomial());
    CHECK(fixture("FIX-E57")->is_monomial());
    for (const Rule &r : fixture("FIX-E57")->rules())
        CHECK(r.tail.empty());
}

TEST_CASE("opposite and enveloping algebras") {
    auto a2 = fixture("FIX-A2");
    auto op = a2->opposite();
    CHECK(op->dim() == 3);
    CHECK(op->quiver().arrows[0].source == 1);
    CHECK(op->quiver().arrows[0].target == 0);

    for (const char *name : {"FIX-A2", "FIX-KR2", "FIX-A44", "FIX-G56", "FIX-E57"}) {
        auto a = fixture(name);
        CHECK(length_profile(*a->opposite()->opposite()) == length_profile(*a));
    }

    CHECK(fixture("FIX-KR2")->enveloping()->dim() == 4);
    CHECK(fixture("FIX-G56")->enveloping()->dim() == 81);
    auto k = testing::algebra_from_text("algebra K\nvertices 1\n");
    CHECK(k->enveloping()->dim() == 1);
}

TEST_CASE("corner bases") {
    auto a44 = fixture("FIX-A44");
    CHECK(corner_basis(*a44, {1}).size() == 2);
    auto g56 = fixture("FIX-G56");
    CHECK(corner_basis(*g56, {1, 2}).size() == 6);
    CHECK(corner_basis(*g56, {0, 1, 2}).size() == 9);
}

TEST_CASE("random corpus: independent dimension oracle and algebra invariants") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        CAPTURE(trial);
        auto a = testing::random_algebra(rng);
        const Presentation &p = a->presentation();
        CHECK(testing::truncated_quotient_dim(p, a->loewy_length() + 1) == a->dim());

        Presentation shuffled = p;
        std::vector<ArrowId> perm(p.quiver.arrows.size());
        for (ArrowId i = 0; i < perm.size(); ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (ArrowId i = 0; i < perm.size(); ++i)
            shuffled.quiver.arrows[perm[i]] = p.quiver.arrows[i];
        for (auto &rel : shuffled.relations)
            for (auto &term : rel)
                for (auto &x : term.word)
                    x = perm[x];
        CHECK(complete(shuffled, 10)->dim() == a->dim());

        Vec x = testing::random_vec(a->field(), a->dim(), rng);
        Element nx = a->to_element(x);
        CHECK(a->normal_form(nx) == nx);
        Vec y = testing::random_vec(a->field(), a->dim(), rng);
        Vec z = testing::random_vec(a->field(), a->dim(), rng);
        CHECK(a->multiply(a->multiply(x, y), z) == a->multiply(x, a->multiply(y, z)));

        if (a->dim() <= 12) {
            auto b = testing::random_algebra(rng, {2, 3, 2, 5});
            if (b->dim() <= 6)
                CHECK(tensor_with_opposite(a, b)->dim() == a->dim() * b->dim());
        }

        std::vector<VertexId> s;
        for (VertexId v = 0; v < a->vertex_count(); ++v)
            if (rng() % 2)
                s.push_back(v);
        std::size_t blocks = 0;
        for (VertexId u : s)
            for (VertexId v : s)
                blocks += a->block(u, v).size();
        CHECK(corner_basis(*a, s).size() == blocks);
    }
}
