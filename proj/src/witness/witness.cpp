#include <stdexcept>

#include "qred/witness.hpp"

namespace qred {

Rep restrict(const Bimodule &m, BimoduleSide side) {
    return side == BimoduleSide::Left ? restrict_left(m) : restrict_right(m);
}

bool is_projective(const Rep &m) { return projective_cover(m).projective.dim() == m.dim(); }

Projectivity one_sided_projectivity(const WitnessPair &pair) {
    return {is_projective(restrict_left(pair.m)), is_projective(restrict_right(pair.m)),
            is_projective(restrict_left(pair.n)), is_projective(restrict_right(pair.n))};
}

Bimodule bimodule_syzygy(const AlgebraHandle &a, std::size_t n) {
    Bimodule reg = regular_bimodule(a);
    if (n == 0)
        return reg;
    Resolution res = minimal_resolution(reg.rep, n);
    if (res.steps.size() < n) {
        if (!res.terminated)
            throw ResourceLimit("bimodule syzygy " + std::to_string(n) + " exceeds the dimension cap");
        return {a, a, zero_rep(reg.rep.algebra)};
    }
    return {a, a, res.syzygy(n)};
}

namespace {

Outcome combine(const Projectivity &p, Answer x, Answer y) {
    if (!p.all() || x == Answer::No || y == Answer::No)
        return Outcome::Fails;
    if (x == Answer::Inconclusive || y == Answer::Inconclusive)
        return Outcome::Inconclusive;
    return Outcome::Holds;
}

} // namespace

LevelReport verify_level(const WitnessPair &pair, std::uint64_t seed) {
    const Bimodule &m = pair.m;
    const Bimodule &n = pair.n;
    if (!same_algebra(*m.right, *n.left) || !same_algebra(*m.left, *n.right))
        throw std::invalid_argument("verify_level: the bimodules do not match crosswise");
    LevelReport r;
    r.level = pair.level;
    r.projectivity = one_sided_projectivity(pair);
    try {
        Bimodule mn = tensor_bimodules(m, n);
        Bimodule omega_a = bimodule_syzygy(m.left, pair.level);
        r.iso_a = stable_isomorphic(mn.rep, rebase(omega_a.rep, mn.rep.algebra), seed).answer;
        Bimodule nm = tensor_bimodules(n, m);
        Bimodule omega_b = bimodule_syzygy(m.right, pair.level);
        r.iso_b = stable_isomorphic(nm.rep, rebase(omega_b.rep, nm.rep.algebra), seed).answer;
    } catch (const ResourceLimit &) {
        r.iso_a = r.iso_a == Answer::No ? Answer::No : Answer::Inconclusive;
        r.iso_b = Answer::Inconclusive;
    }
    r.verdict = combine(r.projectivity, r.iso_a, r.iso_b);
    return r;
}

LevelSearch search_level(const Bimodule &m, const Bimodule &n, std::size_t n_max, std::uint64_t seed) {
    LevelSearch out;
    for (std::size_t level = 0; level <= n_max; ++level) {
        WitnessPair pair{m, n, level};
        out.reports.push_back(verify_level(pair, seed));
        if (out.reports.back().verdict != Outcome::Holds)
            continue;
        if (verify_level(pair, seed + 1).verdict == Outcome::Holds) {
            out.level = level;
            return out;
        }
    }
    return out;
}

std::size_t default_level_max(const AlgebraHandle &a) { return 2 * a->enveloping()->loewy_length(); }

IdempotentCandidate idempotent_candidate(const AlgebraHandle &a, const std::vector<VertexId> &kept) {
    IdempotentCandidate c;
    c.corner = corner_presentation(a, kept);
    c.m = corner_left_bimodule(c.corner);
    c.n = corner_right_bimodule(c.corner);
    return c;
}

} // namespace qred
