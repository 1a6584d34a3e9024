#include <algorithm>
#include <random>
#include <stdexcept>

#include "qred/rep.hpp"

namespace qred {

namespace {

constexpr std::size_t kRetries = 20;
constexpr double kExhaustiveLimit = 1048576.0; // 2^20 candidate maps

RepMap combine(const std::vector<RepMap> &basis, const std::vector<Scalar> &coeffs, const Rep &m, const Rep &n) {
    const Field &f = m.field();
    RepMap out;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        out.blocks.emplace_back(f, n.dims[v], m.dims[v]);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (Field::is_zero(coeffs[i]))
            continue;
        for (std::size_t v = 0; v < out.blocks.size(); ++v)
            out.blocks[v] = out.blocks[v] + basis[i].blocks[v].scaled(coeffs[i]);
    }
    return out;
}

bool invertible(const RepMap &f) {
    return std::all_of(f.blocks.begin(), f.blocks.end(), [](const Matrix &b) { return is_invertible(b); });
}

IsoResult no(std::string invariant) { return {Answer::No, std::nullopt, std::move(invariant)}; }

} // namespace

IsoResult is_isomorphic(const Rep &m, const Rep &n, std::uint64_t seed) {
    if (!same_algebra(*m.algebra, *n.algebra))
        throw std::invalid_argument("is_isomorphic: modules over different algebras");
    if (m.dims != n.dims)
        return no("dimension vector");
    if (m.is_zero())
        return {Answer::Yes, identity_map(m), ""};
    if (top_dims(m) != top_dims(n))
        return no("dim Hom(-, S_v)");
    Subspaces sm = socle(m), sn = socle(n);
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        if (sm[v].cols() != sn[v].cols())
            return no("dim Hom(S_v, -)");
    if (radical_layers(m) != radical_layers(n))
        return no("radical layers");
    if (socle_layers(m) != socle_layers(n))
        return no("socle layers");
    std::size_t end_m = hom_dim(m, m);
    if (end_m != hom_dim(n, n))
        return no("dim End");
    std::vector<RepMap> basis = hom_basis(m, n);
    if (basis.size() != end_m)
        return no("dim Hom(M, N) vs dim End(M)");
    if (hom_dim(n, m) != end_m)
        return no("dim Hom(N, M) vs dim End(N)");

    const Field &f = m.field();
    std::mt19937_64 rng(seed);
    auto accept = [&](const std::vector<Scalar> &coeffs) -> std::optional<IsoResult> {
        RepMap cand = combine(basis, coeffs, m, n);
        if (invertible(cand) && is_hom(cand, m, n))
            return IsoResult{Answer::Yes, std::move(cand), ""};
        return std::nullopt;
    };

    if (f.is_rational()) {
        for (std::size_t attempt = 0; attempt < kRetries; ++attempt) {
            long bound = static_cast<long>(attempt) + 1;
            std::uniform_int_distribution<long> dist(-bound, bound);
            std::vector<Scalar> coeffs;
            for (std::size_t i = 0; i < basis.size(); ++i)
                coeffs.push_back(f.from_int(dist(rng)));
            if (auto r = accept(coeffs))
                return *r;
        }
        return {Answer::Inconclusive, std::nullopt, ""};
    }

    const std::uint32_t p = f.characteristic();
    double space = 1.0;
    for (std::size_t i = 0; i < basis.size() && space <= kExhaustiveLimit; ++i)
        space *= p;
    if (space <= kExhaustiveLimit) {
        std::vector<std::uint32_t> digits(basis.size(), 0);
        for (;;) {
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == p)
                digits[i++] = 0;
            if (i == digits.size())
                break;
            std::vector<Scalar> coeffs;
            for (auto d : digits)
                coeffs.push_back(f.from_int(static_cast<long>(d)));
            if (auto r = accept(coeffs))
                return *r;
        }
        return no("no invertible homomorphism (exhaustive search)");
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::size_t attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            coeffs.push_back(f.from_int(static_cast<long>(dist(rng))));
        if (auto r = accept(coeffs))
            return *r;
    }
    return {Answer::Inconclusive, std::nullopt, ""};
}

SplitResult split_projective_summands(const Rep &m) {
    const AlgebraHandle &a = m.algebra;
    SplitResult out{m, {}};
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < a->vertex_count() && !changed; ++v) {
            if (out.core.dims[v] == 0)
                continue;
            Rep p = projective(a, v);
            // Row 0 of a map into P_v at v is the coefficient of e_v; a nonzero
            // entry makes the map a split epimorphism.
            for (const RepMap &g : hom_basis(out.core, p)) {
                if (g.blocks[v].row(0) == Vec(out.core.dims[v]))
                    continue;
                out.core = subrep(out.core, kernel_spaces(g, out.core));
                out.stripped.push_back(v);
                changed = true;
                break;
            }
        }
    }
    std::sort(out.stripped.begin(), out.stripped.end());
    return out;
}

IsoResult stable_isomorphic(const Rep &m, const Rep &n, std::uint64_t seed) {
    return is_isomorphic(split_projective_summands(m).core, split_projective_summands(n).core, seed);
}

} // namespace qred
