#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qred/bimodule.hpp"
#include "qred/reduce.hpp"

namespace qred {

/// An A-B-bimodule M, a B-A-bimodule N and a level n.
struct WitnessPair {
    Bimodule m;
    Bimodule n;
    std::size_t level = 0;
};

enum class BimoduleSide { Left, Right };

/// The one-sided module underlying a bimodule: over A for Left, over B^op for Right.
Rep restrict(const Bimodule &m, BimoduleSide side);

bool is_projective(const Rep &m);

struct Projectivity {
    bool m_left = false;   // _A M
    bool m_right = false;  // M_B
    bool n_left = false;   // _B N
    bool n_right = false;  // N_A
    bool all() const { return m_left && m_right && n_left && n_right; }
};

Projectivity one_sided_projectivity(const WitnessPair &pair);

/// The n-th minimal syzygy of A over its enveloping algebra; n = 0 gives A.
/// Throws ResourceLimit when an intermediate syzygy exceeds the dimension cap.
Bimodule bimodule_syzygy(const AlgebraHandle &a, std::size_t n);

struct LevelReport {
    std::size_t level = 0;
    Projectivity projectivity;
    Answer iso_a = Answer::Inconclusive;  // M (x)_B N ~ Omega^n(A), stably
    Answer iso_b = Answer::Inconclusive;  // N (x)_A M ~ Omega^n(B), stably
    Outcome verdict = Outcome::Inconclusive;
};

LevelReport verify_level(const WitnessPair &pair, std::uint64_t seed = 1);

struct LevelSearch {
    std::optional<std::size_t> level;
    std::vector<LevelReport> reports;
};

/// Scans n = 0 .. n_max; a positive answer is re-verified with another seed.
LevelSearch search_level(const Bimodule &m, const Bimodule &n, std::size_t n_max, std::uint64_t seed = 1);

/// Twice the Loewy length of the enveloping algebra.
std::size_t default_level_max(const AlgebraHandle &a);

struct IdempotentCandidate {
    Subquotient corner;
    Bimodule m;  // A e as an A-eAe-bimodule
    Bimodule n;  // e A as an eAe-A-bimodule
};

IdempotentCandidate idempotent_candidate(const AlgebraHandle &a, const std::vector<VertexId> &kept);

} // namespace qred
