#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qred/algebra.hpp"

namespace qred {

/// A finite-dimensional left module given as a representation of the quiver:
/// a vector space per vertex and, per arrow a: s -> t, a dim(t) x dim(s)
/// matrix.
struct Rep {
    AlgebraHandle algebra;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    std::size_t dim() const;
    bool is_zero() const { return dim() == 0; }
    const Field &field() const { return algebra->field(); }
    /// Action of the normal path `basis()[i]` of the algebra, for every i.
    std::vector<Matrix> path_matrices() const;
    /// Matrix of an arbitrary path (written word, right-to-left).
    Matrix path_matrix(const Path &p) const;
};

/// A morphism of representations: one dim_N(v) x dim_M(v) block per vertex.
struct RepMap {
    std::vector<Matrix> blocks;
};

/// Per-vertex subspaces, each given by a matrix whose columns span it.
using Subspaces = std::vector<Matrix>;

enum class ModuleKind { Simple, Projective, Injective };

Rep zero_rep(const AlgebraHandle &a);
Rep simple(const AlgebraHandle &a, VertexId v);
/// A e_v on the normal paths with source v.
Rep projective(const AlgebraHandle &a, VertexId v);
/// The dual of e_v A, built directly on the dual basis of paths ending at v.
Rep injective(const AlgebraHandle &a, VertexId v);
/// Throws std::invalid_argument on an unknown vertex.
Rep standard_module(const AlgebraHandle &a, ModuleKind kind, VertexId v);
/// A as a left module over itself.
Rep regular(const AlgebraHandle &a);
/// A as a right module over itself, i.e. a left module over the opposite.
Rep right_regular(const AlgebraHandle &a);

/// Index of the first rewriting rule not annihilating `m`, if any.
std::optional<std::size_t> violated_rule(const Rep &m);
/// Throws std::invalid_argument on shape mismatch or a relation violation.
void check_rep(const Rep &m);

Rep direct_sum(const Rep &m, const Rep &n);
Rep direct_sum(const AlgebraHandle &a, const std::vector<Rep> &parts);
/// Standard duality D = Hom_k(-, k): a module over the opposite algebra.
Rep dual(const Rep &m);
/// Moves `m` onto a structurally identical algebra handle.
Rep rebase(const Rep &m, const AlgebraHandle &a);

/// The subrepresentation spanned per vertex by the columns of `basis`, which
/// must be closed under the arrows and have independent columns.
Rep subrep(const Rep &m, const Subspaces &basis);
/// m / U for a subrepresentation U (columns need not be independent).
/// `projections` receives the per-vertex quotient maps when non-null.
Rep quotient_rep(const Rep &m, const Subspaces &sub, std::vector<Matrix> *projections = nullptr);

bool is_hom(const RepMap &f, const Rep &m, const Rep &n);
RepMap compose(const RepMap &g, const RepMap &f);
RepMap identity_map(const Rep &m);
std::vector<RepMap> hom_basis(const Rep &m, const Rep &n);
std::size_t hom_dim(const Rep &m, const Rep &n);
/// Kernel of f as per-vertex column bases.
Subspaces kernel_spaces(const RepMap &f, const Rep &m);

/// rad M: per vertex, the span of the images of arrows into it.
Subspaces radical(const Rep &m);
/// soc M: per vertex, the common kernel of the arrows leaving it.
Subspaces socle(const Rep &m);
/// Dimension vectors of rad^k M / rad^{k+1} M, k = 0, 1, ...
std::vector<std::vector<std::size_t>> radical_layers(const Rep &m);
/// Dimension vectors of soc^{k+1} M / soc^k M, k = 0, 1, ...
std::vector<std::vector<std::size_t>> socle_layers(const Rep &m);
std::vector<std::size_t> top_dims(const Rep &m);

struct ProjectiveCover {
    Rep projective;
    RepMap map;                       // projective -> module
    std::vector<VertexId> tops;       // vertex of each indecomposable summand
    std::vector<Vec> generators;      // image of each summand's top element
};

/// Minimal projective cover; the zero module has the zero cover.
ProjectiveCover projective_cover(const Rep &m);

struct ResolutionStep {
    ProjectiveCover cover;            // P_i -> Omega^i(M)
    Subspaces kernel;                 // Omega^{i+1}(M) inside P_i
    Rep syzygy;                       // Omega^{i+1}(M)
};

struct Resolution {
    Rep module;
    std::vector<ResolutionStep> steps;
    /// Some Omega^i(M) (i <= steps) was zero.
    bool terminated = false;

    /// Omega^i(M); i = 0 is the module itself.
    const Rep &syzygy(std::size_t i) const { return i == 0 ? module : steps[i - 1].syzygy; }
    /// Differential P_i -> P_{i-1} (i >= 1) in projective coordinates.
    RepMap differential(std::size_t i) const;
};

/// Syzygies above this dimension are not computed. Resolutions that reach
/// it stop early with `terminated` false, and bounded dimensions report the
/// depth actually reached as their bound.
inline constexpr std::size_t syzygy_dim_cap = 1000;

/// Raised when a requested syzygy would exceed the dimension cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Computes Omega^1 .. Omega^steps, stopping early at a zero syzygy or at a
/// syzygy larger than `dim_cap`.
Resolution minimal_resolution(const Rep &m, std::size_t steps, std::size_t dim_cap = syzygy_dim_cap);

/// Exact(d), or AtLeast(bound + 1) when no terminating resolution was found.
struct BoundedDim {
    enum class Kind { Exact, AtLeast };
    Kind kind = Kind::Exact;
    std::size_t value = 0;
    std::size_t bound = 0;

    bool exact() const { return kind == Kind::Exact; }
    static BoundedDim exact_value(std::size_t v, std::size_t bound) { return {Kind::Exact, v, bound}; }
    static BoundedDim at_least(std::size_t bound) { return {Kind::AtLeast, bound + 1, bound}; }
    std::string to_string() const;
    bool operator==(const BoundedDim &) const = default;
};

enum class Side { Projective, Injective };

BoundedDim pd_bounded(const Rep &m, std::size_t bound);
/// Side::Injective is the projective dimension of dual(m) over the opposite.
BoundedDim pd_bounded(const Rep &m, std::size_t bound, Side side);
/// Injective dimension by injective envelopes and cosyzygies, without duality.
BoundedDim id_by_coresolution(const Rep &m, std::size_t bound);

/// X (x)_A Y for a right module X (a Rep over the opposite of Y's algebra).
std::size_t tensor_dim(const Rep &x, const Rep &y);

enum class Answer { Yes, No, Inconclusive };
std::string to_string(Answer a);

struct IsoResult {
    Answer answer = Answer::Inconclusive;
    std::optional<RepMap> witness;
    std::string invariant;            // separating invariant when No
};

/// Invariant battery followed by a seeded random search for an invertible
/// homomorphism. Yes always carries an exactly verified witness.
IsoResult is_isomorphic(const Rep &m, const Rep &n, std::uint64_t seed = 1);

struct SplitResult {
    Rep core;
    std::vector<VertexId> stripped;   // indecomposable projectives split off
};

SplitResult split_projective_summands(const Rep &m);
IsoResult stable_isomorphic(const Rep &m, const Rep &n, std::uint64_t seed = 1);

} // namespace qred
