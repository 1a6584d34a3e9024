#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qred/bimodule.hpp"
#include "qred/rep.hpp"

namespace qred {

/// Dimensions of Tor_0 .. Tor_n of X (x)_A Y, X a module over A^op, from a
/// minimal projective resolution of Y. `resolved` receives whether pd Y <= n.
/// The list is shorter when the resolution stopped at the syzygy dimension cap.
std::vector<std::size_t> tor_bounded(const Rep &x, const Rep &y, std::size_t n, bool *resolved = nullptr);

BoundedDim gldim_bounded(const AlgebraHandle &a, std::size_t n);

/// Injective dimension of A as a left and as a right module over itself.
std::pair<BoundedDim, BoundedDim> gorenstein_bounded(const AlgebraHandle &a, std::size_t n);

/// counts[s][t] = number of minimal relations from s to t, i.e. the
/// dimension of e_t (I / (I J + J I)) e_s for the arrow ideal J of kQ.
std::vector<std::vector<std::size_t>> minimal_relation_counts(const Algebra &a);

struct BongartzSides {
    bool no_relation_starts = true;
    bool no_relation_ends = true;
};

BongartzSides bongartz(const Algebra &a, VertexId v);

enum class Status { Certified, Evidence, Refuted };
std::string to_string(Status s);

/// The quotient A/J by a two-sided ideal contained in rad A plus the
/// idempotents of the killed vertices.
struct Quotient {
    Subquotient presented;             // e (A/J) e for e the surviving vertices
    Matrix ideal;                      // rref rows spanning J
    std::vector<VertexId> killed;      // vertices with e_v in J
    Rep left;                          // A/J as a left A-module
    Rep right;                         // A/J as a right A-module (over A^op)
    Bimodule ideal_bimodule;           // J as an A-A-bimodule
};

/// Throws std::invalid_argument if J is not contained in rad A plus the
/// span of the idempotents it contains, or if J = A.
Quotient quotient_by_ideal(const AlgebraHandle &a, const std::vector<Element> &generators);

struct IdealCheck {
    Status status = Status::Evidence;
    std::size_t bound = 0;
    std::optional<std::size_t> refuted_degree;
    std::vector<std::size_t> tor;      // Tor_0 .. Tor_k of A/J (x)_A A/J, k <= bound
};

IdealCheck homological_ideal_check(const Quotient &q, std::size_t n);
IdealCheck homological_ideal_check(const AlgebraHandle &a, const std::vector<Element> &generators,
                                   std::size_t n);

BoundedDim bimodule_pd_bounded(const Bimodule &m, std::size_t n);

struct DerivedTensorCheck {
    Status status = Status::Evidence;
    std::size_t bound = 0;
    std::vector<std::size_t> tor;      // Tor_i^{eAe}(Ae, eA), i = 0 .. bound
};

/// Boundedness of Ae (x)^L_{eAe} eA for the corner on `kept`.
DerivedTensorCheck derived_tensor_bounded(const Subquotient &corner, std::size_t n);

/// Every indecomposable projective of A and of A^op is uniserial.
bool serial_check(const AlgebraHandle &a);

} // namespace qred
