#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qred/matrix.hpp"
#include "qred/presentation.hpp"

namespace qred {

class Algebra;
using AlgebraHandle = std::shared_ptr<const Algebra>;

/// Raised when no empty level of irreducible paths is found within the bound.
class CompletionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rewriting rule: `lead` rewrites to `tail` (all tail paths are smaller).
struct Rule {
    Path lead;
    Element tail;
};

/// Sparse coordinate vector over the normal basis.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Bookkeeping for algebras built as A (x) B^op.
struct ProductInfo {
    AlgebraHandle left;
    AlgebraHandle right;

    std::size_t right_vertices() const;
    VertexId vertex(VertexId v, VertexId w) const;
    ArrowId left_arrow(ArrowId a, VertexId w) const;
    ArrowId right_arrow(VertexId v, ArrowId b) const;
};

/// A completed presentation of a finite-dimensional algebra A = kQ/I: the
/// reduced rewriting system, the normal-path basis and multiplication.
/// Immutable once built; derived data (opposite, structure constants) is
/// computed lazily and cached.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    const Presentation &presentation() const { return pres_; }
    const Quiver &quiver() const { return pres_.quiver; }
    const Field &field() const { return pres_.field; }
    const std::string &name() const { return pres_.name; }
    std::size_t vertex_count() const { return pres_.quiver.vertices.size(); }
    std::size_t arrow_count() const { return pres_.quiver.arrows.size(); }

    const std::vector<Rule> &rules() const { return rules_; }
    const std::vector<Path> &basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t loewy_length() const { return loewy_length_; }
    bool is_monomial() const;
    const std::optional<ProductInfo> &product() const { return product_; }

    std::optional<std::size_t> index_of(const Path &p) const;
    std::size_t vertex_index(VertexId v) const { return v; }
    std::size_t arrow_index(ArrowId a) const { return arrow_basis_[a]; }
    /// Normal-basis indices of paths source -> target, in basis order.
    const std::vector<std::size_t> &block(VertexId source, VertexId target) const;
    std::vector<std::size_t> paths_from(VertexId source) const;
    std::vector<std::size_t> paths_to(VertexId target) const;

    Element normal_form(const Element &x) const;
    Element to_element(const Vec &coords) const;
    Vec to_coords(const Element &x) const;

    /// Structure constants: normal form of basis[i] * basis[j].
    const SparseVec &product(std::size_t i, std::size_t j) const;
    Vec multiply(const Vec &x, const Vec &y) const;
    /// Matrix of y |-> x*y (left = true) or y |-> y*x restricted to columns
    /// `from` and rows `to` of the normal basis.
    Matrix multiplication_matrix(const Vec &x, bool left, const std::vector<std::size_t> &from,
                                 const std::vector<std::size_t> &to) const;

    AlgebraHandle opposite() const;
    AlgebraHandle enveloping() const;

    std::size_t normal_paths_of_length(std::size_t len) const;

private:
    friend AlgebraHandle complete(const Presentation &p, std::size_t degree_bound);
    friend AlgebraHandle tensor_with_opposite(const AlgebraHandle &a, const AlgebraHandle &b);
    Algebra() = default;
    void finish();

    Presentation pres_;
    std::vector<Rule> rules_;
    std::unordered_map<std::string, std::size_t> rule_index_;
    std::vector<std::size_t> lead_lengths_;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> index_;
    std::vector<std::size_t> arrow_basis_;
    std::vector<std::vector<std::vector<std::size_t>>> blocks_;
    std::size_t loewy_length_ = 1;
    std::optional<ProductInfo> product_;

    mutable std::once_flag table_once_;
    mutable std::vector<SparseVec> table_;
    mutable std::mutex opposite_mutex_;
    mutable std::weak_ptr<const Algebra> opposite_weak_;
    mutable AlgebraHandle opposite_strong_;
};

/// Completes the rewriting system of `p` with overlaps of length up to
/// `degree_bound` (extended automatically as far as needed to certify the
/// irreducible-path level found). Throws std::invalid_argument when `p` does
/// not validate and CompletionError when every level up to the bound still
/// holds irreducible paths.
AlgebraHandle complete(const Presentation &p, std::size_t degree_bound);

/// The presented algebra A (x) B^op on the product quiver; with B = A this is
/// the enveloping algebra.
AlgebraHandle tensor_with_opposite(const AlgebraHandle &a, const AlgebraHandle &b);

AlgebraHandle opposite(const AlgebraHandle &a);

/// Normal paths whose source and target both lie in `vertices` (a basis of eAe).
std::vector<std::size_t> corner_basis(const Algebra &a, const std::vector<VertexId> &vertices);

/// Structural equality of two algebras' quivers with identical vertex/arrow
/// indexing; modules may be moved between such algebras.
bool same_algebra(const Algebra &a, const Algebra &b);

/// Span of the two-sided ideal generated by `generators`, as rref rows over
/// the normal basis (each row lies in a single e_u A e_v block).
Matrix ideal_span(const Algebra &a, const std::vector<Element> &generators);

/// The algebra e (A/J) e for e the sum of the kept vertices, presented by a
/// quiver whose arrows are chosen normal paths of A, together with the data
/// needed to relate it back to A.
struct Subquotient {
    AlgebraHandle algebra;
    AlgebraHandle ambient;
    std::vector<VertexId> kept;              // ambient vertex for each new vertex
    std::vector<Vec> arrow_realizations;     // ambient coordinates of each new arrow
    std::vector<Path> arrow_paths;           // the chosen ambient normal path
    Matrix ideal;                            // rows spanning J (possibly empty)
};

/// Presents e(A/J)e. `ideal_rows` may have zero rows (J = 0). Vertices whose
/// idempotent lies in J must not be kept.
Subquotient present_subquotient(const AlgebraHandle &a, const std::vector<VertexId> &kept,
                                const Matrix &ideal_rows, const std::string &name);

} // namespace qred
