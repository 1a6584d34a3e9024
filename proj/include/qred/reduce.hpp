#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qred/homcalc.hpp"

namespace qred {

enum class RelationSide { Starts, Ends };
std::string to_string(RelationSide s);

struct EligibleVertex {
    VertexId vertex;
    RelationSide side;
    bool operator==(const EligibleVertex &) const = default;
};

/// Vertices at which no minimal relation starts (or ends), ordered by vertex
/// and then side, starts first.
std::vector<EligibleVertex> eligible_vertices(const Algebra &a);

/// The corner eAe for e the sum of the trivial paths at `kept`.
Subquotient corner_presentation(const AlgebraHandle &a, const std::vector<VertexId> &kept);

enum class StepKind { VertexRemoval, Corner, HomologicalQuotient, TriangularSplit };
std::string to_string(StepKind k);

struct Condition {
    std::string name;
    Status status = Status::Evidence;
    std::string value;
};

struct ReductionStep {
    StepKind kind = StepKind::VertexRemoval;
    std::string variant;
    AlgebraHandle input;
    AlgebraHandle output;
    std::vector<Condition> conditions;

    /// Refuted if a condition is refuted, Certified if all are, Evidence otherwise.
    Status status() const;
};

struct ReductionTrace {
    AlgebraHandle input;
    std::vector<ReductionStep> steps;

    const AlgebraHandle &terminal() const { return steps.empty() ? input : steps.back().output; }
    /// Some step rests on evidence rather than certified conditions.
    bool conditional() const;
};

/// Throws std::invalid_argument when `v` is not eligible or is the only vertex.
ReductionStep remove_vertex(const AlgebraHandle &a, VertexId v);

/// Removes the lowest eligible vertex (starts side first) until none is left.
ReductionTrace reduce_fixpoint(const AlgebraHandle &a);
/// Continues an existing trace from its terminal algebra.
void reduce_fixpoint(ReductionTrace &trace);

/// Hypotheses checked for a corner step. Projective: pd of every removed
/// simple and pd of eA over eAe. Injective: id of every removed simple and pd
/// of Ae over eAe. BoundedTor: Ae (x)L_eAe eA bounded, and pd or id of every
/// removed simple.
enum class CornerVariant { Projective, Injective, BoundedTor };
std::string to_string(CornerVariant v);

/// Conditions for replacing A by its corner on `kept`; the step's output is
/// the presented corner.
ReductionStep corner_conditions(const AlgebraHandle &a, const std::vector<VertexId> &kept, std::size_t bound,
                                CornerVariant variant);

/// Conditions for replacing A by A/J; the step's output is the presented quotient.
ReductionStep quotient_conditions(const AlgebraHandle &a, const std::vector<Element> &generators,
                                  std::size_t bound);

/// First vertex bipartition (by bitmask of the discarded side) with paths in
/// at most one direction whose discarded block has finite projective
/// dimension as a bimodule over itself within `bound`.
std::optional<ReductionStep> triangular_split(const AlgebraHandle &a, std::size_t bound);

enum class Property { SyzygyFinite, IgusaTodorov, InjectivesGenerate, ProjectivesCogenerate };
enum class Outcome { Holds, Fails, Inconclusive };
std::string to_string(Property p);
std::string to_string(Outcome o);
std::optional<Property> parse_property(const std::string &name);
const std::vector<Property> &all_properties();

struct PropertyCertificate {
    Property property = Property::SyzygyFinite;
    Outcome outcome = Outcome::Inconclusive;
    std::string rule;                  // e.g. "monomial (terminal)"; empty when inconclusive
    bool conditional = false;
};

/// Base certificates for a single algebra, evaluated once and reused.
struct CertificateFacts {
    bool finite_gldim = false;
    bool monomial = false;
    bool serial = false;
    bool gorenstein = false;
    bool self_injective = false;

    static CertificateFacts of(const AlgebraHandle &a, std::size_t bound);
    /// The rule certifying `p`, if any.
    std::optional<std::string> rule_for(Property p) const;
};

struct Verdict {
    PropertyCertificate certificate;
    ReductionTrace trace;
};

/// Applies `prefix` (caller-supplied steps, already computed) and then the
/// vertex-removal fixpoint, and reads the certificate table on the terminal
/// algebra, falling back to the input algebra itself.
Verdict property_verdict(const AlgebraHandle &a, Property p, std::size_t bound,
                         const std::vector<ReductionStep> &prefix = {});

} // namespace qred
