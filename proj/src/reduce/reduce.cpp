#include <algorithm>
#include <stdexcept>

#include "qred/reduce.hpp"

namespace qred {

std::string to_string(RelationSide s) { return s == RelationSide::Starts ? "starts" : "ends"; }

std::string to_string(StepKind k) {
    switch (k) {
    case StepKind::VertexRemoval:
        return "vertex_removal";
    case StepKind::Corner:
        return "corner";
    case StepKind::HomologicalQuotient:
        return "homological_quotient";
    case StepKind::TriangularSplit:
        return "triangular_split";
    }
    return "corner";
}

std::string to_string(CornerVariant v) {
    switch (v) {
    case CornerVariant::Projective:
        return "projective";
    case CornerVariant::Injective:
        return "injective";
    case CornerVariant::BoundedTor:
        return "bounded-tor";
    }
    return "projective";
}

Status ReductionStep::status() const {
    bool all = true;
    for (const Condition &c : conditions) {
        if (c.status == Status::Refuted)
            return Status::Refuted;
        all = all && c.status == Status::Certified;
    }
    return all ? Status::Certified : Status::Evidence;
}

bool ReductionTrace::conditional() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const ReductionStep &s) { return s.status() != Status::Certified; });
}

std::vector<EligibleVertex> eligible_vertices(const Algebra &a) {
    auto counts = minimal_relation_counts(a);
    std::vector<EligibleVertex> out;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        bool starts = true, ends = true;
        for (VertexId u = 0; u < a.vertex_count(); ++u) {
            starts = starts && counts[v][u] == 0;
            ends = ends && counts[u][v] == 0;
        }
        if (starts)
            out.push_back({v, RelationSide::Starts});
        if (ends)
            out.push_back({v, RelationSide::Ends});
    }
    return out;
}

Subquotient corner_presentation(const AlgebraHandle &a, const std::vector<VertexId> &kept) {
    std::string name = a->name() + "_e(";
    for (std::size_t i = 0; i < kept.size(); ++i)
        name += (i ? "," : "") + a->quiver().vertices.at(kept[i]);
    name += ")";
    return present_subquotient(a, kept, Matrix(a->field(), 0, a->dim()), name);
}

namespace {

std::vector<VertexId> complement(const Algebra &a, const std::vector<VertexId> &kept) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (std::find(kept.begin(), kept.end(), v) == kept.end())
            out.push_back(v);
    return out;
}

Condition finite(std::string name, const BoundedDim &d) {
    return {std::move(name), d.exact() ? Status::Certified : Status::Evidence, d.to_string()};
}

std::string vname(const Algebra &a, VertexId v) { return a.quiver().vertices[v]; }

} // namespace

ReductionStep remove_vertex(const AlgebraHandle &a, VertexId v) {
    if (v >= a->vertex_count())
        throw std::invalid_argument("unknown vertex index " + std::to_string(v));
    if (a->vertex_count() == 1)
        throw std::invalid_argument("cannot remove the only vertex");
    auto eligible = eligible_vertices(*a);
    auto it = std::find_if(eligible.begin(), eligible.end(), [&](const EligibleVertex &e) { return e.vertex == v; });
    if (it == eligible.end())
        throw std::invalid_argument("vertex " + vname(*a, v) + " is not eligible: relations start and end there");

    std::vector<VertexId> kept;
    for (VertexId u = 0; u < a->vertex_count(); ++u)
        if (u != v)
            kept.push_back(u);
    ReductionStep step;
    step.kind = StepKind::VertexRemoval;
    step.variant = to_string(it->side);
    step.input = a;
    step.output = corner_presentation(a, kept).algebra;
    std::string bound = it->side == RelationSide::Starts ? "pd" : "id";
    step.conditions.push_back({"no_relation_" + to_string(it->side) + "(" + vname(*a, v) + ")", Status::Certified,
                               bound + "(S_" + vname(*a, v) + ") <= 1"});
    return step;
}

void reduce_fixpoint(ReductionTrace &trace) {
    for (;;) {
        const AlgebraHandle &cur = trace.terminal();
        if (cur->vertex_count() <= 1)
            return;
        auto eligible = eligible_vertices(*cur);
        if (eligible.empty())
            return;
        trace.steps.push_back(remove_vertex(cur, eligible.front().vertex));
    }
}

ReductionTrace reduce_fixpoint(const AlgebraHandle &a) {
    ReductionTrace trace{a, {}};
    reduce_fixpoint(trace);
    return trace;
}

ReductionStep corner_conditions(const AlgebraHandle &a, const std::vector<VertexId> &kept, std::size_t bound,
                                CornerVariant variant) {
    Subquotient corner = corner_presentation(a, kept);
    ReductionStep step;
    step.kind = StepKind::Corner;
    step.variant = to_string(variant);
    step.input = a;
    step.output = corner.algebra;
    std::vector<VertexId> removed = complement(*a, kept);

    switch (variant) {
    case CornerVariant::Projective:
        for (VertexId v : removed)
            step.conditions.push_back(finite("pd(S_" + vname(*a, v) + ")", pd_bounded(simple(a, v), bound)));
        step.conditions.push_back(
            finite("pd_eAe(eA)", pd_bounded(restrict_left(corner_right_bimodule(corner)), bound)));
        break;
    case CornerVariant::Injective:
        for (VertexId v : removed)
            step.conditions.push_back(
                finite("id(S_" + vname(*a, v) + ")", pd_bounded(simple(a, v), bound, Side::Injective)));
        step.conditions.push_back(
            finite("pd_eAe(Ae)", pd_bounded(restrict_right(corner_left_bimodule(corner)), bound)));
        break;
    case CornerVariant::BoundedTor: {
        DerivedTensorCheck dt = derived_tensor_bounded(corner, bound);
        std::string dims;
        for (std::size_t i = 0; i < dt.tor.size(); ++i)
            dims += (i ? "," : "") + std::to_string(dt.tor[i]);
        step.conditions.push_back({"bounded(Ae (x)L eA)", dt.status, "Tor dims [" + dims + "]"});
        for (VertexId v : removed) {
            BoundedDim pd = pd_bounded(simple(a, v), bound);
            BoundedDim id = pd_bounded(simple(a, v), bound, Side::Injective);
            step.conditions.push_back({"pd or id(S_" + vname(*a, v) + ")",
                                       pd.exact() || id.exact() ? Status::Certified : Status::Evidence,
                                       "pd " + pd.to_string() + ", id " + id.to_string()});
        }
        break;
    }
    }
    return step;
}

ReductionStep quotient_conditions(const AlgebraHandle &a, const std::vector<Element> &generators,
                                  std::size_t bound) {
    Quotient q = quotient_by_ideal(a, generators);
    ReductionStep step;
    step.kind = StepKind::HomologicalQuotient;
    step.input = a;
    step.output = q.presented.algebra;
    IdealCheck check = homological_ideal_check(q, bound);
    std::string value = check.refuted_degree ? "Tor_" + std::to_string(*check.refuted_degree) + " != 0"
                                             : "Tor_i = 0 for 1 <= i <= " + std::to_string(bound);
    step.conditions.push_back({"homological_ideal", check.status, value});
    step.conditions.push_back(finite("pd_Ae(J)", bimodule_pd_bounded(q.ideal_bimodule, bound)));
    return step;
}

namespace {

// Some normal path runs from a vertex of `from` to a vertex of `to`.
bool has_paths(const Algebra &a, const std::vector<VertexId> &from, const std::vector<VertexId> &to) {
    for (VertexId s : from)
        for (VertexId t : to)
            if (!a.block(s, t).empty())
                return true;
    return false;
}

} // namespace

std::optional<ReductionStep> triangular_split(const AlgebraHandle &a, std::size_t bound) {
    std::size_t n = a->vertex_count();
    if (n < 2 || n > 16)
        return std::nullopt;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<VertexId> dropped, kept;
        for (VertexId v = 0; v < n; ++v)
            ((mask >> v) & 1 ? dropped : kept).push_back(v);
        if (has_paths(*a, dropped, kept) && has_paths(*a, kept, dropped))
            continue;
        Subquotient block = corner_presentation(a, dropped);
        BoundedDim pd = bimodule_pd_bounded(regular_bimodule(block.algebra), bound);
        if (!pd.exact())
            continue;
        ReductionStep step;
        step.kind = StepKind::TriangularSplit;
        step.input = a;
        step.output = corner_presentation(a, kept).algebra;
        std::string names;
        for (VertexId v : dropped)
            names += (names.empty() ? "" : ",") + vname(*a, v);
        step.variant = "discard(" + names + ")";
        step.conditions.push_back({"no paths in one direction", Status::Certified, "block triangular"});
        step.conditions.push_back(finite("pd_Be(B) for B = " + block.algebra->name(), pd));
        return step;
    }
    return std::nullopt;
}

} // namespace qred
