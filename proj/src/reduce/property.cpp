#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qred/reduce.hpp"

namespace qred {

std::string to_string(Property p) {
    switch (p) {
    case Property::SyzygyFinite:
        return "syzygy-finite";
    case Property::IgusaTodorov:
        return "igusa-todorov";
    case Property::InjectivesGenerate:
        return "injectives-generate";
    case Property::ProjectivesCogenerate:
        return "projectives-cogenerate";
    }
    return "syzygy-finite";
}

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Holds:
        return "holds";
    case Outcome::Fails:
        return "fails";
    case Outcome::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

const std::vector<Property> &all_properties() {
    static const std::vector<Property> all{Property::SyzygyFinite, Property::IgusaTodorov,
                                           Property::InjectivesGenerate, Property::ProjectivesCogenerate};
    return all;
}

std::optional<Property> parse_property(const std::string &name) {
    std::string canon = name;
    std::replace(canon.begin(), canon.end(), '_', '-');
    for (Property p : all_properties())
        if (to_string(p) == canon)
            return p;
    return std::nullopt;
}

namespace {

CertificateFacts compute_facts(const AlgebraHandle &a, std::size_t bound) {
    CertificateFacts f;
    f.monomial = a->is_monomial();
    f.serial = serial_check(a);
    f.self_injective = is_isomorphic(regular(a), dual(right_regular(a))).answer == Answer::Yes;
    bool semisimple = a->arrow_count() == 0;
    f.finite_gldim = semisimple || (!f.self_injective && gldim_bounded(a, bound).exact());
    if (f.self_injective || f.finite_gldim) {
        f.gorenstein = true;
    } else {
        auto [left, right] = gorenstein_bounded(a, bound);
        f.gorenstein = left.exact() && right.exact();
    }
    return f;
}

} // namespace

CertificateFacts CertificateFacts::of(const AlgebraHandle &a, std::size_t bound) {
    static std::mutex mutex;
    static std::map<std::pair<const Algebra *, std::size_t>, std::pair<std::weak_ptr<const Algebra>, CertificateFacts>>
        cache;
    std::pair<const Algebra *, std::size_t> key{a.get(), bound};
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.first.lock() == a)
            return it->second.second;
    }
    CertificateFacts f = compute_facts(a, bound);
    std::lock_guard lock(mutex);
    cache[key] = {a, f};
    return f;
}

std::optional<std::string> CertificateFacts::rule_for(Property p) const {
    if (finite_gldim)
        return "finite global dimension";
    switch (p) {
    case Property::SyzygyFinite:
        if (monomial)
            return "monomial";
        if (serial)
            return "serial";
        return std::nullopt;
    case Property::IgusaTodorov:
        if (auto r = rule_for(Property::SyzygyFinite))
            return *r + " via syzygy-finite";
        return std::nullopt;
    case Property::InjectivesGenerate:
        if (monomial)
            return "monomial";
        if (self_injective)
            return "self-injective";
        if (gorenstein)
            return "Gorenstein";
        return std::nullopt;
    case Property::ProjectivesCogenerate:
        if (self_injective)
            return "self-injective";
        return std::nullopt;
    }
    return std::nullopt;
}

Verdict property_verdict(const AlgebraHandle &a, Property p, std::size_t bound,
                         const std::vector<ReductionStep> &prefix) {
    Verdict out;
    out.trace.input = a;
    for (const ReductionStep &step : prefix) {
        if (step.status() == Status::Refuted)
            throw std::invalid_argument("property_verdict: refuted step in the prefix");
        if (step.input.get() != out.trace.terminal().get())
            throw std::invalid_argument("property_verdict: prefix steps do not compose");
        out.trace.steps.push_back(step);
    }
    reduce_fixpoint(out.trace);

    out.certificate.property = p;
    const AlgebraHandle &terminal = out.trace.terminal();
    if (auto rule = CertificateFacts::of(terminal, bound).rule_for(p)) {
        out.certificate.outcome = Outcome::Holds;
        out.certificate.rule = *rule + (out.trace.steps.empty() ? " (input)" : " (terminal)");
        out.certificate.conditional = out.trace.conditional();
        return out;
    }
    if (!out.trace.steps.empty())
        if (auto rule = CertificateFacts::of(a, bound).rule_for(p)) {
            out.certificate.outcome = Outcome::Holds;
            out.certificate.rule = *rule + " (input)";
            return out;
        }
    return out;
}

} // namespace qred
