#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qred/algebra.hpp"

namespace qred::detail {

inline std::string word_key(const ArrowId *w, std::size_t n) {
    return std::string(reinterpret_cast<const char *>(w), n * sizeof(ArrowId));
}

struct LeadHit {
    std::size_t rule;
    std::size_t pos;
    std::size_t len;
};

/// Shortest, then leftmost, occurrence of an indexed leading word in `w`.
template <class Lengths>
std::optional<LeadHit> find_lead(const Word &w, const Lengths &lengths,
                                 const std::unordered_map<std::string, std::size_t> &index) {
    for (std::size_t len : lengths) {
        if (len > w.size())
            break;
        for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
            auto it = index.find(word_key(w.data() + pos, len));
            if (it != index.end())
                return LeadHit{it->second, pos, len};
        }
    }
    return std::nullopt;
}

/// Replaces w[pos, pos+len) by the path t (parallel to the replaced subword).
inline Path splice(const Path &p, std::size_t pos, std::size_t len, const Path &t) {
    Path r;
    r.arrows.reserve(p.arrows.size() - len + t.arrows.size());
    r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.begin() + pos);
    r.arrows.insert(r.arrows.end(), t.arrows.begin(), t.arrows.end());
    r.arrows.insert(r.arrows.end(), p.arrows.begin() + pos + len, p.arrows.end());
    r.target = pos > 0 ? p.target : t.target;
    r.source = pos + len < p.arrows.size() ? p.source : t.source;
    return r;
}

/// Full deg-lex reduction of f. `find` maps a word to (hit, tail pointer).
template <class Find>
Element rewrite(Element f, const Field &field, Find find) {
    Element out;
    while (!f.empty()) {
        auto last = std::prev(f.end());
        Path p = last->first;
        Scalar c = last->second;
        f.erase(last);
        const Element *tail = nullptr;
        std::optional<LeadHit> hit;
        if (!p.is_trivial())
            hit = find(p.arrows, tail);
        if (!hit) {
            out.emplace_hint(out.begin(), std::move(p), std::move(c));
            continue;
        }
        for (const auto &[t, tc] : *tail)
            add_term(f, splice(p, hit->pos, hit->len, t), field.mul(c, tc), field);
    }
    return out;
}

/// Rewriting rules lead -> tail, with removal of rules whose leading word
/// becomes reducible by a newer rule.
class RuleSet {
public:
    explicit RuleSet(const Field &f) : field_(f) {}

    struct Slot {
        Path lead;
        Element tail;
        bool alive = true;
    };

    const std::vector<Slot> &slots() const { return slots_; }
    std::size_t alive_count() const { return by_lead_.size(); }

    Element reduce(Element f) const;
    /// Whether some leading word is a suffix of `w`.
    bool has_lead_suffix(const Word &w) const;

    /// Inserts a nonzero reduced element as a monic rule and returns its
    /// slot. Rules whose leading word contains the new one are removed and
    /// their elements appended to `evicted`.
    std::size_t insert(const Element &f, std::vector<Element> &evicted);

private:
    void kill(std::size_t slot);
    void refresh_lengths();

    Field field_;
    std::vector<Slot> slots_;
    std::unordered_map<std::string, std::size_t> by_lead_;
    std::map<std::size_t, std::size_t> length_count_;
    std::vector<std::size_t> lengths_;
};

} // namespace qred::detail
