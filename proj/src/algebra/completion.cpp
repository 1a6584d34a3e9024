#include <algorithm>
#include <queue>
#include <tuple>

#include "qred/algebra.hpp"
#include "ruleset.hpp"

namespace qred {

namespace detail {

Element RuleSet::reduce(Element f) const {
    return rewrite(std::move(f), field_, [&](const Word &w, const Element *&tail) {
        auto hit = find_lead(w, lengths_, by_lead_);
        if (hit)
            tail = &slots_[hit->rule].tail;
        return hit;
    });
}

bool RuleSet::has_lead_suffix(const Word &w) const {
    for (std::size_t len : lengths_) {
        if (len > w.size())
            break;
        if (by_lead_.count(word_key(w.data() + (w.size() - len), len)))
            return true;
    }
    return false;
}

std::size_t RuleSet::insert(const Element &f, std::vector<Element> &evicted) {
    auto last = std::prev(f.end());
    Path lead = last->first;
    Scalar inv = field_.inv(last->second);
    Element tail;
    for (auto it = f.begin(); it != last; ++it)
        tail.emplace_hint(tail.end(), it->first, field_.neg(field_.mul(it->second, inv)));

    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const Slot &s = slots_[i];
        if (!s.alive || s.lead.length() <= lead.length())
            continue;
        if (std::search(s.lead.arrows.begin(), s.lead.arrows.end(), lead.arrows.begin(),
                        lead.arrows.end()) == s.lead.arrows.end())
            continue;
        Element e = s.tail;
        for (auto &[p, c] : e)
            c = field_.neg(c);
        e.emplace(s.lead, field_.from_int(1));
        evicted.push_back(std::move(e));
        kill(i);
    }

    std::size_t idx = slots_.size();
    by_lead_.emplace(word_key(lead.arrows.data(), lead.length()), idx);
    ++length_count_[lead.length()];
    slots_.push_back({std::move(lead), std::move(tail), true});
    refresh_lengths();
    return idx;
}

void RuleSet::kill(std::size_t slot) {
    Slot &s = slots_[slot];
    s.alive = false;
    by_lead_.erase(word_key(s.lead.arrows.data(), s.lead.length()));
    if (--length_count_[s.lead.length()] == 0)
        length_count_.erase(s.lead.length());
    refresh_lengths();
}

void RuleSet::refresh_lengths() {
    lengths_.clear();
    for (const auto &[len, count] : length_count_)
        lengths_.push_back(len);
}

} // namespace detail

namespace {

constexpr std::size_t kMaxIrreducibleWords = 200000;
constexpr std::size_t kMaxRules = 50000;

struct Overlap {
    std::size_t length;
    std::size_t first;
    std::size_t second;
    std::size_t shared;
    auto operator<=>(const Overlap &) const = default;
};

struct LevelScan {
    std::optional<std::size_t> empty_level;
    bool overflow = false;
    std::vector<Path> words;
};

// Irreducible paths level by level, up to `limit`; stops at the first
// empty level.
LevelScan scan_levels(const Quiver &q, const detail::RuleSet &rules, std::size_t limit,
                      bool keep_words) {
    LevelScan out;
    std::vector<std::vector<ArrowId>> by_target(q.vertices.size());
    for (ArrowId a = 0; a < q.arrows.size(); ++a)
        by_target[q.arrows[a].target].push_back(a);

    std::vector<Path> level;
    for (VertexId v = 0; v < q.vertices.size(); ++v)
        level.push_back(Path::trivial(v));
    std::size_t total = level.size();
    if (keep_words)
        out.words = level;

    for (std::size_t len = 1; len <= limit; ++len) {
        std::vector<Path> next;
        for (const Path &w : level) {
            for (ArrowId a : by_target[w.source]) {
                Path p;
                p.target = w.is_trivial() ? q.arrows[a].target : w.target;
                p.source = q.arrows[a].source;
                p.arrows = w.arrows;
                p.arrows.push_back(a);
                if (rules.has_lead_suffix(p.arrows))
                    continue;
                next.push_back(std::move(p));
            }
        }
        std::sort(next.begin(), next.end());
        if (next.empty()) {
            out.empty_level = len;
            return out;
        }
        total += next.size();
        if (total > kMaxIrreducibleWords) {
            out.overflow = true;
            return out;
        }
        if (keep_words)
            out.words.insert(out.words.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

class Completion {
public:
    Completion(const Presentation &p) : quiver_(p.quiver), field_(p.field), rules_(p.field) {}

    void add(Element f) { pending_.push_back(std::move(f)); }

    // Processes pending elements and every overlap of length <= bound.
    void drain(std::size_t bound) {
        for (;;) {
            if (!pending_.empty()) {
                Element f = std::move(pending_.back());
                pending_.pop_back();
                absorb(std::move(f));
                continue;
            }
            if (heap_.empty() || heap_.top().length > bound)
                return;
            Overlap o = heap_.top();
            heap_.pop();
            const auto &slots = rules_.slots();
            if (!slots[o.first].alive || !slots[o.second].alive)
                continue;
            absorb(s_polynomial(o));
        }
    }

    const detail::RuleSet &rules() const { return rules_; }

private:
    void absorb(Element f) {
        Element g = rules_.reduce(std::move(f));
        if (g.empty())
            return;
        std::vector<Element> evicted;
        std::size_t idx = rules_.insert(g, evicted);
        if (rules_.slots().size() > kMaxRules)
            throw CompletionError("dimension not resolved within bound: rewriting system too large");
        for (auto &e : evicted)
            pending_.push_back(std::move(e));
        const auto &slots = rules_.slots();
        for (std::size_t j = 0; j < slots.size(); ++j) {
            if (!slots[j].alive)
                continue;
            push_overlaps(idx, j);
            if (j != idx)
                push_overlaps(j, idx);
        }
    }

    // Overlaps where a suffix of lead(i) equals a prefix of lead(j).
    void push_overlaps(std::size_t i, std::size_t j) {
        const Word &u = rules_.slots()[i].lead.arrows;
        const Word &v = rules_.slots()[j].lead.arrows;
        std::size_t top = std::min(u.size(), v.size());
        for (std::size_t k = 1; k < top; ++k)
            if (std::equal(u.end() - k, u.end(), v.begin()))
                heap_.push({u.size() + v.size() - k, i, j, k});
    }

    Element s_polynomial(const Overlap &o) const {
        const auto &si = rules_.slots()[o.first];
        const auto &sj = rules_.slots()[o.second];
        const Word &u = si.lead.arrows;
        const Word &v = sj.lead.arrows;
        Path right = *make_path(quiver_, Word(v.begin() + o.shared, v.end()));
        Path left = *make_path(quiver_, Word(u.begin(), u.end() - o.shared));
        Element s = sandwich(Path::trivial(si.lead.target), si.tail, right, field_);
        add_scaled(s, sandwich(left, sj.tail, Path::trivial(sj.lead.source), field_),
                   field_.from_int(-1), field_);
        return s;
    }

    const Quiver &quiver_;
    Field field_;
    detail::RuleSet rules_;
    std::vector<Element> pending_;
    std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> heap_;
};

// Smallest k with rad^k = 0, where rad is spanned by the nontrivial normal
// paths. Throws when rad is not nilpotent.
std::size_t radical_nilpotency(const Algebra &a) {
    const Field &f = a.field();
    std::vector<Vec> layer;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a.basis()[i].is_trivial()) {
            Vec e(a.dim());
            e[i] = 1;
            layer.push_back(std::move(e));
        }
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        if (layer.empty())
            return k;
        EchelonBasis next(f, a.dim());
        std::vector<Vec> rows;
        for (const Vec &v : layer)
            for (ArrowId x = 0; x < a.arrow_count(); ++x) {
                Element prod = sandwich(*make_path(a.quiver(), {x}), a.to_element(v),
                                        Path::trivial(a.quiver().arrows[x].source), f);
                Vec w = a.to_coords(prod);
                if (next.add(w))
                    rows.push_back(std::move(w));
            }
        layer = std::move(rows);
    }
    throw std::invalid_argument("non-admissible presentation: the arrow ideal is not nilpotent");
}

} // namespace

AlgebraHandle complete(const Presentation &p, std::size_t degree_bound) {
    std::vector<Element> relations = relation_elements(p);
    if (degree_bound < 1)
        degree_bound = 1;

    Completion c(p);
    std::size_t longest = 2;
    for (auto it = relations.rbegin(); it != relations.rend(); ++it) {
        longest = std::max(longest, std::prev(it->end())->first.length());
        c.add(*it);
    }

    std::size_t bound = std::min(degree_bound, 2 * longest);
    std::size_t loewy = 0;
    for (;;) {
        c.drain(bound);
        LevelScan scan = scan_levels(p.quiver, c.rules(), degree_bound, false);
        if (scan.empty_level) {
            std::size_t need = 2 * *scan.empty_level - 1;
            if (need <= bound) {
                loewy = *scan.empty_level;
                break;
            }
            bound = need;
            continue;
        }
        if (bound >= degree_bound)
            throw CompletionError("dimension not resolved within bound " + std::to_string(degree_bound));
        bound = std::min(degree_bound, 2 * bound);
    }

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->pres_ = p;
    for (const auto &slot : c.rules().slots()) {
        if (!slot.alive)
            continue;
        alg->rules_.push_back({slot.lead, c.rules().reduce(slot.tail)});
    }
    std::sort(alg->rules_.begin(), alg->rules_.end(),
              [](const Rule &a, const Rule &b) { return a.lead < b.lead; });
    alg->basis_ = scan_levels(p.quiver, c.rules(), loewy, true).words;
    alg->loewy_length_ = loewy;
    alg->finish();
    bool graded = std::all_of(alg->rules_.begin(), alg->rules_.end(), [](const Rule &r) {
        return std::all_of(r.tail.begin(), r.tail.end(),
                           [&](const auto &term) { return term.first.length() == r.lead.length(); });
    });
    if (!graded)
        alg->loewy_length_ = radical_nilpotency(*alg);
    return alg;
}

} // namespace qred
