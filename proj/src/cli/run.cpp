#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qred/cli.hpp"
#include "qred/dsl.hpp"
#include "qred/witness.hpp"

#ifndef QRED_DEFAULT_FIXTURE_DIR
#define QRED_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace qred {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultBound = 20;
constexpr std::size_t kDefaultDegreeBound = 64;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename F> auto with_file(const std::string &path, F parse) {
    try {
        return parse(read_file(path));
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

VertexId vertex_named(const Algebra &a, const std::string &name) {
    auto v = a.quiver().find_vertex(name);
    if (!v)
        throw InputError("unknown vertex '" + name + "' in " + a.name());
    return *v;
}

std::vector<VertexId> vertex_list(const Algebra &a, const std::string &csv) {
    std::vector<VertexId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(vertex_named(a, item));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty())
        throw InputError("empty vertex list");
    return out;
}

json names(const Algebra &a, const std::vector<VertexId> &vs) {
    json out = json::array();
    for (VertexId v : vs)
        out.push_back(a.quiver().vertices[v]);
    return out;
}

json summary(const AlgebraHandle &a) {
    return {{"name", a->name()},
            {"field", a->field().name()},
            {"vertices", a->quiver().vertices},
            {"arrows", a->arrow_count()},
            {"dim", a->dim()},
            {"monomial", a->is_monomial()},
            {"loewy_length", a->loewy_length()}};
}

json step_json(const ReductionStep &s) {
    json conds = json::array();
    for (const Condition &c : s.conditions)
        conds.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"value", c.value}});
    return {{"kind", to_string(s.kind)},     {"variant", s.variant},
            {"input", s.input->name()},      {"output", s.output->name()},
            {"output_dim", s.output->dim()}, {"status", to_string(s.status())},
            {"conditions", conds}};
}

json trace_json(const ReductionTrace &t) {
    json out = json::array();
    for (const ReductionStep &s : t.steps)
        out.push_back(step_json(s));
    return out;
}

json dims_json(const std::vector<std::size_t> &d) { return json(d); }

json bounded_json(const BoundedDim &d) {
    return {{"kind", d.exact() ? "exact" : "at_least"}, {"value", d.value}, {"bound", d.bound}};
}

void render_text(const json &j, std::ostream &out, const std::string &indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = j.is_object() ? it.key() : "-";
        const json &v = *it;
        bool nested = (v.is_object() && !v.empty()) ||
                      (v.is_array() && std::any_of(v.begin(), v.end(), [](const json &e) { return e.is_structured(); }));
        if (nested) {
            out << indent << key << ":\n";
            render_text(v, out, indent + "  ");
        } else {
            out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

struct Context {
    std::vector<std::string> args;
    std::string fixtures;
    std::size_t bound = kDefaultBound;
    std::uint64_t seed = 1;
    bool timing = false;
    bool text = false;
    std::size_t degree_bound = kDefaultDegreeBound;
};

struct StepFlags {
    std::vector<std::string> quotient_vertices;
    std::vector<std::string> quotient_elements;
    std::string corner;
    std::string variant = "projective";
    bool triangular = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--quotient-vertex", quotient_vertices, "Add e_v to the generators of the ideal J");
        cmd->add_option("--quotient", quotient_elements, "Add an element to the generators of the ideal J");
        cmd->add_option("--corner", corner, "Pass to the corner on these comma-separated vertices");
        cmd->add_option("--variant", variant, "Corner conditions: projective, injective or bounded-tor")
            ->check(CLI::IsMember({"projective", "injective", "bounded-tor"}));
        cmd->add_flag("--triangular", triangular, "Try a block-triangular split");
    }
};

// Applies the requested steps in the order quotient, corner, triangular
// split; refuted or unavailable steps are returned in `rejected`.
std::vector<ReductionStep> requested_steps(const AlgebraHandle &a, const StepFlags &f, std::size_t bound,
                                           json &rejected) {
    std::vector<ReductionStep> steps;
    AlgebraHandle cur = a;
    auto accept = [&](ReductionStep s) {
        if (s.status() == Status::Refuted) {
            rejected.push_back(step_json(s));
            return;
        }
        cur = s.output;
        steps.push_back(std::move(s));
    };
    if (!f.quotient_vertices.empty() || !f.quotient_elements.empty()) {
        std::vector<Element> gens;
        for (const auto &v : f.quotient_vertices)
            gens.push_back({{Path::trivial(vertex_named(*cur, v)), cur->field().from_int(1)}});
        for (const auto &e : f.quotient_elements) {
            try {
                gens.push_back(parse_element(cur->quiver(), cur->field(), e));
            } catch (const ParseError &err) {
                throw InputError("--quotient '" + e + "': " + err.what());
            }
        }
        accept(quotient_conditions(cur, gens, bound));
    }
    if (!f.corner.empty()) {
        CornerVariant v = f.variant == "injective"   ? CornerVariant::Injective
                          : f.variant == "bounded-tor" ? CornerVariant::BoundedTor
                                                 : CornerVariant::Projective;
        accept(corner_conditions(cur, vertex_list(*cur, f.corner), bound, v));
    }
    if (f.triangular) {
        if (auto s = triangular_split(cur, bound))
            accept(std::move(*s));
        else
            rejected.push_back({{"kind", "triangular_split"}, {"input", cur->name()}, {"status", "no split"}});
    }
    return steps;
}

int worst(int a, int b) {
    auto rank = [](int c) { return c == exit_code::fails ? 2 : c == exit_code::inconclusive ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

int outcome_code(Outcome o, bool conditional) {
    if (o == Outcome::Fails)
        return exit_code::fails;
    if (o == Outcome::Inconclusive || conditional)
        return exit_code::inconclusive;
    return exit_code::holds;
}

json report_skeleton(const Context &ctx, const std::string &command, const AlgebraHandle &a) {
    json cmd = {{"name", command}, {"args", ctx.args}};
    return {{"algebra", summary(a)}, {"command", cmd},         {"results", json::object()},
            {"trace", json::array()}, {"certificates", json::array()}, {"conditional", false},
            {"seed", ctx.seed},       {"elapsed_ms", nullptr}};
}

int cmd_analyze(const Context &ctx, const AlgebraHandle &a, json &report) {
    json &r = report["results"];
    r["serial"] = serial_check(a);
    r["gldim"] = bounded_json(gldim_bounded(a, ctx.bound));
    auto [left, right] = gorenstein_bounded(a, ctx.bound);
    r["injective_dimension"] = {{"left", bounded_json(left)}, {"right", bounded_json(right)}};
    json eligible = json::array();
    for (const auto &e : eligible_vertices(*a))
        eligible.push_back({{"vertex", a->quiver().vertices[e.vertex]}, {"side", to_string(e.side)}});
    r["eligible_vertices"] = eligible;
    json cartan = json::array();
    for (VertexId s = 0; s < a->vertex_count(); ++s) {
        json row = json::array();
        for (VertexId t = 0; t < a->vertex_count(); ++t)
            row.push_back(a->block(s, t).size());
        cartan.push_back(row);
    }
    r["paths_between"] = cartan;
    return exit_code::holds;
}

int cmd_reduce(const Context &ctx, const AlgebraHandle &a, const StepFlags &flags, json &report) {
    json rejected = json::array();
    ReductionTrace trace{a, requested_steps(a, flags, ctx.bound, rejected)};
    reduce_fixpoint(trace);
    report["trace"] = trace_json(trace);
    report["conditional"] = trace.conditional();
    report["results"] = {{"terminal", summary(trace.terminal())},
                         {"terminal_presentation", format_algebra(trace.terminal()->presentation())},
                         {"rejected_steps", rejected}};
    if (!rejected.empty())
        return exit_code::fails;
    return trace.conditional() ? exit_code::inconclusive : exit_code::holds;
}

int cmd_check(const Context &ctx, const AlgebraHandle &a, const StepFlags &flags,
              const std::vector<std::string> &props, json &report) {
    std::vector<Property> wanted;
    for (const auto &p : props) {
        if (p == "all") {
            wanted = all_properties();
            break;
        }
        auto parsed = parse_property(p);
        if (!parsed)
            throw InputError("unknown property '" + p + "'");
        wanted.push_back(*parsed);
    }
    json rejected = json::array();
    std::vector<ReductionStep> prefix = requested_steps(a, flags, ctx.bound, rejected);
    int code = exit_code::holds;
    json verdicts = json::array();
    bool conditional = false;
    for (Property p : wanted) {
        Verdict v = property_verdict(a, p, ctx.bound, prefix);
        report["trace"] = trace_json(v.trace);
        json cert = {{"property", to_string(p)},
                     {"verdict", to_string(v.certificate.outcome)},
                     {"rule", v.certificate.rule},
                     {"conditional", v.certificate.conditional}};
        verdicts.push_back(cert);
        if (v.certificate.outcome == Outcome::Holds)
            report["certificates"].push_back(cert);
        conditional = conditional || v.certificate.conditional;
        code = worst(code, outcome_code(v.certificate.outcome, v.certificate.conditional));
    }
    report["conditional"] = conditional;
    report["results"] = {{"verdicts", verdicts}, {"rejected_steps", rejected}};
    return code;
}

int cmd_corner(const Context &, const AlgebraHandle &a, const std::string &vertices, json &report,
               std::string &emitted) {
    std::vector<VertexId> kept = vertex_list(*a, vertices);
    Subquotient c = corner_presentation(a, kept);
    json arrows = json::array();
    for (std::size_t i = 0; i < c.arrow_paths.size(); ++i)
        arrows.push_back({{"arrow", c.algebra->quiver().arrows[i].name},
                          {"realization", format_path(a->quiver(), c.arrow_paths[i])}});
    emitted = format_algebra(c.algebra->presentation());
    report["results"] = {{"vertices", names(*a, kept)},
                         {"corner_basis_size", corner_basis(*a, kept).size()},
                         {"corner", summary(c.algebra)},
                         {"arrows", arrows},
                         {"presentation", emitted}};
    return exit_code::holds;
}

struct ModuleChoice {
    std::string file;
    std::string simple, projective, injective;
};

int cmd_resolve(const Context &ctx, const AlgebraHandle &a, const ModuleChoice &mc, json &report) {
    Rep m;
    std::string label;
    if (!mc.file.empty()) {
        m = with_file(mc.file, [&](const std::string &t) { return parse_module(t, a); });
        label = mc.file;
    } else if (!mc.simple.empty()) {
        m = simple(a, vertex_named(*a, mc.simple));
        label = "S_" + mc.simple;
    } else if (!mc.projective.empty()) {
        m = projective(a, vertex_named(*a, mc.projective));
        label = "P_" + mc.projective;
    } else if (!mc.injective.empty()) {
        m = injective(a, vertex_named(*a, mc.injective));
        label = "I_" + mc.injective;
    } else {
        throw InputError("resolve needs --module, --simple, --projective or --injective");
    }
    Resolution res = minimal_resolution(m, ctx.bound + 1);
    json rows = json::array();
    for (std::size_t i = 0; i < res.steps.size(); ++i)
        rows.push_back({{"index", i},
                        {"syzygy_dims", dims_json(res.syzygy(i).dims)},
                        {"cover_tops", names(*a, res.steps[i].cover.tops)}});
    BoundedDim pd = res.terminated && res.steps.size() <= ctx.bound + 1
                        ? BoundedDim::exact_value(res.steps.empty() ? 0 : res.steps.size() - 1, ctx.bound)
                        : BoundedDim::at_least(ctx.bound);
    report["results"] = {{"module", label}, {"dims", dims_json(m.dims)}, {"resolution", rows},
                         {"terminated", res.terminated}, {"pd", bounded_json(pd)}};
    return exit_code::holds;
}

struct WitnessFlags {
    bool identity = false;
    bool syzygy = false;
    std::string candidate;
    std::string m_file, n_file;
    std::optional<std::size_t> level;
    std::optional<std::size_t> level_max;
};

json level_json(const LevelReport &r) {
    return {{"level", r.level},
            {"projectivity",
             {{"M_left", r.projectivity.m_left},
              {"M_right", r.projectivity.m_right},
              {"N_left", r.projectivity.n_left},
              {"N_right", r.projectivity.n_right}}},
            {"iso_A", to_string(r.iso_a)},
            {"iso_B", to_string(r.iso_b)},
            {"verdict", to_string(r.verdict)}};
}

int cmd_witness(const Context &ctx, const AlgebraHandle &a, const AlgebraHandle &b, const WitnessFlags &w,
                json &report) {
    Bimodule m, n;
    std::string mode;
    auto require_same = [&] {
        if (!same_algebra(*a, *b))
            throw InputError("this witness mode needs B = A");
    };
    if (w.identity) {
        require_same();
        m = n = regular_bimodule(a);
        mode = "identity";
    } else if (w.syzygy) {
        require_same();
        m = bimodule_syzygy(a, 1);
        n = regular_bimodule(a);
        mode = "syzygy";
    } else if (!w.candidate.empty()) {
        IdempotentCandidate c = idempotent_candidate(a, vertex_list(*a, w.candidate));
        m = c.m;
        n = c.n;
        mode = "idempotent_candidate";
        report["results"]["corner"] = summary(c.corner.algebra);
    } else if (!w.m_file.empty() && !w.n_file.empty()) {
        m = with_file(w.m_file, [&](const std::string &t) { return parse_bimodule(t, a, b); });
        n = with_file(w.n_file, [&](const std::string &t) { return parse_bimodule(t, b, a); });
        mode = "files";
    } else {
        throw InputError("witness needs --identity, --syzygy, --candidate or --bimodules M N");
    }
    json &r = report["results"];
    r["mode"] = mode;
    r["dim_M"] = m.dim();
    r["dim_N"] = n.dim();
    if (w.level) {
        LevelReport lr = verify_level({m, n, *w.level}, ctx.seed);
        r["reports"] = json::array({level_json(lr)});
        r["verdict"] = to_string(lr.verdict);
        return outcome_code(lr.verdict, false);
    }
    std::size_t n_max = w.level_max ? *w.level_max : default_level_max(a);
    LevelSearch s = search_level(m, n, n_max, ctx.seed);
    json reports = json::array();
    for (const auto &lr : s.reports)
        reports.push_back(level_json(lr));
    r["level_max"] = n_max;
    r["reports"] = reports;
    r["level"] = s.level ? json(*s.level) : json(nullptr);
    if (s.level) {
        r["verdict"] = "holds";
        return exit_code::holds;
    }
    bool any_inconclusive = std::any_of(s.reports.begin(), s.reports.end(),
                                        [](const LevelReport &lr) { return lr.verdict == Outcome::Inconclusive; });
    r["verdict"] = any_inconclusive ? "inconclusive" : "fails";
    return any_inconclusive ? exit_code::inconclusive : exit_code::fails;
}

} // namespace

std::string default_fixture_dir() {
    if (const char *env = std::getenv("QRED_FIXTURE_DIR"); env && *env)
        return env;
    return QRED_DEFAULT_FIXTURE_DIR;
}

AlgebraHandle load_algebra(const std::string &ref, const std::string &fixture_dir, std::size_t degree_bound) {
    std::string path = ref;
    if (!std::filesystem::is_regular_file(path)) {
        std::string lower = ref;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        path = (std::filesystem::path(fixture_dir) / (lower + ".alg")).string();
        if (!std::filesystem::is_regular_file(path))
            throw InputError("no algebra file or fixture named '" + ref + "'");
    }
    Presentation p = with_file(path, [](const std::string &t) { return parse_algebra(t); });
    return complete(p, degree_bound);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Context ctx;
    ctx.args = args;
    ctx.fixtures = default_fixture_dir();
    std::optional<std::uint64_t> seed;

    CLI::App app{"Reduction and verification toolkit for bound quiver algebras", "qred"};
    app.require_subcommand(1);
    app.add_option("--fixtures", ctx.fixtures, "Directory searched for fixture names");
    app.add_option("--seed", seed, "Seed for randomized searches (default: QRED_SEED or 1)");
    app.add_option("--bound", ctx.bound, "Resolution and Tor bound");
    app.add_option("--degree-bound", ctx.degree_bound, "Initial degree bound for Groebner completion");
    app.add_flag("--timing", ctx.timing, "Record elapsed_ms in the report");
    app.add_flag("--text", ctx.text, "Human-readable output instead of JSON");

    std::string algebra_ref, second_ref;
    auto add = [&](const std::string &name, const std::string &help) {
        CLI::App *c = app.add_subcommand(name, help);
        c->add_option("algebra", algebra_ref, "Algebra file or fixture name")->required();
        c->fallthrough();
        return c;
    };

    CLI::App *analyze = add("analyze", "Dimension, monomial and serial flags, Loewy length, bounded gldim");
    StepFlags reduce_flags, check_flags;
    CLI::App *reduce = add("reduce", "Vertex-removal fixpoint after optional requested steps");
    reduce_flags.attach(reduce);
    CLI::App *check = add("check", "Certificate-based property verdicts");
    check_flags.attach(check);
    std::vector<std::string> props;
    check->add_option("--property", props, "syzygy-finite, igusa-todorov, injectives-generate, "
                                           "projectives-cogenerate or all")
        ->required();
    CLI::App *corner = add("corner", "Presentation of the corner algebra eAe");
    std::string corner_vertices, emit;
    corner->add_option("--vertices", corner_vertices, "Comma-separated kept vertices")->required();
    corner->add_option("--emit", emit, "Write the corner presentation to this file ('-' for stdout)");
    CLI::App *resolve = add("resolve", "Minimal projective resolution table");
    ModuleChoice mc;
    resolve->add_option("--module", mc.file, "Module file");
    resolve->add_option("--simple", mc.simple, "Simple module at a vertex");
    resolve->add_option("--projective", mc.projective, "Indecomposable projective at a vertex");
    resolve->add_option("--injective", mc.injective, "Indecomposable injective at a vertex");
    CLI::App *witness = add("witness", "Verify or search a level for a bimodule pair");
    WitnessFlags wf;
    std::vector<std::string> bimodule_files;
    witness->add_option("second", second_ref, "Second algebra B (default: A)");
    witness->add_flag("--identity", wf.identity, "M = N = A");
    witness->add_flag("--syzygy", wf.syzygy, "M = Omega^1(A) over A^e, N = A");
    witness->add_option("--candidate", wf.candidate, "M = Ae, N = eA for these comma-separated vertices");
    witness->add_option("--bimodules", bimodule_files, "Bimodule files for M and N")->expected(2);
    witness->add_option("--level", wf.level, "Verify this level only");
    witness->add_option("--level-max", wf.level_max, "Search levels 0..n (default: 2 x Loewy length of A^e)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? exit_code::holds : exit_code::usage;
    }
    if (seed)
        ctx.seed = *seed;
    else if (const char *env = std::getenv("QRED_SEED"); env && *env)
        ctx.seed = std::strtoull(env, nullptr, 10);
    if (bimodule_files.size() == 2) {
        wf.m_file = bimodule_files[0];
        wf.n_file = bimodule_files[1];
    }

    auto start = std::chrono::steady_clock::now();
    try {
        AlgebraHandle a = load_algebra(algebra_ref, ctx.fixtures, ctx.degree_bound);
        CLI::App *sub = app.get_subcommands().front();
        json report = report_skeleton(ctx, sub->get_name(), a);
        int code = exit_code::holds;
        std::string emitted;
        if (sub == analyze)
            code = cmd_analyze(ctx, a, report);
        else if (sub == reduce)
            code = cmd_reduce(ctx, a, reduce_flags, report);
        else if (sub == check)
            code = cmd_check(ctx, a, check_flags, props, report);
        else if (sub == corner)
            code = cmd_corner(ctx, a, corner_vertices, report, emitted);
        else if (sub == resolve)
            code = cmd_resolve(ctx, a, mc, report);
        else if (sub == witness)
            code = cmd_witness(ctx, a, second_ref.empty() ? a : load_algebra(second_ref, ctx.fixtures, ctx.degree_bound), wf, report);

        if (ctx.timing)
            report["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (sub == corner && !emit.empty()) {
            if (emit == "-") {
                out << emitted;
                return code;
            }
            std::ofstream(emit) << emitted;
        }
        if (ctx.text)
            render_text(report, out, "");
        else
            out << report.dump(2) << "\n";
        return code;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const CompletionError &e) {
        err << "inconclusive: " << e.what() << "\n";
        return exit_code::inconclusive;
    }
}

} // namespace qred
