#include "systolic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "systolic/fixtures.hpp"
#include "systolic/io.hpp"

namespace systolic::cli {

namespace {

struct Options {
    std::string input;
    std::string action_file, surface_file, move_file;
    bool quiet = false;
    std::optional<std::size_t> budget;

    std::string family;
    int n = 6, r = 1, k = 6;
    std::vector<std::string> cycle, path, set;
    std::string vertex, generator = "u";
    int side = -1;
    std::string p, q;
};

/// Output of one subcommand before the shared fields are attached.
struct Outcome {
    std::string verdict;
    int code = Ok;
    Json fields = Json::object();
    Json witnesses = Json::array();
};

class Session {
public:
    Session(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

    const Json& document()
    {
        if (!doc_) {
            if (opt_.input.empty()) {
                doc_ = parse(in_, "standard input");
            } else {
                std::ifstream f(opt_.input);
                if (!f)
                    throw Error(Errc::ParseError, "cannot open " + opt_.input);
                doc_ = parse(f, opt_.input);
            }
        }
        return *doc_;
    }

    const FlagComplex& complex()
    {
        if (!complex_) {
            const Json& d = document();
            complex_ = complex_from_json(d.contains("complex") ? d.at("complex") : d);
        }
        return *complex_;
    }

    DiscTriangulation disc()
    {
        const Json& d = document();
        if (d.contains("triangles"))
            return disc_from_json(d);
        if (d.contains("disc"))
            return disc_from_json(d.at("disc"));
        if (d.contains("surface") && d.at("surface").contains("disc"))
            return disc_from_json(d.at("surface").at("disc"));
        throw Error(Errc::ParseError, "expected a disc document");
    }

    ActionSpec action() { return action_from_json(part("action", opt_.action_file), complex()); }
    LabeledSurface labeled_surface() { return labeled_surface_from_json(part("surface", opt_.surface_file), complex()); }
    std::optional<Json> move()
    {
        if (!opt_.move_file.empty() || document().contains("move"))
            return part("move", opt_.move_file);
        return std::nullopt;
    }

    std::vector<Vertex> vertices(const std::vector<std::string>& names)
    {
        std::vector<Vertex> out;
        for (const auto& nm : names)
            out.push_back(complex().at(nm));
        return out;
    }

    Json names(const std::vector<Vertex>& vs) { return names_json(complex(), vs); }

private:
    static Json parse(std::istream& s, const std::string& where)
    {
        try {
            return Json::parse(s);
        } catch (const nlohmann::json::exception& e) {
            throw Error(Errc::ParseError, where + ": " + e.what());
        }
    }

    Json part(const std::string& key, const std::string& file)
    {
        if (!file.empty()) {
            std::ifstream f(file);
            if (!f)
                throw Error(Errc::ParseError, "cannot open " + file);
            return parse(f, file);
        }
        const Json& d = document();
        if (!d.contains(key))
            throw Error(Errc::ParseError, "no " + key + " given; pass --" + key + " or bundle it");
        return d.at(key);
    }

    const Options& opt_;
    std::istream& in_;
    std::optional<Json> doc_;
    std::optional<FlagComplex> complex_;
};

Json cycle_json(const FlagComplex& c, const Cycle& cy) { return names_json(c, cy.vertices); }

Json generate(const Options& o)
{
    const auto& f = o.family;
    if (f == "chorded-wheel")
        return to_json(gen_chorded_wheel(o.n));
    if (f == "double-cycle")
        return to_json(gen_double_cycle(o.n));
    if (f == "wheel")
        return to_json(gen_wheel(o.n));
    if (f == "simplex")
        return to_json(gen_simplex(o.n));
    if (f == "hex-patch")
        return to_json(gen_hex_patch(o.r));
    if (f == "special-surface")
        return to_json(gen_special_surface());
    if (f == "bicycle-complex")
        return to_json(gen_bicycle_complex());
    throw Error(Errc::ParseError, "unknown family " + f);
}

Outcome check_systolic_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto rep = check_systolic(c, o.budget.value_or(default_sc_budget));
    Outcome out{to_string(rep.verdict), rep.systolic() ? Ok : CheckFailed};
    if (rep.link_vertex)
        out.witnesses.push_back({{"vertex", c.name(*rep.link_vertex)}, {"link_cycle", cycle_json(c, *rep.link_cycle)}});
    if (!rep.loop.empty())
        out.witnesses.push_back({{"loop", s.names(rep.loop)}});
    const auto& sc = rep.simple_connectivity;
    if (!sc.reason.empty())
        out.fields["simple_connectivity"] = {{"verdict", to_string(sc.verdict)},
                                             {"reason", sc.reason},
                                             {"steps", sc.steps},
                                             {"remaining_generators", sc.remaining_generators}};
    return out;
}

Outcome k_large_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto res = is_k_large(c, o.k);
    Outcome out{res.large ? "large" : "not-large", res.large ? Ok : CheckFailed};
    out.fields["k"] = o.k;
    if (res.witness)
        out.witnesses.push_back({{"cycle", cycle_json(c, *res.witness)}});
    return out;
}

Outcome fill_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto cycle = s.vertices(o.cycle);
    FillResult res;
    if (o.budget) {
        res = fill_minimal(c, cycle, *o.budget);
    } else {
        if (!check_systolic(c).systolic())
            throw Error(Errc::PreconditionFailed, "complex is not certified systolic; pass --budget");
        res = fill_minimal(c, cycle);
    }
    Outcome out{to_string(res.status), res.status == FillStatus::Filled ? Ok : CheckFailed};
    out.fields["budget"] = res.budget;
    out.fields["nodes"] = res.nodes;
    if (res.surface) {
        out.fields["area"] = res.area;
        out.fields["minimal_count"] = res.minimal_count;
        out.fields["surface"] = to_json(*res.surface, c);
    }
    return out;
}

Outcome gauss_bonnet_cmd(Session& s, const Options&)
{
    auto disc = s.disc();
    int sum = gauss_bonnet_sum(disc);
    Outcome out{sum == 6 ? "ok" : "violated", sum == 6 ? Ok : Internal};
    out.fields["sum"] = sum;
    return out;
}

Outcome defect_cmd(Session& s, const Options& o)
{
    auto disc = s.disc();
    Outcome out{"ok", Ok};
    if (!o.vertex.empty())
        out.fields["defect"] = defect(disc, o.vertex);
    if (!o.path.empty()) {
        std::vector<Vertex> path;
        for (const auto& nm : o.path)
            path.push_back(disc.at(nm));
        out.fields["defect_along"] = defect_along(disc, path);
    }
    if (o.vertex.empty() && o.path.empty()) {
        Json all = Json::object();
        for (Vertex v = 0; v < disc.size(); ++v)
            all[disc.name(v)] = defect(disc, v);
        out.fields["defects"] = all;
    }
    return out;
}

Outcome invariance_set_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto spec = s.action();
    if (o.generator.size() != 1)
        throw Error(Errc::ParseError, "generator names are single characters");
    const auto& u = spec.generator(o.generator[0]);
    verify_automorphism(c, u);
    auto xs = invariance_set(c, u);
    auto rep = verify_Xu_properties(c, u);
    Outcome out{rep.ok() ? "ok" : "violated", rep.ok() ? Ok : CheckFailed};
    out.fields["vertices"] = s.names(xs.vertices);
    out.fields["properties"] = {{"full", rep.full},
                                {"isometric", rep.isometric},
                                {"locally_6_large", rep.locally_6_large},
                                {"stable_maximal_simplices", rep.stable_maximal_simplices}};
    for (const auto& v : rep.violations)
        out.witnesses.push_back({{"violation", v}});
    return out;
}

Outcome orbit_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto spec = s.action();
    verify_action(c, spec);
    Outcome out{"ok", Ok};
    if (!o.vertex.empty()) {
        auto orb = orbit(spec, c.size(), c.at(o.vertex));
        out.fields["orbit"] = s.names(orb);
        out.fields["clique"] = c.is_clique(orb);
    } else if (!o.set.empty()) {
        Json sets = Json::array();
        for (const auto& m : orbit(spec, c.size(), s.vertices(o.set)))
            sets.push_back(s.names(m));
        out.fields["orbit"] = sets;
    } else {
        Json all = Json::array();
        for (const auto& m : vertex_orbits(spec, c.size()))
            all.push_back(s.names(m));
        out.fields["orbits"] = all;
    }
    return out;
}

Outcome bicycle_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto spec = s.action();
    BicycleOptions bo;
    bo.strict = false;
    bo.budget = o.budget.value_or(default_sc_budget);
    auto rep = bicycle_check(c, spec, c.at(o.vertex), bo);
    Outcome out{to_string(rep.kind), rep.kind == BicycleCase::Violation ? CheckFailed : Ok};
    out.fields["orbit"] = s.names(rep.orbit);
    if (rep.kind == BicycleCase::Violation)
        out.fields["failed_clause"] = rep.failed_clause;
    if (rep.kind == BicycleCase::CycleCase) {
        out.fields["bipartite_ok"] = rep.bipartite_ok;
        out.fields["sigma_in_Xu_Xv"] = rep.sigma_in_Xu_Xv;
        out.witnesses.push_back({{"hamiltonian_cycle", s.names(rep.hamiltonian_cycle)},
                                 {"b", c.name(*rep.b)},
                                 {"sigma", s.names(rep.sigma)},
                                 {"source", rep.witness_source}});
    } else if (!rep.hamiltonian_cycle.empty()) {
        out.witnesses.push_back({{"hamiltonian_cycle", s.names(rep.hamiltonian_cycle)}});
    }
    return out;
}

Outcome fixed_simplex_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto spec = s.action();
    verify_action(c, spec);
    auto found = invariant_simplex_search(c, spec, o.budget.value_or(default_group_budget));
    Outcome out{found ? "found" : "none", found ? Ok : CheckFailed};
    if (found)
        out.witnesses.push_back({{"simplex", s.names(*found)}});
    return out;
}

Outcome triangle_surface_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto spec = s.action();
    auto res = triangle_surface(c, spec, o.budget.value_or(default_group_budget));
    if (res.degenerate) {
        bool ok = !res.invariant_simplex.empty();
        Outcome out{"degenerate-at-vertex", ok ? Ok : CheckFailed};
        Json w = {{"fixed_corner", c.name(*res.fixed_corner)}};
        if (ok) {
            w["invariant_simplex"] = s.names(res.invariant_simplex);
            w["source"] = res.simplex_source;
        }
        out.witnesses.push_back(w);
        return out;
    }
    const auto& cs = *res.surface;
    Outcome out{"surface", Ok};
    out.fields["perimeter"] = cs.cycle.size();
    out.fields["area"] = cs.surface.area();
    Json sides = Json::array();
    for (const auto& side : cs.sides)
        sides.push_back(s.names(side));
    out.witnesses.push_back({{"corners", s.names({cs.corners.begin(), cs.corners.end()})},
                             {"sides", sides},
                             {"surface", to_json(cs.surface, c)}});
    return out;
}

Vertex disc_preimage(const LabeledSurface& ls, const FlagComplex& c, const std::string& name)
{
    Vertex target = c.at(name);
    const auto& emb = ls.surface.embedding;
    auto it = std::find(emb.begin(), emb.end(), target);
    if (it == emb.end())
        throw Error(Errc::MoveInvalid, name + " is not on the surface");
    return static_cast<Vertex>(it - emb.begin());
}

Outcome swap_cmd(Session& s, const Options& o)
{
    const auto& c = s.complex();
    auto ls = s.labeled_surface();
    SwapMove mv;
    if (auto mj = s.move()) {
        auto get = [&](const char* key) {
            if (!mj->contains(key) || !mj->at(key).is_string())
                throw Error(Errc::ParseError, std::string("move needs a vertex name for ") + key);
            return disc_preimage(ls, c, mj->at(key).get<std::string>());
        };
        mv = {get("p"), get("q"), get("m"), get("m2")};
    } else {
        if (o.p.empty() || o.q.empty() || o.side < 0)
            throw Error(Errc::ParseError, "swap needs a move or --side, --p and --q");
        auto found = find_swap(c, ls, o.side, disc_preimage(ls, c, o.p), disc_preimage(ls, c, o.q));
        if (!found)
            return {"no-swap", CheckFailed};
        mv = *found;
    }
    auto after = edge_swap(c, ls, mv);
    auto rep = swap_effect_report(ls, after, mv);
    Outcome out{rep.ok() ? "clean" : "violated", rep.ok() ? Ok : CheckFailed};
    const auto& emb = ls.surface.embedding;
    out.fields["move"] = {{"p", c.name(emb[mv.p])}, {"q", c.name(emb[mv.q])},
                          {"m", c.name(emb[mv.m])}, {"m2", c.name(emb[mv.m2])}};
    out.fields["effect"] = {{"side", rep.side},
                            {"side_defect_before", rep.side_defect_before},
                            {"side_defect_after", rep.side_defect_after},
                            {"corner_defect_before", rep.corner_defect_before},
                            {"corner_defect_after", rep.corner_defect_after}};
    out.fields["surface"] = to_json(after, c);
    for (const auto& v : rep.violations)
        out.witnesses.push_back({{"violation", v}});
    return out;
}

int exit_for(Errc code)
{
    switch (code) {
    case Errc::DichotomyViolated:
        return Internal;
    default:
        return Usage;
    }
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Checks for flag simplicial complexes, disc fillings and group actions", "systolic-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--input,-i", o.input, "Read the primary document from a file");
    app.add_option("--action", o.action_file, "Action JSON file");
    app.add_option("--surface", o.surface_file, "Labelled surface JSON file");
    app.add_option("--move", o.move_file, "Swap move JSON file");
    app.add_flag("--quiet,-q", o.quiet, "Leave witnesses out of the report");
    app.add_option("--budget", o.budget, "Budget for the bounded procedure of the subcommand");

    using Handler = std::function<Outcome(Session&, const Options&)>;
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto sub = [&](const char* name, const char* help, Handler h) {
        auto* a = app.add_subcommand(name, help);
        handlers.emplace_back(a, std::move(h));
        return a;
    };

    auto* gen = app.add_subcommand("gen", "Emit a fixture");
    gen->add_option("family", o.family,
                    "chorded-wheel, double-cycle, wheel, simplex, hex-patch, special-surface or bicycle-complex")
        ->required();
    gen->add_option("--n", o.n, "Size parameter");
    gen->add_option("--r", o.r, "Radius of a hex patch");

    sub("check-systolic", "Connectivity, local 6-largeness and simple connectivity", check_systolic_cmd);
    sub("k-large", "Every short cycle has a diagonal", k_large_cmd)->add_option("--k", o.k)->required();
    sub("fill", "Minimal filling disc of a cycle", fill_cmd)
        ->add_option("--cycle", o.cycle, "Comma separated vertex names")
        ->delimiter(',')
        ->required();
    sub("gauss-bonnet", "Defect sum of a disc", gauss_bonnet_cmd);
    auto* def = sub("defect", "Vertex defects of a disc", defect_cmd);
    def->add_option("--vertex", o.vertex);
    def->add_option("--path", o.path, "Boundary path, comma separated")->delimiter(',');
    sub("invariance-set", "Fixed subcomplex of an involution", invariance_set_cmd)->add_option("--generator", o.generator);
    auto* orb = sub("orbit", "Orbit of a vertex or vertex set", orbit_cmd);
    orb->add_option("--vertex", o.vertex);
    orb->add_option("--set", o.set)->delimiter(',');
    sub("bicycle", "Dihedral orbit dichotomy", bicycle_cmd)->add_option("--vertex", o.vertex)->required();
    sub("fixed-simplex", "Least invariant simplex", fixed_simplex_cmd);
    sub("triangle-surface", "Corner surface or fixed vertex for generators r, s, t", triangle_surface_cmd);
    auto* sw = sub("swap", "Edge-swap on a labelled surface", swap_cmd);
    sw->add_option("--side", o.side);
    sw->add_option("--p", o.p);
    sw->add_option("--q", o.q);
    auto* dot = app.add_subcommand("export-dot", "1-skeleton in DOT");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    std::string command = gen->parsed() ? "gen" : dot->parsed() ? "export-dot" : "";
    for (const auto& [a, h] : handlers)
        if (a->parsed())
            command = a->get_name();

    Session session(o, in);
    const auto start = std::chrono::steady_clock::now();
    try {
        if (gen->parsed()) {
            out << generate(o).dump(2) << '\n';
            return Ok;
        }
        if (dot->parsed()) {
            out << to_dot(session.complex());
            return Ok;
        }
        Outcome res;
        for (const auto& [a, h] : handlers)
            if (a->parsed())
                res = h(session, o);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Json report = res.fields;
        report["command"] = command;
        report["verdict"] = res.verdict;
        report["witnesses"] = o.quiet ? Json::array() : res.witnesses;
        report["timings"] = {{"total_ms", ms}};
        out << report.dump(2) << '\n';
        return res.code;
    } catch (const Error& e) {
        Json report = {{"command", command},
                       {"verdict", "error"},
                       {"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}};
        out << report.dump(2) << '\n';
        err << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
}

}  // namespace systolic::cli
