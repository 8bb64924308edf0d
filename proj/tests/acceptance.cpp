// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle/oracle.hpp"
#include "swap_corpus.hpp"
#include "systolic/actions.hpp"
#include "systolic/filling.hpp"
#include "systolic/fixtures.hpp"
#include "systolic/parallel.hpp"
#include "systolic/systolicity.hpp"

using namespace systolic;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const char* title, double limit_ms, const std::function<Verdict()>& body)
{
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool in_time = limit_ms <= 0 || ms <= limit_ms;
    if (!in_time)
        v.detail += "; over time limit";
    const bool pass = v.pass && in_time;
    failures += !pass;
    if (limit_ms > 0)
        std::printf("%s C%02d %s: %s [%.1f ms, limit %.0f ms]\n", pass ? "PASS" : "FAIL", id, title, v.detail.c_str(),
                    ms, limit_ms);
    else
        std::printf("%s C%02d %s: %s [%.1f ms]\n", pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), ms);
    std::fflush(stdout);
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : ", ") + p;
    return out;
}

bool systolic_disc(const DiscTriangulation& d)
{
    try {
        return is_systolic_disc(d).systolic;
    } catch (const Error&) {
        return false;
    }
}

std::vector<DiscTriangulation> flip_corpus()
{
    std::vector<DiscTriangulation> out;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 600; ++i) {
        const int r = 1 + i % 4;
        const int flips = static_cast<int>(rng() % static_cast<std::uint64_t>(3 * r * r + 1));
        out.push_back(random_flip_disc(r, flips, rng, i % 3 == 0 ? FlipPolicy::KeepSystolic : FlipPolicy::Any));
    }
    return out;
}

/// Family member is systolic exactly for n >= 6.
Verdict iff_at_six(const std::function<FlagComplex(int)>& gen, int lo, int hi)
{
    std::vector<std::string> parts;
    bool ok = true;
    for (int n = lo; n <= hi; ++n) {
        auto rep = check_systolic(gen(n));
        ok = ok && rep.systolic() == (n >= 6);
        parts.push_back(std::to_string(n) + ":" + to_string(rep.verdict));
    }
    return {ok, join(parts)};
}

struct FillTally {
    std::size_t cycles = 0, equal = 0, systolic = 0, unfilled = 0;
    std::size_t iso_checked = 0, iso_ok = 0;
};

FillTally fill_against_oracle(const FlagComplex& c, bool certified)
{
    auto cycles = enumerate_cycles(c, 3, 8);
    FillTally t;
    t.cycles = cycles.size();
    std::atomic<std::size_t> equal{0}, sys{0}, unfilled{0}, iso{0};
    const std::size_t V = c.size();
    parallel_for(cycles.size(), [&](std::size_t i) {
        const auto& cy = cycles[i].vertices;
        const std::size_t l = cy.size();
        // no injective disc has more than V - l interior vertices
        const std::size_t open = l + 2 * (V - l) - 2;
        auto f = fill_minimal(c, cy, open);
        if (f.status != FillStatus::Filled) {
            ++unfilled;
            if (!oracle::min_area(c, cy, 2))
                ++equal;
            return;
        }
        const int k = static_cast<int>((f.area + 2 - l) / 2);
        auto o = oracle::min_area(c, cy, k);
        if (o && *o == f.area)
            ++equal;
        if (systolic_disc(f.surface->disc))
            ++sys;
        if (certified && 6 * f.area <= l * l)
            ++iso;
    });
    t.equal = equal;
    t.systolic = sys;
    t.unfilled = unfilled;
    t.iso_checked = certified ? t.cycles - t.unfilled : 0;
    t.iso_ok = iso;
    return t;
}

struct NamedAction {
    std::string name;
    FlagComplex complex;
    ActionSpec spec;
};

ActionSpec single(char g, Permutation p) { return {{{g, std::move(p)}}, {}, ""}; }

std::vector<NamedAction> action_corpus()
{
    std::vector<NamedAction> out;
    auto w10 = gen_wheel(10), w12 = gen_wheel(12);
    out.push_back({"W10 D5 vertex axes", w10, dihedral_rim_action(w10, 5, Axes::Vertex)});
    out.push_back({"W10 D5 edge axes", w10, dihedral_rim_action(w10, 5, Axes::Edge)});
    out.push_back({"W10 rotation", w10, rim_rotation_action(w10, 10, 1)});
    out.push_back({"W12 D6 vertex axes", w12, dihedral_rim_action(w12, 6, Axes::Vertex)});
    out.push_back({"W12 D6 edge axes", w12, dihedral_rim_action(w12, 6, Axes::Edge)});
    for (int n : {6, 7, 8}) {
        auto cw = gen_chorded_wheel(n);
        const auto tag = "CW" + std::to_string(n);
        out.push_back({tag + " D" + std::to_string(n) + " vertex axes", cw, dihedral_rim_action(cw, n, Axes::Vertex)});
        out.push_back({tag + " D" + std::to_string(n) + " edge axes", cw, dihedral_rim_action(cw, n, Axes::Edge)});
        out.push_back({tag + " rotation by 2", cw, rim_rotation_action(cw, 2 * n, 2)});
    }
    for (int r : {2, 3}) {
        auto h = gen_hex_patch(r).skeleton();
        auto rot = hex_rotation(h), ref = hex_reflection(h);
        const auto tag = "hex" + std::to_string(r);
        out.push_back({tag + " rotation", h, single('g', rot)});
        out.push_back({tag + " reflection", h, single('u', ref)});
        ActionSpec d6{{{'u', ref}, {'g', rot}}, {"uu", "gggggg", "ugug"}, ""};
        out.push_back({tag + " D6", h, d6});
    }
    auto k4 = gen_simplex(4);
    Permutation a{1, 0, 3, 2}, b{2, 3, 0, 1};
    out.push_back({"K4 Klein four", k4, ActionSpec{{{'u', a}, {'v', b}}, {"uu", "vv", "uvuv"}, ""}});
    out.push_back({"bicycle complex trivial", gen_bicycle_complex(), single('u', identity_permutation(14))});
    return out;
}

bool set_invariant(const Permutation& g, std::vector<Vertex> s)
{
    std::sort(s.begin(), s.end());
    std::vector<Vertex> img;
    for (Vertex v : s)
        img.push_back(g[v]);
    std::sort(img.begin(), img.end());
    return img == s;
}

}  // namespace

int main()
{
    std::printf("acceptance run, %zu worker threads\n", thread_count());

    criterion(1, "chorded wheels systolic iff n >= 6", 5000, [] {
        return iff_at_six(gen_chorded_wheel, 3, 8);
    });

    criterion(2, "double cycles systolic iff n >= 6", 10000, [] {
        auto v = iff_at_six(gen_double_cycle, 4, 8);
        if (!v.pass) {
            auto rep = check_systolic(gen_double_cycle(6));
            auto c = gen_double_cycle(6);
            std::vector<std::string> names;
            for (Vertex x : rep.link_cycle->vertices)
                names.push_back(c.name(x));
            v.detail += "; n=6 link of " + c.name(*rep.link_vertex) + " has chordless cycle " + join(names);
        }
        return v;
    });

    const auto corpus = flip_corpus();

    criterion(3, "Gauss-Bonnet and Pick on random flip discs", 10000, [&] {
        std::size_t bad = 0;
        for (const auto& d : corpus) {
            bad += gauss_bonnet_sum(d) != 6;
            bad += d.area() != 2 * d.interior_vertices().size() + d.boundary().size() - 2;
        }
        return Verdict{bad == 0 && corpus.size() >= 500,
                       std::to_string(corpus.size()) + " discs, radius <= 4, " + std::to_string(bad) + " violations"};
    });

    criterion(4, "boundary defect law on systolic discs", 10000, [&] {
        // flips rarely keep a disc systolic, so minimal discs of short cycles in
        // the certified chorded wheel (cone inside, often negative) join the corpus
        std::vector<DiscTriangulation> extra;
        auto cw = gen_chorded_wheel(6);
        for (const auto& cy : enumerate_cycles(cw, 3, 8)) {
            auto f = fill_minimal(cw, cy.vertices, isoperimetric_budget(cy.length()));
            if (f.surface)
                extra.push_back(f.surface->disc);
        }
        std::size_t n = 0, bad = 0, strict = 0, from_flips = 0;
        auto check = [&](const DiscTriangulation& d) {
            if (!systolic_disc(d))
                return false;
            ++n;
            int bsum = 0;
            bool negative = false;
            for (Vertex v = 0; v < d.size(); ++v) {
                const int k = static_cast<int>(d.triangle_count(v));
                if (d.on_boundary(v))
                    bsum += 3 - k;
                else
                    negative = negative || k > 6;
            }
            const auto rep = boundary_defect_check(d);
            strict += bsum > 6;
            bad += bsum < 6 || (bsum == 6) == negative || rep.sum != bsum || !rep.equality_iff_no_negative_interior;
            return true;
        };
        for (const auto& d : corpus)
            from_flips += check(d);
        for (const auto& d : extra)
            check(d);
        return Verdict{bad == 0 && from_flips > 0 && strict > 0,
                       std::to_string(n) + " systolic discs (" + std::to_string(from_flips) + " from flips), " +
                           std::to_string(strict) + " with sum > 6, " + std::to_string(bad) + " violations"};
    });

    std::map<std::string, FillTally> tallies;
    criterion(5, "minimal fillings match the oracle and are systolic", 60000, [&] {
        tallies["W10"] = fill_against_oracle(gen_wheel(10), true);
        tallies["CW6"] = fill_against_oracle(gen_chorded_wheel(6), true);
        tallies["DC6"] = fill_against_oracle(gen_double_cycle(6), false);
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& [name, t] : tallies) {
            ok = ok && t.equal == t.cycles && t.unfilled == 0 && t.systolic == t.cycles;
            parts.push_back(name + " " + std::to_string(t.cycles) + " cycles: area match " + std::to_string(t.equal) +
                            ", systolic disc " + std::to_string(t.systolic) + ", unfilled " +
                            std::to_string(t.unfilled));
        }
        const auto& dc = tallies["DC6"];
        if (dc.systolic != dc.cycles)
            parts.push_back("DC6 is not locally 6-large (C02), " + std::to_string(dc.cycles - dc.systolic) +
                            " of its minimal discs have an interior vertex of defect > 0 or are not flag");
        return Verdict{ok, join(parts)};
    });

    criterion(6, "isoperimetric bound in certified fixtures", 30000, [&] {
        std::size_t checked = 0, ok = 0;
        for (const auto& [name, t] : tallies) {
            checked += t.iso_checked;
            ok += t.iso_ok;
        }
        // hex patches are systolic discs; their cycles fill inside the patch
        auto hex = gen_hex_patch(3).skeleton();
        if (!check_systolic(hex).systolic())
            return Verdict{false, "hex patch not certified"};
        auto cycles = enumerate_cycles(hex, 3, 9);
        std::atomic<std::size_t> hc{0}, hok{0};
        parallel_for(cycles.size(), [&](std::size_t i) {
            const auto& cy = cycles[i].vertices;
            const std::size_t l = cy.size();
            auto f = fill_minimal(hex, cy, l + 2 * (hex.size() - l) - 2);
            if (f.status != FillStatus::Filled)
                return;
            ++hc;
            hok += 6 * f.area <= l * l;
        });
        checked += hc;
        ok += hok;
        return Verdict{checked > 0 && ok == checked, std::to_string(checked) + " minimal surfaces, " +
                                                         std::to_string(checked - ok) + " above l^2/6"};
    });

    criterion(7, "special surface", 120000, [] {
        const auto t0 = Clock::now();
        auto found = special_surface_search();
        const double search_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        const auto& s = gen_special_surface();
        const auto t1 = Clock::now();
        const bool cached = &gen_special_surface() == &s;
        const double cached_ms = std::chrono::duration<double, std::milli>(Clock::now() - t1).count();
        std::multiset<int> bd;
        for (Vertex v : s.boundary())
            bd.insert(defect(s, v));
        const std::multiset<int> want{1, 1, 1, 1, 1, 1, 0, 0, 0, 0};
        const bool ok = found.classes.size() == 1 && s.area() == 16 && s.boundary().size() == 10 &&
                        s.interior_vertices().size() == 4 && bd == want && systolic_disc(s) && cached;
        std::ostringstream os;
        os << found.classes.size() << " class(es) from " << found.labeled.size() << " labelled solutions, area "
           << s.area() << ", boundary " << s.boundary().size() << ", interior " << s.interior_vertices().size()
           << ", search " << search_ms << " ms, cached lookup " << cached_ms << " ms";
        return Verdict{ok, os.str()};
    });

    criterion(8, "bicycle property on W10, violation on DC6", 30000, [] {
        auto w = gen_wheel(10);
        auto spec = dihedral_rim_action(w, 5, Axes::Edge);
        auto rep = bicycle_check(w, spec, w.at("x0"));
        const Vertex c = w.at("c");
        auto xu = invariance_set(w, spec.generator('u')).vertices;
        auto xv = invariance_set(w, spec.generator('v')).vertices;
        auto both = intersect(xu, xv);
        bool join_full = true;
        for (Vertex x : rep.orbit)
            for (Vertex s : rep.sigma)
                join_full = join_full && w.adjacent(x, s);
        const auto& hc = rep.hamiltonian_cycle;
        const bool cycle_ok = hc.size() == 10 && is_valid_cycle(w, hc) && !has_diagonal(w, hc);
        const bool sigma_ok = rep.sigma == std::vector<Vertex>{c} &&
                              std::includes(both.begin(), both.end(), rep.sigma.begin(), rep.sigma.end());
        const bool w_ok = rep.kind == BicycleCase::CycleCase && cycle_ok && sigma_ok && join_full &&
                          rep.bipartite_ok && rep.sigma_in_Xu_Xv;

        auto dc = gen_double_cycle(6);
        auto dspec = dihedral_rim_action(dc, 6, Axes::Edge);
        BicycleOptions loose;
        loose.strict = false;
        auto drep = bicycle_check(dc, dspec, dc.at("y0"), loose);
        const bool d_ok = drep.kind == BicycleCase::Violation;
        std::string detail = "W10: " + to_string(rep.kind) + ", chordless 10-cycle " + (cycle_ok ? "yes" : "no") +
                             ", sigma {c} in X_u^X_v " + (sigma_ok ? "yes" : "no") + ", full join " +
                             (join_full ? "yes" : "no") + "; DC6 at y0: " + to_string(drep.kind) + " (" +
                             drep.failed_clause + ")";
        return Verdict{w_ok && d_ok, detail};
    });

    const auto actions = action_corpus();

    criterion(9, "invariant simplex for every finite action", 30000, [&] {
        std::size_t ok = 0, ran = 0;
        std::vector<std::string> bad;
        for (const auto& a : actions) {
            if (!check_systolic(a.complex).systolic()) {
                bad.push_back(a.name + " (not certified)");
                continue;
            }
            ++ran;
            verify_action(a.complex, a.spec);
            auto s = invariant_simplex_search(a.complex, a.spec);
            bool good = s && a.complex.is_clique(*s);
            for (const auto& [g, p] : a.spec.generators)
                good = good && set_invariant(p, *s);
            if (good)
                ++ok;
            else
                bad.push_back(a.name);
        }
        std::string detail = std::to_string(ok) + "/" + std::to_string(actions.size()) + " actions";
        if (!bad.empty())
            detail += "; failing: " + join(bad);
        return Verdict{ok == actions.size() && ran >= 10, detail};
    });

    criterion(10, "invariance sets of every involution", 30000, [&] {
        std::size_t n = 0, bad = 0;
        for (const auto& a : actions) {
            if (!check_systolic(a.complex).systolic())
                continue;
            std::set<Permutation> seen;
            for (const auto& g : enumerate_group(a.spec, a.complex.size())) {
                if (!is_involution(g) || g == identity_permutation(g.size()) || !seen.insert(g).second)
                    continue;
                ++n;
                bad += !verify_Xu_properties(a.complex, g).ok();
            }
        }
        return Verdict{n > 0 && bad == 0, std::to_string(n) + " involutions, " + std::to_string(bad) + " failing"};
    });

    criterion(11, "edge swaps", 30000, [] {
        auto samples = swap_corpus::random_samples(77, 240, 40000);
        std::size_t bad = 0, touched_other = 0;
        for (const auto& s : samples) {
            auto after = edge_swap(s.c.ambient, s.c.surface, s.move);
            auto rep = swap_effect_report(s.c.surface, after, s.move);
            bad += !rep.ok();
            for (int k = 0; k < 3; ++k)
                touched_other += k != rep.side && rep.side_defect_before[k] != rep.side_defect_after[k];
        }
        return Verdict{samples.size() >= 200 && bad == 0,
                       std::to_string(samples.size()) + " (surface, move) pairs, " + std::to_string(bad) +
                           " violations, " + std::to_string(touched_other) + " other-side changes"};
    });

    criterion(12, "triangle group (2,4,5) end to end", 30000, [] {
        auto w = gen_wheel(10);
        auto d5 = dihedral_rim_action(w, 5, Axes::Edge);
        auto id = identity_permutation(w.size());
        std::vector<std::pair<std::string, ActionSpec>> cases{
            {"trivial", ActionSpec{{{'r', id}, {'s', id}, {'t', id}}, triangle_relations(4), "triangle-2-4-5"}},
            {"D5 quotient", ActionSpec{{{'r', d5.generator('u')}, {'s', id}, {'t', d5.generator('v')}},
                                       triangle_relations(4), "triangle-2-4-5"}}};
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& [name, spec] : cases) {
            auto res = triangle_surface(w, spec);
            bool good = res.degenerate && !res.invariant_simplex.empty() && w.is_clique(res.invariant_simplex);
            for (const auto& [g, p] : spec.generators)
                good = good && set_invariant(p, res.invariant_simplex);
            ok = ok && good;
            std::vector<std::string> names;
            for (Vertex v : res.invariant_simplex)
                names.push_back(w.name(v));
            parts.push_back(name + ": " + (res.degenerate ? "degenerate" : "surface") + " {" + join(names) + "}");
        }
        return Verdict{ok, join(parts)};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
