#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "secant/charwalk.hpp"
#include "secant/construct.hpp"
#include "secant/ecurve.hpp"
#include "secant/legit.hpp"
#include "secant/plane.hpp"
#include "secant/rng.hpp"
#include "secant/search.hpp"
#include "secant/set_io.hpp"
#include "secant/spectrum.hpp"
#include "secant/sweep.hpp"

namespace secant::cli {

using io::ordered_json;

Format Global::fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Default;
}

namespace {

void emit(const Global& g, const std::string& text) {
    if (g.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
    } else {
        io::write_text_file(g.out, text);
    }
}

Format resolve(const Global& g, Format fallback) {
    const Format f = g.fmt();
    return f == Format::Default ? fallback : f;
}

void json_only(const Global& g, const char* cmd) {
    if (g.fmt() == Format::Csv) throw std::invalid_argument(std::string(cmd) + " writes JSON only");
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad number: " + s);
    return v;
}

// "1,2,5-8" -> {1,2,5,6,7,8}
std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        const std::uint64_t lo = parse_u64(item.substr(0, dash)), hi = parse_u64(item.substr(dash + 1));
        if (hi < lo || hi - lo > 1000000) throw std::invalid_argument("bad range: " + item);
        for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

// Accepts "3", "-1" or "1/4".
std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& s) {
    auto to_i64 = [](const std::string& t) {
        std::int64_t v = 0;
        const char* end = t.data() + t.size();
        auto [ptr, ec] = std::from_chars(t.data(), end, v);
        if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad number: " + t);
        return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {to_i64(s), 1};
    return {to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1))};
}

Elem field_value(const Field& f, const std::string& s) {
    const auto [num, den] = parse_fraction(s);
    return field_rational(f, num, den);
}

std::string law_text(const LawCheck& c) { return c.pass ? "pass" : "fail: " + c.counterexample; }

ordered_json law_json(const LawReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["params"] = {{"alpha", r.params.alpha}, {"beta", r.params.beta}, {"gamma", r.params.gamma}};
    j["slopes_checked"] = r.slopes_checked;
    j["difference"] = law_text(r.difference);
    j["interval"] = law_text(r.interval);
    j["cyclic_shift"] = law_text(r.cyclic_shift);
    j["factorization"] = law_text(r.factorization);
    j["range_bounds"] = law_text(r.range_bounds);
    j["range"] = r.range;
    j["range_lower"] = r.range_lower;
    j["range_upper"] = r.range_upper;
    j["displayed_form_matches"] = r.displayed_form_matches;
    std::vector<std::uint32_t> shifts(r.shifts.begin() + (r.shifts.empty() ? 0 : 1), r.shifts.end());
    j["shifts"] = shifts;
    j["exact_laws_pass"] = r.exact_laws_pass();
    return j;
}

ordered_json search_json(const ProjectivePlane& plane, const SearchResult& r) {
    ordered_json j;
    j["q"] = r.q;
    j["method"] = std::string(method_name(r.method));
    j["best_mode_count"] = r.best_mode_count;
    j["lower_bound_ceiling"] = lower_bound_ceiling(r.q);
    j["subsets_examined"] = r.subsets_examined;
    j["witness"] = io::set_to_json(plane, r.witness);
    return j;
}

std::string search_csv(const SearchResult& r) {
    std::string s = "q,method,best_mode_count,lower_bound_ceiling,subsets_examined,witness\n";
    std::string w;
    for (PointIndex p : r.witness.members()) w += (w.empty() ? "" : " ") + std::to_string(p);
    s += std::to_string(r.q) + "," + std::string(method_name(r.method)) + "," + std::to_string(r.best_mode_count) +
         "," + std::to_string(lower_bound_ceiling(r.q)) + "," + std::to_string(r.subsets_examined) + "," + w + "\n";
    return s;
}

// ---------------------------------------------------------------- plane

void add_plane(CLI::App& app, const Global& g, Runner& run) {
    struct Opts {
        std::uint32_t q = 0;
        std::string dump = "points";
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("plane", "Dump the canonical points or lines of PG(2,q)");
    sub->add_option("--q", o->q, "Plane order")->required();
    sub->add_option("--dump", o->dump, "points or lines")->check(CLI::IsMember({"points", "lines"}))->capture_default_str();
    sub->callback([o, &g, &run] {
        run = [o, &g] {
            const ProjectivePlane plane = build_plane(make_field(o->q));
            const auto& list = o->dump == "points" ? plane.points() : plane.lines();
            if (resolve(g, Format::Csv) == Format::Csv) {
                std::string s = "idx,x,y,z\n";
                for (std::size_t i = 0; i < list.size(); ++i)
                    s += std::to_string(i) + "," + std::to_string(list[i].x) + "," + std::to_string(list[i].y) + "," +
                         std::to_string(list[i].z) + "\n";
                emit(g, s);
            } else {
                ordered_json arr = ordered_json::array();
                for (std::size_t i = 0; i < list.size(); ++i)
                    arr.push_back({{"idx", i}, {"x", list[i].x}, {"y", list[i].y}, {"z", list[i].z}});
                emit(g, io::dump({{"q", o->q}, {o->dump, std::move(arr)}}));
            }
            return kOk;
        };
    });
}

// ---------------------------------------------------------------- spectrum

void add_spectrum(CLI::App& app, const Global& g, Runner& run) {
    struct Opts {
        std::uint32_t q = 0;
        std::string set_file, construction, save_set, kernel = "auto";
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("spectrum", "Secant spectrum, counting identities and bounds of one point set");
    sub->add_option("--q", o->q, "Plane order")->required();
    auto* sf = sub->add_option("--set-file", o->set_file, "Point set JSON to read");
    auto* co = sub->add_option("--construction", o->construction, "Named construction");
    sf->excludes(co);
    sub->add_option("--save-set", o->save_set, "Also write the point set as JSON here");
    sub->add_option("--kernel", o->kernel, "Counting kernel")
        ->check(CLI::IsMember({"auto", "bitmap", "affine", "gather"}))
        ->capture_default_str();
    sub->callback([o, &g, &run] {
        run = [o, &g] {
            if (o->set_file.empty() && o->construction.empty())
                throw std::invalid_argument("spectrum needs --set-file or --construction");
            const ProjectivePlane plane = build_plane(make_field(o->q));
            io::SpectrumMeta meta;
            PointSet set;
            if (!o->set_file.empty()) {
                set = io::set_from_json(plane, io::read_json_file(o->set_file));
            } else {
                ConstructionSpec spec = parse_construction(o->construction);
                if (spec.seeded() && !spec.has_seed) {
                    spec.has_seed = true;
                    spec.seed = g.seed;
                }
                set = build_construction(plane, spec, g.seed);
                meta.construction = spec.to_string();
                if (spec.seeded()) {
                    meta.generator = kCounterGeneratorName;
                    meta.seed = spec.seed;
                    meta.has_seed = true;
                }
            }
            if (!o->save_set.empty()) io::write_text_file(o->save_set, io::dump(io::set_to_json(plane, set)));

            SpectrumOptions so;
            so.threads = g.threads;
            if (o->kernel == "bitmap") so.kernel = CountingKernel::Bitmap;
            if (o->kernel == "affine") so.kernel = CountingKernel::AffineShift;
            if (o->kernel == "gather") so.kernel = CountingKernel::Gather;
            const SecantSpectrum sp = compute_spectrum(plane, set, so);
            const IdentityReport checks = verify_counting_identities(sp);
            const BoundsReport bounds = bounds_report(sp.q, sp.set_size);

            if (resolve(g, Format::Json) == Format::Json) {
                emit(g, io::dump(io::spectrum_to_json(sp, checks, bounds, meta)));
            } else {
                std::string s = "k,count\n";
                for (std::size_t k = 0; k < sp.histogram.size(); ++k)
                    s += std::to_string(k) + "," + std::to_string(sp.histogram[k]) + "\n";
                emit(g, s);
            }
            const bool ok = checks.ok() && sp.mode_count >= bounds.cor_ceiling;
            if (!ok) std::fprintf(stderr, "identity check failed: eq1=%lld eq2=%lld var=%lld\n",
                                  static_cast<long long>(checks.eq1), static_cast<long long>(checks.eq2),
                                  static_cast<long long>(checks.var));
            return ok ? kOk : kCheckFailed;
        };
    });
}

// ---------------------------------------------------------------- sweep

void add_sweep(CLI::App& app, const Global& g, Runner& run) {
    struct Opts {
        std::string primes, construction = "random:density=1/2", seeds;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("sweep", "One spectrum row per (prime, seed)");
    sub->add_option("--primes", o->primes, "Comma list of orders, ranges allowed (101,211,300-310)")->required();
    sub->add_option("--construction", o->construction, "Named construction")->capture_default_str();
    sub->add_option("--seeds", o->seeds, "Comma list of seeds, ranges allowed; default: the global --seed");
    sub->callback([o, &g, &run] {
        run = [o, &g] {
            SweepOptions so;
            for (std::uint64_t p : parse_list(o->primes)) so.primes.push_back(static_cast<std::uint32_t>(p));
            so.construction = parse_construction(o->construction);
            so.seeds = o->seeds.empty() ? std::vector<std::uint64_t>{g.seed} : parse_list(o->seeds);
            so.threads = g.threads;
            const auto rows = run_sweep(so);
            if (resolve(g, Format::Csv) == Format::Csv) {
                std::ostringstream os;
                write_sweep_csv(os, rows);
                emit(g, os.str());
            } else {
                ordered_json arr = ordered_json::array();
                for (const SweepRow& r : rows)
                    arr.push_back({{"q", r.q},
                                   {"construction", r.construction},
                                   {"seed", r.seed},
                                   {"set_size", r.set_size},
                                   {"mode_k", r.mode_k},
                                   {"mode_count", r.mode_count},
                                   {"cor_bound", r.cor_bound},
                                   {"cor_ceiling", r.cor_ceiling},
                                   {"prop_bound", r.prop_bound},
                                   {"thm_lower", r.thm_lower},
                                   {"thm_lower_clamped", r.thm_lower_clamped},
                                   {"ratio", r.ratio},
                                   {"checks", {{"eq1", r.checks.eq1}, {"eq2", r.checks.eq2}, {"var", r.checks.var}}},
                                   {"bound_ok", r.bound_ok},
                                   {"error", r.error}});
                emit(g, io::dump({{"schema", 1}, {"rows", std::move(arr)}}));
            }
            int rc = kOk;
            for (const SweepRow& r : rows) {
                if (!r.error.empty())
                    std::fprintf(stderr, "q=%u seed=%llu: %s\n", r.q, static_cast<unsigned long long>(r.seed),
                                 r.error.c_str());
                else if (!r.passed())
                    rc = kCheckFailed;
            }
            return rc;
        };
    });
}

// ---------------------------------------------------------------- searches

void add_exhaustive(CLI::App& app, const Global& g, Runner& run) {
    auto q = std::make_shared<std::uint32_t>(0);
    auto* sub = app.add_subcommand("exhaustive", "Exact min over point sets of the largest secant class (q <= 4)");
    sub->add_option("--q", *q, "Plane order")->required();
    sub->callback([q, &g, &run] {
        run = [q, &g] {
            const ProjectivePlane plane = build_plane(make_field(*q));
            const SearchResult r = exhaustive_minmax(plane, g.threads);
            emit(g, resolve(g, Format::Json) == Format::Json ? io::dump(search_json(plane, r)) : search_csv(r));
            return r.best_mode_count >= lower_bound_ceiling(r.q) ? kOk : kCheckFailed;
        };
    });
}

void add_search(CLI::App& app, const Global& g, Runner& run) {
    auto o = std::make_shared<LocalSearchOptions>();
    auto q = std::make_shared<std::uint32_t>(0);
    auto* sub = app.add_subcommand("search", "Random-restart local search for a small largest secant class");
    sub->add_option("--q", *q, "Plane order")->required();
    sub->add_option("--iters", o->iters, "Flip proposals per restart")->capture_default_str();
    sub->add_option("--restarts", o->restarts, "Number of restarts")->capture_default_str();
    sub->callback([o, q, &g, &run] {
        run = [o, q, &g] {
            const ProjectivePlane plane = build_plane(make_field(*q));
            LocalSearchOptions lo = *o;
            lo.seed = g.seed;
            lo.threads = g.threads;
            const SearchResult r = local_search(plane, lo);
            emit(g, resolve(g, Format::Json) == Format::Json ? io::dump(search_json(plane, r)) : search_csv(r));
            return r.best_mode_count >= lower_bound_ceiling(r.q) ? kOk : kCheckFailed;
        };
    });
}

// ---------------------------------------------------------------- charwalk / projection

void add_charwalk(CLI::App& app, const Global& g, Runner& run) {
    struct Opts {
        std::uint32_t p = 0;
        std::uint32_t a = 0;
        bool levels = false;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("charwalk", "Legendre prefix-sum walk Psi(a, t)");
    sub->add_option("--p", o->p, "Odd prime")->required();
    sub->add_option("--a", o->a, "Start parameter")->capture_default_str();
    sub->add_flag("--levels", o->levels, "Emit level occupation counts instead of the walk");
    sub->callback([o, &g, &run] {
        run = [o, &g] {
            const Walk w = psi_walk(o->p, o->a);
            const bool csv = resolve(g, Format::Csv) == Format::Csv;
            if (!o->levels) {
                if (csv) {
                    std::string s = "t,psi\n";
                    for (std::size_t t = 0; t < w.values.size(); ++t)
                        s += std::to_string(t) + "," + std::to_string(w.values[t]) + "\n";
                    emit(g, s);
                } else {
                    emit(g, io::dump({{"p", w.p}, {"a", w.a}, {"psi", w.values}}));
                }
                return kOk;
            }
            const LevelStats st = level_stats(w);
            if (csv) {
                std::string s = "# zero_count=" + std::to_string(st.zero_count) +
                                " max_level_count=" + std::to_string(st.max_level_count) +
                                " max_level=" + std::to_string(st.max_level) + " range=" + std::to_string(st.range) +
                                " range_within_sqrt_log=" + std::to_string(st.range_within_sqrt_log) +
                                " zeros_within_sqrt_log2=" + std::to_string(st.zeros_within_sqrt_log2) + "\n";
                s += "level,count\n";
                for (const auto& [lvl, c] : st.counts) s += std::to_string(lvl) + "," + std::to_string(c) + "\n";
                emit(g, s);
            } else {
                ordered_json counts = ordered_json::array();
                for (const auto& [lvl, c] : st.counts) counts.push_back({{"level", lvl}, {"count", c}});
                emit(g, io::dump({{"p", w.p},
                                  {"a", w.a},
                                  {"zero_count", st.zero_count},
                                  {"max_level_count", st.max_level_count},
                                  {"max_level", st.max_level},
                                  {"min", st.min_value},
                                  {"max", st.max_value},
                                  {"range", st.range},
                                  {"range_within_sqrt_log", st.range_within_sqrt_log},
                                  {"zeros_within_sqrt_log2", st.zeros_within_sqrt_log2},
                                  {"levels", std::move(counts)}}));
            }
            return kOk;
        };
    });
}

void add_projection(CLI::App& app, const Global& g, Runner& run) {
    struct Opts {
        std::uint32_t p = 0;
        std::string alpha = "1/4", beta = "1", gamma = "1";
        std::uint32_t d = 1;
        std::string report;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("projection", "Projection profile of the parabola region and its laws");
    sub->add_option("--p", o->p, "Prime > 3")->required();
    sub->add_option("--alpha", o->alpha, "alpha (integer or fraction)")->capture_default_str();
    sub->add_option("--beta", o->beta, "beta")->capture_default_str();
    sub->add_option("--gamma", o->gamma, "gamma")->capture_default_str();
    sub->add_option("--d", o->d, "Slope")->capture_default_str();
    sub->add_option("--report", o->report, "Law report JSON path for CSV output (default: stderr)");
    sub->callback([o, &g, &run] {
        run = [o, &g] {
            const Field f = make_field(o->p);
            if (!f.is_prime()) throw std::invalid_argument("parameter error: projection needs a prime p > 3");
            const ParabolaParams pp{field_value(f, o->alpha), field_value(f, o->beta), field_value(f, o->gamma)};
            const ProjectivePlane plane = build_plane(f);
            const ProjectionProfile prof = projection_profile(plane, pp, o->d);
            const LawReport rep = verify_projection_laws(plane, pp, LawOptions{true, g.threads});
            ordered_json laws = law_json(rep);
            if (resolve(g, Format::Csv) == Format::Csv) {
                std::string s = "b,pr\n";
                for (std::size_t b = 0; b < prof.pr.size(); ++b)
                    s += std::to_string(b) + "," + std::to_string(prof.pr[b]) + "\n";
                emit(g, s);
                if (o->report.empty())
                    std::fputs(io::dump(laws).c_str(), stderr);
                else
                    io::write_text_file(o->report, io::dump(laws));
            } else {
                emit(g, io::dump({{"p", prof.p}, {"d", prof.d}, {"pr", prof.pr}, {"laws", std::move(laws)}}));
            }
            return rep.exact_laws_pass() ? kOk : kCheckFailed;
        };
    });
}

// ---------------------------------------------------------------- ec

void add_ec(CLI::App& app, const Global& g, Runner& run) {
    auto* ec = app.add_subcommand("ec", "Elliptic-curve counts and the elliptic-curve region");
    ec->require_subcommand(1);

    struct CountOpts {
        std::uint32_t p = 0;
        std::int64_t a = 0, b = 0;
    };
    auto c = std::make_shared<CountOpts>();
    auto* count = ec->add_subcommand("count", "Point count of y^2 = x^3 + a x + b");
    count->add_option("--p", c->p, "Prime > 3")->required();
    count->add_option("--a", c->a, "a")->required();
    count->add_option("--b", c->b, "b")->required();
    count->callback([c, &g, &run] {
        run = [c, &g] {
            const Curve cv = curve_count(c->p, c->a, c->b);
            if (resolve(g, Format::Json) == Format::Json)
                emit(g, io::dump({{"p", cv.p}, {"a", cv.a}, {"b", cv.b}, {"count", cv.count}, {"trace", cv.trace}}));
            else
                emit(g, "p,a,b,count,trace\n" + std::to_string(cv.p) + "," + std::to_string(cv.a) + "," +
                            std::to_string(cv.b) + "," + std::to_string(cv.count) + "," + std::to_string(cv.trace) +
                            "\n");
            return kOk;
        };
    });

    auto sp = std::make_shared<std::uint32_t>(0);
    auto* scan = ec->add_subcommand("scan", "Spectrum of the region and the line/curve relation on every line");
    scan->add_option("--p", *sp, "Prime > 3")->required();
    scan->callback([sp, &g, &run] {
        run = [sp, &g] {
            json_only(g, "ec scan");
            const ProjectivePlane plane = build_plane(make_field(*sp));
            const EcScanReport rep = ec_spectrum_scan(plane, g.threads);
            ordered_json hist = ordered_json::array();
            for (std::size_t k = 0; k < rep.spectrum.histogram.size(); ++k)
                hist.push_back({{"k", k}, {"count", rep.spectrum.histogram[k]}});
            const IdentityReport checks = verify_counting_identities(rep.spectrum);
            emit(g, io::dump({{"p", rep.p},
                              {"set_size", rep.spectrum.set_size},
                              {"histogram", std::move(hist)},
                              {"mode_k", rep.spectrum.mode_k},
                              {"mode_count", rep.spectrum.mode_count},
                              {"lines_checked", rep.lines_checked},
                              {"relation_violations", rep.relation_violations},
                              {"skipped_lines", rep.skipped_lines},
                              {"context_scale", rep.context_scale},
                              {"mode_ratio", rep.mode_ratio},
                              {"mode_ratio_q32", rep.mode_ratio_q32},
                              {"checks", {{"eq1", checks.eq1}, {"eq2", checks.eq2}, {"var", checks.var}}}}));
            const bool ok = rep.relation_violations == 0 && checks.ok() &&
                            rep.spectrum.mode_count >= lower_bound_ceiling(rep.p);
            return ok ? kOk : kCheckFailed;
        };
    });
}

// ---------------------------------------------------------------- legit

ordered_json coloring_json(const LinearHypergraph& h, const LegitColoring& c, bool trace) {
    ordered_json j = io::coloring_to_json(c.color);
    j["n"] = h.n;
    j["blue_counts"] = c.blue_counts;
    j["targets"] = c.targets;
    ordered_json diag = ordered_json::array();
    for (const EdgeDiagnostics& d : c.diagnostics)
        diag.push_back({{"private", d.private_vertices},
                        {"captured", d.captured},
                        {"disjoint", d.disjoint},
                        {"recolors", d.recolors},
                        {"phase1_blue", d.phase1_blue}});
    j["diagnostics"] = std::move(diag);
    if (trace) j["trace"] = c.trace;
    return j;
}

void add_legit(CLI::App& app, const Global& g, Runner& run) {
    auto* lg = app.add_subcommand("legit", "Linear hypergraphs and legitimate 2-colorings");
    lg->require_subcommand(1);

    struct GenOpts {
        std::uint32_t n = 0;
        std::string mode = "pairwise";
    };
    auto go = std::make_shared<GenOpts>();
    auto* gen = lg->add_subcommand("gen", "Generate an n-uniform linear hypergraph with n edges");
    gen->add_option("--n", go->n, "Edge count and size")->required();
    gen->add_option("--mode", go->mode, "Generator mode")
        ->check(CLI::IsMember({"pairwise", "sunflower", "mixed"}))
        ->capture_default_str();
    gen->callback([go, &g, &run] {
        run = [go, &g] {
            json_only(g, "legit gen");
            const LinearHypergraph h = generate_linear_hypergraph(go->n, g.seed, {parse_mode(go->mode)});
            emit(g, io::dump(io::hypergraph_to_json(h)));
            return kOk;
        };
    });

    struct ColorOpts {
        std::string in;
        std::uint64_t permute_seed = 0;
        bool permute = false;
        bool trace = false;
    };
    auto co = std::make_shared<ColorOpts>();
    auto* color = lg->add_subcommand("color", "Two-phase legitimate coloring");
    color->add_option("--in", co->in, "Hypergraph JSON")->required();
    auto* ps = color->add_option("--permute-seed", co->permute_seed, "Shuffle the edge order with this seed first");
    color->add_flag("--trace", co->trace, "Include blue counts after every phase-2 step");
    color->callback([co, ps, &g, &run] {
        co->permute = ps->count() > 0;
        run = [co, &g] {
            json_only(g, "legit color");
            LinearHypergraph h = io::hypergraph_from_json(io::read_json_file(co->in));
            if (co->permute) h = permute_edges(h, co->permute_seed);
            int rc = kOk;
            ordered_json j;
            try {
                const LegitColoring c = two_phase_coloring(h, co->trace);
                j = coloring_json(h, c, co->trace);
                const LegitimacyResult v = verify_legitimate(h, c.color);
                j["legitimate"] = v.legitimate;
                if (!v.legitimate || c.blue_counts != c.targets) rc = kCheckFailed;
            } catch (const ColoringInfeasible& e) {
                const EdgeDiagnostics& d = e.diagnostics();
                j = {{"error", e.what()},
                     {"edge", e.edge()},
                     {"diagnostics",
                      {{"private", d.private_vertices}, {"captured", d.captured}, {"disjoint", d.disjoint}}}};
                rc = kCheckFailed;
            }
            if (co->permute) j["edges"] = h.edges;
            emit(g, io::dump(j));
            return rc;
        };
    });

    struct VerifyOpts {
        std::string in, coloring;
    };
    auto vo = std::make_shared<VerifyOpts>();
    auto* verify = lg->add_subcommand("verify", "Check that per-edge color multiplicities are pairwise distinct");
    verify->add_option("--in", vo->in, "Hypergraph JSON")->required();
    verify->add_option("--coloring", vo->coloring, "Coloring JSON")->required();
    verify->callback([vo, &g, &run] {
        run = [vo, &g] {
            json_only(g, "legit verify");
            const auto cj = io::read_json_file(vo->coloring);
            LinearHypergraph h = io::hypergraph_from_json(io::read_json_file(vo->in));
            if (cj.contains("edges")) {
                h.edges = cj.at("edges").get<std::vector<std::vector<std::uint32_t>>>();
                validate_hypergraph(h);
            }
            const LegitimacyResult v = verify_legitimate(h, io::coloring_from_json(cj));
            ordered_json j{{"legitimate", v.legitimate}};
            if (v.violating_pair) j["violating_pair"] = {v.violating_pair->first, v.violating_pair->second};
            emit(g, io::dump(j));
            return v.legitimate ? kOk : kCheckFailed;
        };
    });
}

}  // namespace

void register_commands(CLI::App& app, const Global& g, Runner& run) {
    add_plane(app, g, run);
    add_spectrum(app, g, run);
    add_sweep(app, g, run);
    add_exhaustive(app, g, run);
    add_search(app, g, run);
    add_charwalk(app, g, run);
    add_projection(app, g, run);
    add_ec(app, g, run);
    add_legit(app, g, run);
}

}  // namespace secant::cli
