#include "secant/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "secant/parallel.hpp"

namespace secant {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad integer: " + std::string(s));
    return v;
}

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational::make(parse_int(s), 1);
    return Rational::make(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string rational_text(const Rational& r) {
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::map<std::string, std::string, std::less<>> parse_args(std::string_view body) {
    std::map<std::string, std::string, std::less<>> kv;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view item = body.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value in construction: " + std::string(item));
        kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return kv;
}

// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

ConstructionSpec parse_construction(std::string_view text) {
    ConstructionSpec spec;
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    const auto args = parse_args(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1));
    auto take = [&](std::string_view key, auto&& fn) {
        if (auto it = args.find(key); it != args.end()) fn(it->second);
    };
    auto reject_unknown = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto& [k, v] : args) {
            bool ok = false;
            for (auto a : allowed) ok = ok || k == a;
            if (!ok) throw std::invalid_argument("unknown construction parameter: " + k);
        }
    };
    if (kind == "random") {
        spec.kind = ConstructionSpec::Kind::Random;
        reject_unknown({"density", "seed"});
        take("density", [&](const std::string& v) { spec.density = parse_rational(v); });
        take("seed", [&](const std::string& v) {
            spec.has_seed = true;
            spec.seed = static_cast<std::uint64_t>(parse_int(v));
        });
        if (spec.density.num < 0 || spec.density.num > spec.density.den)
            throw std::invalid_argument("density must lie in [0, 1]");
    } else if (kind == "parabola") {
        spec.kind = ConstructionSpec::Kind::Parabola;
        reject_unknown({"a", "b", "g"});
        take("a", [&](const std::string& v) { spec.alpha = parse_rational(v); });
        take("b", [&](const std::string& v) { spec.beta = parse_rational(v); });
        take("g", [&](const std::string& v) { spec.gamma = parse_rational(v); });
    } else if (kind == "family") {
        spec.kind = ConstructionSpec::Kind::Family;
        reject_unknown({"c"});
        take("c", [&](const std::string& v) {
            const Rational r = parse_rational(v);
            spec.c = FamilyParams{r.num, r.den};
        });
        if (spec.c.num <= 0 || spec.c.num >= spec.c.den) throw std::invalid_argument("c must lie in (0, 1)");
    } else if (kind == "ecregion") {
        spec.kind = ConstructionSpec::Kind::EcRegion;
        reject_unknown({});
    } else {
        throw std::invalid_argument("unknown construction: " + std::string(kind));
    }
    return spec;
}

std::string ConstructionSpec::to_string() const {
    switch (kind) {
        case Kind::Random: {
            std::string s = "random:density=" + rational_text(density);
            if (has_seed) s += ",seed=" + std::to_string(seed);
            return s;
        }
        case Kind::Parabola:
            return "parabola:a=" + rational_text(alpha) + ",b=" + rational_text(beta) + ",g=" + rational_text(gamma);
        case Kind::Family:
            return "family:c=" + std::to_string(c.num) + "/" + std::to_string(c.den);
        case Kind::EcRegion: break;
    }
    return "ecregion";
}

PointSet build_construction(const ProjectivePlane& plane, const ConstructionSpec& spec, std::uint64_t seed) {
    switch (spec.kind) {
        case ConstructionSpec::Kind::Random:
            return random_set(plane, spec.density, spec.has_seed ? spec.seed : seed);
        case ConstructionSpec::Kind::Parabola: {
            const Field& f = plane.field();
            if (!f.is_prime()) throw std::invalid_argument("parameter error: parabola region needs a prime field");
            const ParabolaParams pp{field_rational(f, spec.alpha.num, spec.alpha.den),
                                    field_rational(f, spec.beta.num, spec.beta.den),
                                    field_rational(f, spec.gamma.num, spec.gamma.den)};
            return parabola_region(plane, pp);
        }
        case ConstructionSpec::Kind::Family:
            return parabola_family(plane, spec.c);
        case ConstructionSpec::Kind::EcRegion:
            break;
    }
    return ec_region(plane);
}

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    std::vector<std::unique_ptr<ProjectivePlane>> planes(opts.primes.size());
    std::vector<std::string> plane_errors(opts.primes.size());
    for (std::size_t i = 0; i < opts.primes.size(); ++i) {
        try {
            planes[i] = std::make_unique<ProjectivePlane>(build_plane(make_field(opts.primes[i])));
        } catch (const std::exception& e) {
            plane_errors[i] = e.what();
        }
    }

    const std::vector<std::uint64_t> seeds = opts.seeds.empty() ? std::vector<std::uint64_t>{0} : opts.seeds;
    const std::size_t cells = opts.primes.size() * seeds.size();
    std::vector<SweepRow> rows(cells);
    parallel_for(opts.threads, cells, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            const std::size_t pi = c / seeds.size();
            SweepRow& row = rows[c];
            row.q = opts.primes[pi];
            row.seed = seeds[c % seeds.size()];
            ConstructionSpec spec = opts.construction;
            if (spec.seeded()) {
                spec.has_seed = true;
                if (!opts.construction.has_seed) spec.seed = row.seed;
                row.seed = spec.seed;
            }
            row.construction = spec.to_string();
            if (!plane_errors[pi].empty()) {
                row.error = plane_errors[pi];
                continue;
            }
            try {
                const ProjectivePlane& plane = *planes[pi];
                const PointSet set = build_construction(plane, spec, row.seed);
                const SecantSpectrum sp = compute_spectrum(plane, set);
                const BoundsReport b = bounds_report(plane.q(), set.size());
                row.set_size = set.size();
                row.mode_k = sp.mode_k;
                row.mode_count = sp.mode_count;
                row.cor_bound = b.cor_bound;
                row.cor_ceiling = b.cor_ceiling;
                row.prop_bound = b.prop_bound;
                row.thm_lower = b.thm_lower;
                row.thm_lower_clamped = std::max(0.0, b.thm_lower);
                row.ratio = sp.mode_count / std::pow(static_cast<double>(plane.q()), 1.5);
                row.checks = verify_counting_identities(sp);
                row.bound_ok = sp.mode_count >= b.cor_ceiling;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    });
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepSchema << '\n';
    os << "q,construction,seed,set_size,mode_k,mode_count,cor_bound,cor_ceiling,prop_bound,thm_lower,"
          "thm_lower_clamped,ratio,eq1,eq2,var,bound_ok,error\n";
    for (const SweepRow& r : rows) {
        os << r.q << ',' << csv_field(r.construction) << ',' << r.seed << ',' << r.set_size << ',' << r.mode_k << ','
           << r.mode_count << ',' << format_fixed(r.cor_bound) << ',' << r.cor_ceiling << ','
           << format_fixed(r.prop_bound) << ',' << format_fixed(r.thm_lower) << ','
           << format_fixed(r.thm_lower_clamped) << ',' << format_fixed(r.ratio) << ',' << r.checks.eq1 << ','
           << r.checks.eq2 << ',' << r.checks.var << ',' << (r.bound_ok ? 1 : 0) << ',' << csv_field(r.error) << '\n';
    }
}

}  // namespace secant
