#include "cli.hpp"

#include "emit.hpp"
#include "fermat_torus/errors.hpp"
#include "fermat_torus/farey.hpp"
#include "fermat_torus/geodesic.hpp"
#include "fermat_torus/kinematics.hpp"
#include "fermat_torus/rational.hpp"
#include "fermat_torus/search.hpp"
#include "fermat_torus/torus.hpp"
#include "fermat_torus/winding.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <numeric>
#include <optional>
#include <thread>
#include <tuple>

namespace fermat::cli {

namespace {

enum class OutFormat { Csv, Svg, Obj };

std::string fmt_tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

OutFormat resolve_format(const std::string& path, const std::string& flag,
                         const std::vector<OutFormat>& allowed, const char* verb) {
    std::string key = flag;
    if (key.empty()) {
        auto dot = path.rfind('.');
        if (dot == std::string::npos) {
            throw std::invalid_argument("cannot deduce output format from " + path +
                                        "; pass --format");
        }
        key = path.substr(dot + 1);
    }
    OutFormat fmt;
    if (key == "csv") {
        fmt = OutFormat::Csv;
    } else if (key == "svg") {
        fmt = OutFormat::Svg;
    } else if (key == "obj") {
        fmt = OutFormat::Obj;
    } else {
        throw std::invalid_argument("unknown output format '" + key + "'");
    }
    if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end()) {
        throw std::invalid_argument(std::string("format not valid for ") + verb);
    }
    return fmt;
}

std::optional<Rational> try_parse_rational(const std::string& text) {
    auto parse_int = [](std::string_view s, std::int64_t& out) {
        if (s.empty()) {
            return false;
        }
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };
    std::int64_t num = 0, den = 1;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!parse_int(text, num)) {
            return std::nullopt;
        }
    } else {
        if (!parse_int(std::string_view(text).substr(0, slash), num) ||
            !parse_int(std::string_view(text).substr(slash + 1), den) || den == 0) {
            return std::nullopt;
        }
    }
    return Rational(num, den);
}

Rational parse_rational(const std::string& text, const char* what) {
    auto r = try_parse_rational(text);
    if (!r) {
        throw std::invalid_argument(std::string(what) + " must be an integer or p/q, got '" +
                                    text + "'");
    }
    return *r;
}

double parse_slope(const std::string& text, std::optional<Rational>& exact) {
    exact = try_parse_rational(text);
    if (exact) {
        return exact->to_double();
    }
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("slope '" + text + "' is neither rational nor a real");
    }
}

std::vector<double> sorted_unique(std::vector<double> v, const char* what) {
    if (v.empty()) {
        throw std::invalid_argument(std::string(what) + " must be non-empty");
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw std::invalid_argument(std::string(what) + " contains duplicates");
    }
    return v;
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        g[static_cast<std::size_t>(i)] =
            (i == count - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    }
    return g;
}

// Runs fn(w) on workers 0..n_workers-1, rethrowing the first failure.
template <typename Fn>
void run_partitioned(unsigned n_workers, Fn&& fn) {
    std::vector<std::exception_ptr> errors(n_workers);
    std::vector<std::thread> pool;
    pool.reserve(n_workers - 1);
    auto wrapped = [&](unsigned w) {
        try {
            fn(w);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    for (unsigned w = 1; w < n_workers; ++w) {
        pool.emplace_back(wrapped, w);
    }
    wrapped(0);
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

// ---------------------------------------------------------------------------
// curve

struct CurveOpts {
    std::vector<double> n_values;
    int samples = 256;
    std::string out;
    std::string format;
};

void cmd_curve(const CurveOpts& o) {
    auto ns = sorted_unique(o.n_values, "--n");
    if (o.samples < 2) {
        throw std::invalid_argument("--samples must be >= 2");
    }
    OutFormat fmt = resolve_format(o.out, o.format, {OutFormat::Csv, OutFormat::Svg}, "curve");

    if (fmt == OutFormat::Csv) {
        CsvWriter csv(o.out);
        csv.header("x,n,y");
        for (double n : ns) {
            for (auto [x, y] : sample_curve(n, o.samples)) {
                csv.row({fmt_double(x), fmt_double(n), fmt_double(y)});
            }
        }
    } else {
        std::vector<PlotSeries> series;
        for (double n : ns) {
            series.push_back({"n=" + fmt_tick_label(n), sample_curve(n, o.samples)});
        }
        emit_svg(o.out, series, {});
    }
}

// ---------------------------------------------------------------------------
// kinematics

struct KinematicsOpts {
    std::vector<double> n_values;
    double x_min = 0.001;
    double x_max = 0.999;
    int samples = 500;
    std::string plot = "acc";
    std::optional<double> y_min;
    std::optional<double> y_max;
    std::string out;
    std::string format;
};

void cmd_kinematics(const KinematicsOpts& o) {
    auto ns = sorted_unique(o.n_values, "--n");
    if (o.samples < 2) {
        throw std::invalid_argument("--samples must be >= 2");
    }
    if (!(o.x_min >= 0.0 && o.x_min < o.x_max && o.x_max < 1.0)) {
        throw std::invalid_argument("need 0 <= x-min < x-max < 1");
    }
    if (o.x_min == 0.0 && ns.front() < 2.0) {
        throw std::invalid_argument("x-min = 0 is divergent for n < 2; start above 0");
    }
    if (o.plot != "acc" && o.plot != "vel") {
        throw std::invalid_argument("--plot must be 'acc' or 'vel'");
    }
    OutFormat fmt =
        resolve_format(o.out, o.format, {OutFormat::Csv, OutFormat::Svg}, "kinematics");

    auto grid = linspace(o.x_min, o.x_max, o.samples);
    PhaseScanResult scan = phase_scan(ns, grid);

    if (fmt == OutFormat::Csv) {
        CsvWriter csv(o.out);
        csv.header("x,n,y,vel,acc");
        for (const auto& s : scan.samples) {
            csv.row({fmt_double(s.x), fmt_double(s.n), fmt_double(s.y), fmt_double(s.vel),
                     fmt_double(s.acc)});
        }
    } else {
        std::vector<PlotSeries> series;
        PlotOptions opts;
        opts.y_min = o.y_min;
        opts.y_max = o.y_max;
        std::size_t idx = 0;
        for (double n : ns) {
            PlotSeries s;
            s.label = "n=" + fmt_tick_label(n);
            for (int i = 0; i < o.samples; ++i, ++idx) {
                const auto& sample = scan.samples[idx];
                s.points.emplace_back(sample.x, o.plot == "acc" ? sample.acc : sample.vel);
            }
            if (o.plot == "acc" && n < 2.0) {
                opts.notes.push_back("series n=" + fmt_tick_label(n) +
                                     ": acceleration -> -inf as x -> 0+");
            }
            series.push_back(std::move(s));
        }
        emit_svg(o.out, series, opts);
    }
}

// ---------------------------------------------------------------------------
// geodesic

struct GeodesicOpts {
    double R = 2.0;
    double r = 1.0;
    double u0 = 0.0;
    double v0 = 0.0;
    double du = 1.0;
    double dv = 0.0;
    double t_max = kTwoPi;
    double step = 1e-3;
    std::string out;
    std::string format;
};

void cmd_geodesic(const GeodesicOpts& o) {
    OutFormat fmt =
        resolve_format(o.out, o.format, {OutFormat::Csv, OutFormat::Obj}, "geodesic");
    Torus torus(o.R, o.r);
    Trajectory traj = integrate_geodesic(torus, {o.u0, o.v0, o.du, o.dv}, o.t_max, o.step);

    if (fmt == OutFormat::Csv) {
        CsvWriter csv(o.out);
        csv.header("t,u,v,du,dv,x,y,z,k,energy");
        for (const auto& s : traj.samples) {
            ConservedQuantities q = conserved_quantities(torus, s.state);
            csv.row({fmt_double(s.t), fmt_double(s.state.u), fmt_double(s.state.v),
                     fmt_double(s.state.du), fmt_double(s.state.dv), fmt_double(s.point.x),
                     fmt_double(s.point.y), fmt_double(s.point.z), fmt_double(q.k),
                     fmt_double(q.energy)});
        }
    } else {
        std::vector<Vec3> pts;
        pts.reserve(traj.samples.size());
        for (const auto& s : traj.samples) {
            pts.push_back(s.point);
        }
        emit_obj(o.out, pts);
    }
    std::cout << "k_drift=" << fmt_double(traj.k_drift)
              << " energy_drift=" << fmt_double(traj.energy_drift) << "\n";
}

// ---------------------------------------------------------------------------
// map-line

struct MapLineOpts {
    std::string a = "1";
    std::string b = "1";
    double R = 2.0;
    double r = 1.0;
    double u0 = 0.0;
    double v0 = 0.0;
    int samples = 1024;
    std::optional<double> t_max;
    std::string surface = "torus";
    std::string out;
    std::string format;
};

void cmd_map_line(const MapLineOpts& o) {
    if (o.samples < 2) {
        throw std::invalid_argument("--samples must be >= 2");
    }
    if (o.surface != "torus" && o.surface != "cylinder" && o.surface != "flat") {
        throw std::invalid_argument("--surface must be torus, cylinder or flat");
    }
    std::vector<OutFormat> allowed{OutFormat::Csv};
    if (o.surface != "flat") {
        allowed.push_back(OutFormat::Obj);
    }
    OutFormat fmt = resolve_format(o.out, o.format, allowed, "map-line");

    std::optional<Rational> a_exact, b_exact;
    double a = parse_slope(o.a, a_exact);
    double b = parse_slope(o.b, b_exact);
    WindingLine line(a, b, o.u0, o.v0);

    std::optional<double> period;
    if (a_exact && b_exact) {
        period = closure_period(*a_exact, *b_exact);
    } else {
        period = closure_period(line);
    }
    double t_end = 0.0;
    if (o.t_max) {
        t_end = *o.t_max;
        if (!(t_end > 0.0)) {
            throw std::invalid_argument("--t-max must be > 0");
        }
    } else if (period) {
        t_end = *period;
    } else {
        throw std::invalid_argument("orbit does not close; pass --t-max explicitly");
    }

    Torus torus(o.R, o.r);
    auto place = [&](const SurfacePoint& p) -> Vec3 {
        if (o.surface == "torus") {
            return embed(torus, p);
        }
        if (o.surface == "cylinder") {
            // The unit square rolled along u only; v becomes height.
            return {o.R * std::cos(p.u), o.R * std::sin(p.u), o.r * p.v};
        }
        return {p.u / kTwoPi, p.v / kTwoPi, 0.0};
    };

    std::vector<SurfacePoint> pts;
    pts.reserve(static_cast<std::size_t>(o.samples));
    for (int i = 0; i < o.samples; ++i) {
        double t = (i == o.samples - 1) ? t_end
                                        : t_end * static_cast<double>(i) / (o.samples - 1);
        pts.push_back(winding_point(line, t));
    }

    if (fmt == OutFormat::Csv) {
        CsvWriter csv(o.out);
        csv.header("t,u,v,x,y,z");
        for (int i = 0; i < o.samples; ++i) {
            double t = (i == o.samples - 1) ? t_end
                                            : t_end * static_cast<double>(i) / (o.samples - 1);
            Vec3 p = place(pts[static_cast<std::size_t>(i)]);
            csv.row({fmt_double(t), fmt_double(pts[static_cast<std::size_t>(i)].u),
                     fmt_double(pts[static_cast<std::size_t>(i)].v), fmt_double(p.x),
                     fmt_double(p.y), fmt_double(p.z)});
        }
    } else {
        std::vector<Vec3> embedded;
        embedded.reserve(pts.size());
        for (const auto& p : pts) {
            embedded.push_back(place(p));
        }
        emit_obj(o.out, embedded);
    }
    if (period) {
        std::cout << "closed orbit, period=" << fmt_double(*period) << "\n";
    } else {
        std::cout << "open orbit (no closure detected up to denominator 1000000)\n";
    }
}

// ---------------------------------------------------------------------------
// density

struct DensityOpts {
    double a = 1.0;
    double b = 1.0;
    double u0 = 0.0;
    double v0 = 0.0;
    double t_max = 2000.0;
    int grid = 100;
    std::string out;
    std::string format;
};

void cmd_density(const DensityOpts& o) {
    resolve_format(o.out, o.format, {OutFormat::Csv}, "density");
    WindingLine line(o.a, o.b, o.u0, o.v0);
    double cov = density_coverage(line, o.t_max, o.grid);
    CsvWriter csv(o.out);
    csv.header("a,b,t_max,grid_n,coverage");
    csv.row({fmt_double(o.a), fmt_double(o.b), fmt_double(o.t_max), std::to_string(o.grid),
             fmt_double(cov)});
    std::cout << "coverage=" << fmt_double(cov) << "\n";
}

// ---------------------------------------------------------------------------
// search

struct SearchOpts {
    int n = 2;
    std::int64_t max_den = 100;
    std::string out;
    std::string format;
};

std::vector<SolutionRecord> partitioned_rational_points(int n, std::int64_t max_den,
                                                        unsigned workers) {
    if (workers <= 1 || max_den < static_cast<std::int64_t>(workers) * 4) {
        return rational_points_on_curve(n, max_den);
    }
    auto T = static_cast<std::int64_t>(workers);
    std::vector<std::vector<SolutionRecord>> parts(workers);
    run_partitioned(workers, [&](unsigned w) {
        std::int64_t lo_num = w, lo_den = T;
        std::int64_t g = std::gcd(lo_num, lo_den);
        if (g > 0) {
            lo_num /= g;
            lo_den /= g;
        }
        FareySequence seq = (w == 0) ? FareySequence(max_den)
                                     : FareySequence(max_den, lo_num, lo_den);
        Rational upper(static_cast<std::int64_t>(w) + 1, T);
        bool last = (w + 1 == workers);
        do {
            if (auto sol = rational_point_at(n, seq.current())) {
                parts[w].push_back(std::move(*sol));
            }
        } while (seq.advance() && (last || seq.current() < upper));
    });
    std::vector<SolutionRecord> merged;
    for (auto& p : parts) {
        merged.insert(merged.end(), std::make_move_iterator(p.begin()),
                      std::make_move_iterator(p.end()));
    }
    std::sort(merged.begin(), merged.end(), [](const SolutionRecord& l, const SolutionRecord& r) {
        return l.x < r.x || (l.x == r.x && l.y < r.y);
    });
    return merged;
}

void cmd_search(const SearchOpts& o) {
    resolve_format(o.out, o.format, {OutFormat::Csv}, "search");
    auto sols = partitioned_rational_points(o.n, o.max_den, thread_count());
    CsvWriter csv(o.out);
    csv.header("x_num,x_den,y_num,y_den,n");
    for (const auto& s : sols) {
        csv.row({s.x.num().str(), s.x.den().str(), s.y.num().str(), s.y.den().str(),
                 std::to_string(s.n)});
    }
    std::cout << sols.size() << " solutions\n";
}

// ---------------------------------------------------------------------------
// triples

struct TriplesOpts {
    int n = 2;
    std::int64_t max_z = 100;
    std::string out;
    std::string format;
};

std::vector<Triple> partitioned_triples(int n, std::int64_t max_z, unsigned workers) {
    if (workers <= 1 || max_z < static_cast<std::int64_t>(workers) * 2) {
        return diophantine_triples(n, max_z);
    }
    std::vector<std::vector<Triple>> parts(workers);
    run_partitioned(workers, [&](unsigned w) {
        for (std::int64_t x = 1 + w; x < max_z; x += workers) {
            for (std::int64_t y = x; y < max_z; ++y) {
                auto z = power_sum_root(n, x, y);
                if (z && *z <= max_z && std::gcd(std::gcd(x, y), *z) == 1) {
                    parts[w].push_back({x, y, *z});
                }
            }
        }
    });
    std::vector<Triple> merged;
    for (auto& p : parts) {
        merged.insert(merged.end(), p.begin(), p.end());
    }
    std::sort(merged.begin(), merged.end(), [](const Triple& l, const Triple& r) {
        return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
    });
    return merged;
}

void cmd_triples(const TriplesOpts& o) {
    resolve_format(o.out, o.format, {OutFormat::Csv}, "triples");
    auto triples = partitioned_triples(o.n, o.max_z, thread_count());
    CsvWriter csv(o.out);
    csv.header("x,y,z");
    for (const auto& t : triples) {
        csv.row({std::to_string(t.x), std::to_string(t.y), std::to_string(t.z)});
    }
    std::cout << triples.size() << " triples\n";
}

// ---------------------------------------------------------------------------
// intersect

struct IntersectOpts {
    int n = 2;
    std::string a = "1";
    std::string b = "1";
    std::int64_t max_den = 1000000;
    double tol = 1e-12;
    std::string out;
    std::string format;
};

void cmd_intersect(const IntersectOpts& o) {
    resolve_format(o.out, o.format, {OutFormat::Csv}, "intersect");
    Rational a = parse_rational(o.a, "--a");
    Rational b = parse_rational(o.b, "--b");
    CrossingScan scan = line_curve_crossings(o.n, a, b, o.max_den, o.tol);
    CsvWriter csv(o.out);
    csv.header("x,y,rational,x_num,x_den,y_num,y_den");
    for (const auto& c : scan.crossings) {
        if (c.rational_xy) {
            csv.row({fmt_double(c.x), fmt_double(c.y), "1", c.rational_xy->first.num().str(),
                     c.rational_xy->first.den().str(), c.rational_xy->second.num().str(),
                     c.rational_xy->second.den().str()});
        } else {
            csv.row({fmt_double(c.x), fmt_double(c.y), "0", "", "", "", ""});
        }
    }
    std::cout << scan.crossings.size() << " crossings on " << scan.branches_scanned
              << " branches (" << scan.branches_without_crossing << " without crossing)\n";
}

}  // namespace

unsigned thread_count() {
    if (const char* env = std::getenv("FERMAT_TORUS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Fermat curve kinematics, torus geodesics and exact Diophantine searches"};
    app.require_subcommand(1);

    auto curve_opts = std::make_shared<CurveOpts>();
    auto* curve = app.add_subcommand("curve", "Sample x^n + y^n = 1 for a list of exponents");
    curve->add_option("--n", curve_opts->n_values, "exponents (comma separated)")
        ->required()
        ->delimiter(',');
    curve->add_option("--samples", curve_opts->samples, "points per curve");
    curve->add_option("--out", curve_opts->out, "output path")->required();
    curve->add_option("--format", curve_opts->format, "csv|svg (default: by extension)");
    curve->callback([curve_opts] { cmd_curve(*curve_opts); });

    auto kin_opts = std::make_shared<KinematicsOpts>();
    auto* kin = app.add_subcommand("kinematics", "Velocity/acceleration scan along the curve");
    kin->add_option("--n", kin_opts->n_values, "exponents (comma separated)")
        ->required()
        ->delimiter(',');
    kin->add_option("--x-min", kin_opts->x_min, "grid start");
    kin->add_option("--x-max", kin_opts->x_max, "grid end (must stay below 1)");
    kin->add_option("--samples", kin_opts->samples, "grid points per exponent");
    kin->add_option("--plot", kin_opts->plot, "svg quantity: acc|vel");
    kin->add_option("--y-min", kin_opts->y_min, "svg viewport lower bound");
    kin->add_option("--y-max", kin_opts->y_max, "svg viewport upper bound");
    kin->add_option("--out", kin_opts->out, "output path")->required();
    kin->add_option("--format", kin_opts->format, "csv|svg (default: by extension)");
    kin->callback([kin_opts] { cmd_kinematics(*kin_opts); });

    auto geo_opts = std::make_shared<GeodesicOpts>();
    auto* geo = app.add_subcommand("geodesic", "Integrate the geodesic flow on a torus");
    geo->add_option("--R", geo_opts->R, "major radius");
    geo->add_option("--r", geo_opts->r, "minor radius");
    geo->add_option("--u0", geo_opts->u0, "initial toroidal angle");
    geo->add_option("--v0", geo_opts->v0, "initial poloidal angle");
    geo->add_option("--du", geo_opts->du, "initial toroidal velocity");
    geo->add_option("--dv", geo_opts->dv, "initial poloidal velocity");
    geo->add_option("--t-max", geo_opts->t_max, "integration time");
    geo->add_option("--step", geo_opts->step, "RK4 step");
    geo->add_option("--out", geo_opts->out, "output path")->required();
    geo->add_option("--format", geo_opts->format, "csv|obj (default: by extension)");
    geo->callback([geo_opts] { cmd_geodesic(*geo_opts); });

    auto map_opts = std::make_shared<MapLineOpts>();
    auto* map = app.add_subcommand("map-line", "Wind a straight line onto the torus");
    map->add_option("--a", map_opts->a, "toroidal slope (integer, p/q or real)");
    map->add_option("--b", map_opts->b, "poloidal slope (integer, p/q or real)");
    map->add_option("--R", map_opts->R, "major radius");
    map->add_option("--r", map_opts->r, "minor radius");
    map->add_option("--u0", map_opts->u0, "initial toroidal angle");
    map->add_option("--v0", map_opts->v0, "initial poloidal angle");
    map->add_option("--samples", map_opts->samples, "points along the orbit");
    map->add_option("--t-max", map_opts->t_max, "parameter range (default: closure period)");
    map->add_option("--surface", map_opts->surface, "torus|cylinder|flat");
    map->add_option("--out", map_opts->out, "output path")->required();
    map->add_option("--format", map_opts->format, "csv|obj (default: by extension)");
    map->callback([map_opts] { cmd_map_line(*map_opts); });

    auto den_opts = std::make_shared<DensityOpts>();
    auto* den = app.add_subcommand("density", "Grid coverage of a winding-line orbit");
    den->add_option("--a", den_opts->a, "toroidal slope");
    den->add_option("--b", den_opts->b, "poloidal slope");
    den->add_option("--u0", den_opts->u0, "initial toroidal angle");
    den->add_option("--v0", den_opts->v0, "initial poloidal angle");
    den->add_option("--t-max", den_opts->t_max, "orbit length");
    den->add_option("--grid", den_opts->grid, "cells per side");
    den->add_option("--out", den_opts->out, "output path")->required();
    den->add_option("--format", den_opts->format, "csv");
    den->callback([den_opts] { cmd_density(*den_opts); });

    auto search_opts = std::make_shared<SearchOpts>();
    auto* search = app.add_subcommand("search", "Rational points on x^n + y^n = 1");
    search->add_option("--n", search_opts->n, "exponent (integer >= 1)")->required();
    search->add_option("--max-den", search_opts->max_den, "denominator bound")->required();
    search->add_option("--out", search_opts->out, "output path")->required();
    search->add_option("--format", search_opts->format, "csv");
    search->callback([search_opts] { cmd_search(*search_opts); });

    auto triples_opts = std::make_shared<TriplesOpts>();
    auto* triples = app.add_subcommand("triples", "Primitive solutions of x^n + y^n = z^n");
    triples->add_option("--n", triples_opts->n, "exponent (integer >= 1)")->required();
    triples->add_option("--max-z", triples_opts->max_z, "height bound")->required();
    triples->add_option("--out", triples_opts->out, "output path")->required();
    triples->add_option("--format", triples_opts->format, "csv");
    triples->callback([triples_opts] { cmd_triples(*triples_opts); });

    auto int_opts = std::make_shared<IntersectOpts>();
    auto* intersect = app.add_subcommand("intersect", "Crossings of a wrapped line with the curve");
    intersect->add_option("--n", int_opts->n, "exponent (integer >= 1)")->required();
    intersect->add_option("--a", int_opts->a, "slope run (rational), line is y = (b/a) x")->required();
    intersect->add_option("--b", int_opts->b, "slope rise (rational)")->required();
    intersect->add_option("--max-den", int_opts->max_den, "rationality cap for labels");
    intersect->add_option("--tol", int_opts->tol, "bisection tolerance");
    intersect->add_option("--out", int_opts->out, "output path")->required();
    intersect->add_option("--format", int_opts->format, "csv");
    intersect->callback([int_opts] { cmd_intersect(*int_opts); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fermat::cli
