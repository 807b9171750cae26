// Command-line front end: generate low-discrepancy sequences from
// piecewise-linear expanding maps, certify their spectral conditions, and
// measure discrepancy.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corput/bits.hpp"
#include "corput/discrepancy.hpp"
#include "corput/errors.hpp"
#include "corput/map_io.hpp"
#include "corput/multidim.hpp"
#include "corput/spectral.hpp"
#include "corput/vdc1d.hpp"

namespace {

using namespace corput;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitResource = 4;

struct Options {
    std::string map_path;
    int dim = 1;
    std::string base = "";
    std::string levels = "";
    long long n = -1;
    int precision = 64;
    int degree = 60;
    int dyadic_k = 0;
    double log_power = -1.0;
    std::string out_path;
    std::string format = "decimal";
    std::string points_path;
    std::string at;
    bool composed_3d = false;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot open output file: " + opt.out_path);
    out << text;
}

std::vector<double> parse_base(const std::string& text, int dim) {
    std::vector<double> vals;
    std::string token;
    std::stringstream ss(text.empty() ? std::string(dim, '0').insert(0, "") : text);
    if (text.empty()) {
        for (int i = 0; i < dim; ++i)
            vals.push_back(0.0);
        return vals;
    }
    while (std::getline(ss, token, ','))
        vals.push_back(parse_expr(token));
    if (static_cast<int>(vals.size()) != dim)
        throw UsageError("--base needs " + std::to_string(dim) + " comma-separated coordinates");
    for (double v : vals)
        if (!(v >= 0.0) || v >= 1.0)
            throw UsageError("base coordinates must lie in [0,1)");
    return vals;
}

std::pair<int, int> parse_levels(const std::string& text, int def_lo, int def_hi) {
    if (text.empty())
        return {def_lo, def_hi};
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo < 0 || hi < lo)
        throw UsageError("--levels wants A..B with 0 <= A <= B");
    return {lo, hi};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// generate

std::string generate_1d(const Options& opt) {
    if (opt.map_path.empty())
        throw UsageError("generate --dim 1 needs --map");
    PLMap map = load_map_file(opt.map_path);
    double base = parse_base(opt.base.empty() ? "1/2" : opt.base, 1)[0];

    std::ostringstream os;
    os << "# corput generate\n";
    os << "# dim: 1\n";
    os << "# map: " << map.name() << " hash=" << std::hex << map_hash(map) << std::dec << "\n";
    os << "# beta: " << fmt_double(map.beta()) << " xi: " << fmt_double(map.xi()) << "\n";
    os << "# base: " << fmt_double(base) << "\n";
    os << "# precision: " << opt.precision << "\n";
    os << "# order: level-major, sign-twisted word order within levels\n";
    os << "# format: " << opt.format << "\n";

    VdcStream stream(map, base);
    std::vector<double> points;
    if (opt.n >= 0) {
        for (long long i = 0; i < opt.n; ++i)
            points.push_back(stream.next().point);
    } else {
        auto [lo, hi] = parse_levels(opt.levels, 0, 6);
        // emit words with |w| in [lo, hi]
        for (;;) {
            VdcStream::Item item = stream.next();
            int len = static_cast<int>(item.word.size());
            if (len > hi)
                break;
            if (len >= lo)
                points.push_back(item.point);
        }
    }
    std::vector<std::size_t> bounds = stream.level_boundaries();
    os << "# levels:";
    for (std::size_t b : bounds)
        os << " " << b;
    os << "\n";

    for (double p : points) {
        if (opt.format == "bits")
            os << BitString::from_unit(p, opt.precision).to_string() << "\n";
        else
            os << fmt_double(p) << "\n";
    }
    return os.str();
}

std::string generate_2d(const Options& opt) {
    auto base_vals = parse_base(opt.base, 2);
    auto [lo, hi] = parse_levels(opt.levels, 0, 4);
    Point2D base{BitString::from_unit(base_vals[0], opt.precision),
                 BitString::from_unit(base_vals[1], opt.precision)};

    std::ostringstream os;
    os << "# corput generate\n";
    os << "# dim: 2\n";
    os << "# construction: digitwise shuffle (s0/s1)\n";
    os << "# base: " << fmt_double(base_vals[0]) << "," << fmt_double(base_vals[1]) << "\n";
    os << "# precision: " << opt.precision << "\n";
    os << "# order: level-major, interleaved radical-inverse within levels\n";
    os << "# format: " << opt.format << "\n";

    std::vector<Point2D> points;
    std::vector<std::size_t> bounds;
    std::size_t count = 0;
    for (int n = lo; n <= hi; ++n) {
        for (Point2D& p : map2d_level(base, n)) {
            points.push_back(std::move(p));
            ++count;
            if (opt.n >= 0 && count == static_cast<std::size_t>(opt.n))
                break;
        }
        bounds.push_back(count);
        if (opt.n >= 0 && count == static_cast<std::size_t>(opt.n))
            break;
    }
    os << "# levels:";
    for (std::size_t b : bounds)
        os << " " << b;
    os << "\n";

    char sep = opt.format == "csv" ? ',' : ' ';
    for (const Point2D& p : points) {
        if (opt.format == "bits")
            os << p.x.to_string() << sep << p.y.to_string() << "\n";
        else
            os << fmt_double(p.x.to_unit()) << sep << fmt_double(p.y.to_unit()) << "\n";
    }
    return os.str();
}

std::string generate_3d(const Options& opt) {
    auto base_vals = parse_base(opt.base, 3);
    auto [lo, hi] = parse_levels(opt.levels, 0, 4);
    if (hi > MixMatrix::kMaxLevel)
        throw UsageError("3D levels beyond 4 are unsupported (matrix block exhausted)");
    Point3D base{BitString::from_unit(base_vals[0], opt.precision),
                 BitString::from_unit(base_vals[1], opt.precision),
                 BitString::from_unit(base_vals[2], opt.precision)};

    std::ostringstream os;
    os << "# corput generate\n";
    os << "# dim: 3\n";
    os << "# construction: mixing-matrix levels"
       << (opt.composed_3d ? " (composed reading, no correctness claim)" : "") << "\n";
    os << "# base: " << fmt_double(base_vals[0]) << "," << fmt_double(base_vals[1]) << ","
       << fmt_double(base_vals[2]) << "\n";
    os << "# precision: " << opt.precision << "\n";
    os << "# order: level-major, interleaved radical-inverse within levels\n";
    os << "# format: " << opt.format << "\n";

    std::vector<Point3D> points;
    std::vector<std::size_t> bounds;
    std::size_t count = 0;
    for (int n = lo; n <= hi; ++n) {
        auto level = opt.composed_3d ? map3d_level_composed(base, n) : map3d_level(base, n);
        for (Point3D& p : level) {
            points.push_back(std::move(p));
            ++count;
            if (opt.n >= 0 && count == static_cast<std::size_t>(opt.n))
                break;
        }
        bounds.push_back(count);
        if (opt.n >= 0 && count == static_cast<std::size_t>(opt.n))
            break;
    }
    os << "# levels:";
    for (std::size_t b : bounds)
        os << " " << b;
    os << "\n";

    char sep = opt.format == "csv" ? ',' : ' ';
    for (const Point3D& p : points) {
        if (opt.format == "bits")
            os << p.x.to_string() << sep << p.y.to_string() << sep << p.z.to_string() << "\n";
        else
            os << fmt_double(p.x.to_unit()) << sep << fmt_double(p.y.to_unit()) << sep
               << fmt_double(p.z.to_unit()) << "\n";
    }
    return os.str();
}

int cmd_generate(const Options& opt) {
    std::string text;
    if (opt.dim == 1)
        text = generate_1d(opt);
    else if (opt.dim == 2)
        text = generate_2d(opt);
    else if (opt.dim == 3)
        text = generate_3d(opt);
    else
        throw UsageError("--dim must be 1, 2 or 3");
    write_output(opt, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::True:
        return "TRUE";
    case Verdict::False:
        return "FALSE";
    default:
        return "INCONCLUSIVE";
    }
}

int cmd_spectrum(const Options& opt) {
    if (opt.map_path.empty())
        throw UsageError("spectrum needs --map");
    PLMap map = load_map_file(opt.map_path);
    MarkovInfo info = markov_structure(map);

    std::ostringstream os;
    os << "# corput spectrum\n";
    os << "# map: " << map.name() << " hash=" << std::hex << map_hash(map) << std::dec << "\n";
    os << "# degree: " << opt.degree << "\n";
    os << "beta: " << fmt_double(map.beta()) << "\n";
    os << "xi: " << fmt_double(map.xi()) << "\n";
    os << "markov: " << (info.markov ? "yes" : "no") << "\n";
    os << "non_markov_endpoints: " << info.non_markov_count << "\n";

    bool inconclusive = false;
    if (info.markov) {
        SpectrumReport rep = spectrum(map, info.transitions);
        os << "zeros:";
        for (const auto& z : rep.zeros)
            os << " (" << fmt_double(z.z.real()) << (z.z.imag() < 0 ? "-" : "+")
               << fmt_double(std::abs(z.z.imag())) << "i)x" << z.multiplicity
               << (z.inside ? "[inside]" : "[outside]");
        os << "\n";
        os << "multiplicity_at_one: " << rep.multiplicity_at_one << "\n";
        os << "certificate_annulus: " << (rep.certificate ? "TRUE" : "FALSE") << "\n";
        os << "eta: " << fmt_double(rep.eta) << (rep.eta_is_bound ? " (essential bound 1/beta)" : "")
           << "\n";
        os << "zeta_identity_residual: "
           << fmt_double(zeta_identity_residual(map, info.transitions, std::min(opt.degree, 20)))
           << "\n";

        DensityResult rho = invariant_density(map, info.transitions);
        if (rho.ok) {
            os << "invariant_density:";
            for (double c : rho.coeffs)
                os << " " << fmt_double(c);
            os << "\n";
        } else {
            os << "ergodic_components: " << rho.ergodic_components << "\n";
        }

        // two-route consistency
        SignedSystem sys = signed_fredholm(map, std::min(opt.degree, 20));
        PowerSeries sd = signed_det(sys);
        auto phi = fredholm_markov(map, info.transitions, std::min(opt.degree, 20));
        SeriesMatrix m = series_identity(info.transitions.size(), std::min(opt.degree, 20));
        for (int i = 0; i < info.transitions.size(); ++i)
            for (int j = 0; j < info.transitions.size(); ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        os << "signed_vs_markov_residual: " << fmt_double((sd - det_series(m)).max_abs_coeff())
           << "\n";
    }

    ZetaCoefficients zc = zeta_coefficient_bound(map, std::min(opt.degree, 60));
    os << "zeta_n_sup: " << fmt_double(zc.sup_abs) << "\n";
    os << "zeta_n_bounded: " << (zc.bounded_heuristic ? "yes" : "no") << "\n";

    MinorCertificate cert = markov_minor_certificate(map, opt.degree);
    os << "minor_certificate: " << verdict_name(cert.verdict) << "\n";
    os << "minor_zeros_inside: " << cert.minor_count.zeros
       << " (radius " << fmt_double(cert.minor_count.radius) << ", contour min "
       << fmt_double(cert.minor_count.min_abs) << ", tail "
       << fmt_double(cert.minor_count.tail_bound) << ")\n";
    os << "full_det_zeros_inside: " << cert.full_count.zeros << " (contour min "
       << fmt_double(cert.full_count.min_abs) << ", tail " << fmt_double(cert.full_count.tail_bound)
       << ")\n";
    if (cert.verdict == Verdict::Inconclusive)
        inconclusive = true;

    write_output(opt, os.str());
    return inconclusive ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------------------
// discrepancy + fit

struct PointFile {
    int dim = 1;
    std::vector<std::array<double, 3>> points;
    std::vector<std::size_t> level_bounds;
};

PointFile read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open point file: " + path);
    PointFile pf;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            auto pos = line.find("# levels:");
            if (pos == 0) {
                std::stringstream ss(line.substr(9));
                std::size_t b;
                while (ss >> b)
                    pf.level_bounds.push_back(b);
            }
            continue;
        }
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::stringstream ss(line);
        std::array<double, 3> p{0.0, 0.0, 0.0};
        int got = 0;
        double v;
        while (ss >> v && got < 3)
            p[static_cast<std::size_t>(got++)] = v;
        if (got == 0)
            continue;
        pf.dim = std::max(pf.dim, got);
        pf.points.push_back(p);
    }
    if (pf.points.empty())
        throw UsageError("point file holds no points: " + path);
    return pf;
}

int cmd_discrepancy(const Options& opt) {
    if (opt.points_path.empty())
        throw UsageError("discrepancy needs a point file (positional or --points)");
    PointFile pf = read_points(opt.points_path);
    double p = opt.log_power >= 0.0 ? opt.log_power : static_cast<double>(pf.dim);

    std::vector<std::size_t> schedule;
    if (!opt.at.empty()) {
        std::stringstream ss(opt.at);
        std::string tok;
        while (std::getline(ss, tok, ','))
            schedule.push_back(static_cast<std::size_t>(std::stoull(tok)));
    } else if (!pf.level_bounds.empty()) {
        schedule = pf.level_bounds;
    } else {
        for (std::size_t n = 2; n <= pf.points.size(); n *= 2)
            schedule.push_back(n);
    }

    std::ostringstream os;
    os << "# corput discrepancy\n";
    os << "# input: " << opt.points_path << "\n";
    os << "# dim: " << pf.dim << "\n";
    os << "# log_power: " << fmt_double(p) << "\n";
    os << "# star is exact; extreme exact in 1d (N <= 4096); dyadic restricted to 2^-k corners\n";
    os << "N,D_star,D_extreme,D_dyadic,c_N,witness\n";

    std::vector<double> fit_ns, fit_ds;
    for (std::size_t n : schedule) {
        if (n < 1 || n > pf.points.size())
            continue;
        std::string d_star = "", d_ext = "", d_dy = "", c_n = "";
        Witness wit;
        double star = -1.0;
        if (pf.dim == 1) {
            std::vector<double> xs;
            for (std::size_t i = 0; i < n; ++i)
                xs.push_back(pf.points[i][0]);
            auto s = star_discrepancy_1d(xs);
            star = s.value;
            wit = s.witness;
            d_star = fmt_double(s.value);
            if (n <= 4096)
                d_ext = fmt_double(extreme_discrepancy_1d(xs).value);
            if (opt.dyadic_k > 0)
                d_dy = fmt_double(dyadic_discrepancy_1d(xs, opt.dyadic_k).value);
        } else if (pf.dim == 2) {
            std::vector<std::array<double, 2>> xs;
            for (std::size_t i = 0; i < n; ++i)
                xs.push_back({pf.points[i][0], pf.points[i][1]});
            auto s = star_discrepancy_2d(xs);
            star = s.value;
            wit = s.witness;
            d_star = fmt_double(s.value);
            if (opt.dyadic_k > 0)
                d_dy = fmt_double(dyadic_discrepancy_2d(xs, opt.dyadic_k).value);
        } else {
            std::vector<std::array<double, 3>> xs(pf.points.begin(),
                                                  pf.points.begin() + static_cast<long>(n));
            int k = opt.dyadic_k > 0 ? opt.dyadic_k : 5;
            auto s = dyadic_discrepancy_3d(xs, k);
            star = s.value; // dyadic surrogate; exact 3d star is out of reach
            wit = s.witness;
            d_dy = fmt_double(s.value);
        }
        if (n >= 2 && star > 0.0) {
            double logn = std::log2(static_cast<double>(n));
            double c = static_cast<double>(n) * star / std::pow(logn, p);
            c_n = fmt_double(c);
            fit_ns.push_back(static_cast<double>(n));
            fit_ds.push_back(star);
        }
        os << n << "," << d_star << "," << d_ext << "," << d_dy << "," << c_n << ",";
        os << "[" << fmt_double(wit.lo[0]);
        for (int d = 1; d < pf.dim; ++d)
            os << " " << fmt_double(wit.lo[static_cast<std::size_t>(d)]);
        os << "]->[" << fmt_double(wit.hi[0]);
        for (int d = 1; d < pf.dim; ++d)
            os << " " << fmt_double(wit.hi[static_cast<std::size_t>(d)]);
        os << "]\n";
    }
    if (fit_ns.size() >= 2) {
        GrowthFit fit = growth_fit(fit_ns, fit_ds, p);
        os << "# growth: max_c=" << fmt_double(fit.max_c) << " slope=" << fmt_double(fit.slope)
           << "\n";
    }
    write_output(opt, os.str());
    return kExitOk;
}

int cmd_fit(const Options& opt) {
    if (opt.points_path.empty())
        throw UsageError("fit needs a CSV file (positional or --points)");
    std::ifstream in(opt.points_path);
    if (!in)
        throw UsageError("cannot open file: " + opt.points_path);
    std::vector<double> ns, ds;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0])))
            continue;
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::stringstream ss(line);
        double n, d;
        if (ss >> n >> d) {
            ns.push_back(n);
            ds.push_back(d);
        }
    }
    if (ns.size() < 2)
        throw UsageError("fit needs at least two (N, D) rows");
    double p = opt.log_power >= 0.0 ? opt.log_power : 1.0;
    GrowthFit fit = growth_fit(ns, ds, p);

    std::ostringstream os;
    os << "# corput fit\n";
    os << "# log_power: " << fmt_double(p) << "\n";
    os << "N,c_N\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
        os << ns[i] << "," << fmt_double(fit.c[i]) << "\n";
    os << "# max_c: " << fmt_double(fit.max_c) << "\n";
    os << "# slope: " << fmt_double(fit.slope) << "\n";
    write_output(opt, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& opt) {
    std::ostringstream os;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        os << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (int n = 1; n <= 64; ++n)
            ok = ok && span_test_2d(n);
        report("2d shift prefixes span GF(2)^n for n <= 64", ok);
    }
    {
        const MixMatrix& M = mix_matrix();
        report("mixing matrix checksum", M.checksum_ok());
        bool ok = true;
        const std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; n + m <= 4; ++m) {
                if (n + m < 1)
                    continue;
                for (const auto& perm : perms)
                    ok = ok && M.minor_test(n, m, perm);
            }
        report("mixing matrix minors (both families, all role permutations)", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n)
            for (int m = 0; m <= n && ok; ++m) {
                int gk = std::max(n + 2, n + m);
                double wx = std::ldexp(1.0, -(n - m));
                double wy = std::ldexp(1.0, -(n + m));
                for (double a : {0.0, 0.5 * (1.0 - wx)})
                    for (double b : {0.0, 0.5 * (1.0 - wy)}) {
                        double aa = std::floor(a * (1 << gk)) / (1 << gk);
                        double bb = std::floor(b * (1 << gk)) / (1 << gk);
                        ok = ok && rect_image_test_2d(n, m, aa, bb, gk);
                    }
            }
        report("2d rectangle-image property (small levels)", ok);
    }
    {
        bool ok = true;
        for (int k = 1; k <= 2 && ok; ++k)
            for (int n = 0; n <= k && ok; ++n)
                for (int m = 0; n + m <= k && ok; ++m)
                    for (int shape : {1, 2})
                        ok = ok && rect_image_test_3d(k, n, m, shape, 0.0, 0.0, 0.0, k + n + m);
        report("3d box-image property (small levels)", ok);
    }
    {
        bool ok = true;
        for (const PLMap& map :
             {doubling_map(), tent_map(), golden_mean_map(), full_shift_map(3)}) {
            auto info = markov_structure(map);
            int deg = std::min(opt.degree, 12);
            if (deg < 2)
                deg = 2;
            ok = ok && zeta_identity_residual(map, info.transitions, deg) < 1e-9;

            SignedSystem sys = signed_fredholm(map, deg);
            auto phi = fredholm_markov(map, info.transitions, deg);
            SeriesMatrix m = series_identity(info.transitions.size(), deg);
            for (int i = 0; i < info.transitions.size(); ++i)
                for (int j = 0; j < info.transitions.size(); ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            ok = ok && (signed_det(sys) - det_series(m)).max_abs_coeff() < 1e-9;
        }
        report("zeta identity and two-route determinants on the stock maps", ok);
    }

    write_output(opt, os.str());
    return all_ok ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"van der Corput sequences from piecewise-linear expanding maps"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--map", opt.map_path, "map definition file (JSON)");
        sub->add_option("--dim", opt.dim, "dimension (1, 2 or 3)");
        sub->add_option("--base", opt.base, "base point x[,y[,z]] (expressions allowed)");
        sub->add_option("--levels", opt.levels, "level range A..B");
        sub->add_option("--n", opt.n, "number of points");
        sub->add_option("--precision", opt.precision, "binary digits per coordinate")
            ->check(CLI::Range(2, 4096));
        sub->add_option("--degree", opt.degree, "power-series truncation degree")
            ->check(CLI::Range(1, 512));
        sub->add_option("--dyadic-k", opt.dyadic_k, "dyadic box resolution 2^-k");
        sub->add_option("--log-power", opt.log_power, "exponent p in N D/(log N)^p");
        sub->add_option("--out", opt.out_path, "output path (default stdout)");
        sub->add_option("--format", opt.format, "decimal | bits | csv")
            ->check(CLI::IsMember({"decimal", "bits", "csv"}));
    };

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "spectral report and certificates");
    add_common(spectrum_cmd);

    CLI::App* generate_cmd = app.add_subcommand("generate", "emit sequence points");
    add_common(generate_cmd);
    generate_cmd->add_flag("--composed-3d", opt.composed_3d,
                           "use the composed level reading in 3d (comparison only)");

    CLI::App* discrepancy_cmd = app.add_subcommand("discrepancy", "measure a point file");
    add_common(discrepancy_cmd);
    discrepancy_cmd->add_option("points", opt.points_path, "point file");
    discrepancy_cmd->add_option("--points", opt.points_path, "point file");
    discrepancy_cmd->add_option("--at", opt.at, "comma-separated N schedule");

    CLI::App* verify_cmd = app.add_subcommand("verify", "structural invariant battery");
    add_common(verify_cmd);

    CLI::App* fit_cmd = app.add_subcommand("fit", "growth fit of an (N, D) table");
    add_common(fit_cmd);
    fit_cmd->add_option("points", opt.points_path, "CSV file with N,D columns");
    fit_cmd->add_option("--points", opt.points_path, "CSV file with N,D columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (spectrum_cmd->parsed())
            return cmd_spectrum(opt);
        if (generate_cmd->parsed())
            return cmd_generate(opt);
        if (discrepancy_cmd->parsed())
            return cmd_discrepancy(opt);
        if (verify_cmd->parsed())
            return cmd_verify(opt);
        if (fit_cmd->parsed())
            return cmd_fit(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
