// Command line front end: computes quasi-eigenvalue spectra, counting
// functions, boundary waves and spectral statistics of curvilinear polygons
// and zigzags, and emits deterministic CSV.
//
// Exit codes: 0 success, 2 validation error, 3 numeric alarm (Weyl residual
// breach or truncated spectrum).

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "steklov/asymptotics.hpp"
#include "steklov/boundarywaves.hpp"
#include "steklov/enumeration.hpp"
#include "steklov/geometry.hpp"
#include "steklov/oracles.hpp"
#include "steklov/presets.hpp"
#include "steklov/quantumgraph.hpp"
#include "steklov/rootfind.hpp"
#include "steklov/specfile.hpp"
#include "steklov/trigpoly.hpp"

namespace {

using namespace steklov;
constexpr double kPi = std::numbers::pi;

constexpr int kExitValidation = 2;
constexpr int kExitNumericAlarm = 3;

struct Options {
    std::string preset;
    std::string input;
    std::string output;
    std::string grid = "0:20:0.01";
    double sigma_max = 60.0;
    double tol_angle = 1e-12;
    double refine_tol = 1e-12;
    double double_root_tol = 1e-7;
};

ScanOptions scan_options(const Options& o) {
    ScanOptions s;
    s.sigma_max = o.sigma_max;
    s.refine_tol = o.refine_tol;
    s.double_root_tol = o.double_root_tol;
    return s;
}

// 17 significant digits, '.' decimal separator, fixed by the C locale.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    void header(const std::string& columns, const std::string& config) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a(config));
        out() << columns << "\n# config=" << buf << "\n";
    }

  private:
    std::ofstream file_;
};

struct Grid {
    double lo = 0.0, hi = 20.0, step = 0.01;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw std::invalid_argument("grid must be lo:hi:step");
    g.lo = std::stod(text.substr(0, a));
    g.hi = std::stod(text.substr(a + 1, b - a - 1));
    g.step = std::stod(text.substr(b + 1));
    if (!(g.step > 0.0) || !(g.hi >= g.lo))
        throw std::invalid_argument("bad grid '" + text + "'");
    return g;
}

BoundarySpec load_boundary(const Options& o) {
    if (!o.preset.empty() && !o.input.empty())
        throw std::invalid_argument("give either --preset or --input, not both");
    ClassifyOptions copts;
    copts.tol_angle = o.tol_angle;
    if (!o.input.empty()) return load_spec_file(o.input, copts);
    if (!o.preset.empty()) return preset_polygon(o.preset);
    throw std::invalid_argument("need --preset or --input");
}

PolygonSpec require_polygon(const Options& o) {
    BoundarySpec spec = load_boundary(o);
    if (auto* p = std::get_if<PolygonSpec>(&spec)) return *p;
    throw std::invalid_argument("this subcommand needs a polygon spec");
}

ZigzagSpec require_zigzag(const Options& o) {
    BoundarySpec spec = load_boundary(o);
    if (auto* z = std::get_if<ZigzagSpec>(&spec)) return *z;
    throw std::invalid_argument("this subcommand needs a zigzag spec (with bc)");
}

std::string provenance_str(const Provenance& pr) {
    if (pr.kind == ProvenanceKind::WholeBoundary) return "whole-boundary";
    return "component:" + std::to_string(pr.component);
}

int weyl_alarm(const std::vector<QuasiEigenvalue>& spec, double length,
               std::size_t sides, double sigma_max) {
    const double residual = weyl_residual(expand(spec), length, sigma_max);
    if (residual > static_cast<double>(sides) + 2.0) {
        std::cerr << "numeric alarm: Weyl residual " << residual
                  << " exceeds n+2; roots may be missing\n";
        return kExitNumericAlarm;
    }
    return 0;
}

int cmd_polygon_spectrum(const Options& o) {
    const PolygonSpec p = require_polygon(o);
    const auto spec = polygon_spectrum(p, scan_options(o));
    CsvWriter csv(o.output);
    csv.header("index,sigma,multiplicity,provenance",
               "polygon-spectrum|" + o.preset + o.input + "|" + fmt(o.sigma_max));
    for (const auto& q : spec)
        csv.out() << q.index << ',' << fmt(q.sigma) << ',' << q.multiplicity
                  << ',' << provenance_str(q.provenance) << "\n";
    return weyl_alarm(spec, perimeter(p), p.size(), o.sigma_max);
}

int cmd_zigzag_spectrum(const Options& o) {
    const ZigzagSpec z = require_zigzag(o);
    const auto spec = zigzag_spectrum(z, scan_options(o));
    CsvWriter csv(o.output);
    csv.header("index,sigma,multiplicity,provenance",
               "zigzag-spectrum|" + o.preset + o.input + "|" + fmt(o.sigma_max));
    for (const auto& q : spec)
        csv.out() << q.index << ',' << fmt(q.sigma) << ',' << q.multiplicity
                  << ',' << provenance_str(q.provenance) << "\n";
    return weyl_alarm(spec, total_length(z), z.pieces() + 2, o.sigma_max);
}

int cmd_counting(const Options& o) {
    const BoundarySpec spec = load_boundary(o);
    const Grid g = parse_grid(o.grid);
    CsvWriter csv(o.output);
    if (const auto* p = std::get_if<PolygonSpec>(&spec)) {
        csv.header("sigma,count,psi1,psi2",
                   "counting|" + o.preset + o.input + "|" + o.grid);
        for (double s = g.lo; s <= g.hi + 1e-12; s += g.step) {
            const auto psi = polygon_psi(*p, s);
            csv.out() << fmt(s) << ',' << polygon_counting(*p, s) << ','
                      << fmt(psi[0]) << ',' << fmt(psi[1]) << "\n";
        }
        return 0;
    }
    const auto& z = std::get<ZigzagSpec>(spec);
    csv.header("sigma,count,phi", "counting|" + o.preset + o.input + "|" + o.grid);
    for (double s = g.lo; s <= g.hi + 1e-12; s += g.step) {
        const double phi = z.exceptional() ? std::nan("") : phi_zigzag(z, s);
        csv.out() << fmt(s) << ',' << zigzag_counting(z, s) << ',' << fmt(phi)
                  << "\n";
    }
    return 0;
}

int cmd_wave(const Options& o, int index) {
    const BoundarySpec spec = load_boundary(o);
    CsvWriter csv(o.output);
    const auto emit = [&csv](const BoundaryQuasiWave& w) {
        csv.out() << "# coefficients: edge,c_in_re,c_in_im,c_out_re,c_out_im\n";
        for (std::size_t j = 0; j < w.lengths.size(); ++j)
            csv.out() << j + 1 << ',' << fmt(w.c_in[j].c.real()) << ','
                      << fmt(w.c_in[j].c.imag()) << ',' << fmt(w.c_out[j].c.real())
                      << ',' << fmt(w.c_out[j].c.imag()) << "\n";
        csv.out() << "# trace: s,psi\n";
        double offset = 0.0;
        for (std::size_t j = 0; j < w.lengths.size(); ++j) {
            const int samples = std::max(
                16, static_cast<int>(std::ceil(w.lengths[j] *
                                               std::max(w.sigma, 1.0) * 8.0)));
            for (int i = 0; i <= samples; ++i) {
                const double local = w.lengths[j] * i / samples;
                csv.out() << fmt(offset + local) << ','
                          << fmt(w.psi(j, local - w.lengths[j])) << "\n";
            }
            offset += w.lengths[j];
        }
    };
    if (const auto* p = std::get_if<PolygonSpec>(&spec)) {
        const auto eigen = polygon_spectrum(*p, scan_options(o));
        const QuasiEigenvalue* pick = nullptr;
        for (const auto& q : eigen)
            if (q.index <= index && index < q.index + q.multiplicity) pick = &q;
        if (pick == nullptr)
            throw std::invalid_argument("wave index beyond computed spectrum");
        const auto basis = solve_wave_basis(*p, pick->sigma, scan_options(o));
        csv.header("wave", "wave|" + o.preset + o.input + "|" + std::to_string(index));
        csv.out() << "# sigma=" << fmt(pick->sigma) << "\n";
        emit(basis[std::min<std::size_t>(index - pick->index, basis.size() - 1)]);
        return 0;
    }
    const auto& z = std::get<ZigzagSpec>(spec);
    const auto eigen = zigzag_spectrum(z, scan_options(o));
    const QuasiEigenvalue* pick = nullptr;
    for (const auto& q : eigen)
        if (q.index <= index && index < q.index + q.multiplicity) pick = &q;
    if (pick == nullptr)
        throw std::invalid_argument("wave index beyond computed spectrum");
    csv.header("wave", "wave|" + o.preset + o.input + "|" + std::to_string(index));
    csv.out() << "# sigma=" << fmt(pick->sigma) << "\n";
    emit(solve_zigzag_wave(z, pick->sigma, scan_options(o)));
    return 0;
}

int cmd_stats(const Options& o) {
    const PolygonSpec p = require_polygon(o);
    const auto spec = polygon_spectrum(p, scan_options(o));
    const auto values = expand(spec);
    const double length = perimeter(p);
    const Grid g = parse_grid(o.grid);
    CsvWriter csv(o.output);
    csv.header("sigma,count,weyl_term,riesz,riesz_leading",
               "stats|" + o.preset + o.input + "|" + o.grid);
    int code = 0;
    for (double s = g.lo; s <= g.hi + 1e-12; s += g.step) {
        double riesz = std::nan("");
        try {
            riesz = riesz_mean(values, s, o.sigma_max);
        } catch (const std::exception& e) {
            std::cerr << "numeric alarm: " << e.what() << "\n";
            code = kExitNumericAlarm;
            break;
        }
        csv.out() << fmt(s) << ',' << counting(values, s) << ','
                  << fmt(length * s / kPi) << ',' << fmt(riesz) << ','
                  << fmt(length * s * s / (2.0 * kPi)) << "\n";
    }
    if (code == 0) {
        try {
            const double t = 0.05;
            const HeatTrace h = heat_trace(values, t, o.sigma_max, length,
                                           static_cast<int>(p.size()));
            csv.out() << "# heat t=" << fmt(t) << " value=" << fmt(h.value)
                      << " tail_bound=" << fmt(h.tail_bound) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "numeric alarm: " << e.what() << "\n";
            code = kExitNumericAlarm;
        }
    }
    if (code == 0) code = weyl_alarm(spec, length, p.size(), o.sigma_max);
    return code;
}

int cmd_secular_check(const Options& o) {
    const PolygonSpec p = require_polygon(o);
    const Grid g = parse_grid(o.grid);
    const RealTrigPoly fp = polygon_char_poly(p);
    const double length = perimeter(p);
    CsvWriter csv(o.output);
    csv.header("sigma,residual", "secular-check|" + o.preset + o.input + "|" + o.grid);
    double worst = 0.0;
    for (double s = g.lo; s <= g.hi + 1e-12; s += g.step) {
        const cd det = secular_det(p, s);
        const cd rhs = 2.0 * std::polar(1.0, -s * length) * fp.eval(s);
        const double r = std::abs(det - rhs);
        worst = std::max(worst, r);
        csv.out() << fmt(s) << ',' << fmt(r) << "\n";
    }
    csv.out() << "# max_residual=" << fmt(worst) << "\n";
    return 0;
}

std::vector<double> oracle_values(const std::string& name, double sigma_max,
                                  const Options& o) {
    std::string base = name;
    std::string param;
    if (const auto at = name.find(':');
        at != std::string::npos && base.substr(0, at) != "") {
        base = name.substr(0, at);
        param = name.substr(at + 1);
    }
    if (base == "square-exact") {
        const int count = static_cast<int>(4.0 * sigma_max / kPi) + 4;
        auto v = square_exact_steklov(count).expanded();
        std::erase_if(v, [&](double x) { return x > sigma_max; });
        return v;
    }
    if (base == "disk") {
        const int count = static_cast<int>(2.0 * sigma_max) + 3;
        auto v = disk_exact(count).expanded();
        std::erase_if(v, [&](double x) { return x > sigma_max; });
        return v;
    }
    if (base == "sector") return sector_spectrum(parse_angle_value(param), sigma_max).expanded();
    const PolygonSpec p = preset_polygon(name);
    if (p.all_special()) return all_special_spectrum(p, sigma_max).expanded();
    if (name == "square")
        return regular_polygon_spectrum(4, p.angles[0], 1.0, sigma_max).expanded();
    if (name == "pentagon" || name == "triangle-equilateral")
        return regular_polygon_spectrum(static_cast<int>(p.size()), p.angles[0],
                                        1.0, sigma_max).expanded();
    if (base == "droplet")
        return regular_polygon_spectrum(1, p.angles[0], 1.0, sigma_max).expanded();
    // fall back to the computed quasi-spectrum for presets without a closed form
    Options local = o;
    local.preset = name;
    return expand(polygon_spectrum(p, scan_options(local)));
}

std::vector<double> side_values(const std::string& sel, const Options& o) {
    const auto at = sel.find(':');
    if (at == std::string::npos)
        throw std::invalid_argument("compare sides look like oracle:NAME or quasi:PRESET");
    const std::string kind = sel.substr(0, at);
    const std::string name = sel.substr(at + 1);
    if (kind == "oracle") return oracle_values(name, o.sigma_max, o);
    if (kind == "quasi") {
        Options local = o;
        local.preset = name;
        local.input.clear();
        return expand(polygon_spectrum(require_polygon(local), scan_options(o)));
    }
    throw std::invalid_argument("unknown compare side '" + kind + "'");
}

int cmd_compare(const Options& o, const std::string& left,
                const std::string& right) {
    const auto lv = side_values(left, o);
    const auto rv = side_values(right, o);
    CsvWriter csv(o.output);
    csv.header("index,left,right,abs_diff",
               "compare|" + left + "|" + right + "|" + fmt(o.sigma_max));
    const std::size_t count = std::min(lv.size(), rv.size());
    for (std::size_t i = 0; i < count; ++i)
        csv.out() << i + 1 << ',' << fmt(lv[i]) << ',' << fmt(rv[i]) << ','
                  << fmt(std::abs(lv[i] - rv[i])) << "\n";
    return 0;
}

int cmd_oracle(const Options& o, const std::string& name) {
    const auto values = oracle_values(name, o.sigma_max, o);
    CsvWriter csv(o.output);
    csv.header("index,sigma", "oracle|" + name + "|" + fmt(o.sigma_max));
    for (std::size_t i = 0; i < values.size(); ++i)
        csv.out() << i + 1 << ',' << fmt(values[i]) << "\n";
    return 0;
}

int cmd_poly_dump(const Options& o) {
    const BoundarySpec spec = load_boundary(o);
    CsvWriter csv(o.output);
    csv.header("frequency,re_amp,im_amp", "poly-dump|" + o.preset + o.input);
    RealTrigPoly poly;
    if (const auto* p = std::get_if<PolygonSpec>(&spec))
        poly = polygon_char_poly(*p);
    else
        poly = zigzag_char_poly(std::get<ZigzagSpec>(spec));
    for (const auto& t : poly.terms)
        csv.out() << fmt(t.freq) << ',' << fmt(t.c) << ',' << fmt(-t.s) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic Steklov spectra of curvilinear polygons"};
    app.require_subcommand(1);

    Options o;
    int wave_index = 1;
    std::string left, right, oracle_name;

    const auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--preset", o.preset, "built-in domain name");
        cmd->add_option("--input", o.input, "JSON spec file");
        cmd->add_option("--output", o.output, "CSV output path (default stdout)");
        cmd->add_option("--sigma-max", o.sigma_max, "spectrum cut-off");
        cmd->add_option("--tol-angle", o.tol_angle, "angle classification tolerance");
        cmd->add_option("--refine-tol", o.refine_tol, "root refinement tolerance");
        cmd->add_option("--double-root-tol", o.double_root_tol,
                        "double root detection tolerance");
        cmd->add_option("--grid", o.grid, "evaluation grid lo:hi:step");
    };

    auto* c1 = app.add_subcommand("polygon-spectrum",
                                  "quasi-eigenvalues of a polygon");
    add_common(c1);
    auto* c2 = app.add_subcommand("zigzag-spectrum",
                                  "quasi-eigenvalues of a zigzag");
    add_common(c2);
    auto* c3 = app.add_subcommand("counting", "counting function over a grid");
    add_common(c3);
    auto* c4 = app.add_subcommand("wave", "boundary quasi-wave");
    add_common(c4);
    c4->add_option("--m", wave_index, "eigenvalue index");
    auto* c5 = app.add_subcommand("stats", "counting/Riesz/heat statistics");
    add_common(c5);
    auto* c6 = app.add_subcommand("secular-check",
                                  "residual of the secular identity");
    add_common(c6);
    auto* c7 = app.add_subcommand("oracle", "closed-form reference spectrum");
    add_common(c7);
    c7->add_option("--name", oracle_name, "oracle name")->required();
    auto* c8 = app.add_subcommand("compare", "pair two spectra and emit |diff|");
    add_common(c8);
    c8->add_option("--left", left, "left side, oracle:NAME or quasi:PRESET")
        ->required();
    c8->add_option("--right", right, "right side")->required();
    auto* c9 = app.add_subcommand("poly-dump",
                                  "characteristic polynomial as CSV");
    add_common(c9);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c1->parsed()) return cmd_polygon_spectrum(o);
        if (c2->parsed()) return cmd_zigzag_spectrum(o);
        if (c3->parsed()) return cmd_counting(o);
        if (c4->parsed()) return cmd_wave(o, wave_index);
        if (c5->parsed()) return cmd_stats(o);
        if (c6->parsed()) return cmd_secular_check(o);
        if (c7->parsed()) return cmd_oracle(o, oracle_name);
        if (c8->parsed()) return cmd_compare(o, left, right);
        if (c9->parsed()) return cmd_poly_dump(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
