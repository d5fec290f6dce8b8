// Command-line front door: family construction, triangle enumeration and
// search, certificate verification. Rationals are always "p/q" strings and
// JSON numbers are emitted as strings; output is deterministic for fixed
// inputs and version.

#include "hypheron/angle_family.hpp"
#include "hypheron/bisector_family.hpp"
#include "hypheron/certificate.hpp"
#include "hypheron/curve.hpp"
#include "hypheron/equilateral.hpp"
#include "hypheron/median_family.hpp"
#include "hypheron/search.hpp"
#include "hypheron/side_family.hpp"
#include "hypheron/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hypheron;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadParameters = 2;
constexpr int kExitNoneFound = 3;

Rat parse_rat_or_exit(const std::string& text, const char* flag) {
    const auto r = Rat::parse(text);
    if (!r) {
        std::cerr << "error: " << flag << " expects a rational \"p/q\", got \"" << text << "\"\n";
        std::exit(kExitBadParameters);
    }
    return *r;
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("HYPHERON_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

void print_triangle_human(const HyperbolicTriangle& t) {
    std::cout << "  t_alpha = " << t.t_alpha << ", t_beta = " << t.t_beta
              << ", t_gamma = " << t.t_gamma << ", area m = " << t.m << "\n";
    std::cout << "  cosh sides: a = " << t.cosh_a << ", b = " << t.cosh_b
              << ", c = " << t.cosh_c << "\n";
    if (t.heron())
        std::cout << "  e^a = " << *t.exp_a() << ", e^b = " << *t.exp_b()
                  << ", e^c = " << *t.exp_c() << "  (Heron)\n";
}

int cmd_heron_angle(const std::string& area, const std::string& angle, long kmax, long count,
                    bool json) {
    const Rat m = parse_rat_or_exit(area, "--area");
    const Rat u = parse_rat_or_exit(angle, "--angle");
    if (!(m.sign() > 0 && u.sign() > 0 && m * u < Rat(1))) {
        std::cerr << "error: need m > 0, u > 0 and mu < 1\n";
        return kExitBadParameters;
    }
    try {
        const AngleFamily family(m, u);
        const auto found = family.enumerate_heron(kmax, count);
        for (const auto& data : found) {
            const Certificate cert = make_angle_certificate(family, data);
            if (json) {
                std::cout << cert.to_json().dump() << "\n";
            } else {
                std::cout << "triangle from point " << data.source.str() << " (k = " << data.k
                          << ", torsion translate " << data.torsion_index << ")\n";
                print_triangle_human(cert.triangle);
            }
        }
        if (found.empty()) {
            if (!json) std::cout << "no Heron triangle within k_max = " << kmax << "\n";
            return kExitNoneFound;
        }
    } catch (const SingularFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    }
    return 0;
}

int cmd_heron_side(const std::string& vs, const std::string& ws, long height, bool json) {
    const Rat v = parse_rat_or_exit(vs, "--v");
    const Rat w = parse_rat_or_exit(ws, "--w");
    if (!(v > Rat(1) && w > Rat(1))) {
        std::cerr << "error: need v > 1 and w > 1\n";
        return kExitBadParameters;
    }
    try {
        const SideFamily family(v, w);
        const auto found = family.search_completions(height);
        for (const auto& completion : found) {
            const Certificate cert = make_side_certificate(family, completion);
            if (json) {
                std::cout << cert.to_json().dump() << "\n";
            } else {
                std::cout << "completion e^a = " << completion.u << " from point "
                          << completion.source.str() << "\n";
                print_triangle_human(completion.triangle);
            }
        }
        if (!json)
            std::cout << (found.empty() ? "no completion" : "search complete")
                      << " up to integral-model height " << height << "\n";
    } catch (const SingularFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    }
    return 0;
}

int cmd_median(const std::string& us, const std::string& ws, long kmax, long count, bool json) {
    const Rat u = parse_rat_or_exit(us, "--u");
    const Rat w = parse_rat_or_exit(ws, "--w");
    try {
        const MedianFamily family(u, w);
        const auto found = family.enumerate(kmax, count);
        for (const auto& tri : found) {
            if (json) {
                nlohmann::json j;
                j["family"] = {{"kind", "median"}, {"u", u.str()}, {"w", w.str()}};
                j["point"] = {{"x", tri.source.x.str()}, {"y", tri.source.y.str()}};
                j["k"] = tri.k;
                j["expA"] = tri.exp_a.str();
                j["expB"] = tri.exp_b.str();
                j["expC"] = tri.exp_c.str();
                j["coshMedian"] = tri.cosh_median.str();
                j["sinhMedian"] = tri.sinh_median.str();
                j["expMedian"] = tri.exp_median().str();
                j["heron"] = tri.full.has_value();
                if (tri.full) j["triangle"] = tri.full->to_json();
                j["version"] = kVersion;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "sides e^a = " << tri.exp_a << ", e^b = " << tri.exp_b
                          << ", e^c = " << tri.exp_c << " (k = " << tri.k << ")\n";
                std::cout << "  median: cosh = " << tri.cosh_median
                          << ", sinh = " << tri.sinh_median << ", e^m = " << tri.exp_median()
                          << "\n";
            }
        }
        if (found.empty()) {
            if (!json) std::cout << "no rational-median triangle within k_max = " << kmax << "\n";
            return kExitNoneFound;
        }
    } catch (const SingularFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    }
    return 0;
}

int cmd_bisector(const std::string& ns, const std::string& us, long kmax, long count, bool json) {
    const Rat n = parse_rat_or_exit(ns, "--n");
    const Rat u = parse_rat_or_exit(us, "--u");
    try {
        const BisectorFamily family(n, u);
        const auto found = family.enumerate(kmax, count);
        for (const auto& cfg : found) {
            if (json) {
                nlohmann::json j;
                j["family"] = {{"kind", "bisector"}, {"halfAreaN", n.str()}, {"u", u.str()}};
                j["point"] = {{"x", cfg.source.x.str()}, {"y", cfg.source.y.str()}};
                j["k"] = cfg.k;
                j["tAlpha"] = cfg.t_alpha.str();
                j["tAlpha1"] = cfg.t_alpha1.str();
                j["tTheta"] = cfg.t_theta.str();
                j["tGamma"] = cfg.t_gamma.str();
                j["coshC"] = cfg.cosh_c.str();
                j["heron"] = cfg.heron;
                if (cfg.sinh_bisector) j["sinhBisector"] = cfg.sinh_bisector->str();
                if (cfg.cosh_bisector) j["coshBisector"] = cfg.cosh_bisector->str();
                j["version"] = kVersion;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "split t_alpha = " << cfg.t_alpha << " into t_alpha1 = "
                          << cfg.t_alpha1 << ", foot angle t_theta = " << cfg.t_theta
                          << " (k = " << cfg.k << ")\n";
                if (cfg.heron)
                    std::cout << "  Heron: bisector sinh = " << *cfg.sinh_bisector
                              << ", cosh = " << *cfg.cosh_bisector << "\n";
            }
        }
        if (found.empty()) {
            if (!json) std::cout << "no bisector configuration within k_max = " << kmax << "\n";
            return kExitNoneFound;
        }
    } catch (const SingularFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    }
    return 0;
}

int cmd_equilateral(long height, bool json) {
    bool all_ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto kind : {EquilateralKind::Heron, EquilateralKind::MedianRationalSide}) {
        const EquilateralCase ec(kind);
        const auto torsion = ec.verify_torsion();
        const auto scan = ec.nonexistence_scan(height);
        all_ok = all_ok && torsion.ok && scan.only_known_torsion;
        nlohmann::json rejections = nlohmann::json::array();
        for (const auto& p : torsion.points) {
            const auto rej = ec.interpret_and_reject(p);
            rejections.push_back({{"point", p.str()},
                                  {"constraint", rej ? rej->constraint : "none"},
                                  {"reason", rej ? rej->reason : "unexpected: no rejection"}});
            all_ok = all_ok && rej.has_value();
        }
        nlohmann::json jc;
        jc["curve"] = kind == EquilateralKind::Heron ? "y^2 = x(x^2+x+1)"
                                                     : "y^2 = x^3 + 10x^2 + 9x";
        jc["torsionVerified"] = torsion.ok;
        jc["torsionDetail"] = torsion.detail;
        jc["scanHeight"] = height;
        jc["scanOnlyKnownTorsion"] = scan.only_known_torsion;
        jc["pointsFound"] = scan.found.size();
        jc["rejections"] = rejections;
        out.push_back(jc);
        if (!json) {
            std::cout << jc["curve"].get<std::string>() << "\n";
            std::cout << "  torsion verified: " << (torsion.ok ? "yes" : "NO") << " ("
                      << torsion.detail << ")\n";
            std::cout << "  scan height " << height << ": "
                      << (scan.only_known_torsion ? "only the verified torsion points"
                                                  : "UNEXPECTED EXTRA POINTS")
                      << "\n";
            for (const auto& r : rejections)
                std::cout << "  " << r["point"].get<std::string>() << " rejected: "
                          << r["constraint"].get<std::string>() << "\n";
        }
    }
    if (json) std::cout << out.dump() << "\n";
    return all_ok ? 0 : kExitVerifyFailed;
}

std::optional<Rat> json_rat(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) return std::nullopt;
    return Rat::parse(j[key].get<std::string>());
}

std::optional<RatPoint> json_point(const nlohmann::json& j) {
    if (!j.contains("point")) return std::nullopt;
    const auto x = json_rat(j["point"], "x");
    const auto y = json_rat(j["point"], "y");
    if (!x || !y) return std::nullopt;
    return RatPoint{*x, *y};
}

// median and bisector records re-derive everything from (family params, point)
VerifyOutcome verify_median_record(const nlohmann::json& j) {
    const auto u = json_rat(j["family"], "u");
    const auto w = json_rat(j["family"], "w");
    const auto p = json_point(j);
    if (!u || !w || !p) return {false, "malformed median record"};
    try {
        const MedianFamily f(*u, *w);
        if (!f.curve().contains(*p)) return {false, "source point not on E_{u,w}"};
        const auto tri = f.triangle_from_point(*p);
        if (!tri) return {false, "point does not yield a median triangle"};
        const auto eb = json_rat(j, "expB"), cm = json_rat(j, "coshMedian"),
                   sm = json_rat(j, "sinhMedian");
        if (!eb || !cm || !sm) return {false, "malformed median record"};
        if (tri->exp_b != *eb || tri->cosh_median != *cm || tri->sinh_median != *sm)
            return {false, "stored median data disagrees with recomputation"};
    } catch (const SingularFamily&) {
        return {false, "family parameters are singular"};
    }
    return {true, {}};
}

VerifyOutcome verify_bisector_record(const nlohmann::json& j) {
    const auto n = json_rat(j["family"], "halfAreaN");
    const auto u = json_rat(j["family"], "u");
    const auto p = json_point(j);
    if (!n || !u || !p) return {false, "malformed bisector record"};
    try {
        const BisectorFamily f(*n, *u);
        if (!f.curve().contains(*p)) return {false, "source point not on E_{n,u}"};
        const auto [t, w] = f.inverse(*p);
        std::optional<BisectorConfig> cfg = f.reconstruct(t, w);
        if (!cfg) cfg = f.reconstruct(t, -w);
        if (!cfg) return {false, "point does not yield a bisector configuration"};
        const auto t1 = json_rat(j, "tAlpha1"), tth = json_rat(j, "tTheta");
        if (!t1 || !tth) return {false, "malformed bisector record"};
        if (cfg->t_alpha1 != *t1 || cfg->t_theta != *tth)
            return {false, "stored bisector data disagrees with recomputation"};
        if (j.value("heron", false) != cfg->heron) return {false, "heron flag disagrees"};
    } catch (const SingularFamily&) {
        return {false, "family parameters are singular"};
    } catch (const MapUndefined&) {
        return {false, "point on an excluded locus"};
    }
    return {true, {}};
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitBadParameters;
    }
    size_t total = 0, good = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++total;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            std::cout << "certificate " << total << ": invalid JSON\n";
            continue;
        }
        VerifyOutcome outcome{false, "unknown record"};
        const std::string kind =
            j.contains("family") && j["family"].contains("kind") && j["family"]["kind"].is_string()
                ? j["family"]["kind"].get<std::string>()
                : "";
        if (kind == "median") {
            outcome = verify_median_record(j);
        } else if (kind == "bisector") {
            outcome = verify_bisector_record(j);
        } else {
            const auto cert = Certificate::from_json(j);
            outcome = cert ? verify_certificate(*cert)
                           : VerifyOutcome{false, "malformed certificate"};
        }
        if (outcome.ok) {
            ++good;
            std::cout << "certificate " << total << ": ok\n";
        } else {
            std::cout << "certificate " << total << ": FAILED (" << outcome.failure << ")\n";
        }
    }
    if (total == 0) {
        std::cerr << "error: no certificates in " << path << "\n";
        return kExitBadParameters;
    }
    return good == total ? 0 : kExitVerifyFailed;
}

int cmd_curve(const std::string& kind, const std::string& m, const std::string& u,
              const std::string& v, const std::string& w, const std::string& n, bool emit) {
    (void)emit;
    try {
        if (kind == "angle") {
            const AngleFamily f(parse_rat_or_exit(m, "--m"), parse_rat_or_exit(u, "--u"));
            std::cout << "E_{m,u}: (a2, a4, a6) = (" << f.curve().a2() << ", " << f.curve().a4()
                      << ", " << f.curve().a6() << ")\n";
            std::cout << "n = " << f.n() << "\n";
            std::cout << "discriminant = " << f.curve().discriminant()
                      << " (closed form = " << f.discriminant_closed_form() << ")\n";
            std::cout << "P(m,u) = " << f.point_p().str() << "\n";
            for (const auto& t : f.torsion_points())
                std::cout << "two-torsion: " << t.str() << "\n";
        } else if (kind == "side") {
            const SideFamily f(parse_rat_or_exit(v, "--v"), parse_rat_or_exit(w, "--w"));
            std::cout << "E_{v,w}: (a2, a4, a6) = (" << f.curve().a2() << ", " << f.curve().a4()
                      << ", " << f.curve().a6() << ")\n";
            std::cout << "discriminant = " << f.curve().discriminant()
                      << " (closed form = " << f.discriminant_closed_form() << ")\n";
            const auto sp = f.special_points();
            std::cout << "R = " << sp.r.str() << "\nS0 = " << sp.s0.str()
                      << "\nS1 = " << sp.s1.str() << "\n";
        } else if (kind == "median") {
            const MedianFamily f(parse_rat_or_exit(u, "--u"), parse_rat_or_exit(w, "--w"));
            std::cout << "E_{u,w}: (a2, a4, a6) = (" << f.curve().a2() << ", " << f.curve().a4()
                      << ", " << f.curve().a6() << ")\n";
            std::cout << "discriminant = " << f.curve().discriminant()
                      << " (closed form = " << f.discriminant_closed_form() << ")\n";
            std::cout << "P(u,w) = " << f.point_p().str() << "\n";
        } else if (kind == "bisector") {
            const BisectorFamily f(parse_rat_or_exit(n, "--n"), parse_rat_or_exit(u, "--u"));
            std::cout << "E_{n,u}: (a2, a4, a6) = (" << f.curve().a2() << ", " << f.curve().a4()
                      << ", " << f.curve().a6() << ")\n";
            std::cout << "discriminant = " << f.curve().discriminant()
                      << " (closed form = " << f.discriminant_closed_form() << ")\n";
            std::cout << "Q(n,u) = " << f.point_q().str() << "\n";
            std::cout << "two-torsion: " << f.two_torsion_point().str() << "\n";
        } else {
            std::cerr << "error: --family must be angle, side, median or bisector\n";
            return kExitBadParameters;
        }
    } catch (const SingularFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameters;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"exact parametrizations of hyperbolic Heron triangles by elliptic curves"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable output, one JSON object per line");

    std::string area, angle, vs, ws, us, ns, family, file;
    long kmax = 20, count = 0, height = 10000;

    auto* ha = app.add_subcommand("heron-angle",
                                  "Heron triangles with rational area m and one rational angle u");
    ha->add_option("--area", area, "rational area parameter m")->required();
    ha->add_option("--angle", angle, "rational angle parameter u")->required();
    ha->add_option("--kmax", kmax, "largest multiple of P(m,u) to try");
    ha->add_option("--count", count, "stop after this many certificates (0 = no cap)");

    auto* hs = app.add_subcommand("heron-side",
                                  "complete two sides log v, log w to Heron triangles");
    hs->add_option("--v", vs, "e^b of the first fixed side")->required();
    hs->add_option("--w", ws, "e^c of the second fixed side")->required();
    hs->add_option("--height", height, "integral-model height bound for the point search");

    auto* md = app.add_subcommand("median", "triangles with rational sides and rational median");
    md->add_option("--u", us, "e^{a/2} of the side the median meets")->required();
    md->add_option("--w", ws, "e^c of a fixed side")->required();
    md->add_option("--kmax", kmax, "largest multiple of P(u,w) to try");
    md->add_option("--count", count, "stop after this many triangles (0 = no cap)");

    auto* bi = app.add_subcommand("bisector",
                                  "triangles with rational half-area and area-bisector split");
    bi->add_option("--n", ns, "rational half-area parameter")->required();
    bi->add_option("--u", us, "rational angle parameter of beta")->required();
    bi->add_option("--kmax", kmax, "largest multiple of Q(n,u) to try");
    bi->add_option("--count", count, "stop after this many configurations (0 = no cap)");

    auto* eq = app.add_subcommand("equilateral", "verify the equilateral non-existence results");
    bool eq_verify = false;
    eq->add_flag("--verify", eq_verify, "run torsion verification and bounded scan");
    eq->add_option("--height", height, "scan height bound");

    auto* ve = app.add_subcommand("verify", "re-verify a file of certificates (one JSON per line)");
    ve->add_option("file", file, "certificate file")->required();

    auto* cu = app.add_subcommand("curve", "print a family's curve, discriminant, special points");
    cu->add_option("--family", family, "angle | side | median | bisector")->required();
    cu->add_option("--m", area, "angle family m");
    cu->add_option("--u", us, "angle/median/bisector parameter u");
    cu->add_option("--v", vs, "side family v");
    cu->add_option("--w", ws, "side/median parameter w");
    cu->add_option("--n", ns, "bisector half-area parameter");
    bool emit = false;
    cu->add_flag("--emit", emit, "print the full data record");

    CLI11_PARSE(app, argc, argv);

    if (ha->parsed()) return cmd_heron_angle(area, angle, kmax, count, json);
    if (hs->parsed()) return cmd_heron_side(vs, ws, height, json);
    if (md->parsed()) return cmd_median(us, ws, kmax, count, json);
    if (bi->parsed()) return cmd_bisector(ns, us, kmax, count, json);
    if (eq->parsed()) return cmd_equilateral(height, json);
    if (ve->parsed()) return cmd_verify(file);
    if (cu->parsed()) return cmd_curve(family, area, us, vs, ws, ns, emit);
    return kExitBadParameters;
}
