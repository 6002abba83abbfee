// Command-line driver: every verification as a reproducible command emitting
// a machine-readable report (schema "gspin-gj/1") on stdout and, with --out,
// to a file. Exit 0 on pass, 1 on verification failure, 2 on usage errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "gspingj/doubling.hpp"
#include "gspingj/integrator.hpp"
#include "gspingj/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace gspingj;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string space = "n=1,E=F,p=3";
    int degree = 4;
    unsigned long seed = 1;
    int trials = 100;
    std::string satake; // "a1,..;E=b1[,b2]", empty = seeded random
    std::string mode = "both";
    std::string out;
};

struct Report {
    json failures = json::array();
    json series_lhs = json::array();
    json series_rhs = json::array();
    json satake = json::array();
    bool pass = true;

    void fail(const std::string& input, const std::string& expected,
              const std::string& actual) {
        pass = false;
        failures.push_back(
            {{"input", input}, {"expected", expected}, {"actual", actual}});
    }
    void expect(bool ok, const std::string& input) {
        if (!ok) fail(input, "identity holds", "identity fails");
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(sep, start);
        if (end == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

QSpace parse_space_checked(const std::string& d) {
    try {
        return parse_space(d);
    } catch (const std::exception& e) {
        throw UsageError("invalid space descriptor \"" + d + "\": " + e.what());
    }
}

Rational parse_rational_checked(const std::string& tok) {
    try {
        return rational_from_string(tok);
    } catch (const std::exception& e) {
        throw UsageError("invalid rational \"" + tok + "\": " + e.what());
    }
}

SatakeData satake_for(const Options& o, const QSpace& s, Sampler& smp) {
    if (o.satake.empty()) return random_satake(smp, s);
    size_t semi = o.satake.find(';');
    if (semi == std::string::npos || o.satake.compare(semi + 1, 2, "E=") != 0)
        throw UsageError("--satake must look like \"a1,..;E=b1[,b2]\"");
    std::vector<Rational> a, b;
    for (const std::string& tok : split(o.satake.substr(0, semi), ','))
        if (!tok.empty()) a.push_back(parse_rational_checked(tok));
    for (const std::string& tok : split(o.satake.substr(semi + 3), ','))
        if (!tok.empty()) b.push_back(parse_rational_checked(tok));
    try {
        return make_satake(s, std::move(a), std::move(b));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--satake does not fit the space: ") + e.what());
    }
}

json satake_json(const SatakeData& sd) {
    json arr = json::array();
    for (const Rational& v : sd.a) arr.push_back(rational_to_string(v));
    for (const Rational& v : sd.b) arr.push_back(rational_to_string(v));
    return arr;
}

json series_json(const TruncSeries& ts) {
    json arr = json::array();
    for (size_t k = 0; k <= ts.degree(); ++k)
        arr.push_back(rational_to_string(ts.coeff(k)));
    return arr;
}

json coeffs_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& c : v) arr.push_back(rational_to_string(c));
    return arr;
}

std::string coords_str(const std::vector<Rational>& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += rational_to_string(c[i]);
    }
    return s + ")";
}

void need_levi(const QSpace& s, const char* cmd) {
    if (s.n < 1)
        throw UsageError(std::string(cmd) + " needs a space with n >= 1");
}

std::vector<Rational> basis_vec(const QSpace& s, int pos) {
    std::vector<Rational> c(s.dim, Rational(0));
    c[pos] = 1;
    return c;
}

CliffordElement random_v0m_elem(Sampler& smp, const Algebra& a0, int dimV0,
                                unsigned long p) {
    while (true) {
        CliffordElement h = a0.scalar(random_small_int(smp, -4, 4));
        if (dimV0 == 2) {
            CliffordElement w12 = a0.mul(a0.gen(0), a0.gen(1));
            h = clif_add(h, clif_scale(random_small_int(smp, -4, 4), w12));
        }
        if (clif_eq(h, clif_zero())) continue;
        if (a0.scalar_part(a0.mul(a0.star(h), h)) == 0) continue;
        return clif_scale(q_pow(p, smp.uniform(-2, 2)), h);
    }
}

void cmd_theorem1(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    Sampler smp(o.seed);
    SatakeData sd = satake_for(o, s, smp);
    r.satake = satake_json(sd);
    int M = o.degree;
    TruncSeries expected = standard_L_shifted_x(sd, s.dim, M, s.p) *
                           dV_x(s.dim, sd.omega(), M, s.p).inverse();
    r.series_rhs = series_json(expected);
    if (o.mode != "recursive") {
        IntegralResult res = gj_series_direct(sd, s, M);
        if (!res.stability_certificate)
            r.fail("direct route", "stability certificate", "grids did not stabilize");
        if (res.series != expected)
            r.fail("direct route", expected.to_string(), res.series.to_string());
        r.series_lhs = series_json(res.series);
    }
    if (o.mode != "direct") {
        TruncSeries rec = gj_series_recursive(sd, s, M);
        if (rec != expected)
            r.fail("recursive route", expected.to_string(), rec.to_string());
        if (r.series_lhs.empty()) r.series_lhs = series_json(rec);
    }
}

void cmd_basic_function(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    Sampler smp(o.seed);
    SatakeData sd = satake_for(o, s, smp);
    r.satake = satake_json(sd);
    if (!exact_basic_function_check(sd, s, o.degree))
        r.fail("corrected basic function", "resummed identity holds", "mismatch");
}

void cmd_meas(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    Algebra alg(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        CliffordElement y = random_gspin_word(smp, alg, 3, -2, 2);
        Rational lhs = measure_Uy(alg, y);
        Rational rhs = measure_Uy_closed_form(alg, y);
        if (lhs != rhs)
            r.fail("y = " + alg.to_string(y), rational_to_string(rhs),
                   rational_to_string(lhs));
    }
}

void cmd_fourier(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    need_levi(s, "verify-fourier");
    Algebra alg(s);
    Sampler smp(o.seed);
    Rational pr(static_cast<long>(s.p));

    CliffordElement ym = elt_m(alg, 1, pr);
    FourierConfig cf{lattice_vector(s, basis_vec(s, s.f_pos(1)))};
    r.expect(fourier_ST(alg, Rational(1), ym, cf) == pr &&
                 fourier_ST_predicted(alg, Rational(1), ym, cf) == pr,
             "torus anchor T = f_1");
    FourierConfig ce{lattice_vector(s, basis_vec(s, s.e_pos(1)))};
    r.expect(fourier_ST(alg, Rational(1), ym, ce) == Rational(0) &&
                 fourier_ST_predicted(alg, Rational(1), ym, ce) == Rational(0),
             "dual anchor T = e_1");

    for (int k = 0; k < o.trials; ++k) {
        FourierConfig cfg{random_primitive_T(smp, s)};
        CliffordElement y = random_k_word(smp, alg, 3);
        Rational lam = random_unit(smp, s.p);
        std::string lbl = "trial " + std::to_string(k) + " y = " + alg.to_string(y);
        r.expect(fourier_ST(alg, lam, y, cfg) == Rational(1) &&
                     fourier_ST_predicted(alg, lam, y, cfg) == Rational(1),
                 lbl);
        r.expect(fourier_ST(alg, lam / pr, y, cfg) == Rational(0) &&
                     fourier_ST_predicted(alg, lam / pr, y, cfg) == Rational(0),
                 lbl + " (lam violation)");
        CliffordElement ys = clif_scale(pr, y);
        r.expect(fourier_ST(alg, lam, ys, cfg) == Rational(0) &&
                     fourier_ST_predicted(alg, lam, ys, cfg) == Rational(0),
                 lbl + " (valuation violation)");
        FourierConfig off = cfg;
        for (auto& cc : off.T.coords) cc = cc / pr;
        r.expect(fourier_ST(alg, lam, y, off) == Rational(0),
                 lbl + " (dual violation)");
    }
}

void cmd_support_claim(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    need_levi(s, "verify-support-claim");
    Algebra alg(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        std::vector<Rational> x = random_vj_coords(smp, s, 1, -6, 6);
        for (auto& c : x) c = c / q_pow(s.p, smp.uniform(0, 2));
        Rational lam = random_with_val(smp, s.p, smp.uniform(-2, 2));
        CliffordElement y = random_gspin_v1(smp, alg, 3, -2, 2);
        if (!check_support_claim(alg, x, lam, y))
            r.fail("x = " + coords_str(x) + ", lam = " + rational_to_string(lam) +
                       ", y = " + alg.to_string(y),
                   "equivalence holds", "sides differ");
    }
}

void cmd_filtration(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    need_levi(s, "verify-filtration");
    Algebra alg(s);
    Sampler smp(o.seed);
    std::vector<std::vector<int>> subsets = {{1}};
    if (s.n == 2) {
        subsets.push_back({2});
        subsets.push_back({1, 2});
    }
    int per = o.trials / 3 > 0 ? o.trials / 3 : 1;
    for (const auto& I : subsets) {
        Blade up = u_plus_mask(s, I);
        Blade um = u_minus_mask(s, I);
        auto in_U = [&](int pos) {
            for (int i : I)
                if (pos == s.f_pos(i)) return true;
            return false;
        };
        auto stabilizes = [&](const CliffordElement& g) {
            for (int i : I) {
                std::vector<Rational> w = vector_action(alg, basis_vec(s, s.f_pos(i)), g);
                for (int k = 0; k < s.dim; ++k)
                    if (!in_U(k) && w[k] != 0) return false;
            }
            return true;
        };
        std::string tag = "|I| = " + std::to_string(I.size());

        for (int k = 0; k < per; ++k) {
            CliffordElement g = random_pu_word(smp, alg, I, 4);
            auto deg = filtration_degree(g, up, um);
            r.expect(deg.has_value() && *deg <= 0 && stabilizes(g),
                     tag + " parabolic word " + std::to_string(k));
        }
        int found = 0, tries = 0;
        while (found < per && tries < 500 * per) {
            ++tries;
            CliffordElement g = random_gspin_word(smp, alg, 3, -1, 1);
            auto deg = filtration_degree(g, up, um);
            if (!deg || *deg > 0) continue;
            ++found;
            r.expect(stabilizes(g), tag + " filtered word " + std::to_string(found));
        }
        r.expect(found == per, tag + " filtered sample quota");
        for (int k = 0; k < per; ++k) {
            CliffordElement g = random_nu_word(smp, alg, I, 3);
            CliffordElement gm1 = clif_add(g, clif_scale(Rational(-1), alg.one()));
            auto deg = filtration_degree(gm1, up, um);
            bool ok = !deg || *deg <= -1;
            for (int i : I)
                ok = ok && vector_action(alg, basis_vec(s, s.f_pos(i)), g) ==
                               basis_vec(s, s.f_pos(i));
            r.expect(ok, tag + " radical word " + std::to_string(k));
        }
    }
}

void cmd_pullback_phi(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    DoublingSetup d = make_pullback_setup(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        CliffordElement h = random_v0m_elem(smp, *d.algV0m, d.dimV0, s.p);
        if (!pullback_phi_check(d, h))
            r.fail("h = " + d.algV0m->to_string(h), "sections agree", "sides differ");
    }
}

void cmd_eis_character(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    DoublingSetup d = make_doubling_setup(s);
    int m = d.spinor.m;
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        CliffordElement g = d.algW->one();
        int len = 1 + static_cast<int>(smp.uniform(0, 3));
        for (int w = 0; w < len; ++w) {
            switch (m >= 2 ? smp.uniform(0, 2) : 0) {
            case 0:
                g = d.algW->mul(g, px_torus(d, static_cast<int>(smp.uniform(0, m - 1)),
                                            random_unit(smp, s.p)));
                break;
            case 1: {
                int i = static_cast<int>(smp.uniform(0, m - 1));
                int j = static_cast<int>(smp.uniform(0, m - 2));
                if (j >= i) ++j;
                g = d.algW->mul(g, px_levi(d, i, j, random_small_int(smp, -3, 3)));
                break;
            }
            default: {
                int i = static_cast<int>(smp.uniform(0, m - 1));
                int j = static_cast<int>(smp.uniform(0, m - 2));
                if (j >= i) ++j;
                g = d.algW->mul(g, px_unip(d, i, j, random_small_int(smp, -3, 3)));
            }
            }
        }
        if (!eis_section_character_check(d, g))
            r.fail("p = " + d.algW->to_string(g), "alpha^2 det m = nu", "mismatch");
    }
}

void cmd_betaT(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    need_levi(s, "verify-betaT");
    Algebra alg(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        Rational lam = random_with_val(smp, s.p, smp.uniform(-2, 2));
        CliffordElement y = random_gspin_v1(smp, alg, 3, -1, 1);
        LatticeVector T = random_primitive_T(smp, s);
        if (!betaT_check(alg, lam, y, T))
            r.fail("lam = " + rational_to_string(lam) + ", y = " + alg.to_string(y) +
                       ", T = " + coords_str(T.coords),
                   "transverse coefficient matches", "mismatch");
    }
}

void cmd_chary(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    need_levi(s, "verify-chary");
    DoublingSetup d = make_ks_setup(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        Rational lam = random_with_val(smp, s.p, smp.uniform(-2, 2));
        CliffordElement y = random_gspin_v1(smp, *d.algV, 3, -1, 1);
        LatticeVector T = random_primitive_T(smp, s);
        if (!chary_check(d, lam, y, T))
            r.fail("lam = " + rational_to_string(lam) + ", y = " + d.algV->to_string(y) +
                       ", T = " + coords_str(T.coords),
                   "spinor class indicator matches", "mismatch");
    }
}

void cmd_k_invariance(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    Algebra alg(s);
    Sampler smp(o.seed);
    for (int k = 0; k < o.trials; ++k) {
        CliffordElement g = random_gspin_word(smp, alg, 3, -1, 1);
        CliffordElement kk = random_k_word(smp, alg, 3);
        bool phi = alg.is_integral(g);
        if (alg.is_integral(alg.mul(kk, g)) != phi ||
            alg.is_integral(alg.mul(g, kk)) != phi)
            r.fail("g = " + alg.to_string(g) + ", k = " + alg.to_string(kk),
                   "Phi(kg) = Phi(gk) = Phi(g)", "differs");
    }
}

void cmd_lfunction_eval(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    Sampler smp(o.seed);
    SatakeData sd = satake_for(o, s, smp);
    r.satake = satake_json(sd);
    r.series_lhs = series_json(standard_L_plain(sd, o.degree, s.p));
    r.series_rhs = series_json(standard_L_shifted_x(sd, s.dim, o.degree, s.p));
}

void cmd_basic_coeffs(const Options& o, Report& r) {
    QSpace s = parse_space_checked(o.space);
    std::vector<Rational> plain, primed;
    try {
        plain = basic_coeffs(s.dim, o.degree, s.p);
        primed = basic_coeffs_prime(s.dim, o.degree, s.p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.series_lhs = coeffs_json(plain);
    r.series_rhs = coeffs_json(primed);
    Rational run(0);
    for (size_t k = 0; k < plain.size(); ++k) {
        run += plain[k];
        if (k >= primed.size() || primed[k] != run)
            r.fail("N = " + std::to_string(k), rational_to_string(run),
                   k < primed.size() ? rational_to_string(primed[k]) : "missing");
    }
}

const std::map<std::string, void (*)(const Options&, Report&)>& handlers() {
    static const std::map<std::string, void (*)(const Options&, Report&)> table = {
        {"verify-theorem1", cmd_theorem1},
        {"verify-basic-function", cmd_basic_function},
        {"verify-meas", cmd_meas},
        {"verify-fourier", cmd_fourier},
        {"verify-support-claim", cmd_support_claim},
        {"verify-filtration", cmd_filtration},
        {"verify-pullback-phi", cmd_pullback_phi},
        {"verify-eis-character", cmd_eis_character},
        {"verify-betaT", cmd_betaT},
        {"verify-chary", cmd_chary},
        {"verify-k-invariance", cmd_k_invariance},
        {"lfunction-eval", cmd_lfunction_eval},
        {"basic-coeffs", cmd_basic_coeffs},
    };
    return table;
}

json run_command(const std::string& cmd, const Options& o) {
    Report r;
    QSpace s = parse_space_checked(o.space);
    auto t0 = std::chrono::steady_clock::now();
    try {
        handlers().at(cmd)(o, r);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        r.fail(cmd, "completes", std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    json rep;
    rep["schema"] = "gspin-gj/1";
    rep["command"] = cmd;
    rep["space"] = o.space;
    rep["p"] = static_cast<long>(s.p);
    rep["M"] = o.degree;
    rep["seed"] = o.seed;
    rep["satake"] = r.satake;
    rep["trials"] = o.trials;
    rep["failures"] = r.failures;
    rep["series_lhs"] = r.series_lhs;
    rep["series_rhs"] = r.series_rhs;
    rep["pass"] = r.pass;
    rep["wall_time_ms"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return rep;
}

json run_suite(const Options& o) {
    struct Entry {
        const char* cmd;
        std::vector<const char*> spaces;
        int trials;
    };
    const std::vector<Entry> plan = {
        {"verify-theorem1",
         {"n=0,E=F,p=3", "n=0,E=split,p=3", "n=0,E=unram:u=2,p=3", "n=1,E=F,p=3",
          "n=1,E=split,p=3", "n=1,E=unram:u=2,p=5", "n=2,E=F,p=3", "n=2,E=split,p=3"},
         1},
        {"verify-basic-function",
         {"n=0,E=split,p=3", "n=1,E=F,p=3", "n=1,E=split,p=3", "n=2,E=F,p=3"},
         1},
        {"verify-meas",
         {"n=0,E=F,p=3", "n=0,E=split,p=3", "n=0,E=unram:u=2,p=5", "n=1,E=F,p=3",
          "n=1,E=split,p=5", "n=1,E=unram:u=2,p=3"},
         100},
        {"verify-fourier",
         {"n=1,E=F,p=3", "n=1,E=split,p=3", "n=1,E=unram:u=2,p=5", "n=2,E=F,p=3"},
         25},
        {"verify-support-claim",
         {"n=1,E=F,p=3", "n=1,E=unram:u=2,p=3", "n=2,E=split,p=3"},
         100},
        {"verify-filtration", {"n=1,E=F,p=3", "n=2,E=F,p=3"}, 36},
        {"verify-pullback-phi",
         {"n=0,E=split,p=3", "n=1,E=F,p=3", "n=1,E=unram:u=2,p=3", "n=2,E=split,p=3"},
         50},
        {"verify-eis-character", {"n=1,E=F,p=3", "n=1,E=split,p=3"}, 50},
        {"verify-betaT", {"n=1,E=F,p=3", "n=1,E=split,p=3", "n=2,E=F,p=3"}, 34},
        {"verify-chary", {"n=1,E=F,p=3", "n=1,E=split,p=3", "n=2,E=F,p=3"}, 34},
        {"verify-k-invariance", {"n=1,E=F,p=3", "n=2,E=unram:u=2,p=3"}, 250},
        {"lfunction-eval", {"n=0,E=F,p=3"}, 1},
        {"basic-coeffs", {"n=2,E=F,p=3"}, 1},
    };
    json subs = json::array();
    bool pass = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const Entry& e : plan)
        for (const char* sp : e.spaces) {
            Options so = o;
            so.space = sp;
            so.trials = e.trials;
            json sub = run_command(e.cmd, so);
            pass = pass && sub["pass"].get<bool>();
            subs.push_back(std::move(sub));
        }
    auto t1 = std::chrono::steady_clock::now();
    json rep;
    rep["schema"] = "gspin-gj/1";
    rep["command"] = "suite";
    rep["space"] = "";
    rep["p"] = 0;
    rep["M"] = o.degree;
    rep["seed"] = o.seed;
    rep["satake"] = json::array();
    rep["trials"] = o.trials;
    rep["failures"] = json::array();
    rep["series_lhs"] = json::array();
    rep["series_rhs"] = json::array();
    rep["pass"] = pass;
    rep["subreports"] = std::move(subs);
    rep["wall_time_ms"] = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local integral checks for spin similitude groups"};
    std::string command;
    Options o;
    std::vector<std::string> names;
    for (const auto& kv : handlers()) names.push_back(kv.first);
    names.push_back("suite");
    app.add_option("command", command, "one of: " + CLI::detail::join(names, ", "))
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--space", o.space, "space descriptor, e.g. \"n=1,E=split,p=3\"");
    app.add_option("--degree", o.degree, "series truncation degree M")
        ->check(CLI::Range(0, 64));
    app.add_option("--seed", o.seed, "sampler seed");
    app.add_option("--trials", o.trials, "randomized trial count")
        ->check(CLI::Range(1, 1000000));
    app.add_option("--satake", o.satake, "torus data \"a1,..;E=b1[,b2]\" (default random)");
    app.add_option("--mode", o.mode, "series route for verify-theorem1")
        ->check(CLI::IsMember({"direct", "recursive", "both"}));
    app.add_option("--out", o.out, "also write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json rep;
    try {
        rep = command == "suite" ? run_suite(o) : run_command(command, o);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    std::string text = rep.dump(2);
    std::cout << text << "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::fprintf(stderr, "error: cannot write %s\n", o.out.c_str());
            return 2;
        }
        f << text << "\n";
    }
    return rep["pass"].get<bool>() ? 0 : 1;
}
