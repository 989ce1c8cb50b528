#include "cmaxwell/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmaxwell/errors.hpp"
#include "cmaxwell/suites.hpp"
#include "cmaxwell/verify.hpp"

namespace cmaxwell {

namespace {

using nlohmann::json;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw OutOfRange("'" + key + "' expects a number, got '" + v + "'");
    }
}

int to_int(const std::string& key, const std::string& v) {
    double x = to_double(key, v);
    if (x != std::floor(x) || std::abs(x) > 1e6) throw OutOfRange("'" + key + "' expects an integer, got '" + v + "'");
    return int(x);
}

// Layered settings: built-in defaults, then the config file, then flags.
class Settings {
public:
    void set_default(const std::string& k, std::string v) { values_[k] = std::move(v); }
    void apply(const std::map<std::string, std::string>& m) {
        for (auto& [k, v] : m) values_[k] = v;
    }
    bool has(const std::string& k) const { return values_.count(k) && !values_.at(k).empty(); }
    const std::string& str(const std::string& k) const {
        static const std::string empty;
        auto it = values_.find(k);
        return it == values_.end() ? empty : it->second;
    }
    double dbl(const std::string& k) const { return to_double(k, str(k)); }
    int integer(const std::string& k) const { return to_int(k, str(k)); }

private:
    std::map<std::string, std::string> values_;
};

struct FlagSet {
    std::map<std::string, std::string> store;
    std::map<std::string, CLI::Option*> opts;

    void add(CLI::App* app, const std::string& name, const std::string& help) {
        opts[name] = app->add_option("--" + name, store[name], help);
    }
    std::map<std::string, std::string> given() const {
        std::map<std::string, std::string> out;
        for (auto& [k, o] : opts)
            if (o->count() > 0) out[k] = store.at(k);
        return out;
    }
};

std::map<std::string, std::string> load_config(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot read config file '" + path + "'");
    return read_config(in);
}

// Writes to --out when set, otherwise to the given stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw OutOfRange("cannot write '" + path + "'");
    f << text;
}

int spectrum_cmd(const Settings& s, bool filter, std::ostream& out) {
    SpaceKind kind = parse_space(s.str("space"));
    if (kind == SpaceKind::Hyperbolic)
        throw InvalidQuantumNumbers("h3 has a continuous spectrum, use `profile` with --omega");
    if (kind == SpaceKind::Flat) throw InvalidQuantumNumbers("flat space has a continuous spectrum, use `profile`");
    if (kind == SpaceKind::Elliptic) filter = true;
    int mm = s.integer("m-max"), km = s.integer("k-max"), nm = s.integer("n-max");
    if (mm < 0 || km < 0 || nm < 0) throw OutOfRange("bounds must be nonnegative");
    auto rows = spectrum_s3(mm, km, nm);
    std::string fmt = s.str("format");
    std::ostringstream os;
    json arr = json::array();
    if (fmt == "csv") os << "omega,m,k,n,family,elliptic_ok\n";
    for (auto& e : rows) {
        bool ok = elliptic_filter(e.m, e.k).accept;
        if (filter && !ok) continue;
        if (fmt == "csv")
            os << num(e.omega) << ',' << e.m << ',' << e.k << ',' << e.n << ',' << to_string(e.family) << ','
               << (ok ? "true" : "false") << '\n';
        else
            arr.push_back({{"omega", e.omega}, {"m", e.m}, {"k", e.k}, {"n", e.n},
                           {"family", to_string(e.family)}, {"elliptic_ok", ok}});
    }
    if (fmt != "csv") os << json{{"space", to_string(kind)}, {"rows", arr}}.dump(2) << '\n';
    emit(s.str("out"), os.str(), out);
    return kExitOk;
}

ProfileRequest request_from_settings(const Settings& s) {
    ProfileRequest req;
    req.space = s.str("space");
    if (s.has("m")) req.m = s.integer("m");
    if (s.has("k")) req.k = s.dbl("k");
    if (s.has("n")) req.n = s.integer("n");
    if (s.has("omega")) req.omega = s.dbl("omega");
    if (s.has("branch")) req.branch = s.str("branch");
    if (s.has("b-sign")) req.b_sign = s.integer("b-sign");
    if (s.has("k-sign")) req.k_sign = s.integer("k-sign");
    if (s.has("sine")) req.sine = s.str("sine") == "true" || s.str("sine") == "1";
    return req;
}

int profile_cmd(const Settings& s, std::ostream& out, std::ostream& err) {
    ProfileRequest req = request_from_settings(s);
    ModeSolution sol;
    try {
        sol = build_profile_mode(req);
    } catch (const DegenerateElimination& e) {
        err << "error: " << e.what() << "\n"
            << "hint: the elimination is degenerate here; use --branch special (E = cos^|k| r) "
               "or --branch auto\n";
        return kExitUsage;
    }
    double lo = s.has("r-min") ? s.dbl("r-min") : sol.window.lo;
    double hi = s.has("r-max") ? s.dbl("r-max") : sol.window.hi;
    int n = s.integer("grid");
    if (n < 2) throw OutOfRange("--grid must be at least 2");
    if (!(lo < hi)) throw OutOfRange("--r-min must be below --r-max");
    auto range = GeometryContext{sol.spec.space}.r_range();
    if (lo <= range.lo || hi >= range.hi)
        throw OutOfRange("radial window [" + num(lo) + ", " + num(hi) + "] must lie strictly inside (" +
                         num(range.lo) + ", " + num(range.hi) + ")");
    double tol = s.dbl("tol");
    auto grid = uniform_grid(lo, hi, n);
    auto res = residual_scan(sol, grid);
    double worst = std::max(res.first_order, res.second_order);

    std::ostringstream os;
    const auto& sp = sol.spec;
    if (s.str("format") == "csv") {
        os << "# space=" << req.space << '\n'
           << "# m=" << sp.m << '\n'
           << "# k_re=" << num(sp.k.real()) << '\n'
           << "# k_im=" << num(sp.k.imag()) << '\n'
           << "# n=" << sp.n << '\n'
           << "# omega=" << num(sp.omega) << '\n'
           << "# branch=" << req.branch << '\n'
           << "# b_sign=" << req.b_sign << '\n'
           << "# k_sign=" << req.k_sign << '\n'
           << "# sine=" << (req.sine ? "true" : "false") << '\n'
           << "# family=" << sol.family << '\n'
           << "# convention=" << sol.convention << '\n'
           << "# regular=" << (sol.regular ? "true" : "false") << '\n'
           << "# non_normalizable=" << (sol.non_normalizable ? "true" : "false") << '\n'
           << "# M2=" << num(sol.M2.real()) << ',' << num(sol.M2.imag()) << '\n'
           << "# M3=" << num(sol.M3.real()) << ',' << num(sol.M3.imag()) << '\n'
           << "# residual_first_order=" << num(res.first_order) << '\n'
           << "# residual_second_order=" << num(res.second_order) << '\n'
           << "# residual=" << num(worst) << '\n'
           << "# residual_tol=" << num(tol) << '\n'
           << "r,f1_re,f1_im,f2_re,f2_im,f3_re,f3_im\n";
        for (double r : grid) {
            auto f = sol.values(r);
            os << num(r);
            for (auto& z : f) os << ',' << num(z.real()) << ',' << num(z.imag());
            os << '\n';
        }
    } else {
        json j{{"space", req.space},
               {"m", sp.m},
               {"k", cjson(sp.k)},
               {"n", sp.n},
               {"omega", sp.omega},
               {"branch", req.branch},
               {"family", sol.family},
               {"convention", sol.convention},
               {"regular", sol.regular},
               {"non_normalizable", sol.non_normalizable},
               {"m2", cjson(sol.M2)},
               {"m3", cjson(sol.M3)},
               {"residual_first_order", res.first_order},
               {"residual_second_order", res.second_order},
               {"residual", worst},
               {"residual_tol", tol}};
        json r = json::array(), f1 = json::array(), f2 = json::array(), f3 = json::array();
        for (double x : grid) {
            auto f = sol.values(x);
            r.push_back(x);
            f1.push_back(cjson(f[0]));
            f2.push_back(cjson(f[1]));
            f3.push_back(cjson(f[2]));
        }
        j["r"] = r, j["f1"] = f1, j["f2"] = f2, j["f3"] = f3;
        os << j.dump() << '\n';
    }
    emit(s.str("out"), os.str(), out);
    if (!(worst <= tol)) {
        err << "verification failed: residual " << num(worst) << " exceeds tolerance " << num(tol) << '\n';
        return kExitVerification;
    }
    return kExitOk;
}

int verify_cmd(const Settings& s, const std::string& suite, bool flip, std::ostream& out, std::ostream& err) {
    SuiteOptions opt;
    if (flip) opt.gamma313_sign = -1;
    auto reports = run_suites(suite, opt);
    bool all = true;
    json suites = json::array();
    for (auto& rep : reports) {
        json checks = json::array();
        for (auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"value", c.value}, {"tol", c.tol}, {"passed", c.passed}});
        suites.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}});
        all &= rep.passed();
        err << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
    }
    json j{{"suite", suite}, {"passed", all}, {"flip_gamma313", flip}, {"suites", suites}};
    emit(s.str("out"), j.dump(2) + "\n", out);
    return all ? kExitOk : kExitVerification;
}

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

std::map<std::string, std::string> read_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw OutOfRange("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        for (auto& c : key)
            if (c == '_') c = '-';
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

ModeSolution build_profile_mode(const ProfileRequest& req) {
    SpaceKind kind = parse_space(req.space);
    const std::string& br = req.branch;
    if (kind == SpaceKind::Flat) throw InvalidQuantumNumbers("no closed-form profile catalogue on flat space");
    if (kind == SpaceKind::Spherical || kind == SpaceKind::Elliptic) {
        if (!is_integer(req.k)) throw InvalidQuantumNumbers("k must be an integer on s3/elliptic");
        int m = req.m, k = int(std::lround(req.k));
        if (kind == SpaceKind::Elliptic) {
            auto f = elliptic_filter(m, k);
            if (!f.accept) throw InvalidQuantumNumbers("rejected by the elliptic parity rule: " + f.reason);
        }
        bool needs_n = br == "auto" || br == "general" || br == "hypergeometric";
        if (needs_n && req.n < 0) throw InvalidQuantumNumbers("--n is required on s3/elliptic");
        ModeSolution sol;
        if (br == "auto") {
            sol = construct_s3(m, k, req.n);
        } else if (br == "general") {
            sol = construct_s3_general(m, k, req.n);
        } else if (br == "special" || br == "sin2cos" || br == "hypergeometric") {
            S3Family fam = br == "special" ? S3Family::Special
                           : br == "sin2cos" ? S3Family::Sin2Cos
                                             : S3Family::Hypergeometric;
            int index = fam == S3Family::Hypergeometric ? req.n - 1 : 0;
            if (fam == S3Family::Hypergeometric && index < 0)
                throw InvalidQuantumNumbers("the hypergeometric m=0/k=0 family starts at n=1");
            if (m == 0 && k != 0) sol = construct_s3_m0(k, fam, index);
            else if (k == 0 && m != 0) sol = construct_s3_k0(m, fam, index);
            else if (m == 0 && k == 0) throw ZeroFrequency("omega=0 excluded");
            else throw InvalidBranch("branch '" + br + "' needs m=0 or k=0");
        } else {
            throw InvalidBranch("unknown s3 branch '" + br + "'");
        }
        if (req.omega != 0 && std::abs(req.omega - sol.spec.omega) > 1e-12)
            throw InvalidQuantumNumbers("omega is fixed to " + num(sol.spec.omega) + " by (m,k,n) on s3");
        if (kind == SpaceKind::Elliptic) sol.spec.space = SpaceKind::Elliptic;
        return sol;
    }
    // H3
    if (req.omega == 0) throw ZeroFrequency("omega=0 excluded; --omega is required on h3");
    if (!(req.omega > 0)) throw InvalidQuantumNumbers("omega must be positive");
    if (std::abs(req.b_sign) != 1 || std::abs(req.k_sign) != 1) throw InvalidBranch("--b-sign/--k-sign must be +-1");
    const double w = req.omega, k = req.k;
    const int m = req.m;
    std::string b = br;
    if (b == "auto") {
        if (m == 0 && std::abs(std::abs(k) - w) < 1e-12) b = "oscillating";
        else if (m == 0) b = "hypergeometric";
        else b = "general";
    }
    if (b == "oscillating") {
        if (m != 0) throw InvalidBranch("oscillating branch needs m=0");
        int ks = req.k_sign;
        if (k != 0) {
            if (std::abs(std::abs(k) - w) > 1e-12) throw InvalidQuantumNumbers("oscillating branch needs |k| = omega");
            ks = k > 0 ? 1 : -1;
        }
        return construct_h3_m0({H3M0Branch::Oscillating, w, 0, ks, req.b_sign, req.sine});
    }
    if (b == "exact") {
        if (m != 0) throw InvalidBranch("exact branch needs m=0");
        return construct_h3_m0({H3M0Branch::ExactSinh2Cosh, w, 0, req.k_sign, req.b_sign, false});
    }
    if (b == "hypergeometric") {
        if (m != 0) throw InvalidBranch("hypergeometric branch needs m=0 on h3");
        return construct_h3_m0({H3M0Branch::Hypergeometric, w, k, req.k_sign, req.b_sign, false});
    }
    if (b == "general") {
        if (k == 0 && m != 0) return construct_h3_k0(m, w, req.b_sign > 0 ? 0 : 1);
        if (m == 0) throw InvalidBranch("general branch needs m != 0; use --branch hypergeometric");
        return construct_h3_general(m, k, w, req.b_sign);
    }
    throw InvalidBranch("unknown h3 branch '" + br + "'");
}

ProfileTable read_profile_csv(std::istream& in) {
    ProfileTable t;
    std::string line;
    bool columns = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto body = trim(line.substr(1));
            auto eq = body.find('=');
            if (eq == std::string::npos) throw OutOfRange("malformed header line: " + line);
            t.header[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        if (!columns) {
            if (line.rfind("r,", 0) != 0) throw OutOfRange("missing column header");
            columns = true;
            continue;
        }
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(to_double("csv cell", trim(cell)));
        if (v.size() != 7) throw OutOfRange("expected 7 columns, got " + std::to_string(v.size()));
        t.r.push_back(v[0]);
        t.f.push_back({cplx(v[1], v[2]), cplx(v[3], v[4]), cplx(v[5], v[6])});
    }
    if (!columns) throw OutOfRange("no data in profile");
    return t;
}

ProfileRequest request_from_header(const std::map<std::string, std::string>& h) {
    auto get = [&](const std::string& k) -> const std::string& {
        auto it = h.find(k);
        if (it == h.end()) throw OutOfRange("header lacks '" + k + "'");
        return it->second;
    };
    ProfileRequest req;
    req.space = get("space");
    req.m = to_int("m", get("m"));
    req.k = to_double("k_re", get("k_re"));
    req.n = to_int("n", get("n"));
    req.omega = to_double("omega", get("omega"));
    req.branch = get("branch");
    req.b_sign = to_int("b_sign", get("b_sign"));
    req.k_sign = to_int("k_sign", get("k_sign"));
    req.sine = get("sine") == "true";
    // The exact h3 branch stores a complex k that the request does not take.
    if (req.branch == "exact" || to_double("k_im", get("k_im")) != 0) req.k = 0;
    return req;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact electromagnetic modes on constant-curvature spaces"};
    app.require_subcommand(1);
    std::string config;
    app.add_option("--config", config, "key=value file; flags override it");

    FlagSet sflags, pflags, vflags;
    bool filter = false, flip = false;
    std::string suite = "all";

    auto* spectrum = app.add_subcommand("spectrum", "Tabulate the discrete s3 spectrum");
    sflags.add(spectrum, "space", "s3 (default) or elliptic");
    sflags.add(spectrum, "m-max", "largest m (default 2)");
    sflags.add(spectrum, "k-max", "largest k (default 2)");
    sflags.add(spectrum, "n-max", "largest n (default 2)");
    sflags.add(spectrum, "format", "csv (default) or json");
    sflags.add(spectrum, "out", "output file instead of stdout");
    spectrum->add_flag("--elliptic-filter", filter, "Keep only rows admissible on the elliptic space");

    auto* profile = app.add_subcommand("profile", "Write the radial profile of one mode");
    pflags.add(profile, "space", "s3 (default), elliptic or h3");
    pflags.add(profile, "m", "azimuthal number (integer)");
    pflags.add(profile, "k", "z number; integer on s3, real on h3");
    pflags.add(profile, "n", "radial index (s3)");
    pflags.add(profile, "omega", "frequency; required on h3, checked against 2n+|m|+|k| on s3");
    pflags.add(profile, "branch",
               "auto|general|special|sin2cos|hypergeometric (s3); auto|general|oscillating|exact|hypergeometric (h3)");
    pflags.add(profile, "b-sign", "+1 or -1, member of the fundamental pair (h3)");
    pflags.add(profile, "k-sign", "+1 or -1, sign of k in the oscillating h3 m=0 branch");
    pflags.add(profile, "sine", "true for the sine member of the oscillating h3 branch");
    pflags.add(profile, "grid", "number of sample points (default 512)");
    pflags.add(profile, "r-min", "first sample point (default: window start)");
    pflags.add(profile, "r-max", "last sample point (default: window end)");
    pflags.add(profile, "format", "csv (default) or json");
    pflags.add(profile, "out", "output file instead of stdout");
    pflags.add(profile, "tol", "residual bound, exit 1 above it (default 1e-9)");

    auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
    verify->add_option("suite", suite, "algebra|geometry|radial|modes|spectrum|all")
        ->check(CLI::IsMember({"algebra", "geometry", "radial", "modes", "spectrum", "all"}));
    vflags.add(verify, "out", "write the JSON report to a file");
    verify->add_flag("--flip-gamma313", flip)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Settings s;
        s.set_default("space", "s3");
        s.set_default("format", "csv");
        s.set_default("grid", "512");
        s.set_default("tol", "1e-9");
        s.set_default("m-max", "2");
        s.set_default("k-max", "2");
        s.set_default("n-max", "2");
        s.apply(load_config(config));
        if (*spectrum) {
            s.apply(sflags.given());
            if (s.str("format") != "csv" && s.str("format") != "json") throw OutOfRange("--format must be csv or json");
            return spectrum_cmd(s, filter, out);
        }
        if (*profile) {
            s.apply(pflags.given());
            if (s.str("format") != "csv" && s.str("format") != "json") throw OutOfRange("--format must be csv or json");
            return profile_cmd(s, out, err);
        }
        s.apply(vflags.given());
        return verify_cmd(s, suite, flip, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cmaxwell
