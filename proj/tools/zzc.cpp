// Command-line front end for the zzc library.
//
// Exit codes: 0 success, 1 a table or verification check failed,
// 2 infeasible parameters or empty seed set, 3 precision failure,
// 64 unparsable input.

#include <zzc/zzc.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using zzc::json;
using zzc::real;

enum exit_code : int { ok = 0, check_failed = 1, infeasible = 2, precision = 3, bad_input = 64 };

enum class format { human, json, csv, markdown };

const std::map<std::string, format> format_names{
    {"human", format::human}, {"json", format::json}, {"csv", format::csv}, {"markdown", format::markdown}};

struct common_flags {
    format fmt = format::human;
    std::optional<unsigned> digits;
    std::string out_path;

    zzc::precision_config precision() const
    {
        zzc::precision_config p;
        p.working_digits = digits.value_or(zzc::digits_from_env());
        return p;
    }
};

void add_common(CLI::App* cmd, common_flags& f)
{
    cmd->add_option("--format", f.fmt, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    cmd->add_option("--digits", f.digits, "Working precision in decimal digits (default: ZZC_DIGITS or 50)")
        ->check(CLI::Range(20u, 10000u));
    cmd->add_option("--out", f.out_path, "Also write the output to this file");
}

void emit(const common_flags& f, const std::string& text)
{
    std::cout << text;
    if (!f.out_path.empty()) {
        std::ofstream file(f.out_path);
        if (!file)
            throw std::runtime_error("cannot open " + f.out_path);
        file << text;
    }
}

std::string fixed(const real& x, int decimals = 8) { return zzc::to_fixed(x, decimals); }

std::string sci(const real& x, int digits = 10) { return x.str(digits, std::ios_base::scientific); }

std::string csv_line(const std::vector<std::string>& cells)
{
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            s += ',';
        s += cells[i];
    }
    return s + "\n";
}

std::string md_row(const std::vector<std::string>& cells)
{
    std::string s = "|";
    for (const auto& c : cells)
        s += " " + c + " |";
    return s + "\n";
}

std::string md_rule(std::size_t n)
{
    std::string s = "|";
    for (std::size_t i = 0; i < n; ++i)
        s += "---|";
    return s + "\n";
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- compute

struct compute_flags {
    std::string c, r, eta, t0 = "1";
    int j1 = zzc::published::default_j1;
    int j2 = zzc::published::default_j2;
    common_flags common;
};

std::vector<std::pair<std::string, real>> breakdown_rows(const zzc::bound_breakdown& b)
{
    return {{"C2.gk_term", b.gk_term},
            {"C2.log_zeta_sigma1_term", b.log_zeta_sigma1_term},
            {"C2.ek_term", b.ek_term},
            {"C2.zeta_int_first", b.zeta_int_first},
            {"C2.zeta_int_second", b.zeta_int_second},
            {"C2.eta_strip_term", b.eta_strip_term},
            {"C2.kappa45_term", b.kappa45_term},
            {"C2.zeta_ratio_term", b.zeta_ratio_term},
            {"C3.base_5_2", b.base_5_2},
            {"C3.t0_log_term", b.t0_log_term},
            {"C3.log3_term", b.log3_term},
            {"C3.lstar_term", b.lstar_term}};
}

int run_compute(const compute_flags& f)
{
    const auto prec = f.common.precision();
    const zzc::working_precision scope(prec);
    const zzc::search_point p{zzc::parse_real(f.c), zzc::parse_real(f.r), zzc::parse_real(f.eta), f.j1, f.j2,
                              zzc::parse_real(f.t0)};
    const auto bad = zzc::validate(p);
    if (!bad.empty()) {
        std::cerr << "infeasible parameters:\n";
        for (const auto& v : bad)
            std::cerr << "  " << v.id << ": " << v.message << "\n";
        return infeasible;
    }
    const zzc::constants_result res = zzc::compute_constants(p, prec);
    const zzc::constant_triple& t = res.triple;
    std::optional<zzc::d_triple> d;
    if (p.t0 >= 1)
        d = zzc::derive_d(t, p.t0);
    for (const auto& w : res.warnings)
        std::cerr << "warning: " << w << "\n";

    std::ostringstream os;
    switch (f.common.fmt) {
    case format::json: {
        json results{{"constants", t}, {"breakdown", res.breakdown}, {"kappas", res.kappas}};
        if (d)
            results["derived"] = *d;
        json diag{{"working_digits", prec.working_digits},
                  {"lambda", zzc::to_decimal(res.lambda)},
                  {"kappa45_before_clamp", zzc::to_decimal(res.kappa45_raw)},
                  {"lstar_before_clamp", zzc::to_decimal(res.lstar_raw)},
                  {"warnings", res.warnings}};
        os << render_json(zzc::envelope("compute", json(p), std::move(results), std::move(diag)));
        break;
    }
    case format::csv:
        os << csv_line({"quantity", "value"});
        os << csv_line({"C1", zzc::to_decimal(t.c1)}) << csv_line({"C2", zzc::to_decimal(t.c2)})
           << csv_line({"C3", zzc::to_decimal(t.c3)});
        if (d)
            os << csv_line({"D1", d->d1.str()}) << csv_line({"D2", d->d2.str()}) << csv_line({"D3", d->d3.str()});
        for (const auto& [name, v] : breakdown_rows(res.breakdown))
            os << csv_line({name, zzc::to_decimal(v)});
        break;
    case format::markdown:
        os << md_row({"c", "r", "eta", "C1", "C2", "C3"}) << md_rule(6)
           << md_row({f.c, f.r, f.eta, fixed(t.c1, 5), fixed(t.c2, 5), fixed(t.c3, 5)});
        if (d)
            os << "\n" << md_row({"T0", "D1", "D2", "D3"}) << md_rule(4)
               << md_row({f.t0, d->d1.str(), d->d2.str(), d->d3.str()});
        break;
    case format::human:
        os << "c = " << f.c << ", r = " << f.r << ", eta = " << f.eta << ", J1 = " << f.j1 << ", J2 = " << f.j2
           << ", T0 = " << f.t0 << "\n"
           << "sigma1 = " << fixed(p.sigma1(), 10) << ", delta = " << fixed(p.delta(), 10) << "\n\n"
           << "C1 = " << fixed(t.c1) << "\nC2 = " << fixed(t.c2) << "\nC3 = " << fixed(t.c3) << "\n";
        if (d)
            os << "\nD1 = " << d->d1.str() << "  D2 = " << d->d2.str() << "  D3 = " << d->d3.str() << "\n";
        os << "\nbreakdown:\n";
        for (const auto& [name, v] : breakdown_rows(res.breakdown))
            os << "  " << name << std::string(26 - name.size(), ' ') << fixed(v, 10) << "\n";
        break;
    }
    emit(f.common, os.str());
    return ok;
}

// ------------------------------------------------------------------ table

struct table_flags {
    std::string preset = "published";
    std::string t0 = "both";
    std::optional<std::string> tol;
    common_flags common;
};

int run_table(const table_flags& f)
{
    const auto prec = f.common.precision();
    const zzc::working_precision scope(prec);
    zzc::table_tolerance tol;
    if (f.tol) {
        tol.abs_tol = zzc::parse_real(*f.tol);
        if (tol.excess_tol > tol.abs_tol)
            tol.excess_tol = tol.abs_tol;
    }
    std::vector<int> heights;
    if (f.t0 == "1" || f.t0 == "both")
        heights.push_back(1);
    if (f.t0 == "10" || f.t0 == "both")
        heights.push_back(10);

    std::vector<zzc::c_row_report> c_rows;
    for (int t0 : heights)
        for (const auto& row : zzc::published::rows)
            c_rows.push_back(zzc::check_c_row(row, t0, tol, prec));
    std::vector<zzc::d_row_report> d_rows;
    for (const auto& row : zzc::published::d_rows)
        if (std::find(heights.begin(), heights.end(), row.t0) != heights.end())
            d_rows.push_back(zzc::check_d_row(row, prec));

    int c_ok = 0, d_ok = 0;
    for (const auto& r : c_rows)
        c_ok += r.passed();
    for (const auto& r : d_rows)
        d_ok += r.passed();
    const bool all_ok = c_ok == static_cast<int>(c_rows.size()) && d_ok == static_cast<int>(d_rows.size());

    const auto mark = [](bool b) { return std::string(b ? "OK" : "FAIL"); };
    std::ostringstream os;
    switch (f.common.fmt) {
    case format::json: {
        json cj = json::array();
        for (const auto& r : c_rows) {
            json cells = json::array();
            for (const auto& c : r.cells)
                cells.push_back({{"name", c.name},
                                 {"computed", zzc::to_decimal(c.computed)},
                                 {"published", zzc::to_decimal(c.published)},
                                 {"ok", c.passed}});
            cj.push_back({{"preset", r.preset}, {"t0", r.t0}, {"constants", r.computed}, {"cells", cells},
                          {"ok", r.passed()}});
        }
        json dj = json::array();
        for (const auto& r : d_rows)
            dj.push_back({{"label", r.label}, {"preset", r.preset}, {"t0", r.t0}, {"computed", r.computed},
                          {"published", r.published}, {"ok", r.passed()}});
        json inputs{{"preset", f.preset},
                    {"t0", f.t0},
                    {"abs_tol", zzc::to_decimal(tol.abs_tol)},
                    {"excess_tol", zzc::to_decimal(tol.excess_tol)}};
        json diag{{"data_version", std::string(zzc::published::schema_version)},
                  {"c_rows_ok", c_ok},
                  {"c_rows", c_rows.size()},
                  {"d_rows_ok", d_ok},
                  {"d_rows", d_rows.size()}};
        os << render_json(
            zzc::envelope("table", std::move(inputs), {{"c_rows", cj}, {"d_rows", dj}}, std::move(diag)));
        break;
    }
    case format::csv:
        os << csv_line({"kind", "preset", "t0", "q1", "q2", "q3", "ok"});
        for (const auto& r : c_rows)
            os << csv_line({"C", std::to_string(r.preset), std::to_string(r.t0), fixed(r.computed.c1),
                            fixed(r.computed.c2), fixed(r.computed.c3), mark(r.passed())});
        for (const auto& r : d_rows)
            os << csv_line({"D", std::to_string(r.preset), std::to_string(r.t0), r.computed.d1.str(),
                            r.computed.d2.str(), r.computed.d3.str(), mark(r.passed())});
        break;
    case format::markdown:
    case format::human: {
        const bool md = f.common.fmt == format::markdown;
        auto row_out = [&](const std::vector<std::string>& cells) {
            if (md) {
                os << md_row(cells);
            } else {
                for (const auto& c : cells)
                    os << c << std::string(c.size() < 15 ? 15 - c.size() : 1, ' ');
                os << "\n";
            }
        };
        for (int t0 : heights) {
            os << (md ? "### " : "") << "Constants (C1, C2, C3), valid for T >= " << t0 << "\n\n";
            row_out({"c", "r", "eta", "C1", "C2", "C3", "status"});
            if (md)
                os << md_rule(7);
            for (const auto& r : c_rows) {
                if (r.t0 != t0)
                    continue;
                const auto& pr = zzc::published::row(r.preset);
                row_out({std::string(pr.c), std::string(pr.r), std::string(pr.eta), fixed(r.computed.c1, 5),
                         fixed(r.computed.c2, 5), fixed(r.computed.c3, 5), mark(r.passed())});
                for (const auto& c : r.cells)
                    if (!c.passed)
                        os << (md ? "\n" : "") << "  " << c.name << ": computed " << fixed(c.computed, 8)
                           << ", published " << fixed(c.published, 5) << "\n"
                           << (md ? "\n" : "");
            }
            os << "\n";
        }
        os << (md ? "### " : "") << "Constants (D1, D2, D3)\n\n";
        row_out({"row", "T0", "D1", "D2", "D3", "status"});
        if (md)
            os << md_rule(6);
        for (const auto& r : d_rows) {
            row_out({r.label, std::to_string(r.t0), r.computed.d1.str(), r.computed.d2.str(), r.computed.d3.str(),
                     mark(r.passed())});
            if (!r.passed())
                os << "  published: " << r.published.d1.str() << " " << r.published.d2.str() << " "
                   << r.published.d3.str() << "\n";
        }
        os << "\n"
           << c_ok << "/" << c_rows.size() << " C-triples OK, " << d_ok << "/" << d_rows.size() << " D-rows OK\n";
        break;
    }
    }
    emit(f.common, os.str());
    return all_ok ? ok : check_failed;
}

// ------------------------------------------------------------------ bound

struct bound_flags {
    int nk = 1;
    std::optional<std::string> log_dk;
    std::optional<std::string> dk;
    int r1 = 1;
    std::string height = "1";
    int row = 1;
    std::optional<std::string> c1, c2, c3;
    int t0 = 1;
    bool published = false;
    common_flags common;
};

/// Accepts a decimal or log(<decimal>).
real parse_log_dk(const std::string& text)
{
    const std::string prefix = "log(";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() + 1 && text.back() == ')') {
        const real x = zzc::parse_real(text.substr(prefix.size(), text.size() - prefix.size() - 1));
        if (!(x > 0))
            throw zzc::parse_error("log argument must be positive");
        return log(x);
    }
    return zzc::parse_real(text);
}

int run_bound(const bound_flags& f)
{
    const auto prec = f.common.precision();
    const zzc::working_precision scope(prec);

    real log_dk = 0;
    if (f.log_dk)
        log_dk = parse_log_dk(*f.log_dk);
    else if (f.dk) {
        const real dk = zzc::parse_real(*f.dk);
        if (!(dk >= 1))
            throw zzc::constraint_error("|d_K| must be at least 1");
        log_dk = log(dk);
    }
    const real height = zzc::parse_real(f.height);
    const bool explicit_constants = f.c1 || f.c2 || f.c3;
    if (explicit_constants && !(f.c1 && f.c2 && f.c3))
        throw zzc::parse_error("--c1, --c2 and --c3 must be given together");
    zzc::constant_triple t;
    std::string source;
    if (explicit_constants) {
        t = {zzc::parse_real(*f.c1), zzc::parse_real(*f.c2), zzc::parse_real(*f.c3)};
        source = "explicit";
    } else {
        const auto& pr = zzc::published::row(f.row);
        if (f.published) {
            t = {zzc::parse_real(pr.c1), zzc::parse_real(f.t0 == 1 ? pr.c2_t1 : pr.c2_t10),
                 zzc::parse_real(f.t0 == 1 ? pr.c3_t1 : pr.c3_t10)};
            source = "published row " + std::to_string(f.row);
        } else {
            t = zzc::compute_constants(zzc::preset_point(pr, f.t0), prec).triple;
            source = "computed row " + std::to_string(f.row);
        }
    }
    const zzc::field_params field = zzc::field_params::make(f.nk, log_dk, f.r1);
    if (height < f.t0)
        throw zzc::constraint_error("T must be at least T0 = " + std::to_string(f.t0));
    const zzc::nk_window_result w = zzc::nk_window(field, height, t);
    const auto [lo, hi] = zzc::integer_window(w);

    std::ostringstream os;
    switch (f.common.fmt) {
    case format::json: {
        json inputs{{"nk", f.nk},     {"log_dk", zzc::to_decimal(log_dk)}, {"r1", f.r1},
                    {"T", f.height},  {"t0", f.t0},                        {"constants_source", source},
                    {"constants", t}};
        json results{{"main", zzc::to_decimal(w.main)},
                     {"bound", zzc::to_decimal(w.bound)},
                     {"low", zzc::to_decimal(w.low)},
                     {"high", zzc::to_decimal(w.high)},
                     {"integer_low", lo},
                     {"integer_high", hi}};
        os << render_json(zzc::envelope("bound", std::move(inputs), std::move(results),
                                        {{"empty_integer_window", lo > hi}}));
        break;
    }
    case format::csv:
        os << csv_line({"main", "bound", "low", "high", "integer_low", "integer_high"})
           << csv_line({fixed(w.main), fixed(w.bound), fixed(w.low), fixed(w.high), std::to_string(lo),
                        std::to_string(hi)});
        break;
    case format::markdown:
        os << md_row({"n_K", "log d_K", "r1", "T", "main", "bound", "window"}) << md_rule(7)
           << md_row({std::to_string(f.nk), fixed(log_dk, 6), std::to_string(f.r1), f.height, fixed(w.main, 4),
                      fixed(w.bound, 4), "[" + fixed(w.low, 4) + ", " + fixed(w.high, 4) + "]"});
        break;
    case format::human:
        os << "constants (" << source << "): C1 = " << fixed(t.c1) << ", C2 = " << fixed(t.c2)
           << ", C3 = " << fixed(t.c3) << "\n"
           << "n_K = " << f.nk << ", log d_K = " << fixed(log_dk, 10) << ", r1 = " << f.r1 << ", T = " << f.height
           << "\n\n"
           << "main term    " << fixed(w.main) << "\n"
           << "error bound  " << fixed(w.bound) << "\n"
           << "N_K(T) in    [" << fixed(w.low) << ", " << fixed(w.high) << "]\n"
           << "integers     [" << lo << ", " << hi << "]\n";
        break;
    }
    emit(f.common, os.str());
    return ok;
}

// --------------------------------------------------------------- optimize

struct optimize_flags {
    std::string objective = "min-c1";
    std::optional<std::string> c1_cap;
    std::optional<std::string> weights;
    std::string t0 = "1";
    long budget = 100;
    std::optional<std::string> seed_grid;
    int j1 = zzc::published::default_j1;
    int j2 = zzc::published::default_j2;
    common_flags common;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    return out;
}

/// "c=lo:hi:n,r=lo:hi:n,eta=lo:hi:n"
std::pair<zzc::search_bounds, zzc::search_steps> parse_seed_grid(const std::string& spec)
{
    zzc::search_bounds b;
    zzc::search_steps s;
    bool seen[3] = {false, false, false};
    for (const auto& part : split(spec, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw zzc::parse_error("seed grid entry without '=': " + part);
        const std::string key = part.substr(0, eq);
        const auto fields = split(part.substr(eq + 1), ':');
        if (fields.size() != 3)
            throw zzc::parse_error("seed grid entry must be name=lo:hi:n: " + part);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(fields[2], &used);
            if (used != fields[2].size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw zzc::parse_error("seed grid count is not an integer: " + fields[2]);
        }
        const zzc::interval iv{zzc::parse_real(fields[0]), zzc::parse_real(fields[1])};
        int idx = -1;
        if (key == "c") {
            b.c = iv;
            s.c = n;
            idx = 0;
        } else if (key == "r") {
            b.r = iv;
            s.r = n;
            idx = 1;
        } else if (key == "eta") {
            b.eta = iv;
            s.eta = n;
            idx = 2;
        } else {
            throw zzc::parse_error("unknown seed grid coordinate: " + key);
        }
        seen[idx] = true;
    }
    if (!(seen[0] && seen[1] && seen[2]))
        throw zzc::parse_error("seed grid needs c, r and eta");
    return {b, s};
}

int run_optimize(const optimize_flags& f)
{
    const auto prec = f.common.precision();
    const zzc::working_precision scope(prec);

    zzc::objective obj;
    if (f.objective == "min-c1") {
        obj = zzc::objective::min_c1();
    } else if (f.objective == "min-c2") {
        if (!f.c1_cap)
            throw zzc::parse_error("--objective min-c2 needs --c1-cap");
        obj = zzc::objective::min_c2(zzc::parse_real(*f.c1_cap));
    } else {
        if (!f.weights)
            throw zzc::parse_error("--objective weighted needs --weights w1,w2,w3");
        const auto w = split(*f.weights, ',');
        if (w.size() != 3)
            throw zzc::parse_error("--weights takes three comma-separated numbers");
        obj = zzc::objective::weighted(zzc::parse_real(w[0]), zzc::parse_real(w[1]), zzc::parse_real(w[2]));
    }
    obj.check();

    zzc::search_point base;
    base.j1 = f.j1;
    base.j2 = f.j2;
    base.t0 = zzc::parse_real(f.t0);

    std::vector<zzc::search_point> seeds;
    if (f.seed_grid) {
        const auto [b, s] = parse_seed_grid(*f.seed_grid);
        seeds = zzc::grid_seed(b, s, base);
    } else {
        for (const auto& row : zzc::published::rows) {
            zzc::search_point p = zzc::preset_point(row);
            p.j1 = base.j1;
            p.j2 = base.j2;
            p.t0 = base.t0;
            if (zzc::validate(p).empty())
                seeds.push_back(p);
        }
        if (seeds.empty())
            throw zzc::search_error("no preset is feasible with these J1, J2, T0");
    }

    const zzc::scored_point seed = zzc::best_seed(seeds, obj, prec);
    const zzc::search_report rep = zzc::refine(seed.point, obj, f.budget, prec);
    const zzc::constant_triple& t = rep.best_constants;

    std::ostringstream os;
    switch (f.common.fmt) {
    case format::json: {
        json inputs{{"objective", zzc::to_string(obj.mode)},
                    {"t0", f.t0},
                    {"budget", f.budget},
                    {"j1", f.j1},
                    {"j2", f.j2},
                    {"seed_count", seeds.size()}};
        if (obj.c1_cap)
            inputs["c1_cap"] = zzc::to_decimal(*obj.c1_cap);
        if (obj.weights)
            inputs["weights"] = {zzc::to_decimal((*obj.weights)[0]), zzc::to_decimal((*obj.weights)[1]),
                                 zzc::to_decimal((*obj.weights)[2])};
        json diag{{"seed", seed.point}, {"seed_constants", seed.constants}, {"working_digits", prec.working_digits}};
        os << render_json(zzc::envelope("optimize", std::move(inputs), json(rep), std::move(diag)));
        break;
    }
    case format::csv:
        os << csv_line({"step", "c", "r", "eta", "C1", "C2", "C3"});
        for (std::size_t i = 0; i < rep.trace.size(); ++i) {
            const auto& e = rep.trace[i];
            os << csv_line({std::to_string(i), zzc::to_decimal(e.point.c), zzc::to_decimal(e.point.r),
                            zzc::to_decimal(e.point.eta), fixed(e.constants.c1), fixed(e.constants.c2),
                            fixed(e.constants.c3)});
        }
        break;
    case format::markdown:
        os << md_row({"c", "r", "eta", "C1", "C2", "C3"}) << md_rule(6)
           << md_row({fixed(rep.best.c, 9), fixed(rep.best.r, 9), zzc::to_fixed(rep.best.eta, 11), fixed(t.c1, 5),
                      fixed(t.c2, 5), fixed(t.c3, 5)});
        break;
    case format::human:
        os << "objective " << zzc::to_string(obj.mode) << ", " << seeds.size() << " seed(s), budget " << f.budget
           << "\n"
           << "seed:  c = " << fixed(seed.point.c, 12) << ", r = " << fixed(seed.point.r, 12)
           << ", eta = " << sci(seed.point.eta) << "\n"
           << "best:  c = " << fixed(rep.best.c, 12) << ", r = " << fixed(rep.best.r, 12)
           << ", eta = " << sci(rep.best.eta) << "\n"
           << "C1 = " << fixed(t.c1) << "  C2 = " << fixed(t.c2) << "  C3 = " << fixed(t.c3) << "\n"
           << rep.evaluations << " evaluations, " << rep.trace.size() - 1 << " improvement(s)\n";
        break;
    }
    emit(f.common, os.str());
    return ok;
}

// ----------------------------------------------------------------- verify

struct verify_flags {
    std::string level = "fast";
    std::optional<std::string> lstar_weight;
    common_flags common;
};

int run_verify(const verify_flags& f)
{
    zzc::verify_options opts;
    opts.prec = f.common.precision();
    const zzc::working_precision scope(opts.prec);
    opts.level = f.level == "full" ? zzc::verify_level::full : zzc::verify_level::fast;
    if (f.lstar_weight) {
        const auto parts = split(*f.lstar_weight, '/');
        if (parts.size() == 2)
            opts.closed_form_weight = zzc::parse_real(parts[0]) / zzc::parse_real(parts[1]);
        else
            opts.closed_form_weight = zzc::parse_real(*f.lstar_weight);
    }
    const auto checks = zzc::run_verification(opts);
    int passed = 0;
    for (const auto& c : checks)
        passed += c.passed;

    std::ostringstream os;
    switch (f.common.fmt) {
    case format::json: {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"group", c.group},
                           {"name", c.name},
                           {"passed", c.passed},
                           {"observed", c.observed},
                           {"reference", c.reference},
                           {"tolerance", c.tolerance}});
        os << render_json(zzc::envelope("verify", {{"level", f.level}}, arr,
                                        {{"passed", passed}, {"total", checks.size()}}));
        break;
    }
    case format::csv:
        os << csv_line({"group", "name", "passed", "observed", "reference", "tolerance"});
        for (const auto& c : checks)
            os << csv_line({c.group, "\"" + c.name + "\"", c.passed ? "true" : "false", c.observed, c.reference,
                            c.tolerance});
        break;
    case format::markdown:
        os << md_row({"group", "check", "status"}) << md_rule(3);
        for (const auto& c : checks)
            os << md_row({c.group, c.name, c.passed ? "PASS" : "FAIL"});
        break;
    case format::human:
        for (const auto& c : checks) {
            os << (c.passed ? "PASS  " : "FAIL  ") << c.group << ": " << c.name << "\n";
            if (!c.passed && !c.reference.empty())
                os << "      got " << c.observed << "\n      ref " << c.reference << "\n";
            else if (!c.passed && !c.observed.empty())
                os << "      at " << c.observed << "\n";
        }
        os << passed << "/" << checks.size() << " checks passed\n";
        break;
    }
    emit(f.common, os.str());
    return passed == static_cast<int>(checks.size()) ? ok : check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Explicit constants for counting zeros of Dedekind zeta functions"};
    app.require_subcommand(1);

    compute_flags cf;
    auto* compute = app.add_subcommand("compute", "Constants (C1, C2, C3) for one parameter point");
    compute->add_option("--c", cf.c, "Circle centre")->required();
    compute->add_option("--r", cf.r, "Circle radius")->required();
    compute->add_option("--eta", cf.eta, "Strip offset eta")->required();
    compute->add_option("--j1", cf.j1, "Terms in the first zeta-integral bound")->capture_default_str();
    compute->add_option("--j2", cf.j2, "Terms in the second zeta-integral bound")->capture_default_str();
    compute->add_option("--t0", cf.t0, "Lower height T0")->capture_default_str();
    add_common(compute, cf.common);

    table_flags tf;
    auto* table = app.add_subcommand("table", "Recompute the stored constant tables and compare");
    table->add_option("--preset", tf.preset, "Preset set")->check(CLI::IsMember({"published", "paper"}))->capture_default_str();
    table->add_option("--t0", tf.t0, "Which column")->check(CLI::IsMember({"1", "10", "both"}))->capture_default_str();
    table->add_option("--tol", tf.tol, "Absolute tolerance override for C cells");
    add_common(table, tf.common);

    bound_flags bf;
    auto* bound = app.add_subcommand("bound", "Window for N_K(T) for a given field");
    bound->add_option("--nk", bf.nk, "Field degree")->required();
    auto* logdk = bound->add_option("--log-dk", bf.log_dk, "log |d_K|, as a decimal or log(x)");
    auto* dk = bound->add_option("--dk", bf.dk, "|d_K| as a decimal");
    logdk->excludes(dk);
    bound->add_option("--r1", bf.r1, "Number of real embeddings")->required();
    bound->add_option("--T", bf.height, "Height T")->capture_default_str();
    bound->add_option("--row", bf.row, "Preset row supplying the constants")->check(CLI::Range(1, 5))->capture_default_str();
    bound->add_option("--c1", bf.c1, "Explicit C1");
    bound->add_option("--c2", bf.c2, "Explicit C2");
    bound->add_option("--c3", bf.c3, "Explicit C3");
    bound->add_option("--t0", bf.t0, "T0 column (1 or 10)")->check(CLI::IsMember({1, 10}))->capture_default_str();
    bound->add_flag("--published", bf.published, "Use the stored table values instead of recomputing");
    add_common(bound, bf.common);

    optimize_flags of;
    auto* optimize = app.add_subcommand("optimize", "Search (c, r, eta) for better constants");
    optimize->add_option("--objective", of.objective, "Objective")
        ->check(CLI::IsMember({"min-c1", "min-c2", "weighted"}))
        ->capture_default_str();
    optimize->add_option("--c1-cap", of.c1_cap, "Upper bound on C1 for min-c2");
    optimize->add_option("--weights", of.weights, "w1,w2,w3 for the weighted objective");
    optimize->add_option("--t0", of.t0, "Lower height T0")->capture_default_str();
    optimize->add_option("--budget", of.budget, "Refinement evaluations")->check(CLI::NonNegativeNumber)->capture_default_str();
    optimize->add_option("--seed-grid", of.seed_grid, "c=lo:hi:n,r=lo:hi:n,eta=lo:hi:n (default: stored presets)");
    optimize->add_option("--j1", of.j1)->capture_default_str();
    optimize->add_option("--j2", of.j2)->capture_default_str();
    add_common(optimize, of.common);

    verify_flags vf;
    auto* verify = app.add_subcommand("verify", "Run the oracle suite");
    verify->add_option("--level", vf.level)->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    verify->add_option("--lstar-weight", vf.lstar_weight)->group("");
    add_common(verify, vf.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        if (*compute)
            return run_compute(cf);
        if (*table)
            return run_table(tf);
        if (*bound)
            return run_bound(bf);
        if (*optimize)
            return run_optimize(of);
        if (*verify)
            return run_verify(vf);
    } catch (const zzc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const zzc::constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    } catch (const zzc::search_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    } catch (const zzc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return infeasible;
    } catch (const zzc::precision_error& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return precision;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return precision;
    }
    return ok;
}
