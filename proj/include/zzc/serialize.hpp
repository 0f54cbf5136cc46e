#pragma once

// JSON records for the command-line front end. Reals are written as decimal
// strings carrying the full working precision so that a parse reproduces the
// value exactly.

#include "constants.hpp"
#include "optimizer.hpp"
#include "precision.hpp"

#include <json.hpp>

#include <string>

namespace zzc {

using json = nlohmann::ordered_json;

inline constexpr const char* json_schema = "zzc/1";

inline bool operator==(const constant_triple& a, const constant_triple& b)
{
    return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
}

inline bool operator==(const search_point& a, const search_point& b)
{
    return a.c == b.c && a.r == b.r && a.eta == b.eta && a.j1 == b.j1 && a.j2 == b.j2 && a.t0 == b.t0;
}

inline bool operator==(const trace_entry& a, const trace_entry& b)
{
    return a.point == b.point && a.constants == b.constants;
}

inline bool operator==(const search_report& a, const search_report& b)
{
    return a.best == b.best && a.best_constants == b.best_constants && a.evaluations == b.evaluations &&
           a.trace == b.trace;
}

namespace detail {
inline real real_from(const json& j, const char* key)
{
    return parse_real(j.at(key).get<std::string>());
}
} // namespace detail

inline void to_json(json& j, const constant_triple& t)
{
    j = json{{"c1", to_decimal(t.c1)}, {"c2", to_decimal(t.c2)}, {"c3", to_decimal(t.c3)}};
}

inline void from_json(const json& j, constant_triple& t)
{
    t.c1 = detail::real_from(j, "c1");
    t.c2 = detail::real_from(j, "c2");
    t.c3 = detail::real_from(j, "c3");
}

inline void to_json(json& j, const d_triple& d)
{
    j = json{{"d1", d.d1.str()}, {"d2", d.d2.str()}, {"d3", d.d3.str()}};
}

inline void from_json(const json& j, d_triple& d)
{
    d.d1 = thousandths::parse(j.at("d1").get<std::string>());
    d.d2 = thousandths::parse(j.at("d2").get<std::string>());
    d.d3 = thousandths::parse(j.at("d3").get<std::string>());
}

inline void to_json(json& j, const search_point& p)
{
    j = json{{"c", to_decimal(p.c)},     {"r", to_decimal(p.r)},   {"eta", to_decimal(p.eta)},
             {"j1", p.j1},               {"j2", p.j2},             {"t0", to_decimal(p.t0)},
             {"sigma1", to_decimal(p.sigma1())}, {"delta", to_decimal(p.delta())}};
}

inline void from_json(const json& j, search_point& p)
{
    p.c = detail::real_from(j, "c");
    p.r = detail::real_from(j, "r");
    p.eta = detail::real_from(j, "eta");
    p.j1 = j.at("j1").get<int>();
    p.j2 = j.at("j2").get<int>();
    p.t0 = detail::real_from(j, "t0");
}

inline void to_json(json& j, const bound_breakdown& b)
{
    j = json{{"c2",
              {{"gk_term", to_decimal(b.gk_term)},
               {"log_zeta_sigma1_term", to_decimal(b.log_zeta_sigma1_term)},
               {"ek_term", to_decimal(b.ek_term)},
               {"zeta_int_first", to_decimal(b.zeta_int_first)},
               {"zeta_int_second", to_decimal(b.zeta_int_second)},
               {"eta_strip_term", to_decimal(b.eta_strip_term)},
               {"kappa45_term", to_decimal(b.kappa45_term)},
               {"zeta_ratio_term", to_decimal(b.zeta_ratio_term)}}},
             {"c3",
              {{"base_5_2", to_decimal(b.base_5_2)},
               {"t0_log_term", to_decimal(b.t0_log_term)},
               {"log3_term", to_decimal(b.log3_term)},
               {"lstar_term", to_decimal(b.lstar_term)}}}};
}

inline void to_json(json& j, const kappa_set& k)
{
    j = json{{"kappa1", to_decimal(k.kappa1)},
             {"kappa2", to_decimal(k.kappa2)},
             {"kappa3", to_decimal(k.kappa3)},
             {"kappa4", to_decimal(k.kappa4)},
             {"kappa5", to_decimal(k.kappa5)},
             {"lstar_int_first", to_decimal(k.lstar_int_first)},
             {"lstar_int_mid", to_decimal(k.lstar_int_mid)},
             {"lstar_int_last", to_decimal(k.lstar_int_last)}};
}

inline void to_json(json& j, const trace_entry& e)
{
    j = json{{"point", e.point}, {"constants", e.constants}};
}

inline void from_json(const json& j, trace_entry& e)
{
    e.point = j.at("point").get<search_point>();
    e.constants = j.at("constants").get<constant_triple>();
}

inline void to_json(json& j, const search_report& r)
{
    j = json{{"best", r.best},
             {"best_constants", r.best_constants},
             {"evaluations", r.evaluations},
             {"trace", r.trace}};
}

inline void from_json(const json& j, search_report& r)
{
    r.best = j.at("best").get<search_point>();
    r.best_constants = j.at("best_constants").get<constant_triple>();
    r.evaluations = j.at("evaluations").get<long>();
    r.trace = j.at("trace").get<std::vector<trace_entry>>();
}

/// Top-level record: {schema, command, inputs, results, diagnostics}.
inline json envelope(const std::string& command, json inputs, json results, json diagnostics = json::object())
{
    return json{{"schema", json_schema},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"diagnostics", std::move(diagnostics)}};
}

} // namespace zzc
