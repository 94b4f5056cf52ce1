#ifndef CYCLOCODES_REPORT_HPP
#define CYCLOCODES_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codecore.hpp"
#include "constructions.hpp"
#include "distance.hpp"

namespace cyclo {

inline constexpr int kSchemaVersion = 1;

struct DualBlock {
    std::vector<Residue> defining_set;
    std::size_t dimension = 0;
    BinaryPolynomial generator;
    std::size_t bch_lower_bound = 0;
    Residue bch_interval_start = 0;

    friend bool operator==(const DualBlock&, const DualBlock&) = default;
};

struct CodeReport {
    Residue n = 0;
    unsigned m = 0;
    Origin origin;
    std::vector<Residue> defining_set;
    std::size_t dimension = 0;
    BinaryPolynomial generator;
    std::size_t bch_lower_bound = 0;
    Residue bch_interval_start = 0;
    DualBlock dual;

    friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

struct Report {
    int schema = kSchemaVersion;
    CodeReport code;
    std::optional<ConstructionAudit> audit;
    std::optional<DistanceResult> distance;
    std::optional<DistanceResult> dual_distance;

    friend bool operator==(const Report&, const Report&) = default;
};

/// BCH fields degrade to 0 for the zero code, where no bound exists.
inline CodeReport make_code_report(const CyclicCode& code, const CyclicCode& dual_code) {
    auto bch_or_zero = [](const DefiningSet& z) {
        return z.size() == z.n ? BchBound{0, 0} : bch_lower_bound(z);
    };
    CodeReport r;
    r.n = code.n;
    r.m = code.m();
    r.origin = code.defining_set.origin;
    r.defining_set = code.defining_set.elements;
    r.dimension = code.dimension;
    r.generator = code.generator;
    const auto b = bch_or_zero(code.defining_set);
    r.bch_lower_bound = b.delta;
    r.bch_interval_start = b.start;
    r.dual.defining_set = dual_code.defining_set.elements;
    r.dual.dimension = dual_code.dimension;
    r.dual.generator = dual_code.generator;
    const auto bd = bch_or_zero(dual_code.defining_set);
    r.dual.bch_lower_bound = bd.delta;
    r.dual.bch_interval_start = bd.start;
    return r;
}

inline std::string bits_string(const Bits& v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] ? '1' : '0';
    return s;
}

inline Bits parse_bits_string(const std::string& s) {
    Bits v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        require(s[i] == '0' || s[i] == '1', Errc::domain, "invalid character in bit-string");
        v[i] = s[i] == '1';
    }
    return v;
}

namespace json_detail {

using nlohmann::json;

inline json origin_json(const Origin& o) {
    return {{"construction", o.construction}, {"params", o.params}, {"overrides", o.overrides}};
}

inline Origin origin_from(const json& j) {
    Origin o;
    o.construction = j.at("construction").get<std::string>();
    o.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    o.overrides = j.at("overrides").get<std::vector<Residue>>();
    return o;
}

inline void put_poly(json& j, const char* stem, const BinaryPolynomial& p, bool hex) {
    j[std::string(stem) + (hex ? "_hex" : "_bits")] = hex ? p.to_hex() : p.to_bits();
}

inline BinaryPolynomial get_poly(const json& j, const char* stem) {
    const std::string bits = std::string(stem) + "_bits";
    const std::string hex = std::string(stem) + "_hex";
    if (j.contains(bits)) return BinaryPolynomial::from_bits(j.at(bits).get<std::string>());
    return BinaryPolynomial::from_hex(j.at(hex).get<std::string>());
}

}  // namespace json_detail

inline nlohmann::json to_json(const DefiningSet& z) {
    auto j = json_detail::origin_json(z.origin);
    j["n"] = z.n;
    j["m"] = z.m;
    j["elements"] = z.elements;
    return j;
}

inline nlohmann::json to_json(const ConstructionAudit& a) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : a.checks) checks.push_back({{"identity", c.identity}, {"holds", c.holds}});
    return {{"sets", a.sets}, {"values", a.values}, {"checks", checks}};
}

inline ConstructionAudit audit_from_json(const nlohmann::json& j) {
    ConstructionAudit a;
    a.sets = j.at("sets").get<std::map<std::string, std::vector<Residue>>>();
    a.values = j.at("values").get<std::map<std::string, std::int64_t>>();
    for (const auto& c : j.at("checks")) a.checks.push_back({c.at("identity").get<std::string>(), c.at("holds").get<bool>()});
    return a;
}

inline nlohmann::json to_json(const DistanceResult& d) {
    nlohmann::json j = {{"method", method_name(d.method)},
                        {"best_weight_found", d.best_weight_found},
                        {"proven_lower_bound", d.proven_lower_bound},
                        {"witness", bits_string(d.witness)},
                        {"iterations", d.iterations}};
    if (d.exact_distance) j["exact_distance"] = *d.exact_distance;
    if (d.method == DistanceMethod::search) {
        j["seed"] = d.seed;
        j["depth"] = d.depth;
    }
    return j;
}

inline DistanceResult distance_from_json(const nlohmann::json& j) {
    DistanceResult d;
    const auto method = j.at("method").get<std::string>();
    require(method == "exhaustive" || method == "search", Errc::domain, "unknown distance method " + method);
    d.method = method == "search" ? DistanceMethod::search : DistanceMethod::exhaustive;
    if (j.contains("exact_distance")) d.exact_distance = j.at("exact_distance").get<std::size_t>();
    d.best_weight_found = j.at("best_weight_found").get<std::size_t>();
    d.proven_lower_bound = j.at("proven_lower_bound").get<std::size_t>();
    d.witness = parse_bits_string(j.at("witness").get<std::string>());
    d.iterations = j.at("iterations").get<std::uint64_t>();
    d.seed = j.value("seed", std::uint64_t{0});
    d.depth = j.value("depth", 0U);
    return d;
}

inline nlohmann::json to_json(const CodeReport& c, bool hex = false) {
    using json_detail::put_poly;
    auto j = json_detail::origin_json(c.origin);
    j["n"] = c.n;
    j["m"] = c.m;
    j["defining_set"] = c.defining_set;
    j["dimension"] = c.dimension;
    put_poly(j, "generator", c.generator, hex);
    j["bch_lower_bound"] = c.bch_lower_bound;
    j["bch_interval_start"] = c.bch_interval_start;
    nlohmann::json d = {{"defining_set", c.dual.defining_set},
                        {"dimension", c.dual.dimension},
                        {"bch_lower_bound", c.dual.bch_lower_bound},
                        {"bch_interval_start", c.dual.bch_interval_start}};
    put_poly(d, "generator", c.dual.generator, hex);
    j["dual"] = d;
    return j;
}

inline CodeReport code_report_from_json(const nlohmann::json& j) {
    using json_detail::get_poly;
    CodeReport c;
    c.n = j.at("n").get<Residue>();
    c.m = j.at("m").get<unsigned>();
    c.origin = json_detail::origin_from(j);
    c.defining_set = j.at("defining_set").get<std::vector<Residue>>();
    c.dimension = j.at("dimension").get<std::size_t>();
    c.generator = get_poly(j, "generator");
    c.bch_lower_bound = j.at("bch_lower_bound").get<std::size_t>();
    c.bch_interval_start = j.at("bch_interval_start").get<Residue>();
    const auto& d = j.at("dual");
    c.dual.defining_set = d.at("defining_set").get<std::vector<Residue>>();
    c.dual.dimension = d.at("dimension").get<std::size_t>();
    c.dual.generator = get_poly(d, "generator");
    c.dual.bch_lower_bound = d.at("bch_lower_bound").get<std::size_t>();
    c.dual.bch_interval_start = d.at("bch_interval_start").get<Residue>();
    return c;
}

inline nlohmann::json to_json(const Report& r, bool hex = false) {
    nlohmann::json j = {{"schema", r.schema}, {"code", to_json(r.code, hex)}};
    if (r.audit) j["audit"] = to_json(*r.audit);
    if (r.distance) j["distance"] = to_json(*r.distance);
    if (r.dual_distance) j["dual_distance"] = to_json(*r.dual_distance);
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.schema = j.at("schema").get<int>();
    require(r.schema == kSchemaVersion, Errc::domain, "unsupported report schema " + std::to_string(r.schema));
    r.code = code_report_from_json(j.at("code"));
    if (j.contains("audit")) r.audit = audit_from_json(j.at("audit"));
    if (j.contains("distance")) r.distance = distance_from_json(j.at("distance"));
    if (j.contains("dual_distance")) r.dual_distance = distance_from_json(j.at("dual_distance"));
    return r;
}

}  // namespace cyclo

#endif  // CYCLOCODES_REPORT_HPP
