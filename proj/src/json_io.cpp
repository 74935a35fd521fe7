#include "lfc/json_io.hpp"

namespace lfc {

using nlohmann::ordered_json;

namespace {

ordered_json counts_json(const VerdictCounts& c) {
    ordered_json j;
    j["holds"] = c.holds;
    j["equality"] = c.equality;
    j["violated"] = c.violated;
    return j;
}

ordered_json config_json(const SuiteConfig& c) {
    ordered_json j;
    j["seed"] = c.seed;
    j["cases"] = c.cases;
    ordered_json families = ordered_json::array();
    for (Family f : c.families) families.push_back(family_name(f));
    j["families"] = std::move(families);
    ordered_json alphas = ordered_json::array();
    for (const Alpha& a : c.alphas) alphas.push_back(a.to_string());
    j["alphas"] = std::move(alphas);
    ordered_json parts = ordered_json::array();
    for (const PartitionSpec& p : c.partitions) parts.push_back(p.to_string());
    j["partitions"] = std::move(parts);
    ordered_json classes = ordered_json::array();
    for (FnClass fc : c.classes) classes.push_back(fn_class_name(fc));
    j["classes"] = std::move(classes);
    j["m_min"] = c.m_min;
    j["m_max"] = c.m_max;
    j["interval"] = ordered_json::array({c.a, c.b});
    return j;
}

}  // namespace

ordered_json to_ordered_json(const IneqReport& r) {
    ordered_json j;
    j["family"] = family_name(r.family);
    j["alpha"] = r.alpha.value();
    j["exponents"] = r.exponents;
    j["partition"] = r.partition;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["rel_slack"] = r.rel_slack;
    j["verdict"] = verdict_name(r.verdict);
    j["seed"] = r.seed;
    return j;
}

ordered_json to_ordered_json(const SuiteReport& rep) {
    ordered_json j;
    j["config"] = config_json(rep.config);
    ordered_json per = ordered_json::object();
    for (const auto& [fam, counts] : rep.per_family) per[family_name(fam)] = counts_json(counts);
    j["per_family"] = std::move(per);
    j["total"] = counts_json(rep.total);
    j["min_rel_slack"] = rep.min_rel_slack;
    if (rep.worst_case) {
        j["worst_case"] = to_ordered_json(*rep.worst_case);
    } else {
        j["worst_case"] = nullptr;
    }
    ordered_json viols = ordered_json::array();
    for (const IneqReport& v : rep.violations) viols.push_back(to_ordered_json(v));
    j["violations"] = std::move(viols);
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace lfc
