#pragma once

// JSON (de)serialization for the artifact formats. Every file-level artifact
// carries {"format_version": 1}. Catalog groups serialize by name, direct
// products structurally, anything else as an explicit Cayley table.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "psbent/construct.hpp"
#include "psbent/field.hpp"
#include "psbent/function_table.hpp"
#include "psbent/group.hpp"
#include "psbent/spread.hpp"
#include "psbent/verify.hpp"

namespace psbent {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

inline json field_to_json(const Field& F) {
    return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

inline Field field_from_json(const json& j) {
    if (!j.contains("p")) throw std::invalid_argument("field: missing p");
    int p = j.at("p").get<int>();
    if (j.contains("modulus"))
        return Field::with_modulus(p, j.at("modulus").get<std::vector<int>>());
    return Field::make(p, j.at("m").get<int>());
}

inline json group_to_json(const FiniteGroup& G) {
    const std::string& tag = G.tag();
    if (tag == "product" && G.is_product())
        return json{{"tag", "product"}, {"left", group_to_json(G.left())}, {"right", group_to_json(G.right())}};
    if (tag.rfind("elementary_abelian:", 0) == 0) {
        auto comma = tag.find(',');
        return json{{"tag", "elementary_abelian"},
                    {"p", std::stoi(tag.substr(19, comma - 19))},
                    {"k", std::stoi(tag.substr(comma + 1))}};
    }
    if (!tag.empty() && G.has_table() == false) throw std::logic_error("group_to_json: tableless group without structure");
    if (!tag.empty()) return json{{"tag", tag}};
    std::vector<std::vector<int>> table(G.order(), std::vector<int>(G.order()));
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) table[a][b] = G.mul(a, b);
    return json{{"order", G.order()}, {"mul", table}};
}

inline FiniteGroup group_from_json(const json& j) {
    if (j.contains("mul"))
        return FiniteGroup::from_table(j.at("mul").get<std::vector<std::vector<int>>>(),
                                       j.value("tag", std::string()));
    std::string tag = j.at("tag").get<std::string>();
    if (tag == "product")
        return direct_product(group_from_json(j.at("left")), group_from_json(j.at("right")));
    if (tag == "elementary_abelian" && j.contains("p"))
        return elementary_abelian_group(j.at("p").get<int>(), j.at("k").get<int>());
    return catalog_group(tag);
}

inline json prequasifield_to_json(const Prequasifield& Q) {
    int q = Q.field().q();
    std::vector<std::vector<int>> star(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int x = 0; x < q; ++x) star[a][x] = Q.star(a, x);
    json j{{"format_version", kFormatVersion},
           {"field", field_to_json(Q.field())},
           {"star", star}};
    if (!Q.tag().empty()) j["tag"] = Q.tag();
    return j;
}

inline Prequasifield prequasifield_from_json(const json& j) {
    Field F = field_from_json(j.at("field"));
    auto r = validate_prequasifield(F, j.at("star").get<std::vector<std::vector<int>>>(),
                                    j.value("tag", std::string()));
    if (auto* v = std::get_if<PrequasifieldViolation>(&r))
        throw std::invalid_argument("prequasifield: " + v->message());
    return std::get<Prequasifield>(std::move(r));
}

inline json function_table_to_json(const FunctionTable& f) {
    json j{{"format_version", kFormatVersion},
           {"domain", group_to_json(f.domain)},
           {"codomain", group_to_json(f.codomain)},
           {"values", f.values}};
    if (f.fourier)
        j["fourier"] = json{{"K", field_to_json(f.fourier->K)}, {"coords", f.fourier->coords}};
    return j;
}

inline FunctionTable function_table_from_json(const json& j) {
    if (j.value("format_version", -1) != kFormatVersion)
        throw std::invalid_argument("function table: missing or unsupported format_version");
    FunctionTable f{group_from_json(j.at("domain")), group_from_json(j.at("codomain")),
                    j.at("values").get<std::vector<int>>(), std::nullopt};
    if (j.contains("fourier")) {
        FourierContext ctx{field_from_json(j.at("fourier").at("K")),
                           j.at("fourier").at("coords").get<std::vector<std::vector<int>>>()};
        f.fourier = std::move(ctx);
    }
    f.check_total();
    f.check_fourier_consistent();
    return f;
}

inline json bent_report_to_json(const BentReport& r) {
    json j{{"format_version", kFormatVersion},
           {"verdict", r.bent ? "bent" : "not-bent"},
           {"method", r.method},
           {"witnesses", json::array()}};
    if (!r.bent) {
        if (r.method == "combinatorial")
            j["witnesses"].push_back(json{{"z", r.z}, {"histogram", r.histogram}});
        else
            j["witnesses"].push_back(json{{"k", r.k}, {"u", r.u}, {"norm_square", r.norm_square}});
    }
    return j;
}

inline json rds_result_to_json(const std::variant<RDSParams, RdsFailure>& r) {
    if (const auto* p = std::get_if<RDSParams>(&r))
        return json{{"format_version", kFormatVersion},
                    {"verdict", "rds"},
                    {"params", {{"m", p->m}, {"n", p->n}, {"k", p->k}, {"lambda", p->lambda}}}};
    const auto& f = std::get<RdsFailure>(r);
    return json{{"format_version", kFormatVersion},
                {"verdict", "not-rds"},
                {"witnesses",
                 json::array({json{{"element", f.element},
                                   {"count", f.count},
                                   {"expected", f.expected},
                                   {"in_forbidden", f.in_forbidden}}})}};
}

inline json scheme_result_to_json(const std::variant<SchemeReport, SchemeFailure>& r) {
    if (const auto* s = std::get_if<SchemeReport>(&r))
        return json{{"format_version", kFormatVersion},
                    {"verdict", "scheme"},
                    {"classes", s->class_size},
                    {"class_labels", s->class_label},
                    {"commutative", s->commutative},
                    {"intersection_numbers", s->intersection_numbers}};
    const auto& f = std::get<SchemeFailure>(r);
    return json{{"format_version", kFormatVersion},
                {"verdict", "not-scheme"},
                {"witnesses",
                 json::array({json{{"what", f.what},
                                   {"i", f.i},
                                   {"j", f.j},
                                   {"g1", f.g1},
                                   {"g2", f.g2},
                                   {"count1", f.count1},
                                   {"count2", f.count2}}})}};
}

inline json bounds_to_json(const InequivalenceBounds& b) {
    json j{{"format_version", kFormatVersion},
           {"binomial", b.binomial.to_string()},
           {"affine_quotient", b.affine_quotient.to_string()}};
    if (b.rds_bound_vacuous) {
        j["rds_bound"] = "vacuous";
        j["rds_bound_exponent"] = b.rds_bound_exponent;
    } else {
        j["rds_bound"] = b.rds_bound.to_string();
        j["rds_bound_exponent"] = b.rds_bound_exponent;
    }
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace psbent
