// Command-line front end: construct bent functions from partial spreads or
// prequasifields, verify bentness / relative difference sets / association
// schemes, and evaluate the counting bounds. Artifacts are JSON files with a
// format_version marker; runs are deterministic given the flags and seed.
//
// Exit codes: 0 verified pass, 1 verified failure (with witness), 2 invalid
// input or validation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "psbent/psbent.hpp"

using namespace psbent;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

void write_atomic(const std::string& path, const json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

// slope token: "inf" or a slope handle in 0..q-1
int parse_slope(const std::string& tok, int q) {
    if (tok == "inf") return q;
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad slope token " + tok);
    }
    if (used != tok.size() || v < 0 || v >= q)
        throw std::invalid_argument("slope " + tok + " out of range");
    return v;
}

// K = GF(p^s) matching H, when H is elementary abelian (or cyclic of prime
// order) over the field characteristic and s divides m
std::optional<Field> matching_codomain_field(const FiniteGroup& H, const Field& F) {
    const std::string& tag = H.tag();
    int p = 0, k = 0;
    if (tag.rfind("cyclic:", 0) == 0) {
        p = std::stoi(tag.substr(7));
        k = 1;
        if (!is_prime(p)) return std::nullopt;
    } else if (tag.rfind("elementary_abelian:", 0) == 0) {
        auto comma = tag.find(',');
        p = std::stoi(tag.substr(19, comma - 19));
        k = std::stoi(tag.substr(comma + 1));
    } else {
        return std::nullopt;
    }
    if (p != F.p() || F.m() % k != 0) return std::nullopt;
    return Field::make(p, k);
}

struct PsArgs {
    std::vector<int> field{2, 2};
    int q = 2;
    std::string H = "cyclic:2";
    std::string sigma;
    std::string blocks;
    std::string out;
    bool emit_json = false;
};

int run_construct_ps(const PsArgs& a) {
    if (a.field.size() != 2) throw std::invalid_argument("--field expects p,m");
    Field F = Field::make(a.field[0], a.field[1]);
    FiniteGroup H = catalog_group(a.H);
    if (H.order() != a.q)
        throw std::invalid_argument("--q is " + std::to_string(a.q) + " but |H| is " +
                                    std::to_string(H.order()));
    Spread s = build_spread(field_prequasifield(F));

    std::vector<std::string> tokens = split(a.sigma, ',');
    if (a.sigma.empty()) throw std::invalid_argument("--sigma must list slopes");
    std::vector<int> comps;
    for (const auto& t : tokens) comps.push_back(parse_slope(t, F.q()));
    std::sort(comps.begin(), comps.end());
    if (std::adjacent_find(comps.begin(), comps.end()) != comps.end())
        throw std::invalid_argument("--sigma lists a slope twice");

    std::vector<Subgroup> sigma;
    for (int c : comps) sigma.push_back(s.components[c]);

    PartialSpreadPartition P;
    std::vector<std::vector<int>> block_slopes;
    if (a.blocks.empty()) {
        P = make_partition_round_robin(s.ambient, sigma, H);
        for (const auto& b : P.blocks) {
            std::vector<int> bs;
            for (int idx : b) bs.push_back(comps[idx]);
            block_slopes.push_back(std::move(bs));
        }
    } else {
        std::vector<std::vector<int>> blocks;
        for (const auto& grp : split(a.blocks, ';')) {
            std::vector<int> b;
            for (const auto& t : split(grp, ',')) {
                int c = parse_slope(t, F.q());
                auto it = std::find(comps.begin(), comps.end(), c);
                if (it == comps.end())
                    throw std::invalid_argument("--blocks uses slope " + t + " not in --sigma");
                b.push_back(static_cast<int>(it - comps.begin()));
            }
            blocks.push_back(std::move(b));
            block_slopes.push_back({});
            for (int idx : blocks.back()) block_slopes.back().push_back(comps[idx]);
        }
        P = make_partition(s.ambient, sigma, H, blocks);
    }

    FunctionTable f = ps_bent(P);
    if (auto K = matching_codomain_field(H, F))
        f.fourier = fourier_context(F, embed_subfield(*K, F));

    json j = function_table_to_json(f);
    json sigma_tokens = json::array();
    for (int c : comps) sigma_tokens.push_back(c == F.q() ? json("inf") : json(c));
    // blocks keyed by the nonidentity H element they label
    json blocks_json = json::object();
    for (std::size_t t = 0; t < block_slopes.size(); ++t) {
        json b = json::array();
        for (int c : block_slopes[t]) b.push_back(c == F.q() ? json("inf") : json(c));
        blocks_json[std::to_string(t + 1)] = b;
    }
    j["provenance"] = json{{"command", "construct-ps"},
                           {"field", field_to_json(F)},
                           {"H", a.H},
                           {"sigma", sigma_tokens},
                           {"blocks", blocks_json}};
    if (!a.out.empty()) write_atomic(a.out, j);
    if (a.emit_json) std::cout << j.dump(2) << "\n";
    else
        std::cout << "wrote " << f.values.size() << "-entry function table onto " << a.H
                  << (a.out.empty() ? "" : " to " + a.out) << "\n";
    return kExitPass;
}

struct QfArgs {
    std::string prequasifield = "field:2,2";
    int kdeg = 1;
    std::string g = "round-robin";
    std::uint64_t seed = 0;
    std::string out;
    bool emit_json = false;
};

Prequasifield load_prequasifield(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return prequasifield_from_json(load_json_file(spec.substr(1)));
    if (spec == "twisted9") return twisted9_prequasifield();
    if (spec.rfind("field:", 0) == 0) {
        auto parts = split(spec.substr(6), ',');
        if (parts.size() != 2) throw std::invalid_argument("--prequasifield field:p,m");
        return field_prequasifield(Field::make(std::stoi(parts[0]), std::stoi(parts[1])));
    }
    throw std::invalid_argument("unknown prequasifield " + spec +
                                " (use field:p,m, twisted9, or @file.json)");
}

int run_construct_qf(const QfArgs& a) {
    Prequasifield Q = load_prequasifield(a.prequasifield);
    const Field& F = Q.field();
    if (a.kdeg < 1 || F.m() % a.kdeg != 0)
        throw std::invalid_argument("--kdeg must divide the extension degree " + std::to_string(F.m()));
    Field K = Field::make(F.p(), a.kdeg);
    SubfieldEmbedding emb = embed_subfield(K, F);
    std::vector<int> g;
    if (a.g == "round-robin") {
        g = balanced_values(F.q(), K.q(), BalancedKind::round_robin);
    } else if (a.g == "shuffle") {
        g = balanced_values(F.q(), K.q(), BalancedKind::seeded_shuffle, a.seed);
    } else if (!a.g.empty() && a.g[0] == '@') {
        json jg = load_json_file(a.g.substr(1));
        g = jg.is_array() ? jg.get<std::vector<int>>()
                          : jg.at("values").get<std::vector<int>>();
    } else {
        throw std::invalid_argument("--g must be round-robin, shuffle, or @file.json");
    }
    FunctionTable f = qf_bent(Q, emb, g);  // rejects unbalanced g and kernel failures

    json j = function_table_to_json(f);
    j["provenance"] = json{{"command", "construct-qf"},
                           {"prequasifield", Q.tag().empty() ? a.prequasifield : Q.tag()},
                           {"kdeg", a.kdeg},
                           {"g", a.g},
                           {"seed", a.seed},
                           {"g_values", g}};
    if (!a.out.empty()) write_atomic(a.out, j);
    if (a.emit_json) std::cout << j.dump(2) << "\n";
    else
        std::cout << "wrote " << f.values.size() << "-entry function table over GF("
                  << K.q() << ")" << (a.out.empty() ? "" : " to " + a.out) << "\n";
    return kExitPass;
}

struct VerifyArgs {
    std::string what;
    std::string in;
    std::string T;
    int p = 0, m = 0, s = 1;
    bool emit_json = false;
};

int report_bent(const BentReport& r, bool emit_json) {
    if (emit_json) std::cout << bent_report_to_json(r).dump(2) << "\n";
    else if (r.bent)
        std::cout << "bent (" << r.method << ")\n";
    else if (r.method == "combinatorial")
        std::cout << "not bent: derivative at z=" << r.z << " is not balanced\n";
    else
        std::cout << "not bent: |f^_" << r.k << "(" << r.u << ")|^2 = " << r.norm_square << "\n";
    return r.bent ? kExitPass : kExitFail;
}

int run_counts(int p, int m, int s, bool emit_json) {
    InequivalenceBounds b = inequivalence_bounds(p, m, s);
    if (emit_json) {
        std::cout << bounds_to_json(b).dump(2) << "\n";
    } else {
        std::cout << "binomial count: " << b.binomial.to_string() << "\n";
        std::cout << "inequivalence bound: "
                  << (b.rds_bound_vacuous ? std::string("vacuous (exponent ") +
                                                std::to_string(b.rds_bound_exponent) + ")"
                                          : b.rds_bound.to_string())
                  << "\n";
        std::cout << "affine-inequivalence quotient: " << b.affine_quotient.to_string() << "\n";
    }
    return kExitPass;
}

int run_verify(const VerifyArgs& a) {
    if (a.what == "counts") {
        if (a.p == 0 || a.m == 0) throw std::invalid_argument("counts needs --p and --m");
        return run_counts(a.p, a.m, a.s, a.emit_json);
    }
    if (a.in.empty()) throw std::invalid_argument("--in is required");
    FunctionTable f = function_table_from_json(load_json_file(a.in));

    if (a.what == "bent-combinatorial") return report_bent(verify_bent_combinatorial(f), a.emit_json);

    if (a.what == "bent-fourier") {
        if (!f.fourier)
            throw std::invalid_argument("input has no vector-space context for the Fourier test");
        BentReport r;
        if (a.T.empty()) {
            r = verify_bent_fourier(f);
        } else {
            std::vector<int> w;
            for (const auto& t : split(a.T, ',')) w.push_back(std::stoi(t));
            r = verify_bent_fourier(f, LinearFunctional::make(f.fourier->K, w));
        }
        return report_bent(r, a.emit_json);
    }

    if (a.what == "rds") {
        RdsInstance inst = build_relative_difference_set(f);
        auto r = verify_rds(inst.set, inst.ambient, inst.forbidden);
        if (a.emit_json) std::cout << rds_result_to_json(r).dump(2) << "\n";
        else if (const auto* p = std::get_if<RDSParams>(&r))
            std::cout << "relative difference set with parameters (" << p->m << ", " << p->n << ", "
                      << p->k << ", " << p->lambda << ")\n";
        else
            std::cout << "not a relative difference set: element "
                      << std::get<RdsFailure>(r).element << " hit "
                      << std::get<RdsFailure>(r).count << " times\n";
        return std::holds_alternative<RDSParams>(r) ? kExitPass : kExitFail;
    }

    if (a.what == "scheme") {
        auto r = verify_association_scheme(d_sets_from_function(f));
        if (a.emit_json) std::cout << scheme_result_to_json(r).dump(2) << "\n";
        else if (const auto* s = std::get_if<SchemeReport>(&r)) {
            std::cout << "association scheme with " << s->class_size.size() << " classes, sizes";
            for (long long c : s->class_size) std::cout << " " << c;
            std::cout << (s->commutative ? " (commutative)" : "") << "\n";
        } else {
            std::cout << "not an association scheme: " << std::get<SchemeFailure>(r).what << "\n";
        }
        return std::holds_alternative<SchemeReport>(r) ? kExitPass : kExitFail;
    }

    throw std::invalid_argument("unknown verification " + a.what);
}

int run_catalog(bool emit_json) {
    json groups = json::array();
    for (const char* spec : {"cyclic:n", "elementary_abelian:p,k", "dihedral:2n", "quaternion8",
                             "symmetric3"})
        groups.push_back(spec);
    json pqf = json::array({"field:p,m", "twisted9"});
    if (emit_json) {
        std::cout << json{{"format_version", kFormatVersion},
                          {"groups", groups},
                          {"prequasifields", pqf}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "groups: cyclic:n, elementary_abelian:p,k, dihedral:2n, quaternion8, "
                     "symmetric3 (combine with *)\n";
        std::cout << "prequasifields: field:p,m, twisted9, @file.json\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial-spread bent functions: exact construction and verification"};
    app.require_subcommand(1);

    PsArgs ps;
    auto* cps = app.add_subcommand("construct-ps", "bent function from a partial-spread partition");
    cps->add_option("--field", ps.field, "p,m of the base field GF(p^m)")->delimiter(',');
    cps->add_option("--q", ps.q, "order of the codomain group H")->required();
    cps->add_option("--H", ps.H, "codomain group (catalog name)")->required();
    cps->add_option("--sigma", ps.sigma, "comma-separated slopes (0..q-1 or inf)")->required();
    cps->add_option("--blocks", ps.blocks, "semicolon-separated slope groups, one per nonidentity H element");
    cps->add_option("--out", ps.out, "output path for the function-table JSON");
    cps->add_flag("--json", ps.emit_json, "print the artifact JSON to stdout");

    QfArgs qf;
    auto* cqf = app.add_subcommand("construct-qf", "bent function from a prequasifield");
    cqf->add_option("--prequasifield", qf.prequasifield, "field:p,m | twisted9 | @file.json");
    cqf->add_option("--kdeg", qf.kdeg, "degree of the kernel subfield K over Z_p");
    cqf->add_option("--g", qf.g, "balanced function: round-robin | shuffle | @file.json");
    cqf->add_option("--seed", qf.seed, "seed for --g shuffle");
    cqf->add_option("--out", qf.out, "output path for the function-table JSON");
    cqf->add_flag("--json", qf.emit_json, "print the artifact JSON to stdout");

    VerifyArgs vf;
    auto* cvf = app.add_subcommand("verify", "run a verification on a function-table artifact");
    cvf->add_option("--what", vf.what,
                    "bent-combinatorial | bent-fourier | rds | scheme | counts")->required();
    cvf->add_option("--in", vf.in, "function-table JSON path");
    cvf->add_option("--T", vf.T, "functional weights for bent-fourier (comma-separated)");
    cvf->add_option("--p", vf.p, "prime, for counts");
    cvf->add_option("--m", vf.m, "exponent m, for counts");
    cvf->add_option("--s", vf.s, "exponent s (m >= s >= 1), for counts");
    cvf->add_flag("--json", vf.emit_json, "machine-readable report to stdout");

    VerifyArgs ct;
    auto* cct = app.add_subcommand("counts", "counting bounds for partial-spread families");
    cct->add_option("--p", ct.p, "prime")->required();
    cct->add_option("--m", ct.m, "exponent m")->required();
    cct->add_option("--s", ct.s, "exponent s (m >= s >= 1)");
    cct->add_flag("--json", ct.emit_json, "machine-readable report to stdout");

    bool catalog_json = false;
    auto* ccat = app.add_subcommand("catalog", "list built-in groups and prequasifields");
    ccat->add_flag("--json", catalog_json, "machine-readable listing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cps->parsed()) return run_construct_ps(ps);
        if (cqf->parsed()) return run_construct_qf(qf);
        if (cvf->parsed()) return run_verify(vf);
        if (cct->parsed()) return run_counts(ct.p, ct.m, ct.s, ct.emit_json);
        if (ccat->parsed()) return run_catalog(catalog_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
