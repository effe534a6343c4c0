#include "ylat/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "ylat/chain.hpp"
#include "ylat/json_io.hpp"
#include "ylat/level_set.hpp"
#include "ylat/monomial.hpp"
#include "ylat/tableau.hpp"
#include "ylat/tropical.hpp"
#include "ylat/verify.hpp"

namespace ylat::cli {

namespace {

using io::json;

constexpr const char* kPalette[10] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

long long poset_cap_from_env(std::ostream& err, bool& bad) {
    const char* raw = std::getenv("TY_MAX_POSET");
    if (raw == nullptr) return kDefaultPosetCap;
    char* end = nullptr;
    long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) {
        err << "TY_MAX_POSET must be a positive integer\n";
        bad = true;
        return kDefaultPosetCap;
    }
    return value;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Signature parse_signature(int n, const std::string& text) {
    return Signature(n, io::parse_int_list(text));
}

json signature_list_json(const std::vector<Signature>& sigs) {
    json out = json::array();
    for (const Signature& s : sigs) out.push_back(s.d);
    return out;
}

std::string node_id(const Monomial& mu) {
    std::string id = "m";
    for (int i = 0; i <= mu.n(); ++i) {
        if (i) id += '_';
        id += std::to_string(mu.exponent(i));
    }
    return id;
}

std::string node_label(const Monomial& mu) {
    std::string label;
    for (int i = 0; i <= mu.n(); ++i) {
        if (i) label += ',';
        label += std::to_string(mu.exponent(i));
    }
    return label;
}

void write_dot(std::ostream& out, const std::vector<Monomial>& members,
               const std::vector<Chain>* chains) {
    std::set<Monomial> member_set(members.begin(), members.end());
    std::set<std::pair<Monomial, Monomial>> chain_edges;
    if (chains != nullptr)
        for (const Chain& c : *chains)
            for (size_t i = 0; i + 1 < c.elements.size(); ++i)
                chain_edges.emplace(c.elements[i], c.elements[i + 1]);

    out << "digraph young_lattice {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    std::map<int, std::vector<Monomial>, std::greater<int>> by_weight;
    for (const Monomial& mu : members) by_weight[mu.weight()].push_back(mu);
    for (const auto& [w, level] : by_weight) {
        out << "  { rank=same;";
        for (const Monomial& mu : level) out << " \"" << node_id(mu) << "\";";
        out << " }\n";
    }
    for (const Monomial& mu : members)
        out << "  \"" << node_id(mu) << "\" [label=\"" << node_label(mu) << "\"];\n";
    for (const Monomial& mu : members)
        for (int c = 1; c <= mu.n(); ++c) {
            if (!can_apply_color(mu, c)) continue;
            Monomial up = apply_color(mu, c);
            if (!member_set.count(up)) continue;
            bool on_chain = chain_edges.count({mu, up}) > 0;
            out << "  \"" << node_id(mu) << "\" -> \"" << node_id(up) << "\" [color=\""
                << kPalette[(c - 1) % 10] << "\"";
            if (chains != nullptr) out << (on_chain ? ", style=bold, penwidth=2" : ", style=dashed");
            out << "];\n";
        }
    out << "}\n";
}

json verify_report(int n, int m, const Config& config, bool full, long long size_cap) {
    bool all_ok = true;
    json report;
    report["n"] = n;
    report["m"] = m;
    long long slice_size = binomial(n + m, n);
    report["slice_size"] = slice_size;

    std::vector<Signature> sigs = signatures_of_degree(n, m);
    long long total = 0;
    json sig_reports = json::array();
    std::vector<Signature> generic;
    std::vector<Signature> singular;
    for (const Signature& sig : sigs) {
        json entry;
        entry["signature"] = sig.d;
        LevelSet level = enumerate_level(sig, size_cap);
        total += static_cast<long long>(level.members.size());
        entry["size"] = level.members.size();

        ChainFamily fam = transversal_family(sig, size_cap);
        FamilyReport fr = check_family(fam, size_cap);
        all_ok = all_ok && fr.ok;
        entry["theorem_a"] = json{{"kind", to_string(fam.kind)},
                                  {"chains", fam.chains.size()},
                                  {"ok", fr.ok}};
        if (!fr.ok) entry["theorem_a"]["problems"] = fr.problems;

        RankProfile lp = rank_profile(level.members);
        all_ok = all_ok && lp.symmetric;
        entry["tau_symmetric"] = lp.symmetric;

        auto decomposition = scd(sig, size_cap);
        if (decomposition) {
            FamilyReport sr = check_family(*decomposition, size_cap);
            all_ok = all_ok && sr.ok;
            entry["scd"] = json{{"available", true},
                                {"chains", decomposition->chains.size()},
                                {"ok", sr.ok}};
            if (!sr.ok) entry["scd"]["problems"] = sr.problems;
            generic.push_back(sig);
        } else {
            entry["scd"] = json{{"available", false}};
            singular.push_back(sig);
        }
        if (full) {
            entry["family"] = io::family_json(fam);
            if (decomposition) entry["scd_family"] = io::family_json(*decomposition);
        }
        sig_reports.push_back(std::move(entry));
    }

    bool partition_ok = total == slice_size;
    all_ok = all_ok && partition_ok;
    report["partition_identity"] = json{{"expected", slice_size}, {"sum", total}, {"ok", partition_ok}};
    report["signatures"] = sig_reports;
    report["generic"] = signature_list_json(generic);
    report["singular"] = signature_list_json(singular);

    std::vector<Monomial> slice = enumerate_monomials(n, m, size_cap);
    RankProfile profile = rank_profile(slice);
    std::vector<long long> gauss = gaussian_binomial(m, n);
    bool gauss_ok = true;
    // ranks run 0..mn, weight = mn - 2 rank
    for (int rank = 0; rank <= n * m; ++rank) {
        long long expected = gauss[static_cast<size_t>(rank)];
        auto it = profile.by_weight.find(n * m - 2 * rank);
        long long actual = it == profile.by_weight.end() ? 0 : it->second;
        if (expected != actual) gauss_ok = false;
    }
    all_ok = all_ok && profile.symmetric && profile.unimodal && gauss_ok;
    json rp = io::rank_profile_json(profile);
    rp["gaussian_match"] = gauss_ok;
    report["rank_profile"] = rp;

    if (slice_size <= config.max_sperner) {
        bool sperner = sperner_check(slice, config.max_sperner);
        all_ok = all_ok && sperner;
        report["sperner"] = sperner;
    } else {
        report["sperner"] = nullptr;
        report["sperner_skipped"] = true;
    }

    report["ok"] = all_ok;
    return report;
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tropical level-set decompositions of Young's lattice"};
    app.require_subcommand(1);

    Config config;
    bool bad_env = false;
    config.max_poset = poset_cap_from_env(err, bad_env);
    if (bad_env) return 2;

    int n = -1;
    int m = -1;
    int r = 0;
    std::string monomial_text;
    std::string signature_text;
    std::string side_text = "left";
    std::string format_text = "dot";
    std::string chains_text = "transversal";
    bool components_only = false;
    bool generators_only = false;
    bool full = false;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list the degree-m slice");
    cmd_enumerate->add_option("--n", n)->required();
    cmd_enumerate->add_option("--m", m)->required();

    auto* cmd_signature = app.add_subcommand("signature", "tropical signature of a monomial");
    cmd_signature->add_option("--monomial", monomial_text)->required();
    cmd_signature->add_option("--n", n);

    auto* cmd_tropical = app.add_subcommand("tropical", "evaluate f_{n,r} with a witness facet");
    cmd_tropical->add_option("--monomial", monomial_text)->required();
    cmd_tropical->add_option("--r", r)->required();
    cmd_tropical->add_option("--n", n);

    auto* cmd_ideal = app.add_subcommand("ideal", "generators and irreducible components");
    cmd_ideal->add_option("--n", n)->required();
    cmd_ideal->add_option("--r", r)->required();
    cmd_ideal->add_flag("--components", components_only);
    cmd_ideal->add_flag("--generators", generators_only);

    auto* cmd_tableau = app.add_subcommand("tableau", "canonical factorization tableau");
    cmd_tableau->add_option("--monomial", monomial_text)->required();
    cmd_tableau->add_option("--n", n);

    auto* cmd_levelset = app.add_subcommand("levelset", "members of a tropical level set");
    cmd_levelset->add_option("--n", n)->required();
    cmd_levelset->add_option("--signature", signature_text)->required();

    auto* cmd_chain = app.add_subcommand("chain", "transversal chain through a monomial");
    cmd_chain->add_option("--monomial", monomial_text)->required();
    cmd_chain->add_option("--side", side_text)->check(CLI::IsMember({"left", "right"}));
    cmd_chain->add_option("--n", n);

    auto* cmd_decompose = app.add_subcommand("decompose", "transversal chain family of a level set");
    cmd_decompose->add_option("--n", n)->required();
    cmd_decompose->add_option("--signature", signature_text)->required();

    auto* cmd_scd = app.add_subcommand("scd", "symmetric chain decompositions of a slice");
    cmd_scd->add_option("--n", n)->required();
    cmd_scd->add_option("--m", m)->required();

    auto* cmd_verify = app.add_subcommand("verify", "check the structural properties of a slice");
    cmd_verify->add_option("--n", n)->required();
    cmd_verify->add_option("--m", m)->required();
    cmd_verify->add_flag("--full", full, "embed the chain families in the report");

    auto* cmd_export = app.add_subcommand("export", "Hasse diagram with chains as colored paths");
    cmd_export->add_option("--n", n)->required();
    cmd_export->add_option("--m", m);
    cmd_export->add_option("--signature", signature_text);
    cmd_export->add_option("--format", format_text)->check(CLI::IsMember({"dot"}));
    cmd_export->add_option("--chains", chains_text)->check(CLI::IsMember({"transversal", "scd", "none"}));

    std::vector<std::string> argv_storage;
    argv_storage.push_back("ylat");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    const long long cap = config.max_poset;
    try {
        if (*cmd_enumerate) {
            json monomials = json::array();
            for (const Monomial& mu : enumerate_monomials(n, m, cap))
                monomials.push_back(io::monomial_json(mu));
            emit(out, json{{"n", n}, {"m", m}, {"count", monomials.size()}, {"monomials", monomials}});
        } else if (*cmd_signature) {
            Monomial mu = io::parse_monomial(monomial_text, n);
            emit(out, json{{"signature", signature_of(mu).d}});
        } else if (*cmd_tropical) {
            Monomial mu = io::parse_monomial(monomial_text, n);
            auto [amount, facet] = best_cover(mu, r);
            emit(out, json{{"n", mu.n()},
                           {"r", r},
                           {"monomial", io::monomial_json(mu)},
                           {"f", mu.degree() - amount},
                           {"covered", amount},
                           {"facet", io::facet_json(facet)}});
        } else if (*cmd_ideal) {
            json result{{"n", n}, {"r", r}};
            bool both = components_only == generators_only;
            if (both || generators_only) result["generators"] = generators(n, r);
            if (both || components_only) {
                if (r == 0) {
                    // the full variable ideal is its own single component
                    std::vector<int> all(static_cast<size_t>(n) + 1);
                    for (int i = 0; i <= n; ++i) all[static_cast<size_t>(i)] = i;
                    result["components"] = json::array({all});
                } else {
                    result["components"] = components(n, r);
                }
            }
            emit(out, result);
        } else if (*cmd_tableau) {
            Monomial mu = io::parse_monomial(monomial_text, n);
            Tableau t = canonical_tableau(mu);
            emit(out, json{{"monomial", io::monomial_json(mu)},
                           {"rows", t.rows},
                           {"signature", signature_of(mu).d}});
        } else if (*cmd_levelset) {
            LevelSet level = enumerate_level(parse_signature(n, signature_text), cap);
            emit(out, io::level_set_json(level));
        } else if (*cmd_chain) {
            Monomial mu = io::parse_monomial(monomial_text, n);
            Chain c = transversal(mu, side_text == "left" ? TransversalSide::left
                                                          : TransversalSide::right);
            emit(out, io::chain_json(c));
        } else if (*cmd_decompose) {
            ChainFamily fam = transversal_family(parse_signature(n, signature_text), cap);
            emit(out, io::family_json(fam));
        } else if (*cmd_scd) {
            GenericSplit split = split_generic(n, m, cap);
            json families = json::array();
            for (const Signature& sig : signatures_of_degree(n, m)) {
                auto fam = scd(sig, cap);
                families.push_back(io::family_json(fam ? *fam : transversal_family(sig, cap)));
            }
            emit(out, json{{"n", n},
                           {"m", m},
                           {"generic", signature_list_json(split.generic)},
                           {"singular", signature_list_json(split.singular)},
                           {"families", families}});
        } else if (*cmd_verify) {
            json report = verify_report(n, m, config, full, cap);
            emit(out, report);
            return report["ok"].get<bool>() ? 0 : 1;
        } else if (*cmd_export) {
            if (!signature_text.empty()) {
                Signature sig = parse_signature(n, signature_text);
                LevelSet level = enumerate_level(sig, cap);
                std::vector<Chain> chains;
                const std::vector<Chain>* chains_ptr = nullptr;
                if (chains_text == "transversal") {
                    chains = transversal_family(sig, cap).chains;
                    chains_ptr = &chains;
                } else if (chains_text == "scd") {
                    auto fam = scd(sig, cap);
                    if (!fam) {
                        err << "no symmetric chain decomposition known for this signature\n";
                        return 1;
                    }
                    chains = fam->chains;
                    chains_ptr = &chains;
                }
                write_dot(out, level.members, chains_ptr);
            } else {
                if (m < 0) {
                    err << "export needs --m when no --signature is given\n";
                    return 2;
                }
                std::vector<Chain> chains;
                const std::vector<Chain>* chains_ptr = nullptr;
                if (chains_text == "transversal") {
                    for (const Signature& sig : signatures_of_degree(n, m))
                        for (Chain& c : transversal_family(sig, cap).chains)
                            chains.push_back(std::move(c));
                    chains_ptr = &chains;
                } else if (chains_text == "scd") {
                    // bold what decomposes; singular level sets stay dashed
                    for (const Signature& sig : signatures_of_degree(n, m))
                        if (auto fam = scd(sig, cap))
                            for (Chain& c : fam->chains) chains.push_back(std::move(c));
                    chains_ptr = &chains;
                }
                write_dot(out, enumerate_monomials(n, m, cap), chains_ptr);
            }
        }
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 0;
}

}   // namespace ylat::cli
