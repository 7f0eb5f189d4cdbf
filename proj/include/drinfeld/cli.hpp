#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/compseries.hpp"
#include "drinfeld/dfun.hpp"
#include "drinfeld/json_io.hpp"
#include "drinfeld/klmult.hpp"

namespace drinfeld {

struct RunReport {
    bool success = true;
    std::string error_code; // machine-readable on failure
    json payload;
    long timing_ms = 0;
    unsigned seed = 1;
    int exit_code = 0; // 0 ok, 2 usage, 3 domain, 4 violated invariant
};

namespace cli_detail {

inline Weight parse_weight(const std::string& csv) {
    std::vector<long> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            require(pos == tok.size(), "ParseError", "weight entries must be integers");
            vals.push_back(v);
        } catch (const std::exception&) {
            throw domain_error("ParseError", "bad weight entry '" + tok + "'");
        }
    }
    require(!vals.empty(), "ParseError", "empty weight");
    return Weight::from_ints(vals);
}

inline Permutation parse_permutation(const std::string& csv) {
    std::vector<int> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    return Permutation(vals);
}

// singular lines with their weight series, Drinfeld data, and whether the
// line generates the module (singularity, eigenvector property, and
// generation are independent facts and all three are reported)
inline json hw_json(const YangianModule& y, const std::vector<HighestWeightData>& hws) {
    json arr = json::array();
    for (const auto& hw : hws) {
        json zs = json::array();
        for (const auto& z : hw.zeta) zs.push_back(to_json(z));
        arr.push_back(json{{"zeta", zs},
                           {"drinfeld", to_json(drinfeld_polys(hw))},
                           {"eigenspace_dim", hw.eigenspace_dim},
                           {"generates", spin(y, {hw.vector}).dim() == y.dim}});
    }
    return arr;
}

inline json run_kl(int rank) {
    KLTable table = kl_table(rank); // invariants enforced inside
    json pairs = json::array();
    bool oracle_checked = rank <= 4;
    for (const auto& [key, p] : table.values) {
        const auto& [x, w] = key;
        json entry{{"x", to_json(x)},
                   {"w", to_json(w)},
                   {"coeffs", to_json(p)},
                   {"at_one", kl_at_one(x, w)}};
        if (oracle_checked) entry["oracle_agrees"] = (kl_oracle(x, w) == p);
        pairs.push_back(std::move(entry));
    }
    return json{{"rank", rank}, {"oracle_checked", oracle_checked}, {"pairs", pairs}};
}

inline json run_standard(const Weight& lambda, const Weight& mu) {
    HeckeModule k = standard_module(lambda, mu);
    auto rep = verify_hecke(k);
    json dec = json::array();
    for (const auto& [nu, m] : decompose(k.w_action).multiplicities)
        dec.push_back(json{{"partition", to_json(nu)}, {"multiplicity", m}});
    json out = to_json(k);
    out["w_decomposition"] = dec;
    out["relations_ok"] = rep.ok;
    return out;
}

inline json run_dimage(const Weight& lambda, const Weight& mu, int n) {
    HeckeModule k = standard_module(lambda, mu);
    YangianModule y = drinfeld_image(k, n);
    json out = to_json(y);
    out["highest_weights"] = hw_json(y, highest_weight_data(y));
    if (y.dim > 0) out["character"] = to_json(gln_character(y));
    return out;
}

inline json run_mtable(const Weight& lambda, const Weight& mu, int n, bool oracle,
                       size_t oracle_bound, unsigned seed) {
    MultiplicityReport rep = multiplicity_table(lambda, mu, n);
    json out = to_json(rep);
    json chars = json::array();
    for (size_t j = 0; j < rep.cosets.size(); ++j)
        chars.push_back(to_json(yangian_character(lambda, rep.cosets[j].w_min, mu, n, rep)));
    out["simple_characters"] = chars;
    std::string status = "skipped";
    if (oracle) {
        status = "verified";
        CompositionOptions opts;
        opts.bound = oracle_bound;
        opts.seed = seed;
        for (size_t i = 0; i < rep.cosets.size(); ++i) {
            YangianModule m = standard_tensor_module(lambda, rep.parameters[i], n);
            if (m.dim > oracle_bound) {
                status = "partial";
                continue;
            }
            std::map<DrinfeldPolys, long> predicted, actual;
            for (size_t j = 0; j < rep.cosets.size(); ++j)
                if (rep.matrix[i][j] != 0) predicted[rep.polys[j]] += rep.matrix[i][j];
            for (const auto& f : composition_factors(m, opts)) actual[f.polys] += f.multiplicity;
            check_theorem(predicted == actual, "OracleMismatch",
                          "composition factors disagree with the multiplicity table");
        }
    }
    out["oracle_status"] = status;
    return out;
}

inline json run_character(const Weight& lambda, const Weight& mu, int n,
                          const std::optional<Permutation>& w) {
    MultiplicityReport rep = multiplicity_table(lambda, mu, n);
    json out{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"n", n}};
    json arr = json::array();
    for (size_t j = 0; j < rep.cosets.size(); ++j) {
        if (w) {
            bool in_coset = std::binary_search(rep.cosets[j].coset_elements.begin(),
                                               rep.cosets[j].coset_elements.end(), *w);
            if (!in_coset) continue;
        }
        GlnCharacter ch = yangian_character(lambda, rep.cosets[j].w_min, mu, n, rep);
        arr.push_back(json{{"parameter", to_json(rep.parameters[j])},
                           {"w_LR", to_json(rep.cosets[j].w_LR)},
                           {"character", to_json(ch)},
                           {"dimension", to_json(ch.dimension())}});
    }
    require(!w || !arr.empty(), "NotAdmissible", "w is not in the admissible set");
    out["simples"] = arr;
    return out;
}

inline json factors_json(const std::vector<CompositionFactor>& fs) {
    json arr = json::array();
    for (const auto& f : fs)
        arr.push_back(json{{"drinfeld", to_json(f.polys)},
                           {"dim", f.dim},
                           {"multiplicity", f.multiplicity}});
    return arr;
}

inline json run_compose(const std::optional<std::string>& input, const std::string& lambda_csv,
                        const std::string& mu_csv, int n, unsigned seed, size_t bound) {
    CompositionOptions opts;
    opts.seed = seed;
    opts.bound = bound;
    YangianModule y;
    if (input) {
        std::ifstream in(*input);
        require(in.good(), "ParseError", "cannot open input file");
        json j = json::parse(in, nullptr, true, true);
        if (j.value("type", "") == std::string("hecke_module")) {
            require(n >= 1, "ParseError", "--n required for a hecke_module input");
            y = drinfeld_image(hecke_from_json(j), n);
        } else {
            y = yangian_from_json(j);
        }
    } else {
        require(n >= 1, "ParseError", "--n required");
        y = standard_tensor_module(parse_weight(lambda_csv), parse_weight(mu_csv), n);
    }
    return json{{"dim", y.dim}, {"factors", factors_json(composition_factors(y, opts))}};
}

inline json run_verify(const std::string& suite, unsigned seed,
                       const std::optional<std::string>& input) {
    json suites = json::array();
    auto record = [&suites](const std::string& name, long cases, long failures,
                            const json& detail) {
        suites.push_back(json{{"suite", name},
                              {"cases", cases},
                              {"failures", failures},
                              {"detail", detail}});
    };
    if (input) {
        std::ifstream in(*input);
        require(in.good(), "ParseError", "cannot open input file");
        json j = json::parse(in, nullptr, true, true);
        if (j.value("type", "") == std::string("hecke_module")) {
            HeckeModule m = hecke_from_json(j);
            auto rep = verify_hecke(m);
            record("hecke_input", 1, rep.ok ? 0 : 1, json(rep.violations));
        } else {
            YangianModule y = yangian_from_json(j);
            auto rep = verify_yangian(y, 3, 3);
            record("yangian_input", 1, rep.ok ? 0 : 1, json(rep.violations));
        }
    }
    bool all = suite == "all";
    if (all || suite == "hecke") {
        long cases = 0, failures = 0;
        json detail = json::array();
        for (const auto& [lv, mv] : std::vector<std::pair<std::vector<long>, std::vector<long>>>{
                 {{2, 1}, {1, 0}}, {{2, 2}, {1, 1}}, {{3, 2}, {1, 1}}, {{2, 2, 1}, {1, 1, 0}}}) {
            ++cases;
            auto rep = verify_hecke(standard_module(Weight::from_ints(lv), Weight::from_ints(mv)));
            if (!rep.ok) {
                ++failures;
                detail.push_back(rep.violations.front());
            }
        }
        // a mutation must be detected
        ++cases;
        HeckeModule bad = standard_module(Weight::from_ints({2, 1}), Weight::from_ints({1, 0}));
        bad.eps_action[0](0, 0) += Rational(1);
        if (verify_hecke(bad).ok) {
            ++failures;
            detail.push_back("mutation not detected");
        }
        record("hecke", cases, failures, detail);
    }
    if (all || suite == "yangian") {
        long cases = 0, failures = 0;
        json detail = json::array();
        for (int n : {2, 3}) {
            ++cases;
            YangianModule t = tensor(evaluation_module(1, Rational(0), n),
                                     evaluation_module(n == 2 ? 1 : 2, Rational(1), n));
            auto rep = verify_yangian(t, 2, 2);
            if (!rep.ok) {
                ++failures;
                detail.push_back(rep.violations.front());
            }
        }
        ++cases;
        YangianModule bad = evaluation_module(1, Rational(1), 2);
        bad.T[bad.tindex(1, 2, 1)](0, 0) += Rational(1);
        if (verify_yangian(bad, 2, 2).ok) {
            ++failures;
            detail.push_back("mutation not detected");
        }
        record("yangian", cases, failures, detail);
    }
    if (all || suite == "kl") {
        long cases = 0, failures = 0;
        for (int r = 2; r <= 4; ++r)
            for (const auto& x : all_permutations(r))
                for (const auto& w : all_permutations(r)) {
                    if (!bruhat_leq(x, w)) continue;
                    ++cases;
                    if (kl_polynomial(x, w) != kl_oracle(x, w)) ++failures;
                }
        record("kl", cases, failures, json::array());
    }
    if (all || suite == "functor") {
        long cases = 0, failures = 0;
        json detail = json::array();
        for (int n : {2, 3})
            for (long ell = 0; ell <= n + 1; ++ell) {
                ++cases;
                YangianModule img =
                    drinfeld_image(one_dim(Rational(0), Rational(ell - 1)), n);
                Rational expect = ell <= n ? binomial(n, ell) : Rational(0);
                if (Rational(static_cast<long>(img.dim)) != expect) {
                    ++failures;
                    detail.push_back("image dimension of a one-dimensional module");
                }
            }
        for (const auto& [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 2}}) {
            ++cases;
            auto rep = verify_tensor_compat(one_dim(Rational(a), Rational(a)),
                                            one_dim(Rational(b), Rational(b)), 2);
            if (!rep.ok) {
                ++failures;
                detail.push_back("tensor compatibility");
            }
        }
        {
            ++cases;
            HeckeModule k = standard_module(Weight::from_ints({2, 1}), Weight::from_ints({1, 0}));
            DrinfeldImage img(k, 2);
            if (!img.well_defined_exact() || !img.well_defined_spot_check(seed)) {
                ++failures;
                detail.push_back("well-definedness residue");
            }
        }
        record("functor", cases, failures, detail);
    }
    long total_failures = 0;
    for (const auto& s : suites) total_failures += s.at("failures").get<long>();
    return json{{"suites", suites}, {"all_passed", total_failures == 0}};
}

} // namespace cli_detail

// Deterministic serialization: nlohmann::json orders keys; the volatile
// timing goes to stderr, never into the canonical byte stream.
inline std::string emit(const RunReport& rep, const std::string& format) {
    if (format == "json") return rep.payload.dump(2) + "\n";
    // text rendering: compact single-purpose summaries
    std::ostringstream os;
    if (!rep.success) {
        os << "error [" << rep.error_code << "]: "
           << rep.payload.value("message", std::string("(no message)")) << "\n";
        return os.str();
    }
    const json& p = rep.payload;
    std::string type = p.value("type", "");
    if (p.contains("pairs")) {
        os << "Kazhdan-Lusztig table, rank " << p.at("rank").get<int>() << "\n";
        for (const auto& e : p.at("pairs"))
            os << "  P[" << e.at("x").dump() << ", " << e.at("w").dump()
               << "] = " << e.at("coeffs").dump() << " (at 1: " << e.at("at_one").get<long>()
               << ")\n";
    } else if (type == "hecke_module") {
        os << "Hecke module: ell = " << p.at("ell").get<long>() << ", dim = "
           << p.at("dim").get<size_t>() << "\n";
        if (p.contains("w_decomposition")) {
            os << "  W-types:";
            for (const auto& e : p.at("w_decomposition"))
                os << " " << e.at("partition").dump() << "x" << e.at("multiplicity").get<long>();
            os << "\n";
        }
        if (p.contains("relations_ok"))
            os << "  relations: " << (p.at("relations_ok").get<bool>() ? "ok" : "VIOLATED")
               << "\n";
    } else if (type == "yangian_module") {
        os << "Yangian module: n = " << p.at("n").get<int>() << ", dim = "
           << p.at("dim").get<size_t>() << ", degree bound = " << p.at("degree_bound").get<long>()
           << "\n";
        if (p.contains("highest_weights"))
            for (const auto& h : p.at("highest_weights"))
                os << "  highest weight, Drinfeld data " << h.at("drinfeld").dump() << "\n";
    } else if (type == "multiplicity_report") {
        os << "Multiplicity table for lambda = " << p.at("lambda").dump()
           << ", mu = " << p.at("mu").dump() << ", n = " << p.at("n").get<int>() << "\n";
        for (const auto& row : p.at("multiplicities")) os << "  " << row.dump() << "\n";
        os << "  oracle: " << p.value("oracle_status", "unknown") << "\n";
    } else if (p.contains("factors")) {
        os << "Composition factors (dim " << p.at("dim").get<size_t>() << ")\n";
        for (const auto& f : p.at("factors"))
            os << "  dim " << f.at("dim").get<size_t>() << " x" << f.at("multiplicity").get<long>()
               << "  Q = " << f.at("drinfeld").dump() << "\n";
    } else if (p.contains("suites")) {
        for (const auto& s : p.at("suites"))
            os << "suite " << s.at("suite").get<std::string>() << ": "
               << (s.at("failures").get<long>() == 0 ? "pass" : "FAIL") << " ("
               << s.at("cases").get<long>() << " cases)\n";
        os << (p.at("all_passed").get<bool>() ? "all suites passed" : "FAILURES PRESENT") << "\n";
    } else if (p.contains("simples")) {
        for (const auto& s : p.at("simples"))
            os << "simple at " << s.at("parameter").dump() << ": dim " << s.at("dimension").dump()
               << ", character " << s.at("character").at("schur").dump() << "\n";
    } else {
        os << p.dump(2) << "\n";
    }
    return os.str();
}

inline RunReport run_command(const std::vector<std::string>& args) {
    RunReport rep;
    CLI::App app{"exact computations with Yangian standard modules"};
    app.require_subcommand(1);

    std::string lambda_csv, mu_csv, w_csv, format = "text", suite = "all", input;
    int rank = 3, n = 2;
    unsigned seed = 1;
    size_t oracle_bound = 64;
    bool with_oracle = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", seed);
    };
    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials of S_r");
    kl->add_option("--rank", rank)->required();
    add_common(kl);
    CLI::App* standard = app.add_subcommand("standard", "standard Hecke module K(lambda, mu)");
    standard->add_option("--lambda", lambda_csv)->required();
    standard->add_option("--mu", mu_csv)->required();
    add_common(standard);
    CLI::App* dimage = app.add_subcommand("dimage", "image of K(lambda, mu) under the functor");
    dimage->add_option("--lambda", lambda_csv)->required();
    dimage->add_option("--mu", mu_csv)->required();
    dimage->add_option("--n", n)->required();
    add_common(dimage);
    CLI::App* mtable = app.add_subcommand("mtable", "multiplicity table with inversion");
    mtable->add_option("--lambda", lambda_csv)->required();
    mtable->add_option("--mu", mu_csv)->required();
    mtable->add_option("--n", n)->required();
    mtable->add_flag("--oracle", with_oracle, "cross-check rows against composition factors");
    mtable->add_option("--oracle-bound", oracle_bound);
    add_common(mtable);
    CLI::App* character = app.add_subcommand("character", "simple characters in the Schur basis");
    character->add_option("--lambda", lambda_csv)->required();
    character->add_option("--mu", mu_csv)->required();
    character->add_option("--n", n)->required();
    character->add_option("--w", w_csv);
    add_common(character);
    CLI::App* compose = app.add_subcommand("compose", "composition factors of a module");
    compose->add_option("--lambda", lambda_csv);
    compose->add_option("--mu", mu_csv);
    compose->add_option("--n", n);
    compose->add_option("--input", input);
    compose->add_option("--oracle-bound", oracle_bound);
    add_common(compose);
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"hecke", "yangian", "kl", "functor", "all"}));
    verify->add_option("--input", input);
    add_common(verify);

    auto t0 = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        rep.seed = seed;
        using namespace cli_detail;
        if (*kl) {
            rep.payload = run_kl(rank);
        } else if (*standard) {
            rep.payload = run_standard(parse_weight(lambda_csv), parse_weight(mu_csv));
        } else if (*dimage) {
            rep.payload = run_dimage(parse_weight(lambda_csv), parse_weight(mu_csv), n);
        } else if (*mtable) {
            rep.payload = run_mtable(parse_weight(lambda_csv), parse_weight(mu_csv), n,
                                     with_oracle, oracle_bound, seed);
        } else if (*character) {
            std::optional<Permutation> w;
            if (!w_csv.empty()) w = parse_permutation(w_csv);
            rep.payload = run_character(parse_weight(lambda_csv), parse_weight(mu_csv), n, w);
        } else if (*compose) {
            std::optional<std::string> in;
            if (!input.empty()) in = input;
            rep.payload = run_compose(in, lambda_csv, mu_csv, n, seed, oracle_bound);
        } else if (*verify) {
            std::optional<std::string> in;
            if (!input.empty()) in = input;
            rep.payload = run_verify(suite, seed, in);
            if (!rep.payload.at("all_passed").get<bool>()) {
                rep.success = false;
                rep.error_code = "VerificationFailed";
                rep.exit_code = 4;
            }
        }
        rep.payload["seed"] = seed;
    } catch (const CLI::ParseError& e) {
        rep.success = false;
        rep.error_code = "ParseError";
        rep.exit_code = 2;
        rep.payload = json{{"message", e.what()}};
    } catch (const theorem_violation& e) {
        rep.success = false;
        rep.error_code = e.code();
        rep.exit_code = 4;
        rep.payload = json{{"message", e.what()}};
    } catch (const domain_error& e) {
        rep.success = false;
        rep.error_code = e.code() == "ParseError" ? "ParseError" : e.code();
        rep.exit_code = e.code() == "ParseError" ? 2 : 3;
        rep.payload = json{{"message", e.what()}};
    } catch (const std::exception& e) {
        rep.success = false;
        rep.error_code = "Internal";
        rep.exit_code = 4;
        rep.payload = json{{"message", e.what()}};
    }
    rep.timing_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count());
    if (rep.success) rep.payload["error_code"] = nullptr;
    else rep.payload["error_code"] = rep.error_code;
    return rep;
}

} // namespace drinfeld
