// Command-line front end: check axiom systems, run the constructive
// theorems, verify full pipelines, and search small coefficient spaces.
//
// Exit status: 0 all checks passed / construction verified, 1 a checked
// identity failed (violations printed on stdout), 2 precondition or
// hypothesis failure, 3 input error.

#include <bihom/bihom.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bihom;

namespace {

struct CommonFlags {
    std::string map_name;          // operator name for derivation/RB/star ids
    std::string tau, sigma;        // twisting maps for `check derivation`
    std::string tensor = "r";      // coefficient tensor name
    std::string map_a = "At";      // first Yau twisting map
    std::string map_b = "Bt";      // second Yau twisting map
    std::string eta;               // extra twist for dend-from-rb ("" = id)
    unsigned p = 1, r = 1;         // exponents for gd-cor-p-r
    bool trust = false;
};

std::string bracket_or_mul(const StructureBundle& b) {
    return b.has_product("bracket") ? "bracket" : "mul";
}

std::string name_or(const std::string& given, const std::string& fallback) {
    return given.empty() ? fallback : given;
}

RMatrix tensor_r(const StructureBundle& b, const std::string& name) {
    return make_rmatrix(b, b.tensor(name));
}

CheckReport run_check(const std::string& kind, const StructureBundle& b,
                      const CommonFlags& f) {
    if (kind == "assoc") return check_bihom_associative(b);
    if (kind == "coassoc") return check_bihom_coassociative(b);
    if (kind == "commutative") return check_bihom_commutative(b);
    if (kind == "prelie") return check_left_bihom_prelie(b);
    if (kind == "novikov") return check_bihom_novikov(b);
    if (kind == "lie-left") return check_bihom_lie(b, Side::Left, bracket_or_mul(b));
    if (kind == "lie-right") return check_bihom_lie(b, Side::Right, bracket_or_mul(b));
    if (kind == "leibniz-left")
        return check_bihom_leibniz(b, Side::Left, bracket_or_mul(b));
    if (kind == "leibniz-right")
        return check_bihom_leibniz(b, Side::Right, bracket_or_mul(b));
    if (kind == "dendriform") return check_bihom_dendriform(b);
    if (kind == "novikov-poisson") return check_novikov_poisson(b);
    if (kind == "module-left" || kind == "module-right" || kind == "bimodule") {
        ModuleData md = make_regular_bimodule(b.product("mul"), b.map("alpha"),
                                              b.map("beta"));
        if (kind == "module-left") return check_module(b, md, Side::Left);
        if (kind == "module-right") return check_module(b, md, Side::Right);
        return check_bimodule(b, md);
    }
    if (kind == "derivation")
        return check_derivation(b, name_or(f.map_name, "D"), f.tau, f.sigma);
    if (kind == "inf-bialgebra") return validate_inf_bialgebra(b);
    if (kind == "rota-baxter")
        return check_rota_baxter(b, name_or(f.map_name, "R"));
    if (kind == "aybe") return check_aybe(b, tensor_r(b, f.tensor));
    if (kind == "centrality") return check_centrality(b, tensor_r(b, f.tensor));
    throw InvariantViolation("unknown check kind '" + kind + "'");
}

int report_outcome(const CheckReport& report, const std::string& label) {
    if (report.passed) {
        std::cout << "ok: " << label << "\n";
        return 0;
    }
    for (const auto& v : report.violations) std::cout << v.str() << "\n";
    return 1;
}

StructureBundle with_rb_operator(const StructureBundle& b, const RMatrix& rm,
                                 bool verify) {
    StructureBundle out = b;
    out.maps["R"] = rb_from_r(b, rm, verify);
    out.kind = "rota-baxter";
    out.provenance.push_back("operator via rb-from-r");
    return out;
}

ConstructionResult run_construct(const std::string& id, const StructureBundle& b,
                                 const CommonFlags& f) {
    bool verify = !f.trust;
    if (id == "yau-assoc")
        return yau_twist(b, TwistKind::Assoc, f.map_a, f.map_b, verify);
    if (id == "yau-commutative")
        return yau_twist(b, TwistKind::Commutative, f.map_a, f.map_b, verify);
    if (id == "yau-novikov")
        return yau_twist(b, TwistKind::Novikov, f.map_a, f.map_b, verify);
    if (id == "yau-novikov-poisson")
        return yau_twist(b, TwistKind::NovikovPoisson, f.map_a, f.map_b, verify);
    if (id == "yau-inf-bialgebra")
        return yau_twist(b, TwistKind::InfBialgebra, f.map_a, f.map_b, verify);
    if (id == "gd-general") return gelfand_dorfman(b, verify);
    if (id == "gd-cor-p-r") return gd_cor_p_r(b, f.p, f.r, verify);
    if (id == "gd-commhom") return gd_commhom(b, verify);
    if (id == "np-from-gd")
        return np_from_gd(b, name_or(f.map_name, "D"), verify);
    if (id == "np-morphism-pair") return np_morphism_pair(b, name_or(f.map_name, "D"), verify);
    if (id == "lie-star-left")
        return lie_star(b, Side::Left, name_or(f.map_name, "f"));
    if (id == "lie-star-right")
        return lie_star(b, Side::Right, name_or(f.map_name, "f"));
    if (id == "prelie-from-dend") return prelie_from_dendriform(b, verify);
    if (id == "dend-from-rb") return dendriform_from_rb(b, f.eta, verify);
    if (id == "coboundary")
        return coboundary_bialgebra(b, tensor_r(b, f.tensor), verify);
    if (id == "inf-prelie") return inf_prelie(b, verify);
    if (id == "rb-from-r")
        return ConstructionResult{
            with_rb_operator(b, tensor_r(b, f.tensor), verify), "rb-from-r"};
    throw InvariantViolation("unknown construction id '" + id + "'");
}

int run_verify(const std::string& id, const StructureBundle& b,
               const CommonFlags& f) {
    auto outcome = [&](const CheckReport& report) {
        if (report.passed) {
            std::cout << "pass: " << id << "\n";
            return 0;
        }
        for (const auto& v : report.violations)
            std::cout << "fail: " << v.str() << "\n";
        return 1;
    };
    if (id == "inf-validate") return outcome(validate_inf_bialgebra(b));
    if (id == "inf-delta-deriv") return outcome(delta_is_bimodule_derivation(b));
    if (id == "inf-mu-delta") {
        mu_delta_operator(b, true);
        std::cout << "pass: " << id << "\n";
        return 0;
    }
    if (id == "inf-star-forms") return outcome(bihomify_equal_formula(b));
    if (id == "qt-char")
        return outcome(check_quasitriangular_characterization(
            b, tensor_r(b, f.tensor)));
    if (id == "aybe") return outcome(check_aybe(b, tensor_r(b, f.tensor)));
    if (id == "centrality")
        return outcome(check_centrality(b, tensor_r(b, f.tensor)));
    if (id == "coincidence")
        return outcome(coincidence_check(b, tensor_r(b, f.tensor)));
    if (id == "lie-star-left" || id == "lie-star-right") {
        Side side = id == "lie-star-left" ? Side::Left : Side::Right;
        std::string fn = name_or(f.map_name, "f");
        CheckReport conditions = lie_star_conditions(b, side, fn);
        StructureBundle star = lie_star(b, side, fn).bundle;
        CheckReport novikov = check_bihom_novikov(star);
        int bad = 0;
        auto line = [&](const CheckReport& rep, const std::string& label) {
            if (rep.passed) {
                std::cout << "pass: " << label << "\n";
                return;
            }
            for (const auto& v : rep.violations)
                std::cout << "fail: " << v.str() << "\n";
            bad = 1;
        };
        line(conditions, id + " conditions");
        line(novikov, "novikov (star product)");
        return bad;
    }
    // Everything else is a construction id: run it in verify mode, where the
    // hypotheses and the conclusion are both enforced.
    CommonFlags strict = f;
    strict.trust = false;
    ConstructionResult result = run_construct(id, b, strict);
    std::cout << "pass: " << result.theorem_id << "\n";
    return 0;
}

FieldDescriptor parse_field(const std::string& text) {
    if (text == "rational" || text == "q") return FieldDescriptor::rationals();
    if (text.size() > 2 && text.compare(0, 2, "gf") == 0) {
        long long p = std::stoll(text.substr(2));
        return FieldDescriptor::prime(p);
    }
    throw InvariantViolation("unknown field '" + text +
                             "' (expected rational or gf<p>)");
}

struct SearchFlags {
    std::string mode;
    std::string base_path;
    std::string out_dir = "search-out";
    std::string field_text;
    std::size_t dim = 0;
    std::string kind;
    std::string tau, sigma;
    std::vector<std::string> commutes_with;
    bool invertible = false;
    bool comorphism = false;
    bool randomized = false;
    std::uint64_t seed = 0;
    std::size_t limit = 0;
    std::size_t max_candidates = std::size_t{1} << 24;
};

std::string solution_name(std::size_t k) {
    std::ostringstream ss;
    ss << "solution_" << std::setw(5) << std::setfill('0') << k << ".bundle";
    return ss.str();
}

int run_search(const SearchFlags& sf, const CommonFlags& cf) {
    StructureBundle base;
    bool have_base = !sf.base_path.empty();
    if (have_base) {
        base = load_bundle(sf.base_path);
        if (!sf.field_text.empty() && parse_field(sf.field_text) != base.field)
            throw InvariantViolation("--field does not match the base bundle");
        if (sf.dim && sf.dim != base.dim)
            throw InvariantViolation("--dim does not match the base bundle");
    }

    std::vector<StructureBundle> results;
    if (sf.mode == "aybe" || sf.mode == "central") {
        if (!have_base)
            throw InvariantViolation("search " + sf.mode +
                                     " needs --product FILE");
        RSearchMode mode =
            sf.mode == "aybe" ? RSearchMode::Aybe : RSearchMode::Central;
        std::vector<RMatrix> found =
            enumerate_r(base, mode, sf.max_candidates);
        if (sf.limit && found.size() > sf.limit) found.resize(sf.limit);
        for (std::size_t k = 0; k < found.size(); ++k) {
            StructureBundle out = base;
            out.tensors["r"] = found[k].r;
            out.provenance.push_back("search " + sf.mode + " solution " +
                                     std::to_string(k));
            results.push_back(std::move(out));
        }
    } else if (sf.mode == "morphisms") {
        if (!have_base)
            throw InvariantViolation("search morphisms needs --product FILE");
        MorphismConstraints mc;
        mc.commutes_with = sf.commutes_with;
        mc.invertible = sf.invertible;
        mc.coalgebra_morphism = sf.comorphism;
        mc.max_candidates = sf.max_candidates;
        mc.max_results = sf.limit;
        std::vector<LinearOperator> found = enumerate_morphisms(base, mc);
        for (std::size_t k = 0; k < found.size(); ++k) {
            StructureBundle out = base;
            out.maps["found"] = found[k];
            out.provenance.push_back("search morphisms solution " +
                                     std::to_string(k));
            results.push_back(std::move(out));
        }
    } else if (sf.mode == "derivations") {
        if (!have_base)
            throw InvariantViolation("search derivations needs --product FILE");
        std::vector<LinearOperator> found =
            derivation_space(base, sf.tau, sf.sigma);
        if (sf.limit && found.size() > sf.limit) found.resize(sf.limit);
        for (std::size_t k = 0; k < found.size(); ++k) {
            StructureBundle out = base;
            out.maps["D"] = found[k];
            out.provenance.push_back("search derivations basis element " +
                                     std::to_string(k));
            results.push_back(std::move(out));
        }
    } else if (sf.mode == "products") {
        ScanSpec spec;
        spec.field = sf.field_text.empty() ? FieldDescriptor::prime(2)
                                           : parse_field(sf.field_text);
        spec.dim = sf.dim ? sf.dim : 2;
        if (have_base) {
            spec.field = base.field;
            spec.dim = base.dim;
            spec.alpha = base.map("alpha");
            spec.beta = base.map("beta");
        }
        spec.randomized = sf.randomized;
        spec.seed = sf.seed;
        spec.max_candidates = sf.max_candidates;
        spec.max_results = sf.limit;
        if (!sf.kind.empty()) {
            std::string kind = sf.kind;
            CommonFlags filter_flags = cf;
            spec.filter = [kind, filter_flags](const StructureBundle& cand) {
                return run_check(kind, cand, filter_flags).passed;
            };
        }
        results = scan_products(spec);
        for (std::size_t k = 0; k < results.size(); ++k)
            results[k].provenance.push_back("search products solution " +
                                            std::to_string(k));
    } else {
        throw InvariantViolation("unknown search mode '" + sf.mode + "'");
    }

    std::filesystem::create_directories(sf.out_dir);
    std::ofstream manifest(std::filesystem::path(sf.out_dir) / "manifest.txt");
    if (!manifest)
        throw InvariantViolation("cannot write manifest in '" + sf.out_dir + "'");
    manifest << "mode " << sf.mode << "\n";
    if (have_base) manifest << "base " << sf.base_path << "\n";
    manifest << "count " << results.size() << "\n";
    for (std::size_t k = 0; k < results.size(); ++k) {
        std::string name = solution_name(k);
        save_bundle(results[k],
                    (std::filesystem::path(sf.out_dir) / name).string());
        manifest << name << "\n";
    }
    std::cout << "found " << results.size() << " solution"
              << (results.size() == 1 ? "" : "s") << " in " << sf.out_dir
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checker and constructor for BiHom-type algebras"};
    app.require_subcommand(1);

    CommonFlags cf;
    SearchFlags sf;
    std::string kind, id, path, out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--map", cf.map_name,
                        "operator name (derivation D, Rota-Baxter R, star f)");
        cmd->add_option("--tau", cf.tau, "right twist of the derivation rule");
        cmd->add_option("--sigma", cf.sigma, "left twist of the derivation rule");
        cmd->add_option("--tensor", cf.tensor, "coefficient tensor name");
        cmd->add_option("--map-a", cf.map_a, "first twisting map");
        cmd->add_option("--map-b", cf.map_b, "second twisting map");
        cmd->add_option("--eta", cf.eta, "extra twisting map for dend-from-rb");
        cmd->add_option("--p", cf.p, "alpha exponent for gd-cor-p-r");
        cmd->add_option("--r", cf.r, "beta exponent for gd-cor-p-r");
    };

    CLI::App* check = app.add_subcommand("check", "Check one axiom system");
    check->add_option("kind", kind, "axiom system")->required();
    check->add_option("file", path, "bundle file")->required();
    add_common(check);

    CLI::App* construct =
        app.add_subcommand("construct", "Run a constructive theorem");
    construct->add_option("id", id, "theorem id")->required();
    construct->add_option("file", path, "bundle file")->required();
    construct->add_option("-o,--out", out_path, "output bundle")->required();
    construct->add_flag("--trust", cf.trust,
                        "skip hypothesis and conclusion verification");
    add_common(construct);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run a hypothesis-construction-conclusion pipeline");
    verify->add_option("id", id, "theorem or pipeline id")->required();
    verify->add_option("file", path, "bundle file")->required();
    add_common(verify);

    CLI::App* search =
        app.add_subcommand("search", "Enumerate solutions over a finite field");
    search->add_option("mode", sf.mode,
                       "aybe, central, morphisms, derivations, or products")
        ->required();
    search->add_option("--product", sf.base_path, "base bundle file");
    search->add_option("-o,--out", sf.out_dir, "output directory");
    search->add_option("--field", sf.field_text, "rational or gf<p>");
    search->add_option("--dim", sf.dim, "dimension of the scan");
    search->add_option("--kind", sf.kind, "filter kind for product scans");
    search->add_option("--tau", sf.tau, "right twist for derivation search");
    search->add_option("--sigma", sf.sigma, "left twist for derivation search");
    search->add_option("--commutes-with", sf.commutes_with,
                       "map names the morphisms must commute with");
    search->add_flag("--invertible", sf.invertible, "keep invertible maps only");
    search->add_flag("--comorphism", sf.comorphism,
                     "require coalgebra morphisms too");
    search->add_flag("--randomized", sf.randomized,
                     "sample instead of exhaustive scan");
    search->add_option("--seed", sf.seed, "seed for randomized scans");
    search->add_option("--limit", sf.limit, "cap on reported solutions");
    search->add_option("--max-candidates", sf.max_candidates,
                       "ceiling on the scanned space");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (check->parsed()) {
            StructureBundle b = load_bundle(path);
            return report_outcome(run_check(kind, b, cf), kind);
        }
        if (construct->parsed()) {
            StructureBundle b = load_bundle(path);
            ConstructionResult result = run_construct(id, b, cf);
            save_bundle(result.bundle, out_path);
            std::cout << "ok: " << result.theorem_id << " -> " << out_path
                      << "\n";
            return 0;
        }
        if (verify->parsed()) {
            StructureBundle b = load_bundle(path);
            return run_verify(id, b, cf);
        }
        return run_search(sf, cf);
    } catch (const Singular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingComponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAMorphism& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonCommutingMaps& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CentralityFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AybeFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvarianceFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
