// sicforge command line: group censuses, Clifford synthesis, SIC
// verification and classification, and fiducial search, with JSON output on
// stdout. Identical invocations produce byte-identical output.

#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "sicforge/json_io.hpp"
#include "sicforge/parallel.hpp"

namespace {

using namespace sicforge;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

double angle_of(double value, bool pi_units) {
    return pi_units ? value * std::numbers::pi : value;
}

SicCandidate load_sic(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j = Json::parse(in);
    return sic_from_json(j);
}

GroupKind parse_group_kind(const std::string& name) {
    if (name == "sl") return GroupKind::SL;
    if (name == "esl") return GroupKind::ESL;
    if (name == "sl-affine") return GroupKind::SLAffine;
    if (name == "esl-affine") return GroupKind::ESLAffine;
    throw CLI::ValidationError("--group", "unknown group kind: " + name);
}

int run_classes(int p, const std::string& group, bool csv) {
    const GroupKind kind = parse_group_kind(group);
    if (kind == GroupKind::ESL || kind == GroupKind::ESLAffine) {
        // Only the det = +1 kinds have tabulated class data; report sizes.
        const auto elements = enumerate_group(PrimeModulus(p), kind);
        emit(Json{{"p", p}, {"group", group}, {"group_order", elements.size()}});
        return kExitOk;
    }
    const auto census = class_census(PrimeModulus(p), kind);
    if (csv) {
        // Lossy tabular projection of the JSON output.
        std::cout << "label,order,size\n";
        for (const auto& [label, info] : census) {
            std::cout << label.str() << "," << info.element_order << "," << info.size << "\n";
        }
        return kExitOk;
    }
    emit(census_to_json(p, group, census));
    return kExitOk;
}

int run_clifford(int p, std::vector<int> f_entries, std::vector<int> chi, bool spectrum,
                 bool verify) {
    const CliffordGroup cg(p);
    if (spectrum) {
        Json rows = Json::array();
        for (const auto& [label, mults] : cg.spectrum_census()) {
            rows.push_back(Json{{"label", label.str()}, {"multiplicities", mults}});
        }
        emit(Json{{"p", p}, {"classes", rows}});
        return kExitOk;
    }
    const Mat2 f = Mat2::from_entries(f_entries[0], f_entries[1], f_entries[2], f_entries[3], p);
    const AffineSymplectic label{f, {mod_reduce(chi[0], p), mod_reduce(chi[1], p)}};
    const CliffordOp op = cg.synthesize(label, verify);
    Json j = op_to_json(op);
    j["conjugation_law_deviation"] = canon12(cg.conjugation_law_deviation(op));
    emit(j);
    return kExitOk;
}

int run_hw(int p) {
    const CliffordGroup cg(p);
    emit(hw_report_to_json(p, analyze_hw_subgroups(cg)));
    return kExitOk;
}

int run_sic_verify(const std::string& file, double tol) {
    const SicCandidate sic = load_sic(file);
    const SicCheck check = verify_sic(sic, tol);
    emit(Json{{"dim", sic.dim},
              {"ok", check.ok},
              {"max_fidelity_dev", canon12(check.max_fidelity_dev)},
              {"max_completeness_dev", canon12(check.max_completeness_dev)}});
    return check.ok ? kExitOk : kExitVerificationFailure;
}

SicCandidate sic_from_cli(const std::string& file, double t, bool has_t, bool pi_units) {
    if (!file.empty()) return load_sic(file);
    if (!has_t) throw CLI::RequiredError("--file or --t");
    const HWGroup hw(3);
    return {3, hw.sic_from_fiducial(family_fiducial(angle_of(t, pi_units)))};
}

int run_sic_symmetry(const std::string& file, double t, bool has_t, bool pi_units,
                     bool extended) {
    const SicCandidate sic = sic_from_cli(file, t, has_t, pi_units);
    if (!verify_sic(sic, 1e-8).ok) {
        std::cerr << "sic-symmetry: input does not verify as a SIC\n";
        return kExitVerificationFailure;
    }
    if (sic.dim == 2) {
        const auto table = qubit_clifford_group(extended);
        const auto report = symmetry_group(sic, table);
        emit(symmetry_to_json(report, table, nullptr));
        return kExitOk;
    }
    const CliffordGroup cg(sic.dim);
    const auto table = cg.enumerate(extended);
    const auto report = symmetry_group(sic, table);
    const auto census = list_hw_subgroups(cg);
    const auto content = hw_content(report, table, census);
    emit(symmetry_to_json(report, table, &content));
    return kExitOk;
}

int run_sic_phases(const std::string& file, double t, bool has_t, bool pi_units, bool csv) {
    const SicCandidate sic = sic_from_cli(file, t, has_t, pi_units);
    const PhaseProfile profile = phase_profile(sic);
    if (csv) {
        std::cout << "value,multiplicity\n";
        char buf[64];
        for (const auto& e : profile.phases) {
            std::snprintf(buf, sizeof(buf), "%.12g,%d\n", canon12(e.value), e.multiplicity);
            std::cout << buf;
        }
        return kExitOk;
    }
    emit(phase_profile_to_json(profile));
    return kExitOk;
}

int count_hidden(double t, const CliffordGroup& cg) {
    if (orbit_kind(t) != OrbitKind::Generic) return 0;
    std::vector<SicCandidate> hidden;
    for (auto pattern : {RegroupPattern::A, RegroupPattern::B}) {
        for (int k1 = 0; k1 < 3; ++k1) {
            for (int pair = 1; pair <= 4; ++pair) {
                SicCandidate cand = pair_regroup(t, pattern, k1, pair, cg);
                bool fresh = true;
                for (const auto& known : hidden) {
                    if (proj_set_equal(cand.vectors, known.vectors)) {
                        fresh = false;
                        break;
                    }
                }
                if (fresh) hidden.push_back(std::move(cand));
            }
        }
    }
    return static_cast<int>(hidden.size());
}

int run_dim3_classify(double t, bool pi_units) {
    const double angle = angle_of(t, pi_units);
    const CliffordGroup cg(3);
    const FamilyPoint point = canonicalize_t(angle);
    const SicCandidate sic{3, cg.hw().sic_from_fiducial(family_fiducial(angle))};
    const double phi_min = phase_profile(sic).phi_min;
    const OrbitFacts facts = orbit_facts(orbit_kind(angle));
    emit(atlas_record_to_json(angle, point, phi_min, facts.sics_on_orbit, count_hidden(angle, cg)));
    return kExitOk;
}

int run_dim3_regroup(double t, bool pi_units, bool census, const std::string& pattern, int k1,
                     int pair) {
    const double angle = angle_of(t, pi_units);
    const CliffordGroup cg(3);
    if (census) {
        const RegroupCensus result = regroup_census(angle, cg);
        emit(Json{{"t", canon12(angle)},
                  {"n_fiducials", result.n_fiducials},
                  {"n_orbit_sics", result.n_orbit_sics},
                  {"n_hidden", result.n_hidden}});
        return kExitOk;
    }
    if (pattern != "A" && pattern != "B") {
        throw CLI::ValidationError("--pattern", "must be A or B");
    }
    const SicCandidate sic = pair_regroup(
        angle, pattern == "A" ? RegroupPattern::A : RegroupPattern::B, k1, pair, cg);
    Json j = sic_to_json(sic);
    j["equivalent_class_rep"] = canon12(canonicalize_t(angle / 3.0).class_rep);
    emit(j);
    return kExitOk;
}

int run_search(const SearchConfig& cfg) {
    const SearchResult result = search(cfg);
    emit(search_result_to_json(cfg, result));
    return result.converged ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIC-POVMs and Clifford groups in prime dimensions"};
    app.require_subcommand(1);

    // classes
    auto* classes = app.add_subcommand("classes", "Conjugacy class census");
    int classes_p = 3;
    std::string classes_group = "sl";
    classes->add_option("--p", classes_p, "prime dimension")->required();
    classes->add_option("--group", classes_group, "sl | esl | sl-affine | esl-affine");
    bool classes_csv = false;
    classes->add_flag("--csv", classes_csv, "tabular projection instead of JSON");

    // clifford
    auto* clifford = app.add_subcommand("clifford", "Synthesize a Clifford operator");
    int clifford_p = 3;
    std::vector<int> clifford_f{1, 0, 0, 1};
    std::vector<int> clifford_chi{0, 0};
    bool clifford_spectrum = false;
    bool clifford_no_verify = false;
    clifford->add_option("--p", clifford_p, "prime dimension")->required();
    clifford->add_option("--F", clifford_f, "matrix entries a,b,c,d")->expected(4);
    clifford->add_option("--chi", clifford_chi, "displacement part x,y")->expected(2);
    clifford->add_flag("--spectrum-census", clifford_spectrum,
                       "eigenphase degeneracy pattern per conjugacy class");
    clifford->add_flag("--no-verify", clifford_no_verify, "skip the conjugation-law check");

    // hw
    auto* hw = app.add_subcommand("hw", "HW subgroup census of the Clifford group");
    int hw_p = 3;
    hw->add_option("--p", hw_p, "prime dimension")->required();

    // sic-verify
    auto* verify = app.add_subcommand("sic-verify", "Verify a SIC from a JSON file");
    std::string verify_file;
    double verify_tol = 1e-9;
    verify->add_option("--file", verify_file, "SIC JSON file")->required();
    verify->add_option("--tol", verify_tol, "verification tolerance");

    // sic-symmetry
    auto* symmetry = app.add_subcommand("sic-symmetry", "Symmetry group within the Clifford group");
    std::string symmetry_file;
    double symmetry_t = 0.0;
    bool symmetry_extended = false;
    bool symmetry_pi = false;
    auto* symmetry_t_opt = symmetry->add_option("--t", symmetry_t, "family parameter (d = 3)");
    symmetry->add_option("--file", symmetry_file, "SIC JSON file");
    symmetry->add_flag("--extended", symmetry_extended, "include antiunitary operations");
    symmetry->add_flag("--pi-units", symmetry_pi, "interpret --t as a multiple of pi");

    // sic-phases
    auto* phases = app.add_subcommand("sic-phases", "Bargmann phase profile");
    std::string phases_file;
    double phases_t = 0.0;
    bool phases_pi = false;
    auto* phases_t_opt = phases->add_option("--t", phases_t, "family parameter (d = 3)");
    phases->add_option("--file", phases_file, "SIC JSON file");
    phases->add_flag("--pi-units", phases_pi, "interpret --t as a multiple of pi");
    bool phases_csv = false;
    phases->add_flag("--csv", phases_csv, "tabular projection instead of JSON");

    // dim3-classify
    auto* classify = app.add_subcommand("dim3-classify", "Atlas record for a family parameter");
    double classify_t = 0.0;
    bool classify_pi = false;
    classify->add_option("--t", classify_t, "family parameter")->required();
    classify->add_flag("--pi-units", classify_pi, "interpret --t as a multiple of pi");

    // dim3-regroup
    auto* regroup = app.add_subcommand("dim3-regroup", "Regrouped (hidden) SICs");
    double regroup_t = 0.0;
    bool regroup_pi = false;
    bool regroup_census_flag = false;
    std::string regroup_pattern = "A";
    int regroup_k1 = 0;
    int regroup_pair = 1;
    regroup->add_option("--t", regroup_t, "family parameter")->required();
    regroup->add_flag("--pi-units", regroup_pi, "interpret --t as a multiple of pi");
    regroup->add_flag("--census", regroup_census_flag, "exhaustive search over the orbit fiducials");
    regroup->add_option("--pattern", regroup_pattern, "A or B");
    regroup->add_option("--k1", regroup_k1, "X offset in [0, 2]");
    regroup->add_option("--pair", regroup_pair, "pair index in [1, 4]");

    // search
    auto* search_cmd = app.add_subcommand("search", "Numerical fiducial search");
    SearchConfig cfg;
    search_cmd->add_option("--dim", cfg.dim, "prime dimension")->required();
    search_cmd->add_option("--restarts", cfg.restarts, "number of restarts");
    search_cmd->add_option("--seed", cfg.seed, "random seed");
    search_cmd->add_option("--target", cfg.target, "deviation target");
    search_cmd->add_option("--max-iters", cfg.max_iters, "iteration cap per restart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classes) return run_classes(classes_p, classes_group, classes_csv);
        if (*clifford) {
            return run_clifford(clifford_p, clifford_f, clifford_chi, clifford_spectrum,
                                !clifford_no_verify);
        }
        if (*hw) return run_hw(hw_p);
        if (*verify) return run_sic_verify(verify_file, verify_tol);
        if (*symmetry) {
            return run_sic_symmetry(symmetry_file, symmetry_t, symmetry_t_opt->count() > 0,
                                    symmetry_pi, symmetry_extended);
        }
        if (*phases) {
            return run_sic_phases(phases_file, phases_t, phases_t_opt->count() > 0, phases_pi,
                                  phases_csv);
        }
        if (*classify) return run_dim3_classify(classify_t, classify_pi);
        if (*regroup) {
            return run_dim3_regroup(regroup_t, regroup_pi, regroup_census_flag, regroup_pattern,
                                    regroup_k1, regroup_pair);
        }
        if (*search_cmd) return run_search(cfg);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const NotASic& e) {
        std::cerr << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const NotFiducial& e) {
        std::cerr << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
