// gz: command-line front end for the Gelfand-Zeitlin toolkit.
//
// Exit codes: 0 ok/true, 1 false, 2 parse error, 3 numeric failure,
// 4 internal-consistency alarm (sreg criteria disagree).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gz/borel_search.hpp"
#include "gz/flows.hpp"
#include "gz/gzmap.hpp"
#include "gz/hessenberg.hpp"
#include "gz/io.hpp"
#include "gz/korbits.hpp"
#include "gz/nilfiber.hpp"
#include "gz/rng.hpp"
#include "gz/sreg.hpp"

namespace {

struct RunConfig {
    std::uint64_t seed = 12345;
    gz::Tolerance tol;
    std::string format = "pretty";
    std::string output;
    int parallel = 1;
};

std::string fmt_complex(gz::cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string pretty_levels(const std::vector<std::vector<gz::cplx>>& levels, const std::string& label) {
    std::ostringstream os;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        os << label << " " << (i + 1) << ":";
        for (const auto& v : levels[i]) os << " " << fmt_complex(v);
        os << "\n";
    }
    return os.str();
}

std::string pretty_matrix(const gz::ComplexMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.n(); ++r) {
        for (int c = 0; c < m.n(); ++c) os << (c ? "  " : "") << fmt_complex(m(r, c));
        os << "\n";
    }
    return os.str();
}

/// csv: tables use header/rows; everything else degrades to key,value lines.
std::string json_to_csv(const gz::json& j) {
    std::ostringstream os;
    if (j.contains("rows") && j["rows"].is_array()) {
        if (j.contains("header")) {
            const auto& h = j["header"];
            for (std::size_t k = 0; k < h.size(); ++k) os << (k ? "," : "") << h[k].get<std::string>();
            os << "\n";
        }
        for (const auto& row : j["rows"]) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                os << (k ? "," : "");
                if (row[k].is_string())
                    os << row[k].get<std::string>();
                else
                    os << row[k].dump();
            }
            os << "\n";
        }
        return os.str();
    }
    for (auto& [key, value] : j.items()) os << key << "," << value.dump() << "\n";
    return os.str();
}

void emit(const RunConfig& cfg, const gz::json& doc, const std::string& pretty) {
    std::ostringstream os;
    if (cfg.format == "json")
        os << doc.dump(2) << "\n";
    else if (cfg.format == "csv")
        os << json_to_csv(doc);
    else
        os << pretty;
    if (cfg.output.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw gz::ParseError("cannot open output file: " + cfg.output);
        out << os.str();
    }
}

gz::json orbit_to_json(const gz::OrbitId& id) {
    gz::json j;
    j["kind"] = id.is_closed() ? "closed" : "mixed";
    j["i"] = id.i;
    if (!id.is_closed()) j["j"] = id.j;
    j["name"] = id.str();
    return j;
}

// ---------------------------------------------------------------------------

int cmd_ritz(const RunConfig& cfg, const std::string& path) {
    const gz::ComplexMatrix m = gz::matrix_from_json(gz::load_json_file(path));
    const gz::RitzData ritz = gz::ritz_values(m, cfg.tol);
    const gz::KWPoint traces = gz::kw_map(m, gz::KWCoords::Traces);
    const gz::KWPoint coeffs = gz::kw_map(m, gz::KWCoords::CharCoeffs);
    gz::json doc;
    doc["n"] = m.n();
    doc["sigma"] = gz::levels_to_json(ritz.sigma);
    doc["traces"] = gz::levels_to_json(traces.levels);
    doc["charcoeffs"] = gz::levels_to_json(coeffs.levels);
    std::ostringstream pretty;
    pretty << "Ritz values (sigma_i = spectrum of the i-th cutoff)\n"
           << pretty_levels(ritz.sigma, "sigma") << "Trace coordinates f_{i,j}\n"
           << pretty_levels(traces.levels, "level") << "Characteristic coefficients p_{i,j}\n"
           << pretty_levels(coeffs.levels, "level");
    emit(cfg, doc, pretty.str());
    return 0;
}

int cmd_invert(const RunConfig& cfg, const std::string& path) {
    const gz::json in = gz::load_json_file(path);
    gz::HessenbergMatrix h;
    gz::KWPoint target;
    if (in.contains("sigma")) {
        const gz::RitzData ritz = gz::ritz_from_json(in);
        h = gz::hessenberg_from_ritz(ritz);
        target = gz::kw_map(h.mat, gz::KWCoords::CharCoeffs);
    } else if (in.contains("levels")) {
        gz::KWPoint p = gz::kwpoint_from_json(in);
        if (p.coords == gz::KWCoords::Traces) p = gz::traces_to_coeffs(p);
        h = gz::hessenberg_from_coeffs(p);
        target = p;
    } else {
        throw gz::ParseError("invert: input needs either 'sigma' (Ritz data) or 'levels' (KW point)");
    }
    std::fprintf(stderr, "roundtrip residual: %.3g\n", gz::roundtrip_residual(target, h));
    emit(cfg, gz::to_json(h.mat), pretty_matrix(h.mat));
    return 0;
}

int cmd_sreg(const RunConfig& cfg, const std::string& path) {
    const gz::ComplexMatrix m = gz::matrix_from_json(gz::load_json_file(path));
    const gz::SregReport rep = gz::sreg_report(m, cfg.tol);
    std::ostringstream pretty;
    pretty << "strongly regular: " << (rep.is_sreg ? "yes" : "no") << "\n"
           << "criteria agree:   " << (rep.verdicts_agree ? "yes" : "NO (ill-conditioned input)") << "\n"
           << "differentials rank " << rep.diff_rank << " / " << m.n() * (m.n() + 1) / 2 << "\n"
           << "tangent rank       " << rep.tangent_rank << " / " << m.n() * (m.n() - 1) / 2 << "\n";
    pretty << "levels regular:   ";
    for (bool b : rep.per_level_regular) pretty << (b ? " yes" : " no");
    pretty << "\ncentralizer intersection dims:";
    for (int d : rep.centralizer_intersection_dims) pretty << " " << d;
    pretty << "\n";
    emit(cfg, gz::to_json(rep), pretty.str());
    if (!rep.verdicts_agree) return 4;
    return rep.is_sreg ? 0 : 1;
}

int cmd_flow(const RunConfig& cfg, const std::string& matrix_path, const std::string& times_path) {
    const gz::ComplexMatrix m = gz::matrix_from_json(gz::load_json_file(matrix_path));
    const gz::FlowTimes t = gz::flowtimes_from_json(gz::load_json_file(times_path));
    const gz::ComplexMatrix moved = gz::a_action(m, t, cfg.tol);
    emit(cfg, gz::to_json(moved), pretty_matrix(moved));
    return 0;
}

int cmd_nilfiber_enumerate(const RunConfig& cfg, int n) {
    auto comps = gz::enumerate_components(n);
    gz::json rows = gz::json::array();
    std::ostringstream pretty;
    pretty << comps.size() << " components of the strongly regular nilfiber, n = " << n << "\n";
    for (auto& [q, bp] : comps) {
        std::string strict;
        for (auto& [r, c] : bp.strict_support)
            strict += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
        rows.push_back(gz::json::array({q.str(), bp.sigma.str(), strict}));
        pretty << q.str() << "  flag order " << bp.sigma.str() << "  free entries: " << strict << "\n";
    }
    gz::json doc;
    doc["n"] = n;
    doc["count"] = comps.size();
    doc["header"] = gz::json::array({"signs", "flag_order", "strict_support"});
    doc["rows"] = rows;
    emit(cfg, doc, pretty.str());
    return 0;
}

int cmd_nilfiber_sample(const RunConfig& cfg, int n, const std::string& component, int count) {
    gz::Rng rng(cfg.seed);
    gz::SignSequence q = component.empty()
                             ? gz::SignSequence::from_string(n, std::string(static_cast<std::size_t>(n - 1), '+'))
                             : gz::SignSequence::from_string(n, component);
    gz::json samples = gz::json::array();
    std::ostringstream pretty;
    for (int k = 0; k < count; ++k) {
        gz::ComplexMatrix x = gz::sample_component(q, rng);
        samples.push_back(gz::to_json(x));
        pretty << pretty_matrix(x);
        if (k + 1 < count) pretty << "\n";
    }
    if (count == 1) {
        emit(cfg, samples[0], pretty.str());
    } else {
        gz::json doc;
        doc["component"] = q.str();
        doc["samples"] = samples;
        emit(cfg, doc, pretty.str());
    }
    return 0;
}

int cmd_nilfiber_classify(const RunConfig& cfg, const std::string& path) {
    const gz::ComplexMatrix m = gz::matrix_from_json(gz::load_json_file(path));
    auto q = gz::component_membership(m, cfg.tol);
    gz::json doc;
    doc["component"] = q ? gz::json(q->str()) : gz::json(nullptr);
    emit(cfg, doc, q ? ("component: " + q->str() + "\n") : "component: none\n");
    return q ? 0 : 1;
}

int cmd_korbit_list(const RunConfig& cfg, int n) {
    auto orbits = gz::enumerate_orbits(n);
    gz::json rows = gz::json::array();
    std::ostringstream pretty;
    pretty << orbits.size() << " K-orbits on the flag variety, n = " << n << "\n";
    for (const auto& o : orbits) {
        rows.push_back(gz::json::array({o.id.str(), o.length, o.dimension}));
        pretty << o.id.str() << "  length " << o.length << "  dim " << o.dimension << "\n";
    }
    gz::json doc;
    doc["n"] = n;
    doc["count"] = orbits.size();
    doc["header"] = gz::json::array({"orbit", "length", "dimension"});
    doc["rows"] = rows;
    emit(cfg, doc, pretty.str());
    return 0;
}

int cmd_korbit_classify(const RunConfig& cfg, const std::string& path) {
    const gz::Flag f = gz::flag_from_json(gz::load_json_file(path));
    const gz::OrbitId id = gz::classify_flag(f, cfg.tol);
    emit(cfg, orbit_to_json(id), "orbit: " + id.str() + "\n");
    return 0;
}

int cmd_korbit_monoid(const RunConfig& cfg, int n) {
    gz::json rows = gz::json::array();
    std::ostringstream pretty;
    pretty << "monoid action m(s_k) on K-orbits, n = " << n << "\n";
    for (const auto& o : gz::enumerate_orbits(n)) {
        for (int k = 1; k < n; ++k) {
            const gz::OrbitId to = gz::monoid_action(o.id, k);
            const gz::RootType t = gz::root_type(o.id, gz::Root{k, k + 1});
            rows.push_back(gz::json::array({o.id.str(), k, to.str(), gz::root_type_name(t)}));
            pretty << o.id.str() << "  s_" << k << " -> " << to.str() << "   (alpha_" << k << " "
                   << gz::root_type_name(t) << ")\n";
        }
    }
    gz::json doc;
    doc["n"] = n;
    doc["header"] = gz::json::array({"orbit", "simple_root", "image", "root_type"});
    doc["rows"] = rows;
    emit(cfg, doc, pretty.str());
    return 0;
}

int cmd_korbit_rep(const RunConfig& cfg, int n, int i, int j) {
    const bool closed = (i == j);
    const gz::Flag f = closed ? gz::closed_orbit_representative(i, n) : gz::orbit_representative(i, j, n);
    const gz::GroupElement g =
        closed ? gz::closed_orbit_group_element(i, n) : gz::orbit_rep_group_element(i, j, n);
    const gz::OrbitId id = closed ? gz::OrbitId::closed(i) : gz::OrbitId::mixed(i, j);
    gz::json doc;
    doc["orbit"] = orbit_to_json(id);
    doc["flag"] = gz::to_json(f);
    doc["group_element"] = gz::to_json(g.g);
    doc["springer"] = gz::springer_invariant(g, cfg.tol).str();
    std::ostringstream pretty;
    pretty << "orbit " << id.str() << "\nflag basis (one vector per line):\n";
    for (const auto& v : f.basis) {
        for (const auto& z : v) pretty << fmt_complex(z) << " ";
        pretty << "\n";
    }
    pretty << "springer invariant: " << doc["springer"].get<std::string>() << "\n";
    emit(cfg, doc, pretty.str());
    return 0;
}

int cmd_borel_search(const RunConfig& cfg, int n, int trials, int max_samples) {
    const gz::Rng master(cfg.seed);
    gz::BorelSearchResult res;
    res.n = n;
    res.trials = trials;
    res.per_trial.resize(static_cast<std::size_t>(trials));
    if (cfg.parallel > 1 && trials > 1) {
        std::vector<std::thread> pool;
        const int threads = std::min(cfg.parallel, trials);
        for (int tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid] {
                for (int k = tid; k < trials; k += threads)
                    res.per_trial[static_cast<std::size_t>(k)] =
                        gz::borel_search_trial(n, master.fork(static_cast<std::uint64_t>(k)), cfg.tol, max_samples);
            });
        for (auto& th : pool) th.join();
    } else {
        for (int k = 0; k < trials; ++k)
            res.per_trial[static_cast<std::size_t>(k)] =
                gz::borel_search_trial(n, master.fork(static_cast<std::uint64_t>(k)), cfg.tol, max_samples);
    }
    for (const auto& t : res.per_trial) {
        if (t.success) ++res.successes;
        res.max_samples = std::max(res.max_samples, t.samples_used);
    }
    gz::json rows = gz::json::array();
    std::ostringstream pretty;
    pretty << "random-Borel strong-regularity search, n = " << n << ", trials = " << trials << "\n";
    for (std::size_t k = 0; k < res.per_trial.size(); ++k) {
        rows.push_back(gz::json::array({k, res.per_trial[k].success, res.per_trial[k].samples_used}));
        pretty << "trial " << k << ": " << (res.per_trial[k].success ? "success" : "FAILURE") << " after "
               << res.per_trial[k].samples_used << " sample(s)\n";
    }
    gz::json doc;
    doc["n"] = n;
    doc["trials"] = trials;
    doc["successes"] = res.successes;
    doc["max_samples"] = res.max_samples;
    doc["header"] = gz::json::array({"trial", "success", "samples"});
    doc["rows"] = rows;
    pretty << res.successes << "/" << trials << " succeeded, max samples " << res.max_samples << "\n";
    emit(cfg, doc, pretty.str());
    return res.successes == trials ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Zeitlin integrable system toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    RunConfig cfg;
    double abs_tol = 1e-10, rel_tol = 1e-9;
    app.add_option("--seed", cfg.seed, "RNG seed (all randomness derives from it)");
    app.add_option("--abs-tol", abs_tol, "absolute tolerance");
    app.add_option("--rel-tol", rel_tol, "relative tolerance");
    app.add_option("--format", cfg.format, "output format: pretty, json, csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--output", cfg.output, "write output to a file instead of stdout");
    app.add_option("--parallel", cfg.parallel, "worker threads for trial loops");

    std::string matrix_path, times_path, input_path, component;
    int n = 3, trials = 10, count = 1, rep_i = 1, rep_j = 1, max_samples = 64;

    auto* ritz = app.add_subcommand("ritz", "Ritz values and the Kostant-Wallach image of a matrix");
    ritz->add_option("matrix", matrix_path, "matrix JSON file")->required();

    auto* invert = app.add_subcommand("invert", "unique unit Hessenberg matrix with prescribed spectra");
    invert->add_option("input", input_path, "Ritz data or KW point JSON file")->required();

    auto* sreg = app.add_subcommand("sreg", "strong regularity report (three equivalent criteria)");
    sreg->add_option("matrix", matrix_path, "matrix JSON file")->required();

    auto* flow = app.add_subcommand("flow", "apply the Gelfand-Zeitlin flows");
    flow->add_option("matrix", matrix_path, "matrix JSON file")->required();
    flow->add_option("--times", times_path, "flow times JSON file")->required();

    auto* nil = app.add_subcommand("nilfiber", "strongly regular nilfiber components");
    auto* nil_enum = nil->add_subcommand("enumerate", "list the 2^{n-1} components");
    nil_enum->add_option("n", n, "matrix size")->required();
    auto* nil_sample = nil->add_subcommand("sample", "sample a component");
    nil_sample->add_option("n", n, "matrix size")->required();
    nil_sample->add_option("--component", component, "sign string, e.g. +-+ (default all +)");
    nil_sample->add_option("--count", count, "number of samples");
    auto* nil_classify = nil->add_subcommand("classify", "identify the component of a matrix");
    nil_classify->add_option("matrix", matrix_path, "matrix JSON file")->required();

    auto* korbit = app.add_subcommand("korbit", "K = GL(n-1) x GL(1) orbits on the flag variety");
    auto* ko_list = korbit->add_subcommand("list", "enumerate all orbits");
    ko_list->add_option("n", n, "matrix size")->required();
    auto* ko_classify = korbit->add_subcommand("classify", "classify a flag");
    ko_classify->add_option("flag", input_path, "flag JSON file")->required();
    auto* ko_monoid = korbit->add_subcommand("monoid", "full monoid action table");
    ko_monoid->add_option("n", n, "matrix size")->required();
    auto* ko_rep = korbit->add_subcommand("rep", "orbit representative (flag + group element)");
    ko_rep->add_option("n", n, "matrix size")->required();
    ko_rep->add_option("i", rep_i, "first index")->required();
    ko_rep->add_option("j", rep_j, "second index (equal to i for a closed orbit)")->required();

    auto* bsearch = app.add_subcommand("borel-search", "sample random Borels for strongly regular elements");
    bsearch->add_option("n", n, "matrix size")->required();
    bsearch->add_option("trials", trials, "number of random Borels")->required();
    bsearch->add_option("--max-samples", max_samples, "samples per Borel before giving up");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.tol = gz::Tolerance(abs_tol, rel_tol);
        if (ritz->parsed()) return cmd_ritz(cfg, matrix_path);
        if (invert->parsed()) return cmd_invert(cfg, input_path);
        if (sreg->parsed()) return cmd_sreg(cfg, matrix_path);
        if (flow->parsed()) return cmd_flow(cfg, matrix_path, times_path);
        if (nil->parsed()) {
            if (nil_enum->parsed()) return cmd_nilfiber_enumerate(cfg, n);
            if (nil_sample->parsed()) return cmd_nilfiber_sample(cfg, n, component, count);
            if (nil_classify->parsed()) return cmd_nilfiber_classify(cfg, matrix_path);
            std::cerr << "nilfiber: expected a subcommand (enumerate, sample, classify)\n";
            return 2;
        }
        if (korbit->parsed()) {
            if (ko_list->parsed()) return cmd_korbit_list(cfg, n);
            if (ko_classify->parsed()) return cmd_korbit_classify(cfg, input_path);
            if (ko_monoid->parsed()) return cmd_korbit_monoid(cfg, n);
            if (ko_rep->parsed()) {
                if (rep_i > rep_j || rep_i < 1 || rep_j > n) {
                    std::cerr << "korbit rep: need 1 <= i <= j <= n\n";
                    return 2;
                }
                return cmd_korbit_rep(cfg, n, rep_i, rep_j);
            }
            std::cerr << "korbit: expected a subcommand (list, classify, monoid, rep)\n";
            return 2;
        }
        if (bsearch->parsed()) return cmd_borel_search(cfg, n, trials, max_samples);
    } catch (const gz::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gz::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gz::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
