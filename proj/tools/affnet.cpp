// affnet: triadic analysis of affiliation (two-mode) networks.
//
// Subcommands cover the triad censuses, the clustering-coefficient family,
// dynamic triadic closure, strong-triadic-closure profiles, walk and
// eigenvector centralities, degree-preserving null models, instrument
// panels, and the bundled example datasets.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 undefined statistic.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "affnet/analysis.hpp"
#include "affnet/census.hpp"
#include "affnet/datasets.hpp"
#include "affnet/dynamics.hpp"
#include "affnet/errors.hpp"
#include "affnet/instrument.hpp"
#include "affnet/nullmodels.hpp"
#include "affnet/parallel.hpp"
#include "affnet/partition.hpp"
#include "affnet/wedges.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitUndefined = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

struct InputOptions {
    std::string path;
    std::string dataset;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "CSV/TSV attendance file (header actor,event[,time])");
        cmd->add_option("--dataset", dataset,
                        "bundled dataset name (see `affnet datasets`), or kNxM for a biclique");
    }

    affnet::BipartiteGraph load() const {
        if (path.empty() == dataset.empty())
            throw UsageError("give exactly one of an input file or --dataset");
        if (!path.empty()) {
            const affnet::LoadResult r = affnet::load_csv_file(path);
            if (r.duplicate_rows > 0)
                std::cerr << "affnet: note: collapsed " << r.duplicate_rows
                          << " duplicate attendance rows\n";
            return r.graph;
        }
        if (dataset.size() > 1 && (dataset[0] == 'k' || dataset[0] == 'K') &&
            dataset.find('x') != std::string::npos) {
            const auto sep = dataset.find('x');
            int n = 0, m = 0;
            auto a = std::from_chars(dataset.data() + 1, dataset.data() + sep, n);
            auto b = std::from_chars(dataset.data() + sep + 1, dataset.data() + dataset.size(), m);
            if (a.ec == std::errc() && b.ec == std::errc() && n > 0 && m > 0)
                return affnet::datasets::biclique(n, m);
        }
        return affnet::datasets::load(dataset);
    }
};

struct SchemeOptions {
    std::string statistic = "classical";
    std::string category;
    std::string congruence;
    std::string formulation;

    void attach(CLI::App* cmd) {
        cmd->add_option("--statistic", statistic, "classical|opsahl|exclusive|custom")
            ->check(CLI::IsMember({"classical", "opsahl", "exclusive", "custom"}));
        cmd->add_option("--category", category, "all|injective|induced (with --statistic custom)")
            ->check(CLI::IsMember({"all", "injective", "induced"}));
        cmd->add_option("--congruence", congruence,
                        "none|structural|actor (with --statistic custom)")
            ->check(CLI::IsMember({"none", "structural", "actor"}));
        cmd->add_option("--formulation", formulation, "rate|ratio (default rate)")
            ->check(CLI::IsMember({"rate", "ratio"}));
    }

    affnet::WedgeScheme scheme() const {
        affnet::WedgeScheme s;
        if (statistic == "classical") {
            s = affnet::classical_scheme();
        } else if (statistic == "opsahl") {
            s = affnet::opsahl_scheme();
        } else if (statistic == "exclusive") {
            s = affnet::exclusive_scheme();
        } else {
            if (category.empty() || congruence.empty())
                throw UsageError("--statistic custom needs --category and --congruence");
            s.category = category == "all"         ? affnet::WedgeScheme::Category::All
                         : category == "injective" ? affnet::WedgeScheme::Category::Injective
                                                   : affnet::WedgeScheme::Category::Induced;
            s.congruence = congruence == "none" ? affnet::WedgeScheme::Congruence::None
                           : congruence == "structural"
                               ? affnet::WedgeScheme::Congruence::Structural
                               : affnet::WedgeScheme::Congruence::Actor;
        }
        if (statistic != "custom" && (!category.empty() || !congruence.empty()))
            throw UsageError("--category/--congruence only combine with --statistic custom");
        if (!formulation.empty())
            s.formulation = formulation == "ratio"
                                ? affnet::WedgeScheme::Formulation::AlcoveRatio
                                : affnet::WedgeScheme::Formulation::ClosureRate;
        return s;
    }
};

json census_json(const affnet::FullCensus& census) {
    // keys ordered by partition index, then by inclusive count
    std::vector<std::pair<std::pair<std::int64_t, int>, const affnet::TriadClass*>> order;
    for (const auto& [cls, n] : census.tallies)
        order.push_back({{affnet::index_partition(cls.mu), cls.w}, &cls});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    json tallies = json::object();
    for (const auto& [key, cls] : order)
        tallies[affnet::class_key(*cls)] = census.tallies.at(*cls);
    return json{{"actors", census.n_actors}, {"triads", census.total()}, {"tallies", tallies}};
}

int cmd_census(const InputOptions& in, const std::string& format, bool as_json) {
    const affnet::BipartiteGraph g = in.load();
    const affnet::FullCensus census = affnet::full_census(g);
    if (format == "full") {
        std::cout << census_json(census).dump(2) << "\n";
    } else if (format == "structural") {
        const affnet::StructuralCensus t = affnet::structural_census(census);
        json rows = json::array();
        for (const auto& row : t.t) rows.push_back({row[0], row[1]});
        std::cout << rows.dump() << "\n";
    } else {
        const affnet::SimpleCensus s = affnet::simple_census(census);
        if (as_json) {
            std::cout << json(s.s).dump() << "\n";
        } else {
            std::cout << s.s[0] << "," << s.s[1] << "," << s.s[2] << "," << s.s[3] << "\n";
        }
    }
    return kExitOk;
}

int cmd_clustering(const InputOptions& in, const SchemeOptions& so, const std::string& level) {
    const affnet::BipartiteGraph g = in.load();
    const affnet::WedgeScheme scheme = so.scheme();
    if (level == "global") {
        std::cout << fmt(affnet::global_cc(g, scheme).value()) << "\n";
    } else if (level == "local") {
        const auto values = affnet::local_cc_all(g, scheme);
        std::cout << "actor,value\n";
        for (std::size_t a = 0; a < values.size(); ++a) {
            std::cout << g.actor_id(static_cast<int>(a)) << ",";
            if (values[a]) std::cout << fmt(values[a]->value());
            std::cout << "\n";
        }
    } else {
        std::cout << "ell,mean,count\n";
        for (const auto& [ell, entry] : affnet::wedge_dependent_cc(g, scheme))
            std::cout << ell << "," << fmt(entry.mean) << "," << entry.actors << "\n";
    }
    return kExitOk;
}

int cmd_dynamic(const InputOptions& in) {
    std::cout << fmt(affnet::dynamic_closure(in.load()).value()) << "\n";
    return kExitOk;
}

int cmd_stc(const InputOptions& in, std::int64_t max_s, bool expected) {
    const affnet::BipartiteGraph g = in.load();
    if (expected) {
        std::cout << "s,mean_shared\n";
        for (const auto& [s, mean] : affnet::expected_shared_events(g, max_s))
            std::cout << s << "," << fmt(mean) << "\n";
    } else {
        std::cout << "s,triples,weak,probability\n";
        for (const auto& [s, e] : affnet::stc_profile(g, max_s))
            std::cout << s << "," << e.triples << "," << e.weak_ties << ","
                      << fmt(e.probability()) << "\n";
    }
    return kExitOk;
}

int cmd_centrality(const InputOptions& in, int ell, bool corrected, bool eigenvector,
                   const std::string& mode_name) {
    if (corrected && eigenvector)
        throw UsageError("--corrected and --eigenvector are mutually exclusive");
    const affnet::BipartiteGraph g = in.load();
    const affnet::WalkMode mode = mode_name == "projection" ? affnet::WalkMode::Projection
                                                            : affnet::WalkMode::Bipartite;
    std::vector<double> scores;
    if (eigenvector)
        scores = affnet::eigen_centrality(g, mode);
    else if (corrected)
        scores = affnet::corrected_centrality(g, ell, mode);
    else
        scores = affnet::walk_centrality(g, ell, mode);

    std::cout << "actor,score\n";
    for (std::size_t a = 0; a < scores.size(); ++a)
        std::cout << g.actor_id(static_cast<int>(a)) << "," << fmt(scores[a]) << "\n";
    return kExitOk;
}

int cmd_nullmodel(const InputOptions& in, const SchemeOptions& so, std::int64_t samples,
                  std::int64_t burn_in, std::uint64_t seed) {
    const affnet::BipartiteGraph g = in.load();
    const affnet::CRandResult r = affnet::c_rand(g, so.scheme(), samples, burn_in, seed);
    std::cout << json{{"mean", r.mean}, {"std", r.stddev}, {"undefined_draws", r.undefined_draws}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

std::optional<double> parse_panel_value(const std::string& field) {
    if (field.empty() || field == "nan" || field == "NaN" || field == "NA" ||
        field == "undefined")
        return std::nullopt;
    double v = 0.0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || p != field.data() + field.size())
        throw affnet::DataError("bad panel value '" + field + "'");
    return v;
}

int cmd_instrument(const std::string& path, bool as_json) {
    std::ifstream file(path);
    if (!file) throw affnet::DataError("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(file, line)) throw affnet::DataError("empty panel");
    std::vector<affnet::PanelRow> rows;
    std::size_t lineno = 1;
    while (std::getline(file, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string subject, statistic, period, value;
        if (!std::getline(ls, subject, ',') || !std::getline(ls, statistic, ',') ||
            !std::getline(ls, period, ','))
            throw affnet::DataError("line " + std::to_string(lineno) +
                                    ": expected subject,statistic,period,value");
        std::getline(ls, value, ',');
        rows.push_back({subject, statistic, period, parse_panel_value(value)});
    }

    const affnet::PanelReport report = affnet::analyze_panel(rows);
    if (report.dropped_pairings > 0)
        std::cerr << "affnet: note: dropped " << report.dropped_pairings
                  << " half-defined pairings\n";

    auto cell = [&](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
    if (as_json) {
        json out = json::object();
        for (const auto& s : report.statistics) {
            json entry{{"stability", nullptr}, {"discriminability", nullptr}};
            if (auto v = report.stability.at(s)) entry["stability"] = *v;
            if (auto v = report.discriminability.at(s)) entry["discriminability"] = *v;
            json r2 = json::object();
            for (const auto& other : report.statistics) {
                if (other == s) continue;
                const auto v = report.r2.at({s, other});
                r2[other] = v ? json(*v) : json(nullptr);
            }
            entry["r2"] = r2;
            out[s] = entry;
        }
        out["dropped_pairings"] = report.dropped_pairings;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "statistic,stability,discriminability";
        for (const auto& s : report.statistics) std::cout << ",r2_" << s;
        std::cout << "\n";
        for (const auto& s : report.statistics) {
            std::cout << s << "," << cell(report.stability.at(s)) << ","
                      << cell(report.discriminability.at(s));
            for (const auto& other : report.statistics) {
                std::cout << ",";
                if (other != s) std::cout << cell(report.r2.at({s, other}));
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_datasets(const std::string& extract) {
    if (extract.empty()) {
        std::cout << "name,actors,events,timed,description\n";
        for (const auto& info : affnet::datasets::list()) {
            const affnet::BipartiteGraph g = affnet::datasets::load(info.name);
            std::cout << info.name << "," << g.actor_count() << "," << g.event_count() << ","
                      << (g.all_events_timed() && g.event_count() > 0 ? "yes" : "no") << ",\""
                      << info.description << "\"\n";
        }
    } else {
        std::cout << affnet::datasets::csv(extract);
    }
    return kExitOk;
}

int cmd_summary(const InputOptions& in) {
    const affnet::BipartiteGraph g = in.load();
    json actor_degrees = json::array(), event_degrees = json::array();
    for (int d : g.actor_degrees()) actor_degrees.push_back(d);
    for (int d : g.event_degrees()) event_degrees.push_back(d);
    std::cout << json{{"actors", g.actor_count()},
                      {"events", g.event_count()},
                      {"attendances", g.edge_count()},
                      {"timed", g.all_events_timed() && g.event_count() > 0},
                      {"actor_degrees", actor_degrees},
                      {"event_degrees", event_degrees}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triadic analysis of affiliation (two-mode) networks"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker pool cap (0 = hardware parallelism)");

    InputOptions census_in, clustering_in, dynamic_in, stc_in, centrality_in, nullmodel_in,
        summary_in;
    SchemeOptions clustering_scheme, nullmodel_scheme;

    auto* census = app.add_subcommand("census", "Triad censuses of the attendance graph");
    census_in.attach(census);
    std::string census_format = "full";
    bool census_json_flag = false;
    census->add_option("--format", census_format, "full|structural|simple")
        ->check(CLI::IsMember({"full", "structural", "simple"}));
    census->add_flag("--json", census_json_flag, "JSON output for --format simple");
    census->footer("full: JSON {\"tallies\": {\"mu1.mu2.mu3-w\": count}} in partition-index "
                   "order.\nstructural: 4x2 JSON array t[x][y].\nsimple: s0,s1,s2,s3");

    auto* clustering =
        app.add_subcommand("clustering", "Clustering coefficients of the wedge-scheme family");
    clustering_in.attach(clustering);
    clustering_scheme.attach(clustering);
    std::string level = "global";
    clustering->add_option("--level", level, "global|local|wedge-dependent")
        ->check(CLI::IsMember({"global", "local", "wedge-dependent"}));
    clustering->footer("global: one decimal number.\nlocal: CSV actor,value (value empty when "
                       "undefined), actors in input order.\nwedge-dependent: CSV ell,mean,count");

    auto* dynamic = app.add_subcommand("dynamic", "Dynamic triadic closure (needs event times)");
    dynamic_in.attach(dynamic);
    dynamic->footer("Prints one number; prints `undefined` and exits 4 when no triad qualifies.");

    auto* stc = app.add_subcommand("stc", "Weak-tie probability by wedge strength");
    stc_in.attach(stc);
    std::int64_t max_s = 20;
    bool stc_expected = false;
    stc->add_option("--max-s", max_s, "largest wedge strength reported (default 20)");
    stc->add_flag("--expected", stc_expected, "mean shared events of the ends instead");
    stc->footer("CSV s,triples,weak,probability (or s,mean_shared with --expected)");

    auto* centrality = app.add_subcommand("centrality", "Walk and eigenvector actor centralities");
    centrality_in.attach(centrality);
    int ell = 2;
    bool corrected = false, eigenvector = false;
    std::string walk_mode = "bipartite";
    centrality->add_option("--ell", ell, "walk length bound (default 2)");
    centrality->add_flag("--corrected", corrected, "eigenvector minus ell-walk scores");
    centrality->add_flag("--eigenvector", eigenvector, "eigenvector scores alone");
    centrality->add_option("--mode", walk_mode, "bipartite|projection (default bipartite)")
        ->check(CLI::IsMember({"bipartite", "projection"}));
    centrality->footer("CSV actor,score; scores unit-normalized over actors.");

    auto* nullmodel =
        app.add_subcommand("nullmodel", "Statistic over degree-preserving random graphs");
    nullmodel_in.attach(nullmodel);
    nullmodel_scheme.attach(nullmodel);
    std::int64_t samples = 1000, burn_in = 0;
    std::uint64_t seed = 1;
    nullmodel->add_option("--samples", samples, "ensemble size (default 1000)");
    nullmodel->add_option("--burn-in", burn_in,
                          "swap attempts between samples (default 10x edges)");
    nullmodel->add_option("--seed", seed, "RNG seed (fixed seed = bit-identical output)");
    nullmodel->footer("JSON {mean, std, undefined_draws, samples}");

    auto* instrument =
        app.add_subcommand("instrument", "Instrument-quality matrix from a statistic panel");
    std::string panel_path;
    bool instrument_json = false;
    instrument->add_option("input", panel_path, "CSV panel subject,statistic,period,value")
        ->required();
    instrument->add_flag("--json", instrument_json, "JSON output");
    instrument->footer("CSV statistic,stability,discriminability,r2_<other>...; empty cells "
                       "mean the measure is undefined there.");

    auto* datasets = app.add_subcommand("datasets", "List or extract bundled datasets");
    std::string extract;
    datasets->add_option("--extract", extract, "print one dataset as CSV");

    auto* summary = app.add_subcommand("summary", "JSON size and degree summary of a graph");
    summary_in.attach(summary);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "affnet: error[usage]: " << e.what() << "\n";
        return kExitUsage;
    }

    affnet::set_parallelism(threads);
    try {
        if (census->parsed()) return cmd_census(census_in, census_format, census_json_flag);
        if (clustering->parsed()) return cmd_clustering(clustering_in, clustering_scheme, level);
        if (dynamic->parsed()) return cmd_dynamic(dynamic_in);
        if (stc->parsed()) return cmd_stc(stc_in, max_s, stc_expected);
        if (centrality->parsed())
            return cmd_centrality(centrality_in, ell, corrected, eigenvector, walk_mode);
        if (nullmodel->parsed())
            return cmd_nullmodel(nullmodel_in, nullmodel_scheme, samples, burn_in, seed);
        if (instrument->parsed()) return cmd_instrument(panel_path, instrument_json);
        if (datasets->parsed()) return cmd_datasets(extract);
        if (summary->parsed()) return cmd_summary(summary_in);
    } catch (const UsageError& e) {
        std::cerr << "affnet: error[usage]: " << e.what() << "\n";
        return kExitUsage;
    } catch (const affnet::UndefinedStatistic& e) {
        std::cout << "undefined\n";
        std::cerr << "affnet: error[undefined]: " << e.what() << "\n";
        return kExitUndefined;
    } catch (const affnet::ConvergenceError& e) {
        std::cerr << "affnet: error[data]: " << e.what() << " (after " << e.iterations()
                  << " iterations)\n";
        return kExitData;
    } catch (const affnet::DataError& e) {
        std::cerr << "affnet: error[data]: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "affnet: error[data]: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
