#include "segre/cli.hpp"

#include "segre/betti.hpp"
#include "segre/combinatorics.hpp"
#include "segre/newcomb.hpp"
#include "segre/series.hpp"
#include "segre/spec.hpp"
#include "segre/toric.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace segre::cli {

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SEGRE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SEGRE_BUDGET is not a valid nonnegative integer: " +
                                        std::string(env));
        }
    }
    return kDefaultBudget;
}

json spec_to_json(const Spec& spec) {
    json j = json::array();
    for (int b : spec.parts()) j.push_back(b);
    return j;
}

json values_to_json(const std::vector<BigInt>& values) {
    json j = json::array();
    for (const BigInt& v : values) j.push_back(v.str());
    return j;
}

json point_to_json(const LatticePoint& p) {
    json j = json::array();
    for (int c : p.coords) j.push_back(c);
    return j;
}

json points_to_json(const std::vector<LatticePoint>& pts) {
    json j = json::array();
    for (const auto& p : pts) j.push_back(point_to_json(p));
    return j;
}

json envelope(const std::string& command, const Spec& spec, json payload,
              const std::vector<std::string>& algorithms) {
    json j;
    j["command"] = command;
    j["spec"] = spec_to_json(spec);
    j["payload"] = std::move(payload);
    j["provenance"] = {{"tool", "segre"},
                       {"tool_version", kToolVersion},
                       {"schema_version", kSchemaVersion},
                       {"algorithms", algorithms}};
    return j;
}

std::string csv_escape_free(const std::string& s) { return s; }  // fields here never contain commas

void emit_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ",";
            out << csv_escape_free(row[i]);
        }
        out << "\n";
    }
}

struct Request {
    std::string format = "text";
    std::uint64_t budget = kDefaultBudget;
    bool full = false;
};

std::string vector_text(const std::vector<BigInt>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += values[i].str();
    }
    return out + ")";
}

int run_newcomb(const Spec& spec, const std::string& algorithm, const Request& req,
                std::ostream& out) {
    json payload;
    std::vector<std::string> used;
    bool agree = true;

    if (algorithm == "all") {
        std::vector<NewcombVector> results;
        json vectors = json::object();
        std::vector<std::string> skipped;
        const BigInt arrangements = multinomial(spec);
        if (arrangements <= req.budget) {
            results.push_back(newcomb_brute(spec, req.budget));
        } else {
            skipped.push_back("brute");
        }
        results.push_back(newcomb_dillon_roselle(spec));
        results.push_back(newcomb_recurrence(spec));
        results.push_back(newcomb_positive(spec));
        results.push_back(newcomb_convolution(spec));
        for (const auto& r : results) {
            used.emplace_back(algorithm_name(r.algorithm()));
            vectors[algorithm_name(r.algorithm())] = values_to_json(r.values());
            agree = agree && r.same_values(results.front());
        }
        payload["algorithm"] = "all";
        payload["vectors"] = std::move(vectors);
        payload["agree"] = agree;
        if (!skipped.empty()) payload["skipped_over_budget"] = skipped;
        payload["vector"] = values_to_json(results.front().values());

        if (req.format == "json") {
            out << envelope("newcomb", spec, payload, used).dump(2) << "\n";
        } else if (req.format == "csv") {
            std::vector<std::vector<std::string>> rows = {{"algorithm", "k", "value"}};
            for (const auto& r : results) {
                for (std::size_t k = 0; k < r.values().size(); ++k) {
                    rows.push_back({algorithm_name(r.algorithm()), std::to_string(k),
                                    r.values()[k].str()});
                }
            }
            emit_csv(out, rows);
        } else {
            out << "newcomb " << spec.to_string() << "\n";
            for (const auto& r : results) {
                out << "  " << algorithm_name(r.algorithm()) << ": " << r.to_string() << "\n";
            }
            if (!skipped.empty()) {
                out << "  skipped over budget:";
                for (const auto& s : skipped) out << " " << s;
                out << "\n";
            }
            out << "  agree: " << (agree ? "yes" : "NO") << "\n";
        }
        return agree ? kExitOk : kExitCrossCheck;
    }

    Algorithm tag;
    if (algorithm == "brute") tag = Algorithm::BruteForce;
    else if (algorithm == "dillon-roselle") tag = Algorithm::DillonRoselle;
    else if (algorithm == "recurrence") tag = Algorithm::Recurrence;
    else if (algorithm == "positive") tag = Algorithm::Positive;
    else if (algorithm == "convolution") tag = Algorithm::Convolution;
    else throw std::invalid_argument("unknown algorithm '" + algorithm + "'");

    NewcombVector result = compute_newcomb(spec, tag, req.budget);
    used.emplace_back(algorithm_name(tag));
    payload["algorithm"] = algorithm_name(tag);
    payload["vector"] = values_to_json(result.values());

    if (req.format == "json") {
        out << envelope("newcomb", spec, payload, used).dump(2) << "\n";
    } else if (req.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"k", "value"}};
        for (std::size_t k = 0; k < result.values().size(); ++k) {
            rows.push_back({std::to_string(k), result.values()[k].str()});
        }
        emit_csv(out, rows);
    } else {
        out << "newcomb " << spec.to_string() << " [" << algorithm_name(tag)
            << "]: " << result.to_string() << "\n";
    }
    return kExitOk;
}

int run_hilbert(const Spec& spec, long long upto, const Request& req, std::ostream& out) {
    if (upto < 0) throw std::invalid_argument("--upto must be nonnegative");
    std::vector<BigInt> values;
    for (long long l = 0; l <= upto; ++l) {
        values.push_back(segre_hilbert_function(spec, l));
    }
    json payload;
    payload["upto"] = upto;
    payload["values"] = values_to_json(values);

    if (req.format == "json") {
        out << envelope("hilbert", spec, payload, {}).dump(2) << "\n";
    } else if (req.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"l", "value"}};
        for (std::size_t l = 0; l < values.size(); ++l) {
            rows.push_back({std::to_string(l), values[l].str()});
        }
        emit_csv(out, rows);
    } else {
        out << "hilbert " << spec.to_string() << " H(0.." << upto << "):";
        for (const auto& v : values) out << " " << v.str();
        out << "\n";
    }
    return kExitOk;
}

int run_series(const Spec& spec, const Request& req, std::ostream& out) {
    const NewcombVector h = newcomb_recurrence(spec);
    const BigInt degree = multinomial(spec);
    json payload;
    payload["h"] = values_to_json(h.values());
    payload["pole_order"] = spec.dim();
    payload["degree"] = degree.str();
    payload["regularity"] = regularity(spec);
    payload["gorenstein"] = is_gorenstein(spec);
    payload["top_coefficient"] = top_coefficient(spec).str();
    payload["codimension"] = spec.codim().str();
    payload["numerator"] = h.to_polynomial().to_pretty_string();

    if (req.format == "json") {
        out << envelope("series", spec, payload, {algorithm_name(h.algorithm())}).dump(2) << "\n";
    } else if (req.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"k", "h_k"}};
        for (std::size_t k = 0; k < h.values().size(); ++k) {
            rows.push_back({std::to_string(k), h.values()[k].str()});
        }
        emit_csv(out, rows);
    } else {
        out << "series " << spec.to_string() << ": (" << h.to_polynomial().to_pretty_string()
            << ") / (1-t)^" << spec.dim() << "\n";
        out << "  degree " << degree.str() << ", regularity " << regularity(spec)
            << ", top coefficient " << top_coefficient(spec).str() << ", gorenstein "
            << (is_gorenstein(spec) ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int run_toric(const Spec& spec, const std::string& what, const Request& req, std::ostream& out) {
    json payload;
    payload["what"] = what;
    int exit_code = kExitOk;
    std::vector<std::vector<std::string>> csv_rows;
    std::string text;

    if (what == "facets" || what == "primes") {
        const BigInt expected = multinomial(spec);
        if (expected > req.budget) {
            throw BudgetError("refusing to stream " + expected.str() + " facets; budget is " +
                                  std::to_string(req.budget),
                              expected, req.budget);
        }
        json listing = json::array();
        std::uint64_t count = 0;
        if (what == "facets") {
            FacetStream facets{spec};
            while (auto f = facets.next()) {
                ++count;
                if (req.full) listing.push_back(points_to_json(f->points()));
                if (req.full && req.format == "text") text += "  " + f->to_string() + "\n";
            }
            payload["cardinality"] = spec.total() + 1;
        } else {
            MinimalPrimeStream primes{spec};
            while (auto p = primes.next()) {
                ++count;
                if (req.full) listing.push_back(points_to_json(*p));
                if (req.full && req.format == "text") {
                    std::string line;
                    for (std::size_t i = 0; i < p->size(); ++i) {
                        if (i > 0) line += ";";
                        line += (*p)[i].to_string();
                    }
                    text += "  " + line + "\n";
                }
            }
            payload["cardinality"] = spec.codim().str();
        }
        payload["count"] = std::to_string(count);
        if (req.full) payload[what] = std::move(listing);
        csv_rows = {{"what", "count"}, {what, std::to_string(count)}};
        text = "toric " + spec.to_string() + " " + what + ": " + std::to_string(count) + "\n" + text;
    } else if (what == "groebner") {
        const BigInt box = spec.box_size();
        const BigInt pair_count = box * (box - 1) / 2;
        if (pair_count > req.budget) {
            throw BudgetError("refusing to scan " + pair_count.str() + " point pairs; budget is " +
                                  std::to_string(req.budget),
                              pair_count, req.budget);
        }
        const auto generators = groebner_generators(spec);
        payload["count"] = std::to_string(generators.size());
        if (req.full) {
            json listing = json::array();
            for (const auto& g : generators) {
                listing.push_back({{"lead", points_to_json({g.lead_a, g.lead_b})},
                                   {"trail", points_to_json({g.trail_low, g.trail_high})}});
            }
            payload["generators"] = std::move(listing);
        }
        csv_rows = {{"what", "count"}, {"groebner", std::to_string(generators.size())}};
        text = "toric " + spec.to_string() + " groebner generators: " +
               std::to_string(generators.size()) + "\n";
        if (req.full && req.format == "text") {
            for (const auto& g : generators) text += "  " + g.to_string() + "\n";
        }
    } else if (what == "partition-check") {
        const PartitionCheckResult result = partition_check(spec, req.budget);
        payload["ok"] = result.ok;
        payload["faces"] = result.face_count.str();
        payload["interval_sum"] = result.predicted.str();
        text = "toric " + spec.to_string() + " partition-check: " +
               (result.ok ? "ok" : "FAILED") + " (" + result.face_count.str() + " faces, " +
               result.predicted.str() + " from intervals)\n";
        if (result.counterexample) {
            payload["counterexample"] = points_to_json(result.counterexample->points());
            text += "  counterexample face: " + result.counterexample->to_string() + "\n";
        }
        csv_rows = {{"ok", "faces", "interval_sum"},
                    {result.ok ? "true" : "false", result.face_count.str(),
                     result.predicted.str()}};
        if (!result.ok) exit_code = kExitCrossCheck;
    } else {
        throw std::invalid_argument("unknown --what '" + what +
                                    "' (facets|groebner|primes|partition-check)");
    }

    if (req.format == "json") {
        out << envelope("toric", spec, payload, {}).dump(2) << "\n";
    } else if (req.format == "csv") {
        emit_csv(out, csv_rows);
    } else {
        out << text;
    }
    return exit_code;
}

int run_betti(const Spec& spec, const Request& req, std::ostream& out) {
    const BettiStrand diagram = diagram_skeleton(spec);
    json payload;
    payload["strand"] = {diagram.strand[0].str(), diagram.strand[1].str(),
                         diagram.strand[2].str(), diagram.strand[3].str()};
    payload["corner"] = {{"column", diagram.corner.column},
                         {"row", diagram.corner.row},
                         {"value", diagram.corner.value.str()}};
    payload["pure"] = is_pure_resolution(spec);
    payload["diagram"] = diagram.to_json();

    if (req.format == "json") {
        out << envelope("betti", spec, payload, {"strand-formula"}).dump(2) << "\n";
    } else if (req.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"i", "beta_i_i+2"}};
        for (int i = 0; i <= 3; ++i) {
            rows.push_back({std::to_string(i), diagram.strand[static_cast<std::size_t>(i)].str()});
        }
        emit_csv(out, rows);
    } else {
        out << "betti " << spec.to_string() << " quadratic strand: "
            << vector_text({diagram.strand.begin(), diagram.strand.end()}) << "\n";
        out << "corner beta at column " << diagram.corner.column << ", row " << diagram.corner.row
            << ": " << diagram.corner.value.str() << "\n";
        out << "pure resolution: " << (is_pure_resolution(spec) ? "yes" : "no") << "\n";
        out << diagram.to_table();
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Simon Newcomb / Segre embedding calculator"};
    app.require_subcommand(1);

    Request req;
    std::string budget_text;
    app.add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--budget", budget_text,
                   "Enumeration budget (default " + std::to_string(kDefaultBudget) +
                       ", or SEGRE_BUDGET)");

    std::string spec_text;
    std::string algorithm = "all";
    long long upto = 10;
    std::string what = "facets";

    auto add_spec = [&spec_text](CLI::App* cmd) {
        cmd->fallthrough();  // global --format/--budget may follow the subcommand
        cmd->add_option("--spec", spec_text, "Comma-separated positive multiplicities, e.g. 1,1,2")
            ->required();
    };

    CLI::App* newcomb_cmd =
        app.add_subcommand("newcomb", "Descent-count vector by one or all algorithms");
    add_spec(newcomb_cmd);
    newcomb_cmd->add_option("--algorithm", algorithm, "Algorithm")
        ->check(CLI::IsMember({"all", "brute", "dillon-roselle", "recurrence", "positive",
                               "convolution"}))
        ->capture_default_str();

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function values H(0..upto)");
    add_spec(hilbert_cmd);
    hilbert_cmd->add_option("--upto", upto, "Highest degree")->capture_default_str();

    CLI::App* series_cmd =
        app.add_subcommand("series", "Hilbert-Poincare series with structural data");
    add_spec(series_cmd);

    CLI::App* toric_cmd = app.add_subcommand("toric", "Triangulation-side objects");
    add_spec(toric_cmd);
    toric_cmd->add_option("--what", what, "What to compute")
        ->check(CLI::IsMember({"facets", "groebner", "primes", "partition-check"}))
        ->capture_default_str();
    toric_cmd->add_flag("--full", req.full, "List the objects, not only the count");

    CLI::App* betti_cmd = app.add_subcommand("betti", "Quadratic-strand Betti data and diagram");
    add_spec(betti_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        req.budget = budget_text.empty() ? default_budget() : std::stoull(budget_text);
    } catch (const std::exception&) {
        err << "error: --budget must be a nonnegative integer\n";
        return kExitUsage;
    }

    try {
        const Spec spec = Spec::parse(spec_text);
        if (app.got_subcommand(newcomb_cmd)) return run_newcomb(spec, algorithm, req, out);
        if (app.got_subcommand(hilbert_cmd)) return run_hilbert(spec, upto, req, out);
        if (app.got_subcommand(series_cmd)) return run_series(spec, req, out);
        if (app.got_subcommand(toric_cmd)) return run_toric(spec, what, req, out);
        if (app.got_subcommand(betti_cmd)) return run_betti(spec, req, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal cross-check failure: " << e.what() << "\n";
        return kExitCrossCheck;
    }
}

}  // namespace segre::cli
