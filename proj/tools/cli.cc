/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <indsat/constructions.hh>
#include <indsat/dnf.hh>
#include <indsat/errors.hh>
#include <indsat/facts.hh>
#include <indsat/io.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef INDSAT_VERSION
#  define INDSAT_VERSION "unknown"
#endif

using nlohmann::json;

namespace indsat::cli
{
    namespace
    {
        /// Payload plus exit code; a clean run can still fail, e.g. verify --expect-indsat.
        struct Outcome
        {
            json result;
            int exit_code = exit_success;
        };

        auto pair_json(const Pair & p) -> json
        {
            return json::array({ p.u, p.v });
        }

        auto embedding_json(const Embedding & e) -> json
        {
            json resolved = json::array();
            for (auto & r : e.resolved)
                resolved.push_back({ { "pair", pair_json(r.pair) }, { "as_edge", r.as_edge } });
            return { { "image", e.image }, { "resolved", resolved } };
        }

        auto form_json(const CanonicalForm & f) -> json
        {
            return { { "gray", to_hex(f.gray) }, { "black", to_hex(f.black) }, { "gray_count", f.gray_count() } };
        }

        auto stats_json(const SearchStats & s) -> json
        {
            return {
                { "gray_sets", s.gray_sets },
                { "gray_orbits", s.gray_orbits },
                { "candidates_examined", s.candidates_examined },
                { "symmetry_skipped", s.symmetry_skipped },
                { "indsat_found", s.indsat_found },
                { "wall_seconds", s.wall_seconds }
            };
        }

        auto open_in(const std::string & path) -> std::ifstream
        {
            std::ifstream in(path);
            if (! in)
                throw ArgumentError("cannot open '" + path + "'");
            return in;
        }

        /// Pattern choice shared by verify, search, enumerate and encode.
        struct PatternChoice
        {
            std::string id = "p4";
            std::string file;

            auto add_to(CLI::App & app) -> void
            {
                app.add_option("--pattern", id, "pattern id: p<k>, c<k>, k<k>, khminus:<k>")->capture_default_str();
                app.add_option("--pattern-file", file, "pattern as 'graph k' plus one 'u v' line per edge");
            }

            auto get() const -> PatternGraph
            {
                if (! file.empty()) {
                    auto in = open_in(file);
                    return read_pattern(in, std::filesystem::path(file).stem().string());
                }
                return pattern_by_id(id);
            }
        };

        /// Renders the result payload as indented key / value lines.
        auto pretty(std::ostream & out, const json & j, const std::string & indent) -> void
        {
            for (auto & [key, value] : j.items()) {
                if (value.is_object()) {
                    out << indent << key << ":\n";
                    pretty(out, value, indent + "  ");
                }
                else if (value.is_array() && ! value.empty() && (value.front().is_object() || value.front().is_array())) {
                    out << indent << key << ": (" << value.size() << ")\n";
                    for (auto & v : value)
                        out << indent << "  - " << v.dump() << '\n';
                }
                else
                    out << indent << std::left << std::setw(24) << key << ' '
                        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
    }

    auto version() -> std::string
    {
        return INDSAT_VERSION;
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Induced saturation of trigraphs" };
        app.require_subcommand(1);
        app.set_version_flag("--version", version());

        bool pretty_output = false;
        app.add_flag("--pretty", pretty_output, "human readable output instead of JSON");

        json inputs = json::object();
        std::function<auto () -> Outcome> action;

        // construct
        auto construct = app.add_subcommand("construct", "build an extremal indsat(P4) trigraph");
        int construct_n = 0;
        std::string variant = "paper", construct_out;
        construct->add_option("--n", construct_n, "vertex count")->required();
        construct->add_option("--variant", variant, "paper or alt")
            ->check(CLI::IsMember({ "paper", "alt" }))->capture_default_str();
        construct->add_option("--out", construct_out, "trigraph file to write; stdout when omitted");
        construct->callback([&] {
            inputs = { { "n", construct_n }, { "variant", variant }, { "out", construct_out } };
            action = [&] {
                auto c = variant == "paper" ? construct_tn(construct_n) : construct_alternative(construct_n);
                json labels = json::object();
                for (auto & [role, v] : c.spec.labeling)
                    labels[role] = v;
                Outcome o;
                o.result = {
                    { "n", construct_n },
                    { "variant", variant },
                    { "gray_count", c.trigraph.count(EdgeColor::Gray) },
                    { "labeling", labels }
                };
                if (construct_out.empty()) {
                    write_trigraph(out, c.trigraph);
                    o.result = nullptr;
                }
                else
                    write_trigraph_file(construct_out, c.trigraph);
                return o;
            };
        });

        // verify
        auto verify = app.add_subcommand("verify", "check a trigraph for induced saturation");
        std::string verify_file;
        PatternChoice verify_pattern;
        bool expect_indsat = false, verify_witnesses = false;
        verify->add_option("--file", verify_file, "trigraph file")->required();
        verify_pattern.add_to(*verify);
        verify->add_flag("--expect-indsat", expect_indsat, "exit 1 unless the trigraph is indsat");
        verify->add_flag("--witnesses", verify_witnesses, "report a realization for every flip");
        verify->callback([&] {
            inputs = { { "file", verify_file }, { "pattern", verify_pattern.file.empty() ? verify_pattern.id : verify_pattern.file },
                { "expect_indsat", expect_indsat } };
            action = [&] {
                auto t = read_trigraph_file(verify_file);
                auto h = verify_pattern.get();
                auto report = check_indsat(t, h, verify_witnesses);

                Outcome o;
                o.result = {
                    { "n", t.size() },
                    { "pattern", h.name },
                    { "gray_count", t.count(EdgeColor::Gray) },
                    { "is_indsat", report.is_indsat() },
                    { "holds_free", report.holds_free },
                    { "free_violation", report.free_violation ? embedding_json(*report.free_violation) : json(nullptr) },
                    { "failing_flip", report.failing_flip ? pair_json(*report.failing_flip) : json(nullptr) },
                    { "canonical", t.size() <= max_canonical_vertices ? form_json(canonical_form(t)) : json(nullptr) }
                };
                if (verify_witnesses) {
                    json flips = json::array();
                    for (auto & w : report.witness_flips)
                        flips.push_back({ { "pair", pair_json(w.pair) }, { "embedding", embedding_json(w.embedding) } });
                    o.result["witness_flips"] = flips;
                }
                if (expect_indsat && ! report.is_indsat())
                    o.exit_code = exit_failure;
                return o;
            };
        });

        // search
        auto search = app.add_subcommand("search", "minimum gray count of an indsat trigraph");
        int search_n = 0, kmax = -1, workers = 1;
        PatternChoice search_pattern;
        bool naive = false, all_witnesses = false, no_complement = false;
        std::string dedup = "orderly";
        search->add_option("--n", search_n, "vertex count")->required();
        search_pattern.add_to(*search);
        search->add_option("--kmax", kmax, "largest gray count to try");
        search->add_option("--workers", workers, "threads")->check(CLI::Range(1, 256));
        search->add_flag("--naive", naive, "plain 3^C(n,2) sweep, n <= 6");
        search->add_option("--dedup", dedup, "orderly or seen")->check(CLI::IsMember({ "orderly", "seen" }))->capture_default_str();
        search->add_flag("--no-complement", no_complement, "do not identify complements for self-complementary patterns");
        search->add_flag("--witnesses", all_witnesses, "list every canonical witness");
        search->callback([&] {
            inputs = { { "n", search_n }, { "pattern", search_pattern.file.empty() ? search_pattern.id : search_pattern.file },
                { "kmax", kmax }, { "workers", workers }, { "naive", naive }, { "dedup", dedup } };
            action = [&] {
                auto h = search_pattern.get();
                SearchResult r;
                if (naive)
                    r = isat_min_naive(search_n, h, kmax);
                else {
                    SearchOptions options;
                    options.k_max = kmax;
                    options.workers = workers;
                    options.dedup = dedup == "seen" ? DedupStrategy::SeenSet : DedupStrategy::Orderly;
                    options.seen_cap = seen_cap_from_environment(options.seen_cap);
                    options.complement_symmetry = ! no_complement;
                    r = isat_min(search_n, h, options);
                }

                Outcome o;
                o.result = {
                    { "n", r.n },
                    { "pattern", r.pattern },
                    { "min_gray", r.min_gray ? json(*r.min_gray) : json(nullptr) },
                    { "capped", r.capped },
                    { "witness_count", r.witnesses.size() },
                    { "stats", stats_json(r.stats) }
                };
                if (all_witnesses) {
                    json w = json::array();
                    for (auto & f : r.witnesses)
                        w.push_back(form_json(f));
                    o.result["witnesses"] = w;
                }
                else if (! r.witnesses.empty())
                    o.result["first_witness"] = form_json(r.witnesses.front());
                if (r.capped)
                    o.exit_code = exit_resource;
                return o;
            };
        });

        // enumerate
        auto enumerate = app.add_subcommand("enumerate", "write every canonical indsat trigraph with k gray pairs");
        int enum_n = 0, enum_k = 0;
        std::string out_dir;
        PatternChoice enum_pattern;
        enumerate->add_option("--n", enum_n, "vertex count")->required();
        enumerate->add_option("--k", enum_k, "gray count")->required();
        enumerate->add_option("--out-dir", out_dir, "directory for the trigraph files")->required();
        enum_pattern.add_to(*enumerate);
        enumerate->callback([&] {
            inputs = { { "n", enum_n }, { "k", enum_k }, { "out_dir", out_dir },
                { "pattern", enum_pattern.file.empty() ? enum_pattern.id : enum_pattern.file } };
            action = [&] {
                auto h = enum_pattern.get();
                SearchOptions options;
                options.seen_cap = seen_cap_from_environment(options.seen_cap);
                auto forms = enumerate_indsat(enum_n, h, enum_k, options);

                std::filesystem::create_directories(out_dir);
                json files = json::array();
                for (std::size_t i = 0 ; i < forms.size() ; ++i) {
                    std::ostringstream name;
                    name << "n" << enum_n << "_k" << enum_k << "_" << std::setw(5) << std::setfill('0') << i << ".tri";
                    auto path = (std::filesystem::path(out_dir) / name.str()).string();
                    write_trigraph_file(path, forms[i].trigraph());
                    files.push_back(name.str());
                }

                Outcome o;
                o.result = { { "n", enum_n }, { "k", enum_k }, { "pattern", h.name }, { "count", forms.size() }, { "files", files } };
                return o;
            };
        });

        // encode
        auto encode = app.add_subcommand("encode", "DNF whose satisfying assignments are the graphs containing H");
        int encode_n = 0;
        std::string encode_out;
        PatternChoice encode_pattern_choice;
        encode->add_option("--n", encode_n, "vertex count")->required();
        encode_pattern_choice.add_to(*encode);
        encode->add_option("--out", encode_out, "DNF file to write; stdout when omitted");
        encode->callback([&] {
            inputs = { { "n", encode_n }, { "out", encode_out },
                { "pattern", encode_pattern_choice.file.empty() ? encode_pattern_choice.id : encode_pattern_choice.file } };
            action = [&] {
                auto f = encode_pattern(encode_n, encode_pattern_choice.get());
                Outcome o;
                if (encode_out.empty())
                    write_dnf(out, f);
                else {
                    std::ofstream file(encode_out);
                    if (! file)
                        throw ArgumentError("cannot write '" + encode_out + "'");
                    write_dnf(file, f);
                    o.result = { { "variables", f.variable_count() }, { "clauses", f.clauses().size() } };
                }
                return o;
            };
        });

        // saturate
        auto saturate = app.add_subcommand("saturate", "check a partial assignment for DNF saturation");
        std::string formula_file, assignment_file, method = "local";
        bool expect_saturated = false;
        saturate->add_option("--formula", formula_file, "DNF file")->required();
        saturate->add_option("--assignment", assignment_file, "assignment file")->required();
        saturate->add_option("--method", method, "local or enumerate")
            ->check(CLI::IsMember({ "local", "enumerate" }))->capture_default_str();
        saturate->add_flag("--expect-saturated", expect_saturated, "exit 1 unless saturated");
        saturate->callback([&] {
            inputs = { { "formula", formula_file }, { "assignment", assignment_file }, { "method", method } };
            action = [&] {
                auto fin = open_in(formula_file);
                auto f = read_dnf(fin);
                auto ain = open_in(assignment_file);
                auto alpha = read_assignment(ain);
                bool saturated = is_saturated(f, alpha,
                        method == "local" ? CompletionCheck::ClauseLocal : CompletionCheck::Enumerate);

                Outcome o;
                o.result = {
                    { "saturated", saturated },
                    { "variables", f.variable_count() },
                    { "clauses", f.clauses().size() },
                    { "unassigned", alpha.unassigned_count() },
                    { "has_satisfying_completion", has_satisfying_completion(f, alpha) }
                };
                if (expect_saturated && ! saturated)
                    o.exit_code = exit_failure;
                return o;
            };
        });

        // formula
        auto formula = app.add_subcommand("formula", "closed-form sat and isat values");
        std::string family;
        std::int64_t formula_n = 0, formula_to = -1;
        formula->add_option("--family", family, "p3, p4, p5, p<h>, k<h>, c4, khminus:<h>")->required();
        formula->add_option("--n", formula_n, "vertex count")->required();
        formula->add_option("--to", formula_to, "emit rows for n..to");
        formula->callback([&] {
            inputs = { { "family", family }, { "n", formula_n }, { "to", formula_to } };
            action = [&] {
                auto id = parse_family(family);
                if (formula_n < 1)
                    throw ArgumentError("n must be positive");
                json rows = json::array();
                for (std::int64_t n = formula_n ; n <= std::max(formula_n, formula_to) ; ++n) {
                    json row = { { "family", id.name() }, { "n", n } };
                    auto s = sat_formula(id, n);
                    row["sat"] = s ? json(*s) : json(nullptr);
                    try {
                        row["isat"] = isat_formula(id, n);
                    }
                    catch (const ArgumentError &) {
                        row["isat"] = nullptr;
                    }
                    rows.push_back(row);
                }
                Outcome o;
                o.result = { { "rows", rows } };
                return o;
            };
        });

        // facts
        auto facts = app.add_subcommand("facts", "check the structural facts on every indsat(P4) trigraph");
        int facts_n = 0;
        facts->add_option("--n", facts_n, "vertex count")->required()->check(CLI::Range(1, 7));
        facts->callback([&] {
            inputs = { { "n", facts_n } };
            action = [&] {
                auto report = run_p4_fact_suite(facts_n);
                json violations = json::array();
                for (auto & v : report.tally.violations)
                    violations.push_back({ { "fact", v.fact }, { "witness", form_json(v.witness) }, { "detail", v.detail } });
                json per_k = json::object();
                for (auto & [k, c] : report.per_gray_count)
                    per_k[std::to_string(k)] = c;

                Outcome o;
                o.result = {
                    { "n", facts_n },
                    { "trigraphs", report.trigraphs },
                    { "per_gray_count", per_k },
                    { "checks", report.tally.checks },
                    { "violation_count", violations.size() },
                    { "violations", violations },
                    { "ok", report.ok() }
                };
                if (! report.ok())
                    o.exit_code = exit_failure;
                return o;
            };
        });

        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());

        try {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::Success & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::Error & e) {
            err << "indsat: " << e.what() << '\n';
            return exit_usage;
        }

        auto subcommand = app.get_subcommands().front()->get_name();
        auto start = std::chrono::steady_clock::now();
        try {
            auto outcome = action();
            if (! outcome.result.is_null()) {
                if (pretty_output)
                    pretty(out, outcome.result, "");
                else {
                    json report = {
                        { "subcommand", subcommand },
                        { "version", version() },
                        { "inputs", inputs },
                        { "result", outcome.result },
                        { "wall_time_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() }
                    };
                    out << report.dump() << '\n';
                }
            }
            return outcome.exit_code;
        }
        catch (const ResourceError & e) {
            err << subcommand << ": " << e.what() << '\n';
            return exit_resource;
        }
        catch (const ArgumentError & e) {
            err << subcommand << ": " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << subcommand << ": " << e.what() << '\n';
            return exit_failure;
        }
    }
}
