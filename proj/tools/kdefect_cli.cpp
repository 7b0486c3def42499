// Command-line front end. Talks to the library through the C API only.

#include <kdefect/kdefect.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, violated = 2, timed_out = 3 };

struct Failure
{
    int code;
    std::string message;
};

int exit_for(kd_status status)
{
    return status == KD_ERR_TIMEOUT ? timed_out : usage;
}

void check(kd_status status)
{
    if (status != KD_OK)
        throw Failure{exit_for(status), kd_last_error()};
}

std::string take(char * s)
{
    std::string out(s ? s : "");
    kd_string_free(s);
    return out;
}

struct HypergraphDeleter { void operator()(kd_hypergraph * h) const { kd_hypergraph_free(h); } };
struct ReportDeleter { void operator()(kd_report * r) const { kd_report_free(r); } };
struct ScanDeleter { void operator()(kd_scan * s) const { kd_scan_free(s); } };

using HypergraphPtr = std::unique_ptr<kd_hypergraph, HypergraphDeleter>;
using ReportPtr = std::unique_ptr<kd_report, ReportDeleter>;
using ScanPtr = std::unique_ptr<kd_scan, ScanDeleter>;

std::string read_input(const std::string & path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Failure{usage, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::int64_t default_time_limit()
{
    if (const char * env = std::getenv("KDEFECT_TIME_LIMIT_MS")) {
        try {
            return std::stoll(env);
        }
        catch (const std::exception &) {
            std::cerr << "warning: ignoring malformed KDEFECT_TIME_LIMIT_MS\n";
        }
    }
    return 60000;
}

// "key=value" words into a JSON object of integers.
void add_pairs(Json & target, const std::vector<std::string> & pairs)
{
    for (const auto & pair : pairs) {
        auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Failure{usage, "expected key=value, got '" + pair + "'"};
        try {
            std::size_t used = 0;
            std::string value = pair.substr(eq + 1);
            long long v = std::stoll(value, &used);
            if (used != value.size())
                throw std::invalid_argument(value);
            target[pair.substr(0, eq)] = v;
        }
        catch (const std::exception &) {
            throw Failure{usage, "parameter '" + pair.substr(0, eq) + "' needs an integer value"};
        }
    }
}

// Named integer flags shared by gen and verify.
struct IntFlags
{
    std::map<std::string, std::optional<long long>> values;

    void attach(CLI::App * app, const std::vector<std::string> & names)
    {
        for (const auto & name : names)
            app->add_option("--" + name, values[name], name + " parameter");
    }

    void into(Json & target) const
    {
        for (const auto & [k, v] : values)
            if (v)
                target[k] = *v;
    }
};

// Exactly one hypergraph source: --input FILE, --family "name k=v ...", or --family-json.
struct Source
{
    std::string input;
    std::string family;
    std::string family_json;

    void attach(CLI::App * app)
    {
        auto * a = app->add_option("--input,-i", input, "hypergraph file (JSON or text, '-' for stdin)");
        auto * b = app->add_option("--family", family, "generated family, e.g. \"fns n=11 s=3\"");
        auto * c = app->add_option("--family-json", family_json, "family parameters as a JSON object");
        a->excludes(b, c);
        b->excludes(c);
    }

    HypergraphPtr load() const
    {
        kd_hypergraph * h = nullptr;
        if (! input.empty())
            check(kd_hypergraph_parse(read_input(input).c_str(), KD_FORMAT_AUTO, &h));
        else if (! family.empty()) {
            std::istringstream words(family);
            std::string name, word;
            words >> name;
            Json params{{"family", name}};
            std::vector<std::string> pairs;
            while (words >> word)
                pairs.push_back(word);
            add_pairs(params, pairs);
            check(kd_hypergraph_generate(params.dump().c_str(), &h));
        }
        else if (! family_json.empty())
            check(kd_hypergraph_generate(family_json.c_str(), &h));
        else
            throw Failure{usage, "no input: give --input, --family or --family-json"};
        return HypergraphPtr(h);
    }
};

int emit_report(const ReportPtr & report, const std::string & format)
{
    char * out = nullptr;
    check(kd_report_render(report.get(), format == "json" ? KD_RENDER_JSON : KD_RENDER_TABLE, &out));
    std::string text = take(out);
    std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    switch (kd_report_verdict(report.get())) {
        case KD_VIOLATED: return violated;
        case KD_TIMEOUT: return timed_out;
        default: return ok;
    }
}

// "4", "4:10" or "4..10"
Json parse_range(const std::string & text)
{
    auto split = text.find(':');
    std::size_t skip = 1;
    if (split == std::string::npos) {
        split = text.find("..");
        skip = 2;
    }
    try {
        if (split == std::string::npos)
            return std::stoi(text);
        return Json::array({std::stoi(text.substr(0, split)), std::stoi(text.substr(split + skip))});
    }
    catch (const std::exception &) {
        throw Failure{usage, "bad range '" + text + "' (use N or LO:HI)"};
    }
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Kneser hypergraph colorability-defect toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kd_version()));

    std::int64_t time_limit = default_time_limit();
    app.add_option("--time-limit-ms", time_limit,
            "wall-clock budget per computation (default 60000 or $KDEFECT_TIME_LIMIT_MS; <= 0 disables)");

    // gen
    auto * gen = app.add_subcommand("gen", "generate a hypergraph family");
    std::string gen_family, gen_format = "json";
    std::vector<std::string> gen_pairs;
    IntFlags gen_flags;
    gen->add_option("family", gen_family, "fns, complete-uniform, trivial, direct-rs, freers1, jafari-ce, frick-gap")->required();
    gen->add_option("params", gen_pairs, "extra key=value parameters");
    gen_flags.attach(gen, {"n", "r", "s", "l"});
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "text"}));

    // solve
    auto * solve = app.add_subcommand("solve", "compute an exact invariant");
    std::string invariant;
    kd_solve_options opts = kd_solve_options_default();
    std::optional<int> solve_s;
    bool almost = false, equitable = false;
    std::optional<int> max_removal;
    Source solve_src;
    solve->add_option("invariant", invariant)->required()
        ->check(CLI::IsMember({"chi", "alpha", "nu", "cd", "ecd", "kneser-chi"}));
    solve->add_option("--r", opts.r, "parts (cd/ecd) or Kneser arity (kneser-chi)");
    solve->add_option("--s", solve_s, "restrict to the s-stable part first (nu, kneser-chi)");
    solve->add_flag("--almost", almost, "with --s: use the almost s-stable part");
    solve->add_flag("--equitable", equitable, "equitable defect (same as invariant ecd)");
    solve->add_option("--max-removal", max_removal, "cap on removed vertices for cd/ecd");
    solve_src.attach(solve);

    // verify
    auto * verify = app.add_subcommand("verify", "replay a registered theorem");
    std::string theorem, verify_format = "table";
    std::vector<std::string> verify_pairs;
    IntFlags verify_flags;
    verify->add_option("theorem", theorem, "theorem id (see 'verify list')")->required();
    verify->add_option("params", verify_pairs, "extra key=value parameters");
    verify_flags.attach(verify, {"n", "r", "s", "l", "samples", "seed"});
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "table"}));

    // check
    auto * checkc = app.add_subcommand("check", "check a conjecture on one hypergraph");
    std::string conjecture, check_format = "table";
    int check_r = 2;
    std::optional<int> check_s;
    Source check_src;
    checkc->add_option("conjecture", conjecture)->required()->check(CLI::IsMember({"frick", "jafari", "almost"}));
    checkc->add_option("--r", check_r, "Kneser arity")->required();
    checkc->add_option("--s", check_s, "stability gap (defaults to r)");
    checkc->add_option("--format", check_format)->check(CLI::IsMember({"json", "table"}));
    check_src.attach(checkc);

    // scan
    auto * scanc = app.add_subcommand("scan", "run a conjecture over a parameter grid");
    std::string scan_spec_file, scan_format = "table", scan_conj = "frick", scan_mode = "exhaustive-fns";
    std::string scan_n, scan_r, scan_s, scan_l;
    std::optional<int> samples, max_edges, max_edge_size, max_n, jobs;
    std::optional<std::uint64_t> seed;
    scanc->add_option("--spec", scan_spec_file, "scan spec JSON file; flags override its fields");
    scanc->add_option("--conjecture", scan_conj)->check(CLI::IsMember({"frick", "jafari", "almost"}));
    scanc->add_option("--mode", scan_mode)->check(CLI::IsMember({"exhaustive-fns", "paper-families", "random"}));
    scanc->add_option("--n", scan_n, "vertex range, N or LO:HI");
    scanc->add_option("--r", scan_r, "arity range");
    scanc->add_option("--s", scan_s, "stability range (ignored for frick, which uses s = r)");
    scanc->add_option("--l", scan_l, "scale range for the built-in counterexample families");
    scanc->add_option("--samples", samples, "random hypergraphs per (r, s)");
    scanc->add_option("--seed", seed);
    scanc->add_option("--max-edges", max_edges);
    scanc->add_option("--max-edge-size", max_edge_size);
    scanc->add_option("--max-n", max_n, "upper bound on n for exhaustive and random modes");
    scanc->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
    scanc->add_option("--format", scan_format)->check(CLI::IsMember({"jsonl", "table"}));

    // export-cnf
    auto * export_cnf = app.add_subcommand("export-cnf", "write a DIMACS CNF plus a variable map");
    std::string task = "colorable", cnf_path, map_path;
    int cnf_r = 2, cnf_t = 1;
    bool cnf_equitable = false;
    Source cnf_src;
    export_cnf->add_option("--task", task)->check(CLI::IsMember({"colorable", "kneser"}));
    export_cnf->add_option("--r", cnf_r, "colors (colorable) or Kneser arity (kneser)");
    export_cnf->add_option("--t", cnf_t, "number of classes (kneser)");
    export_cnf->add_flag("--equitable", cnf_equitable);
    export_cnf->add_option("--cnf", cnf_path)->required();
    export_cnf->add_option("--map", map_path)->required();
    cnf_src.attach(export_cnf);

    // check-model
    auto * check_model = app.add_subcommand("check-model", "decode a SAT model and validate it");
    std::string model_map, model_path;
    check_model->add_option("--map", model_map)->required();
    check_model->add_option("--model", model_path)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*gen) {
            Json params{{"family", gen_family}};
            gen_flags.into(params);
            add_pairs(params, gen_pairs);
            kd_hypergraph * raw = nullptr;
            check(kd_hypergraph_generate(params.dump().c_str(), &raw));
            HypergraphPtr h(raw);
            char * out = nullptr;
            check(kd_hypergraph_serialize(h.get(), gen_format == "text" ? KD_FORMAT_TEXT : KD_FORMAT_JSON, &out));
            std::string text = take(out);
            std::cout << text << (text.back() == '\n' ? "" : "\n");
            return ok;
        }

        if (*solve) {
            auto h = solve_src.load();
            if (solve_s) {
                if (invariant != "nu" && invariant != "kneser-chi")
                    throw Failure{usage, "--s applies to nu and kneser-chi only"};
                kd_hypergraph * part = nullptr;
                check(kd_hypergraph_stable_part(h.get(), *solve_s, almost ? 1 : 0, &part));
                h.reset(part);
            }
            else if (almost)
                throw Failure{usage, "--almost needs --s"};
            opts.equitable = equitable ? 1 : 0;
            opts.max_removal = max_removal.value_or(-1);
            opts.time_limit_ms = time_limit;
            char * out = nullptr;
            check(kd_solve(h.get(), invariant.c_str(), &opts, &out));
            std::cout << take(out) << '\n';
            return ok;
        }

        if (*verify) {
            if (theorem == "list") {
                char * out = nullptr;
                check(kd_theorem_ids(&out));
                for (const auto & id : Json::parse(take(out)))
                    std::cout << id.get<std::string>() << '\n';
                return ok;
            }
            Json params = Json::object();
            verify_flags.into(params);
            add_pairs(params, verify_pairs);
            kd_report * raw = nullptr;
            check(kd_verify(theorem.c_str(), params.dump().c_str(), time_limit, &raw));
            return emit_report(ReportPtr(raw), verify_format);
        }

        if (*checkc) {
            auto h = check_src.load();
            kd_report * raw = nullptr;
            check(kd_check(h.get(), conjecture.c_str(), check_r, check_s.value_or(check_r), time_limit, &raw));
            return emit_report(ReportPtr(raw), check_format);
        }

        if (*scanc) {
            Json spec = scan_spec_file.empty() ? Json::object() : Json::parse(read_input(scan_spec_file));
            if (! spec.is_object())
                throw Failure{usage, "scan spec must be a JSON object"};
            if (scanc->count("--conjecture") || ! spec.contains("conjecture"))
                spec["conjecture"] = scan_conj;
            if (scanc->count("--mode") || ! spec.contains("mode"))
                spec["mode"] = scan_mode;
            for (auto [key, text] : {std::pair{"n", &scan_n}, {"r", &scan_r}, {"s", &scan_s}, {"l", &scan_l}})
                if (! text->empty())
                    spec[key] = parse_range(*text);
            if (samples) spec["samples"] = *samples;
            if (seed) spec["seed"] = *seed;
            if (max_edges) spec["max_edges"] = *max_edges;
            if (max_edge_size) spec["max_edge_size"] = *max_edge_size;
            if (max_n) spec["max_n"] = *max_n;
            if (jobs) spec["jobs"] = *jobs;
            if (app.count("--time-limit-ms") || ! spec.contains("time_limit_ms"))
                spec["time_limit_ms"] = time_limit;

            kd_scan * raw = nullptr;
            check(kd_scan_run(spec.dump().c_str(), &raw));
            ScanPtr result(raw);
            char * out = nullptr;
            check(kd_scan_render(result.get(), scan_format == "jsonl" ? KD_RENDER_JSON : KD_RENDER_TABLE, &out));
            std::cout << take(out);
            if (kd_scan_violated(result.get()) > 0)
                return violated;
            return kd_scan_timeouts(result.get()) > 0 ? timed_out : ok;
        }

        if (*export_cnf) {
            auto h = cnf_src.load();
            Json spec{{"task", task}, {"r", cnf_r}};
            if (task == "kneser")
                spec["t"] = cnf_t;
            else
                spec["equitable"] = cnf_equitable;
            check(kd_export_cnf(h.get(), spec.dump().c_str(), cnf_path.c_str(), map_path.c_str()));
            return ok;
        }

        if (*check_model) {
            int valid = 0;
            char * detail = nullptr;
            check(kd_check_model(model_map.c_str(), model_path.c_str(), &valid, &detail));
            std::cout << take(detail) << '\n';
            if (! valid)
                throw Failure{usage, "model does not decode to a valid certificate"};
            return ok;
        }
    }
    catch (const Failure & f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    catch (const Json::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
