#include <kdefect/kdefect.h>

#include <kdefect/certificates.hpp>
#include <kdefect/cnf.hpp>
#include <kdefect/constructions.hpp>
#include <kdefect/io.hpp>
#include <kdefect/solvers.hpp>
#include <kdefect/verify.hpp>

#include <cstring>
#include <fstream>
#include <sstream>

using namespace kdefect;

struct kd_hypergraph
{
    Hypergraph graph;
};

struct kd_report
{
    Report report;
};

struct kd_scan
{
    ScanResult result;
};

namespace
{
    thread_local std::string last_error;
    thread_local int last_line = 0;

    class IoError : public Error
    {
    public:
        using Error::Error;
    };

    kd_status fail(kd_status status, const std::string & message, int line = 0)
    {
        last_error = message;
        last_line = line;
        return status;
    }

    template <class F>
    kd_status guard(F && body)
    {
        try {
            last_error.clear();
            last_line = 0;
            body();
            return KD_OK;
        }
        catch (const ParseError & e) {
            return fail(KD_ERR_PARSE, e.what(), e.line());
        }
        catch (const CapExceeded & e) {
            return fail(KD_ERR_CAP_EXCEEDED, e.what());
        }
        catch (const kdefect::Timeout & e) {
            return fail(KD_ERR_TIMEOUT, e.what());
        }
        catch (const InvalidArgument & e) {
            return fail(KD_ERR_INVALID_ARGUMENT, e.what());
        }
        catch (const IoError & e) {
            return fail(KD_ERR_IO, e.what());
        }
        catch (const Json::parse_error & e) {
            return fail(KD_ERR_PARSE, std::string("malformed JSON: ") + e.what());
        }
        catch (const Json::exception & e) {
            return fail(KD_ERR_INVALID_ARGUMENT, std::string("bad JSON value: ") + e.what());
        }
        catch (const std::exception & e) {
            return fail(KD_ERR_INTERNAL, e.what());
        }
        catch (...) {
            return fail(KD_ERR_INTERNAL, "unknown error");
        }
    }

    void require(bool ok, const char * what)
    {
        if (! ok)
            throw InvalidArgument(what);
    }

    char * copy(const std::string & s)
    {
        auto * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    std::string read_file(const char * path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw IoError(std::string("cannot read ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    void write_file(const char * path, const std::string & content)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << content))
            throw IoError(std::string("cannot write ") + path);
    }

    Json solve(const Hypergraph & h, const std::string & invariant, const kd_solve_options & o)
    {
        auto deadline = Deadline::from_ms(o.time_limit_ms);
        Json out{{"schema", schema_version}, {"invariant", invariant}, {"n", h.order()}, {"m", h.size()}};

        if (invariant == "chi") {
            auto res = chromatic_number(h, deadline);
            if (! res.feasible) {
                out["status"] = "infeasible";
                out["value"] = nullptr;
                out["detail"] = "a singleton edge admits no proper coloring";
                return out;
            }
            out["status"] = "ok";
            out["value"] = res.value;
            out["certificate"] = to_json(res.coloring);
        }
        else if (invariant == "alpha") {
            auto res = independence_number(h, deadline);
            out["status"] = "ok";
            out["value"] = res.size;
            out["certificate"] = Json{{"kind", "independent-set"}, {"vertices", res.witness}};
        }
        else if (invariant == "nu") {
            auto res = matching_number(h, deadline);
            out["status"] = "ok";
            out["value"] = res.size;
            out["certificate"] = Json{{"kind", "matching"}, {"edges", res.witness}};
        }
        else if (invariant == "cd" || invariant == "ecd") {
            bool equitable = invariant == "ecd" || o.equitable;
            out["invariant"] = equitable ? "ecd" : "cd";
            out["r"] = o.r;
            std::optional<int> cap;
            if (o.max_removal >= 0)
                cap = o.max_removal;
            try {
                auto res = colorability_defect(h, o.r, equitable, cap, deadline);
                out["status"] = "ok";
                out["value"] = res.value;
                out["certificate"] = to_json(res.certificate);
            }
            catch (const RemovalCapExceeded & e) {
                out["status"] = "cap-exceeded";
                out["value"] = nullptr;
                out["lower_bound"] = e.lower_bound();
                out["max_removal"] = o.max_removal;
            }
        }
        else if (invariant == "kneser-chi") {
            out["r"] = o.r;
            auto res = kneser_chromatic_number(h, o.r, deadline);
            out["status"] = "ok";
            out["value"] = res.value;
            out["certificate"] = to_json(res.coloring);
        }
        else
            throw InvalidArgument("unknown invariant '" + invariant + "' (expected chi, alpha, nu, cd, ecd or kneser-chi)");
        return out;
    }

    TheoremParams theorem_params(const char * json)
    {
        TheoremParams params;
        if (! json || ! *json)
            return params;
        auto j = Json::parse(json);
        require(j.is_object(), "theorem parameters must be a JSON object");
        for (const auto & [k, v] : j.items()) {
            if (! v.is_number_integer())
                throw InvalidArgument("theorem parameter '" + k + "' must be an integer");
            params[k] = v.get<std::int64_t>();
        }
        return params;
    }
}

extern "C" {

const char * kd_version(void)
{
    return "0.1.0";
}

const char * kd_last_error(void)
{
    return last_error.c_str();
}

int kd_last_error_line(void)
{
    return last_line;
}

void kd_string_free(char * s)
{
    std::free(s);
}

kd_status kd_hypergraph_parse(const char * text, kd_format fmt, kd_hypergraph ** out)
{
    return guard([&] {
        require(text && out, "null argument");
        Hypergraph h = fmt == KD_FORMAT_JSON ? parse_hypergraph_json(text)
            : fmt == KD_FORMAT_TEXT ? parse_hypergraph_text(text)
            : parse_hypergraph(text);
        *out = new kd_hypergraph{std::move(h)};
    });
}

kd_status kd_hypergraph_generate(const char * params_json, kd_hypergraph ** out)
{
    return guard([&] {
        require(params_json && out, "null argument");
        *out = new kd_hypergraph{generate(parse_family_params(Json::parse(params_json)))};
    });
}

kd_status kd_hypergraph_serialize(const kd_hypergraph * h, kd_format fmt, char ** out)
{
    return guard([&] {
        require(h && out, "null argument");
        *out = copy(fmt == KD_FORMAT_TEXT ? write_text(h->graph) : write_json(h->graph));
    });
}

int kd_hypergraph_order(const kd_hypergraph * h)
{
    return h ? h->graph.order() : -1;
}

int kd_hypergraph_size(const kd_hypergraph * h)
{
    return h ? static_cast<int>(h->graph.size()) : -1;
}

kd_status kd_hypergraph_stable_part(const kd_hypergraph * h, int s, int almost, kd_hypergraph ** out)
{
    return guard([&] {
        require(h && out, "null argument");
        auto kind = almost ? StabilityKind::almost_stable(s) : StabilityKind::stable(s);
        *out = new kd_hypergraph{stable_subhypergraph(h->graph, kind)};
    });
}

void kd_hypergraph_free(kd_hypergraph * h)
{
    delete h;
}

kd_solve_options kd_solve_options_default(void)
{
    return kd_solve_options{2, 2, 0, -1, 0};
}

kd_status kd_solve(const kd_hypergraph * h, const char * invariant, const kd_solve_options * options, char ** out_json)
{
    return guard([&] {
        require(h && invariant && out_json, "null argument");
        kd_solve_options o = options ? *options : kd_solve_options_default();
        *out_json = copy(solve(h->graph, invariant, o).dump());
    });
}

kd_status kd_check(const kd_hypergraph * h, const char * conjecture, int r, int s, int64_t time_limit_ms,
        kd_report ** out)
{
    return guard([&] {
        require(h && conjecture && out, "null argument");
        auto rep = check_conjecture(parse_conjecture(conjecture), h->graph, r, s, Deadline::from_ms(time_limit_ms));
        *out = new kd_report{std::move(rep)};
    });
}

kd_status kd_verify(const char * theorem_id, const char * params_json, int64_t time_limit_ms, kd_report ** out)
{
    return guard([&] {
        require(theorem_id && out, "null argument");
        auto rep = verify_theorem(theorem_id, theorem_params(params_json), Deadline::from_ms(time_limit_ms));
        *out = new kd_report{std::move(rep)};
    });
}

kd_status kd_theorem_ids(char ** out_json)
{
    return guard([&] {
        require(out_json, "null argument");
        *out_json = copy(Json(theorem_ids()).dump());
    });
}

kd_verdict kd_report_verdict(const kd_report * report)
{
    if (! report)
        return KD_INFEASIBLE;
    switch (report->report.verdict) {
        case Verdict::Holds: return KD_HOLDS;
        case Verdict::Violated: return KD_VIOLATED;
        case Verdict::Infeasible: return KD_INFEASIBLE;
        case Verdict::Timeout: return KD_TIMEOUT;
    }
    return KD_INFEASIBLE;
}

kd_status kd_report_render(const kd_report * report, kd_render how, char ** out)
{
    return guard([&] {
        require(report && out, "null argument");
        *out = copy(how == KD_RENDER_TABLE ? write_table(report->report) : write_json_line(report->report));
    });
}

void kd_report_free(kd_report * report)
{
    delete report;
}

kd_status kd_scan_run(const char * spec_json, kd_scan ** out)
{
    return guard([&] {
        require(spec_json && out, "null argument");
        auto spec = parse_scan_spec(Json::parse(spec_json));
        *out = new kd_scan{scan(spec)};
    });
}

int kd_scan_total(const kd_scan * scan)
{
    return scan ? static_cast<int>(scan->result.reports.size()) : -1;
}

int kd_scan_violated(const kd_scan * scan)
{
    return scan ? scan->result.violated() : -1;
}

int kd_scan_timeouts(const kd_scan * scan)
{
    return scan ? scan->result.timeouts() : -1;
}

kd_status kd_scan_render(const kd_scan * scan, kd_render how, char ** out)
{
    return guard([&] {
        require(scan && out, "null argument");
        *out = copy(how == KD_RENDER_TABLE ? write_table(scan->result) : write_json_lines(scan->result));
    });
}

void kd_scan_free(kd_scan * scan)
{
    delete scan;
}

kd_status kd_export_cnf(const kd_hypergraph * h, const char * task_json, const char * cnf_path, const char * map_path)
{
    return guard([&] {
        require(h && task_json && cnf_path && map_path, "null argument");
        auto formula = encode(h->graph, parse_cnf_task(Json::parse(task_json)));
        write_file(cnf_path, write_dimacs(formula));
        write_file(map_path, formula.map.dump(2) + "\n");
    });
}

kd_status kd_check_model(const char * map_path, const char * model_path, int * valid, char ** detail_json)
{
    return guard([&] {
        require(map_path && model_path && valid, "null argument");
        auto map = Json::parse(read_file(map_path));
        auto result = check_model(map, parse_model(read_file(model_path)));
        *valid = result.valid ? 1 : 0;
        if (detail_json) {
            Json detail{{"valid", result.valid}, {"detail", result.detail}};
            if (result.valid)
                detail["certificate"] = result.certificate;
            *detail_json = copy(detail.dump());
        }
    });
}

} // extern "C"
