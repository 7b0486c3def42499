#include <kdefect/io.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace kdefect {

namespace
{
    int line_at(const std::string & text, std::size_t offset)
    {
        offset = std::min(offset, text.size());
        return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    }

    // Line of the k-th inner array of the "edges" member. Only called on text
    // that already parsed, where the edge arrays hold integers only.
    int edge_line(const std::string & text, std::size_t k)
    {
        auto key = text.find("\"edges\"");
        if (key == std::string::npos)
            return 0;
        auto outer = text.find('[', key);
        std::size_t seen = 0;
        for (auto i = outer + 1 ; i < text.size() ; ++i)
            if (text[i] == '[') {
                if (seen == k)
                    return line_at(text, i);
                ++seen;
            }
        return 0;
    }

    void check_edge(const Edge & e, int n, int line)
    {
        if (e.empty())
            throw ParseError("empty hyperedge", line);
        for (std::size_t i = 0 ; i < e.size() ; ++i) {
            if (e[i] < 1 || e[i] > n)
                throw ParseError("vertex " + std::to_string(e[i]) + " outside [1," + std::to_string(n) + "]", line);
            if (i > 0 && e[i] <= e[i - 1])
                throw ParseError("hyperedge vertices must be strictly increasing", line);
        }
    }
}

Json to_json(const Hypergraph & h)
{
    Json edges = Json::array();
    for (const auto & e : h.edges())
        edges.push_back(e);
    return Json{{"schema", schema_version}, {"n", h.order()}, {"edges", std::move(edges)}};
}

std::string write_json(const Hypergraph & h)
{
    return to_json(h).dump();
}

Hypergraph parse_hypergraph_json(const std::string & text)
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const Json::parse_error & e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_at(text, e.byte));
    }

    if (! j.is_object())
        throw ParseError("hypergraph JSON must be an object", 1);
    for (const auto & [key, _] : j.items())
        if (key != "n" && key != "edges" && key != "schema")
            throw ParseError("unexpected key '" + key + "'", 1);
    if (j.contains("schema") && j["schema"] != schema_version)
        throw ParseError("unsupported schema version", 1);
    if (! j.contains("n") || ! j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ParseError("'n' must be a nonnegative integer", 1);
    if (! j.contains("edges") || ! j["edges"].is_array())
        throw ParseError("'edges' must be an array", 1);

    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    std::set<Edge> seen;
    const auto & list = j["edges"];
    for (std::size_t k = 0 ; k < list.size() ; ++k) {
        const auto & item = list[k];
        if (! item.is_array())
            throw ParseError("edge " + std::to_string(k + 1) + " is not an array", edge_line(text, k));
        Edge e;
        for (const auto & v : item) {
            if (! v.is_number_integer())
                throw ParseError("edge " + std::to_string(k + 1) + " has a non-integer vertex", edge_line(text, k));
            e.push_back(v.get<int>());
        }
        check_edge(e, n, edge_line(text, k));
        if (! seen.insert(e).second)
            throw ParseError("duplicate hyperedge", edge_line(text, k));
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

std::string write_text(const Hypergraph & h)
{
    std::ostringstream out;
    out << "hg " << h.order() << ' ' << h.size() << '\n';
    for (const auto & e : h.edges()) {
        for (std::size_t i = 0 ; i < e.size() ; ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_hypergraph_text(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    if (! std::getline(in, line))
        throw ParseError("empty input", 1);
    ++line_no;

    std::istringstream header(line);
    std::string tag;
    long long n = -1, m = -1;
    std::string trailing;
    if (! (header >> tag >> n >> m) || tag != "hg" || (header >> trailing))
        throw ParseError("header must be 'hg <n> <m>'", line_no);
    if (n < 0 || m < 0)
        throw ParseError("n and m must be nonnegative", line_no);

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long long k = 0 ; k < m ; ++k) {
        if (! std::getline(in, line))
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k), line_no + 1);
        ++line_no;
        std::istringstream row(line);
        Edge e;
        std::string token;
        while (row >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                e.push_back(v);
            }
            catch (const std::exception &) {
                throw ParseError("'" + token + "' is not a vertex number", line_no);
            }
        }
        check_edge(e, static_cast<int>(n), line_no);
        if (! seen.insert(e).second)
            throw ParseError("duplicate hyperedge", line_no);
        edges.push_back(std::move(e));
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("unexpected content after the last edge", line_no);
    }
    return Hypergraph(static_cast<int>(n), std::move(edges));
}

Hypergraph parse_hypergraph(const std::string & text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_hypergraph_json(text);
    return parse_hypergraph_text(text);
}

Json to_json(const Coloring & c)
{
    return Json{{"colors_used", c.colors_used()}, {"colors", c.colors()}};
}

Json to_json(const DefectCertificate & c)
{
    return Json{{"kind", "defect"}, {"equitable", c.equitable}, {"removed", c.removed}, {"parts", c.parts}};
}

Json to_json(const KneserColoring & c)
{
    Json classes = Json::array();
    for (const auto & cls : c.classes)
        classes.push_back(Json{{"edges", cls.edges}, {"witness", cls.witness}});
    return Json{{"kind", "kneser-coloring"}, {"r", c.r}, {"classes", std::move(classes)}};
}

Json to_json(const Report & r)
{
    Json certificates = Json::array();
    for (const auto & c : r.certificates)
        certificates.push_back(Json::parse(c));
    return Json{
        {"schema", schema_version},
        {"subject", r.subject_id},
        {"verdict", to_string(r.verdict)},
        {"parameters", r.parameters},
        {"computed", r.computed},
        {"notes", r.notes},
        {"certificates", std::move(certificates)},
    };
}

std::string write_json_line(const Report & r)
{
    return to_json(r).dump();
}

std::string write_table(const Report & r)
{
    std::ostringstream out;
    out << r.subject_id << ": " << to_string(r.verdict) << '\n';
    auto block = [&] (const char * title, const std::map<std::string, std::int64_t> & values) {
        if (values.empty())
            return;
        out << "  " << title << '\n';
        for (const auto & [k, v] : values)
            out << "    " << k << std::string(k.size() < 24 ? 24 - k.size() : 1, ' ') << v << '\n';
    };
    block("parameters", r.parameters);
    block("computed", r.computed);
    for (const auto & note : r.notes)
        out << "  note: " << note << '\n';
    if (! r.certificates.empty())
        out << "  certificates: " << r.certificates.size() << '\n';
    return out.str();
}

FamilyParams parse_family_params(const Json & j)
{
    if (! j.is_object() || ! j.contains("family") || ! j["family"].is_string())
        throw InvalidArgument("family parameters need a string 'family' field");
    FamilyParams p;
    p.family = parse_family(j["family"].get<std::string>());
    for (const auto & [key, value] : j.items()) {
        if (key == "family" || key == "schema")
            continue;
        if (! value.is_number_integer())
            throw InvalidArgument("family parameter '" + key + "' must be an integer");
        p.values[key] = value.get<int>();
    }
    return p;
}

} // namespace kdefect
