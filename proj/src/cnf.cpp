#include <kdefect/cnf.hpp>

#include <kdefect/certificates.hpp>
#include <kdefect/solvers.hpp>

#include <map>
#include <sstream>

namespace kdefect {

CnfTask parse_cnf_task(const Json & j)
{
    if (! j.is_object() || ! j.contains("task") || ! j["task"].is_string())
        throw InvalidArgument("CNF task needs a string 'task' field (colorable or kneser)");
    CnfTask task;
    auto kind = j["task"].get<std::string>();
    if (kind == "colorable")
        task.kind = CnfTask::Kind::Colorable;
    else if (kind == "kneser")
        task.kind = CnfTask::Kind::Kneser;
    else
        throw InvalidArgument("unknown CNF task '" + kind + "'");

    for (const auto & [key, value] : j.items()) {
        if (key == "task")
            continue;
        if (key == "r" && value.is_number_integer())
            task.r = value.get<int>();
        else if (key == "t" && value.is_number_integer())
            task.t = value.get<int>();
        else if (key == "equitable" && value.is_boolean())
            task.equitable = value.get<bool>();
        else
            throw InvalidArgument("bad CNF task field '" + key + "'");
    }
    if (task.kind == CnfTask::Kind::Colorable && task.r < 1)
        throw InvalidArgument("colorable task needs r >= 1");
    if (task.kind == CnfTask::Kind::Kneser && (task.r < 2 || task.t < 0))
        throw InvalidArgument("kneser task needs r >= 2 and t >= 0");
    if (task.kind == CnfTask::Kind::Kneser && task.equitable)
        throw InvalidArgument("'equitable' applies to the colorable task only");
    return task;
}

Json to_json(const CnfTask & task)
{
    if (task.kind == CnfTask::Kind::Colorable)
        return Json{{"task", "colorable"}, {"r", task.r}, {"equitable", task.equitable}};
    return Json{{"task", "kneser"}, {"r", task.r}, {"t", task.t}};
}

namespace
{
    class Builder
    {
    public:
        int fresh() { return ++_vars; }
        int vars() const { return _vars; }

        void add(std::vector<int> clause) { _clauses.push_back(std::move(clause)); }

        // Sinz sequential counter, both directions, forcing exactly k of xs.
        void exactly(const std::vector<int> & xs, int k)
        {
            int n = static_cast<int>(xs.size());
            if (k > n) {
                add({});
                return;
            }
            if (_true == 0) {
                _true = fresh();
                add({_true});
            }
            int width = k + 1;
            // reg[i][j]: at least j of the first i inputs hold (1 <= j <= width)
            std::vector<std::vector<int>> reg(n + 1, std::vector<int>(width + 1, 0));
            auto lit = [&] (int i, int j) {
                if (j == 0) return _true;
                if (i < j) return -_true;
                return reg[i][j];
            };
            for (int i = 1 ; i <= n ; ++i)
                for (int j = 1 ; j <= std::min(i, width) ; ++j)
                    reg[i][j] = fresh();
            for (int i = 1 ; i <= n ; ++i) {
                int x = xs[i - 1];
                for (int j = 1 ; j <= std::min(i, width) ; ++j) {
                    add({-lit(i - 1, j), lit(i, j)});
                    add({-lit(i - 1, j - 1), -x, lit(i, j)});
                    add({-lit(i, j), lit(i - 1, j), lit(i - 1, j - 1)});
                    add({-lit(i, j), lit(i - 1, j), x});
                }
            }
            add({lit(n, k)});
            add({-lit(n, k + 1)});
        }

        CnfFormula finish(Json map)
        {
            map["num_vars"] = _vars;
            map["num_clauses"] = _clauses.size();
            return {_vars, std::move(_clauses), std::move(map)};
        }

    private:
        int _vars = 0;
        int _true = 0;
        std::vector<std::vector<int>> _clauses;
    };

    CnfFormula encode_colorable(const Hypergraph & h, const CnfTask & task)
    {
        int n = h.order(), r = task.r;
        Builder b;
        Json variables = Json::array();
        auto x = [r] (int v, int c) { return (v - 1) * r + c; };
        for (int v = 1 ; v <= n ; ++v)
            for (int c = 1 ; c <= r ; ++c) {
                b.fresh();
                variables.push_back(Json{{"var", x(v, c)}, {"vertex", v}, {"color", c}});
            }

        for (int v = 1 ; v <= n ; ++v) {
            std::vector<int> some;
            for (int c = 1 ; c <= r ; ++c) {
                some.push_back(x(v, c));
                for (int d = c + 1 ; d <= r ; ++d)
                    b.add({-x(v, c), -x(v, d)});
            }
            b.add(some);
        }
        for (const auto & e : h.edges())
            for (int c = 1 ; c <= r ; ++c) {
                std::vector<int> clause;
                for (Vertex v : e)
                    clause.push_back(-x(v, c));
                b.add(clause);
            }

        if (task.equitable) {
            // color classes 1..n%r get the larger size; colors are interchangeable
            int q = n / r, large = n % r;
            for (int c = 1 ; c <= r ; ++c) {
                std::vector<int> column;
                for (int v = 1 ; v <= n ; ++v)
                    column.push_back(x(v, c));
                b.exactly(column, c <= large ? q + 1 : q);
            }
        }

        Json map{{"schema", schema_version}, {"kind", "cnf-map"}, {"task", to_json(task)},
            {"hypergraph", to_json(h)}, {"variables", std::move(variables)}};
        return b.finish(std::move(map));
    }

    CnfFormula encode_kneser(const Hypergraph & h, const CnfTask & task)
    {
        const auto & edges = h.edges();
        int m = static_cast<int>(edges.size()), t = task.t, r = task.r;
        Builder b;
        Json variables = Json::array();
        auto y = [t] (int i, int c) { return (i - 1) * t + c; };
        for (int i = 1 ; i <= m ; ++i)
            for (int c = 1 ; c <= t ; ++c) {
                b.fresh();
                variables.push_back(Json{{"var", y(i, c)}, {"edge", edges[i - 1]}, {"class", c}});
            }

        for (int i = 1 ; i <= m ; ++i) {
            std::vector<int> some;
            for (int c = 1 ; c <= t ; ++c) {
                some.push_back(y(i, c));
                for (int d = c + 1 ; d <= t ; ++d)
                    b.add({-y(i, c), -y(i, d)});
            }
            b.add(some);
        }

        // every r-set of pairwise disjoint edges is forbidden inside a class
        std::vector<int> chosen;
        auto extend = [&] (auto && self, int from) -> void {
            if (static_cast<int>(chosen.size()) == r) {
                for (int c = 1 ; c <= t ; ++c) {
                    std::vector<int> clause;
                    for (int i : chosen)
                        clause.push_back(-y(i + 1, c));
                    b.add(clause);
                }
                return;
            }
            for (int i = from ; i < m ; ++i) {
                bool ok = true;
                for (int j : chosen)
                    ok = ok && edges_disjoint(edges[i], edges[j]);
                if (! ok)
                    continue;
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        extend(extend, 0);

        Json map{{"schema", schema_version}, {"kind", "cnf-map"}, {"task", to_json(task)},
            {"hypergraph", to_json(h)}, {"variables", std::move(variables)}};
        return b.finish(std::move(map));
    }
}

CnfFormula encode(const Hypergraph & h, const CnfTask & task)
{
    if (task.kind == CnfTask::Kind::Colorable)
        return encode_colorable(h, task);
    return encode_kneser(h, task);
}

std::string write_dimacs(const CnfFormula & f)
{
    std::ostringstream out;
    out << "c " << f.map["task"].dump() << '\n';
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto & clause : f.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Model parse_model(const std::string & text)
{
    Model model;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string token;
        if (! (row >> token) || token == "c")
            continue;
        if (token == "s" || token == "SAT" || token == "UNSAT" || token == "SATISFIABLE" || token == "UNSATISFIABLE") {
            std::string status = token;
            if (token == "s")
                row >> status;
            if (status == "UNSAT" || status == "UNSATISFIABLE")
                model.unsat = true;
            continue;
        }
        if (token != "v") {
            row.clear();
            row.str(line);
        }
        while (row >> token) {
            try {
                std::size_t used = 0;
                int lit = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                if (lit != 0)
                    model.literals.push_back(lit);
            }
            catch (const std::exception &) {
                throw ParseError("'" + token + "' is not a literal", line_no);
            }
        }
    }
    return model;
}

ModelCheck check_model(const Json & map, const Model & model)
{
    if (! map.is_object() || map.value("kind", "") != "cnf-map")
        throw InvalidArgument("not a CNF map file");
    if (model.unsat)
        return {false, "solver reported UNSAT; nothing to decode", nullptr};

    auto task = parse_cnf_task(map.at("task"));
    Hypergraph h = parse_hypergraph_json(map.at("hypergraph").dump());

    std::map<int, bool> value;
    for (int lit : model.literals)
        value[std::abs(lit)] = lit > 0;
    auto holds = [&] (int var) {
        auto it = value.find(var);
        return it != value.end() && it->second;
    };

    if (task.kind == CnfTask::Kind::Colorable) {
        std::vector<std::vector<Vertex>> parts(task.r);
        std::vector<int> count(h.order() + 1, 0);
        for (const auto & v : map.at("variables"))
            if (holds(v.at("var").get<int>())) {
                int vertex = v.at("vertex").get<int>();
                parts[v.at("color").get<int>() - 1].push_back(vertex);
                ++count[vertex];
            }
        for (int v = 1 ; v <= h.order() ; ++v)
            if (count[v] != 1)
                return {false, "vertex " + std::to_string(v) + " has " + std::to_string(count[v]) + " colors", nullptr};
        DefectCertificate cert{{}, parts, task.equitable};
        std::string why;
        if (! validate_defect_certificate(h, task.r, cert, &why))
            return {false, why, nullptr};
        return {true, "valid " + std::string(task.equitable ? "equitable " : "") + std::to_string(task.r) + "-coloring",
            to_json(cert)};
    }

    std::map<Edge, int> owner;
    for (const auto & v : map.at("variables"))
        if (holds(v.at("var").get<int>())) {
            Edge e = v.at("edge").get<Edge>();
            if (owner.count(e))
                return {false, "an edge is assigned to two classes", nullptr};
            owner[e] = v.at("class").get<int>();
        }
    std::map<int, std::vector<Edge>> by_class;
    for (const auto & e : h.edges()) {
        if (! owner.count(e))
            return {false, "an edge has no class", nullptr};
        by_class[owner[e]].push_back(e);
    }
    std::vector<std::vector<Edge>> classes;
    for (auto & [_, edges] : by_class)
        classes.push_back(std::move(edges));
    auto coloring = make_kneser_coloring(task.r, std::move(classes));
    std::string why;
    if (! validate_kneser_coloring(h, task.r, coloring, &why))
        return {false, why, nullptr};
    return {true, "valid Kneser coloring with " + std::to_string(coloring.classes_used()) + " classes", to_json(coloring)};
}

} // namespace kdefect
