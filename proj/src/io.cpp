#include "ikmp/io.hpp"

#include <fstream>
#include <sstream>

namespace ikmp {

using nlohmann::json;

void write_graph(std::ostream& os, const Graph& g) {
    os << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

Graph read_graph(std::istream& is) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) {
        throw InputError("graph line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("bad header");
        } else if (tag == "e") {
            if (n < 0) fail("edge before header");
            Edge e{};
            if (!(ls >> e.u >> e.v)) fail("bad edge");
            edges.push_back(e);
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing data");
    }
    if (n < 0) throw InputError("graph has no header");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    write_graph(out, g);
}

json fault_set_to_json(const FaultSet& f) {
    json edges = json::array();
    for (const auto& e : f.edges()) edges.push_back({e.u, e.v});
    return {{"vertices", f.vertices()}, {"edges", edges}};
}

FaultSet fault_set_from_json(const json& j) {
    try {
        std::vector<Vertex> vs = j.value("vertices", std::vector<Vertex>{});
        std::vector<Edge> es;
        for (const auto& e : j.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2) throw InputError("fault edge must be a pair");
            es.push_back(make_edge(e[0].get<Vertex>(), e[1].get<Vertex>()));
        }
        return FaultSet(std::move(vs), std::move(es));
    } catch (const json::exception& ex) {
        throw InputError(std::string("bad fault set: ") + ex.what());
    }
}

json assignment_to_json(const Graph& g, const IntegerKMatching& m) {
    json values = json::object();
    for (int j = 0; j < g.size(); ++j) {
        const auto& e = g.edges()[j];
        values[std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v))] = m.values.at(j);
    }
    return {{"k", m.k}, {"values", values}};
}

IntegerKMatching assignment_from_json(const Graph& g, const json& j) {
    IntegerKMatching m;
    try {
        m.k = j.at("k").get<int>();
        m.values.assign(g.size(), -1);
        for (const auto& [key, val] : j.at("values").items()) {
            auto dash = key.find('-');
            if (dash == std::string::npos) throw InputError("bad edge key '" + key + "'");
            Vertex a = g.index_of(std::stoi(key.substr(0, dash)));
            Vertex b = g.index_of(std::stoi(key.substr(dash + 1)));
            int idx = (a < 0 || b < 0) ? -1 : g.edge_index(a, b);
            if (idx < 0) throw InputError("assignment names unknown edge '" + key + "'");
            if (m.values[idx] != -1) throw InputError("edge '" + key + "' assigned twice");
            m.values[idx] = val.get<int>();
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("bad assignment: ") + ex.what());
    } catch (const std::logic_error& ex) {  // stoi
        throw InputError(std::string("bad assignment key: ") + ex.what());
    }
    for (int idx = 0; idx < g.size(); ++idx)
        if (m.values[idx] == -1) throw InputError("assignment misses an edge");
    return m;
}

json labels_to_json(const ArrangementGraph& a) {
    json out = json::object();
    for (std::size_t v = 0; v < a.labels.size(); ++v) out[std::to_string(v)] = a.labels[v];
    return out;
}

json certificate_to_json(const Lemma41Certificate& c) {
    return {{"s", c.s}, {"odd", c.odd_count}, {"isolated", c.isolated_count}, {"slack", c.slack}};
}

json result_to_json(const PreclusionQuery& q, const PreclusionResult& r) {
    json out;
    out["k"] = q.k;
    out["strong"] = q.strong;
    std::visit(
        [&](const auto& mode) {
            using M = std::decay_t<decltype(mode)>;
            if constexpr (std::is_same_v<M, ExactMode>) {
                out["mode"] = "exact";
            } else if constexpr (std::is_same_v<M, VerifyMode>) {
                out["mode"] = "verify";
                out["m"] = mode.m;
            } else {
                out["mode"] = "sample";
                out["m"] = mode.m;
                out["samples"] = mode.count;
                out["seed"] = mode.seed;
            }
        },
        q.mode);
    out["value"] = r.value ? json(*r.value) : json(nullptr);
    out["witness"] = r.witness ? fault_set_to_json(*r.witness) : json(nullptr);
    if (r.counterexample) out["counterexample"] = fault_set_to_json(*r.counterexample);
    out["checked"] = r.checked;
    out["status"] = to_string(r.status);
    return out;
}

}  // namespace ikmp
