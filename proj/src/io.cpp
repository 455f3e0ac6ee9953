#include "p2t/io.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace p2t {

using nlohmann::json;

namespace {

constexpr const char* kGraphHeader = "p2t-graph v1";
constexpr const char* kPartitionHeader = "p2t-partition v1";

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ls >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << kGraphHeader << '\n';
    for (const auto& [u, v] : g.edges())
        out << g.label(u).str() << ' ' << g.label(v).str() << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kGraphHeader)
        throw FormatError("expected header '" + std::string(kGraphHeader) + "'");
    Graph g;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw FormatError("line " + std::to_string(lineno) + ": expected two vertex labels");
        try {
            g.add_edge(VertexLabel::parse(tokens[0]), VertexLabel::parse(tokens[1]));
        } catch (const std::invalid_argument& e) {
            throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_partition(const Graph& g, const EdgePartition& p) {
    if (static_cast<int>(p.class_of.size()) != g.edge_count())
        throw std::invalid_argument("partition does not cover the graph's edge set");
    std::ostringstream out;
    out << kPartitionHeader << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << g.label(g.edges()[e].first).str() << ' ' << g.label(g.edges()[e].second).str() << ' '
            << class_char(p.class_of[e]) << '\n';
    return out.str();
}

EdgePartition parse_partition(std::istream& in, const Graph& g) {
    std::string line;
    if (!std::getline(in, line) || line != kPartitionHeader)
        throw FormatError("expected header '" + std::string(kPartitionHeader) + "'");
    EdgePartition p;
    p.class_of.resize(g.edge_count());
    std::vector<bool> covered(g.edge_count(), false);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3 || (tokens[2] != "A" && tokens[2] != "B"))
            throw FormatError("line " + std::to_string(lineno) +
                              ": expected '<label> <label> <A|B>'");
        std::optional<int> e;
        try {
            e = g.find_edge(VertexLabel::parse(tokens[0]), VertexLabel::parse(tokens[1]));
        } catch (const std::invalid_argument& err) {
            throw FormatError("line " + std::to_string(lineno) + ": " + err.what());
        }
        if (!e)
            throw FormatError("line " + std::to_string(lineno) + ": edge " + tokens[0] + " -- " +
                              tokens[1] + " is not in the graph");
        if (covered[*e])
            throw FormatError("line " + std::to_string(lineno) + ": duplicate edge");
        covered[*e] = true;
        p.class_of[*e] = tokens[2] == "A" ? EdgeClass::A : EdgeClass::B;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!covered[e])
            throw FormatError("partition misses edge " + g.label(g.edges()[e].first).str() + " -- " +
                              g.label(g.edges()[e].second).str());
    return p;
}

EdgePartition parse_partition(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_partition(in, g);
}

namespace {

json label_json(const VertexLabel& l) { return l.str(); }

VertexLabel label_from_json(const json& j) { return VertexLabel::parse(j.get<std::string>()); }

Literal literal_from_vertex(const VertexLabel& l) {
    if (l.kind == VertexKind::V) return pos(l.idx[0]);
    if (l.kind == VertexKind::NV) return neg(l.idx[0]);
    throw FormatError("literal_vertex must be a v(...) or nv(...) label, got " + l.str());
}

}  // namespace

std::string serialize_manifest(const ReductionManifest& m) {
    json j;
    j["num_vars"] = m.num_vars;
    j["alpha"] = label_json(m.alpha);
    j["omega"] = label_json(m.omega);
    j["variables"] = json::array();
    for (const VariableGadget& gadget : m.variables)
        j["variables"].push_back({{"t_prev", label_json(gadget.t_prev)},
                                  {"v", label_json(gadget.v)},
                                  {"nv", label_json(gadget.nv)},
                                  {"t", label_json(gadget.t)}});
    j["clauses"] = json::array();
    for (const auto& positions : m.clauses) {
        json clause = json::array();
        for (const ClausePosition& pos : positions) {
            json pg = json::array();
            for (const VertexLabel& corner : pos.pg) pg.push_back(label_json(corner));
            clause.push_back({{"p", label_json(pos.p)},
                              {"q", label_json(pos.q)},
                              {"r", label_json(pos.r)},
                              {"pg", pg},
                              {"literal_vertex", label_json(pos.literal_vertex)}});
        }
        j["clauses"].push_back(clause);
    }
    return j.dump(2) + "\n";
}

ReductionManifest parse_manifest(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("manifest is not valid JSON: ") + e.what());
    }
    try {
        ReductionManifest m;
        m.num_vars = j.at("num_vars").get<int>();
        m.alpha = label_from_json(j.at("alpha"));
        m.omega = label_from_json(j.at("omega"));
        for (const json& gadget : j.at("variables"))
            m.variables.push_back({label_from_json(gadget.at("t_prev")),
                                   label_from_json(gadget.at("v")),
                                   label_from_json(gadget.at("nv")),
                                   label_from_json(gadget.at("t"))});
        for (const json& clause : j.at("clauses")) {
            std::vector<ClausePosition> positions;
            for (const json& entry : clause) {
                ClausePosition pos;
                pos.p = label_from_json(entry.at("p"));
                pos.q = label_from_json(entry.at("q"));
                pos.r = label_from_json(entry.at("r"));
                const json& pg = entry.at("pg");
                if (pg.size() != 4) throw FormatError("pg must list four corners");
                for (int c = 0; c < 4; ++c) pos.pg[c] = label_from_json(pg[c]);
                pos.literal_vertex = label_from_json(entry.at("literal_vertex"));
                pos.literal = literal_from_vertex(pos.literal_vertex);
                positions.push_back(std::move(pos));
            }
            m.clauses.push_back(std::move(positions));
        }
        if (static_cast<int>(m.variables.size()) != m.num_vars + 2)
            throw FormatError("manifest must list gadgets for variables 0..n+1");
        return m;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed manifest: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed manifest: ") + e.what());
    }
}

ReductionManifest parse_manifest(const std::string& text) {
    std::istringstream in(text);
    return parse_manifest(in);
}

std::string serialize_assignment(const Assignment& a) {
    std::ostringstream out;
    for (int i = 1; i <= a.num_vars(); ++i) {
        if (i > 1) out << ' ';
        out << (a.value(i) ? i : -i);
    }
    out << '\n';
    return out.str();
}

Assignment parse_assignment(std::istream& in, int num_vars) {
    Assignment a;
    a.values.resize(num_vars);
    std::vector<bool> seen(num_vars, false);
    long value;
    while (in >> value) {
        const long var = value < 0 ? -value : value;
        if (var < 1 || var > num_vars)
            throw FormatError("assignment variable " + std::to_string(var) + " out of range 1.." +
                              std::to_string(num_vars));
        if (seen[var - 1]) throw FormatError("variable " + std::to_string(var) + " set twice");
        seen[var - 1] = true;
        a.values[var - 1] = value > 0;
    }
    if (!in.eof()) throw FormatError("assignment contains a non-integer token");
    for (int i = 0; i < num_vars; ++i)
        if (!seen[i]) throw FormatError("assignment misses variable " + std::to_string(i + 1));
    return a;
}

Assignment parse_assignment(const std::string& text, int num_vars) {
    std::istringstream in(text);
    return parse_assignment(in, num_vars);
}

std::string export_dot(const Graph& g, const EdgePartition* partition) {
    std::ostringstream out;
    out << "graph p2t {\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        out << "  \"" << g.label(u).str() << "\" -- \"" << g.label(v).str() << '"';
        std::vector<std::string> attrs;
        if (g.label(u).kind == VertexKind::PG || g.label(v).kind == VertexKind::PG)
            attrs.push_back("style=dashed");
        if (partition)
            attrs.push_back(partition->class_of[e] == EdgeClass::A ? "color=blue" : "color=red");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? "," : "") << attrs[i];
            out << ']';
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace p2t
