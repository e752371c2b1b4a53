#include "irregwalk/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "irregwalk/errors.hpp"

namespace irregwalk {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_index(std::string_view tok, int line_no)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": bad vertex index '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    int declared = -1;
    int max_index = -1;
    bool seen_data = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        line = line.substr(0, line.find('#'));

        auto tok = tokens(line);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two fields");
        if (tok[0] == "n") {
            if (seen_data)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": 'n' must come first");
            declared = to_index(tok[1], line_no);
            seen_data = true;
            continue;
        }
        seen_data = true;
        int u = to_index(tok[0], line_no);
        int v = to_index(tok[1], line_no);
        max_index = std::max({max_index, u, v});
        edges.push_back(Edge{u, v});
    }
    int n = declared >= 0 ? declared : max_index + 1;
    return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path)
{
    return parse_edge_list(read_file(path));
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Walk parse_walk(std::string_view text)
{
    Walk w;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        for (auto tok : tokens(text.substr(pos, end - pos)))
            w.vertices.push_back(to_index(tok, line_no));
        pos = end + 1;
    }
    return w;
}

Walk read_walk(const std::filesystem::path& path)
{
    return parse_walk(read_file(path));
}

std::string format_walk(const Walk& w)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        out << (i ? " " : "") << w.vertices[i];
    return out.str();
}

std::string to_dot(const Graph& g, const Walk& w)
{
    if (!validate_walk(g, w))
        throw Error(ErrorCode::InvalidWalk, "walk does not fit the graph");
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -> " << e.v << " [dir=none];\n";
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        out << "  " << w.vertices[i] << " -> " << w.vertices[i + 1] << " [style=dashed, color=red, label=\""
            << i + 1 << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace irregwalk
