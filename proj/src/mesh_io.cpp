#include "oseenvb/mesh.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace oseenvb {

namespace {

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    // Next non-empty line split into whitespace-separated tokens.
    std::vector<std::string> next(const char* expecting)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            for (std::string tok; ss >> tok;) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        throw ParseError(std::string("unexpected end of file, expecting ") + expecting, line_no_ + 1);
    }

    std::size_t line() const { return line_no_; }

private:
    std::istringstream in_;
    std::size_t line_no_ = 0;
};

template <typename T>
T parse_number(const std::string& tok, std::size_t line)
{
    T value{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("malformed number '" + tok + "'", line);
    return value;
}

void expect_count(const std::vector<std::string>& tokens, std::size_t n, std::size_t line, const char* what)
{
    if (tokens.size() != n)
        throw ParseError(std::string("expected ") + std::to_string(n) + " fields for " + what + ", got " +
                             std::to_string(tokens.size()),
                         line);
}

void append_double(std::string& out, double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    out.append(buf, ptr);
}

} // namespace

TriMesh parse_mesh(const std::string& text)
{
    LineReader reader(text);
    auto header = reader.next("header");
    if (header.size() != 2 || header[0] != "meshtxt" || header[1] != "1")
        throw ParseError("expected header 'meshtxt 1'", reader.line());

    auto counts = reader.next("counts");
    expect_count(counts, 3, reader.line(), "counts");
    const long nv = parse_number<long>(counts[0], reader.line());
    const long nt = parse_number<long>(counts[1], reader.line());
    const long nbe = parse_number<long>(counts[2], reader.line());
    if (nv < 3 || nt < 1 || nbe < 0) throw ParseError("invalid entity counts", reader.line());

    std::vector<Vec2> vertices;
    vertices.reserve(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i) {
        auto tok = reader.next("vertex");
        expect_count(tok, 2, reader.line(), "vertex");
        vertices.emplace_back(parse_number<double>(tok[0], reader.line()), parse_number<double>(tok[1], reader.line()));
    }

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<std::size_t>(nt));
    for (long i = 0; i < nt; ++i) {
        auto tok = reader.next("triangle");
        expect_count(tok, 3, reader.line(), "triangle");
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            tri[static_cast<std::size_t>(k)] = parse_number<int>(tok[static_cast<std::size_t>(k)], reader.line());
            if (tri[static_cast<std::size_t>(k)] < 0 || tri[static_cast<std::size_t>(k)] >= nv)
                throw ParseError("vertex index out of range", reader.line());
        }
        triangles.push_back(tri);
    }

    std::vector<BoundaryEdge> boundary;
    boundary.reserve(static_cast<std::size_t>(nbe));
    for (long i = 0; i < nbe; ++i) {
        auto tok = reader.next("boundary edge");
        expect_count(tok, 3, reader.line(), "boundary edge");
        BoundaryEdge be;
        be.v0 = parse_number<int>(tok[0], reader.line());
        be.v1 = parse_number<int>(tok[1], reader.line());
        const int tag = parse_number<int>(tok[2], reader.line());
        if (tag != 1 && tag != 2) throw ParseError("boundary tag must be 1 or 2", reader.line());
        be.tag = static_cast<BoundaryTag>(tag);
        boundary.push_back(be);
    }
    return TriMesh(std::move(vertices), std::move(triangles), boundary);
}

TriMesh load_mesh(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open mesh file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_mesh(buffer.str());
}

std::string format_mesh(const TriMesh& mesh)
{
    const auto boundary = mesh.boundary_edges();
    std::string out = "meshtxt 1\n";
    out += std::to_string(mesh.num_vertices()) + " " + std::to_string(mesh.num_triangles()) + " " +
           std::to_string(boundary.size()) + "\n";
    for (const auto& v : mesh.vertices()) {
        append_double(out, v.x());
        out += ' ';
        append_double(out, v.y());
        out += '\n';
    }
    for (const auto& t : mesh.triangles())
        out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
    for (const auto& be : boundary)
        out += std::to_string(be.v0) + " " + std::to_string(be.v1) + " " +
               std::to_string(static_cast<int>(be.tag)) + "\n";
    return out;
}

void save_mesh(const TriMesh& mesh, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write mesh file '" + path + "'");
    out << format_mesh(mesh);
}

} // namespace oseenvb
