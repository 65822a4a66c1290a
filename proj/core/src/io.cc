/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/io.hh>
#include <indsat/errors.hh>

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace indsat
{
    namespace
    {
        /// Yields non-blank, comment-stripped lines with their line numbers.
        class LineReader
        {
            private:
                std::istream & _in;
                int _line = 0;

            public:
                explicit LineReader(std::istream & in) :
                    _in(in)
                {
                }

                auto next(std::string & out) -> bool
                {
                    std::string raw;
                    while (std::getline(_in, raw)) {
                        ++_line;
                        if (auto hash = raw.find('#') ; hash != std::string::npos)
                            raw.erase(hash);
                        if (raw.find_first_not_of(" \t\r") == std::string::npos)
                            continue;
                        out = raw;
                        return true;
                    }
                    return false;
                }

                auto line() const -> int { return _line; }
        };

        auto expect_end(std::istringstream & s, int line) -> void
        {
            std::string rest;
            if (s >> rest)
                throw ParseError("unexpected trailing '" + rest + "'", line);
        }

        auto read_header(LineReader & lines, const std::string & keyword) -> std::istringstream
        {
            std::string text;
            if (! lines.next(text))
                throw ParseError("missing '" + keyword + "' header", 0);
            std::istringstream s(text);
            std::string word;
            if (! (s >> word) || word != keyword)
                throw ParseError("expected '" + keyword + "' header", lines.line());
            return s;
        }

        auto read_vertex_pair(std::istringstream & s, int n, int line) -> Pair
        {
            long long u, v;
            if (! (s >> u >> v))
                throw ParseError("expected two vertex numbers", line);
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("invalid pair " + std::to_string(u) + " " + std::to_string(v), line);
            if (u > v)
                throw ParseError("pairs are written with u < v", line);
            return Pair{ int(u), int(v) };
        }
    }

    auto read_trigraph(std::istream & in) -> Trigraph
    {
        LineReader lines(in);
        auto header = read_header(lines, "trigraph");
        int n;
        if (! (header >> n))
            throw ParseError("expected vertex count", lines.line());
        expect_end(header, lines.line());
        if (n < 0 || n > max_vertices)
            throw ParseError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices), lines.line());

        Trigraph result(n);
        std::set<std::pair<int, int>> seen;
        std::string text;
        while (lines.next(text)) {
            std::istringstream s(text);
            auto [u, v] = read_vertex_pair(s, n, lines.line());
            std::string c;
            if (! (s >> c) || c.size() != 1)
                throw ParseError("expected colour B, W or G", lines.line());
            expect_end(s, lines.line());
            if (! seen.emplace(u, v).second)
                throw ParseError("pair " + std::to_string(u) + " " + std::to_string(v) + " listed twice", lines.line());

            switch (c[0]) {
                case 'B': result.set_color(u, v, EdgeColor::Black); break;
                case 'W': result.set_color(u, v, EdgeColor::White); break;
                case 'G': result.set_color(u, v, EdgeColor::Gray); break;
                default:
                    throw ParseError("unknown colour '" + c + "'", lines.line());
            }
        }
        return result;
    }

    auto write_trigraph(std::ostream & out, const Trigraph & t) -> void
    {
        out << "trigraph " << t.size() << '\n';
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (auto c = t.color(u, v) ; c != EdgeColor::White)
                    out << u << ' ' << v << ' ' << to_char(c) << '\n';
    }

    auto read_pattern(std::istream & in, const std::string & name) -> PatternGraph
    {
        LineReader lines(in);
        auto header = read_header(lines, "graph");
        int k;
        if (! (header >> k))
            throw ParseError("expected vertex count", lines.line());
        expect_end(header, lines.line());
        if (k < 2 || k > 8)
            throw ParseError("patterns need 2 to 8 vertices", lines.line());

        Graph g(k);
        std::string text;
        while (lines.next(text)) {
            std::istringstream s(text);
            auto [u, v] = read_vertex_pair(s, k, lines.line());
            expect_end(s, lines.line());
            g.add_edge(u, v);
        }
        return make_pattern(g, name);
    }

    auto read_dnf(std::istream & in) -> DnfFormula
    {
        LineReader lines(in);
        auto header = read_header(lines, "dnf");
        long long m, c;
        if (! (header >> m >> c))
            throw ParseError("expected variable and clause counts", lines.line());
        expect_end(header, lines.line());
        if (m < 0 || m > max_dnf_variables || c < 0)
            throw ParseError("variable count must be 0.." + std::to_string(max_dnf_variables), lines.line());

        DnfFormula result{ static_cast<int>(m) };
        std::string text;
        while (lines.next(text)) {
            std::istringstream s(text);
            std::vector<Literal> literals;
            long long x;
            while (s >> x) {
                if (x == 0 || x > m || -x > m)
                    throw ParseError("literal " + std::to_string(x) + " out of range", lines.line());
                literals.push_back(Literal{ int((x > 0 ? x : -x) - 1), x > 0 });
            }
            if (! s.eof())
                throw ParseError("expected signed integers", lines.line());
            try {
                result.add_clause(literals);
            }
            catch (const ArgumentError & e) {
                throw ParseError(e.what(), lines.line());
            }
        }

        if (std::ssize(result.clauses()) != c)
            throw ParseError("header promised " + std::to_string(c) + " clauses, found "
                    + std::to_string(result.clauses().size()), 0);
        return result;
    }

    auto write_dnf(std::ostream & out, const DnfFormula & f) -> void
    {
        out << "dnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
        for (auto & c : f.clauses()) {
            bool first = true;
            for (auto & l : c.literals()) {
                out << (first ? "" : " ") << (l.positive ? "" : "-") << (l.variable + 1);
                first = false;
            }
            out << '\n';
        }
    }

    auto read_assignment(std::istream & in) -> PartialAssignment
    {
        std::vector<Truth> values;
        char c;
        while (in.get(c)) {
            switch (c) {
                case '1': values.push_back(Truth::True); break;
                case '0': values.push_back(Truth::False); break;
                case '-': values.push_back(Truth::Unassigned); break;
                case ' ': case '\t': case '\r': case '\n': break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "' in assignment", 0);
            }
        }

        PartialAssignment result{ static_cast<int>(values.size()) };
        for (int v = 0 ; v < int(values.size()) ; ++v)
            result.set(v, values[unsigned(v)]);
        return result;
    }

    auto write_assignment(std::ostream & out, const PartialAssignment & alpha) -> void
    {
        for (int v = 0 ; v < alpha.size() ; ++v)
            out << (alpha[v] == Truth::True ? '1' : alpha[v] == Truth::False ? '0' : '-');
        out << '\n';
    }

    auto read_trigraph_file(const std::string & path) -> Trigraph
    {
        std::ifstream in(path);
        if (! in)
            throw ArgumentError("cannot open '" + path + "'");
        return read_trigraph(in);
    }

    auto write_trigraph_file(const std::string & path, const Trigraph & t) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw ArgumentError("cannot write '" + path + "'");
        write_trigraph(out, t);
    }
}
