/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/errors.hh>

#include <algorithm>
#include <vector>

namespace indsat
{
    namespace
    {
        struct Role
        {
            char letter;     // 'a', 'b' or 'c'
            int index;

            auto label() const -> std::string { return std::string(1, letter) + std::to_string(index); }
        };

        auto color_between(const Role & p, const Role & q, bool has_c0) -> EdgeColor
        {
            if (p.letter != 'c' && q.letter != 'c')
                return p.index == q.index ? EdgeColor::Gray : EdgeColor::White;

            if (p.letter == 'c' && q.letter == 'c') {
                if (has_c0 && std::min(p.index, q.index) == 0 && std::max(p.index, q.index) == 1)
                    return EdgeColor::Gray;
                return EdgeColor::Black;
            }

            const Role & c = p.letter == 'c' ? p : q;
            const Role & other = p.letter == 'c' ? q : p;
            return c.index <= other.index ? EdgeColor::Black : EdgeColor::White;
        }

        auto choose2(std::int64_t x) -> std::int64_t
        {
            return x * (x - 1) / 2;
        }

        auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            auto q = a / b;
            return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
        }

        auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            return -floor_div(-a, b);
        }
    }

    auto construct_tn(int n) -> Construction
    {
        if (n < 4)
            throw ArgumentError("the P4 construction needs n >= 4, got " + std::to_string(n));
        if (n > max_vertices)
            throw SizeError("the P4 construction is limited to " + std::to_string(max_vertices) + " vertices here");

        int residue = n % 3;
        int k = residue == 2 ? (n - 2) / 3 : residue == 0 ? (n - 3) / 3 : (n - 4) / 3;

        std::vector<Role> roles;
        for (int i = 1 ; i <= k ; ++i) {
            roles.push_back(Role{ 'a', i });
            roles.push_back(Role{ 'b', i });
            roles.push_back(Role{ 'c', i });
        }
        roles.push_back(Role{ 'a', k + 1 });
        roles.push_back(Role{ 'b', k + 1 });
        if (residue == 0)
            roles.push_back(Role{ 'c', 0 });
        else if (residue == 1) {
            roles.push_back(Role{ 'a', 0 });
            roles.push_back(Role{ 'b', 0 });
        }

        Construction result{ Trigraph(n), ConstructionSpec{ n, ConstructionVariant::Standard, {} } };
        for (int v = 0 ; v < n ; ++v) {
            result.spec.labeling.emplace(roles[unsigned(v)].label(), v);
            for (int u = 0 ; u < v ; ++u)
                result.trigraph.set_color(u, v, color_between(roles[unsigned(u)], roles[unsigned(v)], residue == 0));
        }
        return result;
    }

    auto construct_alternative(const Trigraph & z) -> Trigraph
    {
        int z_size = z.size(), n = z_size + 4;
        if (z_size < 2)
            throw ArgumentError("the alternative construction needs |Z| >= 2");
        if (n > max_vertices)
            throw SizeError("the alternative construction is limited to " + std::to_string(max_vertices) + " vertices here");

        Trigraph result(n);
        for (int v = 0 ; v < z_size ; ++v)
            for (int u = 0 ; u < v ; ++u)
                result.set_color(u, v, z.color(u, v));

        int u = z_size, v1 = z_size + 1, v2 = z_size + 2;
        result.set_color(u, v1, EdgeColor::Gray);
        result.set_color(u, v2, EdgeColor::Gray);
        result.set_color(v1, v2, EdgeColor::Black);
        for (int w = 0 ; w < z_size ; ++w) {
            result.set_color(w, v1, EdgeColor::Black);
            result.set_color(w, v2, EdgeColor::Black);
        }
        return result;
    }

    auto construct_alternative(int n) -> Construction
    {
        if (n % 3 != 0 || n < 6)
            throw ArgumentError("the alternative construction needs n divisible by 3 and n >= 6, got " + std::to_string(n));
        if (n > max_vertices)
            throw SizeError("the alternative construction is limited to " + std::to_string(max_vertices) + " vertices here");

        int z_size = n - 4;
        ConstructionSpec spec{ n, ConstructionVariant::AlternativeMod3, {} };

        Trigraph z(z_size);
        if (z_size >= 4) {
            auto inner = construct_tn(z_size);
            for (auto & [role, v] : inner.spec.labeling)
                spec.labeling.emplace("z." + role, v);
            z = complement(inner.trigraph);
        }
        else {
            spec.labeling.emplace("z.0", 0);
            spec.labeling.emplace("z.1", 1);
            z.set_color(0, 1, EdgeColor::Gray);
        }

        spec.labeling.emplace("u", z_size);
        spec.labeling.emplace("v1", z_size + 1);
        spec.labeling.emplace("v2", z_size + 2);
        spec.labeling.emplace("y", z_size + 3);
        return Construction{ construct_alternative(z), std::move(spec) };
    }

    auto FamilyId::name() const -> std::string
    {
        switch (family) {
            case Family::P3:      return "p3";
            case Family::P4:      return "p4";
            case Family::P5:      return "p5";
            case Family::Ph:      return "p" + std::to_string(h);
            case Family::Kh:      return "k" + std::to_string(h);
            case Family::C4:      return "c4";
            case Family::KhMinus: return "khminus:" + std::to_string(h);
        }
        return "?";
    }

    auto FamilyId::vertex_count() const -> int
    {
        switch (family) {
            case Family::P3: return 3;
            case Family::P4: return 4;
            case Family::P5: return 5;
            case Family::C4: return 4;
            case Family::Ph:
            case Family::Kh:
            case Family::KhMinus: return h;
        }
        return 0;
    }

    auto parse_family(const std::string & id) -> FamilyId
    {
        auto number = [&] (std::size_t from) -> int {
            if (from >= id.size() || from + 4 < id.size()
                    || ! std::all_of(id.begin() + long(from), id.end(), [] (char c) { return c >= '0' && c <= '9'; }))
                throw ArgumentError("unknown family '" + id + "'");
            return std::stoi(id.substr(from));
        };

        if (id == "p3")
            return { Family::P3 };
        if (id == "p4")
            return { Family::P4 };
        if (id == "p5")
            return { Family::P5 };
        if (id == "c4")
            return { Family::C4 };
        if (id.rfind("khminus:", 0) == 0) {
            int h = number(8);
            if (h < 3)
                throw ArgumentError("khminus needs h >= 3");
            return { Family::KhMinus, h };
        }
        if (! id.empty() && id[0] == 'p') {
            int h = number(1);
            if (h < 6)
                throw ArgumentError("unsupported path family '" + id + "'");
            return { Family::Ph, h };
        }
        if (! id.empty() && id[0] == 'k') {
            int h = number(1);
            if (h < 3)
                throw ArgumentError("complete graph family needs h >= 3");
            return { Family::Kh, h };
        }
        throw ArgumentError("unknown family '" + id + "'");
    }

    auto sat_formula(FamilyId id, std::int64_t n) -> std::optional<std::int64_t>
    {
        if (n < id.vertex_count())
            throw ArgumentError(id.name() + " needs n >= " + std::to_string(id.vertex_count()));

        switch (id.family) {
            case Family::P3:
                return n / 2;

            case Family::P4:
                return n % 2 == 0 ? n / 2 : (n + 1) / 2 + 1;

            case Family::P5:
                return n - (floor_div(n - 2, 6) + 1);

            case Family::Ph: {
                int k = id.h / 2;
                if (id.h % 2 == 0)
                    return n - n / (3 * (std::int64_t{ 1 } << (k - 1)) - 1);
                return n - n / ((std::int64_t{ 1 } << (k + 1)) - 2);
            }

            case Family::Kh:
                return (id.h - 2) * n - choose2(id.h - 1);

            case Family::C4:
                if (n < 5)
                    throw ArgumentError("the C4 formula is stated for n >= 5");
                return ceil_div(3 * (n - 5), 2);

            case Family::KhMinus:
                return std::nullopt;
        }
        return std::nullopt;
    }

    auto isat_formula(FamilyId id, std::int64_t n) -> std::int64_t
    {
        if (n < id.vertex_count())
            throw ArgumentError(id.name() + " needs n >= " + std::to_string(id.vertex_count()));

        switch (id.family) {
            case Family::P4:      return p4_isat_value(n);
            case Family::P3:      return 0;
            case Family::Kh:      return (id.h - 2) * n - choose2(id.h - 1);
            case Family::KhMinus: return 0;
            default:
                throw ArgumentError("no known induced saturation number for " + id.name());
        }
    }
}
