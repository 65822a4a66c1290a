/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_CONSTRUCTIONS_HH
#define INDSAT_GUARD_INDSAT_CONSTRUCTIONS_HH 1

#include <indsat/trigraph.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace indsat
{
    enum class ConstructionVariant
    {
        Standard,
        AlternativeMod3
    };

    struct ConstructionSpec
    {
        int n = 0;
        ConstructionVariant variant = ConstructionVariant::Standard;

        /// Role label ("a1", "b1", "c0", "u", "v1", "z.a2", ...) to vertex.
        std::map<std::string, int> labeling;

        /// Throws std::out_of_range for an unknown role.
        auto at(const std::string & role) const -> int { return labeling.at(role); }
    };

    struct Construction
    {
        Trigraph trigraph;
        ConstructionSpec spec;
    };

    /**
     * The P4 upper-bound trigraph on n >= 4 vertices with ceil((n+1)/3) gray
     * pairs. Vertices a_i b_i c_i for i = 1..k, then a_{k+1} b_{k+1}, then c_0
     * (n = 3k+3) or a_0 b_0 (n = 3k+4), numbered in that order.
     */
    auto construct_tn(int n) -> Construction;

    /**
     * The variant for n divisible by 3, n >= 6: a recursive indsat(P4) block Z
     * on n - 4 vertices, a gray star u-v1, u-v2 with v1v2 black, Z black to v1
     * and v2, and an extra vertex y. Every other pair is white.
     *
     * Z is the complement of construct_tn(n - 4), or a single gray edge when
     * n = 6. Z = construct_tn(n - 4) itself does not work for n >= 9: its c1 is
     * black to all of Z and to v1, v2, so flipping c1-u creates no induced P4.
     */
    auto construct_alternative(int n) -> Construction;

    /// The same recipe around a caller-chosen Z (at least two vertices); saturation is not checked.
    auto construct_alternative(const Trigraph & z) -> Trigraph;

    enum class Family
    {
        P3,
        P4,
        P5,
        Ph,
        Kh,
        C4,
        KhMinus
    };

    struct FamilyId
    {
        Family family;
        int h = 0;       // Ph, Kh, KhMinus only

        auto name() const -> std::string;
        auto vertex_count() const -> int;
    };

    /// p3, p4, p5, p<h>, k<h>, c4, khminus:<h>.
    auto parse_family(const std::string & id) -> FamilyId;

    /// Classical saturation number; nullopt where only a bound is known (K_h minus an edge).
    auto sat_formula(FamilyId id, std::int64_t n) -> std::optional<std::int64_t>;

    /// Induced saturation number, for the families where it is known exactly.
    auto isat_formula(FamilyId id, std::int64_t n) -> std::int64_t;

    /// ceil((n+1)/3).
    constexpr auto p4_isat_value(std::int64_t n) -> std::int64_t
    {
        return (n + 3) / 3;
    }
}

#endif
