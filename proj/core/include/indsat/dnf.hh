/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_DNF_HH
#define INDSAT_GUARD_INDSAT_DNF_HH 1

#include <indsat/bits.hh>
#include <indsat/graph.hh>
#include <indsat/trigraph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace indsat
{
    struct Literal
    {
        int variable;       // 0-based
        bool positive;

        friend auto operator== (const Literal &, const Literal &) -> bool = default;
    };

    /// A conjunction of literals, stored as the sets of variables that must be true and false.
    struct Clause
    {
        PairMask positive = 0, negative = 0;

        auto literals() const -> std::vector<Literal>;
        auto size() const -> int { return popcount(positive) + popcount(negative); }

        friend auto operator== (const Clause &, const Clause &) -> bool = default;
    };

    constexpr int max_dnf_variables = 128;

    /// A disjunction of clauses over variables 0 .. m-1, m <= 128.
    class DnfFormula
    {
        private:
            int _variables = 0;
            std::vector<Clause> _clauses;

        public:
            DnfFormula() = default;
            explicit DnfFormula(int variables);

            /// Throws ArgumentError on an empty clause, an out-of-range variable,
            /// or a variable appearing twice.
            auto add_clause(const std::vector<Literal> & literals) -> void;

            auto variable_count() const -> int { return _variables; }
            auto clauses() const -> const std::vector<Clause> & { return _clauses; }
    };

    enum class Truth : std::uint8_t
    {
        False,
        True,
        Unassigned
    };

    class PartialAssignment
    {
        private:
            std::vector<Truth> _values;

        public:
            PartialAssignment() = default;
            explicit PartialAssignment(int variables, Truth fill = Truth::Unassigned) :
                _values(unsigned(variables), fill)
            {
            }

            auto size() const -> int { return int(_values.size()); }
            auto operator[] (int v) const -> Truth { return _values[unsigned(v)]; }
            auto set(int v, Truth value) -> void { _values[unsigned(v)] = value; }

            auto true_mask() const -> PairMask;
            auto false_mask() const -> PairMask;
            auto unassigned_count() const -> int;

            friend auto operator== (const PartialAssignment &, const PartialAssignment &) -> bool = default;
    };

    /// One clause per distinct induced placement of h on n vertices; variables are the C(n,2) pairs, colex.
    auto encode_pattern(int n, const PatternGraph & h) -> DnfFormula;

    /// Black to True, White to False, Gray to Unassigned. n <= 16.
    auto assignment_of(const Trigraph & t) -> PartialAssignment;

    /// Inverse of assignment_of. Throws ArgumentError unless the assignment has C(n,2) variables.
    auto trigraph_of(int n, const PartialAssignment & alpha) -> Trigraph;

    /// Some completion of alpha satisfies the clause: nothing in it is already falsified.
    auto clause_completable(const Clause & c, const PartialAssignment & alpha) -> bool;

    auto has_satisfying_completion(const DnfFormula & f, const PartialAssignment & alpha) -> bool;

    constexpr int completion_enumeration_cap = 20;

    /// Tries all 2^u completions. Throws ResourceError beyond completion_enumeration_cap unassigned variables.
    auto has_satisfying_completion_enumerated(const DnfFormula & f, const PartialAssignment & alpha) -> bool;

    enum class CompletionCheck
    {
        ClauseLocal,
        Enumerate
    };

    /// No completion satisfies f, but unassigning any single assigned variable allows one.
    auto is_saturated(const DnfFormula & f, const PartialAssignment & alpha,
            CompletionCheck how = CompletionCheck::ClauseLocal) -> bool;

    constexpr int min_unassigned_variable_cap = 21;

    /// Fewest unassigned variables in a saturated assignment, trying 0 .. cap. No symmetry reduction.
    auto min_unassigned(const DnfFormula & f, int cap) -> std::optional<int>;
}

#endif
