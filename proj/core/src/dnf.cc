/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/dnf.hh>
#include <indsat/errors.hh>

#include <algorithm>
#include <string>

namespace indsat
{
    namespace
    {
        /// Pairs whose literal in c is already false under the assignment.
        auto falsified(const Clause & c, PairMask true_vars, PairMask false_vars) -> PairMask
        {
            return (c.positive & false_vars) | (c.negative & true_vars);
        }

        auto saturated_local(const DnfFormula & f, PairMask true_vars, PairMask false_vars) -> bool
        {
            PairMask rescued = 0;
            for (auto & c : f.clauses()) {
                PairMask bad = falsified(c, true_vars, false_vars);
                if (! bad)
                    return false;
                if (! (bad & (bad - 1)))
                    rescued |= bad;
            }
            return rescued == (true_vars | false_vars);
        }

        auto next_combination(std::uint32_t s) -> std::uint32_t
        {
            std::uint32_t c = s & -s, r = s + c;
            return (((r ^ s) >> 2) / c) | r;
        }
    }

    auto Clause::literals() const -> std::vector<Literal>
    {
        std::vector<Literal> result;
        for_each_bit(positive | negative, [&] (int v) { result.push_back(Literal{ v, bool(positive & bit(v)) }); });
        return result;
    }

    DnfFormula::DnfFormula(int variables) :
        _variables(variables)
    {
        if (variables < 0 || variables > max_dnf_variables)
            throw SizeError("DNF formulas support up to " + std::to_string(max_dnf_variables) + " variables");
    }

    auto DnfFormula::add_clause(const std::vector<Literal> & literals) -> void
    {
        if (literals.empty())
            throw ArgumentError("empty clause");

        Clause c;
        for (auto & l : literals) {
            if (l.variable < 0 || l.variable >= _variables)
                throw ArgumentError("variable " + std::to_string(l.variable + 1) + " out of range");
            if ((c.positive | c.negative) & bit(l.variable))
                throw ArgumentError("variable " + std::to_string(l.variable + 1) + " appears twice in a clause");
            (l.positive ? c.positive : c.negative) |= bit(l.variable);
        }
        _clauses.push_back(c);
    }

    auto PartialAssignment::true_mask() const -> PairMask
    {
        PairMask result = 0;
        for (int v = 0 ; v < size() ; ++v)
            if (_values[unsigned(v)] == Truth::True)
                result |= bit(v);
        return result;
    }

    auto PartialAssignment::false_mask() const -> PairMask
    {
        PairMask result = 0;
        for (int v = 0 ; v < size() ; ++v)
            if (_values[unsigned(v)] == Truth::False)
                result |= bit(v);
        return result;
    }

    auto PartialAssignment::unassigned_count() const -> int
    {
        return int(std::count(_values.begin(), _values.end(), Truth::Unassigned));
    }

    auto encode_pattern(int n, const PatternGraph & h) -> DnfFormula
    {
        int k = h.size();
        if (n < k || n > 8)
            throw ArgumentError("pattern encoding needs |V(H)| <= n <= 8");

        DnfFormula result(num_pairs(n));
        for (VertexMask s = all_vertices(k) ; s < vertex_bit(n) ; ) {
            auto vertices = to_vertex_list(s);
            std::vector<Clause> placed;
            do {
                Clause c;
                for (int b = 1 ; b < k ; ++b)
                    for (int a = 0 ; a < b ; ++a) {
                        int p = pair_index(vertices[unsigned(a)], vertices[unsigned(b)]);
                        (h.graph.adjacent(a, b) ? c.positive : c.negative) |= bit(p);
                    }
                if (std::find(placed.begin(), placed.end(), c) == placed.end())
                    placed.push_back(c);
            } while (std::next_permutation(vertices.begin(), vertices.end()));

            for (auto & c : placed)
                result.add_clause(c.literals());

            VertexMask low = s & -s, r = s + low;
            s = (((r ^ s) >> 2) / low) | r;
        }
        return result;
    }

    auto assignment_of(const Trigraph & t) -> PartialAssignment
    {
        PartialAssignment result(t.pair_count());
        for (int p = 0 ; p < t.pair_count() ; ++p)
            switch (t.color_at(p)) {
                case EdgeColor::Black: result.set(p, Truth::True); break;
                case EdgeColor::White: result.set(p, Truth::False); break;
                case EdgeColor::Gray:  break;
            }
        return result;
    }

    auto trigraph_of(int n, const PartialAssignment & alpha) -> Trigraph
    {
        if (n < 0 || n > max_mask_vertices || alpha.size() != num_pairs(n))
            throw ArgumentError("assignment has " + std::to_string(alpha.size()) + " variables, expected C("
                    + std::to_string(n) + ",2)");

        PairMask unassigned = low_bits(alpha.size()) & ~(alpha.true_mask() | alpha.false_mask());
        return Trigraph::from_masks(n, alpha.true_mask(), unassigned);
    }

    auto clause_completable(const Clause & c, const PartialAssignment & alpha) -> bool
    {
        return ! falsified(c, alpha.true_mask(), alpha.false_mask());
    }

    auto has_satisfying_completion(const DnfFormula & f, const PartialAssignment & alpha) -> bool
    {
        PairMask t = alpha.true_mask(), fl = alpha.false_mask();
        return std::any_of(f.clauses().begin(), f.clauses().end(),
                [&] (const Clause & c) { return ! falsified(c, t, fl); });
    }

    auto has_satisfying_completion_enumerated(const DnfFormula & f, const PartialAssignment & alpha) -> bool
    {
        if (alpha.unassigned_count() > completion_enumeration_cap)
            throw ResourceError("completion enumeration capped at " + std::to_string(completion_enumeration_cap)
                    + " unassigned variables");

        PairMask assigned_true = alpha.true_mask();
        PairMask free = low_bits(alpha.size()) & ~(assigned_true | alpha.false_mask());
        PairMask all = low_bits(alpha.size());

        // every completion is a total assignment; a clause holds iff its positives
        // are all true and its negatives all false
        PairMask extra = 0;
        do {
            PairMask value = assigned_true | extra;
            for (auto & c : f.clauses())
                if ((c.positive & ~value) == 0 && (c.negative & value & all) == 0)
                    return true;
            extra = (extra - free) & free;
        } while (extra);
        return false;
    }

    auto is_saturated(const DnfFormula & f, const PartialAssignment & alpha, CompletionCheck how) -> bool
    {
        if (alpha.size() != f.variable_count())
            throw ArgumentError("assignment length " + std::to_string(alpha.size()) + " does not match "
                    + std::to_string(f.variable_count()) + " variables");

        if (how == CompletionCheck::ClauseLocal)
            return saturated_local(f, alpha.true_mask(), alpha.false_mask());

        if (has_satisfying_completion_enumerated(f, alpha))
            return false;
        for (int v = 0 ; v < alpha.size() ; ++v) {
            if (alpha[v] == Truth::Unassigned)
                continue;
            auto freed = alpha;
            freed.set(v, Truth::Unassigned);
            if (! has_satisfying_completion_enumerated(f, freed))
                return false;
        }
        return true;
    }

    auto min_unassigned(const DnfFormula & f, int cap) -> std::optional<int>
    {
        int m = f.variable_count();
        if (m > min_unassigned_variable_cap)
            throw ResourceError("min_unassigned sweeps 3^m assignments and is limited to m <= "
                    + std::to_string(min_unassigned_variable_cap));

        std::uint32_t all = m == 0 ? 0 : (std::uint32_t{ 1 } << m) - 1;
        for (int u = 0 ; u <= std::min(cap, m) ; ++u) {
            for (std::uint32_t unassigned = (std::uint32_t{ 1 } << u) - 1 ; ; unassigned = next_combination(unassigned)) {
                if (unassigned > all)
                    break;

                std::uint32_t assigned = all & ~unassigned;
                std::uint32_t trues = 0;
                do {
                    if (saturated_local(f, trues, assigned & ~trues))
                        return u;
                    trues = (trues - assigned) & assigned;
                } while (trues);

                if (unassigned == 0 || unassigned == all)
                    break;
            }
        }
        return std::nullopt;
    }
}
