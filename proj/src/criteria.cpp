#include <magus/criteria.hpp>

#include <stdexcept>

using std::optional;
using std::size_t;

namespace magus
{
    auto find_sd_certificate(const Graph & g) -> optional<Certificate>
    {
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b)
                if (auto s = sym_diff_size(g, a, b); s == 1 || s == 2)
                    return SymDiff{a, b, s};
        return std::nullopt;
    }

    auto lifted_sd_certificate(const Graph & base) -> optional<Certificate>
    {
        for (Vertex a = 0; a < base.order(); ++a)
            for (Vertex b = a + 1; b < base.order(); ++b)
                if (sym_diff_size(base, a, b) == 2)
                    return LiftedSymDiff{a, b};
        return std::nullopt;
    }

    auto min_degree_certificate(const Graph & base) -> optional<Certificate>
    {
        for (Vertex x = 0; x < base.order(); ++x)
            if (base.degree(x) == 1)
                return MinDegreeOne{x};
        return std::nullopt;
    }

    auto odd_regular_certificate(const Graph & g) -> optional<Certificate>
    {
        if (auto r = is_regular(g); r && *r % 2 == 1)
            return OddRegular{*r};
        return std::nullopt;
    }

    auto myc_regularity_certificate(const MycGraph & myc) -> optional<Certificate>
    {
        if (myc.levels() < 2)
            return std::nullopt;
        if (auto r = is_regular(myc.graph()))
            return RegularMycielskian{*r};
        return std::nullopt;
    }

    auto regular_bound_check(size_t r, size_t n, size_t t) -> optional<Certificate>
    {
        if (r * (n + 1) > 2 * t * n + 2)
            return RegularBoundViolated{r, n, t};
        return std::nullopt;
    }

    auto decide_by_criteria(const Graph & base, size_t t) -> optional<Verdict>
    {
        if (t < 2)
            throw std::invalid_argument("criteria need t >= 2");

        auto found = [] (Certificate c) -> optional<Verdict> { return NotDistanceMagic{std::move(c)}; };

        if (auto c = min_degree_certificate(base))
            return found(*c);
        if (auto c = lifted_sd_certificate(base))
            return found(*c);

        auto myc = build_mycielskian(base, t);
        if (auto c = myc_regularity_certificate(myc))
            return found(*c);
        if (auto c = odd_regular_certificate(myc.graph()))
            return found(*c);
        if (auto r = is_regular(base))
            if (auto c = regular_bound_check(*r, base.order(), t))
                return found(*c);
        if (auto c = find_sd_certificate(myc.graph()))
            return found(*c);
        return std::nullopt;
    }

    auto decide_graph_by_criteria(const Graph & g) -> optional<Verdict>
    {
        if (auto c = odd_regular_certificate(g))
            return NotDistanceMagic{*c};
        if (auto c = find_sd_certificate(g))
            return NotDistanceMagic{*c};
        return std::nullopt;
    }
}
