#include "spectra/bounds.hpp"

#include <algorithm>

namespace spectra {

const char* bound_name(BoundId id) {
    switch (id) {
    case BoundId::T1: return "T1";
    case BoundId::T2: return "T2";
    case BoundId::C1: return "C1";
    case BoundId::C2: return "C2";
    case BoundId::C3: return "C3";
    case BoundId::C4: return "C4";
    case BoundId::C5pi: return "C5pi";
    case BoundId::C55: return "C55";
    case BoundId::C5final: return "C5final";
    case BoundId::T5: return "T5";
    case BoundId::T6: return "T6";
    }
    return "?";
}

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Exact quotient; a remainder means the caller was fed a graph that cannot
// be (k-1,k)-biregular, which is a hard failure, not a rounding case.
long long exact_div(long long a, long long b) {
    if (a % b != 0)
        throw Error(Errc::PreconditionViolated,
                    std::to_string(a) + " is not divisible by " +
                        std::to_string(b));
    return a / b;
}

void require_regular(const Graph& g) {
    if (!degree_profile(g).is_regular)
        throw Error(Errc::NotRegular, "graph is not regular");
}

void require_cubic(const Graph& g) {
    require_regular(g);
    if (g.max_degree() != 3)
        throw Error(Errc::PreconditionViolated, "graph is not cubic");
}

const Bipartition& require_bipartition(const Bipartition* b) {
    if (b == nullptr)
        throw Error(Errc::PreconditionViolated,
                    "bound needs the bipartition");
    return *b;
}

int require_biregular_k(const Graph& g, const Bipartition& b, int min_k) {
    DegreeProfile profile = degree_profile(g, &b);
    if (!profile.biregular || profile.biregular->second != profile.biregular->first + 1)
        throw Error(Errc::NotBiregular,
                    "graph is not (k-1,k)-biregular with X as the k-1 side");
    int k = profile.biregular->second;
    if (k < min_k)
        throw Error(Errc::PreconditionViolated,
                    "requires k >= " + std::to_string(min_k));
    return k;
}

void require_degree_condition(const Graph& g, const Bipartition& b) {
    for (const auto& [u, v] : g.edges()) {
        int x = b.is_x(u) ? u : v;
        int y = b.is_x(u) ? v : u;
        if (b.is_x(u) == b.is_x(v))
            throw Error(Errc::PreconditionViolated,
                        "bipartition does not separate edge endpoints");
        if (g.degree(x) > g.degree(y))
            throw Error(Errc::PreconditionViolated,
                        "d(x) <= d(y) fails on an edge");
    }
}

} // namespace

long long bound_value(BoundId id, const Graph& g, const Bipartition* b) {
    const long long v = g.vertex_count();
    const long long delta = g.max_degree();

    switch (id) {
    case BoundId::T1:
        require_regular(g);
        return ceil_div(v, 1 + delta);
    case BoundId::C1:
        require_cubic(g);
        return ceil_div(v, 4);
    case BoundId::T2:
        require_regular(g);
        return ceil_div(v, ceil_div(1 + delta, 2));
    case BoundId::C2:
        require_cubic(g);
        return ceil_div(v, 2);
    case BoundId::C3: {
        const Bipartition& bp = require_bipartition(b);
        return std::max(bp.x_side.size(), bp.y_side.size());
    }
    case BoundId::C5pi: {
        const Bipartition& bp = require_bipartition(b);
        require_degree_condition(g, bp);
        return 1 + static_cast<long long>(bp.y_side.size());
    }
    case BoundId::T5: {
        long long k = require_biregular_k(g, require_bipartition(b), 4);
        return exact_div((k - 1) * v, 2 * k - 1) +
               ceil_div(k * v, ceil_div(k, 2) * (2 * k - 1));
    }
    case BoundId::C4: {
        long long k = require_biregular_k(g, require_bipartition(b), 4);
        if (k % 2 != 0)
            throw Error(Errc::PreconditionViolated, "requires even k");
        return exact_div((k + 1) * v, 2 * k - 1);
    }
    case BoundId::C55: {
        long long k = require_biregular_k(g, require_bipartition(b), 4);
        if (k != 4)
            throw Error(Errc::PreconditionViolated, "requires k = 4");
        return exact_div(5 * v, 7);
    }
    case BoundId::T6: {
        long long k = require_biregular_k(g, require_bipartition(b), 3);
        return exact_div(k * v, 2 * k - 1);
    }
    case BoundId::C5final: {
        long long k = require_biregular_k(g, require_bipartition(b), 3);
        if (k != 4)
            throw Error(Errc::PreconditionViolated, "requires k = 4");
        return exact_div(4 * v, 7);
    }
    }
    throw Error(Errc::PreconditionViolated, "unknown bound id");
}

namespace {

// x side must carry the smaller uniform degree; swaps the computed
// bipartition when it comes out the other way.
Bipartition orient_biregular(const Graph& g) {
    Bipartition b = bipartition(g);
    DegreeProfile profile = degree_profile(g, &b);
    if (!profile.biregular)
        throw Error(Errc::NotBiregular, "per-side degrees are not uniform");
    auto [a, bdeg] = *profile.biregular;
    if (a == bdeg + 1) return b.swapped();
    if (bdeg == a + 1) return b;
    throw Error(Errc::NotBiregular, "side degrees do not differ by one");
}

// orientation satisfying d(x) <= d(y) on every edge, if either one works
Bipartition orient_degree_condition(const Graph& g) {
    Bipartition b = bipartition(g);
    auto satisfies = [&](const Bipartition& bp) {
        for (const auto& [u, v] : g.edges()) {
            int x = bp.is_x(u) ? u : v;
            int y = bp.is_x(u) ? v : u;
            if (g.degree(x) > g.degree(y)) return false;
        }
        return true;
    };
    if (satisfies(b)) return b;
    Bipartition s = b.swapped();
    if (satisfies(s)) return s;
    throw Error(Errc::PreconditionViolated,
                "no orientation satisfies d(x) <= d(y) on every edge");
}

} // namespace

TheoremReport verify_theorem(TheoremId id, const Graph& g,
                             const VerifyOptions& options) {
    TheoremReport report;
    report.theorem = id;
    try {
        ConstructionResult construction = [&]() -> ConstructionResult {
            switch (id) {
            case TheoremId::T1:
                report.bound = bound_value(BoundId::T1, g);
                return thm1_persistent_regular(g, options.chi_budget);
            case TheoremId::T2:
                report.bound = bound_value(BoundId::T2, g);
                return thm2_interval_regular(g, options.chi_budget);
            case TheoremId::T3: {
                Bipartition b = bipartition(g);
                report.bound = bound_value(BoundId::C3, g, &b);
                Side side =
                    b.x_side.size() >= b.y_side.size() ? Side::X : Side::Y;
                return thm3_interval_side(g, b, side);
            }
            case TheoremId::T4: {
                Bipartition b = orient_degree_condition(g);
                report.bound = bound_value(BoundId::C5pi, g, &b);
                ConstructionResult base =
                    persistent_on_Y(g, b, options.persistent_y);
                SpectrumReport spectra = analyze(g, base.coloring);
                int x0 = b.x_side.front();
                for (int x : b.x_side) {
                    if (!spectra.satisfies(x, SpectrumMode::PersistentInterval)) {
                        x0 = x;
                        break;
                    }
                }
                return thm4_extend(g, b, base.coloring, x0);
            }
            case TheoremId::T5: {
                Bipartition b = orient_biregular(g);
                report.bound = bound_value(BoundId::T5, g, &b);
                return thm5_biregular_interval(g, b);
            }
            case TheoremId::T6: {
                Bipartition b = orient_biregular(g);
                report.bound = bound_value(BoundId::T6, g, &b);
                return thm6_biregular_persistent(g, b);
            }
            case TheoremId::PY: {
                Bipartition b = orient_degree_condition(g);
                report.bound = static_cast<long long>(b.y_side.size());
                return persistent_on_Y(g, b, options.persistent_y);
            }
            }
            throw Error(Errc::PreconditionViolated, "unknown theorem id");
        }();

        SpectrumReport spectra = analyze(g, construction.coloring);
        report.f_total = construction.mode == SpectrumMode::Interval
                             ? spectra.f_interval
                             : spectra.f_persistent;
        report.achieved = 0;
        for (int v : construction.guaranteed_set)
            if (spectra.satisfies(v, construction.mode)) ++report.achieved;
        report.status = report.achieved >= report.bound
                            ? TheoremReport::Status::Passed
                            : TheoremReport::Status::BoundViolated;
        if (report.status == TheoremReport::Status::BoundViolated)
            report.reason = "guaranteed set smaller than the bound";
        report.witness = std::move(construction);
    } catch (const Error& e) {
        switch (e.code()) {
        case Errc::NotRegular:
        case Errc::NotBipartite:
        case Errc::NotBiregular:
        case Errc::ClassOne:
        case Errc::PreconditionViolated:
            report.status = TheoremReport::Status::Inapplicable;
            break;
        default:
            report.status = TheoremReport::Status::Error;
            break;
        }
        report.budget_exhausted = e.code() == Errc::BudgetExhausted;
        report.reason = std::string(errc_name(e.code())) + ": " + e.what();
    }
    return report;
}

DivisibilityReport verify_remark2(const Graph& g, const Bipartition& b) {
    DegreeProfile profile = degree_profile(g, &b);
    if (!profile.biregular)
        throw Error(Errc::NotBiregular, "per-side degrees are not uniform");
    auto [a, bdeg] = *profile.biregular;
    const Bipartition* oriented = &b;
    Bipartition swapped;
    if (a == bdeg + 1) {
        swapped = b.swapped();
        oriented = &swapped;
        std::swap(a, bdeg);
    }
    if (bdeg != a + 1)
        throw Error(Errc::NotBiregular, "side degrees do not differ by one");

    DivisibilityReport report;
    report.k = bdeg;
    report.x_divisible =
        static_cast<long long>(oriented->x_side.size()) % report.k == 0;
    report.y_divisible =
        static_cast<long long>(oriented->y_side.size()) % (report.k - 1) == 0;
    report.v_divisible = g.vertex_count() % (2 * report.k - 1) == 0;
    return report;
}

SharpnessReport verify_remark1(int n, long long budget) {
    if (n < 1)
        throw Error(Errc::PreconditionViolated, "n must be positive");
    Graph g = gen_complete_bipartite(n + 1, n);
    Bipartition b = bipartition(g); // X = the n+1 side, degree n

    SharpnessReport report;
    report.n = n;
    report.bound = bound_value(BoundId::C5pi, g, &b);
    EtaResult eta = brute_force_eta(g, SpectrumMode::PersistentInterval, budget);
    report.eta = eta.eta;
    report.exact = eta.exact;
    report.sharp = eta.exact && eta.eta == report.bound;
    return report;
}

} // namespace spectra
