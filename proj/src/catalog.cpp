#include "kinertia/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kinertia {

namespace {

void chains_of(long rem, long prev, std::vector<long>& cur,
               std::vector<std::vector<long>>& out) {
    if (rem == 1) {
        out.push_back(cur);
        return;
    }
    for (long d = std::max(prev, 2L); d <= rem; ++d) {
        if (rem % d != 0 || d % prev != 0) continue;
        cur.push_back(d);
        chains_of(rem / d, d, cur, out);
        cur.pop_back();
    }
}

long orbit_cost(const FinAbGroup& A, const Subgroup& H) {
    return A.size() / H.order();
}

// Uniform pick from [0, n); n >= 1.
size_t pick(size_t n, std::mt19937_64& rng) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

// A random nonempty subgroup multiset whose total coset count fits the
// budget (indices into subs, nondecreasing not required).
std::vector<Subgroup> random_multiset(const FinAbGroup& A,
                                      const std::vector<Subgroup>& subs,
                                      long max_points, std::mt19937_64& rng) {
    std::vector<Subgroup> chosen;
    long budget = max_points;
    while (true) {
        std::vector<size_t> fits;
        for (size_t j = 0; j < subs.size(); ++j)
            if (orbit_cost(A, subs[j]) <= budget) fits.push_back(j);
        if (fits.empty()) break;
        if (!chosen.empty() && pick(3, rng) == 0) break;  // random stop
        const Subgroup& s = subs[fits[pick(fits.size(), rng)]];
        budget -= orbit_cost(A, s);
        chosen.push_back(s);
    }
    return chosen;
}

}  // namespace

std::vector<FinAbGroup> groups_up_to(long max_order) {
    std::vector<FinAbGroup> out;
    for (long n = 1; n <= max_order; ++n) {
        std::vector<std::vector<long>> chains;
        std::vector<long> cur;
        chains_of(n, 1, cur, chains);
        std::sort(chains.begin(), chains.end());
        for (std::vector<long>& c : chains) out.push_back(FinAbGroup{std::move(c)});
    }
    return out;
}

std::vector<GSpace> coset_spaces_up_to(const FinAbGroup& A, long max_points) {
    const std::vector<Subgroup> subs = all_subgroups(A);
    std::vector<GSpace> out;
    std::vector<Subgroup> cur;
    auto rec = [&](auto&& self, size_t start, long budget) -> void {
        for (size_t j = start; j < subs.size(); ++j) {
            if (orbit_cost(A, subs[j]) > budget) continue;
            cur.push_back(subs[j]);
            out.push_back(GSpace::analyze(coset_gset(A, cur)));
            self(self, j, budget - orbit_cost(A, subs[j]));
            cur.pop_back();
        }
    };
    rec(rec, 0, max_points);
    return out;
}

GSpace random_space(const FinAbGroup& A, long max_points, std::mt19937_64& rng) {
    const std::vector<Subgroup> subs = all_subgroups(A);
    const GSet base = coset_gset(A, random_multiset(A, subs, max_points, rng));
    std::vector<long> relabel(static_cast<size_t>(base.points));
    std::iota(relabel.begin(), relabel.end(), 0L);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Perm> action(base.action.size(),
                             perm_identity(base.points));
    for (size_t g = 0; g < base.action.size(); ++g)
        for (long p = 0; p < base.points; ++p)
            action[g][static_cast<size_t>(relabel[static_cast<size_t>(p)])] =
                relabel[static_cast<size_t>(base.action[g][static_cast<size_t>(p)])];
    return GSpace::analyze(make_gset(A, base.points, std::move(action)));
}

EquivariantMap random_map(const FinAbGroup& A, long max_points,
                          std::mt19937_64& rng) {
    const std::vector<Subgroup> subs = all_subgroups(A);
    const std::vector<Subgroup> src = random_multiset(A, subs, max_points, rng);
    // Per source orbit: a random overgroup, found through the sorted element
    // sets (conjugacy is equality in the abelian setting).
    std::vector<Subgroup> tgt;
    for (const Subgroup& h : src) {
        std::vector<size_t> over;
        for (size_t j = 0; j < subs.size(); ++j)
            if (std::includes(subs[j].elems.begin(), subs[j].elems.end(),
                              h.elems.begin(), h.elems.end()))
                over.push_back(j);
        tgt.push_back(subs[over[pick(over.size(), rng)]]);
    }
    GSpace source = GSpace::analyze(coset_gset(A, src));
    GSpace target = GSpace::analyze(coset_gset(A, tgt));
    // Point map: the coset of g in H_i goes to the coset of g in K_i, with
    // both sides addressed by their least representatives.
    std::vector<long> offsets(tgt.size(), 0);
    for (size_t j = 1; j < tgt.size(); ++j)
        offsets[j] = offsets[j - 1] + orbit_cost(A, tgt[j - 1]);
    std::vector<long> point_map;
    for (size_t i = 0; i < src.size(); ++i) {
        const std::vector<long> reps = coset_reps(A, tgt[i]);
        for (long g : coset_reps(A, src[i])) {
            long least = -1;
            for (long h : tgt[i].elems) {
                const long c = A.add(g, h);
                if (least < 0 || c < least) least = c;
            }
            const auto at = std::find(reps.begin(), reps.end(), least);
            point_map.push_back(offsets[i] + (at - reps.begin()));
        }
    }
    return make_equivariant_map(std::move(source), std::move(target),
                                std::move(point_map));
}

}  // namespace kinertia
