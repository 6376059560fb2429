#include "kinertia/glhom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kinertia {

bool HomComponent::operator<(const HomComponent& o) const {
    if (r != o.r) return r < o.r;
    if (n != o.n) return n < o.n;
    return d < o.d;
}

std::vector<HomComponent> enumerate_hom_components(long r, long n) {
    if (r < 1 || n < 1) throw std::invalid_argument("r, n must be positive");
    std::vector<HomComponent> out;
    std::vector<long> d(static_cast<size_t>(r), 0);
    // Depth-first over compositions of n into r ordered parts.
    auto rec = [&](auto&& self, long pos, long rest) -> void {
        if (pos == r - 1) {
            d[static_cast<size_t>(pos)] = rest;
            out.push_back({r, n, d});
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            d[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

bool is_mono(const HomComponent& c) {
    long g = c.r;
    for (long chi = 0; chi < c.r; ++chi)
        if (c.d[static_cast<size_t>(chi)] > 0) g = gcd_long(g, chi);
    return g == 1;
}

namespace {

// Contract d onto the subgroup generated by its support: the pair (r', d')
// with r' = r/gcd(support, r) and d'(j) = d(gcd * j).
HomComponent contract_to_mono(const HomComponent& c) {
    long g = c.r;
    for (long chi = 0; chi < c.r; ++chi)
        if (c.d[static_cast<size_t>(chi)] > 0) g = gcd_long(g, chi);
    long rp = c.r / g;
    HomComponent out{rp, c.n, std::vector<long>(static_cast<size_t>(rp), 0)};
    for (long j = 0; j < rp; ++j)
        out.d[static_cast<size_t>(j)] = c.d[static_cast<size_t>(g * j % c.r)];
    return out;
}

HomComponent unit_twist(const HomComponent& c, long u) {
    HomComponent out = c;
    for (long chi = 0; chi < c.r; ++chi)
        out.d[static_cast<size_t>(chi)] = c.d[static_cast<size_t>(u * chi % c.r)];
    return out;
}

}  // namespace

bool quotient_partition_check(long r, long n) {
    std::multiset<HomComponent> contracted;
    for (const auto& c : enumerate_hom_components(r, n)) {
        HomComponent m = contract_to_mono(c);
        if (!is_mono(m)) return false;
        contracted.insert(m);
    }
    std::multiset<HomComponent> monos;
    for (long rp : divisors(r))
        for (const auto& c : enumerate_hom_components(rp, n))
            if (is_mono(c)) monos.insert(c);
    return contracted == monos;
}

SubgroupProfile profile(const HomComponent& c) {
    if (!is_mono(c)) throw std::invalid_argument("profile requires a mono component");
    SubgroupProfile p;
    p.component = c;
    for (long v : c.d)
        if (v > 0) p.centralizer_blocks.push_back(v);
    std::sort(p.centralizer_blocks.rbegin(), p.centralizer_blocks.rend());
    p.delta_order = 1;
    for (long v : p.centralizer_blocks) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
        p.delta_order *= f;
    }
    p.w_order = 0;
    for (long u : units_mod(c.r))
        if (unit_twist(c, c.r == 1 ? 1 : u) == c) ++p.w_order;
    p.gamma_order = p.delta_order * p.w_order;
    return p;
}

std::vector<std::vector<HomComponent>> aut_orbits_of_types(long r, long n) {
    std::set<HomComponent> remaining;
    for (const auto& c : enumerate_hom_components(r, n))
        if (is_mono(c)) remaining.insert(c);
    std::vector<std::vector<HomComponent>> orbits;
    while (!remaining.empty()) {
        HomComponent rep = *remaining.begin();
        std::set<HomComponent> orbit;
        for (long u : units_mod(r)) orbit.insert(unit_twist(rep, r == 1 ? 1 : u));
        std::vector<HomComponent> sorted(orbit.begin(), orbit.end());
        for (const auto& c : sorted) remaining.erase(c);
        orbits.push_back(std::move(sorted));
    }
    return orbits;
}

}  // namespace kinertia
