#include "kinertia/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

namespace kinertia {

SchemaError::SchemaError(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), path(std::move(where)) {}

namespace {

std::string child(const std::string& path, const std::string& key) {
    return path + "." + key;
}

std::string item(const std::string& path, size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const Json& expect_object(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
}

const Json& get_field(const Json& j, const char* key, const std::string& path) {
    expect_object(j, path);
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(child(path, key), "missing required field");
    return *it;
}

void only_fields(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& path) {
    expect_object(j, path);
    for (const auto& kv : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || kv.key() == a;
        if (!known) throw SchemaError(child(path, kv.key()), "unknown field");
    }
}

long get_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw SchemaError(path, "expected an integer");
    return j.get<long>();
}

// Keys that encode machine integers must be canonical decimals, so the
// map key -> value is bijective under round-trips.
long key_to_long(const std::string& key, const std::string& path) {
    try {
        size_t used = 0;
        long v = std::stol(key, &used);
        if (used == key.size() && std::to_string(v) == key) return v;
    } catch (const std::exception&) {
    }
    throw SchemaError(path, "key is not a canonical integer: \"" + key + "\"");
}

std::string tuple_key(const FinAbGroup& A, long idx) {
    std::vector<long> residues = A.vec_of(idx);
    std::string key;
    for (size_t i = 0; i < residues.size(); ++i) {
        if (i > 0) key += ',';
        key += std::to_string(residues[i]);
    }
    return key;
}

long tuple_key_to_index(const FinAbGroup& A, const std::string& key,
                        const std::string& path) {
    const size_t k = A.cyclic_factors.size();
    std::vector<std::string> parts;
    if (!key.empty()) {
        size_t start = 0;
        while (true) {
            size_t comma = key.find(',', start);
            parts.push_back(key.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (parts.size() != k)
        throw SchemaError(path, "tuple key \"" + key + "\" must have " +
                                    std::to_string(k) + " residues");
    std::vector<long> residues;
    for (size_t i = 0; i < k; ++i) {
        long v = key_to_long(parts[i], path);
        if (v < 0 || v >= A.cyclic_factors[i])
            throw SchemaError(path, "residue " + parts[i] +
                                        " out of range for factor " +
                                        std::to_string(A.cyclic_factors[i]));
        residues.push_back(v);
    }
    return A.index_of(residues);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
}

Json rational_to_json(const Rational& x) { return rational_to_string(x); }

Rational rational_from_json(const Json& j, const std::string& path) {
    if (!j.is_string())
        throw SchemaError(path, "expected a rational string like \"p/q\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path, e.what());
    }
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& x : v) out.push_back(rational_to_json(x));
    return out;
}

std::vector<Rational> rational_vector_from_json(const Json& j,
                                                const std::string& path) {
    expect_array(j, path);
    std::vector<Rational> v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], item(path, i)));
    return v;
}

Json group_to_json(const FinAbGroup& A) {
    Json out = Json::object();
    out["cyclic_factors"] = A.cyclic_factors;
    return out;
}

FinAbGroup group_from_json(const Json& j, const std::string& path) {
    only_fields(j, {"cyclic_factors"}, path);
    const Json& factors = get_field(j, "cyclic_factors", path);
    const std::string fpath = child(path, "cyclic_factors");
    expect_array(factors, fpath);
    FinAbGroup A;
    long size = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        long n = get_long(factors[i], item(fpath, i));
        if (n < 1) throw SchemaError(item(fpath, i), "factor must be >= 1");
        if (size > 1000000 / n)
            throw SchemaError(fpath, "group order exceeds the supported bound");
        size *= n;
        A.cyclic_factors.push_back(n);
    }
    return A;
}

Json element_to_json(const FinAbGroup& A, long idx) {
    Json out = Json::array();
    for (long r : A.vec_of(idx)) out.push_back(r);
    return out;
}

long element_from_json(const FinAbGroup& A, const Json& j,
                       const std::string& path) {
    expect_array(j, path);
    if (j.size() != A.cyclic_factors.size())
        throw SchemaError(path, "expected one residue per cyclic factor (" +
                                    std::to_string(A.cyclic_factors.size()) +
                                    ")");
    std::vector<long> residues;
    for (size_t i = 0; i < j.size(); ++i) {
        long v = get_long(j[i], item(path, i));
        if (v < 0 || v >= A.cyclic_factors[i])
            throw SchemaError(item(path, i),
                              "residue out of range for factor " +
                                  std::to_string(A.cyclic_factors[i]));
        residues.push_back(v);
    }
    return A.index_of(residues);
}

Json group_algebra_to_json(const GroupAlgebraElem& a) {
    Json coeffs = Json::object();
    for (long chi = 0; chi < a.group.size(); ++chi)
        if (a.coeffs[static_cast<size_t>(chi)] != 0)
            coeffs[tuple_key(a.group, chi)] =
                rational_to_json(a.coeffs[static_cast<size_t>(chi)]);
    Json out = Json::object();
    out["coeffs"] = std::move(coeffs);
    return out;
}

GroupAlgebraElem group_algebra_from_json(const FinAbGroup& A, const Json& j,
                                         const std::string& path) {
    only_fields(j, {"coeffs"}, path);
    const Json& coeffs = get_field(j, "coeffs", path);
    const std::string cpath = child(path, "coeffs");
    expect_object(coeffs, cpath);
    GroupAlgebraElem a = GroupAlgebraElem::zero(A);
    for (const auto& kv : coeffs.items()) {
        const std::string kpath = child(cpath, kv.key());
        long chi = tuple_key_to_index(A, kv.key(), kpath);
        a.coeffs[static_cast<size_t>(chi)] = rational_from_json(kv.value(), kpath);
    }
    return a;
}

Json cyclotomic_to_json(const CycFieldElem& x) {
    return rational_vector_to_json(x.c);
}

CycFieldElem cyclotomic_from_json(long d, const Json& j,
                                  const std::string& path) {
    std::vector<Rational> c = rational_vector_from_json(j, path);
    if (static_cast<long>(c.size()) != euler_phi(d))
        throw SchemaError(path, "expected " + std::to_string(euler_phi(d)) +
                                    " coordinates for conductor " +
                                    std::to_string(d));
    CycFieldElem x = CycFieldElem::zero(d);
    x.c = std::move(c);
    return x;
}

Perm perm_from_json(long degree, const Json& j, const std::string& path) {
    expect_array(j, path);
    if (static_cast<long>(j.size()) != degree)
        throw SchemaError(path, "expected a permutation of " +
                                    std::to_string(degree) + " points");
    Perm p(static_cast<size_t>(degree));
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (size_t i = 0; i < j.size(); ++i) {
        long v = get_long(j[i], item(path, i));
        if (v < 0 || v >= degree)
            throw SchemaError(item(path, i), "image out of range");
        if (seen[static_cast<size_t>(v)])
            throw SchemaError(item(path, i), "repeated image — not a permutation");
        seen[static_cast<size_t>(v)] = true;
        p[i] = v;
    }
    return p;
}

Json gset_to_json(const GSet& x) {
    Json action = Json::object();
    for (size_t g = 0; g < x.action.size(); ++g)
        action[std::to_string(g)] = x.action[g];
    Json out = Json::object();
    out["group"] = group_to_json(x.group);
    out["points"] = x.points;
    out["action"] = std::move(action);
    return out;
}

GSet gset_from_json(const Json& j, const std::string& path) {
    only_fields(j, {"group", "points", "action"}, path);
    FinAbGroup A = group_from_json(get_field(j, "group", path),
                                   child(path, "group"));
    long points = get_long(get_field(j, "points", path), child(path, "points"));
    if (points < 0 || points > 10000)
        throw SchemaError(child(path, "points"),
                          "point count out of the supported range [0, 10000]");
    const Json& action = get_field(j, "action", path);
    const std::string apath = child(path, "action");
    expect_object(action, apath);
    for (const auto& kv : action.items()) {
        long g = key_to_long(kv.key(), child(apath, kv.key()));
        if (g < 0 || g >= static_cast<long>(A.cyclic_factors.size()))
            throw SchemaError(child(apath, kv.key()),
                              "no generator with this index");
    }
    std::vector<Perm> perms;
    for (size_t g = 0; g < A.cyclic_factors.size(); ++g) {
        auto it = action.find(std::to_string(g));
        if (it == action.end())
            throw SchemaError(child(apath, std::to_string(g)),
                              "missing permutation for this generator");
        perms.push_back(perm_from_json(points, *it,
                                       child(apath, std::to_string(g))));
    }
    try {
        return make_gset(std::move(A), points, std::move(perms));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(apath, e.what());
    }
}

Json kclass_to_json(const GSpace& x, const KClass& a) {
    Json out = Json::object();
    for (size_t i = 0; i < x.orbits.size(); ++i)
        out[std::to_string(i)] = group_algebra_to_json(a.entries[i]);
    return out;
}

KClass kclass_from_json(const GSpace& x, const Json& j,
                        const std::string& path) {
    expect_object(j, path);
    KClass a = k_zero(x);
    for (const auto& kv : j.items()) {
        const std::string kpath = child(path, kv.key());
        long oid = key_to_long(kv.key(), kpath);
        if (oid < 0 || oid >= static_cast<long>(x.orbits.size()))
            throw SchemaError(kpath, "orbit id out of range");
        a.entries[static_cast<size_t>(oid)] = group_algebra_from_json(
            x.orbits[static_cast<size_t>(oid)].stabilizer.abstract_group(),
            kv.value(), kpath);
    }
    return a;
}

Json twisted_to_json(const CyclotomicInertia& ix, const TwistedClass& w) {
    Json comps = Json::array();
    for (size_t c = 0; c < ix.components.size(); ++c) {
        const InertiaComponent& comp = ix.components[c];
        Json entries = Json::object();
        for (size_t k = 0; k < comp.orbit_ids.size(); ++k)
            entries[std::to_string(comp.orbit_ids[k])] =
                cyclotomic_to_json(w.entries[c][k]);
        Json jc = Json::object();
        jc["h"] = element_to_json(ix.base.set.group, comp.h);
        jc["entries"] = std::move(entries);
        comps.push_back(std::move(jc));
    }
    Json out = Json::object();
    out["components"] = std::move(comps);
    return out;
}

TwistedClass twisted_from_json(const CyclotomicInertia& ix, const Json& j,
                               const std::string& path) {
    only_fields(j, {"components"}, path);
    const Json& comps = get_field(j, "components", path);
    const std::string cpath = child(path, "components");
    expect_array(comps, cpath);
    TwistedClass w = twisted_zero(ix);
    std::vector<bool> seen(ix.components.size(), false);
    for (size_t i = 0; i < comps.size(); ++i) {
        const std::string ipath = item(cpath, i);
        only_fields(comps[i], {"h", "entries"}, ipath);
        long h = element_from_json(ix.base.set.group,
                                   get_field(comps[i], "h", ipath),
                                   child(ipath, "h"));
        long c = ix.component_of_element[static_cast<size_t>(h)];
        if (c < 0)
            throw SchemaError(child(ipath, "h"),
                              "element has an empty fixed locus — "
                              "no inertia component");
        if (seen[static_cast<size_t>(c)])
            throw SchemaError(child(ipath, "h"), "duplicate component");
        seen[static_cast<size_t>(c)] = true;
        const InertiaComponent& comp = ix.components[static_cast<size_t>(c)];
        const Json& entries = get_field(comps[i], "entries", ipath);
        const std::string epath = child(ipath, "entries");
        expect_object(entries, epath);
        for (const auto& kv : entries.items()) {
            const std::string kpath = child(epath, kv.key());
            long oid = key_to_long(kv.key(), kpath);
            long slot = ix.slot_of(c, oid);
            if (slot < 0)
                throw SchemaError(kpath, "orbit is not fixed by this component");
            w.entries[static_cast<size_t>(c)][static_cast<size_t>(slot)] =
                cyclotomic_from_json(comp.r, kv.value(), kpath);
        }
    }
    return w;
}

Json permgroup_to_json(const PermGroup& G) {
    Json gens = Json::array();
    for (const Perm& g : G.generators) gens.push_back(g);
    Json out = Json::object();
    out["degree"] = G.degree;
    out["generators"] = std::move(gens);
    return out;
}

PermGroup permgroup_from_json(const Json& j, const std::string& path,
                              long max_order) {
    only_fields(j, {"degree", "generators"}, path);
    long degree = get_long(get_field(j, "degree", path), child(path, "degree"));
    if (degree < 1 || degree > 8)
        throw SchemaError(child(path, "degree"),
                          "degree out of the supported range [1, 8]");
    const Json& gens = get_field(j, "generators", path);
    const std::string gpath = child(path, "generators");
    expect_array(gens, gpath);
    std::vector<Perm> perms;
    for (size_t i = 0; i < gens.size(); ++i)
        perms.push_back(perm_from_json(degree, gens[i], item(gpath, i)));
    PermGroup G = PermGroup::from_generators(degree, std::move(perms));
    if (G.order() > max_order)
        throw SchemaError(gpath, "group order " + std::to_string(G.order()) +
                                     " exceeds the supported bound " +
                                     std::to_string(max_order));
    return G;
}

Json matrix_to_json(const RatMat& m) {
    Json out = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k)
            row.push_back(rational_to_json(m.at(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

RatMat matrix_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        rows.push_back(rational_vector_from_json(j[i], item(path, i)));
        if (rows.back().size() != rows.front().size())
            throw SchemaError(item(path, i), "ragged matrix rows");
    }
    return RatMat::from_rows(rows);
}

Json hom_component_to_json(const HomComponent& c) {
    Json out = Json::object();
    out["r"] = c.r;
    out["n"] = c.n;
    out["d"] = c.d;
    return out;
}

HomComponent hom_component_from_json(const Json& j, const std::string& path) {
    only_fields(j, {"r", "n", "d"}, path);
    HomComponent c;
    c.r = get_long(get_field(j, "r", path), child(path, "r"));
    if (c.r < 1) throw SchemaError(child(path, "r"), "order must be >= 1");
    c.n = get_long(get_field(j, "n", path), child(path, "n"));
    const Json& d = get_field(j, "d", path);
    const std::string dpath = child(path, "d");
    expect_array(d, dpath);
    if (static_cast<long>(d.size()) != c.r)
        throw SchemaError(dpath, "expected one rank per character (" +
                                     std::to_string(c.r) + ")");
    long total = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        long v = get_long(d[i], item(dpath, i));
        if (v < 0) throw SchemaError(item(dpath, i), "rank must be >= 0");
        c.d.push_back(v);
        total += v;
    }
    if (total != c.n)
        throw SchemaError(child(path, "n"), "ranks sum to " +
                                                std::to_string(total) +
                                                ", not n");
    return c;
}

Json family_to_json(const NormalBasisFamily& fam) {
    Json x = Json::object();
    for (const auto& [n, xn] : fam.x) x[std::to_string(n)] = cyclotomic_to_json(xn);
    Json out = Json::object();
    out["N"] = fam.modulus;
    out["x"] = std::move(x);
    return out;
}

NormalBasisFamily family_from_json(const Json& j, const std::string& path) {
    only_fields(j, {"N", "x"}, path);
    long N = get_long(get_field(j, "N", path), child(path, "N"));
    if (N < 1 || N > 1000)
        throw SchemaError(child(path, "N"),
                          "modulus out of the supported range [1, 1000]");
    const Json& x = get_field(j, "x", path);
    const std::string xpath = child(path, "x");
    expect_object(x, xpath);
    NormalBasisFamily fam;
    fam.modulus = N;
    for (long d : divisors(N)) {
        auto it = x.find(std::to_string(d));
        if (it == x.end())
            throw SchemaError(child(xpath, std::to_string(d)),
                              "missing entry for this divisor of N");
        fam.x.emplace(d, cyclotomic_from_json(d, *it,
                                              child(xpath, std::to_string(d))));
    }
    for (const auto& kv : x.items()) {
        long d = key_to_long(kv.key(), child(xpath, kv.key()));
        if (d < 1 || N % d != 0)
            throw SchemaError(child(xpath, kv.key()),
                              "key is not a divisor of N");
    }
    return fam;
}

}  // namespace kinertia
