#include "assoc/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace assoc {

GroupTable permutation_group(const std::vector<Permutation>& elements) {
    GroupTable t;
    t.order = elements.size();
    if (t.order == 0) throw Error(Errc::BadParameter, "empty group");
    std::map<Permutation, std::size_t> index;
    for (std::size_t g = 0; g < t.order; ++g) index.emplace(elements[g], g);
    if (index.size() != t.order) throw Error(Errc::BadParameter, "repeated group element");

    const std::size_t deg = elements.front().size();
    t.mult.resize(t.order * t.order);
    Permutation gh(deg);
    for (std::size_t g = 0; g < t.order; ++g) {
        for (std::size_t h = 0; h < t.order; ++h) {
            for (std::size_t i = 0; i < deg; ++i) gh[i] = elements[g][elements[h][i]];
            auto it = index.find(gh);
            if (it == index.end()) throw Error(Errc::NotLatinSquare, "permutations are not closed under composition");
            t.mult[g * t.order + h] = it->second;
        }
    }
    Permutation id(deg);
    std::iota(id.begin(), id.end(), std::size_t{0});
    auto it = index.find(id);
    if (it == index.end()) throw Error(Errc::BadParameter, "identity permutation missing");
    t.identity = it->second;
    t.inverse.resize(t.order);
    for (std::size_t g = 0; g < t.order; ++g)
        for (std::size_t h = 0; h < t.order; ++h)
            if (t.product(g, h) == t.identity) t.inverse[g] = h;
    return t;
}

namespace {

std::vector<Permutation> s4_elements() {
    std::vector<Permutation> out;
    Permutation p{0, 1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Sorted cycle lengths > 1.
std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

GroupTable symmetric_group_s4() {
    const auto elements = s4_elements();
    GroupTable t = permutation_group(elements);
    const std::vector<std::vector<std::size_t>> types{{}, {2}, {3}, {2, 2}, {4}};
    t.class_partition.assign(types.size(), {});
    for (std::size_t g = 0; g < elements.size(); ++g) {
        const auto ct = cycle_type(elements[g]);
        const auto k = static_cast<std::size_t>(std::find(types.begin(), types.end(), ct) - types.begin());
        t.class_partition[k].push_back(g);
    }
    t.class_names = {"e", "(12)", "(123)", "(12)(34)", "(1234)"};
    return t;
}

GroupTable symmetric_group_s4_refined(bool four_cycles_first) {
    const auto elements = s4_elements();
    GroupTable t = permutation_group(elements);
    // e, (1j), (1jk), (jk), (1jkl), (ij)(kl), (jkl)
    t.class_partition.assign(7, {});
    for (std::size_t g = 0; g < elements.size(); ++g) {
        const auto ct = cycle_type(elements[g]);
        const bool moves_first = elements[g][0] != 0;
        std::size_t k = 0;
        if (ct == std::vector<std::size_t>{2}) k = moves_first ? 1 : 3;
        else if (ct == std::vector<std::size_t>{3}) k = moves_first ? 2 : 6;
        else if (ct == std::vector<std::size_t>{4}) k = 4;
        else if (ct == std::vector<std::size_t>{2, 2}) k = 5;
        t.class_partition[k].push_back(g);
    }
    t.class_names = {"e", "(1j)", "(1jk)", "(jk)", "(1jkl)", "(ij)(kl)", "(jkl)"};
    if (four_cycles_first) {
        const std::vector<std::size_t> order{0, 4, 1, 2, 3, 5, 6};
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::string> names;
        for (auto k : order) {
            parts.push_back(t.class_partition[k]);
            names.push_back(t.class_names[k]);
        }
        t.class_partition = std::move(parts);
        t.class_names = std::move(names);
    }
    return t;
}

GroupTable cyclic_group(std::size_t n, std::vector<std::vector<std::size_t>> partition) {
    if (n == 0) throw Error(Errc::BadParameter, "cyclic group of order 0");
    GroupTable t;
    t.order = n;
    t.mult.resize(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) t.mult[g * n + h] = (g + h) % n;
    t.inverse.resize(n);
    for (std::size_t g = 0; g < n; ++g) t.inverse[g] = (n - g) % n;
    t.identity = 0;
    t.class_partition = std::move(partition);
    for (std::size_t i = 0; i < t.class_partition.size(); ++i) t.class_names.push_back(std::to_string(i));
    return t;
}

AssociationScheme build_group_scheme(const GroupTable& table, std::string name) {
    const std::size_t n = table.order;
    if (n == 0 || table.mult.size() != n * n || table.inverse.size() != n)
        throw Error(Errc::BadParameter, "group table has inconsistent sizes");
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t r = table.product(g, h), c = table.product(h, g);
            if (r >= n || c >= n || row[r] || col[c]) {
                std::ostringstream msg;
                msg << "element " << g << " repeats in its row or column of the multiplication table";
                throw Error(Errc::NotLatinSquare, msg.str());
            }
            row[r] = col[c] = true;
        }
        if (table.product(g, table.inverse[g]) != table.identity)
            throw Error(Errc::BadParameter, "inverse table is wrong at element " + std::to_string(g));
    }

    const auto& parts = table.class_partition;
    std::vector<std::size_t> class_of(n, parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) throw Error(Errc::BadParameter, "class " + std::to_string(i) + " is empty");
        for (auto g : parts[i]) {
            if (g >= n || class_of[g] != parts.size())
                throw Error(Errc::BadParameter, "partition repeats or exceeds element " + std::to_string(g));
            class_of[g] = i;
        }
    }
    if (std::find(class_of.begin(), class_of.end(), parts.size()) != class_of.end())
        throw Error(Errc::BadParameter, "partition does not cover the group");
    if (parts[0] != std::vector<std::size_t>{table.identity})
        throw Error(Errc::BadParameter, "class 0 must be the identity alone");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto g : parts[i])
            if (class_of[table.inverse[g]] != i)
                throw Error(Errc::NotAmbivalent, "class " + std::to_string(i) + " is not closed under inverses");

    std::vector<RelationMatrix> rel(parts.size(), RelationMatrix(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) rel[class_of[table.product(table.inverse[x], y)]](x, y) = 1;

    auto names = table.class_names;
    if (names.size() != parts.size()) names.clear();
    return verify_scheme(std::move(rel), std::move(names), std::move(name));
}

AssociationScheme build_cycle(std::size_t n) {
    if (n % 2 != 0) throw Error(Errc::OddOrder, "cycle length " + std::to_string(n) + " is odd");
    if (n < 4) throw Error(Errc::TooSmall, "cycle length must be at least 4");
    const std::size_t k = n / 2;
    std::vector<RelationMatrix> rel(k + 1, RelationMatrix(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t diff = (b + n - a) % n;
            rel[std::min(diff, n - diff)](a, b) = 1;
        }
    for (std::size_t i = 0; i <= k; ++i) names.push_back(std::to_string(i));
    return verify_scheme(std::move(rel), std::move(names), "cycle");
}

AssociationScheme build_hypercube(std::size_t n) {
    if (n < 1) throw Error(Errc::TooSmall, "hypercube dimension must be at least 1");
    if (n > 12) throw Error(Errc::TooLarge, "hypercube dimension " + std::to_string(n) + " exceeds 12");
    const std::size_t size = std::size_t{1} << n;
    std::vector<RelationMatrix> rel(n + 1, RelationMatrix(size));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            rel[static_cast<std::size_t>(__builtin_popcountll(a ^ b))](a, b) = 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= n; ++i) names.push_back(std::to_string(i));
    return verify_scheme(std::move(rel), std::move(names), "hypercube");
}

AssociationScheme build_triangular(std::size_t n) {
    if (n < 4) throw Error(Errc::TooSmall, "triangular scheme needs n >= 4");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::size_t size = pairs.size();
    std::vector<RelationMatrix> rel(3, RelationMatrix(size));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) {
            const auto [i, j] = pairs[a];
            const auto [k, l] = pairs[b];
            const int shared = (i == k) + (i == l) + (j == k) + (j == l);
            rel[static_cast<std::size_t>(2 - shared)](a, b) = 1;
        }
    return verify_scheme(std::move(rel), {"0", "1", "2"}, "triangular");
}

AssociationScheme build_translation_scheme(long m, const std::vector<std::vector<LatticeVector>>& classes,
                                           std::vector<std::string> names, std::string name) {
    if (m < 1) throw Error(Errc::BadParameter, "period must be positive");
    const std::size_t n = static_cast<std::size_t>(m * m);
    std::vector<long> class_of(n, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& v : classes[i]) {
            const long x = ((v[0] % m) + m) % m, y = ((v[1] % m) + m) % m;
            auto& slot = class_of[static_cast<std::size_t>(x + m * y)];
            if (slot != -1) throw Error(Errc::NotPartition, "difference sets overlap");
            slot = static_cast<long>(i);
        }
    if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end())
        throw Error(Errc::NotPartition, "difference sets do not cover Z_m x Z_m");

    std::vector<RelationMatrix> rel(classes.size(), RelationMatrix(n));
    for (long ay = 0; ay < m; ++ay)
        for (long ax = 0; ax < m; ++ax)
            for (long by = 0; by < m; ++by)
                for (long bx = 0; bx < m; ++bx) {
                    const long dx = (bx - ax + m) % m, dy = (by - ay + m) % m;
                    const auto cls = static_cast<std::size_t>(class_of[static_cast<std::size_t>(dx + m * dy)]);
                    rel[cls](static_cast<std::size_t>(ax + m * ay), static_cast<std::size_t>(bx + m * by)) = 1;
                }
    return verify_scheme(std::move(rel), std::move(names), std::move(name));
}

AssociationScheme build_orbit_scheme_z5z5() {
    const std::vector<std::vector<LatticeVector>> classes{
        {{0, 0}},
        {{1, 0}, {0, 1}, {1, 1}, {4, 0}, {0, 4}, {4, 4}},
        {{2, 0}, {0, 2}, {2, 2}, {3, 0}, {0, 3}, {3, 3}},
        {{1, 4}, {4, 1}, {3, 4}, {4, 3}, {2, 1}, {1, 2}},
        {{1, 3}, {3, 1}, {2, 3}, {3, 2}, {2, 4}, {4, 2}},
    };
    return build_translation_scheme(5, classes, {"A0", "A1", "A2", "A3", "A4"}, "z5z5");
}

std::vector<std::vector<LatticeVector>> lattice_orbit_classes(LatticeKind kind, long m) {
    std::vector<std::vector<LatticeVector>> orbits;
    std::vector<bool> done(static_cast<std::size_t>(m * m), false);
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            if (done[static_cast<std::size_t>(x + m * y)]) continue;
            auto o = orbit_mod(kind, m, {x, y});
            for (const auto& v : o) done[static_cast<std::size_t>(v[0] + m * v[1])] = true;
            orbits.push_back(std::move(o));
        }
    // orbit_mod output is sorted, so front() is the smallest member.
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    const LatticeVector unit{1 % m, 0};
    auto first = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) {
        return std::find(o.begin(), o.end(), unit) != o.end();
    });
    std::rotate(orbits.begin() + 1, first, first + 1);
    return orbits;
}

namespace {

AssociationScheme build_orbit_lattice(LatticeKind kind, long m, const char* name) {
    auto classes = lattice_orbit_classes(kind, m);
    std::vector<std::string> names;
    for (const auto& o : classes)
        names.push_back("(" + std::to_string(o.front()[0]) + "," + std::to_string(o.front()[1]) + ")");
    return build_translation_scheme(m, classes, std::move(names), name);
}

}  // namespace

AssociationScheme build_square_lattice(long m) {
    if (m < 3) throw Error(Errc::TooSmall, "square lattice period must be at least 3");
    return build_orbit_lattice(LatticeKind::Square, m, "square");
}

AssociationScheme build_hexagonal_lattice(long m) {
    if (m < 4) throw Error(Errc::TooSmall, "hexagonal lattice period must be at least 4");
    return build_orbit_lattice(LatticeKind::Hexagonal, m, "hexagonal");
}

AssociationScheme build_lattice(const LatticeSpec& spec) {
    if (spec.period < 3) throw Error(Errc::TooSmall, "lattice period must be at least 3");
    if (spec.dimension == 1) return build_cycle(static_cast<std::size_t>(spec.period));
    if (spec.dimension != 2) throw Error(Errc::BadParameter, "lattice dimension must be 1 or 2");
    return spec.kind == LatticeKind::Square ? build_square_lattice(spec.period)
                                            : build_hexagonal_lattice(spec.period);
}

namespace {

std::int64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::int64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
    return r;
}

}  // namespace

std::int64_t krawtchouk(std::size_t l, std::size_t x, std::size_t n) {
    if (l > n || x > n) throw Error(Errc::OutOfRange, "krawtchouk needs 0 <= l, x <= n");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i <= l; ++i) {
        const std::int64_t term = binomial(x, i) * binomial(n - x, l - i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

const std::vector<std::string>& builder_names() {
    static const std::vector<std::string> names{"cycle", "hypercube", "triangular", "s4", "s4-refined-a",
                                                "s4-refined-b", "z5z5", "square", "hexagonal"};
    return names;
}

AssociationScheme build_named(const std::string& builder, std::optional<long> size) {
    auto need = [&](const char* what) {
        if (!size) throw Error(Errc::BadParameter, builder + " needs " + what);
        if (*size <= 0) throw Error(Errc::BadParameter, std::string(what) + " must be positive");
        return *size;
    };
    try {
        if (builder == "cycle") return build_cycle(static_cast<std::size_t>(need("--n")));
        if (builder == "hypercube") return build_hypercube(static_cast<std::size_t>(need("--n")));
        if (builder == "triangular") return build_triangular(static_cast<std::size_t>(need("--n")));
        if (builder == "square") return build_square_lattice(need("--m"));
        if (builder == "hexagonal") return build_hexagonal_lattice(need("--m"));
    } catch (const Error& e) {
        if (e.code() == Errc::BadParameter) throw;
        throw Error(Errc::BadParameter, e.what());
    }
    if (builder == "s4") return build_group_scheme(symmetric_group_s4(), "s4");
    if (builder == "s4-refined-a") return build_group_scheme(symmetric_group_s4_refined(false), "s4-refined-a");
    if (builder == "s4-refined-b") return build_group_scheme(symmetric_group_s4_refined(true), "s4-refined-b");
    if (builder == "z5z5") return build_orbit_scheme_z5z5();
    throw Error(Errc::UnknownBuilder, "no builder named '" + builder + "'");
}

}  // namespace assoc
