#include "assoc/resistance.hpp"

#include <sstream>

namespace assoc {

std::vector<Integer> drg_class_sizes(const IntersectionArray& array, std::size_t n_vertices) {
    const std::size_t d = array.diameter();
    auto bad = [](const std::string& why) { return Error(Errc::InvalidArray, why); };
    if (d == 0 || array.b.size() != d) throw bad("need b_0..b_{d-1} and c_1..c_d of equal length");
    const std::int64_t k = array.degree();
    if (k <= 0) throw bad("b_0 must be positive");
    if (array.c.front() != 1) throw bad("c_1 must be 1");
    for (std::size_t i = 0; i <= d; ++i) {
        const std::int64_t b = array.b_at(i), c = array.c_at(i);
        if ((i < d && b <= 0) || (i > 0 && c <= 0)) throw bad("b_i and c_i must be positive in range");
        if (b + c > k) throw bad("b_" + std::to_string(i) + " + c_" + std::to_string(i) + " exceeds the degree");
        if (i > 0 && i < d && array.b_at(i) > array.b_at(i - 1)) throw bad("b_i must be non-increasing");
        if (i > 1 && array.c_at(i) < array.c_at(i - 1)) throw bad("c_i must be non-decreasing");
    }

    std::vector<Integer> sizes{Integer(1)};
    Integer total = 1;
    for (std::size_t i = 1; i <= d; ++i) {
        const Integer num = sizes.back() * static_cast<long>(array.b_at(i - 1));
        if (num % array.c_at(i) != 0) throw bad("k_{i-1} b_{i-1} / c_i is not an integer at i = " + std::to_string(i));
        sizes.push_back(num / array.c_at(i));
        total += sizes.back();
    }
    if (total != static_cast<unsigned long>(n_vertices)) {
        std::ostringstream msg;
        msg << "class sizes sum to " << total << ", not N = " << n_vertices;
        throw bad(msg.str());
    }
    return sizes;
}

Rational resistance_drg_closed(const IntersectionArray& array, std::size_t n_vertices, std::size_t m) {
    drg_class_sizes(array, n_vertices);
    const std::size_t d = array.diameter();
    if (m == 0 || m > 5 || m > d) {
        std::ostringstream msg;
        msg << "closed forms cover 1 <= m <= min(5, d) = " << std::min<std::size_t>(5, d) << ", got m = " << m;
        throw Error(Errc::OutOfRange, msg.str());
    }
    const Rational n = static_cast<unsigned long>(n_vertices);
    const Rational k = static_cast<long>(array.degree());
    if (m == 1) return 2 * (n - 1) / (n * k);

    auto b = [&](std::size_t i) { return Rational(static_cast<long>(array.b_at(i))); };
    auto c = [&](std::size_t i) { return Rational(static_cast<long>(array.c_at(i))); };

    // R^{(m)} = 2/(k b_1..b_{m-1}) [S - (S + k W)/N]
    Rational s, w;
    switch (m) {
        case 2:
            s = b(1) + 1;
            w = 1;
            break;
        case 3:
            s = b(1) * b(2) + b(2) + c(2);
            w = b(1) + b(2) + c(2);
            break;
        case 4:
            s = b(1) * b(2) * b(3) + b(2) * b(3) + b(3) * c(2) + c(2) * c(3);
            w = b(1) * b(2) + b(1) * b(3) + b(1) * c(3) + b(2) * b(3) + b(3) * c(2) + c(2) * c(3);
            break;
        default:
            s = b(1) * b(2) * b(3) * b(4) + b(2) * b(3) * b(4) + b(3) * b(4) * c(2) + b(4) * c(2) * c(3) +
                c(2) * c(3) * c(4);
            w = b(1) * b(2) * b(3) + b(1) * b(2) * b(4) + b(1) * b(2) * c(4) + b(1) * b(3) * b(4) +
                b(1) * b(4) * c(3) + b(1) * c(3) * c(4) + b(2) * b(3) * b(4) + b(3) * b(4) * c(2) +
                b(4) * c(2) * c(3) + c(2) * c(3) * c(4);
            break;
    }
    Rational prod = 1;
    for (std::size_t i = 1; i < m; ++i) prod *= b(i);
    Rational r = 2 / (k * prod) * (s - (s + k * w) / n);
    r.canonicalize();
    return r;
}

ResistanceTable resistance_closed_form(const AssociationScheme& scheme) {
    const auto array = check_distance_regular(scheme);
    if (!array)
        throw Error(Errc::MethodPreconditionViolated, "closed forms need a distance-regular scheme");
    const std::size_t d = scheme.class_count();
    if (d > 5)
        throw Error(Errc::MethodPreconditionViolated, "closed forms cover diameter at most 5, scheme has " +
                                                          std::to_string(d));
    ResistanceTable t;
    t.method = Method::ClosedForm;
    std::vector<Rational> exact(d + 1, Rational(0));
    t.values.assign(d + 1, 0.0);
    for (std::size_t m = 1; m <= d; ++m) {
        exact[m] = resistance_drg_closed(*array, scheme.vertex_count(), m);
        t.values[m] = exact[m].get_d();
    }
    t.exact = std::move(exact);
    return t;
}

}  // namespace assoc
