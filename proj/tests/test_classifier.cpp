#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aromatic/classifier.hpp"
#include "aromatic/prelie.hpp"

using namespace aromatic;

namespace {

AromaticGraph chain(int k) {
    std::vector<int> t(k);
    t[0] = AromaticGraph::kRoot;
    for (int v = 1; v < k; ++v) t[v] = v - 1;
    return AromaticGraph(t);
}

AromaticGraph loop_dot() {
    return product(AromaticGraph({0}), AromaticGraph({AromaticGraph::kRoot}));
}

KFormOracle method_kform(const char* name, int k) {
    IntegratorSpec m = IntegratorSpec::by_name(name);
    return [m, k](const PolyVectorField& f) { return expand(m, f, k).term(k); };
}

ForestSeries random_series(int k, std::uint64_t seed) {
    auto basis = enumerate_aromatic_trees(k);
    ForestSeries s;
    std::uint64_t state = seed * 2654435761u + 1;
    for (auto& g : basis) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        long num = static_cast<long>(state % 11) - 5;
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        long den = 1 + static_cast<long>(state % 4);
        Rat c(num, den);
        c.canonicalize();
        s.add(g, c);
    }
    return s;
}

}  // namespace

TEST_CASE("recover_kform on known oracles") {
    RecoveryResult r = recover_kform(method_kform("implicit-midpoint", 2), 2);
    REQUIRE(r.ok);
    CHECK(r.series.terms().size() == 1);
    CHECK(r.series.coeff(canonical_key(chain(2))) == Rat(1, 2));

    r = recover_kform(method_kform("divergence-euler", 2), 2);
    REQUIRE(r.ok);
    CHECK(r.series.terms().size() == 1);
    CHECK(r.series.coeff(canonical_key(loop_dot())) == 1);
    CHECK(!r.series.tree_only());

    r = recover_kform([](const PolyVectorField& f) {
        return PolyVectorField::zero(f.dim());
    }, 3);
    REQUIRE(r.ok);
    CHECK(r.series.is_zero());
}

TEST_CASE("recover_kform round trip on random aromatic combinations") {
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            ForestSeries gamma = random_series(k, seed * 97 + k);
            KFormOracle oracle = [&gamma](const PolyVectorField& f) {
                return eldiff_series(gamma, f);
            };
            RecoveryResult r = recover_kform(oracle, k);
            REQUIRE(r.ok);
            CHECK(r.series == gamma);
        }
}

TEST_CASE("recover_kform rejects forms outside the aromatic span") {
    // componentwise square: not an elementary-differential combination
    RecoveryResult r = recover_kform(method_kform("hadamard-euler", 2), 2);
    CHECK(!r.ok);
    CHECK(!r.failure.empty());
}

TEST_CASE("classifier end-to-end verdicts") {
    ClassificationVerdict v =
        classify_integrator(IntegratorSpec::by_name("implicit-midpoint"), 3);
    REQUIRE(v.orders.size() == 3);
    for (auto& o : v.orders) {
        CHECK(o.status == OrderStatus::b_series);
        CHECK(o.series.tree_only());
    }
    CHECK(v.overall() == OrderStatus::b_series);

    // cross-module agreement with the tableau B-series
    auto bs = bseries_of_rk(ButcherTableau::implicit_midpoint(), 3);
    for (int k = 1; k <= 3; ++k) CHECK(v.orders[k - 1].series == bs[k - 1]);

    v = classify_integrator(IntegratorSpec::by_name("divergence-euler"), 2);
    CHECK(v.overall() == OrderStatus::aromatic_only);
    CHECK(v.orders[0].status == OrderStatus::b_series);
    CHECK(v.orders[1].status == OrderStatus::aromatic_only);
    CHECK(v.orders[1].series.coeff(canonical_key(loop_dot())) == 1);
    REQUIRE(!v.orders[1].offending.empty());
    CHECK(v.orders[1].offending[0] == canonical_key(loop_dot()));
    CHECK(!v.orders[1].witness.empty());

    v = classify_integrator(IntegratorSpec::by_name("hadamard-euler"), 2);
    CHECK(v.overall() == OrderStatus::not_equivariant);
    CHECK(v.orders[1].status == OrderStatus::not_equivariant);
    CHECK(!v.orders[1].witness.empty());
}

TEST_CASE("classifier is deterministic for a fixed seed") {
    IntegratorSpec m = IntegratorSpec::by_name("avf");
    ClassificationVerdict v1 = classify_integrator(m, 3, 7);
    ClassificationVerdict v2 = classify_integrator(m, 3, 7);
    REQUIRE(v1.orders.size() == v2.orders.size());
    for (size_t i = 0; i < v1.orders.size(); ++i) {
        CHECK(v1.orders[i].status == v2.orders[i].status);
        CHECK(v1.orders[i].series == v2.orders[i].series);
        CHECK(v1.orders[i].witness == v2.orders[i].witness);
    }
}

TEST_CASE("decoupling test") {
    PolyVectorField f = random_field(2, 2, 3, 4);
    PolyVectorField g = random_field(1, 3, 2, 5);
    for (const char* name : {"euler", "implicit-midpoint", "rk4", "avf"}) {
        DecouplingOutcome o =
            decoupling_test(IntegratorSpec::by_name(name), f, g, 3);
        CHECK(o.pass);
    }

    Polynomial x2 = Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
    PolyVectorField fx(1, {x2});
    DecouplingOutcome o =
        decoupling_test(IntegratorSpec::by_name("divergence-euler"), fx, fx, 2);
    CHECK(!o.pass);
    CHECK(o.order == 2);
    CHECK(!o.detail.empty());
}

TEST_CASE("equivariance probe") {
    PolyVectorField f = random_field(2, 2, 3, 9);
    IntegratorSpec mid = IntegratorSpec::by_name("implicit-midpoint");
    CHECK(equivariance_probe(mid, AffineMap::identity(2), f, f, 3).pass);

    // conjugation by an invertible rational matrix
    std::vector<std::vector<Rat>> a{{1, 2}, {1, 3}};
    std::vector<Polynomial> ainv_subs =
        AffineMap::linear({{3, -2}, {-1, 1}}).as_substitution();
    PolyVectorField ft(2);
    for (int i = 0; i < 2; ++i) {
        Polynomial acc(2);
        for (int j = 0; j < 2; ++j) acc += f[j] * a[i][j];
        ft[i] = acc.substitute(ainv_subs);
    }
    AffineMap lin = AffineMap::linear(a);
    REQUIRE(intertwines(lin, f, ft));
    CHECK(equivariance_probe(mid, lin, f, ft, 3).pass);

    // rotation exposes the Hadamard control
    AffineMap rot = AffineMap::linear({{0, -1}, {1, 0}});
    PolyVectorField g(2);
    std::vector<Polynomial> rot_inv =
        AffineMap::linear({{0, 1}, {-1, 0}}).as_substitution();
    for (int i = 0; i < 2; ++i) {
        Polynomial acc(2);
        acc += f[0] * rot.a(i, 0);
        acc += f[1] * rot.a(i, 1);
        g[i] = acc.substitute(rot_inv);
    }
    REQUIRE(intertwines(rot, f, g));
    EquivarianceOutcome o =
        equivariance_probe(IntegratorSpec::by_name("hadamard-euler"), rot, f, g, 2);
    CHECK(!o.pass);
    CHECK(o.order == 2);
    CHECK(!o.residual.empty());

    // precondition: the fields must be related
    PolyVectorField h = random_field(2, 2, 3, 10);
    CHECK_THROWS_AS(equivariance_probe(mid, rot, f, h, 2), std::invalid_argument);
}

TEST_CASE("fixed point test") {
    Polynomial x2 = Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
    PolyVectorField fx(1, {x2});
    CHECK(fixed_point_test(IntegratorSpec::by_name("euler"), fx, {0}, 3).pass);

    PolyVectorField f2(2, {Polynomial::variable(2, 0) * Polynomial::variable(2, 0),
                           Polynomial::variable(2, 0) * Polynomial::variable(2, 1)});
    for (const char* name : {"implicit-midpoint", "rk4", "avf", "exact-flow"})
        CHECK(fixed_point_test(IntegratorSpec::by_name(name), f2, {0, 0}, 3).pass);

    PolyVectorField one(1, {Polynomial::constant(1, 1)});
    CHECK_THROWS_AS(fixed_point_test(IntegratorSpec::by_name("euler"), one, {0}, 2),
                    std::invalid_argument);
}

TEST_CASE("status ordering and names") {
    CHECK(to_string(OrderStatus::b_series) == "b-series");
    CHECK(to_string(OrderStatus::aromatic_only) == "aromatic-only");
    CHECK(to_string(OrderStatus::not_equivariant) == "not-equivariant");
}
