// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and exact (no tolerances).

#include <cstdio>
#include <set>

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

AromaticGraph dot() { return AromaticGraph({AromaticGraph::kRoot}); }
AromaticGraph loop() { return AromaticGraph({0}); }
AromaticGraph two_cycle() { return AromaticGraph({1, 0}); }

template <typename Pred>
std::set<CanonicalKey> brute_enumerate(int k, Pred keep) {
    std::set<CanonicalKey> keys;
    std::vector<int> t(k, AromaticGraph::kRoot);
    for (;;) {
        AromaticGraph g(t);
        if (keep(g)) keys.insert(canonical_key(g));
        int v = 0;
        while (v < k && ++t[v] == k) t[v++] = AromaticGraph::kRoot;
        if (v == k) break;
    }
    return keys;
}

std::set<CanonicalKey> key_set(const std::vector<AromaticGraph>& gs) {
    std::set<CanonicalKey> keys;
    for (auto& g : gs) keys.insert(canonical_key(g));
    return keys;
}

// 1. Enumeration oracle equivalence.
bool criterion1() {
    const std::vector<size_t> tree_counts{1, 1, 2, 4, 9, 20, 48};
    for (int k = 1; k <= 7; ++k) {
        auto oracle = brute_enumerate(k, [](const AromaticGraph& g) { return g.is_tree(); });
        if (oracle.size() != tree_counts[k - 1]) return false;
        if (k <= 6 && key_set(enumerate_trees(k)) != oracle) return false;
    }
    for (int k = 1; k <= 6; ++k) {
        if (key_set(enumerate_molecules(k)) !=
            brute_enumerate(k, [](const AromaticGraph& g) { return g.is_molecule(); }))
            return false;
        if (key_set(enumerate_aromatic_trees(k)) !=
            brute_enumerate(k, [](const AromaticGraph& g) { return g.root_count() == 1; }))
            return false;
    }
    return true;
}

// 2. Midpoint golden test.
bool criterion2() {
    IntegratorSpec mid = IntegratorSpec::by_name("implicit-midpoint");
    int done = 0;
    for (int dim = 1; dim <= 3; ++dim)
        for (std::uint64_t s = 1; done < 20 && s <= 7; ++s, ++done) {
            PolyVectorField f = random_field(dim, 3, 4, s * 31 + dim);
            JetExpansion j = expand(mid, f, 2);
            if (!(j.term(2) == eldiff_hom(chain(2), f).vec * Rat(1, 2))) return false;
        }
    return done >= 20;
}

// 3. Dual-basis law with explicit symmetry factors. The law lives within
// a fixed order k (the duals inhabit dimension k), so pairs share k.
bool criterion3() {
    for (int k = 1; k <= 5; ++k) {
        std::vector<Rat> x(k, 0);
        auto trees = enumerate_trees(k);
        for (auto& tau : trees)
            for (auto& taup : trees) {
                PolyVectorField dual = dual_field(canonicalize(taup).graph);
                Rat got = eldiff_hom(tau, dual).vec.eval(x)[0];
                Rat want = canonical_key(tau) == canonical_key(taup)
                               ? Rat(symmetry(tau))
                               : Rat(0);
                if (got != want) return false;
            }
        if (k > 4) continue;
        auto mols = enumerate_molecules(k);
        for (auto& mu : mols)
            for (auto& mup : mols) {
                PolyVectorField dual = dual_field(canonicalize(mup).graph);
                Rat got = eldiff_hom(mu, dual).scalar.eval(x);
                Rat want = canonical_key(mu) == canonical_key(mup)
                               ? Rat(symmetry(mu))
                               : Rat(0);
                if (got != want) return false;
            }
    }
    return true;
}

// 4. Two-algorithm eldiff equivalence.
bool criterion4() {
    for (int dim = 1; dim <= 4; ++dim)
        for (std::uint64_t s = 1; s <= 10; ++s) {
            PolyVectorField f = random_field(dim, 2, 3, s * 101 + dim);
            for (int k = 1; k <= 5; ++k)
                for (auto& g : enumerate_aromatic_trees(k)) {
                    EldiffResult a = eldiff_naive(g, f);
                    if (!(a == eldiff_hom(g, f, Exec::serial))) return false;
                    if (!(a == eldiff_hom(g, f, Exec::parallel))) return false;
                }
        }
    return true;
}

// 5. Vanishing combinations and their separations one dimension up.
bool criterion5() {
    ForestSeries dim2;
    dim2.add(product(product(dot(), loop()), loop()), 1);
    dim2.add(chain(3), 2);
    dim2.add(product(chain(2), loop()), -2);
    dim2.add(product(dot(), two_cycle()), -1);
    for (std::uint64_t s = 1; s <= 50; ++s)
        if (!eldiff_series(dim2, random_field(2, 3, 4, s)).is_zero()) return false;
    bool sep2 = false;
    for (std::uint64_t s = 1; s <= 10 && !sep2; ++s)
        sep2 = !eldiff_series(dim2, random_field(3, 2, 3, s)).is_zero();

    ForestSeries dim1;
    dim1.add(AromaticGraph({AromaticGraph::kRoot, 0, 0, 1}), 1);
    dim1.add(AromaticGraph({AromaticGraph::kRoot, 0, 1, 1}), -1);
    for (std::uint64_t s = 1; s <= 50; ++s)
        if (!eldiff_series(dim1, random_field(1, 4, 3, s)).is_zero()) return false;
    bool sep1 = false;
    for (std::uint64_t s = 1; s <= 10 && !sep1; ++s)
        sep1 = !eldiff_series(dim1, random_field(2, 2, 3, s)).is_zero();
    return sep1 && sep2;
}

// 6. Pre-Lie and grafting laws.
bool criterion6() {
    for (int dim = 1; dim <= 3; ++dim)
        for (std::uint64_t s = 1; s <= 5; ++s) {
            PolyVectorField f = random_field(dim, 2, 3, s * 11 + dim);
            PolyVectorField g = random_field(dim, 2, 3, s * 11 + dim + 500);
            PolyVectorField h = random_field(dim, 2, 3, s * 11 + dim + 900);
            PolyVectorField lhs =
                connection(f, connection(g, h)) - connection(connection(f, g), h);
            PolyVectorField rhs =
                connection(g, connection(f, h)) - connection(connection(g, f), h);
            if (!(lhs == rhs)) return false;
            for (int k1 = 1; k1 <= 4; ++k1)
                for (int k2 = 1; k2 <= 4; ++k2)
                    for (auto& t1 : enumerate_trees(k1))
                        for (auto& t2 : enumerate_trees(k2)) {
                            PolyVectorField l = eldiff_series(graft(t1, t2), f);
                            PolyVectorField r = connection(eldiff_hom(t1, f).vec,
                                                           eldiff_hom(t2, f).vec);
                            if (!(l == r)) return false;
                        }
        }
    return true;
}

// 7. Partition/decoupling laws; the divergence control fails reproducibly.
bool criterion7() {
    for (std::uint64_t s = 1; s <= 3; ++s) {
        PolyVectorField f = random_field(2, 2, 3, s + 3);
        PolyVectorField g = random_field(1, 3, 2, s + 77);
        PolyVectorField fg = direct_sum(f, g);
        for (int k = 1; k <= 3; ++k) {
            for (auto& m : enumerate_molecules(k)) {
                Polynomial lhs = eldiff_hom(m, fg).scalar;
                std::vector<Polynomial> sub_f{Polynomial::variable(3, 0),
                                              Polynomial::variable(3, 1)};
                std::vector<Polynomial> sub_g{Polynomial::variable(3, 2)};
                Polynomial rhs = eldiff_hom(m, f).scalar.substitute(sub_f) +
                                 eldiff_hom(m, g).scalar.substitute(sub_g);
                if (!(lhs == rhs)) return false;
            }
            for (auto& t : enumerate_trees(k))
                if (!(eldiff_hom(t, fg).vec ==
                      direct_sum(eldiff_hom(t, f).vec, eldiff_hom(t, g).vec)))
                    return false;
        }
        for (const char* name : {"euler", "implicit-midpoint", "rk4", "avf"})
            if (!decoupling_test(IntegratorSpec::by_name(name), f, g, 4).pass)
                return false;
    }
    Polynomial x2 = Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
    PolyVectorField fx(1, {x2});
    DecouplingOutcome w1 =
        decoupling_test(IntegratorSpec::by_name("divergence-euler"), fx, fx, 2);
    DecouplingOutcome w2 =
        decoupling_test(IntegratorSpec::by_name("divergence-euler"), fx, fx, 2);
    return !w1.pass && w1.order == 2 && w1.detail == w2.detail && !w1.detail.empty();
}

// 8. Classifier end-to-end.
bool criterion8() {
    for (const char* name : {"implicit-midpoint", "avf"}) {
        ClassificationVerdict v = classify_integrator(IntegratorSpec::by_name(name), 4);
        if (v.overall() != OrderStatus::b_series) return false;
    }
    ClassificationVerdict rk4 = classify_integrator(IntegratorSpec::by_name("rk4"), 5);
    if (rk4.overall() != OrderStatus::b_series) return false;

    ClassificationVerdict de =
        classify_integrator(IntegratorSpec::by_name("divergence-euler"), 2);
    if (de.overall() != OrderStatus::aromatic_only) return false;
    if (de.orders[1].status != OrderStatus::aromatic_only) return false;
    if (de.orders[1].series.coeff(canonical_key(product(loop(), dot()))) != 1)
        return false;

    ClassificationVerdict he =
        classify_integrator(IntegratorSpec::by_name("hadamard-euler"), 2);
    if (he.overall() != OrderStatus::not_equivariant) return false;
    if (he.orders[1].status != OrderStatus::not_equivariant) return false;
    return !he.orders[1].witness.empty();
}

// 9. Round-trip recovery of random aromatic combinations.
bool criterion9() {
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto basis = enumerate_aromatic_trees(k);
            ForestSeries gamma;
            std::uint64_t state = seed * 2654435761u + k;
            for (auto& g : basis) {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                Rat c(static_cast<long>(state % 9) - 4,
                      1 + static_cast<long>((state >> 32) % 3));
                c.canonicalize();
                gamma.add(g, c);
            }
            KFormOracle oracle = [&gamma](const PolyVectorField& f) {
                return eldiff_series(gamma, f);
            };
            RecoveryResult r = recover_kform(oracle, k, seed);
            if (!r.ok || !(r.series == gamma)) return false;
        }
    return true;
}

// 10. RK consistency: per-order B-series equals the jet expansion.
bool criterion10() {
    std::vector<ButcherTableau> corpus{
        ButcherTableau::explicit_euler(), ButcherTableau::implicit_midpoint(),
        ButcherTableau::trapezoidal(), ButcherTableau::classical_rk4()};
    for (auto& t : corpus) {
        auto series = bseries_of_rk(t, 5);
        for (int dim = 1; dim <= 2; ++dim)
            for (std::uint64_t s = 1; s <= 3; ++s) {
                PolyVectorField f = random_field(dim, 2, 3, s * 41 + dim);
                JetExpansion j = expand(IntegratorSpec::rk(t), f, 5);
                for (int k = 1; k <= 5; ++k)
                    if (!(eldiff_series(series[k - 1], f) == j.term(k))) return false;
            }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"enumeration oracle equivalence", criterion1},
        {"midpoint golden test", criterion2},
        {"dual-basis law", criterion3},
        {"two-algorithm eldiff equivalence", criterion4},
        {"non-injectivity identities", criterion5},
        {"pre-Lie and grafting laws", criterion6},
        {"partition/decoupling laws", criterion7},
        {"classifier end-to-end", criterion8},
        {"round-trip recovery", criterion9},
        {"RK consistency", criterion10},
    };
    int failures = 0;
    int n = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("criterion %2d: FAIL (%s) — exception: %s\n", n + 1, c.name,
                        e.what());
            ++failures;
            ++n;
            continue;
        }
        std::printf("criterion %2d: %s (%s)\n", ++n, ok ? "pass" : "FAIL", c.name);
        if (!ok) ++failures;
    }
    return failures;
}
