#include "aromatic/classifier.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace aromatic {

std::string to_string(OrderStatus s) {
    switch (s) {
        case OrderStatus::b_series: return "b-series";
        case OrderStatus::aromatic_only: return "aromatic-only";
        case OrderStatus::not_equivariant: return "not-equivariant";
    }
    return "?";
}

namespace {

// Incremental exact-rational row reduction; rows are kept in reduced
// echelon form so rank and inconsistency are visible as rows arrive.
class ExactSolver {
public:
    explicit ExactSolver(int cols) : cols_(cols) {}

    enum class RowOutcome { added, dependent, inconsistent };

    RowOutcome feed(std::vector<Rat> row, Rat rhs) {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& x = row[pivot_[r]];
            if (x == 0) continue;
            Rat k = x;
            for (int j = 0; j < cols_; ++j) row[j] -= k * rows_[r][j];
            rhs -= k * rhs_[r];
        }
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (row[j] != 0) { p = j; break; }
        if (p == -1) return rhs == 0 ? RowOutcome::dependent : RowOutcome::inconsistent;
        Rat inv = row[p];
        for (int j = 0; j < cols_; ++j) row[j] /= inv;
        rhs /= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat k = rows_[r][p];
            if (k == 0) continue;
            for (int j = 0; j < cols_; ++j) rows_[r][j] -= k * row[j];
            rhs_[r] -= k * rhs;
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
        pivot_.push_back(p);
        return RowOutcome::added;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(cols_, Rat(0));
        for (size_t r = 0; r < rows_.size(); ++r) x[pivot_[r]] = rhs_[r];
        return x;
    }

private:
    int cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<int> pivot_;
};

// Structured probe from the monomial construction: unscaled duals of the
// tree and the distinct molecules of gamma, direct-summed with distinct
// rational multipliers, padded with zeros to dimension k.
PolyVectorField structured_probe(const AromaticGraph& gamma, int k) {
    auto [mols, tree] = decompose(gamma);
    PolyVectorField f = dual_field(tree);
    static const long multipliers[] = {2, 3, 5, 7, 11, 13, 17};
    int mi = 0;
    CanonicalKey last;
    for (const AromaticGraph& m : mols) {
        CanonicalKey key = encode_targets(m);
        if (key == last) continue;  // one copy per distinct molecule
        last = key;
        f = direct_sum(f, dual_field(m) * Rat(multipliers[mi++ % 7]));
    }
    return pad_with_zero(f, k);
}

std::string point_str(const std::vector<Rat>& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(x[i]);
    }
    return s + ")";
}

}  // namespace

RecoveryResult recover_kform(const KFormOracle& oracle, int k, std::uint64_t seed) {
    std::vector<AromaticGraph> basis = enumerate_aromatic_trees(k);
    const int B = static_cast<int>(basis.size());
    ExactSolver solver(B);

    RecoveryResult out;
    std::vector<Rat> origin(k, Rat(0));

    auto feed_probe = [&](const PolyVectorField& f, bool value_at_zero_only) -> bool {
        std::vector<PolyVectorField> images;
        images.reserve(B);
        for (const AromaticGraph& g : basis) images.push_back(eldiff_hom(g, f).vec);
        PolyVectorField target = oracle(f);

        auto feed_row = [&](std::vector<Rat> row, Rat rhs) -> bool {
            if (solver.feed(std::move(row), std::move(rhs)) ==
                ExactSolver::RowOutcome::inconsistent) {
                out.failure = "probe produced an inconsistent linear system; the k-form "
                              "is outside the aromatic span";
                out.witness_field = f;
                return false;
            }
            return true;
        };

        if (value_at_zero_only) {
            std::vector<Rat> row;
            row.reserve(B);
            for (auto& img : images) row.push_back(img[0].eval(origin));
            return feed_row(std::move(row), target[0].eval(origin));
        }
        for (int comp = 0; comp < k; ++comp) {
            std::set<Polynomial::Exps> monomials;
            for (auto& img : images)
                for (auto& [e, c] : img[comp].terms()) monomials.insert(e);
            for (auto& [e, c] : target[comp].terms()) monomials.insert(e);
            for (const auto& e : monomials) {
                std::vector<Rat> row;
                row.reserve(B);
                for (auto& img : images) {
                    auto it = img[comp].terms().find(e);
                    row.push_back(it == img[comp].terms().end() ? Rat(0) : it->second);
                }
                auto it = target[comp].terms().find(e);
                Rat rhs = it == target[comp].terms().end() ? Rat(0) : it->second;
                if (!feed_row(std::move(row), std::move(rhs))) return false;
                if (solver.rank() == B) return true;
            }
        }
        return true;
    };

    for (const AromaticGraph& g : basis) {
        if (!feed_probe(structured_probe(g, k), true)) return out;
        if (solver.rank() == B) break;
    }
    constexpr int kMaxRandomProbes = 8;
    for (int i = 0; i < kMaxRandomProbes && solver.rank() < B; ++i)
        if (!feed_probe(random_field(k, 2, 3, seed + i), false)) return out;

    if (solver.rank() < B)
        throw std::runtime_error("probe matrix rank deficient after augmentation (rank " +
                                 std::to_string(solver.rank()) + " of " +
                                 std::to_string(B) + " at order " + std::to_string(k) + ")");

    std::vector<Rat> c = solver.solution();
    ForestSeries series;
    for (int j = 0; j < B; ++j) series.add_key(encode_targets(basis[j]), c[j]);

    // Held-out residual check: full polynomial identity on fresh fields.
    for (int i = 0; i < 3; ++i) {
        PolyVectorField f = random_field(k, 2, 3, seed + 100 + i);
        if (!(eldiff_series(series, f) == oracle(f))) {
            out.failure = "held-out residual probe mismatched the recovered series";
            out.witness_field = f;
            return out;
        }
    }
    out.ok = true;
    out.series = std::move(series);
    return out;
}

OrderStatus ClassificationVerdict::overall() const {
    OrderStatus s = OrderStatus::b_series;
    for (auto& o : orders) {
        if (o.status == OrderStatus::not_equivariant) return OrderStatus::not_equivariant;
        if (o.status == OrderStatus::aromatic_only) s = OrderStatus::aromatic_only;
    }
    return s;
}

ClassificationVerdict classify_integrator(const IntegratorSpec& method, int K,
                                          std::uint64_t seed) {
    ClassificationVerdict verdict;
    for (int k = 1; k <= K; ++k) {
        OrderVerdict ov;
        ov.order = k;
        KFormOracle oracle = [&](const PolyVectorField& f) {
            return expand(method, f, k).term(k);
        };
        RecoveryResult rec = recover_kform(oracle, k, seed);
        if (!rec.ok) {
            ov.status = OrderStatus::not_equivariant;
            std::ostringstream os;
            os << rec.failure;
            // Try to pin the failure to a concrete rotation witness.
            if (k >= 2) {
                PolyVectorField f2 = random_field(2, 2, 2, seed + 17);
                AffineMap rot = AffineMap::linear({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});
                AffineMap rot_inv = AffineMap::linear({{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}});
                std::vector<Polynomial> subs = rot_inv.as_substitution();
                PolyVectorField g2(2);
                for (int i = 0; i < 2; ++i) {
                    Polynomial rotated(2);
                    for (int j = 0; j < 2; ++j) rotated += f2[j] * rot.a(i, j);
                    g2[i] = rotated.substitute(subs);
                }
                if (intertwines(rot, f2, g2)) {
                    EquivarianceOutcome eo = equivariance_probe(method, rot, f2, g2, k);
                    if (!eo.pass)
                        os << "; rotation probe failed at order " << eo.order
                           << " with residual " << eo.residual;
                }
            }
            ov.witness = os.str();
        } else {
            ov.series = rec.series;
            for (auto& [key, c] : rec.series.terms())
                if (!parse_graph(key).is_tree()) ov.offending.push_back(key);
            if (ov.offending.empty()) {
                ov.status = OrderStatus::b_series;
            } else {
                ov.status = OrderStatus::aromatic_only;
                PolyVectorField f1 = random_field(1, 2, 2, seed + 31);
                PolyVectorField g1 = random_field(1, 2, 2, seed + 37);
                DecouplingOutcome d = decoupling_test(method, f1, g1, k);
                if (!d.pass) {
                    std::ostringstream os;
                    os << "decoupling fails at order " << d.order << ", component "
                       << d.component + 1 << ": " << d.detail;
                    ov.witness = os.str();
                }
            }
        }
        verdict.orders.push_back(std::move(ov));
    }
    return verdict;
}

DecouplingOutcome decoupling_test(const IntegratorSpec& method, const PolyVectorField& f,
                                  const PolyVectorField& g, int K) {
    JetExpansion sum = expand(method, direct_sum(f, g), K);
    JetExpansion jf = expand(method, f, K);
    JetExpansion jg = expand(method, g, K);
    for (int k = 1; k <= K; ++k) {
        PolyVectorField expect = direct_sum(jf.term(k), jg.term(k));
        const PolyVectorField& got = sum.term(k);
        if (got == expect) continue;
        DecouplingOutcome o;
        o.pass = false;
        o.order = k;
        for (int i = 0; i < got.dim(); ++i)
            if (!(got[i] == expect[i])) {
                o.component = i;
                o.detail = "got " + got[i].str() + ", expected " + expect[i].str();
                break;
            }
        return o;
    }
    return {};
}

EquivarianceOutcome equivariance_probe(const IntegratorSpec& method, const AffineMap& a,
                                       const PolyVectorField& f, const PolyVectorField& g,
                                       int K) {
    if (!intertwines(a, f, g))
        throw std::invalid_argument("equivariance probe requires a-related fields");
    JetExpansion jf = expand(method, f, K);
    JetExpansion jg = expand(method, g, K);
    std::vector<Polynomial> subs = a.as_substitution();
    for (int k = 1; k <= K; ++k) {
        const PolyVectorField& tf = jf.term(k);
        const PolyVectorField& tg = jg.term(k);
        for (int i = 0; i < tg.dim(); ++i) {
            Polynomial lhs = tg[i].substitute(subs);
            Polynomial rhs(f.dim());
            for (int j = 0; j < f.dim(); ++j) rhs += tf[j] * a.a(i, j);
            Polynomial residual = lhs - rhs;
            if (!residual.is_zero())
                return {false, k, "component " + std::to_string(i + 1) + ": " +
                                      residual.str()};
        }
    }
    return {};
}

FixedPointOutcome fixed_point_test(const IntegratorSpec& method, const PolyVectorField& f,
                                   const std::vector<Rat>& x0, int K) {
    std::vector<Rat> fx = f.eval(x0);
    for (auto& v : fx)
        if (v != 0)
            throw std::invalid_argument("fixed point test requires f(x0) = 0");
    JetExpansion j = expand(method, f, K);
    for (int k = 1; k <= K; ++k) {
        std::vector<Rat> v = j.term(k).eval(x0);
        for (auto& x : v)
            if (x != 0) return {false, k, point_str(v)};
    }
    return {};
}

}  // namespace aromatic
