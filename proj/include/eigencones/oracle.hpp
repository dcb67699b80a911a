#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eigencones/involution.hpp"
#include "eigencones/numeric.hpp"
#include "eigencones/system.hpp"

namespace eigencones {

/// A realizable point of the given cone, produced from seeded random
/// matrices through the cone's defining spectral map.
inline FloatPoint sample_cone_point(const ConeId& id, uint64_t seed) {
    Rng rng = Rng::for_trial(seed, 0);
    return [&]() -> FloatPoint {
        switch (id.kind) {
            case ConeId::Kind::Horn: {
                int n = id.params.at(0);
                ComplexMatrix x = random_hermitian(n, rng), y = random_hermitian(n, rng);
                return {{"x", eigenvalues_hermitian(x)},
                        {"y", eigenvalues_hermitian(y)},
                        {"z", eigenvalues_hermitian(x + y)}};
            }
            case ConeId::Kind::LRmn: {
                int m = id.params.at(0), n = id.params.at(1);
                ComplexMatrix x = random_hermitian(m + n, rng);
                return {{"z", eigenvalues_hermitian(x)},
                        {"x", eigenvalues_hermitian(x.block(0, 0, m, m))},
                        {"y", eigenvalues_hermitian(x.block(m, m, n, n))}};
            }
            case ConeId::Kind::E1: {
                int n = id.params.at(0);
                ComplexMatrix x = random_hermitian(n, rng);
                ComplexMatrix re(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) re(i, j) = x(i, j).real();
                return {{"x", eigenvalues_hermitian(x)}, {"y", eigenvalues_hermitian(re)}};
            }
            case ConeId::Kind::E2: {
                int n = id.params.at(0);
                ComplexMatrix a = random_real_symmetric(2 * n, rng);
                // pi(A) = (X+Y)/2 + i (Z - Z^t)/2 for A = [[X, Z^t], [Z, Y]].
                ComplexMatrix pi(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double sym = (a(i, j).real() + a(n + i, n + j).real()) / 2.0;
                        double skew = (a(n + i, j).real() - a(n + j, i).real()) / 2.0;
                        pi(i, j) = Complex(sym, skew);
                    }
                return {{"x", eigenvalues_hermitian(a)}, {"y", eigenvalues_hermitian(pi)}};
            }
            case ConeId::Kind::Sing: {
                int p = id.params.at(0), q = id.params.at(1);
                ComplexMatrix a = random_gaussian(p, q, rng), b = random_gaussian(p, q, rng);
                return {{"x", singular_values(a)},
                        {"y", singular_values(b)},
                        {"z", singular_values(a + b)}};
            }
            case ConeId::Kind::SOodd: {
                ConeId sub{ConeId::Kind::Sing, {id.params.at(0) + 1, id.params.at(0)}, id.variant};
                return sample_cone_point(sub, seed);
            }
            case ConeId::Kind::A: {
                int p = id.params.at(0), q = id.params.at(1);
                ComplexMatrix x = random_hermitian(p + q, rng);
                return {{"x", eigenvalues_hermitian(x)},
                        {"y", singular_values(x.block(0, p, p, q))}};
            }
            case ConeId::Kind::B: {
                int n = id.params.at(0);
                ComplexMatrix x = random_gaussian(n, n, rng);
                ComplexMatrix herm = (x + x.adjoint()).scaled(0.5);
                return {{"x", singular_values(x)}, {"y", eigenvalues_hermitian(herm)}};
            }
            case ConeId::Kind::S: {
                int p = id.params.at(0), q = id.params.at(1);
                ComplexMatrix x = random_gaussian(p + q, p + q, rng);
                return {{"z", singular_values(x)},
                        {"x", singular_values(x.block(0, p, p, q))},
                        {"y", singular_values(x.block(p, 0, q, p))}};
            }
            case ConeId::Kind::T: {
                int p = id.params.at(0), q = id.params.at(1);
                ComplexMatrix x = random_gaussian(p + q, p + q, rng);
                return {{"z", singular_values(x)},
                        {"x", singular_values(x.block(0, 0, p, p))},
                        {"y", singular_values(x.block(p, p, q, q))}};
            }
        }
        throw UnsupportedConeError("no sampler for this cone");
    }();
}

struct SoundnessViolation {
    uint64_t trial = 0;
    FloatPoint point;
    Json relation;
    double margin = 0;
};

struct SoundnessReport {
    ConeId cone;
    uint64_t trials = 0;
    std::vector<SoundnessViolation> violations;
    double max_violation = 0;

    bool clean() const { return violations.empty(); }

    Json to_json() const {
        Json j;
        j["cone"] = cone.str();
        j["trials"] = trials;
        j["violations"] = Json::array();
        for (const auto& v : violations) {
            Json pt = Json::object();
            for (const auto& [name, vals] : v.point) pt[name] = vals;
            j["violations"].push_back({{"trial", v.trial},
                                       {"point", pt},
                                       {"relation", v.relation},
                                       {"margin", v.margin}});
        }
        j["max_violation"] = max_violation;
        return j;
    }
};

/// Samples realizable points and evaluates every generated relation on
/// them in float mode; any violation beyond tol is reported with the
/// relation's provenance.
inline SoundnessReport soundness_check(const InequalitySystem& sys, uint64_t trials,
                                       uint64_t seed, double tol = 1e-8) {
    SoundnessReport report;
    report.cone = sys.cone;
    report.trials = trials;
    for (uint64_t t = 0; t < trials; ++t) {
        FloatPoint point = sample_cone_point(sys.cone, seed + t);
        auto res = sys.member_float(point, tol, true);
        for (const auto& v : res.violations) {
            SoundnessViolation sv;
            sv.trial = t;
            sv.point = point;
            sv.margin = v.margin;
            sv.relation = v.relation ? v.relation->provenance
                                     : Json{{"kind", "chamber"}, {"block", v.chamber_block}};
            report.max_violation = std::max(report.max_violation, -v.margin);
            report.violations.push_back(std::move(sv));
        }
    }
    return report;
}

/// Named coordinate maps between the block spaces of two cones; each one
/// realizes the membership equivalence proved for the pair.
enum class Embedding {
    Identity,       // same blocks
    E1ToHorn,       // (x, y) -> (x, x, 2y)
    E2ToLRmn,       // (x, y) -> (x, y, y)
    SingToHorn,     // hats on all three blocks
    AToHorn,        // (x, y) -> (x, reverse-negate x, 2 hat y)
    BToLRmn,        // (x, y) -> (hat_sym x, y, reverse-negate y)
    SToLRmn,        // hats: (z, x, y) -> (hat_sym z, hat x, hat y)
    TToLRmn,        // hats: (z, x, y) -> (hat_sym z, hat_sym x, hat_sym y)
};

inline RatPoint apply_embedding(Embedding e, const ConeId& source, const RatPoint& pt) {
    switch (e) {
        case Embedding::Identity:
            return pt;
        case Embedding::E1ToHorn: {
            std::vector<Rat> two_y = pt.at("y");
            for (Rat& v : two_y) v *= 2;
            return {{"x", pt.at("x")}, {"y", pt.at("x")}, {"z", two_y}};
        }
        case Embedding::E2ToLRmn:
            return {{"z", pt.at("x")}, {"x", pt.at("y")}, {"y", pt.at("y")}};
        case Embedding::SingToHorn: {
            int p = source.params.at(0), q = source.params.at(1);
            return {{"x", hat(pt.at("x"), p, q)},
                    {"y", hat(pt.at("y"), p, q)},
                    {"z", hat(pt.at("z"), p, q)}};
        }
        case Embedding::AToHorn: {
            int p = source.params.at(0), q = source.params.at(1);
            std::vector<Rat> two_hat_y = hat(pt.at("y"), p, q);
            for (Rat& v : two_hat_y) v *= 2;
            return {{"x", pt.at("x")}, {"y", reverse_negate(pt.at("x"))}, {"z", two_hat_y}};
        }
        case Embedding::BToLRmn:
            return {{"z", hat_sym(pt.at("x"))},
                    {"x", pt.at("y")},
                    {"y", reverse_negate(pt.at("y"))}};
        case Embedding::SToLRmn: {
            int p = source.params.at(0), q = source.params.at(1);
            return {{"z", hat_sym(pt.at("z"))},
                    {"x", hat(pt.at("x"), p, q)},
                    {"y", hat(pt.at("y"), p, q)}};
        }
        case Embedding::TToLRmn:
            return {{"z", hat_sym(pt.at("z"))},
                    {"x", hat_sym(pt.at("x"))},
                    {"y", hat_sym(pt.at("y"))}};
    }
    throw UnsupportedEmbeddingError("unhandled embedding");
}

/// The registered cross-check for a cone: the target system plus the map
/// realizing the membership equivalence.
inline std::pair<Embedding, InequalitySystem> registered_cross_check(const ConeId& id) {
    switch (id.kind) {
        case ConeId::Kind::E1:
            return {Embedding::E1ToHorn, horn_system(id.params.at(0))};
        case ConeId::Kind::E2:
            return {Embedding::E2ToLRmn, lr_mn_system(id.params.at(0), id.params.at(0))};
        case ConeId::Kind::Sing:
            return {Embedding::SingToHorn, horn_system(id.params.at(0) + id.params.at(1))};
        case ConeId::Kind::SOodd: {
            ConeId sub{ConeId::Kind::Sing, {id.params.at(0) + 1, id.params.at(0)}, id.variant};
            return registered_cross_check(sub);
        }
        case ConeId::Kind::A:
            return {Embedding::AToHorn, horn_system(id.params.at(0) + id.params.at(1))};
        case ConeId::Kind::B:
            return {Embedding::BToLRmn, lr_mn_system(id.params.at(0), id.params.at(0))};
        case ConeId::Kind::S: {
            int n = id.params.at(0) + id.params.at(1);
            return {Embedding::SToLRmn, lr_mn_system(n, n)};
        }
        case ConeId::Kind::T:
            return {Embedding::TToLRmn,
                    lr_mn_system(2 * id.params.at(0), 2 * id.params.at(1))};
        default:
            throw UnsupportedEmbeddingError("no registered cross-check for " + id.str());
    }
}

/// Exact rational point source over a system's blocks: a deterministic
/// coarse grid pass first, then seeded random points with small
/// denominators, boundary bias (duplicated coordinates, inserted zeros)
/// and optional repair onto the system's equality hyperplanes.
class RatSampler {
public:
    RatSampler(const InequalitySystem& sys, uint64_t seed)
        : sys_(sys), rng_(Rng::for_trial(seed, 0xec)) {
        grid_values_ = {Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
        for (const auto& b : sys.blocks)
            if (b.chamber == Chamber::Decreasing) has_signed_ = true;
        build_grid();
    }

    /// Total number of deterministic grid points.
    size_t grid_size() const { return grid_total_; }

    /// The k-th grid point (k < grid_size()).
    RatPoint grid_point(size_t k) const {
        RatPoint pt;
        for (size_t b = 0; b < sys_.blocks.size(); ++b) {
            const auto& choices = grid_choices_[b];
            size_t idx = k % choices.size();
            k /= choices.size();
            pt[sys_.blocks[b].name] = choices[idx];
        }
        return pt;
    }

    /// A random chamber-respecting point, repaired onto the equality
    /// hyperplanes three times out of four.
    RatPoint random_point() {
        RatPoint pt;
        for (const auto& b : sys_.blocks) pt[b.name] = random_block(b);
        if (rng_.below(4) != 0) repair_equalities(pt);
        return pt;
    }

private:
    std::vector<Rat> random_block(const VariableBlock& b) {
        std::vector<Rat> v;
        v.reserve(b.dim);
        for (int i = 0; i < b.dim; ++i) {
            if (!v.empty() && rng_.below(4) == 0) {
                v.push_back(v.back());  // boundary bias: repeated coordinate
                continue;
            }
            if (rng_.below(4) == 0) {
                v.push_back(Rat(0));
                continue;
            }
            long long den = 1 + static_cast<long long>(rng_.below(64));
            long long num = static_cast<long long>(rng_.below(static_cast<uint64_t>(8 * den))) -
                            (b.chamber == Chamber::DecreasingNonneg ? 0 : 4 * den);
            v.push_back(Rat(num, den));
        }
        switch (b.chamber) {
            case Chamber::Decreasing:
                std::sort(v.rbegin(), v.rend());
                break;
            case Chamber::DecreasingNonneg:
                for (Rat& x : v)
                    if (x < 0) x = -x;
                std::sort(v.rbegin(), v.rend());
                break;
            case Chamber::Unconstrained:
                break;
        }
        return v;
    }

    /// Shifts one block by a constant per equality; only equalities whose
    /// residual is a multiple of a shiftable block's dimension are
    /// repaired, which covers the trace equalities of all supported cones.
    void repair_equalities(RatPoint& pt) {
        for (const auto& rel : sys_.relations) {
            if (rel.kind != LinearRelation::Kind::EQ) continue;
            Rat value = sys_.evaluate(rel, pt);
            if (value == 0) continue;
            // Pick the lexicographically last block with constant nonzero
            // coefficients and a sign-free chamber, and absorb the residual.
            for (auto it = rel.coeffs.rbegin(); it != rel.coeffs.rend(); ++it) {
                const auto& [name, coeffs] = *it;
                const VariableBlock* b = sys_.find_block(name);
                if (!b || b->chamber == Chamber::DecreasingNonneg) continue;
                int c = coeffs.empty() ? 0 : coeffs[0];
                bool constant = c != 0;
                for (int x : coeffs) constant = constant && (x == c);
                if (!constant) continue;
                Rat shift = -value / (c * static_cast<int>(coeffs.size()));
                for (Rat& x : pt[name]) x += shift;
                break;
            }
        }
    }

    void build_grid() {
        grid_choices_.clear();
        grid_total_ = 1;
        for (const auto& b : sys_.blocks) {
            std::vector<std::vector<Rat>> choices;
            std::vector<Rat> cur(b.dim);
            // Weakly decreasing tuples over the grid values (multisets).
            auto rec = [&](auto&& self, int pos, size_t maxIdx) -> void {
                if (pos == b.dim) {
                    choices.push_back(cur);
                    return;
                }
                for (size_t i = 0; i <= maxIdx; ++i) {
                    cur[pos] = grid_values_[i];
                    self(self, pos + 1, i);
                }
            };
            rec(rec, 0, grid_values_.size() - 1);
            grid_choices_.push_back(std::move(choices));
            grid_total_ *= grid_choices_.back().size();
        }
    }

    const InequalitySystem& sys_;
    Rng rng_;
    std::vector<Rat> grid_values_;
    std::vector<std::vector<std::vector<Rat>>> grid_choices_;
    size_t grid_total_ = 1;
    bool has_signed_ = false;
};

struct EquivalenceReport {
    bool equal = true;
    uint64_t points_checked = 0;
    std::optional<RatPoint> separating_point;
    bool source_member = false;  // verdicts at the separating point
    bool target_member = false;

    Json to_json() const {
        Json j;
        j["equal"] = equal;
        j["points_checked"] = points_checked;
        if (separating_point) {
            Json pt = Json::object();
            for (const auto& [name, vals] : *separating_point) {
                Json arr = Json::array();
                for (const auto& r : vals) arr.push_back(to_string(r));
                pt[name] = arr;
            }
            j["separating_point"] = pt;
            j["source_member"] = source_member;
            j["target_member"] = target_member;
        }
        return j;
    }
};

/// Compares two membership predicates on exact rational points sampled
/// from the source system's blocks: a deterministic grid pass plus seeded
/// random points. Reports the first separating point found.
inline EquivalenceReport equivalence_check(const InequalitySystem& source,
                                           Embedding embedding,
                                           const InequalitySystem& target,
                                           uint64_t trials, uint64_t seed) {
    if (embedding == Embedding::Identity && source.blocks != target.blocks)
        throw BlockMismatchError("identity embedding needs identical blocks");
    EquivalenceReport report;
    RatSampler sampler(source, seed);

    auto check = [&](const RatPoint& pt) -> bool {
        RatPoint mapped = apply_embedding(embedding, source.cone, pt);
        bool a = source.member_exact_fast(pt, to_float_point(pt));
        bool b = target.member_exact_fast(mapped, to_float_point(mapped));
        ++report.points_checked;
        if (a != b) {
            report.equal = false;
            report.separating_point = pt;
            report.source_member = a;
            report.target_member = b;
            return false;
        }
        return true;
    };

    const size_t grid = sampler.grid_size();
    const size_t stride = grid / 100000 + 1;
    for (size_t k = 0; k < grid; k += stride)
        if (!check(sampler.grid_point(k))) return report;
    for (uint64_t t = 0; t < trials; ++t)
        if (!check(sampler.random_point())) return report;
    return report;
}

/// Verdict on two descriptions over the same blocks.
inline EquivalenceReport semantically_equal(const InequalitySystem& a,
                                            const InequalitySystem& b,
                                            uint64_t trials, uint64_t seed) {
    return equivalence_check(a, Embedding::Identity, b, trials, seed);
}

}  // namespace eigencones
