#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eigencones/rational.hpp"
#include "eigencones/relations.hpp"

namespace eigencones {

using RatPoint = std::map<std::string, std::vector<Rat>>;
using FloatPoint = std::map<std::string, std::vector<double>>;

inline FloatPoint to_float_point(const RatPoint& p) {
    FloatPoint out;
    for (const auto& [name, v] : p) out[name] = to_double(v);
    return out;
}

/// Identifier of one supported cone with its parameters and variant flag.
struct ConeId {
    enum class Kind { Horn, LRmn, E1, E2, Sing, SOodd, A, B, S, T };
    enum class Variant { Nonzero, StrictOne, Weak, Fflp, OsWeak };

    Kind kind = Kind::Horn;
    std::vector<int> params;
    Variant variant = Variant::Nonzero;

    static std::string kind_name(Kind k) {
        switch (k) {
            case Kind::Horn: return "horn";
            case Kind::LRmn: return "lrmn";
            case Kind::E1: return "e1";
            case Kind::E2: return "e2";
            case Kind::Sing: return "sing";
            case Kind::SOodd: return "soodd";
            case Kind::A: return "a";
            case Kind::B: return "b";
            case Kind::S: return "s";
            case Kind::T: return "t";
        }
        return "horn";
    }

    static Kind kind_from_name(const std::string& s) {
        for (Kind k : {Kind::Horn, Kind::LRmn, Kind::E1, Kind::E2, Kind::Sing,
                       Kind::SOodd, Kind::A, Kind::B, Kind::S, Kind::T})
            if (kind_name(k) == s) return k;
        throw UnsupportedConeError("unknown cone '" + s + "'");
    }

    static std::string variant_name(Variant v) {
        switch (v) {
            case Variant::Nonzero: return "nonzero";
            case Variant::StrictOne: return "strict-one";
            case Variant::Weak: return "weak";
            case Variant::Fflp: return "fflp";
            case Variant::OsWeak: return "os-weak";
        }
        return "nonzero";
    }

    static Variant variant_from_name(const std::string& s) {
        for (Variant v : {Variant::Nonzero, Variant::StrictOne, Variant::Weak,
                          Variant::Fflp, Variant::OsWeak})
            if (variant_name(v) == s) return v;
        throw BadRangeError("unknown variant '" + s + "'");
    }

    std::string str() const {
        std::string out = kind_name(kind);
        for (int p : params) out += "-" + std::to_string(p);
        if (variant != Variant::Nonzero) out += "-" + variant_name(variant);
        return out;
    }
};

/// A cone description: named variable blocks (carrying the chamber
/// constraints) plus a deduplicated list of canonical integer relations.
class InequalitySystem {
public:
    ConeId cone;
    std::vector<VariableBlock> blocks;
    std::vector<LinearRelation> relations;

    const VariableBlock* find_block(const std::string& name) const {
        for (const auto& b : blocks)
            if (b.name == name) return &b;
        return nullptr;
    }

    /// Canonicalizes and inserts unless an equal constraint is present.
    /// Returns true when the relation was new.
    bool add_relation(const LinearRelation& rel) {
        LinearRelation canon = rel.canonicalized();
        for (const auto& [name, v] : canon.coeffs) {
            const VariableBlock* b = find_block(name);
            if (!b) throw BlockMismatchError("relation references unknown block '" + name + "'");
            if (v.size() != static_cast<size_t>(b->dim))
                throw DimensionMismatchError("coefficient vector length mismatch on '" + name + "'");
        }
        auto key = canon.key();
        if (!keys_.insert(key).second) return false;
        relations.push_back(std::move(canon));
        return true;
    }

    bool contains_constraint(const LinearRelation& rel) const {
        return keys_.count(rel.canonicalized().key()) > 0;
    }

    /// Sorts the relation list by kind and canonical coefficients.
    void sort_relations() {
        std::stable_sort(relations.begin(), relations.end(),
                         [](const LinearRelation& a, const LinearRelation& b) {
                             return a.key() < b.key();
                         });
    }

    void check_point_shape(const RatPoint& point) const {
        for (const auto& b : blocks) {
            auto it = point.find(b.name);
            if (it == point.end())
                throw BlockMismatchError("point missing block '" + b.name + "'");
            if (it->second.size() != static_cast<size_t>(b.dim))
                throw DimensionMismatchError("point dimension mismatch on '" + b.name + "'");
        }
    }

    struct Violation {
        const LinearRelation* relation = nullptr;  // null for chamber breaks
        std::string chamber_block;
        int chamber_index = -1;
        double margin = 0.0;
    };

    struct MemberResult {
        bool member = true;
        std::vector<Violation> violations;
    };

    /// Exact membership: chamber constraints first, then every relation,
    /// all in rational arithmetic.
    MemberResult member_exact(const RatPoint& point, bool collect_all = false) const {
        check_point_shape(point);
        MemberResult result;
        for (const auto& b : blocks) {
            const auto& v = point.at(b.name);
            if (b.chamber == Chamber::Unconstrained) continue;
            for (size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] < v[i + 1]) {
                    result.member = false;
                    result.violations.push_back({nullptr, b.name, static_cast<int>(i), to_double(v[i] - v[i + 1])});
                    if (!collect_all) return result;
                }
            if (b.chamber == Chamber::DecreasingNonneg && !v.empty() && v.back() < 0) {
                result.member = false;
                result.violations.push_back({nullptr, b.name, static_cast<int>(v.size()) - 1, to_double(v.back())});
                if (!collect_all) return result;
            }
        }
        for (const auto& rel : relations) {
            Rat value = evaluate(rel, point);
            bool ok = rel.kind == LinearRelation::Kind::EQ ? value == 0 : value >= 0;
            if (!ok) {
                result.member = false;
                result.violations.push_back({&rel, "", -1, to_double(value)});
                if (!collect_all) return result;
            }
        }
        return result;
    }

    /// Float membership: a relation counts as violated when its value is
    /// below -tol (for EQ: |value| > tol).
    MemberResult member_float(const FloatPoint& point, double tol,
                              bool collect_all = false) const {
        MemberResult result;
        for (const auto& b : blocks) {
            auto it = point.find(b.name);
            if (it == point.end())
                throw BlockMismatchError("point missing block '" + b.name + "'");
            const auto& v = it->second;
            if (v.size() != static_cast<size_t>(b.dim))
                throw DimensionMismatchError("point dimension mismatch on '" + b.name + "'");
            if (b.chamber == Chamber::Unconstrained) continue;
            for (size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] - v[i + 1] < -tol) {
                    result.member = false;
                    result.violations.push_back({nullptr, b.name, static_cast<int>(i), v[i] - v[i + 1]});
                    if (!collect_all) return result;
                }
            if (b.chamber == Chamber::DecreasingNonneg && !v.empty() && v.back() < -tol) {
                result.member = false;
                result.violations.push_back({nullptr, b.name, static_cast<int>(v.size()) - 1, v.back()});
                if (!collect_all) return result;
            }
        }
        for (const auto& rel : relations) {
            double value = evaluate_float(rel, point);
            bool ok = rel.kind == LinearRelation::Kind::EQ ? std::abs(value) <= tol
                                                           : value >= -tol;
            if (!ok) {
                result.member = false;
                result.violations.push_back({&rel, "", -1, value});
                if (!collect_all) return result;
            }
        }
        return result;
    }

    /// Exact membership with a certified floating-point fast path: the
    /// double verdict is kept only when the computed value clears a rigorous
    /// rounding-error bound, otherwise the rational path decides.
    bool member_exact_fast(const RatPoint& point, const FloatPoint& fpoint) const {
        for (const auto& b : blocks) {
            const auto& v = point.at(b.name);
            if (b.chamber == Chamber::Unconstrained) continue;
            for (size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] < v[i + 1]) return false;
            if (b.chamber == Chamber::DecreasingNonneg && !v.empty() && v.back() < 0)
                return false;
        }
        for (const auto& rel : relations) {
            double value = 0.0, scale = 0.0;
            for (const auto& [name, coeffs] : rel.coeffs) {
                const auto& v = fpoint.at(name);
                for (size_t i = 0; i < coeffs.size(); ++i) {
                    if (coeffs[i] == 0) continue;
                    double t = coeffs[i] * v[i];
                    value += t;
                    scale += std::abs(t);
                }
            }
            const double eps = 1e-12 * (scale + 1.0);
            bool ok;
            if (value > eps) {
                ok = rel.kind != LinearRelation::Kind::EQ ? true : false;
            } else if (value < -eps) {
                ok = false;
            } else {
                Rat exact = evaluate(rel, point);
                ok = rel.kind == LinearRelation::Kind::EQ ? exact == 0 : exact >= 0;
            }
            if (!ok) return false;
        }
        return true;
    }

    Rat evaluate(const LinearRelation& rel, const RatPoint& point) const {
        Rat value = 0;
        for (const auto& [name, coeffs] : rel.coeffs) {
            const auto& v = point.at(name);
            for (size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) value += coeffs[i] * v[i];
        }
        return value;
    }

    double evaluate_float(const LinearRelation& rel, const FloatPoint& point) const {
        double value = 0;
        for (const auto& [name, coeffs] : rel.coeffs) {
            const auto& v = point.at(name);
            for (size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) value += coeffs[i] * v[i];
        }
        return value;
    }

    /// Chamber orderings rendered as explicit GE relations (provenance
    /// kind "chamber"); not part of the stored relation list.
    std::vector<LinearRelation> chamber_relations() const {
        std::vector<LinearRelation> out;
        for (const auto& b : blocks) {
            if (b.chamber == Chamber::Unconstrained) continue;
            for (int i = 0; i + 1 < b.dim; ++i) {
                LinearRelation r;
                r.coeffs[b.name] = std::vector<int>(b.dim, 0);
                r.coeffs[b.name][i] = 1;
                r.coeffs[b.name][i + 1] = -1;
                r.provenance = {{"kind", "chamber"}, {"block", b.name}, {"index", i + 1}};
                out.push_back(std::move(r));
            }
            if (b.chamber == Chamber::DecreasingNonneg && b.dim > 0) {
                LinearRelation r;
                r.coeffs[b.name] = std::vector<int>(b.dim, 0);
                r.coeffs[b.name][b.dim - 1] = 1;
                r.provenance = {{"kind", "chamber"}, {"block", b.name}, {"index", b.dim}};
                out.push_back(std::move(r));
            }
        }
        return out;
    }

    size_t count_kind(LinearRelation::Kind k) const {
        size_t n = 0;
        for (const auto& r : relations)
            if (r.kind == k) ++n;
        return n;
    }

    Json to_json(bool include_chamber = false) const {
        Json j;
        j["cone"] = ConeId::kind_name(cone.kind);
        Json params = Json::object();
        static const char* names2[] = {"m", "n"};
        static const char* namespq[] = {"p", "q"};
        if (cone.params.size() == 1) params["n"] = cone.params[0];
        else if (cone.params.size() == 2) {
            const char** nm = (cone.kind == ConeId::Kind::LRmn) ? names2 : namespq;
            params[nm[0]] = cone.params[0];
            params[nm[1]] = cone.params[1];
        }
        params["variant"] = ConeId::variant_name(cone.variant);
        j["params"] = params;
        j["blocks"] = Json::array();
        for (const auto& b : blocks)
            j["blocks"].push_back({{"name", b.name}, {"dim", b.dim}, {"chamber", chamber_name(b.chamber)}});
        j["relations"] = Json::array();
        for (const auto& r : relations) j["relations"].push_back(r.to_json());
        if (include_chamber)
            for (const auto& r : chamber_relations())
                j["relations"].push_back(r.canonicalized().to_json());
        return j;
    }

    static InequalitySystem from_json(const Json& j) {
        InequalitySystem sys;
        sys.cone.kind = ConeId::kind_from_name(j.at("cone").get<std::string>());
        if (j.contains("params")) {
            const Json& p = j.at("params");
            if (p.contains("n") && !p.contains("m") && !p.contains("p"))
                sys.cone.params = {p.at("n").get<int>()};
            else if (p.contains("m"))
                sys.cone.params = {p.at("m").get<int>(), p.at("n").get<int>()};
            else if (p.contains("p"))
                sys.cone.params = {p.at("p").get<int>(), p.at("q").get<int>()};
            if (p.contains("variant"))
                sys.cone.variant = ConeId::variant_from_name(p.at("variant").get<std::string>());
        }
        for (const auto& b : j.at("blocks"))
            sys.blocks.push_back({b.at("name").get<std::string>(), b.at("dim").get<int>(),
                                  chamber_from_name(b.at("chamber").get<std::string>())});
        for (const auto& r : j.at("relations")) sys.add_relation(LinearRelation::from_json(r));
        return sys;
    }

    std::string to_text(bool include_chamber = false) const {
        std::string out;
        if (include_chamber)
            for (const auto& r : chamber_relations())
                out += render_relation(r.canonicalized(), blocks) + "\n";
        for (const auto& r : relations) out += render_relation(r, blocks) + "\n";
        return out;
    }

    bool operator==(const InequalitySystem& other) const {
        if (blocks != other.blocks) return false;
        if (relations.size() != other.relations.size()) return false;
        for (size_t i = 0; i < relations.size(); ++i)
            if (!relations[i].same_constraint(other.relations[i])) return false;
        return true;
    }

private:
    std::set<std::pair<int, std::map<std::string, std::vector<int>>>> keys_;
};

/// True when the candidate constraint equals some system relation up to a
/// rational multiple of the system's EQ relations. Used to reconcile
/// published inequality lists that were rewritten modulo a trace identity.
inline bool appears_modulo_eq(const LinearRelation& candidate, const InequalitySystem& sys) {
    LinearRelation c = candidate.canonicalized();
    if (sys.contains_constraint(c)) return true;
    if (c.kind == LinearRelation::Kind::EQ) return false;
    std::vector<const LinearRelation*> eqs;
    for (const auto& r : sys.relations)
        if (r.kind == LinearRelation::Kind::EQ) eqs.push_back(&r);
    if (eqs.empty()) return false;

    auto coefficient = [&](const LinearRelation& r, const std::string& name, size_t i) -> Rat {
        auto it = r.coeffs.find(name);
        if (it == r.coeffs.end()) return Rat(0);
        return Rat(it->second[i]);
    };
    for (const auto& g : sys.relations) {
        if (g.kind != LinearRelation::Kind::GE) continue;
        for (const LinearRelation* eq : eqs) {
            // Solve candidate = s*g + t*eq with s > 0 by matching two
            // independent coordinates, then verify everywhere.
            std::optional<std::pair<Rat, Rat>> st;
            bool consistent = true;
            std::vector<std::pair<std::string, size_t>> coords;
            for (const auto& b : sys.blocks)
                for (size_t i = 0; i < static_cast<size_t>(b.dim); ++i)
                    coords.emplace_back(b.name, i);
            // Find two coordinates where (g, eq) has full rank.
            for (size_t a = 0; a < coords.size() && !st; ++a) {
                for (size_t b2 = a + 1; b2 < coords.size() && !st; ++b2) {
                    Rat g1 = coefficient(g, coords[a].first, coords[a].second);
                    Rat e1 = coefficient(*eq, coords[a].first, coords[a].second);
                    Rat g2 = coefficient(g, coords[b2].first, coords[b2].second);
                    Rat e2 = coefficient(*eq, coords[b2].first, coords[b2].second);
                    Rat det = g1 * e2 - g2 * e1;
                    if (det == 0) continue;
                    Rat c1 = coefficient(c, coords[a].first, coords[a].second);
                    Rat c2 = coefficient(c, coords[b2].first, coords[b2].second);
                    st = std::make_pair((c1 * e2 - c2 * e1) / det, (g1 * c2 - g2 * c1) / det);
                }
            }
            if (!st || st->first <= 0) continue;
            for (const auto& [name, i] : coords)
                if (coefficient(c, name, i) !=
                    st->first * coefficient(g, name, i) + st->second * coefficient(*eq, name, i)) {
                    consistent = false;
                    break;
                }
            if (consistent) return true;
        }
    }
    return false;
}

}  // namespace eigencones
