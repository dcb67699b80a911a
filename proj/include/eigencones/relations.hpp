#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigencones/errors.hpp"
#include "eigencones/indexset.hpp"

namespace eigencones {

using Json = nlohmann::json;

/// Named group of coordinates sharing one chamber constraint.
struct VariableBlock {
    std::string name;
    int dim = 0;
    Chamber chamber = Chamber::Unconstrained;

    bool operator==(const VariableBlock&) const = default;
};

/// One integer linear relation sum(coeffs . vars) >= 0 or == 0 over the
/// declared blocks, with a structured provenance tag.
struct LinearRelation {
    enum class Kind { GE, EQ };

    std::map<std::string, std::vector<int>> coeffs;
    Kind kind = Kind::GE;
    Json provenance = Json::object();

    bool is_zero() const {
        for (const auto& [name, v] : coeffs)
            for (int c : v)
                if (c != 0) return false;
        return true;
    }

    /// Canonical form: zero blocks dropped, content divided out, and for
    /// equalities the leading nonzero coefficient made positive.
    /// Idempotent; throws on the zero relation.
    LinearRelation canonicalized() const {
        if (is_zero()) throw ZeroRelationError("cannot canonicalize the zero relation");
        LinearRelation out;
        out.kind = kind;
        out.provenance = provenance;
        long long content = 0;
        int leading = 0;
        for (const auto& [name, v] : coeffs) {
            bool nonzero = false;
            for (int c : v) {
                if (c == 0) continue;
                nonzero = true;
                content = std::gcd(content, static_cast<long long>(std::abs(c)));
                if (leading == 0) leading = c;
            }
            if (nonzero) out.coeffs.emplace(name, v);
        }
        const int sign = (kind == Kind::EQ && leading < 0) ? -1 : 1;
        for (auto& [name, v] : out.coeffs)
            for (int& c : v) c = sign * c / static_cast<int>(content);
        return out;
    }

    /// Ordering key ignoring provenance; canonical relations compare equal
    /// iff they are the same constraint.
    std::pair<int, std::map<std::string, std::vector<int>>> key() const {
        return {kind == Kind::EQ ? 0 : 1, coeffs};
    }

    bool same_constraint(const LinearRelation& other) const {
        return key() == other.key();
    }

    Json to_json() const {
        Json j;
        j["coeffs"] = Json::object();
        for (const auto& [name, v] : coeffs) j["coeffs"][name] = v;
        j["rel"] = kind == Kind::EQ ? "EQ" : "GE";
        j["provenance"] = provenance;
        return j;
    }

    static LinearRelation from_json(const Json& j) {
        LinearRelation r;
        for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it)
            r.coeffs[it.key()] = it.value().get<std::vector<int>>();
        std::string rel = j.at("rel").get<std::string>();
        if (rel == "EQ") r.kind = Kind::EQ;
        else if (rel == "GE") r.kind = Kind::GE;
        else throw BadRangeError("unknown relation kind '" + rel + "'");
        if (j.contains("provenance")) r.provenance = j.at("provenance");
        return r;
    }
};

namespace detail {

/// Appends "c*name_k" terms with positive sign to a side of a rendered
/// relation.
inline void render_side(std::string& out, const std::string& name,
                        const std::vector<int>& v, int sign) {
    for (size_t i = 0; i < v.size(); ++i) {
        int c = sign * v[i];
        if (c <= 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c);
        out += name + std::to_string(i + 1);
    }
}

}  // namespace detail

/// Renders one relation as "lhs >= rhs" with the positive terms on the
/// left and the negated terms on the right, blocks in declaration order.
inline std::string render_relation(const LinearRelation& rel,
                                   const std::vector<VariableBlock>& blocks) {
    std::string lhs, rhs;
    for (const auto& b : blocks) {
        auto it = rel.coeffs.find(b.name);
        if (it == rel.coeffs.end()) continue;
        detail::render_side(lhs, b.name, it->second, +1);
        detail::render_side(rhs, b.name, it->second, -1);
    }
    if (lhs.empty()) lhs = "0";
    if (rhs.empty()) rhs = "0";
    return lhs + (rel.kind == LinearRelation::Kind::EQ ? " = " : " >= ") + rhs;
}

}  // namespace eigencones
