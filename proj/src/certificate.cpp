#include <cstdio>

#include <json.hpp>

#include "rigidwitt/search.hpp"
#include "rigidwitt/syntax.hpp"

namespace rigidwitt {

std::uint64_t fnv1a64(const std::string& text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool PfisterCertificate::verify() const {
    const DiagonalForm& goal = target.repr();
    if (!(goal.field() == field)) return false;
    GroupRingElt sum(field);
    DiagonalForm total(field);
    for (const auto& term : terms) {
        if (term.fold() != n || !(term.scalar.field() == field)) return false;
        if (unscaled && !(term.scalar.is_one() || term.scalar == SquareClass::minus_one(field))) return false;
        const DiagonalForm pi = pfister(term);
        if (is_hyperbolic(pi)) return false;
        sum += to_group_ring(pi);
        total = orth_sum(total, pi);
    }
    const bool ring_ok = sum == to_group_ring(goal);
    const bool springer_ok = anisotropic_part(orth_sum(total, negate(goal))).empty();
    return ring_ok && springer_ok;
}

std::uint64_t PfisterCertificate::hash() const { return fnv1a64(to_string(target.repr())); }

std::string certificate_json(const PfisterCertificate& cert, int indent) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : cert.terms) {
        nlohmann::json slots = nlohmann::json::array();
        for (const auto& s : t.slots) slots.push_back(to_string(s));
        terms.push_back({{"scalar", to_string(t.scalar)}, {"slots", slots}, {"form", to_string(t)}});
    }
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cert.hash()));
    const nlohmann::json doc = {
        {"schema", 1},
        {"field", to_string(cert.field)},
        {"n", cert.n},
        {"unscaled", cert.unscaled},
        {"target", to_string(cert.target.repr())},
        {"length", cert.length()},
        {"terms", terms},
        {"hash", std::string("fnv1a64:") + hash},
    };
    return doc.dump(indent);
}

}  // namespace rigidwitt
