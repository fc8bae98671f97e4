#pragma once

// Outcome record for one predicate evaluation: verdict, optional
// classification, a re-checkable witness, and enumeration statistics.

#include <string>
#include <utility>

#include <json.hpp>

#include "graded/common.hpp"

namespace graded {

using Json = nlohmann::ordered_json;

enum class Verdict { holds, fails, aborted_cap, not_applicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::aborted_cap: return "aborted_cap";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

struct PropertyReport {
    std::string name;
    Verdict verdict = Verdict::holds;
    std::string classification;  // optional refinement of the verdict
    Json witness = Json::object();
    bool vacuous = false;  // the quantifier that decided the verdict was empty
    std::string note;
    Stats stats;

    bool holds() const { return verdict == Verdict::holds; }
    bool fails() const { return verdict == Verdict::fails; }
    bool decided() const { return verdict == Verdict::holds || verdict == Verdict::fails; }

    Json to_json() const {
        Json j;
        j["name"] = name;
        j["verdict"] = to_string(verdict);
        if (!classification.empty()) j["classification"] = classification;
        if (!witness.empty()) j["witness"] = witness;
        if (vacuous) j["vacuous"] = true;
        if (!note.empty()) j["note"] = note;
        j["stats"] = Json{{"elements_enumerated", stats.elements_enumerated},
                          {"products_computed", stats.products_computed},
                          {"subgroups_built", stats.subgroups_built}};
        return j;
    }
};

inline PropertyReport make_report(std::string name) {
    PropertyReport r;
    r.name = std::move(name);
    return r;
}

inline PropertyReport cap_report(std::string name, const cap_reached& e, const Stats& st) {
    PropertyReport r;
    r.name = std::move(name);
    r.verdict = Verdict::aborted_cap;
    r.note = e.what();
    r.stats = st;
    return r;
}

}  // namespace graded
