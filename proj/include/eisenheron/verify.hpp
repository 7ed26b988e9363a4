#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "classification.hpp"
#include "lattice.hpp"

namespace eisenheron {

using Classifier = std::function<std::optional<ClassifiedTriangle>(const TriangleSides&)>;

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail; // summary on success, first counterexample on failure
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const
    {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
    }

    void print(std::ostream& os) const
    {
        for (const auto& s : suites) {
            os << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
        }
        os << (all_passed() ? "PASS" : "FAIL") << " (" << suites.size() << " suites)\n";
    }
};

struct VerifyOptions {
    unsigned threads = 1;
    Classifier classifier = [](const TriangleSides& t) { return classify(t); };
    // Embedding checks stop at these family indices; larger members need
    // Loeschian searches far beyond desk scale.
    std::size_t embed_cap_a = 5;
    std::size_t embed_cap_b = 5;
    std::size_t embed_cap_c = 2;
};

namespace detail {

inline std::string family_description(const FamilyId& f)
{
    std::string s = to_string(f.tag);
    if (f.witness) {
        s += " x=" + f.witness->x.str() + " y=" + f.witness->y.str() + " index=" + std::to_string(f.witness->index);
    }
    return s;
}

inline SuiteResult check_oracle_equivalence(std::uint64_t max_w, const VerifyOptions& opt)
{
    SuiteResult r{"oracle-equivalence", true, ""};
    const auto oracle = enumerate_perimeter_dominant(max_w, opt.threads);
    std::map<std::array<ExactInt, 3>, ClassifiedTriangle> expected;
    for (auto& t : family_members_within(max_w)) {
        expected.emplace(t.sides.descending(), std::move(t));
    }

    for (const auto& o : oracle) {
        const auto key = o.sides.descending();
        auto it = expected.find(key);
        if (it == expected.end()) {
            r.passed = false;
            r.detail = "brute force found " + o.sides.describe() + " (n=" + o.n.value().str() +
                       ") outside the equilateral exception and families";
            return r;
        }
        std::optional<ClassifiedTriangle> got;
        try {
            got = opt.classifier(o.sides);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = "classifier raised on " + o.sides.describe() + ": " + e.what();
            return r;
        }
        if (!got) {
            r.passed = false;
            r.detail = "classifier rejected " + o.sides.describe();
            return r;
        }
        if (!(got->n == o.n) || !(got->family == it->second.family) || !(got->sides == o.sides)) {
            r.passed = false;
            r.detail = "classifier mislabels " + o.sides.describe() + ": got " + family_description(got->family) +
                       " n=" + got->n.value().str() + ", expected " + family_description(it->second.family) +
                       " n=" + o.n.value().str();
            return r;
        }
        expected.erase(it);
    }
    if (!expected.empty()) {
        const auto& missing = expected.begin()->second;
        r.passed = false;
        r.detail = "family member " + missing.sides.describe() + " (" + family_description(missing.family) +
                   ") missing from brute force";
        return r;
    }
    r.detail = std::to_string(oracle.size()) + " triangles with w <= " + std::to_string(max_w) +
               " match the families exactly";
    return r;
}

inline SuiteResult check_case_table()
{
    SuiteResult r{"case-table-rederivation", true, ""};
    const auto table = candidate_cases();
    const auto derived = rederive_case_bounds();
    if (table.size() != derived.size()) {
        r.passed = false;
        r.detail = "rederived " + std::to_string(derived.size()) + " rows, table has " + std::to_string(table.size());
        return r;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i] == derived[i])) {
            r.passed = false;
            r.detail = "row " + std::to_string(i) + " (u,v)=(" + std::to_string(table[i].u) + "," +
                       std::to_string(table[i].v) + ") differs from its rederivation";
            return r;
        }
    }
    r.detail = std::to_string(table.size()) + " rows rederived";
    return r;
}

inline SuiteResult check_obstructions()
{
    SuiteResult r{"mod8-obstructions", true, ""};
    int rows = 0;
    for (const auto& row : candidate_cases()) {
        if (row.disposition != Disposition::eliminated_mod8) continue;
        ++rows;
        const auto rep = obstruction_mod8(row);
        if (!rep.obstructed) {
            r.passed = false;
            r.detail = "row (" + std::to_string(row.u) + "," + std::to_string(row.v) + ") hits a square residue mod 8";
            return r;
        }
    }
    r.detail = std::to_string(rows) + " rows never square mod 8";
    return r;
}

inline SuiteResult check_finite_rows()
{
    SuiteResult r{"finite-rows", true, ""};
    int rows = 0;
    for (const auto& row : candidate_cases()) {
        if (row.constraint == WConstraint::unbounded || row.disposition == Disposition::eliminated_mod8) continue;
        ++rows;
        const auto squares = finite_case_check(row).square_ws();
        const bool want_equilateral = row.disposition == Disposition::equilateral;
        const bool ok = want_equilateral ? (squares == std::vector<int>{row.u}) : squares.empty();
        if (!ok) {
            r.passed = false;
            r.detail = "row (" + std::to_string(row.u) + "," + std::to_string(row.v) +
                       ") has unexpected square values of n^2";
            return r;
        }
    }
    r.detail = std::to_string(rows) + " bounded rows checked";
    return r;
}

inline SuiteResult check_y_parity(std::size_t terms)
{
    SuiteResult r{"y-parity", true, ""};
    for (Family f : {Family::a, Family::c}) {
        for (const auto& s : solutions(pell_form_for(f), terms)) {
            if (!boost::multiprecision::bit_test(s.y, 0)) {
                r.passed = false;
                r.detail = std::string("family ") + family_letter(f) + " index " + std::to_string(s.index) +
                           " has even y=" + s.y.str();
                return r;
            }
        }
    }
    for (std::size_t k = 1; k <= terms; ++k) {
        const auto t = family_member(Family::b, k);
        if (t.n.value() % 4 != 0) {
            r.passed = false;
            r.detail = "family b index " + std::to_string(k) + " area is not an integer multiple of sqrt3";
            return r;
        }
    }
    r.detail = "first " + std::to_string(terms) + " solutions: y odd in (a),(c); (b) area in sqrt3*N";
    return r;
}

inline std::vector<TriangleSides> embedding_sample(const VerifyOptions& opt)
{
    std::vector<TriangleSides> sample{TriangleSides(3, 3, 3), TriangleSides(1, 1, 1), TriangleSides(2, 2, 2),
                                      TriangleSides(7, 7, 2), TriangleSides(7, 5, 3)};
    for (std::size_t k = 1; k <= opt.embed_cap_a; ++k) sample.push_back(family_member(Family::a, k).sides);
    for (std::size_t k = 1; k <= opt.embed_cap_b; ++k) sample.push_back(family_member(Family::b, k).sides);
    for (std::size_t k = 1; k <= opt.embed_cap_c; ++k) sample.push_back(family_member(Family::c, k).sides);
    return sample;
}

inline SuiteResult check_embeddings(const VerifyOptions& opt)
{
    SuiteResult r{"embeddings", true, ""};
    const auto sample = embedding_sample(opt);
    for (const auto& t : sample) {
        try {
            const auto tri = embed(t);
            if (!realizes(tri, t)) {
                r.passed = false;
                r.detail = "embedding " + tri.str() + " does not realize " + t.describe();
                return r;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = t.describe() + ": " + e.what();
            return r;
        }
    }
    r.detail = std::to_string(sample.size()) + " triangles embedded";
    return r;
}

} // namespace detail

inline VerifyReport run_verification(std::uint64_t max_w, const VerifyOptions& opt = {})
{
    VerifyReport report;
    report.suites.push_back(detail::check_oracle_equivalence(max_w, opt));
    report.suites.push_back(detail::check_case_table());
    report.suites.push_back(detail::check_obstructions());
    report.suites.push_back(detail::check_finite_rows());
    report.suites.push_back(detail::check_y_parity(20));
    report.suites.push_back(detail::check_embeddings(opt));
    return report;
}

} // namespace eisenheron
