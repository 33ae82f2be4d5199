// Acceptance suite: runs the bundled claim manifest and prints one verdict
// line per criterion group. Criterion 12 (necessary-condition soundness) is
// embedded in the s2m and classification sweeps, so its line aggregates them.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "mono/claims.hpp"

using namespace mono;

namespace {

const std::map<int, std::string> kCriteria = {
    {1, "m(K(5,2)) = m(K(6,2)) = 3"},
    {2, "m(K(4,2)) = 6"},
    {3, "K(7,3) strongly 2-monophonic with fallback-free witness sweep"},
    {4, "distance law min{2(r-t),2t+1} on K(7,3) and K(9,4)"},
    {5, "even/odd path builders on K(7,3): exact lengths, induced"},
    {6, "K(9,4) witness builder on 10^4 random triples, zero fallbacks"},
    {7, "monophonic-set lifting K(5,2) -> K(6,2) -> K(7,2)"},
    {8, "Johnson graphs strongly 2-monophonic via witness builder"},
    {9, "Cartesian products: positive and negative strong-2-monophonic cases"},
    {10, "K_3 box K_2: no induced cycle through the distinguished triple, yet strongly 2-monophonic"},
    {11, "5-vertex chordal classification: strongly 2-monophonic iff complete minus an edge"},
    {12, "necessary-condition soundness across the product and classification sweeps"},
    {13, "convexity number equals clique number on the strongly 2-monophonic corpus"},
    {14, "J(6,4,2) and J(7,4,2) spot checks"},
    {15, "pruned search agrees with naive enumeration"},
};

int criterion_of(const std::string& claim_id) {
    // ids look like AC<number><optional letter>
    std::size_t pos = 2;
    int num = 0;
    while (pos < claim_id.size() && std::isdigit(static_cast<unsigned char>(claim_id[pos])))
        num = num * 10 + (claim_id[pos++] - '0');
    return num;
}

}  // namespace

TEST_CASE("acceptance: bundled claim manifest") {
    std::ifstream in(MONOGRAPH_MANIFEST_PATH);
    REQUIRE(in);
    Json doc = Json::parse(in);
    auto claims = parse_manifest(doc);

    RunOptions opt;
    opt.jobs = 2;
    opt.base_dir = std::filesystem::path(MONOGRAPH_MANIFEST_PATH).parent_path();
    ReportDocument report = run_manifest(claims, opt);

    std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
    for (const auto& c : report.claims) {
        auto& t = tally[criterion_of(c.claim_id)];
        ++t.second;
        if (c.verdict == Verdict::holds) ++t.first;
    }
    // criterion 12 aggregates the sweeps that embed the soundness check
    {
        auto& t = tally[12];
        for (const auto& c : report.claims) {
            const int k = criterion_of(c.claim_id);
            if (k == 9 || k == 11) {
                ++t.second;
                if (c.verdict == Verdict::holds) ++t.first;
            }
        }
    }

    for (const auto& [num, description] : kCriteria) {
        const auto& t = tally[num];
        const bool pass = t.second > 0 && t.first == t.second;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << num << ": " << description << " ("
                  << t.first << "/" << t.second << " claims)\n";
    }
    std::cout.flush();

    for (const auto& c : report.claims) {
        INFO(c.claim_id << " " << c.statement << " -> " << verdict_name(c.verdict) << " value="
                        << c.value.dump() << " witness=" << c.witness.dump());
        CHECK(c.verdict == Verdict::holds);
    }
    CHECK(report.fails == 0);
    CHECK(report.budget == 0);
}
