#include <doctest.h>

#include <algorithm>

#include "hermitian/report.hpp"

using namespace hermitian;

namespace {

int count(const std::vector<ReportLine> &lines, ReportStatus s)
{
    return static_cast<int>(
        std::count_if(lines.begin(), lines.end(), [s](const ReportLine &l) { return l.status == s; }));
}

bool failed(const std::vector<ReportLine> &lines, const std::string &item)
{
    return std::any_of(lines.begin(), lines.end(), [&](const ReportLine &l) {
        return l.status == ReportStatus::Fail && l.item == item;
    });
}

} // namespace

TEST_CASE("the report passes with the real implementation")
{
    auto lines = worked_examples_report();
    CHECK(report_passes(lines));
    CHECK(count(lines, ReportStatus::Fail) == 0);
    CHECK(count(lines, ReportStatus::Deviation) == 2);
    CHECK(lines.size() >= 50);
    for (auto &l : lines)
        if (l.status == ReportStatus::Deviation)
            CHECK_FALSE(l.note.empty());
}

TEST_CASE("the report is deterministic")
{
    auto a = worked_examples_report(), b = worked_examples_report();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].item == b[i].item);
        CHECK(a[i].actual == b[i].actual);
    }
}

TEST_CASE("a wrong diagonal rule for type III is caught")
{
    /* put d_n on every diagonal box instead of alternating d_n, d_{n-1} */
    ReportBackend broken;
    broken.fill = [](const HermitianPair &g, const Partition &ideal, const Weight &lambda) {
        FilledDiagram f = fill_diagram(g, ideal, lambda);
        if (g.type == PairType::III) {
            HalfInt last = simple_pairings(g, lambda + rho(g)).back();
            for (auto &row : f.entries)
                if (!row.empty())
                    row.front() = last;
        }
        return f;
    };
    auto lines = worked_examples_report(broken);
    CHECK_FALSE(report_passes(lines));
    CHECK(failed(lines, "stacked rows, D_4, ideal (3,2)"));
    /* type II diagrams are untouched */
    CHECK_FALSE(failed(lines, "stacked rows, C_4, ideal (4,1)"));
}

TEST_CASE("reading the type I sign exponent on the inner symbol is caught")
{
    ReportBackend broken;
    broken.ell = [](const Partition &pi, const IdentityKind &kind) {
        if (kind.family != IdentityFamily::GenI)
            return ell_exponent(pi, kind);
        Partition inner = shift_frobenius(pi, -kind.k, 0);
        return inner.size() - kind.k * inner.rank();
    };
    auto lines = worked_examples_report(broken);
    CHECK_FALSE(report_passes(lines));
    CHECK(failed(lines, "generalized dual Cauchy identity k=1, p=q=2, cap 8"));
}

TEST_CASE("status names")
{
    CHECK(to_string(ReportStatus::Pass) == "PASS");
    CHECK(to_string(ReportStatus::Fail) == "FAIL");
    CHECK(to_string(ReportStatus::Deviation) == "DEVIATION");
}
