#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hermitian/diagrams.hpp"
#include "hermitian/symmetric.hpp"

namespace hermitian {

enum class ReportStatus { Pass, Fail, Deviation };

std::string to_string(ReportStatus s);

struct ReportLine {
    std::string item;
    ReportStatus status = ReportStatus::Pass;
    std::string expected;
    std::string actual;
    std::string note; /* only for deviations */
};

using FillFunction =
    std::function<FilledDiagram(const HermitianPair &, const Partition &, const Weight &)>;

/* The computations the report routes through replaceable hooks, so that a
 * deliberately broken implementation can be shown to be caught. */
struct ReportBackend {
    FillFunction fill = fill_diagram;
    EllFunction ell = ell_exponent;
};

/* Every worked example with a recorded value, recomputed. */
std::vector<ReportLine> worked_examples_report(const ReportBackend &backend = {});

bool report_passes(const std::vector<ReportLine> &lines);

} // namespace hermitian
