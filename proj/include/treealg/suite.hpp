/// @file suite.hpp
/// Invariant checks shared by the command line tool and the tests.
#pragma once

#include "treealg/hopf.hpp"

#include <functional>
#include <string>
#include <vector>

namespace treealg {

struct SuiteCheck {
    std::string name;
    std::function<CheckReport(int maxDegree)> run;
};

/// Every named check, in a fixed order.
const std::vector<SuiteCheck>& suiteChecks();
/// Checks named `group`, starting with `group.`, or named `<module>.group`; "all" selects everything.
std::vector<CheckReport> runSuite(const std::string& group, int maxDegree);
std::vector<std::string> suiteGroups();

// Individual checks, also used by the acceptance binary.
CheckReport checkShuffleAdjunction(Operad operad, int maxDegree);
CheckReport checkAntipodeIdentities(int maxDegree);
CheckReport checkTaylorReconstruction(int samples, int maxDegree, int maxVariables, unsigned seed);
CheckReport checkCutsFormula(int maxDegree);
CheckReport checkBFClosedForm(int maxDegree);

}  // namespace treealg
