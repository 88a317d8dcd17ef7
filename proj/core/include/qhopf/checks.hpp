#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhopf::checks {

struct Options {
    int maxdeg = -1;    // -1: the suite's pinned default
    int quiver_l = -2;  // -2: pinned set; 0: infinite linear quiver; l > 0: cyclic
};

struct Report {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::string detail;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
Report run_suite(const std::string& name, const Options& opt = {});
std::vector<Report> run_all(const Options& opt = {});

// Degree actually used by a suite: pinned value, clamped by the
// QHOPF_MAXDEG environment variable and by Options::maxdeg when set.
int effective_deg(int pinned, const Options& opt);

}  // namespace qhopf::checks
