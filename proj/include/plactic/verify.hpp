#pragma once

#include <functional>
#include <string>
#include <vector>

namespace plactic {

// A named invariant sweep. run() returns true on success; on violation it
// fills failure with a minimal counterexample and returns false.
// max_size caps the cell count (or word length) swept; every suite also
// applies its own rank cap.
struct Suite {
    std::string name;
    std::string description;
    std::function<bool(int max_size, std::string& failure)> run;
};

const std::vector<Suite>& verification_suites();

} // namespace plactic
