#pragma once

#include <string>
#include <vector>

namespace gq {

// One named axiom/condition sweep: pass flag plus failure witnesses.
struct ConditionStatus {
    bool pass = true;
    std::vector<std::string> witnesses;

    void fail(std::string w) {
        pass = false;
        witnesses.push_back(std::move(w));
    }
};

}  // namespace gq
