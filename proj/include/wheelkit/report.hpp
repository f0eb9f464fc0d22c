#pragma once

#include <string>

namespace wheelkit {

// Outcome of a verification suite: pass/fail, number of cases checked, and a
// replayable description of the first counterexample if any.
struct Report {
    std::string check;
    std::string instance;
    std::string bounds;
    bool ok = true;
    long cases = 0;
    std::string counterexample;
    std::string note;

    void fail(std::string what) {
        if (ok) {
            ok = false;
            counterexample = std::move(what);
        }
    }
    void merge(const Report& o) {
        cases += o.cases;
        if (!o.ok && ok) {
            ok = false;
            counterexample = o.check + ": " + o.counterexample;
        }
        if (!o.note.empty()) note += (note.empty() ? "" : "; ") + o.note;
    }
};

} // namespace wheelkit
