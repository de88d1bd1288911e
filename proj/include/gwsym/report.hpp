#ifndef GWSYM_REPORT_HPP
#define GWSYM_REPORT_HPP

#include <string>
#include <vector>

namespace gwsym {

// Shared pass/fail report for property suites (axiom checks, morphism checks).
struct PropertyReport {
    struct Item {
        std::string label;
        bool pass = true;
        int failures = 0;
        std::string witness;  // first failing case, if any
    };

    std::string title;
    unsigned seed = 0;
    int cases = 0;
    std::vector<Item> items;

    bool pass() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    Item& item(const std::string& label) {
        for (auto& it : items)
            if (it.label == label) return it;
        items.push_back({label});
        return items.back();
    }
    void record(const std::string& label, bool ok, const std::string& witness) {
        Item& it = item(label);
        if (!ok) {
            it.pass = false;
            ++it.failures;
            if (it.witness.empty()) it.witness = witness;
        }
    }
};

}  // namespace gwsym

#endif
