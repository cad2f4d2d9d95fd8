#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nalab {

/// One named predicate outcome. A failing entry always carries a witness
/// rendering; passing entries may carry informational detail.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness; // basis-monomial text, empty when there is nothing to show
};

/// Ordered map from predicate name to (verdict, witness). Order is the
/// evaluation order and is deterministic.
struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    const CheckItem* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }

    bool value_of(const std::string& name) const {
        const CheckItem* it = find(name);
        return it != nullptr && it->pass;
    }
};

} // namespace nalab
