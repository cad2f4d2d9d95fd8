#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nalab/report.hpp"

namespace nalab {

/// Structured result tree rendered to humans or, loss-free, to JSON.
/// Ordering is construction order and therefore deterministic; two runs on
/// the same input produce identical bytes.
struct ReportNode {
    std::string name;
    std::string verdict; // "true" | "false" | "pass" | "fail" | "info" | "error"
    std::string detail;  // witness rendering or extra text
    std::vector<ReportNode> children;

    static ReportNode value(std::string name, bool v, std::string detail = "") {
        return {std::move(name), v ? "true" : "false", std::move(detail), {}};
    }
    static ReportNode assertion(std::string name, bool ok, std::string detail = "") {
        return {std::move(name), ok ? "pass" : "fail", std::move(detail), {}};
    }
    static ReportNode info(std::string name, std::string detail = "") {
        return {std::move(name), "info", std::move(detail), {}};
    }

    static ReportNode from_check(std::string name, const CheckReport& rep) {
        ReportNode node = info(std::move(name));
        for (const auto& item : rep.items)
            node.children.push_back(value(item.name, item.pass, item.witness));
        return node;
    }

    bool any_false() const {
        if (verdict == "false" || verdict == "fail") return true;
        for (const auto& c : children)
            if (c.any_false()) return true;
        return false;
    }
};

inline void render_text(const ReportNode& node, std::string& out, std::size_t depth = 0) {
    out.append(2 * depth, ' ');
    out += node.name;
    if (!node.verdict.empty() && node.verdict != "info") out += ": " + node.verdict;
    if (!node.detail.empty()) out += (node.verdict != "info" ? "  [" : ": [") + node.detail + "]";
    out += "\n";
    for (const auto& c : node.children) render_text(c, out, depth + 1);
}

inline nlohmann::ordered_json to_json(const ReportNode& node) {
    nlohmann::ordered_json j;
    j["name"] = node.name;
    j["verdict"] = node.verdict;
    if (!node.detail.empty()) j["detail"] = node.detail;
    if (!node.children.empty()) {
        nlohmann::ordered_json kids = nlohmann::ordered_json::array();
        for (const auto& c : node.children) kids.push_back(to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

} // namespace nalab
