#include <stdexcept>

#include "foxopt/engineering/constrained.hpp"

namespace foxopt::eng {

const std::vector<ConstrainedProblem>& problem_catalog() {
    static const std::vector<ConstrainedProblem> catalog = [] {
        std::vector<ConstrainedProblem> v;
        v.push_back(make_bcp());
        v.push_back(make_cbp());
        v.push_back(make_csd());
        v.push_back(make_csp());
        v.push_back(make_gtp());
        v.push_back(make_pvd());
        v.push_back(make_pld());
        v.push_back(make_srp());
        v.push_back(make_tcp());
        v.push_back(make_wbp());
        return v;
    }();
    return catalog;
}

const ConstrainedProblem& find(std::string_view name) {
    for (const ConstrainedProblem& p : problem_catalog()) {
        if (p.base.name == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown design problem: " + std::string(name));
}

nlohmann::json catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const ConstrainedProblem& p : problem_catalog()) {
        nlohmann::json entry;
        entry["name"] = p.base.name;
        entry["dim"] = p.base.dim;
        entry["lower"] = p.base.lower;
        entry["upper"] = p.base.upper;
        entry["constraints"] = p.constraints.size();
        bool any_integer = false;
        for (bool b : p.integer_mask) {
            any_integer = any_integer || b;
        }
        entry["has_integer_variables"] = any_integer;
        out.push_back(entry);
    }
    return out;
}

} // namespace foxopt::eng
