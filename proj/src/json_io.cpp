#include "bbwlab/json_io.hpp"

namespace bbwlab {

using nlohmann::json;

json to_json(const Weight& w) { return json(w.entries()); }

json to_json(const WeightMultiset& ms) {
    json items = json::array();
    for (const auto& [w, m] : ms.items()) items.push_back({{"weight", to_json(w)}, {"mult", m}});
    return {{"rank", ms.rank()}, {"items", items}};
}

json to_json(const CohomologyOutcome& o) {
    json j;
    switch (o.kind) {
        case CohomologyOutcome::Kind::Acyclic: j["kind"] = "acyclic"; break;
        case CohomologyOutcome::Kind::Determined: j["kind"] = "determined"; break;
        case CohomologyOutcome::Kind::CertifiedAcyclic: j["kind"] = "certified-acyclic"; break;
        case CohomologyOutcome::Kind::Unknown: j["kind"] = "unknown"; break;
    }
    j["alpha"] = o.alpha;
    if (o.inversions) j["inversions"] = *o.inversions;
    if (!o.criterion.empty()) j["criterion"] = o.criterion;
    if (!o.graded.empty()) {
        json g = json::array();
        for (const auto& [deg, pieces] : o.graded) {
            json ps = json::array();
            for (const auto& p : pieces) ps.push_back({{"gamma", to_json(p.gamma)}, {"dim", p.dim}});
            g.push_back({{"degree", deg}, {"pieces", ps}});
        }
        j["graded"] = g;
    }
    return j;
}

json to_json(const Certificate& c) {
    json j;
    j["claim"] = c.claim;
    j["verdict"] = verdict_name(c.verdict);
    j["euler"] = c.euler;
    if (!c.graded.empty()) {
        json g = json::array();
        for (const auto& [deg, pieces] : c.graded) {
            std::int64_t dim = 0;
            json ps = json::array();
            for (const auto& p : pieces) {
                dim += p.dim;
                ps.push_back({{"gamma", to_json(p.gamma)}, {"dim", p.dim}});
            }
            g.push_back({{"degree", deg}, {"dim", dim}, {"pieces", ps}});
        }
        j["graded"] = g;
    }
    if (!c.leaves.empty()) {
        json ls = json::array();
        for (const auto& leaf : c.leaves) {
            json l;
            l["s"] = leaf.koszul_index;
            l["u"] = to_json(leaf.u_weight);
            if (leaf.q_weight.length() > 0) l["q"] = to_json(leaf.q_weight);
            l["mult"] = leaf.mult;
            l["outcome"] = to_json(leaf.outcome);
            ls.push_back(std::move(l));
        }
        j["leaves"] = ls;
    }
    if (!c.children.empty()) {
        json kids = json::array();
        for (const auto& ch : c.children) kids.push_back(to_json(ch));
        j["children"] = kids;
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

json to_json(const GridCheck& g) {
    json j;
    j["pass"] = g.pass;
    j["cells"] = g.cells;
    j["identity_cells"] = g.identity_cells;
    j["acyclic_cells"] = g.acyclic_cells;
    j["inconclusive_cells"] = g.inconclusive_cells;
    if (!g.failures.empty()) j["failures"] = g.failures;
    j["certificate"] = to_json(g.cert);
    return j;
}

json to_json(const GramMatrix& g) {
    json j;
    j["labels"] = g.labels;
    j["entries"] = g.entries;
    j["unitriangular"] = g.unitriangular();
    j["determinant"] = g.determinant();
    return j;
}

json to_json(const RankReport& r) {
    json j;
    j["fixed_points"] = {{"lgr36", r.lgr36}, {"igr26", r.igr26}, {"igr37", r.igr37}};
    j["blocks"] = r.blocks;
    j["codim"] = r.codim;
    j["predicted"] = r.predicted;
    j["collection_length"] = r.collection_length;
    j["identity_pass"] = r.identity_pass;
    j["length_pass"] = r.length_pass;
    j["perturbed_predicted"] = r.perturbed_predicted;
    j["negative_control_pass"] = r.negative_control_pass;
    j["pass"] = r.pass;
    return j;
}

json to_json(const DeductionResult& r) {
    json j;
    j["pass"] = r.pass;
    j["derivations"] = r.derivations_checked;
    j["derived_members"] = r.members;
    if (!r.pass) {
        j["fail_step"] = r.fail_step;
        j["fail_reason"] = r.fail_reason;
    }
    if (!r.missing_targets.empty()) j["missing_targets"] = r.missing_targets;
    j["log"] = r.log;
    return j;
}

json with_schema(json payload) {
    payload["schema"] = kSchema;
    return payload;
}

}  // namespace bbwlab
