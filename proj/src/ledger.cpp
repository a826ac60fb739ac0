#include "bbwlab/ledger.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bbwlab {

namespace {

// X-tilde bundle symbols, pushforward (exceptional divisor) symbols, the
// subset pulled back from the closed orbit Z (eligible for the B-rule), and
// the subset pulled back from the even base Xbar (eligible for block rules).
const std::set<std::string> kBases = {
    "O",  "U",  "U*", "Ub", "Ub*", "Ut", "Ut*",   "Q",      "L2Q",   "L2Ut",
    "L2Ut*", "L3Ut", "S2Ub", "UbUt", "UbL2Ut", "UbL3Ut", "W", "W*"};
const std::set<std::string> kPushforwardBases = {"O", "W", "W*", "Ub*"};
const std::set<std::string> kZSideBases = {"O", "W", "W*"};
const std::set<std::string> kXbarBases = {"O",  "Ub",   "Ub*",  "Ut",   "Ut*",   "L2Ut",
                                          "L2Ut*", "L3Ut", "S2Ub", "UbUt", "UbL2Ut", "UbL3Ut"};
const std::set<std::string> kVsFactors = {"", "V", "Vb", "L2Vb"};

}  // namespace

std::string Twist::str() const {
    if (h == 0 && e == 0) return "";
    std::string out;
    auto piece = [&](int c, const char* sym) {
        if (c == 0) return;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const int a = std::abs(c);
        if (a != 1) out += std::to_string(a);
        out += sym;
    };
    piece(h, "H");
    piece(e, "E");
    return out;
}

Twist Twist::parse(const std::string& text) {
    Twist t;
    std::size_t i = 0;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+') ++i;
        else if (text[i] == '-') {
            sign = -1;
            ++i;
        }
        int coeff = 1;
        std::size_t d = i;
        while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
        if (d > i) {
            coeff = std::stoi(text.substr(i, d - i));
            i = d;
        }
        if (i >= text.size() || (text[i] != 'H' && text[i] != 'E'))
            throw std::invalid_argument("Twist::parse: bad twist '" + text + "'");
        (text[i] == 'H' ? t.h : t.e) += sign * coeff;
        ++i;
    }
    return t;
}

LedgerObject LedgerObject::stripped() const {
    LedgerObject o = *this;
    o.vs_factor.clear();
    return o;
}

LedgerObject LedgerObject::twisted(const Twist& t) const {
    LedgerObject o = *this;
    o.twist = o.twist + t;
    return o;
}

std::string LedgerObject::str() const {
    std::string out;
    if (!vs_factor.empty()) out += vs_factor + ":";
    if (pushforward) out += "i*";
    out += base;
    const std::string t = twist.str();
    if (!t.empty()) out += "{" + t + "}";
    return out;
}

LedgerObject LedgerObject::parse(const std::string& text) {
    LedgerObject o;
    std::string rest = text;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
        o.vs_factor = rest.substr(0, colon);
        rest = rest.substr(colon + 1);
        if (!kVsFactors.count(o.vs_factor))
            throw std::invalid_argument("LedgerObject: unknown tensor factor in '" + text + "'");
    }
    if (rest.rfind("i*", 0) == 0) {
        o.pushforward = true;
        rest = rest.substr(2);
    }
    if (auto brace = rest.find('{'); brace != std::string::npos) {
        if (rest.back() != '}')
            throw std::invalid_argument("LedgerObject: unbalanced twist in '" + text + "'");
        o.twist = Twist::parse(rest.substr(brace + 1, rest.size() - brace - 2));
        rest = rest.substr(0, brace);
    }
    o.base = rest;
    if (!kBases.count(o.base))
        throw std::invalid_argument("LedgerObject: unknown base symbol '" + o.base + "'");
    if (o.pushforward && !kPushforwardBases.count(o.base))
        throw std::invalid_argument("LedgerObject: '" + o.base + "' cannot be pushed forward");
    return o;
}

std::string DeductionResult::summary() const {
    std::ostringstream out;
    if (pass) {
        out << "PASS: " << derivations_checked << " derivations, " << members
            << " members, all targets derived";
    } else {
        out << "FAIL at " << fail_step << ": " << fail_reason;
    }
    return out.str();
}

Ledger::Ledger(const ProofScript& script) : script_(script) {
    for (const auto& rel : script.relations) register_relation(rel);
    for (const auto& sp : script.splits) {
        if (sp.parts.size() < 2)
            throw std::invalid_argument("Ledger: split " + sp.id + " needs at least two parts");
        splits_[sp.id] = sp;
    }
    for (const auto& bl : script.blocks) blocks_[bl.id] = bl;
    for (const auto& base : script.seed_bases)
        for (int t = 0; t < script.seed_twists; ++t) {
            LedgerObject o;
            o.base = base;
            o.twist = {t, 0};
            if (!kBases.count(base))
                throw std::invalid_argument("Ledger: unknown seed base " + base);
            seeds_.insert(o);
        }
    // Seed set and B are disjoint: seeds are pullbacks, B-objects are
    // pushforwards with an E twist.
    for (const auto& s : seeds_)
        if (is_b_object(s)) throw std::logic_error("Ledger: seed overlaps the blow-up block");
}

void Ledger::register_relation(const ExactRelation& rel) {
    if (rel.terms.size() < 3)
        throw std::invalid_argument("register_relation: '" + rel.id + "' has fewer than 3 terms");
    auto it = relations_.find(rel.id);
    if (it != relations_.end()) {
        if (it->second.terms != rel.terms)
            throw std::invalid_argument("register_relation: id '" + rel.id +
                                        "' already registered with different terms");
        return;  // duplicate registration is idempotent
    }
    relations_[rel.id] = rel;
}

bool Ledger::is_member(const LedgerObject& obj) const {
    const LedgerObject key = obj.stripped();
    if (members_.count(key)) return true;
    if (seeds_.count(key)) return true;
    if (is_b_object(key)) return true;
    return false;
}

bool Ledger::is_b_object(const LedgerObject& obj) const {
    // B = i* p~* D^b(Z) (E): pushforward of a Z-side symbol with exactly one
    // +E in the twist (H restricts to a Z-pullback on the divisor, so any H
    // coefficient is allowed).
    return obj.pushforward && kZSideBases.count(obj.base) && obj.twist.e == 1;
}

void Ledger::grant(const LedgerObject& obj) { members_.insert(obj.stripped()); }

LedgerObject Ledger::apply_blowup_twist(const LedgerObject& obj, int direction) {
    if (!obj.pushforward)
        throw std::invalid_argument("apply_blowup_twist: " + obj.str() + " is not a pushforward");
    if (!is_member(obj))
        throw std::invalid_argument("apply_blowup_twist: " + obj.str() + " is not a member");
    LedgerObject out = obj.twisted({0, direction >= 0 ? 2 : -2});
    grant(out);
    return out;
}

std::string Ledger::check_derivation(const Derivation& d) {
    const LedgerObject target = d.target.stripped();
    if (d.rule == "seed") {
        if (!seeds_.count(target)) return target.str() + " is not a seed";
        grant(target);
        return {};
    }
    if (d.rule == "B") {
        if (!is_b_object(target))
            return target.str() + " is not of the form i*(F (x) O(E)) with F from the Z side";
        grant(target);
        return {};
    }
    if (d.rule == "blowup") {
        if (!d.from) return "blowup rule needs a source object";
        const LedgerObject from = d.from->stripped();
        if (!from.pushforward) return from.str() + " is not a pushforward";
        if (!is_member(from)) return "premise not established: " + from.str();
        if (target != from.twisted({0, 2}) && target != from.twisted({0, -2}))
            return target.str() + " is not a (+-2E)-twist of " + from.str();
        grant(target);
        return {};
    }
    if (d.rule == "relation") {
        auto it = relations_.find(d.ref);
        if (it == relations_.end()) return "unknown relation '" + d.ref + "'";
        std::vector<LedgerObject> terms;
        for (const auto& t : it->second.terms) terms.push_back(t.twisted(d.twist).stripped());
        auto hit = std::find(terms.begin(), terms.end(), target);
        if (hit == terms.end())
            return target.str() + " is not a term of relation '" + d.ref + "' twisted by {" +
                   d.twist.str() + "}";
        terms.erase(hit);  // one occurrence is the target; the rest are premises
        for (const auto& t : terms) {
            if (t == target && !members_.count(target) && !seeds_.count(target) && !is_b_object(target))
                return "cyclic justification: " + target.str() + " occurs twice in '" + d.ref + "'";
            if (!is_member(t)) return "premise not established: " + t.str();
        }
        grant(target);
        return {};
    }
    if (d.rule == "split") {
        auto it = splits_.find(d.ref);
        if (it == splits_.end()) return "unknown split '" + d.ref + "'";
        const LedgerObject whole = it->second.whole.twisted(d.twist).stripped();
        std::vector<LedgerObject> parts;
        for (const auto& p : it->second.parts) parts.push_back(p.twisted(d.twist).stripped());
        if (target == whole) {
            for (const auto& p : parts)
                if (!is_member(p)) return "premise not established: " + p.str();
            grant(target);
            return {};
        }
        auto hit = std::find(parts.begin(), parts.end(), target);
        if (hit == parts.end())
            return target.str() + " is neither the whole nor a part of split '" + d.ref + "'";
        if (!is_member(whole)) return "premise not established: " + whole.str();
        parts.erase(hit);
        for (const auto& p : parts)
            if (!is_member(p)) return "premise not established: " + p.str();
        grant(target);
        return {};
    }
    if (d.rule == "block") {
        auto it = blocks_.find(d.ref);
        if (it == blocks_.end()) return "unknown block '" + d.ref + "'";
        if (!kXbarBases.count(target.base))
            return target.str() + " is not pulled back from the even base";
        if (target.pushforward) return target.str() + " is a pushforward, not a block object";
        // E-coefficient in the (Hbar, E) basis: a*H + b*E = a*Hbar + (a+b)*E.
        if (target.twist.h + target.twist.e != it->second.hbar_e_coeff)
            return target.str() + " does not lie in block '" + d.ref + "'";
        for (const auto& g : it->second.generators)
            if (!is_member(g)) return "block generator not established: " + g.str();
        grant(target);
        return {};
    }
    return "unknown rule '" + d.rule + "'";
}

DeductionResult Ledger::replay() {
    DeductionResult res;
    for (const auto& step : script_.steps) {
        for (const auto& d : step.derivations) {
            ++res.derivations_checked;
            std::string err = check_derivation(d);
            if (!err.empty()) {
                res.pass = false;
                res.fail_step = step.name;
                res.fail_reason = d.target.str() + " [" + d.rule +
                                  (d.ref.empty() ? "" : " " + d.ref) + "]: " + err;
                res.members = static_cast<int>(members_.size());
                return res;
            }
            res.log.push_back(step.name + ": " + d.target.str() + " by " + d.rule +
                              (d.ref.empty() ? "" : " " + d.ref) +
                              (d.twist == Twist{} ? "" : " {" + d.twist.str() + "}"));
        }
    }
    for (const auto& t : script_.targets)
        if (!is_member(t)) res.missing_targets.push_back(t.str());
    res.members = static_cast<int>(members_.size());
    if (!res.missing_targets.empty()) {
        res.pass = false;
        res.fail_step = "targets";
        res.fail_reason = std::to_string(res.missing_targets.size()) +
                          " target(s) not derived, first: " + res.missing_targets.front();
        return res;
    }
    res.pass = true;
    return res;
}

// ---------------------------------------------------------------------------
// JSON codec

namespace {

using nlohmann::json;

LedgerObject obj_of(const json& j) { return LedgerObject::parse(j.get<std::string>()); }

std::vector<LedgerObject> objs_of(const json& j) {
    std::vector<LedgerObject> out;
    for (const auto& item : j) out.push_back(obj_of(item));
    return out;
}

}  // namespace

ProofScript parse_script(const std::string& json_text) {
    json j = json::parse(json_text);
    ProofScript s;
    s.name = j.value("name", "");
    if (j.contains("seeds")) {
        s.seed_twists = j["seeds"].value("twists", 0);
        for (const auto& b : j["seeds"].value("bases", json::array()))
            s.seed_bases.push_back(b.get<std::string>());
    }
    for (const auto& r : j.value("relations", json::array())) {
        ExactRelation rel;
        rel.id = r.at("id").get<std::string>();
        rel.terms = objs_of(r.at("terms"));
        rel.provenance = r.value("provenance", "");
        rel.assumed_exact = r.value("assumed_exact", false);
        s.relations.push_back(std::move(rel));
    }
    for (const auto& sp : j.value("splits", json::array())) {
        SplitRule rule;
        rule.id = sp.at("id").get<std::string>();
        rule.whole = obj_of(sp.at("whole"));
        rule.parts = objs_of(sp.at("parts"));
        s.splits.push_back(std::move(rule));
    }
    for (const auto& bl : j.value("blocks", json::array())) {
        BlockRule rule;
        rule.id = bl.at("id").get<std::string>();
        rule.hbar_e_coeff = bl.at("e_coeff").get<int>();
        rule.generators = objs_of(bl.at("generators"));
        s.blocks.push_back(std::move(rule));
    }
    for (const auto& st : j.value("steps", json::array())) {
        ProofStep step;
        step.name = st.at("name").get<std::string>();
        for (const auto& dv : st.value("derive", json::array())) {
            Derivation d;
            d.target = obj_of(dv.at("target"));
            d.rule = dv.at("rule").get<std::string>();
            d.ref = dv.value("ref", "");
            if (dv.contains("twist")) d.twist = Twist::parse(dv["twist"].get<std::string>());
            if (dv.contains("from")) d.from = obj_of(dv["from"]);
            step.derivations.push_back(std::move(d));
        }
        s.steps.push_back(std::move(step));
    }
    for (const auto& t : j.value("targets", json::array())) s.targets.push_back(obj_of(t));
    return s;
}

ProofScript load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_script: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_script(buf.str());
}

}  // namespace bbwlab
