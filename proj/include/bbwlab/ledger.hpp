#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bbwlab {

// Twist a*H + b*E on the blow-up.
struct Twist {
    int h = 0;
    int e = 0;
    Twist operator+(const Twist& o) const { return {h + o.h, e + o.e}; }
    friend auto operator<=>(const Twist&, const Twist&) = default;
    std::string str() const;
    static Twist parse(const std::string& text);
};

// A formal symbol on the blow-up: a base bundle, an (H, E) twist, optionally
// marked as a pushforward from the exceptional divisor, optionally carrying a
// fixed vector space tensor factor (display only: V (x) F and F generate the
// same subcategory, so membership is tested on the stripped form).
//
// String syntax:  [V:|Vb:|L2Vb:]["i*"]BASE["{"twist"}"], e.g.
//   "O{3H}", "i*O{2H+E}", "Ub{H-2E}", "Vb:O{4H}", "i*W*{2E}".
struct LedgerObject {
    std::string base;
    Twist twist;
    bool pushforward = false;
    std::string vs_factor;  // "", "V", "Vb", "L2Vb"

    LedgerObject stripped() const;
    LedgerObject twisted(const Twist& t) const;  // projection formula for pushforwards
    std::string str() const;
    static LedgerObject parse(const std::string& text);

    friend auto operator<=>(const LedgerObject&, const LedgerObject&) = default;
};

// Registered exact sequence (or exact complex): each term lies in the
// triangulated span of the others, so membership of all but one term grants
// the last.  Twisting by a*H + b*E yields a derived relation on demand.
struct ExactRelation {
    std::string id;
    std::vector<LedgerObject> terms;
    std::string provenance;
    bool assumed_exact = false;  // tensor-of-exact-complex steps carry this tag
};

// Registered direct sum decomposition (non-canonical splittings): the whole
// follows from all parts, a part from the whole plus the remaining parts.
struct SplitRule {
    std::string id;
    LedgerObject whole;
    std::vector<LedgerObject> parts;
};

// A projective-bundle block D^b(base)(c*E) in Hbar = H - E coordinates: once
// the listed generators are members, every pullback object with E-coefficient
// c in the (Hbar, E) basis is granted.
struct BlockRule {
    std::string id;  // "block2", "block3"
    int hbar_e_coeff = 0;
    std::vector<LedgerObject> generators;
};

struct Derivation {
    LedgerObject target;
    std::string rule;  // "seed" | "B" | "relation" | "blowup" | "split" | "block"
    std::string ref;   // relation / split / block id
    Twist twist;       // instantiation twist for relation / split rules
    std::optional<LedgerObject> from;  // blowup source
};

struct ProofStep {
    std::string name;
    std::vector<Derivation> derivations;
};

struct ProofScript {
    std::string name;
    int seed_twists = 0;                  // seeds: bases (x) O(tH), t = 0 .. seed_twists-1
    std::vector<std::string> seed_bases;  // typically U, O, U*, L2Q
    std::vector<ExactRelation> relations;
    std::vector<SplitRule> splits;
    std::vector<BlockRule> blocks;
    std::vector<ProofStep> steps;
    std::vector<LedgerObject> targets;
};

struct DeductionResult {
    bool pass = false;
    std::string fail_step;
    std::string fail_reason;
    int derivations_checked = 0;
    int members = 0;
    std::vector<std::string> missing_targets;
    std::vector<std::string> log;  // one line per derivation
    std::string summary() const;
};

// Membership engine for one script: seeds, syntactic B-rule, registered
// relations with twist closure, the blow-up mutation twist (+-2E on
// pushforwards), splittings, and block rules.
class Ledger {
public:
    explicit Ledger(const ProofScript& script);

    // The 20 pullback seeds (and nothing else); asserted disjoint from B.
    const std::set<LedgerObject>& seeds() const { return seeds_; }
    bool is_member(const LedgerObject& obj) const;
    bool is_b_object(const LedgerObject& obj) const;

    // Registers one more relation after construction; idempotent on exact
    // duplicates, rejects id clashes and relations shorter than 3 terms.
    void register_relation(const ExactRelation& rel);

    // Lemma-style mutation twist: a pushforward member grants its (+2E) and
    // (-2E) twists (det N* on the exceptional divisor contributes the
    // recorded twist).  Throws on non-pushforward input.
    LedgerObject apply_blowup_twist(const LedgerObject& obj, int direction = +1);

    DeductionResult replay();

private:
    std::string check_derivation(const Derivation& d);  // empty = ok
    void grant(const LedgerObject& obj);

    ProofScript script_;
    std::map<std::string, ExactRelation> relations_;
    std::map<std::string, SplitRule> splits_;
    std::map<std::string, BlockRule> blocks_;
    std::set<LedgerObject> seeds_;
    std::set<LedgerObject> members_;
};

// JSON codecs for scripts (schema "bbwlab/1").
ProofScript load_script(const std::string& path);
ProofScript parse_script(const std::string& json_text);

}  // namespace bbwlab
