#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"
#include "polysurg/patterns.hpp"
#include "polysurg/surgery.hpp"

namespace polysurg {

class GrowthError : public std::runtime_error {
public:
    enum class Kind { NotAMatch, ResultNotFullerene, BadScript, NegativeParameter };
    GrowthError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// One step of a rule script, on faces named by the rule's patterns.
/// Truncate: cut `face` along the run that starts on its edge with `anchor`
/// and continues s+1 edges counterclockwise in pattern orientation. The
/// (s+3)-gon is named `created`; the rest keeps the name `face`.
/// Straighten: delete the edge between `face` and `anchor`; the merged facet
/// keeps the name `face`.
struct ScriptStep {
    enum class Op { Truncate, Straighten };
    Op op = Op::Truncate;
    std::string face;
    std::string anchor;
    int s = 0;
    std::string created;

    bool operator==(const ScriptStep&) const = default;
};

struct GrowthRule {
    /// Operation letter a..g.
    char op = 'a';
    /// Unique label, e.g. "f.3" for a member of a parameter family.
    std::string label;
    /// Chain parameters of a family member (k, or k1 and k2).
    std::vector<int> params;
    PatchPattern lhs;
    PatchPattern rhs;
    std::vector<ScriptStep> script;
    std::vector<ScriptStep> inverse_script;

    /// Checks names, boundary contacts and hexagon counts; throws
    /// PatternError.
    void validate() const;
};

/// Face names bound to faces of a map.
using NameMap = std::map<std::string, FaceId>;

NameMap bind_names(const PatchPattern& pattern, const MatchResult& match);

struct ScriptTrace {
    /// The input followed by the map after every step.
    std::vector<CombMap> maps;
    /// Spec and signature of every truncation step, in order.
    std::vector<TruncationSpec> specs;
    std::vector<TruncationSignature> signatures;
    NameMap names;
};

/// Runs the script and records every intermediate, ending with the result.
/// Throws GrowthError(BadScript) when a name or a step is not applicable.
ScriptTrace run_script(const CombMap& map, const std::vector<ScriptStep>& script, NameMap names, bool mirrored);

enum class Seed { Dodecahedron, Barrel, FamilyOne, FamilyTwo };

CombMap seed(Seed which, int k = 0);

CombMap apply_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& lhs_match);

struct Decomposition {
    std::vector<CombMap> intermediates;
    std::vector<TruncationSpec> specs;
    std::vector<TruncationSignature> signatures;
};

/// The truncation sequence of the rule at the match: intermediates[i+1] is
/// truncate(intermediates[i], specs[i]); the last map is the rule's output.
Decomposition decompose_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& lhs_match);

CombMap invert_rule(const CombMap& map, const GrowthRule& rule, const MatchResult& rhs_match);

/// All intermediates of the inverse script, ending with the inverted map.
std::vector<CombMap> invert_rule_trace(const CombMap& map, const GrowthRule& rule, const MatchResult& rhs_match);

struct GrowthSite {
    const GrowthRule* rule = nullptr;
    MatchResult match;
};

/// Every occurrence of a rule's right-hand fragment. Throws GrowthError when
/// the map is not a fullerene.
std::vector<GrowthSite> detect_growth_sites(const CombMap& map, const std::vector<GrowthRule>& rules);

/// Every occurrence of a rule's left-hand fragment, one per correspondence.
std::vector<GrowthSite> detect_lhs_sites(const CombMap& map, const std::vector<GrowthRule>& rules);

struct EnumerationOptions {
    int max_p6 = 0;
    int jobs = 1;
};

struct EnumerationResult {
    /// Canonical form of every fullerene reached, ordered by (f0, code).
    std::vector<CombMap> maps;
    std::vector<CanonicalCode> codes;
};

/// Closure of the dodecahedron under the rules, pruned at p6 <= max_p6.
EnumerationResult enumerate(const std::vector<GrowthRule>& rules, const EnumerationOptions& opt);

}  // namespace polysurg
