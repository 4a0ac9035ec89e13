#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polysurg/growth.hpp"
#include "polysurg/patterns.hpp"

namespace polysurg {

/// Line-oriented rule and fragment file.
///
///   # comment
///   fragment <id>
///     face <name> <size|*> : <neighbour names, B for an outside edge>
///   end
///   rule <label> <op letter> [params...]
///     lhs
///       face ...
///     rhs
///       face ...
///     script
///       TRUNC <face> <anchor> <s> <created>
///     inverse
///       STRAIGHTEN <face> <anchor>
///   end
///
/// Every block is validated; PatternError carries the line of the offending
/// block or statement.
struct RuleFile {
    std::vector<GrowthRule> rules;
    std::vector<PatchPattern> fragments;
};

RuleFile parse_rule_file(std::istream& in);
RuleFile load_rule_file(const std::string& path);
/// The rule file shipped with the library.
std::string default_rule_path();
void write_rule_file(std::ostream& out, const RuleFile& file);

/// A single fragment block or a bare list of face lines.
PatchPattern parse_pattern(std::istream& in);

void write_rule(std::ostream& out, const GrowthRule& rule);
std::string format_step(const ScriptStep& step);

}  // namespace polysurg
