#include "polysurg/rule_file.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

namespace polysurg {

namespace {

struct Line {
    int number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string text;
    for (int n = 1; std::getline(in, text); ++n) {
        if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
        std::istringstream ss(text);
        Line line{n, {}};
        for (std::string w; ss >> w;) line.words.push_back(w);
        if (!line.words.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int to_int(const Line& line, const std::string& w) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(w, &used);
        if (used == w.size()) return v;
    } catch (const std::exception&) {
    }
    throw PatternError(line.number, "expected an integer, got '" + w + "'");
}

// Face lines are collected by name first; neighbour names resolve once the
// whole pattern is read.
class PatternReader {
public:
    explicit PatternReader(std::string id) { pattern_.id = std::move(id); }

    void add(const Line& line) {
        const auto& w = line.words;
        if (w.size() < 4 || w[0] != "face" || w[3] != ":") {
            throw PatternError(line.number, "expected 'face <name> <size> : <neighbours>'");
        }
        PatternFace f;
        f.name = w[1];
        if (f.name == "B") throw PatternError(line.number, "'B' is reserved for outside edges");
        f.size = w[2] == "*" ? 0 : to_int(line, w[2]);
        names_.push_back(std::vector<std::string>(w.begin() + 4, w.end()));
        lines_.push_back(line.number);
        pattern_.faces.push_back(std::move(f));
    }

    PatchPattern finish(int block_line) {
        for (std::size_t i = 0; i < pattern_.faces.size(); ++i) {
            for (const auto& n : names_[i]) {
                if (n == "B") {
                    pattern_.faces[i].neighbors.push_back(kOutside);
                    continue;
                }
                const int j = pattern_.index_of(n);
                if (j < 0) throw PatternError(lines_[i], "unknown face " + n);
                pattern_.faces[i].neighbors.push_back(j);
            }
        }
        try {
            pattern_.validate();
            if (std::all_of(pattern_.faces.begin(), pattern_.faces.end(), [](const PatternFace& f) { return f.size; })) {
                boundary_contacts(pattern_);
            }
        } catch (const PatternError& e) {
            throw PatternError(block_line, pattern_.id + ": " + e.what());
        }
        return std::move(pattern_);
    }

private:
    PatchPattern pattern_;
    std::vector<std::vector<std::string>> names_;
    std::vector<int> lines_;
};

ScriptStep parse_step(const Line& line) {
    const auto& w = line.words;
    ScriptStep s;
    if (w[0] == "TRUNC" && w.size() == 5) {
        s.op = ScriptStep::Op::Truncate;
        s.face = w[1];
        s.anchor = w[2];
        s.s = to_int(line, w[3]);
        s.created = w[4];
    } else if (w[0] == "STRAIGHTEN" && w.size() == 3) {
        s.op = ScriptStep::Op::Straighten;
        s.face = w[1];
        s.anchor = w[2];
    } else {
        throw PatternError(line.number, "expected 'TRUNC F A s NEW' or 'STRAIGHTEN F A'");
    }
    return s;
}

}  // namespace

RuleFile parse_rule_file(std::istream& in) {
    const auto lines = tokenize(in);
    RuleFile file;
    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& head = lines[i++];
        const auto& w = head.words;
        if (w[0] == "fragment") {
            if (w.size() != 2) throw PatternError(head.number, "expected 'fragment <id>'");
            PatternReader reader(w[1]);
            for (; i < lines.size() && lines[i].words[0] != "end"; ++i) reader.add(lines[i]);
            if (i == lines.size()) throw PatternError(head.number, "missing 'end'");
            ++i;
            file.fragments.push_back(reader.finish(head.number));
        } else if (w[0] == "rule") {
            if (w.size() < 3 || w[2].size() != 1 || w[2][0] < 'a' || w[2][0] > 'g') {
                throw PatternError(head.number, "expected 'rule <label> <a..g> [params]'");
            }
            GrowthRule rule;
            rule.label = w[1];
            rule.op = w[2][0];
            for (std::size_t p = 3; p < w.size(); ++p) rule.params.push_back(to_int(head, w[p]));
            PatternReader lhs(rule.label + ".lhs"), rhs(rule.label + ".rhs");
            std::string section;
            for (; i < lines.size() && lines[i].words[0] != "end"; ++i) {
                const Line& l = lines[i];
                const std::string& k = l.words[0];
                if (k == "lhs" || k == "rhs" || k == "script" || k == "inverse") {
                    section = k;
                } else if (section == "lhs") {
                    lhs.add(l);
                } else if (section == "rhs") {
                    rhs.add(l);
                } else if (section == "script") {
                    rule.script.push_back(parse_step(l));
                } else if (section == "inverse") {
                    rule.inverse_script.push_back(parse_step(l));
                } else {
                    throw PatternError(l.number, "statement outside a section");
                }
            }
            if (i == lines.size()) throw PatternError(head.number, "missing 'end'");
            ++i;
            rule.lhs = lhs.finish(head.number);
            rule.rhs = rhs.finish(head.number);
            try {
                rule.validate();
            } catch (const PatternError& e) {
                throw PatternError(head.number, e.what());
            }
            file.rules.push_back(std::move(rule));
        } else {
            throw PatternError(head.number, "expected 'rule' or 'fragment'");
        }
    }
    return file;
}

RuleFile load_rule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PatternError(0, "cannot open " + path);
    return parse_rule_file(in);
}

PatchPattern parse_pattern(std::istream& in) {
    const std::string text(std::istreambuf_iterator<char>(in), {});
    std::istringstream first(text);
    const auto lines = tokenize(first);
    if (lines.empty()) throw PatternError(0, "empty pattern");
    if (lines[0].words[0] == "fragment" || lines[0].words[0] == "rule") {
        std::istringstream again(text);
        RuleFile f = parse_rule_file(again);
        return f.fragments.empty() ? f.rules[0].rhs : f.fragments[0];
    }
    PatternReader reader("pattern");
    for (const auto& l : lines) reader.add(l);
    return reader.finish(lines[0].number);
}

std::string format_step(const ScriptStep& s) {
    if (s.op == ScriptStep::Op::Truncate) {
        return "TRUNC " + s.face + " " + s.anchor + " " + std::to_string(s.s) + " " + s.created;
    }
    return "STRAIGHTEN " + s.face + " " + s.anchor;
}

void write_rule(std::ostream& out, const GrowthRule& rule) {
    out << "rule " << rule.label << ' ' << rule.op;
    for (int p : rule.params) out << ' ' << p;
    out << "\n  lhs\n";
    write_pattern_faces(out, rule.lhs, "    ");
    out << "  rhs\n";
    write_pattern_faces(out, rule.rhs, "    ");
    out << "  script\n";
    for (const auto& s : rule.script) out << "    " << format_step(s) << '\n';
    out << "  inverse\n";
    for (const auto& s : rule.inverse_script) out << "    " << format_step(s) << '\n';
    out << "end\n";
}

void write_rule_file(std::ostream& out, const RuleFile& file) {
    for (const auto& f : file.fragments) {
        out << "fragment " << f.id << '\n';
        write_pattern_faces(out, f, "  ");
        out << "end\n\n";
    }
    for (const auto& r : file.rules) {
        write_rule(out, r);
        out << '\n';
    }
}

std::string default_rule_path() { return POLYSURG_DATA_DIR "/rules.pat"; }

}  // namespace polysurg
