#include "wordbench/certificate.hpp"

#include <functional>
#include <set>

#include <json.hpp>

#include "wordbench/embedded_data.hpp"

namespace wb {

using nlohmann::json;

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::SearchBound: return "search_bound";
        case StepKind::ConcludeContains: return "conclude_contains";
        case StepKind::Pigeonhole: return "pigeonhole";
        case StepKind::OmitSplit: return "omit_split";
        case StepKind::DeduceOmitted: return "deduce_omitted";
        case StepKind::ExtensionForced: return "extension_forced";
        case StepKind::ReturnWords: return "return_words";
        case StepKind::DiscardBlock: return "discard_block";
        case StepKind::Roll: return "roll";
        case StepKind::Invoke: return "invoke";
        case StepKind::Terminal: return "terminal";
    }
    return "?";
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail("SchemaError", where + ": " + what);
}

Word get_word(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_string()) schema_error(where, "missing word '" + key + "'");
    Word w = j[key].get<std::string>();
    if (!is_ternary(w)) schema_error(where, "'" + w + "' is not a ternary word");
    return w;
}

std::vector<Word> get_words(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_array())
        schema_error(where, "missing word list '" + key + "'");
    std::vector<Word> out;
    for (const auto& item : j[key]) {
        if (!item.is_string()) schema_error(where, "'" + key + "' must hold strings");
        Word w = item.get<std::string>();
        if (!is_ternary(w)) schema_error(where, "'" + w + "' is not a ternary word");
        out.push_back(std::move(w));
    }
    return out;
}

size_t get_count(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        schema_error(where, "missing count '" + key + "'");
    return j[key].get<size_t>();
}

Step parse_step(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind")) schema_error(where, "step must have a kind");
    std::string kind = j["kind"].get<std::string>();
    Step s;
    if (j.contains("note")) s.note = j["note"].get<std::string>();
    if (kind == "search_bound") {
        s.kind = StepKind::SearchBound;
        s.candidates = get_words(j, "candidates", where);
        if (s.candidates.empty()) schema_error(where, "search_bound needs candidates");
        s.bound = get_count(j, "bound", where);
        std::string mode = j.value("mode", "exact");
        if (mode == "exact")
            s.mode = BoundMode::Exact;
        else if (mode == "at_most")
            s.mode = BoundMode::AtMost;
        else
            schema_error(where, "mode must be exact or at_most");
        s.slow = j.value("slow", false);
    } else if (kind == "conclude_contains") {
        s.kind = StepKind::ConcludeContains;
        s.words = get_words(j, "words", where);
        if (s.words.empty()) schema_error(where, "conclude_contains needs words");
    } else if (kind == "pigeonhole") {
        s.kind = StepKind::Pigeonhole;
        s.n = get_count(j, "n", where);
    } else if (kind == "omit_split") {
        s.kind = StepKind::OmitSplit;
        s.n = get_count(j, "n", where);
        if (!j.contains("alternatives") || !j["alternatives"].is_array() ||
            j["alternatives"].empty())
            schema_error(where, "omit_split needs at least one alternative");
        for (const auto& alt : j["alternatives"]) {
            Alternative a;
            a.word = get_word(alt, "word", where);
            if (a.word.size() != s.n)
                schema_error(where, "alternative '" + a.word + "' has wrong length");
            a.covered_by = alt.value("covered_by", "");
            s.alternatives.push_back(std::move(a));
        }
    } else if (kind == "deduce_omitted") {
        s.kind = StepKind::DeduceOmitted;
        s.n = get_count(j, "n", where);
        s.contained = get_words(j, "contained", where);
        s.omitted = get_word(j, "omitted", where);
    } else if (kind == "extension_forced") {
        s.kind = StepKind::ExtensionForced;
        s.from = get_word(j, "from", where);
        s.to = get_word(j, "to", where);
        if (!s.to.starts_with(s.from) || s.to.size() <= s.from.size())
            schema_error(where, "'to' must properly extend 'from' on the right");
    } else if (kind == "return_words") {
        s.kind = StepKind::ReturnWords;
        s.x = get_word(j, "x", where);
        s.expected = get_words(j, "expected", where);
        if (s.expected.empty()) schema_error(where, "return_words needs an expected set");
    } else if (kind == "discard_block") {
        s.kind = StepKind::DiscardBlock;
        s.block = get_word(j, "block", where);
        s.witness = get_word(j, "witness", where);
    } else if (kind == "roll") {
        s.kind = StepKind::Roll;
        std::string dir = j.value("direction", "");
        if (dir == "left")
            s.roll_left = true;
        else if (dir == "right")
            s.roll_left = false;
        else
            schema_error(where, "roll direction must be left or right");
        s.piece = get_word(j, "piece", where);
    } else if (kind == "invoke") {
        s.kind = StepKind::Invoke;
        std::string o = j.value("orientation", "");
        if (o == "forward")
            s.forward = true;
        else if (o == "reverse")
            s.forward = false;
        else
            schema_error(where, "orientation must be forward or reverse");
        s.triple = get_words(j, "triple", where);
        if (s.triple.size() != 3) schema_error(where, "invoke triple needs 3 words");
        s.table = static_cast<int>(get_count(j, "table", where));
        s.row = static_cast<int>(get_count(j, "row", where));
        if ((s.table == 1) != s.forward)
            schema_error(where, "orientation does not match the referenced table");
    } else if (kind == "terminal") {
        s.kind = StepKind::Terminal;
        std::string result = j.value("result", "");
        if (result == "contradiction") {
            s.terminal = TerminalKind::Contradiction;
        } else if (result == "morphism") {
            s.terminal = TerminalKind::Morphism;
            s.table = static_cast<int>(get_count(j, "table", where));
            s.row = static_cast<int>(get_count(j, "row", where));
        } else if (result == "covered_by") {
            s.terminal = TerminalKind::CoveredBy;
            s.covered_by = j.value("path", "");
            if (s.covered_by.empty()) schema_error(where, "covered_by needs a path");
        } else {
            schema_error(where, "terminal result must be contradiction, morphism or covered_by");
        }
    } else {
        schema_error(where, "unknown step kind '" + kind + "'");
    }
    return s;
}

// words introduced by a step that must avoid the accumulated context
std::vector<const Word*> checked_words(const Step& s) {
    std::vector<const Word*> out;
    auto add_all = [&](const std::vector<Word>& ws) {
        for (const Word& w : ws) out.push_back(&w);
    };
    switch (s.kind) {
        case StepKind::SearchBound: add_all(s.candidates); break;
        case StepKind::ConcludeContains: add_all(s.words); break;
        case StepKind::OmitSplit:
            for (const Alternative& a : s.alternatives) out.push_back(&a.word);
            break;
        case StepKind::DeduceOmitted:
            add_all(s.contained);
            out.push_back(&s.omitted);
            break;
        case StepKind::ExtensionForced: out.push_back(&s.from); break;
        case StepKind::ReturnWords:
            out.push_back(&s.x);
            add_all(s.expected);
            break;
        case StepKind::Invoke: add_all(s.triple); break;
        default: break;
    }
    return out;
}

CaseNode parse_case(const json& j, const std::string& parent_path,
                    std::vector<Word> context);

void validate_step_order(const CaseNode& node, const std::string& path) {
    if (node.steps.empty()) schema_error(path, "case without steps");
    const Step& last = node.steps.back();
    size_t open = 0;
    for (size_t i = 0; i < node.steps.size(); ++i) {
        const Step& s = node.steps[i];
        bool is_last = i + 1 == node.steps.size();
        if ((s.kind == StepKind::Terminal || s.kind == StepKind::OmitSplit) && !is_last)
            schema_error(path, "terminal/omit_split must be the last step");
    }
    if (last.kind == StepKind::OmitSplit) {
        for (const Alternative& a : last.alternatives)
            if (a.covered_by.empty()) ++open;
        if (open != node.children.size())
            schema_error(path, "omit_split opens " + std::to_string(open) +
                                   " alternatives but case has " +
                                   std::to_string(node.children.size()) + " children");
    } else if (last.kind == StepKind::Terminal) {
        if (!node.children.empty()) schema_error(path, "terminal case cannot have children");
    } else {
        schema_error(path, "case must end in a terminal or omit_split step");
    }
}

CaseNode parse_case(const json& j, const std::string& parent_path, std::vector<Word> context) {
    if (!j.is_object()) schema_error(parent_path, "case must be an object");
    CaseNode node;
    if (!j.contains("name") || !j["name"].is_string())
        schema_error(parent_path, "case needs a name");
    node.name = j["name"].get<std::string>();
    std::string path = parent_path.empty() ? node.name : parent_path + "/" + node.name;
    node.omits = get_words(j, "omits", path);
    for (const Word& w : node.omits) {
        if (w.empty()) schema_error(path, "omitted words must be nonempty");
        context.push_back(w);
    }

    if (!j.contains("steps") || !j["steps"].is_array()) schema_error(path, "case needs steps");
    size_t idx = 0;
    for (const auto& js : j["steps"]) {
        Step s = parse_step(js, path + "#" + std::to_string(idx));
        // every word the step introduces must avoid the case context
        for (const Word* w : checked_words(s))
            for (const Word& f : context)
                if (contains_factor(*w, f))
                    schema_error(path + "#" + std::to_string(idx),
                                 "word '" + *w + "' contains context factor '" + f + "'");
        node.steps.push_back(std::move(s));
        ++idx;
    }

    if (j.contains("children")) {
        if (!j["children"].is_array()) schema_error(path, "children must be an array");
        for (const auto& jc : j["children"])
            node.children.push_back(parse_case(jc, path, context));
    }
    validate_step_order(node, path);

    // children must introduce exactly the open alternatives, in order
    if (node.steps.back().kind == StepKind::OmitSplit) {
        size_t child = 0;
        for (const Alternative& a : node.steps.back().alternatives) {
            if (!a.covered_by.empty()) continue;
            const CaseNode& c = node.children[child++];
            if (c.omits.size() != 1 || c.omits[0] != a.word)
                schema_error(path, "child '" + c.name + "' must omit exactly '" + a.word + "'");
        }
    }
    return node;
}

} // namespace

const CaseNode* Certificate::find(const std::string& path) const {
    const std::vector<CaseNode>* level = &cases;
    const CaseNode* found = nullptr;
    size_t start = 0;
    while (start <= path.size()) {
        size_t end = path.find('/', start);
        if (end == std::string::npos) end = path.size();
        std::string name = path.substr(start, end - start);
        found = nullptr;
        for (const CaseNode& c : *level)
            if (c.name == name) { found = &c; break; }
        if (!found) return nullptr;
        level = &found->children;
        if (end == path.size()) break;
        start = end + 1;
    }
    return found;
}

Certificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("SchemaError", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("SchemaError", "certificate must be a JSON object");
    Certificate cert;
    cert.format = j.value("format", "");
    if (cert.format != "wordbench-certificate/1")
        fail("SchemaError", "unknown certificate format '" + cert.format + "'");
    cert.threshold = parse_rational(j.value("threshold", "5/2"));
    cert.search_cap = j.value("search_cap", size_t{200});
    cert.return_cap = j.value("return_cap", size_t{80});
    if (!j.contains("cases") || !j["cases"].is_array() || j["cases"].empty())
        fail("SchemaError", "certificate needs a non-empty case list");
    for (const auto& jc : j["cases"]) cert.cases.push_back(parse_case(jc, "", {}));

    // covered_by targets must exist
    std::function<void(const CaseNode&, const std::string&)> walk =
        [&](const CaseNode& node, const std::string& prefix) {
            std::string path = prefix.empty() ? node.name : prefix + "/" + node.name;
            for (const Step& s : node.steps) {
                std::vector<std::string> targets;
                if (s.kind == StepKind::Terminal && s.terminal == TerminalKind::CoveredBy)
                    targets.push_back(s.covered_by);
                if (s.kind == StepKind::OmitSplit)
                    for (const Alternative& a : s.alternatives)
                        if (!a.covered_by.empty()) targets.push_back(a.covered_by);
                for (const std::string& t : targets)
                    if (!cert.find(t))
                        fail("SchemaError", path + ": covered_by target '" + t + "' not found");
            }
            for (const CaseNode& c : node.children) walk(c, path);
        };
    for (const CaseNode& c : cert.cases) walk(c, "");
    return cert;
}

const Certificate& builtin_certificate() {
    static const Certificate cert = parse_certificate(data::certificate_json());
    return cert;
}

} // namespace wb
