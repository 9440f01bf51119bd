#include "scl/grammar.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

namespace scl::grammar {

using nlohmann::json;

std::string to_string(Language l) {
    switch (l) {
        case Language::EN: return "EN";
        case Language::IT: return "IT";
        case Language::JA: return "JA";
        case Language::ZZ: return "ZZ";
    }
    return "?";
}

std::string to_string(StructureClass c) {
    return c == StructureClass::H ? "H" : "L";
}

std::string to_string(RuleKind r) {
    switch (r) {
        case RuleKind::Declarative: return "declarative";
        case RuleKind::Subordinate: return "subordinate";
        case RuleKind::Passive: return "passive";
        case RuleKind::NullSubject: return "null_subject";
        case RuleKind::Negation: return "negation";
        case RuleKind::Inversion: return "inversion";
        case RuleKind::WhPenultimate: return "wh_penultimate";
        case RuleKind::LastNounAgreement: return "last_noun_agreement";
        case RuleKind::PastTenseSuffix: return "past_tense_suffix";
    }
    return "?";
}

Language language_from_string(const std::string& s) {
    if (s == "EN") return Language::EN;
    if (s == "IT") return Language::IT;
    if (s == "JA") return Language::JA;
    if (s == "ZZ") return Language::ZZ;
    throw SchemaViolation("unknown language '" + s + "'");
}

StructureClass structure_class_from_string(const std::string& s) {
    if (s == "H") return StructureClass::H;
    if (s == "L") return StructureClass::L;
    throw SchemaViolation("unknown structure class '" + s + "'");
}

RuleKind rule_from_string(const std::string& s) {
    static const std::pair<const char*, RuleKind> table[] = {
        {"declarative", RuleKind::Declarative},
        {"subordinate", RuleKind::Subordinate},
        {"passive", RuleKind::Passive},
        {"null_subject", RuleKind::NullSubject},
        {"negation", RuleKind::Negation},
        {"inversion", RuleKind::Inversion},
        {"wh_penultimate", RuleKind::WhPenultimate},
        {"last_noun_agreement", RuleKind::LastNounAgreement},
        {"past_tense_suffix", RuleKind::PastTenseSuffix},
    };
    for (const auto& [name, kind] : table) {
        if (s == name) return kind;
    }
    throw SchemaViolation("unknown rule '" + s + "'");
}

StructureClass structure_class_of(RuleKind r) {
    switch (r) {
        case RuleKind::Declarative:
        case RuleKind::Subordinate:
        case RuleKind::Passive:
        case RuleKind::NullSubject:
            return StructureClass::H;
        default:
            return StructureClass::L;
    }
}

int GrammarSpec::effective_insert_after() const {
    if (insert_after > 0) return insert_after;
    switch (language) {
        case Language::EN:
        case Language::ZZ: return 5;
        default: return 3;
    }
}

const Word& Lexicon::function_word(const std::string& role) const {
    auto it = function_words.find(role);
    if (it == function_words.end()) {
        throw MissingLexiconRole("lexicon " + to_string(language) +
                                 " lacks function word '" + role + "'");
    }
    return it->second;
}

std::vector<Word> Lexicon::all_surface_forms() const {
    std::vector<Word> out;
    for (const auto& n : subjects) {
        out.push_back(n.sg);
        out.push_back(n.pl);
    }
    for (const auto& n : objects) {
        out.push_back(n.sg);
        out.push_back(n.pl);
    }
    for (const auto& v : verbs) {
        out.push_back(v.sg);
        out.push_back(v.pl);
        for (const auto& w : v.passive) out.push_back(w);
        if (!v.citation.empty()) out.push_back(v.citation);
    }
    for (const auto& d : determiners) out.push_back(d.surface);
    for (const auto& [role, w] : function_words) out.push_back(w);
    for (const auto& w : wh_words) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::optional<Gender> gender_from_json(const json& j) {
    if (!j.contains("gender")) return std::nullopt;
    const std::string g = j.at("gender").get<std::string>();
    if (g == "masc") return Gender::masc;
    if (g == "fem") return Gender::fem;
    throw SchemaViolation("unknown gender '" + g + "'");
}

Number number_from_json(const json& j, const char* key) {
    const std::string n = j.at(key).get<std::string>();
    if (n == "sg") return Number::sg;
    if (n == "pl") return Number::pl;
    throw SchemaViolation("unknown number '" + n + "'");
}

NounEntry noun_from_json(const json& j) {
    NounEntry n;
    n.sg = j.at("sg").get<std::string>();
    n.pl = j.at("pl").get<std::string>();
    n.gender = gender_from_json(j);
    return n;
}

} // namespace

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaViolation("lexicon " + path + ": " + e.what());
    }
    try {
        Lexicon lex;
        lex.language = language_from_string(j.at("language").get<std::string>());
        for (const auto& n : j.at("subjects")) lex.subjects.push_back(noun_from_json(n));
        for (const auto& n : j.at("objects")) lex.objects.push_back(noun_from_json(n));
        for (const auto& v : j.at("verbs")) {
            VerbEntry e;
            e.sg = v.at("sg").get<std::string>();
            e.pl = v.at("pl").get<std::string>();
            e.passive = v.at("passive").get<std::vector<std::string>>();
            e.citation = v.value("citation", std::string{});
            e.subordinate_capable = v.value("subordinate_capable", false);
            lex.verbs.push_back(std::move(e));
        }
        for (const auto& d : j.at("determiners")) {
            DetEntry e;
            e.surface = d.at("surface").get<std::string>();
            e.number = number_from_json(d, "number");
            e.gender = gender_from_json(d);
            e.series = d.value("series", std::string{"def"});
            lex.determiners.push_back(std::move(e));
        }
        for (const auto& [role, w] : j.at("function_words").items()) {
            lex.function_words[role] = w.get<std::string>();
        }
        if (j.contains("wh_words")) {
            lex.wh_words = j.at("wh_words").get<std::vector<std::string>>();
        }
        return lex;
    } catch (const json::exception& e) {
        throw SchemaViolation("lexicon " + path + ": " + e.what());
    }
}

} // namespace scl::grammar
