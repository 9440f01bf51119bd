#pragma once
// Synthetic grammaticality datasets: hierarchical and linear grammars over
// curated English/Italian/Japanese lexicons, plus the nonce-word
// (Jabberwocky) rewrite. Sentences are plain word lists; Japanese is
// stored pre-segmented, one particle per word.

#include "scl/common.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace scl::grammar {

SCL_DEFINE_ERROR(MissingLexiconRole);
SCL_DEFINE_ERROR(TemplateTooShort);
SCL_DEFINE_ERROR(RuleMismatch);
SCL_DEFINE_ERROR(UnmappedWord);
SCL_DEFINE_ERROR(EmptyDataset);
SCL_DEFINE_ERROR(SchemaViolation);

using Word = std::string;
using Sentence = std::vector<Word>;

enum class Language { EN, IT, JA, ZZ };
enum class StructureClass { H, L };
enum class Gender { masc, fem };
enum class Number { sg, pl };

enum class RuleKind {
    Declarative,
    Subordinate,
    Passive,
    NullSubject,       // Italian only
    Negation,          // insert negator after word N
    Inversion,         // reverse word order
    WhPenultimate,     // English: wh word at the penultimate position
    LastNounAgreement, // Italian: first determiner takes the last noun's gender
    PastTenseSuffix,   // Japanese: past marker after the Nth word from the right
};

std::string to_string(Language l);
std::string to_string(StructureClass c);
std::string to_string(RuleKind r);
Language language_from_string(const std::string& s);
StructureClass structure_class_from_string(const std::string& s);
RuleKind rule_from_string(const std::string& s);

// Hierarchical iff the rule follows natural constituent structure.
StructureClass structure_class_of(RuleKind r);

struct NounEntry {
    Word sg;
    Word pl;
    std::optional<Gender> gender; // Italian entries carry gender
};

struct VerbEntry {
    Word sg;                 // 3sg form
    Word pl;                 // plural form
    std::vector<Word> passive; // passive participle, pre-segmented
    Word citation;           // dictionary form (Japanese); empty elsewhere
    bool subordinate_capable = false; // takes a complementizer phrase
};

struct DetEntry {
    Word surface;
    Number number = Number::sg;
    std::optional<Gender> gender;
    std::string series; // "def" | "indef"; keeps substitutions within a series
};

struct Lexicon {
    Language language = Language::EN;
    std::vector<NounEntry> subjects;
    std::vector<NounEntry> objects;
    std::vector<VerbEntry> verbs;
    std::vector<DetEntry> determiners;
    std::map<std::string, Word> function_words; // role -> surface
    std::vector<Word> wh_words;

    const Word& function_word(const std::string& role) const;
    // Every surface form the lexicon can emit, sorted and deduplicated.
    std::vector<Word> all_surface_forms() const;
};

Lexicon load_lexicon(const std::string& path);

struct GrammarSpec {
    std::string id;
    Language language = Language::EN;
    RuleKind rule = RuleKind::Declarative;
    // Negation: 1-based word position after which the negator is inserted.
    // 0 selects the language default (EN 5, IT 3, JA 3).
    int insert_after = 0;
    // PastTenseSuffix: position counted from the right (default 3).
    int from_right = 3;

    StructureClass structure_class() const { return structure_class_of(rule); }
    int effective_insert_after() const;
};

struct SentencePair {
    std::string grammar_id;
    Language language = Language::EN;
    StructureClass structure_class = StructureClass::H;
    RuleKind rule = RuleKind::Declarative;
    Sentence positive;
    Sentence negative;
    std::map<std::string, int> template_meta;

    bool operator==(const SentencePair&) const = default;
};

// Full deterministic enumeration of one grammar over a lexicon,
// lexicographic in the template's slot indices.
std::vector<SentencePair> generate_pairs(const GrammarSpec& spec, const Lexicon& lex);

// The rule-breaking counterpart of a positive sentence. Hierarchical
// rules swap the final two words; insertion rules move the inserted
// element to the final position; inversion swaps the final two words of
// the reversed sentence; last-noun agreement substitutes the first
// determiner with the form agreeing with the first noun.
Sentence make_negative(const Sentence& positive, const GrammarSpec& spec,
                       const Lexicon& lex);

struct NonceMap {
    std::uint64_t seed = 0;
    std::map<Word, Word> mapping;

    NonceMap inverse() const;
};

// Seeded bijection from every surface form of `source` onto pronounceable
// nonce words, avoiding every surface form in `avoid`.
NonceMap make_nonce_map(const Lexicon& source, const std::vector<Lexicon>& avoid,
                        std::uint64_t seed);

std::vector<SentencePair> apply_nonce(const std::vector<SentencePair>& dataset,
                                      const NonceMap& map);

struct DatasetSplit {
    std::vector<SentencePair> train;
    std::vector<SentencePair> test;
    std::uint64_t seed = 0;
};

DatasetSplit split_dataset(std::vector<SentencePair> pairs, double ratio,
                           std::uint64_t seed);

void write_jsonl(const std::vector<SentencePair>& pairs, const std::string& path);
std::vector<SentencePair> read_jsonl(const std::string& path);

} // namespace scl::grammar
