// modevo/corpus.hpp

// Copyright 2026  The modevo authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modevo/common.hpp"
#include "modevo/types.hpp"

namespace modevo {

// ARPAbet-style phone inventory (consonants + stressed vowel variants + SIL).
const std::vector<std::string>& arpabet_alphabet();
// Base (unstressed) subset the synthetic generator draws from.
const std::vector<std::string>& arpabet_base_phones();
// Deterministic grapheme rendering for one phone; empty for unknown symbols.
std::string phone_grapheme(const std::string& phone);

// Word classes of the synthetic subject-verb-object grammar.  Content words
// are partitioned by topic so that downstream tasks can build semantic
// negatives from disjoint vocabulary.
struct Grammar {
  std::vector<std::string> determiners;
  std::vector<std::vector<std::string>> topic_nouns;   // [topic][rank]
  std::vector<std::vector<std::string>> topic_verbs;
  static constexpr int kSentenceWords = 5;  // det noun verb det noun

  int topic_count() const { return static_cast<int>(topic_nouns.size()); }
  bool is_determiner(const std::string& w) const;
  bool is_noun(const std::string& w) const;
  bool is_verb(const std::string& w) const;
  int topic_of(const std::string& w) const;  // -1 for determiners/unknown

  // Word sequence is grammatical iff it splits into det-noun-verb-det-noun
  // clauses.  Used as the recognizer oracle for syntactic negatives.
  bool accepts(const std::vector<std::string>& words) const;

  // Zipf-weighted content word choice within a topic.
  std::string sample_noun(int topic, Rng& rng) const;
  std::string sample_verb(int topic, Rng& rng) const;
  std::vector<std::string> sample_sentence(int topic, Rng& rng) const;
};

// The synthetic feature channel: frame = mu[phone] + alpha * nu[style] + eps.
// With alpha = 0 and sigma = 0 a frame depends only on its phone symbol.
struct SynthChannel {
  int feature_dim = 0;
  double style_strength = 0.0;  // alpha
  double frame_noise = 0.0;     // sigma
  std::vector<std::string> phone_order;          // row index -> symbol
  FeatureMatrix phone_means;                     // |phones| x D
  FeatureMatrix style_offsets;                   // S x D

  int phone_row(const std::string& symbol) const;
  // Renders the feature rows for one utterance; deterministic in (utt, seed).
  FeatureMatrix render(const Utterance& utt, uint64_t seed) const;
};

struct Corpus {
  std::vector<Utterance> utterances;
  Lexicon lexicon;
  Grammar grammar;                       // synthetic corpora only
  std::optional<SynthChannel> channel;   // synthetic corpora only
  SynthConfig synth_config;              // as generated (synthetic only)

  int64_t total_frames() const;
  double audio_seconds() const { return static_cast<double>(total_frames()) / kFrameRateHz; }
  // Occurrences of each lexical word in the corpus.
  std::map<std::string, int64_t> word_counts() const;
  // Frames for one utterance, rendering through the channel when absent.
  FeatureMatrix utterance_frames(const Utterance& utt) const;
};

// Deterministic generator for the factor-controlled synthetic corpus.
Corpus generate_synthetic_corpus(const SynthConfig& cfg);

// JSONL corpus I/O.  Loading validates per-record invariants and rejects the
// whole file on the first bad record, reporting its line number.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path, bool emit_frames = false);

// Checks word decompositions against a lexicon; throws ConfigError on the
// first mismatch.  Separate from load_corpus so that corpora without a
// lexicon file can still be loaded.
void validate_against_lexicon(const Corpus& corpus, const Lexicon& lexicon);

Lexicon load_lexicon(const std::string& path);
void save_lexicon(const Lexicon& lexicon, const std::string& path);

Grammar load_grammar(const std::string& path);
void save_grammar(const Grammar& grammar, const std::string& path);

SynthChannel load_channel(const std::string& path);
void save_channel(const SynthChannel& channel, const std::string& path);

// Brute-force inverse lookup over an injective lexicon; empty on miss.
std::string inverse_lexicon_lookup(const Lexicon& lexicon,
                                   const std::vector<std::string>& phones);

}  // namespace modevo
