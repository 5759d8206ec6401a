// modevo/types.hpp

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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modevo {

// All framewise representations run at this rate.
inline constexpr double kFrameRateHz = 50.0;

// Symbol used for pauses; the one non-lexical phone.
inline const std::string kSilencePhone = "SIL";

using FeatureMatrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct PhoneSpan {
  std::string symbol;
  int frames = 1;  // duration at 50 Hz, >= 1
};

// One aligned word, or a silence span when `word` is empty.
struct AlignedWord {
  std::string word;
  std::vector<PhoneSpan> phones;

  bool is_silence() const { return word.empty(); }
};

struct Utterance {
  std::string id;
  std::string text;
  std::vector<AlignedWord> words;    // includes silence spans
  std::optional<FeatureMatrix> frames;  // one row per frame, D columns
  int style_id = 0;
  uint64_t frame_seed = 0;  // synthetic corpora: lets frames be re-rendered on demand

  int total_frames() const {
    int n = 0;
    for (const auto& w : words)
      for (const auto& p : w.phones) n += p.frames;
    return n;
  }
  int total_phones() const {
    int n = 0;
    for (const auto& w : words) n += static_cast<int>(w.phones.size());
    return n;
  }
};

struct Lexicon {
  std::map<std::string, std::vector<std::string>> entries;  // word -> phone sequence
  std::set<std::string> alphabet;                           // phone symbols, silence included

  bool contains(const std::string& word) const { return entries.count(word) > 0; }

  // Total over corpus words; miss is reported to the caller.
  const std::vector<std::string>* lookup(const std::string& word) const {
    auto it = entries.find(word);
    return it == entries.end() ? nullptr : &it->second;
  }
};

struct SynthConfig {
  int n_utterances = 200;
  int min_words_per_utterance = 6;
  int max_words_per_utterance = 10;
  int lexicon_size = 60;     // determiners + topic nouns/verbs
  int topic_count = 4;
  double duration_mean_frames = 5.0;  // per-phone frame counts: max(1, round(N(mean, std)))
  double duration_std_frames = 2.0;
  int style_count = 4;       // S
  double style_strength = 1.0;  // alpha
  double frame_noise = 0.2;     // sigma
  int feature_dim = 8;          // D
  uint64_t seed = 1;
};

enum class ModalityTag { TextBPE, TextRaw, PhoneBPE, PhoneRaw, PhoneRepeat, SpeechTokens };

inline bool is_framewise(ModalityTag t) {
  return t == ModalityTag::PhoneRepeat || t == ModalityTag::SpeechTokens;
}
inline bool is_text(ModalityTag t) {
  return t == ModalityTag::TextBPE || t == ModalityTag::TextRaw;
}
inline bool is_bpe(ModalityTag t) {
  return t == ModalityTag::TextBPE || t == ModalityTag::PhoneBPE;
}

std::string modality_name(ModalityTag tag);
ModalityTag modality_from_name(const std::string& name);

struct TokenSeq {
  std::vector<int> ids;
  ModalityTag modality = ModalityTag::TextRaw;

  int size() const { return static_cast<int>(ids.size()); }
};

// Free-generation decoding parameters (per modality).
struct GenConfig {
  int max_length = 96;
  int top_k = 0;          // 0 disables the top-k cut
  double top_p = 0.9;
  double temperature = 1.0;
  int run_stop_len = 8;   // framewise: stop once a run of identical tokens exceeds this
  bool use_run_stop = false;
  int min_chars_retry = 50;
  int n_samples_per_prompt = 10;
  int retry_budget = 5;

  static GenConfig defaults_for(ModalityTag tag);
  void validate() const;
};

}  // namespace modevo
