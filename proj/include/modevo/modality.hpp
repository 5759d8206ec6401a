// modevo/modality.hpp

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

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modevo/corpus.hpp"
#include "modevo/quantizer.hpp"
#include "modevo/types.hpp"

namespace modevo {

enum class TokenizerKind { CharRaw, PhoneRaw, Bpe };

struct Token {
  std::string name;
  std::vector<int> base_ids;  // constituent alphabet ids; empty for specials
};

// Vocabulary layout: specials [<s>, <sil>, <wb>], then the base alphabet,
// then one token per merge, in training order.
struct TokenizerModel {
  static constexpr int kBosId = 0;
  static constexpr int kSilId = 1;
  static constexpr int kWbId = 2;
  static constexpr int kNumSpecials = 3;

  TokenizerKind kind = TokenizerKind::CharRaw;
  bool phone_domain = false;  // base symbols are phones (else single characters)
  std::vector<std::string> alphabet;
  std::vector<std::pair<int, int>> merges;  // vocab-id pairs

  std::vector<Token> vocab;
  std::unordered_map<std::string, int> base_lookup;

  int vocab_size() const { return static_cast<int>(vocab.size()); }
  int base_id(const std::string& symbol) const;  // -1 when unknown
  const std::string& token_name(int id) const { return vocab[id].name; }

  void rebuild_derived();  // recomputes vocab/base_lookup from alphabet+merges
};

TokenizerModel make_raw_tokenizer(TokenizerKind kind, std::vector<std::string> alphabet);

// Classic BPE: repeatedly merge the most frequent adjacent pair until the
// vocabulary is full or no pair occurs at least twice.  Ties go to the
// lexicographically smallest (left name, right name) pair.  For phone input
// each line must be a single word's phone sequence, which keeps merges from
// crossing word boundaries.
TokenizerModel train_bpe(const std::vector<std::vector<std::string>>& lines, int vocab_size,
                         bool phone_domain);

// Sorted single-character alphabet of all utterance texts.
std::vector<std::string> corpus_char_alphabet(const Corpus& corpus);
// Sorted non-silence phone alphabet observed in the corpus.
std::vector<std::string> corpus_phone_alphabet(const Corpus& corpus);
// Utterance texts as per-character symbol lines (BPE training input).
std::vector<std::vector<std::string>> corpus_char_lines(const Corpus& corpus);
// One line per word occurrence: that word's phone sequence.
std::vector<std::vector<std::string>> corpus_word_phone_lines(const Corpus& corpus);

TokenSeq encode_text_raw(const TokenizerModel& model, const std::string& text);
TokenSeq encode_bpe(const TokenizerModel& model, const std::vector<std::string>& symbols);
TokenSeq encode_phone_raw(const TokenizerModel& model, const Utterance& u);
TokenSeq encode_phone_repeat(const TokenizerModel& model, const Utterance& u);

// Expands ids back to base alphabet ids (specials are rejected).
std::vector<int> decode_to_base(const TokenizerModel& model, const std::vector<int>& ids);
// Concatenated token names; the round-trip inverse of the text encoders.
std::string decode_text(const TokenizerModel& model, const TokenSeq& seq);

// Collapses maximal runs of equal ids; idempotent.
TokenSeq deduplicate(const TokenSeq& seq);

// Inserts the word-boundary token after each word; `boundaries` holds sorted
// token offsets (one per word, the index just past the word's last token).
TokenSeq insert_word_boundaries(const TokenSeq& seq, const std::vector<int>& boundaries);

struct DatasetStats {
  int vocab_size = 0;
  int64_t total_tokens = 0;
  double tokens_per_second = 0.0;
};

struct EncodedDataset {
  ModalityTag modality = ModalityTag::TextRaw;
  bool word_boundary = false;
  std::vector<std::string> ids;
  std::vector<std::vector<int>> sequences;
  DatasetStats stats;
};

// Everything needed to encode one utterance into one modality.
struct ModalityEncoder {
  ModalityTag tag = ModalityTag::TextRaw;
  const TokenizerModel* tokenizer = nullptr;  // required unless tag == SpeechTokens
  const Codebook* codebook = nullptr;         // SpeechTokens
  const SynthChannel* channel = nullptr;      // SpeechTokens without materialized frames
  bool word_boundary = false;

  // `frames` overrides utterance/channel frames when given (SpeechTokens only).
  TokenSeq encode(const Utterance& u, const FeatureMatrix* frames = nullptr) const;
  int vocab_size() const;
};

EncodedDataset encode_dataset(const Corpus& corpus, const ModalityEncoder& encoder);

void save_tokenizer(const TokenizerModel& model, const std::string& path);
TokenizerModel load_tokenizer(const std::string& path);

void save_dataset(const EncodedDataset& ds, const std::string& path);
EncodedDataset load_dataset(const std::string& path);

}  // namespace modevo
