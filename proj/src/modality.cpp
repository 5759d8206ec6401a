// src/modality.cpp

// Copyright 2026  The modevo authors

// See ../COPYING for clarification regarding multiple authors
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

#include "modevo/modality.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace modevo {

using json = nlohmann::ordered_json;

std::string modality_name(ModalityTag tag) {
  switch (tag) {
    case ModalityTag::TextBPE: return "text-bpe";
    case ModalityTag::TextRaw: return "text-raw";
    case ModalityTag::PhoneBPE: return "phone-bpe";
    case ModalityTag::PhoneRaw: return "phone-raw";
    case ModalityTag::PhoneRepeat: return "phone-repeat";
    case ModalityTag::SpeechTokens: return "speech";
  }
  return "?";
}

ModalityTag modality_from_name(const std::string& name) {
  for (ModalityTag t : {ModalityTag::TextBPE, ModalityTag::TextRaw, ModalityTag::PhoneBPE,
                        ModalityTag::PhoneRaw, ModalityTag::PhoneRepeat,
                        ModalityTag::SpeechTokens})
    if (modality_name(t) == name) return t;
  throw ConfigError("unknown modality: " + name);
}

// ---------------------------------------------------------------------------
// TokenizerModel

namespace {

const std::vector<std::string>& special_names() {
  static const std::vector<std::string> names = {"<s>", "<sil>", "<wb>"};
  return names;
}

std::string merged_name(const TokenizerModel& m, int left, int right) {
  // Phone token names keep a separator so multi-character symbols stay readable.
  if (m.phone_domain) return m.vocab[left].name + "+" + m.vocab[right].name;
  return m.vocab[left].name + m.vocab[right].name;
}

}  // namespace

int TokenizerModel::base_id(const std::string& symbol) const {
  auto it = base_lookup.find(symbol);
  return it == base_lookup.end() ? -1 : it->second;
}

void TokenizerModel::rebuild_derived() {
  vocab.clear();
  base_lookup.clear();
  for (const auto& s : special_names()) vocab.push_back({s, {}});
  for (size_t i = 0; i < alphabet.size(); ++i) {
    vocab.push_back({alphabet[i], {static_cast<int>(i)}});
    base_lookup[alphabet[i]] = static_cast<int>(vocab.size()) - 1;
  }
  for (const auto& [l, r] : merges) {
    if (l < 0 || r < 0 || l >= static_cast<int>(vocab.size()) ||
        r >= static_cast<int>(vocab.size()))
      throw ConfigError("merge refers to an unknown token id");
    Token t;
    t.name = merged_name(*this, l, r);
    t.base_ids = vocab[l].base_ids;
    t.base_ids.insert(t.base_ids.end(), vocab[r].base_ids.begin(), vocab[r].base_ids.end());
    vocab.push_back(std::move(t));
  }
}

TokenizerModel make_raw_tokenizer(TokenizerKind kind, std::vector<std::string> alphabet) {
  if (kind == TokenizerKind::Bpe) throw ConfigError("raw tokenizer cannot have kind bpe");
  TokenizerModel m;
  m.kind = kind;
  m.phone_domain = kind == TokenizerKind::PhoneRaw;
  m.alphabet = std::move(alphabet);
  std::sort(m.alphabet.begin(), m.alphabet.end());
  m.alphabet.erase(std::unique(m.alphabet.begin(), m.alphabet.end()), m.alphabet.end());
  m.rebuild_derived();
  return m;
}

// ---------------------------------------------------------------------------
// BPE training

namespace {

int64_t pair_key(int a, int b) {
  return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b);
}

struct PairStat {
  int64_t count = 0;
  std::unordered_set<int> lines;  // may contain stale entries; pruned on use
};

}  // namespace

TokenizerModel train_bpe(const std::vector<std::vector<std::string>>& lines, int vocab_size,
                         bool phone_domain) {
  if (lines.empty()) throw ConfigError("train_bpe: empty corpus");

  TokenizerModel model;
  model.kind = TokenizerKind::Bpe;
  model.phone_domain = phone_domain;
  {
    std::set<std::string> symbols;
    for (const auto& line : lines)
      for (const auto& s : line) symbols.insert(s);
    model.alphabet.assign(symbols.begin(), symbols.end());
  }
  model.rebuild_derived();

  int floor_size = TokenizerModel::kNumSpecials + static_cast<int>(model.alphabet.size());
  if (vocab_size < floor_size)
    throw ConfigError("train_bpe: vocab_size " + std::to_string(vocab_size) +
                      " below alphabet+specials (" + std::to_string(floor_size) + ")");

  // Collapse identical lines; phone corpora repeat the same word constantly.
  std::vector<std::vector<int>> work;
  std::vector<int64_t> weight;
  {
    std::map<std::vector<int>, int64_t> uniq;
    for (const auto& line : lines) {
      std::vector<int> ids;
      ids.reserve(line.size());
      for (const auto& s : line) {
        int id = model.base_id(s);
        if (id < 0) throw ConfigError("train_bpe: symbol lookup failed for " + s);
        ids.push_back(id);
      }
      uniq[std::move(ids)]++;
    }
    for (auto& [ids, w] : uniq) {
      work.push_back(ids);
      weight.push_back(w);
    }
  }

  std::unordered_map<int64_t, PairStat> stats;
  auto count_line = [&](int li, int64_t sign) {
    const auto& t = work[li];
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      auto& st = stats[pair_key(t[i], t[i + 1])];
      st.count += sign * weight[li];
      if (sign > 0) st.lines.insert(li);
    }
  };
  for (size_t li = 0; li < work.size(); ++li) count_line(static_cast<int>(li), +1);

  int target_merges = vocab_size - floor_size;
  for (int m = 0; m < target_merges; ++m) {
    // Best pair by count, then lexicographically smallest (left, right) name.
    int64_t best_key = -1;
    int64_t best_count = 0;
    for (const auto& [key, st] : stats) {
      if (st.count < 2) continue;
      if (best_key < 0 || st.count > best_count) {
        best_key = key;
        best_count = st.count;
        continue;
      }
      if (st.count == best_count) {
        int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffff);
        int ba = static_cast<int>(best_key >> 32), bb = static_cast<int>(best_key & 0xffffffff);
        auto cand = std::make_tuple(model.vocab[a].name, model.vocab[b].name, a, b);
        auto best = std::make_tuple(model.vocab[ba].name, model.vocab[bb].name, ba, bb);
        if (cand < best) best_key = key;
      }
    }
    if (best_key < 0) break;  // no pair occurs twice

    int left = static_cast<int>(best_key >> 32);
    int right = static_cast<int>(best_key & 0xffffffff);
    int new_id = model.vocab_size();
    model.merges.emplace_back(left, right);
    Token t;
    t.name = merged_name(model, left, right);
    t.base_ids = model.vocab[left].base_ids;
    t.base_ids.insert(t.base_ids.end(), model.vocab[right].base_ids.begin(),
                      model.vocab[right].base_ids.end());
    model.vocab.push_back(std::move(t));

    auto affected = stats[best_key].lines;  // copy; counting mutates stats
    for (int li : affected) {
      auto& tline = work[li];
      bool present = false;
      for (size_t i = 0; i + 1 < tline.size(); ++i)
        if (tline[i] == left && tline[i + 1] == right) {
          present = true;
          break;
        }
      if (!present) continue;  // stale entry
      count_line(li, -1);
      std::vector<int> merged;
      merged.reserve(tline.size());
      for (size_t i = 0; i < tline.size();) {
        if (i + 1 < tline.size() && tline[i] == left && tline[i + 1] == right) {
          merged.push_back(new_id);
          i += 2;
        } else {
          merged.push_back(tline[i]);
          i += 1;
        }
      }
      tline = std::move(merged);
      count_line(li, +1);
    }
    stats.erase(best_key);
  }
  return model;
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

std::vector<int> base_ids_of(const TokenizerModel& model, const std::vector<std::string>& symbols) {
  std::vector<int> ids;
  ids.reserve(symbols.size());
  for (const auto& s : symbols) {
    int id = model.base_id(s);
    if (id < 0) throw StageError("symbol outside tokenizer alphabet: '" + s + "'");
    ids.push_back(id);
  }
  return ids;
}

// Greedy merge replay: always apply the earliest-trained merge present.
// Linked-list plus a (rank, position) heap; equivalent to replaying the merge
// list in order because a merge output id can only pair with ids that existed
// when it was trained.
std::vector<int> apply_merges(const TokenizerModel& model, std::vector<int> ids) {
  if (model.merges.empty() || ids.size() < 2) return ids;

  std::unordered_map<int64_t, std::pair<int, int>> rank_of;  // (a,b) -> (rank, new id)
  int first_merge_id = TokenizerModel::kNumSpecials + static_cast<int>(model.alphabet.size());
  for (size_t r = 0; r < model.merges.size(); ++r)
    rank_of[pair_key(model.merges[r].first, model.merges[r].second)] = {
        static_cast<int>(r), first_merge_id + static_cast<int>(r)};

  int n = static_cast<int>(ids.size());
  std::vector<int> prev(n), next(n), tok(ids.begin(), ids.end());
  std::vector<bool> alive(n, true);
  for (int i = 0; i < n; ++i) {
    prev[i] = i - 1;
    next[i] = i + 1 < n ? i + 1 : -1;
  }

  using HeapItem = std::pair<int, int>;  // (rank, left position); min-heap
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  auto push_pair = [&](int i) {
    if (i < 0 || next[i] < 0) return;
    auto it = rank_of.find(pair_key(tok[i], tok[next[i]]));
    if (it != rank_of.end()) heap.push({it->second.first, i});
  };
  for (int i = 0; i < n; ++i) push_pair(i);

  while (!heap.empty()) {
    auto [rank, i] = heap.top();
    heap.pop();
    if (!alive[i] || next[i] < 0) continue;
    auto it = rank_of.find(pair_key(tok[i], tok[next[i]]));
    if (it == rank_of.end() || it->second.first != rank) continue;  // stale entry
    int j = next[i];
    tok[i] = it->second.second;
    alive[j] = false;
    next[i] = next[j];
    if (next[j] >= 0) prev[next[j]] = i;
    push_pair(prev[i]);
    push_pair(i);
  }

  std::vector<int> out;
  for (int i = 0; i >= 0 && i < n; i = next[i])
    if (alive[i]) out.push_back(tok[i]);
  return out;
}

}  // namespace

TokenSeq encode_text_raw(const TokenizerModel& model, const std::string& text) {
  if (model.phone_domain) throw StageError("encode_text_raw needs a character tokenizer");
  TokenSeq seq;
  seq.modality = ModalityTag::TextRaw;
  seq.ids.reserve(text.size());
  for (char c : text) {
    int id = model.base_id(std::string(1, c));
    if (id < 0) throw StageError(std::string("character outside alphabet: '") + c + "'");
    seq.ids.push_back(id);
  }
  return seq;
}

TokenSeq encode_bpe(const TokenizerModel& model, const std::vector<std::string>& symbols) {
  TokenSeq seq;
  seq.modality = model.phone_domain ? ModalityTag::PhoneBPE : ModalityTag::TextBPE;
  seq.ids = apply_merges(model, base_ids_of(model, symbols));
  return seq;
}

TokenSeq encode_phone_raw(const TokenizerModel& model, const Utterance& u) {
  TokenSeq seq;
  seq.modality = ModalityTag::PhoneRaw;
  for (const auto& w : u.words)
    for (const auto& p : w.phones) {
      if (p.symbol == kSilencePhone) {
        seq.ids.push_back(TokenizerModel::kSilId);
      } else {
        int id = model.base_id(p.symbol);
        if (id < 0) throw StageError("phone outside alphabet: " + p.symbol);
        seq.ids.push_back(id);
      }
    }
  return seq;
}

TokenSeq encode_phone_repeat(const TokenizerModel& model, const Utterance& u) {
  TokenSeq seq;
  seq.modality = ModalityTag::PhoneRepeat;
  for (const auto& w : u.words)
    for (const auto& p : w.phones) {
      if (p.frames < 1) throw StageError("non-positive phone duration in " + u.id);
      int id;
      if (p.symbol == kSilencePhone) {
        id = TokenizerModel::kSilId;
      } else {
        id = model.base_id(p.symbol);
        if (id < 0) throw StageError("phone outside alphabet: " + p.symbol);
      }
      seq.ids.insert(seq.ids.end(), p.frames, id);
    }
  return seq;
}

std::vector<int> decode_to_base(const TokenizerModel& model, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int id : ids) {
    if (id < 0 || id >= model.vocab_size()) throw StageError("token id out of range");
    if (id < TokenizerModel::kNumSpecials)
      throw StageError("cannot decode special token " + model.vocab[id].name);
    out.insert(out.end(), model.vocab[id].base_ids.begin(), model.vocab[id].base_ids.end());
  }
  return out;
}

std::string decode_text(const TokenizerModel& model, const TokenSeq& seq) {
  std::string out;
  for (int base : decode_to_base(model, seq.ids))
    out += model.alphabet[base];
  return out;
}

TokenSeq deduplicate(const TokenSeq& seq) {
  TokenSeq out;
  out.modality = seq.modality;
  for (int id : seq.ids)
    if (out.ids.empty() || out.ids.back() != id) out.ids.push_back(id);
  return out;
}

TokenSeq insert_word_boundaries(const TokenSeq& seq, const std::vector<int>& boundaries) {
  for (size_t i = 0; i < boundaries.size(); ++i) {
    if (boundaries[i] < 0 || boundaries[i] > seq.size())
      throw StageError("word boundary position out of range");
    if (i > 0 && boundaries[i] < boundaries[i - 1])
      throw StageError("word boundary positions not sorted");
  }
  TokenSeq out;
  out.modality = seq.modality;
  out.ids.reserve(seq.ids.size() + boundaries.size());
  size_t b = 0;
  for (int i = 0; i <= seq.size(); ++i) {
    while (b < boundaries.size() && boundaries[b] == i) {
      out.ids.push_back(TokenizerModel::kWbId);
      ++b;
    }
    if (i < seq.size()) out.ids.push_back(seq.ids[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus helpers

std::vector<std::string> corpus_char_alphabet(const Corpus& corpus) {
  std::set<std::string> chars;
  for (const auto& u : corpus.utterances)
    for (char c : u.text) chars.insert(std::string(1, c));
  return {chars.begin(), chars.end()};
}

std::vector<std::string> corpus_phone_alphabet(const Corpus& corpus) {
  std::set<std::string> phones;
  for (const auto& u : corpus.utterances)
    for (const auto& w : u.words)
      for (const auto& p : w.phones)
        if (p.symbol != kSilencePhone) phones.insert(p.symbol);
  return {phones.begin(), phones.end()};
}

std::vector<std::vector<std::string>> corpus_char_lines(const Corpus& corpus) {
  std::vector<std::vector<std::string>> lines;
  for (const auto& u : corpus.utterances) {
    std::vector<std::string> line;
    line.reserve(u.text.size());
    for (char c : u.text) line.push_back(std::string(1, c));
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::vector<std::string>> corpus_word_phone_lines(const Corpus& corpus) {
  std::vector<std::vector<std::string>> lines;
  for (const auto& u : corpus.utterances)
    for (const auto& w : u.words) {
      if (w.is_silence()) continue;
      std::vector<std::string> line;
      for (const auto& p : w.phones) line.push_back(p.symbol);
      lines.push_back(std::move(line));
    }
  return lines;
}

// ---------------------------------------------------------------------------
// Dataset encoding

int ModalityEncoder::vocab_size() const {
  if (tag == ModalityTag::SpeechTokens) {
    if (!codebook) throw StageError("speech encoder has no codebook");
    return TokenizerModel::kNumSpecials + codebook->k;
  }
  if (!tokenizer) throw StageError("encoder has no tokenizer");
  return tokenizer->vocab_size();
}

TokenSeq ModalityEncoder::encode(const Utterance& u, const FeatureMatrix* frames) const {
  TokenSeq seq;
  seq.modality = tag;
  std::vector<int> boundaries;

  switch (tag) {
    case ModalityTag::TextRaw:
      return encode_text_raw(*tokenizer, u.text);
    case ModalityTag::TextBPE: {
      std::vector<std::string> symbols;
      symbols.reserve(u.text.size());
      for (char c : u.text) symbols.push_back(std::string(1, c));
      seq = encode_bpe(*tokenizer, symbols);
      seq.modality = ModalityTag::TextBPE;
      return seq;
    }
    case ModalityTag::PhoneRaw:
    case ModalityTag::PhoneRepeat: {
      bool repeat = tag == ModalityTag::PhoneRepeat;
      for (const auto& w : u.words) {
        for (const auto& p : w.phones) {
          int id;
          if (p.symbol == kSilencePhone) {
            id = TokenizerModel::kSilId;
          } else {
            id = tokenizer->base_id(p.symbol);
            if (id < 0) throw StageError("phone outside alphabet: " + p.symbol);
          }
          if (repeat && p.frames < 1)
            throw StageError("non-positive phone duration in " + u.id);
          seq.ids.insert(seq.ids.end(), repeat ? p.frames : 1, id);
        }
        if (!w.is_silence()) boundaries.push_back(seq.size());
      }
      break;
    }
    case ModalityTag::PhoneBPE: {
      for (const auto& w : u.words) {
        if (w.is_silence()) {
          for (size_t i = 0; i < w.phones.size(); ++i)
            seq.ids.push_back(TokenizerModel::kSilId);
          continue;
        }
        std::vector<std::string> symbols;
        for (const auto& p : w.phones) symbols.push_back(p.symbol);
        TokenSeq word_seq = encode_bpe(*tokenizer, symbols);
        seq.ids.insert(seq.ids.end(), word_seq.ids.begin(), word_seq.ids.end());
        boundaries.push_back(seq.size());
      }
      break;
    }
    case ModalityTag::SpeechTokens: {
      if (!codebook) throw StageError("speech encoding requires a codebook");
      FeatureMatrix rendered;
      const FeatureMatrix* use = frames;
      if (!use) {
        if (u.frames.has_value()) {
          use = &*u.frames;
        } else if (channel) {
          rendered = channel->render(u, u.frame_seed);
          use = &rendered;
        } else {
          throw StageError("utterance " + u.id + " has no frames for speech encoding");
        }
      }
      std::vector<int> assigned = kmeans_assign(*codebook, *use);
      seq.ids.reserve(assigned.size());
      for (int a : assigned) seq.ids.push_back(TokenizerModel::kNumSpecials + a);
      int frame_pos = 0;
      for (const auto& w : u.words) {
        for (const auto& p : w.phones) frame_pos += p.frames;
        if (!w.is_silence()) boundaries.push_back(frame_pos);
      }
      break;
    }
  }
  if (word_boundary) seq = insert_word_boundaries(seq, boundaries);
  return seq;
}

EncodedDataset encode_dataset(const Corpus& corpus, const ModalityEncoder& encoder) {
  if (is_bpe(encoder.tag) &&
      (!encoder.tokenizer || encoder.tokenizer->kind != TokenizerKind::Bpe))
    throw StageError("BPE modality requires a trained BPE tokenizer");
  if (encoder.tag == ModalityTag::SpeechTokens && !encoder.codebook)
    throw StageError("speech modality requires a codebook");
  if (encoder.word_boundary && is_text(encoder.tag))
    throw StageError("word-boundary tokens apply to non-text modalities only");

  EncodedDataset ds;
  ds.modality = encoder.tag;
  ds.word_boundary = encoder.word_boundary;
  int64_t total_tokens = 0;
  for (const auto& u : corpus.utterances) {
    TokenSeq seq = encoder.encode(u);
    total_tokens += seq.size();
    ds.ids.push_back(u.id);
    ds.sequences.push_back(std::move(seq.ids));
  }
  ds.stats.vocab_size = encoder.vocab_size();
  ds.stats.total_tokens = total_tokens;
  int64_t frames = corpus.total_frames();
  ds.stats.tokens_per_second =
      frames > 0 ? kFrameRateHz * static_cast<double>(total_tokens) / static_cast<double>(frames)
                 : 0.0;
  return ds;
}

// ---------------------------------------------------------------------------
// I/O

void save_tokenizer(const TokenizerModel& model, const std::string& path) {
  json j;
  switch (model.kind) {
    case TokenizerKind::CharRaw: j["kind"] = "char_raw"; break;
    case TokenizerKind::PhoneRaw: j["kind"] = "phone_raw"; break;
    case TokenizerKind::Bpe: j["kind"] = "bpe"; break;
  }
  j["phone_domain"] = model.phone_domain;
  j["specials"] = special_names();
  j["alphabet"] = model.alphabet;
  json merges = json::array();
  json merge_ids = json::array();
  for (const auto& [l, r] : model.merges) {
    merges.push_back({model.vocab[l].name, model.vocab[r].name});
    merge_ids.push_back({l, r});
  }
  j["merges"] = std::move(merges);
  j["merge_ids"] = std::move(merge_ids);
  write_text_file(path, j.dump() + "\n");
}

TokenizerModel load_tokenizer(const std::string& path) {
  json j = json::parse(read_text_file(path));
  TokenizerModel m;
  std::string kind = j["kind"].get<std::string>();
  if (kind == "char_raw") m.kind = TokenizerKind::CharRaw;
  else if (kind == "phone_raw") m.kind = TokenizerKind::PhoneRaw;
  else if (kind == "bpe") m.kind = TokenizerKind::Bpe;
  else throw ConfigError("unknown tokenizer kind: " + kind);
  m.phone_domain = j["phone_domain"].get<bool>();
  m.alphabet = j["alphabet"].get<std::vector<std::string>>();
  for (const auto& pair : j["merge_ids"])
    m.merges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  m.rebuild_derived();
  return m;
}

void save_dataset(const EncodedDataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write dataset file: " + path);
  for (size_t i = 0; i < ds.sequences.size(); ++i) {
    out << ds.ids[i] << "\t";
    const auto& seq = ds.sequences[i];
    for (size_t t = 0; t < seq.size(); ++t) {
      if (t) out << " ";
      out << seq[t];
    }
    out << "\n";
  }
  std::ostringstream stats;
  stats << "modality,word_boundary,vocab_size,total_tokens,tokens_per_second\n"
        << modality_name(ds.modality) << "," << (ds.word_boundary ? 1 : 0) << ","
        << ds.stats.vocab_size << "," << ds.stats.total_tokens << ","
        << format_double(ds.stats.tokens_per_second, 12) << "\n";
  write_text_file(path + ".stats.csv", stats.str());
}

EncodedDataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dataset file: " + path);
  EncodedDataset ds;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ConfigError("dataset line missing TAB: " + path);
    ds.ids.push_back(line.substr(0, tab));
    std::vector<int> seq;
    std::istringstream ss(line.substr(tab + 1));
    int id;
    while (ss >> id) seq.push_back(id);
    ds.sequences.push_back(std::move(seq));
  }
  std::ifstream stats(path + ".stats.csv");
  if (stats) {
    std::string header, row;
    std::getline(stats, header);
    std::getline(stats, row);
    auto fields = split(row, ',');
    if (fields.size() == 5) {
      ds.modality = modality_from_name(fields[0]);
      ds.word_boundary = fields[1] == "1";
      ds.stats.vocab_size = std::stoi(fields[2]);
      ds.stats.total_tokens = std::stoll(fields[3]);
      ds.stats.tokens_per_second = std::stod(fields[4]);
    }
  }
  return ds;
}

}  // namespace modevo
