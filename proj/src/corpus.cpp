// src/corpus.cpp

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

#include "modevo/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace modevo {

using json = nlohmann::ordered_json;

namespace {

struct PhoneDef {
  const char* symbol;
  const char* grapheme;
  bool vowel;
};

// CMUDict-style inventory.  The generator draws from the unstressed base set;
// the loader additionally accepts the stressed vowel variants.
const PhoneDef kBasePhones[] = {
    {"AA", "aa", true}, {"AE", "a", true},   {"AH", "u", true},  {"AO", "aw", true},
    {"AW", "ow", true}, {"AY", "i", true},   {"EH", "e", true},  {"ER", "er", true},
    {"EY", "ay", true}, {"IH", "ih", true},  {"IY", "ee", true}, {"OW", "oa", true},
    {"OY", "oy", true}, {"UH", "uh", true},  {"UW", "oo", true},
    {"B", "b", false},  {"CH", "ch", false}, {"D", "d", false},  {"DH", "dh", false},
    {"F", "f", false},  {"G", "g", false},   {"HH", "h", false}, {"JH", "j", false},
    {"K", "k", false},  {"L", "l", false},   {"M", "m", false},  {"N", "n", false},
    {"NG", "ng", false},{"P", "p", false},   {"R", "r", false},  {"S", "s", false},
    {"SH", "sh", false},{"T", "t", false},   {"TH", "th", false},{"V", "v", false},
    {"W", "w", false},  {"Y", "y", false},   {"Z", "z", false},  {"ZH", "zh", false},
};

int sample_duration(Rng& rng, const SynthConfig& cfg) {
  long d = std::lround(rng.normal(cfg.duration_mean_frames, cfg.duration_std_frames));
  return static_cast<int>(std::max(1L, d));
}

std::string phone_key(const std::vector<std::string>& phones) {
  return join(phones, " ");
}

}  // namespace

const std::vector<std::string>& arpabet_base_phones() {
  static const std::vector<std::string> phones = [] {
    std::vector<std::string> v;
    for (const auto& p : kBasePhones) v.push_back(p.symbol);
    return v;
  }();
  return phones;
}

const std::vector<std::string>& arpabet_alphabet() {
  static const std::vector<std::string> phones = [] {
    std::vector<std::string> v;
    for (const auto& p : kBasePhones) {
      v.push_back(p.symbol);
      if (p.vowel) {  // stress variants as in CMUDict
        for (const char* s : {"0", "1", "2"}) v.push_back(std::string(p.symbol) + s);
      }
    }
    v.push_back(kSilencePhone);
    return v;
  }();
  return phones;
}

std::string phone_grapheme(const std::string& phone) {
  std::string base = phone;
  if (!base.empty() && (base.back() == '0' || base.back() == '1' || base.back() == '2'))
    base.pop_back();
  for (const auto& p : kBasePhones)
    if (base == p.symbol) return p.grapheme;
  return "";
}

// ---------------------------------------------------------------------------
// Grammar

bool Grammar::is_determiner(const std::string& w) const {
  return std::find(determiners.begin(), determiners.end(), w) != determiners.end();
}

bool Grammar::is_noun(const std::string& w) const {
  for (const auto& t : topic_nouns)
    if (std::find(t.begin(), t.end(), w) != t.end()) return true;
  return false;
}

bool Grammar::is_verb(const std::string& w) const {
  for (const auto& t : topic_verbs)
    if (std::find(t.begin(), t.end(), w) != t.end()) return true;
  return false;
}

int Grammar::topic_of(const std::string& w) const {
  for (int t = 0; t < topic_count(); ++t) {
    if (std::find(topic_nouns[t].begin(), topic_nouns[t].end(), w) != topic_nouns[t].end())
      return t;
    if (std::find(topic_verbs[t].begin(), topic_verbs[t].end(), w) != topic_verbs[t].end())
      return t;
  }
  return -1;
}

bool Grammar::accepts(const std::vector<std::string>& words) const {
  if (words.empty() || words.size() % kSentenceWords != 0) return false;
  for (size_t i = 0; i < words.size(); i += kSentenceWords) {
    if (!is_determiner(words[i])) return false;
    if (!is_noun(words[i + 1])) return false;
    if (!is_verb(words[i + 2])) return false;
    if (!is_determiner(words[i + 3])) return false;
    if (!is_noun(words[i + 4])) return false;
  }
  return true;
}

namespace {

// Zipf-ish pick: weight of rank r is 1/(r+1).
const std::string& zipf_pick(const std::vector<std::string>& items, Rng& rng) {
  double total = 0.0;
  for (size_t r = 0; r < items.size(); ++r) total += 1.0 / static_cast<double>(r + 1);
  double u = rng.uniform() * total;
  for (size_t r = 0; r < items.size(); ++r) {
    u -= 1.0 / static_cast<double>(r + 1);
    if (u <= 0.0) return items[r];
  }
  return items.back();
}

}  // namespace

std::string Grammar::sample_noun(int topic, Rng& rng) const {
  return zipf_pick(topic_nouns[topic], rng);
}

std::string Grammar::sample_verb(int topic, Rng& rng) const {
  return zipf_pick(topic_verbs[topic], rng);
}

std::vector<std::string> Grammar::sample_sentence(int topic, Rng& rng) const {
  return {determiners[rng.index(determiners.size())], sample_noun(topic, rng),
          sample_verb(topic, rng), determiners[rng.index(determiners.size())],
          sample_noun(topic, rng)};
}

// ---------------------------------------------------------------------------
// SynthChannel

int SynthChannel::phone_row(const std::string& symbol) const {
  for (size_t i = 0; i < phone_order.size(); ++i)
    if (phone_order[i] == symbol) return static_cast<int>(i);
  return -1;
}

FeatureMatrix SynthChannel::render(const Utterance& utt, uint64_t seed) const {
  Rng rng(seed);
  FeatureMatrix out(utt.total_frames(), feature_dim);
  Eigen::RowVectorXf style = Eigen::RowVectorXf::Zero(feature_dim);
  if (style_offsets.rows() > 0)
    style = style_offsets.row(utt.style_id % style_offsets.rows());
  int row = 0;
  for (const auto& w : utt.words) {
    for (const auto& p : w.phones) {
      int pr = phone_row(p.symbol);
      if (pr < 0) throw StageError("channel has no statistics for phone " + p.symbol);
      for (int f = 0; f < p.frames; ++f, ++row) {
        for (int d = 0; d < feature_dim; ++d) {
          double eps = frame_noise > 0.0 ? rng.normal(0.0, frame_noise) : 0.0;
          out(row, d) = phone_means(pr, d) +
                        static_cast<float>(style_strength) * style(d) +
                        static_cast<float>(eps);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

int64_t Corpus::total_frames() const {
  int64_t n = 0;
  for (const auto& u : utterances) n += u.total_frames();
  return n;
}

std::map<std::string, int64_t> Corpus::word_counts() const {
  std::map<std::string, int64_t> counts;
  for (const auto& u : utterances)
    for (const auto& w : u.words)
      if (!w.is_silence()) counts[w.word]++;
  return counts;
}

FeatureMatrix Corpus::utterance_frames(const Utterance& utt) const {
  if (utt.frames.has_value()) return *utt.frames;
  if (!channel.has_value())
    throw StageError("utterance " + utt.id + " has no frames and the corpus has no channel");
  return channel->render(utt, utt.frame_seed);
}

// ---------------------------------------------------------------------------
// Synthetic generation

namespace {

struct LexiconBuild {
  Lexicon lexicon;
  Grammar grammar;
};

std::vector<std::string> make_word_phones(Rng& rng, const std::string& pattern) {
  const auto& base = arpabet_base_phones();
  std::vector<std::string> vowels, consonants;
  for (const auto& p : kBasePhones)
    (p.vowel ? vowels : consonants).push_back(p.symbol);
  std::vector<std::string> phones;
  for (char slot : pattern) {
    const auto& pool = slot == 'V' ? vowels : consonants;
    std::string pick = pool[rng.index(pool.size())];
    while (!phones.empty() && pick == phones.back())  // no adjacent duplicates
      pick = pool[rng.index(pool.size())];
    phones.push_back(pick);
  }
  (void)base;
  return phones;
}

std::string spell(const std::vector<std::string>& phones) {
  std::string s;
  for (const auto& p : phones) s += phone_grapheme(p);
  return s;
}

LexiconBuild build_lexicon(const SynthConfig& cfg) {
  const int det_count = 4;
  if (cfg.topic_count < 1) throw ConfigError("topic_count must be >= 1");
  if (cfg.lexicon_size < det_count + 2 * cfg.topic_count)
    throw ConfigError("lexicon_size too small for topic_count");

  Rng rng(Rng::derive(cfg.seed, 1));
  LexiconBuild out;
  out.lexicon.alphabet.insert(kSilencePhone);
  for (const auto& p : arpabet_base_phones()) out.lexicon.alphabet.insert(p);

  std::unordered_set<std::string> used_phone_keys, used_spellings;
  const std::vector<std::string> content_patterns = {"CVC", "VCV", "CVCV", "VCVC", "CVCVC"};

  auto add_word = [&](const std::string& pattern_hint) -> std::string {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::string pattern = pattern_hint;
      if (pattern.empty())
        pattern = content_patterns[rng.index(content_patterns.size())];
      auto phones = make_word_phones(rng, pattern);
      std::string key = phone_key(phones);
      std::string word = spell(phones);
      if (used_phone_keys.count(key) || used_spellings.count(word)) continue;
      used_phone_keys.insert(key);
      used_spellings.insert(word);
      out.lexicon.entries[word] = phones;
      return word;
    }
    throw ConfigError("lexicon_size too large for the phone inventory");
  };

  for (int i = 0; i < det_count; ++i)
    out.grammar.determiners.push_back(add_word("CV"));

  int rest = cfg.lexicon_size - det_count;
  int per_topic = rest / cfg.topic_count;
  out.grammar.topic_nouns.resize(cfg.topic_count);
  out.grammar.topic_verbs.resize(cfg.topic_count);
  for (int t = 0; t < cfg.topic_count; ++t) {
    int budget = per_topic + (t == 0 ? rest % cfg.topic_count : 0);
    int verbs = std::max(1, (2 * budget) / 5);
    int nouns = std::max(1, budget - verbs);
    for (int i = 0; i < nouns; ++i) out.grammar.topic_nouns[t].push_back(add_word(""));
    for (int i = 0; i < verbs; ++i) out.grammar.topic_verbs[t].push_back(add_word(""));
  }
  return out;
}

SynthChannel build_channel(const SynthConfig& cfg, const Lexicon& lexicon) {
  SynthChannel ch;
  ch.feature_dim = cfg.feature_dim;
  ch.style_strength = cfg.style_strength;
  ch.frame_noise = cfg.frame_noise;
  ch.phone_order.assign(lexicon.alphabet.begin(), lexicon.alphabet.end());
  Rng rng(Rng::derive(cfg.seed, 2));
  ch.phone_means.resize(static_cast<int>(ch.phone_order.size()), cfg.feature_dim);
  for (int i = 0; i < ch.phone_means.rows(); ++i)
    for (int d = 0; d < cfg.feature_dim; ++d)
      ch.phone_means(i, d) = static_cast<float>(rng.normal());
  ch.style_offsets.resize(cfg.style_count, cfg.feature_dim);
  for (int s = 0; s < cfg.style_count; ++s)
    for (int d = 0; d < cfg.feature_dim; ++d)
      ch.style_offsets(s, d) = static_cast<float>(rng.normal());
  return ch;
}

}  // namespace

Corpus generate_synthetic_corpus(const SynthConfig& cfg) {
  if (cfg.n_utterances < 0) throw ConfigError("n_utterances must be >= 0");
  if (cfg.min_words_per_utterance < 1 ||
      cfg.max_words_per_utterance < cfg.min_words_per_utterance)
    throw ConfigError("bad words_per_utterance range");
  if (cfg.duration_mean_frames < 1.0) throw ConfigError("duration_mean_frames must be >= 1");
  if (cfg.duration_std_frames < 0.0 || cfg.frame_noise < 0.0 || cfg.style_strength < 0.0)
    throw ConfigError("negative noise/strength parameter");
  if (cfg.style_count < 1 || cfg.feature_dim < 1) throw ConfigError("bad style_count/feature_dim");

  Corpus corpus;
  corpus.synth_config = cfg;
  auto built = build_lexicon(cfg);
  corpus.lexicon = std::move(built.lexicon);
  corpus.grammar = std::move(built.grammar);
  corpus.channel = build_channel(cfg, corpus.lexicon);

  for (int i = 0; i < cfg.n_utterances; ++i) {
    Rng rng(Rng::derive(cfg.seed, 1000 + static_cast<uint64_t>(i)));
    Utterance u;
    u.id = "synth-" + std::to_string(i);
    u.style_id = static_cast<int>(rng.index(cfg.style_count));
    u.frame_seed = Rng::derive(cfg.seed, 2000000 + static_cast<uint64_t>(i));
    int topic = static_cast<int>(rng.index(cfg.topic_count));
    int target = cfg.min_words_per_utterance +
                 static_cast<int>(rng.index(cfg.max_words_per_utterance -
                                            cfg.min_words_per_utterance + 1));
    int sentences = std::max(1, (target + Grammar::kSentenceWords / 2) / Grammar::kSentenceWords);

    std::vector<std::string> words;
    for (int s = 0; s < sentences; ++s) {
      auto sent = corpus.grammar.sample_sentence(topic, rng);
      words.insert(words.end(), sent.begin(), sent.end());
    }

    auto silence_span = [&] {
      AlignedWord w;
      w.phones.push_back({kSilencePhone, sample_duration(rng, cfg)});
      return w;
    };
    u.words.push_back(silence_span());
    for (const auto& word : words) {
      AlignedWord w;
      w.word = word;
      for (const auto& p : *corpus.lexicon.lookup(word))
        w.phones.push_back({p, sample_duration(rng, cfg)});
      u.words.push_back(std::move(w));
      u.words.push_back(silence_span());
    }
    u.text = join(words, " ");
    corpus.utterances.push_back(std::move(u));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// I/O

namespace {

Utterance parse_record(const json& rec, int line_no, const std::set<std::string>& alphabet) {
  auto fail = [&](const std::string& why) {
    throw ConfigError("corpus line " + std::to_string(line_no) + ": " + why);
  };
  Utterance u;
  if (!rec.contains("id") || !rec["id"].is_string()) fail("missing string field 'id'");
  u.id = rec["id"].get<std::string>();
  if (!rec.contains("text") || !rec["text"].is_string()) fail("missing string field 'text'");
  u.text = rec["text"].get<std::string>();
  if (!rec.contains("words") || !rec["words"].is_array()) fail("missing array field 'words'");
  for (const auto& wj : rec["words"]) {
    AlignedWord w;
    if (!wj.contains("w") || !wj["w"].is_string()) fail("word entry missing 'w'");
    w.word = wj["w"].get<std::string>();
    if (!wj.contains("phones") || !wj["phones"].is_array() || wj["phones"].empty())
      fail("word '" + w.word + "' has no phones");
    for (const auto& pj : wj["phones"]) {
      PhoneSpan span;
      if (!pj.contains("p") || !pj["p"].is_string()) fail("phone entry missing 'p'");
      span.symbol = pj["p"].get<std::string>();
      if (!pj.contains("f") || !pj["f"].is_number_integer()) fail("phone entry missing integer 'f'");
      span.frames = pj["f"].get<int>();
      if (span.frames < 1) fail("phone " + span.symbol + " has non-positive duration");
      if (!alphabet.count(span.symbol)) fail("phone symbol outside alphabet: " + span.symbol);
      if (w.is_silence() && span.symbol != kSilencePhone)
        fail("silence span contains non-silence phone " + span.symbol);
      if (!w.is_silence() && span.symbol == kSilencePhone)
        fail("word '" + w.word + "' contains the silence phone");
      w.phones.push_back(span);
    }
    u.words.push_back(std::move(w));
  }
  if (rec.contains("style")) {
    if (!rec["style"].is_number_integer() || rec["style"].get<int>() < 0)
      fail("'style' must be a non-negative integer");
    u.style_id = rec["style"].get<int>();
  }
  if (rec.contains("fseed")) u.frame_seed = rec["fseed"].get<uint64_t>();
  if (rec.contains("frames")) {
    if (!rec["frames"].is_array()) fail("'frames' must be an array");
    int rows = static_cast<int>(rec["frames"].size());
    if (rows != u.total_frames())
      fail("frame rows (" + std::to_string(rows) + ") != total phone frames (" +
           std::to_string(u.total_frames()) + ")");
    int dim = rows > 0 ? static_cast<int>(rec["frames"][0].size()) : 0;
    FeatureMatrix m(rows, dim);
    for (int r = 0; r < rows; ++r) {
      const auto& rowj = rec["frames"][r];
      if (static_cast<int>(rowj.size()) != dim) fail("ragged frame rows");
      for (int d = 0; d < dim; ++d) m(r, d) = rowj[d].get<float>();
    }
    u.frames = std::move(m);
  }
  return u;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus file: " + path);
  std::set<std::string> alphabet(arpabet_alphabet().begin(), arpabet_alphabet().end());
  Corpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ConfigError("corpus line " + std::to_string(line_no) + ": bad JSON: " + e.what());
    }
    corpus.utterances.push_back(parse_record(rec, line_no, alphabet));
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path, bool emit_frames) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write corpus file: " + path);
  for (const auto& u : corpus.utterances) {
    json rec;
    rec["id"] = u.id;
    rec["text"] = u.text;
    json words = json::array();
    for (const auto& w : u.words) {
      json wj;
      wj["w"] = w.word;
      json phones = json::array();
      for (const auto& p : w.phones) phones.push_back({{"p", p.symbol}, {"f", p.frames}});
      wj["phones"] = std::move(phones);
      words.push_back(std::move(wj));
    }
    rec["words"] = std::move(words);
    rec["style"] = u.style_id;
    if (u.frame_seed != 0) rec["fseed"] = u.frame_seed;
    if (emit_frames) {
      FeatureMatrix m = corpus.utterance_frames(u);
      json rows = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int d = 0; d < m.cols(); ++d) row.push_back(m(r, d));
        rows.push_back(std::move(row));
      }
      rec["frames"] = std::move(rows);
    }
    out << rec.dump() << "\n";
  }
}

void validate_against_lexicon(const Corpus& corpus, const Lexicon& lexicon) {
  for (const auto& u : corpus.utterances) {
    for (const auto& w : u.words) {
      if (w.is_silence()) continue;
      const auto* entry = lexicon.lookup(w.word);
      if (!entry)
        throw ConfigError("utterance " + u.id + ": word '" + w.word + "' not in lexicon");
      std::vector<std::string> phones;
      for (const auto& p : w.phones) phones.push_back(p.symbol);
      if (phones != *entry)
        throw ConfigError("utterance " + u.id + ": word '" + w.word +
                          "' decomposition does not match lexicon");
    }
  }
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file: " + path);
  Lexicon lex;
  lex.alphabet.insert(kSilencePhone);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ConfigError("lexicon line " + std::to_string(line_no) + ": expected TAB");
    std::string word = line.substr(0, tab);
    std::vector<std::string> phones;
    for (const auto& p : split(line.substr(tab + 1), ' '))
      if (!p.empty()) phones.push_back(p);
    if (word.empty() || phones.empty())
      throw ConfigError("lexicon line " + std::to_string(line_no) + ": empty word or phones");
    for (const auto& p : phones) lex.alphabet.insert(p);
    lex.entries[word] = std::move(phones);
  }
  return lex;
}

void save_lexicon(const Lexicon& lexicon, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write lexicon file: " + path);
  for (const auto& [word, phones] : lexicon.entries)
    out << word << "\t" << join(phones, " ") << "\n";
}

Grammar load_grammar(const std::string& path) {
  json j = json::parse(read_text_file(path));
  Grammar g;
  g.determiners = j["determiners"].get<std::vector<std::string>>();
  for (const auto& t : j["topics"]) {
    g.topic_nouns.push_back(t["nouns"].get<std::vector<std::string>>());
    g.topic_verbs.push_back(t["verbs"].get<std::vector<std::string>>());
  }
  return g;
}

void save_grammar(const Grammar& grammar, const std::string& path) {
  json j;
  j["determiners"] = grammar.determiners;
  json topics = json::array();
  for (int t = 0; t < grammar.topic_count(); ++t)
    topics.push_back({{"nouns", grammar.topic_nouns[t]}, {"verbs", grammar.topic_verbs[t]}});
  j["topics"] = std::move(topics);
  write_text_file(path, j.dump(2) + "\n");
}

SynthChannel load_channel(const std::string& path) {
  json j = json::parse(read_text_file(path));
  SynthChannel ch;
  ch.feature_dim = j["feature_dim"].get<int>();
  ch.style_strength = j["style_strength"].get<double>();
  ch.frame_noise = j["frame_noise"].get<double>();
  ch.phone_order = j["phone_order"].get<std::vector<std::string>>();
  ch.phone_means.resize(static_cast<int>(ch.phone_order.size()), ch.feature_dim);
  for (int r = 0; r < ch.phone_means.rows(); ++r)
    for (int d = 0; d < ch.feature_dim; ++d)
      ch.phone_means(r, d) = j["phone_means"][r][d].get<float>();
  int styles = static_cast<int>(j["style_offsets"].size());
  ch.style_offsets.resize(styles, ch.feature_dim);
  for (int s = 0; s < styles; ++s)
    for (int d = 0; d < ch.feature_dim; ++d)
      ch.style_offsets(s, d) = j["style_offsets"][s][d].get<float>();
  return ch;
}

void save_channel(const SynthChannel& channel, const std::string& path) {
  json j;
  j["feature_dim"] = channel.feature_dim;
  j["style_strength"] = channel.style_strength;
  j["frame_noise"] = channel.frame_noise;
  j["phone_order"] = channel.phone_order;
  json means = json::array();
  for (int r = 0; r < channel.phone_means.rows(); ++r) {
    json row = json::array();
    for (int d = 0; d < channel.feature_dim; ++d) row.push_back(channel.phone_means(r, d));
    means.push_back(std::move(row));
  }
  j["phone_means"] = std::move(means);
  json offsets = json::array();
  for (int s = 0; s < channel.style_offsets.rows(); ++s) {
    json row = json::array();
    for (int d = 0; d < channel.feature_dim; ++d) row.push_back(channel.style_offsets(s, d));
    offsets.push_back(std::move(row));
  }
  j["style_offsets"] = std::move(offsets);
  write_text_file(path, j.dump() + "\n");
}

std::string inverse_lexicon_lookup(const Lexicon& lexicon,
                                   const std::vector<std::string>& phones) {
  for (const auto& [word, entry] : lexicon.entries)
    if (entry == phones) return word;
  return "";
}

}  // namespace modevo
