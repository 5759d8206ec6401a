// modevo/quantizer.hpp

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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modevo/types.hpp"

namespace modevo {

struct Codebook {
  FeatureMatrix centroids;  // K x D
  int k = 0;
  int dim = 0;
  uint64_t seed = 0;
  int iterations_run = 0;
  double final_inertia = 0.0;
  std::vector<double> inertia_history;  // one entry per Lloyd iteration
  bool converged = false;               // assignments stopped changing
};

struct KMeansInit {
  // k-means++ when `centers` is empty, otherwise Lloyd starts from these rows.
  std::optional<FeatureMatrix> centers;
};

// Lloyd's algorithm over squared Euclidean distance.  Empty clusters are
// re-seeded at the point farthest from its assigned centroid so K stays
// constant.  Deterministic in (frames, K, seed, init); accumulation order is
// fixed so results are bit-stable across thread counts.
Codebook kmeans_fit(const FeatureMatrix& frames, int k, int max_iters, uint64_t seed,
                    const KMeansInit& init = {}, int threads = 1);

// id[i] = argmin_k ||frame_i - centroid_k||^2, ties to the smallest k.
std::vector<int> kmeans_assign(const Codebook& cb, const FeatureMatrix& frames,
                               int threads = 1);

void save_codebook(const Codebook& cb, const std::string& path);
Codebook load_codebook(const std::string& path);

}  // namespace modevo
