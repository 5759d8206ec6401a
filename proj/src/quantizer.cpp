// src/quantizer.cpp

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

#include "modevo/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "json.hpp"
#include "modevo/common.hpp"

namespace modevo {

using json = nlohmann::ordered_json;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr int kBlockRows = 8192;  // fixed block size keeps reductions thread-count invariant

// Assigns rows of `frames` to nearest centroid; fills ids and, when given,
// per-row squared distances.  Distances use x^2 - 2xc + c^2 in double.
void assign_block(const FeatureMatrix& frames, const MatrixXd& centroids,
                  const VectorXd& cnorm, int row0, int row1, std::vector<int>& ids,
                  std::vector<double>* dists) {
  int n = row1 - row0;
  MatrixXd x = frames.middleRows(row0, n).cast<double>();
  MatrixXd scores = x * centroids.transpose();  // n x K
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double best_v = cnorm(0) - 2.0 * scores(i, 0);
    for (int k = 1; k < centroids.rows(); ++k) {
      double v = cnorm(k) - 2.0 * scores(i, k);
      if (v < best_v) {
        best_v = v;
        best = k;
      }
    }
    ids[row0 + i] = best;
    if (dists) {
      double d = x.row(i).squaredNorm() + best_v;
      (*dists)[row0 + i] = d > 0.0 ? d : 0.0;
    }
  }
}

void assign_all(const FeatureMatrix& frames, const MatrixXd& centroids, int threads,
                std::vector<int>& ids, std::vector<double>* dists) {
  VectorXd cnorm = centroids.rowwise().squaredNorm();
  int n = static_cast<int>(frames.rows());
  ids.resize(n);
  if (dists) dists->resize(n);
  int blocks = (n + kBlockRows - 1) / kBlockRows;
  if (threads <= 1 || blocks <= 1) {
    for (int b = 0; b < blocks; ++b)
      assign_block(frames, centroids, cnorm, b * kBlockRows,
                   std::min(n, (b + 1) * kBlockRows), ids, dists);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next_block{0};
  for (int t = 0; t < std::min(threads, blocks); ++t)
    pool.emplace_back([&] {
      for (int b = next_block++; b < blocks; b = next_block++)
        assign_block(frames, centroids, cnorm, b * kBlockRows,
                     std::min(n, (b + 1) * kBlockRows), ids, dists);
    });
  for (auto& th : pool) th.join();
}

MatrixXd plusplus_seed(const FeatureMatrix& frames, int k, Rng& rng) {
  int n = static_cast<int>(frames.rows());
  int d = static_cast<int>(frames.cols());
  MatrixXd centroids(k, d);
  centroids.row(0) = frames.row(static_cast<int>(rng.index(n))).cast<double>();
  VectorXd mind(n);
  for (int i = 0; i < n; ++i)
    mind(i) = (frames.row(i).cast<double>() - centroids.row(0)).squaredNorm();
  for (int j = 1; j < k; ++j) {
    double total = mind.sum();
    if (total <= 0.0)
      throw ConfigError("kmeans_fit: fewer than K distinct frames");
    double u = rng.uniform() * total;
    int pick = n - 1;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += mind(i);
      if (acc >= u) {
        pick = i;
        break;
      }
    }
    centroids.row(j) = frames.row(pick).cast<double>();
    for (int i = 0; i < n; ++i) {
      double dist = (frames.row(i).cast<double>() - centroids.row(j)).squaredNorm();
      if (dist < mind(i)) mind(i) = dist;
    }
  }
  return centroids;
}

}  // namespace

Codebook kmeans_fit(const FeatureMatrix& frames, int k, int max_iters, uint64_t seed,
                    const KMeansInit& init, int threads) {
  int n = static_cast<int>(frames.rows());
  int d = static_cast<int>(frames.cols());
  if (k < 1) throw ConfigError("kmeans_fit: K must be >= 1");
  if (max_iters < 1) throw ConfigError("kmeans_fit: max_iters must be >= 1");
  if (n < k) throw ConfigError("kmeans_fit: fewer frames than clusters");
  if (!frames.allFinite()) throw ConfigError("kmeans_fit: non-finite input");

  Rng rng(seed);
  MatrixXd centroids;
  if (init.centers.has_value()) {
    if (init.centers->rows() != k || init.centers->cols() != d)
      throw ConfigError("kmeans_fit: init centers shape mismatch");
    centroids = init.centers->cast<double>();
  } else {
    centroids = plusplus_seed(frames, k, rng);
  }

  Codebook cb;
  cb.k = k;
  cb.dim = d;
  cb.seed = seed;

  std::vector<int> ids, prev_ids;
  std::vector<double> dists;
  for (int iter = 0; iter < max_iters; ++iter) {
    assign_all(frames, centroids, threads, ids, &dists);
    double inertia = 0.0;
    for (double v : dists) inertia += v;
    cb.inertia_history.push_back(inertia);
    cb.iterations_run = iter + 1;
    if (iter > 0 && ids == prev_ids) {
      cb.converged = true;
      break;
    }
    prev_ids = ids;

    MatrixXd sums = MatrixXd::Zero(k, d);
    std::vector<int64_t> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      sums.row(ids[i]) += frames.row(i).cast<double>();
      counts[ids[i]]++;
    }
    for (int j = 0; j < k; ++j) {
      if (counts[j] > 0) {
        centroids.row(j) = sums.row(j) / static_cast<double>(counts[j]);
      } else {
        // Re-seed at the point farthest from its centroid; keeps K constant.
        int far = 0;
        for (int i = 1; i < n; ++i)
          if (dists[i] > dists[far]) far = i;
        centroids.row(j) = frames.row(far).cast<double>();
        dists[far] = -1.0;  // not eligible for the next empty cluster
      }
    }
  }

  cb.final_inertia = cb.inertia_history.back();
  cb.centroids = centroids.cast<float>();
  return cb;
}

std::vector<int> kmeans_assign(const Codebook& cb, const FeatureMatrix& frames, int threads) {
  if (frames.cols() != cb.dim)
    throw StageError("kmeans_assign: frame dimension " + std::to_string(frames.cols()) +
                     " != codebook dimension " + std::to_string(cb.dim));
  std::vector<int> ids;
  assign_all(frames, cb.centroids.cast<double>(), threads, ids, nullptr);
  return ids;
}

void save_codebook(const Codebook& cb, const std::string& path) {
  json j;
  j["k"] = cb.k;
  j["d"] = cb.dim;
  j["seed"] = cb.seed;
  j["iterations_run"] = cb.iterations_run;
  j["final_inertia"] = cb.final_inertia;
  j["converged"] = cb.converged;
  j["inertia_history"] = cb.inertia_history;
  json rows = json::array();
  for (int r = 0; r < cb.centroids.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < cb.centroids.cols(); ++c) row.push_back(cb.centroids(r, c));
    rows.push_back(std::move(row));
  }
  j["centroids"] = std::move(rows);
  write_text_file(path, j.dump() + "\n");
}

Codebook load_codebook(const std::string& path) {
  json j = json::parse(read_text_file(path));
  Codebook cb;
  cb.k = j["k"].get<int>();
  cb.dim = j["d"].get<int>();
  cb.seed = j["seed"].get<uint64_t>();
  cb.iterations_run = j["iterations_run"].get<int>();
  cb.final_inertia = j["final_inertia"].get<double>();
  cb.converged = j["converged"].get<bool>();
  cb.inertia_history = j["inertia_history"].get<std::vector<double>>();
  cb.centroids.resize(cb.k, cb.dim);
  for (int r = 0; r < cb.k; ++r)
    for (int c = 0; c < cb.dim; ++c) cb.centroids(r, c) = j["centroids"][r][c].get<float>();
  return cb;
}

}  // namespace modevo
