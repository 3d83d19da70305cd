// Copyright 2026 The mdcl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace mdcl::ad {

/// Dense 2-D double matrix with a same-shape gradient accumulator.
///
/// Values are row-major. A Tensor on its own is a plain value; it becomes
/// part of a differentiation graph only while bound as a leaf of a Graph.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), v_(rows * cols, 0.0), g_(rows * cols, 0.0) {}

  static Tensor zeros(std::size_t rows, std::size_t cols) { return Tensor(rows, cols); }
  static Tensor from_rows(const std::vector<std::vector<double>>& rows);
  static Tensor identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return v_.size(); }
  bool is_scalar() const { return rows_ == 1 && cols_ == 1; }

  double& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
  double& grad_at(std::size_t i, std::size_t j) { return g_[i * cols_ + j]; }
  double grad_at(std::size_t i, std::size_t j) const { return g_[i * cols_ + j]; }

  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& grad() { return g_; }
  const std::vector<double>& grad() const { return g_; }

  void zero_grad() { std::fill(g_.begin(), g_.end(), 0.0); }
  void fill(double value) { std::fill(v_.begin(), v_.end(), value); }

  std::string shape_str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> v_, g_;
};

/// Reverse-mode tape over Tensors, rebuilt for every forward pass.
///
/// Operations append nodes in application order, which is by construction a
/// topological order; backward() walks it in exact reverse. Leaves bound via
/// leaf() accumulate gradients into the caller's Tensor, everything else
/// owns its storage inside the graph.
class Graph {
 public:
  struct Node {
    std::size_t id = static_cast<std::size_t>(-1);
    bool valid() const { return id != static_cast<std::size_t>(-1); }
  };

  explicit Graph(std::uint64_t seed = 0) : seed_(seed) {}
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  std::uint64_t seed() const { return seed_; }
  std::size_t num_nodes() const { return nodes_.size(); }

  /// Binds an external Tensor as a graph leaf. Binding the same Tensor twice
  /// returns the same node. The Tensor must outlive the graph.
  Node leaf(Tensor& t);

  /// Leaf owned by the graph (no external gradient sink).
  Node input(Tensor value);

  /// out[i,j] = sum_k x[i,k] * w[k,j] + b[0,j]
  Node affine(Node x, Node w, Node b);

  /// Elementwise logistic function.
  Node sigmoid(Node x);

  /// Row-wise softmax, computed with max-shift stabilization.
  Node softmax_rows(Node x);

  /// Each row divided by max(||row||_2, 1e-12).
  Node l2_normalize_rows(Node x);

  /// Column-wise concatenation of two equal-row-count operands.
  Node concat_cols(Node a, Node b);

  /// out[i,j] = sum_k a[i,k] * b[j,k]  (a * b^T, pairwise row dots when a==b)
  Node matmul_nt(Node a, Node b);

  /// out = c * x, elementwise for constant c.
  Node scale(Node x, double c);

  /// Elementwise sum of two same-shape nodes.
  Node add(Node a, Node b);

  /// n x 1 column of row-wise log-sum-exp. With exclude_diagonal the input
  /// must be square with at least two columns and entry (i,i) is left out of
  /// row i's sum.
  Node lse_rows(Node x, bool exclude_diagonal = false);

  /// Scalar sum of weights * x, weights a constant of the same shape.
  Node weighted_sum(Node x, Tensor weights);

  /// Scalar sum of all entries.
  Node sum(Node x);

  /// Scalar mean over rows of sum_a p[i,a] * log p[i,a], p = softmax(row).
  /// (Negative entropy of the row-wise softmax distribution.)
  Node softmax_neg_entropy(Node logits);

  /// Copies x's values into a fresh leaf with no parents; gradients stop.
  Node detach(Node x);

  /// Value (and, after backward, gradient) stored at a node.
  const Tensor& result(Node n) const;

  /// Scalar convenience accessor; contract error if the node is not 1x1.
  double scalar(Node n) const;

  /// Accumulates d loss / d tensor into every reachable tensor's grad.
  /// All grads in the graph (external leaves included) are zeroed first.
  void backward(Node scalar_loss);

 private:
  struct NodeData {
    Tensor own;
    Tensor* ext = nullptr;
    std::vector<std::size_t> parents;
    std::function<void(Graph&)> backward_fn;
  };

  Tensor& tensor(std::size_t id) { return nodes_[id].ext ? *nodes_[id].ext : nodes_[id].own; }
  const Tensor& tensor(std::size_t id) const {
    return nodes_[id].ext ? *nodes_[id].ext : nodes_[id].own;
  }
  Node push(NodeData data);
  void check_valid(Node n, const char* op) const;

  std::uint64_t seed_;
  std::vector<NodeData> nodes_;
  std::unordered_map<const Tensor*, std::size_t> leaf_ids_;
};

/// Builds a scalar loss node from the leaf handle of the tensor under test.
using ScalarGraphFn = std::function<Graph::Node(Graph&, Graph::Node)>;

/// Central-difference gradient check of f at x. Returns the maximum relative
/// error over coordinates, with denominator max(|analytic|, |numeric|, 1e-8).
/// The graph is rebuilt from scratch for every perturbed evaluation.
double finite_diff_check(const ScalarGraphFn& f, Tensor& x, double step = 1e-5);

}  // namespace mdcl::ad
