#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace toc {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId dest;
  double weight;
};

/// Assignment of every node to exactly one community. Labels are always
/// contiguous 0..C-1.
class Partition {
 public:
  Partition() = default;

  /// Every node in its own community.
  static Partition singletons(std::size_t node_count);

  /// All nodes in one community (zero communities for an empty node set).
  static Partition single_community(std::size_t node_count);

  /// Builds a partition from arbitrary labels, renumbering them to
  /// contiguous 0..C-1 in order of first occurrence.
  static Partition from_labels(std::vector<std::uint32_t> labels);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t community_count() const { return community_count_; }

  /// @throw std::out_of_range on an invalid node.
  std::uint32_t community_of(NodeId node) const;

  std::span<const std::uint32_t> labels() const { return labels_; }

  /// Member lists per community, indexed by community label.
  std::vector<std::vector<NodeId>> communities() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::uint32_t community_count_ = 0;
};

/// Immutable undirected graph with strictly positive edge weights.
///
/// Nodes are dense indices 0..n-1; a side map keeps the external id each
/// index stands for. Self-loop weight is stored separately from the
/// adjacency: a self-loop of stored weight w contributes w to the total
/// weight and 2w to the node's weighted degree.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t node_count() const { return adjacency_.size(); }

  /// Number of distinct undirected edges, self-loops excluded.
  std::size_t edge_count() const { return edge_count_; }

  /// Sum of all edge weights, each undirected edge and each self-loop
  /// counted once. Equals half the sum of all weighted degrees.
  double total_weight() const { return total_weight_; }

  /// Sum of incident edge weights; the self-loop weight counts twice.
  /// @throw std::out_of_range
  double weighted_degree(NodeId node) const;

  /// Stored self-loop weight (0 when absent).
  /// @throw std::out_of_range
  double self_loop(NodeId node) const;

  /// Neighbors sorted by destination index. Never contains `node` itself.
  /// @throw std::out_of_range
  std::span<const Neighbor> neighbors(NodeId node) const;

  /// External id the node was built from (user id, or community index for
  /// aggregated graphs).
  /// @throw std::out_of_range
  const std::string& external_id(NodeId node) const;

  const std::vector<std::string>& external_ids() const { return external_ids_; }

  /// Collapses every community to a single node. Inter-community edges
  /// merge by weight addition; internal edges and member self-loops merge
  /// into the community node's self-loop. Total weight is preserved.
  /// @throw std::invalid_argument when the partition does not cover the graph.
  WeightedGraph aggregate(const Partition& partition) const;

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> self_loop_;
  std::vector<double> degree_;
  std::vector<std::string> external_ids_;
  double total_weight_ = 0.0;
  std::size_t edge_count_ = 0;
};

/// Single-use, single-threaded accumulator producing a WeightedGraph.
/// Parallel edges merge by weight addition; add_edge(u, u, w) accumulates
/// the self-loop weight.
class GraphBuilder {
 public:
  /// Nodes get their decimal index as external id.
  explicit GraphBuilder(std::size_t node_count);

  /// One node per external id, in the given order.
  explicit GraphBuilder(std::vector<std::string> external_ids);

  /// @throw std::invalid_argument on non-positive weight.
  /// @throw std::out_of_range on an invalid node.
  void add_edge(NodeId u, NodeId v, double weight);

  std::size_t node_count() const { return accum_.size(); }

  /// Freezes the graph: adjacency sorted by destination, degrees and total
  /// weight cached. The builder is empty afterwards.
  WeightedGraph build();

 private:
  std::vector<std::unordered_map<NodeId, double>> accum_;
  std::vector<double> self_loop_;
  std::vector<std::string> external_ids_;
};

}  // namespace toc
