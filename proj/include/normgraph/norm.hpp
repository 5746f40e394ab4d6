#pragma once

#include <string>
#include <vector>

#include "normgraph/cycle_space.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/reduction.hpp"

namespace normgraph {

enum class BoundaryMode {
  kLoose,   // exactly two incident edges of multiplicity 1, other edges ignored
  kStrict,  // degree exactly 2 and both edges of multiplicity 1
};

/// Partition of V. Cut points take precedence over the boundary test;
/// `other` collects vertices that lie on no basis cycle.
struct VertexClassification {
  std::vector<Vertex> boundary;
  std::vector<Vertex> inside;
  std::vector<Vertex> cut_points;
  std::vector<Vertex> other;
};

VertexClassification classify_vertices(const Graph& g, const CycleBasis& basis,
                                       BoundaryMode mode = BoundaryMode::kLoose);

/// Clusters of basis cycles: two cycles are linked when they share an
/// inside vertex; clusters are the connected components of that relation.
struct IPartition {
  std::vector<std::vector<int>> clusters;  // ascending cycle indices, clusters by smallest index
  int count() const { return static_cast<int>(clusters.size()); }
};

IPartition i_partition(const Graph& g, const CycleBasis& basis, BoundaryMode mode = BoundaryMode::kLoose);

struct NormDiagnostics {
  bool norm = false;
  int i_count = 0;
  int rank = 0;
  VertexClassification vertices;
  IPartition partition;
};

struct NormOptions {
  BoundaryMode boundary = BoundaryMode::kLoose;
  ReductionMode reduction = ReductionMode::kRules;
  Vertex root = 0;
};

/// Norm predicate (|I| = 1) on an already reduced graph. Throws kNotReduced
/// if reducing g would still change it and kDisconnected if g is not connected.
NormDiagnostics is_norm(const Graph& g, const NormOptions& options = {});

/// Same as is_norm without the reduction re-check.
NormDiagnostics norm_diagnostics(const Graph& g, const NormOptions& options = {});

enum class PairClass { kVE, kV0, kWeak, kDisjoint };

std::string_view to_string(PairClass c);

struct PairInfo {
  PairClass cls = PairClass::kDisjoint;
  int shared_vertices = 0;
  int shared_edges = 0;
};

/// Throws kNotACycle unless both vectors are cycles of g.
PairInfo classify_pair(const Graph& g, const EdgeVector& a, const EdgeVector& b);

}  // namespace normgraph
