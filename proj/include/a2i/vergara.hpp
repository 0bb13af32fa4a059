#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "a2i/immersion.hpp"

namespace a2i {

/// Ordered log of the choices made by construct_chi_immersion, in original vertex labels.
/// Feeding it back through replay_chi_immersion rebuilds the same certificate without any
/// search.
struct PipelineTrace {
  nlohmann::json steps = nlohmann::json::array();
};

struct CriticalReduction {
  InducedSubgraph reduced;
  VertexSet removed;  // in the input's labels
};

/// Deletes vertices whose removal keeps chi, scanning ascending and restarting after each
/// deletion, until the graph is vertex-critical. Requires alpha(g) <= 2.
CriticalReduction critical_reduction(const Graph& g);

/// Connected components of the complement, ordered by least vertex.
std::vector<VertexSet> join_decomposition(const Graph& g);

struct ChiImmersion {
  Immersion immersion;
  PipelineTrace trace;
  int chromatic_number = 0;
};

/// Strong, totally odd immersion of K_chi(g) for alpha(g) <= 2 whenever every complement
/// encountered maps into some Gamma_d with d <= d_max (default ceil((n+1)/3) of the input).
/// Throws AlphaTooLarge, or GammaTargetNotFound when the homomorphism search exhausts.
ChiImmersion construct_chi_immersion(const Graph& g, std::optional<int> d_max = {});

/// Rebuilds the certificate from a trace, validating every recorded choice.
Immersion replay_chi_immersion(const Graph& g, const PipelineTrace& trace);

}  // namespace a2i
