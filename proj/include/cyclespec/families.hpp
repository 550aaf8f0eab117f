#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyclespec/graph.hpp"

namespace cyclespec {

enum class Family {
  kHt,                     // ht t: the tightness graph H_t on 4t+4 vertices
  kComplete,               // complete n
  kCompleteBipartite,      // complete_bipartite a b
  kCompleteMultipartite,   // complete_multipartite p1 p2 ...
  kCycle,                  // cycle n (n >= 3)
  kPath,                   // path n (n vertices)
  kPetersen,               // petersen
};

struct FamilySpec {
  Family family{};
  std::vector<int> parameters;
};

std::string to_string(Family family);
/// Accepts the names above; throws GraphError otherwise.
Family parse_family(std::string_view name);

/// Canonically labelled member of a family. H_t labels v_j as j and u_j as
/// 2t+2+j. Throws GraphError on bad arity or range.
Graph generate(const FamilySpec& spec);

/// Disjoint union plus every edge between the two sides; h is relabelled
/// after g.
Graph join(const Graph& g, const Graph& h);

}  // namespace cyclespec
